#ifndef A4CB_COMMON_HPP
#define A4CB_COMMON_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace a4cb {

// A word in the generators s_1..s_n, stored as its letter sequence.
using Word = std::vector<int>;

using IntVec = std::vector<long long>;
using IntMat = std::vector<std::vector<long long>>;

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

#define A4CB_CHECK(cond, msg)                                 \
  do {                                                        \
    if (!(cond)) throw ::a4cb::error(std::string("check failed: ") + (msg)); \
  } while (0)

inline std::string word_str(const Word& w) {
  std::ostringstream os;
  for (size_t t = 0; t < w.size(); ++t) {
    if (t) os << ',';
    os << w[t];
  }
  return os.str();
}

// Accepts "1,3,2" as well as "1 3 2".
inline Word parse_word(const std::string& s) {
  Word w;
  int cur = -1;
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
    } else if (ch == ',' || ch == ' ' || ch == '\t') {
      if (cur >= 0) w.push_back(cur);
      cur = -1;
    } else {
      throw error("bad character in word: " + s);
    }
  }
  if (cur >= 0) w.push_back(cur);
  return w;
}

inline IntVec parse_vector(const std::string& s) {
  IntVec v;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) {
      v.push_back(std::stoll(tok));
      tok.clear();
    }
  };
  for (char ch : s) {
    if (ch == ',' || ch == ' ' || ch == '\t')
      flush();
    else
      tok.push_back(ch);
  }
  flush();
  return v;
}

inline std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  for (size_t t = 0; t < v.size(); ++t) {
    if (t) os << ',';
    os << v[t];
  }
  return os.str();
}

}  // namespace a4cb

#endif
