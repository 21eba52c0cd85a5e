#include "a4cb/tables.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace a4cb {
namespace {

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string tok;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(tok);
      tok.clear();
    } else {
      tok.push_back(ch);
    }
  }
  out.push_back(tok);
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  return s;
}

std::vector<std::string> form_list(const std::string& side) {
  std::vector<std::string> out;
  std::string t = trim(side);
  if (t == "-" || t.empty()) return out;
  for (auto& tok : split(t, ',')) out.push_back(trim(tok));
  return out;
}

}  // namespace

LinForm alpha_form(char letter) {
  LinForm f(10, 0);
  auto diff = [&](int x, int y) {
    f[x] += 1;
    f[y] -= 1;
  };
  switch (letter) {
    case 'A': diff(0, 4); break;  // a - e
    case 'B': diff(2, 6); break;  // c - g
    case 'C': diff(5, 9); break;  // f - j
    case 'D': diff(3, 7); break;  // d - h
    case 'E': diff(1, 5); break;  // b - f
    case 'F': diff(5, 9); break;  // = C
    case 'G': diff(2, 6); break;  // = B
    case 'H': diff(4, 8); break;  // e - i
    case 'I': break;              // zero form
    case 'J': diff(5, 9); break;  // = C
    default: throw error(std::string("unknown form letter ") + letter);
  }
  return f;
}

LinForm parse_form_name(const std::string& name) {
  LinForm f(10, 0);
  for (size_t t = 0; t < name.size(); ++t) {
    char ch = name[t];
    A4CB_CHECK(ch >= 'A' && ch <= 'J', "bad form name: " + name);
    int mult = 1;
    if (t + 1 < name.size() && name[t + 1] >= '2' && name[t + 1] <= '9') {
      mult = name[t + 1] - '0';
      ++t;
    }
    auto a = alpha_form(ch);
    for (int m = 0; m < 10; ++m) f[m] += mult * a[m];
  }
  return f;
}

std::vector<LinForm> SignedSystem::inward() const {
  std::vector<LinForm> out;
  for (auto& name : le) out.push_back(neg(parse_form_name(name)));
  for (auto& name : ge) out.push_back(parse_form_name(name));
  return out;
}

std::vector<Table3Row> parse_table3(const std::string& text) {
  std::vector<Table3Row> out;
  for (auto& line : data_lines(text)) {
    auto bar = line.find('|');
    auto dbar = line.find("||");
    A4CB_CHECK(bar != std::string::npos && dbar != std::string::npos, "bad table3 row: " + line);
    Table3Row row;
    row.number = std::stoi(trim(line.substr(0, bar)));
    row.system.le = form_list(line.substr(bar + 1, dbar - bar - 1));
    row.system.ge = form_list(line.substr(dbar + 2));
    out.push_back(std::move(row));
  }
  A4CB_CHECK(out.size() == 144, "table3 must have 144 rows");
  return out;
}

std::vector<Table5Row> parse_table5(const std::string& text) {
  std::vector<Table5Row> out;
  for (auto& line : data_lines(text)) {
    auto parts = split(line, '|');
    // n | le || ge | coord  ->  5 fields, field 2 empty
    A4CB_CHECK(parts.size() == 5 && trim(parts[2]).empty(), "bad table5 row: " + line);
    Table5Row row;
    row.number = std::stoi(trim(parts[0]));
    row.main.le = form_list(parts[1]);
    row.main.ge = form_list(parts[3]);
    row.coord = trim(parts[4]);
    out.push_back(std::move(row));
  }
  A4CB_CHECK(out.size() == 62, "table5 must have 62 rows");
  return out;
}

std::vector<std::pair<std::string, IntVec>> parse_table6(const std::string& text) {
  std::vector<std::pair<std::string, IntVec>> out;
  for (auto& line : data_lines(text)) {
    if (line.rfind("label,", 0) == 0) continue;
    auto comma = line.find(',');
    std::string label = line.substr(0, comma);
    std::string vec = line.substr(comma + 1);
    std::erase(vec, '"');
    out.emplace_back(label, parse_vector(vec));
  }
  A4CB_CHECK(out.size() == 26, "table6 must have 26 rows");
  return out;
}

Table7 parse_table7(const std::string& text) {
  Table7 t;
  for (auto& line : data_lines(text)) {
    std::istringstream in(line);
    std::string first;
    in >> first;
    if (first == "columns") {
      std::string col;
      while (in >> col) t.columns.push_back(col);
      continue;
    }
    std::string marks;
    in >> marks;
    A4CB_CHECK(marks.size() == t.columns.size(), "bad table7 row: " + line);
    t.rows.emplace_back(first, marks);
  }
  A4CB_CHECK(t.columns.size() == 26 && t.rows.size() == 32, "table7 shape");
  return t;
}

std::vector<std::pair<int, Word>> parse_table8(const std::string& text) {
  std::vector<std::pair<int, Word>> out;
  for (auto& line : data_lines(text)) {
    if (line.rfind("region,", 0) == 0) continue;
    auto comma = line.find(',');
    out.emplace_back(std::stoi(line.substr(0, comma)), parse_word(line.substr(comma + 1)));
  }
  A4CB_CHECK(out.size() == 62, "table8 must have 62 rows");
  return out;
}

std::vector<Word> parse_table1(const std::string& text) {
  std::vector<Word> out;
  for (auto& line : data_lines(text)) out.push_back(parse_word(line));
  A4CB_CHECK(out.size() == 26, "table1 must have 26 rows");
  return out;
}

std::string print_table3(const std::vector<Table3Row>& rows) {
  std::ostringstream os;
  os << "# table3: irredundant inequality systems of the 144 regions of linearity (A4)\n";
  os << "# format: <region> | <forms <= 0> || <forms >= 0>; forms over letters A,B,C,D,E,H, digit = coefficient\n";
  auto side = [](const std::vector<std::string>& v) {
    if (v.empty()) return std::string("-");
    std::string s;
    for (size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + v[t];
    return s;
  };
  for (auto& r : rows)
    os << r.number << " | " << side(r.system.le) << " || " << side(r.system.ge) << "\n";
  return os.str();
}

std::string print_table5(const std::vector<Table5Row>& rows) {
  std::ostringstream os;
  os << "# table5: walls of the 62 simplicial regions\n";
  os << "# format: <region> | <main walls <= 0> || <main walls >= 0> | <coordinate walls>\n";
  auto side = [](const std::vector<std::string>& v) {
    std::string s;
    for (size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + v[t];
    return s;
  };
  for (auto& r : rows)
    os << r.number << " | " << side(r.main.le) << " || " << side(r.main.ge) << " | "
       << r.coord << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  A4CB_CHECK(in.good(), "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string table_dir_default() {
  if (const char* env = std::getenv("A4CB_TABLES")) return env;
#ifdef A4CB_TABLE_DIR
  return A4CB_TABLE_DIR;
#else
  return "tables";
#endif
}

}  // namespace a4cb
