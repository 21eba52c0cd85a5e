#ifndef A4CB_TABLES_HPP
#define A4CB_TABLES_HPP

#include <map>

#include "a4cb/linform.hpp"

namespace a4cb {

// Embedded transcriptions of the reference tables.  The same text is
// committed under tables/; the verify pipeline checks that the files on
// disk still match these constants byte for byte.
extern const char* const kTable1;
extern const char* const kTable3;
extern const char* const kTable5;
extern const char* const kTable6;
extern const char* const kTable7;
extern const char* const kTable8;

// The alpha forms attached to the long braid letters A..J, as integer
// linear forms on the coordinates (a,...,j) of R^10.
LinForm alpha_form(char letter);

// "AB2CDEH" -> alpha_A + 2 alpha_B + alpha_C + alpha_D + alpha_E + alpha_H.
LinForm parse_form_name(const std::string& name);

// One inequality system: forms on the "<= 0" side and on the ">= 0" side.
struct SignedSystem {
  std::vector<std::string> le, ge;

  // All constraints as inward forms f with f.v >= 0.
  std::vector<LinForm> inward() const;
};

struct Table3Row {
  int number = 0;
  SignedSystem system;
};

struct Table5Row {
  int number = 0;
  SignedSystem main;
  std::string coord;  // e.g. "abgh"
};

std::vector<Table3Row> parse_table3(const std::string& text);
std::vector<Table5Row> parse_table5(const std::string& text);
// label ("LLL", "-R-", "1".."4") -> 10-entry 0/1 vector
std::vector<std::pair<std::string, IntVec>> parse_table6(const std::string& text);

struct Table7 {
  std::vector<std::string> columns;             // 26 vector labels
  std::vector<std::pair<std::string, std::string>> rows;  // wall name, x/. marks
};
Table7 parse_table7(const std::string& text);

std::vector<std::pair<int, Word>> parse_table8(const std::string& text);
std::vector<Word> parse_table1(const std::string& text);

// Round-trip serializers; verify checks parse+print == stored text.
std::string print_table3(const std::vector<Table3Row>&);
std::string print_table5(const std::vector<Table5Row>&);

// File loading for the on-disk fixtures.
std::string read_file(const std::string& path);
std::string table_dir_default();

}  // namespace a4cb

#endif
