#pragma once

#include <cstddef>
#include <vector>

namespace cgmcr::testing {

struct MalformedInput {
  const char* source;
  std::size_t line;
  std::size_t column;
  const char* code;
};

// Each source fails at exactly one known position.
inline const std::vector<MalformedInput>& malformed_inputs() {
  static const std::vector<MalformedInput> inputs = {
      {"dm M\ndm U\nstate s1\nstate s2\nmove M s1 -> s1\n", 5, 14, "LOOP_ARC"},
      {"dm A\ndm A\n", 2, 4, "DUPLICATE_DM"},
      {"dm A\nstate s1\nstate s1\n", 3, 7, "DUPLICATE_STATE"},
      {"dm A\nstate s1\nstate s2\nmove B s1 -> s2\n", 4, 6, "UNKNOWN_OWNER"},
      {"dm A\nstate s1\nmove A s1 -> s7\n", 3, 14, "UNKNOWN_STATE"},
      {"dm A\nstate s1\nstate s2\nmove A s1 s2\n", 4, 14, "SYNTAX"},
      {"dm A\nstate s1\nstate s2\nmove A s1 => s2\n", 4, 11, "SYNTAX"},
      {"# header\n\ndm A\nconflict \"late\"\n", 4, 1, "MISPLACED_HEADER"},
      {"conflict \"open\n", 1, 10, "BAD_STRING"},
      {"conflict name\n", 1, 10, "SYNTAX"},
      {"dm A\nstates s1\n", 2, 1, "UNKNOWN_KEYWORD"},
      {"dm A-1\n", 1, 4, "BAD_IDENTIFIER"},
      {"dm env\n", 1, 4, "RESERVED_DM"},
      {"env\ndm A\nenv\n", 3, 1, "DUPLICATE_ENV"},
      {"dm A\nstate s1\nstate s2\nmove env s1 -> s2\n", 4, 6, "UNKNOWN_OWNER"},
      {"dm A\nstate s1\nstate s2\nmove A s1 -> s2\nmove A s1 -> s2\n", 5, 6, "DUPLICATE_MOVE"},
      {"dm A\nstate s1\nstate s2\nprefer B: s1 > s2\n", 4, 8, "UNKNOWN_DM"},
      {"dm A\nstate s1\nstate s2\nprefer A s1 > s2\n", 4, 8, "SYNTAX"},
      {"dm A\nstate s1\nstate s2\nprefer A: s1 > s1\n", 4, 16, "PREF_DUPLICATE_STATE"},
      {"dm A\nstate s1\nstate s2\nprefer A: s1 < s2\n", 4, 14, "SYNTAX"},
      {"dm A\nstate s1\nstate s2\nprefer A: s1 > s2\nprefer A: s2 > s1\n", 5, 8, "DUPLICATE_PREFER"},
      {"dm A\nstate s1\nstate s2\nprefer A: s1 > s2 >\n", 4, 19, "SYNTAX"},
  };
  return inputs;
}

}  // namespace cgmcr::testing
