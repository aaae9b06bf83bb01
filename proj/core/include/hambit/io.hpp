#pragma once

#include <iosfwd>
#include <string>

#include "hambit/checkers.hpp"

namespace hambit::io {

// Text format for codes and signed pairs:
//
//   # optional comments
//   n 6
//   q 4
//   + 000000
//   - 000111
//
// Words are n contiguous digits for q <= 10 and comma-separated decimal
// digits for q > 10.  Canonical output is sorted within each sign block,
// '+' block first, LF line endings.  A code file is simply a pair file with
// an empty '-' block.

struct BitradeDoc {
    Params params;
    SignedPair pair;
};

BitradeDoc parse_bitrade(std::istream& in);
BitradeDoc parse_bitrade_file(const std::string& path);

std::string serialize_bitrade(const Params& p, const SignedPair& pair);
std::string serialize_code(const Params& p, const VertexSet& code);

void write_file(const std::string& path, const std::string& content);

// "key: value" report: parameters, component sizes, one status line per
// verdict with counterexample details, the agreement flag when the full
// checker battery ran, and an overall line.
std::string render_report(const Params& p, const SignedPair& pair,
                          const std::vector<Verdict>& verdicts,
                          std::optional<bool> agreement);

const char* status_name(Status s);

}  // namespace hambit::io
