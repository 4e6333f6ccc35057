#pragma once

#include <iosfwd>
#include <string>

#include "ranklab/matrix.hpp"

namespace ranklab {

// Matrix text format, fixed byte-for-byte:
//   line 1:        "m n p"  (ASCII decimal, single spaces, LF)
//   lines 2..m+1:  n space-separated entries in [0, p), LF-terminated,
//                  no trailing whitespace.
// The parser rejects anything else with a line/column diagnostic.
Mat read_matrix(std::istream& in);
Mat read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, ConstMatView a);
void write_matrix_file(const std::string& path, ConstMatView a);

} // namespace ranklab
