#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gq {

// Full command-line surface; returns the process exit code (0 pass,
// 1 property failure, 2 usage/parse error). "-" as a document argument
// reads from `in`.
int dispatch(std::vector<std::string> args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace gq
