#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace htarea::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 2;
inline constexpr int exit_io = 3;

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace htarea::cli
