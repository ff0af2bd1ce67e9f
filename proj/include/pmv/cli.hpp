#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmv::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerdictFalse = 1;
inline constexpr int kInputError = 2;
inline constexpr int kBudgetError = 3;

/// Runs one verb. args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace pmv::cli
