#pragma once

#include <iosfwd>

namespace nonschur::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nonschur::cli
