#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace odlab {

// Exit codes: 0 ok, 1 a check or verification failed, 2 usage or input error,
// 3 only guard or budget outcomes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace odlab
