#pragma once

#include <string>
#include <vector>

namespace bdvd::cli {

// Exit codes: 0 success, 1 verification failure, 2 refusal (size caps),
// 3 parse or input error.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace bdvd::cli
