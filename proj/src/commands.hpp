#pragma once

#include <ostream>

namespace weylscope {

// Exit codes: 0 success, 2 invalid input or failed check, 3 enumeration cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylscope
