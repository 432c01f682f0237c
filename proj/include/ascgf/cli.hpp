#pragma once

#include <ostream>

namespace ascgf {

/// Exit status: 0 success, 1 usage or input error, 2 failed verification.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ascgf
