#pragma once

#include <iosfwd>

namespace denumerant {

/// Exit codes: 0 success, 1 bad input, 2 verification mismatch.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace denumerant
