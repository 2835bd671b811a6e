#pragma once

#include <iosfwd>

namespace zoneroute::cli {

/// Exit codes: 0 ok, 1 I/O failure, 2 input or compile error,
/// 3 verification failure.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

} // namespace zoneroute::cli
