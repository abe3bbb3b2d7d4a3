#pragma once

#include <iosfwd>

namespace k2forge {

/// `k2forge <gen|verify|catalog|plot> [flags]`. Exit codes: 0 success,
/// 1 usage or I/O error, 2 precondition error, 3 verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k2forge
