// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace cellfree::tools {

/// Entry point of the `cellfree` executable. Exit codes: 0 success, 1 a
/// validation tolerance was breached, 2 bad input or I/O failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cellfree::tools
