// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csgeom {
namespace cli {

/// Runs one command line. Exit code contract (designed for CI gating):
/// 0 every check passed / all seven numbers equal, 1 a check failed or the
/// seven numbers disagree, 2 usage or input error.
/// Streams are injectable so the front end is testable in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// main() adapter: argv[0] is skipped.
int run_main(int argc, const char* const* argv);

}  // namespace cli
}  // namespace csgeom
