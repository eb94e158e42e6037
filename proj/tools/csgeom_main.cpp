// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/cli.hpp"

int main(int argc, char** argv) { return csgeom::cli::run_main(argc, argv); }
