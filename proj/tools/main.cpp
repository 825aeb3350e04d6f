// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#include "cli.hpp"

int main(int argc, char** argv) { return tfq::cli::run(argc, argv); }
