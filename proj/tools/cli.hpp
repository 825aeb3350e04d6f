// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfq::cli {

inline constexpr const char* schema_version = "1.0";

// Exit codes: 0 success, 2 usage or invalid input, 3 I/O, 4 accuracy.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace tfq::cli
