// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <string>

#include "tfq/grid.hpp"

namespace tfq {

// Writes data to path through a temporary file and a rename.
void atomic_write(const std::string& path, const std::string& data);
std::string read_file(const std::string& path);

// Signal CSV "index,re,im" with the grid in the sidecar <path>.json.
void write_signal(const std::string& path, const SampledSignal& f);
SampledSignal read_signal(const std::string& path);

// Matrix: little-endian float64 re/im pairs, row-major, header in <path>.json.
void write_matrix(const std::string& path, const TFMatrix& m);
TFMatrix read_matrix(const std::string& path);

std::string sidecar_path(const std::string& path);

}  // namespace tfq
