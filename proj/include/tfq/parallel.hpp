// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The tfq Authors

#pragma once

#include <cstddef>
#include <functional>

namespace tfq {

// Worker count: hardware concurrency, capped by TFQ_THREADS when set.
unsigned thread_count();

// Runs body(i) for i in [0, n) over contiguous blocks. Each index is handled
// by exactly one worker, so results written per index are schedule independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tfq
