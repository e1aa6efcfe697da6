// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_PARALLEL_HPP
#define MONOLIE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace monolie {

/// Worker cap: MONOLIE_THREADS when set (>= 1), else hardware concurrency.
int max_threads();

/// Runs fn(chunk_index, begin, end) over fixed-size chunks of [0, total).
/// Chunk boundaries depend only on total and chunk_size, so per-chunk
/// results combined in chunk order are identical for every thread count.
/// fn must only write to state owned by its chunk index.
void run_chunks(std::size_t total, std::size_t chunk_size,
                const std::function<void(std::size_t, std::size_t,
                                         std::size_t)>& fn);

}  // namespace monolie

#endif  // MONOLIE_PARALLEL_HPP
