#pragma once

#include <cstddef>
#include <functional>

namespace riesz {

/// Number of workers used when a caller passes workers == 0.
int default_workers();
void set_default_workers(int n);

/// Runs f(chunk_index) for chunk_index in [0, n_chunks) on up to `workers`
/// threads (0 = default). Chunks are fixed units of work independent of the
/// worker count; callers that reduce must do so by chunk index afterwards,
/// which keeps every result bitwise identical for any worker count.
void parallel_chunks(std::size_t n_chunks, int workers, const std::function<void(std::size_t)>& f);

}  // namespace riesz
