#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace rsalg {

// worker cap: min(hardware, RSALG_THREADS when set); at least 1
std::size_t worker_count();

// split [0,n) into contiguous chunks, run body(chunk_index, begin, end)
// on a worker each, join all. body must only touch its own chunk's state
// so results merge deterministically by chunk index.
void run_chunked(std::size_t n,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

} // namespace rsalg
