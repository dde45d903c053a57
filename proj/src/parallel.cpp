#include "rsalg/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace rsalg {

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RSALG_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            n = std::min<std::size_t>(n, v);
    }
    return n;
}

void run_chunked(std::size_t n,
                 const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        body(0, 0, n);
        return;
    }
    std::size_t per = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (std::size_t c = 0; c * per < n; ++c) {
        std::size_t b = c * per, e = std::min(n, b + per);
        pool.emplace_back([&body, c, b, e] { body(c, b, e); });
    }
    for (auto& t : pool) t.join();
}

} // namespace rsalg
