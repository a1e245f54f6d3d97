#include "zq/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace zq {

unsigned worker_count() {
    if (const char* env = std::getenv("ZQ_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (...) {
            // fall through to the hardware default
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
    if (n == 0) return;
    const unsigned workers = worker_count();
    if (workers <= 1 || n < 1024) {
        fn(0, n);
        return;
    }
    const std::uint64_t chunks = std::min<std::uint64_t>(workers, n);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = n * c / chunks;
        const std::uint64_t end = n * (c + 1) / chunks;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

} // namespace zq
