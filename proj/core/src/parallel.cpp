#include "farswarm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace farswarm {

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("FARSWARM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

void parallel_for(int n, int workers, const std::function<void(int, int)>& fn) {
    if (n <= 0) return;
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        fn(0, n);
        return;
    }
    const int chunk = std::max(256, (n + workers - 1) / workers);
    std::atomic<int> next{0};
    auto drain = [&] {
        for (;;) {
            const int begin = next.fetch_add(chunk);
            if (begin >= n) break;
            fn(begin, std::min(begin + chunk, n));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
}

}  // namespace farswarm
