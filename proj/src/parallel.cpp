#include "ssg2/parallel.hpp"

#include <exception>
#include <thread>
#include <vector>

namespace ssg2 {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_chunks(uint64_t n, unsigned threads,
                     const std::function<void(unsigned, uint64_t, uint64_t)>& body) {
    if (n == 0) return;
    unsigned workers = resolve_threads(threads);
    if ((uint64_t)workers > n) workers = static_cast<unsigned>(n);
    if (workers == 1) {
        body(0, 0, n);
        return;
    }

    uint64_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t begin = w * chunk;
        uint64_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ssg2
