#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rlab {

// RILEY_LAB_WORKERS when set, else hardware concurrency
inline unsigned default_workers() {
    if (const char* e = std::getenv("RILEY_LAB_WORKERS")) {
        long v = std::strtol(e, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

inline unsigned resolve_workers(unsigned w) { return w ? w : default_workers(); }

// f(i) for i in [0, count); each index runs exactly once
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& f) {
    unsigned n = resolve_workers(workers);
    if (n > count) n = static_cast<unsigned>(count);
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto body = [&] {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) f(i);
        } catch (...) {
            std::lock_guard lk(mu);
            if (!err) err = std::current_exception();
            next = count;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace rlab
