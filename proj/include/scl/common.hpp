#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace scl {

struct Error : std::runtime_error {
    Error(std::string kind_, const std::string& what_)
        : std::runtime_error(kind_ + ": " + what_), kind(std::move(kind_)) {}
    std::string kind;
};

#define SCL_DEFINE_ERROR(NAME)                                   \
    struct NAME : ::scl::Error {                                 \
        explicit NAME(const std::string& w) : Error(#NAME, w) {} \
    }

SCL_DEFINE_ERROR(IoError);

// Stable seed derivation: one master seed plus a stream index gives
// independent generator seeds (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Runs fn(i) for i in [0, n) on up to `threads` workers with a static
// block partition. Each worker walks its block in index order, so any
// per-index output slots are filled deterministically.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace scl
