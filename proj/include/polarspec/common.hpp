/*
Shared error types, version tag and a minimal thread-pool-free parallel loop

Copyright 2026 polarspec authors
Licensed under the Apache License, Version 2.0. See LICENSE for details.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace polarspec {

inline constexpr const char* kVersion = "0.1.0";

/// Enumeration request exceeds the configured work budget.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal identity that must hold exactly was violated; indicates an
/// upstream bug, never a recoverable user error.
class consistency_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(begin..end) split into contiguous chunks across `threads` workers.
/// fn must be safe to call concurrently on disjoint index ranges.
inline void parallel_for(std::int64_t begin, std::int64_t end,
                         const std::function<void(std::int64_t, std::int64_t)>& fn,
                         int threads = 0) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    int workers = effective_threads(threads);
    if (workers > count) workers = static_cast<int>(count);
    if (workers <= 1) {
        fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = begin + w * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace polarspec
