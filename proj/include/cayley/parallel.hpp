#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace cayley {

// Splits [0, total) into `jobs` contiguous chunks and runs body(chunk, lo, hi)
// on one thread per chunk. The chunk boundaries depend only on (total, jobs),
// and callers merge per-chunk results in chunk order, so results never depend
// on scheduling. The first exception thrown by any chunk is rethrown.
template <class Body>
void for_each_chunk(std::uint64_t total, unsigned jobs, Body&& body) {
    jobs = std::max(1U, jobs);
    if (jobs == 1 || total < 2) {
        body(std::size_t{0}, std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t chunks = std::min<std::uint64_t>(jobs, total);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = total * c / chunks;
        const std::uint64_t hi = total * (c + 1) / chunks;
        workers.emplace_back([&, c, lo, hi] {
            try {
                body(static_cast<std::size_t>(c), lo, hi);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

// Number of chunks for_each_chunk will use.
[[nodiscard]] inline std::size_t chunk_count(std::uint64_t total, unsigned jobs) {
    jobs = std::max(1U, jobs);
    if (jobs == 1 || total < 2) {
        return 1;
    }
    return static_cast<std::size_t>(std::min<std::uint64_t>(jobs, total));
}

} // namespace cayley
