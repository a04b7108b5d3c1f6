#ifndef SQUIRCLE_PARALLEL_HPP
#define SQUIRCLE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace squircle {

/// Worker count from SQUIRCLE_WORKERS, else the hardware concurrency.
inline unsigned default_workers() {
    if (const char* env = std::getenv("SQUIRCLE_WORKERS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(begin, end) on contiguous bands of [0, count). Bands are
/// disjoint; results written per index are therefore independent of the
/// schedule. The first exception thrown by any band is rethrown.
template <typename Body>
void parallel_bands(std::size_t count, unsigned workers, Body&& body) {
    if (workers == 0) workers = default_workers();
    const std::size_t bands = std::min<std::size_t>(workers, count);
    if (bands <= 1) {
        if (count > 0) body(std::size_t{0}, count);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(bands);
    for (std::size_t b = 0; b < bands; ++b) {
        const std::size_t begin = count * b / bands;
        const std::size_t end = count * (b + 1) / bands;
        threads.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace squircle

#endif
