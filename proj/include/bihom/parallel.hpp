#pragma once

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "bihom/bundle.hpp"

namespace bihom {

/// Number of worker threads, taken from BIHOM_WORKERS (default 1, capped at
/// 64).  Non-numeric or non-positive values fall back to 1.
inline unsigned worker_count() {
    const char* env = std::getenv("BIHOM_WORKERS");
    if (!env) return 1;
    std::string text(env);
    if (text.empty() || text.size() > 3) return 1;
    unsigned value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') return 1;
        value = value * 10 + static_cast<unsigned>(ch - '0');
    }
    if (value == 0) return 1;
    return value > 64 ? 64 : value;
}

/// Evaluates fn(index, sink) for every index in [0, total), chunked over the
/// configured workers.  Sinks are concatenated in chunk order, so the merged
/// result is identical to a serial run for any worker count.
template <typename T, typename Fn>
std::vector<T> parallel_collect(std::size_t total, Fn fn) {
    unsigned workers = worker_count();
    if (workers > total) workers = total ? static_cast<unsigned>(total) : 1;
    if (workers <= 1) {
        std::vector<T> out;
        for (std::size_t i = 0; i < total; ++i) fn(i, out);
        return out;
    }

    std::vector<std::vector<T>> buffers(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    std::size_t chunk = total / workers;
    std::size_t extra = total % workers;
    std::size_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t end = begin + chunk + (w < extra ? 1 : 0);
        threads.emplace_back([&, w, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i, buffers[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<T> out;
    for (auto& buf : buffers)
        for (auto& v : buf) out.push_back(std::move(v));
    return out;
}

template <typename Fn>
std::vector<Violation> parallel_tuples(std::size_t total, Fn fn) {
    return parallel_collect<Violation>(total, fn);
}

} // namespace bihom
