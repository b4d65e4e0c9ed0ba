#include "weilforms/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weilforms {

ParallelFor sequential_for() {
    return [](std::size_t count, const std::function<void(std::size_t)>& body) {
        for (std::size_t i = 0; i < count; ++i) body(i);
    };
}

ParallelFor threaded_for(unsigned workers) {
    if (workers <= 1) return sequential_for();
    return [workers](std::size_t count, const std::function<void(std::size_t)>& body) {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_lock;
        auto run = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> guard(error_lock);
                    if (!first_error) first_error = std::current_exception();
                    next.store(count);
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(run);
        run();
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    };
}

}  // namespace weilforms
