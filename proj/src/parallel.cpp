#include "riesz/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace riesz {

namespace {

std::atomic<int> g_default_workers{0};
thread_local bool t_inside_pool_work = false;

// Long-lived pool: gradient evaluations run tens of thousands of times per
// minimization, so per-call thread spawning would dominate at small N.
// Chunks are pulled from a shared counter (dynamic balancing); callers own
// per-chunk output slots, so scheduling order never affects results.
class Pool {
public:
    static Pool& instance() {
        static Pool* pool = new Pool;  // leaked on purpose: workers are detached
        return *pool;
    }

    void run(std::size_t n_chunks, int workers, const std::function<void(std::size_t)>& f) {
        if (n_chunks == 0) return;
        if (workers <= 1 || n_chunks == 1 || t_inside_pool_work) {
            // Nested calls degrade to serial; results are identical either way.
            for (std::size_t c = 0; c < n_chunks; ++c) f(c);
            return;
        }
        std::lock_guard<std::mutex> serialize(run_mu_);
        ensure_threads(workers - 1);
        {
            std::lock_guard<std::mutex> lock(mu_);
            job_ = &f;
            next_chunk_.store(0, std::memory_order_relaxed);
            end_chunk_ = n_chunks;
            active_helpers_ = std::min<std::size_t>(static_cast<std::size_t>(workers - 1), n_chunks - 1);
            pending_helpers_ = active_helpers_;
            ++generation_;
        }
        cv_start_.notify_all();

        std::exception_ptr main_error;
        try {
            work_loop(f, n_chunks);
        } catch (...) {
            main_error = std::current_exception();
        }

        std::unique_lock<std::mutex> lock(mu_);
        cv_done_.wait(lock, [this] { return pending_helpers_ == 0; });
        job_ = nullptr;
        std::exception_ptr err = main_error ? main_error : first_error_;
        first_error_ = nullptr;
        lock.unlock();
        if (err) std::rethrow_exception(err);
    }

private:
    Pool() = default;

    void ensure_threads(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(threads_) < n) {
            const std::size_t id = threads_;
            std::thread([this, id] { helper_main(id); }).detach();
            ++threads_;
        }
    }

    void helper_main(std::size_t id) {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(std::size_t)>* job = nullptr;
            std::size_t end = 0;
            {
                std::unique_lock<std::mutex> lock(mu_);
                cv_start_.wait(lock, [&] {
                    return generation_ != seen && (job_ == nullptr || id < active_helpers_);
                });
                seen = generation_;
                if (job_ == nullptr || id >= active_helpers_) continue;
                job = job_;
                end = end_chunk_;
            }
            try {
                work_loop(*job, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu_);
                if (!first_error_) first_error_ = std::current_exception();
            }
            {
                std::lock_guard<std::mutex> lock(mu_);
                --pending_helpers_;
            }
            cv_done_.notify_all();
        }
    }

    void work_loop(const std::function<void(std::size_t)>& f, std::size_t end) {
        t_inside_pool_work = true;
        struct Reset {
            ~Reset() { t_inside_pool_work = false; }
        } reset;
        for (;;) {
            const std::size_t c = next_chunk_.fetch_add(1, std::memory_order_relaxed);
            if (c >= end) break;
            f(c);
        }
    }

    std::mutex run_mu_;  // one run() at a time
    std::mutex mu_;
    std::condition_variable cv_start_;
    std::condition_variable cv_done_;
    std::size_t threads_ = 0;
    const std::function<void(std::size_t)>* job_ = nullptr;
    std::atomic<std::size_t> next_chunk_{0};
    std::size_t end_chunk_ = 0;
    std::size_t active_helpers_ = 0;
    std::size_t pending_helpers_ = 0;
    std::uint64_t generation_ = 0;
    std::exception_ptr first_error_;
};

}  // namespace

int default_workers() {
    int n = g_default_workers.load(std::memory_order_relaxed);
    if (n > 0) return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_default_workers(int n) { g_default_workers.store(n, std::memory_order_relaxed); }

void parallel_chunks(std::size_t n_chunks, int workers, const std::function<void(std::size_t)>& f) {
    if (workers <= 0) workers = default_workers();
    Pool::instance().run(n_chunks, workers, f);
}

}  // namespace riesz
