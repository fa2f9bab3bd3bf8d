#include "cyclone/parallel.hpp"

#include "cyclone/errors.hpp"

#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace cyclone {

Checkpoint initial_checkpoint(const FlipTable& table, std::uint64_t budget) {
    Checkpoint ckpt;
    ckpt.n = table.config().n();
    ckpt.d = table.config().d();
    ckpt.pending.push_back(WorkUnit{root(table), budget, 0});
    return ckpt;
}

namespace {

struct QueuedUnit {
    WorkUnit unit;
    unsigned failures = 0;
};

class Coordinator {
public:
    Coordinator(const FlipTable& table, Checkpoint start, const ParallelOptions& options)
        : table_(table), options_(options), stats_(std::move(start.partial)) {
        for (auto& unit : start.pending) queue_.push_back(QueuedUnit{std::move(unit), 0});
    }

    ParallelRun run() {
        const auto started = std::chrono::steady_clock::now();
        const unsigned workers = std::max(1U, options_.workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) threads.emplace_back([this] { work(); });
        for (auto& t : threads) t.join();
        if (error_) std::rethrow_exception(error_);

        ParallelRun out;
        out.stats = stats_;
        out.stats.wall_time = std::chrono::steady_clock::now() - started;
        out.complete = queue_.empty();
        out.remaining.n = table_.config().n();
        out.remaining.d = table_.config().d();
        for (auto& q : queue_) out.remaining.pending.push_back(std::move(q.unit));
        out.remaining.partial = stats_;
        out.units_expanded = expanded_;
        out.units_reissued = reissued_;
        return out;
    }

private:
    bool paused() const {
        if (options_.stop != nullptr && options_.stop->load()) return true;
        return options_.pause_after_nodes != 0 && stats_.triangulation_count >= options_.pause_after_nodes;
    }

    void work() {
        while (true) {
            QueuedUnit job;
            {
                std::unique_lock lock(mutex_);
                cv_.wait(lock, [&] { return error_ || in_flight_ == 0 || (!paused() && !queue_.empty()); });
                if (error_ || paused() || queue_.empty()) {
                    cv_.notify_all();
                    return;
                }
                job = std::move(queue_.back());
                queue_.pop_back();
                ++in_flight_;
            }

            Expansion result;
            std::exception_ptr failure;
            try {
                if (options_.before_expand) options_.before_expand(job.unit, job.failures + 1);
                result = expand_unit(table_, job.unit);
            } catch (...) {
                failure = std::current_exception();
            }

            std::lock_guard lock(mutex_);
            --in_flight_;
            if (failure) {
                // The failed attempt contributed nothing, so the unit is put back as is.
                if (++job.failures < options_.max_attempts) {
                    ++reissued_;
                    queue_.push_back(std::move(job));
                } else {
                    error_ = failure;
                }
            } else {
                ++expanded_;
                stats_.triangulation_count += result.nodes;
                stats_.tree_edge_count += result.tree_edges;
                stats_.flip_edge_count += result.flip_edges;
                stats_.max_tree_depth = std::max(stats_.max_tree_depth, result.max_depth);
                for (auto& unit : result.pending) {
                    unit.budget = options_.budget;
                    queue_.push_back(QueuedUnit{std::move(unit), 0});
                }
            }
            cv_.notify_all();
        }
    }

    const FlipTable& table_;
    const ParallelOptions& options_;
    std::mutex mutex_;
    std::condition_variable cv_;
    std::deque<QueuedUnit> queue_;
    EnumerationStats stats_;
    unsigned in_flight_ = 0;
    std::uint64_t expanded_ = 0;
    std::uint64_t reissued_ = 0;
    std::exception_ptr error_;
};

} // namespace

ParallelRun run_budgeted(const FlipTable& table, Checkpoint start, const ParallelOptions& options) {
    if (options.budget == 0) throw std::invalid_argument("budget must be at least 1");
    if (start.n != table.config().n() || start.d != table.config().d()) {
        throw CheckpointFormatError("checkpoint is for C(" + std::to_string(start.n) + "," + std::to_string(start.d) +
                                    "), not C(" + std::to_string(table.config().n()) + "," +
                                    std::to_string(table.config().d()) + ")");
    }
    return Coordinator(table, std::move(start), options).run();
}

EnumerationStats enumerate_parallel(const FlipTable& table, unsigned workers, std::uint64_t budget) {
    if (workers == 0) throw std::invalid_argument("at least one worker is required");
    ParallelOptions options;
    options.workers = workers;
    options.budget = budget;
    ParallelRun run = run_budgeted(table, initial_checkpoint(table, budget), options);
    return run.stats;
}

EnumerationStats enumerate_parallel(const PointConfig& cfg, unsigned workers, std::uint64_t budget) {
    return enumerate_parallel(FlipTable(cfg), workers, budget);
}

} // namespace cyclone
