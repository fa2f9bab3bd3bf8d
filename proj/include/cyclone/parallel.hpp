#pragma once

#include "cyclone/config.hpp"
#include "cyclone/enumeration.hpp"
#include "cyclone/flip_table.hpp"

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclone {

inline constexpr std::uint64_t kDefaultBudget = 1000;

/// Pending work plus the counts accumulated so far; the state of a budgeted
/// run between work units.
struct Checkpoint {
    int n = 0;
    int d = 0;
    std::vector<WorkUnit> pending;
    EnumerationStats partial;

    bool operator==(const Checkpoint& o) const {
        return n == o.n && d == o.d && pending == o.pending && partial.same_counts(o.partial);
    }
};

/// A fresh run: the root with the given budget and zero counts.
Checkpoint initial_checkpoint(const FlipTable& table, std::uint64_t budget);

/// Line-oriented text:
///
///     cyclone-ckpt v1 n=<n> d=<d>
///     unit budget=<b> depth=<k> <canonical triangulation>
///     ...
///     counts triangulations=<N> tree_edges=<E> max_depth=<D> flip_edges=<F> units=<U>
///     end
std::string format_checkpoint(const Checkpoint& ckpt);

/// Throws CheckpointFormatError on malformed input or, when `expected` is
/// given, on an (n,d) header that does not match it.
Checkpoint parse_checkpoint(const std::string& text, const PointConfig* expected = nullptr);

void checkpoint_save(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint checkpoint_load(const std::filesystem::path& path, const PointConfig* expected = nullptr);

struct ParallelOptions {
    unsigned workers = 1;
    /// Node budget given to every work unit the coordinator creates.
    std::uint64_t budget = kDefaultBudget;
    /// When set to true, workers stop taking units; in-flight ones finish.
    const std::atomic<bool>* stop = nullptr;
    /// Pause once at least this many nodes are counted (0: never).
    std::uint64_t pause_after_nodes = 0;
    /// A unit whose expansion throws is put back this many times before the run fails.
    unsigned max_attempts = 3;
    /// Called before each expansion attempt; throwing simulates a worker failure.
    std::function<void(const WorkUnit&, unsigned attempt)> before_expand;
};

struct ParallelRun {
    EnumerationStats stats;
    /// False when the run paused with units left; `remaining` then resumes it.
    bool complete = false;
    Checkpoint remaining;
    std::uint64_t units_expanded = 0;
    std::uint64_t units_reissued = 0;
};

/// Coordinator/worker reverse search. Workers expand units within their budget
/// and hand unexplored subtree roots back to the shared queue; the run ends
/// when the queue is empty and no worker is busy.
ParallelRun run_budgeted(const FlipTable& table, Checkpoint start, const ParallelOptions& options);

EnumerationStats enumerate_parallel(const PointConfig& cfg, unsigned workers, std::uint64_t budget);
EnumerationStats enumerate_parallel(const FlipTable& table, unsigned workers, std::uint64_t budget);

} // namespace cyclone
