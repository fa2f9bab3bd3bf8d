#pragma once

#include "cyclone/bigint.hpp"
#include "cyclone/config.hpp"
#include "cyclone/flip_table.hpp"
#include "cyclone/triangulation.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cyclone {

struct EnumerationStats {
    BigInt triangulation_count = 0;
    std::uint64_t tree_edge_count = 0;
    std::uint64_t max_tree_depth = 0;
    /// Each undirected flip counted once, at its GKZ-larger endpoint.
    std::uint64_t flip_edge_count = 0;
    std::chrono::duration<double> wall_time{0};

    /// Equality of the combinatorial fields; wall time is ignored.
    bool same_counts(const EnumerationStats& other) const;
};

/// The root of a subtree of the reverse-search tree, to be expanded by visiting
/// at most `budget` nodes.
struct WorkUnit {
    Triangulation node;
    std::uint64_t budget = 1;
    std::uint64_t depth = 0;

    friend bool operator==(const WorkUnit& a, const WorkUnit& b) {
        return a.node == b.node && a.budget == b.budget && a.depth == b.depth;
    }
};

/// Reverse-search parent: the neighbor with the lexicographically largest GKZ
/// vector among those larger than gkz(t); ties go to the lexicographically
/// smallest canonical text. nullopt marks the root.
std::optional<Triangulation> parent(const PointConfig& cfg, const Triangulation& t);
std::optional<Triangulation> parent(const FlipTable& table, const Triangulation& t);

/// The flip realising parent(t), if any.
std::optional<FlipRef> parent_flip(const FlipTable& table, const std::vector<Simplex>& cells);

/// Children of `t` in the reverse-search tree, in canonical flip order.
std::vector<Triangulation> children(const FlipTable& table, const Triangulation& t);

/// The lexicographically GKZ-largest triangulation: lowest for d even, highest
/// for d odd. Throws ConsistencyError if it has an improving neighbor.
Triangulation root(const PointConfig& cfg);
Triangulation root(const FlipTable& table);

using Visitor = std::function<void(const Triangulation& t, std::uint64_t depth)>;

struct SerialOptions {
    /// Attach each visited triangulation's GKZ vector (maintained incrementally).
    bool track_gkz = false;
    /// Throw CapacityError after this many nodes; 0 means unlimited.
    std::uint64_t node_limit = 0;
};

/// Depth-first reverse search from the root. Memory is bounded by the tree
/// depth; nodes are visited once each, children in canonical flip order.
EnumerationStats enumerate_serial(const PointConfig& cfg, const Visitor& visitor = {},
                                  const SerialOptions& options = {});
EnumerationStats enumerate_serial(const FlipTable& table, const Visitor& visitor = {},
                                  const SerialOptions& options = {});

/// Outcome of expanding one WorkUnit.
struct Expansion {
    std::uint64_t nodes = 0;
    std::uint64_t tree_edges = 0;
    std::uint64_t flip_edges = 0;
    std::uint64_t max_depth = 0;
    /// Unexplored subtree roots, each with budget 0 (the caller assigns one).
    std::vector<WorkUnit> pending;
};

/// Visits at most `unit.budget` nodes of the subtree under `unit.node`,
/// depth-first, then returns the roots of every unexplored subtree.
Expansion expand_unit(const FlipTable& table, const WorkUnit& unit, const Visitor& visitor = {});

/// Reads CYCLONE_NODE_LIMIT (default 1'000'000).
std::uint64_t node_limit_from_env();

} // namespace cyclone
