#pragma once

#include "cyclone/config.hpp"
#include "cyclone/gkz.hpp"
#include "cyclone/label_set.hpp"
#include "cyclone/triangulation.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cyclone {

/// `source` <=_1 `target`: target is obtained from source by one up-flip on `support`.
struct PosetEdge {
    std::size_t source;
    std::size_t target;
    LabelSet support;

    friend bool operator==(const PosetEdge&, const PosetEdge&) = default;
};

/// Reverse-search tree edge, from parent to child.
struct TreeEdge {
    std::size_t parent;
    std::size_t child;

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// The first higher Stasheff-Tamari order, stored as its generating up-flip DAG.
/// Reachability in the DAG is the order; the closure is never materialized.
struct FlipPoset {
    int n = 0;
    int d = 0;
    /// Canonical order; node identity is the cell set, never the GKZ vector.
    std::vector<Triangulation> nodes;
    std::vector<GkzVector> gkz;
    /// Sorted by (source, target).
    std::vector<PosetEdge> edges;
    /// Sorted by (parent, child).
    std::vector<TreeEdge> tree_edges;
    std::size_t root = 0;

    std::size_t index_of(const Triangulation& t) const;
};

/// Enumerates all triangulations and every up-flip between them.
/// Throws CapacityError beyond `node_limit` nodes.
FlipPoset build_hst1(const PointConfig& cfg, std::uint64_t node_limit);
FlipPoset build_hst1(const PointConfig& cfg);

struct Prop1Audit {
    std::size_t edges_checked = 0;
    std::size_t greater = 0;
    std::size_t less = 0;
    std::size_t equal = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Recomputes GKZ vectors from scratch and checks every edge compares
/// greater (d even) or less (d odd).
Prop1Audit audit_prop1(const FlipPoset& poset, const PointConfig& cfg);

/// The unique source and sink of the DAG; StructureError if either is not unique.
std::pair<std::size_t, std::size_t> minimal_and_maximal(const FlipPoset& poset);

/// The minimal edge subset with the same reachability. Quadratic memory;
/// throws CapacityError above `max_nodes`.
std::vector<PosetEdge> transitive_reduction(const FlipPoset& poset, std::size_t max_nodes = 20000);

/// Deterministic DOT text; tree edges solid, the rest dashed.
std::string export_dot(const FlipPoset& poset);

struct StructureReport {
    bool acyclic = false;
    std::size_t sources = 0;
    std::size_t sinks = 0;
    /// Every tree edge is a poset edge, pointing up for d even and down for d odd.
    bool tree_edges_match_parity = false;
    /// Tree edges reach every node from the root, each non-root node having one parent.
    bool tree_spans = false;

    bool ok() const { return acyclic && sources == 1 && sinks == 1 && tree_edges_match_parity && tree_spans; }
};

StructureReport check_structure(const FlipPoset& poset);

} // namespace cyclone
