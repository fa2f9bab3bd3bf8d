#include "cyclone/poset.hpp"

#include "cyclone/enumeration.hpp"
#include "cyclone/errors.hpp"
#include "cyclone/flip_table.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace cyclone {

namespace {

struct CellsHash {
    std::size_t operator()(const std::vector<Simplex>& cells) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (Simplex s : cells) {
            h ^= s.mask() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

using NodeIndex = std::unordered_map<std::vector<Simplex>, std::size_t, CellsHash>;

std::vector<std::vector<std::size_t>> successors(const FlipPoset& poset) {
    std::vector<std::vector<std::size_t>> succ(poset.nodes.size());
    for (const auto& e : poset.edges) succ[e.source].push_back(e.target);
    return succ;
}

// Kahn's algorithm; shorter than the node count iff there is a cycle.
std::vector<std::size_t> topological_order(const FlipPoset& poset) {
    std::vector<std::size_t> indegree(poset.nodes.size(), 0);
    for (const auto& e : poset.edges) ++indegree[e.target];
    const auto succ = successors(poset);
    std::vector<std::size_t> order;
    order.reserve(poset.nodes.size());
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < indegree.size(); ++i) {
        if (indegree[i] == 0) ready.push_back(i);
    }
    while (!ready.empty()) {
        const std::size_t u = ready.back();
        ready.pop_back();
        order.push_back(u);
        for (std::size_t v : succ[u]) {
            if (--indegree[v] == 0) ready.push_back(v);
        }
    }
    return order;
}

} // namespace

std::size_t FlipPoset::index_of(const Triangulation& t) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
    if (it == nodes.end() || !(*it == t)) throw StructureError(t.to_text() + " is not a node of the poset");
    return static_cast<std::size_t>(it - nodes.begin());
}

FlipPoset build_hst1(const PointConfig& cfg, std::uint64_t node_limit) {
    const FlipTable table(cfg);
    FlipPoset poset;
    poset.n = cfg.n();
    poset.d = cfg.d();

    SerialOptions options;
    options.track_gkz = true;
    options.node_limit = node_limit;
    enumerate_serial(
        table, [&](const Triangulation& t, std::uint64_t) { poset.nodes.push_back(t); }, options);
    std::sort(poset.nodes.begin(), poset.nodes.end());

    NodeIndex index;
    index.reserve(poset.nodes.size());
    poset.gkz.reserve(poset.nodes.size());
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        index.emplace(poset.nodes[i].cells(), i);
        poset.gkz.push_back(*poset.nodes[i].cached_gkz());
    }
    auto lookup = [&](const std::vector<Simplex>& cells) {
        const auto it = index.find(cells);
        if (it == index.end()) {
            throw CompletenessError("flip leads to " + Triangulation::from_sorted(cells).to_text() +
                                    ", which the enumeration did not visit");
        }
        return it->second;
    };

    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        const auto& cells = poset.nodes[i].cells();
        for (const FlipRef& f : table.flips_of(cells)) {
            const std::size_t j = lookup(table.apply(cells, f));
            if (f.direction == FlipDirection::up) poset.edges.push_back(PosetEdge{i, j, table.support(f.circuit)});
        }
        if (const auto up = parent_flip(table, cells)) {
            poset.tree_edges.push_back(TreeEdge{lookup(table.apply(cells, *up)), i});
        } else {
            poset.root = i;
        }
    }
    auto by_ends = [](const auto& a, const auto& b) { return std::pair(a.source, a.target) < std::pair(b.source, b.target); };
    std::sort(poset.edges.begin(), poset.edges.end(), by_ends);
    std::sort(poset.tree_edges.begin(), poset.tree_edges.end(),
              [](const TreeEdge& a, const TreeEdge& b) { return std::pair(a.parent, a.child) < std::pair(b.parent, b.child); });
    return poset;
}

FlipPoset build_hst1(const PointConfig& cfg) { return build_hst1(cfg, node_limit_from_env()); }

Prop1Audit audit_prop1(const FlipPoset& poset, const PointConfig& cfg) {
    Prop1Audit audit;
    std::vector<GkzVector> fresh;
    fresh.reserve(poset.nodes.size());
    for (const auto& t : poset.nodes) fresh.push_back(compute_gkz(cfg, t.cells()));
    const std::strong_ordering want = expected_up_flip_order(cfg);
    for (const auto& e : poset.edges) {
        ++audit.edges_checked;
        const std::strong_ordering got = lex_compare(fresh[e.source], fresh[e.target]);
        if (got == std::strong_ordering::greater) ++audit.greater;
        else if (got == std::strong_ordering::less) ++audit.less;
        else ++audit.equal;
        if (got != want) {
            audit.violations.push_back("up-flip on " + e.support.to_text() + " from " +
                                       poset.nodes[e.source].to_text() + " " + fresh[e.source].to_text() + " to " +
                                       poset.nodes[e.target].to_text() + " " + fresh[e.target].to_text() +
                                       " compares " + to_string(got) + ", expected " + to_string(want));
        }
    }
    return audit;
}

std::pair<std::size_t, std::size_t> minimal_and_maximal(const FlipPoset& poset) {
    std::vector<char> has_in(poset.nodes.size(), 0);
    std::vector<char> has_out(poset.nodes.size(), 0);
    for (const auto& e : poset.edges) {
        has_out[e.source] = 1;
        has_in[e.target] = 1;
    }
    std::vector<std::size_t> sources;
    std::vector<std::size_t> sinks;
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        if (has_in[i] == 0) sources.push_back(i);
        if (has_out[i] == 0) sinks.push_back(i);
    }
    if (sources.size() != 1 || sinks.size() != 1) {
        throw StructureError("HST1 needs a unique minimum and maximum, found " + std::to_string(sources.size()) +
                             " sources and " + std::to_string(sinks.size()) + " sinks");
    }
    return {sources.front(), sinks.front()};
}

std::vector<PosetEdge> transitive_reduction(const FlipPoset& poset, std::size_t max_nodes) {
    const std::size_t count = poset.nodes.size();
    if (count > max_nodes) {
        throw CapacityError("transitive reduction is limited to " + std::to_string(max_nodes) + " nodes, poset has " +
                            std::to_string(count));
    }
    const std::vector<std::size_t> order = topological_order(poset);
    if (order.size() != count) throw StructureError("flip graph has a directed cycle");

    const auto succ = successors(poset);
    const std::size_t words = (count + 63) / 64;
    // reach[u]: nodes reachable from u by a path of length >= 1.
    std::vector<std::uint64_t> reach(count * words, 0);
    auto row = [&](std::size_t u) { return reach.data() + u * words; };
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::uint64_t* r = row(*it);
        for (std::size_t v : succ[*it]) {
            r[v / 64] |= std::uint64_t{1} << (v % 64);
            const std::uint64_t* rv = row(v);
            for (std::size_t w = 0; w < words; ++w) r[w] |= rv[w];
        }
    }

    std::vector<PosetEdge> kept;
    for (const auto& e : poset.edges) {
        bool redundant = false;
        for (std::size_t w : succ[e.source]) {
            if (w != e.target && ((row(w)[e.target / 64] >> (e.target % 64)) & 1U) != 0) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(e);
    }
    return kept;
}

std::string export_dot(const FlipPoset& poset) {
    std::vector<std::pair<std::size_t, std::size_t>> tree;
    tree.reserve(poset.tree_edges.size() * 2);
    for (const auto& t : poset.tree_edges) {
        tree.emplace_back(t.parent, t.child);
        tree.emplace_back(t.child, t.parent);
    }
    std::sort(tree.begin(), tree.end());

    std::ostringstream out;
    out << "digraph hst1 {\n";
    out << "  // C(" << poset.n << "," << poset.d << "): " << poset.nodes.size() << " triangulations, "
        << poset.edges.size() << " up-flips\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        out << "  t" << i << " [label=\"" << poset.nodes[i].to_text() << "\\n" << poset.gkz[i].to_text() << "\"];\n";
    }
    for (const auto& e : poset.edges) {
        const bool in_tree = std::binary_search(tree.begin(), tree.end(), std::pair(e.source, e.target));
        out << "  t" << e.source << " -> t" << e.target << " [style=" << (in_tree ? "solid" : "dashed") << "];\n";
    }
    out << "}\n";
    return out.str();
}

StructureReport check_structure(const FlipPoset& poset) {
    StructureReport report;
    report.acyclic = topological_order(poset).size() == poset.nodes.size();

    std::vector<char> has_in(poset.nodes.size(), 0);
    std::vector<char> has_out(poset.nodes.size(), 0);
    for (const auto& e : poset.edges) {
        has_out[e.source] = 1;
        has_in[e.target] = 1;
    }
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        report.sources += has_in[i] == 0 ? 1 : 0;
        report.sinks += has_out[i] == 0 ? 1 : 0;
    }

    // For d even the parent is GKZ-larger, i.e. lower in HST1, so parent -> child is an up-flip.
    const bool up = poset.d % 2 == 0;
    report.tree_edges_match_parity = std::all_of(poset.tree_edges.begin(), poset.tree_edges.end(), [&](const TreeEdge& t) {
        const auto [from, to] = up ? std::pair(t.parent, t.child) : std::pair(t.child, t.parent);
        const auto it = std::lower_bound(poset.edges.begin(), poset.edges.end(), std::pair(from, to),
                                         [](const PosetEdge& e, const auto& key) {
                                             return std::pair(e.source, e.target) < key;
                                         });
        return it != poset.edges.end() && it->source == from && it->target == to;
    });

    std::vector<std::size_t> parents(poset.nodes.size(), 0);
    std::vector<std::vector<std::size_t>> kids(poset.nodes.size());
    for (const auto& t : poset.tree_edges) {
        ++parents[t.child];
        kids[t.parent].push_back(t.child);
    }
    bool single_parent = poset.root < poset.nodes.size() && parents[poset.root] == 0;
    for (std::size_t i = 0; i < poset.nodes.size() && single_parent; ++i) {
        if (i != poset.root && parents[i] != 1) single_parent = false;
    }
    std::size_t reached = 0;
    if (single_parent) {
        std::vector<std::size_t> todo{poset.root};
        while (!todo.empty()) {
            const std::size_t u = todo.back();
            todo.pop_back();
            ++reached;
            for (std::size_t v : kids[u]) todo.push_back(v);
        }
    }
    report.tree_spans = single_parent && reached == poset.nodes.size();
    return report;
}

} // namespace cyclone
