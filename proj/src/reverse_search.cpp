#include "cyclone/enumeration.hpp"

#include "cyclone/errors.hpp"
#include "cyclone/gkz.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace cyclone {

bool EnumerationStats::same_counts(const EnumerationStats& other) const {
    return triangulation_count == other.triangulation_count && tree_edge_count == other.tree_edge_count &&
           max_tree_depth == other.max_tree_depth && flip_edge_count == other.flip_edge_count;
}

namespace {

std::string text_of(const std::vector<Simplex>& cells) { return Triangulation::from_sorted(cells).to_text(); }

// Among improving flips with the best rank, the one whose result has the
// smallest canonical text.
std::optional<FlipRef> best_improving(const FlipTable& table, const std::vector<Simplex>& cells) {
    std::optional<FlipRef> best;
    std::vector<FlipRef> tied;
    table.for_each_flip(cells, table.improving_direction(), [&](FlipRef f) {
        if (!best || table.improving_rank(f.circuit) < table.improving_rank(best->circuit)) {
            best = f;
            tied.clear();
        } else if (table.improving_rank(f.circuit) == table.improving_rank(best->circuit)) {
            tied.push_back(f);
        }
    });
    if (best && !tied.empty()) {
        std::string best_text = text_of(table.apply(cells, *best));
        for (FlipRef f : tied) {
            std::string text = text_of(table.apply(cells, f));
            if (text < best_text) {
                best = f;
                best_text = std::move(text);
            }
        }
    }
    return best;
}

// True iff the parent of `cells` is reached by the improving flip `back`.
bool parent_is_via(const FlipTable& table, const std::vector<Simplex>& cells, FlipRef back) {
    const std::uint32_t back_rank = table.improving_rank(back.circuit);
    bool beaten = false;
    std::vector<FlipRef> tied;
    table.for_each_flip(cells, table.improving_direction(), [&](FlipRef f) {
        if (beaten || f.circuit == back.circuit) return;
        const std::uint32_t r = table.improving_rank(f.circuit);
        if (r < back_rank) beaten = true;
        else if (r == back_rank) tied.push_back(f);
    });
    if (beaten) return false;
    if (!tied.empty()) {
        const std::string back_text = text_of(table.apply(cells, back));
        for (FlipRef f : tied) {
            if (text_of(table.apply(cells, f)) < back_text) return false;
        }
    }
    return true;
}

struct Frame {
    std::vector<Simplex> cells;
    std::vector<FlipRef> flips;
    std::size_t next = 0;
    std::uint64_t depth = 0;
    std::vector<BigInt> gkz;
};

struct DfsOptions {
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t node_limit = 0;
    bool track_gkz = false;
};

Expansion run_dfs(const FlipTable& table, std::vector<Simplex> start, std::uint64_t start_depth,
                  const Visitor& visitor, const DfsOptions& options) {
    const PointConfig& cfg = table.config();
    Expansion out;
    std::vector<Frame> stack;

    auto emit = [&](Frame& frame) {
        ++out.nodes;
        if (options.node_limit != 0 && out.nodes > options.node_limit) {
            throw CapacityError("enumeration exceeded the node limit of " + std::to_string(options.node_limit));
        }
        if (frame.depth > 0) ++out.tree_edges;
        out.max_depth = std::max(out.max_depth, frame.depth);
        frame.flips = table.flips_of(frame.cells);
        std::uint64_t improving = 0;
        for (const FlipRef& f : frame.flips) {
            if (table.is_improving(f.direction)) ++improving;
        }
        out.flip_edges += frame.flips.size() - improving;
        if (frame.depth == 0 && improving != 0) {
            throw ConsistencyError("the root " + text_of(frame.cells) + " has an improving flip");
        }
        if (frame.depth > 0 && improving == 0) {
            throw CompletenessError(text_of(frame.cells) + " is not the root but has no improving flip");
        }
        if (visitor) {
            const Triangulation t = Triangulation::from_sorted(frame.cells);
            if (options.track_gkz) t.set_cached_gkz(std::make_shared<const GkzVector>(GkzVector{frame.gkz}));
            visitor(t, frame.depth);
        }
    };

    Frame first{std::move(start), {}, 0, start_depth, {}};
    if (options.track_gkz) first.gkz = compute_gkz(cfg, first.cells).entries;
    stack.push_back(std::move(first));
    emit(stack.back());

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.flips.size()) {
            stack.pop_back();
            continue;
        }
        const FlipRef flip = top.flips[top.next++];
        if (table.is_improving(flip.direction)) continue;
        std::vector<Simplex> child = table.apply(top.cells, flip);
        if (!parent_is_via(table, child, FlipRef{flip.circuit, opposite(flip.direction)})) continue;
        const std::uint64_t depth = top.depth + 1;
        if (out.nodes >= options.budget) {
            out.pending.push_back(WorkUnit{Triangulation::from_sorted(std::move(child)), 0, depth});
            continue;
        }
        Frame next{std::move(child), {}, 0, depth, {}};
        if (options.track_gkz) {
            next.gkz = top.gkz;
            table.add_delta(next.gkz, flip);
        }
        stack.push_back(std::move(next));
        emit(stack.back());
    }
    return out;
}

EnumerationStats to_stats(const Expansion& e) {
    EnumerationStats stats;
    stats.triangulation_count = e.nodes;
    stats.tree_edge_count = e.tree_edges;
    stats.max_tree_depth = e.max_depth;
    stats.flip_edge_count = e.flip_edges;
    return stats;
}

} // namespace

std::optional<FlipRef> parent_flip(const FlipTable& table, const std::vector<Simplex>& cells) {
    return best_improving(table, cells);
}

std::optional<Triangulation> parent(const FlipTable& table, const Triangulation& t) {
    const auto flip = best_improving(table, t.cells());
    if (!flip) return std::nullopt;
    return Triangulation::from_sorted(table.apply(t.cells(), *flip));
}

std::optional<Triangulation> parent(const PointConfig& cfg, const Triangulation& t) {
    return parent(FlipTable(cfg), t);
}

std::vector<Triangulation> children(const FlipTable& table, const Triangulation& t) {
    std::vector<Triangulation> out;
    for (const FlipRef& f : table.flips_of(t.cells())) {
        if (table.is_improving(f.direction)) continue;
        std::vector<Simplex> child = table.apply(t.cells(), f);
        if (parent_is_via(table, child, FlipRef{f.circuit, opposite(f.direction)})) {
            out.push_back(Triangulation::from_sorted(std::move(child)));
        }
    }
    return out;
}

Triangulation root(const FlipTable& table) {
    const PointConfig& cfg = table.config();
    Triangulation t = cfg.d() % 2 == 0 ? lowest_triangulation(cfg) : highest_triangulation(cfg);
    bool improvable = false;
    table.for_each_flip(t.cells(), table.improving_direction(), [&](FlipRef) { improvable = true; });
    if (improvable) throw ConsistencyError("root candidate " + t.to_text() + " has a GKZ-larger neighbor");
    return t;
}

Triangulation root(const PointConfig& cfg) { return root(FlipTable(cfg)); }

EnumerationStats enumerate_serial(const FlipTable& table, const Visitor& visitor, const SerialOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    DfsOptions dfs;
    dfs.node_limit = options.node_limit;
    dfs.track_gkz = options.track_gkz;
    EnumerationStats stats = to_stats(run_dfs(table, root(table).cells(), 0, visitor, dfs));
    stats.wall_time = std::chrono::steady_clock::now() - started;
    return stats;
}

EnumerationStats enumerate_serial(const PointConfig& cfg, const Visitor& visitor, const SerialOptions& options) {
    return enumerate_serial(FlipTable(cfg), visitor, options);
}

Expansion expand_unit(const FlipTable& table, const WorkUnit& unit, const Visitor& visitor) {
    if (unit.budget == 0) throw std::invalid_argument("work unit budget must be at least 1");
    DfsOptions dfs;
    dfs.budget = unit.budget;
    return run_dfs(table, unit.node.cells(), unit.depth, visitor, dfs);
}

std::uint64_t node_limit_from_env() {
    const char* raw = std::getenv("CYCLONE_NODE_LIMIT");
    if (raw == nullptr || *raw == '\0') return 1'000'000;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || value == 0) {
        throw std::invalid_argument(std::string("CYCLONE_NODE_LIMIT must be a positive integer, got '") + raw + "'");
    }
    return value;
}

} // namespace cyclone
