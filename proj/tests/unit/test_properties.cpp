#include "cyclone/enumeration.hpp"
#include "cyclone/errors.hpp"
#include "cyclone/gkz.hpp"
#include "cyclone/parallel.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace cyclone;

namespace {

struct Instance {
    int n;
    int d;
};

const std::vector<Instance>& walk_instances() {
    static const std::vector<Instance> v = {{6, 2},  {9, 2},  {14, 2}, {7, 3},  {10, 3}, {13, 3}, {8, 4},
                                            {11, 4}, {13, 5}, {12, 6}, {13, 7}, {12, 8}, {9, 1}};
    return v;
}

// Random walk over the flip graph starting at the lowest triangulation.
std::vector<Triangulation> random_walk(const PointConfig& cfg, std::mt19937_64& rng, int steps) {
    std::vector<Triangulation> out{lowest_triangulation(cfg)};
    for (int i = 0; i < steps; ++i) {
        const auto flips = find_flips(cfg, out.back());
        if (flips.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, flips.size() - 1);
        out.push_back(apply_flip(out.back(), flips[pick(rng)]));
    }
    return out;
}

template <typename Fn>
void for_each_walk_node(Fn&& fn) {
    std::mt19937_64 rng(20260417);
    for (const auto& inst : walk_instances()) {
        const auto cfg = make_config(inst.n, inst.d);
        for (const auto& t : random_walk(cfg, rng, 60)) fn(cfg, t);
    }
}

std::set<std::string> neighbor_texts(const PointConfig& cfg, const Triangulation& t) {
    std::set<std::string> out;
    for (const auto& f : find_flips(cfg, t)) out.insert(apply_flip(t, f).to_text());
    return out;
}

} // namespace

TEST_CASE("flip involution") {
    for_each_walk_node([](const PointConfig& cfg, const Triangulation& t) {
        for (const auto& f : find_flips(cfg, t)) CHECK(apply_flip(apply_flip(t, f), f.reversed()) == t);
    });
}

TEST_CASE("flip neighborhood symmetry") {
    for_each_walk_node([](const PointConfig& cfg, const Triangulation& t) {
        const auto text = t.to_text();
        for (const auto& f : find_flips(cfg, t)) {
            CHECK(neighbor_texts(cfg, apply_flip(t, f)).count(text) == 1);
        }
    });
}

TEST_CASE("every walk node is a valid triangulation") {
    for_each_walk_node([](const PointConfig& cfg, const Triangulation& t) {
        CHECK(check_triangulation(cfg, t.cells()).ok());
        CHECK(parse_triangulation(t.to_text()) == t);
    });
}

TEST_CASE("gkz sum is (d+1) times the total volume") {
    for_each_walk_node([](const PointConfig& cfg, const Triangulation& t) {
        CHECK(compute_gkz(cfg, t.cells()).sum() == (cfg.d() + 1) * total_volume(cfg).value);
    });
}

TEST_CASE("gkz delta locality and incremental update") {
    for_each_walk_node([](const PointConfig& cfg, const Triangulation& t) {
        const auto before = compute_gkz(cfg, t.cells());
        for (const auto& f : find_flips(cfg, t)) {
            const auto after = compute_gkz(cfg, apply_flip(t, f).cells());
            for (int p = 1; p <= cfg.n(); ++p) {
                if (!f.circuit.support.contains(p)) CHECK(before.at_label(p) == after.at_label(p));
            }
            CHECK(apply_delta(before, flip_delta(cfg, f)) == after);
            const auto o = orient_flip(cfg, t, f);
            const bool up_order = o.comparison == expected_up_flip_order(cfg);
            CHECK(up_order == (f.direction == FlipDirection::up));
        }
    });
}

TEST_CASE("flip table scan equals the reference scan") {
    std::mt19937_64 rng(7);
    for (const auto& inst : walk_instances()) {
        const auto cfg = make_config(inst.n, inst.d);
        const FlipTable table(cfg);
        for (const auto& t : random_walk(cfg, rng, 40)) {
            std::set<std::pair<std::string, int>> fast;
            for (auto ref : table.flips_of(t.cells())) {
                const Flip f = table.make_flip(ref);
                fast.insert({f.circuit.support.to_text(), static_cast<int>(f.direction)});
                CHECK(table.apply(t.cells(), ref) == apply_flip(t, f).cells());
            }
            std::set<std::pair<std::string, int>> slow;
            for (const auto& f : find_flips(cfg, t)) {
                slow.insert({f.circuit.support.to_text(), static_cast<int>(f.direction)});
            }
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("parent strictly increases gkz and reaches the root") {
    std::mt19937_64 rng(99);
    for (const auto& inst : walk_instances()) {
        const auto cfg = make_config(inst.n, inst.d);
        const FlipTable table(cfg);
        const auto r = root(table);
        for (const auto& start : random_walk(cfg, rng, 30)) {
            Triangulation t = start;
            int steps = 0;
            while (true) {
                const auto fast = parent(table, t);
                const auto slow = parent(cfg, t);
                CHECK(fast == slow);
                if (!fast) break;
                CHECK(lex_compare(compute_gkz(cfg, fast->cells()), compute_gkz(cfg, t.cells())) ==
                      std::strong_ordering::greater);
                const auto kids = children(table, *fast);
                CHECK(std::count(kids.begin(), kids.end(), t) == 1);
                t = *fast;
                REQUIRE(++steps < 10000);
            }
            CHECK(t == r);
        }
    }
}

TEST_CASE("children are exactly the nodes whose parent is the node") {
    for (auto [n, d] : {std::pair{7, 2}, std::pair{8, 3}, std::pair{8, 4}}) {
        const auto cfg = make_config(n, d);
        const FlipTable table(cfg);
        enumerate_serial(table, [&](const Triangulation& t, std::uint64_t) {
            for (const auto& f : find_flips(cfg, t)) {
                const auto nb = apply_flip(t, f);
                const auto kids = children(table, t);
                const bool is_child = std::find(kids.begin(), kids.end(), nb) != kids.end();
                CHECK(is_child == (parent(table, nb) == t));
            }
        });
    }
}

TEST_CASE("negative fixtures are rejected") {
    std::mt19937_64 rng(3);
    for (const auto& inst : walk_instances()) {
        const auto cfg = make_config(inst.n, inst.d);
        for (const auto& t : random_walk(cfg, rng, 20)) {
            auto cells = t.cells();
            if (cells.size() < 2) continue;
            std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
            const std::size_t k = pick(rng);
            auto dropped = cells;
            dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(k));
            CHECK_FALSE(check_triangulation(cfg, dropped).ok());
            // Replace one cell by an absent simplex.
            auto swapped = cells;
            for_each_subset(cfg.n(), cfg.d() + 1, [&](LabelSet s) {
                if (swapped == cells && !t.contains(s)) swapped[k] = s;
            });
            std::sort(swapped.begin(), swapped.end());
            CHECK_FALSE(check_triangulation(cfg, swapped).ok());
        }
    }
}

TEST_CASE("lex_compare is a total order") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> value(0, 3);
    auto random_vec = [&] {
        GkzVector g;
        for (int i = 0; i < 4; ++i) g.entries.emplace_back(value(rng));
        return g;
    };
    for (int i = 0; i < 500; ++i) {
        const auto a = random_vec();
        const auto b = random_vec();
        const auto c = random_vec();
        CHECK(lex_compare(a, a) == std::strong_ordering::equal);
        CHECK((lex_compare(a, b) == std::strong_ordering::equal) == (a == b));
        CHECK(lex_compare(a, b) == 0 <=> lex_compare(b, a));
        if (lex_compare(a, b) < 0 && lex_compare(b, c) < 0) CHECK(lex_compare(a, c) < 0);
        CHECK((lex_compare(a, b) < 0) == (a.entries < b.entries));
    }
}

TEST_CASE("checkpoint round-trip on random queues") {
    std::mt19937_64 rng(5);
    for (const auto& inst : walk_instances()) {
        const auto cfg = make_config(inst.n, inst.d);
        Checkpoint ckpt;
        ckpt.n = inst.n;
        ckpt.d = inst.d;
        std::uniform_int_distribution<std::uint64_t> number(1, 1000000);
        for (const auto& t : random_walk(cfg, rng, 15)) ckpt.pending.push_back(WorkUnit{t, number(rng), number(rng)});
        ckpt.partial.triangulation_count = BigInt(number(rng)) * BigInt(number(rng)) * BigInt(number(rng));
        ckpt.partial.tree_edge_count = number(rng);
        ckpt.partial.max_tree_depth = number(rng);
        ckpt.partial.flip_edge_count = number(rng);
        const auto text = format_checkpoint(ckpt);
        const auto back = parse_checkpoint(text, &cfg);
        CHECK(back == ckpt);
        CHECK(format_checkpoint(back) == text);
    }
}
