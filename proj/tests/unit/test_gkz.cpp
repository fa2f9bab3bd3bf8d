#include "cyclone/config.hpp"
#include "cyclone/errors.hpp"
#include "cyclone/flip_table.hpp"
#include "cyclone/gkz.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace cyclone;

namespace {

Triangulation tri(std::string_view text) { return parse_triangulation(text); }

GkzVector vec(std::initializer_list<int> values) {
    GkzVector g;
    for (int v : values) g.entries.emplace_back(v);
    return g;
}

Simplex s(std::initializer_list<int> labels) {
    const std::vector<int> v(labels);
    return *LabelSet::from_labels(v);
}

} // namespace

TEST_CASE("gkz examples") {
    const auto c42 = make_config(4, 2);
    CHECK(gkz(c42, tri("{{1,2,3},{1,3,4}}")).to_text() == "(8,2,8,6)");
    CHECK(gkz(c42, tri("{{1,2,4},{2,3,4}}")).to_text() == "(6,8,2,8)");
    const auto c53 = make_config(5, 3);
    CHECK(gkz(c53, tri("{{1,2,3,5},{1,3,4,5}}")).to_text() == "(96,48,96,48,96)");
    CHECK(gkz(c53, tri("{{1,2,3,4},{1,2,4,5},{2,3,4,5}}")).to_text() == "(84,96,24,96,84)");
    const auto c62 = make_config(6, 2);
    for (const auto& node : fixtures::fig3_nodes()) {
        CHECK(gkz(c62, tri(node.cells)).to_text() == node.gkz);
    }
}

TEST_CASE("gkz is memoized on the triangulation") {
    const auto cfg = make_config(6, 2);
    const auto t = lowest_triangulation(cfg);
    CHECK(t.cached_gkz() == nullptr);
    const GkzVector& a = gkz(cfg, t);
    CHECK(t.cached_gkz() == &a);
    CHECK(&gkz(cfg, t) == &a);
}

TEST_CASE("lex_compare") {
    CHECK(lex_compare(vec({8, 2, 8, 6}), vec({6, 8, 2, 8})) == std::strong_ordering::greater);
    CHECK(lex_compare(vec({84, 96, 24, 96, 84}), vec({96, 48, 96, 48, 96})) == std::strong_ordering::less);
    CHECK(lex_compare(vec({1, 2}), vec({1, 2})) == std::strong_ordering::equal);
    CHECK_THROWS_AS(lex_compare(vec({1, 2}), vec({1, 2, 3})), IncompatibleVectorError);
    CHECK(std::string(to_string(std::strong_ordering::greater)) == "greater");
}

TEST_CASE("orient_flip examples") {
    const auto c42 = make_config(4, 2);
    const Flip f42{circuit_of(c42, s({1, 2, 3, 4})), FlipDirection::up};
    const auto o42 = orient_flip(c42, lowest_triangulation(c42), f42);
    CHECK(o42.direction == FlipDirection::up);
    CHECK(o42.comparison == std::strong_ordering::greater);
    CHECK(o42.before.to_text() == "(8,2,8,6)");
    CHECK(o42.after.to_text() == "(6,8,2,8)");

    const auto c53 = make_config(5, 3);
    const Flip f53{circuit_of(c53, s({1, 2, 3, 4, 5})), FlipDirection::up};
    const auto o53 = orient_flip(c53, lowest_triangulation(c53), f53);
    CHECK(o53.comparison == std::strong_ordering::less);
    CHECK(o53.after.to_text() == "(96,48,96,48,96)");

    const auto c62 = make_config(6, 2);
    const auto& fig = fixtures::fig3_nodes();
    const auto t9 = tri(fig[9].cells);
    const auto t12 = tri(fig[12].cells);
    bool found = false;
    for (const auto& f : find_flips(c62, t9)) {
        if (apply_flip(t9, f) != t12) continue;
        found = true;
        const auto o = orient_flip(c62, t9, f);
        CHECK(o.direction == FlipDirection::up);
        CHECK(o.comparison == std::strong_ordering::greater);
        CHECK(o.after.to_text() == fig[12].gkz);
    }
    CHECK(found);
}

TEST_CASE("flip_delta is supported on the circuit") {
    const auto cfg = make_config(7, 3);
    const auto t = lowest_triangulation(cfg);
    for (const auto& f : find_flips(cfg, t)) {
        const auto delta = flip_delta(cfg, f);
        for (int p = 1; p <= cfg.n(); ++p) {
            if (!f.circuit.support.contains(p)) CHECK(delta.entries[static_cast<std::size_t>(p - 1)] == 0);
        }
        CHECK(gkz_after_flip(cfg, t, f) == compute_gkz(cfg, apply_flip(t, f).cells()));
    }
    CHECK_THROWS_AS(apply_delta(vec({0, 0, 0, 0, 0, 0, 0}), flip_delta(cfg, find_flips(cfg, t)[0])),
                    ConsistencyError);
}

TEST_CASE("flip table ranks circuits by improving gain") {
    for (auto [n, d] : fixtures::small_instances()) {
        const auto cfg = make_config(n, d);
        const FlipTable table(cfg);
        CHECK(table.improving_direction() == (d % 2 == 0 ? FlipDirection::down : FlipDirection::up));
        for (std::uint32_t i = 0; i < table.circuit_count(); ++i) {
            CHECK(table.index_of(table.support(i)) == i);
            for (std::uint32_t j = i + 1; j < table.circuit_count() && j < i + 8; ++j) {
                const Flip a = table.make_flip({i, table.improving_direction()});
                const Flip b = table.make_flip({j, table.improving_direction()});
                const auto order = lex_compare(flip_delta(cfg, a), flip_delta(cfg, b));
                const auto ra = table.improving_rank(i);
                const auto rb = table.improving_rank(j);
                if (order == std::strong_ordering::greater) CHECK(ra < rb);
                else if (order == std::strong_ordering::less) CHECK(ra > rb);
                else CHECK(ra == rb);
            }
        }
    }
    CHECK_THROWS_AS(FlipTable(make_config(30, 8), 1000), CapacityError);
}
