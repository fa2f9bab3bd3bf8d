#include "cyclone/gkz.hpp"

#include "cyclone/errors.hpp"

namespace cyclone {

BigInt GkzVector::sum() const {
    BigInt total = 0;
    for (const auto& e : entries) total += e;
    return total;
}

std::string GkzVector::to_text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i != 0) out += ',';
        out += entries[i].str();
    }
    out += ')';
    return out;
}

GkzVector compute_gkz(const PointConfig& cfg, const std::vector<Simplex>& cells) {
    GkzVector out{std::vector<BigInt>(static_cast<std::size_t>(cfg.n()))};
    for (Simplex cell : cells) {
        const BigInt volume = normalized_volume(cfg, cell).value;
        cell.for_each([&](int label) { out.entries[static_cast<std::size_t>(label - 1)] += volume; });
    }
    return out;
}

const GkzVector& gkz(const PointConfig& cfg, const Triangulation& t) {
    const GkzVector* cached = t.cached_gkz();
    if (cached == nullptr || cached->size() != static_cast<std::size_t>(cfg.n())) {
        t.set_cached_gkz(std::make_shared<const GkzVector>(compute_gkz(cfg, t.cells())));
        cached = t.cached_gkz();
    }
    return *cached;
}

namespace {

std::strong_ordering compare_entries(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.size() != b.size()) {
        throw IncompatibleVectorError("cannot compare vectors of length " + std::to_string(a.size()) + " and " +
                                      std::to_string(b.size()));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering lex_compare(const GkzVector& a, const GkzVector& b) { return compare_entries(a.entries, b.entries); }
std::strong_ordering lex_compare(const GkzDelta& a, const GkzDelta& b) { return compare_entries(a.entries, b.entries); }

const char* to_string(std::strong_ordering order) {
    if (order == std::strong_ordering::less) return "less";
    if (order == std::strong_ordering::greater) return "greater";
    return "equal";
}

GkzDelta flip_delta(const PointConfig& cfg, const Flip& flip) {
    GkzDelta delta{std::vector<BigInt>(static_cast<std::size_t>(cfg.n()))};
    for (Simplex cell : flip.target_cells()) {
        const BigInt volume = normalized_volume(cfg, cell).value;
        cell.for_each([&](int label) { delta.entries[static_cast<std::size_t>(label - 1)] += volume; });
    }
    for (Simplex cell : flip.source_cells()) {
        const BigInt volume = normalized_volume(cfg, cell).value;
        cell.for_each([&](int label) { delta.entries[static_cast<std::size_t>(label - 1)] -= volume; });
    }
    return delta;
}

GkzVector apply_delta(const GkzVector& gkz, const GkzDelta& delta) {
    if (gkz.size() != delta.entries.size()) {
        throw IncompatibleVectorError("delta length " + std::to_string(delta.entries.size()) +
                                      " does not match GKZ length " + std::to_string(gkz.size()));
    }
    GkzVector out = gkz;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i] += delta.entries[i];
        if (out.entries[i] < 0) throw ConsistencyError("GKZ entry " + std::to_string(i + 1) + " became negative");
    }
    return out;
}

GkzVector gkz_after_flip(const PointConfig& cfg, const Triangulation& t, const Flip& flip) {
    return apply_delta(gkz(cfg, t), flip_delta(cfg, flip));
}

FlipOrientation orient_flip(const PointConfig& cfg, const Triangulation& t, const Flip& flip) {
    const FlipDirection direction =
        t.contains_all(flip.circuit.lower_cells) ? FlipDirection::up : FlipDirection::down;
    if (direction != flip.direction) {
        throw FlipPreconditionError(std::string(to_string(flip.direction)) + "-flip on " +
                                    flip.circuit.support.to_text() + " is not available in " + t.to_text());
    }
    const Triangulation next = apply_flip(t, flip);
    FlipOrientation out{direction, std::strong_ordering::equal, gkz(cfg, t), compute_gkz(cfg, next.cells())};
    out.comparison = lex_compare(out.before, out.after);
    const std::strong_ordering want =
        direction == FlipDirection::up ? expected_up_flip_order(cfg)
                                       : (expected_up_flip_order(cfg) == std::strong_ordering::greater
                                              ? std::strong_ordering::less
                                              : std::strong_ordering::greater);
    if (out.comparison != want) {
        throw ConsistencyError(std::string(to_string(direction)) + "-flip on " + flip.circuit.support.to_text() +
                               " compares " + to_string(out.comparison) + ", expected " + to_string(want) +
                               " for d=" + std::to_string(cfg.d()));
    }
    return out;
}

} // namespace cyclone
