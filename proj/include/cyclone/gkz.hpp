#pragma once

#include "cyclone/bigint.hpp"
#include "cyclone/config.hpp"
#include "cyclone/triangulation.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cyclone {

/// Entry p is the sum of the normalized volumes of the cells containing vertex p
/// (stored 0-based: entries[p-1]).
struct GkzVector {
    std::vector<BigInt> entries;

    std::size_t size() const { return entries.size(); }
    const BigInt& at_label(int label) const { return entries[static_cast<std::size_t>(label - 1)]; }
    BigInt sum() const;

    /// `(40,2,8,18,32,20)`
    std::string to_text() const;

    friend bool operator==(const GkzVector&, const GkzVector&) = default;
};

/// Signed per-vertex change of the GKZ vector caused by a flip; zero outside
/// the circuit support.
struct GkzDelta {
    std::vector<BigInt> entries;
};

/// Memoized on `t`.
const GkzVector& gkz(const PointConfig& cfg, const Triangulation& t);

/// Recomputes from the cells, ignoring and not touching the cache.
GkzVector compute_gkz(const PointConfig& cfg, const std::vector<Simplex>& cells);

/// Throws IncompatibleVectorError on a length mismatch.
std::strong_ordering lex_compare(const GkzVector& a, const GkzVector& b);
std::strong_ordering lex_compare(const GkzDelta& a, const GkzDelta& b);

const char* to_string(std::strong_ordering order);

GkzDelta flip_delta(const PointConfig& cfg, const Flip& flip);

/// gkz + delta; throws ConsistencyError if an entry would go negative.
GkzVector apply_delta(const GkzVector& gkz, const GkzDelta& delta);

/// GKZ of `apply_flip(t, flip)` obtained from the cached vector of `t` and the
/// circuit delta.
GkzVector gkz_after_flip(const PointConfig& cfg, const Triangulation& t, const Flip& flip);

struct FlipOrientation {
    FlipDirection direction;
    /// lex_compare(gkz(t), gkz(apply_flip(t, f))).
    std::strong_ordering comparison = std::strong_ordering::equal;
    GkzVector before;
    GkzVector after;
};

/// The flip's direction from circuit parity, certified by the GKZ comparison:
/// up-flips decrease the GKZ vector lexicographically when d is even and
/// increase it when d is odd. Throws ConsistencyError if the two disagree.
FlipOrientation orient_flip(const PointConfig& cfg, const Triangulation& t, const Flip& flip);

/// The comparison an up-flip must produce: greater for d even, less for d odd.
inline std::strong_ordering expected_up_flip_order(const PointConfig& cfg) {
    return cfg.d() % 2 == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

} // namespace cyclone
