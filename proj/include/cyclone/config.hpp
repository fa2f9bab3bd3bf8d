#pragma once

#include "cyclone/bigint.hpp"
#include "cyclone/label_set.hpp"

#include <compare>
#include <vector>

namespace cyclone {

/// The cyclic polytope C(n,d): n points on the d-th moment curve at parameters 1..n.
///
/// Coordinates are never built; every geometric quantity the engine needs is a
/// function of the labels alone.
class PointConfig {
public:
    int n() const { return n_; }
    int d() const { return d_; }
    /// Codimension n - d.
    int c() const { return n_ - d_; }
    int param(int label) const { return label; }
    std::vector<int> params() const;
    LabelSet all_labels() const { return LabelSet::interval(1, n_); }

    friend bool operator==(const PointConfig&, const PointConfig&) = default;

private:
    friend PointConfig make_config(int n, int d);
    PointConfig(int n, int d) : n_(n), d_(d) {}

    int n_;
    int d_;
};

/// Throws DimensionError unless n > d >= 1 (and n fits in a LabelSet).
PointConfig make_config(int n, int d);

/// Euclidean volume times d!, exact.
struct Volume {
    BigInt value;

    friend bool operator==(const Volume&, const Volume&) = default;
    friend auto operator<=>(const Volume& a, const Volume& b) {
        return a.value < b.value ? std::strong_ordering::less
             : a.value > b.value ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
    }
};

/// Vandermonde product over the sorted labels of a (d+1)-simplex.
/// Throws InvalidSimplexError on wrong cardinality or out-of-range labels.
Volume normalized_volume(const PointConfig& cfg, Simplex s);

/// Normalized volume of conv C(n,d); every triangulation's cells sum to it.
Volume total_volume(const PointConfig& cfg);

/// Gale's evenness criterion: `f` (d labels) spans a facet of C(n,d) iff every
/// pair of non-members i<j encloses an even number of members.
bool is_boundary_facet(const PointConfig& cfg, LabelSet f);

enum class Parity { even, odd };

/// A gap of `face` (a candidate facet over labels 1..label_count) is even iff
/// an even number of members of `face` exceed it.
/// Throws InvalidGapError if `gap` is a member or out of range.
Parity gap_parity(LabelSet face, int gap, int label_count);

/// True iff every gap of `face` within 1..label_count has the given parity.
bool all_gaps_have_parity(LabelSet face, int label_count, Parity parity);

/// All (d+1)-subsets of 1..n whose gaps all have `parity`, in canonical order.
std::vector<Simplex> cells_with_gap_parity(const PointConfig& cfg, Parity parity);

/// Throws InvalidSimplexError unless `s` is a (d+1)-subset of 1..n.
void require_simplex(const PointConfig& cfg, Simplex s);

} // namespace cyclone
