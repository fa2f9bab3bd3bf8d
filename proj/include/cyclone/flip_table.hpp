#pragma once

#include "cyclone/bigint.hpp"
#include "cyclone/config.hpp"
#include "cyclone/gkz.hpp"
#include "cyclone/triangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace cyclone {

/// A flip identified by its circuit's index in a FlipTable.
struct FlipRef {
    std::uint32_t circuit;
    FlipDirection direction;

    friend bool operator==(const FlipRef&, const FlipRef&) = default;
};

/// Precomputed data for every circuit of C(n,d): both sides, the GKZ change of
/// its up-flip, and a global rank of the GKZ gain of its improving flip.
///
/// Improving flips are the ones that make the GKZ vector lexicographically
/// larger: down-flips when d is even, up-flips when d is odd. Because the GKZ
/// change of a flip depends only on its circuit, comparing the neighbors of a
/// triangulation by GKZ reduces to comparing circuit ranks. The table checks
/// at build time that every circuit orients the same way.
class FlipTable {
public:
    /// Throws CapacityError if C(n, d+2) exceeds `max_circuits`.
    explicit FlipTable(const PointConfig& cfg, std::size_t max_circuits = kDefaultMaxCircuits);

    static constexpr std::size_t kDefaultMaxCircuits = std::size_t{1} << 21;

    const PointConfig& config() const { return cfg_; }
    std::size_t circuit_count() const { return supports_.size(); }

    /// Colexicographic rank of a (d+2)-subset.
    std::uint32_t index_of(LabelSet support) const;
    LabelSet support(std::uint32_t circuit) const { return supports_[circuit]; }

    FlipDirection improving_direction() const { return improving_; }
    bool is_improving(FlipDirection dir) const { return dir == improving_; }

    /// Position of the circuit's improving GKZ gain in descending lex order;
    /// equal gains share a rank.
    std::uint32_t improving_rank(std::uint32_t circuit) const { return rank_[circuit]; }

    Circuit circuit(std::uint32_t index) const;
    Flip make_flip(FlipRef ref) const;

    /// The GKZ change of the flip, restricted to the support labels in ascending order.
    std::vector<BigInt> sparse_delta(FlipRef ref) const;
    void add_delta(std::vector<BigInt>& gkz_entries, FlipRef ref) const;

    /// Calls fn(FlipRef) once for every flip available in the sorted cell list,
    /// in no particular order. Only flips with `only_direction` are reported when given.
    template <typename Fn>
    void for_each_flip(const std::vector<Simplex>& cells, Fn&& fn) const {
        scan(cells, true, true, fn);
    }
    template <typename Fn>
    void for_each_flip(const std::vector<Simplex>& cells, FlipDirection only_direction, Fn&& fn) const {
        scan(cells, only_direction == FlipDirection::up, only_direction == FlipDirection::down, fn);
    }

    /// All flips of the cell list, ordered by circuit support.
    std::vector<FlipRef> flips_of(const std::vector<Simplex>& cells) const;

    /// Cells after the flip; `cells` must contain the flip's source side.
    std::vector<Simplex> apply(const std::vector<Simplex>& cells, FlipRef ref) const;

private:
    template <typename Fn>
    void scan(const std::vector<Simplex>& cells, bool want_up, bool want_down, Fn& fn) const;

    bool side_present(const std::vector<Simplex>& cells, LabelSet support, int parity) const;

    PointConfig cfg_;
    FlipDirection improving_;
    std::vector<std::vector<std::uint32_t>> binom_;
    std::vector<LabelSet> supports_;      // by index
    std::vector<BigInt> up_delta_;        // (d+2) entries per circuit, support order
    std::vector<std::uint32_t> rank_;
};

template <typename Fn>
void FlipTable::scan(const std::vector<Simplex>& cells, bool want_up, bool want_down, Fn& fn) const {
    // Each circuit side is reported from its lexicographically first cell, which
    // omits the largest support label (lower side) or the second largest (upper side).
    const int n = cfg_.n();
    for (Simplex cell : cells) {
        const int top = cell.max_label();
        if (want_up) {
            for (int v = top + 1; v <= n; ++v) {
                const LabelSet s = cell.with(v);
                if (side_present(cells, s, 0)) fn(FlipRef{index_of(s), FlipDirection::up});
            }
        }
        if (want_down) {
            const int second = cell.without(top).max_label();
            for (int v = second + 1; v < top; ++v) {
                const LabelSet s = cell.with(v);
                if (side_present(cells, s, 1)) fn(FlipRef{index_of(s), FlipDirection::down});
            }
        }
    }
}

inline bool FlipTable::side_present(const std::vector<Simplex>& cells, LabelSet support, int parity) const {
    // Walk support labels from the top; the k-th from the top lies on side k%2.
    // The first one on the requested side is the scanning cell itself.
    bool first = true;
    int k = 0;
    for (std::uint64_t m = support.mask(); m != 0; ++k) {
        const int label = 64 - std::countl_zero(m);
        m &= ~(std::uint64_t{1} << (label - 1));
        if (k % 2 != parity) continue;
        if (first) {
            first = false;
            continue;
        }
        if (!std::binary_search(cells.begin(), cells.end(), support.without(label))) return false;
    }
    return true;
}

} // namespace cyclone
