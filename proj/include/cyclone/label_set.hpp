#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclone {

/// Largest label a LabelSet can hold.
inline constexpr int kMaxLabel = 64;

/// A subset of the vertex labels 1..64, stored as a bitmask (label i is bit i-1).
///
/// The ordering is lexicographic on the ascending label sequences, which is the
/// canonical order used for cells, circuit supports and text output.
class LabelSet {
public:
    constexpr LabelSet() = default;
    constexpr explicit LabelSet(std::uint64_t mask) : mask_(mask) {}

    /// Builds a set from labels; nullopt on duplicates or labels outside 1..64.
    static std::optional<LabelSet> from_labels(std::span<const int> labels);
    static LabelSet interval(int first, int last);

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }

    constexpr bool contains(int label) const {
        return label >= 1 && label <= kMaxLabel && ((mask_ >> (label - 1)) & 1U) != 0;
    }
    constexpr bool contains(LabelSet other) const { return (other.mask_ & ~mask_) == 0; }

    /// Smallest / largest label; 0 for the empty set.
    constexpr int min_label() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
    constexpr int max_label() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

    /// Number of members strictly greater than `label`.
    constexpr int count_above(int label) const {
        if (label >= 64) return 0;
        if (label <= 0) return size();
        return std::popcount(mask_ >> label);
    }
    /// Number of members strictly between `lo` and `hi`.
    constexpr int count_between(int lo, int hi) const {
        return hi <= lo + 1 ? 0 : count_above(lo) - count_above(hi - 1);
    }

    constexpr LabelSet with(int label) const { return LabelSet(mask_ | bit(label)); }
    constexpr LabelSet without(int label) const { return LabelSet(mask_ & ~bit(label)); }
    constexpr LabelSet operator|(LabelSet o) const { return LabelSet(mask_ | o.mask_); }
    constexpr LabelSet operator&(LabelSet o) const { return LabelSet(mask_ & o.mask_); }
    constexpr LabelSet minus(LabelSet o) const { return LabelSet(mask_ & ~o.mask_); }

    std::vector<int> labels() const;

    /// `{1,2,3}`
    std::string to_text() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) fn(std::countr_zero(m) + 1);
    }

    friend constexpr bool operator==(LabelSet a, LabelSet b) { return a.mask_ == b.mask_; }

    /// Lexicographic comparison of the ascending label sequences.
    friend constexpr bool operator<(LabelSet a, LabelSet b) {
        const std::uint64_t diff = a.mask_ ^ b.mask_;
        if (diff == 0) return false;
        const std::uint64_t low = diff & (~diff + 1);
        const std::uint64_t above = ~((low << 1) - 1);
        // The owner of `low` is smaller unless the other set stops there (is a prefix).
        if ((a.mask_ & low) != 0) return (b.mask_ & above) != 0;
        return (a.mask_ & above) == 0;
    }
    friend constexpr bool operator>(LabelSet a, LabelSet b) { return b < a; }
    friend constexpr bool operator<=(LabelSet a, LabelSet b) { return !(b < a); }
    friend constexpr bool operator>=(LabelSet a, LabelSet b) { return !(a < b); }

private:
    static constexpr std::uint64_t bit(int label) { return std::uint64_t{1} << (label - 1); }

    std::uint64_t mask_ = 0;
};

using Simplex = LabelSet;

/// Calls `fn(LabelSet)` for every k-subset of 1..n, in colexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n || n > kMaxLabel) return;
    if (k == 0) {
        fn(LabelSet{});
        return;
    }
    const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
    std::uint64_t m = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    while (true) {
        fn(LabelSet(m));
        // Gosper's hack.
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        if (r == 0 || (limit != 0 && r >= limit)) break;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

} // namespace cyclone
