#include "cyclone/flip_table.hpp"

#include "cyclone/errors.hpp"

#include <numeric>

namespace cyclone {

namespace {

// Lexicographic comparison of two deltas over labels 1..n, each given sparsely
// on its support (ascending labels); labels outside a support count as zero.
std::strong_ordering compare_sparse(LabelSet sa, const BigInt* a, LabelSet sb, const BigInt* b) {
    const LabelSet both = sa | sb;
    std::size_t ia = 0;
    std::size_t ib = 0;
    std::strong_ordering result = std::strong_ordering::equal;
    both.for_each([&](int label) {
        if (result != std::strong_ordering::equal) return;
        static const BigInt zero = 0;
        const BigInt& x = sa.contains(label) ? a[ia++] : zero;
        const BigInt& y = sb.contains(label) ? b[ib++] : zero;
        if (x < y) result = std::strong_ordering::less;
        else if (x > y) result = std::strong_ordering::greater;
    });
    return result;
}

} // namespace

FlipTable::FlipTable(const PointConfig& cfg, std::size_t max_circuits)
    : cfg_(cfg), improving_(cfg.d() % 2 == 0 ? FlipDirection::down : FlipDirection::up) {
    const int n = cfg.n();
    const int k = cfg.d() + 2;

    std::vector<std::vector<std::uint64_t>> binom(static_cast<std::size_t>(n + 1),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(k + 1), 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= std::min(i, k); ++j) {
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
            if (binom[i][j] > max_circuits) binom[i][j] = max_circuits + 1;
        }
    }
    const std::uint64_t count = k <= n ? binom[n][k] : 0;
    if (count > max_circuits) {
        throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(cfg.d()) + ") has more than " +
                            std::to_string(max_circuits) + " circuits");
    }
    binom_.assign(binom.size(), std::vector<std::uint32_t>(static_cast<std::size_t>(k + 1)));
    for (std::size_t i = 0; i < binom.size(); ++i) {
        for (std::size_t j = 0; j < binom[i].size(); ++j) binom_[i][j] = static_cast<std::uint32_t>(binom[i][j]);
    }

    supports_.reserve(count);
    for_each_subset(n, k, [&](LabelSet s) { supports_.push_back(s); });

    const auto width = static_cast<std::size_t>(k);
    up_delta_.assign(supports_.size() * width, BigInt(0));
    for (std::size_t c = 0; c < supports_.size(); ++c) {
        const LabelSet s = supports_[c];
        const std::vector<int> labels = s.labels();
        BigInt lower_volume = 0;
        BigInt upper_volume = 0;
        BigInt* delta = &up_delta_[c * width];
        for (int removed : labels) {
            const LabelSet cell = s.without(removed);
            const BigInt volume = normalized_volume(cfg, cell).value;
            const bool lower = omitted_label_is_lower(s, removed);
            (lower ? lower_volume : upper_volume) += volume;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (labels[i] == removed) continue;
                if (lower) delta[i] -= volume;
                else delta[i] += volume;
            }
        }
        if (lower_volume != upper_volume) {
            throw ConsistencyError("circuit " + s.to_text() + " sides have volumes " + lower_volume.str() + " and " +
                                   upper_volume.str());
        }
        // Up-flips must move the GKZ vector down (d even) or up (d odd); the
        // first support label decides, and it is never zero.
        const int sign = delta[0].sign();
        const int want = cfg.d() % 2 == 0 ? -1 : 1;
        if (sign != want) {
            throw ConsistencyError("up-flip on circuit " + s.to_text() + " has GKZ change of sign " +
                                   std::to_string(sign) + " at its first label");
        }
    }

    // Improving gain = up delta when d is odd, its negation when d is even.
    std::vector<BigInt> gain = up_delta_;
    if (improving_ == FlipDirection::down) {
        for (auto& g : gain) g = -g;
    }
    std::vector<std::uint32_t> order(supports_.size());
    std::iota(order.begin(), order.end(), 0U);
    auto compare = [&](std::uint32_t a, std::uint32_t b) {
        return compare_sparse(supports_[a], &gain[a * width], supports_[b], &gain[b * width]);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return compare(a, b) == std::strong_ordering::greater; });
    rank_.assign(supports_.size(), 0);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const bool tied = compare(order[i - 1], order[i]) == std::strong_ordering::equal;
        rank_[order[i]] = tied ? rank_[order[i - 1]] : static_cast<std::uint32_t>(i);
    }
}

std::uint32_t FlipTable::index_of(LabelSet support) const {
    std::uint32_t index = 0;
    std::size_t i = 1;
    support.for_each([&](int label) { index += binom_[static_cast<std::size_t>(label - 1)][i++]; });
    return index;
}

Circuit FlipTable::circuit(std::uint32_t index) const { return circuit_of(cfg_, supports_[index]); }

Flip FlipTable::make_flip(FlipRef ref) const { return Flip{circuit(ref.circuit), ref.direction}; }

std::vector<BigInt> FlipTable::sparse_delta(FlipRef ref) const {
    const auto width = static_cast<std::size_t>(cfg_.d() + 2);
    std::vector<BigInt> out(up_delta_.begin() + static_cast<std::ptrdiff_t>(ref.circuit * width),
                            up_delta_.begin() + static_cast<std::ptrdiff_t>((ref.circuit + 1) * width));
    if (ref.direction == FlipDirection::down) {
        for (auto& e : out) e = -e;
    }
    return out;
}

void FlipTable::add_delta(std::vector<BigInt>& gkz_entries, FlipRef ref) const {
    const auto width = static_cast<std::size_t>(cfg_.d() + 2);
    const BigInt* delta = &up_delta_[ref.circuit * width];
    std::size_t i = 0;
    supports_[ref.circuit].for_each([&](int label) {
        auto& entry = gkz_entries[static_cast<std::size_t>(label - 1)];
        if (ref.direction == FlipDirection::up) entry += delta[i];
        else entry -= delta[i];
        ++i;
    });
}

std::vector<FlipRef> FlipTable::flips_of(const std::vector<Simplex>& cells) const {
    std::vector<FlipRef> flips;
    for_each_flip(cells, [&](FlipRef f) { flips.push_back(f); });
    std::sort(flips.begin(), flips.end(),
              [&](const FlipRef& a, const FlipRef& b) { return supports_[a.circuit] < supports_[b.circuit]; });
    return flips;
}

std::vector<Simplex> FlipTable::apply(const std::vector<Simplex>& cells, FlipRef ref) const {
    const LabelSet s = supports_[ref.circuit];
    // Source cells omit labels on the source side; target cells the others.
    const bool source_is_lower = ref.direction == FlipDirection::up;
    Simplex source[kMaxLabel];
    Simplex target[kMaxLabel];
    std::size_t ns = 0;
    std::size_t nt = 0;
    s.for_each([&](int removed) {
        const bool lower = omitted_label_is_lower(s, removed);
        if (lower == source_is_lower) source[ns++] = s.without(removed);
        else target[nt++] = s.without(removed);
    });
    std::sort(source, source + ns);
    std::sort(target, target + nt);

    std::vector<Simplex> out;
    out.reserve(cells.size() + nt - ns);
    std::size_t it = 0;
    std::size_t is = 0;
    for (Simplex cell : cells) {
        if (is < ns && cell == source[is]) {
            ++is;
            continue;
        }
        while (it < nt && target[it] < cell) out.push_back(target[it++]);
        out.push_back(cell);
    }
    while (it < nt) out.push_back(target[it++]);
    if (is != ns) throw FlipPreconditionError("flip on " + s.to_text() + " is missing source cells");
    return out;
}

} // namespace cyclone
