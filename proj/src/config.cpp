#include "cyclone/config.hpp"

#include "cyclone/errors.hpp"

#include <algorithm>
#include <string>

namespace cyclone {

std::vector<int> PointConfig::params() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = i + 1;
    return out;
}

PointConfig make_config(int n, int d) {
    if (d < 1) throw DimensionError("dimension d must be at least 1, got " + std::to_string(d));
    if (n <= d) {
        throw DimensionError("C(n,d) needs n > d, got n=" + std::to_string(n) +
                             " d=" + std::to_string(d));
    }
    if (n > kMaxLabel) {
        throw DimensionError("at most " + std::to_string(kMaxLabel) + " points are supported, got n=" +
                             std::to_string(n));
    }
    return PointConfig(n, d);
}

void require_simplex(const PointConfig& cfg, Simplex s) {
    if (s.size() != cfg.d() + 1) {
        throw InvalidSimplexError("simplex " + s.to_text() + " must have " + std::to_string(cfg.d() + 1) +
                                  " labels");
    }
    if (!cfg.all_labels().contains(s)) {
        throw InvalidSimplexError("simplex " + s.to_text() + " has labels outside 1.." +
                                  std::to_string(cfg.n()));
    }
}

Volume normalized_volume(const PointConfig& cfg, Simplex s) {
    require_simplex(cfg, s);
    const std::vector<int> labels = s.labels();
    BigInt product = 1;
    // Small factors are batched in 64 bits before touching the big integer.
    std::uint64_t batch = 1;
    for (std::size_t l = 1; l < labels.size(); ++l) {
        for (std::size_t k = 0; k < l; ++k) {
            const auto factor = static_cast<std::uint64_t>(cfg.param(labels[l]) - cfg.param(labels[k]));
            if (batch > (std::uint64_t{1} << 56) / 64) {
                product *= batch;
                batch = 1;
            }
            batch *= factor;
        }
    }
    product *= batch;
    return Volume{std::move(product)};
}

Volume total_volume(const PointConfig& cfg) {
    BigInt sum = 0;
    for (Simplex cell : cells_with_gap_parity(cfg, Parity::even)) sum += normalized_volume(cfg, cell).value;
    return Volume{std::move(sum)};
}

bool is_boundary_facet(const PointConfig& cfg, LabelSet f) {
    if (f.size() != cfg.d() || !cfg.all_labels().contains(f)) {
        throw InvalidFaceError("face " + f.to_text() + " must be a " + std::to_string(cfg.d()) +
                               "-subset of 1.." + std::to_string(cfg.n()));
    }
    // Checking consecutive non-members is equivalent to checking all pairs.
    int previous_gap = 0;
    for (int label = 1; label <= cfg.n(); ++label) {
        if (f.contains(label)) continue;
        if (previous_gap != 0 && f.count_between(previous_gap, label) % 2 != 0) return false;
        previous_gap = label;
    }
    return true;
}

Parity gap_parity(LabelSet face, int gap, int label_count) {
    if (gap < 1 || gap > label_count) {
        throw InvalidGapError("gap " + std::to_string(gap) + " is outside 1.." + std::to_string(label_count));
    }
    if (face.contains(gap)) {
        throw InvalidGapError("label " + std::to_string(gap) + " is a member of " + face.to_text() +
                              ", not a gap");
    }
    return face.count_above(gap) % 2 == 0 ? Parity::even : Parity::odd;
}

bool all_gaps_have_parity(LabelSet face, int label_count, Parity parity) {
    const int want = parity == Parity::even ? 0 : 1;
    for (int label = 1; label <= label_count; ++label) {
        if (!face.contains(label) && face.count_above(label) % 2 != want) return false;
    }
    return true;
}

namespace {

// Walks labels from n downwards; a label may be skipped (made a gap) only when
// the number of members already chosen above it has the requested parity.
void collect_gap_cells(int label, int chosen, LabelSet acc, int want, int size, std::vector<Simplex>& out) {
    if (chosen == size) {
        // Everything below is a gap; each sees `size` members above it.
        if (label == 0 || size % 2 == want) out.push_back(acc);
        return;
    }
    if (label == 0 || label < size - chosen) return;
    collect_gap_cells(label - 1, chosen + 1, acc.with(label), want, size, out);
    if (chosen % 2 == want) collect_gap_cells(label - 1, chosen, acc, want, size, out);
}

} // namespace

std::vector<Simplex> cells_with_gap_parity(const PointConfig& cfg, Parity parity) {
    std::vector<Simplex> out;
    collect_gap_cells(cfg.n(), 0, LabelSet{}, parity == Parity::even ? 0 : 1, cfg.d() + 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cyclone
