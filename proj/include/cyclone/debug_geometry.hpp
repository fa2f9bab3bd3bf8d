#pragma once

// Explicit moment-curve coordinates, used only to cross-check the label-only
// geometry of the main pipeline.

#include "cyclone/bigint.hpp"
#include "cyclone/config.hpp"
#include "cyclone/label_set.hpp"

#include <vector>

namespace cyclone::debug {

using Matrix = std::vector<std::vector<BigInt>>;

/// (t, t^2, ..., t^d) with t = label + shift.
std::vector<BigInt> moment_point(int label, int d, int shift = 0);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(Matrix m);

/// |det| of the rows (1, point) over the simplex's vertices.
BigInt simplex_volume(const PointConfig& cfg, Simplex s, int shift = 0);

/// Sign of det of the rows (1, point) for d+1 labels in the given order.
int orientation(const PointConfig& cfg, const std::vector<int>& labels, int shift = 0);

/// True iff the hyperplane through the d points of `face` has every other
/// point strictly on one side.
bool is_hull_facet(const PointConfig& cfg, LabelSet face, int shift = 0);

} // namespace cyclone::debug
