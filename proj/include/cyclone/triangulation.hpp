#pragma once

#include "cyclone/bigint.hpp"
#include "cyclone/config.hpp"
#include "cyclone/label_set.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cyclone {

struct GkzVector;

/// A set of full-dimensional cells, kept sorted in canonical (lexicographic) order.
///
/// Values are immutable once built. The GKZ cache is filled at most once; fill it
/// before handing the value to other threads.
class Triangulation {
public:
    Triangulation() = default;
    /// Sorts and deduplicates `cells`.
    explicit Triangulation(std::vector<Simplex> cells);

    /// Wraps cells that are already sorted and unique.
    static Triangulation from_sorted(std::vector<Simplex> cells);

    const std::vector<Simplex>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool contains(Simplex s) const;
    bool contains_all(const std::vector<Simplex>& cells) const;

    /// Canonical text `{{1,2,3},{1,3,4}}`.
    std::string to_text() const;

    const GkzVector* cached_gkz() const { return gkz_.get(); }
    void set_cached_gkz(std::shared_ptr<const GkzVector> gkz) const { gkz_ = std::move(gkz); }

    friend bool operator==(const Triangulation& a, const Triangulation& b) { return a.cells_ == b.cells_; }
    friend bool operator<(const Triangulation& a, const Triangulation& b) { return a.cells_ < b.cells_; }

private:
    std::vector<Simplex> cells_;
    mutable std::shared_ptr<const GkzVector> gkz_;
};

/// Parses the canonical text form. Labels and cells may appear in any order;
/// the result is canonicalized. Throws ParseError.
Triangulation parse_triangulation(std::string_view text);

/// A (d+2)-subset of labels together with its two triangulations.
struct Circuit {
    LabelSet support;
    std::vector<Simplex> lower_cells;
    std::vector<Simplex> upper_cells;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Builds L(S) and U(S): the cell omitting a support label lies in the lower
/// triangulation iff an even number of support labels exceed it.
/// Throws InvalidCircuitError unless `support` is a (d+2)-subset of 1..n.
Circuit circuit_of(const PointConfig& cfg, LabelSet support);

/// True iff the cell `support \ {removed}` lies in the lower side of the circuit.
inline bool omitted_label_is_lower(LabelSet support, int removed) {
    return support.count_above(removed) % 2 == 0;
}

enum class FlipDirection { up, down };

inline FlipDirection opposite(FlipDirection dir) {
    return dir == FlipDirection::up ? FlipDirection::down : FlipDirection::up;
}

const char* to_string(FlipDirection dir);

/// An up-flip replaces the lower cells of the circuit by the upper ones.
struct Flip {
    Circuit circuit;
    FlipDirection direction = FlipDirection::up;

    const std::vector<Simplex>& source_cells() const {
        return direction == FlipDirection::up ? circuit.lower_cells : circuit.upper_cells;
    }
    const std::vector<Simplex>& target_cells() const {
        return direction == FlipDirection::up ? circuit.upper_cells : circuit.lower_cells;
    }
    Flip reversed() const { return Flip{circuit, opposite(direction)}; }

    friend bool operator==(const Flip&, const Flip&) = default;
};

/// Cells whose gaps are all even / all odd.
Triangulation lowest_triangulation(const PointConfig& cfg);
Triangulation highest_triangulation(const PointConfig& cfg);

/// Every available flip of `t`, ordered by circuit support. Scans all
/// (d+2)-subsets; one side of a circuit being present is sufficient because
/// circuits of points on the moment curve are full-dimensional.
std::vector<Flip> find_flips(const PointConfig& cfg, const Triangulation& t);

/// Throws FlipPreconditionError if the flip's source cells are not all in `t`.
Triangulation apply_flip(const Triangulation& t, const Flip& flip);

struct Violation {
    enum class Kind { volume, boundary_ridge, interior_ridge, invalid_cell };

    Kind kind;
    LabelSet ridge;     // empty for volume violations
    int occurrences = 0;
    std::string message;
};

struct ValidityReport {
    BigInt volume_sum;
    BigInt expected_volume;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Necessary-condition audit: the cell volumes must add up to the total
/// volume, every boundary ridge must lie in exactly one cell and every
/// interior ridge in exactly two.
ValidityReport check_triangulation(const PointConfig& cfg, const std::vector<Simplex>& cells);

} // namespace cyclone
