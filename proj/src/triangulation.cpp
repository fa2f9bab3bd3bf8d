#include "cyclone/triangulation.hpp"

#include "cyclone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace cyclone {

Triangulation::Triangulation(std::vector<Simplex> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

Triangulation Triangulation::from_sorted(std::vector<Simplex> cells) {
    Triangulation t;
    t.cells_ = std::move(cells);
    return t;
}

bool Triangulation::contains(Simplex s) const { return std::binary_search(cells_.begin(), cells_.end(), s); }

bool Triangulation::contains_all(const std::vector<Simplex>& cells) const {
    return std::all_of(cells.begin(), cells.end(), [&](Simplex s) { return contains(s); });
}

std::string Triangulation::to_text() const {
    std::string out = "{";
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i != 0) out += ',';
        out += cells_[i].to_text();
    }
    out += '}';
    return out;
}

namespace {

class TextParser {
public:
    explicit TextParser(std::string_view text) : text_(text) {}

    Triangulation parse() {
        std::vector<Simplex> cells;
        expect('{');
        if (peek() == '}') {
            ++pos_;
        } else {
            while (true) {
                cells.push_back(parse_cell());
                const char c = next();
                if (c == '}') break;
                if (c != ',') fail("expected ',' or '}'");
            }
        }
        if (peek() != '\0') fail("trailing characters");
        std::sort(cells.begin(), cells.end());
        const auto dup = std::adjacent_find(cells.begin(), cells.end());
        if (dup != cells.end()) fail("duplicate cell " + dup->to_text());
        return Triangulation::from_sorted(std::move(cells));
    }

private:
    Simplex parse_cell() {
        std::vector<int> labels;
        expect('{');
        if (peek() == '}') {
            ++pos_;
            return Simplex{};
        }
        while (true) {
            labels.push_back(parse_int());
            const char c = next();
            if (c == '}') break;
            if (c != ',') fail("expected ',' or '}' inside a cell");
        }
        auto set = LabelSet::from_labels(labels);
        if (!set) fail("cell has a repeated label or a label outside 1.." + std::to_string(kMaxLabel));
        return *set;
    }

    int parse_int() {
        skip_space();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) fail("label too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a label");
        return static_cast<int>(value);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char next() {
        const char c = peek();
        if (c != '\0') ++pos_;
        return c;
    }
    void expect(char want) {
        if (next() != want) fail(std::string("expected '") + want + "'");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at column " + std::to_string(pos_ + 1));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Triangulation parse_triangulation(std::string_view text) { return TextParser(text).parse(); }

const char* to_string(FlipDirection dir) { return dir == FlipDirection::up ? "up" : "down"; }

Circuit circuit_of(const PointConfig& cfg, LabelSet support) {
    if (support.size() != cfg.d() + 2 || !cfg.all_labels().contains(support)) {
        throw InvalidCircuitError("circuit support " + support.to_text() + " must be a " +
                                  std::to_string(cfg.d() + 2) + "-subset of 1.." + std::to_string(cfg.n()));
    }
    Circuit circuit{support, {}, {}};
    support.for_each([&](int removed) {
        auto& side = omitted_label_is_lower(support, removed) ? circuit.lower_cells : circuit.upper_cells;
        side.push_back(support.without(removed));
    });
    std::sort(circuit.lower_cells.begin(), circuit.lower_cells.end());
    std::sort(circuit.upper_cells.begin(), circuit.upper_cells.end());
    return circuit;
}

Triangulation lowest_triangulation(const PointConfig& cfg) {
    return Triangulation::from_sorted(cells_with_gap_parity(cfg, Parity::even));
}

Triangulation highest_triangulation(const PointConfig& cfg) {
    return Triangulation::from_sorted(cells_with_gap_parity(cfg, Parity::odd));
}

std::vector<Flip> find_flips(const PointConfig& cfg, const Triangulation& t) {
    std::vector<LabelSet> supports;
    for_each_subset(cfg.n(), cfg.d() + 2, [&](LabelSet s) { supports.push_back(s); });
    std::sort(supports.begin(), supports.end());

    std::vector<Flip> flips;
    for (LabelSet support : supports) {
        bool lower_present = true;
        bool upper_present = true;
        support.for_each([&](int removed) {
            bool& present = omitted_label_is_lower(support, removed) ? lower_present : upper_present;
            if (present && !t.contains(support.without(removed))) present = false;
        });
        if (lower_present) {
            flips.push_back(Flip{circuit_of(cfg, support), FlipDirection::up});
        } else if (upper_present) {
            flips.push_back(Flip{circuit_of(cfg, support), FlipDirection::down});
        }
    }
    return flips;
}

Triangulation apply_flip(const Triangulation& t, const Flip& flip) {
    if (!t.contains_all(flip.source_cells())) {
        throw FlipPreconditionError(std::string(to_string(flip.direction)) + "-flip on " +
                                    flip.circuit.support.to_text() + " needs cells missing from " + t.to_text());
    }
    std::vector<Simplex> kept;
    kept.reserve(t.size() + flip.target_cells().size());
    const auto& source = flip.source_cells();
    std::set_difference(t.cells().begin(), t.cells().end(), source.begin(), source.end(), std::back_inserter(kept));
    std::vector<Simplex> merged;
    merged.reserve(kept.size() + flip.target_cells().size());
    std::merge(kept.begin(), kept.end(), flip.target_cells().begin(), flip.target_cells().end(),
               std::back_inserter(merged));
    return Triangulation::from_sorted(std::move(merged));
}

ValidityReport check_triangulation(const PointConfig& cfg, const std::vector<Simplex>& cells) {
    ValidityReport report;
    report.expected_volume = total_volume(cfg).value;

    std::unordered_map<std::uint64_t, int> ridge_count;
    ridge_count.reserve(cells.size() * static_cast<std::size_t>(cfg.d() + 1));
    for (Simplex cell : cells) {
        if (cell.size() != cfg.d() + 1 || !cfg.all_labels().contains(cell)) {
            report.violations.push_back({Violation::Kind::invalid_cell, cell, 0,
                                         "cell " + cell.to_text() + " is not a " + std::to_string(cfg.d()) +
                                             "-simplex of C(" + std::to_string(cfg.n()) + "," +
                                             std::to_string(cfg.d()) + ")"});
            continue;
        }
        report.volume_sum += normalized_volume(cfg, cell).value;
        cell.for_each([&](int label) { ++ridge_count[cell.without(label).mask()]; });
    }
    if (report.volume_sum != report.expected_volume) {
        report.violations.push_back({Violation::Kind::volume, LabelSet{}, 0,
                                     "volume " + report.volume_sum.str() + " of " + report.expected_volume.str()});
    }

    std::vector<std::pair<LabelSet, int>> ridges;
    ridges.reserve(ridge_count.size());
    for (const auto& [mask, count] : ridge_count) ridges.emplace_back(LabelSet(mask), count);
    std::sort(ridges.begin(), ridges.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [ridge, count] : ridges) {
        if (is_boundary_facet(cfg, ridge)) {
            if (count != 1) {
                report.violations.push_back({Violation::Kind::boundary_ridge, ridge, count,
                                             "boundary ridge " + ridge.to_text() + " occurs in " +
                                                 std::to_string(count) + " cells"});
            }
        } else if (count != 2) {
            report.violations.push_back({Violation::Kind::interior_ridge, ridge, count,
                                         "interior ridge " + ridge.to_text() + " occurs in " + std::to_string(count) +
                                             (count == 1 ? " cell" : " cells")});
        }
    }
    return report;
}

} // namespace cyclone
