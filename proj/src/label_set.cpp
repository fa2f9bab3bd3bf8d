#include "cyclone/label_set.hpp"

namespace cyclone {

std::optional<LabelSet> LabelSet::from_labels(std::span<const int> labels) {
    std::uint64_t mask = 0;
    for (int label : labels) {
        if (label < 1 || label > kMaxLabel) return std::nullopt;
        const std::uint64_t b = std::uint64_t{1} << (label - 1);
        if ((mask & b) != 0) return std::nullopt;
        mask |= b;
    }
    return LabelSet(mask);
}

LabelSet LabelSet::interval(int first, int last) {
    LabelSet s;
    for (int i = first; i <= last; ++i) s = s.with(i);
    return s;
}

std::vector<int> LabelSet::labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int label) { out.push_back(label); });
    return out;
}

std::string LabelSet::to_text() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int label) {
        if (!first) out += ',';
        out += std::to_string(label);
        first = false;
    });
    out += '}';
    return out;
}

} // namespace cyclone
