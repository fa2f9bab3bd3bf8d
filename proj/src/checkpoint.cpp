#include "cyclone/errors.hpp"
#include "cyclone/parallel.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cyclone {

namespace {

constexpr std::string_view kMagic = "cyclone-ckpt v1";

[[noreturn]] void bad(std::size_t line, const std::string& what) {
    throw CheckpointFormatError("checkpoint line " + std::to_string(line) + ": " + what);
}

// Reads `key=<unsigned>` from the front of `rest`, consuming it and one trailing space.
std::uint64_t take_field(std::string_view& rest, std::string_view key, std::size_t line) {
    if (rest.substr(0, key.size()) != key || rest.size() <= key.size() || rest[key.size()] != '=') {
        bad(line, "expected '" + std::string(key) + "='");
    }
    rest.remove_prefix(key.size() + 1);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc{} || ptr == rest.data()) bad(line, "bad value for '" + std::string(key) + "'");
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty()) {
        if (rest.front() != ' ') bad(line, "expected a space after '" + std::string(key) + "'");
        rest.remove_prefix(1);
    }
    return value;
}

BigInt take_big_field(std::string_view& rest, std::string_view key, std::size_t line) {
    if (rest.substr(0, key.size()) != key || rest.size() <= key.size() || rest[key.size()] != '=') {
        bad(line, "expected '" + std::string(key) + "='");
    }
    rest.remove_prefix(key.size() + 1);
    std::size_t len = 0;
    while (len < rest.size() && rest[len] >= '0' && rest[len] <= '9') ++len;
    if (len == 0) bad(line, "bad value for '" + std::string(key) + "'");
    BigInt value(std::string(rest.substr(0, len)));
    rest.remove_prefix(len);
    if (!rest.empty()) {
        if (rest.front() != ' ') bad(line, "expected a space after '" + std::string(key) + "'");
        rest.remove_prefix(1);
    }
    return value;
}

} // namespace

std::string format_checkpoint(const Checkpoint& ckpt) {
    std::ostringstream out;
    out << kMagic << " n=" << ckpt.n << " d=" << ckpt.d << '\n';
    for (const WorkUnit& unit : ckpt.pending) {
        out << "unit budget=" << unit.budget << " depth=" << unit.depth << ' ' << unit.node.to_text() << '\n';
    }
    out << "counts triangulations=" << ckpt.partial.triangulation_count.str()
        << " tree_edges=" << ckpt.partial.tree_edge_count << " max_depth=" << ckpt.partial.max_tree_depth
        << " flip_edges=" << ckpt.partial.flip_edge_count << " units=" << ckpt.pending.size() << '\n';
    out << "end\n";
    return out.str();
}

Checkpoint parse_checkpoint(const std::string& text, const PointConfig* expected) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    Checkpoint ckpt;

    if (!std::getline(in, raw)) bad(1, "empty file");
    ++line_no;
    {
        std::string_view rest(raw);
        if (rest.substr(0, kMagic.size()) != kMagic || rest.size() <= kMagic.size() || rest[kMagic.size()] != ' ') {
            bad(line_no, "not a cyclone checkpoint (expected '" + std::string(kMagic) + "')");
        }
        rest.remove_prefix(kMagic.size() + 1);
        ckpt.n = static_cast<int>(take_field(rest, "n", line_no));
        ckpt.d = static_cast<int>(take_field(rest, "d", line_no));
        if (!rest.empty()) bad(line_no, "trailing characters in header");
    }
    if (expected != nullptr && (ckpt.n != expected->n() || ckpt.d != expected->d())) {
        throw CheckpointFormatError("checkpoint is for C(" + std::to_string(ckpt.n) + "," + std::to_string(ckpt.d) +
                                    "), expected C(" + std::to_string(expected->n()) + "," +
                                    std::to_string(expected->d()) + ")");
    }
    PointConfig cfg = [&] {
        try {
            return make_config(ckpt.n, ckpt.d);
        } catch (const DimensionError& e) {
            bad(1, e.what());
        }
    }();

    bool saw_counts = false;
    bool saw_end = false;
    std::uint64_t declared_units = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view rest(raw);
        if (saw_end) bad(line_no, "content after 'end'");
        if (rest == "end") {
            if (!saw_counts) bad(line_no, "'end' before 'counts'");
            saw_end = true;
        } else if (rest.substr(0, 5) == "unit ") {
            if (saw_counts) bad(line_no, "unit after 'counts'");
            rest.remove_prefix(5);
            WorkUnit unit;
            unit.budget = take_field(rest, "budget", line_no);
            unit.depth = take_field(rest, "depth", line_no);
            if (unit.budget == 0) bad(line_no, "budget must be positive");
            try {
                unit.node = parse_triangulation(rest);
            } catch (const ParseError& e) {
                bad(line_no, e.what());
            }
            if (unit.node.to_text() != rest) bad(line_no, "triangulation is not in canonical form");
            for (Simplex cell : unit.node.cells()) {
                if (cell.size() != cfg.d() + 1 || !cfg.all_labels().contains(cell)) {
                    bad(line_no, "cell " + cell.to_text() + " does not fit C(" + std::to_string(cfg.n()) + "," +
                                     std::to_string(cfg.d()) + ")");
                }
            }
            ckpt.pending.push_back(std::move(unit));
        } else if (rest.substr(0, 7) == "counts ") {
            if (saw_counts) bad(line_no, "duplicate 'counts'");
            saw_counts = true;
            rest.remove_prefix(7);
            ckpt.partial.triangulation_count = take_big_field(rest, "triangulations", line_no);
            ckpt.partial.tree_edge_count = take_field(rest, "tree_edges", line_no);
            ckpt.partial.max_tree_depth = take_field(rest, "max_depth", line_no);
            ckpt.partial.flip_edge_count = take_field(rest, "flip_edges", line_no);
            declared_units = take_field(rest, "units", line_no);
            if (!rest.empty()) bad(line_no, "trailing characters in counts");
        } else {
            bad(line_no, "unrecognised line");
        }
    }
    if (!saw_end) bad(line_no, "missing 'end' (truncated file?)");
    if (declared_units != ckpt.pending.size()) {
        bad(line_no, "counts declare " + std::to_string(declared_units) + " units but " +
                         std::to_string(ckpt.pending.size()) + " are listed");
    }
    return ckpt;
}

void checkpoint_save(const Checkpoint& ckpt, const std::filesystem::path& path) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CheckpointFormatError("cannot write checkpoint " + tmp.string());
        out << format_checkpoint(ckpt);
        if (!out.flush()) throw CheckpointFormatError("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint checkpoint_load(const std::filesystem::path& path, const PointConfig* expected) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointFormatError("cannot read checkpoint " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_checkpoint(buffer.str(), expected);
}

} // namespace cyclone
