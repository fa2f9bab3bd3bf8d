#include "cyclone/report.hpp"

#include "cyclone/enumeration.hpp"
#include "cyclone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cyclone {

CountLedger CountLedger::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

CountLedger CountLedger::parse(const std::string& text) {
    CountLedger ledger;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        std::istringstream fields(line);
        LedgerRow row;
        std::string count;
        std::string extra;
        if (!(fields >> row.c >> row.d >> count >> row.wall_seconds >> row.mode >> row.workers >> row.budget) ||
            (fields >> extra) || count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit) ||
            (row.mode != "serial" && row.mode != "parallel")) {
            throw ParseError("ledger line " + std::to_string(line_no) + ": expected 'c d count time mode workers budget'");
        }
        row.count = BigInt(count);
        ledger.upsert(std::move(row));
    }
    return ledger;
}

std::string CountLedger::to_text() const {
    std::ostringstream out;
    out << "# c d count time mode workers budget\n";
    for (const auto& row : rows_) {
        out << row.c << ' ' << row.d << ' ' << row.count.str() << ' ' << std::fixed << std::setprecision(3)
            << row.wall_seconds << ' ' << row.mode << ' ' << row.workers << ' ' << row.budget << '\n';
    }
    return out.str();
}

void CountLedger::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write ledger " + path.string());
    out << to_text();
}

void CountLedger::upsert(LedgerRow row) {
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const LedgerRow& r) { return r.c == row.c && r.d == row.d; });
    if (it != rows_.end()) *it = std::move(row);
    else rows_.push_back(std::move(row));
}

const LedgerRow* CountLedger::find(int c, int d) const {
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const LedgerRow& r) { return r.c == c && r.d == d; });
    return it == rows_.end() ? nullptr : &*it;
}

std::string round_half_even(const BigInt& num, const BigInt& den, int places) {
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const bool negative = num < 0;
    const BigInt scaled = (negative ? BigInt(-num) : num) * scale;
    BigInt quotient = scaled / den;
    const BigInt twice_remainder = (scaled % den) * 2;
    if (twice_remainder > den || (twice_remainder == den && quotient % 2 != 0)) ++quotient;

    std::string digits = quotient.str();
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
    if (negative && quotient != 0) out.insert(0, "-");
    return out;
}

RatioRow make_ratio_row(int n, std::optional<BigInt> count_codim5, std::optional<BigInt> count_d2) {
    RatioRow row;
    row.n = n;
    row.count_codim5 = std::move(count_codim5);
    row.count_d2 = std::move(count_d2);
    if (!row.skipped()) {
        const BigInt g = boost::multiprecision::gcd(*row.count_codim5, *row.count_d2);
        const BigInt p = *row.count_codim5 / g;
        const BigInt q = *row.count_d2 / g;
        row.exact = q == 1 ? p.str() : p.str() + "/" + q.str();
        row.decimal = round_half_even(*row.count_codim5, *row.count_d2, 3);
    }
    return row;
}

std::string RatioReport::to_text() const {
    std::ostringstream out;
    out << "n\tcodim5\td2\tratio\tdecimal\n";
    for (const auto& row : rows) {
        out << row.n << '\t';
        if (row.skipped()) {
            out << (row.count_codim5 ? row.count_codim5->str() : "-") << '\t'
                << (row.count_d2 ? row.count_d2->str() : "-") << "\t-\tskipped\n";
        } else {
            out << row.count_codim5->str() << '\t' << row.count_d2->str() << '\t' << row.exact << '\t' << row.decimal
                << '\n';
        }
    }
    return out.str();
}

RatioReport compute_ratios(int max_n, std::uint64_t node_limit) {
    if (max_n < 7) throw std::invalid_argument("--max-n must be at least 7");
    auto count = [&](int n, int d) -> std::optional<BigInt> {
        try {
            SerialOptions options;
            options.node_limit = node_limit;
            return enumerate_serial(make_config(n, d), {}, options).triangulation_count;
        } catch (const CapacityError&) {
            return std::nullopt;
        }
    };
    RatioReport report;
    // Both series grow with n, so once one exceeds the limit it stays skipped.
    bool planar_fits = true;
    bool codim5_fits = true;
    for (int n = 7; n <= max_n; ++n) {
        std::optional<BigInt> planar = planar_fits ? count(n, 2) : std::nullopt;
        std::optional<BigInt> codim5 = n - 5 == 2 ? planar : (codim5_fits ? count(n, n - 5) : std::nullopt);
        planar_fits = planar.has_value();
        codim5_fits = codim5.has_value();
        report.rows.push_back(make_ratio_row(n, std::move(codim5), std::move(planar)));
    }
    return report;
}

} // namespace cyclone
