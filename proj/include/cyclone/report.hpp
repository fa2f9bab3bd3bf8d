#pragma once

#include "cyclone/bigint.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cyclone {

/// One line of the count ledger: `c d count time mode workers budget`.
struct LedgerRow {
    int c = 0;
    int d = 0;
    BigInt count = 0;
    double wall_seconds = 0.0;
    std::string mode = "serial";
    unsigned workers = 1;
    std::uint64_t budget = 0;

    friend bool operator==(const LedgerRow&, const LedgerRow&) = default;
};

/// Plain-text record of counts, one row per (c,d).
class CountLedger {
public:
    /// A missing file is an empty ledger. Throws ParseError on malformed rows.
    static CountLedger load(const std::filesystem::path& path);
    static CountLedger parse(const std::string& text);

    void save(const std::filesystem::path& path) const;
    std::string to_text() const;

    /// Replaces the row with the same (c,d), else appends.
    void upsert(LedgerRow row);

    const std::vector<LedgerRow>& rows() const { return rows_; }
    const LedgerRow* find(int c, int d) const;

private:
    std::vector<LedgerRow> rows_;
};

/// num/den rounded to `places` decimals, ties to even. den must be positive.
std::string round_half_even(const BigInt& num, const BigInt& den, int places);

/// One row of the codimension-5 over planar ratio series:
/// #triangulations C(n, n-5) / #triangulations C(n, 2).
struct RatioRow {
    int n = 0;
    std::optional<BigInt> count_codim5;
    std::optional<BigInt> count_d2;
    /// Reduced fraction `p/q` (or `p` when q = 1); empty when skipped.
    std::string exact;
    /// Three decimals, round-half-even; empty when skipped.
    std::string decimal;

    bool skipped() const { return !count_codim5 || !count_d2; }
};

struct RatioReport {
    std::vector<RatioRow> rows;

    /// Header plus one row per n; skipped rows read `skipped`.
    std::string to_text() const;
};

/// Rows whose enumeration exceeds `node_limit` are skipped.
RatioReport compute_ratios(int max_n, std::uint64_t node_limit);

RatioRow make_ratio_row(int n, std::optional<BigInt> count_codim5, std::optional<BigInt> count_d2);

} // namespace cyclone
