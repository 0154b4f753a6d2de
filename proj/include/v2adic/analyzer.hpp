#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "v2adic/oracle.hpp"
#include "v2adic/predictor.hpp"

namespace v2adic {

/// One point of a valuation scan: the exponent n and the oracle's answer.
struct ScanRow {
    std::uint64_t n;
    Prediction valuation;
};

/// Oracle valuation of a^n - c^d for every n in [n_from, n_to], in order.
inline std::vector<ScanRow> scan(const BigNat& a, const BigNat& c, const BigNat& d,
                                 std::uint64_t n_from, std::uint64_t n_to,
                                 std::uint64_t cap = kDefaultOracleCap) {
    if (n_from > n_to)
        throw std::invalid_argument("scan: n_from must be <= n_to");
    std::vector<ScanRow> rows;
    rows.reserve(n_to - n_from + 1);
    for (std::uint64_t n = n_from; n <= n_to; ++n)
        rows.push_back({n, v2_oracle(a, n, c, d, cap)});
    return rows;
}

/// A residue class of exponents sharing one valuation level: every scanned n
/// with this valuation satisfies n = residue mod modulus (modulus = 2^s).
/// Levels whose members fit no single class are emitted with irregular = true
/// and modulus 0.
struct PeriodClass {
    std::uint64_t residue = 0;
    std::uint64_t modulus = 0;
    std::uint64_t valuation = 0;
    bool lower_bound = false; // level observed only as AtLeast(valuation)
    std::uint64_t verified_through = 0;
    bool irregular = false;
    std::vector<std::uint64_t> members; // only populated for irregular levels
};

/// Groups scan rows by valuation level and finds, per level, the smallest s
/// such that the class (r mod 2^s) contains exactly that level's exponents
/// among all scanned n. Reproduces the "r + 2^s k" rows of the paper-style
/// period tables.
inline std::vector<PeriodClass> infer_period_table(const std::vector<ScanRow>& rows) {
    if (rows.empty())
        throw std::invalid_argument("infer_period_table: empty scan");

    // key: (lower_bound, value) so Exact(v) and AtLeast(v) never merge
    std::map<std::pair<bool, std::uint64_t>, std::vector<std::uint64_t>> levels;
    for (const auto& row : rows)
        levels[{!row.valuation.is_exact(), row.valuation.value}].push_back(row.n);

    std::uint64_t max_n = 0;
    for (const auto& row : rows) max_n = std::max(max_n, row.n);

    std::vector<PeriodClass> out;
    for (const auto& [key, members] : levels) {
        PeriodClass cls;
        cls.lower_bound = key.first;
        cls.valuation = key.second;
        cls.verified_through = max_n;

        bool placed = false;
        for (std::uint64_t s = 0; (std::uint64_t(1) << s) <= 2 * max_n + 1; ++s) {
            const std::uint64_t mod = std::uint64_t(1) << s;
            const std::uint64_t r = members.front() % mod;
            bool all_congruent = std::all_of(members.begin(), members.end(),
                                             [&](std::uint64_t n) { return n % mod == r; });
            if (!all_congruent)
                break; // finer moduli cannot rejoin the members
            bool exclusive = std::none_of(rows.begin(), rows.end(), [&](const ScanRow& row) {
                return row.n % mod == r &&
                       (row.valuation.is_exact() == key.first ||
                        row.valuation.value != key.second);
            });
            if (exclusive) {
                cls.residue = r;
                cls.modulus = mod;
                placed = true;
                break;
            }
        }
        if (!placed) {
            cls.irregular = true;
            cls.members = members;
        }
        out.push_back(std::move(cls));
    }
    return out;
}

/// Valuation grid for a^n - c^(d_base^m) over n and m, plus the conjectured
/// even-n profile v2(n) + max[v2(a+1), v2(a-1)] (empty for odd n).
struct LimitProfile {
    std::vector<std::uint64_t> ms;
    std::vector<std::uint64_t> ns;
    std::vector<std::vector<Prediction>> cells; // cells[i][j]: n = ns[i], m = ms[j]
    std::vector<std::optional<std::uint64_t>> conjectured;
};

inline LimitProfile limit_profile(const BigNat& a, const BigNat& c, const BigNat& d_base,
                                  std::uint64_t m_from, std::uint64_t m_to,
                                  std::uint64_t n_from, std::uint64_t n_to,
                                  std::uint64_t cap = kDefaultOracleCap) {
    if (d_base < 2)
        throw std::invalid_argument("limit_profile: d_base must be >= 2");
    if (m_from > m_to || n_from > n_to)
        throw std::invalid_argument("limit_profile: empty grid");
    LimitProfile p;
    for (std::uint64_t m = m_from; m <= m_to; ++m) p.ms.push_back(m);
    const std::uint64_t max_a = std::max(v2(a + 1), v2(a - 1));
    for (std::uint64_t n = n_from; n <= n_to; ++n) {
        p.ns.push_back(n);
        std::vector<Prediction> row;
        for (std::uint64_t m : p.ms) {
            BigNat d = boost::multiprecision::pow(d_base, static_cast<unsigned>(m));
            row.push_back(v2_oracle(a, n, c, d, cap));
        }
        p.cells.push_back(std::move(row));
        if (n % 2 == 0)
            p.conjectured.push_back(vp(BigNat(n), 2).value() + max_a);
        else
            p.conjectured.push_back(std::nullopt);
    }
    return p;
}

} // namespace v2adic
