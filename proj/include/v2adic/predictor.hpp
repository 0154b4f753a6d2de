#pragma once

#include <optional>
#include <string>

#include "v2adic/lte.hpp"
#include "v2adic/valuation.hpp"

namespace v2adic {

/// Result contract shared by the predictor and the oracle: either the exact
/// valuation or a certified lower bound.
struct Prediction {
    enum class Kind { Exact, AtLeast };
    Kind kind;
    std::uint64_t value;

    static Prediction exact(std::uint64_t v) { return {Kind::Exact, v}; }
    static Prediction at_least(std::uint64_t v) { return {Kind::AtLeast, v}; }

    bool is_exact() const { return kind == Kind::Exact; }
    friend bool operator==(const Prediction& a, const Prediction& b) {
        return a.kind == b.kind && a.value == b.value;
    }
};

/// Exponent described only by what the theorems consume: parity and 2-adic
/// valuation. Concrete exponents reduce to this.
struct ExponentClass {
    bool even;
    std::uint64_t twoadic; // v2 of the exponent; 0 iff odd

    static ExponentClass of(const BigNat& b) {
        if (b < 1)
            throw std::invalid_argument("ExponentClass: exponent must be >= 1");
        bool ev = !detail::is_odd(b);
        return {ev, ev ? v2(b) : 0};
    }
    static ExponentClass odd() { return {false, 0}; }
    static ExponentClass even_with_v2(std::uint64_t k) {
        if (k < 1)
            throw std::invalid_argument("ExponentClass: even exponent needs v2 >= 1");
        return {true, k};
    }
};

/// The (a, b, c, d) tuple of v2(a^b - c^d): a, c odd >= 3, d even >= 2, b >= 1.
struct PowerDiffQuery {
    BigNat a, b, c, d;

    PowerDiffQuery(BigNat a_, BigNat b_, BigNat c_, BigNat d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (!detail::is_odd(a) || a < 3)
            throw std::invalid_argument("PowerDiffQuery: a must be odd and >= 3");
        if (!detail::is_odd(c) || c < 3)
            throw std::invalid_argument("PowerDiffQuery: c must be odd and >= 3");
        if (b < 1)
            throw std::invalid_argument("PowerDiffQuery: b must be >= 1");
        if (d < 2 || detail::is_odd(d))
            throw std::invalid_argument("PowerDiffQuery: d must be even and >= 2");
    }

    ExponentClass b_class() const { return ExponentClass::of(b); }
};

/// The theorems' hypothesis split: T1 when m >= maxA + 1, T2 otherwise,
/// where m = max[v2(c+1), v2(c-1)] + v2(d) and maxA = max[v2(a+1), v2(a-1)].
struct Regime {
    enum class Tag { T1, T2 };
    Tag tag;
    std::uint64_t m;
    std::uint64_t max_a;

    const char* name() const { return tag == Tag::T1 ? "T1" : "T2"; }
};

inline Regime classify(const PowerDiffQuery& q) {
    std::uint64_t m = std::max(v2(q.c + 1), v2(q.c - 1)) + v2(q.d);
    std::uint64_t max_a = std::max(v2(q.a + 1), v2(q.a - 1));
    return {m >= max_a + 1 ? Regime::Tag::T1 : Regime::Tag::T2, m, max_a};
}

/// Faithful transcription of the two theorems. The T1 even-b case is a lower
/// bound; every other case is claimed exact. The T2 odd-b equality is known
/// to fail in the tie case v2(a-1) = m (see predict_refined).
inline Prediction predict_paper(const PowerDiffQuery& q, const ExponentClass& b) {
    Regime r = classify(q);
    if (r.tag == Regime::Tag::T1 && b.even)
        return Prediction::at_least(r.max_a + 1);
    if (b.even)
        return Prediction::exact(r.m);
    return Prediction::exact(std::min(v2(q.a - 1), r.m));
}

inline Prediction predict_paper(const PowerDiffQuery& q) {
    return predict_paper(q, q.b_class());
}

/// Sharpened predictor via the two-sided valuation comparison
/// A = v2(a^b - 1), C = v2(c^d - 1): distinct valuations give the exact
/// minimum; a tie only gives a strict lower bound.
inline Prediction predict_refined(const PowerDiffQuery& q, const ExponentClass& b) {
    std::uint64_t A = v2_pow_minus_one_sym(q.a, b.even, b.twoadic).value();
    std::uint64_t C = v2_pow_minus_one(q.c, q.d).value();
    if (A != C)
        return Prediction::exact(std::min(A, C));
    return Prediction::at_least(A + 1);
}

inline Prediction predict_refined(const PowerDiffQuery& q) {
    return predict_refined(q, q.b_class());
}

/// The large-v2(d) conjecture: when v2(b) + maxA is the strict minimum
/// (< m), it is the predicted exact valuation. Outside that regime the
/// conjecture says nothing. Requires even b.
inline std::optional<std::uint64_t> conjecture_asymptotic(const PowerDiffQuery& q,
                                                          const ExponentClass& b) {
    if (!b.even)
        throw std::invalid_argument("conjecture_asymptotic: b must be even");
    Regime r = classify(q);
    std::uint64_t candidate = b.twoadic + r.max_a;
    if (candidate < r.m)
        return candidate;
    return std::nullopt;
}

inline std::optional<std::uint64_t> conjecture_asymptotic(const PowerDiffQuery& q) {
    return conjecture_asymptotic(q, q.b_class());
}

} // namespace v2adic
