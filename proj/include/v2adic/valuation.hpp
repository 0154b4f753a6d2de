#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace v2adic {

// Arbitrary-precision integer carrier. Signed so that differences like
// a^b - c^d can be held directly; operations that require naturals check.
using BigInt = boost::multiprecision::cpp_int;
using BigNat = BigInt;

/// p-adic valuation result: a natural number or +infinity (only from input 0).
class Valuation {
public:
    static Valuation finite(std::uint64_t v) { return Valuation(v, false); }
    static Valuation infinity() { return Valuation(0, true); }

    bool is_infinite() const { return infinite_; }

    std::uint64_t value() const {
        if (infinite_)
            throw std::logic_error("Valuation: value() on infinity");
        return value_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

    // Infinity dominates every finite value.
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    // Infinity absorbs addition.
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ + b.value_);
    }

    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }
    friend Valuation max(const Valuation& a, const Valuation& b) { return a < b ? b : a; }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        if (v.infinite_) return os << "infinity";
        return os << v.value_;
    }

private:
    Valuation(std::uint64_t v, bool inf) : value_(v), infinite_(inf) {}
    std::uint64_t value_;
    bool infinite_;
};

/// v_p(n) for n != 0: the largest k with p^k | n. Sign of n is ignored.
/// Primality of p is the caller's responsibility.
inline Valuation vp(const BigInt& n, const BigNat& p) {
    if (n == 0)
        throw std::invalid_argument("vp: n must be nonzero (use vp_extended for v_p(0))");
    if (p < 2)
        throw std::invalid_argument("vp: p must be >= 2");
    if (p == 2) {
        // Hot path: trailing-zero count of |n|.
        return Valuation::finite(boost::multiprecision::lsb(abs(n)));
    }
    BigInt m = abs(n);
    std::uint64_t k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return Valuation::finite(k);
}

/// v_p extended by the convention v_p(0) = +infinity.
inline Valuation vp_extended(const BigInt& n, const BigNat& p) {
    if (n == 0) return Valuation::infinity();
    return vp(n, p);
}

/// Shorthand for the 2-adic valuation of a nonzero integer.
inline std::uint64_t v2(const BigInt& n) { return vp(n, 2).value(); }

/// base^exponent mod 2^K by square-and-multiply with masking at every step;
/// the full power is never materialized.
inline BigNat modpow2(const BigNat& base, const BigNat& exponent, std::uint64_t K) {
    if (K < 1)
        throw std::invalid_argument("modpow2: K must be >= 1");
    if (base < 0 || exponent < 0)
        throw std::invalid_argument("modpow2: base and exponent must be non-negative");
    const BigNat mask = (BigNat(1) << K) - 1;
    BigNat result = 1;
    BigNat b = base & mask;
    BigNat e = exponent;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0))
            result = (result * b) & mask;
        b = (b * b) & mask;
        e >>= 1;
    }
    return result;
}

} // namespace v2adic
