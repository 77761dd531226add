#pragma once

// Rigorous natural logarithms of big integers and rationals.
//
// Values are carried as intervals [lo, hi] / 2^W of binary fixed point
// numbers and only turned into decimals at the very end, floor for lower
// bounds and ceiling for upper bounds.
//
// ln N: write N = T * 2^s with T holding W+64 leading bits (T rounded both
// ways when bits are dropped), pick j with T / 2^j in [1/sqrt2, sqrt2] and use
// ln T = j ln2 + 2 atanh(y), y = (T - 2^j) / (T + 2^j) exactly, |y| < 0.172.
// ln2 = 2 atanh(1/3).

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <string>

#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/evolve.hpp"
#include "hanoi_dimer/multipoly.hpp"

namespace hanoi_dimer {

/// Closed interval [lo, hi] * 2^-bits.
struct FixedInterval {
    Integer lo;
    Integer hi;
    unsigned bits = 0;

    FixedInterval operator+(const FixedInterval& o) const { return {lo + o.lo, hi + o.hi, bits}; }
    FixedInterval operator-(const FixedInterval& o) const { return {lo - o.hi, hi - o.lo, bits}; }
    FixedInterval operator-() const { return {-hi, -lo, bits}; }

    FixedInterval times(long m) const {
        if (m >= 0) return {lo * m, hi * m, bits};
        return {hi * m, lo * m, bits};
    }

    /// Division by a positive integer, rounding outward.
    FixedInterval divided(const Integer& m) const {
        if (m <= 0) throw DomainError("interval divisor must be positive");
        FixedInterval out{0, 0, bits};
        mpz_fdiv_q(out.lo.get_mpz_t(), lo.get_mpz_t(), m.get_mpz_t());
        mpz_cdiv_q(out.hi.get_mpz_t(), hi.get_mpz_t(), m.get_mpz_t());
        return out;
    }

    /// Drops `drop` fractional bits, rounding outward.
    FixedInterval narrowed(unsigned drop) const {
        FixedInterval out{0, 0, bits - drop};
        mpz_fdiv_q_2exp(out.lo.get_mpz_t(), lo.get_mpz_t(), drop);
        mpz_cdiv_q_2exp(out.hi.get_mpz_t(), hi.get_mpz_t(), drop);
        return out;
    }
};

namespace detail {

/// atanh(u/v) for 0 <= u/v <= 1/3. The series terms y^(2i+1)/(2i+1) are
/// built with floors only, so the computed sum never exceeds the true one;
/// the per-term error stays below 3 ulps and the dropped tail below 3 ulps.
inline FixedInterval atanh_ratio(const Integer& u, const Integer& v, unsigned bits) {
    if (u < 0 || v <= 0 || 3 * u > v) throw DomainError("atanh argument outside [0, 1/3]");
    if (u == 0) return {0, 0, bits};
    Integer p = u;
    p <<= bits;
    mpz_fdiv_q(p.get_mpz_t(), p.get_mpz_t(), v.get_mpz_t());
    const Integer u2 = u * u;
    const Integer v2 = v * v;
    Integer sum = 0;
    Integer term;
    unsigned long i = 0;
    while (p != 0) {
        mpz_fdiv_q_ui(term.get_mpz_t(), p.get_mpz_t(), 2 * i + 1);
        sum += term;
        p *= u2;
        mpz_fdiv_q(p.get_mpz_t(), p.get_mpz_t(), v2.get_mpz_t());
        ++i;
    }
    return {sum, sum + 4 * (i + 2), bits};
}

inline FixedInterval ln2_interval(unsigned bits) { return atanh_ratio(1, 3, bits).times(2); }

/// ln T for a positive integer T that fits the working precision.
inline FixedInterval ln_reduced(const Integer& t, unsigned bits, const FixedInterval& ln2) {
    // j = round(log2 T) puts T / 2^j within [1/sqrt2, sqrt2]
    std::size_t j = mpz_sizeinbase(t.get_mpz_t(), 2) - 1;
    Integer pj = 1;
    pj <<= j;
    // T in [2^j, 2^(j+1)); move up when T > 2^j * sqrt2, i.e. T^2 > 2^(2j+1)
    Integer t2 = t * t;
    Integer lim = 1;
    lim <<= 2 * j + 1;
    if (t2 > lim) {
        ++j;
        pj <<= 1;
    }
    const Integer num = t - pj;
    const Integer den = t + pj;
    FixedInterval at = atanh_ratio(abs(num), den, bits).times(2);
    if (num < 0) at = -at;
    return ln2.times(static_cast<long>(j)) + at;
}

}  // namespace detail

/// ln N for N >= 1 at 2^-bits resolution.
inline FixedInterval ln_interval(const Integer& n, unsigned bits) {
    if (n <= 0) throw DomainError("logarithm of a non-positive number");
    constexpr unsigned kGuard = 32;
    const unsigned wb = bits + kGuard;
    const FixedInterval ln2 = detail::ln2_interval(wb);
    const std::size_t len = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t keep = wb + 64;
    FixedInterval out;
    if (len <= keep) {
        out = detail::ln_reduced(n, wb, ln2);
    } else {
        const std::size_t s = len - keep;
        Integer t;
        mpz_fdiv_q_2exp(t.get_mpz_t(), n.get_mpz_t(), s);
        const bool exact = mpz_scan1(n.get_mpz_t(), 0) >= s;
        const FixedInterval shift = ln2.times(static_cast<long>(s));
        const FixedInterval low = detail::ln_reduced(t, wb, ln2) + shift;
        if (exact) {
            out = low;
        } else {
            const FixedInterval high = detail::ln_reduced(Integer(t + 1), wb, ln2) + shift;
            out = {low.lo, high.hi, wb};
        }
    }
    return out.narrowed(kGuard);
}

inline FixedInterval ln_interval(const Rational& q, unsigned bits) {
    if (q <= 0) throw DomainError("logarithm of a non-positive number");
    return ln_interval(Integer(q.get_num()), bits) - ln_interval(Integer(q.get_den()), bits);
}

/// Binary working precision for p decimal digits plus 20 guard digits.
inline unsigned working_bits(int p) {
    if (p < 1) throw DomainError("precision must be >= 1");
    return static_cast<unsigned>(std::ceil((p + 20) * 3.3219280948873623)) + 64;
}

enum class Direction { Down, Up };

/// A decimal value scaled * 10^-precision, rounded in the recorded direction.
struct HighPrecisionReal {
    Integer scaled;
    int precision = 0;
    Direction direction = Direction::Down;

    Rational exact() const {
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(precision));
        Rational q(scaled, den);
        q.canonicalize();
        return q;
    }

    std::string str() const { return render_decimal(exact(), precision, Rounding::Down); }
};

/// Rounds one end of an interval to p decimals: lower end down, upper end up.
inline HighPrecisionReal to_decimal(const FixedInterval& x, int p, Direction dir) {
    Integer ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(p));
    HighPrecisionReal out;
    out.precision = p;
    out.direction = dir;
    if (dir == Direction::Down) {
        out.scaled = x.lo * ten;
        mpz_fdiv_q_2exp(out.scaled.get_mpz_t(), out.scaled.get_mpz_t(), x.bits);
    } else {
        out.scaled = x.hi * ten;
        mpz_cdiv_q_2exp(out.scaled.get_mpz_t(), out.scaled.get_mpz_t(), x.bits);
    }
    return out;
}

inline HighPrecisionReal hp_ln(const Rational& x, int p, Direction dir) {
    if (x <= 0) throw DomainError("hp_ln needs x > 0");
    if (x == 1) return {0, p, dir};
    return to_decimal(ln_interval(x, working_bits(p)), p, dir);
}

inline HighPrecisionReal hp_ln(const Integer& x, int p, Direction dir) { return hp_ln(Rational(x), p, dir); }

/// Count of equal digits after the decimal point of two renderings.
inline int certified_digits(const HighPrecisionReal& lo, const HighPrecisionReal& hi) {
    return common_decimal_digits(lo.str(), hi.str());
}

}  // namespace hanoi_dimer
