#pragma once

// Entropy-per-site bounds from an anchored stage k:
//   z in [ ln lam / D^(k+1) + ln(1 + 2w + 2w^2) / (2 D^k),
//          ln lam / D^(k+1) + ln(1 + 2a + 2a^2) / (2 D^k) ]
// with D = d+1, lam = c_D(k), w = r_d(k), a = r_0(k).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/evolve.hpp"
#include "hanoi_dimer/hp_real.hpp"
#include "hanoi_dimer/multipoly.hpp"

namespace hanoi_dimer {

inline constexpr int kDefaultPrecision = 160;

struct BoundsResult {
    int d = 0;
    int k = 0;
    HighPrecisionReal lower;
    HighPrecisionReal upper;
    int certified_digits = 0;
    std::size_t lambda_digits = 0;
    std::string warning;  // empty unless the precision limited the result

    std::string certified_prefix() const {
        const std::string s = lower.str();
        return s.substr(0, s.find('.') + 1 + static_cast<std::size_t>(certified_digits));
    }
};

namespace detail {

inline Integer ipow(long base, unsigned long e) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

inline Rational edge_factor(const Rational& r) { return 1 + 2 * r + 2 * r * r; }

inline const BoundaryClassVector& stage_of(const std::vector<BoundaryClassVector>& vectors, int n) {
    for (const auto& v : vectors) {
        if (v.n == n) return v;
    }
    throw DomainError("stage " + std::to_string(n) + " not among the supplied vectors");
}

inline Rational ratio_at(const BoundaryClassVector& v, std::size_t j) {
    if (v.c[j + 1] == 0) throw DomainError("ratio undefined at stage " + std::to_string(v.n));
    Rational q(v.c[j], v.c[j + 1]);
    q.canonicalize();
    return q;
}

}  // namespace detail

inline BoundsResult bounds(int d, int k, const std::vector<BoundaryClassVector>& vectors, int p = kDefaultPrecision) {
    if (k < 1) throw DomainError("bound stage k must be >= 1");
    const auto& v = detail::stage_of(vectors, k);
    if (v.d != d) throw DomainError("vector dimension does not match d");
    const unsigned bits = working_bits(p);
    const long dd = d + 1;
    const Integer& lambda = v.all_dimer();
    const Rational alpha = detail::ratio_at(v, 0);
    const Rational omega = detail::ratio_at(v, static_cast<std::size_t>(d));

    const FixedInterval lam = ln_interval(lambda, bits).divided(detail::ipow(dd, static_cast<unsigned long>(k + 1)));
    const Integer half_den = 2 * detail::ipow(dd, static_cast<unsigned long>(k));
    const FixedInterval lo = lam + ln_interval(detail::edge_factor(omega), bits).divided(half_den);
    const FixedInterval hi = lam + ln_interval(detail::edge_factor(alpha), bits).divided(half_den);

    BoundsResult out;
    out.d = d;
    out.k = k;
    out.lower = to_decimal(lo, p, Direction::Down);
    out.upper = to_decimal(hi, p, Direction::Up);
    if (!(out.lower.scaled < out.upper.scaled)) {
        throw IntegrityError("lower bound is not below the upper bound");
    }
    out.certified_digits = certified_digits(out.lower, out.upper);
    out.lambda_digits = mpz_sizeinbase(lambda.get_mpz_t(), 10);
    // A gap of a couple of ulps is rounding, not the bounds themselves
    // (digit counting alone misses carries like ...899 / ...900).
    if (out.upper.scaled - out.lower.scaled <= 2) {
        out.warning = "precision " + std::to_string(p) + " limits the result: bounds agree in " +
                      std::to_string(out.certified_digits) + " digits";
    }
    return out;
}

struct SandwichReport {
    int d = 0;
    int k = 0;
    int n = 0;
    bool lower_holds = false;
    bool upper_holds = false;

    bool ok() const { return lower_holds && upper_holds; }
};

/// Exact check of
///   lam^(D^(n-k)) * (1+2w+2w^2)^(D(D^(n-k)-1)/2) * (1+w(n))^D < M(n)
/// and the mirror upper bound with r_0 in place of r_d.
inline SandwichReport finite_sandwich_check(int d, int k, int n, const std::vector<BoundaryClassVector>& vectors) {
    if (!(n >= k && k >= 1)) throw DomainError("need n >= k >= 1");
    const auto& vk = detail::stage_of(vectors, k);
    const auto& vn = detail::stage_of(vectors, n);
    const unsigned long dd = static_cast<unsigned long>(d + 1);
    const Integer copies = detail::ipow(static_cast<long>(dd), static_cast<unsigned long>(n - k));
    const Integer links = Integer(dd * (copies - 1)) / 2;
    if (!copies.fits_ulong_p() || !links.fits_ulong_p()) throw ResourceError("exponent too large for an exact check");

    auto qpow = [](const Rational& q, unsigned long e) -> Rational {
        Integer a;
        Integer b;
        mpz_pow_ui(a.get_mpz_t(), q.get_num_mpz_t(), e);
        mpz_pow_ui(b.get_mpz_t(), q.get_den_mpz_t(), e);
        Rational r(a, b);
        r.canonicalize();
        return r;
    };

    const Rational lam(vk.all_dimer());
    const Rational base = qpow(lam, copies.get_ui());
    auto side = [&](std::size_t j) -> Rational {
        return base * qpow(detail::edge_factor(detail::ratio_at(vk, j)), links.get_ui()) *
               qpow(Rational(1 + detail::ratio_at(vn, j)), dd);
    };
    const Rational m(vn.M);
    SandwichReport out;
    out.d = d;
    out.k = k;
    out.n = n;
    out.lower_holds = side(static_cast<std::size_t>(d)) < m;
    out.upper_holds = m < side(0);
    return out;
}

}  // namespace hanoi_dimer
