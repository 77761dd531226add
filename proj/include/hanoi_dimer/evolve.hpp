#pragma once

// Exact iteration of a recursion system and the ratio sequences derived
// from it.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/multipoly.hpp"
#include "hanoi_dimer/recursion_gen.hpp"

namespace hanoi_dimer {

struct BoundaryClassVector {
    int d = 0;
    int n = 0;
    std::vector<Integer> c;  // c_0 .. c_{d+1}
    Integer M;

    const Integer& all_dimer() const { return c.back(); }
};

/// M = sum_k C(d+1, k) c_k
inline Integer total_from_classes(int d, const std::vector<Integer>& c) {
    Integer m = 0;
    for (std::size_t k = 0; k < c.size(); ++k) m += binomial(static_cast<unsigned>(d + 1), static_cast<unsigned>(k)) * c[k];
    return m;
}

/// Direction of the strict class ordering from stage 1 on.
inline bool increasing_classes(int d) { return d >= 3; }

/// Throws IntegrityError when a vector breaks the class invariants.
inline void check_invariants(const BoundaryClassVector& v) {
    const std::string where = "d=" + std::to_string(v.d) + " n=" + std::to_string(v.n);
    if (v.c.size() != static_cast<std::size_t>(v.d) + 2) throw IntegrityError(where + ": wrong vector width");
    for (const auto& x : v.c) {
        if (x < 0) throw IntegrityError(where + ": negative count");
    }
    if (v.M != total_from_classes(v.d, v.c)) throw IntegrityError(where + ": M differs from the binomial class sum");
    if (v.n >= 1) {
        // d=2 runs the other way: c_0 > c_1 > c_2 > c_3
        const bool up = increasing_classes(v.d);
        for (std::size_t k = 0; k + 1 < v.c.size(); ++k) {
            if (up ? !(v.c[k] < v.c[k + 1]) : !(v.c[k] > v.c[k + 1])) {
                throw IntegrityError(where + ": ordering c" + std::to_string(k) + (up ? " < c" : " > c") +
                                     std::to_string(k + 1) + " fails");
            }
        }
    }
}

inline BoundaryClassVector initial_vector(int d) {
    BoundaryClassVector v;
    v.d = d;
    v.n = 0;
    v.c = initial_classes(d);
    v.M = total_from_classes(d, v.c);
    return v;
}

inline BoundaryClassVector step(const RecursionSystem& sys, const BoundaryClassVector& v) {
    if (v.d != sys.d) throw Error("vector dimension does not match recursion system");
    BoundaryClassVector out;
    out.d = v.d;
    out.n = v.n + 1;
    out.c.reserve(v.c.size());
    for (const auto& p : sys.classes) out.c.push_back(p.evaluate<Integer>(v.c));
    out.M = sys.total.evaluate<Integer>(v.c);
    check_invariants(out);
    return out;
}

inline constexpr double kDefaultDigitCap = 1e7;

/// Decimal digits expected for c_{d+1} at stage n_max, extrapolated from
/// the current stage (each step multiplies the digit count by about d+1).
inline double predicted_digits(const BoundaryClassVector& v, int n_max) {
    double digits = static_cast<double>(mpz_sizeinbase(v.all_dimer().get_mpz_t(), 10));
    for (int n = v.n; n < n_max; ++n) digits = digits * (v.d + 1) + 4.0 * (v.d + 1);
    return digits;
}

/// Stages 0..n_max inclusive.
inline std::vector<BoundaryClassVector> evolve_to(const RecursionSystem& sys, int n_max,
                                                  double digit_cap = kDefaultDigitCap) {
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    std::vector<BoundaryClassVector> out{initial_vector(sys.d)};
    const double predicted = predicted_digits(out.front(), n_max);
    if (predicted > digit_cap) {
        throw ResourceError("stage " + std::to_string(n_max) + " needs about " +
                            std::to_string(static_cast<long long>(predicted)) + " digits, above the cap of " +
                            std::to_string(static_cast<long long>(digit_cap)));
    }
    for (int n = 1; n <= n_max; ++n) out.push_back(step(sys, out.back()));
    return out;
}

/// Ratios r_j(n) = c_j(n) / c_{j+1}(n) per stage, eps(n) = r_0(n) - r_d(n).
struct RatioTrace {
    int d = 0;
    std::vector<int> stages;
    std::vector<std::vector<Rational>> ratios;  // [stage index][j]
    std::vector<Rational> eps;

    /// eps(stages[i+1]) / eps(stages[i])^2 for consecutive stages.
    std::vector<Rational> eps_ratios() const {
        std::vector<Rational> out;
        for (std::size_t i = 0; i + 1 < eps.size(); ++i) {
            if (eps[i] == 0) throw DomainError("eps vanishes at stage " + std::to_string(stages[i]));
            out.push_back(eps[i + 1] / (eps[i] * eps[i]));
        }
        return out;
    }

    const Rational& alpha(std::size_t i) const { return ratios.at(i).front(); }
    const Rational& omega(std::size_t i) const { return ratios.at(i).back(); }
};

/// Exact ratio trace; every vector needs nonzero c_1..c_{d+1}, which holds from stage 1 on.
inline RatioTrace ratios(const std::vector<BoundaryClassVector>& vectors) {
    RatioTrace t;
    if (vectors.empty()) throw DomainError("no stages to take ratios of");
    t.d = vectors.front().d;
    for (const auto& v : vectors) {
        std::vector<Rational> r;
        for (std::size_t j = 0; j + 1 < v.c.size(); ++j) {
            if (v.c[j + 1] == 0) {
                throw DomainError("zero denominator c" + std::to_string(j + 1) + " at stage " + std::to_string(v.n));
            }
            Rational q(v.c[j], v.c[j + 1]);
            q.canonicalize();
            r.push_back(std::move(q));
        }
        t.eps.push_back(r.front() - r.back());
        t.ratios.push_back(std::move(r));
        t.stages.push_back(v.n);
    }
    return t;
}

enum class Rounding { HalfEven, Down, Up, TowardZero };

/// Decimal rendering of an exact rational with `digits` places after the point.
inline std::string render_decimal(const Rational& q, int digits, Rounding mode = Rounding::HalfEven) {
    if (digits < 0) throw DomainError("negative digit count");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Integer num = q.get_num() * scale;
    const Integer& den = q.get_den();
    Integer quot;
    Integer rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // num/den = quot + rem/den with 0 <= rem < den
    if (rem != 0) {
        switch (mode) {
            case Rounding::Down: break;
            case Rounding::Up: quot += 1; break;
            case Rounding::TowardZero:
                if (quot < 0) quot += 1;
                break;
            case Rounding::HalfEven: {
                const int cmp = ::cmp(Integer(2 * rem), den);
                if (cmp > 0 || (cmp == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;
                break;
            }
        }
    }
    const bool negative = quot < 0;
    std::string body = Integer(abs(quot)).get_str();
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    std::string out = negative ? "-" : "";
    out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - static_cast<std::size_t>(digits));
    }
    return out;
}

/// Number of leading characters shared by two decimal renderings, counted
/// after the decimal point.
inline int common_decimal_digits(const std::string& a, const std::string& b) {
    const auto pa = a.find('.');
    const auto pb = b.find('.');
    if (pa == std::string::npos || pb == std::string::npos || a.substr(0, pa) != b.substr(0, pb)) return 0;
    int n = 0;
    for (std::size_t i = pa + 1; i < a.size() && i < b.size() && a[i] == b[i]; ++i) ++n;
    return n;
}

struct RatioTraceReport {
    std::vector<std::string> violations;
    std::string limit_prefix;  // digits shared by r_0 and r_d at the last stage
    int limit_digits = 0;

    bool ok() const { return violations.empty(); }
};

/// Checks r_d <= ... <= r_0 at every stage, all inside (0,1) for d >= 3
/// (above 1 for d=2), strict decrease of r_0,
/// strict increase of r_d, and eps(n+1) < 3 eps(n)^2.
inline RatioTraceReport check_ratio_trace(const RatioTrace& trace, int render_digits = 120) {
    RatioTraceReport rep;
    if (trace.ratios.size() < 2) throw DomainError("need at least two stages");
    for (std::size_t i = 0; i < trace.ratios.size(); ++i) {
        const auto& r = trace.ratios[i];
        const std::string at = " at n=" + std::to_string(trace.stages[i]);
        if (!(r.back() > 0)) rep.violations.push_back("r_d not positive" + at);
        if (increasing_classes(trace.d) && !(r.front() < 1)) rep.violations.push_back("r_0 not below 1" + at);
        if (!increasing_classes(trace.d) && !(r.back() > 1)) rep.violations.push_back("r_d not above 1" + at);
        for (std::size_t j = 0; j + 1 < r.size(); ++j) {
            if (r[j + 1] > r[j]) rep.violations.push_back("ordering r" + std::to_string(j + 1) + " <= r" + std::to_string(j) + at);
        }
        if (i == 0) continue;
        if (!(trace.alpha(i) < trace.alpha(i - 1))) rep.violations.push_back("r_0 not strictly decreasing" + at);
        if (!(trace.omega(i) > trace.omega(i - 1))) rep.violations.push_back("r_d not strictly increasing" + at);
        if (!(trace.eps[i] < 3 * trace.eps[i - 1] * trace.eps[i - 1])) {
            rep.violations.push_back("eps(n+1) < 3 eps(n)^2 fails" + at);
        }
    }
    const auto a = render_decimal(trace.alpha(trace.ratios.size() - 1), render_digits, Rounding::Down);
    const auto w = render_decimal(trace.omega(trace.ratios.size() - 1), render_digits, Rounding::Down);
    rep.limit_digits = common_decimal_digits(a, w);
    rep.limit_prefix = a.substr(0, a.find('.') + 1 + static_cast<std::size_t>(rep.limit_digits));
    return rep;
}

}  // namespace hanoi_dimer
