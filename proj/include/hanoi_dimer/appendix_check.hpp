#pragma once

// Symbolic monotonicity and contraction certificates for the ratio map.
//
// With Q_k the class images of ratio_quotients (Q_k = image_k / r_d^(D-k)),
// the next ratios are r_j' = r_d * Q_j / Q_{j+1}. Hence
//   r_d' - r_d   = r_d (Q_d - Q_D) / Q_D
//   r_0 - r_0'   = (r_0 Q_1 - r_d Q_0) / Q_1
//   r_j' - r_j+1' = r_d (Q_j Q_{j+2} - Q_{j+1}^2) / (Q_{j+1} Q_{j+2})
// and each numerator is rewritten in w = r_d and the gaps
// g_i = r_{i-1} - r_i >= 0. Nonnegative coefficients certify the sign;
// gap-degree >= 2 everywhere certifies quadratic contraction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/multipoly.hpp"
#include "hanoi_dimer/recursion_gen.hpp"

namespace hanoi_dimer {

inline constexpr std::size_t kDefaultTermBudget = 10'000'000;

enum class CertificateStatus { Pass, Fail, NotAttempted };

inline const char* to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::Pass: return "pass";
        case CertificateStatus::Fail: return "fail";
        case CertificateStatus::NotAttempted: return "not attempted";
    }
    return "?";
}

struct CertificateReport {
    std::string name;
    int d = 0;
    CertificateStatus status = CertificateStatus::NotAttempted;
    std::size_t terms = 0;
    std::string detail;                 // offending monomial or budget note
    std::vector<Polynomial> expansions;  // one per numerator, in (w, gaps)

    bool passed() const { return status == CertificateStatus::Pass; }
};

/// Gap variable names: a, b, c for d=3 as in the printed expansions,
/// g1..gd otherwise.
inline VarList gap_vars(int d) {
    VarList out{"w"};
    for (int i = 1; i <= d; ++i) {
        if (d == 3) {
            out.push_back(std::string(1, static_cast<char>('a' + i - 1)));
        } else {
            out.push_back("g" + std::to_string(i));
        }
    }
    return out;
}

/// Rewrites a polynomial in r_0..r_d into (w, gaps) with r_d = w and
/// r_{j-1} = r_j + g_j, one variable at a time: r_0 -> r_1 + g_1, then
/// r_1 -> r_2 + g_2, and so on. Each step is a binomial expansion over
/// d+1 variables, far cheaper than expanding r_j -> w + g_{j+1} + ... + g_d
/// in one go.
inline Polynomial to_gaps(int d, const Polynomial& p, std::size_t budget = kDefaultTermBudget) {
    const VarList rv = ratio_vars(d);
    const VarList gv = gap_vars(d);
    Polynomial cur = p.with_vars(rv);
    for (int j = 0; j < d; ++j) {
        // current variables: g_1..g_j, r_j..r_d
        VarList next;
        for (int i = 1; i <= j + 1; ++i) next.push_back(gv[static_cast<std::size_t>(i)]);
        for (int i = j + 1; i <= d; ++i) next.push_back(rv[static_cast<std::size_t>(i)]);
        const Polynomial image = Polynomial::variable(next, rv[static_cast<std::size_t>(j) + 1]) +
                                 Polynomial::variable(next, gv[static_cast<std::size_t>(j) + 1]);
        cur = substitute(cur, {{rv[static_cast<std::size_t>(j)], image}}, next, budget);
    }
    VarList names(gv.begin() + 1, gv.end());
    names.push_back("w");
    return cur.renamed(names).with_vars(gv);
}

namespace detail {

inline std::string monomial_text(const Polynomial& p, const Exponents& e) {
    std::vector<Polynomial::Term> one{{e, Integer(1)}};
    return Polynomial::from_terms(p.vars(), std::move(one)).serialize();
}

inline unsigned gap_degree(const Exponents& e) {
    unsigned s = 0;
    for (std::size_t i = 1; i < e.size(); ++i) s += e[i];
    return s;
}

inline bool check_nonnegative(CertificateReport& rep, const Polynomial& p) {
    for (const auto& t : p.terms()) {
        if (t.coeff < 0) {
            rep.status = CertificateStatus::Fail;
            rep.detail = "negative coefficient " + t.coeff.get_str() + " on " + monomial_text(p, t.exps);
            return false;
        }
    }
    return true;
}

template <class Build>
CertificateReport run_certificate(const std::string& name, int d, Build&& build) {
    CertificateReport rep;
    rep.name = name;
    rep.d = d;
    try {
        rep.expansions = build();
    } catch (const ResourceError& e) {
        rep.status = CertificateStatus::NotAttempted;
        rep.detail = e.what();
        rep.expansions.clear();
        return rep;
    }
    rep.status = CertificateStatus::Pass;
    for (const auto& p : rep.expansions) rep.terms += p.size();
    return rep;
}

}  // namespace detail

inline CertificateReport omega_ascending_certificate(const RecursionSystem& sys,
                                                     std::size_t budget = kDefaultTermBudget) {
    const int d = sys.d;
    auto rep = detail::run_certificate("omega", d, [&] {
        const auto q = ratio_quotients(sys);
        return std::vector<Polynomial>{to_gaps(d, q[static_cast<std::size_t>(d)] - q[static_cast<std::size_t>(d) + 1], budget)};
    });
    if (rep.status == CertificateStatus::Pass) detail::check_nonnegative(rep, rep.expansions.front());
    return rep;
}

inline CertificateReport alpha_descending_certificate(const RecursionSystem& sys,
                                                      std::size_t budget = kDefaultTermBudget) {
    const int d = sys.d;
    auto rep = detail::run_certificate("alpha", d, [&] {
        const auto q = ratio_quotients(sys);
        const VarList rv = ratio_vars(d);
        const Polynomial r0 = Polynomial::variable(rv, rv.front());
        const Polynomial rd = Polynomial::variable(rv, rv.back());
        const Polynomial num = Polynomial::multiply(r0, q[1], budget) - Polynomial::multiply(rd, q[0], budget);
        return std::vector<Polynomial>{to_gaps(d, num, budget)};
    });
    if (rep.status == CertificateStatus::Pass) detail::check_nonnegative(rep, rep.expansions.front());
    return rep;
}

/// Numerators Q_j Q_{j+2} - Q_{j+1}^2 for j = 0..d-1; the sign of each
/// monomial is irrelevant here, only that no monomial has gap-degree < 2.
inline CertificateReport quadratic_contraction_certificate(const RecursionSystem& sys,
                                                           std::size_t budget = kDefaultTermBudget) {
    const int d = sys.d;
    auto rep = detail::run_certificate("contraction", d, [&] {
        const auto q = ratio_quotients(sys);
        std::vector<Polynomial> out;
        for (std::size_t j = 0; j + 2 < q.size(); ++j) {
            const Polynomial num =
                Polynomial::multiply(q[j], q[j + 2], budget) - Polynomial::multiply(q[j + 1], q[j + 1], budget);
            out.push_back(to_gaps(d, num, budget));
        }
        return out;
    });
    if (rep.status != CertificateStatus::Pass) return rep;
    for (std::size_t j = 0; j < rep.expansions.size(); ++j) {
        const auto& p = rep.expansions[j];
        for (const auto& t : p.terms()) {
            if (detail::gap_degree(t.exps) < 2) {
                rep.status = CertificateStatus::Fail;
                rep.detail = "pair " + std::to_string(j) + ": gap-degree " + std::to_string(detail::gap_degree(t.exps)) +
                             " monomial " + t.coeff.get_str() + "*" + detail::monomial_text(p, t.exps);
                return rep;
            }
        }
    }
    return rep;
}

/// Collects the terms of `p` carrying w^e, as a polynomial in the gaps (w kept at exponent 0).
inline Polynomial omega_block(const Polynomial& p, unsigned e) {
    std::vector<Polynomial::Term> out;
    for (const auto& t : p.terms()) {
        if (t.exps.front() != e) continue;
        Polynomial::Term s = t;
        s.exps.front() = 0;
        out.push_back(std::move(s));
    }
    return Polynomial::from_terms(p.vars(), std::move(out));
}

/// Terms of highest w-degree.
inline Polynomial leading_omega_block(const Polynomial& p) {
    unsigned top = 0;
    for (const auto& t : p.terms()) top = std::max<unsigned>(top, t.exps.front());
    std::vector<Polynomial::Term> out;
    for (const auto& t : p.terms()) {
        if (t.exps.front() == top) out.push_back(t);
    }
    return Polynomial::from_terms(p.vars(), std::move(out));
}

/// True when every term of `part` appears in `whole` with the same coefficient.
inline bool contains_terms(const Polynomial& whole, const Polynomial& part) {
    const Polynomial w = whole.with_vars(part.vars());
    for (const auto& t : part.terms()) {
        if (w.coefficient(t.exps) != t.coeff) return false;
    }
    return true;
}

}  // namespace hanoi_dimer
