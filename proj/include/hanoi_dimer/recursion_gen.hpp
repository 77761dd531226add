#pragma once

// Mechanical generation of the boundary-class recursion system of TH_d.
//
// State: c_k(n) = number of matchings of TH_d(n) in which k specified
// corners are matched and the other d+1-k corners are unmatched
// (k = 0..d+1), plus the total M(n).
//
// TH_d(n+1) is d+1 copies of TH_d(n) joined by the C(d+1,2) connector
// edges. Fix the subset S of connector edges used by the matching. A copy
// whose connector corners are used by S must leave them unmatched inside
// the copy; its other connector corners are unconstrained. Copy i's global
// corner is unmatched (delta_i = 0) or matched inside the copy
// (delta_i = 1), so copy i contributes the mixed count
//     N(deg_S(i) + 1 - delta_i, delta_i)
// where N(a, b) counts matchings with a corners forced unmatched, b forced
// matched and the rest free:
//     N(a, b) = sum_j C(d+1-a-b, j) * c_{b+j}.
// For M(n+1) the global corners are free and copy i contributes N(deg_S(i), 0).

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/hanoi_graph.hpp"
#include "hanoi_dimer/multipoly.hpp"

namespace hanoi_dimer {

inline constexpr int kDefaultMaxCensusDimension = 6;

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// c0 .. c{d+1}
inline VarList class_vars(int d) {
    VarList v;
    for (int k = 0; k <= d + 1; ++k) v.push_back("c" + std::to_string(k));
    return v;
}

/// r0 .. r{d}, r_j standing for c_j / c_{j+1}.
inline VarList ratio_vars(int d) {
    VarList v;
    for (int j = 0; j <= d; ++j) v.push_back("r" + std::to_string(j));
    return v;
}

/// Name of the mixed count N(a, b) for dimension d. Counts with no free
/// corner are the classes themselves; N(0, 0) is the total M.
inline std::string mixed_var_name(int d, int a, int b) {
    if (a + b == d + 1) return "c" + std::to_string(b);
    if (a == 0 && b == 0) return "M";
    return "N" + std::to_string(a) + "_" + std::to_string(b);
}

/// All mixed-count variables with b in {0, 1}.
inline VarList mixed_vars(int d) {
    VarList v{"M"};
    for (int b = 0; b <= 1; ++b) {
        for (int a = (b == 0 ? 1 : 0); a + b <= d + 1; ++a) v.push_back(mixed_var_name(d, a, b));
    }
    return v;
}

/// c_k(0): perfect matchings of K_k for even k, zero for odd k.
inline std::vector<Integer> initial_classes(int d) {
    std::vector<Integer> c(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 0; k <= d + 1; ++k) {
        if (k % 2 != 0) continue;
        Integer v = 1;
        for (int j = k - 1; j > 1; j -= 2) v *= j;
        c[static_cast<std::size_t>(k)] = v;
    }
    return c;
}

inline void check_dimension(int d, int max_d = kDefaultMaxCensusDimension) {
    if (d < 2) throw DomainError("dimension d must be >= 2, got " + std::to_string(d));
    if (d > max_d) {
        throw ResourceError("d=" + std::to_string(d) + " needs 2^" + std::to_string((d + 1) * d / 2) +
                            " connector subsets; above the census cap d<=" + std::to_string(max_d) +
                            " (raise it with --max-d)");
    }
}

/// N(a, b) over the class variables c0..c{d+1}.
inline Polynomial mixed_count_expansion(int d, int forced_monomers, int forced_dimers) {
    const int free = d + 1 - forced_monomers - forced_dimers;
    if (forced_monomers < 0 || forced_dimers < 0 || free < 0) {
        throw DomainError("mixed count needs a, b >= 0 and a + b <= d + 1");
    }
    const VarList vars = class_vars(d);
    std::vector<Polynomial::Term> terms;
    for (int j = 0; j <= free; ++j) {
        Exponents e(vars.size(), 0);
        e[static_cast<std::size_t>(forced_dimers + j)] = 1;
        terms.push_back({std::move(e), binomial(static_cast<unsigned>(free), static_cast<unsigned>(j))});
    }
    return Polynomial::from_terms(vars, std::move(terms));
}

/// Sorted degree multiset of a connector subset -> number of subsets.
using DegreeCensus = std::map<std::vector<int>, std::uint64_t>;

namespace detail {

/// Calls fn(deg) for every subset of the K_{d+1} connector edges, with
/// deg[i] the number of chosen edges at copy i. Gray-code order.
template <class Fn>
void for_each_connector_subset(int d, Fn&& fn) {
    const auto edges = connector_edges(d);
    const std::size_t m = edges.size();
    std::vector<int> deg(static_cast<std::size_t>(d) + 1, 0);
    std::uint64_t gray = 0;
    fn(deg);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
        const int bit = std::countr_zero(i);
        gray ^= std::uint64_t{1} << bit;
        const int delta = (gray >> bit & 1) ? 1 : -1;
        deg[static_cast<std::size_t>(edges[static_cast<std::size_t>(bit)].copy_a)] += delta;
        deg[static_cast<std::size_t>(edges[static_cast<std::size_t>(bit)].copy_b)] += delta;
        fn(deg);
    }
}

/// Packs a sorted list of small codes (< 32) into an integer key.
inline std::uint64_t pack_codes(std::array<std::uint8_t, 16>& codes, std::size_t n) {
    std::sort(codes.begin(), codes.begin() + static_cast<std::ptrdiff_t>(n));
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) key = key << 5 | codes[i];
    return key;
}

/// Number of connector subsets realizing each ordered degree sequence,
/// indexed by the sequence read as a base-(d+1) number.
inline std::vector<std::uint64_t> degree_sequence_counts(int d) {
    const std::size_t base = static_cast<std::size_t>(d) + 1;
    std::vector<std::size_t> place(base, 1);
    for (std::size_t i = 1; i < base; ++i) place[i] = place[i - 1] * base;
    std::vector<std::uint64_t> counts(place.back() * base, 0);
    const auto edges = connector_edges(d);
    std::size_t index = 0;
    std::uint64_t gray = 0;
    ++counts[index];
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << edges.size()); ++i) {
        const int bit = std::countr_zero(i);
        gray ^= std::uint64_t{1} << bit;
        const auto& e = edges[static_cast<std::size_t>(bit)];
        const std::size_t step = place[static_cast<std::size_t>(e.copy_a)] + place[static_cast<std::size_t>(e.copy_b)];
        if (gray >> bit & 1) {
            index += step;
        } else {
            index -= step;
        }
        ++counts[index];
    }
    return counts;
}

/// Accumulated product classes: key -> multiplicity. Each copy's (a, b)
/// is encoded as code = 2a + b.
inline std::unordered_map<std::uint64_t, std::uint64_t> labeled_products(int d, std::uint32_t dimer_mask,
                                                                          bool total) {
    const std::size_t copies = static_cast<std::size_t>(d) + 1;
    const auto seq = degree_sequence_counts(d);
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    std::array<std::uint8_t, 16> codes{};
    for (std::size_t index = 0; index < seq.size(); ++index) {
        if (seq[index] == 0) continue;
        std::size_t rest = index;
        for (std::size_t i = 0; i < copies; ++i) {
            const int deg = static_cast<int>(rest % copies);
            rest /= copies;
            int a;
            int b;
            if (total) {
                a = deg;
                b = 0;
            } else {
                b = (dimer_mask >> i & 1) ? 1 : 0;
                a = deg + 1 - b;
            }
            codes[i] = static_cast<std::uint8_t>(2 * a + b);
        }
        counts[pack_codes(codes, copies)] += seq[index];
    }
    return counts;
}

inline Polynomial mixed_polynomial_from_products(int d, const std::unordered_map<std::uint64_t, std::uint64_t>& counts) {
    const VarList vars = mixed_vars(d);
    Polynomial shape(vars);
    const std::size_t copies = static_cast<std::size_t>(d) + 1;
    std::vector<Polynomial::Term> terms;
    terms.reserve(counts.size());
    for (const auto& [key, mult] : counts) {
        Exponents e(vars.size(), 0);
        std::uint64_t k = key;
        for (std::size_t i = 0; i < copies; ++i) {
            const int code = static_cast<int>(k & 31u);
            k >>= 5;
            const int idx = shape.var_index(mixed_var_name(d, code / 2, code % 2));
            if (idx < 0) throw IntegrityError("mixed count outside variable list");
            ++e[static_cast<std::size_t>(idx)];
        }
        terms.push_back({std::move(e), Integer(static_cast<unsigned long>(mult))});
    }
    return Polynomial::from_terms(vars, std::move(terms));
}

inline std::map<std::string, Polynomial> mixed_bindings(int d) {
    std::map<std::string, Polynomial> b;
    for (int bb = 0; bb <= 1; ++bb) {
        for (int a = 0; a + bb <= d + 1; ++a) b.emplace(mixed_var_name(d, a, bb), mixed_count_expansion(d, a, bb));
    }
    return b;
}

}  // namespace detail

/// Exhaustive census of connector subsets grouped by sorted degree multiset.
inline DegreeCensus census(int d, int max_d = kDefaultMaxCensusDimension) {
    check_dimension(d, max_d);
    DegreeCensus out;
    detail::for_each_connector_subset(d, [&](const std::vector<int>& deg) {
        std::vector<int> key = deg;
        std::sort(key.begin(), key.end());
        ++out[key];
    });
    return out;
}

/// New c_k (for the corners in `dimer_mask` matched, others unmatched),
/// expressed in mixed counts before expansion to the class basis.
inline Polynomial generate_mixed(int d, std::uint32_t dimer_mask, int max_d = kDefaultMaxCensusDimension) {
    check_dimension(d, max_d);
    return detail::mixed_polynomial_from_products(d, detail::labeled_products(d, dimer_mask, false));
}

/// New M in mixed counts before expansion.
inline Polynomial generate_total_mixed(int d, int max_d = kDefaultMaxCensusDimension) {
    check_dimension(d, max_d);
    return detail::mixed_polynomial_from_products(d, detail::labeled_products(d, 0, true));
}

inline Polynomial expand_to_classes(int d, const Polynomial& mixed) {
    return substitute(mixed, detail::mixed_bindings(d), class_vars(d));
}

/// c_k(n+1) with the corners in `dimer_mask` dimer-forced, in the class basis.
inline Polynomial generate_class(int d, std::uint32_t dimer_mask, int max_d = kDefaultMaxCensusDimension) {
    return expand_to_classes(d, generate_mixed(d, dimer_mask, max_d));
}

struct RecursionSystem {
    int d = 0;
    VarList vars;                    // c0..c{d+1}
    std::vector<Polynomial> classes; // new c_k, k = 0..d+1
    Polynomial total;                // new M

    std::size_t width() const { return static_cast<std::size_t>(d) + 2; }
};

/// Independent count of sum over subsets of prod 2^(free corners), i.e. every
/// polynomial of the system evaluated at all c_j = 1. A dimer-forced corner
/// trades a forced monomer slot for a forced dimer slot, so the mask does not
/// change the free-slot count.
inline Integer expected_coefficient_sum(int d, [[maybe_unused]] std::uint32_t dimer_mask, bool total) {
    Integer sum = 0;
    const int copies = d + 1;
    detail::for_each_connector_subset(d, [&](const std::vector<int>& deg) {
        unsigned free_slots = 0;
        for (int i = 0; i < copies; ++i) {
            const int used = total ? deg[static_cast<std::size_t>(i)] : deg[static_cast<std::size_t>(i)] + 1;
            free_slots += static_cast<unsigned>(copies - used);
        }
        Integer term = 1;
        term <<= free_slots;
        sum += term;
    });
    return sum;
}

/// Checks homogeneity, sign and coefficient-sum invariants; throws IntegrityError.
inline void validate(const RecursionSystem& sys) {
    const unsigned degree = static_cast<unsigned>(sys.d) + 1;
    if (sys.classes.size() != sys.width()) throw IntegrityError("recursion system has wrong number of classes");
    auto check = [&](const Polynomial& p, const std::string& label, std::uint32_t mask, bool total) {
        if (p.vars() != sys.vars) throw IntegrityError(label + ": unexpected variable list");
        if (!p.is_homogeneous(degree)) throw IntegrityError(label + ": not homogeneous of degree " + std::to_string(degree));
        if (!p.has_nonnegative_coefficients()) throw IntegrityError(label + ": negative coefficient");
        const Integer expect = expected_coefficient_sum(sys.d, mask, total);
        if (p.coefficient_sum() != expect) {
            throw IntegrityError(label + ": coefficient sum " + p.coefficient_sum().get_str() + " != " + expect.get_str());
        }
    };
    for (std::size_t k = 0; k < sys.classes.size(); ++k) {
        check(sys.classes[k], "c" + std::to_string(k), (1u << k) - 1u, false);
    }
    check(sys.total, "M", 0, true);
}

inline RecursionSystem generate(int d, int max_d = kDefaultMaxCensusDimension) {
    check_dimension(d, max_d);
    RecursionSystem sys;
    sys.d = d;
    sys.vars = class_vars(d);
    for (int k = 0; k <= d + 1; ++k) sys.classes.push_back(generate_class(d, (1u << k) - 1u, max_d));
    sys.total = expand_to_classes(d, generate_total_mixed(d, max_d));
    return sys;
}

/// Substitutes c_k = (prod_{j>=k} r_j) c_{d+1}; returns each polynomial
/// divided by c_{d+1}^{d+1}, over r0..r{d}. Entries 0..d+1 are the classes,
/// entry d+2 the total.
inline std::vector<Polynomial> ratio_form(const RecursionSystem& sys) {
    const VarList rv = ratio_vars(sys.d);
    std::map<std::string, Polynomial> bindings;
    for (int k = 0; k <= sys.d + 1; ++k) {
        Exponents e(rv.size(), 0);
        for (int j = k; j <= sys.d; ++j) e[static_cast<std::size_t>(j)] = 1;
        bindings.emplace("c" + std::to_string(k), Polynomial::from_terms(rv, {{std::move(e), Integer(1)}}));
    }
    std::vector<Polynomial> out;
    for (const auto& p : sys.classes) out.push_back(substitute(p, bindings, rv));
    out.push_back(substitute(sys.total, bindings, rv));
    return out;
}

/// Ratio forms of the classes with the guaranteed factor r_d^{d+1-k}
/// removed: new r_j = r_d * Q_j / Q_{j+1}.
inline std::vector<Polynomial> ratio_quotients(const RecursionSystem& sys) {
    auto forms = ratio_form(sys);
    forms.pop_back();
    std::vector<Polynomial> out;
    for (int k = 0; k <= sys.d + 1; ++k) {
        Exponents m(static_cast<std::size_t>(sys.d) + 1, 0);
        m[static_cast<std::size_t>(sys.d)] = static_cast<std::uint16_t>(sys.d + 1 - k);
        out.push_back(forms[static_cast<std::size_t>(k)].divided_by_monomial(m));
    }
    return out;
}

/// Cache file: header line, then `c<k>: <poly>` lines and an `M: <poly>` line.
inline void write_system(std::ostream& os, const RecursionSystem& sys) {
    os << "# d=" << sys.d << " basis=c0..c" << sys.d + 1 << '\n';
    for (std::size_t k = 0; k < sys.classes.size(); ++k) os << 'c' << k << ": " << sys.classes[k].serialize() << '\n';
    os << "M: " << sys.total.serialize() << '\n';
}

inline std::string system_to_string(const RecursionSystem& sys) {
    std::ostringstream os;
    write_system(os, sys);
    return os.str();
}

/// Parses and validates a cache file body.
inline RecursionSystem read_system(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty recursion file", 0);
    int d = 0;
    {
        const std::string prefix = "# d=";
        if (line.rfind(prefix, 0) != 0) throw ParseError("missing '# d=' header", 0);
        std::istringstream hs(line.substr(prefix.size()));
        if (!(hs >> d)) throw ParseError("bad dimension in header", prefix.size());
        std::string rest;
        std::getline(hs, rest);
        const std::string expect = " basis=c0..c" + std::to_string(d + 1);
        if (rest != expect) throw ParseError("bad basis in header", prefix.size());
        if (d < 2) throw ParseError("dimension below 2 in header", prefix.size());
    }
    RecursionSystem sys;
    sys.d = d;
    sys.vars = class_vars(d);
    std::vector<std::optional<Polynomial>> classes(sys.width());
    std::optional<Polynomial> total;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto colon = line.find(": ");
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": missing label", 0);
        const std::string label = line.substr(0, colon);
        const std::string body = line.substr(colon + 2);
        Polynomial p;
        try {
            p = Polynomial::parse(body, sys.vars);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + " (" + label + "): " + e.what(), colon + 2 + e.position());
        }
        if (label == "M") {
            total = std::move(p);
            continue;
        }
        std::size_t k = 0;
        if (label.size() < 2 || label[0] != 'c' || label.find_first_not_of("0123456789", 1) != std::string::npos ||
            (k = std::stoul(label.substr(1))) >= sys.width() || classes[k]) {
            throw ParseError("line " + std::to_string(line_no) + ": bad label '" + label + "'", 0);
        }
        classes[k] = std::move(p);
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (!classes[k]) throw ParseError("missing c" + std::to_string(k) + " line", 0);
        sys.classes.push_back(std::move(*classes[k]));
    }
    if (!total) throw ParseError("missing M line", 0);
    sys.total = std::move(*total);
    validate(sys);
    return sys;
}

}  // namespace hanoi_dimer
