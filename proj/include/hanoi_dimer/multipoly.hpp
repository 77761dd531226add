#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over an explicitly declared, ordered variable list.
//
// Terms are kept sorted in descending graded-lexicographic order with
// respect to the declared variable order, and no stored coefficient is
// zero, so the canonical text form is a pure function of the value.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hanoi_dimer/errors.hpp"

namespace hanoi_dimer {

using Integer = mpz_class;
using Rational = mpq_class;

using VarList = std::vector<std::string>;

/// Dense exponent vector, one entry per declared variable.
using Exponents = std::vector<std::uint16_t>;

namespace detail {

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline unsigned degree_of(const Exponents& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Descending graded-lex: higher total degree first, then the larger
/// exponent on the earliest differing variable.
inline bool grlex_greater(const Exponents& a, const Exponents& b) {
    const unsigned da = degree_of(a);
    const unsigned db = degree_of(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

inline std::uint16_t add_exponent(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t s = a + b;
    if (s > std::numeric_limits<std::uint16_t>::max()) {
        throw ResourceError("polynomial exponent overflow (" + std::to_string(s) + ")");
    }
    return static_cast<std::uint16_t>(s);
}

}  // namespace detail

class Polynomial {
public:
    struct Term {
        Exponents exps;
        Integer coeff;
    };

    Polynomial() : vars_(std::make_shared<const VarList>()) {}

    explicit Polynomial(VarList vars) : vars_(std::make_shared<const VarList>(std::move(vars))) {
        check_unique_vars();
    }

    static Polynomial constant(VarList vars, const Integer& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_.push_back({Exponents(p.nvars(), 0), c});
        return p;
    }

    static Polynomial variable(VarList vars, std::string_view name) {
        Polynomial p(std::move(vars));
        const int idx = p.var_index(name);
        if (idx < 0) throw Error("variable '" + std::string(name) + "' not in variable list");
        Exponents e(p.nvars(), 0);
        e[static_cast<std::size_t>(idx)] = 1;
        p.terms_.push_back({std::move(e), Integer(1)});
        return p;
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted, zero) terms.
    static Polynomial from_terms(VarList vars, std::vector<Term> terms) {
        Polynomial p(std::move(vars));
        Accumulator acc(p.nvars());
        for (auto& t : terms) {
            if (t.exps.size() != p.nvars()) throw Error("term arity does not match variable list");
            acc.add(t.exps, t.coeff);
        }
        p.terms_ = acc.take();
        return p;
    }

    const VarList& vars() const noexcept { return *vars_; }
    std::size_t nvars() const noexcept { return vars_->size(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    int var_index(std::string_view name) const {
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if ((*vars_)[i] == name) return static_cast<int>(i);
        }
        return -1;
    }

    Integer coefficient(const Exponents& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponents& key) {
            return detail::grlex_greater(t.exps, key);
        });
        if (it != terms_.end() && it->exps == e) return it->coeff;
        return 0;
    }

    /// Coefficient of the monomial given as {name: exponent}; names absent
    /// from the variable list make the coefficient zero unless their exponent is 0.
    Integer coefficient(const std::map<std::string, unsigned>& mono) const {
        Exponents e(nvars(), 0);
        for (const auto& [name, exp] : mono) {
            if (exp == 0) continue;
            const int idx = var_index(name);
            if (idx < 0) return 0;
            e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(exp);
        }
        return coefficient(e);
    }

    unsigned total_degree() const {
        return terms_.empty() ? 0 : detail::degree_of(terms_.front().exps);
    }

    bool is_homogeneous(unsigned degree) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [degree](const Term& t) { return detail::degree_of(t.exps) == degree; });
    }

    bool has_nonnegative_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff >= 0; });
    }

    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& t : terms_) s += t.coeff;
        return s;
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that occurs with a nonzero exponent.
    Polynomial with_vars(VarList target) const {
        Polynomial out(std::move(target));
        if (out.vars() == vars()) {
            out.terms_ = terms_;
            return out;
        }
        const auto map = index_map(out);
        Accumulator acc(out.nvars());
        for (const auto& t : terms_) acc.add(remap(t.exps, map, out.nvars()), t.coeff);
        out.terms_ = acc.take();
        return out;
    }

    /// Same polynomial with variables renamed position-by-position.
    Polynomial renamed(VarList names) const {
        if (names.size() != nvars()) throw Error("rename arity mismatch");
        Polynomial out(std::move(names));
        out.terms_ = terms_;
        return out;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    Polynomial scaled(const Integer& k) const {
        Polynomial out(vars());
        if (k == 0) return out;
        out.terms_ = terms_;
        for (auto& t : out.terms_) t.coeff *= k;
        return out;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) { return combine(p, q, false); }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return combine(p, q, true); }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q, 0); }

    /// Product with an optional cap on the number of result terms (0 = none).
    static Polynomial multiply(const Polynomial& p, const Polynomial& q, std::size_t max_terms) {
        if (p.vars_ == q.vars_ || p.vars() == q.vars()) {
            Polynomial out(p.vars_);
            out.terms_ = multiply_terms(p.terms_, q.terms_, p.nvars(), max_terms, true);
            return out;
        }
        const VarList vars = union_vars(p.vars(), q.vars());
        const Polynomial a = p.with_vars(vars);
        const Polynomial b = q.with_vars(a.vars());
        Polynomial out(a.vars_);
        out.terms_ = multiply_terms(a.terms_, b.terms_, a.nvars(), max_terms, true);
        return out;
    }

    Polynomial pow(unsigned exponent) const {
        Polynomial result = constant(vars(), 1);
        Polynomial base = *this;
        while (exponent > 0) {
            if (exponent & 1u) result = result * base;
            exponent >>= 1u;
            if (exponent > 0) base = base * base;
        }
        return result;
    }

    /// Exact division by a monomial; throws if some term is not divisible.
    Polynomial divided_by_monomial(const Exponents& m) const {
        if (m.size() != nvars()) throw Error("monomial arity mismatch");
        Polynomial out(vars());
        out.terms_ = terms_;
        for (auto& t : out.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (t.exps[i] < m[i]) throw IntegrityError("polynomial not divisible by monomial");
                t.exps[i] = static_cast<std::uint16_t>(t.exps[i] - m[i]);
            }
        }
        // Dividing every term by the same monomial preserves grlex order.
        return out;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        if (p.vars() == q.vars()) {
            if (p.terms_.size() != q.terms_.size()) return false;
            for (std::size_t i = 0; i < p.terms_.size(); ++i) {
                if (p.terms_[i].exps != q.terms_[i].exps || p.terms_[i].coeff != q.terms_[i].coeff) return false;
            }
            return true;
        }
        return p.serialize() == q.serialize();
    }

    /// Evaluates at a point given in declared-variable order. T is any ring
    /// type constructible from Integer (Integer, Rational).
    template <class T>
    T evaluate(std::span<const T> point) const {
        if (point.size() != nvars()) throw Error("evaluation point arity mismatch");
        std::vector<unsigned> max_exp(nvars(), 0);
        for (const auto& t : terms_) {
            for (std::size_t i = 0; i < nvars(); ++i) max_exp[i] = std::max<unsigned>(max_exp[i], t.exps[i]);
        }
        std::vector<std::vector<T>> powers(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) {
            auto& pw = powers[i];
            pw.reserve(max_exp[i] + 1);
            pw.emplace_back(1);
            for (unsigned e = 1; e <= max_exp[i]; ++e) pw.push_back(T(pw.back() * point[i]));
        }
        T sum(0);
        T prod(0);
        for (const auto& t : terms_) {
            prod = t.coeff;
            for (std::size_t i = 0; i < nvars(); ++i) {
                if (t.exps[i] != 0) prod *= powers[i][t.exps[i]];
            }
            sum += prod;
        }
        return sum;
    }

    /// Exact integer evaluation; every occurring variable must be bound.
    Integer evaluate_int(const std::map<std::string, Integer>& point) const {
        std::vector<Integer> dense(nvars(), 0);
        std::vector<bool> used(nvars(), false);
        for (const auto& t : terms_) {
            for (std::size_t i = 0; i < nvars(); ++i) used[i] = used[i] || t.exps[i] != 0;
        }
        for (std::size_t i = 0; i < nvars(); ++i) {
            auto it = point.find((*vars_)[i]);
            if (it != point.end()) {
                dense[i] = it->second;
            } else if (used[i]) {
                throw Error("unbound variable '" + (*vars_)[i] + "'");
            }
        }
        return evaluate<Integer>(dense);
    }

    std::string serialize() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            const bool negative = t.coeff < 0;
            if (first) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            Integer mag = abs(t.coeff);
            out += mag.get_str();
            for (std::size_t i = 0; i < nvars(); ++i) {
                if (t.exps[i] == 0) continue;
                out += '*';
                out += (*vars_)[i];
                if (t.exps[i] != 1) {
                    out += '^';
                    out += std::to_string(t.exps[i]);
                }
            }
        }
        return out;
    }

    /// Parses canonical text, and also the compact juxtaposed form
    /// ("64f^4+384f^3g"): variable names are matched greedily against `vars`.
    static Polynomial parse(std::string_view text, VarList vars);

private:
    // Sums coefficients by monomial. Up to eight variables the exponent
    // vector is packed into a 128-bit key (16 bits per variable).
    class Accumulator {
    public:
        explicit Accumulator(std::size_t nvars, std::size_t max_terms = 0)
            : nvars_(nvars), max_terms_(max_terms), packed_(nvars <= 8) {}

        void add(const Exponents& e, const Integer& c) {
            if (c == 0) return;
            auto [it, inserted] = packed_ ? try_emplace_packed(e) : try_emplace_wide(e);
            if (!inserted) {
                *it += c;
            } else {
                *it = c;
            }
            check_budget();
        }

        void add_product(const Exponents& e, const Integer& a, const Integer& b) {
            auto [it, inserted] = packed_ ? try_emplace_packed(e) : try_emplace_wide(e);
            mpz_addmul(it->get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (inserted) check_budget();
        }

        std::vector<Term> take(bool sorted = true) {
            std::vector<Term> out;
            out.reserve(size());
            if (packed_) {
                for (auto& [k, c] : packed_map_) {
                    if (c != 0) out.push_back({unpack(k), std::move(c)});
                }
                packed_map_.clear();
            } else {
                for (auto& [e, c] : wide_map_) {
                    if (c != 0) out.push_back({e, std::move(c)});
                }
                wide_map_.clear();
            }
            if (!sorted) return out;
            std::sort(out.begin(), out.end(),
                      [](const Term& a, const Term& b) { return detail::grlex_greater(a.exps, b.exps); });
            return out;
        }

    private:
        using Key = unsigned __int128;

        struct KeyHash {
            std::size_t operator()(Key k) const noexcept {
                const auto lo = static_cast<std::uint64_t>(k);
                const auto hi = static_cast<std::uint64_t>(k >> 64);
                return static_cast<std::size_t>((lo ^ (hi * 0x9E3779B97F4A7C15ull)) * 0xBF58476D1CE4E5B9ull);
            }
        };

        std::size_t size() const { return packed_ ? packed_map_.size() : wide_map_.size(); }

        Key pack(const Exponents& e) const {
            Key k = 0;
            for (std::size_t i = 0; i < nvars_; ++i) k |= static_cast<Key>(e[i]) << (16 * i);
            return k;
        }

        Exponents unpack(Key k) const {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint16_t>(k >> (16 * i));
            return e;
        }

        std::pair<Integer*, bool> try_emplace_packed(const Exponents& e) {
            auto [it, inserted] = packed_map_.try_emplace(pack(e));
            return {&it->second, inserted};
        }

        std::pair<Integer*, bool> try_emplace_wide(const Exponents& e) {
            auto [it, inserted] = wide_map_.try_emplace(e);
            return {&it->second, inserted};
        }

        void check_budget() const {
            if (max_terms_ != 0 && size() > max_terms_) {
                throw ResourceError("term budget of " + std::to_string(max_terms_) + " exceeded");
            }
        }

        std::size_t nvars_;
        std::size_t max_terms_;
        bool packed_;
        std::unordered_map<Key, Integer, KeyHash> packed_map_;
        std::unordered_map<Exponents, Integer, detail::ExponentsHash> wide_map_;
    };

    friend Polynomial substitute(const Polynomial&, const std::map<std::string, Polynomial>&,
                                 std::optional<VarList>, std::size_t);

    explicit Polynomial(std::shared_ptr<const VarList> vars) : vars_(std::move(vars)) {}

    static std::vector<Term> multiply_terms(const std::vector<Term>& a, const std::vector<Term>& b, std::size_t width,
                                            std::size_t max_terms, bool sorted) {
        if (a.empty() || b.empty()) return {};
        if (a.size() == 1 && a.front().exps == Exponents(width, 0) && a.front().coeff == 1) return b;
        Accumulator acc(width, max_terms);
        Exponents e(width);
        for (const auto& ta : a) {
            for (const auto& tb : b) {
                for (std::size_t i = 0; i < width; ++i) e[i] = detail::add_exponent(ta.exps[i], tb.exps[i]);
                acc.add_product(e, ta.coeff, tb.coeff);
            }
        }
        return acc.take(sorted);
    }

    void check_unique_vars() const {
        for (std::size_t i = 0; i < vars_->size(); ++i) {
            if ((*vars_)[i].empty()) throw Error("empty variable name");
            for (std::size_t j = 0; j < i; ++j) {
                if ((*vars_)[i] == (*vars_)[j]) throw Error("duplicate variable '" + (*vars_)[i] + "'");
            }
        }
    }

    static VarList union_vars(const VarList& a, const VarList& b) {
        if (a == b) return a;
        VarList out = a;
        for (const auto& v : b) {
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
        return out;
    }

    /// For each of our variables, its index in `target` (or -1).
    std::vector<int> index_map(const Polynomial& target) const {
        std::vector<int> map(nvars());
        for (std::size_t i = 0; i < nvars(); ++i) map[i] = target.var_index((*vars_)[i]);
        return map;
    }

    Exponents remap(const Exponents& e, const std::vector<int>& map, std::size_t width) const {
        Exponents out(width, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] < 0) throw Error("variable '" + (*vars_)[i] + "' missing from target variable list");
            out[static_cast<std::size_t>(map[i])] = e[i];
        }
        return out;
    }

    static Polynomial combine(const Polynomial& p, const Polynomial& q, bool subtract) {
        const VarList vars = union_vars(p.vars(), q.vars());
        const Polynomial a = p.with_vars(vars);
        const Polynomial b = q.with_vars(vars);
        Polynomial out(vars);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        // Both inputs are sorted; merge.
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && detail::grlex_greater(a.terms_[i].exps, b.terms_[j].exps))) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || detail::grlex_greater(b.terms_[j].exps, a.terms_[i].exps)) {
                out.terms_.push_back(b.terms_[j++]);
                if (subtract) out.terms_.back().coeff = -out.terms_.back().coeff;
            } else {
                Integer c = subtract ? Integer(a.terms_[i].coeff - b.terms_[j].coeff)
                                     : Integer(a.terms_[i].coeff + b.terms_[j].coeff);
                if (c != 0) out.terms_.push_back({a.terms_[i].exps, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::shared_ptr<const VarList> vars_;
    std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Simultaneous substitution of bound variables. The result lives over
/// `target` when given, otherwise over the unbound variables of `p`
/// followed by the variables of the bindings in first-seen order.
/// `max_terms` caps the size of the intermediate expansion (0 = no cap).
inline Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings,
                             std::optional<VarList> target = std::nullopt, std::size_t max_terms = 0) {
    const std::size_t n = p.nvars();
    std::vector<const Polynomial*> bound(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = bindings.find(p.vars()[i]);
        if (it != bindings.end()) bound[i] = &it->second;
    }

    VarList vars;
    if (target) {
        vars = std::move(*target);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (!bound[i]) vars.push_back(p.vars()[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!bound[i]) continue;
            for (const auto& v : bound[i]->vars()) {
                if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
            }
        }
    }

    Polynomial out(vars);
    const std::size_t width = out.nvars();
    std::vector<int> base_index(n, -1);
    std::vector<Polynomial> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (bound[i]) {
            images[i] = bound[i]->with_vars(vars);
        } else {
            base_index[i] = out.var_index(p.vars()[i]);
        }
    }

    // powers[i][e] = images[i]^e, filled lazily
    std::vector<std::vector<Polynomial>> powers(n);
    auto power_of = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Polynomial::constant(vars, 1));
        while (pw.size() <= e) pw.push_back(Polynomial::multiply(pw.back(), images[i], max_terms));
        return pw[e];
    };

    Polynomial::Accumulator acc(width, max_terms);
    Exponents base(width);
    Exponents e(width);
    for (const auto& t : p.terms()) {
        std::fill(base.begin(), base.end(), 0);
        const std::vector<Polynomial::Term>* single = nullptr;
        std::vector<Polynomial::Term> product;
        for (std::size_t i = 0; i < n; ++i) {
            if (t.exps[i] == 0) continue;
            if (!bound[i]) {
                if (base_index[i] < 0) {
                    throw Error("variable '" + p.vars()[i] + "' missing from target variable list");
                }
                base[static_cast<std::size_t>(base_index[i])] = t.exps[i];
                continue;
            }
            const auto& pw = power_of(i, t.exps[i]).terms_;
            if (!single) {
                single = &pw;
            } else {
                product = Polynomial::multiply_terms(*single, pw, width, max_terms, false);
                single = &product;
            }
        }
        if (!single) {
            acc.add(base, t.coeff);
            continue;
        }
        for (const auto& s : *single) {
            for (std::size_t k = 0; k < width; ++k) e[k] = detail::add_exponent(base[k], s.exps[k]);
            acc.add_product(e, t.coeff, s.coeff);
        }
    }
    out.terms_ = acc.take();
    return out;
}

inline Polynomial Polynomial::parse(std::string_view text, VarList vars) {
    Polynomial shape(std::move(vars));
    const VarList& names = shape.vars();
    std::size_t pos = 0;

    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_uint = [&]() -> std::string {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    };
    auto match_var = [&]() -> int {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto& nm = names[i];
            if (nm.size() > best_len && text.substr(pos, nm.size()) == nm) {
                best = static_cast<int>(i);
                best_len = nm.size();
            }
        }
        if (best >= 0) pos += best_len;
        return best;
    };

    std::vector<Term> terms;
    skip_ws();
    if (pos == text.size()) throw ParseError("empty polynomial text", pos);
    bool first = true;
    while (true) {
        skip_ws();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            negative = text[pos] == '-';
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", pos);
        }
        first = false;

        Term term{Exponents(names.size(), 0), Integer(1)};
        bool have_factor = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            term.coeff = Integer(read_uint());
            have_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                if (pos == text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
                    throw ParseError("expected variable after '*'", pos);
                }
            }
        }
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            const std::size_t at = pos;
            const int idx = match_var();
            if (idx < 0) throw ParseError("unknown variable", at);
            unsigned exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                const std::size_t exp_at = pos;
                const std::string digits = read_uint();
                if (digits.empty()) throw ParseError("expected exponent", exp_at);
                if (digits.size() > 5 || std::stoul(digits) > std::numeric_limits<std::uint16_t>::max()) {
                    throw ParseError("exponent too large", exp_at);
                }
                exp = static_cast<unsigned>(std::stoul(digits));
            }
            auto& slot = term.exps[static_cast<std::size_t>(idx)];
            slot = detail::add_exponent(slot, exp);
            have_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                if (pos == text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
                    throw ParseError("expected variable after '*'", pos);
                }
            }
        }
        if (!have_factor) throw ParseError("expected coefficient or variable", pos);
        if (negative) term.coeff = -term.coeff;
        terms.push_back(std::move(term));
        skip_ws();
        if (pos == text.size()) break;
    }
    return from_terms(names, std::move(terms));
}

}  // namespace hanoi_dimer
