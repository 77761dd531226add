#pragma once

// Full reproduction run for d = 2, 3, 4 against the reference values.
// Output is deterministic: no timings, no addresses, fixed ordering.

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hanoi_dimer/entropy.hpp"
#include "hanoi_dimer/evolve.hpp"
#include "hanoi_dimer/fixtures.hpp"
#include "hanoi_dimer/hanoi_graph.hpp"
#include "hanoi_dimer/matching_oracle.hpp"
#include "hanoi_dimer/recursion_gen.hpp"

namespace hanoi_dimer {

using SystemSource = std::function<RecursionSystem(int)>;

struct ReproduceSummary {
    int checks = 0;
    int mismatches = 0;

    bool ok() const { return mismatches == 0; }
};

namespace detail {

class Reporter {
public:
    explicit Reporter(std::ostream& os) : os_(os) {}

    void check(const std::string& label, const std::string& expected, const std::string& got) {
        ++sum_.checks;
        if (expected == got) {
            os_ << "PASS " << label << " = " << got << '\n';
        } else {
            ++sum_.mismatches;
            os_ << "FAIL " << label << "\n  expected " << expected << "\n  got      " << got << '\n';
        }
    }

    void check_true(const std::string& label, bool ok, const std::string& note = {}) {
        ++sum_.checks;
        if (!ok) ++sum_.mismatches;
        os_ << (ok ? "PASS " : "FAIL ") << label << (note.empty() ? "" : ": " + note) << '\n';
    }

    void section(const std::string& title) { os_ << "\n== " << title << " ==\n"; }
    std::ostream& out() { return os_; }
    const ReproduceSummary& summary() const { return sum_; }

private:
    std::ostream& os_;
    ReproduceSummary sum_;
};

template <class Rows>
void compare_counts(Reporter& rep, int d, const Rows& rows, const std::vector<BoundaryClassVector>& vs) {
    for (const auto& row : rows) {
        for (int n = 1; n <= 2; ++n) {
            const auto& v = vs.at(static_cast<std::size_t>(n));
            const Integer& got = row.k < 0 ? v.M : v.c.at(static_cast<std::size_t>(row.k));
            rep.check("d=" + std::to_string(d) + " " + std::string(row.label) + "(" + std::to_string(n) + ")",
                      std::string(row.at[static_cast<std::size_t>(n - 1)]), got.get_str());
        }
    }
}

template <class Rows>
void compare_ratios(Reporter& rep, int d, const Rows& rows, const RatioTrace& tr) {
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.at.size(); ++i) {
            rep.check("d=" + std::to_string(d) + " " + std::string(row.label) + "(" + std::to_string(tr.stages[i]) + ")",
                      std::string(row.at[i]),
                      render_decimal(tr.ratios[i][static_cast<std::size_t>(row.j)], row.digits, Rounding::HalfEven));
        }
    }
}

inline void oracle_verify(Reporter& rep, const RecursionSystem& sys, int n_max) {
    const auto vs = evolve_to(sys, n_max);
    for (int n = 0; n <= n_max; ++n) {
        const auto oc = boundary_class_vector(build(sys.d, n));
        const auto& v = vs[static_cast<std::size_t>(n)];
        bool same = oc.M == v.M && oc.c.size() == v.c.size();
        for (std::size_t k = 0; same && k < v.c.size(); ++k) same = oc.c[k] == v.c[k];
        rep.check_true("d=" + std::to_string(sys.d) + " oracle n=" + std::to_string(n), same,
                       "M=" + oc.M.get_str());
    }
}

inline void compare_prefix(Reporter& rep, const std::string& label, std::string_view expected, const std::string& got) {
    const std::string head = got.substr(0, std::min(got.size(), expected.size()));
    rep.check(label, std::string(expected), head);
}

}  // namespace detail

inline ReproduceSummary reproduce(std::ostream& os, const SystemSource& systems) {
    detail::Reporter rep(os);
    os << "hanoi-dimer reproduction, reference set v" << reference::kVersion << '\n';

    const auto s2 = systems(2);
    const auto s3 = systems(3);
    const auto s4 = systems(4);

    rep.section("oracle equivalence");
    detail::oracle_verify(rep, s2, 2);
    detail::oracle_verify(rep, s3, 1);
    detail::oracle_verify(rep, s4, 1);

    const auto v2 = evolve_to(s2, 6);
    const auto v3 = evolve_to(s3, 6);
    const auto v4 = evolve_to(s4, 6);

    rep.section("class counts d=3");
    detail::compare_counts(rep, 3, reference::kCountsD3, v3);
    rep.section("class counts d=4");
    detail::compare_counts(rep, 4, reference::kCountsD4, v4);

    const auto stages = [](const std::vector<BoundaryClassVector>& vs, int lo, int hi) {
        return std::vector<BoundaryClassVector>(vs.begin() + lo, vs.begin() + hi + 1);
    };
    const auto t3 = ratios(stages(v3, 1, 4));
    const auto t4 = ratios(stages(v4, 1, 4));

    rep.section("ratios d=3");
    detail::compare_ratios(rep, 3, reference::kRatiosD3, t3);
    rep.section("ratios d=4");
    detail::compare_ratios(rep, 4, reference::kRatiosD4, t4);

    rep.section("eps(n+1)/eps(n)^2 d=3");
    {
        const auto t35 = ratios(stages(v3, 1, 5));
        const auto er = t35.eps_ratios();
        for (std::size_t i = 0; i < reference::kEpsRatiosD3.size(); ++i) {
            rep.check("d=3 eps ratio n=" + std::to_string(i + 1), std::string(reference::kEpsRatiosD3[i]),
                      render_decimal(er[i], reference::kEpsRatioDigits, Rounding::HalfEven));
        }
    }

    rep.section("ratio limits");
    {
        const auto l3 = check_ratio_trace(ratios(stages(v3, 1, 6)));
        const auto l4 = check_ratio_trace(ratios(stages(v4, 1, 6)));
        rep.check_true("d=3 ordering and monotonicity", l3.ok(), l3.ok() ? "" : l3.violations.front());
        rep.check_true("d=4 ordering and monotonicity", l4.ok(), l4.ok() ? "" : l4.violations.front());
        detail::compare_prefix(rep, "d=3 limit", reference::kLimitD3, l3.limit_prefix);
        detail::compare_prefix(rep, "d=4 limit", reference::kLimitD4, l4.limit_prefix);
    }

    rep.section("entropy bounds k=6 p=160");
    const std::vector<std::pair<const std::vector<BoundaryClassVector>*, std::pair<std::string_view, int>>> jobs{
        {&v2, {reference::kEntropyD2, 0}},
        {&v3, {reference::kEntropyD3, reference::kCertifiedDigitsD3}},
        {&v4, {reference::kEntropyD4, reference::kCertifiedDigitsD4}},
    };
    for (const auto& [vs, want] : jobs) {
        const int d = vs->front().d;
        const auto b = bounds(d, 6, *vs, kDefaultPrecision);
        const std::string tag = "d=" + std::to_string(d);
        os << tag << " lower " << b.lower.str() << '\n' << tag << " upper " << b.upper.str() << '\n';
        detail::compare_prefix(rep, tag + " z prefix", want.first, b.certified_prefix());
        if (want.second > 0) {
            rep.check_true(tag + " certified digits >= " + std::to_string(want.second), b.certified_digits >= want.second,
                           std::to_string(b.certified_digits));
        }
    }

    rep.section("finite sandwich");
    for (const auto* vs : {&v3, &v4}) {
        for (const auto& [k, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            const auto r = finite_sandwich_check(vs->front().d, k, n, *vs);
            rep.check_true("d=" + std::to_string(vs->front().d) + " k=" + std::to_string(k) + " n=" + std::to_string(n),
                           r.ok());
        }
    }

    const auto& s = rep.summary();
    os << "\nchecks " << s.checks << ", mismatches " << s.mismatches << '\n';
    return s;
}

}  // namespace hanoi_dimer
