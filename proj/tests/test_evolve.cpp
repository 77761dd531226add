#include <gtest/gtest.h>

#include "hanoi_dimer/evolve.hpp"
#include "hanoi_dimer/fixtures.hpp"
#include "hanoi_dimer/hanoi_graph.hpp"
#include "hanoi_dimer/matching_oracle.hpp"

using namespace hanoi_dimer;

namespace {

const RecursionSystem& sys(int d) {
    static std::map<int, RecursionSystem> memo;
    auto it = memo.find(d);
    if (it == memo.end()) it = memo.emplace(d, generate(d)).first;
    return it->second;
}

std::vector<BoundaryClassVector> from(const std::vector<BoundaryClassVector>& vs, int lo) {
    return {vs.begin() + lo, vs.end()};
}

Rational Q(const char* text) {
    Rational q(text);
    q.canonicalize();
    return q;
}

Rational decimal(std::string_view text) {
    const auto dot = text.find('.');
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(Integer(digits + frac, 10), den);
    q.canonicalize();
    return q;
}

}  // namespace

TEST(InitialVector, DoubleFactorialPattern) {
    const auto v = initial_vector(4);
    ASSERT_EQ(v.c.size(), 6u);
    const std::vector<Integer> want{1, 0, 1, 0, 3, 0};
    EXPECT_EQ(v.c, want);
    // K5 has 1 + 10 + 15 matchings
    EXPECT_EQ(v.M, 26);
    EXPECT_EQ(initial_vector(3).M, 10);
}

TEST(Step, ReferenceCountsD3) {
    const auto vs = evolve_to(sys(3), 2);
    for (const auto& row : reference::kCountsD3) {
        for (int n = 1; n <= 2; ++n) {
            const auto& v = vs[static_cast<std::size_t>(n)];
            const Integer& got = row.k < 0 ? v.M : v.c[static_cast<std::size_t>(row.k)];
            EXPECT_EQ(got.get_str(), row.at[static_cast<std::size_t>(n - 1)]) << row.label << " n=" << n;
        }
    }
    EXPECT_EQ(vs[2].c[0], Integer("49464202269253193"));
}

TEST(Step, ReferenceCountsD4) {
    const auto vs = evolve_to(sys(4), 2);
    for (const auto& row : reference::kCountsD4) {
        for (int n = 1; n <= 2; ++n) {
            const auto& v = vs[static_cast<std::size_t>(n)];
            const Integer& got = row.k < 0 ? v.M : v.c[static_cast<std::size_t>(row.k)];
            EXPECT_EQ(got.get_str(), row.at[static_cast<std::size_t>(n - 1)]) << row.label << " n=" << n;
        }
    }
    EXPECT_EQ(vs[1].M, 48645865);
    EXPECT_EQ(vs[1].c[5], 3779500);
}

TEST(Step, TotalAgreesWithClassSum) {
    for (int d = 2; d <= 5; ++d) {
        const auto vs = evolve_to(sys(d), 3);
        for (const auto& v : vs) EXPECT_EQ(v.M, total_from_classes(d, v.c)) << "d=" << d << " n=" << v.n;
    }
}

TEST(EvolveTo, StageZeroIsInitialVector) {
    const auto vs = evolve_to(sys(3), 0);
    ASSERT_EQ(vs.size(), 1u);
    EXPECT_EQ(vs[0].c, initial_vector(3).c);
}

TEST(EvolveTo, MatchesOracleForD2) {
    const auto vs = evolve_to(sys(2), 2);
    EXPECT_EQ(vs[2].M, 4007754);
    for (int n = 0; n <= 2; ++n) {
        const auto oc = boundary_class_vector(build(2, n));
        EXPECT_EQ(oc.M, vs[static_cast<std::size_t>(n)].M);
        EXPECT_EQ(oc.c, vs[static_cast<std::size_t>(n)].c);
    }
}

TEST(EvolveTo, DigitCapThrowsBeforeWork) {
    EXPECT_THROW(evolve_to(sys(3), 12), ResourceError);
    EXPECT_THROW(evolve_to(sys(3), 4, 100.0), ResourceError);
    EXPECT_NO_THROW(evolve_to(sys(3), 3, 1000.0));
    EXPECT_THROW(evolve_to(sys(3), -1), DomainError);
}

TEST(Invariants, BrokenOrderingIsReported) {
    auto v = evolve_to(sys(3), 1).back();
    EXPECT_NO_THROW(check_invariants(v));
    std::swap(v.c[0], v.c[1]);
    EXPECT_THROW(check_invariants(v), IntegrityError);
}

TEST(Invariants, ClassOrderingDirection) {
    // d=2 classes fall with k, d >= 3 classes rise
    for (int d = 2; d <= 6; ++d) {
        const auto vs = evolve_to(sys(d), d <= 4 ? 3 : 2);
        for (std::size_t n = 1; n < vs.size(); ++n) {
            const auto& c = vs[n].c;
            for (std::size_t k = 0; k + 1 < c.size(); ++k) {
                if (increasing_classes(d)) {
                    EXPECT_LT(c[k], c[k + 1]) << "d=" << d << " n=" << n << " k=" << k;
                } else {
                    EXPECT_GT(c[k], c[k + 1]) << "d=" << d << " n=" << n << " k=" << k;
                }
            }
        }
    }
}

TEST(Ratios, FirstStageD3) {
    const auto vs = evolve_to(sys(3), 1);
    const auto t = ratios(from(vs, 1));
    const auto& c = vs[1].c;
    EXPECT_EQ(t.alpha(0), Rational(c[0]) / Rational(c[1]));
    EXPECT_EQ(t.omega(0), Rational(c[3]) / Rational(c[4]));
    EXPECT_EQ(t.eps[0], t.alpha(0) - t.omega(0));
    EXPECT_EQ(render_decimal(t.alpha(0), reference::kRatiosD3[0].digits),
              std::string(reference::kRatiosD3[0].at[0]));
}

TEST(Ratios, SecondStageAlphaD4) {
    const auto t = ratios(from(evolve_to(sys(4), 2), 1));
    EXPECT_EQ(render_decimal(t.alpha(1), reference::kRatiosD4[0].digits),
              std::string(reference::kRatiosD4[0].at[1]));
}

TEST(Ratios, StageZeroHasZeroDenominator) {
    const auto vs = evolve_to(sys(3), 1);
    EXPECT_THROW(ratios(vs), DomainError);
    EXPECT_THROW(ratios({}), DomainError);
}

TEST(Ratios, InterleavingOfClasses) {
    for (int d = 3; d <= 6; ++d) {
        const auto t = ratios(from(evolve_to(sys(d), d <= 4 ? 4 : 2), 1));
        for (const auto& r : t.ratios) {
            for (std::size_t j = 0; j + 1 < r.size(); ++j) EXPECT_GE(r[j], r[j + 1]) << "d=" << d;
            EXPECT_LT(r.front(), 1);
            EXPECT_GT(r.back(), 0);
        }
    }
    const auto t2 = ratios(from(evolve_to(sys(2), 4), 1));
    for (const auto& r : t2.ratios) EXPECT_GT(r.back(), 1);
}

TEST(RenderDecimal, RoundingModes) {
    EXPECT_EQ(render_decimal(Q("1/8"), 2, Rounding::HalfEven), "0.12");
    EXPECT_EQ(render_decimal(Q("3/8"), 2, Rounding::HalfEven), "0.38");
    EXPECT_EQ(render_decimal(Q("2/3"), 3, Rounding::HalfEven), "0.667");
    EXPECT_EQ(render_decimal(Q("2/3"), 3, Rounding::Down), "0.666");
    EXPECT_EQ(render_decimal(Q("1/3"), 3, Rounding::Up), "0.334");
    EXPECT_EQ(render_decimal(Q("-2/3"), 3, Rounding::TowardZero), "-0.666");
    EXPECT_EQ(render_decimal(Q("-2/3"), 3, Rounding::Down), "-0.667");
    EXPECT_EQ(render_decimal(Q("999/1000"), 2, Rounding::HalfEven), "1.00");
    EXPECT_EQ(render_decimal(Q("7/2"), 0, Rounding::HalfEven), "4");
    EXPECT_EQ(render_decimal(Q("5/2"), 0, Rounding::HalfEven), "2");
}

TEST(CommonDigits, CountsAfterPoint) {
    EXPECT_EQ(common_decimal_digits("0.12345", "0.12399"), 3);
    EXPECT_EQ(common_decimal_digits("0.5", "0.5"), 1);
    EXPECT_EQ(common_decimal_digits("0.1", "1.1"), 0);
}

TEST(RatioTraceCheck, HoldsForD3AndD4) {
    const auto l3 = check_ratio_trace(ratios(from(evolve_to(sys(3), 6), 1)));
    EXPECT_TRUE(l3.ok()) << (l3.ok() ? "" : l3.violations.front());
    EXPECT_EQ(l3.limit_prefix.substr(0, std::string(reference::kLimitD3).size()), reference::kLimitD3);

    const auto l4 = check_ratio_trace(ratios(from(evolve_to(sys(4), 6), 1)));
    EXPECT_TRUE(l4.ok()) << (l4.ok() ? "" : l4.violations.front());
    EXPECT_EQ(l4.limit_prefix.substr(0, std::string(reference::kLimitD4).size()), reference::kLimitD4);
}

TEST(RatioTraceCheck, LimitDigitsRoughlyDoublePerStage) {
    int last = 0;
    for (int n = 3; n <= 6; ++n) {
        const auto l = check_ratio_trace(ratios(from(evolve_to(sys(3), n), 1)));
        EXPECT_GT(l.limit_digits, last);
        if (n >= 4) {
            EXPECT_GE(l.limit_digits, 2 * last - 2) << "n=" << n;
        }
        last = l.limit_digits;
    }
}

TEST(RatioTraceCheck, TamperedTraceIsCaught) {
    auto t = ratios(from(evolve_to(sys(3), 3), 1));
    t.ratios[2].front() = t.ratios[1].front() + 1;
    const auto l = check_ratio_trace(t);
    EXPECT_FALSE(l.ok());
}

TEST(EpsRatio, ConvergesToItsLimit) {
    // limit value from an independent high-stage run
    const auto er = ratios(from(evolve_to(sys(3), 6), 1)).eps_ratios();
    const Rational limit = decimal(reference::kEpsRatioLimitD3);
    ASSERT_GE(er.size(), 4u);
    for (std::size_t i = 3; i < er.size(); ++i) {
        const Rational diff = er[i] - limit;
        EXPECT_LT(abs(diff), Q("1/10000000000")) << "n=" << i + 1;
    }
    for (const auto& q : er) {
        EXPECT_GT(q, 0);
        EXPECT_LT(q, 3);
    }
}
