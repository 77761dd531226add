#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hanoi_dimer/multipoly.hpp"
#include "hanoi_dimer/recursion_gen.hpp"

using namespace hanoi_dimer;

namespace {

const VarList kFghts{"f", "g", "h", "t", "s"};

Polynomial P(std::string_view text, const VarList& vars = kFghts) { return Polynomial::parse(text, vars); }

Polynomial random_poly(std::mt19937_64& rng, const VarList& vars) {
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<long> coeff(-1'000'000, 1'000'000);
    std::vector<Polynomial::Term> terms;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e(vars.size());
        for (auto& x : e) x = static_cast<std::uint16_t>(exp(rng));
        if (detail::degree_of(e) > 6) continue;
        terms.push_back({e, Integer(coeff(rng))});
    }
    return Polynomial::from_terms(vars, terms);
}

}  // namespace

TEST(PolyAdd, AdditiveInverseIsZero) {
    const auto f = Polynomial::variable(kFghts, "f");
    const auto sum = poly_add(f, -f);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(sum.serialize(), "0");
}

TEST(PolyAdd, CollectsLikeTerms) {
    EXPECT_EQ(poly_add(P("f+g"), P("g")).serialize(), "1*f + 2*g");
}

TEST(PolyAdd, MixedCountAssembledByRepeatedAddition) {
    Polynomial acc(kFghts);
    acc = poly_add(acc, P("f"));
    for (int i = 0; i < 3; ++i) acc = poly_add(acc, P("g"));
    for (int i = 0; i < 3; ++i) acc = poly_add(acc, P("h"));
    acc = poly_add(acc, P("t"));
    EXPECT_EQ(acc.renamed(class_vars(3)), mixed_count_expansion(3, 1, 0));
}

TEST(PolyAdd, UnionOfVariableSets) {
    const auto p = Polynomial::variable({"x"}, "x");
    const auto q = Polynomial::variable({"y"}, "y");
    const auto s = p + q;
    EXPECT_EQ(s.vars(), (VarList{"x", "y"}));
    EXPECT_EQ(s.serialize(), "1*x + 1*y");
}

TEST(PolyMul, BinomialSquare) {
    const VarList v{"a"};
    const auto one_a = P("1+a", v);
    EXPECT_EQ(poly_mul(one_a, one_a), P("1+2a+a^2", v));
}

TEST(PolyMul, EdgeFactorSixthPower) {
    const VarList v{"a"};
    const auto p = P("1+2a+2a^2", v).pow(6);
    EXPECT_EQ(p.coefficient({{"a", 3}}), 280);
    EXPECT_EQ(p.coefficient({{"a", 12}}), 64);
    EXPECT_EQ(p.coefficient({{"a", 1}}), 12);
    EXPECT_EQ(p.coefficient({{"a", 2}}), 72);
}

TEST(PolyMul, MixedCountFourthPowerAgainstConvolution) {
    const auto p = mixed_count_expansion(3, 1, 0).renamed(kFghts);
    const auto p4 = p.pow(4);
    EXPECT_EQ(p4.coefficient({{"f", 4}}), 1);
    EXPECT_EQ(p4.coefficient({{"f", 3}, {"g", 1}}), 12);
    // independent convolution over the four-fold product of terms
    std::map<std::vector<int>, long> conv;
    const std::vector<std::pair<int, long>> terms{{0, 1}, {1, 3}, {2, 3}, {3, 1}};
    for (auto [a, ca] : terms)
        for (auto [b, cb] : terms)
            for (auto [c, cc] : terms)
                for (auto [d, cd] : terms) {
                    std::vector<int> e(5, 0);
                    ++e[a], ++e[b], ++e[c], ++e[d];
                    conv[e] += ca * cb * cc * cd;
                }
    EXPECT_EQ(p4.size(), conv.size());
    for (const auto& [e, c] : conv) {
        Exponents ex(e.begin(), e.end());
        EXPECT_EQ(p4.coefficient(ex), c);
    }
}

TEST(Substitute, IdentityBinding) {
    const auto f = Polynomial::variable(kFghts, "f");
    EXPECT_EQ(substitute(f, {{"f", f}}), f);
}

TEST(Substitute, IdentityBindingsOnRandomPolynomials) {
    std::mt19937_64 rng(7);
    const VarList v{"x", "y", "z"};
    std::map<std::string, Polynomial> id;
    for (const auto& name : v) id.emplace(name, Polynomial::variable(v, name));
    for (int i = 0; i < 50; ++i) {
        const auto p = random_poly(rng, v);
        EXPECT_EQ(substitute(p, id, v), p);
    }
}

TEST(Substitute, UnboundVariablesCarryThrough) {
    const VarList v{"x", "y"};
    const auto p = P("x^2*y+3y", v);
    const auto out = substitute(p, {{"x", P("1+y", v)}}, v);
    EXPECT_EQ(out, P("y+2y^2+y^3+3y", v));
}

TEST(Substitute, TermBudgetIsEnforced) {
    const VarList v{"x", "y", "z", "u"};
    const auto p = P("x^9", v);
    EXPECT_THROW(substitute(p, {{"x", P("1+y+z+u", v)}}, v, 50), ResourceError);
}

TEST(EvaluateInt, ReferencePointValue) {
    const auto p = P(
        "64f^4+384f^3g+192f^3h+32f^3t+960f^2g^2+312f^2h^2+12f^2t^2+1056f^2gh+192f^2gt+120f^2ht+1152fg^3+304fh^3+4ft^"
        "3+2064fg^2h+408fg^2t+1320fgh^2+204fh^2t+60fgt^2+48fht^2+552fght+552g^4+138h^4+t^4+1416g^3h+304g^3t+708gh^3+"
        "144h^3t+12gt^3+12ht^3+660g^2ht+516gh^2t+132ght^2+1452g^2h^2+78g^2t^2+60h^2t^2");
    const std::map<std::string, Integer> pt{{"f", 1}, {"g", 0}, {"h", 1}, {"t", 0}, {"s", 3}};
    EXPECT_EQ(p.evaluate_int(pt), 1010);
}

TEST(EvaluateInt, ZeroPointGivesConstantTerm) {
    const auto p = P("7+3f^2+g*h");
    EXPECT_EQ(p.evaluate_int({{"f", 0}, {"g", 0}, {"h", 0}, {"t", 0}, {"s", 0}}), 7);
}

TEST(EvaluateInt, UnboundVariableIsNamed) {
    const auto p = P("f+g");
    try {
        p.evaluate_int({{"f", 1}});
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("'g'"), std::string::npos);
    }
}

TEST(Serialize, ZeroAndSimpleForms) {
    EXPECT_EQ(Polynomial(kFghts).serialize(), "0");
    EXPECT_EQ(P("2g+f").serialize(), "1*f + 2*g");
    EXPECT_EQ(P("-3f").serialize(), "-3*f");
    EXPECT_EQ(P("f-g").serialize(), "1*f - 1*g");
}

TEST(Serialize, GradedLexOrder) {
    // higher degree first, then lexicographic on the declared order
    EXPECT_EQ(P("s+f^2+f*g+g^2+1").serialize(), "1*f^2 + 1*f*g + 1*g^2 + 1*s + 1");
}

TEST(Serialize, RoundTripIsFixpoint) {
    const auto sys = generate(3);
    for (const auto& p : sys.classes) {
        const auto text = p.serialize();
        const auto again = Polynomial::parse(text, p.vars());
        EXPECT_EQ(again.serialize(), text);
        EXPECT_EQ(again, p);
    }
}

TEST(Parse, MalformedTextReportsPosition) {
    try {
        Polynomial::parse("1*f + *g", kFghts);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 6u);
    }
    EXPECT_THROW(Polynomial::parse("1*q", kFghts), ParseError);
    EXPECT_THROW(Polynomial::parse("", kFghts), ParseError);
}

TEST(Polynomial, DuplicateVariablesRejected) { EXPECT_THROW(Polynomial(VarList{"x", "x"}), Error); }

TEST(Polynomial, DivideByMonomial) {
    const VarList v{"x", "y"};
    EXPECT_EQ(P("x^2y+xy^3", v).divided_by_monomial({1, 1}), P("x+y^2", v));
    EXPECT_THROW(P("x^2+y", v).divided_by_monomial({1, 0}), IntegrityError);
}

class RingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RingAxioms, HoldOnRandomPolynomials) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
    const VarList v{"w", "x", "y", "z"};
    std::uniform_int_distribution<long> pt(-20, 20);
    for (int i = 0; i < 20; ++i) {
        const auto a = random_poly(rng, v);
        const auto b = random_poly(rng, v);
        const auto c = random_poly(rng, v);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        std::vector<Integer> x{pt(rng), pt(rng), pt(rng), pt(rng)};
        EXPECT_EQ((a * b).evaluate<Integer>(x), a.evaluate<Integer>(x) * b.evaluate<Integer>(x));
        EXPECT_EQ(Polynomial::parse(a.serialize(), v), a);
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RingAxioms, ::testing::Values(1, 2, 3, 4, 5));
