#include <gtest/gtest.h>

#include <random>

#include "hanoi_dimer/matching_oracle.hpp"
#include "hanoi_dimer/recursion_gen.hpp"

using namespace hanoi_dimer;

namespace {

Graph complete(std::size_t n) {
    std::vector<Graph::Edge> e;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph(n, e);
}

// Edge-subset enumeration, independent of the vertex-elimination counter.
mpz_class brute_force(const Graph& g) {
    const auto& e = g.edges();
    long count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.size()); ++s) {
        std::uint64_t used = 0;
        bool ok = true;
        for (std::size_t i = 0; ok && i < e.size(); ++i) {
            if (!(s >> i & 1)) continue;
            const auto bits = (std::uint64_t{1} << e[i].first) | (std::uint64_t{1} << e[i].second);
            ok = (used & bits) == 0;
            used |= bits;
        }
        count += ok;
    }
    return count;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> e;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (coin(rng)) e.emplace_back(a, b);
    return Graph(n, e);
}

}  // namespace

TEST(CountMatchings, CompleteGraphOnFour) { EXPECT_EQ(count_matchings(complete(4)), 10); }

TEST(CountMatchings, SingleEdge) { EXPECT_EQ(count_matchings(Graph(2, {{0, 1}})), 2); }

TEST(CountMatchings, HanoiThreeStageOne) { EXPECT_EQ(count_matchings(build(3, 1).graph), 25817); }

TEST(CountMatchings, AgreesWithEdgeSubsetEnumeration) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const auto g = random_graph(rng, 9, 0.35);
        if (g.edge_count() > 20) continue;
        EXPECT_EQ(count_matchings(g), brute_force(g));
    }
}

TEST(CountMatchings, DeletionRecursion) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto g = random_graph(rng, 12, 0.3);
        if (g.edge_count() == 0) continue;
        const auto [u, v] = g.edges().front();
        std::vector<Graph::Edge> minus_e(g.edges().begin() + 1, g.edges().end());
        MatchingCounter c(Graph(g.vertex_count(), minus_e));
        const std::uint64_t all = c.full_mask();
        const std::uint64_t without_uv = all & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
        EXPECT_EQ(count_matchings(g), c.count(all) + c.count(without_uv));
    }
}

TEST(CountMatchings, SizeCap) {
    EXPECT_THROW(count_matchings(build(2, 3).graph), ResourceError);
    OracleLimits tiny;
    tiny.max_memo_entries = 4;
    EXPECT_THROW(count_matchings(build(3, 1).graph, tiny), ResourceError);
}

TEST(CountConstrained, AllDimerOnCompleteGraph) {
    const auto g = build(3, 0);
    EXPECT_EQ(count_constrained(g, parse_constraint("dddd")), 3);
}

TEST(CountConstrained, OneDimerThreeMonomers) {
    EXPECT_EQ(count_constrained(build(3, 0), parse_constraint("dmmm")), 0);
}

TEST(CountConstrained, FourDimensionalAllMonomer) {
    EXPECT_EQ(count_constrained(build(4, 1), parse_constraint("mmmmm")), 510980);
}

TEST(CountConstrained, AllFreeIsUnconstrained) {
    for (int d = 2; d <= 4; ++d) {
        const auto g = build(d, 1);
        EXPECT_EQ(count_constrained(g, CornerConstraint(static_cast<std::size_t>(d + 1), CornerStatus::Free)),
                  count_matchings(g.graph));
    }
}

TEST(CountConstrained, AddingConstraintsNeverIncreases) {
    const auto g = build(3, 1);
    const auto free = count_constrained(g, parse_constraint("ffff"));
    for (const char* c : {"mfff", "dfff", "mdff", "ddff", "mmdd", "dddd", "mmmm"}) {
        const auto x = count_constrained(g, parse_constraint(c));
        EXPECT_LE(x, free) << c;
    }
    EXPECT_LE(count_constrained(g, parse_constraint("mmff")), count_constrained(g, parse_constraint("mfff")));
    EXPECT_LE(count_constrained(g, parse_constraint("ddff")), count_constrained(g, parse_constraint("dfff")));
}

TEST(CountConstrained, BadConstraint) {
    EXPECT_THROW(parse_constraint("mx"), DomainError);
    EXPECT_THROW(count_constrained(build(3, 0), parse_constraint("mmm")), DomainError);
}

TEST(BoundaryClassVector, ThreeDimensionalStageOne) {
    const auto oc = boundary_class_vector(build(3, 1));
    const std::vector<mpz_class> expect{1010, 1242, 1556, 1983, 2571};
    EXPECT_EQ(oc.c, expect);
    EXPECT_EQ(oc.M, 25817);
}

TEST(BoundaryClassVector, StageZero) {
    EXPECT_EQ(boundary_class_vector(build(3, 0)).c, (std::vector<mpz_class>{1, 0, 1, 0, 3}));
    EXPECT_EQ(boundary_class_vector(build(4, 0)).c, (std::vector<mpz_class>{1, 0, 1, 0, 3, 0}));
}

TEST(BoundaryClassVector, TotalIsBinomialSum) {
    for (int d = 2; d <= 4; ++d) {
        for (int n = 0; n <= 1; ++n) {
            const auto oc = boundary_class_vector(build(d, n));
            mpz_class m = 0;
            for (std::size_t k = 0; k < oc.c.size(); ++k) {
                m += binomial(static_cast<unsigned>(d + 1), static_cast<unsigned>(k)) * oc.c[k];
            }
            EXPECT_EQ(m, oc.M);
        }
    }
}
