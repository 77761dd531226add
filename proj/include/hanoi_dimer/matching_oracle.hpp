#pragma once

// Brute-force matching counts. Serves as ground truth for the generated
// recursions, so it deliberately shares no code with recursion_gen.

#include <gmpxx.h>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/hanoi_graph.hpp"

namespace hanoi_dimer {

enum class CornerStatus { Monomer, Dimer, Free };

using CornerConstraint = std::vector<CornerStatus>;

/// Parses strings such as "mmddf" (m = monomer, d = dimer, f = free).
inline CornerConstraint parse_constraint(std::string_view text) {
    CornerConstraint out;
    for (char ch : text) {
        switch (ch) {
            case 'm': case 'M': out.push_back(CornerStatus::Monomer); break;
            case 'd': case 'D': out.push_back(CornerStatus::Dimer); break;
            case 'f': case 'F': out.push_back(CornerStatus::Free); break;
            default: throw DomainError(std::string("invalid corner status '") + ch + "'");
        }
    }
    return out;
}

struct OracleLimits {
    std::size_t max_vertices = 40;
    std::size_t max_memo_entries = std::size_t{1} << 26;
};

/// Counts matchings of the subgraph induced by `alive` using the
/// elimination recursion N(S) = N(S - v) + sum_{u ~ v, u in S} N(S - v - u),
/// v the lowest surviving vertex, memoized on the surviving-vertex mask.
class MatchingCounter {
public:
    explicit MatchingCounter(const Graph& g, OracleLimits limits = {}) : limits_(limits) {
        if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 64) {
            throw ResourceError("graph has " + std::to_string(g.vertex_count()) +
                                " vertices, above the oracle cap of " + std::to_string(limits.max_vertices));
        }
        neighbors_.assign(g.vertex_count(), 0);
        for (const auto& [u, v] : g.edges()) {
            neighbors_[u] |= std::uint64_t{1} << v;
            neighbors_[v] |= std::uint64_t{1} << u;
        }
        full_ = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
    }

    mpz_class count(std::uint64_t alive) {
        const unsigned __int128 c = count_rec(alive & full_);
        return to_mpz(c);
    }

    mpz_class count_all() { return count(full_); }

    std::uint64_t full_mask() const noexcept { return full_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    using u128 = unsigned __int128;

    u128 count_rec(std::uint64_t alive) {
        // Vertices with no surviving neighbour contribute a factor of one.
        if (alive == 0) return 1;
        const int v = std::countr_zero(alive);
        const std::uint64_t rest = alive & (alive - 1);
        if ((neighbors_[static_cast<std::size_t>(v)] & rest) == 0) return count_rec(rest);
        if (auto it = memo_.find(alive); it != memo_.end()) return it->second;

        u128 total = count_rec(rest);
        std::uint64_t nb = neighbors_[static_cast<std::size_t>(v)] & rest;
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            const u128 part = count_rec(rest & ~(std::uint64_t{1} << u));
            if (__builtin_add_overflow(total, part, &total)) throw ResourceError("matching count overflowed 128 bits");
        }
        if (memo_.size() >= limits_.max_memo_entries) {
            throw ResourceError("memo table reached its cap of " + std::to_string(limits_.max_memo_entries) + " entries");
        }
        memo_.emplace(alive, total);
        return total;
    }

    static mpz_class to_mpz(u128 x) {
        mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(x >> 64)));
        mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(x)));
        return (hi << 64) + lo;
    }

    OracleLimits limits_;
    std::vector<std::uint64_t> neighbors_;
    std::uint64_t full_ = 0;
    std::unordered_map<std::uint64_t, u128> memo_;
};

inline mpz_class count_matchings(const Graph& g, OracleLimits limits = {}) {
    return MatchingCounter(g, limits).count_all();
}

namespace detail {

/// Inclusion-exclusion over the DIMER corners.
inline mpz_class count_constrained(MatchingCounter& counter, const std::vector<std::size_t>& corners,
                                   const CornerConstraint& c) {
    if (c.size() != corners.size()) {
        throw DomainError("constraint has " + std::to_string(c.size()) + " entries, graph has " +
                    std::to_string(corners.size()) + " corners");
    }
    std::uint64_t base = counter.full_mask();
    std::vector<std::uint64_t> dimer_bits;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::uint64_t bit = std::uint64_t{1} << corners[i];
        if (c[i] == CornerStatus::Monomer) base &= ~bit;
        if (c[i] == CornerStatus::Dimer) dimer_bits.push_back(bit);
    }
    mpz_class total = 0;
    const std::size_t subsets = std::size_t{1} << dimer_bits.size();
    for (std::size_t t = 0; t < subsets; ++t) {
        std::uint64_t alive = base;
        for (std::size_t j = 0; j < dimer_bits.size(); ++j) {
            if (t >> j & 1) alive &= ~dimer_bits[j];
        }
        if (std::popcount(t) % 2 == 0) {
            total += counter.count(alive);
        } else {
            total -= counter.count(alive);
        }
    }
    return total;
}

}  // namespace detail

/// Matchings of a Hanoi graph satisfying a per-corner constraint.
inline mpz_class count_constrained(const HanoiGraph& g, const CornerConstraint& c, OracleLimits limits = {}) {
    MatchingCounter counter(g.graph, limits);
    return detail::count_constrained(counter, g.corners, c);
}

/// Oracle-side boundary classes: c[k] has the first k corners matched and
/// the rest unmatched; M is the unconstrained count.
struct OracleClasses {
    std::vector<mpz_class> c;
    mpz_class M;
};

/// Computes every c_k and checks that each k-subset of corners gives the same count.
inline OracleClasses boundary_class_vector(const HanoiGraph& g, OracleLimits limits = {}) {
    const std::size_t k = g.corners.size();
    MatchingCounter counter(g.graph, limits);
    OracleClasses out;
    out.c.assign(k + 1, 0);
    std::vector<bool> seen(k + 1, false);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        CornerConstraint con(k, CornerStatus::Monomer);
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) con[i] = CornerStatus::Dimer;
        }
        const auto cnt = detail::count_constrained(counter, g.corners, con);
        const auto pc = static_cast<std::size_t>(std::popcount(mask));
        if (!seen[pc]) {
            out.c[pc] = cnt;
            seen[pc] = true;
        } else if (out.c[pc] != cnt) {
            throw IntegrityError("corner symmetry violated for k=" + std::to_string(pc) + ": " + out.c[pc].get_str() +
                                 " vs " + cnt.get_str());
        }
    }
    out.M = counter.count_all();
    return out;
}

}  // namespace hanoi_dimer
