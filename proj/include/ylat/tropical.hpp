#pragma once

#include <utility>
#include <vector>

#include "ylat/monomial.hpp"

namespace ylat {

/// r pairwise disjoint edges {l, l+1} of the path graph on {0..n}, stored as
/// the sorted left endpoints (gaps >= 2, each in [0, n-1]).
struct Facet {
    std::vector<int> left;

    /// The 2r covered vertices, sorted.
    std::vector<int> vertices() const;
    /// Edges as {l, l+1} pairs.
    std::vector<std::pair<int, int>> edges() const;
};

/// All C(n-r+1, r) facets made of r disjoint path edges, in lexicographic
/// order of left-endpoint lists. r = 0 yields the single empty facet.
std::vector<Facet> facets(int n, int r);

/// Complements of the facets in {0..n}: the irreducible components of the
/// r-th secant ideal, each a set {2l_0, 2l_1+1, ...} for a weakly increasing
/// l-sequence. Requires 1 <= r <= floor(n/2).
std::vector<std::vector<int>> components(int n, int r);

/// Minimal generators of the r-th secant ideal: index sequences
/// i_0 < ... < i_r with gaps >= 2 (the <1-chains), in lexicographic order.
/// r = 0 yields the n+1 singletons.
std::vector<std::vector<int>> generators(int n, int r);

/// Reference evaluation of the tropical polynomial: minimum of sum a_i over
/// every irreducible component (complement of a facet). f_{n,0} = degree.
int f_oracle(const Monomial& mu, int r);

/// Max total exponent coverable by r disjoint edges, with a witness facet.
/// Weighted-interval-scheduling DP:
///   best(i, t) = max(best(i-1, t), best(i-2, t-1) + a_{i-1} + a_i)
/// over slots 0..i, best(., 0) = 0. f = degree - best(n, r).
std::pair<int, Facet> best_cover(const Monomial& mu, int r);

/// Production evaluation: degree minus the DP max cover. Equals f_oracle.
int f_dp(const Monomial& mu, int r);

/// The full vector (f_{n,0}, ..., f_{n,k}), k = floor(n/2), memoized behind
/// a shared read-mostly cache keyed by exponent vector.
std::vector<int> f_vector(const Monomial& mu);

/// Symbolic-power membership: mu lies in the s-th symbolic power of the
/// r-th secant ideal iff f(mu, r) >= s.
bool symbolic_member(const Monomial& mu, int r, int s);

/// deg_r(mu) = f_{n,r} - 2 f_{n,r+1} + f_{n,r+2}, with f = 0 past k.
/// Throws std::logic_error if the second difference is negative.
int deg_r(const Monomial& mu, int r);

}   // namespace ylat
