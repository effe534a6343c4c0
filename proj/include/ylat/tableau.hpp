#pragma once

#include <vector>

#include "ylat/monomial.hpp"

namespace ylat {

/// A maximal factorization written as rows of variable indices: each row is
/// a <1-chain (gaps >= 2), lengths weakly decreasing, and the concatenated
/// multiset of entries reproduces the monomial's exponents.
struct Tableau {
    std::vector<std::vector<int>> rows;

    /// Number of rows of length r+1, indexed by r = 0..k.
    std::vector<int> census(int k) const;
    /// Entries outside the first `cols` columns.
    int boxes_beyond(int cols) const;
};

/// The canonical (lexicographically minimal) tableau: for row length k+1
/// down to 1, repeatedly extract the lex-smallest <1-chain of that length
/// from the remaining multiset. The row-length census must match the deg_r
/// vector; a mismatch throws std::logic_error rather than rebalancing.
Tableau canonical_tableau(const Monomial& mu);

/// Check every tableau invariant against mu: row shapes, <1-chains, entry
/// multiset, the minimality condition (each entry a has a or a-1 in every
/// preceding row), and the census against deg_r.
bool verify_tableau(const Monomial& mu, const Tableau& t);

}   // namespace ylat
