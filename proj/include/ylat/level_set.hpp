#pragma once

#include <utility>
#include <vector>

#include "ylat/monomial.hpp"

namespace ylat {

/// The tropical level-set label (d_0, ..., d_k), k = floor(n/2): d_r is the
/// number of length-(r+1) rows in any maximal factorization.
struct Signature {
    int n = 0;
    std::vector<int> d;

    Signature(int n_, std::vector<int> d_);
    int k() const { return n / 2; }
    /// Induced degree m = sum d_j (j+1).
    int degree() const;

    friend bool operator==(const Signature& x, const Signature& y) {
        return x.n == y.n && x.d == y.d;
    }
    friend bool operator<(const Signature& x, const Signature& y) {
        return x.n != y.n ? x.n < y.n : x.d < y.d;
    }
};

/// The deg_r vector of mu.
Signature signature_of(const Monomial& mu);

/// A level set with its members listed deterministically: weight descending,
/// then lexicographic on exponent vectors.
struct LevelSet {
    Signature sig;
    std::vector<Monomial> members;
};

/// Filter the degree-m slice by signature.
LevelSet enumerate_level(const Signature& sig, long long size_cap = kDefaultPosetCap);

/// All signatures over z_0..z_n of degree m, in lexicographic order of
/// (d_0, ..., d_k). Their level sets partition the slice.
std::vector<Signature> signatures_of_degree(int n, int m);

/// The unique weight-max and weight-min members: the products of the
/// extreme generators z_0 z_2 ... z_{2j} and their reversals.
std::pair<Monomial, Monomial> extremes(const Signature& sig);

/// Embedding of the (d_1, ..., d_k) level set over n-2 into the level set
/// over n by appending (0, d) to the exponent vector, d = sum d_j.
/// Sends the weight-min element to the weight-min element.
Monomial embed_low(const Signature& sig, const Monomial& mu0);

/// The opposite embedding: prepend (d, 0), shifting all indices by two.
/// Equals tau . embed_low . tau; sends weight-max to weight-max.
Monomial embed_high(const Signature& sig, const Monomial& mu0);

enum class Side { low, high };

/// Image criterion: mu lies in the high (resp. low) embedding image iff
/// a_0 (resp. a_n) equals the maximum adjacent pair sum.
bool image_membership(const Monomial& mu, Side side);

/// Strip an embedding image back to its preimage over n-2.
Monomial embed_preimage(const Monomial& mu, Side side);

/// Order isomorphism between a single-block level set (only d_r nonzero)
/// and the full slice of degree d_r(n-2r) over z_0..z_{r+1}, computed by
/// mapping each canonical-tableau row (i_0..i_r) to the conjugate of the
/// partition (i_0, i_1-2, ..., i_r-2r) and multiplying the row images.
/// Verified bijective and order-preserving both ways on construction;
/// throws std::logic_error when the verification fails.
struct SingleBlockIso {
    Signature sig;      // source level set
    int r = 0;          // the nonzero block
    int target_n = 0;   // = r + 1
    int target_m = 0;   // = d_r (n - 2r)
    std::vector<std::pair<Monomial, Monomial>> pairs;   // member -> image

    Monomial forward(const Monomial& member) const;
    Monomial backward(const Monomial& image) const;
};

SingleBlockIso single_block_iso(const Signature& sig, long long size_cap = kDefaultPosetCap);

}   // namespace ylat
