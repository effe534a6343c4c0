#pragma once

#include <map>
#include <string>
#include <vector>

#include "ylat/chain.hpp"
#include "ylat/level_set.hpp"
#include "ylat/monomial.hpp"

namespace ylat {

/// Per-chain report. Saturation is re-derived from leq and ranks, never
/// taken from the stored color sequence.
struct ChainReport {
    bool saturated = false;
    bool monotonic = false;
    bool signature_constant = false;
    bool symmetric = false;

    bool valid_chain() const { return saturated && signature_constant; }
};

ChainReport check_chain(const Chain& c, const Signature& ambient);

struct FamilyReport {
    bool ok = false;
    std::vector<std::string> problems;
};

/// Verify the family's claimed kind against its level set: cover (union
/// equality), partition (disjoint union), symmetric-decomposition
/// (partition of saturated, rank-symmetric chains).
FamilyReport check_family(const ChainFamily& fam, long long size_cap = kDefaultPosetCap);

/// Level sizes of a set of monomials indexed by weight.
struct RankProfile {
    std::map<int, long long> by_weight;
    bool symmetric = false;   // size(w) == size(-w) for all w
    bool unimodal = false;    // sizes rise then fall along decreasing weight
    long long total = 0;
    long long max_level = 0;
};

RankProfile rank_profile(const std::vector<Monomial>& members);

/// Coefficients of the Gaussian binomial [m+n choose n]_q, index = rank;
/// the rank-level sizes of the degree-m slice. Computed by the q-Pascal
/// recurrence, independent of monomial enumeration.
std::vector<long long> gaussian_binomial(int m, int n);

/// Whether the maximum antichain size equals the maximum weight-level size,
/// with the antichain side computed as a minimum chain cover via bipartite
/// matching on the strict order. Throws std::length_error above the cap.
bool sperner_check(const std::vector<Monomial>& members, long long cap = 2000);

}   // namespace ylat
