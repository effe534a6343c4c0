#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ylat/level_set.hpp"
#include "ylat/monomial.hpp"

namespace ylat {

/// A saturated chain listed from highest to lowest weight, with the color
/// sequence of its covering moves.
struct Chain {
    std::vector<Monomial> elements;
    std::vector<int> colors;   // colors[i] turns elements[i] into elements[i+1]

    /// Derives the colors; throws std::logic_error if consecutive elements
    /// are not related by a single color move.
    static Chain from_elements(std::vector<Monomial> elements);

    const Monomial& top() const { return elements.front(); }
    const Monomial& bottom() const { return elements.back(); }
    int edge_count() const { return static_cast<int>(colors.size()); }
    /// Weakly increasing color sequence read from top to bottom.
    bool monotonic() const;
    /// wt(top) = -wt(bottom).
    bool symmetric() const;

    friend bool operator==(const Chain& x, const Chain& y) { return x.elements == y.elements; }
    friend bool operator<(const Chain& x, const Chain& y) { return x.elements < y.elements; }
};

enum class FamilyKind { cover, partition, symmetric_decomposition };

std::string to_string(FamilyKind kind);

/// A set of chains over one level set, sorted deterministically.
struct ChainFamily {
    Signature sig;
    FamilyKind kind = FamilyKind::cover;
    std::vector<Chain> chains;

    long long element_count() const;
};

/// Raised when rectangle stitching cannot verify its construction; the
/// caller treats the signature as having no known symmetric decomposition.
class StitchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Indices i with a_i + a_{i+1} maximal, ascending. Requires n >= 1.
std::vector<int> maximal_pairs(const Monomial& mu);

/// Right-moving run: starting from the maximal pair (a_i, a_{i+1}) with
/// i = start, repeatedly apply color i+1 (a_i - a_{i+2}) times and advance
/// the covered pair, ending with color n applied a_{n-1} times. Produces
/// the weight-descending chain from mu down to a low-embedding image.
Chain right_moving(const Monomial& mu, int start);

/// Left-moving run: the mirror ascent from mu, applying inverse colors from
/// the pair (a_start, a_start+1) leftward. Returned weight-descending, from
/// a high-embedding image down to mu.
Chain left_moving(const Monomial& mu, int start);

/// Concatenation of both runs from the leftmost or rightmost maximal pair:
/// a monotonic saturated chain through mu whose top has a_0 maximal and
/// whose bottom has a_n maximal.
enum class TransversalSide { left, right };
Chain transversal(const Monomial& mu, TransversalSide side);

/// All left and right transversal chains of the level set, deduplicated.
/// Their union is the level set (checked); for d_0 > 0 they are pairwise
/// disjoint (checked) and the family is a partition.
ChainFamily transversal_family(const Signature& sig, long long size_cap = kDefaultPosetCap);

/// The transversal chains grouped over one base chain of the decomposition
/// one level down: row j is the transversal chain topped by the high
/// embedding of the j-th base element.
struct Rectangle {
    Chain base;                 // chain in the (d_1, ..., d_k) level set over n-2
    std::vector<Chain> rows;    // equal-length transversal chains, tops descending
};

/// Group a verified partition family into rectangles over scd_below.
/// Throws StitchError when the grid laws fail.
std::vector<Rectangle> build_rectangles(const Signature& sig, const ChainFamily& scd_below,
                                        long long size_cap = kDefaultPosetCap);

/// Symmetric chain decomposition of the level set (d_0 > 0) by hook-peeling
/// each rectangle: hook t runs (t,t) -> (p-t,t) -> (p-t,q-t) and its
/// complementary boundary hook, recursing inward. Every cross edge the hooks
/// use is checked to be a genuine cover relation; any failure raises
/// StitchError rather than emitting an unverified family.
ChainFamily stitch_rectangles(const Signature& sig, const ChainFamily& scd_below,
                              long long size_cap = kDefaultPosetCap);

/// Recursive symmetric chain decomposition:
///   - degree 0 or n <= 1: the level set is itself a symmetric chain;
///   - n = 2k with d_k > 0: factor out the full even-support generator
///     (z_0 z_2 ... z_n)^{d_k}, decompose the reduced level set, multiply
///     back (a weight-preserving order isomorphism);
///   - a single nonzero block: transport the decomposition of the full
///     target slice through single_block_iso;
///   - d_0 > 0 with the lower decomposition available: stitch rectangles;
///   - otherwise no decomposition is known (nullopt).
/// Every returned family passes the independent checker. Memoized.
std::optional<ChainFamily> scd(const Signature& sig, long long size_cap = kDefaultPosetCap);

/// Per-signature decompositions of the whole degree-m slice, or nullopt if
/// any signature lacks one.
std::optional<std::vector<ChainFamily>> scd_slice(int n, int m,
                                                  long long size_cap = kDefaultPosetCap);

/// Signatures of the slice split by scd availability.
struct GenericSplit {
    std::vector<Signature> generic;
    std::vector<Signature> singular;
};

GenericSplit split_generic(int n, int m, long long size_cap = kDefaultPosetCap);

}   // namespace ylat
