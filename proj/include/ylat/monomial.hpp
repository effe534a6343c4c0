#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ylat {

// Default cap on C(n+m, n) for full-slice enumeration. Override per call or
// via the CLI environment variable TY_MAX_POSET.
inline constexpr long long kDefaultPosetCap = 5'000'000;

/// C(a, b) computed in long long, saturating at LLONG that avoids overflow.
long long binomial(int a, int b);

/// A degree-m monomial z_0^{a_0} ... z_n^{a_n}, stored as its exponent
/// vector. Immutable value type; the canonical representation of a lattice
/// element. The tie-break order (operator<) is lexicographic on exponents.
class Monomial {
  public:
    explicit Monomial(std::vector<int> exponents);

    int n() const { return static_cast<int>(a_.size()) - 1; }
    int degree() const { return degree_; }
    int exponent(int i) const { return a_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return a_; }

    // wt = sum a_i (n - 2i) = m n - 2 rk.
    int weight() const;
    // rk = sum i a_i.
    int rank() const;

    std::string to_string() const;

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.a_ == y.a_; }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return x.a_ != y.a_; }
    friend bool operator<(const Monomial& x, const Monomial& y);

  private:
    std::vector<int> a_;
    int degree_ = 0;
};

/// A partition 0 <= p_1 <= ... <= p_m <= n, the Young-diagram view of a
/// monomial: part value i contributes one factor z_i.
struct Partition {
    int n = 0;                // bound on each part
    std::vector<int> parts;   // weakly increasing, each in [0, n]

    Partition(int bound, std::vector<int> p);
    int m() const { return static_cast<int>(parts.size()); }
};

/// One unit moved from exponent slot color-1 to slot color, i.e. one z_{c-1}
/// replaced by z_c. Colors the Hasse edges of the lattice.
struct ColorMove {
    int color = 1;   // in [1, n]
};

Monomial from_partition(const Partition& p);
Partition to_partition(const Monomial& mu);

/// Conjugate (transposed) partition; maps L(m, n) onto L(n, m).
Partition conjugate(const Partition& p);

/// Suffix-sum order: mu <= nu iff sum_{i>=j} a_i <= sum_{i>=j} b_i for all
/// 1 <= j <= n. Throws std::invalid_argument on dimension/degree mismatch.
bool leq(const Monomial& mu, const Monomial& nu);

/// Apply color move c: slot c-1 loses one unit, slot c gains one. Rank +1,
/// weight -2. Throws std::invalid_argument if a_{c-1} = 0 or c out of range.
Monomial apply_color(const Monomial& mu, int color);

/// Whether the color move is legal for mu.
bool can_apply_color(const Monomial& mu, int color);

/// The rank-flipping involution z_i -> z_{n-i} (exponent vector reversed).
Monomial tau(const Monomial& mu);

/// nu covers mu: nu = apply_color(mu, c) for some c. Returns the color, or 0.
int cover_color(const Monomial& mu, const Monomial& nu);

/// All C(n+m, n) monomials of degree m in z_0..z_n, in decreasing
/// lexicographic order of exponent vectors (z_0^m first, z_n^m last).
/// Throws std::length_error if C(n+m, n) exceeds size_cap.
std::vector<Monomial> enumerate_monomials(int n, int m,
                                          long long size_cap = kDefaultPosetCap);

struct HasseEdge {
    Monomial lower;   // higher weight
    Monomial upper;   // = apply_color(lower, move.color)
    ColorMove move;
};

/// Every legal color move on the degree-m slice, one edge per (monomial,
/// color) pair, monomials in enumeration order, colors ascending.
std::vector<HasseEdge> hasse_edges(int n, int m,
                                   long long size_cap = kDefaultPosetCap);

std::ostream& operator<<(std::ostream& os, const Monomial& mu);

}   // namespace ylat
