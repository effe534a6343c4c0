#include "ylat/level_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "ylat/tableau.hpp"
#include "ylat/tropical.hpp"

namespace ylat {

Signature::Signature(int n_, std::vector<int> d_) : n(n_), d(std::move(d_)) {
    if (n < 0) throw std::invalid_argument("signature: n must be >= 0");
    if (static_cast<int>(d.size()) != n / 2 + 1)
        throw std::invalid_argument("signature: needs floor(n/2)+1 entries");
    for (int v : d)
        if (v < 0) throw std::invalid_argument("signature: entries must be >= 0");
}

int Signature::degree() const {
    int m = 0;
    for (int j = 0; j <= k(); ++j) m += d[static_cast<size_t>(j)] * (j + 1);
    return m;
}

Signature signature_of(const Monomial& mu) {
    std::vector<int> d(static_cast<size_t>(mu.n() / 2) + 1, 0);
    for (int r = 0; r <= mu.n() / 2; ++r) d[static_cast<size_t>(r)] = deg_r(mu, r);
    return Signature(mu.n(), std::move(d));
}

namespace {

void sort_members(std::vector<Monomial>& members) {
    std::sort(members.begin(), members.end(), [](const Monomial& x, const Monomial& y) {
        if (x.weight() != y.weight()) return x.weight() > y.weight();
        return x < y;
    });
}

}   // namespace

LevelSet enumerate_level(const Signature& sig, long long size_cap) {
    LevelSet out{sig, {}};
    for (const Monomial& mu : enumerate_monomials(sig.n, sig.degree(), size_cap))
        if (signature_of(mu) == sig) out.members.push_back(mu);
    sort_members(out.members);
    return out;
}

namespace {

void signatures_rec(int k, int m, int j, std::vector<int>& d, std::vector<Signature>& out, int n) {
    if (j == k) {
        if (m % (k + 1) == 0) {
            d.push_back(m / (k + 1));
            out.emplace_back(n, d);
            d.pop_back();
        }
        return;
    }
    for (int v = 0; v * (j + 1) <= m; ++v) {
        d.push_back(v);
        signatures_rec(k, m - v * (j + 1), j + 1, d, out, n);
        d.pop_back();
    }
}

}   // namespace

std::vector<Signature> signatures_of_degree(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("signatures: n, m must be >= 0");
    std::vector<Signature> out;
    std::vector<int> d;
    signatures_rec(n / 2, m, 0, d, out, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Monomial, Monomial> extremes(const Signature& sig) {
    std::vector<int> a(static_cast<size_t>(sig.n) + 1, 0);
    for (int j = 0; j <= sig.k(); ++j)
        for (int i = 0; i <= j; ++i) a[static_cast<size_t>(2 * i)] += sig.d[static_cast<size_t>(j)];
    Monomial top(std::move(a));
    return {top, tau(top)};
}

namespace {

std::vector<int> tail_signature(const Signature& sig) {
    return std::vector<int>(sig.d.begin() + 1, sig.d.end());
}

void check_embed_pre(const Signature& sig, const Monomial& mu0) {
    if (sig.n < 2) throw std::invalid_argument("embedding needs n >= 2");
    if (mu0.n() != sig.n - 2) throw std::invalid_argument("embedding: preimage dimension mismatch");
    if (signature_of(mu0).d != tail_signature(sig))
        throw std::invalid_argument("embedding: preimage signature mismatch");
}

}   // namespace

Monomial embed_low(const Signature& sig, const Monomial& mu0) {
    check_embed_pre(sig, mu0);
    int d = 0;
    for (int v : sig.d) d += v;
    std::vector<int> a = mu0.exponents();
    a.push_back(0);
    a.push_back(d);
    return Monomial(std::move(a));
}

Monomial embed_high(const Signature& sig, const Monomial& mu0) {
    check_embed_pre(sig, mu0);
    int d = 0;
    for (int v : sig.d) d += v;
    std::vector<int> a;
    a.reserve(mu0.exponents().size() + 2);
    a.push_back(d);
    a.push_back(0);
    a.insert(a.end(), mu0.exponents().begin(), mu0.exponents().end());
    return Monomial(std::move(a));
}

namespace {

int max_pair_sum(const Monomial& mu) {
    int best = 0;
    for (int j = 0; j + 1 <= mu.n(); ++j)
        best = std::max(best, mu.exponent(j) + mu.exponent(j + 1));
    return best;
}

}   // namespace

bool image_membership(const Monomial& mu, Side side) {
    if (mu.n() < 1) return false;
    int anchor = side == Side::high ? mu.exponent(0) : mu.exponent(mu.n());
    return anchor == max_pair_sum(mu);
}

Monomial embed_preimage(const Monomial& mu, Side side) {
    if (mu.n() < 2) throw std::invalid_argument("embed_preimage needs n >= 2");
    if (!image_membership(mu, side)) throw std::invalid_argument("monomial is not an embedding image");
    const auto& a = mu.exponents();
    if (side == Side::high) {
        if (a[1] != 0) throw std::invalid_argument("monomial is not an embedding image");
        return Monomial(std::vector<int>(a.begin() + 2, a.end()));
    }
    if (a[a.size() - 2] != 0) throw std::invalid_argument("monomial is not an embedding image");
    return Monomial(std::vector<int>(a.begin(), a.end() - 2));
}

namespace {

// row (i_0, ..., i_r) -> monomial over z_0..z_{r+1} of degree n-2r: the
// conjugate of the partition (i_0, i_1-2, ..., i_r-2r) read in L(n-2r, r+1)
Monomial row_image(const std::vector<int>& row, int n) {
    const int r = static_cast<int>(row.size()) - 1;
    const int width = n - 2 * r;
    std::vector<int> parts;
    parts.reserve(row.size());
    for (size_t j = 0; j < row.size(); ++j) parts.push_back(row[j] - 2 * static_cast<int>(j));
    Partition p(width, std::move(parts));
    return from_partition(Partition(r + 1, conjugate(p).parts));
}

}   // namespace

Monomial SingleBlockIso::forward(const Monomial& member) const {
    for (const auto& [from, to] : pairs)
        if (from == member) return to;
    throw std::invalid_argument("single_block_iso: not a member of the level set");
}

Monomial SingleBlockIso::backward(const Monomial& image) const {
    for (const auto& [from, to] : pairs)
        if (to == image) return from;
    throw std::invalid_argument("single_block_iso: not an image element");
}

SingleBlockIso single_block_iso(const Signature& sig, long long size_cap) {
    int r = -1;
    for (int j = 0; j <= sig.k(); ++j) {
        if (sig.d[static_cast<size_t>(j)] == 0) continue;
        if (r >= 0) throw std::invalid_argument("single_block_iso: more than one nonzero block");
        r = j;
    }
    if (r < 0) throw std::invalid_argument("single_block_iso: all blocks are zero");

    SingleBlockIso iso{sig, r, r + 1, sig.d[static_cast<size_t>(r)] * (sig.n - 2 * r), {}};
    LevelSet level = enumerate_level(sig, size_cap);
    for (const Monomial& mu : level.members) {
        std::vector<int> image(static_cast<size_t>(iso.target_n) + 1, 0);
        for (const auto& row : canonical_tableau(mu).rows) {
            Monomial part = row_image(row, sig.n);
            for (int i = 0; i <= part.n(); ++i) image[static_cast<size_t>(i)] += part.exponent(i);
        }
        iso.pairs.emplace_back(mu, Monomial(std::move(image)));
    }

    // self-verification: bijective onto the target slice, order-preserving
    // both ways (the map for d_r > 1 is not proven, only checked)
    std::vector<Monomial> images;
    images.reserve(iso.pairs.size());
    for (const auto& [from, to] : iso.pairs) {
        if (to.degree() != iso.target_m) throw std::logic_error("single_block_iso: wrong image degree");
        images.push_back(to);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        throw std::logic_error("single_block_iso: image collision");
    if (static_cast<long long>(images.size()) != binomial(iso.target_m + iso.target_n, iso.target_n))
        throw std::logic_error("single_block_iso: image does not fill the slice");
    for (size_t i = 0; i < iso.pairs.size(); ++i)
        for (size_t j = 0; j < iso.pairs.size(); ++j) {
            if (i == j) continue;
            if (leq(iso.pairs[i].first, iso.pairs[j].first) !=
                leq(iso.pairs[i].second, iso.pairs[j].second))
                throw std::logic_error("single_block_iso: order not preserved");
        }
    return iso;
}

}   // namespace ylat
