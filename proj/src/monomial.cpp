#include "ylat/monomial.hpp"

#include <algorithm>
#include <climits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ylat {

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long result = 1;
    for (int i = 1; i <= b; ++i) {
        // exact at every step: result * (a - b + i) is divisible by i
        long long num = a - b + i;
        if (result > LLONG_MAX / num) return LLONG_MAX;
        result = result * num / i;
    }
    return result;
}

Monomial::Monomial(std::vector<int> exponents) : a_(std::move(exponents)) {
    if (a_.empty()) throw std::invalid_argument("monomial needs at least one exponent slot");
    long long sum = 0;
    for (int e : a_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        sum += e;
    }
    if (sum > INT_MAX / (n() + 2)) throw std::invalid_argument("monomial degree too large");
    degree_ = static_cast<int>(sum);
}

int Monomial::weight() const {
    int w = 0;
    for (int i = 0; i <= n(); ++i) w += a_[static_cast<size_t>(i)] * (n() - 2 * i);
    return w;
}

int Monomial::rank() const {
    int r = 0;
    for (int i = 0; i <= n(); ++i) r += i * a_[static_cast<size_t>(i)];
    return r;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i <= n(); ++i) {
        if (i) os << ',';
        os << a_[static_cast<size_t>(i)];
    }
    os << ')';
    return os.str();
}

bool operator<(const Monomial& x, const Monomial& y) { return x.a_ < y.a_; }

Partition::Partition(int bound, std::vector<int> p) : n(bound), parts(std::move(p)) {
    if (n < 0) throw std::invalid_argument("partition bound must be >= 0");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || parts[i] > n) throw std::invalid_argument("partition part out of [0, n]");
        if (i > 0 && parts[i] < parts[i - 1]) throw std::invalid_argument("partition parts must be weakly increasing");
    }
}

Monomial from_partition(const Partition& p) {
    std::vector<int> a(static_cast<size_t>(p.n) + 1, 0);
    for (int part : p.parts) ++a[static_cast<size_t>(part)];
    return Monomial(std::move(a));
}

Partition to_partition(const Monomial& mu) {
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(mu.degree()));
    for (int i = 0; i <= mu.n(); ++i)
        parts.insert(parts.end(), static_cast<size_t>(mu.exponent(i)), i);
    return Partition(mu.n(), std::move(parts));
}

Partition conjugate(const Partition& p) {
    // part j of the conjugate counts parts of p that are >= n - j (transpose
    // of the diagram inside the m x n box, listed weakly increasing)
    std::vector<int> parts(static_cast<size_t>(p.n), 0);
    for (int j = 0; j < p.n; ++j) {
        int threshold = p.n - j;
        int count = 0;
        for (int part : p.parts)
            if (part >= threshold) ++count;
        parts[static_cast<size_t>(j)] = count;
    }
    return Partition(p.m(), std::move(parts));
}

bool leq(const Monomial& mu, const Monomial& nu) {
    if (mu.n() != nu.n()) throw std::invalid_argument("leq: dimension mismatch");
    if (mu.degree() != nu.degree()) throw std::invalid_argument("leq: degree mismatch");
    int sa = 0;
    int sb = 0;
    for (int j = mu.n(); j >= 1; --j) {
        sa += mu.exponent(j);
        sb += nu.exponent(j);
        if (sa > sb) return false;
    }
    return true;
}

bool can_apply_color(const Monomial& mu, int color) {
    return color >= 1 && color <= mu.n() && mu.exponent(color - 1) > 0;
}

Monomial apply_color(const Monomial& mu, int color) {
    if (color < 1 || color > mu.n()) throw std::invalid_argument("color out of [1, n]");
    if (mu.exponent(color - 1) == 0) throw std::invalid_argument("illegal color move: empty source slot");
    std::vector<int> a = mu.exponents();
    --a[static_cast<size_t>(color - 1)];
    ++a[static_cast<size_t>(color)];
    return Monomial(std::move(a));
}

Monomial tau(const Monomial& mu) {
    std::vector<int> a = mu.exponents();
    std::reverse(a.begin(), a.end());
    return Monomial(std::move(a));
}

int cover_color(const Monomial& mu, const Monomial& nu) {
    if (mu.n() != nu.n()) return 0;
    int lose = -1;
    int gain = -1;
    for (int i = 0; i <= mu.n(); ++i) {
        int d = nu.exponent(i) - mu.exponent(i);
        if (d == 0) continue;
        if (d == -1 && lose < 0)
            lose = i;
        else if (d == 1 && gain < 0)
            gain = i;
        else
            return 0;
    }
    if (lose >= 0 && gain == lose + 1) return gain;
    return 0;
}

namespace {

void enumerate_rec(int slots_left, int remaining, std::vector<int>& prefix,
                   std::vector<Monomial>& out) {
    if (slots_left == 1) {
        prefix.push_back(remaining);
        out.push_back(Monomial(prefix));
        prefix.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_rec(slots_left - 1, remaining - e, prefix, out);
        prefix.pop_back();
    }
}

}   // namespace

std::vector<Monomial> enumerate_monomials(int n, int m, long long size_cap) {
    if (n < 0 || m < 0) throw std::invalid_argument("enumerate: n, m must be >= 0");
    long long count = binomial(n + m, n);
    if (count > size_cap) throw std::length_error("enumerate: poset size cap exceeded");
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(count));
    std::vector<int> prefix;
    enumerate_rec(n + 1, m, prefix, out);
    return out;
}

std::vector<HasseEdge> hasse_edges(int n, int m, long long size_cap) {
    std::vector<HasseEdge> edges;
    for (const Monomial& mu : enumerate_monomials(n, m, size_cap))
        for (int c = 1; c <= n; ++c)
            if (can_apply_color(mu, c))
                edges.push_back(HasseEdge{mu, apply_color(mu, c), ColorMove{c}});
    return edges;
}

std::ostream& operator<<(std::ostream& os, const Monomial& mu) { return os << mu.to_string(); }

}   // namespace ylat
