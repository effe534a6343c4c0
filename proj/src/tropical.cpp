#include "ylat/tropical.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace ylat {

std::vector<int> Facet::vertices() const {
    std::vector<int> v;
    v.reserve(left.size() * 2);
    for (int l : left) {
        v.push_back(l);
        v.push_back(l + 1);
    }
    return v;
}

std::vector<std::pair<int, int>> Facet::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(left.size());
    for (int l : left) e.emplace_back(l, l + 1);
    return e;
}

namespace {

void facets_rec(int n, int r, int next, std::vector<int>& prefix, std::vector<Facet>& out) {
    if (r == 0) {
        out.push_back(Facet{prefix});
        return;
    }
    // need r disjoint edges in slots [next, n-1]
    for (int l = next; l + 2 * (r - 1) <= n - 1; ++l) {
        prefix.push_back(l);
        facets_rec(n, r - 1, l + 2, prefix, out);
        prefix.pop_back();
    }
}

int check_r_range(int n, int r, int lo) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (r < lo || r > n / 2) throw std::invalid_argument("r out of range");
    return r;
}

}   // namespace

std::vector<Facet> facets(int n, int r) {
    check_r_range(n, r, 0);
    std::vector<Facet> out;
    std::vector<int> prefix;
    facets_rec(n, r, 0, prefix, out);
    return out;
}

std::vector<std::vector<int>> components(int n, int r) {
    check_r_range(n, r, 1);
    std::vector<std::vector<int>> out;
    for (const Facet& f : facets(n, r)) {
        std::vector<int> covered = f.vertices();
        std::vector<int> comp;
        comp.reserve(static_cast<size_t>(n + 1) - covered.size());
        for (int i = 0; i <= n; ++i)
            if (!std::binary_search(covered.begin(), covered.end(), i)) comp.push_back(i);
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

void generators_rec(int n, int len, int next, std::vector<int>& prefix,
                    std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(prefix);
        return;
    }
    for (int i = next; i + 2 * (len - 1) <= n; ++i) {
        prefix.push_back(i);
        generators_rec(n, len - 1, i + 2, prefix, out);
        prefix.pop_back();
    }
}

}   // namespace

std::vector<std::vector<int>> generators(int n, int r) {
    check_r_range(n, r, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    generators_rec(n, r + 1, 0, prefix, out);
    return out;
}

int f_oracle(const Monomial& mu, int r) {
    check_r_range(mu.n(), r, 0);
    int best = std::numeric_limits<int>::max();
    for (const Facet& f : facets(mu.n(), r)) {
        std::vector<int> covered = f.vertices();
        int sum = 0;
        for (int i = 0; i <= mu.n(); ++i)
            if (!std::binary_search(covered.begin(), covered.end(), i)) sum += mu.exponent(i);
        best = std::min(best, sum);
    }
    return best;
}

std::pair<int, Facet> best_cover(const Monomial& mu, int r) {
    check_r_range(mu.n(), r, 0);
    const int n = mu.n();
    constexpr int kNegInf = std::numeric_limits<int>::min() / 2;
    // best[i+1][t]: max cover by t disjoint edges within slots 0..i
    std::vector<std::vector<int>> best(static_cast<size_t>(n + 2),
                                       std::vector<int>(static_cast<size_t>(r + 1), kNegInf));
    for (int i = -1; i <= n; ++i) best[static_cast<size_t>(i + 1)][0] = 0;
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= r; ++t) {
            int skip = best[static_cast<size_t>(i)][static_cast<size_t>(t)];
            int take = best[static_cast<size_t>(i - 1)][static_cast<size_t>(t - 1)];
            if (take > kNegInf) take += mu.exponent(i - 1) + mu.exponent(i);
            best[static_cast<size_t>(i + 1)][static_cast<size_t>(t)] = std::max(skip, take);
        }

    // traceback, skipping an edge whenever skipping is as good
    std::vector<int> left;
    int i = n;
    int t = r;
    while (t > 0) {
        if (i >= 1 && best[static_cast<size_t>(i + 1)][static_cast<size_t>(t)] ==
                          best[static_cast<size_t>(i)][static_cast<size_t>(t)]) {
            --i;
        } else {
            left.push_back(i - 1);
            i -= 2;
            --t;
        }
    }
    std::reverse(left.begin(), left.end());
    return {best[static_cast<size_t>(n + 1)][static_cast<size_t>(r)], Facet{std::move(left)}};
}

int f_dp(const Monomial& mu, int r) { return mu.degree() - best_cover(mu, r).first; }

namespace {

// shared read-mostly cache: concurrent readers, writers take the exclusive lock
class FVectorCache {
  public:
    std::vector<int> get(const Monomial& mu) {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(mu.exponents());
            if (it != map_.end()) return it->second;
        }
        std::vector<int> f(static_cast<size_t>(mu.n() / 2) + 1, 0);
        for (int r = 0; r <= mu.n() / 2; ++r) f[static_cast<size_t>(r)] = f_dp(mu, r);
        {
            std::unique_lock lock(mutex_);
            map_.emplace(mu.exponents(), f);
        }
        return f;
    }

  private:
    std::shared_mutex mutex_;
    std::map<std::vector<int>, std::vector<int>> map_;
};

FVectorCache& cache() {
    static FVectorCache instance;
    return instance;
}

}   // namespace

std::vector<int> f_vector(const Monomial& mu) { return cache().get(mu); }

bool symbolic_member(const Monomial& mu, int r, int s) {
    if (s < 0) throw std::invalid_argument("s must be >= 0");
    return f_dp(mu, r) >= s;
}

int deg_r(const Monomial& mu, int r) {
    const int k = mu.n() / 2;
    check_r_range(mu.n(), r, 0);
    std::vector<int> f = f_vector(mu);
    auto at = [&](int j) { return j <= k ? f[static_cast<size_t>(j)] : 0; };
    int d = at(r) - 2 * at(r + 1) + at(r + 2);
    if (d < 0) throw std::logic_error("deg_r: negative second difference");
    return d;
}

}   // namespace ylat
