#include "ylat/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ylat {

ChainReport check_chain(const Chain& c, const Signature& ambient) {
    ChainReport report;
    report.saturated = !c.elements.empty();
    for (size_t i = 0; i + 1 < c.elements.size(); ++i) {
        const Monomial& x = c.elements[i];
        const Monomial& y = c.elements[i + 1];
        // in a graded poset, comparable + rank difference one == cover
        if (x.n() != y.n() || x.degree() != y.degree() || y.rank() != x.rank() + 1 ||
            !leq(x, y)) {
            report.saturated = false;
            break;
        }
    }
    std::vector<int> colors;
    for (size_t i = 0; i + 1 < c.elements.size(); ++i) {
        int color = cover_color(c.elements[i], c.elements[i + 1]);
        if (color == 0) {
            colors.clear();
            break;
        }
        colors.push_back(color);
    }
    report.monotonic = (c.elements.size() <= 1 || !colors.empty()) &&
                       std::is_sorted(colors.begin(), colors.end());
    report.signature_constant = true;
    for (const Monomial& mu : c.elements)
        if (!(signature_of(mu) == ambient)) {
            report.signature_constant = false;
            break;
        }
    report.symmetric = c.top().weight() == -c.bottom().weight();
    return report;
}

FamilyReport check_family(const ChainFamily& fam, long long size_cap) {
    FamilyReport report;
    auto fail = [&](const std::string& msg) { report.problems.push_back(msg); };

    LevelSet level = enumerate_level(fam.sig, size_cap);
    std::set<Monomial> members(level.members.begin(), level.members.end());
    std::set<Monomial> covered;
    long long multiplicity = 0;

    for (size_t idx = 0; idx < fam.chains.size(); ++idx) {
        const Chain& c = fam.chains[idx];
        ChainReport cr = check_chain(c, fam.sig);
        std::ostringstream tag;
        tag << "chain " << idx << " (top " << c.top().to_string() << ")";
        if (!cr.saturated) fail(tag.str() + " is not saturated");
        if (!cr.signature_constant) fail(tag.str() + " leaves the level set signature");
        if (fam.kind == FamilyKind::symmetric_decomposition && !cr.symmetric)
            fail(tag.str() + " is not rank-symmetric");
        for (const Monomial& mu : c.elements) {
            if (!members.count(mu)) fail(tag.str() + " contains " + mu.to_string() + " outside the level set");
            covered.insert(mu);
            ++multiplicity;
        }
    }

    if (covered.size() != members.size()) {
        std::ostringstream os;
        os << "union covers " << covered.size() << " of " << members.size() << " members";
        fail(os.str());
    }
    if (fam.kind != FamilyKind::cover && multiplicity != static_cast<long long>(members.size())) {
        std::ostringstream os;
        os << "chains overlap: " << multiplicity << " slots for " << members.size() << " members";
        fail(os.str());
    }
    report.ok = report.problems.empty();
    return report;
}

RankProfile rank_profile(const std::vector<Monomial>& members) {
    RankProfile p;
    for (const Monomial& mu : members) ++p.by_weight[mu.weight()];
    p.total = static_cast<long long>(members.size());
    p.symmetric = true;
    for (const auto& [w, count] : p.by_weight) {
        auto it = p.by_weight.find(-w);
        if (it == p.by_weight.end() || it->second != count) {
            p.symmetric = false;
            break;
        }
    }
    for (const auto& [w, count] : p.by_weight) p.max_level = std::max(p.max_level, count);

    p.unimodal = true;
    bool falling = false;
    long long prev = 0;
    // iterate by decreasing weight, i.e. increasing rank
    for (auto it = p.by_weight.rbegin(); it != p.by_weight.rend(); ++it) {
        if (it->second < prev)
            falling = true;
        else if (falling && it->second > prev) {
            p.unimodal = false;
            break;
        }
        prev = it->second;
    }
    return p;
}

std::vector<long long> gaussian_binomial(int m, int n) {
    // [m+n, n]_q via the q-Pascal rule [N, k] = [N-1, k-1] + q^k [N-1, k]
    if (m < 0 || n < 0) throw std::invalid_argument("gaussian_binomial: negative argument");
    std::vector<std::vector<std::vector<long long>>> table(
        static_cast<size_t>(m + n) + 1);
    for (int N = 0; N <= m + n; ++N) {
        table[static_cast<size_t>(N)].resize(static_cast<size_t>(N) + 1);
        for (int k = 0; k <= N; ++k) {
            auto& poly = table[static_cast<size_t>(N)][static_cast<size_t>(k)];
            if (k == 0 || k == N) {
                poly = {1};
                continue;
            }
            const auto& a = table[static_cast<size_t>(N - 1)][static_cast<size_t>(k - 1)];
            const auto& b = table[static_cast<size_t>(N - 1)][static_cast<size_t>(k)];
            poly.assign(std::max(a.size(), b.size() + static_cast<size_t>(k)), 0);
            for (size_t i = 0; i < a.size(); ++i) poly[i] += a[i];
            for (size_t i = 0; i < b.size(); ++i) poly[i + static_cast<size_t>(k)] += b[i];
        }
    }
    return table[static_cast<size_t>(m + n)][static_cast<size_t>(n)];
}

namespace {

// Kuhn's augmenting-path matching, right vertex matched to left
bool augment(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& visited) {
    for (int v : adj[static_cast<size_t>(u)]) {
        if (visited[static_cast<size_t>(v)]) continue;
        visited[static_cast<size_t>(v)] = 1;
        if (match_right[static_cast<size_t>(v)] < 0 ||
            augment(match_right[static_cast<size_t>(v)], adj, match_right, visited)) {
            match_right[static_cast<size_t>(v)] = u;
            return true;
        }
    }
    return false;
}

}   // namespace

bool sperner_check(const std::vector<Monomial>& members, long long cap) {
    const int n = static_cast<int>(members.size());
    if (n > cap) throw std::length_error("sperner_check: instance above cap");
    if (n == 0) return true;

    // Dilworth: max antichain = |P| - max matching over the strict order
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && members[static_cast<size_t>(i)].rank() < members[static_cast<size_t>(j)].rank() &&
                leq(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]))
                adj[static_cast<size_t>(i)].push_back(j);

    std::vector<int> match_right(static_cast<size_t>(n), -1);
    int matching = 0;
    for (int u = 0; u < n; ++u) {
        std::vector<char> visited(static_cast<size_t>(n), 0);
        if (augment(u, adj, match_right, visited)) ++matching;
    }
    long long max_antichain = n - matching;
    return max_antichain == rank_profile(members).max_level;
}

}   // namespace ylat
