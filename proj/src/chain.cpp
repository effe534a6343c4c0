#include "ylat/chain.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "ylat/tropical.hpp"
#include "ylat/verify.hpp"

namespace ylat {

Chain Chain::from_elements(std::vector<Monomial> elements) {
    if (elements.empty()) throw std::logic_error("chain must be nonempty");
    Chain c;
    c.elements = std::move(elements);
    c.colors.reserve(c.elements.size() - 1);
    for (size_t i = 0; i + 1 < c.elements.size(); ++i) {
        int color = cover_color(c.elements[i], c.elements[i + 1]);
        if (color == 0) throw std::logic_error("consecutive chain elements are not a color move");
        c.colors.push_back(color);
    }
    return c;
}

bool Chain::monotonic() const {
    return std::is_sorted(colors.begin(), colors.end());
}

bool Chain::symmetric() const {
    return top().weight() == -bottom().weight();
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::cover: return "cover";
        case FamilyKind::partition: return "partition";
        case FamilyKind::symmetric_decomposition: return "symmetric-decomposition";
    }
    return "?";
}

long long ChainFamily::element_count() const {
    long long total = 0;
    for (const Chain& c : chains) total += static_cast<long long>(c.elements.size());
    return total;
}

std::vector<int> maximal_pairs(const Monomial& mu) {
    if (mu.n() < 1) throw std::invalid_argument("maximal_pairs needs n >= 1");
    int best = -1;
    std::vector<int> out;
    for (int j = 0; j + 1 <= mu.n(); ++j) {
        int sum = mu.exponent(j) + mu.exponent(j + 1);
        if (sum > best) {
            best = sum;
            out.clear();
        }
        if (sum == best) out.push_back(j);
    }
    return out;
}

namespace {

void require_maximal(const Monomial& mu, int start) {
    std::vector<int> pairs = maximal_pairs(mu);
    if (!std::binary_search(pairs.begin(), pairs.end(), start))
        throw std::invalid_argument("start index is not a maximal pair");
}

}   // namespace

Chain right_moving(const Monomial& mu, int start) {
    require_maximal(mu, start);
    const int n = mu.n();
    std::vector<Monomial> elements{mu};
    int i = start;
    while (true) {
        const Monomial& cur = elements.back();
        if (i == n - 1) {
            int t = cur.exponent(n - 1);
            for (int s = 0; s < t; ++s) elements.push_back(apply_color(elements.back(), n));
            break;
        }
        int t = cur.exponent(i) - cur.exponent(i + 2);
        for (int s = 0; s < t; ++s) elements.push_back(apply_color(elements.back(), i + 1));
        ++i;
    }
    return Chain::from_elements(std::move(elements));
}

namespace {

// inverse of color c: one unit from slot c back to slot c-1, weight +2
Monomial apply_inverse_color(const Monomial& mu, int color) {
    std::vector<int> a = mu.exponents();
    if (color < 1 || color > mu.n() || a[static_cast<size_t>(color)] == 0)
        throw std::invalid_argument("illegal inverse color move");
    --a[static_cast<size_t>(color)];
    ++a[static_cast<size_t>(color - 1)];
    return Monomial(std::move(a));
}

}   // namespace

Chain left_moving(const Monomial& mu, int start) {
    require_maximal(mu, start);
    std::vector<Monomial> upward{mu};
    int i = start + 1;   // the covered pair is (a_{i-1}, a_i)
    while (true) {
        const Monomial& cur = upward.back();
        if (i == 1) {
            int t = cur.exponent(1);
            for (int s = 0; s < t; ++s) upward.push_back(apply_inverse_color(upward.back(), 1));
            break;
        }
        int t = cur.exponent(i) - cur.exponent(i - 2);
        for (int s = 0; s < t; ++s) upward.push_back(apply_inverse_color(upward.back(), i));
        --i;
    }
    std::reverse(upward.begin(), upward.end());
    return Chain::from_elements(std::move(upward));
}

Chain transversal(const Monomial& mu, TransversalSide side) {
    if (mu.n() == 0) return Chain::from_elements({mu});
    std::vector<int> pairs = maximal_pairs(mu);
    int start = side == TransversalSide::left ? pairs.front() : pairs.back();
    Chain up = left_moving(mu, start);
    Chain down = right_moving(mu, start);
    std::vector<Monomial> elements = up.elements;
    elements.insert(elements.end(), down.elements.begin() + 1, down.elements.end());
    return Chain::from_elements(std::move(elements));
}

ChainFamily transversal_family(const Signature& sig, long long size_cap) {
    LevelSet level = enumerate_level(sig, size_cap);
    std::set<std::vector<Monomial>> seen;
    ChainFamily fam{sig, sig.d[0] > 0 ? FamilyKind::partition : FamilyKind::cover, {}};
    for (const Monomial& mu : level.members)
        for (TransversalSide side : {TransversalSide::left, TransversalSide::right}) {
            Chain c = transversal(mu, side);
            if (seen.insert(c.elements).second) fam.chains.push_back(std::move(c));
        }
    std::sort(fam.chains.begin(), fam.chains.end());

    // bug traps: chains must stay in the level set and cover it; for
    // d_0 > 0 they must tile it
    std::set<Monomial> members(level.members.begin(), level.members.end());
    long long covered = 0;
    std::set<Monomial> in_chains;
    for (const Chain& c : fam.chains)
        for (const Monomial& mu : c.elements) {
            if (!members.count(mu))
                throw std::logic_error("transversal chain left the level set");
            in_chains.insert(mu);
            ++covered;
        }
    if (in_chains.size() != members.size())
        throw std::logic_error("transversal chains do not cover the level set");
    if (fam.kind == FamilyKind::partition && covered != static_cast<long long>(members.size()))
        throw std::logic_error("transversal chains overlap although d_0 > 0");
    return fam;
}

namespace {

Signature tail_signature(const Signature& sig) {
    if (sig.n < 2) throw std::invalid_argument("no lower level set for n < 2");
    return Signature(sig.n - 2, std::vector<int>(sig.d.begin() + 1, sig.d.end()));
}

}   // namespace

std::vector<Rectangle> build_rectangles(const Signature& sig, const ChainFamily& scd_below,
                                        long long size_cap) {
    if (sig.n < 2) throw std::invalid_argument("stitching needs n >= 2");
    if (sig.d[0] <= 0) throw std::invalid_argument("stitching needs d_0 > 0");
    if (scd_below.sig != tail_signature(sig))
        throw std::invalid_argument("scd_below decomposes the wrong level set");
    if (scd_below.kind != FamilyKind::symmetric_decomposition)
        throw std::invalid_argument("scd_below is not a symmetric decomposition");
    for (const Chain& c : scd_below.chains)
        if (!c.symmetric()) throw StitchError("base chain is not rank-symmetric");

    // locate every base element inside its chain
    std::map<Monomial, std::pair<size_t, size_t>> base_index;
    for (size_t i = 0; i < scd_below.chains.size(); ++i) {
        const auto& elems = scd_below.chains[i].elements;
        for (size_t j = 0; j < elems.size(); ++j) base_index.emplace(elems[j], std::make_pair(i, j));
    }

    ChainFamily fam = transversal_family(sig, size_cap);
    std::vector<Rectangle> rects(scd_below.chains.size());
    for (size_t i = 0; i < rects.size(); ++i) {
        rects[i].base = scd_below.chains[i];
        rects[i].rows.resize(scd_below.chains[i].elements.size());
    }
    std::vector<std::vector<bool>> filled(rects.size());
    for (size_t i = 0; i < rects.size(); ++i) filled[i].resize(rects[i].rows.size(), false);

    for (Chain& c : fam.chains) {
        if (!image_membership(c.top(), Side::high))
            throw StitchError("transversal top is not a high-embedding image");
        Monomial pre = embed_preimage(c.top(), Side::high);
        auto it = base_index.find(pre);
        if (it == base_index.end())
            throw StitchError("transversal top preimage missing from the base decomposition");
        auto [i, j] = it->second;
        if (filled[i][j]) throw StitchError("two transversal chains share a base element");
        rects[i].rows[j] = std::move(c);
        filled[i][j] = true;
    }

    for (size_t i = 0; i < rects.size(); ++i) {
        const Rectangle& r = rects[i];
        for (bool f : filled[i])
            if (!f) throw StitchError("base element without a transversal chain");
        size_t row_len = r.rows.front().elements.size();
        for (size_t j = 0; j < r.rows.size(); ++j) {
            if (r.rows[j].elements.size() != row_len)
                throw StitchError("rectangle rows have unequal lengths");
            if (r.rows[j].top() != embed_high(sig, r.base.elements[j]))
                throw StitchError("row top does not match the high embedding");
            if (r.rows[j].bottom() != embed_low(sig, r.base.elements[j]))
                throw StitchError("row bottom does not match the low embedding");
            if (j > 0 && r.rows[j].top().weight() != r.rows[j - 1].top().weight() - 2)
                throw StitchError("row top weights do not descend in steps of 2");
        }
    }
    return rects;
}

namespace {

// hook-peel one rectangle; every cross step (row j -> row j+1 at one depth)
// is checked to be a genuine cover relation
void peel_rectangle(const Rectangle& rect, std::vector<Chain>& out) {
    const int p = static_cast<int>(rect.rows.size()) - 1;
    const int q = static_cast<int>(rect.rows.front().elements.size()) - 1;
    auto cell = [&](int j, int s) -> const Monomial& {
        return rect.rows[static_cast<size_t>(j)].elements[static_cast<size_t>(s)];
    };
    auto cross_checked = [&](int j, int s) {
        if (cover_color(cell(j, s), cell(j + 1, s)) == 0) {
            std::ostringstream os;
            os << "cross edge is not a cover relation at row " << j << ", depth " << s;
            throw StitchError(os.str());
        }
    };
    for (int l = 0;; ++l) {
        const int top = l;
        const int bot = p - l;
        const int left = l;
        const int right = q - l;
        if (top > bot || left > right) break;
        if (top == bot) {
            std::vector<Monomial> row;
            for (int s = left; s <= right; ++s) row.push_back(cell(top, s));
            out.push_back(Chain::from_elements(std::move(row)));
            break;
        }
        if (left == right) {
            std::vector<Monomial> col;
            for (int j = top; j <= bot; ++j) {
                if (j > top) cross_checked(j - 1, left);
                col.push_back(cell(j, left));
            }
            out.push_back(Chain::from_elements(std::move(col)));
            break;
        }
        std::vector<Monomial> hook_a;
        for (int j = top; j <= bot; ++j) {
            if (j > top) cross_checked(j - 1, left);
            hook_a.push_back(cell(j, left));
        }
        for (int s = left + 1; s <= right; ++s) hook_a.push_back(cell(bot, s));
        out.push_back(Chain::from_elements(std::move(hook_a)));

        std::vector<Monomial> hook_b;
        for (int s = left + 1; s <= right; ++s) hook_b.push_back(cell(top, s));
        for (int j = top + 1; j <= bot - 1; ++j) {
            cross_checked(j - 1, right);
            hook_b.push_back(cell(j, right));
        }
        out.push_back(Chain::from_elements(std::move(hook_b)));
    }
}

}   // namespace

ChainFamily stitch_rectangles(const Signature& sig, const ChainFamily& scd_below,
                              long long size_cap) {
    std::vector<Rectangle> rects = build_rectangles(sig, scd_below, size_cap);
    ChainFamily fam{sig, FamilyKind::symmetric_decomposition, {}};
    for (const Rectangle& r : rects) peel_rectangle(r, fam.chains);
    std::sort(fam.chains.begin(), fam.chains.end());
    FamilyReport report = check_family(fam, size_cap);
    if (!report.ok)
        throw StitchError("stitched family failed verification: " + report.problems.front());
    return fam;
}

namespace {

// multiply every element by (z_0 z_2 ... z_n)^t; a weight-preserving order
// isomorphism onto the level set with d_k raised by t (n even)
ChainFamily raise_center(const ChainFamily& fam, const Signature& target, int t) {
    ChainFamily out{target, fam.kind, {}};
    for (const Chain& c : fam.chains) {
        std::vector<Monomial> elems;
        elems.reserve(c.elements.size());
        for (const Monomial& mu : c.elements) {
            std::vector<int> a = mu.exponents();
            for (size_t i = 0; i < a.size(); i += 2) a[i] += t;
            elems.push_back(Monomial(std::move(a)));
        }
        out.chains.push_back(Chain::from_elements(std::move(elems)));
    }
    std::sort(out.chains.begin(), out.chains.end());
    return out;
}

class ScdCache {
  public:
    std::optional<std::optional<ChainFamily>> lookup(const Signature& sig) {
        std::lock_guard lock(mutex_);
        auto it = map_.find(sig);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void store(const Signature& sig, std::optional<ChainFamily> value) {
        std::lock_guard lock(mutex_);
        map_.emplace(sig, std::move(value));
    }

  private:
    std::mutex mutex_;
    std::map<Signature, std::optional<ChainFamily>> map_;
};

ScdCache& scd_cache() {
    static ScdCache instance;
    return instance;
}

std::optional<ChainFamily> scd_uncached(const Signature& sig, long long size_cap) {
    const int k = sig.k();

    // a degree-0 level set is a single point of weight 0
    if (sig.degree() == 0) {
        LevelSet level = enumerate_level(sig, size_cap);
        return ChainFamily{sig, FamilyKind::symmetric_decomposition,
                           {Chain::from_elements(level.members)}};
    }
    // n <= 1: the whole slice is one chain
    if (sig.n <= 1) {
        LevelSet level = enumerate_level(sig, size_cap);
        return ChainFamily{sig, FamilyKind::symmetric_decomposition,
                           {Chain::from_elements(level.members)}};
    }
    // n = 2k with d_k > 0: every member is divisible by the full
    // even-support generator; factor it out and multiply back
    if (sig.n == 2 * k && sig.d[static_cast<size_t>(k)] > 0) {
        std::vector<int> reduced = sig.d;
        int t = reduced[static_cast<size_t>(k)];
        reduced[static_cast<size_t>(k)] = 0;
        auto sub = scd(Signature(sig.n, std::move(reduced)), size_cap);
        if (!sub) return std::nullopt;
        return raise_center(*sub, sig, t);
    }
    // single nonzero block: transport the target slice decomposition
    int nonzero = 0;
    for (int v : sig.d) nonzero += v > 0 ? 1 : 0;
    if (nonzero == 1) {
        SingleBlockIso iso = single_block_iso(sig, size_cap);
        auto slice = scd_slice(iso.target_n, iso.target_m, size_cap);
        if (!slice) return std::nullopt;
        ChainFamily fam{sig, FamilyKind::symmetric_decomposition, {}};
        for (const ChainFamily& sub : *slice)
            for (const Chain& c : sub.chains) {
                std::vector<Monomial> elems;
                elems.reserve(c.elements.size());
                for (const Monomial& mu : c.elements) elems.push_back(iso.backward(mu));
                fam.chains.push_back(Chain::from_elements(std::move(elems)));
            }
        std::sort(fam.chains.begin(), fam.chains.end());
        return fam;
    }
    // d_0 > 0: stitch over the decomposition one level down
    if (sig.d[0] > 0) {
        auto below = scd(tail_signature(sig), size_cap);
        if (!below) return std::nullopt;
        try {
            return stitch_rectangles(sig, *below, size_cap);
        } catch (const StitchError&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}   // namespace

std::optional<ChainFamily> scd(const Signature& sig, long long size_cap) {
    if (auto cached = scd_cache().lookup(sig)) return *cached;
    std::optional<ChainFamily> result = scd_uncached(sig, size_cap);
    if (result) {
        FamilyReport report = check_family(*result, size_cap);
        if (!report.ok)
            throw std::logic_error("scd produced an invalid decomposition: " +
                                   report.problems.front());
    }
    scd_cache().store(sig, result);
    return result;
}

std::optional<std::vector<ChainFamily>> scd_slice(int n, int m, long long size_cap) {
    std::vector<ChainFamily> out;
    for (const Signature& sig : signatures_of_degree(n, m)) {
        auto fam = scd(sig, size_cap);
        if (!fam) return std::nullopt;
        out.push_back(std::move(*fam));
    }
    return out;
}

GenericSplit split_generic(int n, int m, long long size_cap) {
    GenericSplit split;
    for (const Signature& sig : signatures_of_degree(n, m)) {
        if (scd(sig, size_cap))
            split.generic.push_back(sig);
        else
            split.singular.push_back(sig);
    }
    return split;
}

}   // namespace ylat
