#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "ylat/chain.hpp"
#include "ylat/level_set.hpp"
#include "ylat/monomial.hpp"
#include "ylat/verify.hpp"

using namespace ylat;

namespace {

Monomial mono(std::vector<int> a) { return Monomial(std::move(a)); }

std::vector<Monomial> elems(std::vector<std::vector<int>> raw) {
    std::vector<Monomial> out;
    for (auto& a : raw) out.push_back(Monomial(std::move(a)));
    return out;
}

}   // namespace

TEST_CASE("maximal pairs") {
    CHECK(maximal_pairs(mono({1, 1, 1, 0, 1, 1})) == std::vector<int>{0, 1, 4});
    CHECK(maximal_pairs(mono({4, 3, 2, 1, 1, 4})) == std::vector<int>{0});
    CHECK(maximal_pairs(mono({2, 2, 2, 2})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("right moving run") {
    Chain c = right_moving(mono({1, 1, 1, 0, 1, 1}), 4);
    CHECK(c.elements == elems({{1, 1, 1, 0, 1, 1}, {1, 1, 1, 0, 0, 2}}));

    Chain full = right_moving(mono({2, 0, 1, 1, 1, 0}), 0);
    CHECK(full.elements == elems({{2, 0, 1, 1, 1, 0},
                                  {1, 1, 1, 1, 1, 0},
                                  {1, 1, 1, 0, 2, 0},
                                  {1, 1, 1, 0, 1, 1},
                                  {1, 1, 1, 0, 0, 2}}));
    CHECK(full.monotonic());

    // a_{n-1} = 0 at a rightmost maximal start: the run ends immediately
    Chain stopped = right_moving(mono({0, 1, 1, 0, 2}), 3);
    CHECK(stopped.elements.size() == 1);

    CHECK_THROWS_AS(right_moving(mono({4, 3, 2, 1, 1, 4}), 2), std::invalid_argument);
}

TEST_CASE("left moving run") {
    Chain c = left_moving(mono({1, 1, 1, 0, 1, 1}), 0);
    CHECK(c.elements == elems({{2, 0, 1, 0, 1, 1}, {1, 1, 1, 0, 1, 1}}));

    // left-moving from the rightmost maximal pair climbs the right chain
    Chain climb = left_moving(mono({1, 1, 1, 0, 1, 1}), 4);
    CHECK(climb.elements == elems({{2, 0, 1, 1, 1, 0},
                                   {1, 1, 1, 1, 1, 0},
                                   {1, 1, 1, 0, 2, 0},
                                   {1, 1, 1, 0, 1, 1}}));

    Chain stopped = left_moving(mono({2, 0, 1, 0, 1, 1}), 0);
    CHECK(stopped.elements.size() == 1);
}

TEST_CASE("transversal chains of the worked example") {
    Chain left = transversal(mono({1, 1, 1, 0, 1, 1}), TransversalSide::left);
    CHECK(left.elements == elems({{2, 0, 1, 0, 1, 1},
                                  {1, 1, 1, 0, 1, 1},
                                  {1, 0, 2, 0, 1, 1},
                                  {1, 0, 1, 1, 1, 1},
                                  {1, 0, 1, 1, 0, 2}}));
    CHECK(left.colors == std::vector<int>{1, 2, 3, 5});
    CHECK(left.monotonic());

    Chain right = transversal(mono({1, 1, 1, 0, 1, 1}), TransversalSide::right);
    CHECK(right.elements == elems({{2, 0, 1, 1, 1, 0},
                                   {1, 1, 1, 1, 1, 0},
                                   {1, 1, 1, 0, 2, 0},
                                   {1, 1, 1, 0, 1, 1},
                                   {1, 1, 1, 0, 0, 2}}));
    CHECK(right.colors == std::vector<int>{1, 4, 5, 5});
}

TEST_CASE("transversal endpoint and signature laws") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            for (const Monomial& mu : enumerate_monomials(n, m))
                for (TransversalSide side : {TransversalSide::left, TransversalSide::right}) {
                    Chain c = transversal(mu, side);
                    CHECK(c.monotonic());
                    CHECK(image_membership(c.top(), Side::high));
                    CHECK(image_membership(c.bottom(), Side::low));
                    Signature sig = signature_of(mu);
                    for (const Monomial& x : c.elements) CHECK(signature_of(x) == sig);
                    CHECK(std::find(c.elements.begin(), c.elements.end(), mu) != c.elements.end());
                }
}

TEST_CASE("degenerate transversals") {
    Chain empty3 = transversal(mono({0, 0, 0, 0}), TransversalSide::left);
    CHECK(empty3.elements.size() == 1);
    CHECK(empty3.colors.empty());

    Chain point = transversal(mono({5}), TransversalSide::right);
    CHECK(point.elements.size() == 1);

    // n = 1: the transversal is the whole slice
    Chain line = transversal(mono({2, 1}), TransversalSide::left);
    CHECK(line.elements.size() == 4);
    CHECK(line.top() == mono({3, 0}));
    CHECK(line.bottom() == mono({0, 3}));
}

TEST_CASE("unique starting pair when d_0 > 0") {
    LevelSet level = enumerate_level(Signature(5, {1, 1, 0}));
    for (const Monomial& mu : level.members)
        CHECK(transversal(mu, TransversalSide::left) == transversal(mu, TransversalSide::right));
}

TEST_CASE("transversal families") {
    ChainFamily q33 = transversal_family(Signature(3, {3, 0}));
    CHECK(q33.kind == FamilyKind::partition);
    CHECK(check_family(q33).ok);

    ChainFamily q511 = transversal_family(Signature(5, {0, 1, 1}));
    CHECK(q511.kind == FamilyKind::cover);
    CHECK(check_family(q511).ok);

    // each Q_2 level set is one chain
    for (int d0 = 1; d0 <= 3; ++d0)
        for (int d1 = 0; d1 <= 2; ++d1) {
            ChainFamily fam = transversal_family(Signature(2, {d0, d1}));
            CHECK(fam.chains.size() == 1);
            CHECK(fam.kind == FamilyKind::partition);
        }
}

TEST_CASE("push-through law") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 0; m <= 8; ++m)
            for (const Signature& sig : signatures_of_degree(n, m)) {
                if (sig.d[0] == 0) continue;
                Signature tail(n - 2, std::vector<int>(sig.d.begin() + 1, sig.d.end()));
                for (const Monomial& mu0 : enumerate_level(tail).members) {
                    Chain c = transversal(embed_high(sig, mu0), TransversalSide::left);
                    CHECK(c.top() == embed_high(sig, mu0));
                    CHECK(c.bottom() == embed_low(sig, mu0));
                }
            }
}

TEST_CASE("random transversals beyond the exhaustive range") {
    unsigned long long state = 0x853c49e6748fea9bULL;
    auto next = [&](int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % static_cast<unsigned long long>(bound));
    };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + next(9);
        std::vector<int> a(static_cast<size_t>(n) + 1);
        for (int& e : a) e = next(6);
        Monomial mu{a};
        Signature sig = signature_of(mu);
        for (TransversalSide side : {TransversalSide::left, TransversalSide::right}) {
            Chain c = transversal(mu, side);
            CHECK(c.monotonic());
            CHECK(image_membership(c.top(), Side::high));
            CHECK(image_membership(c.bottom(), Side::low));
            for (const Monomial& x : c.elements) CHECK(signature_of(x) == sig);
        }
    }
}

TEST_CASE("rectangles obey the grid laws") {
    Signature sig(5, {2, 1, 1});
    auto below = scd(Signature(3, {1, 1}));
    REQUIRE(below.has_value());
    auto rects = build_rectangles(sig, *below);
    CHECK(rects.size() == below->chains.size());
    for (const Rectangle& r : rects) {
        REQUIRE(!r.rows.empty());
        size_t len = r.rows.front().elements.size();
        for (size_t j = 0; j < r.rows.size(); ++j) {
            CHECK(r.rows[j].elements.size() == len);
            CHECK(r.rows[j].top() == embed_high(sig, r.base.elements[j]));
            CHECK(r.rows[j].bottom() == embed_low(sig, r.base.elements[j]));
            if (j > 0)
                CHECK(r.rows[j].top().weight() == r.rows[j - 1].top().weight() - 2);
        }
    }
}

TEST_CASE("stitching produces verified symmetric decompositions") {
    // pure d_0 blocks over the trivial lower set
    for (auto [n, d0] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
        std::vector<int> dv(static_cast<size_t>(n / 2) + 1, 0);
        dv[0] = d0;
        Signature sig(n, dv);
        Signature tail(n - 2, std::vector<int>(dv.begin() + 1, dv.end()));
        auto below = scd(tail);
        REQUIRE(below.has_value());
        ChainFamily fam = stitch_rectangles(sig, *below);
        CHECK(fam.kind == FamilyKind::symmetric_decomposition);
        CHECK(check_family(fam).ok);
        CHECK(fam.chains.size() == 1);   // the level set is itself a chain
    }

    Signature s511(5, {2, 1, 1});
    auto below511 = scd(Signature(3, {1, 1}));
    REQUIRE(below511.has_value());
    ChainFamily fam = stitch_rectangles(s511, *below511);
    CHECK(check_family(fam).ok);
}

TEST_CASE("scd strategy") {
    // whole A_2 slices are chains signature by signature
    for (int m = 0; m <= 6; ++m)
        for (const Signature& sig : signatures_of_degree(2, m)) {
            auto fam = scd(sig);
            REQUIRE(fam.has_value());
            CHECK(fam->chains.size() == 1);
        }

    // top-block singleton over n = 6
    auto top = scd(Signature(6, {0, 0, 0, 1}));
    REQUIRE(top.has_value());
    CHECK(top->chains.size() == 1);
    CHECK(top->chains.front().elements.size() == 1);

    // every A_4 signature at desk scale decomposes
    for (int m = 0; m <= 6; ++m)
        for (const Signature& sig : signatures_of_degree(4, m)) {
            auto fam = scd(sig);
            REQUIRE_MESSAGE(fam.has_value(), "missing scd");
            CHECK(check_family(*fam).ok);
        }

    // the known hard case over n = 5 stays singular
    CHECK_FALSE(scd(Signature(5, {0, 1, 1})).has_value());
}

TEST_CASE("stitching refuses unverifiable rectangles") {
    // the cross edges needed deep inside these rectangles are not cover
    // relations, so the peel must back out instead of emitting chains
    Signature sig(7, {1, 2, 1, 0});
    auto below = scd(Signature(5, {2, 1, 0}));
    REQUIRE(below.has_value());
    CHECK_THROWS_AS(stitch_rectangles(sig, *below), StitchError);
    CHECK_FALSE(scd(sig).has_value());

    // wrong lower decomposition is a usage error, not a stitch failure
    auto wrong = scd(Signature(5, {1, 1, 0}));
    REQUIRE(wrong.has_value());
    CHECK_THROWS_AS(build_rectangles(sig, *wrong), std::invalid_argument);
}

TEST_CASE("symmetric decompositions have one chain per middle element") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            for (const Signature& sig : signatures_of_degree(n, m)) {
                auto fam = scd(sig);
                if (!fam) continue;
                RankProfile profile = rank_profile(enumerate_level(sig).members);
                CHECK(static_cast<long long>(fam->chains.size()) == profile.max_level);
            }
}

TEST_CASE("scd cache tolerates concurrent callers") {
    auto sigs = signatures_of_degree(4, 6);
    std::vector<std::vector<size_t>> counts(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            for (const Signature& sig : sigs) {
                auto fam = scd(sig);
                counts[static_cast<size_t>(t)].push_back(fam ? fam->chains.size() : 0);
            }
        });
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(counts[static_cast<size_t>(t)] == counts[0]);
}

TEST_CASE("generic and singular split") {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 6; ++m) CHECK(split_generic(n, m).singular.empty());

    GenericSplit s55 = split_generic(5, 5);
    REQUIRE(s55.singular.size() == 1);
    CHECK(s55.singular.front().d == std::vector<int>{0, 1, 1});
    CHECK(s55.generic.size() + s55.singular.size() == signatures_of_degree(5, 5).size());

    GenericSplit empty = split_generic(6, 0);
    CHECK(empty.generic.size() == 1);
    CHECK(empty.singular.empty());
}
