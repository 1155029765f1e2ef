#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gcx/ladder.hpp"

using namespace gcx;

namespace {

PositivePath pp(std::vector<int> I) { return PositivePath{std::move(I)}; }

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<ParabolicShape> small_shapes(int maxN) {
    std::vector<ParabolicShape> out;
    for (int n = 2; n <= maxN; ++n)
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> lv;
            for (int i = 1; i < n; ++i)
                if (mask >> (i - 1) & 1u) lv.push_back(i);
            out.emplace_back(lv, n);
        }
    return out;
}

}  // namespace

TEST_CASE("box count is the dimension formula") {
    for (const auto& s : small_shapes(6)) {
        int expect = 0;
        for (int i = 1; i <= s.k(); ++i) expect += (s.cut(i) - s.cut(i - 1)) * (s.n() - s.cut(i));
        CHECK(LadderDiagram(s).num_boxes() == expect);
    }
    CHECK(LadderDiagram(ParabolicShape::parse("2,4")).num_boxes() == 4);
    CHECK(LadderDiagram(ParabolicShape::complete(4)).num_boxes() == 6);
    CHECK(LadderDiagram(ParabolicShape::parse("1,2")).num_boxes() == 1);
}

TEST_CASE("paths per level are binomial") {
    LadderDiagram d24(ParabolicShape::parse("2,4"));
    CHECK(d24.paths_at_level(2).size() == 6);
    LadderDiagram d12(ParabolicShape::parse("1,2"));
    CHECK(d12.paths_at_level(1) == std::vector<PositivePath>{pp({1}), pp({2})});
    LadderDiagram fl4(ParabolicShape::complete(4));
    std::size_t total = 0;
    for (int l : fl4.levels()) total += fl4.paths_at_level(l).size();
    CHECK(total == 14);
    CHECK_THROWS(d24.paths_at_level(1));
    for (const auto& s : small_shapes(6)) {
        LadderDiagram d(s);
        for (int l : s.levels()) {
            auto ps = d.paths_at_level(l);
            CHECK(static_cast<long>(ps.size()) == binom(s.n(), l));
            CHECK(std::is_sorted(ps.begin(), ps.end()));
        }
    }
}

TEST_CASE("path order examples") {
    const auto a = pp({4, 5, 8, 9, 10, 13, 14}), b = pp({1, 2, 5, 6, 7, 8, 11, 12, 14}), c = pp({1, 2, 3, 4, 5, 6, 7, 8, 14});
    CHECK(path_leq(b, a));
    CHECK(path_leq(c, b));
    CHECK(path_leq(a, a));
    CHECK(path_leq(pp({1, 3}), pp({2, 4})));
    CHECK(incomparable(pp({1, 4}), pp({2, 3})));
}

TEST_CASE("meet and join") {
    CHECK(meet(pp({1, 3}), pp({2})) == pp({1, 3}));
    CHECK(join(pp({1, 3}), pp({2})) == pp({2}));
    CHECK(meet(pp({1, 4}), pp({2, 3})) == pp({1, 3}));
    CHECK(join(pp({1, 4}), pp({2, 3})) == pp({2, 4}));
}

TEST_CASE("paths form a distributive lattice") {
    for (int n = 2; n <= 6; ++n) {
        LadderDiagram d(ParabolicShape::complete(n));
        auto ps = d.all_paths();
        for (const auto& p : ps)
            for (const auto& q : ps) {
                const auto m = meet(p, q), j = join(p, q);
                CHECK(path_leq(m, p));
                CHECK(path_leq(m, q));
                CHECK(path_leq(p, j));
                CHECK(path_leq(q, j));
                CHECK(meet(p, join(p, q)) == p);
                CHECK(join(p, meet(p, q)) == p);
                CHECK(meet(p, q) == meet(q, p));
                if (path_leq(p, q)) {
                    CHECK(m == p);
                    CHECK(j == q);
                }
            }
        // greatest lower bound / least upper bound, and distributivity, on a level pair
        for (const auto& p : ps)
            for (const auto& q : ps) {
                const auto m = meet(p, q), j = join(p, q);
                for (const auto& r : ps) {
                    if (path_leq(r, p) && path_leq(r, q)) CHECK(path_leq(r, m));
                    if (path_leq(p, r) && path_leq(q, r)) CHECK(path_leq(j, r));
                    if (n <= 5) {
                        CHECK(meet(p, join(q, r)) == join(meet(p, q), meet(p, r)));
                        CHECK(join(p, meet(q, r)) == meet(join(p, q), join(p, r)));
                    }
                }
            }
        CHECK(meet(ps.front(), ps.front()) == ps.front());
    }
}

TEST_CASE("translation and partitions") {
    const auto w0 = longest_element(4);
    CHECK(translate_path(Permutation::identity(4), pp({1, 3})) == pp({1, 3}));
    CHECK(translate_path(w0, pp({1, 2})) == pp({3, 4}));
    CHECK(translate_path(Permutation({2, 3, 4, 5, 1}), pp({1, 3})) == pp({2, 4}));
    for (const auto& u : all_permutations(4))
        for (const auto& p : LadderDiagram(ParabolicShape::complete(4)).all_paths())
            CHECK(translate_path(u.inverse(), translate_path(u, p)) == p);

    CHECK(partition_of_path(pp({1, 2, 3})) == Partition{0, 0, 0});
    CHECK(partition_of_path(pp({1, 3})) == Partition{1, 0});
    CHECK(complement({2, 0}, 5) == Partition{3, 1});
    for (const auto& mu : partitions_in_box(2, 5)) {
        CHECK(complement(complement(mu, 5), 5) == mu);
        CHECK(partition_of_path(path_of_partition(mu)) == mu);
    }
    // order isomorphism onto the partition poset
    LadderDiagram d(ParabolicShape::parse("3,6"));
    for (const auto& p : d.paths_at_level(3))
        for (const auto& q : d.paths_at_level(3))
            CHECK(path_leq(p, q) == partition_leq(partition_of_path(p), partition_of_path(q)));
}

TEST_CASE("effective edges") {
    LadderDiagram d(ParabolicShape::parse("2,4"));
    CHECK(d.num_facets() == 6);
    CHECK(LadderDiagram(ParabolicShape::complete(3)).num_facets() == 6);
    CHECK(LadderDiagram(ParabolicShape::parse("2,5")).num_facets() == 9);
    for (int e : d.effective_edges()) CHECK(d.edges()[static_cast<std::size_t>(e)].effective);
}

TEST_CASE("special paths have the fewest corners") {
    LadderDiagram d47(ParabolicShape::parse("4,7"));
    std::set<PositivePath> got;
    for (const auto& p : d47.special_paths()) got.insert(p);
    const std::set<PositivePath> expected47{pp({1, 2, 3, 7}), pp({1, 2, 6, 7}), pp({1, 5, 6, 7}), pp({4, 5, 6, 7}),
                                        pp({3, 4, 5, 6}), pp({2, 3, 4, 5}), pp({1, 2, 3, 4})};
    CHECK(got == expected47);
    CHECK(d47.special_paths().size() == 7);

    LadderDiagram d12(ParabolicShape::parse("1,2"));
    const auto sp12 = d12.special_paths();
    std::set<PositivePath> two(sp12.begin(), sp12.end());
    CHECK(two == std::set<PositivePath>{pp({1}), pp({2})});
    CHECK(LadderDiagram(ParabolicShape::parse("1,2,3")).special_paths().size() == 4);

    for (const auto& s : small_shapes(6)) {
        LadderDiagram d(s);
        int expect = 0;
        for (int i = 1; i <= s.k(); ++i) expect += s.cut(i + 1) - s.cut(i - 1);
        CHECK(static_cast<int>(d.roof_edges().size()) == expect);
        std::set<PositivePath> distinct;
        for (int e : d.roof_edges()) {
            const auto sp = d.special_path(e);
            distinct.insert(sp);
            // brute force over every path having a corner at e
            int best = 1 << 20;
            std::vector<PositivePath> argmin;
            for (const auto& p : d.all_paths()) {
                if (p.level() == s.n()) continue;
                const auto cs = d.path_corners(p);
                bool touches = std::any_of(cs.begin(), cs.end(), [&](auto c) { return c.first == e || c.second == e; });
                if (!touches) continue;
                const int k = static_cast<int>(cs.size());
                if (k < best) {
                    best = k;
                    argmin.clear();
                }
                if (k == best) argmin.push_back(p);
            }
            REQUIRE(argmin.size() == 1);
            CHECK(argmin.front() == sp);
        }
        CHECK(static_cast<int>(distinct.size()) == s.n() + s.cut(s.k()) - s.cut(1));
    }
}

TEST_CASE("phi and psi are inverse") {
    GCPattern zero(4);
    CHECK(phi(zero) == zero);
    const auto bottom = phi(exponent_vector(pp({1, 2, 3, 4}), 4));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= i; ++j) CHECK(bottom.at(i, j) == 1);
    LadderDiagram d(ParabolicShape::parse("2,4"));
    for (const auto& g : d.lattice_points({2, 2, 0, 0})) {
        CHECK(phi(psi(g)) == g);
        CHECK(psi(phi(psi(g))) == psi(g));
    }
}

TEST_CASE("lattice points biject with weights") {
    struct Case {
        const char* shape;
        std::vector<int> lambda;
    };
    for (const auto& c : {Case{"2,4", {2, 2, 0, 0}}, Case{"1,2,3", {2, 1, 0}}, Case{"1,3,4", {3, 2, 2, 0}}}) {
        LadderDiagram d(ParabolicShape::parse(c.shape));
        const auto pts = d.lattice_points(c.lambda);
        const auto ws = d.weight_set(c.lambda);
        CHECK(pts.size() == ws.size());
        std::set<GCPattern> img;
        for (const auto& b : ws) img.insert(phi(b));
        CHECK(img == std::set<GCPattern>(pts.begin(), pts.end()));
        for (const auto& g : pts) {
            const auto parts = d.decompose_weight(g);
            std::map<int, int> per;
            BPattern sum(d.n());
            for (const auto& p : parts) {
                ++per[p.level()];
                sum += exponent_vector(p, d.n());
            }
            for (int j = 1; j < d.n(); ++j)
                CHECK(per[j] == c.lambda[static_cast<std::size_t>(j - 1)] - c.lambda[static_cast<std::size_t>(j)]);
            // remaining mass sits on the bottom path
            for (int k = 0; k < c.lambda.back(); ++k) sum += exponent_vector(pp({1, 2, 3, 4}), d.n());
            CHECK(phi(sum) == g);
        }
    }
}

TEST_CASE("weight decomposition examples") {
    LadderDiagram d(ParabolicShape::parse("2,4"));
    const auto pts = d.lattice_points({1, 1, 0, 0});
    CHECK(pts.size() == 6);
    // the minimal pattern strips the top-level path on {3,4}
    CHECK(d.decompose_weight(pts.front()) == std::vector<PositivePath>{pp({3, 4})});
    // a vertex split along a path is that path alone
    for (const auto& g : pts) CHECK(d.decompose_weight(g).size() == 1);
    GCPattern bad(4);
    bad.at(4, 1) = 1;
    bad.at(1, 1) = 3;
    CHECK_THROWS(d.decompose_weight(bad));
}

TEST_CASE("path text round trip") {
    CHECK(pp({1, 3}).str() == "1,3");
    CHECK(PositivePath::parse("1,3") == pp({1, 3}));
    CHECK_THROWS(PositivePath::parse("3,1"));
}
