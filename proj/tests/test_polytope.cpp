#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "gcx/gc_polytope.hpp"

using namespace gcx;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

int rank_of(std::vector<std::vector<double>> rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (std::fabs(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) > 1e-9) piv = i;
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(r)]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r) continue;
            const double f = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] / rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            for (int k = 0; k < cols; ++k)
                rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -= f * rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
        }
        ++r;
    }
    return r;
}

// Vertices as integral patterns whose tight interlacing inequalities have full rank.
std::set<std::vector<int>> vertex_oracle(const ParabolicShape& s, const std::vector<int>& top) {
    LadderDiagram d(s);
    std::vector<int> boxIndex(static_cast<std::size_t>(d.num_cells()), -1);
    for (std::size_t k = 0; k < d.boxes().size(); ++k) boxIndex[static_cast<std::size_t>(d.boxes()[k])] = static_cast<int>(k);
    std::set<std::vector<int>> out;
    for (const auto& g : d.lattice_points(top)) {
        std::vector<int> vals(static_cast<std::size_t>(d.num_cells()));
        for (int c = 0; c < d.num_cells(); ++c) vals[static_cast<std::size_t>(c)] = g.at(d.cell(c).i(), d.cell(c).j());
        std::vector<std::vector<double>> rows;
        for (auto [hi, lo] : d.adjacencies()) {
            if (vals[static_cast<std::size_t>(hi)] != vals[static_cast<std::size_t>(lo)]) continue;
            std::vector<double> row(static_cast<std::size_t>(d.num_boxes()), 0.0);
            if (boxIndex[static_cast<std::size_t>(hi)] >= 0) row[static_cast<std::size_t>(boxIndex[static_cast<std::size_t>(hi)])] += 1;
            if (boxIndex[static_cast<std::size_t>(lo)] >= 0) row[static_cast<std::size_t>(boxIndex[static_cast<std::size_t>(lo)])] -= 1;
            rows.push_back(row);
        }
        if (rank_of(rows, d.num_boxes()) == d.num_boxes()) out.insert(vals);
    }
    return out;
}

std::vector<int> numeric_top(const Polytope& P) { return P.top_row(); }

}  // namespace

TEST_CASE("dimension") {
    CHECK(Polytope(ParabolicShape::parse("2,4")).dim() == 4);
    CHECK(Polytope(ParabolicShape::complete(4)).dim() == 6);
    CHECK(Polytope(ParabolicShape::parse("1,2")).dim() == 1);
    CHECK(Polytope(ParabolicShape::parse("2,4")).face_dimension(Polytope(ParabolicShape::parse("2,4")).whole()) == 4);
    CHECK_THROWS(Polytope(ParabolicShape::parse("2,4"), {0, 1}));
    CHECK_THROWS(Polytope(ParabolicShape::parse("2,4"), {1}));
}

TEST_CASE("vertex counts") {
    CHECK(Polytope(ParabolicShape::parse("2,4")).num_vertices() == 6);
    CHECK(Polytope(ParabolicShape::parse("2,5")).num_vertices() == 10);
    CHECK(Polytope(ParabolicShape::parse("3,6")).num_vertices() == 20);
    CHECK(Polytope(ParabolicShape::parse("1,2")).num_vertices() == 2);
    CHECK(Polytope(ParabolicShape::complete(3)).num_vertices() == 7);
    CHECK(Polytope(ParabolicShape::complete(4)).num_vertices() == 40);
    CHECK(Polytope(ParabolicShape::complete(5)).num_vertices() == 358);
    CHECK(Polytope(ParabolicShape::parse("4,7")).num_vertices() == 35);
    CHECK(Polytope(ParabolicShape::parse("3,5,8")).num_vertices() == 1694);
}

TEST_CASE("vertices agree with the rank oracle") {
    for (const char* s : {"1,2", "2,4", "2,5", "1,2,3", "1,3,4", "1,2,4", "1,2,3,4", "2,3,5"}) {
        const ParabolicShape shape = ParabolicShape::parse(s);
        const Polytope P(shape);
        const auto expect = vertex_oracle(shape, numeric_top(P));
        std::set<std::vector<int>> got;
        for (int x = 0; x < P.num_vertices(); ++x) {
            std::vector<int> vals;
            for (int c = 0; c < P.diagram().num_cells(); ++c) vals.push_back(P.value(x, c));
            got.insert(vals);
            CHECK(P.pattern(x).interlaces());
        }
        CHECK(got == expect);
    }
}

TEST_CASE("facets and regular vertices") {
    CHECK(Polytope(ParabolicShape::parse("2,4")).num_facets() == 6);
    CHECK(Polytope(ParabolicShape::parse("3,6")).num_facets() == 14);
    for (int n = 3; n <= 5; ++n) {
        const Polytope P(ParabolicShape::complete(n));
        CHECK(P.num_facets() == n * (n - 1));
        long regular = 0;
        std::set<std::vector<PositivePath>> coords;
        for (int x = 0; x < P.num_vertices(); ++x) {
            CHECK(P.vertices()[static_cast<std::size_t>(x)].facets.count() >= static_cast<std::size_t>(P.dim()));
            const bool reg = P.is_regular(x);
            regular += reg;
            CHECK(P.in_VX(x) == reg);
            CHECK(P.coordinates_nested(x) == reg);
            if (reg) coords.insert(P.coordinate_point(x));
        }
        CHECK(regular == factorial(n));
        CHECK(static_cast<long>(coords.size()) == factorial(n));
    }
}

TEST_CASE("grassmannian vertices are coordinate points") {
    for (auto [m, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        const Polytope P(ParabolicShape::grassmannian(m, n));
        std::set<PositivePath> seen;
        for (int x = 0; x < P.num_vertices(); ++x) {
            CHECK(P.in_VX(x));
            auto cp = P.coordinate_point(x);
            REQUIRE(cp.size() == 1);
            seen.insert(cp[0]);
        }
        CHECK(static_cast<int>(seen.size()) == P.num_vertices());
    }
}

TEST_CASE("V^X is not decided for other partial flags") {
    const Polytope P(ParabolicShape::parse("1,3,4"));
    CHECK_THROWS_AS((void)P.in_VX(0), UnsupportedShape);
}

TEST_CASE("coordinate point of the extreme grassmannian vertices") {
    const Polytope P(ParabolicShape::parse("2,4"));
    for (int x = 0; x < P.num_vertices(); ++x) {
        bool allB = true, allA = true;
        for (int c : P.diagram().boxes()) {
            allB = allB && P.value(x, c) == P.block_value(2);
            allA = allA && P.value(x, c) == P.block_value(1);
        }
        if (allB) CHECK(P.coordinate_point(x)[0] == PositivePath{{3, 4}});
        if (allA) CHECK(P.coordinate_point(x)[0] == PositivePath{{1, 2}});
    }
}

TEST_CASE("named faces") {
    for (auto [m, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        const Polytope P(ParabolicShape::grassmannian(m, n));
        const auto parts = partitions_in_box(m, n);
        for (const auto& mu : parts) {
            int codim = 0;
            for (int x : mu) codim += x;
            CHECK(P.face_dimension(P.named_face_F(mu)) == m * (n - m) - codim);
            CHECK(P.face_dimension(P.named_face_Fvee(mu)) == codim);
            for (const auto& eta : parts) {
                const Face f = P.named_face_F(mu) & P.named_face_Fvee(eta);
                if (partition_leq(mu, eta)) {
                    CHECK(P.face_dimension(f) == partition_size(eta) - partition_size(mu));
                    CHECK(P.face_dimension_oracle(f) == partition_size(eta) - partition_size(mu));
                } else {
                    CHECK(f.none());
                }
            }
        }
        const Partition zero(static_cast<std::size_t>(m), 0);
        CHECK(P.named_face_F(zero) == P.whole());
        CHECK(P.named_face_Fvee(zero).count() == 1);
    }
    const Polytope P(ParabolicShape::parse("2,4"));
    CHECK(P.face_dimension(P.named_face_F({1, 0})) == 3);
    // one box stays free between the two paths
    CHECK(P.face_dimension(P.named_face_F({1, 0}) & P.named_face_Fvee({1, 1})) == 1);
    CHECK_THROWS(P.named_face_F({3, 0}));
    CHECK_THROWS(Polytope(ParabolicShape::complete(3)).named_face_F({1}));
}

TEST_CASE("delta_k faces have codimension two") {
    const Polytope P(ParabolicShape::parse("2,5"));
    for (int k = 1; k <= 3; ++k) {
        CHECK(P.face_dimension(P.delta_k_face(k)) == P.dim() - 2);
        CHECK(P.face_dimension_oracle(P.delta_k_face(k)) == P.dim() - 2);
    }
    CHECK_THROWS(P.delta_k_face(4));
}

TEST_CASE("face dimension agrees with the oracle on facet intersections") {
    for (const char* s : {"2,4", "2,5", "1,2,3,4", "1,3,4"}) {
        const Polytope P(ParabolicShape::parse(s));
        CHECK(P.face_dimension(P.whole()) == P.face_dimension_oracle(P.whole()));
        CHECK(P.face_dimension(P.empty()) == -1);
        CHECK(P.face_dimension_oracle(P.empty()) == -1);
        for (int a = 0; a < P.num_facets(); ++a) {
            CHECK(P.face_dimension(P.facet(a)) == P.dim() - 1);
            for (int b = a; b < P.num_facets(); ++b) {
                const Face f = P.facet(a) & P.facet(b);
                CHECK(P.face_dimension(f) == P.face_dimension_oracle(f));
                for (int c = b; c < P.num_facets(); c += 2) {
                    const Face g = f & P.facet(c);
                    CHECK(P.face_dimension(g) == P.face_dimension_oracle(g));
                }
            }
        }
        for (int x = 0; x < P.num_vertices(); ++x) {
            CHECK(P.face_dimension(P.vertex_face(x)) == 0);
            CHECK(P.face_of_facets({}) == P.whole());
        }
    }
}

TEST_CASE("contradictory constants give the empty face") {
    const Polytope P(ParabolicShape::parse("1,2"));
    // the single box lies between a_1 and a_2; both facets pin it to different values
    REQUIRE(P.num_facets() == 2);
    CHECK((P.facet(0) & P.facet(1)).none());
    CHECK(P.face_dimension(P.facet(0) & P.facet(1)) == -1);
}

TEST_CASE("face unions are antichains") {
    const Polytope P(ParabolicShape::parse("2,4"));
    std::vector<Face> fs{P.whole(), P.facet(0), P.facet(1), P.empty()};
    const FaceUnion u(fs);
    CHECK(u.size() == 1);
    CHECK(u.faces()[0] == P.whole());
    const FaceUnion v(std::vector<Face>{P.facet(0), P.facet(1), P.facet(0) & P.facet(1)});
    CHECK(v.size() == 2);
    const FaceUnion w = intersect(v, FaceUnion::single(P.facet(2)));
    for (const auto& f : w.faces()) CHECK(f.subset_of(P.facet(2)));
    CHECK(intersect(v, FaceUnion::single(P.whole())) == v);
}
