// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "gcx/certify.hpp"
#include "gcx/kogan.hpp"
#include "gcx/pluecker.hpp"

using namespace gcx;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "failed: " << what << "; ";
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limitSeconds, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.note << "exception: " << e.what() << "; ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limitSeconds > 0 && secs > limitSeconds) {
        o.ok = false;
        o.note << "over time limit " << limitSeconds << " s; ";
    }
    if (!o.ok) ++failures;
    std::printf("%s %d %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs, o.note.str().c_str());
    std::fflush(stdout);
}

Permutation W(int n, Word w) { return Permutation::from_word(n, w); }

bool moved_to(const Triple& a, const Triple& b) {
    for (const Triple& x : {a, Triple{a.v, a.u, a.w}})
        for (int i = 1; i < a.w.n(); ++i) {
            auto st = recursion_step(x, i);
            if (st.kind == StepKind::Moved && (st.triple == b || st.triple == Triple{b.v, b.u, b.w})) return true;
        }
    return false;
}

bool linked(const Triple& a, const Triple& b) {
    if (moved_to(a, b) || moved_to(b, a)) return true;
    const auto orbit = apply_identities(a);
    return std::find(orbit.begin(), orbit.end(), b) != orbit.end();
}

void check_faces(Outcome& o, const Polytope& P, const FaceUnion& u, std::size_t& touched) {
    for (const auto& f : u.faces()) {
        ++touched;
        o.require(P.face_dimension(f) == P.face_dimension_oracle(f), "face dimension on " + P.shape().str());
    }
}

}  // namespace

int main() {
    criterion(1, "Gr(3,6) flagship gives N = 2 from two regular vertices", 10, [](Outcome& o) {
        const int n = 6;
        const Permutation lam = grassmannian_perm({2, 1, 0}, 3, n), eta = grassmannian_perm({3, 2, 1}, 3, n);
        const std::vector<Triple> chain{
            {lam, lam, eta},
            {W(n, {2, 4, 3}), W(n, {2, 4, 3, 1}), W(n, {3, 5, 4, 1, 2, 3, 1})},
            {W(n, {2, 4, 3}), W(n, {2, 4, 3, 1, 2}), W(n, {3, 5, 4, 1, 2, 3, 1, 2})},
            {W(n, {2, 4}), W(n, {2, 4, 3, 1, 2}), W(n, {3, 5, 4, 2, 3, 1, 2})},
            {W(n, {2, 4}), W(n, {2, 4, 3, 1, 2, 3}), W(n, {3, 5, 4, 2, 3, 1, 2, 3})},
            {W(n, {2, 4}), W(n, {2, 4, 3, 1, 2, 3, 1}), W(n, {3, 5, 4, 2, 3, 1, 2, 3, 1})},
            {W(n, {4, 2}), W(n, {4, 2, 3, 5, 4, 3, 5}), W(n, {3, 1, 2, 4, 3, 5, 4, 3, 5})},
        };
        o.require(chain[0].u == W(n, {2, 4, 3}) && chain[0].w == W(n, {3, 5, 4, 1, 2, 3}), "grassmannian words");
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) o.require(linked(chain[k], chain[k + 1]), "chain step");
        const Tuple split = split_by_star(chain.back());
        o.require(split.factors.size() == 3, "star split into three factors");
        const Permutation v = chain.back().v, w = chain.back().w;
        const Polytope P(ParabolicShape::complete(n));
        const Evaluation ev = evaluate(P, {Permutation::simple(n, 2), Permutation::simple(n, 4), v}, w,
                                       {Permutation({2, 3, 1, 4, 5, 6}), Permutation({1, 4, 5, 6, 2, 3}), Permutation::identity(n)});
        o.require(ev.certified(), "certified");
        if (ev.cert) {
            int regular = 0;
            for (int x : ev.cert->vertices) regular += P.is_regular(x);
            o.require(ev.cert->count == 2 && regular == 2, "two regular vertices");
            o.require(ev.cert->oracle == 2 && structure_constant({lam, lam}, eta) == 2, "oracle N = 2");
            o.note << "|S| = " << ev.cert->count << ", N = " << ev.cert->oracle;
        }
    });

    criterion(2, "Fl4 sweep resolves every class", 300, [](Outcome& o) {
        const auto rep = sweep_conjecture(ParabolicShape::complete(4));
        o.require(rep.all_resolved(), "all classes resolved");
        o.require(rep.oracleConsistent, "oracle consistency");
        o.require(rep.outsideVX.empty(), "no vertex outside V^X");
        // every triple against the second oracle
        const auto perms = all_permutations(4);
        std::size_t triples = 0;
        for (const auto& u : perms)
            for (const auto& v : perms)
                for (const auto& w : perms)
                    if (length(w) == length(u) + length(v)) {
                        ++triples;
                        o.require(structure_constant({u, v}, w) == structure_constant_dd({u, v}, w), "oracles agree");
                    }
        std::size_t certified = 0, members = 0;
        for (const auto& c : rep.classes)
            if (!c.zero) certified += c.certifiedMembers, members += c.members;
        o.note << rep.classes.size() << " classes over " << triples << " triples, " << certified << "/" << members
               << " nonzero-class tuples certified individually";
    });

    criterion(3, "Gr(2,n), n <= 6: reduction certifies every triple; Pieri and Chevalley tables", 120, [](Outcome& o) {
        SearchOptions opt;
        opt.tiers = 2;
        std::size_t triples = 0;
        for (int n = 3; n <= 6; ++n) {
            const auto rep = sweep_conjecture(ParabolicShape::grassmannian(2, n), opt);
            o.require(rep.all_resolved(), "sweep Gr(2," + std::to_string(n) + ")");
            for (const auto& t : rep.triples) {
                ++triples;
                if (t.oracle != 0) o.require(t.outcome == SearchOutcome::Certified && t.tier <= 2, "tier-2 certificate");
            }
            const auto parts = partitions_in_box(2, n);
            for (const auto& mu : parts) {
                const auto cov = chevalley(mu, 2, n);
                const auto p = pieri_gr2(mu, n);
                for (const auto& eta : parts) {
                    if (partition_size(eta) == partition_size(mu) + 1) {
                        const bool listed = std::find(cov.begin(), cov.end(), eta) != cov.end();
                        o.require(gr_constant({1, 0}, mu, eta, 2, n) == (listed ? 1 : 0), "Chevalley table");
                    }
                    if (partition_size(eta) == partition_size(mu) + 2)
                        o.require(gr_constant({1, 1}, mu, eta, 2, n) == (p && *p == eta ? 1 : 0), "Pieri table");
                }
            }
        }
        o.note << triples << " triples";
    });

    criterion(4, "vertex counts and the V^X criterion", 60, [](Outcome& o) {
        for (auto [m, n, c] : {std::tuple{2, 4, 6}, {2, 5, 10}, {3, 6, 20}}) {
            const Polytope P(ParabolicShape::grassmannian(m, n));
            o.require(P.num_vertices() == c, "C(n,m) vertices");
            for (int x = 0; x < P.num_vertices(); ++x) o.require(P.in_VX(x), "grassmannian vertex in V^X");
        }
        for (auto [n, f] : {std::pair{3, 6}, {4, 24}, {5, 120}}) {
            const Polytope P(ParabolicShape::complete(n));
            int regular = 0;
            for (int x = 0; x < P.num_vertices(); ++x) {
                regular += P.is_regular(x);
                o.require(P.in_VX(x) == P.is_regular(x), "V^X equals regular");
            }
            o.require(regular == f, "n! regular vertices");
            o.note << "Fl" << n << " " << regular << "/" << P.num_vertices() << " ";
        }
    });

    criterion(5, "degeneration faces and the Delta_(k) identity", 0, [](Outcome& o) {
        for (int n : {4, 5}) {
            const Polytope P(ParabolicShape::grassmannian(2, n));
            const Permutation w0 = longest_element(n), id = Permutation::identity(n);
            for (const auto& mu : partitions_in_box(2, n)) {
                const Permutation w = grassmannian_perm(mu, 2, n);
                o.require(delta_uv(P, id, w) == FaceUnion::single(P.named_face_F(mu)), "Delta(id, w_mu) = F_mu");
                o.require(delta_uv(P, w0, min_coset_rep(compose(w0, w), P.shape())) == FaceUnion::single(P.named_face_Fvee(mu)),
                          "Delta(w0, pi(w0 w_eta)) = F_eta dual");
            }
        }
        const Polytope P(ParabolicShape::grassmannian(2, 5));
        for (int k = 1; k <= 3; ++k) {
            std::vector<PositivePath> paths;
            for (int j = 1; j <= 5; ++j)
                if (j != k + 1) paths.push_back(PositivePath{{std::min(k + 1, j), std::max(k + 1, j)}});
            o.require(delta_of_paths(P, paths) == FaceUnion::single(P.delta_k_face(k)), "Delta_(k)");
        }
    });

    criterion(6, "lattice points biject with weights", 0, [](Outcome& o) {
        for (auto [shape, lambda] : {std::pair<const char*, std::vector<int>>{"2,4", {2, 2, 0, 0}}, {"1,2,3", {2, 1, 0}}}) {
            const LadderDiagram d(ParabolicShape::parse(shape));
            const auto pts = d.lattice_points(lambda);
            const auto ws = d.weight_set(lambda);
            std::set<GCPattern> img;
            for (const auto& b : ws) {
                img.insert(phi(b));
                o.require(psi(phi(b)) == b, "psi after phi");
            }
            o.require(pts.size() == ws.size() && img.size() == ws.size(), "equal counts, phi injective");
            o.require(img == std::set<GCPattern>(pts.begin(), pts.end()), "phi onto the lattice points");
            for (const auto& g : pts) {
                std::map<int, int> per;
                for (const auto& p : d.decompose_weight(g)) ++per[p.level()];
                for (int j = 1; j < d.n(); ++j)
                    o.require(per[j] == lambda[static_cast<std::size_t>(j - 1)] - lambda[static_cast<std::size_t>(j)],
                              "b_j paths at level j");
            }
            o.note << shape << ": " << pts.size() << " points ";
        }
    });

    criterion(7, "anticanonical special paths", 0, [](Outcome& o) {
        for (const char* s : {"4,7", "3,5,8", "1,2,3,4"}) {
            const ParabolicShape shape = ParabolicShape::parse(s);
            const LadderDiagram d(shape);
            const auto paths = d.special_paths();
            int expected = 0;
            for (int i = 1; i <= shape.k(); ++i) expected += shape.cut(i + 1) - shape.cut(i - 1);
            o.require(static_cast<int>(paths.size()) == expected, "special path count");
            const std::set<PositivePath> distinct(paths.begin(), paths.end());
            o.require(static_cast<int>(distinct.size()) == shape.n() + shape.cut(shape.k()) - shape.cut(1), "distinct count");
        }
        const auto sp = LadderDiagram(ParabolicShape::parse("4,7")).special_paths();
        const std::set<PositivePath> got(sp.begin(), sp.end());
        const std::set<PositivePath> expected47{{{1, 2, 3, 7}}, {{1, 2, 6, 7}}, {{1, 5, 6, 7}}, {{4, 5, 6, 7}},
                                            {{3, 4, 5, 6}}, {{2, 3, 4, 5}}, {{1, 2, 3, 4}}};
        o.require(got == expected47, "(4;7) list");
    });

    criterion(8, "Kogan subword vectors and uniqueness in Fl6", 60, [](Outcome& o) {
        const LadderDiagram d(ParabolicShape::complete(6));
        const Permutation v = W(6, {4, 2, 3, 5, 4, 3, 5}), w = W(6, {3, 1, 2, 4, 3, 5, 4, 3, 5});
        const Permutation w0w = compose(longest_element(6), w);
        const KoganFace dual = face_from_positions(d, {2, 3, 4, 5, 8, 9, 12}, true);
        o.require(dual.word == Word{2, 3, 4, 5, 3, 4, 3} && dual.perm == v && dual.reduced, "dual face");
        const KoganFace kf = face_from_positions(d, {2, 3, 4, 5, 8, 9}, false);
        o.require(kf.word == Word{4, 3, 2, 1, 3, 2} && kf.perm == w0w && kf.reduced, "Kogan face");
        const auto ds = enumerate_reduced(d, v, true);
        const auto ks = enumerate_reduced(d, w0w, false);
        o.require(ds.size() == 1 && ds[0].edges == dual.edges, "unique dual face");
        o.require(ks.size() == 1 && ks[0].edges == kf.edges, "unique Kogan face");
    });

    criterion(9, "property suite", 0, [](Outcome& o) {
        // lattice laws
        for (int n = 2; n <= 6; ++n) {
            const LadderDiagram d(ParabolicShape::complete(n));
            for (int k = 1; k < n; ++k) {
                const auto ps = d.paths_at_level(k);
                for (const auto& a : ps)
                    for (const auto& b : ps) {
                        o.require(meet(a, b) == meet(b, a) && join(a, b) == join(b, a), "commutative");
                        o.require(meet(a, join(a, b)) == a && join(a, meet(a, b)) == a, "absorption");
                        o.require(path_leq(meet(a, b), a) && path_leq(a, join(a, b)), "bounds");
                        if (n <= 5)
                            for (const auto& c : ps)
                                o.require(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)), "distributive");
                    }
            }
        }
        // face dimensions on the faces the sweeps touch
        std::size_t touched = 0;
        SearchOptions opt;
        opt.tiers = 2;
        for (const auto& shape : {ParabolicShape::grassmannian(2, 5), ParabolicShape::grassmannian(2, 6),
                                  ParabolicShape::complete(3), ParabolicShape::complete(4)}) {
            const Polytope P(shape);
            const Permutation w0 = longest_element(shape.n());
            const auto rep = sweep_conjecture(shape, opt);
            for (const auto& t : rep.triples) {
                if (!t.cert || t.cert->shape != shape) continue;
                for (std::size_t k = 0; k < t.vs.size(); ++k) check_faces(o, P, delta_uv(P, t.cert->us[k], t.vs[k]), touched);
                check_faces(o, P, delta_uv(P, w0, min_coset_rep(compose(w0, t.w), shape)), touched);
                check_faces(o, P, intersection_of(P, t.vs, t.w, t.cert->us), touched);
            }
        }
        // the two coefficient oracles
        for (auto [m, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
            const auto parts = partitions_in_box(m, n);
            for (const auto& a : parts)
                for (const auto& b : parts)
                    for (const auto& c : parts)
                        if (partition_size(c) == partition_size(a) + partition_size(b))
                            o.require(structure_constant({grassmannian_perm(a, m, n), grassmannian_perm(b, m, n)},
                                                         grassmannian_perm(c, m, n)) == lr_coefficient(a, b, c),
                                      "Schubert polynomials equal LR");
        }
        // moves preserve constants on S4
        const auto perms = all_permutations(4);
        std::size_t moves = 0;
        for (const auto& u : perms)
            for (const auto& v : perms)
                for (const auto& w : perms) {
                    if (length(w) != length(u) + length(v)) continue;
                    const int64_t c = structure_constant({u, v}, w);
                    for (const auto& t : apply_identities(Triple{u, v, w}))
                        o.require(structure_constant({t.u, t.v}, t.w) == c, "identity"), ++moves;
                    for (int i = 1; i < 4; ++i) {
                        const auto st = recursion_step(Triple{u, v, w}, i);
                        if (st.kind == StepKind::Moved)
                            o.require(structure_constant({st.triple.u, st.triple.v}, st.triple.w) == c, "recursion"), ++moves;
                        if (st.kind == StepKind::Zero) o.require(c == 0, "vanishing recursion"), ++moves;
                    }
                    const Tuple sp = split_by_star(Triple{u, v, w});
                    o.require(structure_constant(sp.factors, sp.w) == c, "star split"), ++moves;
                }
        o.note << touched << " faces, " << moves << " moves checked";
    });

    return failures == 0 ? 0 : 1;
}
