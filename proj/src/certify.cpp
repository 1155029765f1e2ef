#include "gcx/certify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <thread>

#include "gcx/pluecker.hpp"

namespace gcx {

std::string outcome_str(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::Certified: return "certified";
        case SearchOutcome::Zero: return "zero";
        case SearchOutcome::Exhausted: return "exhausted";
        case SearchOutcome::Mismatch: return "mismatch";
    }
    return "?";
}

std::string status_str(CertStatus s) { return s == CertStatus::Certified ? "certified" : "mismatch"; }

namespace {

void check_inputs(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                  const std::vector<Permutation>& us) {
    const int n = P.n();
    if (vs.size() != us.size()) throw std::invalid_argument("need one translation per factor");
    if (vs.empty()) throw std::invalid_argument("need at least one factor");
    int total = 0;
    for (const auto& v : vs) {
        if (v.n() != n) throw std::invalid_argument("rank mismatch in " + v.str());
        if (!in_WP(v, P.shape())) throw std::invalid_argument(v.str() + " is not a minimal coset representative");
        total += length(v);
    }
    for (const auto& u : us)
        if (u.n() != n) throw std::invalid_argument("rank mismatch in " + u.str());
    if (w.n() != n || !in_WP(w, P.shape())) throw std::invalid_argument(w.str() + " is not a minimal coset representative");
    if (total != length(w)) throw std::invalid_argument("lengths do not add up: sum l(v_i) != l(w)");
}

std::vector<PositivePath> paths_for(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                                    const std::vector<Permutation>& us) {
    const ParabolicShape& shape = P.shape();
    std::vector<PositivePath> all;
    auto add = [&](const VanishingSet& s) {
        auto f = flatten(s);
        all.insert(all.end(), f.begin(), f.end());
    };
    for (std::size_t i = 0; i < vs.size(); ++i) add(vanishing_translated(shape, us[i], vs[i]));
    const Permutation w0 = longest_element(P.n());
    add(vanishing_translated(shape, w0, min_coset_rep(compose(w0, w), shape)));
    return all;
}

}  // namespace

FaceUnion intersection_of(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                          const std::vector<Permutation>& us) {
    check_inputs(P, vs, w, us);
    return delta_of_paths(P, paths_for(P, vs, w, us));
}

Evaluation evaluate(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                    const std::vector<Permutation>& us, int64_t oracle) {
    const FaceUnion S = intersection_of(P, vs, w, us);
    Evaluation ev;
    ev.faces = static_cast<int>(S.size());
    std::vector<int> verts;
    for (const auto& f : S.faces()) {
        if (f.count() > 1) {
            int d = P.face_dimension(f);
            if (ev.obstruction != Obstruction::PositiveDimension) {
                ev.obstruction = Obstruction::PositiveDimension;
                ev.detail = P.face_str(f);
            }
            ev.maxDim = std::max(ev.maxDim, d);
            continue;
        }
        const int x = static_cast<int>(f.indices().front());
        if (!P.in_VX(x)) ev.outsideVX.push_back(x);
        verts.push_back(x);
    }
    if (ev.obstruction == Obstruction::None && !ev.outsideVX.empty()) {
        ev.obstruction = Obstruction::OutsideVX;
        ev.detail = "vertex " + std::to_string(ev.outsideVX.front()) + " is not in V^X";
    }
    if (ev.obstruction != Obstruction::None) return ev;

    std::sort(verts.begin(), verts.end());
    Certificate c;
    c.shape = P.shape();
    c.vs = vs;
    c.w = w;
    c.us = us;
    c.vertices = verts;
    for (int x : verts) c.vertexPatterns.push_back(P.vertex_tsv(x));
    c.count = static_cast<int64_t>(verts.size());
    c.oracle = oracle;
    c.status = c.count == oracle ? CertStatus::Certified : CertStatus::Mismatch;
    ev.cert = std::move(c);
    return ev;
}

Evaluation evaluate(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                    const std::vector<Permutation>& us) {
    check_inputs(P, vs, w, us);
    return evaluate(P, vs, w, us, structure_constant(vs, w));
}

int default_threads() {
    if (const char* s = std::getenv("GCX_THREADS")) {
        int t = std::atoi(s);
        if (t > 0) return t;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

std::vector<std::vector<Permutation>> recipe_candidates(const ParabolicShape& shape, const std::vector<Permutation>& vs,
                                                        const Permutation&) {
    std::vector<std::vector<Permutation>> out;
    const int n = shape.n();
    const Permutation id = Permutation::identity(n);
    auto with_slot = [&](std::size_t k, const Permutation& u) {
        std::vector<Permutation> us(vs.size(), id);
        us[k] = u;
        out.push_back(std::move(us));
    };
    if (shape.is_grassmannian() && vs.size() == 2) {
        const int m = shape.cut(1);
        for (std::size_t k = 0; k < 2; ++k) {
            const Partition a = partition_of_perm(vs[k], m), b = partition_of_perm(vs[1 - k], m);
            const bool aDivisor = partition_size(a) == 1;
            // Chevalley: translate the divisor by the Grassmannian permutation of the other factor
            if (aDivisor) with_slot(k, vs[1 - k]);
            // one-row partitions: shift the first block past the second row
            const bool aRow = std::all_of(a.begin() + 1, a.end(), [](int x) { return x == 0; });
            const bool bRow = std::all_of(b.begin() + 1, b.end(), [](int x) { return x == 0; });
            if (aRow && bRow) {
                const int r = a[0], q = b[0];
                if (r + q <= n - m) {
                    std::vector<int> win(static_cast<std::size_t>(n), 0);
                    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
                    for (int j = 1; j <= m + r - 1; ++j) {
                        int val = j < m ? j : j + q;
                        win[static_cast<std::size_t>(j - 1)] = val;
                        used[static_cast<std::size_t>(val)] = 1;
                    }
                    int next = 1;
                    for (int j = m + r; j <= n; ++j) {
                        while (used[static_cast<std::size_t>(next)]) ++next;
                        win[static_cast<std::size_t>(j - 1)] = next;
                        used[static_cast<std::size_t>(next)] = 1;
                    }
                    with_slot(k, Permutation(win));
                }
            }
        }
    }
    // powers of the cycle (2,3,...,n,1)
    std::vector<int> cw(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) cw[static_cast<std::size_t>(i - 1)] = i % n + 1;
    const Permutation C(cw);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        Permutation p = id;
        for (int e = 1; e < n; ++e) {
            p = compose(p, C);
            with_slot(k, p);
        }
    }
    // drop repeats, keep first occurrence
    std::vector<std::vector<Permutation>> uniq;
    std::set<std::vector<Permutation>> seen;
    for (auto& us : out)
        if (seen.insert(us).second) uniq.push_back(std::move(us));
    return uniq;
}

namespace {

// Evaluates candidates [0, count) in parallel batches and stops at the
// first certificate in index order.
struct Runner {
    const Polytope& P;
    const std::vector<Permutation>& vs;
    const Permutation& w;
    int64_t oracle;
    int threads;
    SearchResult& res;

    // returns true when a certificate or mismatch ended the search
    bool run(uint64_t begin, uint64_t end, const std::function<std::vector<Permutation>(uint64_t)>& cand, int tier) {
        const uint64_t batch = static_cast<uint64_t>(std::max(1, threads)) * 8;
        for (uint64_t lo = begin; lo < end; lo += batch) {
            const uint64_t hi = std::min(end, lo + batch);
            std::vector<Evaluation> evs(hi - lo);
            std::atomic<uint64_t> next{lo};
            auto work = [&]() {
                for (uint64_t i = next++; i < hi; i = next++) evs[i - lo] = evaluate(P, vs, w, cand(i), oracle);
            };
            const int t = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(threads), hi - lo));
            if (t <= 1) {
                work();
            } else {
                std::vector<std::thread> pool;
                for (int k = 0; k < t; ++k) pool.emplace_back(work);
                for (auto& th : pool) th.join();
            }
            for (uint64_t i = lo; i < hi; ++i) {
                Evaluation& ev = evs[i - lo];
                ++res.evaluated;
                for (int x : ev.outsideVX)
                    if (std::find(res.outsideVX.begin(), res.outsideVX.end(), x) == res.outsideVX.end())
                        res.outsideVX.push_back(x);
                if (ev.cert) {
                    res.cert = ev.cert;
                    res.tier = tier;
                    res.outcome = ev.cert->status == CertStatus::Certified ? SearchOutcome::Certified : SearchOutcome::Mismatch;
                    if (tier == 3) res.cursor = i + 1;
                    return true;
                }
                if (ev.obstruction == Obstruction::PositiveDimension && (res.bestDim < 0 || ev.maxDim < res.bestDim))
                    res.bestDim = ev.maxDim;
            }
            if (tier == 3) res.cursor = hi;
        }
        return false;
    }
};

uint64_t ipow(uint64_t b, std::size_t e) {
    uint64_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= b;
    return r;
}

}  // namespace

SearchResult search(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w, const SearchOptions& opt) {
    check_inputs(P, vs, w, std::vector<Permutation>(vs.size(), Permutation::identity(P.n())));
    SearchResult res;
    res.oracle = structure_constant(vs, w);
    for (const auto& v : vs)
        if (!bruhat_leq(v, w)) {
            res.outcome = SearchOutcome::Zero;
            return res;
        }
    // surface an unsupported V^X before spawning workers
    if (P.num_vertices() > 0) (void)P.in_VX(0);

    const int threads = opt.threads > 0 ? opt.threads : default_threads();
    Runner run{P, vs, w, res.oracle, threads, res};
    const int n = P.n();
    const Permutation id = Permutation::identity(n);
    const auto perms = all_permutations(n);
    const uint64_t np = perms.size();
    const std::size_t m = vs.size();

    if (opt.tiers >= 1) {
        // one translated slot, the rest fixed at id
        auto cand = [&](uint64_t i) {
            std::vector<Permutation> us(m, id);
            us[static_cast<std::size_t>(i / np)] = perms[static_cast<std::size_t>(i % np)];
            return us;
        };
        if (run.run(0, np * m, cand, 1)) return res;
    }
    if (opt.tiers >= 2) {
        auto recipes = recipe_candidates(P.shape(), vs, w);
        auto cand = [&](uint64_t i) { return recipes[static_cast<std::size_t>(i)]; };
        if (run.run(0, recipes.size(), cand, 2)) return res;
    }
    if (opt.tiers >= 3) {
        // u_last = id first, then the remaining tuples
        const uint64_t head = ipow(np, m - 1);
        const uint64_t total = ipow(np, m);
        auto cand = [&](uint64_t i) {
            std::vector<Permutation> us(m, id);
            uint64_t x = i;
            uint64_t lastDigit = 0;
            if (x >= head) {
                x -= head;
                lastDigit = 1 + x / head;
                x %= head;
            }
            for (std::size_t k = 0; k + 1 < m; ++k) {
                us[k] = perms[static_cast<std::size_t>(x % np)];
                x /= np;
            }
            us[m - 1] = perms[static_cast<std::size_t>(lastDigit)];
            return us;
        };
        const uint64_t end = std::min(total, opt.cursor + opt.budget);
        if (run.run(opt.cursor, end, cand, 3)) return res;
        res.cursor = end;
    }
    res.outcome = SearchOutcome::Exhausted;
    return res;
}

Gr2Reduction reduce_gr2(const Partition& lambda, const Partition& mu, const Partition& eta, int n) {
    for (const auto* p : {&lambda, &mu, &eta})
        if (!partition_fits(*p, 2, n)) throw std::invalid_argument("partition does not fit Gr(2,n)");
    Gr2Reduction g;
    g.a = lambda[0] - lambda[1];
    g.b = mu[0] - mu[1];
    g.c = eta[0] - lambda[1] - mu[1];
    g.d = eta[1] - lambda[1] - mu[1];
    if (!(n - 2 >= g.c && g.c >= g.d && g.d >= 0 && g.c + g.d == g.a + g.b && g.c >= std::max(g.a, g.b))) {
        g.zero = true;
        return g;
    }
    g.r = g.a - g.d;
    g.q = g.b - g.d;
    g.m = std::min(g.d + 2, n - 1);
    return g;
}

namespace {

void note_outside(SweepReport& rep, const Polytope& P, const std::vector<int>& xs) {
    for (int x : xs) {
        std::string s = P.vertex_tsv(x);
        if (std::find(rep.outsideVX.begin(), rep.outsideVX.end(), s) == rep.outsideVX.end()) rep.outsideVX.push_back(s);
    }
}

SweepReport sweep_complete(const ParabolicShape& shape, const SearchOptions& opt) {
    SweepReport rep;
    rep.shape = shape;
    const int n = shape.n();
    const PartitionReport part = build_modified_partition(n);
    rep.oracleConsistent = part.consistent;
    const Polytope P(shape);
    for (const auto& cls : part.classes) {
        ClassReport cr;
        cr.zero = cls.zero;
        cr.constant = cls.constant;
        cr.members = cls.members.size();
        rep.oracleChecks += cls.members.size();
        if (cls.zero) {
            // every member lies in A_0 or was merged through a vanishing recursion step
            cr.resolved = part.consistent;
            for (const auto& t : cls.members) {
                TripleReport tr;
                tr.vs = t.factors;
                tr.w = t.w;
                tr.oracle = 0;
                tr.outcome = SearchOutcome::Zero;
                tr.how = "zero-class";
                rep.triples.push_back(std::move(tr));
            }
        } else {
            for (const auto& t : cls.members) {
                SearchResult sr = search(P, t.factors, t.w, opt);
                note_outside(rep, P, sr.outsideVX);
                TripleReport tr;
                tr.vs = t.factors;
                tr.w = t.w;
                tr.oracle = sr.oracle;
                tr.outcome = sr.outcome;
                tr.tier = sr.tier;
                tr.cert = sr.cert;
                tr.how = outcome_str(sr.outcome);
                if (sr.outcome == SearchOutcome::Mismatch) rep.oracleConsistent = false;
                if (sr.outcome == SearchOutcome::Certified) {
                    ++cr.certifiedMembers;
                    if (!cr.witness) cr.witness = sr.cert;
                }
                rep.triples.push_back(std::move(tr));
            }
            cr.resolved = cr.certifiedMembers > 0;
        }
        (cr.resolved ? rep.resolved : rep.unresolved) += 1;
        rep.classes.push_back(std::move(cr));
    }
    return rep;
}

SweepReport sweep_grassmannian(const ParabolicShape& shape, const SearchOptions& opt) {
    SweepReport rep;
    rep.shape = shape;
    const int m = shape.cut(1), n = shape.n();
    const auto parts = partitions_in_box(m, n);
    const Polytope P(shape);
    std::map<int, std::unique_ptr<Polytope>> reduced;
    auto poly = [&](int mm) -> const Polytope& {
        auto& p = reduced[mm];
        if (!p) p = std::make_unique<Polytope>(ParabolicShape::grassmannian(mm, n));
        return *p;
    };
    for (const auto& la : parts)
        for (const auto& mu : parts)
            for (const auto& eta : parts) {
                if (partition_size(eta) != partition_size(la) + partition_size(mu)) continue;
                TripleReport tr;
                tr.vs = {grassmannian_perm(la, m, n), grassmannian_perm(mu, m, n)};
                tr.w = grassmannian_perm(eta, m, n);
                tr.oracle = structure_constant(tr.vs, tr.w);
                ++rep.oracleChecks;
                if (m == 2) {
                    const Gr2Reduction g = reduce_gr2(la, mu, eta, n);
                    if (g.zero) {
                        tr.outcome = SearchOutcome::Zero;
                        tr.how = "reduced-zero";
                        if (tr.oracle != 0) rep.oracleConsistent = false;
                    } else {
                        const Polytope& Q = poly(g.m);
                        Partition r(static_cast<std::size_t>(g.m), 0), q = r, rq = r;
                        r[0] = g.r;
                        q[0] = g.q;
                        rq[0] = g.r + g.q;
                        std::vector<Permutation> vs{grassmannian_perm(r, g.m, n), grassmannian_perm(q, g.m, n)};
                        const Permutation w = grassmannian_perm(rq, g.m, n);
                        SearchOptions o = opt;
                        o.tiers = 2;
                        SearchResult sr = search(Q, vs, w, o);
                        if (sr.oracle != tr.oracle) rep.oracleConsistent = false;
                        tr.outcome = sr.outcome;
                        tr.tier = sr.tier;
                        tr.cert = sr.cert;
                        tr.how = sr.outcome == SearchOutcome::Certified ? "reduced-special" : outcome_str(sr.outcome);
                        if (sr.outcome == SearchOutcome::Mismatch) rep.oracleConsistent = false;
                    }
                } else {
                    SearchResult sr = search(P, tr.vs, tr.w, opt);
                    note_outside(rep, P, sr.outsideVX);
                    tr.outcome = sr.outcome;
                    tr.tier = sr.tier;
                    tr.cert = sr.cert;
                    tr.how = outcome_str(sr.outcome);
                    if (sr.outcome == SearchOutcome::Mismatch) rep.oracleConsistent = false;
                }
                const bool ok = tr.outcome == SearchOutcome::Certified || tr.outcome == SearchOutcome::Zero;
                (ok ? rep.resolved : rep.unresolved) += 1;
                rep.triples.push_back(std::move(tr));
            }
    return rep;
}

}  // namespace

SweepReport sweep_conjecture(const ParabolicShape& shape, const SearchOptions& opt) {
    if (shape.is_grassmannian()) return sweep_grassmannian(shape, opt);
    if (shape.is_complete()) return sweep_complete(shape, opt);
    throw UnsupportedShape("sweeps cover Grassmannians and complete flags only");
}

}  // namespace gcx
