#include "gcx/coeffs.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gcx {

int exponent(Monomial m, int var) { return static_cast<int>((m >> (5 * (var - 1))) & 31u); }

Monomial with_exponent(Monomial m, int var, int e) {
    if (var < 1 || var > kMaxVars) throw std::out_of_range("variable index out of range");
    if (e < 0 || e > 31) throw std::overflow_error("exponent does not fit the monomial packing");
    const int sh = 5 * (var - 1);
    return (m & ~(Monomial{31} << sh)) | (static_cast<Monomial>(e) << sh);
}

Monomial monomial_of(const std::vector<int>& exps) {
    Monomial m = 0;
    for (std::size_t k = 0; k < exps.size(); ++k)
        if (exps[k]) m = with_exponent(m, static_cast<int>(k + 1), exps[k]);
    return m;
}

std::vector<int> exponents_of(Monomial m) {
    std::vector<int> e(kMaxVars);
    for (int v = 1; v <= kMaxVars; ++v) e[static_cast<std::size_t>(v - 1)] = exponent(m, v);
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

Polynomial Polynomial::one() {
    Polynomial p;
    p.t_[0] = 1;
    return p;
}

Polynomial Polynomial::variable(int var) {
    Polynomial p;
    p.t_[with_exponent(0, var, 1)] = 1;
    return p;
}

int64_t Polynomial::coeff(Monomial m) const {
    auto it = t_.find(m);
    return it == t_.end() ? 0 : it->second;
}

void Polynomial::add(Monomial m, int64_t c) {
    if (c == 0) return;
    auto& x = t_[m];
    x += c;
    if (x == 0) t_.erase(m);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto [m, c] : o.t_) add(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto [m, c] : o.t_) add(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto [a, ca] : t_)
        for (auto [b, cb] : o.t_) {
            // exponent-wise addition; guard each 5-bit field against overflow
            Monomial m = 0;
            for (int v = 1; v <= kMaxVars; ++v) {
                int e = exponent(a, v) + exponent(b, v);
                if (e) m = with_exponent(m, v, e);
            }
            r.add(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::scaled(int64_t c) const {
    Polynomial r;
    if (c == 0) return r;
    for (auto [m, x] : t_) r.t_[m] = x * c;
    return r;
}

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Monomial, int64_t>> ts(t_.begin(), t_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return leading_less(b.first, a.first); });
    std::ostringstream os;
    bool first = true;
    for (auto [m, c] : ts) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        int64_t a = c < 0 ? -c : c;
        auto e = exponents_of(m);
        if (a != 1 || e.empty()) os << a;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            os << "x" << v + 1;
            if (e[v] > 1) os << '^' << e[v];
        }
    }
    return os.str();
}

Polynomial divided_difference(const Polynomial& f, int i) {
    Polynomial r;
    for (auto [m, c] : f.terms()) {
        int p = exponent(m, i), q = exponent(m, i + 1);
        if (p == q) continue;
        int sign = 1;
        if (p < q) {
            std::swap(p, q);
            sign = -1;
        }
        // x_i^p x_{i+1}^q - x_i^q x_{i+1}^p = (x_i - x_{i+1}) (x_i x_{i+1})^q sum_k x_i^k x_{i+1}^{p-q-1-k}
        for (int k = 0; k < p - q; ++k) {
            Monomial t = with_exponent(with_exponent(m, i, q + k), i + 1, q + (p - q - 1 - k));
            r.add(t, sign * c);
        }
    }
    return r;
}

std::vector<int> lehmer_code(const Permutation& w) {
    std::vector<int> c(static_cast<std::size_t>(w.n()), 0);
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(j) < w(i)) ++c[static_cast<std::size_t>(i - 1)];
    return c;
}

Permutation perm_from_code(const std::vector<int>& code, int N) {
    std::vector<int> avail(static_cast<std::size_t>(N));
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    for (int i = 1; i <= N; ++i) {
        int c = i <= static_cast<int>(code.size()) ? code[static_cast<std::size_t>(i - 1)] : 0;
        if (c >= static_cast<int>(avail.size())) throw std::invalid_argument("code does not fit S_N");
        w.push_back(avail[static_cast<std::size_t>(c)]);
        avail.erase(avail.begin() + c);
    }
    return Permutation(std::move(w));
}

Permutation embed(const Permutation& w, int N) {
    if (N < w.n()) throw std::invalid_argument("cannot embed into a smaller group");
    std::vector<int> x = w.window();
    for (int i = w.n() + 1; i <= N; ++i) x.push_back(i);
    return Permutation(std::move(x));
}

Permutation shrink(const Permutation& w) {
    std::vector<int> x = w.window();
    while (!x.empty() && x.back() == static_cast<int>(x.size())) x.pop_back();
    if (x.empty()) x.push_back(1);
    return Permutation(std::move(x));
}

namespace {

std::recursive_mutex& poly_mutex() {
    static std::recursive_mutex m;
    return m;
}

std::map<Permutation, Polynomial>& poly_cache() {
    static std::map<Permutation, Polynomial> c;
    return c;
}

Permutation swap_positions(const Permutation& w, int a, int b) {
    std::vector<int> x = w.window();
    std::swap(x[static_cast<std::size_t>(a - 1)], x[static_cast<std::size_t>(b - 1)]);
    return Permutation(std::move(x));
}

}  // namespace

const Polynomial& schubert_poly(const Permutation& w0) {
    std::lock_guard<std::recursive_mutex> lock(poly_mutex());
    const Permutation w = shrink(w0);
    auto& cache = poly_cache();
    if (auto it = cache.find(w); it != cache.end()) return it->second;

    Polynomial result;
    if (w.is_identity()) {
        result = Polynomial::one();
    } else {
        const int N = w.n();
        int r = 0;
        for (int i = 1; i < N; ++i)
            if (w(i) > w(i + 1)) r = i;
        int s = 0;
        for (int j = r + 1; j <= N; ++j)
            if (w(j) < w(r)) s = j;
        const Permutation v = swap_positions(w, r, s);
        result = Polynomial::variable(r) * schubert_poly(v);
        const int lw = length(w);
        for (int i = 1; i < r; ++i) {
            Permutation x = swap_positions(v, i, r);
            if (length(x) == lw) result += schubert_poly(x);
        }
    }
    return cache.emplace(w, std::move(result)).first->second;
}

Polynomial schubert_poly_divided(const Permutation& w) {
    const int N = w.n();
    std::vector<int> stair;
    for (int i = 1; i < N; ++i) stair.push_back(N - i);
    Polynomial f;
    f.add(monomial_of(stair), 1);
    // S_w = d_{w^-1 w0} applied to the staircase
    const Permutation x = compose(w.inverse(), longest_element(N));
    Word word = reduced_word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
    return f;
}

bool leading_less(Monomial a, Monomial b) {
    for (int v = kMaxVars; v >= 1; --v) {
        int ea = exponent(a, v), eb = exponent(b, v);
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::map<Permutation, int64_t> expand(const Polynomial& f0) {
    Polynomial f = f0;
    std::map<Permutation, int64_t> out;
    std::size_t guard = 0;
    while (!f.is_zero()) {
        Monomial lead = f.terms().begin()->first;
        for (auto [m, c] : f.terms())
            if (leading_less(lead, m)) lead = m;
        const int64_t c = f.coeff(lead);
        auto code = exponents_of(lead);
        int N = 1;
        for (std::size_t i = 0; i < code.size(); ++i) N = std::max(N, static_cast<int>(i) + 1 + code[i]);
        const Permutation x = shrink(perm_from_code(code, N));
        f -= schubert_poly(x).scaled(c);
        if (f.coeff(lead) != 0) throw std::logic_error("Schubert expansion failed to clear its leading term");
        out[x] += c;
        if (++guard > 1000000) throw std::runtime_error("Schubert expansion does not terminate");
    }
    return out;
}

namespace {

std::mutex& pair_mutex() {
    static std::mutex m;
    return m;
}

const std::map<Permutation, int64_t>& pair_expansion(const Permutation& a, const Permutation& b) {
    static std::map<std::pair<Permutation, Permutation>, std::map<Permutation, int64_t>> cache;
    std::pair<Permutation, Permutation> key{shrink(a), shrink(b)};
    if (key.second < key.first) std::swap(key.first, key.second);
    {
        std::lock_guard<std::mutex> lock(pair_mutex());
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto e = expand(schubert_poly(key.first) * schubert_poly(key.second));
    std::lock_guard<std::mutex> lock(pair_mutex());
    return cache.emplace(key, std::move(e)).first->second;
}

}  // namespace

int64_t structure_constant(const std::vector<Permutation>& us, const Permutation& w) {
    const int n = w.n();
    int total = 0;
    for (const auto& u : us) {
        if (u.n() != n) throw std::invalid_argument("rank mismatch in structure_constant");
        total += length(u);
    }
    if (total != length(w)) return 0;
    std::map<Permutation, int64_t> dist{{shrink(Permutation::identity(n)), 1}};
    for (const auto& u : us) {
        std::map<Permutation, int64_t> next;
        for (const auto& [x, c] : dist) {
            // classes outside S_n vanish in H*(Fl_n) and never reach w in S_n
            if (x.n() > n) continue;
            for (const auto& [y, d] : pair_expansion(x, u))
                if (y.n() <= n) next[y] += c * d;
        }
        dist = std::move(next);
    }
    auto it = dist.find(shrink(w));
    return it == dist.end() ? 0 : it->second;
}

int64_t structure_constant_dd(const std::vector<Permutation>& us, const Permutation& w) {
    int total = 0;
    Polynomial f = Polynomial::one();
    for (const auto& u : us) {
        total += length(u);
        f = f * schubert_poly(u);
    }
    if (total != length(w)) return 0;
    Word word = reduced_word(w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
    return f.constant_term();
}

int64_t lr_coefficient(const Partition& lambda0, const Partition& mu0, const Partition& nu0) {
    auto trim = [](Partition p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        return p;
    };
    const Partition lambda = trim(lambda0), mu = trim(mu0), nu = trim(nu0);
    if (partition_size(nu) != partition_size(lambda) + partition_size(mu)) return 0;
    if (!partition_leq(lambda, nu)) return 0;
    const int rows = static_cast<int>(nu.size());
    auto lam = [&](int r) { return r < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(r)] : 0; };

    // cells of nu/lambda row by row, left to right
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = lam(r); c < nu[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    const int letters = static_cast<int>(mu.size());
    std::vector<std::vector<int>> T(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) T[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(r)]), 0);
    std::vector<int> content(static_cast<std::size_t>(letters + 1), 0);
    int64_t count = 0;

    auto lattice = [&]() {
        // reverse reading word: rows top to bottom, each right to left
        std::vector<int> seen(static_cast<std::size_t>(letters + 2), 0);
        for (int r = 0; r < rows; ++r)
            for (int c = nu[static_cast<std::size_t>(r)] - 1; c >= lam(r); --c) {
                int x = T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                ++seen[static_cast<std::size_t>(x)];
                if (x > 1 && seen[static_cast<std::size_t>(x)] > seen[static_cast<std::size_t>(x - 1)]) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            if (lattice()) ++count;
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > lam(r)) lo = std::max(lo, T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0 && c >= lam(r - 1)) lo = std::max(lo, T[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int x = lo; x <= letters; ++x) {
            if (content[static_cast<std::size_t>(x)] >= mu[static_cast<std::size_t>(x - 1)]) continue;
            T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
            ++content[static_cast<std::size_t>(x)];
            self(self, k + 1);
            --content[static_cast<std::size_t>(x)];
        }
        T[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0);
    return count;
}

int64_t gr_constant(const Partition& lambda, const Partition& mu, const Partition& nu, int m, int n) {
    return structure_constant({grassmannian_perm(lambda, m, n), grassmannian_perm(mu, m, n)}, grassmannian_perm(nu, m, n));
}

std::vector<Partition> chevalley(const Partition& mu, int m, int n) {
    if (!partition_fits(mu, m, n)) throw std::invalid_argument("partition does not fit the box");
    std::vector<Partition> out;
    for (int i = 0; i < m; ++i) {
        Partition eta = mu;
        ++eta[static_cast<std::size_t>(i)];
        if (partition_fits(eta, m, n)) out.push_back(eta);
    }
    return out;
}

std::optional<Partition> pieri_gr2(const Partition& mu, int n) {
    if (!partition_fits(mu, 2, n)) throw std::invalid_argument("partition does not fit Gr(2,n)");
    if (mu[0] >= n - 2) return std::nullopt;
    return Partition{mu[0] + 1, mu[1] + 1};
}

int64_t special_constant(int r, int q, int m, int n) {
    if (r < 0 || q < 0 || r + q > n - m || m < 1 || m >= n) throw std::invalid_argument("special constant needs r + q <= n - m");
    return 1;
}

std::vector<Triple> apply_identities(const Triple& t) {
    const int n = t.w.n();
    const Permutation w0 = longest_element(n);
    auto conj = [&](const Permutation& x) { return compose(compose(w0, x), w0); };
    std::set<Triple> seen{t};
    std::vector<Triple> todo{t};
    while (!todo.empty()) {
        Triple x = todo.back();
        todo.pop_back();
        for (Triple y : {Triple{x.v, x.u, x.w}, Triple{x.u, compose(w0, x.w), compose(w0, x.v)},
                         Triple{conj(x.u), conj(x.v), conj(x.w)}})
            if (seen.insert(y).second) todo.push_back(y);
    }
    return {seen.begin(), seen.end()};
}

StepResult recursion_step(const Triple& t, int i) {
    StepResult res;
    if (!has_right_ascent(t.u, i) || !has_right_ascent(t.v, i)) return res;
    const int n = t.w.n();
    if (has_right_ascent(t.w, i)) {
        res.kind = StepKind::Moved;
        res.triple = Triple{compose(t.u, Permutation::simple(n, i)), t.v, compose(t.w, Permutation::simple(n, i))};
    } else {
        res.kind = StepKind::Zero;
    }
    return res;
}

std::string Tuple::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? " " : "") << factors[k].str();
    os << " | " << w.str();
    return os.str();
}

Tuple split_by_star(const Triple& t) {
    Tuple out;
    out.w = t.w;
    for (const Permutation* x : {&t.u, &t.v}) {
        if (x->is_identity()) {
            out.factors.push_back(*x);
            continue;
        }
        for (auto& f : star_factorize(*x).factors) out.factors.push_back(f);
    }
    return out;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> p;
    explicit DisjointSets(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

PartitionReport build_modified_partition(int n, int maxN) {
    if (n < 1 || n > maxN) throw std::invalid_argument("n exceeds the configured bound for the modified partition");
    const auto perms = all_permutations(n);
    const Permutation w0 = longest_element(n);
    auto conj = [&](const Permutation& x) { return compose(compose(w0, x), w0); };

    std::vector<Triple> A;
    std::map<Triple, std::size_t> index;
    for (const auto& u : perms)
        for (const auto& v : perms)
            for (const auto& w : perms)
                if (length(w) == length(u) + length(v)) {
                    index[Triple{u, v, w}] = A.size();
                    A.push_back(Triple{u, v, w});
                }
    PartitionReport rep;
    rep.triples = A.size();

    DisjointSets ds(A.size() + 1);
    const std::size_t zeroNode = A.size();  // stands for A_0 and everything merged into it
    auto idx = [&](const Triple& t) { return index.at(t); };
    for (std::size_t k = 0; k < A.size(); ++k) {
        const Triple& t = A[k];
        if (!bruhat_leq(t.u, t.w) || !bruhat_leq(t.v, t.w)) {
            ds.unite(k, zeroNode);
            ++rep.a0;
            continue;
        }
        ds.unite(k, idx(Triple{t.v, t.u, t.w}));
        ds.unite(k, idx(Triple{conj(t.u), conj(t.v), conj(t.w)}));
        ds.unite(k, idx(Triple{t.u, compose(w0, t.w), compose(w0, t.v)}));
        for (int i = 1; i < n; ++i) {
            auto st = recursion_step(t, i);
            if (st.kind == StepKind::Moved) ds.unite(k, idx(st.triple));
        }
    }

    // classes touching the vanishing case of the recursion
    std::set<std::size_t> cRoots;
    for (std::size_t k = 0; k < A.size(); ++k) {
        std::size_t r = ds.find(k);
        if (r == ds.find(zeroNode)) continue;
        for (int i = 1; i < n; ++i)
            if (recursion_step(A[k], i).kind == StepKind::Zero) cRoots.insert(r);
    }
    rep.mergedFromC = cRoots.size();
    for (std::size_t r : cRoots) ds.unite(r, zeroNode);

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < A.size(); ++k) groups[ds.find(k)].push_back(k);
    const std::size_t zr = ds.find(zeroNode);

    auto fail = [&](const std::string& msg) {
        if (rep.consistent) rep.problem = msg;
        rep.consistent = false;
    };

    TripleClass zero;
    zero.zero = true;
    std::vector<TripleClass> rest;
    for (auto& [root, ks] : groups) {
        TripleClass tc;
        tc.zero = root == zr;
        for (std::size_t k : ks) tc.members.push_back(Tuple{{A[k].u, A[k].v}, A[k].w});
        for (const auto& m : tc.members) {
            int64_t N = structure_constant(m.factors, m.w);
            if (tc.zero && N != 0) fail("zero class contains a nonzero constant at " + m.str());
        }
        if (!tc.zero) {
            tc.constant = structure_constant(tc.members[0].factors, tc.members[0].w);
            for (std::size_t k : ks) {
                const Triple& t = A[k];
                bool splits = (!t.u.is_identity() && star_factorize(t.u).level() > 1) ||
                              (!t.v.is_identity() && star_factorize(t.v).level() > 1);
                if (splits) tc.members.push_back(split_by_star(t));
            }
            for (const auto& m : tc.members)
                if (structure_constant(m.factors, m.w) != tc.constant) fail("class constant differs at " + m.str());
        }
        std::sort(tc.members.begin(), tc.members.end());
        tc.members.erase(std::unique(tc.members.begin(), tc.members.end()), tc.members.end());
        if (tc.zero)
            zero = std::move(tc);
        else
            rest.push_back(std::move(tc));
    }
    if (!zero.members.empty()) rep.classes.push_back(std::move(zero));
    for (auto& c : rest) rep.classes.push_back(std::move(c));
    return rep;
}

}  // namespace gcx
