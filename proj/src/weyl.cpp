#include "gcx/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcx {

Permutation::Permutation(std::vector<int> window) : w_(std::move(window)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int x : w_) {
        if (x < 1 || x > n() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation window");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
    auto p = identity(n);
    std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::from_word(int n, const Word& word) {
    auto p = identity(n);
    // right multiplication by s_i swaps positions i, i+1
    for (int i : word) {
        if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
        std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
    }
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
    Permutation p;
    p.w_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i + 1)) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (n() > 9 && i) os << ',';
        os << w_[i];
    }
    return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    std::size_t h = 0;
    for (int x : p.window()) h = h * 31 + static_cast<std::size_t>(x);
    return h;
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("rank mismatch in compose");
    std::vector<int> w(static_cast<std::size_t>(u.n()));
    for (int i = 1; i <= u.n(); ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(w));
}

int length(const Permutation& w) {
    int inv = 0;
    const auto& a = w.window();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return inv;
}

bool has_right_ascent(const Permutation& w, int i) { return w(i) < w(i + 1); }

// Rank-matrix criterion: u <= w iff #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}.
bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("rank mismatch in bruhat_leq");
    const int n = u.n();
    std::vector<int> cu(static_cast<std::size_t>(n + 2), 0), cw(static_cast<std::size_t>(n + 2), 0);
    for (int i = 1; i <= n; ++i) {
        // counts of values >= j among first i entries, updated incrementally
        for (int j = 1; j <= u(i); ++j) ++cu[static_cast<std::size_t>(j)];
        for (int j = 1; j <= w(i); ++j) ++cw[static_cast<std::size_t>(j)];
        for (int j = 1; j <= n; ++j)
            if (cu[static_cast<std::size_t>(j)] > cw[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

Permutation longest_element(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Word reduced_word(const Permutation& w) {
    // peel off the smallest left descent each time
    Word out;
    Permutation cur = w;
    const int n = w.n();
    while (!cur.is_identity()) {
        Permutation inv = cur.inverse();
        for (int i = 1; i < n; ++i) {
            if (inv(i) > inv(i + 1)) {
                out.push_back(i);
                cur = compose(Permutation::simple(n, i), cur);
                break;
            }
        }
    }
    return out;
}

bool is_reduced(int n, const Word& word) {
    return length(Permutation::from_word(n, word)) == static_cast<int>(word.size());
}

ParabolicShape::ParabolicShape(std::vector<int> levels, int n) : levels_(std::move(levels)), n_(n) {
    int prev = 0;
    for (int l : levels_) {
        if (l <= prev || l >= n) throw std::invalid_argument("shape cuts must be strictly increasing inside (0,n)");
        prev = l;
    }
    if (n < 1) throw std::invalid_argument("n must be positive");
}

ParabolicShape ParabolicShape::parse(const std::string& text) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            vals.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad shape: " + text);
        }
    }
    if (vals.size() < 2) throw std::invalid_argument("shape needs at least one cut and n: " + text);
    int n = vals.back();
    vals.pop_back();
    return ParabolicShape(vals, n);
}

ParabolicShape ParabolicShape::complete(int n) {
    std::vector<int> l(static_cast<std::size_t>(n - 1));
    std::iota(l.begin(), l.end(), 1);
    return ParabolicShape(l, n);
}

int ParabolicShape::cut(int i) const {
    if (i == 0) return 0;
    if (i == k() + 1) return n_;
    return levels_.at(static_cast<std::size_t>(i - 1));
}

int ParabolicShape::block_of(int p) const {
    for (int l = 1; l <= k() + 1; ++l)
        if (p <= cut(l)) return l;
    throw std::out_of_range("position outside shape");
}

std::string ParabolicShape::str() const {
    std::ostringstream os;
    for (int l : levels_) os << l << ',';
    os << n_;
    return os.str();
}

Permutation min_coset_rep(const Permutation& w, const ParabolicShape& shape) {
    std::vector<int> a = w.window();
    for (int l = 1; l <= shape.k() + 1; ++l)
        std::sort(a.begin() + shape.cut(l - 1), a.begin() + shape.cut(l));
    return Permutation(std::move(a));
}

bool in_WP(const Permutation& w, const ParabolicShape& shape) {
    for (int l = 1; l <= shape.k() + 1; ++l)
        for (int p = shape.cut(l - 1) + 1; p < shape.cut(l); ++p)
            if (w(p) > w(p + 1)) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

std::vector<Permutation> coset_reps(const ParabolicShape& shape) {
    std::vector<Permutation> out;
    for (auto& p : all_permutations(shape.n()))
        if (in_WP(p, shape)) out.push_back(p);
    return out;
}

bool partition_fits(const Partition& mu, int m, int n) {
    if (static_cast<int>(mu.size()) != m) return false;
    for (int i = 0; i < m; ++i) {
        if (mu[static_cast<std::size_t>(i)] < 0 || mu[static_cast<std::size_t>(i)] > n - m) return false;
        if (i && mu[static_cast<std::size_t>(i)] > mu[static_cast<std::size_t>(i - 1)]) return false;
    }
    return true;
}

Permutation grassmannian_perm(const Partition& mu, int m, int n) {
    Partition padded = mu;
    padded.resize(static_cast<std::size_t>(m), 0);
    if (!partition_fits(padded, m, n) || static_cast<int>(mu.size()) > m)
        throw std::invalid_argument("partition " + partition_str(mu) + " does not fit the box");
    // mu = (w(m)-m, ..., w(1)-1)
    std::vector<int> w;
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= m; ++i) {
        int v = padded[static_cast<std::size_t>(m - i)] + i;
        w.push_back(v);
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
    return Permutation(std::move(w));
}

Partition partition_of_perm(const Permutation& w, int m) {
    std::vector<int> top(w.window().begin(), w.window().begin() + m);
    std::sort(top.begin(), top.end());
    Partition mu(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) mu[static_cast<std::size_t>(m - i)] = top[static_cast<std::size_t>(i - 1)] - i;
    return mu;
}

std::vector<Partition> partitions_in_box(int m, int n) {
    std::vector<Partition> out;
    Partition cur(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == m) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= maxv; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, n - m);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        int sa = partition_size(a), sb = partition_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

int partition_size(const Partition& mu) { return std::accumulate(mu.begin(), mu.end(), 0); }

bool partition_leq(const Partition& a, const Partition& b) {
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        if (x > y) return false;
    }
    return true;
}

std::string partition_str(const Partition& mu) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text) {
    Partition mu;
    std::string t;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') t += c;
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            mu.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition: " + text);
        }
    }
    return mu;
}

StarFactorization star_factorize(const Permutation& u) {
    if (u.is_identity()) throw std::invalid_argument("star_factorize needs a non-identity element");
    Word word = reduced_word(u);
    std::vector<int> support(word.begin(), word.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    StarFactorization out;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i == 0 || support[i] != support[i - 1] + 1) out.supports.emplace_back();
        out.supports.back().push_back(support[i]);
    }
    for (const auto& comp : out.supports) {
        Word sub;
        for (int a : word)
            if (a >= comp.front() && a <= comp.back()) sub.push_back(a);
        out.factors.push_back(Permutation::from_word(u.n(), sub));
    }
    return out;
}

Permutation parse_permutation(const std::string& text, int n) {
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t == "id" || t == "e" || t.empty()) return Permutation::identity(n);
    if (t[0] == 's') {
        // s<i> tokens, optionally separated by '*'
        Word word;
        std::size_t k = 0;
        while (k < t.size()) {
            if (t[k] == '*' && !word.empty()) ++k;
            if (k >= t.size() || t[k] != 's') throw std::invalid_argument("bad reduced word: " + text);
            std::size_t e = ++k;
            while (e < t.size() && std::isdigit(static_cast<unsigned char>(t[e]))) ++e;
            if (e == k) throw std::invalid_argument("bad reduced word: " + text);
            word.push_back(std::stoi(t.substr(k, e - k)));
            k = e;
        }
        return Permutation::from_word(n, word);
    }
    std::vector<int> w;
    if (t.find(',') != std::string::npos) {
        std::stringstream ss(t);
        std::string tok;
        while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
    } else {
        for (char c : t) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad permutation: " + text);
            w.push_back(c - '0');
        }
    }
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("permutation has wrong rank: " + text);
    return Permutation(std::move(w));
}

}  // namespace gcx
