#include "gcx/ladder.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gcx {

std::string Edge::str() const {
    std::ostringstream os;
    os << (kind == EdgeKind::H ? 'H' : 'V') << '(' << i << ',' << j << ')';
    return os.str();
}

std::string PositivePath::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < I.size(); ++r) os << (r ? "," : "") << I[r];
    return os.str();
}

PositivePath PositivePath::parse(const std::string& text) {
    PositivePath p;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            p.I.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad path: " + text);
        }
    }
    for (std::size_t r = 1; r < p.I.size(); ++r)
        if (p.I[r] <= p.I[r - 1]) throw std::invalid_argument("path indices must increase: " + text);
    return p;
}

bool path_leq(const PositivePath& p, const PositivePath& q) {
    if (p.level() < q.level()) return false;
    for (int r = 0; r < q.level(); ++r)
        if (p.I[static_cast<std::size_t>(r)] > q.I[static_cast<std::size_t>(r)]) return false;
    return true;
}

bool incomparable(const PositivePath& p, const PositivePath& q) { return !path_leq(p, q) && !path_leq(q, p); }

PositivePath meet(const PositivePath& p, const PositivePath& q) {
    if (p.level() < q.level()) return meet(q, p);
    PositivePath out = p;
    for (int r = 0; r < q.level(); ++r) {
        auto k = static_cast<std::size_t>(r);
        out.I[k] = std::min(p.I[k], q.I[k]);
    }
    return out;
}

PositivePath join(const PositivePath& p, const PositivePath& q) {
    if (p.level() < q.level()) return join(q, p);
    PositivePath out;
    for (int r = 0; r < q.level(); ++r) {
        auto k = static_cast<std::size_t>(r);
        out.I.push_back(std::max(p.I[k], q.I[k]));
    }
    return out;
}

PositivePath translate_path(const Permutation& u, const PositivePath& p) {
    PositivePath out;
    for (int x : p.I) out.I.push_back(u(x));
    std::sort(out.I.begin(), out.I.end());
    return out;
}

Partition partition_of_path(const PositivePath& p) {
    const int m = p.level();
    Partition mu(static_cast<std::size_t>(m));
    for (int r = 1; r <= m; ++r) mu[static_cast<std::size_t>(m - r)] = p.I[static_cast<std::size_t>(r - 1)] - r;
    return mu;
}

PositivePath path_of_partition(const Partition& mu) {
    const int m = static_cast<int>(mu.size());
    PositivePath p;
    for (int r = 1; r <= m; ++r) p.I.push_back(mu[static_cast<std::size_t>(m - r)] + r);
    return p;
}

Partition complement(const Partition& mu, int n) {
    const int m = static_cast<int>(mu.size());
    Partition out(mu.size());
    for (int r = 0; r < m; ++r) out[static_cast<std::size_t>(r)] = n - m - mu[static_cast<std::size_t>(m - 1 - r)];
    return out;
}

std::vector<int> GCPattern::top() const {
    std::vector<int> t;
    for (int j = 1; j <= n_; ++j) t.push_back(at(n_, j));
    return t;
}

bool GCPattern::interlaces() const {
    for (int i = 1; i < n_; ++i)
        for (int j = 1; j <= i; ++j)
            if (at(i + 1, j) < at(i, j) || at(i, j) < at(i + 1, j + 1)) return false;
    return true;
}

GCPattern& GCPattern::operator+=(const GCPattern& o) {
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
}

GCPattern& GCPattern::operator-=(const GCPattern& o) {
    for (std::size_t k = 0; k < v_.size(); ++k) v_[k] -= o.v_[k];
    return *this;
}

BPattern exponent_vector(const PositivePath& p, int n) {
    BPattern b(n);
    for (int r = 1; r <= p.level(); ++r) b.at(p.I[static_cast<std::size_t>(r - 1)], r) = 1;
    return b;
}

GCPattern phi(const BPattern& b) {
    GCPattern g(b.n());
    for (int j = 1; j <= b.n(); ++j) {
        int acc = 0;
        for (int i = j; i <= b.n(); ++i) {
            acc += b.at(i, j);
            g.at(i, j) = acc;
        }
    }
    return g;
}

BPattern psi(const GCPattern& g) {
    BPattern b(g.n());
    for (int j = 1; j <= g.n(); ++j)
        for (int i = j; i <= g.n(); ++i) b.at(i, j) = g.at(i, j) - (i > j ? g.at(i - 1, j) : 0);
    return b;
}

LadderDiagram::LadderDiagram(ParabolicShape shape) : shape_(std::move(shape)) {
    const int n = shape_.n();
    cell_index_.assign(static_cast<std::size_t>((n + 2) * (n + 2)), -1);
    for (int c = 1; c <= n; ++c) {
        const int l = shape_.block_of(c);
        for (int r = 1; r <= n - c + 1; ++r) {
            int id = static_cast<int>(cells_.size());
            cells_.push_back({c, r});
            cell_index_[static_cast<std::size_t>(c * (n + 2) + r)] = id;
            bool isBox = r <= n - shape_.cut(l);
            box_.push_back(isBox);
            if (isBox) boxes_.push_back(id);
        }
    }

    edge_lookup_.assign(static_cast<std::size_t>(2 * (n + 1) * (n + 1)), -1);
    auto addEdge = [&](Edge e) {
        int id = static_cast<int>(edges_.size());
        edge_lookup_[static_cast<std::size_t>((e.kind == EdgeKind::V ? 1 : 0) * (n + 1) * (n + 1) + e.i * (n + 1) + e.j)] = id;
        edges_.push_back(e);
    };
    for (int b : boxes_) {
        const Cell cb = cells_[static_cast<std::size_t>(b)];
        const int c = cb.col, r = cb.row;
        const int l = shape_.block_of(c);

        Edge h;
        h.kind = EdgeKind::H;
        h.i = r + c;
        h.j = c;
        h.hi = cell_id(c, r + 1);
        h.lo = b;
        h.roof = !is_box(h.hi);
        h.effective = !h.roof || c == shape_.cut(l - 1) + 1;
        addEdge(h);

        Edge v;
        v.kind = EdgeKind::V;
        v.i = r + c - 1;
        v.j = c;
        v.hi = b;
        v.lo = cell_id(c + 1, r);
        v.roof = !is_box(v.lo);
        v.effective = !v.roof || (c == shape_.cut(l) && r == n - shape_.cut(l + 1) + 1);
        addEdge(v);
    }
    facet_of_edge_.assign(edges_.size(), -1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].effective) {
            facet_of_edge_[e] = static_cast<int>(effective_.size());
            effective_.push_back(static_cast<int>(e));
        }
    }

    for (int id = 0; id < num_cells(); ++id) {
        const Cell ce = cells_[static_cast<std::size_t>(id)];
        if (ce.row == n - ce.col + 1) continue;  // top row
        adj_.emplace_back(cell_id(ce.col, ce.row + 1), id);
        adj_.emplace_back(id, cell_id(ce.col + 1, ce.row));
    }
}

int LadderDiagram::cell_id(int col, int row) const {
    const int n = shape_.n();
    if (col < 1 || col > n || row < 1 || row > n - col + 1) return -1;
    return cell_index_[static_cast<std::size_t>(col * (n + 2) + row)];
}

int LadderDiagram::block_of_cell(int id) const { return shape_.block_of(cells_[static_cast<std::size_t>(id)].col); }

int LadderDiagram::edge_id(EdgeKind kind, int i, int j) const {
    const int n = shape_.n();
    if (i < 1 || i > n || j < 1 || j > n) return -1;
    return edge_lookup_[static_cast<std::size_t>((kind == EdgeKind::V ? 1 : 0) * (n + 1) * (n + 1) + i * (n + 1) + j)];
}

std::vector<PositivePath> LadderDiagram::paths_at_level(int level) const {
    const auto& lv = levels();
    if (level != n() && std::find(lv.begin(), lv.end(), level) == lv.end()) throw std::invalid_argument("invalid path level");
    std::vector<PositivePath> out;
    PositivePath cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (cur.level() == level) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= n() - (level - cur.level()) + 1; ++x) {
            cur.I.push_back(x);
            self(self, x + 1);
            cur.I.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<PositivePath> LadderDiagram::all_paths() const {
    std::vector<PositivePath> out;
    for (int l : levels()) {
        auto ps = paths_at_level(l);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

namespace {

// edge id of each of the n steps, -1 on the boundary
std::vector<int> step_edges(const LadderDiagram& d, const PositivePath& p) {
    std::vector<int> out;
    std::vector<char> horiz(static_cast<std::size_t>(d.n() + 1), 0);
    for (int x : p.I) {
        if (x < 1 || x > d.n()) throw std::invalid_argument("path index out of range");
        horiz[static_cast<std::size_t>(x)] = 1;
    }
    int x = 0, y = 0;
    for (int t = 1; t <= d.n(); ++t) {
        int e = -1;
        if (horiz[static_cast<std::size_t>(t)]) {
            if (y > 0) e = d.edge_id(EdgeKind::H, t, x + 1);
            ++x;
        } else {
            if (x > 0) e = d.edge_id(EdgeKind::V, t - 1, x);
            ++y;
        }
        bool boundary = (horiz[static_cast<std::size_t>(t)] && y == 0) || (!horiz[static_cast<std::size_t>(t)] && x == 0);
        if (e < 0 && !boundary) throw std::logic_error("path " + p.str() + " leaves the ladder diagram");
        out.push_back(e);
    }
    return out;
}

}  // namespace

std::vector<int> LadderDiagram::path_edges(const PositivePath& p) const {
    std::vector<int> out;
    for (int e : step_edges(*this, p))
        if (e >= 0) out.push_back(e);
    return out;
}

std::vector<int> LadderDiagram::path_effective_edges(const PositivePath& p) const {
    std::vector<int> out;
    for (int e : path_edges(p))
        if (edges_[static_cast<std::size_t>(e)].effective) out.push_back(e);
    return out;
}

std::vector<std::pair<int, int>> LadderDiagram::path_corners(const PositivePath& p) const {
    std::vector<char> horiz(static_cast<std::size_t>(n() + 1), 0);
    for (int x : p.I) horiz[static_cast<std::size_t>(x)] = 1;
    auto steps = step_edges(*this, p);
    std::vector<std::pair<int, int>> out;
    for (int t = 1; t < n(); ++t)
        if (horiz[static_cast<std::size_t>(t)] != horiz[static_cast<std::size_t>(t + 1)])
            out.emplace_back(steps[static_cast<std::size_t>(t - 1)], steps[static_cast<std::size_t>(t)]);
    return out;
}

std::vector<int> LadderDiagram::roof_edges() const {
    std::vector<int> out;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (edges_[e].roof) out.push_back(static_cast<int>(e));
    return out;
}

PositivePath LadderDiagram::special_path(int roofEdge) const {
    const Edge& e = edges_.at(static_cast<std::size_t>(roofEdge));
    if (!e.roof) throw std::invalid_argument("not a roof edge: " + e.str());
    PositivePath p;
    if (e.kind == EdgeKind::H) {
        // up the left side of column c, across its top, then along the roof
        const int c = e.j;
        const int h = n() - shape_.cut(shape_.block_of(c));
        for (int x = 1; x < c; ++x) p.I.push_back(x);
        for (int x = c + h; x <= n(); ++x) p.I.push_back(x);
    } else {
        const int r = e.i - e.j + 1;
        const int nl = e.j;
        for (int x = r; x < r + nl; ++x) p.I.push_back(x);
    }
    return p;
}

std::vector<PositivePath> LadderDiagram::special_paths() const {
    std::vector<PositivePath> out;
    for (int e : roof_edges()) out.push_back(special_path(e));
    return out;
}

std::vector<PositivePath> LadderDiagram::decompose_weight(const GCPattern& point) const {
    if (point.n() != n() || !point.interlaces()) throw std::invalid_argument("not an integral Gelfand-Cetlin pattern");
    for (int j = 1; j <= n(); ++j)
        if (point.at(j, j) < 0) throw std::invalid_argument("pattern has negative entries");
    GCPattern chi = point;
    std::vector<PositivePath> out;
    while (true) {
        auto top = chi.top();
        int ell = 0;
        for (int j = 1; j <= n(); ++j)
            if (top[static_cast<std::size_t>(j - 1)] > 0) ell = j;
        if (ell == 0) break;
        bool found = false;
        for (const auto& p : paths_at_level(ell)) {
            GCPattern cand = chi;
            cand -= phi(exponent_vector(p, n()));
            if (cand.interlaces()) {
                chi = cand;
                out.push_back(p);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("weight decomposition got stuck");
    }
    // chi is now zero everywhere: the top row vanished and interlacing forces the rest
    return out;
}

std::vector<GCPattern> LadderDiagram::lattice_points(const std::vector<int>& lambda) const {
    if (static_cast<int>(lambda.size()) != n()) throw std::invalid_argument("lambda has wrong length");
    std::vector<GCPattern> out;
    GCPattern g(n());
    for (int j = 1; j <= n(); ++j) g.at(n(), j) = lambda[static_cast<std::size_t>(j - 1)];
    // fill row i from n-1 down to 1, left to right
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == 0) {
            out.push_back(g);
            return;
        }
        if (j > i) {
            self(self, i - 1, 1);
            return;
        }
        for (int x = g.at(i + 1, j + 1); x <= g.at(i + 1, j); ++x) {
            g.at(i, j) = x;
            self(self, i, j + 1);
        }
    };
    rec(rec, n() - 1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BPattern> LadderDiagram::weight_set(const std::vector<int>& lambda) const {
    if (static_cast<int>(lambda.size()) != n()) throw std::invalid_argument("lambda has wrong length");
    std::set<BPattern> sums;
    std::vector<std::pair<int, int>> need;  // (level, count)
    for (int j = 1; j <= n(); ++j) {
        int bj = lambda[static_cast<std::size_t>(j - 1)] - (j < n() ? lambda[static_cast<std::size_t>(j)] : 0);
        if (bj < 0) throw std::invalid_argument("lambda must be weakly decreasing");
        if (bj > 0) need.emplace_back(j, bj);
    }
    std::vector<std::vector<BPattern>> pool;
    for (auto [level, count] : need) {
        std::vector<BPattern> bs;
        for (const auto& p : paths_at_level(level)) bs.push_back(exponent_vector(p, n()));
        pool.push_back(std::move(bs));
    }
    BPattern acc(n());
    // multisets: nondecreasing index within each slot
    auto rec = [&](auto&& self, std::size_t slot, int remaining, std::size_t minIdx) -> void {
        if (slot == need.size()) {
            sums.insert(acc);
            return;
        }
        if (remaining == 0) {
            std::size_t nx = slot + 1;
            self(self, nx, nx < need.size() ? need[nx].second : 0, 0);
            return;
        }
        const auto& bs = pool[slot];
        for (std::size_t k = minIdx; k < bs.size(); ++k) {
            acc += bs[k];
            self(self, slot, remaining - 1, k);
            acc -= bs[k];
        }
    };
    if (need.empty()) return {acc};
    rec(rec, 0, need[0].second, 0);
    return {sums.begin(), sums.end()};
}

std::string LadderDiagram::ascii() const {
    // top row of the picture is the highest grid row
    std::ostringstream os;
    for (int r = n(); r >= 1; --r) {
        for (int c = 1; c <= n(); ++c) {
            int id = cell_id(c, r);
            if (id < 0)
                os << ' ';
            else if (is_box(id))
                os << '#';
            else
                os << static_cast<char>('0' + block_of_cell(id) % 10);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace gcx
