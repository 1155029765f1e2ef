#include "gcx/gc_polytope.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <sstream>

namespace gcx {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) {
            p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
            x = p[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

Polytope::Polytope(const ParabolicShape& shape, std::vector<int> lambda) : d_(shape), lambda_(std::move(lambda)) {
    const int blocks = shape.k() + 1;
    if (lambda_.empty()) {
        for (int l = 1; l <= blocks; ++l) lambda_.push_back(blocks - l);
    }
    if (static_cast<int>(lambda_.size()) != blocks)
        throw std::invalid_argument("lambda needs one value per block of the shape");
    for (std::size_t l = 1; l < lambda_.size(); ++l)
        if (lambda_[l] >= lambda_[l - 1]) throw std::invalid_argument("lambda must strictly decrease between blocks");
    enumerate_vertices();
}

std::vector<int> Polytope::top_row() const {
    std::vector<int> t;
    for (int j = 1; j <= n(); ++j) t.push_back(block_value(shape().block_of(j)));
    return t;
}

void Polytope::enumerate_vertices() {
    const int n = d_.n();
    const int cells = d_.num_cells();
    std::vector<int> order;  // columns right to left, each column top down
    for (int c = n; c >= 1; --c)
        for (int r = n - c + 1; r >= 1; --r) order.push_back(d_.cell_id(c, r));

    std::vector<int8_t> blk(static_cast<std::size_t>(cells), 0);
    const auto& adj = d_.adjacencies();

    auto accept = [&]() {
        // every equality class must reach a constant cell
        UnionFind uf(cells);
        for (auto [hi, lo] : adj)
            if (blk[static_cast<std::size_t>(hi)] == blk[static_cast<std::size_t>(lo)]) uf.unite(hi, lo);
        std::vector<char> anchored(static_cast<std::size_t>(cells), 0);
        for (int id = 0; id < cells; ++id)
            if (!d_.is_box(id)) anchored[static_cast<std::size_t>(uf.find(id))] = 1;
        for (int b : d_.boxes())
            if (!anchored[static_cast<std::size_t>(uf.find(b))]) return;
        Vertex v;
        v.block = blk;
        v.facets = Bits(static_cast<std::size_t>(d_.num_facets()));
        for (int f = 0; f < d_.num_facets(); ++f) {
            const Edge& e = d_.edges()[static_cast<std::size_t>(d_.effective_edges()[static_cast<std::size_t>(f)])];
            if (blk[static_cast<std::size_t>(e.hi)] == blk[static_cast<std::size_t>(e.lo)]) v.facets.set(static_cast<std::size_t>(f));
        }
        verts_.push_back(std::move(v));
    };

    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            accept();
            return;
        }
        const int id = order[pos];
        if (!d_.is_box(id)) {
            blk[static_cast<std::size_t>(id)] = static_cast<int8_t>(d_.block_of_cell(id));
            self(self, pos + 1);
            return;
        }
        const Cell c = d_.cell(id);
        const int up = blk[static_cast<std::size_t>(d_.cell_id(c.col, c.row + 1))];
        const int right = blk[static_cast<std::size_t>(d_.cell_id(c.col + 1, c.row))];
        for (int l = up; l <= right; ++l) {
            blk[static_cast<std::size_t>(id)] = static_cast<int8_t>(l);
            self(self, pos + 1);
        }
    };
    rec(rec, 0);

    facet_verts_.assign(static_cast<std::size_t>(d_.num_facets()), Bits(verts_.size()));
    for (std::size_t v = 0; v < verts_.size(); ++v)
        verts_[v].facets.for_each([&](std::size_t f) { facet_verts_[f].set(v); });
}

int Polytope::value(int vertex, int cell) const {
    return block_value(verts_[static_cast<std::size_t>(vertex)].block[static_cast<std::size_t>(cell)]);
}

GCPattern Polytope::pattern(int vertex) const {
    GCPattern g(n());
    for (int id = 0; id < d_.num_cells(); ++id) {
        const Cell c = d_.cell(id);
        g.at(c.i(), c.j()) = value(vertex, id);
    }
    return g;
}

Face Polytope::whole() const {
    Face f(verts_.size());
    f.set_all();
    return f;
}

Face Polytope::facet_of_edge(int edge) const {
    int f = d_.facet_index(edge);
    if (f < 0) throw std::invalid_argument("edge is not effective");
    return facet(f);
}

Face Polytope::vertex_face(int vertex) const {
    Face f(verts_.size());
    f.set(static_cast<std::size_t>(vertex));
    return f;
}

Face Polytope::face_of_facets(const std::vector<int>& facets) const {
    Face f = whole();
    for (int x : facets) f &= facet(x);
    return f;
}

Bits Polytope::closure(const Face& f) const {
    Bits e(static_cast<std::size_t>(num_facets()));
    e.set_all();
    f.for_each([&](std::size_t v) { e &= verts_[v].facets; });
    return e;
}

int Polytope::face_dimension(const Face& f) const {
    if (f.none()) return -1;
    const int cells = d_.num_cells();
    const Bits eq = closure(f);

    UnionFind uf(cells);
    eq.for_each([&](std::size_t k) {
        const Edge& e = d_.edges()[static_cast<std::size_t>(d_.effective_edges()[k])];
        uf.unite(e.hi, e.lo);
    });
    // equal constants across cells of the same block value are the same number
    std::vector<int> constRep(static_cast<std::size_t>(shape().k() + 2), -1);
    for (int id = 0; id < cells; ++id) {
        if (d_.is_box(id)) continue;
        int& rep = constRep[static_cast<std::size_t>(d_.block_of_cell(id))];
        if (rep < 0)
            rep = id;
        else
            uf.unite(id, rep);
    }

    std::vector<int> cls(static_cast<std::size_t>(cells), -1);
    int ncls = 0;
    for (int id = 0; id < cells; ++id) {
        int r = uf.find(id);
        if (cls[static_cast<std::size_t>(r)] < 0) cls[static_cast<std::size_t>(r)] = ncls++;
        cls[static_cast<std::size_t>(id)] = cls[static_cast<std::size_t>(r)];
    }
    const int lo = *std::min_element(lambda_.begin(), lambda_.end());
    const int hi = *std::max_element(lambda_.begin(), lambda_.end());
    std::vector<int> lb(static_cast<std::size_t>(ncls), lo), ub(static_cast<std::size_t>(ncls), hi);
    std::vector<char> pinned(static_cast<std::size_t>(ncls), 0);
    for (int id = 0; id < cells; ++id) {
        if (d_.is_box(id)) continue;
        auto c = static_cast<std::size_t>(cls[static_cast<std::size_t>(id)]);
        int val = block_value(d_.block_of_cell(id));
        if (pinned[c] && lb[c] != val) return -1;  // two different constants
        pinned[c] = 1;
        lb[c] = ub[c] = val;
    }

    // >= graph on classes, then strongly connected components
    std::vector<std::vector<int>> g(static_cast<std::size_t>(ncls));
    for (auto [a, b] : d_.adjacencies()) {
        int x = cls[static_cast<std::size_t>(a)], y = cls[static_cast<std::size_t>(b)];
        if (x != y) g[static_cast<std::size_t>(x)].push_back(y);
    }
    std::vector<int> comp(static_cast<std::size_t>(ncls), -1), idx(static_cast<std::size_t>(ncls), -1),
        low(static_cast<std::size_t>(ncls), 0), stack;
    std::vector<char> onStack(static_cast<std::size_t>(ncls), 0);
    int counter = 0, ncomp = 0;
    auto tarjan = [&](auto&& self, int v) -> void {
        auto sv = static_cast<std::size_t>(v);
        idx[sv] = low[sv] = counter++;
        stack.push_back(v);
        onStack[sv] = 1;
        for (int w : g[sv]) {
            auto sw = static_cast<std::size_t>(w);
            if (idx[sw] < 0) {
                self(self, w);
                low[sv] = std::min(low[sv], low[sw]);
            } else if (onStack[sw]) {
                low[sv] = std::min(low[sv], idx[sw]);
            }
        }
        if (low[sv] == idx[sv]) {
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                onStack[static_cast<std::size_t>(w)] = 0;
                comp[static_cast<std::size_t>(w)] = ncomp;
            } while (w != v);
            ++ncomp;
        }
    };
    for (int v = 0; v < ncls; ++v)
        if (idx[static_cast<std::size_t>(v)] < 0) tarjan(tarjan, v);

    std::vector<int> clb(static_cast<std::size_t>(ncomp), lo), cub(static_cast<std::size_t>(ncomp), hi);
    for (int v = 0; v < ncls; ++v) {
        auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
        clb[c] = std::max(clb[c], lb[static_cast<std::size_t>(v)]);
        cub[c] = std::min(cub[c], ub[static_cast<std::size_t>(v)]);
    }
    std::vector<std::pair<int, int>> cedges;
    for (int v = 0; v < ncls; ++v)
        for (int w : g[static_cast<std::size_t>(v)]) {
            int a = comp[static_cast<std::size_t>(v)], b = comp[static_cast<std::size_t>(w)];
            if (a != b) cedges.emplace_back(a, b);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : cedges) {  // value(a) >= value(b)
            auto sa = static_cast<std::size_t>(a), sb = static_cast<std::size_t>(b);
            if (clb[sa] < clb[sb]) {
                clb[sa] = clb[sb];
                changed = true;
            }
            if (cub[sb] > cub[sa]) {
                cub[sb] = cub[sa];
                changed = true;
            }
        }
    }
    int dim = 0;
    for (int c = 0; c < ncomp; ++c) {
        if (clb[static_cast<std::size_t>(c)] > cub[static_cast<std::size_t>(c)]) return -1;
        if (clb[static_cast<std::size_t>(c)] < cub[static_cast<std::size_t>(c)]) ++dim;
    }
    return dim;
}

int Polytope::face_dimension_oracle(const Face& f) const {
    using boost::multiprecision::cpp_int;
    auto ids = f.indices();
    if (ids.empty()) return -1;
    const auto& boxes = d_.boxes();
    std::vector<std::vector<cpp_int>> basis;
    std::vector<std::size_t> pivots;
    for (std::size_t k = 1; k < ids.size(); ++k) {
        std::vector<cpp_int> row(boxes.size());
        for (std::size_t b = 0; b < boxes.size(); ++b) row[b] = value(ids[k], boxes[b]) - value(ids[0], boxes[b]);
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const std::size_t p = pivots[r];
            if (row[p] == 0) continue;
            cpp_int a = basis[r][p], c = row[p];
            for (std::size_t x = 0; x < row.size(); ++x) row[x] = row[x] * a - basis[r][x] * c;
        }
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        cpp_int gcd = 0;
        for (auto& x : row) gcd = boost::multiprecision::gcd(gcd, x);
        for (auto& x : row) x /= gcd;
        // keep the basis reduced against the new pivot too
        for (auto& br : basis) {
            if (br[p] == 0) continue;
            cpp_int a = row[p], c = br[p];
            for (std::size_t x = 0; x < br.size(); ++x) br[x] = br[x] * a - row[x] * c;
        }
        basis.push_back(std::move(row));
        pivots.push_back(p);
    }
    return static_cast<int>(basis.size());
}

bool Polytope::is_regular(int vertex) const {
    return static_cast<int>(verts_[static_cast<std::size_t>(vertex)].facets.count()) == dim();
}

bool Polytope::in_VX(int vertex) const {
    if (shape().is_grassmannian()) return true;
    if (!shape().is_complete())
        throw UnsupportedShape("V^X membership is only characterized for Grassmannians and complete flags");
    const int N = n();
    auto val = [&](int i, int j) { return verts_[static_cast<std::size_t>(vertex)].block[static_cast<std::size_t>(d_.cell_id_ij(i, j))]; };
    for (int i = 1; i + 2 <= N; ++i)
        for (int j = 1; j <= i; ++j) {
            int x = val(i, j);
            if (x == val(i + 1, j + 1) && x == val(i + 1, j) && x == val(i + 2, j + 1)) return false;
        }
    return true;
}

std::vector<PositivePath> Polytope::coordinate_point(int vertex) const {
    const auto& blk = verts_[static_cast<std::size_t>(vertex)].block;
    std::vector<PositivePath> out;
    for (int li = 1; li <= shape().k(); ++li) {
        PositivePath p;
        for (int j = 1; j <= shape().cut(li); ++j) {
            int cnt = 0;
            for (int r = 1; r <= n() - j + 1; ++r)
                if (blk[static_cast<std::size_t>(d_.cell_id(j, r))] > li) ++cnt;
            p.I.push_back(j + cnt);
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool Polytope::coordinates_nested(int vertex) const {
    auto pts = coordinate_point(vertex);
    for (std::size_t a = 1; a < pts.size(); ++a)
        if (!std::includes(pts[a].I.begin(), pts[a].I.end(), pts[a - 1].I.begin(), pts[a - 1].I.end())) return false;
    return true;
}

namespace {

void require_grassmannian(const ParabolicShape& s, const Partition& mu) {
    if (!s.is_grassmannian()) throw std::invalid_argument("named faces need a Grassmannian shape");
    if (!partition_fits(mu, s.cut(1), s.n())) throw std::invalid_argument("partition " + partition_str(mu) + " does not fit");
}

}  // namespace

Face Polytope::named_face_F(const Partition& mu) const {
    require_grassmannian(shape(), mu);
    const PositivePath p = path_of_partition(mu);
    Face f(verts_.size());
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        bool ok = true;
        for (int b : d_.boxes()) {
            const Cell c = d_.cell(b);
            bool below = c.row <= p.I[static_cast<std::size_t>(c.col - 1)] - c.col;
            if (below && verts_[v].block[static_cast<std::size_t>(b)] != 2) ok = false;
        }
        if (ok) f.set(v);
    }
    return f;
}

Face Polytope::named_face_Fvee(const Partition& mu) const {
    require_grassmannian(shape(), mu);
    const PositivePath p = path_of_partition(mu);
    Face f(verts_.size());
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        bool ok = true;
        for (int b : d_.boxes()) {
            const Cell c = d_.cell(b);
            bool above = c.row > p.I[static_cast<std::size_t>(c.col - 1)] - c.col;
            if (above && verts_[v].block[static_cast<std::size_t>(b)] != 1) ok = false;
        }
        if (ok) f.set(v);
    }
    return f;
}

Face Polytope::delta_k_face(int k) const {
    if (!shape().is_grassmannian() || shape().cut(1) != 2) throw std::invalid_argument("delta_k_face needs Gr(2,n)");
    if (k < 1 || k > n() - 2) throw std::invalid_argument("k out of range");
    Face f(verts_.size());
    for (std::size_t v = 0; v < verts_.size(); ++v) {
        const auto& blk = verts_[v].block;
        auto at = [&](int i, int j) { return blk[static_cast<std::size_t>(d_.cell_id_ij(i, j))]; };
        bool first = at(k, 1) == at(k + 1, 1);
        // lambda^(1)_2 is read as b
        bool second = (k == 1 ? 2 : at(k, 2)) == at(k + 1, 2);
        if (first && second) f.set(v);
    }
    return f;
}

std::string Polytope::face_str(const Face& f) const {
    if (f.none()) return "empty";
    std::ostringstream os;
    bool first = true;
    closure(f).for_each([&](std::size_t k) {
        os << (first ? "" : " ") << d_.edges()[static_cast<std::size_t>(d_.effective_edges()[k])].str();
        first = false;
    });
    return os.str();
}

std::string Polytope::vertex_tsv(int vertex) const {
    std::ostringstream os;
    for (int i = 1; i <= n(); ++i) {
        for (int j = 1; j <= i; ++j) os << (j > 1 ? "\t" : "") << value(vertex, d_.cell_id_ij(i, j));
        os << '\n';
    }
    return os.str();
}

FaceUnion::FaceUnion(std::vector<Face> faces) : faces_(std::move(faces)) { reduce(); }

FaceUnion FaceUnion::single(Face f) { return FaceUnion(std::vector<Face>{std::move(f)}); }

Bits FaceUnion::points(std::size_t nverts) const {
    Bits b(nverts);
    for (const auto& f : faces_) b |= f;
    return b;
}

void FaceUnion::reduce() {
    std::erase_if(faces_, [](const Face& f) { return f.none(); });
    std::vector<std::pair<std::size_t, Face>> tagged;
    tagged.reserve(faces_.size());
    for (auto& f : faces_) tagged.emplace_back(f.count(), std::move(f));
    std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<Face> kept;
    for (auto& [cnt, f] : tagged) {
        bool dominated = false;
        for (const auto& k : kept)
            if (f.subset_of(k)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end());
    faces_ = std::move(kept);
}

FaceUnion intersect(const FaceUnion& a, const FaceUnion& b) {
    std::vector<Face> out;
    for (const auto& f : a.faces())
        for (const auto& g : b.faces()) {
            Face h = f & g;
            if (h.any()) out.push_back(std::move(h));
        }
    return FaceUnion(std::move(out));
}

FaceUnion intersect_facet_union(const Polytope& P, const FaceUnion& a, const std::vector<int>& facets) {
    std::vector<Face> out;
    for (const auto& f : a.faces()) {
        bool inside = false;
        for (int x : facets)
            if (f.subset_of(P.facet(x))) {
                inside = true;
                break;
            }
        if (inside) {
            out.push_back(f);
            continue;
        }
        for (int x : facets) {
            Face h = f & P.facet(x);
            if (h.any()) out.push_back(std::move(h));
        }
    }
    return FaceUnion(std::move(out));
}

}  // namespace gcx
