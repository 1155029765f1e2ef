#include "gcx/kogan.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcx {

namespace {

void require_complete(const LadderDiagram& d) {
    if (!d.shape().is_complete()) throw std::invalid_argument("Kogan faces are defined for complete flags only");
}

}  // namespace

std::vector<int> kogan_reading(const LadderDiagram& d, bool dual) {
    require_complete(d);
    std::vector<int> out;
    const int n = d.n();
    if (!dual) {
        for (int j = 1; j < n; ++j)
            for (int r = 1; r <= n - j; ++r) out.push_back(d.edge_id(EdgeKind::H, r + j, j));
    } else {
        for (int r = 1; r < n; ++r)
            for (int j = 1; j <= n - r; ++j) out.push_back(d.edge_id(EdgeKind::V, r + j - 1, j));
    }
    return out;
}

int edge_label(const LadderDiagram& d, int edge) {
    const Edge& e = d.edges().at(static_cast<std::size_t>(edge));
    return e.kind == EdgeKind::H ? d.n() - e.i + e.j : e.j;
}

KoganFace read_word(const LadderDiagram& d, std::vector<int> edges, bool dual) {
    const auto order = kogan_reading(d, dual);
    std::vector<int> rank(d.edges().size(), -1);
    for (std::size_t k = 0; k < order.size(); ++k) rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    for (int e : edges) {
        if (e < 0 || e >= static_cast<int>(rank.size()) || rank[static_cast<std::size_t>(e)] < 0)
            throw std::invalid_argument("edge has the wrong orientation for this Kogan face");
        if (!d.edges()[static_cast<std::size_t>(e)].effective) throw std::invalid_argument("edge is not effective");
    }
    std::sort(edges.begin(), edges.end(), [&](int a, int b) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)]; });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    KoganFace f;
    f.dual = dual;
    f.edges = std::move(edges);
    for (int e : f.edges) f.word.push_back(edge_label(d, e));
    f.perm = Permutation::from_word(d.n(), f.word);
    f.reduced = length(f.perm) == static_cast<int>(f.word.size());
    return f;
}

KoganFace face_from_positions(const LadderDiagram& d, const std::vector<int>& positions, bool dual) {
    const auto order = kogan_reading(d, dual);
    std::vector<int> edges;
    for (int p : positions) {
        if (p < 1 || p > static_cast<int>(order.size())) throw std::invalid_argument("position out of range");
        edges.push_back(order[static_cast<std::size_t>(p - 1)]);
    }
    return read_word(d, edges, dual);
}

std::vector<int> positions_of(const LadderDiagram& d, const KoganFace& f) {
    const auto order = kogan_reading(d, f.dual);
    std::vector<int> out;
    for (int e : f.edges) {
        auto it = std::find(order.begin(), order.end(), e);
        out.push_back(static_cast<int>(it - order.begin()) + 1);
    }
    return out;
}

std::vector<KoganFace> enumerate_reduced(const LadderDiagram& d, const Permutation& target, bool dual) {
    const auto order = kogan_reading(d, dual);
    const int goal = length(target);
    const int n = d.n();
    std::vector<KoganFace> out;
    std::vector<int> chosen;
    // cur stays a left prefix of target: l(cur) + l(cur^-1 target) = l(target)
    auto rec = [&](auto&& self, std::size_t pos, const Permutation& cur) -> void {
        const int have = static_cast<int>(chosen.size());
        if (have == goal) {
            if (cur == target) out.push_back(read_word(d, chosen, dual));
            return;
        }
        if (goal - have > static_cast<int>(order.size() - pos)) return;
        const int s = edge_label(d, order[pos]);
        if (cur(s) < cur(s + 1)) {
            Permutation nxt = compose(cur, Permutation::simple(n, s));
            if (length(compose(nxt.inverse(), target)) == goal - have - 1) {
                chosen.push_back(order[pos]);
                self(self, pos + 1, nxt);
                chosen.pop_back();
            }
        }
        self(self, pos + 1, cur);
    };
    rec(rec, 0, Permutation::identity(n));
    return out;
}

FaceUnion degeneration_union(const Polytope& P, const Permutation& v, bool opposite) {
    const LadderDiagram& d = P.diagram();
    const Permutation target = opposite ? v : compose(longest_element(d.n()), v);
    std::vector<Face> faces;
    for (const auto& k : enumerate_reduced(d, target, opposite)) {
        std::vector<int> facets;
        for (int e : k.edges) facets.push_back(d.facet_index(e));
        faces.push_back(P.face_of_facets(facets));
    }
    return FaceUnion(std::move(faces));
}

}  // namespace gcx
