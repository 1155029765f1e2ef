#include "gcx/pluecker.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcx {

PositivePath w_divisor(const Permutation& u, int level) {
    PositivePath p;
    for (int i = 1; i <= level; ++i) p.I.push_back(i);
    return translate_path(u, p);
}

VanishingSet vanishing_schubert(const ParabolicShape& shape, const Permutation& v, bool opposite) {
    if (v.n() != shape.n()) throw std::invalid_argument("rank mismatch");
    if (!in_WP(v, shape)) throw std::invalid_argument("permutation " + v.str() + " is not a minimal coset representative");
    LadderDiagram d(shape);
    VanishingSet out;
    for (int level : shape.levels()) {
        const PositivePath ref = w_divisor(v, level);
        auto& bucket = out[level];
        for (const auto& p : d.paths_at_level(level)) {
            bool keep = opposite ? path_leq(ref, p) : path_leq(p, ref);
            if (!keep) bucket.push_back(p);
        }
    }
    return out;
}

VanishingSet translate(const Permutation& u, const VanishingSet& s) {
    VanishingSet out;
    for (const auto& [level, paths] : s) {
        auto& bucket = out[level];
        for (const auto& p : paths) bucket.push_back(translate_path(u, p));
        std::sort(bucket.begin(), bucket.end());
    }
    return out;
}

VanishingSet vanishing_translated(const ParabolicShape& shape, const Permutation& u, const Permutation& v) {
    return translate(u, vanishing_schubert(shape, v, true));
}

VanishingSet toric_divisor_equations(const LadderDiagram& d, int edge) {
    if (edge < 0 || edge >= static_cast<int>(d.edges().size()) || !d.edges()[static_cast<std::size_t>(edge)].effective)
        throw std::invalid_argument("edge is not effective");
    VanishingSet out;
    for (int level : d.levels()) {
        auto& bucket = out[level];
        for (const auto& p : d.paths_at_level(level)) {
            auto es = d.path_edges(p);
            if (std::find(es.begin(), es.end(), edge) != es.end()) bucket.push_back(p);
        }
    }
    return out;
}

VanishingSet toric_subvariety_equations(const ParabolicShape& shape, const Partition& mu, bool dual) {
    if (!shape.is_grassmannian()) throw std::invalid_argument("toric subvariety equations need a Grassmannian shape");
    const int m = shape.cut(1);
    if (!partition_fits(mu, m, shape.n())) throw std::invalid_argument("partition does not fit");
    const PositivePath ref = path_of_partition(mu);
    LadderDiagram d(shape);
    VanishingSet out;
    auto& bucket = out[m];
    for (const auto& p : d.paths_at_level(m)) {
        bool keep = dual ? path_leq(p, ref) : path_leq(ref, p);
        if (!keep) bucket.push_back(p);
    }
    return out;
}

std::vector<PositivePath> flatten(const VanishingSet& s) {
    std::vector<PositivePath> out;
    for (const auto& [level, paths] : s) out.insert(out.end(), paths.begin(), paths.end());
    return out;
}

FaceUnion delta_of_paths(const Polytope& P, std::vector<PositivePath> paths) {
    const LadderDiagram& d = P.diagram();
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

    std::vector<std::vector<int>> unions;
    for (const auto& p : paths) {
        std::vector<int> facets;
        for (int e : d.path_effective_edges(p)) facets.push_back(d.facet_index(e));
        std::sort(facets.begin(), facets.end());
        unions.push_back(std::move(facets));
    }
    // smaller unions first keeps the antichain small
    std::stable_sort(unions.begin(), unions.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

    FaceUnion cur = FaceUnion::single(P.whole());
    for (const auto& u : unions) {
        cur = intersect_facet_union(P, cur, u);
        if (cur.empty()) break;
    }
    return cur;
}

FaceUnion delta_uv(const Polytope& P, const Permutation& u, const Permutation& v) {
    return delta_of_paths(P, flatten(vanishing_translated(P.shape(), u, v)));
}

}  // namespace gcx
