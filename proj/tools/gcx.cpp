#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "gcx/io.hpp"

using namespace gcx;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct Common {
    std::string shape;
    std::string lambda;
    bool json = false;
    std::string out;
};

ParabolicShape shape_of(const Common& c) { return ParabolicShape::parse(c.shape); }

std::vector<int> lambda_of(const Common& c) {
    if (c.lambda.empty()) return {};
    return parse_partition(c.lambda);
}

// "(2,1,0)" is a partition in a Grassmannian shape; anything else a permutation
Permutation element(const std::string& text, const ParabolicShape& shape) {
    if (!text.empty() && text.front() == '(') {
        if (!shape.is_grassmannian()) throw std::invalid_argument("partitions need a Grassmannian shape");
        return grassmannian_perm(parse_partition(text), shape.cut(1), shape.n());
    }
    return parse_permutation(text, shape.n());
}

std::vector<Permutation> elements(const std::vector<std::string>& texts, const ParabolicShape& shape) {
    std::vector<Permutation> out;
    for (const auto& t : texts) out.push_back(element(t, shape));
    return out;
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string join(const std::vector<Permutation>& ps) {
    std::string s;
    for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? "," : "") + ps[k].str();
    return s;
}

void add_common(CLI::App* app, Common& c, bool needShape = true) {
    auto* o = app->add_option("--shape", c.shape, "n1,...,nk,n");
    if (needShape) o->required();
    app->add_option("--lambda", c.lambda, "one strictly decreasing value per block, e.g. 5,3,1");
    app->add_flag("--json", c.json, "JSON instead of TSV");
    app->add_option("-o,--out", c.out, "output file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Cetlin toolkit for Schubert intersection certificates"};
    app.require_subcommand(1);
    Common common;

    // constant
    std::string cu, cw, cmu, cnu, ceta;
    std::vector<std::string> cv;
    auto* constant = app.add_subcommand("constant", "structure constant N_{u,v...}^w");
    add_common(constant, common);
    constant->add_option("--u", cu, "first factor");
    constant->add_option("--v", cv, "further factors (repeatable)");
    constant->add_option("--w", cw, "target");
    constant->add_option("--mu", cmu, "Grassmannian first factor as a partition");
    constant->add_option("--nu", cnu, "Grassmannian second factor as a partition");
    constant->add_option("--eta", ceta, "Grassmannian target as a partition");

    // certify / search
    std::vector<std::string> xv, xu;
    std::string xw, store;
    int tiers = 3, threads = 0;
    uint64_t budget = 200000, cursor = 0;
    auto* certify = app.add_subcommand("certify", "evaluate one translation tuple");
    add_common(certify, common);
    certify->add_option("--v", xv, "factors in W^P (repeatable)")->required();
    certify->add_option("--w", xw, "target in W^P")->required();
    certify->add_option("--u", xu, "translations, one per factor (default id)");
    certify->add_option("--store", store, "append the certificate to this JSONL store");

    auto* searchCmd = app.add_subcommand("search", "look for a certificate");
    add_common(searchCmd, common);
    searchCmd->add_option("--v", xv, "factors in W^P (repeatable)")->required();
    searchCmd->add_option("--w", xw, "target in W^P")->required();
    searchCmd->add_option("--tiers", tiers, "highest tier (1-3)")->check(CLI::Range(1, 3));
    searchCmd->add_option("--budget", budget, "tier-3 evaluations")->check(CLI::PositiveNumber);
    searchCmd->add_option("--cursor", cursor, "tier-3 start index");
    searchCmd->add_option("--threads", threads, "worker threads (default GCX_THREADS)");
    searchCmd->add_option("--store", store, "append the certificate to this JSONL store");

    // sweep
    std::string tsvOut;
    auto* sweep = app.add_subcommand("sweep", "certify every triple or class of a shape");
    add_common(sweep, common);
    sweep->add_option("--tiers", tiers, "highest tier (1-3)")->check(CLI::Range(1, 3));
    sweep->add_option("--budget", budget, "tier-3 evaluations per tuple")->check(CLI::PositiveNumber);
    sweep->add_option("--threads", threads, "worker threads (default GCX_THREADS)");
    sweep->add_option("--tsv", tsvOut, "per-tuple TSV detail");
    sweep->add_option("--store", store, "append every certificate to this JSONL store");

    // polytope
    bool info = false;
    auto* polytope = app.add_subcommand("polytope", "polytope summary");
    add_common(polytope, common);
    polytope->add_flag("--info", info, "dimension, vertex and facet counts");
    bool ascii = false;
    polytope->add_flag("--ascii", ascii, "draw the ladder diagram");

    // faces
    std::string fu = "id", fv, fmu, fkind;
    auto* faces = app.add_subcommand("faces", "faces of Delta(u, v) or of a named face");
    add_common(faces, common);
    faces->add_option("--u", fu, "translation");
    faces->add_option("--v", fv, "Schubert index in W^P");
    faces->add_option("--named", fkind, "F or Fvee")->check(CLI::IsMember({"F", "Fvee"}));
    faces->add_option("--mu", fmu, "partition for a named face");

    // vertices
    auto* vertices = app.add_subcommand("vertices", "list vertices with their flags");
    add_common(vertices, common);

    // kogan
    std::string ktarget, kpositions;
    bool kdual = false;
    auto* kogan = app.add_subcommand("kogan", "Kogan and dual Kogan faces of a complete flag");
    add_common(kogan, common);
    kogan->add_flag("--dual", kdual, "dual Kogan faces");
    kogan->add_option("--target", ktarget, "enumerate reduced faces with this permutation");
    kogan->add_option("--positions", kpositions, "1-based positions in the reading word, comma separated");

    // anticanonical
    auto* anticanonical = app.add_subcommand("anticanonical", "special paths and their counts");
    add_common(anticanonical, common);

    // lattice points
    auto* lattice = app.add_subcommand("lattice-points", "lattice points, weights and path decompositions");
    add_common(lattice, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const ParabolicShape shape = shape_of(common);
        const int n = shape.n();

        if (*constant) {
            std::vector<Permutation> us;
            Permutation w;
            std::string provenance = "oracle";
            int64_t rule = -1;
            if (!cmu.empty() || !cnu.empty() || !ceta.empty()) {
                if (cmu.empty() || cnu.empty() || ceta.empty()) throw std::invalid_argument("--mu, --nu and --eta go together");
                if (!shape.is_grassmannian()) throw std::invalid_argument("partitions need a Grassmannian shape");
                const int m = shape.cut(1);
                const Partition a = parse_partition(cmu), b = parse_partition(cnu), c = parse_partition(ceta);
                us = {grassmannian_perm(a, m, n), grassmannian_perm(b, m, n)};
                w = grassmannian_perm(c, m, n);
                rule = lr_coefficient(a, b, c);
                provenance = "oracle+rule";
            } else {
                if (cu.empty() || cw.empty()) throw std::invalid_argument("need --u and --w (or --mu/--nu/--eta)");
                us.push_back(element(cu, shape));
                for (auto& p : elements(cv, shape)) us.push_back(p);
                w = element(cw, shape);
            }
            const int64_t N = structure_constant(us, w);
            const bool agree = rule < 0 || rule == N;
            if (common.json) {
                json j{{"us", join(us)}, {"w", w.str()}, {"N", N}, {"provenance", provenance}};
                if (rule >= 0) j["rule"] = rule;
                emit(common, j.dump());
            } else {
                emit(common, join(us) + "\t" + w.str() + "\t" + std::to_string(N) + "\t" + provenance + "\n");
            }
            if (!agree) std::cerr << "oracle and tableau rule disagree\n";
            return agree ? 0 : kExitFailed;
        }

        if (*certify) {
            const Polytope P(shape, lambda_of(common));
            const auto vs = elements(xv, shape);
            const Permutation w = element(xw, shape);
            std::vector<Permutation> us = xu.empty() ? std::vector<Permutation>(vs.size(), Permutation::identity(n)) : elements(xu, shape);
            const Evaluation ev = evaluate(P, vs, w, us);
            json j{{"faces", ev.faces}};
            if (ev.cert) {
                j["certificate"] = to_json(*ev.cert);
                if (!store.empty() && ev.certified()) CertificateStore(store).append(*ev.cert);
            } else {
                j["obstruction"] = ev.obstruction == Obstruction::PositiveDimension ? "positive-dimension" : "outside-VX";
                j["max_dim"] = ev.maxDim;
                j["detail"] = ev.detail;
            }
            if (!ev.outsideVX.empty()) j["outside_vx"] = ev.outsideVX;
            emit(common, j.dump(2));
            return ev.certified() ? 0 : kExitFailed;
        }

        if (*searchCmd) {
            const Polytope P(shape, lambda_of(common));
            SearchOptions opt;
            opt.tiers = tiers;
            opt.budget = budget;
            opt.cursor = cursor;
            opt.threads = threads;
            const SearchResult r = search(P, elements(xv, shape), element(xw, shape), opt);
            json j{{"outcome", outcome_str(r.outcome)}, {"tier", r.tier},   {"evaluated", r.evaluated},
                   {"cursor", r.cursor},                {"oracle", r.oracle}, {"best_dim", r.bestDim}};
            if (r.cert) j["certificate"] = to_json(*r.cert);
            if (!r.outsideVX.empty()) j["outside_vx"] = r.outsideVX;
            if (!store.empty() && r.outcome == SearchOutcome::Certified) CertificateStore(store).append(*r.cert);
            emit(common, j.dump(2));
            return r.outcome == SearchOutcome::Certified || r.outcome == SearchOutcome::Zero ? 0 : kExitFailed;
        }

        if (*sweep) {
            SearchOptions opt;
            opt.tiers = tiers;
            opt.budget = budget;
            opt.threads = threads;
            const SweepReport r = sweep_conjecture(shape, opt);
            if (!tsvOut.empty()) {
                std::ofstream f(tsvOut);
                f << sweep_tsv(r);
            }
            if (!store.empty()) {
                CertificateStore s(store);
                for (const auto& t : r.triples)
                    if (t.cert && t.outcome == SearchOutcome::Certified) s.append(*t.cert);
            }
            if (common.json) {
                emit(common, to_json(r).dump(2));
            } else {
                std::ostringstream os;
                os << "shape " << shape.str() << ": " << r.resolved << " resolved, " << r.unresolved << " unresolved, "
                   << r.oracleChecks << " oracle checks\n";
                os << (r.all_resolved() ? "all classes certified or zero" : "some classes unresolved") << '\n';
                emit(common, os.str());
            }
            return r.all_resolved() ? 0 : kExitFailed;
        }

        if (*polytope) {
            const Polytope P(shape, lambda_of(common));
            int regular = 0, vx = 0;
            bool vxKnown = true;
            for (int x = 0; x < P.num_vertices(); ++x) {
                regular += P.is_regular(x);
                try {
                    vx += P.in_VX(x);
                } catch (const UnsupportedShape&) {
                    vxKnown = false;
                }
            }
            json j{{"shape", shape.str()},        {"dim", P.dim()},       {"vertices", P.num_vertices()},
                   {"facets", P.num_facets()},    {"regular", regular},   {"top_row", P.top_row()}};
            if (vxKnown) j["vx"] = vx;
            else j["vx"] = "unsupported";
            if (ascii) j["diagram"] = P.diagram().ascii();
            if (common.json || info) {
                emit(common, j.dump(2));
            } else {
                std::ostringstream os;
                os << "dim\t" << P.dim() << "\nvertices\t" << P.num_vertices() << "\nfacets\t" << P.num_facets() << "\nregular\t"
                   << regular << '\n';
                if (ascii) os << P.diagram().ascii();
                emit(common, os.str());
            }
            return 0;
        }

        if (*faces) {
            const Polytope P(shape, lambda_of(common));
            FaceUnion fu2;
            if (!fkind.empty()) {
                const Partition mu = parse_partition(fmu);
                fu2 = FaceUnion::single(fkind == "F" ? P.named_face_F(mu) : P.named_face_Fvee(mu));
            } else {
                if (fv.empty()) throw std::invalid_argument("need --v or --named");
                fu2 = delta_uv(P, element(fu, shape), element(fv, shape));
            }
            emit(common, to_json(P, fu2).dump(2));
            return 0;
        }

        if (*vertices) {
            const Polytope P(shape, lambda_of(common));
            std::ostringstream os;
            json arr = json::array();
            os << "vertex\tregular\tvx\tcoordinates\tpattern\n";
            for (int x = 0; x < P.num_vertices(); ++x) {
                std::string vx;
                try {
                    vx = P.in_VX(x) ? "1" : "0";
                } catch (const UnsupportedShape&) {
                    vx = "?";
                }
                std::string coords;
                for (const auto& p : P.coordinate_point(x)) coords += (coords.empty() ? "" : "|") + p.str();
                std::string pat = P.vertex_tsv(x);
                for (auto& ch : pat)
                    if (ch == '\n') ch = '/';
                    else if (ch == '\t') ch = ' ';
                if (!pat.empty()) pat.pop_back();
                os << x << '\t' << P.is_regular(x) << '\t' << vx << '\t' << coords << '\t' << pat << '\n';
                arr.push_back(json{{"vertex", x}, {"regular", P.is_regular(x)}, {"vx", vx}, {"coordinates", coords}, {"pattern", pat}});
            }
            emit(common, common.json ? arr.dump(2) : os.str());
            return 0;
        }

        if (*kogan) {
            const LadderDiagram d(shape);
            json arr = json::array();
            if (!kpositions.empty()) {
                std::vector<int> pos;
                std::stringstream ss(kpositions);
                for (std::string tok; std::getline(ss, tok, ',');) pos.push_back(std::stoi(tok));
                arr.push_back(to_json(d, face_from_positions(d, pos, kdual)));
            } else {
                if (ktarget.empty()) throw std::invalid_argument("need --target or --positions");
                for (const auto& f : enumerate_reduced(d, element(ktarget, shape), kdual)) arr.push_back(to_json(d, f));
            }
            emit(common, arr.dump(2));
            return 0;
        }

        if (*anticanonical) {
            const LadderDiagram d(shape);
            const auto paths = d.special_paths();
            std::set<PositivePath> distinct(paths.begin(), paths.end());
            int expected = 0;
            for (int i = 1; i <= shape.k(); ++i) expected += shape.cut(i + 1) - shape.cut(i - 1);
            const int expectedDistinct = n + shape.cut(shape.k()) - shape.cut(1);
            const bool ok = static_cast<int>(paths.size()) == expected && static_cast<int>(distinct.size()) == expectedDistinct;
            json arr = json::array();
            std::ostringstream os;
            for (int e : d.roof_edges()) {
                const auto p = d.special_path(e);
                arr.push_back(json{{"roof_edge", d.edges()[static_cast<std::size_t>(e)].str()}, {"path", p.str()}});
                os << d.edges()[static_cast<std::size_t>(e)].str() << '\t' << p.str() << '\n';
            }
            os << "count\t" << paths.size() << "\texpected\t" << expected << "\ndistinct\t" << distinct.size() << "\texpected\t"
               << expectedDistinct << '\n';
            json j{{"special_paths", arr}, {"count", paths.size()},           {"expected", expected},
                   {"distinct", distinct.size()}, {"expected_distinct", expectedDistinct}, {"ok", ok}};
            emit(common, common.json ? j.dump(2) : os.str());
            return ok ? 0 : kExitFailed;
        }

        if (*lattice) {
            const LadderDiagram d(shape);
            std::vector<int> top = lambda_of(common);
            if (top.empty()) throw std::invalid_argument("lattice-points needs --lambda as a full top row");
            const auto pts = d.lattice_points(top);
            const auto weights = d.weight_set(top);
            std::set<GCPattern> images;
            std::set<GCPattern> wset(weights.begin(), weights.end());
            bool ok = pts.size() == weights.size();
            for (const auto& b : weights) images.insert(phi(b));
            ok = ok && images == std::set<GCPattern>(pts.begin(), pts.end());
            // each point decomposes into b_j = lambda_j - lambda_{j+1} paths at every level j
            std::size_t decomposed = 0;
            for (const auto& g : pts) {
                const auto parts = d.decompose_weight(g);
                std::map<int, int> per;
                for (const auto& p : parts) ++per[p.level()];
                bool good = true;
                for (int j = 1; j < n; ++j) {
                    const int b = top[static_cast<std::size_t>(j - 1)] - top[static_cast<std::size_t>(j)];
                    if (per[j] != b) good = false;
                }
                if (good && wset.count(psi(g))) ++decomposed;
            }
            ok = ok && decomposed == pts.size();
            json j{{"lattice_points", pts.size()}, {"weights", weights.size()}, {"decomposed", decomposed}, {"ok", ok}};
            emit(common, common.json ? j.dump(2) : j.dump());
            return ok ? 0 : kExitFailed;
        }
    } catch (const UnsupportedShape& e) {
        std::cerr << "unsupported shape: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
