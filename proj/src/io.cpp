#include "gcx/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gcx {

json to_json(const Permutation& p) { return p.window(); }

Permutation permutation_from_json(const json& j) { return Permutation(j.get<std::vector<int>>()); }

namespace {

json perms(const std::vector<Permutation>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(to_json(p));
    return a;
}

std::vector<Permutation> perms_from(const json& j) {
    std::vector<Permutation> out;
    for (const auto& x : j) out.push_back(permutation_from_json(x));
    return out;
}

}  // namespace

json to_json(const Certificate& c) {
    return json{{"shape", c.shape.str()},   {"vs", perms(c.vs)},
                {"w", to_json(c.w)},        {"us", perms(c.us)},
                {"vertices", c.vertices},   {"patterns", c.vertexPatterns},
                {"count", c.count},         {"oracle", c.oracle},
                {"status", status_str(c.status)}};
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.shape = ParabolicShape::parse(j.at("shape").get<std::string>());
    c.vs = perms_from(j.at("vs"));
    c.w = permutation_from_json(j.at("w"));
    c.us = perms_from(j.at("us"));
    c.vertices = j.at("vertices").get<std::vector<int>>();
    c.vertexPatterns = j.at("patterns").get<std::vector<std::string>>();
    c.count = j.at("count").get<int64_t>();
    c.oracle = j.at("oracle").get<int64_t>();
    const auto s = j.at("status").get<std::string>();
    if (s != "certified" && s != "mismatch") throw std::invalid_argument("unknown certificate status " + s);
    c.status = s == "certified" ? CertStatus::Certified : CertStatus::Mismatch;
    return c;
}

json to_json(const VanishingSet& s) {
    json o = json::object();
    for (const auto& [level, paths] : s) {
        json a = json::array();
        for (const auto& p : paths) a.push_back(p.I);
        o[std::to_string(level)] = a;
    }
    return o;
}

VanishingSet vanishing_set_from_json(const json& j) {
    VanishingSet s;
    for (const auto& [k, a] : j.items()) {
        auto& bucket = s[std::stoi(k)];
        for (const auto& x : a) bucket.push_back(PositivePath{x.get<std::vector<int>>()});
    }
    return s;
}

json to_json(const Polytope& P, const FaceUnion& u) {
    json a = json::array();
    for (const auto& f : u.faces()) {
        std::vector<int> vs;
        f.for_each([&](std::size_t x) { vs.push_back(static_cast<int>(x)); });
        a.push_back(json{{"vertices", vs}, {"dim", P.face_dimension(f)}, {"equalities", P.face_str(f)}});
    }
    return a;
}

FaceUnion face_union_from_json(const Polytope& P, const json& j) {
    std::vector<Face> faces;
    for (const auto& f : j) {
        Face x = P.empty();
        for (int v : f.at("vertices").get<std::vector<int>>()) {
            if (v < 0 || v >= P.num_vertices()) throw std::invalid_argument("vertex index out of range");
            x.set(static_cast<std::size_t>(v));
        }
        faces.push_back(std::move(x));
    }
    return FaceUnion(std::move(faces));
}

json to_json(const LadderDiagram& d, const KoganFace& f) {
    json edges = json::array();
    for (int e : f.edges) edges.push_back(d.edges()[static_cast<std::size_t>(e)].str());
    return json{{"dual", f.dual}, {"edges", edges}, {"edge_ids", f.edges}, {"word", f.word},
                {"perm", to_json(f.perm)}, {"reduced", f.reduced}};
}

KoganFace kogan_face_from_json(const LadderDiagram& d, const json& j) {
    return read_word(d, j.at("edge_ids").get<std::vector<int>>(), j.at("dual").get<bool>());
}

json to_json(const SweepReport& r) {
    json classes = json::array();
    for (const auto& c : r.classes) {
        json o{{"zero", c.zero},
               {"constant", c.constant},
               {"members", c.members},
               {"certified_members", c.certifiedMembers},
               {"resolved", c.resolved}};
        if (c.witness) o["witness"] = to_json(*c.witness);
        classes.push_back(o);
    }
    std::size_t certified = 0, zero = 0, exhausted = 0;
    for (const auto& t : r.triples) {
        if (t.outcome == SearchOutcome::Certified) ++certified;
        else if (t.outcome == SearchOutcome::Zero) ++zero;
        else ++exhausted;
    }
    return json{{"shape", r.shape.str()},
                {"tuples", r.triples.size()},
                {"certified", certified},
                {"zero", zero},
                {"not_certified", exhausted},
                {"resolved", r.resolved},
                {"unresolved", r.unresolved},
                {"oracle_checks", r.oracleChecks},
                {"oracle_consistent", r.oracleConsistent},
                {"outside_vx", r.outsideVX},
                {"all_resolved", r.all_resolved()},
                {"classes", classes}};
}

std::string sweep_tsv(const SweepReport& r) {
    std::ostringstream os;
    os << "vs\tw\tN\toutcome\ttier\thow\tus\n";
    for (const auto& t : r.triples) {
        for (std::size_t k = 0; k < t.vs.size(); ++k) os << (k ? "," : "") << t.vs[k].str();
        os << '\t' << t.w.str() << '\t' << t.oracle << '\t' << outcome_str(t.outcome) << '\t' << t.tier << '\t' << t.how << '\t';
        if (t.cert)
            for (std::size_t k = 0; k < t.cert->us.size(); ++k) os << (k ? "," : "") << t.cert->us[k].str();
        else
            os << '-';
        os << '\n';
    }
    return os.str();
}

json CertificateStore::header() {
    return json{{"schema", "gcx-certificates"}, {"version", kStoreSchemaVersion}, {"library", kLibraryVersion},
                {"lambda", "symbolic"}};
}

CertificateStore::CertificateStore(std::string path) : path_(std::move(path)) {
    if (!std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0) {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot create " + path_);
        out << header().dump() << '\n';
        return;
    }
    std::ifstream in(path_);
    std::string line;
    std::getline(in, line);
    json h = json::parse(line);
    if (h.value("schema", "") != "gcx-certificates") throw std::runtime_error(path_ + " is not a certificate store");
    if (h.value("version", 0) != kStoreSchemaVersion) throw std::runtime_error(path_ + " has an unsupported schema version");
}

void CertificateStore::append(const Certificate& c) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to " + path_);
    out << to_json(c).dump() << '\n';
}

std::vector<Certificate> CertificateStore::read_all() const {
    std::ifstream in(path_);
    std::string line;
    std::getline(in, line);  // header
    std::vector<Certificate> out;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(certificate_from_json(json::parse(line)));
    return out;
}

}  // namespace gcx
