#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gcx/certify.hpp"
#include "gcx/kogan.hpp"
#include "gcx/pluecker.hpp"

namespace gcx {

using nlohmann::json;

constexpr int kStoreSchemaVersion = 1;
constexpr const char* kLibraryVersion = "0.1.0";

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json to_json(const VanishingSet& s);
VanishingSet vanishing_set_from_json(const json& j);

// faces as sorted vertex index lists together with their equality systems
json to_json(const Polytope& P, const FaceUnion& u);
FaceUnion face_union_from_json(const Polytope& P, const json& j);

json to_json(const LadderDiagram& d, const KoganFace& f);
KoganFace kogan_face_from_json(const LadderDiagram& d, const json& j);

json to_json(const SweepReport& r);
std::string sweep_tsv(const SweepReport& r);

// Append-only JSONL file: a header object, then one certificate per line.
class CertificateStore {
public:
    // creates the file with a header when missing; checks the header otherwise
    explicit CertificateStore(std::string path);
    void append(const Certificate& c);
    std::vector<Certificate> read_all() const;
    static json header();

private:
    std::string path_;
};

}  // namespace gcx
