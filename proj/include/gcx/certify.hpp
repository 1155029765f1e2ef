#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcx/coeffs.hpp"
#include "gcx/gc_polytope.hpp"

namespace gcx {

enum class CertStatus { Certified, Mismatch };

struct Certificate {
    ParabolicShape shape;
    std::vector<Permutation> vs;
    Permutation w;
    std::vector<Permutation> us;
    std::vector<int> vertices;  // polytope vertex indices, sorted
    std::vector<std::string> vertexPatterns;
    int64_t count = 0;
    int64_t oracle = 0;
    CertStatus status = CertStatus::Certified;
};

enum class Obstruction { None, PositiveDimension, OutsideVX };

struct Evaluation {
    std::optional<Certificate> cert;
    Obstruction obstruction = Obstruction::None;
    int faces = 0;       // maximal faces of the intersection
    int maxDim = 0;      // largest maximal-face dimension
    std::string detail;  // equality system of the first offending face
    // vertices of the intersection that fail the V^X test
    std::vector<int> outsideVX;

    bool certified() const { return cert && cert->status == CertStatus::Certified; }
};

// The full intersection of Delta(u_i, v_i) with Delta(w0, pi(w0 w)).
FaceUnion intersection_of(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                          const std::vector<Permutation>& us);

// Throws invalid_argument on a length or size mismatch, UnsupportedShape
// when V^X cannot be decided for the shape.
Evaluation evaluate(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                    const std::vector<Permutation>& us);
// same, with the oracle value supplied by the caller
Evaluation evaluate(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                    const std::vector<Permutation>& us, int64_t oracle);

struct SearchOptions {
    int tiers = 3;               // highest tier to try
    uint64_t budget = 200000;    // tier-3 evaluations
    uint64_t cursor = 0;         // tier-3 starting index, for resuming
    int threads = 0;             // 0: GCX_THREADS or hardware concurrency
};

enum class SearchOutcome { Certified, Zero, Exhausted, Mismatch };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::Exhausted;
    std::optional<Certificate> cert;
    int tier = 0;               // tier that produced the result, 0 for the Bruhat shortcut
    uint64_t evaluated = 0;
    uint64_t cursor = 0;        // next tier-3 index when exhausted
    int64_t oracle = 0;
    int bestDim = -1;           // smallest maximal dimension seen among failures
    std::vector<int> outsideVX; // union over all evaluations
};

int default_threads();

// Candidate translation tuples of the constructive tier for this input.
std::vector<std::vector<Permutation>> recipe_candidates(const ParabolicShape& shape, const std::vector<Permutation>& vs,
                                                        const Permutation& w);

SearchResult search(const Polytope& P, const std::vector<Permutation>& vs, const Permutation& w,
                    const SearchOptions& opt = {});

// Gr(2,n) reduction to a special constant in Gr(d+2, n).
struct Gr2Reduction {
    int a = 0, b = 0, c = 0, d = 0;
    bool zero = false;  // the reduced constant vanishes for degree or shape reasons
    int m = 2;          // target Grassmannian Gr(m, n)
    int r = 0, q = 0;   // special partitions (r), (q), (r+q)
};
Gr2Reduction reduce_gr2(const Partition& lambda, const Partition& mu, const Partition& eta, int n);

struct TripleReport {
    std::vector<Permutation> vs;
    Permutation w;
    int64_t oracle = 0;
    SearchOutcome outcome = SearchOutcome::Exhausted;
    int tier = 0;
    std::string how;  // certified | zero-class | bruhat | reduced-special | exhausted
    std::optional<Certificate> cert;
};

struct ClassReport {
    bool zero = false;
    int64_t constant = 0;
    std::size_t members = 0;
    std::size_t certifiedMembers = 0;
    bool resolved = false;
    std::optional<Certificate> witness;
};

struct SweepReport {
    ParabolicShape shape;
    std::vector<ClassReport> classes;
    std::vector<TripleReport> triples;
    std::size_t resolved = 0;
    std::size_t unresolved = 0;
    std::size_t oracleChecks = 0;
    bool oracleConsistent = true;
    std::vector<std::string> outsideVX;  // vertex patterns seen in V minus V^X
    bool all_resolved() const { return unresolved == 0 && oracleConsistent; }
};

// Complete flags (n <= 4): the modified partition classes, each searched.
// Gr(2,n): every triple through the reduction. Gr(1,n): Chevalley only.
SweepReport sweep_conjecture(const ParabolicShape& shape, const SearchOptions& opt = {});

std::string outcome_str(SearchOutcome o);
std::string status_str(CertStatus s);

}  // namespace gcx
