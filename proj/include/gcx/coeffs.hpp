#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcx/weyl.hpp"

namespace gcx {

// Monomial in x_1..x_12 packed as 5-bit exponents, x_1 in the low bits.
using Monomial = uint64_t;
constexpr int kMaxVars = 12;

int exponent(Monomial m, int var);  // var is 1-based
Monomial with_exponent(Monomial m, int var, int e);
Monomial monomial_of(const std::vector<int>& exps);
std::vector<int> exponents_of(Monomial m);

class Polynomial {
public:
    Polynomial() = default;
    static Polynomial one();
    static Polynomial variable(int var);

    const std::unordered_map<Monomial, int64_t>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int64_t coeff(Monomial m) const;
    int64_t constant_term() const { return coeff(0); }
    void add(Monomial m, int64_t c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(int64_t c) const;
    bool operator==(const Polynomial& o) const { return t_ == o.t_; }

    std::string str() const;

private:
    std::unordered_map<Monomial, int64_t> t_;
};

// Divided difference (f - s_i f) / (x_i - x_{i+1}).
Polynomial divided_difference(const Polynomial& f, int i);

// Lehmer code and its inverse inside S_N.
std::vector<int> lehmer_code(const Permutation& w);
Permutation perm_from_code(const std::vector<int>& code, int N);
// w viewed inside S_N (N >= w.n()) by fixing N+1.. pointwise
Permutation embed(const Permutation& w, int N);
// drop trailing fixed points
Permutation shrink(const Permutation& w);

// Transition recursion, memoized; result only depends on the stable element.
const Polynomial& schubert_poly(const Permutation& w);
// Divided differences from the staircase of S_N; used to cross-check.
Polynomial schubert_poly_divided(const Permutation& w);

// The monomial order in which the leading term of S_w is x^code(w):
// compare exponents from the highest variable down, larger exponent wins
// at the first difference, read in reverse.
bool leading_less(Monomial a, Monomial b);

// Schubert-basis expansion of a polynomial; keys are shrunk permutations.
std::map<Permutation, int64_t> expand(const Polynomial& f);

// Coefficient of sigma^w in the product of the sigma^{u_i} in H*(Fl_n).
int64_t structure_constant(const std::vector<Permutation>& us, const Permutation& w);
// The same number by applying the divided difference d_w and reading off the constant term.
int64_t structure_constant_dd(const std::vector<Permutation>& us, const Permutation& w);

// Littlewood-Richardson count c^nu_{lambda,mu} by lattice-word tableaux.
int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// Grassmannian constant via the primary oracle.
int64_t gr_constant(const Partition& lambda, const Partition& mu, const Partition& nu, int m, int n);

std::vector<Partition> chevalley(const Partition& mu, int m, int n);
// sigma^(1,1) cup sigma^mu in Gr(2,n): mu + (1,1) or nothing
std::optional<Partition> pieri_gr2(const Partition& mu, int n);
// N_{r,q}^{r+q} for one-row partitions; always 1 when the precondition holds
int64_t special_constant(int r, int q, int m, int n);

struct Triple {
    Permutation u, v, w;
    auto operator<=>(const Triple&) const = default;
};

// Orbit of (u,v,w) under the swap, (u, w0 w, w0 v) and w0-conjugation.
std::vector<Triple> apply_identities(const Triple& t);

enum class StepKind { Moved, Zero, NotApplicable };
struct StepResult {
    StepKind kind = StepKind::NotApplicable;
    Triple triple;
};
// N_{u,v}^w = N_{u s_i, v}^{w s_i} or 0, depending on the three lengths.
StepResult recursion_step(const Triple& t, int i);

struct Tuple {
    std::vector<Permutation> factors;
    Permutation w;
    auto operator<=>(const Tuple&) const = default;
    std::string str() const;
};

// (u_1..u_m, v_1..v_m', w) from the maximal-level factorizations of u and v.
Tuple split_by_star(const Triple& t);

struct TripleClass {
    std::vector<Tuple> members;  // canonical order
    bool zero = false;
    int64_t constant = 0;
};

struct PartitionReport {
    std::vector<TripleClass> classes;  // the zero class first when present
    std::size_t triples = 0;           // |A|
    std::size_t a0 = 0;                // |A_0|
    std::size_t mergedFromC = 0;       // classes absorbed into the zero class
    bool consistent = true;            // every class has a single oracle value
    std::string problem;               // first inconsistency, if any
};

PartitionReport build_modified_partition(int n, int maxN = 4);

}  // namespace gcx
