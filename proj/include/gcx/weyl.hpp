#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gcx {

using Partition = std::vector<int>;
using Word = std::vector<int>;  // simple-reflection indices, s_{a1} s_{a2} ...

// Element of S_n in one-line notation; values and positions are 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);
    static Permutation simple(int n, int i);
    static Permutation from_word(int n, const Word& word);

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& window() const { return w_; }

    Permutation inverse() const;
    bool is_identity() const;

    // "3124" when n <= 9, otherwise comma separated
    std::string str() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> w_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

// (u∘v)(i) = u(v(i))
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

int length(const Permutation& w);
bool bruhat_leq(const Permutation& u, const Permutation& w);
Permutation longest_element(int n);

// Lexicographically smallest reduced word.
Word reduced_word(const Permutation& w);
bool is_reduced(int n, const Word& word);

bool has_right_ascent(const Permutation& w, int i);  // l(w s_i) > l(w)

// Cuts 0 = n_0 < n_1 < ... < n_k < n_{k+1} = n.
class ParabolicShape {
public:
    ParabolicShape() = default;
    ParabolicShape(std::vector<int> levels, int n);
    // "n1,...,nk,n"
    static ParabolicShape parse(const std::string& text);
    static ParabolicShape grassmannian(int m, int n) { return ParabolicShape({m}, n); }
    static ParabolicShape complete(int n);

    int n() const { return n_; }
    int k() const { return static_cast<int>(levels_.size()); }
    const std::vector<int>& levels() const { return levels_; }
    // n_i for 0 <= i <= k+1
    int cut(int i) const;
    // block l (1-based) containing position p
    int block_of(int p) const;

    bool is_grassmannian() const { return k() == 1; }
    bool is_complete() const { return k() == n_ - 1; }
    std::string str() const;

    bool operator==(const ParabolicShape&) const = default;

private:
    std::vector<int> levels_;
    int n_ = 0;
};

Permutation min_coset_rep(const Permutation& w, const ParabolicShape& shape);
bool in_WP(const Permutation& w, const ParabolicShape& shape);
// all of W^P, sorted
std::vector<Permutation> coset_reps(const ParabolicShape& shape);
std::vector<Permutation> all_permutations(int n);

Permutation grassmannian_perm(const Partition& mu, int m, int n);
Partition partition_of_perm(const Permutation& w, int m);
bool partition_fits(const Partition& mu, int m, int n);
std::vector<Partition> partitions_in_box(int m, int n);
int partition_size(const Partition& mu);
bool partition_leq(const Partition& a, const Partition& b);
std::string partition_str(const Partition& mu);
Partition parse_partition(const std::string& text);

struct StarFactorization {
    std::vector<Permutation> factors;
    std::vector<std::vector<int>> supports;  // Xi_i as sets of generator indices
    int level() const { return static_cast<int>(factors.size()); }
};

StarFactorization star_factorize(const Permutation& u);

// Accepts "3124", "2,1,3,4", "s1*s2*s1", "s1 s2 s1", "id".
Permutation parse_permutation(const std::string& text, int n);

}  // namespace gcx
