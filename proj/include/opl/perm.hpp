#ifndef OPL_PERM_HPP
#define OPL_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "opl/rational.hpp"

namespace opl {

// Permutation of {1..n} in one-line notation: v[i-1] = sigma(i).
class Perm {
  public:
    Perm() = default;
    explicit Perm(int n);                       // identity
    explicit Perm(std::vector<int> one_line);   // validated

    int size() const { return static_cast<int>(v_.size()); }
    int of(int i) const { return v_[i - 1]; }   // sigma(i), 1-based
    bool is_identity() const;

    Perm inverse() const;
    int sign() const;

    // Function composition: (a*b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b);
    bool operator==(const Perm& o) const { return v_ == o.v_; }
    bool operator!=(const Perm& o) const { return v_ != o.v_; }
    bool operator<(const Perm& o) const { return v_ < o.v_; }

    // 4 bits per entry; valid for n <= 15, plenty for arity caps <= 8.
    std::uint64_t key() const;
    std::string str() const;  // "(2 1 3)"

    const std::vector<int>& one_line() const { return v_; }

  private:
    std::vector<int> v_;
};

// a acting on the first block, b shifted past it: a x b.
Perm block_sum(const Perm& a, const Perm& b);

// Blown-up composite sigma o_i tau in S_{m+n-1}: slot i of sigma is widened
// to n strands permuted internally by tau. Satisfies M_sigma o_i M_tau =
// M_{sigma o_i tau} for the word operations M.
Perm block_compose(const Perm& sigma, int i, const Perm& tau);

// Doubling of the i-th input, 0 <= i <= m+1 for sigma in S_m:
// d_0 = id_1 x sigma, d_{m+1} = sigma x id_1, and for 1 <= i <= m the strand
// through input i is duplicated onto adjacent inputs/outputs.
Perm doubling(const Perm& sigma, int i);

// The cycle (1 2 ... k) in S_{n+1}: 1->2, ..., k-1->k, k->1, rest fixed.
Perm cycle_perm(int k, int n);

// All of S_n in lexicographic order of one-line notation.
std::vector<Perm> all_perms(int n);

// Index of sigma in the lexicographic enumeration (Lehmer code).
int perm_rank(const Perm& sigma);
Perm perm_unrank(int n, int rank);

// Adjacent-transposition factorization: sigma = s_{f[0]} * s_{f[1]} * ...
// where s_j swaps j, j+1. Right action of sigma = acting by the factors in
// order.
std::vector<int> adjacent_factorization(const Perm& sigma);

std::int64_t factorial(int n);
std::int64_t binomial(int n, int k);

}  // namespace opl

#endif
