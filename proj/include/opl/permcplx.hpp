#ifndef OPL_PERMCPLX_HPP
#define OPL_PERMCPLX_HPP

#include <map>
#include <vector>

#include "opl/based.hpp"
#include "opl/perm.hpp"

namespace opl {

// Formal rational combination of permutations of a fixed arity.
using PermChain = std::vector<std::pair<Perm, Q>>;

// Alternating sum of doublings d_0 - d_1 + ... +- d_{m+1}.
PermChain perm_differential(const Perm& sigma);
PermChain perm_differential_chain(const PermChain& chain);

struct GradeData {
    int a = 0;
    int b = 0;
    int c = 0;
    Perm core;       // the stripped middle block (id_1 for the identity)
    Perm primitive;  // kappa
    int grade() const { return a + b + c; }
};

GradeData grade(const Perm& sigma);
Perm primitive_contraction(const Perm& sigma);
bool is_primitive(const Perm& sigma);

// Partition of S_m by the primitive contraction.
std::map<Perm, std::vector<Perm>> block_decompose(int m);

// The full permutation complex: degree m-1 carries k[S_m], m = 1..cap,
// basis in lex order.
ComplexRep perm_complex(int cap);

// Subcomplex spanned by the block of a primitive permutation.
ComplexRep block_complex(const Perm& kappa, int cap);
Cohomology block_acyclicity(const Perm& kappa, int cap);

// The alternating id/0 complex with one-dimensional terms.
ComplexRep andulka(int cap);

}  // namespace opl

#endif
