#ifndef OPL_FREE_OPERAD_HPP
#define OPL_FREE_OPERAD_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "opl/operad.hpp"

namespace opl {

struct TreeTerm {
    TreeNode tree;
    Q coeff;
};
using TreePoly = std::vector<TreeTerm>;

// Binary generator with an S_2-action on its span.
struct GenSpec {
    std::string name;
    int arity = 2;
    int degree = 0;
    std::string action = "trivial";  // trivial | sign | regular | matrix
    SMat tau;                        // transposition acting on the span
    int span = 1;

    static GenSpec trivial(std::string name);
    static GenSpec sign(std::string name);
    static GenSpec regular(std::string name);
};

struct Presentation {
    bool symmetric = true;
    std::vector<GenSpec> gens;
    std::vector<TreePoly> relations;  // arity-3 vectors, TreeNode.gen = E index

    // Global E-basis bookkeeping: generator spans are laid out consecutively.
    int espan() const;
    int gen_of(int e) const;     // generator owning E-basis element e
    int offset_of(int e) const;  // position inside that generator's span
    int ebase(int g) const;      // first E index of generator g
    SMat tau_matrix() const;     // block-diagonal transposition action on E
    std::vector<std::string> ebasis_names() const;

    void validate() const;
};

// Parses "mu(mu(1,2),3)" with generator names resolving to the first basis
// element of the generator's span. A trailing ' picks the second element of
// a regular span ("mu'").
TreeNode parse_tree(const std::string& s, const Presentation& pres);

// Free symmetric operad on binary generators in the shuffle-tree basis:
// children of every vertex are ordered so the minimal leaf sits leftmost,
// and swapping children twists the decoration by the generator action.
class FreeOperad : public Operad {
  public:
    FreeOperad(Presentation pres, int cap);

    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override;
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;
    TreeNode term_tree(int n, int idx) const override;

    const Presentation& presentation() const { return pres_; }
    // Normalization of an arbitrary decorated tree into the canonical basis.
    SVec normalize(const TreeNode& t) const;
    SVec eval_poly(const TreePoly& p) const;
    int index_of_canonical(const TreeNode& t) const;

  private:
    Presentation pres_;
    std::vector<std::vector<TreeNode>> basis_;  // [n][idx]
    std::vector<std::map<std::string, int>> index_;

    std::vector<std::pair<TreeNode, Q>> normalize_rec(const TreeNode& t) const;
};

// Quotient of a free operad by the operadic ideal generated by arity-3
// relation vectors. Basis: non-pivot tree monomials of the ideal echelon.
class PresentedOperad : public Operad {
  public:
    PresentedOperad(std::shared_ptr<const FreeOperad> free, int cap);

    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    TreeNode term_tree(int n, int idx) const override;

    const FreeOperad& free() const { return *free_; }
    // Image of a free-operad vector in the quotient.
    SVec project(int n, const SVec& free_vec) const;
    int ideal_dim(int n) const { return ideal_rank_[n]; }

  private:
    std::shared_ptr<const FreeOperad> free_;
    // Reduced ideal echelon per arity plus quotient basis bookkeeping.
    std::vector<std::vector<SVec>> echelon_;
    std::vector<std::vector<int>> pivots_;
    std::vector<std::vector<int>> q2f_;
    std::vector<std::map<int, int>> f2q_;
    std::vector<int> ideal_rank_;
    mutable std::map<std::uint64_t, SVec> compose_memo_;

    std::vector<SVec> ideal_closure(int n, std::vector<SVec> gens) const;
};

// Non-Sigma free operad on binary generators (planar trees, decorated).
class NonSigmaFreeOperad : public Operad {
  public:
    NonSigmaFreeOperad(Presentation pres, int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;
    TreeNode term_tree(int n, int idx) const override;

    const Presentation& presentation() const { return pres_; }
    SVec eval_poly(const TreePoly& p) const;
    int index_of(int n, const TreeNode& t) const;

  private:
    Presentation pres_;
    std::vector<std::vector<TreeNode>> basis_;
    std::vector<std::map<std::string, int>> index_;
};

// Quadratic dual presentation: dual generators twisted by sign, relations
// the annihilator of the relation span under the weight-2 pairing.
Presentation quadratic_dual(const Presentation& pres, int cap_for_check = 4);

// The sign-equivariant pairing matrix between Gamma(E)(3) and
// Gamma(E_dual)(3); rows indexed by the primal basis.
SMat weight2_pairing(const FreeOperad& primal, const FreeOperad& dual);

// Dual generator list (names suffixed with "!", action twisted by sign).
std::vector<GenSpec> dual_gens(const std::vector<GenSpec>& gens);

}  // namespace opl

#endif
