#ifndef OPL_OPERAD_HPP
#define OPL_OPERAD_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "opl/based.hpp"
#include "opl/perm.hpp"
#include "opl/sparse.hpp"

namespace opl {

// Expression tree over the generators of a presentation. Leaves carry labels
// 1..n; internal nodes carry a global generator-basis index.
struct TreeNode {
    int gen = -1;   // -1: leaf
    int leaf = 0;   // leaf label when gen == -1
    std::vector<TreeNode> kids;

    static TreeNode leaf_node(int l) {
        TreeNode t;
        t.leaf = l;
        return t;
    }
    static TreeNode vertex(int g, std::vector<TreeNode> k) {
        TreeNode t;
        t.gen = g;
        t.kids = std::move(k);
        return t;
    }
    bool is_leaf() const { return gen < 0; }
    int arity() const;  // number of leaves
    std::string str(const std::vector<std::string>& gen_names) const;
};

// Arity-truncated operad over Q. Arities run 0..cap; composition tables are
// exposed through `compose` for basis elements and extended bilinearly by
// the callers. Symmetric operads also expose the right S_n-action.
class Operad {
  public:
    virtual ~Operad() = default;

    bool symmetric() const { return symmetric_; }
    int cap() const { return cap_; }
    int dim(int n) const {
        return (n >= 0 && n <= cap_) ? dims_[n] : 0;
    }
    // Arity bound after which all components vanish identically (not just
    // beyond the truncation); 0 if none is known.
    int zero_beyond() const { return zero_beyond_; }

    virtual int degree(int n, int idx) const { return 0; }
    virtual std::string label(int n, int idx) const;

    // p o_i q for basis elements p in arity m, q in arity n, 1 <= i <= m.
    virtual SVec compose(int m, int a, int i, int n, int b) const = 0;

    // Right action on a basis element; identity for n <= 1.
    virtual SVec act(int n, int idx, const Perm& sigma) const;

    // True if act() sends basis elements to +- basis elements.
    virtual bool monomial() const { return false; }

    // Free right action with a canonical section: every basis element is
    // sign * rep . sigma for a unique representative.
    virtual bool free_action() const { return false; }
    struct RepData {
        int rep;
        Perm sigma;
        int sign;
    };
    virtual RepData rep_of(int n, int idx) const {
        throw std::logic_error("rep_of: not a free action");
    }
    // For monomial actions: image index and sign of idx . sigma.
    virtual std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const {
        throw std::logic_error("act_index: not monomial");
    }

    // Representative expression in terms of presentation generators; used to
    // push basis elements through an algebra structure map.
    virtual TreeNode term_tree(int n, int idx) const {
        throw std::logic_error("term_tree: not available for this operad");
    }

    // Matrix of the right action of sigma (columns = source basis).
    SMat action_matrix(int n, const Perm& sigma) const;
    // Action data for the generic invariant machinery.
    ActionOnSpace action_on(int n) const;

    int unit_arity() const { return 1; }

  protected:
    bool symmetric_ = true;
    int cap_ = 0;
    int zero_beyond_ = 0;
    std::vector<int> dims_;
};

using OperadPtr = std::shared_ptr<const Operad>;

// ---- non-Sigma models -------------------------------------------------

// The non-Sigma associative operad: one basis element per arity.
class UAssOperad : public Operad {
  public:
    explicit UAssOperad(int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm&) const override;
    TreeNode term_tree(int n, int idx) const override;
};

// Free non-Sigma operad on one binary generator: planar binary trees.
class UMagOperad : public Operad {
  public:
    explicit UMagOperad(int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm&) const override;
    TreeNode term_tree(int n, int idx) const override;

  private:
    // Trees encoded as canonical strings; tree structure kept per arity.
    struct Node;
    std::vector<std::vector<TreeNode>> trees_;  // [n][idx], gen = 0 everywhere
    std::vector<std::vector<std::string>> keys_;
    std::vector<std::map<std::string, int>> index_;
    int index_of(int n, const TreeNode& t) const;
};

// Free product of two non-Sigma associative operads: planar trees with
// vertices of arity >= 2 colored 0/1, adjacent vertices differently.
class UDOperad : public Operad {
  public:
    explicit UDOperad(int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm&) const override;
    TreeNode term_tree(int n, int idx) const override;

  private:
    std::vector<std::vector<TreeNode>> trees_;  // gen = color here
    std::vector<std::map<std::string, int>> index_;
    int index_of(int n, const TreeNode& t) const;
};

// Quadratic dual of a free binary non-Sigma operad: k, k^d, 0, 0, ...
class UNilpotentDualOperad : public Operad {
  public:
    UNilpotentDualOperad(int cap, int dim2);
    SVec compose(int m, int a, int i, int n, int b) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm&) const override;
};

// ---- symmetric models -------------------------------------------------

// Symmetrization of a non-Sigma operad: basis (u, sigma), free action.
class SymmetrizedOperad : public Operad {
  public:
    SymmetrizedOperad(std::shared_ptr<const Operad> base, int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return base_->monomial(); }
    bool free_action() const override { return true; }
    RepData rep_of(int n, int idx) const override;
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;
    TreeNode term_tree(int n, int idx) const override;

    int encode(int n, int u, const Perm& sigma) const;
    std::pair<int, Perm> decode(int n, int idx) const;
    const Operad& base() const { return *base_; }

  private:
    std::shared_ptr<const Operad> base_;
};

// The commutative operad: one-dimensional in every arity, trivial action.
class ComOperad : public Operad {
  public:
    explicit ComOperad(int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm&) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm&) const override;
    TreeNode term_tree(int n, int idx) const override;
};

// The Lie operad in the left-normed basis, realized inside the word model
// of the associative operad (bracket words expand to signed word sums).
class LieOperad : public Operad {
  public:
    explicit LieOperad(int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    TreeNode term_tree(int n, int idx) const override;

    // Expansion of basis element idx as a signed sum of words (indexed by
    // permutation rank in S_n).
    const SVec& expansion(int n, int idx) const { return expansions_[n][idx]; }
    // Coordinates of a word-space vector lying in the bracket span. The
    // left-normed expansions are triangular with respect to the words whose
    // first letter is 1 (each monomial hits exactly one such word, with
    // coefficient 1), so coordinates are read off rather than solved for.
    SVec from_words(int n, const SVec& words) const;

  private:
    std::vector<std::vector<Perm>> suffixes_;   // [n]: orderings of 2..n
    std::vector<std::vector<SVec>> expansions_;
};

// Quadratic dual of the symmetrized free binary operad: k, span, 0, 0...
// with the transposition acting by the given matrix on the arity-2 span.
class NilpotentDualOperad : public Operad {
  public:
    NilpotentDualOperad(int cap, SMat tau2, std::vector<std::string> labels2);
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override;
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;

  private:
    SMat tau2_;
    std::vector<std::string> labels2_;
};

// Two-colored word operad: arity 1 is k, arity >= 2 is Ass(+)Ass with
// componentwise composition and zero mixed products.
class TwoColorWordOperad : public Operad {
  public:
    explicit TwoColorWordOperad(int cap);
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    bool free_action() const override { return true; }
    RepData rep_of(int n, int idx) const override;
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;

    int encode(int n, int color, const Perm& sigma) const;
    std::pair<int, Perm> decode(int n, int idx) const;
};

// Endomorphism operad of a graded based space.
class EndOperad : public Operad {
  public:
    EndOperad(BasedSpace v, int cap);
    int degree(int n, int idx) const override;
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;

    const BasedSpace& space() const { return v_; }
    int encode(int out, const std::vector<int>& ins) const;
    std::pair<int, std::vector<int>> decode(int n, int idx) const;

  private:
    BasedSpace v_;
    int d_;
};

// One-dimensional suspension factor: Lambda(n) has degree n-1 and carries
// the sign representation; composition signs follow the endomorphism operad
// of a one-dimensional space in degree -1.
class LambdaOperad : public Operad {
  public:
    explicit LambdaOperad(int cap);
    int degree(int n, int idx) const override;
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return true; }
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;
};

// Arity-wise tensor product with diagonal action and Koszul signs.
class TensorOperad : public Operad {
  public:
    TensorOperad(OperadPtr p, OperadPtr q);
    int degree(int n, int idx) const override;
    SVec compose(int m, int a, int i, int n, int b) const override;
    SVec act(int n, int idx, const Perm& sigma) const override;
    std::string label(int n, int idx) const override;
    bool monomial() const override { return p_->monomial() && q_->monomial(); }
    std::pair<int, int> act_index(int n, int idx, const Perm& sigma) const override;

    int encode(int n, int a, int b) const { return a * q_->dim(n) + b; }
    std::pair<int, int> decode(int n, int idx) const {
        return {idx / q_->dim(n), idx % q_->dim(n)};
    }
    const Operad& left() const { return *p_; }
    const Operad& right() const { return *q_; }

  private:
    OperadPtr p_, q_;
};

// Operadic suspension: Lambda tensor P.
std::shared_ptr<TensorOperad> suspension(OperadPtr p);

// Koszul sign of reordering homogeneous letters: the permutation placing
// letter j of the input tuple at position perm(j).
int koszul_reorder_sign(const std::vector<int>& degrees, const Perm& perm);

}  // namespace opl

#endif
