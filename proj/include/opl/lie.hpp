#ifndef OPL_LIE_HPP
#define OPL_LIE_HPP

#include <map>
#include <memory>
#include <vector>

#include "opl/based.hpp"
#include "opl/catalog.hpp"

namespace opl {

// Vectors in the arity-m component of the pair operad T = P (x) P!,
// keyed by (index in P(m), index in P!(m)).
inline std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}
inline std::pair<int, int> pair_unkey(std::uint64_t k) {
    return {static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)};
}
using PairVec = KVec;

// Element of the graded sum of the suspended pair operad, stored as plain
// arity components; all shift and sign bookkeeping is applied inside the
// circle product and bracket.
struct LieElement {
    std::map<int, PairVec> comps;  // arity -> component

    void add(int arity, std::uint64_t key, const Q& c);
    void add_vec(int arity, const PairVec& v, const Q& scale = Q(1));
    bool zero() const;
    bool operator==(const LieElement& o) const;
    static LieElement single(int arity, PairVec v);
};

// Basis of a twisted-invariant subspace ((T(m) (x) sgn_m)^{Sigma_m}),
// supporting expansion and coordinate extraction.
class InvariantSpace {
  public:
    int arity() const { return m_; }
    int dim() const { return dim_; }
    PairVec expand(int j) const;
    // Coordinates of a twisted-invariant vector; throws if v is not in the
    // span (symmetric mode sanity check).
    SVec coords(const PairVec& v) const;
    // Coordinates of the twisted average of an arbitrary vector. This is
    // the transfer through coinvariants; it agrees with coords on vectors
    // that are already invariant.
    SVec project_coords(const PairVec& v) const;
    PairVec from_coords(const SVec& c) const;
    std::string label(int j) const;

  private:
    friend class SoulContext;
    int m_ = 1;
    int dim_ = 0;
    bool monomial_mode_ = false;
    const Operad* p_ = nullptr;
    const Operad* d_ = nullptr;
    bool p_free_ = false;  // which factor provides canonical representatives
    std::vector<std::uint64_t> reps_;
    std::map<std::uint64_t, int> rep_index_;
    // Generic mode: explicit basis vectors and a solver for coordinates.
    std::vector<PairVec> basis_;
    std::vector<SVec> basis_svec_;
    SpanSolver solver_;
    std::map<std::uint64_t, int> dense_index_;  // pair key -> ambient index
    // Coinvariant reduction for the twisted average: span of the twisted
    // action differences and the reduced images of the invariant basis.
    SpanSolver wspan_;
    SpanSolver psolver_;

    SVec to_svec(const PairVec& v) const;
};

// The graded Lie calculus on T = P (x) P! for a catalog pair, the canonical
// element, and the constants complexes.
class SoulContext {
  public:
    explicit SoulContext(CatalogEntry entry);

    const CatalogEntry& entry() const { return entry_; }
    const Operad& P() const { return *entry_.P; }
    const Operad& dual() const { return *entry_.dual; }
    bool symmetric() const { return !entry_.nonsigma; }
    int cap() const { return entry_.P->cap(); }

    // Componentwise composition in T (no signs; P and P! sit in degree 0).
    PairVec compose_pair(int m, const PairVec& a, int i, int n, const PairVec& b) const;
    // Diagonal right action; the signed variant twists by sgn.
    PairVec act_pair(int m, const PairVec& v, const Perm& sigma) const;
    PairVec act_pair_signed(int m, const PairVec& v, const Perm& sigma) const;

    LieElement circ(const LieElement& f, const LieElement& g) const;
    LieElement bracket(const LieElement& f, const LieElement& g) const;
    // delta_omega(t) = [t, omega]; precondition: omega o_1 omega = omega o_2
    // omega (plain compositions). Throws with the residual otherwise.
    LieElement delta_omega(const LieElement& t, const LieElement& omega) const;
    // Invariant-side differential: the twisted average of [phi, t], the
    // bracket transferred through coinvariants. Precondition: the projected
    // square of phi vanishes.
    LieElement delta_sigma(const LieElement& phi, const LieElement& t) const;
    // Twisted-average projection onto the invariant side.
    LieElement project_invariant(const LieElement& e) const;
    // The displayed Jacobi identity for a degree-1 element: chi o_1 chi +
    // (chi o_1 chi)(123) + (chi o_1 chi)(132) in the suspended action.
    PairVec jacobiator(const LieElement& chi) const;

    // The canonical element: sum over a basis of P(2) paired with its dual
    // basis under the stored arity-2 pairing.
    LieElement canonical_chi() const;
    // Same construction after a change of basis of P(2) (for the
    // basis-independence check).
    LieElement chi_from_basis_change(const SMat& s) const;

    bool omega_associative(const LieElement& omega, PairVec* residual = nullptr) const;

    const InvariantSpace& invariants(int m) const;

    // Symmetric-mode constants complex: degree m-1 holds the twisted
    // invariants of T(m); differential [chi, -].
    ComplexRep soul_complex(int cap) const;
    // Non-Sigma constants complex on the full pair spaces; differential
    // [t, chi].
    ComplexRep nonsigma_soul_complex(int cap) const;
    Cohomology soul_cohomology(int cap) const;
    Cohomology nonsigma_soul_cohomology(int cap) const;

  private:
    CatalogEntry entry_;
    mutable std::map<int, InvariantSpace> inv_cache_;

    InvariantSpace build_invariants(int m) const;
};

}  // namespace opl

#endif
