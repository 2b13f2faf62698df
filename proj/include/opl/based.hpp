#ifndef OPL_BASED_HPP
#define OPL_BASED_HPP

#include <optional>
#include <string>
#include <vector>

#include "opl/perm.hpp"
#include "opl/sparse.hpp"

namespace opl {

// Finite-dimensional vector space with a named basis and optional degrees.
struct BasedSpace {
    std::vector<std::string> labels;
    std::vector<int> degrees;  // empty means all zero

    BasedSpace() = default;
    explicit BasedSpace(int n, std::string prefix = "e");
    int dim() const { return static_cast<int>(labels.size()); }
    int degree(int i) const { return degrees.empty() ? 0 : degrees[i]; }
    void validate() const;  // labels pairwise distinct
};

struct LinMap {
    BasedSpace source;
    BasedSpace target;
    SMat mat;  // rows indexed by target basis, cols by source basis

    LinMap() = default;
    LinMap(BasedSpace src, BasedSpace tgt);
    void validate() const;
    SVec apply(const SVec& v) const { return mat.apply(v); }
};

// Cochain complex indexed by degree 0..top with differentials raising degree
// by one. `exact_top` records that the ambient theory has no nonzero spaces
// beyond the stored ones, making the top degree trustworthy.
struct ComplexRep {
    std::vector<BasedSpace> spaces;
    std::vector<LinMap> diffs;  // diffs[d] : spaces[d] -> spaces[d+1]
    bool exact_top = false;

    int top() const { return static_cast<int>(spaces.size()) - 1; }
    void validate_shapes() const;
    // Checks d(d+1) o d(d) = 0 for all d; on failure returns the degree and
    // the label of the first offending basis vector.
    std::optional<std::string> first_dd_violation() const;
};

struct Cohomology {
    std::vector<int> dims;
    std::vector<bool> reliable;
};

// dim H^d = dim ker(d_d) - rank(d_{d-1}). Throws std::runtime_error with a
// diagnostic if d o d != 0.
Cohomology cohomology_dims(const ComplexRep& c);

// Right action of S_n on a based space, stored via the adjacent
// transpositions s_1..s_{n-1}.
struct ActionOnSpace {
    int n = 1;  // symmetric group degree
    int dim = 0;
    std::vector<SMat> adjacent;  // adjacent[i-1] = matrix of s_i (right action)

    SVec apply(const SVec& v, const Perm& sigma) const;
    // Validity of the defining relations of S_n on the given matrices.
    bool valid_representation() const;
    SVec average(const SVec& v) const;
    // Basis of the fixed subspace, deterministic order.
    std::vector<SVec> invariant_basis() const;
};

// Right regular representation of S_n on k[S_n] (basis in lex order),
// optionally twisted by the sign character.
ActionOnSpace regular_action(int n, bool sign_twist = false);

}  // namespace opl

#endif
