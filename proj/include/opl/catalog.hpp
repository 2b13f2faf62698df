#ifndef OPL_CATALOG_HPP
#define OPL_CATALOG_HPP

#include <string>
#include <vector>

#include "opl/free_operad.hpp"
#include "opl/operad.hpp"

namespace opl {

// A named operad with its quadratic dual (taken from known descriptions,
// not computed), the arity-2 duality pairing, and a presentation used for
// algebra validation and structure-map evaluation.
struct CatalogEntry {
    std::string name;
    bool nonsigma = false;
    OperadPtr P;
    OperadPtr dual;   // null when no dual is stored (prelie)
    SMat pairing2;    // P(2) x dual(2); satisfies <p.t, q.t> = sgn(t) <p,q>
    Presentation pres;
    std::vector<int> base_gen_to_e;  // remap of term-tree vertex ids to E indices

    bool has_dual() const { return dual != nullptr; }
    // Expression of a basis element in presentation generators.
    TreeNode term_tree(int n, int idx) const;
    std::string monomial(int n, int idx) const;  // printable term
};

std::vector<std::string> catalog_names();
CatalogEntry catalog(const std::string& name, int cap);

// Dense inverse of a small matrix; throws on singular input.
SMat small_inverse(const SMat& m);

}  // namespace opl

#endif
