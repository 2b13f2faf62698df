#ifndef OPL_ALGEBRA_HPP
#define OPL_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "opl/catalog.hpp"

namespace opl {

// Finite-dimensional algebra over a catalog operad: a carrier with one
// bilinear table per presentation generator.
struct PAlgebra {
    CatalogEntry op;
    int dim = 0;
    // tables[g][i][j] = value of generator g on (e_i, e_j), as a sparse
    // vector over the carrier basis.
    std::vector<std::vector<std::vector<SVec>>> tables;
    std::string name;

    const std::vector<std::vector<SVec>>& table(int gen) const { return tables[gen]; }
};

PAlgebra make_algebra(CatalogEntry op, int dim,
                      std::vector<std::vector<std::vector<SVec>>> tables,
                      std::string name = "");

// Evaluates a generator-expression tree on the given basis inputs (leaf
// label l reads inputs[l-1]).
SVec eval_tree_on(const PAlgebra& a, const TreeNode& t, const std::vector<int>& inputs);

// Structure-map violation report: nullopt when the algebra is valid,
// otherwise a description with the first witness tuple.
std::optional<std::string> validate_algebra(const PAlgebra& a);

// JSON front end:
// {"operad": name, "dim": n, "structure": {gen: [[['p/q',...],...],...]}}
PAlgebra algebra_from_json(const std::string& text, int cap);
std::string algebra_to_json(const PAlgebra& a);

// Deterministic "generic" algebra sampler: conjugates small canonical
// structure tables by random invertible integer matrices and validates.
PAlgebra random_algebra(const std::string& operad_name, int dim, int cap,
                        std::uint64_t seed);

}  // namespace opl

#endif
