#ifndef OPL_SPARSE_HPP
#define OPL_SPARSE_HPP

#include <map>
#include <utility>
#include <vector>

#include "opl/rational.hpp"

namespace opl {

// Sparse vector: index/value pairs, sorted by index, no explicit zeros.
using SVec = std::vector<std::pair<int, Q>>;

SVec svec_normalize(std::map<int, Q> acc);
SVec svec_add(const SVec& a, const SVec& b);
SVec svec_scale(const SVec& a, const Q& c);
// a += c*b
void svec_axpy(SVec& a, const Q& c, const SVec& b);
Q svec_get(const SVec& a, int idx);
bool svec_is_zero(const SVec& a);
bool svec_eq(const SVec& a, const SVec& b);

// Accumulator keyed by an arbitrary 64-bit basis encoding. Used for vectors
// in large pair spaces (operad tensor factors, endomorphism bases) that are
// never materialized as dense arrays.
using KVec = std::map<std::uint64_t, Q>;

void kvec_add(KVec& a, std::uint64_t key, const Q& c);
void kvec_axpy(KVec& a, const Q& c, const KVec& b);
void kvec_prune(KVec& a);
bool kvec_is_zero(const KVec& a);
bool kvec_eq(const KVec& a, const KVec& b);
KVec kvec_scale(const KVec& a, const Q& c);

// Sparse matrix, row major: rows[r] is a sparse vector over column indices.
struct SMat {
    int nrows = 0;
    int ncols = 0;
    std::vector<SVec> rows;

    SMat() = default;
    SMat(int r, int c) : nrows(r), ncols(c), rows(r) {}

    void set(int r, int c, const Q& v);
    Q get(int r, int c) const;
    SMat transposed() const;
    // y = M x for a sparse x over column indices.
    SVec apply(const SVec& x) const;
    SMat mul(const SMat& other) const;  // this * other
    bool is_zero() const;
    static SMat identity(int n);
};

// Row echelon form produced by fraction-free elimination. Rows are scaled to
// integer entries; `pivot_cols[k]` is the pivot column of echelon row k.
struct Echelon {
    std::vector<SVec> rows;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Fraction-free Gaussian elimination. Pivots are chosen by column order,
// then by numerator bit length, then by row sparsity.
Echelon echelonize(std::vector<SVec> rows);

int rank(const SMat& m);

// Basis of { x : M x = 0 }, deterministic order (one vector per free column,
// in increasing column order).
std::vector<SVec> kernel_basis(const SMat& m);

// Incremental span with coordinate tracking: supports membership tests and
// expressing vectors as combinations of the originally inserted generators.
class SpanSolver {
  public:
    // Returns true if v enlarged the span. Either way the generator is
    // recorded for coordinate bookkeeping.
    bool insert(const SVec& v);
    bool contains(const SVec& v) const;
    // Coordinates of v with respect to the inserted generators; empty
    // optional-like flag via `ok`. Only generators that enlarged the span
    // receive nonzero coordinates.
    bool coordinates(const SVec& v, std::vector<Q>& coeffs) const;
    // Residual of v after reduction against the span.
    SVec residual(const SVec& v) const;
    int dim() const { return static_cast<int>(pivot_cols_.size()); }
    int generators() const { return ngen_; }

  private:
    // Reduced rows with pivot normalized to 1; aug_[k] tracks the expression
    // of row k in terms of inserted generators.
    std::vector<SVec> rows_;
    std::vector<std::vector<Q>> aug_;
    std::vector<int> pivot_cols_;
    int ngen_ = 0;

    // Reduces v against the stored rows; returns residual and combination.
    void reduce(SVec& v, std::vector<Q>& comb) const;
};

}  // namespace opl

#endif
