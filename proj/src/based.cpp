#include "opl/based.hpp"

#include <set>
#include <stdexcept>

namespace opl {

BasedSpace::BasedSpace(int n, std::string prefix) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
}

void BasedSpace::validate() const {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument("duplicate basis labels");
    if (!degrees.empty() && degrees.size() != labels.size())
        throw std::invalid_argument("degree list length mismatch");
}

LinMap::LinMap(BasedSpace src, BasedSpace tgt)
    : source(std::move(src)), target(std::move(tgt)), mat(target.dim(), source.dim()) {}

void LinMap::validate() const {
    if (mat.nrows != target.dim() || mat.ncols != source.dim())
        throw std::invalid_argument("matrix shape does not match source/target");
}

void ComplexRep::validate_shapes() const {
    if (diffs.size() + 1 != spaces.size() && !(spaces.empty() && diffs.empty()))
        throw std::invalid_argument("complex needs one differential per consecutive pair");
    for (size_t d = 0; d < diffs.size(); ++d) {
        if (diffs[d].mat.ncols != spaces[d].dim() || diffs[d].mat.nrows != spaces[d + 1].dim())
            throw std::invalid_argument("differential shape mismatch at degree " +
                                        std::to_string(d));
    }
}

std::optional<std::string> ComplexRep::first_dd_violation() const {
    for (size_t d = 0; d + 1 < diffs.size(); ++d) {
        SMat prod = diffs[d + 1].mat.mul(diffs[d].mat);
        if (prod.is_zero()) continue;
        SMat t = prod.transposed();
        for (int col = 0; col < t.nrows; ++col) {
            if (!t.rows[col].empty()) {
                return "d o d != 0 at degree " + std::to_string(d) + " on basis vector " +
                       spaces[d].labels[col];
            }
        }
    }
    return std::nullopt;
}

Cohomology cohomology_dims(const ComplexRep& c) {
    c.validate_shapes();
    if (auto bad = c.first_dd_violation()) throw std::runtime_error(*bad);
    Cohomology h;
    const int L = c.top();
    std::vector<int> rk(c.diffs.size());
    for (size_t d = 0; d < c.diffs.size(); ++d) rk[d] = rank(c.diffs[d].mat);
    for (int d = 0; d <= L; ++d) {
        int rank_in = (d > 0) ? rk[d - 1] : 0;
        int rank_out = (d < L) ? rk[d] : 0;
        bool rel = (d < L) || c.exact_top;
        h.dims.push_back(c.spaces[d].dim() - rank_in - rank_out);
        h.reliable.push_back(rel);
    }
    return h;
}

SVec ActionOnSpace::apply(const SVec& v, const Perm& sigma) const {
    if (sigma.size() != n) throw std::invalid_argument("permutation degree mismatch");
    SVec out = v;
    for (int f : adjacent_factorization(sigma)) out = adjacent[f - 1].apply(out);
    return out;
}

bool ActionOnSpace::valid_representation() const {
    SMat id = SMat::identity(dim);
    auto eq = [&](const SMat& a, const SMat& b) {
        for (int r = 0; r < dim; ++r)
            if (!svec_eq(a.rows[r], b.rows[r])) return false;
        return true;
    };
    for (int i = 0; i < n - 1; ++i)
        if (!eq(adjacent[i].mul(adjacent[i]), id)) return false;
    for (int i = 0; i + 1 < n - 1; ++i) {
        SMat a = adjacent[i].mul(adjacent[i + 1]).mul(adjacent[i]);
        SMat b = adjacent[i + 1].mul(adjacent[i]).mul(adjacent[i + 1]);
        if (!eq(a, b)) return false;
    }
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 2; j < n - 1; ++j)
            if (!eq(adjacent[i].mul(adjacent[j]), adjacent[j].mul(adjacent[i]))) return false;
    return true;
}

SVec ActionOnSpace::average(const SVec& v) const {
    std::map<int, Q> acc;
    std::int64_t order = factorial(n);
    for (const Perm& s : all_perms(n)) {
        SVec w = apply(v, s);
        for (auto& [k, val] : w) {
            Q& slot = acc[k];
            slot += val;
        }
    }
    SVec sum = svec_normalize(std::move(acc));
    return svec_scale(sum, Q(1) / Q(static_cast<long>(order)));
}

std::vector<SVec> ActionOnSpace::invariant_basis() const {
    if (n <= 1) {
        std::vector<SVec> out;
        for (int i = 0; i < dim; ++i) out.push_back({{i, Q(1)}});
        return out;
    }
    // The adjacent transpositions generate S_n, so the fixed space is the
    // joint kernel of (M_{s_i} - I).
    std::vector<SVec> eqs;
    SMat id = SMat::identity(dim);
    for (const SMat& g : adjacent) {
        for (int r = 0; r < dim; ++r) {
            SVec row = g.rows[r];
            svec_axpy(row, Q(-1), id.rows[r]);
            if (!row.empty()) eqs.push_back(row);
        }
    }
    SMat sys(static_cast<int>(eqs.size()), dim);
    sys.rows = eqs;
    return kernel_basis(sys);
}

ActionOnSpace regular_action(int n, bool sign_twist) {
    ActionOnSpace act;
    act.n = n;
    act.dim = static_cast<int>(factorial(n));
    for (int i = 1; i < n; ++i) {
        std::vector<int> sv(n);
        for (int j = 1; j <= n; ++j) sv[j - 1] = j;
        std::swap(sv[i - 1], sv[i]);
        Perm si(sv);
        SMat m(act.dim, act.dim);
        for (const Perm& rho : all_perms(n)) {
            int from = perm_rank(rho);
            int to = perm_rank(rho * si);
            m.set(to, from, sign_twist ? Q(-1) : Q(1));
        }
        act.adjacent.push_back(std::move(m));
    }
    return act;
}

}  // namespace opl
