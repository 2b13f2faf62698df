#include "opl/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace opl {

Q parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        Q q(s);
        q.canonicalize();
        return q;
    } catch (...) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

std::string to_string(const Q& q) { return q.get_str(); }

SVec svec_normalize(std::map<int, Q> acc) {
    SVec out;
    out.reserve(acc.size());
    for (auto& [k, v] : acc)
        if (!is_zero(v)) out.emplace_back(k, v);
    return out;
}

SVec svec_add(const SVec& a, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Q v = a[i].second + b[j].second;
            if (!is_zero(v)) out.emplace_back(a[i].first, v);
            ++i, ++j;
        }
    }
    return out;
}

SVec svec_scale(const SVec& a, const Q& c) {
    if (is_zero(c)) return {};
    SVec out;
    out.reserve(a.size());
    for (auto& [k, v] : a) out.emplace_back(k, v * c);
    return out;
}

void svec_axpy(SVec& a, const Q& c, const SVec& b) {
    if (is_zero(c)) return;
    a = svec_add(a, svec_scale(b, c));
}

Q svec_get(const SVec& a, int idx) {
    auto it = std::lower_bound(a.begin(), a.end(), idx,
                               [](const std::pair<int, Q>& p, int i) { return p.first < i; });
    if (it != a.end() && it->first == idx) return it->second;
    return Q(0);
}

bool svec_is_zero(const SVec& a) { return a.empty(); }

bool svec_eq(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
    return true;
}

void kvec_add(KVec& a, std::uint64_t key, const Q& c) {
    if (is_zero(c)) return;
    auto it = a.find(key);
    if (it == a.end()) {
        a.emplace(key, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) a.erase(it);
    }
}

void kvec_axpy(KVec& a, const Q& c, const KVec& b) {
    if (is_zero(c)) return;
    for (auto& [k, v] : b) kvec_add(a, k, c * v);
}

void kvec_prune(KVec& a) {
    for (auto it = a.begin(); it != a.end();)
        it = is_zero(it->second) ? a.erase(it) : std::next(it);
}

bool kvec_is_zero(const KVec& a) {
    for (auto& [k, v] : a)
        if (!is_zero(v)) return false;
    return true;
}

bool kvec_eq(const KVec& a, const KVec& b) {
    KVec d = a;
    for (auto& [k, v] : b) kvec_add(d, k, -v);
    return kvec_is_zero(d);
}

KVec kvec_scale(const KVec& a, const Q& c) {
    KVec out;
    if (is_zero(c)) return out;
    for (auto& [k, v] : a) out.emplace(k, v * c);
    return out;
}

void SMat::set(int r, int c, const Q& v) {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, Q>& p, int i) { return p.first < i; });
    if (it != row.end() && it->first == c) {
        if (opl::is_zero(v))
            row.erase(it);
        else
            it->second = v;
    } else if (!opl::is_zero(v)) {
        row.insert(it, {c, v});
    }
}

Q SMat::get(int r, int c) const { return svec_get(rows[r], c); }

SMat SMat::transposed() const {
    SMat t(ncols, nrows);
    for (int r = 0; r < nrows; ++r)
        for (auto& [c, v] : rows[r]) t.rows[c].emplace_back(r, v);
    return t;
}

SVec SMat::apply(const SVec& x) const {
    std::map<int, Q> acc;
    // Column access via transposition would be wasteful here; accumulate
    // row dots instead.
    for (int r = 0; r < nrows; ++r) {
        Q dot(0);
        size_t i = 0, j = 0;
        const SVec& row = rows[r];
        while (i < row.size() && j < x.size()) {
            if (row[i].first < x[j].first)
                ++i;
            else if (x[j].first < row[i].first)
                ++j;
            else
                dot += row[i++].second * x[j++].second;
        }
        if (!opl::is_zero(dot)) acc[r] = dot;
    }
    return svec_normalize(std::move(acc));
}

SMat SMat::mul(const SMat& other) const {
    SMat out(nrows, other.ncols);
    for (int r = 0; r < nrows; ++r) {
        std::map<int, Q> acc;
        for (auto& [k, v] : rows[r])
            for (auto& [c, w] : other.rows[k]) {
                Q& slot = acc[c];
                slot += v * w;
            }
        out.rows[r] = svec_normalize(std::move(acc));
    }
    return out;
}

bool SMat::is_zero() const {
    for (auto& r : rows)
        if (!r.empty()) return false;
    return true;
}

SMat SMat::identity(int n) {
    SMat m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i].emplace_back(i, Q(1));
    return m;
}

namespace {

// Scale a row to coprime integer entries (sign of the leading entry kept).
void integerize(SVec& row) {
    if (row.empty()) return;
    Z l(1);
    for (auto& [k, v] : row) {
        Z den = v.get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Z g(0);
    for (auto& [k, v] : row) {
        Z num = v.get_num() * (l / v.get_den());
        v = Q(num);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g > 1)
        for (auto& [k, v] : row) v = Q(Z(v.get_num() / g));
}

}  // namespace

Echelon echelonize(std::vector<SVec> rows) {
    for (auto& r : rows) integerize(r);
    Echelon e;
    std::vector<bool> used(rows.size(), false);
    // Track, per column, the candidate rows. We sweep columns left to right.
    while (true) {
        // Find the lowest column present in any unused row.
        int col = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty()) continue;
            if (col == -1 || rows[r].front().first < col) col = rows[r].front().first;
        }
        if (col == -1) break;
        // Pivot choice: smallest numerator bit length, then sparsest row.
        int piv = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty() || rows[r].front().first != col) continue;
            if (piv == -1) {
                piv = static_cast<int>(r);
                continue;
            }
            size_t b0 = num_bits(rows[piv].front().second), b1 = num_bits(rows[r].front().second);
            if (b1 < b0 || (b1 == b0 && rows[r].size() < rows[piv].size()))
                piv = static_cast<int>(r);
        }
        used[piv] = true;
        const Q p = rows[piv].front().second;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty() || rows[r].front().first != col) continue;
            // Fraction-free two-term update: r <- p*r - r_col*piv, then
            // content reduction.
            const Q rc = rows[r].front().second;
            SVec nr = svec_scale(rows[r], p);
            svec_axpy(nr, -rc, rows[piv]);
            integerize(nr);
            rows[r] = std::move(nr);
        }
        e.rows.push_back(rows[piv]);
        e.pivot_cols.push_back(col);
    }
    return e;
}

int rank(const SMat& m) { return echelonize(m.rows).rank(); }

std::vector<SVec> kernel_basis(const SMat& m) {
    Echelon e = echelonize(m.rows);
    // Back substitution needs a reduced form: clear entries above pivots and
    // normalize pivots to 1.
    std::vector<SVec> rr = e.rows;
    for (int k = static_cast<int>(rr.size()) - 1; k >= 0; --k) {
        Q p = svec_get(rr[k], e.pivot_cols[k]);
        rr[k] = svec_scale(rr[k], Q(1) / p);
        for (int j = 0; j < k; ++j) {
            Q c = svec_get(rr[j], e.pivot_cols[k]);
            if (!is_zero(c)) svec_axpy(rr[j], -c, rr[k]);
        }
    }
    std::vector<bool> is_pivot(m.ncols, false);
    std::vector<int> pivot_row(m.ncols, -1);
    for (size_t k = 0; k < e.pivot_cols.size(); ++k) {
        is_pivot[e.pivot_cols[k]] = true;
        pivot_row[e.pivot_cols[k]] = static_cast<int>(k);
    }
    std::vector<SVec> basis;
    for (int c = 0; c < m.ncols; ++c) {
        if (is_pivot[c]) continue;
        std::map<int, Q> v;
        v[c] = Q(1);
        for (size_t k = 0; k < rr.size(); ++k) {
            Q coef = svec_get(rr[k], c);
            if (!is_zero(coef)) v[e.pivot_cols[k]] = -coef;
        }
        basis.push_back(svec_normalize(std::move(v)));
    }
    return basis;
}

void SpanSolver::reduce(SVec& v, std::vector<Q>& comb) const {
    comb.assign(ngen_, Q(0));
    for (size_t k = 0; k < rows_.size(); ++k) {
        Q c = svec_get(v, pivot_cols_[k]);
        if (is_zero(c)) continue;
        svec_axpy(v, -c, rows_[k]);
        for (int g = 0; g < ngen_; ++g)
            if (!is_zero(aug_[k][g])) comb[g] += c * aug_[k][g];
    }
}

bool SpanSolver::insert(const SVec& v) {
    SVec r = v;
    std::vector<Q> comb;
    reduce(r, comb);
    int me = ngen_++;
    for (auto& a : aug_) a.push_back(Q(0));
    if (r.empty()) return false;
    // Normalize pivot to 1. Coordinates: r = v - sum comb[g]*gen_g, so
    // expressing r by generators uses -comb plus this generator.
    const int pc = r.front().first;
    const Q p = r.front().second;
    SVec nr = svec_scale(r, Q(1) / p);
    std::vector<Q> na(ngen_, Q(0));
    for (int g = 0; g < me; ++g) na[g] = -comb[g] / p;
    na[me] = Q(1) / p;
    // Keep reduced form: clear this pivot from existing rows.
    for (size_t k = 0; k < rows_.size(); ++k) {
        Q c = svec_get(rows_[k], pc);
        if (is_zero(c)) continue;
        svec_axpy(rows_[k], -c, nr);
        for (int g = 0; g < ngen_; ++g) aug_[k][g] -= c * na[g];
    }
    rows_.push_back(std::move(nr));
    aug_.push_back(std::move(na));
    pivot_cols_.push_back(pc);
    return true;
}

bool SpanSolver::contains(const SVec& v) const {
    SVec r = v;
    std::vector<Q> comb;
    reduce(r, comb);
    return r.empty();
}

SVec SpanSolver::residual(const SVec& v) const {
    SVec r = v;
    std::vector<Q> comb;
    reduce(r, comb);
    return r;
}

bool SpanSolver::coordinates(const SVec& v, std::vector<Q>& coeffs) const {
    SVec r = v;
    reduce(r, coeffs);
    return r.empty();
}

}  // namespace opl
