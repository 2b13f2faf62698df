#include "opl/lie.hpp"

#include <stdexcept>

namespace opl {

void LieElement::add(int arity, std::uint64_t key, const Q& c) {
    kvec_add(comps[arity], key, c);
}

void LieElement::add_vec(int arity, const PairVec& v, const Q& scale) {
    for (auto& [k, c] : v) kvec_add(comps[arity], k, scale * c);
}

bool LieElement::zero() const {
    for (auto& [m, v] : comps)
        if (!kvec_is_zero(v)) return false;
    return true;
}

bool LieElement::operator==(const LieElement& o) const {
    for (auto& [m, v] : comps) {
        auto it = o.comps.find(m);
        PairVec d = v;
        if (it != o.comps.end())
            for (auto& [k, c] : it->second) kvec_add(d, k, -c);
        if (!kvec_is_zero(d)) return false;
    }
    for (auto& [m, v] : o.comps)
        if (comps.find(m) == comps.end() && !kvec_is_zero(v)) return false;
    return true;
}

LieElement LieElement::single(int arity, PairVec v) {
    LieElement e;
    e.comps[arity] = std::move(v);
    return e;
}

// ---- InvariantSpace ---------------------------------------------------------

PairVec InvariantSpace::expand(int j) const {
    PairVec out;
    if (monomial_mode_) {
        if (m_ <= 1) {
            out[reps_[j]] = Q(1);
            return out;
        }
        auto [ra, rb] = pair_unkey(reps_[j]);
        for (const Perm& s : all_perms(m_)) {
            auto [a, s1] = p_->act_index(m_, ra, s);
            auto [b, s2] = d_->act_index(m_, rb, s);
            kvec_add(out, pair_key(a, b), Q(s.sign() * s1 * s2));
        }
        return out;
    }
    return basis_[j];
}

SVec InvariantSpace::to_svec(const PairVec& v) const {
    std::map<int, Q> acc;
    for (auto& [k, c] : v) {
        auto it = dense_index_.find(k);
        if (it == dense_index_.end()) throw std::logic_error("pair key outside the space");
        acc[it->second] = c;
    }
    return svec_normalize(std::move(acc));
}

SVec InvariantSpace::coords(const PairVec& v) const {
    if (monomial_mode_) {
        std::map<int, Q> acc;
        for (auto& [k, c] : v) {
            auto it = rep_index_.find(k);
            if (it != rep_index_.end()) acc[it->second] = c;
        }
        return svec_normalize(std::move(acc));
    }
    std::vector<Q> comb;
    if (!solver_.coordinates(to_svec(v), comb))
        throw std::logic_error("vector is not in the invariant span");
    std::map<int, Q> acc;
    for (size_t i = 0; i < comb.size(); ++i)
        if (!is_zero(comb[i])) acc[static_cast<int>(i)] = comb[i];
    return svec_normalize(std::move(acc));
}

SVec InvariantSpace::project_coords(const PairVec& v) const {
    if (dim_ == 0) return {};
    if (monomial_mode_) {
        const Q norm = Q(1) / Q(static_cast<long>(factorial(m_)));
        std::map<int, Q> acc;
        for (auto& [k, c] : v) {
            auto [a, b] = pair_unkey(k);
            if (m_ <= 1) {
                Q& slot = acc[rep_index_.at(k)];
                slot += c;
                continue;
            }
            auto rd = p_->rep_of(m_, a);
            auto [rb, s2] = d_->act_index(m_, b, rd.sigma.inverse());
            auto it = rep_index_.find(pair_key(rd.rep, rb));
            if (it == rep_index_.end()) throw std::logic_error("orbit representative missing");
            Q& slot = acc[it->second];
            slot += c * Q(rd.sign * s2 * rd.sigma.sign());
        }
        SVec out = svec_normalize(std::move(acc));
        return m_ <= 1 ? out : svec_scale(out, norm);
    }
    // Coinvariant route: reduce modulo twisted action differences, then
    // express against the reduced invariant basis.
    SVec r = wspan_.residual(to_svec(v));
    std::vector<Q> comb;
    if (!psolver_.coordinates(r, comb))
        throw std::logic_error("coinvariant class outside the invariant image");
    std::map<int, Q> acc;
    for (size_t i = 0; i < comb.size(); ++i)
        if (!is_zero(comb[i])) acc[static_cast<int>(i)] = comb[i];
    return svec_normalize(std::move(acc));
}

PairVec InvariantSpace::from_coords(const SVec& c) const {
    PairVec out;
    for (auto& [j, v] : c) {
        PairVec e = expand(j);
        for (auto& [k, w] : e) kvec_add(out, k, v * w);
    }
    return out;
}

std::string InvariantSpace::label(int j) const {
    if (monomial_mode_) {
        auto [a, b] = pair_unkey(reps_[j]);
        return "[" + p_->label(m_, a) + "|" + d_->label(m_, b) + "]";
    }
    return "inv" + std::to_string(m_) + "." + std::to_string(j);
}

// ---- SoulContext ------------------------------------------------------------

SoulContext::SoulContext(CatalogEntry entry) : entry_(std::move(entry)) {
    if (!entry_.has_dual())
        throw std::invalid_argument("soul machinery needs an operad with a stored dual");
}

PairVec SoulContext::compose_pair(int m, const PairVec& a, int i, int n,
                                  const PairVec& b) const {
    PairVec out;
    for (auto& [ka, ca] : a) {
        auto [pa, qa] = pair_unkey(ka);
        for (auto& [kb, cb] : b) {
            auto [pb, qb] = pair_unkey(kb);
            SVec left = P().compose(m, pa, i, n, pb);
            if (left.empty()) continue;
            SVec right = dual().compose(m, qa, i, n, qb);
            if (right.empty()) continue;
            Q c = ca * cb;
            for (auto& [x, cx] : left)
                for (auto& [y, cy] : right) kvec_add(out, pair_key(x, y), c * cx * cy);
        }
    }
    return out;
}

PairVec SoulContext::act_pair(int m, const PairVec& v, const Perm& sigma) const {
    PairVec out;
    for (auto& [k, c] : v) {
        auto [a, b] = pair_unkey(k);
        for (auto& [x, cx] : P().act(m, a, sigma))
            for (auto& [y, cy] : dual().act(m, b, sigma))
                kvec_add(out, pair_key(x, y), c * cx * cy);
    }
    return out;
}

PairVec SoulContext::act_pair_signed(int m, const PairVec& v, const Perm& sigma) const {
    PairVec out = act_pair(m, v, sigma);
    if (sigma.sign() < 0) out = kvec_scale(out, Q(-1));
    return out;
}

LieElement SoulContext::circ(const LieElement& f, const LieElement& g) const {
    LieElement out;
    for (auto& [m, fv] : f.comps) {
        if (kvec_is_zero(fv)) continue;
        for (auto& [n, gv] : g.comps) {
            if (kvec_is_zero(gv)) continue;
            if (m + n - 1 > cap())
                throw std::out_of_range("composition exceeds the arity cap");
            for (int i = 1; i <= m; ++i) {
                Q sign(((n - 1) * (i - 1)) % 2 == 0 ? 1 : -1);
                PairVec term = compose_pair(m, fv, i, n, gv);
                for (auto& [k, c] : term) out.add(m + n - 1, k, sign * c);
            }
        }
    }
    for (auto& [m, v] : out.comps) kvec_prune(v);
    return out;
}

LieElement SoulContext::bracket(const LieElement& f, const LieElement& g) const {
    // [f,g] = f o g - (-1)^{(m-1)(n-1)} g o f on homogeneous components.
    LieElement out;
    for (auto& [m, fv] : f.comps)
        for (auto& [n, gv] : g.comps) {
            if (kvec_is_zero(fv) || kvec_is_zero(gv)) continue;
            LieElement a = circ(LieElement::single(m, fv), LieElement::single(n, gv));
            LieElement b = circ(LieElement::single(n, gv), LieElement::single(m, fv));
            Q sign(((m - 1) * (n - 1)) % 2 == 0 ? 1 : -1);
            for (auto& [ar, v] : a.comps) out.add_vec(ar, v);
            for (auto& [ar, v] : b.comps) out.add_vec(ar, v, -sign);
        }
    for (auto& [m, v] : out.comps) kvec_prune(v);
    return out;
}

bool SoulContext::omega_associative(const LieElement& omega, PairVec* residual) const {
    auto it = omega.comps.find(2);
    if (it == omega.comps.end()) return false;
    for (auto& [m, v] : omega.comps)
        if (m != 2 && !kvec_is_zero(v)) return false;
    PairVec r = compose_pair(2, it->second, 1, 2, it->second);
    PairVec r2 = compose_pair(2, it->second, 2, 2, it->second);
    for (auto& [k, c] : r2) kvec_add(r, k, -c);
    if (residual) *residual = r;
    return kvec_is_zero(r);
}

LieElement SoulContext::delta_omega(const LieElement& t, const LieElement& omega) const {
    PairVec residual;
    if (!omega_associative(omega, &residual))
        throw std::invalid_argument("omega fails o_1 = o_2 associativity; residual has " +
                                    std::to_string(residual.size()) + " terms");
    return bracket(t, omega);
}

LieElement SoulContext::project_invariant(const LieElement& e) const {
    LieElement out;
    for (auto& [m, v] : e.comps) {
        if (kvec_is_zero(v)) continue;
        const InvariantSpace& inv = invariants(m);
        PairVec proj = inv.from_coords(inv.project_coords(v));
        if (!kvec_is_zero(proj)) out.comps[m] = std::move(proj);
    }
    return out;
}

LieElement SoulContext::delta_sigma(const LieElement& phi, const LieElement& t) const {
    LieElement sq = project_invariant(bracket(phi, phi));
    if (!sq.zero()) throw std::invalid_argument("[phi, phi] != 0");
    return project_invariant(bracket(phi, t));
}

PairVec SoulContext::jacobiator(const LieElement& chi) const {
    const PairVec& x = chi.comps.at(2);
    PairVec c1 = compose_pair(2, x, 1, 2, x);
    PairVec out = c1;
    for (auto& rho : {Perm({2, 3, 1}), Perm({3, 1, 2})}) {
        PairVec acted = act_pair_signed(3, c1, rho);
        for (auto& [k, c] : acted) kvec_add(out, k, c);
    }
    kvec_prune(out);
    return out;
}

LieElement SoulContext::canonical_chi() const {
    if (P().dim(2) == 0)
        throw std::invalid_argument("trivial operad: P(2) = 0 has no canonical element");
    SMat binv = small_inverse(entry_.pairing2);
    LieElement chi;
    for (int k = 0; k < P().dim(2); ++k)
        for (int b = 0; b < dual().dim(2); ++b) {
            Q c = binv.get(b, k);
            if (!is_zero(c)) chi.add(2, pair_key(k, b), c);
        }
    return chi;
}

LieElement SoulContext::chi_from_basis_change(const SMat& s) const {
    // New basis e~_k = sum_j s[j][k] e_j; pairing matrix s^T B; the element
    // is expressed back in the original coordinates.
    SMat bt = entry_.pairing2;
    SMat st = s.transposed();
    SMat newb = st.mul(bt);
    SMat binv = small_inverse(newb);
    LieElement chi;
    const int dp = P().dim(2), dd = dual().dim(2);
    for (int j = 0; j < dp; ++j)
        for (int b = 0; b < dd; ++b) {
            Q c(0);
            for (int k = 0; k < dp; ++k) c += s.get(j, k) * binv.get(b, k);
            if (!is_zero(c)) chi.add(2, pair_key(j, b), c);
        }
    return chi;
}

InvariantSpace SoulContext::build_invariants(int m) const {
    InvariantSpace inv;
    inv.m_ = m;
    inv.p_ = entry_.P.get();
    inv.d_ = entry_.dual.get();
    const int dp = P().dim(m), dd = dual().dim(m);
    if (dp == 0 || dd == 0) {
        inv.dim_ = 0;
        inv.monomial_mode_ = true;
        return inv;
    }
    if (m <= 1) {
        inv.monomial_mode_ = true;
        for (int a = 0; a < dp; ++a)
            for (int b = 0; b < dd; ++b) {
                inv.rep_index_[pair_key(a, b)] = static_cast<int>(inv.reps_.size());
                inv.reps_.push_back(pair_key(a, b));
            }
        inv.dim_ = static_cast<int>(inv.reps_.size());
        return inv;
    }
    if (P().free_action() && P().monomial() && dual().monomial()) {
        inv.monomial_mode_ = true;
        inv.p_free_ = true;
        for (int a = 0; a < dp; ++a) {
            auto rd = P().rep_of(m, a);
            if (!rd.sigma.is_identity()) continue;
            for (int b = 0; b < dd; ++b) {
                inv.rep_index_[pair_key(a, b)] = static_cast<int>(inv.reps_.size());
                inv.reps_.push_back(pair_key(a, b));
            }
        }
        inv.dim_ = static_cast<int>(inv.reps_.size());
        return inv;
    }
    // Generic mode: joint kernel of the twisted adjacent transpositions.
    int idx = 0;
    for (int a = 0; a < dp; ++a)
        for (int b = 0; b < dd; ++b) inv.dense_index_[pair_key(a, b)] = idx++;
    const int dim = dp * dd;
    std::vector<SVec> eqs;
    for (int g = 1; g < m; ++g) {
        std::vector<int> sv(m);
        for (int j = 1; j <= m; ++j) sv[j - 1] = j;
        std::swap(sv[g - 1], sv[g]);
        Perm s(sv);
        // v . s = -v, i.e. (M_s + I) v = 0 columnwise.
        SMat mat(dim, dim);
        for (int a = 0; a < dp; ++a)
            for (int b = 0; b < dd; ++b) {
                PairVec e;
                e[pair_key(a, b)] = Q(1);
                PairVec img = act_pair(m, e, s);
                int col = inv.dense_index_.at(pair_key(a, b));
                for (auto& [k, c] : img) {
                    int row = inv.dense_index_.at(k);
                    mat.set(row, col, mat.get(row, col) + c);
                }
                mat.set(col, col, mat.get(col, col) + Q(1));
            }
        for (auto& r : mat.rows)
            if (!r.empty()) eqs.push_back(r);
    }
    SMat sys(static_cast<int>(eqs.size()), dim);
    sys.rows = eqs;
    std::vector<std::uint64_t> key_of(dim);
    for (auto& [key, di] : inv.dense_index_) key_of[di] = key;
    for (const SVec& k : kernel_basis(sys)) {
        PairVec v;
        for (auto& [i, c] : k) v[key_of[i]] = c;
        inv.basis_svec_.push_back(k);
        inv.basis_.push_back(std::move(v));
        inv.solver_.insert(k);
    }
    inv.dim_ = static_cast<int>(inv.basis_.size());
    // Twisted action differences span the kernel of the coinvariant
    // projection; the adjacent transpositions generate all of them.
    for (int g = 1; g < m; ++g) {
        std::vector<int> sv(m);
        for (int j = 1; j <= m; ++j) sv[j - 1] = j;
        std::swap(sv[g - 1], sv[g]);
        Perm s(sv);
        for (int a = 0; a < dp; ++a)
            for (int b = 0; b < dd; ++b) {
                PairVec e;
                e[pair_key(a, b)] = Q(1);
                PairVec diff = kvec_scale(act_pair(m, e, s), Q(-1));
                kvec_add(diff, pair_key(a, b), Q(-1));
                inv.wspan_.insert(inv.to_svec(diff));
            }
    }
    for (const SVec& bj : inv.basis_svec_) inv.psolver_.insert(inv.wspan_.residual(bj));
    return inv;
}

const InvariantSpace& SoulContext::invariants(int m) const {
    auto it = inv_cache_.find(m);
    if (it == inv_cache_.end()) it = inv_cache_.emplace(m, build_invariants(m)).first;
    return it->second;
}

ComplexRep SoulContext::soul_complex(int cap) const {
    if (!symmetric()) throw std::logic_error("use nonsigma_soul_complex for non-sigma operads");
    if (cap > this->cap()) throw std::out_of_range("soul cap exceeds the operad cap");
    LieElement chi = canonical_chi();
    if (this->cap() >= 3) {
        LieElement sq = bracket(chi, chi);
        auto it = sq.comps.find(3);
        if (it != sq.comps.end() && !svec_is_zero(invariants(3).project_coords(it->second)))
            throw std::logic_error("[chi, chi] != 0; differential would not square to zero");
    }
    ComplexRep c;
    for (int m = 1; m <= cap; ++m) {
        const InvariantSpace& inv = invariants(m);
        BasedSpace sp;
        for (int j = 0; j < inv.dim(); ++j) sp.labels.push_back(inv.label(j));
        c.spaces.push_back(std::move(sp));
    }
    for (int m = 1; m < cap; ++m) {
        const InvariantSpace& src = invariants(m);
        const InvariantSpace& tgt = invariants(m + 1);
        LinMap d(c.spaces[m - 1], c.spaces[m]);
        for (int j = 0; j < src.dim(); ++j) {
            LieElement img = bracket(chi, LieElement::single(m, src.expand(j)));
            auto it = img.comps.find(m + 1);
            if (it == img.comps.end()) continue;
            for (auto& [r, v] : tgt.project_coords(it->second)) d.mat.set(r, j, v);
        }
        c.diffs.push_back(std::move(d));
    }
    int zb = dual().zero_beyond();
    if (P().zero_beyond() > 0 && (zb == 0 || P().zero_beyond() < zb)) zb = P().zero_beyond();
    c.exact_top = zb > 0 && cap + 1 >= zb;
    return c;
}

ComplexRep SoulContext::nonsigma_soul_complex(int cap) const {
    if (symmetric())
        throw std::logic_error("nonsigma_soul_complex needs a non-sigma catalog entry");
    if (cap > this->cap()) throw std::out_of_range("soul cap exceeds the operad cap");
    LieElement chi = canonical_chi();
    ComplexRep c;
    std::vector<std::vector<std::uint64_t>> keys(cap + 1);
    std::vector<std::map<std::uint64_t, int>> key_index(cap + 1);
    for (int m = 1; m <= cap; ++m) {
        BasedSpace sp;
        for (int a = 0; a < P().dim(m); ++a)
            for (int b = 0; b < dual().dim(m); ++b) {
                key_index[m][pair_key(a, b)] = static_cast<int>(keys[m].size());
                keys[m].push_back(pair_key(a, b));
                sp.labels.push_back("[" + P().label(m, a) + "|" + dual().label(m, b) + "]");
            }
        c.spaces.push_back(std::move(sp));
    }
    for (int m = 1; m < cap; ++m) {
        LinMap d(c.spaces[m - 1], c.spaces[m]);
        for (size_t j = 0; j < keys[m].size(); ++j) {
            PairVec e;
            e[keys[m][j]] = Q(1);
            LieElement img = delta_omega(LieElement::single(m, e), chi);
            auto it = img.comps.find(m + 1);
            if (it == img.comps.end()) continue;
            for (auto& [k, v] : it->second) {
                if (is_zero(v)) continue;
                d.mat.set(key_index[m + 1].at(k), static_cast<int>(j), v);
            }
        }
        c.diffs.push_back(std::move(d));
    }
    int zb = dual().zero_beyond();
    if (P().zero_beyond() > 0 && (zb == 0 || P().zero_beyond() < zb)) zb = P().zero_beyond();
    c.exact_top = zb > 0 && cap + 1 >= zb;
    return c;
}

Cohomology SoulContext::soul_cohomology(int cap) const {
    return cohomology_dims(soul_complex(cap));
}

Cohomology SoulContext::nonsigma_soul_cohomology(int cap) const {
    return cohomology_dims(nonsigma_soul_complex(cap));
}

}  // namespace opl
