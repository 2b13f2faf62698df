#include "opl/free_operad.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace opl {

GenSpec GenSpec::trivial(std::string name) {
    GenSpec g;
    g.name = std::move(name);
    g.action = "trivial";
    g.span = 1;
    g.tau = SMat::identity(1);
    return g;
}

GenSpec GenSpec::sign(std::string name) {
    GenSpec g;
    g.name = std::move(name);
    g.action = "sign";
    g.span = 1;
    g.tau = SMat(1, 1);
    g.tau.set(0, 0, Q(-1));
    return g;
}

GenSpec GenSpec::regular(std::string name) {
    GenSpec g;
    g.name = std::move(name);
    g.action = "regular";
    g.span = 2;
    g.tau = SMat(2, 2);
    g.tau.set(0, 1, Q(1));
    g.tau.set(1, 0, Q(1));
    return g;
}

int Presentation::espan() const {
    int e = 0;
    for (auto& g : gens) e += g.span;
    return e;
}

int Presentation::gen_of(int e) const {
    for (size_t g = 0; g < gens.size(); ++g) {
        if (e < gens[g].span) return static_cast<int>(g);
        e -= gens[g].span;
    }
    throw std::out_of_range("generator basis index");
}

int Presentation::offset_of(int e) const {
    for (auto& g : gens) {
        if (e < g.span) return e;
        e -= g.span;
    }
    throw std::out_of_range("generator basis index");
}

int Presentation::ebase(int g) const {
    int e = 0;
    for (int i = 0; i < g; ++i) e += gens[i].span;
    return e;
}

SMat Presentation::tau_matrix() const {
    SMat t(espan(), espan());
    int off = 0;
    for (auto& g : gens) {
        for (int r = 0; r < g.span; ++r)
            for (auto& [c, v] : g.tau.rows[r]) t.set(off + r, off + c, v);
        off += g.span;
    }
    return t;
}

std::vector<std::string> Presentation::ebasis_names() const {
    std::vector<std::string> names;
    for (auto& g : gens)
        for (int j = 0; j < g.span; ++j) {
            if (j == 0)
                names.push_back(g.name);
            else if (j == 1 && g.action == "regular")
                names.push_back(g.name + "'");
            else
                names.push_back(g.name + "." + std::to_string(j));
        }
    return names;
}

void Presentation::validate() const {
    for (auto& g : gens) {
        if (g.arity != 2) throw std::invalid_argument("only binary generators are supported");
        if (g.tau.nrows != g.span || g.tau.ncols != g.span)
            throw std::invalid_argument("generator action shape mismatch");
    }
    for (auto& r : relations)
        for (auto& t : r)
            if (t.tree.arity() != 3)
                throw std::invalid_argument("relations must live in arity 3 (weight two)");
}

namespace {

std::string skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && isspace(static_cast<unsigned char>(s[p]))) ++p;
    return s;
}

TreeNode parse_tree_rec(const std::string& s, size_t& p, const Presentation& pres,
                        const std::map<std::string, int>& names) {
    skip_ws(s, p);
    if (p >= s.size()) throw std::invalid_argument("unexpected end of tree expression");
    if (isdigit(static_cast<unsigned char>(s[p]))) {
        int v = 0;
        while (p < s.size() && isdigit(static_cast<unsigned char>(s[p])))
            v = 10 * v + (s[p++] - '0');
        return TreeNode::leaf_node(v);
    }
    std::string name;
    while (p < s.size() && (isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_' ||
                            s[p] == '\'' || s[p] == '.'))
        name += s[p++];
    auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("unknown generator: " + name);
    skip_ws(s, p);
    if (p >= s.size() || s[p] != '(') throw std::invalid_argument("expected ( after generator");
    ++p;
    std::vector<TreeNode> kids;
    while (true) {
        kids.push_back(parse_tree_rec(s, p, pres, names));
        skip_ws(s, p);
        if (p < s.size() && s[p] == ',') {
            ++p;
            continue;
        }
        break;
    }
    if (p >= s.size() || s[p] != ')') throw std::invalid_argument("expected )");
    ++p;
    return TreeNode::vertex(it->second, std::move(kids));
}

int min_leaf(const TreeNode& t) {
    if (t.is_leaf()) return t.leaf;
    int m = min_leaf(t.kids[0]);
    for (size_t i = 1; i < t.kids.size(); ++i) m = std::min(m, min_leaf(t.kids[i]));
    return m;
}

std::string canon_key(const TreeNode& t) {
    if (t.is_leaf()) return std::to_string(t.leaf);
    std::string s = "g" + std::to_string(t.gen) + "(";
    for (size_t i = 0; i < t.kids.size(); ++i) {
        if (i) s += ",";
        s += canon_key(t.kids[i]);
    }
    return s + ")";
}

void collect_leaves(const TreeNode& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.leaf);
        return;
    }
    for (auto& k : t.kids) collect_leaves(k, out);
}

TreeNode relabel(const TreeNode& t, const std::function<int(int)>& f) {
    if (t.is_leaf()) return TreeNode::leaf_node(f(t.leaf));
    std::vector<TreeNode> kids;
    kids.reserve(t.kids.size());
    for (auto& k : t.kids) kids.push_back(relabel(k, f));
    return TreeNode::vertex(t.gen, std::move(kids));
}

// Substitute `sub` (already shifted) for the leaf labeled i.
TreeNode graft_label(const TreeNode& host, int i, const TreeNode& sub) {
    if (host.is_leaf()) return host.leaf == i ? sub : host;
    std::vector<TreeNode> kids;
    kids.reserve(host.kids.size());
    for (auto& k : host.kids) kids.push_back(graft_label(k, i, sub));
    return TreeNode::vertex(host.gen, std::move(kids));
}

}  // namespace

TreeNode parse_tree(const std::string& s, const Presentation& pres) {
    std::map<std::string, int> names;
    auto list = pres.ebasis_names();
    for (size_t i = 0; i < list.size(); ++i) names[list[i]] = static_cast<int>(i);
    size_t p = 0;
    TreeNode t = parse_tree_rec(s, p, pres, names);
    skip_ws(s, p);
    if (p != s.size()) throw std::invalid_argument("trailing junk in tree expression");
    return t;
}

// ---- FreeOperad -----------------------------------------------------------

FreeOperad::FreeOperad(Presentation pres, int cap) : pres_(std::move(pres)) {
    pres_.validate();
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    basis_.resize(cap + 1);
    index_.resize(cap + 1);
    const int D = pres_.espan();
    // Shuffle-tree basis per leaf set, assembled by arity.
    std::function<std::vector<TreeNode>(std::vector<int>)> build =
        [&](std::vector<int> leaves) -> std::vector<TreeNode> {
        if (leaves.size() == 1) return {TreeNode::leaf_node(leaves[0])};
        std::vector<TreeNode> out;
        const int k = static_cast<int>(leaves.size());
        // Left part always contains leaves[0] (the minimum).
        for (int mask = 1; mask < (1 << (k - 1)); ++mask) {
            std::vector<int> left = {leaves[0]}, right;
            for (int j = 1; j < k; ++j)
                ((mask >> (j - 1)) & 1) ? right.push_back(leaves[j]) : left.push_back(leaves[j]);
            if (right.empty()) continue;
            for (const auto& lt : build(left))
                for (const auto& rt : build(right))
                    for (int e = 0; e < D; ++e) out.push_back(TreeNode::vertex(e, {lt, rt}));
        }
        return out;
    };
    for (int n = 1; n <= cap; ++n) {
        std::vector<int> leaves(n);
        for (int i = 0; i < n; ++i) leaves[i] = i + 1;
        basis_[n] = build(leaves);
        dims_[n] = static_cast<int>(basis_[n].size());
        for (int i = 0; i < dims_[n]; ++i) index_[n][canon_key(basis_[n][i])] = i;
    }
}

std::vector<std::pair<TreeNode, Q>> FreeOperad::normalize_rec(const TreeNode& t) const {
    if (t.is_leaf()) return {{t, Q(1)}};
    if (t.kids.size() != 2) throw std::invalid_argument("free operad trees must be binary");
    auto ls = normalize_rec(t.kids[0]);
    auto rs = normalize_rec(t.kids[1]);
    SMat tau = pres_.tau_matrix();
    std::vector<std::pair<TreeNode, Q>> out;
    for (auto& [lt, lc] : ls)
        for (auto& [rt, rc] : rs) {
            Q c = lc * rc;
            if (min_leaf(lt) < min_leaf(rt)) {
                out.emplace_back(TreeNode::vertex(t.gen, {lt, rt}), c);
            } else {
                // Swap children and twist the decoration by the action of
                // the transposition.
                SMat tt = tau.transposed();
                for (auto& [h, w] : tt.rows[t.gen])
                    out.emplace_back(TreeNode::vertex(h, {rt, lt}), c * w);
            }
        }
    return out;
}

SVec FreeOperad::normalize(const TreeNode& t) const {
    std::map<int, Q> acc;
    const int n = t.arity();
    for (auto& [ct, c] : normalize_rec(t)) {
        auto it = index_[n].find(canon_key(ct));
        if (it == index_[n].end()) throw std::logic_error("normalization left the basis");
        Q& slot = acc[it->second];
        slot += c;
    }
    return svec_normalize(std::move(acc));
}

SVec FreeOperad::eval_poly(const TreePoly& p) const {
    std::map<int, Q> acc;
    for (auto& term : p) {
        for (auto& [i, c] : normalize(term.tree)) {
            Q& slot = acc[i];
            slot += term.coeff * c;
        }
    }
    return svec_normalize(std::move(acc));
}

int FreeOperad::index_of_canonical(const TreeNode& t) const {
    const int n = t.arity();
    auto it = index_[n].find(canon_key(t));
    if (it == index_[n].end()) throw std::logic_error("not a canonical basis tree");
    return it->second;
}

SVec FreeOperad::compose(int m, int a, int i, int n, int b) const {
    const TreeNode& host = basis_[m][a];
    TreeNode sub = relabel(basis_[n][b], [&](int l) { return l + i - 1; });
    TreeNode shifted = relabel(host, [&](int l) { return l > i ? l + n - 1 : l; });
    // The grafting slot keeps label i after the shift.
    return normalize(graft_label(shifted, i, sub));
}

SVec FreeOperad::act(int n, int idx, const Perm& sigma) const {
    if (n <= 1 || sigma.is_identity()) return {{idx, Q(1)}};
    Perm inv = sigma.inverse();
    return normalize(relabel(basis_[n][idx], [&](int l) { return inv.of(l); }));
}

bool FreeOperad::monomial() const {
    SMat tau = pres_.tau_matrix();
    for (int c = 0; c < tau.ncols; ++c) {
        int cnt = 0;
        for (int r = 0; r < tau.nrows; ++r)
            if (!is_zero(tau.get(r, c))) ++cnt;
        if (cnt != 1) return false;
    }
    return true;
}

std::pair<int, int> FreeOperad::act_index(int n, int idx, const Perm& sigma) const {
    SVec v = act(n, idx, sigma);
    if (v.size() != 1 || (v[0].second != Q(1) && v[0].second != Q(-1)))
        throw std::logic_error("action is not monomial");
    return {v[0].first, v[0].second == Q(1) ? 1 : -1};
}

std::string FreeOperad::label(int n, int idx) const {
    return basis_[n][idx].str(pres_.ebasis_names());
}

TreeNode FreeOperad::term_tree(int n, int idx) const { return basis_[n][idx]; }

// ---- PresentedOperad --------------------------------------------------------

std::vector<SVec> PresentedOperad::ideal_closure(int n, std::vector<SVec> gens) const {
    SpanSolver span;
    std::vector<SVec> rows;
    std::vector<SVec> queue = std::move(gens);
    while (!queue.empty()) {
        SVec v = queue.back();
        queue.pop_back();
        if (!span.insert(v)) continue;
        rows.push_back(v);
        for (int j = 1; j < n; ++j) {
            std::vector<int> sv(n);
            for (int l = 1; l <= n; ++l) sv[l - 1] = l;
            std::swap(sv[j - 1], sv[j]);
            Perm sj(sv);
            std::map<int, Q> acc;
            for (auto& [i, c] : v)
                for (auto& [r, w] : free_->act(n, i, sj)) {
                    Q& slot = acc[r];
                    slot += c * w;
                }
            queue.push_back(svec_normalize(std::move(acc)));
        }
    }
    return rows;
}

PresentedOperad::PresentedOperad(std::shared_ptr<const FreeOperad> free, int cap)
    : free_(std::move(free)) {
    if (free_->cap() < cap) throw std::invalid_argument("free operad cap too small");
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    echelon_.resize(cap + 1);
    pivots_.resize(cap + 1);
    q2f_.resize(cap + 1);
    f2q_.resize(cap + 1);
    ideal_rank_.assign(cap + 1, 0);

    std::vector<std::vector<SVec>> ideal(cap + 1);
    for (int n = 3; n <= cap; ++n) {
        std::vector<SVec> gens;
        if (n == 3)
            for (auto& rel : free_->presentation().relations)
                gens.push_back(free_->eval_poly(rel));
        for (int k = 3; k < n; ++k) {
            int m = n - k + 1;
            for (const SVec& x : ideal[k]) {
                for (int e = 0; e < free_->dim(m); ++e) {
                    // e o_i x and x o_j e for all slots.
                    for (int i = 1; i <= m; ++i) {
                        std::map<int, Q> acc;
                        for (auto& [xi, xc] : x)
                            for (auto& [r, w] : free_->compose(m, e, i, k, xi)) {
                                Q& slot = acc[r];
                                slot += xc * w;
                            }
                        gens.push_back(svec_normalize(std::move(acc)));
                    }
                    for (int j = 1; j <= k; ++j) {
                        std::map<int, Q> acc;
                        for (auto& [xi, xc] : x)
                            for (auto& [r, w] : free_->compose(k, xi, j, m, e)) {
                                Q& slot = acc[r];
                                slot += xc * w;
                            }
                        gens.push_back(svec_normalize(std::move(acc)));
                    }
                }
            }
        }
        ideal[n] = ideal_closure(n, std::move(gens));
    }

    for (int n = 0; n <= cap; ++n) {
        if (n >= 3 && !ideal[n].empty()) {
            Echelon e = echelonize(ideal[n]);
            // Reduced form with pivots normalized for projection.
            std::vector<SVec> rr = e.rows;
            for (int k = static_cast<int>(rr.size()) - 1; k >= 0; --k) {
                Q p = svec_get(rr[k], e.pivot_cols[k]);
                rr[k] = svec_scale(rr[k], Q(1) / p);
                for (int j = 0; j < k; ++j) {
                    Q c = svec_get(rr[j], e.pivot_cols[k]);
                    if (!is_zero(c)) svec_axpy(rr[j], -c, rr[k]);
                }
            }
            echelon_[n] = std::move(rr);
            pivots_[n] = e.pivot_cols;
            ideal_rank_[n] = e.rank();
        }
        std::vector<bool> is_piv(free_->dim(n), false);
        for (int p : pivots_[n]) is_piv[p] = true;
        for (int i = 0; i < free_->dim(n); ++i) {
            if (!is_piv[i]) {
                f2q_[n][i] = static_cast<int>(q2f_[n].size());
                q2f_[n].push_back(i);
            }
        }
        dims_[n] = static_cast<int>(q2f_[n].size());
    }
    if (cap >= 1 && dims_[1] != 1)
        throw std::invalid_argument("inconsistent presentation: unit component is not 1-dim");
}

SVec PresentedOperad::project(int n, const SVec& free_vec) const {
    SVec v = free_vec;
    for (size_t k = 0; k < echelon_[n].size(); ++k) {
        Q c = svec_get(v, pivots_[n][k]);
        if (!is_zero(c)) svec_axpy(v, -c, echelon_[n][k]);
    }
    SVec out;
    out.reserve(v.size());
    for (auto& [i, c] : v) out.emplace_back(f2q_[n].at(i), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SVec PresentedOperad::compose(int m, int a, int i, int n, int b) const {
    std::uint64_t key = ((((static_cast<std::uint64_t>(m) * 9 + i) * 9 + n) * 1000003 + a)) *
                            1000003 +
                        b;
    auto it = compose_memo_.find(key);
    if (it != compose_memo_.end()) return it->second;
    SVec free_result = free_->compose(m, q2f_[m][a], i, n, q2f_[n][b]);
    SVec out = project(m + n - 1, free_result);
    compose_memo_.emplace(key, out);
    return out;
}

SVec PresentedOperad::act(int n, int idx, const Perm& sigma) const {
    if (n <= 1 || sigma.is_identity()) return {{idx, Q(1)}};
    return project(n, free_->act(n, q2f_[n][idx], sigma));
}

std::string PresentedOperad::label(int n, int idx) const {
    return free_->label(n, q2f_[n][idx]);
}

TreeNode PresentedOperad::term_tree(int n, int idx) const {
    return free_->term_tree(n, q2f_[n][idx]);
}

// ---- NonSigmaFreeOperad -------------------------------------------------------

NonSigmaFreeOperad::NonSigmaFreeOperad(Presentation pres, int cap) : pres_(std::move(pres)) {
    pres_.validate();
    symmetric_ = false;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    basis_.resize(cap + 1);
    index_.resize(cap + 1);
    const int D = pres_.espan();
    if (cap >= 1) basis_[1] = {TreeNode::leaf_node(1)};
    for (int n = 2; n <= cap; ++n) {
        for (int k = 1; k < n; ++k)
            for (const auto& lt : basis_[k])
                for (const auto& rt : basis_[n - k])
                    for (int e = 0; e < D; ++e) {
                        TreeNode t = TreeNode::vertex(
                            e, {lt, relabel(rt, [&](int l) { return l + k; })});
                        basis_[n].push_back(t);
                    }
    }
    for (int n = 1; n <= cap; ++n) {
        dims_[n] = static_cast<int>(basis_[n].size());
        for (int i = 0; i < dims_[n]; ++i) index_[n][canon_key(basis_[n][i])] = i;
    }
}

int NonSigmaFreeOperad::index_of(int n, const TreeNode& t) const {
    auto it = index_[n].find(canon_key(t));
    if (it == index_[n].end()) throw std::logic_error("unknown planar tree");
    return it->second;
}

SVec NonSigmaFreeOperad::compose(int m, int a, int i, int n, int b) const {
    const TreeNode& host = basis_[m][a];
    TreeNode sub = relabel(basis_[n][b], [&](int l) { return l + i - 1; });
    TreeNode shifted = relabel(host, [&](int l) { return l > i ? l + n - 1 : l; });
    return {{index_of(m + n - 1, graft_label(shifted, i, sub)), Q(1)}};
}

std::string NonSigmaFreeOperad::label(int n, int idx) const {
    return basis_[n][idx].str(pres_.ebasis_names());
}

std::pair<int, int> NonSigmaFreeOperad::act_index(int, int idx, const Perm& sigma) const {
    if (!sigma.is_identity()) throw std::logic_error("non-sigma operad has no action");
    return {idx, 1};
}

TreeNode NonSigmaFreeOperad::term_tree(int n, int idx) const { return basis_[n][idx]; }

SVec NonSigmaFreeOperad::eval_poly(const TreePoly& p) const {
    std::map<int, Q> acc;
    for (auto& term : p) {
        if (!term.tree.is_leaf() && term.tree.kids.size() != 2)
            throw std::invalid_argument("planar trees must be binary here");
        Q& slot = acc[index_of(term.tree.arity(), term.tree)];
        slot += term.coeff;
    }
    return svec_normalize(std::move(acc));
}

// ---- quadratic dual ------------------------------------------------------------

std::vector<GenSpec> dual_gens(const std::vector<GenSpec>& gens) {
    std::vector<GenSpec> out;
    for (auto& g : gens) {
        GenSpec d;
        d.name = g.name + "!";
        d.arity = 2;
        d.degree = 0;
        if (g.action == "trivial") {
            d = GenSpec::sign(d.name);
        } else if (g.action == "sign") {
            d = GenSpec::trivial(d.name);
        } else {
            d.action = "matrix";
            d.span = g.span;
            SMat t = g.tau.transposed();
            d.tau = SMat(g.span, g.span);
            for (int r = 0; r < g.span; ++r)
                for (auto& [c, v] : t.rows[r]) d.tau.set(r, c, -v);
        }
        out.push_back(std::move(d));
    }
    return out;
}

namespace {

// Decode a canonical left-comb tree ((1,2),3) into its two decorations;
// returns false for any other shape.
bool s1_decorations(const TreeNode& t, int& outer, int& inner) {
    if (t.is_leaf() || t.kids.size() != 2) return false;
    const TreeNode& l = t.kids[0];
    const TreeNode& r = t.kids[1];
    if (l.is_leaf() || !r.is_leaf()) return false;
    if (!l.kids[0].is_leaf() || !l.kids[1].is_leaf()) return false;
    if (l.kids[0].leaf != 1 || l.kids[1].leaf != 2 || r.leaf != 3) return false;
    outer = t.gen;
    inner = l.gen;
    return true;
}

// Coordinates of a free vector on the ((1,2),3)-shaped part, as pairs of
// decorations. Entries outside that shape are dropped (the base pairing
// vanishes there).
std::vector<std::tuple<int, int, Q>> s1_block(const FreeOperad& f, const SVec& v) {
    std::vector<std::tuple<int, int, Q>> out;
    for (auto& [i, c] : v) {
        TreeNode t = f.term_tree(3, i);
        int outer, inner;
        if (s1_decorations(t, outer, inner)) out.emplace_back(outer, inner, c);
    }
    return out;
}

}  // namespace

SMat weight2_pairing(const FreeOperad& primal, const FreeOperad& dual) {
    const int dp = primal.dim(3), dd = dual.dim(3);
    SMat g(dp, dd);
    for (int a = 0; a < dp; ++a) {
        // Transport t into the ((1,2),3) block: send the two leaves under
        // the inner vertex to 1,2 (in planar order) and the lone leaf to 3.
        // Canonicalization swaps the root children when needed, so the
        // result lands in the left-comb block up to a decoration twist.
        const TreeNode t = primal.term_tree(3, a);
        const TreeNode& l = t.kids[0];
        const TreeNode& r = t.kids[1];
        std::vector<int> pair_leaves, lone_leaves;
        collect_leaves(l.is_leaf() ? r : l, pair_leaves);
        collect_leaves(l.is_leaf() ? l : r, lone_leaves);
        std::vector<int> w(3);
        w[pair_leaves[0] - 1] = 1;
        w[pair_leaves[1] - 1] = 2;
        w[lone_leaves[0] - 1] = 3;
        Perm rho(w);  // act by rho^{-1} relabels leaf l to w[l-1]; t = u . rho
        int sign = rho.sign();
        SVec ta = primal.act(3, a, rho.inverse());
        auto block_a = s1_block(primal, ta);
        if (block_a.empty()) continue;
        for (int b = 0; b < dd; ++b) {
            SVec tb = dual.act(3, b, rho.inverse());
            Q val(0);
            for (auto& [oa, ia, ca] : block_a)
                for (auto& [ob, ib, cb] : s1_block(dual, tb))
                    if (oa == ob && ia == ib) val += ca * cb;
            if (!is_zero(val)) g.set(a, b, Q(sign) * val);
        }
    }
    return g;
}

Presentation quadratic_dual(const Presentation& pres, int) {
    if (!pres.symmetric) throw std::invalid_argument("quadratic dual: symmetric presentations only");
    Presentation dualp;
    dualp.symmetric = true;
    dualp.gens = dual_gens(pres.gens);

    FreeOperad fp(pres, 3);
    FreeOperad fd(dualp, 3);
    // Sigma-closed relation span of the primal.
    SpanSolver rel_span;
    std::vector<SVec> rel_rows;
    {
        std::vector<SVec> queue;
        for (auto& r : pres.relations) queue.push_back(fp.eval_poly(r));
        while (!queue.empty()) {
            SVec v = queue.back();
            queue.pop_back();
            if (!rel_span.insert(v)) continue;
            rel_rows.push_back(v);
            for (const Perm& s : all_perms(3)) {
                std::map<int, Q> acc;
                for (auto& [i, c] : v)
                    for (auto& [r2, w] : fp.act(3, i, s)) {
                        Q& slot = acc[r2];
                        slot += c * w;
                    }
                queue.push_back(svec_normalize(std::move(acc)));
            }
        }
    }
    SMat g = weight2_pairing(fp, fd);
    // Annihilator: rows r^T G over the dual weight-2 space.
    std::vector<SVec> eqs;
    for (const SVec& r : rel_rows) {
        std::map<int, Q> acc;
        for (auto& [i, c] : r)
            for (auto& [j, v] : g.rows[i]) {
                Q& slot = acc[j];
                slot += c * v;
            }
        eqs.push_back(svec_normalize(std::move(acc)));
    }
    SMat sys(static_cast<int>(eqs.size()), fd.dim(3));
    sys.rows = eqs;
    for (const SVec& k : kernel_basis(sys)) {
        TreePoly rel;
        for (auto& [i, c] : k) rel.push_back({fd.term_tree(3, i), c});
        dualp.relations.push_back(std::move(rel));
    }
    return dualp;
}

}  // namespace opl
