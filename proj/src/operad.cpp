#include "opl/operad.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>

namespace opl {

int TreeNode::arity() const {
    if (is_leaf()) return 1;
    int a = 0;
    for (const auto& k : kids) a += k.arity();
    return a;
}

std::string TreeNode::str(const std::vector<std::string>& gen_names) const {
    if (is_leaf()) return std::to_string(leaf);
    std::string s = (gen < static_cast<int>(gen_names.size())) ? gen_names[gen]
                                                               : "g" + std::to_string(gen);
    s += "(";
    for (size_t i = 0; i < kids.size(); ++i) {
        if (i) s += ",";
        s += kids[i].str(gen_names);
    }
    return s + ")";
}

std::string Operad::label(int n, int idx) const {
    return "b" + std::to_string(n) + "." + std::to_string(idx);
}

SVec Operad::act(int n, int idx, const Perm& sigma) const {
    if (n <= 1 || sigma.is_identity()) return {{idx, Q(1)}};
    if (monomial()) {
        auto [j, s] = act_index(n, idx, sigma);
        return {{j, Q(s)}};
    }
    throw std::logic_error("act: no implementation for this operad");
}

SMat Operad::action_matrix(int n, const Perm& sigma) const {
    SMat m(dim(n), dim(n));
    for (int idx = 0; idx < dim(n); ++idx)
        for (auto& [r, v] : act(n, idx, sigma)) m.set(r, idx, v);
    return m;
}

ActionOnSpace Operad::action_on(int n) const {
    ActionOnSpace a;
    a.n = n;
    a.dim = dim(n);
    for (int i = 1; i < n; ++i) {
        std::vector<int> sv(n);
        for (int j = 1; j <= n; ++j) sv[j - 1] = j;
        std::swap(sv[i - 1], sv[i]);
        a.adjacent.push_back(action_matrix(n, Perm(sv)));
    }
    return a;
}

int koszul_reorder_sign(const std::vector<int>& degrees, const Perm& perm) {
    int e = 0;
    const int m = static_cast<int>(degrees.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (perm.of(i + 1) > perm.of(j + 1)) e += degrees[i] * degrees[j];
    return (e % 2 == 0) ? 1 : -1;
}

// ---- UAss ---------------------------------------------------------------

UAssOperad::UAssOperad(int cap) {
    symmetric_ = false;
    cap_ = cap;
    dims_.assign(cap + 1, 1);
    dims_[0] = 0;
}

SVec UAssOperad::compose(int m, int, int i, int n, int) const {
    (void)i;
    return {{0, Q(1)}};
}

std::string UAssOperad::label(int n, int) const { return "m" + std::to_string(n); }

std::pair<int, int> UAssOperad::act_index(int, int idx, const Perm& sigma) const {
    if (!sigma.is_identity()) throw std::logic_error("non-sigma operad has no action");
    return {idx, 1};
}

TreeNode UAssOperad::term_tree(int n, int) const {
    TreeNode t = TreeNode::leaf_node(1);
    for (int l = 2; l <= n; ++l) t = TreeNode::vertex(0, {t, TreeNode::leaf_node(l)});
    return t;
}

// ---- UMag ---------------------------------------------------------------

namespace {

void relabel_planar(TreeNode& t, int& next) {
    if (t.is_leaf()) {
        t.leaf = next++;
        return;
    }
    for (auto& k : t.kids) relabel_planar(k, next);
}

std::string planar_key(const TreeNode& t) {
    if (t.is_leaf()) return "*";
    std::string s = std::to_string(t.gen) + "(";
    for (size_t i = 0; i < t.kids.size(); ++i) {
        if (i) s += ",";
        s += planar_key(t.kids[i]);
    }
    return s + ")";
}

// Substitute `sub` for the planar leaf at position i (1-based), then
// relabel leaves planarly.
bool graft_at(TreeNode& host, int& pos, int i, const TreeNode& sub) {
    if (host.is_leaf()) {
        if (pos++ == i) {
            host = sub;
            return true;
        }
        return false;
    }
    for (auto& k : host.kids)
        if (graft_at(k, pos, i, sub)) return true;
    return false;
}

}  // namespace

UMagOperad::UMagOperad(int cap) {
    symmetric_ = false;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    trees_.resize(cap + 1);
    keys_.resize(cap + 1);
    index_.resize(cap + 1);
    if (cap >= 1) trees_[1] = {TreeNode::leaf_node(1)};
    for (int n = 2; n <= cap; ++n) {
        for (int k = 1; k < n; ++k)
            for (const auto& l : trees_[k])
                for (const auto& r : trees_[n - k]) {
                    TreeNode t = TreeNode::vertex(0, {l, r});
                    int next = 1;
                    relabel_planar(t, next);
                    trees_[n].push_back(t);
                }
    }
    for (int n = 1; n <= cap; ++n) {
        dims_[n] = static_cast<int>(trees_[n].size());
        for (int i = 0; i < dims_[n]; ++i) {
            keys_[n].push_back(planar_key(trees_[n][i]));
            index_[n][keys_[n][i]] = i;
        }
    }
}

int UMagOperad::index_of(int n, const TreeNode& t) const {
    auto it = index_[n].find(planar_key(t));
    if (it == index_[n].end()) throw std::logic_error("unknown tree monomial");
    return it->second;
}

SVec UMagOperad::compose(int m, int a, int i, int n, int b) const {
    TreeNode t = trees_[m][a];
    int pos = 1;
    graft_at(t, pos, i, trees_[n][b]);
    int next = 1;
    relabel_planar(t, next);
    return {{index_of(m + n - 1, t), Q(1)}};
}

std::string UMagOperad::label(int n, int idx) const {
    return trees_[n][idx].str({"mu"});
}

std::pair<int, int> UMagOperad::act_index(int, int idx, const Perm& sigma) const {
    if (!sigma.is_identity()) throw std::logic_error("non-sigma operad has no action");
    return {idx, 1};
}

TreeNode UMagOperad::term_tree(int n, int idx) const { return trees_[n][idx]; }

// ---- UD -----------------------------------------------------------------

UDOperad::UDOperad(int cap) {
    symmetric_ = false;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    trees_.resize(cap + 1);
    index_.resize(cap + 1);
    if (cap >= 1) trees_[1] = {TreeNode::leaf_node(1)};
    // by_color[n][c]: trees of arity n whose root vertex has color c.
    std::vector<std::array<std::vector<TreeNode>, 2>> by_color(cap + 1);
    for (int n = 2; n <= cap; ++n) {
        for (int c = 0; c < 2; ++c) {
            // Children: a sequence of >= 2 parts; part of size 1 is a leaf,
            // larger parts are trees with root color 1-c.
            std::function<void(int, std::vector<TreeNode>&)> rec = [&](int rem,
                                                                       std::vector<TreeNode>& kids) {
                if (rem == 0) {
                    if (kids.size() >= 2) {
                        TreeNode t = TreeNode::vertex(c, kids);
                        int next = 1;
                        relabel_planar(t, next);
                        by_color[n][c].push_back(t);
                    }
                    return;
                }
                for (int part = 1; part <= rem; ++part) {
                    if (part == 1) {
                        kids.push_back(TreeNode::leaf_node(0));
                        rec(rem - 1, kids);
                        kids.pop_back();
                    } else {
                        for (const auto& sub : by_color[part][1 - c]) {
                            kids.push_back(sub);
                            rec(rem - part, kids);
                            kids.pop_back();
                        }
                    }
                }
            };
            std::vector<TreeNode> kids;
            rec(n, kids);
        }
        for (int c = 0; c < 2; ++c)
            for (const auto& t : by_color[n][c]) trees_[n].push_back(t);
    }
    for (int n = 1; n <= cap; ++n) {
        dims_[n] = static_cast<int>(trees_[n].size());
        for (int i = 0; i < dims_[n]; ++i) index_[n][planar_key(trees_[n][i])] = i;
    }
}

int UDOperad::index_of(int n, const TreeNode& t) const {
    auto it = index_[n].find(planar_key(t));
    if (it == index_[n].end()) throw std::logic_error("unknown colored tree");
    return it->second;
}

namespace {

// Flatten one same-color parent/child junction created by grafting.
void flatten_colored(TreeNode& t) {
    if (t.is_leaf()) return;
    std::vector<TreeNode> kids;
    for (auto& k : t.kids) {
        flatten_colored(k);
        if (!k.is_leaf() && k.gen == t.gen) {
            for (auto& kk : k.kids) kids.push_back(kk);
        } else {
            kids.push_back(k);
        }
    }
    t.kids = std::move(kids);
}

}  // namespace

SVec UDOperad::compose(int m, int a, int i, int n, int b) const {
    if (m == 1) return {{b, Q(1)}};
    if (n == 1) return {{a, Q(1)}};
    TreeNode t = trees_[m][a];
    int pos = 1;
    graft_at(t, pos, i, trees_[n][b]);
    flatten_colored(t);
    int next = 1;
    relabel_planar(t, next);
    return {{index_of(m + n - 1, t), Q(1)}};
}

std::string UDOperad::label(int n, int idx) const {
    return trees_[n][idx].str({"mu1", "mu2"});
}

std::pair<int, int> UDOperad::act_index(int, int idx, const Perm& sigma) const {
    if (!sigma.is_identity()) throw std::logic_error("non-sigma operad has no action");
    return {idx, 1};
}

TreeNode UDOperad::term_tree(int n, int idx) const {
    // Expand each arity-k colored vertex into a left comb of k-1 binary
    // generators of the same color.
    std::function<TreeNode(const TreeNode&)> expand = [&](const TreeNode& t) -> TreeNode {
        if (t.is_leaf()) return t;
        TreeNode acc = expand(t.kids[0]);
        for (size_t j = 1; j < t.kids.size(); ++j)
            acc = TreeNode::vertex(t.gen, {acc, expand(t.kids[j])});
        return acc;
    };
    return expand(trees_[n][idx]);
}

// ---- UNilpotentDual -------------------------------------------------------

UNilpotentDualOperad::UNilpotentDualOperad(int cap, int dim2) {
    symmetric_ = false;
    cap_ = cap;
    zero_beyond_ = 3;
    dims_.assign(cap + 1, 0);
    if (cap >= 1) dims_[1] = 1;
    if (cap >= 2) dims_[2] = dim2;
}

SVec UNilpotentDualOperad::compose(int m, int a, int i, int n, int b) const {
    if (m == 1) return {{b, Q(1)}};
    if (n == 1) return {{a, Q(1)}};
    return {};
}

std::string UNilpotentDualOperad::label(int n, int idx) const {
    return "d" + std::to_string(n) + "." + std::to_string(idx);
}

std::pair<int, int> UNilpotentDualOperad::act_index(int, int idx, const Perm& sigma) const {
    if (!sigma.is_identity()) throw std::logic_error("non-sigma operad has no action");
    return {idx, 1};
}

// ---- Symmetrized ----------------------------------------------------------

SymmetrizedOperad::SymmetrizedOperad(std::shared_ptr<const Operad> base, int cap)
    : base_(std::move(base)) {
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    for (int n = 1; n <= cap; ++n)
        dims_[n] = base_->dim(n) * static_cast<int>(factorial(n));
    if (base_->zero_beyond() > 0) zero_beyond_ = base_->zero_beyond();
}

int SymmetrizedOperad::encode(int n, int u, const Perm& sigma) const {
    return u * static_cast<int>(factorial(n)) + perm_rank(sigma);
}

std::pair<int, Perm> SymmetrizedOperad::decode(int n, int idx) const {
    int f = static_cast<int>(factorial(n));
    return {idx / f, perm_unrank(n, idx % f)};
}

SVec SymmetrizedOperad::compose(int m, int a, int i, int n, int b) const {
    auto [u, sigma] = decode(m, a);
    auto [v, tau] = decode(n, b);
    SVec base = base_->compose(m, u, sigma.of(i), n, v);
    Perm block = block_compose(sigma, i, tau);
    SVec out;
    out.reserve(base.size());
    for (auto& [w, c] : base) out.emplace_back(encode(m + n - 1, w, block), c);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

SVec SymmetrizedOperad::act(int n, int idx, const Perm& sigma) const {
    auto [j, s] = act_index(n, idx, sigma);
    return {{j, Q(s)}};
}

std::pair<int, int> SymmetrizedOperad::act_index(int n, int idx, const Perm& sigma) const {
    auto [u, rho] = decode(n, idx);
    return {encode(n, u, rho * sigma), 1};
}

Operad::RepData SymmetrizedOperad::rep_of(int n, int idx) const {
    auto [u, sigma] = decode(n, idx);
    return {encode(n, u, Perm(n)), sigma, 1};
}

std::string SymmetrizedOperad::label(int n, int idx) const {
    auto [u, sigma] = decode(n, idx);
    if (sigma.is_identity()) return base_->label(n, u);
    return base_->label(n, u) + "." + sigma.str();
}

TreeNode SymmetrizedOperad::term_tree(int n, int idx) const {
    auto [u, sigma] = decode(n, idx);
    TreeNode t = base_->term_tree(n, u);
    Perm inv = sigma.inverse();
    std::function<void(TreeNode&)> relabel = [&](TreeNode& node) {
        if (node.is_leaf()) {
            node.leaf = inv.of(node.leaf);
            return;
        }
        for (auto& k : node.kids) relabel(k);
    };
    relabel(t);
    return t;
}

// ---- Com ------------------------------------------------------------------

ComOperad::ComOperad(int cap) {
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 1);
    dims_[0] = 0;
}

SVec ComOperad::compose(int, int, int, int, int) const { return {{0, Q(1)}}; }

SVec ComOperad::act(int, int, const Perm&) const { return {{0, Q(1)}}; }

std::string ComOperad::label(int n, int) const { return "c" + std::to_string(n); }

std::pair<int, int> ComOperad::act_index(int, int, const Perm&) const { return {0, 1}; }

TreeNode ComOperad::term_tree(int n, int) const {
    TreeNode t = TreeNode::leaf_node(1);
    for (int l = 2; l <= n; ++l) t = TreeNode::vertex(0, {t, TreeNode::leaf_node(l)});
    return t;
}

// ---- Lie ------------------------------------------------------------------

namespace {

using Word = std::vector<int>;
using WordSum = std::vector<std::pair<Word, Q>>;

WordSum bracket_append(const WordSum& a, int letter) {
    WordSum out;
    for (auto& [w, c] : a) {
        Word l = w;
        l.push_back(letter);
        out.emplace_back(std::move(l), c);
        Word r;
        r.push_back(letter);
        r.insert(r.end(), w.begin(), w.end());
        out.emplace_back(std::move(r), -c);
    }
    return out;
}

int word_to_rank(const Word& w) { return perm_rank(Perm(w).inverse()); }

}  // namespace

LieOperad::LieOperad(int cap) {
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    suffixes_.resize(cap + 1);
    expansions_.resize(cap + 1);
    for (int n = 1; n <= cap; ++n) {
        if (n == 1) {
            suffixes_[1] = {Perm(0)};
            expansions_[1] = {{{0, Q(1)}}};
            dims_[1] = 1;
            continue;
        }
        // Orderings of {2..n} in lex order.
        std::vector<int> base(n - 1);
        for (int i = 0; i < n - 1; ++i) base[i] = i + 2;
        std::sort(base.begin(), base.end());
        do {
            std::map<int, Q> acc;
            WordSum cur = {{{1}, Q(1)}};
            for (int x : base) cur = bracket_append(cur, x);
            for (auto& [w, c] : cur) {
                Q& slot = acc[word_to_rank(w)];
                slot += c;
            }
            SVec exp = svec_normalize(std::move(acc));
            // The lead word 1, base... must appear with coefficient 1.
            std::vector<int> lead = {1};
            lead.insert(lead.end(), base.begin(), base.end());
            if (svec_get(exp, word_to_rank(lead)) != Q(1))
                throw std::logic_error("left-normed expansion lost its lead word");
            expansions_[n].push_back(std::move(exp));
            std::vector<int> suffix_one_line(base.size());
            for (size_t i = 0; i < base.size(); ++i) suffix_one_line[i] = base[i] - 1;
            suffixes_[n].push_back(Perm(suffix_one_line));
        } while (std::next_permutation(base.begin(), base.end()));
        dims_[n] = static_cast<int>(expansions_[n].size());
    }
}

SVec LieOperad::from_words(int n, const SVec& words) const {
    if (n == 1) return words;
    std::map<int, Q> acc;
    for (auto& [r, c] : words) {
        std::vector<int> w = perm_unrank(n, r).inverse().one_line();
        if (w[0] != 1) continue;
        std::vector<int> suffix(w.begin() + 1, w.end());
        for (int& x : suffix) x -= 1;
        Q& slot = acc[perm_rank(Perm(suffix))];
        slot += c;
    }
    return svec_normalize(std::move(acc));
}

SVec LieOperad::compose(int m, int a, int i, int n, int b) const {
    std::map<int, Q> acc;
    for (auto& [ra, ca] : expansions_[m][a]) {
        Perm sa = perm_unrank(m, ra);
        for (auto& [rb, cb] : expansions_[n][b]) {
            Perm sb = perm_unrank(n, rb);
            int r = perm_rank(block_compose(sa, i, sb));
            Q& slot = acc[r];
            slot += ca * cb;
        }
    }
    return from_words(m + n - 1, svec_normalize(std::move(acc)));
}

SVec LieOperad::act(int n, int idx, const Perm& sigma) const {
    if (n <= 1 || sigma.is_identity()) return {{idx, Q(1)}};
    std::map<int, Q> acc;
    for (auto& [r, c] : expansions_[n][idx]) {
        Perm s = perm_unrank(n, r);
        Q& slot = acc[perm_rank(s * sigma)];
        slot += c;
    }
    return from_words(n, svec_normalize(std::move(acc)));
}

std::string LieOperad::label(int n, int idx) const {
    if (n == 1) return "1";
    std::string s = "1";
    const Perm& suf = suffixes_[n][idx];
    for (int i = 1; i <= suf.size(); ++i)
        s = "[" + s + "," + std::to_string(suf.of(i) + 1) + "]";
    return s;
}

TreeNode LieOperad::term_tree(int n, int idx) const {
    TreeNode t = TreeNode::leaf_node(1);
    if (n == 1) return t;
    const Perm& suf = suffixes_[n][idx];
    for (int i = 1; i <= suf.size(); ++i)
        t = TreeNode::vertex(0, {t, TreeNode::leaf_node(suf.of(i) + 1)});
    return t;
}

// ---- NilpotentDual ----------------------------------------------------------

NilpotentDualOperad::NilpotentDualOperad(int cap, SMat tau2, std::vector<std::string> labels2)
    : tau2_(std::move(tau2)), labels2_(std::move(labels2)) {
    symmetric_ = true;
    cap_ = cap;
    zero_beyond_ = 3;
    dims_.assign(cap + 1, 0);
    if (cap >= 1) dims_[1] = 1;
    if (cap >= 2) dims_[2] = tau2_.ncols;
}

SVec NilpotentDualOperad::compose(int m, int a, int i, int n, int b) const {
    if (m == 1) return {{b, Q(1)}};
    if (n == 1) return {{a, Q(1)}};
    return {};
}

SVec NilpotentDualOperad::act(int n, int idx, const Perm& sigma) const {
    if (n != 2 || sigma.is_identity()) return {{idx, Q(1)}};
    SVec out;
    SMat t = tau2_.transposed();
    for (auto& [r, v] : t.rows[idx]) out.emplace_back(r, v);
    return out;
}

std::string NilpotentDualOperad::label(int n, int idx) const {
    if (n == 2 && idx < static_cast<int>(labels2_.size())) return labels2_[idx];
    return "d" + std::to_string(n) + "." + std::to_string(idx);
}

std::pair<int, int> NilpotentDualOperad::act_index(int n, int idx, const Perm& sigma) const {
    if (n != 2 || sigma.is_identity()) return {idx, 1};
    SVec img = act(n, idx, sigma);
    if (img.size() != 1 || (img[0].second != Q(1) && img[0].second != Q(-1)))
        throw std::logic_error("action is not monomial");
    return {img[0].first, img[0].second == Q(1) ? 1 : -1};
}

bool NilpotentDualOperad::monomial() const {
    for (int c = 0; c < tau2_.ncols; ++c) {
        int cnt = 0;
        for (int r = 0; r < tau2_.nrows; ++r)
            if (!is_zero(tau2_.get(r, c))) ++cnt;
        if (cnt != 1) return false;
    }
    return true;
}

// ---- TwoColorWord -----------------------------------------------------------

TwoColorWordOperad::TwoColorWordOperad(int cap) {
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    if (cap >= 1) dims_[1] = 1;
    for (int n = 2; n <= cap; ++n) dims_[n] = 2 * static_cast<int>(factorial(n));
}

int TwoColorWordOperad::encode(int n, int color, const Perm& sigma) const {
    if (n == 1) return 0;
    return color * static_cast<int>(factorial(n)) + perm_rank(sigma);
}

std::pair<int, Perm> TwoColorWordOperad::decode(int n, int idx) const {
    if (n == 1) return {0, Perm(1)};
    int f = static_cast<int>(factorial(n));
    return {idx / f, perm_unrank(n, idx % f)};
}

SVec TwoColorWordOperad::compose(int m, int a, int i, int n, int b) const {
    if (m == 1) return {{b, Q(1)}};
    if (n == 1) return {{a, Q(1)}};
    auto [ca, sa] = decode(m, a);
    auto [cb, sb] = decode(n, b);
    if (ca != cb) return {};
    return {{encode(m + n - 1, ca, block_compose(sa, i, sb)), Q(1)}};
}

SVec TwoColorWordOperad::act(int n, int idx, const Perm& sigma) const {
    auto [j, s] = act_index(n, idx, sigma);
    return {{j, Q(s)}};
}

std::pair<int, int> TwoColorWordOperad::act_index(int n, int idx, const Perm& sigma) const {
    if (n == 1) return {0, 1};
    auto [c, rho] = decode(n, idx);
    return {encode(n, c, rho * sigma), 1};
}

Operad::RepData TwoColorWordOperad::rep_of(int n, int idx) const {
    auto [c, sigma] = decode(n, idx);
    return {encode(n, c, Perm(n)), sigma, 1};
}

std::string TwoColorWordOperad::label(int n, int idx) const {
    if (n == 1) return "1";
    auto [c, sigma] = decode(n, idx);
    return "w" + std::to_string(c + 1) + sigma.str();
}

// ---- End ---------------------------------------------------------------------

EndOperad::EndOperad(BasedSpace v, int cap) : v_(std::move(v)), d_(v_.dim()) {
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 0);
    for (int n = 0; n <= cap; ++n) {
        int dn = 1;  // d^{n+1}
        for (int k = 0; k <= n; ++k) dn *= d_;
        dims_[n] = dn;
    }
}

int EndOperad::encode(int out, const std::vector<int>& ins) const {
    int idx = out;
    for (int x : ins) idx = idx * d_ + x;
    return idx;
}

std::pair<int, std::vector<int>> EndOperad::decode(int n, int idx) const {
    std::vector<int> ins(n);
    for (int j = n - 1; j >= 0; --j) {
        ins[j] = idx % d_;
        idx /= d_;
    }
    return {idx, ins};
}

int EndOperad::degree(int n, int idx) const {
    auto [out, ins] = decode(n, idx);
    int deg = v_.degree(out);
    for (int x : ins) deg -= v_.degree(x);
    return deg;
}

SVec EndOperad::compose(int m, int a, int i, int n, int b) const {
    auto [oa, ia] = decode(m, a);
    auto [ob, ib] = decode(n, b);
    if (ia[i - 1] != ob) return {};
    int pre = 0;
    for (int j = 0; j < i - 1; ++j) pre += v_.degree(ia[j]);
    int db = degree(n, b);
    int sign = ((db * pre) % 2 == 0) ? 1 : -1;
    std::vector<int> ins;
    ins.reserve(m + n - 1);
    for (int j = 0; j < i - 1; ++j) ins.push_back(ia[j]);
    for (int x : ib) ins.push_back(x);
    for (int j = i; j < m; ++j) ins.push_back(ia[j]);
    return {{encode(oa, ins), Q(sign)}};
}

SVec EndOperad::act(int n, int idx, const Perm& sigma) const {
    auto [j, s] = act_index(n, idx, sigma);
    return {{j, Q(s)}};
}

std::pair<int, int> EndOperad::act_index(int n, int idx, const Perm& sigma) const {
    if (n <= 1 || sigma.is_identity()) return {idx, 1};
    auto [out, ins] = decode(n, idx);
    std::vector<int> permuted(n), degs(n);
    for (int p = 1; p <= n; ++p) permuted[p - 1] = ins[sigma.of(p) - 1];
    for (int p = 0; p < n; ++p) degs[p] = v_.degree(permuted[p]);
    // Koszul sign of moving the new tuple back into f's original slot order.
    int sign = koszul_reorder_sign(degs, sigma);
    return {encode(out, permuted), sign};
}

std::string EndOperad::label(int n, int idx) const {
    auto [out, ins] = decode(n, idx);
    std::string s = v_.labels[out] + "<-";
    for (int x : ins) s += v_.labels[x];
    return s;
}

// ---- Lambda ---------------------------------------------------------------

LambdaOperad::LambdaOperad(int cap) {
    symmetric_ = true;
    cap_ = cap;
    dims_.assign(cap + 1, 1);
    dims_[0] = 0;
}

int LambdaOperad::degree(int n, int) const { return n - 1; }

SVec LambdaOperad::compose(int, int, int i, int n, int) const {
    int e = (n - 1) * (i - 1);
    return {{0, Q(e % 2 == 0 ? 1 : -1)}};
}

SVec LambdaOperad::act(int n, int idx, const Perm& sigma) const {
    auto [j, s] = act_index(n, idx, sigma);
    return {{j, Q(s)}};
}

std::pair<int, int> LambdaOperad::act_index(int, int, const Perm& sigma) const {
    return {0, sigma.sign()};
}

std::string LambdaOperad::label(int n, int) const { return "s" + std::to_string(n); }

// ---- Tensor ------------------------------------------------------------------

TensorOperad::TensorOperad(OperadPtr p, OperadPtr q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_->cap() != q_->cap()) throw std::invalid_argument("tensor: cap mismatch");
    symmetric_ = true;
    cap_ = p_->cap();
    dims_.assign(cap_ + 1, 0);
    for (int n = 0; n <= cap_; ++n) dims_[n] = p_->dim(n) * q_->dim(n);
    int zb = 0;
    if (p_->zero_beyond() > 0) zb = p_->zero_beyond();
    if (q_->zero_beyond() > 0) zb = zb ? std::min(zb, q_->zero_beyond()) : q_->zero_beyond();
    zero_beyond_ = zb;
}

int TensorOperad::degree(int n, int idx) const {
    auto [a, b] = decode(n, idx);
    return p_->degree(n, a) + q_->degree(n, b);
}

SVec TensorOperad::compose(int m, int x, int i, int n, int y) const {
    auto [a, u] = decode(m, x);
    auto [b, v] = decode(n, y);
    int e = q_->degree(m, u) * p_->degree(n, b);
    Q sign(e % 2 == 0 ? 1 : -1);
    SVec left = p_->compose(m, a, i, n, b);
    SVec right = q_->compose(m, u, i, n, v);
    std::map<int, Q> acc;
    for (auto& [la, lc] : left)
        for (auto& [rb, rc] : right) acc[encode(m + n - 1, la, rb)] = sign * lc * rc;
    return svec_normalize(std::move(acc));
}

SVec TensorOperad::act(int n, int idx, const Perm& sigma) const {
    auto [a, b] = decode(n, idx);
    SVec la = p_->act(n, a, sigma);
    SVec rb = q_->act(n, b, sigma);
    std::map<int, Q> acc;
    for (auto& [x, cx] : la)
        for (auto& [y, cy] : rb) acc[encode(n, x, y)] = cx * cy;
    return svec_normalize(std::move(acc));
}

std::pair<int, int> TensorOperad::act_index(int n, int idx, const Perm& sigma) const {
    auto [a, b] = decode(n, idx);
    auto [x, sx] = p_->act_index(n, a, sigma);
    auto [y, sy] = q_->act_index(n, b, sigma);
    return {encode(n, x, y), sx * sy};
}

std::string TensorOperad::label(int n, int idx) const {
    auto [a, b] = decode(n, idx);
    return p_->label(n, a) + "(x)" + q_->label(n, b);
}

std::shared_ptr<TensorOperad> suspension(OperadPtr p) {
    return std::make_shared<TensorOperad>(std::make_shared<LambdaOperad>(p->cap()), p);
}

}  // namespace opl
