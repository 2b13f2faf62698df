#include "opl/catalog.hpp"

#include <functional>
#include <stdexcept>

namespace opl {

namespace {

TreePoly poly(const Presentation& pres, std::vector<std::pair<std::string, long>> terms) {
    TreePoly p;
    for (auto& [s, c] : terms) p.push_back({parse_tree(s, pres), Q(c)});
    return p;
}

Presentation ass_presentation() {
    Presentation p;
    p.gens = {GenSpec::regular("mu")};
    p.relations = {poly(p, {{"mu(mu(1,2),3)", 1}, {"mu(1,mu(2,3))", -1}})};
    return p;
}

Presentation com_presentation() {
    Presentation p;
    p.gens = {GenSpec::trivial("c")};
    p.relations = {poly(p, {{"c(c(1,2),3)", 1}, {"c(1,c(2,3))", -1}})};
    return p;
}

Presentation lie_presentation() {
    Presentation p;
    p.gens = {GenSpec::sign("l")};
    p.relations = {poly(p, {{"l(l(1,2),3)", 1}, {"l(l(2,3),1)", 1}, {"l(l(3,1),2)", 1}})};
    return p;
}

Presentation sym_presentation() {
    Presentation p;
    p.gens = {GenSpec::trivial("s")};
    return p;
}

Presentation mag_presentation() {
    Presentation p;
    p.gens = {GenSpec::regular("m")};
    return p;
}

Presentation prelie_presentation() {
    Presentation p;
    p.gens = {GenSpec::regular("p")};
    p.relations = {poly(p, {{"p(p(1,2),3)", 1},
                            {"p(1,p(2,3))", -1},
                            {"p(p(1,3),2)", -1},
                            {"p(1,p(3,2))", 1}})};
    return p;
}

Presentation d_presentation() {
    Presentation p;
    p.gens = {GenSpec::regular("m1"), GenSpec::regular("m2")};
    p.relations = {poly(p, {{"m1(m1(1,2),3)", 1}, {"m1(1,m1(2,3))", -1}}),
                   poly(p, {{"m2(m2(1,2),3)", 1}, {"m2(1,m2(2,3))", -1}})};
    return p;
}

Presentation uass_presentation() {
    Presentation p;
    p.symmetric = false;
    p.gens = {GenSpec::trivial("m")};
    p.relations = {poly(p, {{"m(m(1,2),3)", 1}, {"m(1,m(2,3))", -1}})};
    return p;
}

Presentation umag_presentation() {
    Presentation p;
    p.symmetric = false;
    p.gens = {GenSpec::trivial("m")};
    return p;
}

SMat diag_pm(int pairs) {
    SMat m(2 * pairs, 2 * pairs);
    for (int k = 0; k < pairs; ++k) {
        m.set(2 * k, 2 * k, Q(1));
        m.set(2 * k + 1, 2 * k + 1, Q(-1));
    }
    return m;
}

SMat one_by_one() {
    SMat m(1, 1);
    m.set(0, 0, Q(1));
    return m;
}

}  // namespace

TreeNode CatalogEntry::term_tree(int n, int idx) const {
    TreeNode t = P->term_tree(n, idx);
    if (base_gen_to_e.empty()) return t;
    std::function<void(TreeNode&)> remap = [&](TreeNode& node) {
        if (node.is_leaf()) return;
        node.gen = base_gen_to_e[node.gen];
        for (auto& k : node.kids) remap(k);
    };
    remap(t);
    return t;
}

std::string CatalogEntry::monomial(int n, int idx) const {
    if (n == 1 && idx == 0) return "1";
    try {
        return term_tree(n, idx).str(pres.ebasis_names());
    } catch (const std::logic_error&) {
        return P->label(n, idx);
    }
}

std::vector<std::string> catalog_names() {
    return {"ass", "uass", "com", "lie", "sym", "mag", "umag", "prelie", "d"};
}

CatalogEntry catalog(const std::string& name, int cap) {
    CatalogEntry e;
    e.name = name;
    if (name == "ass") {
        auto p = std::make_shared<SymmetrizedOperad>(std::make_shared<UAssOperad>(cap), cap);
        e.P = p;
        e.dual = p;
        e.pairing2 = diag_pm(1);
        e.pres = ass_presentation();
        e.base_gen_to_e = {0};
    } else if (name == "uass") {
        auto p = std::make_shared<UAssOperad>(cap);
        e.nonsigma = true;
        e.P = p;
        e.dual = p;
        e.pairing2 = one_by_one();
        e.pres = uass_presentation();
        e.base_gen_to_e = {0};
    } else if (name == "com") {
        e.P = std::make_shared<ComOperad>(cap);
        e.dual = std::make_shared<LieOperad>(cap);
        e.pairing2 = one_by_one();
        e.pres = com_presentation();
    } else if (name == "lie") {
        e.P = std::make_shared<LieOperad>(cap);
        e.dual = std::make_shared<ComOperad>(cap);
        e.pairing2 = one_by_one();
        e.pres = lie_presentation();
    } else if (name == "sym") {
        e.P = std::make_shared<FreeOperad>(sym_presentation(), cap);
        SMat tau(1, 1);
        tau.set(0, 0, Q(-1));
        e.dual = std::make_shared<NilpotentDualOperad>(cap, tau, std::vector<std::string>{"s!"});
        e.pairing2 = one_by_one();
        e.pres = sym_presentation();
    } else if (name == "mag") {
        auto p = std::make_shared<SymmetrizedOperad>(std::make_shared<UMagOperad>(cap), cap);
        e.P = p;
        SMat tau(2, 2);
        tau.set(0, 1, Q(1));
        tau.set(1, 0, Q(1));
        e.dual = std::make_shared<NilpotentDualOperad>(
            cap, tau, std::vector<std::string>{"m!", "m!."});
        e.pairing2 = diag_pm(1);
        e.pres = mag_presentation();
        e.base_gen_to_e = {0};
    } else if (name == "umag") {
        e.nonsigma = true;
        e.P = std::make_shared<UMagOperad>(cap);
        e.dual = std::make_shared<UNilpotentDualOperad>(cap, 1);
        e.pairing2 = one_by_one();
        e.pres = umag_presentation();
        e.base_gen_to_e = {0};
    } else if (name == "prelie") {
        auto free = std::make_shared<FreeOperad>(prelie_presentation(), cap);
        e.P = std::make_shared<PresentedOperad>(free, cap);
        e.dual = nullptr;
        e.pres = prelie_presentation();
    } else if (name == "d") {
        auto p = std::make_shared<SymmetrizedOperad>(std::make_shared<UDOperad>(cap), cap);
        e.P = p;
        e.dual = std::make_shared<TwoColorWordOperad>(cap);
        e.pairing2 = diag_pm(2);
        e.pres = d_presentation();
        e.base_gen_to_e = {0, 2};
    } else {
        throw std::invalid_argument("unknown operad: " + name);
    }
    return e;
}

SMat small_inverse(const SMat& m) {
    if (m.nrows != m.ncols) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.nrows;
    std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n, Q(0)));
    for (int r = 0; r < n; ++r) {
        for (auto& [c, v] : m.rows[r]) a[r][c] = v;
        a[r][n + r] = Q(1);
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!is_zero(a[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::invalid_argument("singular pairing matrix");
        std::swap(a[c], a[piv]);
        Q p = a[c][c];
        for (int j = 0; j < 2 * n; ++j) a[c][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == c || is_zero(a[r][c])) continue;
            Q f = a[r][c];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    SMat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!is_zero(a[r][n + c])) inv.set(r, c, a[r][n + c]);
    return inv;
}

}  // namespace opl
