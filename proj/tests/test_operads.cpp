#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "opl/catalog.hpp"
#include "opl/free_operad.hpp"
#include "opl/operad.hpp"
#include "test_util.hpp"

using namespace opl;
using opl::testutil::act_vec;
using opl::testutil::compose_vec;

namespace {

std::int64_t catalan(int n) {
    return binomial(2 * n, n) / (n + 1);
}

// Independent count of shuffle binary trees: (2n-3)!!.
std::int64_t odd_factorial(int n) {
    std::int64_t f = 1;
    for (int k = 3; k <= 2 * n - 3; k += 2) f *= k;
    return f;
}

// Independent word-splice oracle for associative composition.
std::vector<int> splice_words(const std::vector<int>& wa, int i, const std::vector<int>& wb) {
    const int nb = static_cast<int>(wb.size());
    std::vector<int> out;
    for (int x : wa) {
        if (x < i) {
            out.push_back(x);
        } else if (x == i) {
            for (int y : wb) out.push_back(y + i - 1);
        } else {
            out.push_back(x + nb - 1);
        }
    }
    return out;
}

// Count of rooted trees on n labeled vertices by brute-force enumeration of
// parent maps (acyclicity checked by walking to the root).
std::int64_t rooted_labeled_trees(int n) {
    if (n == 1) return 1;
    std::int64_t count = 0;
    for (int root = 1; root <= n; ++root) {
        std::vector<int> others;
        for (int v = 1; v <= n; ++v)
            if (v != root) others.push_back(v);
        std::vector<int> parent(n + 1, 0);
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == others.size()) {
                for (int v : others) {
                    int steps = 0, cur = v;
                    while (cur != root && steps <= n) {
                        cur = parent[cur];
                        ++steps;
                    }
                    if (cur != root) return;
                }
                ++count;
                return;
            }
            for (int p = 1; p <= n; ++p) {
                if (p == others[k]) continue;
                parent[others[k]] = p;
                rec(k + 1);
            }
            parent[others[k]] = 0;
        };
        rec(0);
    }
    return count;
}

void check_operad_axioms(const Operad& op, int max_arity, std::mt19937& rng, int samples) {
    // Unit axioms require a one-dimensional arity-1 component.
    bool has_unit = op.dim(1) == 1;
    for (int m = 1; m <= max_arity && has_unit; ++m)
        for (int a = 0; a < op.dim(m); ++a) {
            CHECK(svec_eq(op.compose(1, 0, 1, m, a), SVec{{a, Q(1)}}));
            for (int i = 1; i <= m; ++i)
                CHECK(svec_eq(op.compose(m, a, i, 1, 0), SVec{{a, Q(1)}}));
        }
    // Nested and disjoint associativity, with Koszul signs.
    auto random_idx = [&](int d) { return static_cast<int>(rng() % d); };
    for (int s = 0; s < samples; ++s) {
        int m = 2 + static_cast<int>(rng() % std::max(1, max_arity - 1));
        int n = 1 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % 2);
        if (m + n + k - 2 > max_arity) continue;
        if (!op.dim(m) || !op.dim(n) || !op.dim(k)) continue;
        int a = random_idx(op.dim(m)), b = random_idx(op.dim(n)), c = random_idx(op.dim(k));
        int i = 1 + static_cast<int>(rng() % m);
        // Nested: (a o_i b) o_{i-1+j} c = a o_i (b o_j c).
        int j = 1 + static_cast<int>(rng() % n);
        SVec lhs = compose_vec(op, m + n - 1, op.compose(m, a, i, n, b), i - 1 + j, k,
                               {{c, Q(1)}});
        SVec rhs = compose_vec(op, m, {{a, Q(1)}}, i, n + k - 1, op.compose(n, b, j, k, c));
        CHECK(svec_eq(lhs, rhs));
        // Disjoint: for i2 > i: (a o_i b) o_{i2+n-1} c = +-(a o_{i2} c) o_i b.
        if (m >= 2) {
            int i2 = i < m ? i + 1 + static_cast<int>(rng() % (m - i)) : 0;
            if (i2 > 0) {
                SVec l2 = compose_vec(op, m + n - 1, op.compose(m, a, i, n, b), i2 + n - 1, k,
                                      {{c, Q(1)}});
                SVec r2 = compose_vec(op, m + k - 1, op.compose(m, a, i2, k, c), i, n,
                                      {{b, Q(1)}});
                int sg = (op.degree(n, b) * op.degree(k, c)) % 2 == 0 ? 1 : -1;
                CHECK(svec_eq(l2, svec_scale(r2, Q(sg))));
            }
        }
    }
}

void check_equivariance(const Operad& op, int max_arity, std::mt19937& rng, int samples) {
    for (int s = 0; s < samples; ++s) {
        int m = 2 + static_cast<int>(rng() % std::max(1, max_arity - 1));
        int n = 1 + static_cast<int>(rng() % 2);
        if (m + n - 1 > max_arity || !op.dim(m) || !op.dim(n)) continue;
        int a = static_cast<int>(rng() % op.dim(m)), b = static_cast<int>(rng() % op.dim(n));
        auto pm = all_perms(m);
        auto pn = all_perms(n);
        const Perm& sigma = pm[rng() % pm.size()];
        const Perm& tau = pn[rng() % pn.size()];
        int i = 1 + static_cast<int>(rng() % m);
        SVec lhs = compose_vec(op, m, op.act(m, a, sigma), i, n, op.act(n, b, tau));
        SVec rhs = act_vec(op, m + n - 1, op.compose(m, a, sigma.of(i), n, b),
                           block_compose(sigma, i, tau));
        CHECK(svec_eq(lhs, rhs));
    }
}

}  // namespace

TEST_CASE("free operad dimensions") {
    Presentation one_nonsigma;
    one_nonsigma.symmetric = false;
    one_nonsigma.gens = {GenSpec::trivial("m")};
    NonSigmaFreeOperad f(one_nonsigma, 6);
    for (int n = 1; n <= 6; ++n) CHECK(f.dim(n) == catalan(n - 1));
    CHECK(f.dim(3) == 2);

    Presentation reg;
    reg.gens = {GenSpec::regular("mu")};
    FreeOperad fr(reg, 5);
    CHECK(fr.dim(3) == 12);
    for (int n = 1; n <= 5; ++n) {
        std::int64_t expect = odd_factorial(n);
        for (int k = 1; k < n; ++k) expect *= 2;
        CHECK(fr.dim(n) == expect);
    }
}

TEST_CASE("symmetrization dimension law") {
    auto umag = std::make_shared<UMagOperad>(6);
    SymmetrizedOperad mag(umag, 6);
    for (int n = 1; n <= 6; ++n) CHECK(mag.dim(n) == umag->dim(n) * factorial(n));

    auto uass = std::make_shared<UAssOperad>(6);
    SymmetrizedOperad ass(uass, 6);
    for (int n = 1; n <= 6; ++n) CHECK(ass.dim(n) == factorial(n));

    // The free operad on the regular representation is the symmetrization
    // of the free non-Sigma operad on one generator.
    Presentation reg;
    reg.gens = {GenSpec::regular("m")};
    FreeOperad fr(reg, 5);
    for (int n = 1; n <= 5; ++n) CHECK(fr.dim(n) == mag.dim(n));
}

TEST_CASE("word composition agrees with the splice oracle") {
    auto uass = std::make_shared<UAssOperad>(7);
    SymmetrizedOperad ass(uass, 7);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 3);
        if (m + n - 1 > 7) continue;
        auto pm = all_perms(m);
        auto pn = all_perms(n);
        Perm sa = pm[rng() % pm.size()], sb = pn[rng() % pn.size()];
        int i = 1 + static_cast<int>(rng() % m);
        SVec res = ass.compose(m, ass.encode(m, 0, sa), i, n, ass.encode(n, 0, sb));
        REQUIRE(res.size() == 1);
        auto [u, sc] = ass.decode(m + n - 1, res[0].first);
        // Oracle: words are the inverse one-line notations.
        std::vector<int> wa = sa.inverse().one_line(), wb = sb.inverse().one_line();
        std::vector<int> expect = splice_words(wa, i, wb);
        CHECK(sc.inverse().one_line() == expect);
        CHECK(res[0].second == Q(1));
    }
}

TEST_CASE("operad axioms for catalog operads") {
    std::mt19937 rng(2024);
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        int cap = (name == "d" || name == "prelie") ? 4 : 5;
        CatalogEntry e = catalog(name, cap);
        int max_arity = std::min(cap, 4);
        check_operad_axioms(*e.P, max_arity, rng, 60);
        if (e.has_dual() && e.dual != e.P) check_operad_axioms(*e.dual, max_arity, rng, 60);
        if (!e.nonsigma) {
            check_equivariance(*e.P, max_arity, rng, 40);
            if (e.has_dual() && e.dual != e.P) check_equivariance(*e.dual, max_arity, rng, 40);
        }
    }
}

TEST_CASE("catalog pairings are sign-equivariant and perfect") {
    for (const auto& name : catalog_names()) {
        CatalogEntry e = catalog(name, 3);
        if (!e.has_dual()) continue;
        CAPTURE(name);
        small_inverse(e.pairing2);  // throws if degenerate
        if (e.nonsigma) continue;
        Perm tw({2, 1});
        const int dp = e.P->dim(2), dd = e.dual->dim(2);
        for (int a = 0; a < dp; ++a)
            for (int b = 0; b < dd; ++b) {
                Q lhs(0);
                for (auto& [x, cx] : e.P->act(2, a, tw))
                    for (auto& [y, cy] : e.dual->act(2, b, tw))
                        lhs += cx * cy * e.pairing2.get(x, y);
                CHECK(lhs == -e.pairing2.get(a, b));
            }
    }
}

TEST_CASE("presented operads match independent dimension oracles") {
    auto presented_dims = [](const Presentation& p, int cap) {
        auto free = std::make_shared<FreeOperad>(p, cap);
        PresentedOperad q(free, cap);
        std::vector<int> dims;
        for (int n = 1; n <= cap; ++n) dims.push_back(q.dim(n));
        return dims;
    };

    Presentation ass;
    ass.gens = {GenSpec::regular("mu")};
    ass.relations = {
        {{parse_tree("mu(mu(1,2),3)", ass), Q(1)}, {parse_tree("mu(1,mu(2,3))", ass), Q(-1)}}};
    CHECK(presented_dims(ass, 5) == std::vector<int>{1, 2, 6, 24, 120});

    Presentation com;
    com.gens = {GenSpec::trivial("c")};
    com.relations = {
        {{parse_tree("c(c(1,2),3)", com), Q(1)}, {parse_tree("c(1,c(2,3))", com), Q(-1)}}};
    CHECK(presented_dims(com, 5) == std::vector<int>{1, 1, 1, 1, 1});

    Presentation lie;
    lie.gens = {GenSpec::sign("l")};
    lie.relations = {{{parse_tree("l(l(1,2),3)", lie), Q(1)},
                      {parse_tree("l(l(2,3),1)", lie), Q(1)},
                      {parse_tree("l(l(3,1),2)", lie), Q(1)}}};
    auto lie_dims = presented_dims(lie, 5);
    CHECK(lie_dims == std::vector<int>{1, 1, 2, 6, 24});
    // Catalog Lie model agrees (left-normed basis).
    CatalogEntry cl = catalog("lie", 5);
    for (int n = 1; n <= 5; ++n) CHECK(cl.P->dim(n) == lie_dims[n - 1]);
    CHECK(cl.P->dim(4) == 6);

    Presentation prelie;
    prelie.gens = {GenSpec::regular("p")};
    prelie.relations = {{{parse_tree("p(p(1,2),3)", prelie), Q(1)},
                         {parse_tree("p(1,p(2,3))", prelie), Q(-1)},
                         {parse_tree("p(p(1,3),2)", prelie), Q(-1)},
                         {parse_tree("p(1,p(3,2))", prelie), Q(1)}}};
    auto pre_dims = presented_dims(prelie, 5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(pre_dims[n - 1] == rooted_labeled_trees(n));
        std::int64_t formula = 1;
        for (int k = 1; k < n; ++k) formula *= n;
        CHECK(pre_dims[n - 1] == formula);
    }

    // D = free product of two associative operads.
    CatalogEntry d = catalog("d", 4);
    Presentation dp;
    dp.gens = {GenSpec::regular("m1"), GenSpec::regular("m2")};
    dp.relations = {{{parse_tree("m1(m1(1,2),3)", dp), Q(1)}, {parse_tree("m1(1,m1(2,3))", dp), Q(-1)}},
                    {{parse_tree("m2(m2(1,2),3)", dp), Q(1)}, {parse_tree("m2(1,m2(2,3))", dp), Q(-1)}}};
    auto d_dims = presented_dims(dp, 4);
    CHECK(d_dims[1] == 4);
    for (int n = 1; n <= 4; ++n) CHECK(d.P->dim(n) == d_dims[n - 1]);
}

TEST_CASE("catalog dual dimensions") {
    CatalogEntry sym = catalog("sym", 6);
    for (int n = 1; n <= 6; ++n) CHECK(sym.dual->dim(n) == (n <= 2 ? 1 : 0));

    CatalogEntry d = catalog("d", 5);
    CHECK(d.dual->dim(1) == 1);
    for (int n = 2; n <= 5; ++n) CHECK(d.dual->dim(n) == 2 * factorial(n));

    CatalogEntry com = catalog("com", 5);
    for (int n = 1; n <= 5; ++n) CHECK(com.P->dim(n) == 1);
    for (int n = 1; n <= 5; ++n) CHECK(com.dual->dim(n) == factorial(n - 1));

    CatalogEntry mag = catalog("mag", 4);
    CHECK(mag.dual->dim(1) == 1);
    CHECK(mag.dual->dim(2) == 2);
    CHECK(mag.dual->dim(3) == 0);

    CatalogEntry umag = catalog("umag", 4);
    CHECK(umag.dual->dim(1) == 1);
    CHECK(umag.dual->dim(2) == 1);
    CHECK(umag.dual->dim(3) == 0);
}

TEST_CASE("endomorphism operad dimensions and composition") {
    BasedSpace v(2, "v");
    EndOperad end(v, 4);
    for (int n = 0; n <= 4; ++n) {
        int expect = 1;
        for (int k = 0; k <= n; ++k) expect *= 2;
        CHECK(end.dim(n) == expect);
    }
    // Identity composes to itself.
    SVec id_map = {{end.encode(0, {0}), Q(1)}, {end.encode(1, {1}), Q(1)}};
    CHECK(svec_eq(compose_vec(end, 1, id_map, 1, 1, id_map), id_map));

    std::mt19937 rng(4);
    check_operad_axioms(end, 3, rng, 80);
    check_equivariance(end, 3, rng, 40);
}

TEST_CASE("suspension matches the endomorphism operad of the shifted space") {
    // dim V = 1 in degree 0; the shift puts it in degree -1.
    BasedSpace v(1, "v");
    EndOperad endv(v, 3);
    BasedSpace vd(1, "w");
    vd.degrees = {-1};
    EndOperad endvd(vd, 3);
    auto sus = suspension(std::make_shared<EndOperad>(v, 3));
    for (int n = 1; n <= 3; ++n) {
        CHECK(sus->dim(n) == endvd.dim(n));
        CHECK(sus->degree(n, 0) == endvd.degree(n, 0));
    }
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            if (m + n - 1 > 3) continue;
            for (int i = 1; i <= m; ++i) {
                SVec a = sus->compose(m, 0, i, n, 0);
                SVec b = endvd.compose(m, 0, i, n, 0);
                REQUIRE(a.size() == 1);
                REQUIRE(b.size() == 1);
                CHECK(a[0].second == b[0].second);
            }
        }
    // Sign representation on the suspension in arity n.
    for (int n = 2; n <= 3; ++n)
        for (const Perm& s : all_perms(n)) {
            SVec asus = sus->act(n, 0, s);
            SVec aend = endvd.act(n, 0, s);
            REQUIRE(asus.size() == 1);
            CHECK(asus[0].second == aend[0].second);
            CHECK(asus[0].second == Q(s.sign()));
        }
}

TEST_CASE("suspension of the commutative operad carries the sign character") {
    auto com = std::make_shared<ComOperad>(4);
    auto sus = suspension(com);
    for (int n = 1; n <= 4; ++n) {
        CHECK(sus->dim(n) == 1);
        CHECK(sus->degree(n, 0) == n - 1);
        for (const Perm& s : all_perms(n)) {
            SVec a = sus->act(n, 0, s);
            CHECK(a[0].second == Q(s.sign()));
        }
    }
    // Double suspension restores the module structure.
    auto twice = suspension(std::static_pointer_cast<const Operad>(sus));
    CatalogEntry lie = catalog("lie", 4);
    auto ll = std::static_pointer_cast<const Operad>(lie.P);
    auto lsus2 = suspension(std::static_pointer_cast<const Operad>(suspension(ll)));
    for (int n = 2; n <= 4; ++n)
        for (int g = 1; g < n; ++g) {
            std::vector<int> sv(n);
            for (int j = 1; j <= n; ++j) sv[j - 1] = j;
            std::swap(sv[g - 1], sv[g]);
            Perm s(sv);
            SMat ma = ll->action_matrix(n, s);
            SMat mb = lsus2->action_matrix(n, s);
            for (int r = 0; r < ma.nrows; ++r) CHECK(svec_eq(ma.rows[r], mb.rows[r]));
        }
}

TEST_CASE("tensor products: dimensions and module characters") {
    CatalogEntry ass = catalog("ass", 3);
    TensorOperad aa(ass.P, ass.P);
    CHECK(aa.dim(3) == 36);

    CatalogEntry com = catalog("com", 4);
    CatalogEntry lie = catalog("lie", 4);
    TensorOperad cl(com.P, lie.P);
    auto character = [](const Operad& op, int n, const Perm& s) {
        SMat m = op.action_matrix(n, s);
        Q tr(0);
        for (int r = 0; r < m.nrows; ++r) tr += m.get(r, r);
        return tr;
    };
    for (int n = 1; n <= 4; ++n) {
        CHECK(cl.dim(n) == lie.P->dim(n));
        for (const Perm& s : all_perms(n))
            CHECK(character(cl, n, s) == character(*lie.P, n, s));
    }
    // up(P (x) Q) = up(P) (x) Q = P (x) up(Q) as modules, arity-wise.
    auto s1 = suspension(std::make_shared<TensorOperad>(com.P, lie.P));
    TensorOperad s2(suspension(com.P), lie.P);
    TensorOperad s3(com.P, suspension(lie.P));
    for (int n = 1; n <= 4; ++n) {
        CHECK(s1->dim(n) == s2.dim(n));
        CHECK(s2.dim(n) == s3.dim(n));
        for (const Perm& s : all_perms(n)) {
            Q c1 = character(*s1, n, s), c2 = character(s2, n, s), c3 = character(s3, n, s);
            CHECK(c1 == c2);
            CHECK(c2 == c3);
        }
        CHECK(s1->degree(n, 0) == s2.degree(n, 0));
        CHECK(s2.degree(n, 0) == s3.degree(n, 0));
    }
}

TEST_CASE("quadratic dual cross-checks") {
    auto quotient_dims = [](const Presentation& p, int cap) {
        auto free = std::make_shared<FreeOperad>(p, cap);
        PresentedOperad q(free, cap);
        std::vector<int> dims;
        for (int n = 1; n <= cap; ++n) dims.push_back(q.dim(n));
        return dims;
    };

    Presentation ass;
    ass.gens = {GenSpec::regular("mu")};
    ass.relations = {
        {{parse_tree("mu(mu(1,2),3)", ass), Q(1)}, {parse_tree("mu(1,mu(2,3))", ass), Q(-1)}}};
    Presentation ass_dual = quadratic_dual(ass);
    CHECK(quotient_dims(ass_dual, 4) == std::vector<int>{1, 2, 6, 24});

    Presentation com;
    com.gens = {GenSpec::trivial("c")};
    com.relations = {
        {{parse_tree("c(c(1,2),3)", com), Q(1)}, {parse_tree("c(1,c(2,3))", com), Q(-1)}}};
    Presentation com_dual = quadratic_dual(com);
    CHECK(com_dual.gens[0].action == "sign");
    CHECK(quotient_dims(com_dual, 4) == std::vector<int>{1, 1, 2, 6});

    Presentation lie;
    lie.gens = {GenSpec::sign("l")};
    lie.relations = {{{parse_tree("l(l(1,2),3)", lie), Q(1)},
                      {parse_tree("l(l(2,3),1)", lie), Q(1)},
                      {parse_tree("l(l(3,1),2)", lie), Q(1)}}};
    CHECK(quotient_dims(quadratic_dual(lie), 4) == std::vector<int>{1, 1, 1, 1});

    Presentation sym;
    sym.gens = {GenSpec::trivial("s")};
    Presentation sym_dual = quadratic_dual(sym);
    CHECK(sym_dual.gens[0].action == "sign");
    CHECK(quotient_dims(sym_dual, 4) == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("weight-2 pairing is sign-equivariant") {
    Presentation ass;
    ass.gens = {GenSpec::regular("mu")};
    Presentation dual;
    dual.gens = dual_gens(ass.gens);
    FreeOperad fp(ass, 3), fd(dual, 3);
    SMat g = weight2_pairing(fp, fd);
    CHECK(rank(g) == fp.dim(3));
    for (const Perm& s : all_perms(3)) {
        for (int a = 0; a < fp.dim(3); ++a)
            for (int b = 0; b < fd.dim(3); ++b) {
                Q lhs(0);
                for (auto& [x, cx] : fp.act(3, a, s))
                    for (auto& [y, cy] : fd.act(3, b, s)) lhs += cx * cy * g.get(x, y);
                CHECK(lhs == Q(s.sign()) * g.get(a, b));
            }
    }
}
