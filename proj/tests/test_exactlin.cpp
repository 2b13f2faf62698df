#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opl/based.hpp"
#include "opl/perm.hpp"
#include "opl/sparse.hpp"

using namespace opl;

namespace {

// Independent rank oracle: dense Gaussian elimination with naive rational
// pivoting, no sparsity tricks.
int dense_rank(std::vector<std::vector<Q>> m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m[i][c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            Q f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

SMat from_dense(const std::vector<std::vector<Q>>& d) {
    SMat m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
    for (size_t r = 0; r < d.size(); ++r)
        for (size_t c = 0; c < d[r].size(); ++c)
            if (!is_zero(d[r][c])) m.rows[r].emplace_back(static_cast<int>(c), d[r][c]);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    SMat zero(3, 3);
    CHECK(rank(zero) == 0);
    CHECK(rank(SMat::identity(4)) == 4);
}

TEST_CASE("rank of the doubling differential from arity 2 to arity 3") {
    // Columns indexed by S_2, rows by S_3; entry from the alternating sum of
    // doublings d_0 - d_1 + d_2 - d_3. The identity column cancels to zero
    // (all four doublings of id_2 are id_3), the transposition column hits
    // four distinct permutations, so the rank is exactly 1.
    SMat m(6, 2);
    for (const Perm& s : all_perms(2)) {
        int col = perm_rank(s);
        for (int i = 0; i <= 3; ++i) {
            Perm d = doubling(s, i);
            Q cur = m.get(perm_rank(d), col);
            m.set(perm_rank(d), col, cur + Q(i % 2 == 0 ? 1 : -1));
        }
    }
    CHECK(m.apply({{perm_rank(Perm(2)), Q(1)}}).empty());
    CHECK(rank(m) == 1);
}

TEST_CASE("rank agrees with a dense oracle on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-3, 3), denom(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 7), c = 1 + static_cast<int>(rng() % 7);
        std::vector<std::vector<Q>> d(r, std::vector<Q>(c, Q(0)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 3) d[i][j] = frac(entry(rng), denom(rng));
        CHECK(rank(from_dense(d)) == dense_rank(d));
    }
}

TEST_CASE("rank-nullity on random matrices, and kernel vectors annihilate") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        SMat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 2) m.set(i, j, Q(entry(rng)));
        auto ker = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(ker.size()) == c);
        for (auto& v : ker) CHECK(m.apply(v).empty());
    }
}

TEST_CASE("span solver expresses vectors in the generating set") {
    SpanSolver span;
    SVec a = {{0, Q(1)}, {2, Q(2)}};
    SVec b = {{1, Q(1)}};
    SVec c = {{0, Q(2)}, {1, Q(3)}, {2, Q(4)}};  // 2a + 3b
    CHECK(span.insert(a));
    CHECK(span.insert(b));
    CHECK(!span.insert(c));
    std::vector<Q> comb;
    REQUIRE(span.coordinates(c, comb));
    SVec rebuilt = svec_scale(a, comb[0]);
    svec_axpy(rebuilt, comb[1], b);
    svec_axpy(rebuilt, comb[2], c);
    CHECK(svec_eq(rebuilt, c));
    CHECK(!span.contains({{3, Q(1)}}));
}

TEST_CASE("cohomology of small complexes") {
    // k --id--> k is exact.
    ComplexRep two;
    two.spaces = {BasedSpace(1), BasedSpace(1)};
    LinMap d(two.spaces[0], two.spaces[1]);
    d.mat.set(0, 0, Q(1));
    two.diffs = {d};
    two.exact_top = true;
    auto h = cohomology_dims(two);
    CHECK(h.dims == std::vector<int>{0, 0});
    CHECK(h.reliable == std::vector<bool>{true, true});

    // Five terms of the alternating id/0 complex: acyclic in reliable
    // degrees, top degree flagged.
    ComplexRep alt;
    for (int i = 0; i < 5; ++i) alt.spaces.push_back(BasedSpace(1));
    for (int i = 0; i < 4; ++i) {
        LinMap dd(alt.spaces[i], alt.spaces[i + 1]);
        if (i % 2 == 0) dd.mat.set(0, 0, Q(1));
        alt.diffs.push_back(dd);
    }
    auto ha = cohomology_dims(alt);
    REQUIRE(ha.dims.size() == 5);
    for (int i = 0; i < 4; ++i) {
        CHECK(ha.dims[i] == 0);
        CHECK(ha.reliable[i]);
    }
    CHECK(!ha.reliable[4]);
}

TEST_CASE("complexes with d o d != 0 are rejected with a witness") {
    ComplexRep bad;
    bad.spaces = {BasedSpace(1), BasedSpace(1), BasedSpace(1)};
    for (int i = 0; i < 2; ++i) {
        LinMap dd(bad.spaces[i], bad.spaces[i + 1]);
        dd.mat.set(0, 0, Q(1));
        bad.diffs.push_back(dd);
    }
    CHECK_THROWS_WITH_AS(cohomology_dims(bad), doctest::Contains("e0"), std::runtime_error);
}

TEST_CASE("permutation composition, sign, block sum") {
    CHECK(Perm(4).sign() == 1);
    CHECK(Perm({2, 1}).sign() == -1);
    CHECK(block_sum(Perm(1), Perm({2, 1})) == Perm({1, 3, 2}));
    std::mt19937 rng(5);
    for (int n = 2; n <= 7; ++n) {
        auto perms = all_perms(n);
        for (int t = 0; t < 20; ++t) {
            const Perm& a = perms[rng() % perms.size()];
            const Perm& b = perms[rng() % perms.size()];
            CHECK((a * b).sign() == a.sign() * b.sign());
            CHECK((a * a.inverse()).is_identity());
        }
    }
}

TEST_CASE("lex ranking round-trips") {
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_perms(n);
        for (size_t i = 0; i < perms.size(); ++i) {
            CHECK(perm_rank(perms[i]) == static_cast<int>(i));
            CHECK(perm_unrank(n, static_cast<int>(i)) == perms[i]);
        }
    }
}

TEST_CASE("adjacent factorization reproduces the permutation") {
    for (int n = 1; n <= 6; ++n)
        for (const Perm& s : all_perms(n)) {
            Perm acc(n);
            for (int f : adjacent_factorization(s)) {
                std::vector<int> sv(n);
                for (int j = 1; j <= n; ++j) sv[j - 1] = j;
                std::swap(sv[f - 1], sv[f]);
                acc = acc * Perm(sv);
            }
            CHECK(acc == s);
        }
}

TEST_CASE("doubling examples and consistency with block composition") {
    CHECK(doubling(Perm(1), 0) == Perm(2));
    CHECK(doubling(Perm({2, 1}), 1) == Perm({2, 3, 1}));
    CHECK(doubling(Perm({2, 1}), 2) == Perm({3, 1, 2}));
    for (int m = 1; m <= 5; ++m)
        for (const Perm& s : all_perms(m))
            for (int i = 1; i <= m; ++i) CHECK(doubling(s, i) == block_compose(s, i, Perm(2)));
}

TEST_CASE("cycle permutations match the displayed matrix") {
    CHECK(cycle_perm(1, 3) == Perm(4));
    CHECK(cycle_perm(2, 2) == Perm({2, 1, 3}));
    CHECK(cycle_perm(3, 2) == Perm({2, 3, 1}));
}

TEST_CASE("averaging over the regular representation") {
    ActionOnSpace reg = regular_action(3);
    CHECK(reg.valid_representation());

    // Basis vector orbit: the full orbit sum over 3! group elements.
    SVec e0 = {{0, Q(1)}};
    SVec avg = reg.average(e0);
    REQUIRE(avg.size() == 6);
    for (auto& [k, v] : avg) CHECK(v == frac(1, 6));

    // Averaging is the identity on invariants, and idempotent.
    CHECK(svec_eq(reg.average(avg), avg));
    for (int i = 1; i < 3; ++i) CHECK(svec_eq(reg.adjacent[i - 1].apply(avg), avg));

    // Invariant subspace of the regular representation is one-dimensional.
    CHECK(reg.invariant_basis().size() == 1);
    // Sign-twisted regular representation also has a one-dimensional fixed
    // space (the signed orbit sum).
    CHECK(regular_action(3, true).invariant_basis().size() == 1);
}

TEST_CASE("regular action of the 2-element group on basis vectors") {
    ActionOnSpace reg = regular_action(2);
    SVec e_id = {{0, Q(1)}};
    SVec avg = reg.average(e_id);
    SVec expect = {{0, frac(1, 2)}, {1, frac(1, 2)}};
    CHECK(svec_eq(avg, expect));
}
