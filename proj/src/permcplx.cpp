#include "opl/permcplx.hpp"

#include <algorithm>

namespace opl {

PermChain perm_differential(const Perm& sigma) {
    const int m = sigma.size();
    std::map<Perm, Q> acc;
    for (int i = 0; i <= m + 1; ++i) {
        Q s(i % 2 == 0 ? 1 : -1);
        Perm d = doubling(sigma, i);
        acc[d] += s;
    }
    PermChain out;
    for (auto& [p, c] : acc)
        if (!is_zero(c)) out.emplace_back(p, c);
    return out;
}

PermChain perm_differential_chain(const PermChain& chain) {
    std::map<Perm, Q> acc;
    for (auto& [p, c] : chain)
        for (auto& [q, w] : perm_differential(p)) acc[q] += c * w;
    PermChain out;
    for (auto& [p, c] : acc)
        if (!is_zero(c)) out.emplace_back(p, c);
    return out;
}

GradeData grade(const Perm& sigma) {
    const int n = sigma.size();
    GradeData g;
    if (sigma.is_identity()) {
        g.a = n - 1;
        g.b = 0;
        g.c = 0;
        g.core = Perm(1);
        g.primitive = Perm(1);
        return g;
    }
    int a = 0;
    while (a < n && sigma.of(a + 1) == a + 1) ++a;
    int c = 0;
    while (c < n && sigma.of(n - c) == n - c) ++c;
    g.a = a;
    g.c = c;
    const int k = n - a - c;
    std::vector<int> core(k);
    for (int s = 1; s <= k; ++s) core[s - 1] = sigma.of(a + s) - a;
    g.core = Perm(core);
    for (int s = 1; s < k; ++s)
        if (g.core.of(s + 1) == g.core.of(s) + 1) ++g.b;
    g.primitive = primitive_contraction(sigma);
    return g;
}

Perm primitive_contraction(const Perm& sigma) {
    if (sigma.is_identity()) return Perm(1);
    GradeData g;
    {
        // Recompute the core without recursing into primitive_contraction.
        const int n = sigma.size();
        int a = 0;
        while (a < n && sigma.of(a + 1) == a + 1) ++a;
        int c = 0;
        while (c < n && sigma.of(n - c) == n - c) ++c;
        const int k = n - a - c;
        std::vector<int> core(k);
        for (int s = 1; s <= k; ++s) core[s - 1] = sigma.of(a + s) - a;
        g.core = Perm(core);
    }
    const Perm& w = g.core;
    const int k = w.size();
    // Maximal runs of doubled strings in the core.
    std::vector<int> run_start;
    run_start.push_back(1);
    for (int s = 1; s < k; ++s)
        if (w.of(s + 1) != w.of(s) + 1) run_start.push_back(s + 1);
    const int r = static_cast<int>(run_start.size());
    // Runs are ordered by position; their images are value intervals, so
    // ranking the interval starts gives the contracted permutation.
    std::vector<int> starts(r);
    for (int i = 0; i < r; ++i) starts[i] = w.of(run_start[i]);
    std::vector<int> kappa(r);
    for (int i = 0; i < r; ++i) {
        int rank = 1;
        for (int j = 0; j < r; ++j)
            if (starts[j] < starts[i]) ++rank;
        kappa[i] = rank;
    }
    return Perm(kappa);
}

bool is_primitive(const Perm& sigma) { return grade(sigma).grade() == 0; }

std::map<Perm, std::vector<Perm>> block_decompose(int m) {
    std::map<Perm, std::vector<Perm>> blocks;
    for (const Perm& s : all_perms(m)) blocks[primitive_contraction(s)].push_back(s);
    return blocks;
}

ComplexRep perm_complex(int cap) {
    ComplexRep c;
    for (int m = 1; m <= cap; ++m) {
        BasedSpace sp;
        for (const Perm& s : all_perms(m)) sp.labels.push_back(s.str());
        c.spaces.push_back(std::move(sp));
    }
    for (int m = 1; m < cap; ++m) {
        LinMap d(c.spaces[m - 1], c.spaces[m]);
        for (const Perm& s : all_perms(m)) {
            int col = perm_rank(s);
            for (auto& [q, w] : perm_differential(s)) d.mat.set(perm_rank(q), col, w);
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

ComplexRep block_complex(const Perm& kappa, int cap) {
    ComplexRep c;
    std::vector<std::vector<Perm>> members(cap + 1);
    std::vector<std::map<Perm, int>> index(cap + 1);
    for (int m = 1; m <= cap; ++m) {
        for (const Perm& s : all_perms(m)) {
            if (primitive_contraction(s) == kappa) {
                index[m][s] = static_cast<int>(members[m].size());
                members[m].push_back(s);
            }
        }
        BasedSpace sp;
        for (const Perm& s : members[m]) sp.labels.push_back(s.str());
        c.spaces.push_back(std::move(sp));
    }
    for (int m = 1; m < cap; ++m) {
        LinMap d(c.spaces[m - 1], c.spaces[m]);
        for (size_t j = 0; j < members[m].size(); ++j) {
            for (auto& [q, w] : perm_differential(members[m][j])) {
                auto it = index[m + 1].find(q);
                if (it == index[m + 1].end())
                    throw std::logic_error("differential left the block of " + kappa.str());
                d.mat.set(it->second, static_cast<int>(j), w);
            }
        }
        c.diffs.push_back(std::move(d));
    }
    return c;
}

Cohomology block_acyclicity(const Perm& kappa, int cap) {
    return cohomology_dims(block_complex(kappa, cap));
}

ComplexRep andulka(int cap) {
    ComplexRep c;
    for (int i = 0; i < cap; ++i) c.spaces.push_back(BasedSpace(1, "a"));
    for (int i = 0; i + 1 < cap; ++i) {
        LinMap d(c.spaces[i], c.spaces[i + 1]);
        if (i % 2 == 0) d.mat.set(0, 0, Q(1));
        c.diffs.push_back(std::move(d));
    }
    return c;
}

}  // namespace opl
