#include "opl/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opl {

Perm::Perm(int n) : v_(n) { std::iota(v_.begin(), v_.end(), 1); }

Perm::Perm(std::vector<int> one_line) : v_(std::move(one_line)) {
    std::vector<bool> seen(v_.size(), false);
    for (int x : v_) {
        if (x < 1 || x > static_cast<int>(v_.size()) || seen[x - 1])
            throw std::invalid_argument("not a permutation");
        seen[x - 1] = true;
    }
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (of(i) != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> w(v_.size());
    for (int i = 1; i <= size(); ++i) w[of(i) - 1] = i;
    return Perm(std::move(w));
}

int Perm::sign() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (v_[i] > v_[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch in composition");
    std::vector<int> w(a.size());
    for (int i = 1; i <= a.size(); ++i) w[i - 1] = a.of(b.of(i));
    return Perm(std::move(w));
}

std::uint64_t Perm::key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < size(); ++i) k |= static_cast<std::uint64_t>(v_[i]) << (4 * i);
    return k;
}

std::string Perm::str() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v_[i]);
    }
    return s + ")";
}

Perm block_sum(const Perm& a, const Perm& b) {
    std::vector<int> w;
    w.reserve(a.size() + b.size());
    for (int i = 1; i <= a.size(); ++i) w.push_back(a.of(i));
    for (int i = 1; i <= b.size(); ++i) w.push_back(b.of(i) + a.size());
    return Perm(std::move(w));
}

Perm block_compose(const Perm& sigma, int i, const Perm& tau) {
    const int m = sigma.size(), n = tau.size();
    if (i < 1 || i > m) throw std::invalid_argument("block_compose: slot out of range");
    auto width = [&](int s) { return s == i ? n : 1; };
    std::vector<int> out_base(m + 1, 0);
    for (int s = 1; s <= m; ++s)
        for (int u = 1; u <= m; ++u)
            if (sigma.of(u) < sigma.of(s)) out_base[s] += width(u);
    std::vector<int> w(m + n - 1);
    for (int j = 1; j <= m + n - 1; ++j) {
        int s, t;
        if (j < i) {
            s = j, t = 1;
        } else if (j < i + n) {
            s = i, t = j - i + 1;
        } else {
            s = j - n + 1, t = 1;
        }
        w[j - 1] = out_base[s] + (s == i ? tau.of(t) : 1);
    }
    return Perm(std::move(w));
}

Perm doubling(const Perm& sigma, int i) {
    const int m = sigma.size();
    if (i < 0 || i > m + 1) throw std::invalid_argument("doubling: index out of range");
    if (i == 0) return block_sum(Perm(1), sigma);
    if (i == m + 1) return block_sum(sigma, Perm(1));
    std::vector<int> w(m + 1);
    w[i - 1] = sigma.of(i);
    w[i] = sigma.of(i) + 1;
    for (int j = 1; j <= m; ++j) {
        if (j == i) continue;
        int jp = j + (j > i ? 1 : 0);
        w[jp - 1] = sigma.of(j) + (sigma.of(j) > sigma.of(i) ? 1 : 0);
    }
    return Perm(std::move(w));
}

Perm cycle_perm(int k, int n) {
    if (k < 1 || k > n + 1) throw std::invalid_argument("cycle_perm: k out of range");
    std::vector<int> w(n + 1);
    for (int j = 1; j <= n + 1; ++j) {
        if (j < k)
            w[j - 1] = j + 1;
        else if (j == k)
            w[j - 1] = 1;
        else
            w[j - 1] = j;
    }
    return Perm(std::move(w));
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    out.reserve(factorial(n));
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int perm_rank(const Perm& sigma) {
    const int n = sigma.size();
    int r = 0;
    for (int i = 1; i <= n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j <= n; ++j)
            if (sigma.of(j) < sigma.of(i)) ++smaller;
        r += smaller * static_cast<int>(factorial(n - i));
    }
    return r;
}

Perm perm_unrank(int n, int rank) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    for (int i = n - 1; i >= 0; --i) {
        int f = static_cast<int>(factorial(i));
        int d = rank / f;
        rank %= f;
        w.push_back(avail[d]);
        avail.erase(avail.begin() + d);
    }
    return Perm(std::move(w));
}

std::vector<int> adjacent_factorization(const Perm& sigma) {
    std::vector<int> w = sigma.one_line();
    std::vector<int> factors;
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                factors.push_back(static_cast<int>(i) + 1);
                again = true;
                break;
            }
        }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace opl
