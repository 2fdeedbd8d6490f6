#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

using Int = long long;
using Vec = std::vector<Int>;

/* Every failure mode carries a stable kind tag plus a human-readable
 * rendering, e.g. kind "AsymmetricZero", what() "AsymmetricZero(1,2)".
 * Indices in messages are 1-based, objects appear by id. */
struct error : std::runtime_error {
    std::string kind;
    error(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

/* Dense square integer matrix, row-major. Column convention throughout:
 * a morphism matrix stores the image of the j-th basis vector in column j,
 * so vectors transform as v -> M*v and composition is matrix product with
 * the rightmost factor acting first. */
struct Mat {
    int n = 0;
    std::vector<Int> e;

    Mat() = default;
    explicit Mat(int nn) : n(nn), e(static_cast<size_t>(nn) * nn, 0) {}
    Mat(int nn, std::vector<Int> ee) : n(nn), e(std::move(ee)) {}

    Int& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    Int at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.n == b.n && a.e == b.e;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
    friend bool operator<(const Mat& a, const Mat& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.e < b.e;
    }
};

inline Mat operator*(const Mat& a, const Mat& b) {
    Mat c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            Int x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < a.n; ++j) c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

inline Vec operator*(const Mat& m, const Vec& v) {
    Vec r(static_cast<size_t>(m.n), 0);
    for (int i = 0; i < m.n; ++i) {
        Int s = 0;
        for (int j = 0; j < m.n; ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

/* Fraction-free Gaussian elimination (Bareiss). Exact for the small
 * unimodular matrices that arise here. */
inline Int det(const Mat& m) {
    int n = m.n;
    if (n == 0) return 1;
    std::vector<__int128> a(m.e.begin(), m.e.end());
    auto at = [&](int i, int j) -> __int128& { return a[static_cast<size_t>(i) * n + j]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return static_cast<Int>(sign * at(n - 1, n - 1));
}

inline bool sign_pure(const Vec& v) {
    bool pos = false, neg = false;
    for (Int x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    return !(pos && neg);
}

inline bool is_nonneg(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

inline Vec negate(const Vec& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline Vec unit_vec(int n, int i) {
    Vec v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
}

/* Orders of finite-order elements of GL_n(Z): an element of order d needs a
 * faithful sum of cyclotomic blocks, so d = lcm(d_1,...,d_k) with
 * sum phi(d_i) <= n. Enumerated exactly for the ranks used here. */
inline std::vector<int> finite_order_candidates(int n) {
    auto phi = [](int d) {
        int r = d;
        for (int p = 2; p * p <= d; ++p)
            if (d % p == 0) {
                r -= r / p;
                while (d % p == 0) d /= p;
            }
        if (d > 1) r -= r / d;
        return r;
    };
    // collect all lcm values reachable with a phi-partition fitting in n
    int dmax = 2;
    for (int d = 1; d <= 64; ++d)
        if (phi(d) <= n) dmax = std::max(dmax, d);
    std::vector<int> result;
    std::vector<std::pair<int, int>> stack = {{n, 1}};  // (remaining budget, lcm)
    std::vector<char> seen;
    auto key = [&](int b, int l) { return b * 4096 + l; };
    seen.assign(4096 * (n + 1) + 4096, 0);
    while (!stack.empty()) {
        auto [b, l] = stack.back();
        stack.pop_back();
        if (l < 4096 && seen[static_cast<size_t>(key(b, l))]) continue;
        if (l < 4096) seen[static_cast<size_t>(key(b, l))] = 1;
        result.push_back(l);
        for (int d = 2; d <= dmax; ++d) {
            int p = phi(d);
            if (p <= b) {
                long long nl = std::lcm(static_cast<long long>(l), static_cast<long long>(d));
                if (nl < 4096) stack.push_back({b - p, static_cast<int>(nl)});
            }
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

/* Exact test for finite multiplicative order of an integer matrix. Powers
 * are computed iteratively; entries past the clamp make the power provably
 * different from the identity, and the flag is sticky, so the decision
 * stays exact even when the true powers overflow. */
inline bool has_finite_order(const Mat& g) {
    static constexpr Int CLAMP = (Int{1} << 62);
    int n = g.n;
    std::vector<int> cands = finite_order_candidates(n);
    int maxd = cands.empty() ? 1 : cands.back();
    Mat p = Mat::identity(n);
    bool big = false;
    for (int d = 1; d <= maxd; ++d) {
        if (!big) {
            Mat q(n);
            bool over = false;
            for (int i = 0; i < n && !over; ++i)
                for (int j = 0; j < n; ++j) {
                    __int128 s = 0;
                    for (int k = 0; k < n; ++k)
                        s += static_cast<__int128>(p.at(i, k)) * g.at(k, j);
                    if (s > CLAMP || s < -CLAMP) {
                        over = true;
                        break;
                    }
                    q.at(i, j) = static_cast<Int>(s);
                }
            if (over) big = true;
            else p = std::move(q);
        }
        if (big) continue;
        if (std::binary_search(cands.begin(), cands.end(), d) && p.is_identity()) return true;
    }
    return false;
}

}  // namespace weylkit
