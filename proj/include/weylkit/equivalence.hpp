#pragma once

#include <functional>

#include "cartan.hpp"

namespace weylkit {

/* Equivalence of Cartan schemes: bijections phi0 on indices and phi1 on
 * objects with
 *   phi1(rho_i(a)) = rho'_{phi0(i)}(phi1(a))
 *   c'^{phi1(a)}_{phi0(i) phi0(j)} = c^a_{ij}.
 * Witnesses map positions of s1 to positions of s2. */
struct EquivalenceWitness {
    std::vector<int> phi0;  // index map
    std::vector<int> phi1;  // object map
};

namespace detail {

/* Backtracking assignment of phi1 for a fixed phi0, pruned entrywise. Calls
 * sink on every complete witness; sink returns false to stop the search. */
inline bool equiv_search(const CartanScheme& s1, const CartanScheme& s2,
                         const std::vector<int>& phi0,
                         const std::function<bool(const std::vector<int>&)>& sink) {
    int n = s1.nobj();
    std::vector<int> phi1(static_cast<size_t>(n), -1), used(static_cast<size_t>(n), 0);
    std::function<bool(int)> rec = [&](int a) -> bool {
        if (a == n) return sink(phi1);
        for (int b = 0; b < n; ++b) {
            if (used[static_cast<size_t>(b)]) continue;
            bool ok = true;
            for (int i = 0; i < s1.rank && ok; ++i)
                for (int j = 0; j < s1.rank && ok; ++j)
                    if (s2.c(b, phi0[static_cast<size_t>(i)], phi0[static_cast<size_t>(j)]) !=
                        s1.c(a, i, j))
                        ok = false;
            // reflection compatibility with already assigned objects
            for (int i = 0; i < s1.rank && ok; ++i) {
                int ra = s1.rho(i, a);
                if (ra <= a) {  // image known (ra < a) or self (ra == a)
                    int expect = (ra == a) ? b : phi1[static_cast<size_t>(ra)];
                    if (s2.rho(phi0[static_cast<size_t>(i)], b) != expect) ok = false;
                }
            }
            if (!ok) continue;
            phi1[static_cast<size_t>(a)] = b;
            used[static_cast<size_t>(b)] = 1;
            if (!rec(a + 1)) return false;
            phi1[static_cast<size_t>(a)] = -1;
            used[static_cast<size_t>(b)] = 0;
        }
        return true;
    };
    return rec(0);
}

inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    do f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace detail

/* All equivalence witnesses, in lexicographic (phi0, phi1) order. */
inline std::vector<EquivalenceWitness> equivalence_witnesses(const CartanScheme& s1,
                                                             const CartanScheme& s2,
                                                             bool first_only = false) {
    if (s1.rank != s2.rank) throw error("RankMismatch", "RankMismatch");
    if (s1.nobj() != s2.nobj()) throw error("ObjectCountMismatch", "ObjectCountMismatch");
    // cheap invariant: matrices must agree as multisets
    {
        std::vector<Mat> m1 = s1.cartan, m2 = s2.cartan;
        auto key = [](const Mat& m) {
            std::vector<Int> d(m.e);
            std::sort(d.begin(), d.end());
            return d;
        };
        std::vector<std::vector<Int>> k1, k2;
        for (auto& m : m1) k1.push_back(key(m));
        for (auto& m : m2) k2.push_back(key(m));
        std::sort(k1.begin(), k1.end());
        std::sort(k2.begin(), k2.end());
        if (k1 != k2) return {};
    }
    std::vector<EquivalenceWitness> out;
    bool stop = false;
    detail::for_each_permutation(s1.rank, [&](const std::vector<int>& phi0) {
        if (stop) return;
        detail::equiv_search(s1, s2, phi0, [&](const std::vector<int>& phi1) {
            out.push_back({phi0, phi1});
            if (first_only) stop = true;
            return !stop;
        });
    });
    return out;
}

inline std::optional<EquivalenceWitness> schemes_equivalent(const CartanScheme& s1,
                                                            const CartanScheme& s2) {
    auto w = equivalence_witnesses(s1, s2, true);
    if (w.empty()) return std::nullopt;
    return w.front();
}

/* Integer serialization, independent of object ids: rank, object count,
 * reflection tables, matrices row-major in object order. */
inline std::vector<Int> serialize_scheme(const CartanScheme& s) {
    std::vector<Int> out = {s.rank, s.nobj()};
    for (int i = 0; i < s.rank; ++i)
        for (int a = 0; a < s.nobj(); ++a) out.push_back(s.rho(i, a));
    for (int a = 0; a < s.nobj(); ++a)
        for (Int x : s.cartan[static_cast<size_t>(a)].e) out.push_back(x);
    return out;
}

/* Relabel s by index permutation phi0 and object permutation phi1 (both as
 * position maps old -> new). Object ids are replaced by canonical names. */
inline CartanScheme transform_scheme(const CartanScheme& s, const std::vector<int>& phi0,
                                     const std::vector<int>& phi1) {
    static const char* names = "xyzuvw";
    CartanScheme t;
    t.rank = s.rank;
    t.objects.resize(static_cast<size_t>(s.nobj()));
    for (int a = 0; a < s.nobj(); ++a) {
        int na = phi1[static_cast<size_t>(a)];
        t.objects[static_cast<size_t>(na)] =
            (na < 6 && s.nobj() <= 6) ? std::string(1, names[na]) : ("o" + std::to_string(na + 1));
    }
    t.refl.assign(static_cast<size_t>(s.rank), std::vector<int>(static_cast<size_t>(s.nobj())));
    for (int i = 0; i < s.rank; ++i)
        for (int a = 0; a < s.nobj(); ++a)
            t.refl[static_cast<size_t>(phi0[static_cast<size_t>(i)])]
                  [static_cast<size_t>(phi1[static_cast<size_t>(a)])] =
                      phi1[static_cast<size_t>(s.rho(i, a))];
    t.cartan.assign(static_cast<size_t>(s.nobj()), Mat(s.rank));
    for (int a = 0; a < s.nobj(); ++a)
        for (int i = 0; i < s.rank; ++i)
            for (int j = 0; j < s.rank; ++j)
                t.cartan[static_cast<size_t>(phi1[static_cast<size_t>(a)])].at(
                    phi0[static_cast<size_t>(i)], phi0[static_cast<size_t>(j)]) = s.c(a, i, j);
    return t;
}

/* Lexicographically minimal serialization over all relabelings; the scheme
 * realizing it is the canonical representative used for deduplication. */
inline std::pair<std::vector<Int>, CartanScheme> canonical_form(const CartanScheme& s) {
    std::optional<std::vector<Int>> best;
    CartanScheme best_scheme;
    detail::for_each_permutation(s.rank, [&](const std::vector<int>& phi0) {
        detail::for_each_permutation(s.nobj(), [&](const std::vector<int>& phi1) {
            CartanScheme t = transform_scheme(s, phi0, phi1);
            std::vector<Int> k = serialize_scheme(t);
            if (!best || k < *best) {
                best = k;
                best_scheme = t;
            }
        });
    });
    return {*best, best_scheme};
}

inline std::vector<Int> canonical_key(const CartanScheme& s) { return canonical_form(s).first; }

}  // namespace weylkit
