#pragma once

#include <map>
#include <set>
#include <string>

#include "base.hpp"

namespace weylkit {

/* A Cartan scheme: a finite ordered object set A, an index set I = {1..rank},
 * one involution rho_i of A per index, and one generalized Cartan matrix C^a
 * per object, subject to
 *   (M1) c_ii = 2 and c_jk <= 0 for j != k        (each C^a)
 *   (M2) c_ij = 0 implies c_ji = 0                (each C^a)
 *   (C1) rho_i o rho_i = id
 *   (C2) c^a_ij = c^{rho_i(a)}_ij.
 * Objects are identified by strings externally; internally everything is a
 * 0-based position into `objects`. Index arguments in the public API follow
 * the internal 0-based convention; error messages render them 1-based. */
struct CartanScheme {
    int rank = 0;
    std::vector<std::string> objects;
    std::vector<std::vector<int>> refl;  // refl[i][a] = rho_i(a)
    std::vector<Mat> cartan;             // cartan[a]

    int nobj() const { return static_cast<int>(objects.size()); }
    int rho(int i, int a) const { return refl[static_cast<size_t>(i)][static_cast<size_t>(a)]; }
    Int c(int a, int i, int j) const { return cartan[static_cast<size_t>(a)].at(i, j); }
    int object_index(const std::string& id) const {
        for (int a = 0; a < nobj(); ++a)
            if (objects[static_cast<size_t>(a)] == id) return a;
        throw error("UnknownObject", "UnknownObject(" + id + ")");
    }

    friend bool operator==(const CartanScheme& a, const CartanScheme& b) {
        return a.rank == b.rank && a.objects == b.objects && a.refl == b.refl &&
               a.cartan == b.cartan;
    }
};

inline Mat validate_cartan_matrix(const Mat& m) {
    if (m.n < 1 || static_cast<size_t>(m.n) * m.n != m.e.size())
        throw error("NotSquare", "NotSquare");
    for (int i = 0; i < m.n; ++i) {
        if (m.at(i, i) != 2)
            throw error("DiagonalNotTwo", "DiagonalNotTwo(" + std::to_string(i + 1) + ")");
        for (int j = 0; j < m.n; ++j) {
            if (i == j) continue;
            if (m.at(i, j) > 0)
                throw error("PositiveOffDiagonal", "PositiveOffDiagonal(" +
                                                       std::to_string(i + 1) + "," +
                                                       std::to_string(j + 1) + ")");
            if (m.at(i, j) == 0 && m.at(j, i) != 0)
                throw error("AsymmetricZero", "AsymmetricZero(" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ")");
        }
    }
    return m;
}

namespace detail {
inline void check_shape(const CartanScheme& s) {
    if (s.rank < 1) throw error("BadRank", "BadRank");
    if (s.objects.empty()) throw error("NoObjects", "NoObjects");
    std::set<std::string> ids(s.objects.begin(), s.objects.end());
    if (ids.size() != s.objects.size()) throw error("DuplicateObject", "DuplicateObject");
    if (static_cast<int>(s.refl.size()) != s.rank)
        throw error("BadReflections", "BadReflections");
    for (const auto& r : s.refl)
        if (r.size() != s.objects.size()) throw error("BadReflections", "BadReflections");
    if (s.cartan.size() != s.objects.size()) throw error("BadMatrices", "BadMatrices");
    for (const auto& m : s.cartan)
        if (m.n != s.rank) throw error("BadMatrices", "BadMatrices");
}
}  // namespace detail

/* Full validation: shape, M1, M2, C1, C2. */
inline CartanScheme validate_scheme(const CartanScheme& s) {
    detail::check_shape(s);
    for (int i = 0; i < s.rank; ++i)
        for (int a = 0; a < s.nobj(); ++a) {
            int b = s.rho(i, a);
            if (b < 0 || b >= s.nobj() || s.rho(i, b) != a)
                throw error("ReflectionNotInvolutive",
                            "ReflectionNotInvolutive(" + std::to_string(i + 1) + ")");
        }
    for (int a = 0; a < s.nobj(); ++a) validate_cartan_matrix(s.cartan[static_cast<size_t>(a)]);
    for (int a = 0; a < s.nobj(); ++a)
        for (int i = 0; i < s.rank; ++i) {
            int b = s.rho(i, a);
            for (int j = 0; j < s.rank; ++j)
                if (s.c(a, i, j) != s.c(b, i, j))
                    throw error("C2Violation", "C2Violation(" + s.objects[static_cast<size_t>(a)] +
                                                   "," + std::to_string(i + 1) + "," +
                                                   std::to_string(j + 1) + ")");
        }
    return s;
}

/* Weak validation: shape, c_ii = 2, and C1 only. Used to demonstrate that
 * root-system data forces the remaining axioms (M1, M2, C2). */
inline CartanScheme validate_scheme_weak(const CartanScheme& s) {
    detail::check_shape(s);
    for (int i = 0; i < s.rank; ++i)
        for (int a = 0; a < s.nobj(); ++a) {
            int b = s.rho(i, a);
            if (b < 0 || b >= s.nobj() || s.rho(i, b) != a)
                throw error("ReflectionNotInvolutive",
                            "ReflectionNotInvolutive(" + std::to_string(i + 1) + ")");
        }
    for (int a = 0; a < s.nobj(); ++a)
        for (int i = 0; i < s.rank; ++i)
            if (s.c(a, i, i) != 2)
                throw error("DiagonalNotTwo", "DiagonalNotTwo(" + std::to_string(i + 1) + ")");
    return s;
}

/* True iff the group generated by the rho_i acts transitively on A. */
inline bool is_connected(const CartanScheme& s) {
    std::vector<char> seen(static_cast<size_t>(s.nobj()), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int i = 0; i < s.rank; ++i) {
            int b = s.rho(i, a);
            if (!seen[static_cast<size_t>(b)]) {
                seen[static_cast<size_t>(b)] = 1;
                ++count;
                stack.push_back(b);
            }
        }
    }
    return count == s.nobj();
}

inline bool is_standard(const CartanScheme& s) {
    for (int a = 1; a < s.nobj(); ++a)
        if (!(s.cartan[static_cast<size_t>(a)] == s.cartan[0])) return false;
    return true;
}

/* Restriction to a nonempty index subset J (0-based, ascending): same
 * objects and reflections, submatrices (c^a_ij) for i,j in J. */
inline CartanScheme restrict_scheme(const CartanScheme& s, const std::vector<int>& J) {
    if (J.empty()) throw error("EmptySubset", "EmptySubset");
    for (int i : J)
        if (i < 0 || i >= s.rank) throw error("BadIndex", "BadIndex(" + std::to_string(i + 1) + ")");
    CartanScheme r;
    r.rank = static_cast<int>(J.size());
    r.objects = s.objects;
    for (int i : J) r.refl.push_back(s.refl[static_cast<size_t>(i)]);
    for (int a = 0; a < s.nobj(); ++a) {
        Mat m(r.rank);
        for (int p = 0; p < r.rank; ++p)
            for (int q = 0; q < r.rank; ++q)
                m.at(p, q) = s.c(a, J[static_cast<size_t>(p)], J[static_cast<size_t>(q)]);
        r.cartan.push_back(std::move(m));
    }
    return r;
}

/* Connected components of one matrix's nonzero pattern, sorted ascending. */
inline std::vector<std::vector<int>> decompose_cartan_matrix(const Mat& m) {
    std::vector<int> parent(static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != 0 || m.at(j, i) != 0) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
            }
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < m.n; ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, blk] : blocks) out.push_back(blk);
    return out;
}

/* Finest partition of I such that c^a_ij = 0 across blocks at every object.
 * Union-find on the relation "c^a_ij != 0 for some a". Blocks come back
 * sorted, each ascending. */
inline std::vector<std::vector<int>> decompose_scheme(const CartanScheme& s) {
    std::vector<int> parent(static_cast<size_t>(s.rank));
    for (int i = 0; i < s.rank; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (int a = 0; a < s.nobj(); ++a)
        for (int i = 0; i < s.rank; ++i)
            for (int j = i + 1; j < s.rank; ++j)
                if (s.c(a, i, j) != 0 || s.c(a, j, i) != 0) {
                    int ri = find(i), rj = find(j);
                    if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
                }
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < s.rank; ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, blk] : blocks) out.push_back(blk);
    return out;
}

/* Object change diagram: undirected labeled multigraph with an edge (a,b,i)
 * whenever rho_i moves a to b. Stored with a < b in object order. */
struct ObjectChangeDiagram {
    std::vector<std::string> vertices;
    std::vector<std::array<int, 3>> edges;  // (a, b, i), a < b, sorted
};

inline ObjectChangeDiagram object_change_diagram(const CartanScheme& s) {
    ObjectChangeDiagram d;
    d.vertices = s.objects;
    for (int a = 0; a < s.nobj(); ++a)
        for (int i = 0; i < s.rank; ++i) {
            int b = s.rho(i, a);
            if (a < b) d.edges.push_back({a, b, i});
        }
    std::sort(d.edges.begin(), d.edges.end());
    return d;
}

/* Degree-sequence style signature, stable under nothing; pair with canonical
 * schemes when comparing up to equivalence. */
inline std::string diagram_signature(const CartanScheme& s) {
    ObjectChangeDiagram d = object_change_diagram(s);
    std::string out;
    for (const auto& e : d.edges) {
        if (!out.empty()) out += ";";
        out += d.vertices[static_cast<size_t>(e[0])] + "-" + d.vertices[static_cast<size_t>(e[1])] +
               ":" + std::to_string(e[2] + 1);
    }
    return out;
}

namespace detail {
inline std::vector<std::vector<int>> permutation_closure(int n,
                                                         std::vector<std::vector<int>> gens) {
    std::vector<int> id(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
    std::set<std::vector<int>> seen = {id};
    std::vector<std::vector<int>> queue = {id};
    for (size_t h = 0; h < queue.size(); ++h) {
        for (const auto& g : gens) {
            std::vector<int> prod(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k)
                prod[static_cast<size_t>(k)] = g[static_cast<size_t>(queue[h][static_cast<size_t>(k)])];
            if (seen.insert(prod).second) queue.push_back(prod);
        }
    }
    return queue;
}
}  // namespace detail

/* The standard rank-n scheme on the left cosets gH in Sym(n+1): object set
 * {gH}, rho_i(gH) = ((i,i+1)g)H, every Cartan matrix the tridiagonal -1
 * matrix. Permutations are given as images of 0..n in one-line notation.
 * Object ids are the one-line notation of the lexicographically smallest
 * coset member, written 1-based. */
inline CartanScheme coset_scheme(int n, const std::vector<std::vector<int>>& subgroup_gens) {
    if (n < 1 || n > 7) throw error("BadRank", "BadRank");
    int m = n + 1;
    for (const auto& g : subgroup_gens) {
        if (static_cast<int>(g.size()) != m) throw error("InvalidPermutation", "InvalidPermutation");
        std::vector<char> hit(static_cast<size_t>(m), 0);
        for (int x : g) {
            if (x < 0 || x >= m || hit[static_cast<size_t>(x)])
                throw error("InvalidPermutation", "InvalidPermutation");
            hit[static_cast<size_t>(x)] = 1;
        }
    }
    auto H = detail::permutation_closure(m, subgroup_gens);
    std::set<std::vector<int>> Hset(H.begin(), H.end());

    // enumerate Sym(m), group into left cosets gH
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
    std::map<std::vector<int>, int> coset_of;  // permutation -> coset id (by rep)
    std::vector<std::vector<int>> reps;
    do {
        if (coset_of.count(perm)) continue;
        // coset gH = { g*h : h in H }, with (g*h)(k) = g(h(k))
        std::vector<std::vector<int>> members;
        for (const auto& h : H) {
            std::vector<int> gh(static_cast<size_t>(m));
            for (int k = 0; k < m; ++k)
                gh[static_cast<size_t>(k)] = perm[static_cast<size_t>(h[static_cast<size_t>(k)])];
            members.push_back(gh);
        }
        std::sort(members.begin(), members.end());
        int id = static_cast<int>(reps.size());
        reps.push_back(members.front());
        for (auto& g : members) coset_of[g] = id;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // order objects by representative
    std::vector<int> order(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return reps[static_cast<size_t>(x)] < reps[static_cast<size_t>(y)]; });
    std::vector<int> pos(reps.size());
    for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);

    CartanScheme s;
    s.rank = n;
    for (int oi : order) {
        std::string id;
        for (int x : reps[static_cast<size_t>(oi)]) id += std::to_string(x + 1);
        s.objects.push_back(id);
    }
    Mat an(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) an.at(i, j) = (i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0));
    s.cartan.assign(reps.size(), an);
    s.refl.assign(static_cast<size_t>(n), std::vector<int>(reps.size()));
    for (int i = 0; i < n; ++i)
        for (size_t ci = 0; ci < reps.size(); ++ci) {
            // rho_i(gH) = (s_i g)H with s_i = (i, i+1)
            std::vector<int> sg = reps[ci];
            for (int k = 0; k < m; ++k) {
                int v = sg[static_cast<size_t>(k)];
                if (v == i) sg[static_cast<size_t>(k)] = i + 1;
                else if (v == i + 1) sg[static_cast<size_t>(k)] = i;
            }
            s.refl[static_cast<size_t>(i)][static_cast<size_t>(pos[ci])] =
                pos[static_cast<size_t>(coset_of.at(sg))];
        }
    return validate_scheme(s);
}

}  // namespace weylkit
