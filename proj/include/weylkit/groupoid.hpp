#pragma once

#include <deque>
#include <map>

#include "cartan.hpp"

namespace weylkit {

/* Matrix of the simple reflection with index i at object a, acting on column
 * vectors in the root lattice of a: basis vector e_j maps to e_j - c^a_ij e_i,
 * so the matrix is the identity except for row i, where entry (i,j) equals
 * delta_ij - c^a_ij. It is its own inverse up to the object change: the
 * reflection with index i at rho_i(a) undoes it. */
inline Mat simple_reflection(const CartanScheme& s, int i, int a) {
    Mat m = Mat::identity(s.rank);
    for (int j = 0; j < s.rank; ++j) m.at(i, j) = (i == j ? 1 : 0) - s.c(a, i, j);
    return m;
}

/* Apply the reflection directly to a vector; cheaper than a matrix product. */
inline Vec reflect(const CartanScheme& s, int i, int a, const Vec& v) {
    Vec w = v;
    Int acc = 0;
    for (int j = 0; j < s.rank; ++j) acc += s.c(a, i, j) * v[static_cast<size_t>(j)];
    w[static_cast<size_t>(i)] = v[static_cast<size_t>(i)] - acc;
    return w;
}

/* A morphism is stored with the word that produced it: word[k] is the k-th
 * letter applied (0-based index), so the first letter acts at the source and
 * the matrix is the product of the letter matrices with the last letter
 * leftmost. */
struct Morphism {
    int source = 0;
    int target = 0;
    Mat m{1};
    std::vector<int> word;
};

/* Objects visited by a word read from the source: trail[0] = source,
 * trail[k] = object after k letters, trail.back() = target. */
inline std::vector<int> object_trail(const CartanScheme& s, int source,
                                     const std::vector<int>& word) {
    std::vector<int> trail{source};
    for (int letter : word) trail.push_back(s.rho(letter, trail.back()));
    return trail;
}

inline Morphism word_morphism(const CartanScheme& s, int source, const std::vector<int>& word) {
    Morphism m;
    m.source = source;
    m.target = source;
    m.m = Mat::identity(s.rank);
    m.word = word;
    for (int letter : word) {
        m.m = simple_reflection(s, letter, m.target) * m.m;
        m.target = s.rho(letter, m.target);
    }
    return m;
}

/* Inverse: reverse the word; the letter that acted at object o is undone by
 * the same letter acting at rho_letter(o). */
inline Morphism inverse_morphism(const CartanScheme& s, const Morphism& m) {
    std::vector<int> rev(m.word.rbegin(), m.word.rend());
    Morphism inv = word_morphism(s, m.target, rev);
    inv.word = rev;
    return inv;
}

struct Groupoid {
    enum class Status { Finite, CapExceeded, Truncated };
    Status status = Status::Finite;
    int nobj = 0;
    std::vector<Morphism> all;                       // breadth-first discovery order
    std::vector<std::vector<std::vector<int>>> hom;  // hom[source][target] -> indices into all
};

/* Breadth-first enumeration seeded with the identity at every object.
 * Children extend the parent word by one letter acting at the parent target,
 * letters tried in ascending order, so discovery order is by length and then
 * lexicographic. Morphisms are deduplicated per hom-set by matrix; the first
 * discovered representative of each hom-set doubles as a spanning tree (its
 * word is a shortest one). Stops with CapExceeded once a single hom-set
 * reaches `cap` elements; with max_len >= 0 the search is cut off at that
 * word length and reports Truncated if anything was left unexplored. */
inline Groupoid generate_groupoid(const CartanScheme& s, int cap = 100000, int max_len = -1) {
    Groupoid g;
    g.nobj = s.nobj();
    g.hom.assign(static_cast<size_t>(g.nobj),
                 std::vector<std::vector<int>>(static_cast<size_t>(g.nobj)));
    std::vector<std::vector<std::map<Mat, int>>> seen(
        static_cast<size_t>(g.nobj),
        std::vector<std::map<Mat, int>>(static_cast<size_t>(g.nobj)));

    std::deque<int> queue;
    auto add = [&](Morphism&& m) -> bool {
        auto& cell = seen[static_cast<size_t>(m.source)][static_cast<size_t>(m.target)];
        if (cell.count(m.m)) return false;
        int idx = static_cast<int>(g.all.size());
        cell.emplace(m.m, idx);
        g.hom[static_cast<size_t>(m.source)][static_cast<size_t>(m.target)].push_back(idx);
        g.all.push_back(std::move(m));
        queue.push_back(idx);
        if (static_cast<int>(cell.size()) > cap) {
            g.status = Groupoid::Status::CapExceeded;
            return true;
        }
        return false;
    };

    for (int a = 0; a < g.nobj; ++a) {
        Morphism id;
        id.source = a;
        id.target = a;
        id.m = Mat::identity(s.rank);
        if (add(std::move(id))) return g;
    }
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        if (max_len >= 0 && static_cast<int>(g.all[static_cast<size_t>(idx)].word.size()) >= max_len) {
            g.status = Groupoid::Status::Truncated;
            continue;
        }
        for (int i = 0; i < s.rank; ++i) {
            const Morphism& cur = g.all[static_cast<size_t>(idx)];
            Morphism child;
            child.source = cur.source;
            child.target = s.rho(i, cur.target);
            child.m = simple_reflection(s, i, cur.target) * cur.m;
            child.word = cur.word;
            child.word.push_back(i);
            if (add(std::move(child))) return g;
        }
    }
    return g;
}

inline size_t hom_size(const Groupoid& g, int a, int b) {
    return g.hom[static_cast<size_t>(a)][static_cast<size_t>(b)].size();
}

inline size_t total_size(const Groupoid& g) { return g.all.size(); }

inline size_t max_word_length_from(const Groupoid& g, int a) {
    size_t best = 0;
    for (int b = 0; b < g.nobj; ++b)
        for (int idx : g.hom[static_cast<size_t>(a)][static_cast<size_t>(b)])
            best = std::max(best, g.all[static_cast<size_t>(idx)].word.size());
    return best;
}

/* First discovered morphism from `base` to each object; words are shortest. */
inline std::vector<Morphism> spanning_tree(const Groupoid& g, int base) {
    std::vector<Morphism> x;
    for (int b = 0; b < g.nobj; ++b) {
        const auto& cell = g.hom[static_cast<size_t>(base)][static_cast<size_t>(b)];
        if (cell.empty()) throw error("NotConnected", "NotConnected: no morphism to object");
        x.push_back(g.all[static_cast<size_t>(cell[0])]);
    }
    return x;
}

inline std::vector<Mat> stabilizer_matrices(const Groupoid& g, int base) {
    std::vector<Mat> out;
    for (int idx : g.hom[static_cast<size_t>(base)][static_cast<size_t>(base)])
        out.push_back(g.all[static_cast<size_t>(idx)].m);
    return out;
}

}  // namespace weylkit
