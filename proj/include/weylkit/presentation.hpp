#pragma once

#include "coxeter_id.hpp"
#include "groupoid.hpp"
#include "roots.hpp"

namespace weylkit {

/* Presentation of Hom(a,a) pulled back along a spanning tree. Generator
 * (i, b) stands for X_{rho_i(b)}^{-1} . sigma_i^b . X_b where X_c is the
 * first (shortest, lexicographically least) morphism a -> c found by the
 * breadth-first generation. Relation words are lists of generator indices in
 * application order (first entry acts first); each evaluates to the identity
 * matrix. Emitted unsimplified. */
struct StabilizerPresentation {
    int base = 0;
    std::vector<Morphism> spanning;                 // X_b, indexed by object
    std::vector<std::pair<int, int>> generators;    // (letter i, object b)
    std::vector<Mat> generator_matrices;            // in Hom(base, base)
    std::vector<std::vector<int>> relations;        // indices into generators
};

inline StabilizerPresentation stabilizer_presentation(const CartanScheme& s, const Groupoid& g,
                                                      const RootSystem& roots, int base) {
    if (g.status != Groupoid::Status::Finite)
        throw error("NotFinite", "NotFinite: groupoid generation did not terminate");
    StabilizerPresentation p;
    p.base = base;
    p.spanning = spanning_tree(g, base);

    std::vector<Mat> x_inv;
    for (const Morphism& x : p.spanning) x_inv.push_back(inverse_morphism(s, x).m);

    auto gen_index = [&](int i, int b) { return i * s.nobj() + b; };
    for (int i = 0; i < s.rank; ++i)
        for (int b = 0; b < s.nobj(); ++b) {
            p.generators.emplace_back(i, b);
            int rb = s.rho(i, b);
            p.generator_matrices.push_back(x_inv[static_cast<size_t>(rb)] *
                                           simple_reflection(s, i, b) *
                                           p.spanning[static_cast<size_t>(b)].m);
        }

    for (int b = 0; b < s.nobj(); ++b) {
        for (int i = 0; i < s.rank; ++i)
            p.relations.push_back({gen_index(i, b), gen_index(i, s.rho(i, b))});
        for (int j = 0; j < s.rank; ++j)
            for (int k = j + 1; k < s.rank; ++k) {
                Int m = m_value(roots, b, j, k);
                std::vector<int> word;
                int at = b;
                for (Int t = 0; t < 2 * m; ++t) {
                    int letter = (t % 2 == 0) ? k : j;
                    word.push_back(gen_index(letter, at));
                    at = s.rho(letter, at);
                }
                p.relations.push_back(std::move(word));
            }
    }
    return p;
}

/* Evaluate a relation word through the matrix representation; words are in
 * application order, so the last entry is the leftmost factor. */
inline Mat evaluate_word(const StabilizerPresentation& p, const std::vector<int>& word) {
    Mat m = Mat::identity(p.generator_matrices.empty() ? 1 : p.generator_matrices[0].n);
    for (int idx : word) m = p.generator_matrices[static_cast<size_t>(idx)] * m;
    return m;
}

/* The subgroup of Hom(base) generated by the presentation's generators; by
 * construction it is all of Hom(base), which tests verify via the order. */
inline std::vector<Mat> generated_group(const StabilizerPresentation& p) {
    std::set<Mat> seen;
    std::vector<Mat> frontier{Mat::identity(p.generator_matrices[0].n)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& m : frontier)
            for (const Mat& g : p.generator_matrices) {
                Mat prod = g * m;
                if (seen.insert(prod).second) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace weylkit
