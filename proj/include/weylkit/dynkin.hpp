#pragma once

#include "roots.hpp"

namespace weylkit {

namespace detail {

struct TypeEntry {
    const char* label;
    int n;
    std::vector<Int> rows;  // row-major n*n
};

/* Indecomposable finite types up to rank 4 (short/long conventions follow
 * the usual tables: B has the doubled entry in the bottom row, C in the row
 * above it). A_n for higher ranks is matched structurally instead. */
inline const std::vector<TypeEntry>& type_catalog() {
    static const std::vector<TypeEntry> cat = {
        {"A1", 1, {2}},
        {"A2", 2, {2, -1, -1, 2}},
        {"B2", 2, {2, -1, -2, 2}},
        {"G2", 2, {2, -1, -3, 2}},
        {"A3", 3, {2, -1, 0, -1, 2, -1, 0, -1, 2}},
        {"B3", 3, {2, -1, 0, -1, 2, -1, 0, -2, 2}},
        {"C3", 3, {2, -1, 0, -1, 2, -2, 0, -1, 2}},
        {"A4", 4, {2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2}},
        {"B4", 4, {2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -1, 0, 0, -2, 2}},
        {"C4", 4, {2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -2, 0, 0, -1, 2}},
        {"D4", 4, {2, -1, 0, 0, -1, 2, -1, -1, 0, -1, 2, 0, 0, -1, 0, 2}},
        {"F4", 4, {2, -1, 0, 0, -1, 2, -1, 0, 0, -2, 2, -1, 0, 0, -1, 2}},
    };
    return cat;
}

inline bool matches_up_to_permutation(const Mat& block, const TypeEntry& e) {
    if (block.n != e.n) return false;
    std::vector<int> perm(static_cast<size_t>(e.n));
    for (int i = 0; i < e.n; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        bool ok = true;
        for (int i = 0; i < e.n && ok; ++i)
            for (int j = 0; j < e.n && ok; ++j)
                ok = block.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ==
                     e.rows[static_cast<size_t>(i) * e.n + j];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/* A path with all edges simple, any rank: two endpoints of degree one,
 * everything else degree two, symmetric entries in {0,-1}. */
inline bool is_a_type(const Mat& block) {
    int n = block.n;
    if (n == 1) return true;
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Int x = block.at(i, j);
            if (x != 0 && x != -1) return false;
            if (block.at(j, i) != x) return false;
            if (x == -1) ++deg[static_cast<size_t>(i)];
        }
    int ones = 0;
    for (int d : deg) {
        if (d == 1) ++ones;
        else if (d != 2) return false;
    }
    if (ones != 2) return false;
    std::vector<std::vector<int>> blocks = decompose_cartan_matrix(block);
    return blocks.size() == 1;
}

}  // namespace detail

/* Finite-type recognition for a single generalized Cartan matrix: run the
 * root closure on the one-object scheme (with the infinite-order fallback),
 * then name each indecomposable block from the rank <= 4 catalog or as an
 * A-type path. Reducible matrices get the block labels joined with "x". */
inline std::string dynkin_type(const Mat& c) {
    CartanScheme s;
    s.rank = c.n;
    s.objects = {"a"};
    s.refl.assign(static_cast<size_t>(c.n), std::vector<int>{0});
    s.cartan = {c};
    validate_scheme(s);

    FinitenessOptions opt;
    opt.root_cap = std::max(512, 4 * c.n * c.n + 8);
    RootClosureResult r = decide_finiteness(s, opt);
    if (r.verdict != RootVerdict::Finite) return "NotFiniteType";

    std::vector<std::vector<int>> blocks = decompose_cartan_matrix(c);
    std::vector<std::string> labels;
    for (const auto& blk : blocks) {
        Mat sub(static_cast<int>(blk.size()));
        for (size_t i = 0; i < blk.size(); ++i)
            for (size_t j = 0; j < blk.size(); ++j)
                sub.at(static_cast<int>(i), static_cast<int>(j)) = c.at(blk[i], blk[j]);
        std::string label = "unknown";
        for (const auto& e : detail::type_catalog())
            if (detail::matches_up_to_permutation(sub, e)) {
                label = e.label;
                break;
            }
        if (label == "unknown" && detail::is_a_type(sub))
            label = "A" + std::to_string(sub.n);
        labels.push_back(label);
    }
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) out += (i ? "x" : "") + labels[i];
    return out;
}

}  // namespace weylkit
