#pragma once

#include <functional>
#include <map>
#include <string>

#include "base.hpp"

namespace weylkit {

namespace detail {

/* Finite group given by its elements; multiplication resolved through an
 * index table so the search below never touches matrices again. */
struct GroupTable {
    int n = 0;
    int id = -1;
    std::vector<std::vector<int>> mul;
};

inline GroupTable group_table(const std::vector<Mat>& elems) {
    std::map<Mat, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<int>(i));
    if (index.size() != elems.size()) throw error("NotAGroup", "NotAGroup: duplicate elements");
    GroupTable t;
    t.n = static_cast<int>(elems.size());
    t.mul.assign(static_cast<size_t>(t.n), std::vector<int>(static_cast<size_t>(t.n)));
    for (int i = 0; i < t.n; ++i) {
        if (elems[static_cast<size_t>(i)].is_identity()) t.id = i;
        for (int j = 0; j < t.n; ++j) {
            auto it = index.find(elems[static_cast<size_t>(i)] * elems[static_cast<size_t>(j)]);
            if (it == index.end()) throw error("NotAGroup", "NotAGroup: not closed");
            t.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = it->second;
        }
    }
    if (t.id < 0) throw error("NotAGroup", "NotAGroup: no identity");
    return t;
}

inline int element_order(const GroupTable& t, int x) {
    int p = x, n = 1;
    while (p != t.id) {
        p = t.mul[static_cast<size_t>(p)][static_cast<size_t>(x)];
        ++n;
    }
    return n;
}

inline bool generates(const GroupTable& t, const std::vector<int>& gens) {
    std::vector<char> seen(static_cast<size_t>(t.n), 0);
    std::vector<int> stack{t.id};
    seen[static_cast<size_t>(t.id)] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int g : gens) {
            int y = t.mul[static_cast<size_t>(x)][static_cast<size_t>(g)];
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == t.n;
}

struct CoxeterEntry {
    int order;
    const char* label;
    int rank;
    int m[3][3];  // pairwise product orders; only entries below rank used
};

/* The finite Coxeter groups that occur as vertex groups in this project.
 * Within this list the group order is already distinctive, so a candidate is
 * checked only against the entry with matching order. */
inline const std::vector<CoxeterEntry>& coxeter_catalog() {
    static const std::vector<CoxeterEntry> cat = {
        {2, "A1", 1, {{1}}},
        {4, "A1xA1", 2, {{1, 2}, {2, 1}}},
        {6, "A2", 2, {{1, 3}, {3, 1}}},
        {8, "B2", 2, {{1, 4}, {4, 1}}},
        {12, "G2", 2, {{1, 6}, {6, 1}}},
        {24, "A3", 3, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}},
        {48, "B3", 3, {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}}},
    };
    return cat;
}

inline bool matches_entry(const GroupTable& t, const CoxeterEntry& e) {
    std::vector<int> invol;
    for (int x = 0; x < t.n; ++x)
        if (x != t.id && element_order(t, x) == 2) invol.push_back(x);
    std::vector<int> pick(static_cast<size_t>(e.rank), -1);
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == e.rank) return generates(t, pick);
        for (int cand : invol) {
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                int prod = t.mul[static_cast<size_t>(pick[static_cast<size_t>(j)])]
                                [static_cast<size_t>(cand)];
                ok = element_order(t, prod) == e.m[j][k];
            }
            if (!ok) continue;
            pick[static_cast<size_t>(k)] = cand;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

}  // namespace detail

/* Name the isomorphism type of a finite matrix group when it is one of the
 * catalogued Coxeter groups; otherwise report "unknown(N)" with the order.
 * A match requires involutions with the prescribed pairwise product orders
 * that generate the whole group. */
inline std::string identify_coxeter_type(const std::vector<Mat>& elems) {
    if (elems.size() == 1 && elems[0].is_identity()) return "trivial";
    detail::GroupTable t = detail::group_table(elems);
    for (const auto& e : detail::coxeter_catalog())
        if (e.order == t.n && detail::matches_entry(t, e)) return e.label;
    return "unknown(" + std::to_string(t.n) + ")";
}

}  // namespace weylkit
