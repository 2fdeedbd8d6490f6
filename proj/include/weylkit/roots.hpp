#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "equivalence.hpp"
#include "groupoid.hpp"

namespace weylkit {

enum class RootVerdict { Finite, NoFiniteSystem, CapExceeded };

inline const char* to_string(RootVerdict v) {
    switch (v) {
        case RootVerdict::Finite: return "finite";
        case RootVerdict::NoFiniteSystem: return "no-finite-system";
        default: return "cap-exceeded";
    }
}

/* Positive roots per object, each list sorted lexicographically. The full
 * root set at an object is pos[a] together with its negatives. */
struct RootSystem {
    std::vector<std::vector<Vec>> pos;
};

/* Certificate that no finite root system exists, replayable without trusting
 * the search:
 *   MixedSign      reflecting the seed basis vector e_{seed_index} (placed at
 *                  seed_object) along `trail` produces `vec` at `object`,
 *                  which has both positive and negative coordinates. Every
 *                  vector produced this way lies in every root system the
 *                  scheme admits, and the sign axiom forbids mixed signs.
 *   SimpleMultiple same trail data; `vec` is k*e_i with |k| != 1, forbidden
 *                  by the simple-multiple axiom.
 *   PairPeriod     with m = #{positive roots supported on {i,j}} at `object`,
 *                  alternating the object maps rho_i, rho_j m times does not
 *                  return to `object`, violating the periodicity axiom.
 *   InfiniteOrder  `word` read from `object` returns to `object` but its
 *                  matrix has infinite order; a finite root system would make
 *                  every self-morphism a permutation of finitely many roots.
 * Trail entries are (letter, object the letter acted at). */
struct RootWitness {
    enum class Kind { MixedSign, SimpleMultiple, PairPeriod, InfiniteOrder };
    Kind kind = Kind::MixedSign;
    int object = 0;
    Vec vec;
    int seed_index = -1;
    int seed_object = 0;
    std::vector<std::pair<int, int>> trail;
    int i = -1, j = -1;
    Int m = 0;
    std::vector<int> word;

    std::string describe(const CartanScheme& s) const {
        std::ostringstream out;
        auto obj = [&](int a) { return s.objects[static_cast<size_t>(a)]; };
        auto vec_str = [&](const Vec& v) {
            std::string t = "(";
            for (size_t k = 0; k < v.size(); ++k)
                t += (k ? "," : "") + std::to_string(v[k]);
            return t + ")";
        };
        switch (kind) {
            case Kind::MixedSign:
            case Kind::SimpleMultiple:
                out << (kind == Kind::MixedSign ? "mixed-sign root " : "bad simple multiple ")
                    << vec_str(vec) << " at " << obj(object) << ", from alpha_"
                    << (seed_index + 1) << " at " << obj(seed_object) << " via";
                for (const auto& [letter, at] : trail)
                    out << " " << (letter + 1) << "@" << obj(at);
                break;
            case Kind::PairPeriod:
                out << "pair (" << (i + 1) << "," << (j + 1) << ") at " << obj(object)
                    << ": m=" << m << " but the object orbit does not close";
                break;
            case Kind::InfiniteOrder:
                out << "self-morphism of infinite order at " << obj(object) << ", word";
                for (int letter : word) out << " " << (letter + 1);
                break;
        }
        return out.str();
    }
};

struct RootClosureResult {
    RootVerdict verdict = RootVerdict::CapExceeded;
    RootSystem system;  // filled only when verdict == Finite
    std::optional<RootWitness> witness;
    size_t total_roots = 0;  // both signs, summed over objects, at decision time
};

namespace detail {

struct RootParent {
    int letter = -1;  // -1 marks a seed
    Vec from;         // vector at rho_letter(object) that produced this one
    int seed_index = -1;
};

inline void fill_trail(const CartanScheme& s,
                       const std::vector<std::map<Vec, RootParent>>& parent, int object,
                       const Vec& v, RootWitness& w) {
    w.object = object;
    w.vec = v;
    int a = object;
    Vec cur = v;
    std::vector<std::pair<int, int>> rev;
    for (;;) {
        const RootParent& p = parent[static_cast<size_t>(a)].at(cur);
        if (p.letter < 0) {
            w.seed_index = p.seed_index;
            w.seed_object = a;
            break;
        }
        int prev = s.rho(p.letter, a);  // the letter acted at prev, landing at a
        rev.emplace_back(p.letter, prev);
        a = prev;
        cur = p.from;
    }
    w.trail.assign(rev.rbegin(), rev.rend());
}

/* Count of positive roots supported on {i,j}; the sets hold both signs. */
inline Int pair_count(const std::vector<Vec>& pos_roots, int i, int j) {
    Int m = 0;
    for (const Vec& v : pos_roots) {
        bool in_span = true;
        for (size_t k = 0; k < v.size(); ++k)
            if (static_cast<int>(k) != i && static_cast<int>(k) != j && v[k] != 0)
                in_span = false;
        if (in_span) ++m;
    }
    return m;
}

}  // namespace detail

/* Replay a MixedSign / SimpleMultiple witness from its seed; returns the
 * final vector so a test can compare it with the recorded one. */
inline Vec replay_trail(const CartanScheme& s, const RootWitness& w) {
    Vec v = unit_vec(s.rank, w.seed_index);
    int a = w.seed_object;
    for (const auto& [letter, at] : w.trail) {
        if (at != a) throw error("BadWitness", "BadWitness: trail object mismatch");
        v = reflect(s, letter, a, v);
        a = s.rho(letter, a);
    }
    if (a != w.object) throw error("BadWitness", "BadWitness: trail target mismatch");
    return v;
}

/* Close {alpha_i at every object} under transported simple reflections:
 * a vector v at object a yields sigma_i^a(v) at rho_i(a). Any mixed-sign
 * vector or bad simple multiple ends the search with a witness: such vectors
 * belong to every root system the scheme admits (they are images of basis
 * vectors under morphisms), and the axioms forbid them. If the closure
 * stabilizes, the pair periodicity axiom is checked with the m-values read
 * off the closure; the closure itself is then a finite root system, so a
 * violation again rules every candidate out. Growth beyond `cap` roots at
 * one object (or beyond a fixed coordinate budget) is inconclusive. */
inline RootClosureResult root_closure(const CartanScheme& s, int cap = 512) {
    const int nobj = s.nobj();
    const Int limit = Int(1) << 40;  // keeps every reflect() far from overflow
    RootClosureResult res;
    std::vector<std::map<Vec, detail::RootParent>> parent(static_cast<size_t>(nobj));
    std::deque<std::pair<int, Vec>> work;

    auto total = [&]() {
        size_t t = 0;
        for (const auto& m : parent) t += m.size();
        return t;
    };

    for (int a = 0; a < nobj; ++a)
        for (int i = 0; i < s.rank; ++i) {
            detail::RootParent p;
            p.seed_index = i;
            Vec v = unit_vec(s.rank, i);
            if (parent[static_cast<size_t>(a)].emplace(v, p).second)
                work.emplace_back(a, std::move(v));
        }

    while (!work.empty()) {
        auto [a, v] = work.front();
        work.pop_front();
        for (int i = 0; i < s.rank; ++i) {
            int b = s.rho(i, a);
            Vec w = reflect(s, i, a, v);
            auto& cell = parent[static_cast<size_t>(b)];
            if (cell.count(w)) continue;
            for (Int x : w)
                if (x > limit || x < -limit) {
                    res.verdict = RootVerdict::CapExceeded;
                    res.total_roots = total();
                    return res;
                }
            detail::RootParent p;
            p.letter = i;
            p.from = v;
            cell.emplace(w, p);
            if (!sign_pure(w)) {
                RootWitness wit;
                wit.kind = RootWitness::Kind::MixedSign;
                detail::fill_trail(s, parent, b, w, wit);
                res.verdict = RootVerdict::NoFiniteSystem;
                res.witness = std::move(wit);
                res.total_roots = total();
                return res;
            }
            if (static_cast<int>(cell.size()) > cap) {
                res.verdict = RootVerdict::CapExceeded;
                res.total_roots = total();
                return res;
            }
            work.emplace_back(b, std::move(w));
        }
    }
    res.total_roots = total();

    /* Stabilized. The closure is symmetric by construction; verify anyway. */
    for (int a = 0; a < nobj; ++a)
        for (const auto& [v, p] : parent[static_cast<size_t>(a)])
            if (!parent[static_cast<size_t>(a)].count(negate(v)))
                throw error("Internal", "Internal: closure not symmetric");

    /* Simple-multiple axiom: only +-alpha_i may be proportional to alpha_i. */
    for (int a = 0; a < nobj; ++a)
        for (const auto& [v, p] : parent[static_cast<size_t>(a)]) {
            int support = -1;
            bool single = true;
            for (int k = 0; k < s.rank; ++k)
                if (v[static_cast<size_t>(k)] != 0) {
                    if (support >= 0) single = false;
                    support = k;
                }
            if (single && support >= 0 &&
                (v[static_cast<size_t>(support)] > 1 || v[static_cast<size_t>(support)] < -1)) {
                RootWitness wit;
                wit.kind = RootWitness::Kind::SimpleMultiple;
                detail::fill_trail(s, parent, a, v, wit);
                res.verdict = RootVerdict::NoFiniteSystem;
                res.witness = std::move(wit);
                return res;
            }
        }

    std::vector<std::vector<Vec>> pos(static_cast<size_t>(nobj));
    for (int a = 0; a < nobj; ++a)
        for (const auto& [v, p] : parent[static_cast<size_t>(a)])
            if (is_nonneg(v)) pos[static_cast<size_t>(a)].push_back(v);

    /* Pair periodicity: alternating rho_i, rho_j must return after m steps. */
    for (int a = 0; a < nobj; ++a)
        for (int i = 0; i < s.rank; ++i)
            for (int j = i + 1; j < s.rank; ++j) {
                Int m = detail::pair_count(pos[static_cast<size_t>(a)], i, j);
                int b = a;
                for (Int k = 0; k < m; ++k) b = s.rho(i, s.rho(j, b));
                if (b != a) {
                    RootWitness wit;
                    wit.kind = RootWitness::Kind::PairPeriod;
                    wit.object = a;
                    wit.i = i;
                    wit.j = j;
                    wit.m = m;
                    res.verdict = RootVerdict::NoFiniteSystem;
                    res.witness = std::move(wit);
                    return res;
                }
            }

    for (auto& list : pos) std::sort(list.begin(), list.end());
    res.verdict = RootVerdict::Finite;
    res.system.pos = std::move(pos);
    return res;
}

/* Search for a short self-morphism whose matrix has infinite order. If the
 * scheme admitted a finite root system, every morphism a -> a would permute
 * the finite root set at a and be determined by where it sends the basis
 * vectors, which are themselves roots; Hom(a,a) would therefore be finite
 * and each of its elements of finite order. Finding an infinite-order
 * element is thus a conclusive no, independent of any closure cap. */
inline std::optional<RootWitness> infinite_order_witness(const CartanScheme& s, int max_len = 8,
                                                         int budget = 4000) {
    Groupoid g = generate_groupoid(s, budget, max_len);
    for (const Morphism& m : g.all) {
        if (m.source != m.target) continue;
        if (!has_finite_order(m.m)) {
            RootWitness w;
            w.kind = RootWitness::Kind::InfiniteOrder;
            w.object = m.source;
            w.word = m.word;
            return w;
        }
    }
    return std::nullopt;
}

struct FinitenessOptions {
    int root_cap = 512;
    int probe_len = 8;
    int probe_budget = 4000;
};

/* Closure first; if it hits the cap, fall back to the infinite-order probe
 * so that affine-flavored schemes still get a definite no. */
inline RootClosureResult decide_finiteness(const CartanScheme& s,
                                           const FinitenessOptions& opt = {}) {
    RootClosureResult r = root_closure(s, opt.root_cap);
    if (r.verdict == RootVerdict::CapExceeded)
        if (auto w = infinite_order_witness(s, opt.probe_len, opt.probe_budget)) {
            r.verdict = RootVerdict::NoFiniteSystem;
            r.witness = std::move(w);
        }
    return r;
}

/* Number of roots at `a` in the nonnegative span of alpha_i, alpha_j. */
inline Int m_value(const RootSystem& r, int a, int i, int j) {
    if (i == j) throw error("IndexEqual", "IndexEqual(" + std::to_string(i + 1) + ")");
    return detail::pair_count(r.pos[static_cast<size_t>(a)], i, j);
}

/* Full per-object root sets (both signs) from the positive half. */
inline std::vector<std::vector<Vec>> full_root_sets(const RootSystem& r) {
    std::vector<std::vector<Vec>> full(r.pos.size());
    for (size_t a = 0; a < r.pos.size(); ++a) {
        for (const Vec& v : r.pos[a]) {
            full[a].push_back(v);
            full[a].push_back(negate(v));
        }
        std::sort(full[a].begin(), full[a].end());
    }
    return full;
}

/* Per-axiom verification of candidate root data (full sets, both signs).
 * Returns pass/fail per axiom with the first counterexample rendered into
 * `detail`, plus confirmation of the matrix facts (diagonal 2 and paired
 * zeros, row ties under object change) that valid root data forces. */
struct AxiomReport {
    bool r1 = true, r2 = true, r3 = true, r4 = true;
    bool m1 = true, m2 = true, c2 = true;
    std::string detail;
    bool ok() const { return r1 && r2 && r3 && r4; }
};

inline AxiomReport check_axioms(const CartanScheme& s, const std::vector<std::vector<Vec>>& full) {
    AxiomReport rep;
    const int nobj = s.nobj();
    auto note = [&](const std::string& d) {
        if (rep.detail.empty()) rep.detail = d;
    };
    std::vector<std::set<Vec>> sets(static_cast<size_t>(nobj));
    for (int a = 0; a < nobj; ++a)
        sets[static_cast<size_t>(a)] =
            std::set<Vec>(full[static_cast<size_t>(a)].begin(), full[static_cast<size_t>(a)].end());

    Vec zero(static_cast<size_t>(s.rank), 0);
    for (int a = 0; a < nobj && rep.r1; ++a)
        for (const Vec& v : sets[static_cast<size_t>(a)]) {
            if (v == zero || !sign_pure(v) || !sets[static_cast<size_t>(a)].count(negate(v))) {
                rep.r1 = false;
                note("R1 fails at object " + s.objects[static_cast<size_t>(a)]);
                break;
            }
        }

    for (int a = 0; a < nobj && rep.r2; ++a)
        for (int i = 0; i < s.rank && rep.r2; ++i) {
            if (!sets[static_cast<size_t>(a)].count(unit_vec(s.rank, i))) {
                rep.r2 = false;
                note("R2 fails: alpha_" + std::to_string(i + 1) + " missing at " +
                     s.objects[static_cast<size_t>(a)]);
                break;
            }
            for (const Vec& v : sets[static_cast<size_t>(a)]) {
                bool multiple = true;
                for (int k = 0; k < s.rank; ++k)
                    if (k != i && v[static_cast<size_t>(k)] != 0) multiple = false;
                if (multiple && v[static_cast<size_t>(i)] != 1 && v[static_cast<size_t>(i)] != -1) {
                    rep.r2 = false;
                    note("R2 fails: bad multiple of alpha_" + std::to_string(i + 1) + " at " +
                         s.objects[static_cast<size_t>(a)]);
                    break;
                }
            }
        }

    for (int a = 0; a < nobj && rep.r3; ++a)
        for (int i = 0; i < s.rank && rep.r3; ++i) {
            std::set<Vec> image;
            for (const Vec& v : sets[static_cast<size_t>(a)]) image.insert(reflect(s, i, a, v));
            if (image != sets[static_cast<size_t>(s.rho(i, a))]) {
                rep.r3 = false;
                note("R3 fails for reflection " + std::to_string(i + 1) + " at " +
                     s.objects[static_cast<size_t>(a)]);
            }
        }

    for (int a = 0; a < nobj && rep.r4; ++a)
        for (int i = 0; i < s.rank && rep.r4; ++i)
            for (int j = i + 1; j < s.rank && rep.r4; ++j) {
                std::vector<Vec> pos;
                for (const Vec& v : sets[static_cast<size_t>(a)])
                    if (is_nonneg(v)) pos.push_back(v);
                Int m = detail::pair_count(pos, i, j);
                int b = a;
                for (Int k = 0; k < m; ++k) b = s.rho(i, s.rho(j, b));
                if (b != a) {
                    rep.r4 = false;
                    note("R4 fails for pair (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") at " + s.objects[static_cast<size_t>(a)]);
                }
            }

    /* Matrix facts that valid root data implies; on a validated scheme these
     * hold by construction, but handcrafted callers get them re-checked. */
    for (int a = 0; a < nobj; ++a)
        for (int i = 0; i < s.rank; ++i) {
            if (s.c(a, i, i) != 2) rep.m1 = false;
            for (int j = 0; j < s.rank; ++j) {
                if (i != j && s.c(a, i, j) > 0) rep.m1 = false;
                if (i != j && (s.c(a, i, j) == 0) != (s.c(a, j, i) == 0)) rep.m2 = false;
                if (s.c(a, i, j) != s.c(s.rho(i, a), i, j)) rep.c2 = false;
            }
        }
    return rep;
}

/* Finest index partition compatible with all Cartan matrices, cross-checked
 * against root supports. For finite systems the two views must agree. */
inline std::vector<std::vector<int>> root_system_components(const CartanScheme& s,
                                                            const RootSystem& r) {
    std::vector<std::vector<int>> blocks = decompose_scheme(s);
    std::vector<int> block_of(static_cast<size_t>(s.rank), -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int i : blocks[b]) block_of[static_cast<size_t>(i)] = static_cast<int>(b);
    for (const auto& list : r.pos)
        for (const Vec& v : list) {
            int seen = -1;
            for (int k = 0; k < s.rank; ++k)
                if (v[static_cast<size_t>(k)] != 0) {
                    if (seen >= 0 && block_of[static_cast<size_t>(k)] != seen)
                        throw error("InconsistentDecomposition",
                                    "InconsistentDecomposition: root crosses blocks");
                    seen = block_of[static_cast<size_t>(k)];
                }
        }
    return blocks;
}

inline bool is_irreducible(const CartanScheme& s, const RootSystem& r) {
    return root_system_components(s, r).size() == 1;
}

/* Roots supported inside J, re-indexed to J's coordinates; the result is
 * verified to satisfy the axioms for the restricted scheme. */
inline RootSystem restrict_roots(const CartanScheme& s, const RootSystem& r,
                                 const std::vector<int>& J) {
    CartanScheme sub = restrict_scheme(s, J);
    RootSystem out;
    out.pos.assign(r.pos.size(), {});
    for (size_t a = 0; a < r.pos.size(); ++a) {
        for (const Vec& v : r.pos[a]) {
            bool inside = true;
            for (int k = 0; k < s.rank; ++k) {
                bool in_j = std::find(J.begin(), J.end(), k) != J.end();
                if (!in_j && v[static_cast<size_t>(k)] != 0) inside = false;
            }
            if (!inside) continue;
            Vec w;
            for (int k : J) w.push_back(v[static_cast<size_t>(k)]);
            out.pos[a].push_back(std::move(w));
        }
        std::sort(out.pos[a].begin(), out.pos[a].end());
    }
    AxiomReport rep = check_axioms(sub, full_root_sets(out));
    if (!rep.ok()) throw error("AxiomsFailed", "AxiomsFailed: " + rep.detail);
    return out;
}

/* Scheme equivalence that also carries root sets over: phi0 permutes the
 * coordinates, phi1 matches the objects. */
inline std::optional<EquivalenceWitness> root_systems_equivalent(const CartanScheme& s1,
                                                                 const RootSystem& r1,
                                                                 const CartanScheme& s2,
                                                                 const RootSystem& r2) {
    std::vector<EquivalenceWitness> cands;
    try {
        cands = equivalence_witnesses(s1, s2);
    } catch (const error&) {
        return std::nullopt;  // rank or object-count mismatch
    }
    auto full1 = full_root_sets(r1);
    auto full2 = full_root_sets(r2);
    for (const EquivalenceWitness& w : cands) {
        bool ok = true;
        for (size_t a = 0; a < full1.size() && ok; ++a) {
            std::set<Vec> mapped;
            for (const Vec& v : full1[a]) {
                Vec u(v.size(), 0);
                for (size_t i = 0; i < v.size(); ++i)
                    u[static_cast<size_t>(w.phi0[i])] = v[i];
                mapped.insert(std::move(u));
            }
            const auto& target = full2[static_cast<size_t>(w.phi1[a])];
            ok = mapped == std::set<Vec>(target.begin(), target.end());
        }
        if (ok) return w;
    }
    return std::nullopt;
}

}  // namespace weylkit
