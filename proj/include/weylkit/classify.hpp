#pragma once

#include <thread>

#include "coxeter_id.hpp"
#include "dynkin.hpp"
#include "equivalence.hpp"
#include "presentation.hpp"
#include "roots.hpp"

namespace weylkit {

/* A reflection pattern: the object maps rho_i, fixed before matrix entries
 * are enumerated. Every connected scheme on at most three objects can be
 * relabeled (objects and indices independently) onto one of the patterns
 * produced here:
 *   one object: all rho_i are the identity.
 *   two objects: each rho_i is the identity or the swap, and connectivity
 *     needs at least one swap; reorder indices so the swapping ones come
 *     first (their count is kappa).
 *   three objects, rank 2: each rho_i is the identity or a transposition;
 *     connecting three objects with two involutions forces two distinct
 *     overlapping transpositions, which relabel onto (xy), (yz).
 *   three objects, rank 3: two of the maps must again be distinct
 *     overlapping transpositions; put them first as (xy), (yz). The third is
 *     id, (xy), (xz), or (yz); conjugating objects by the x-z swap and
 *     exchanging the first two indices turns the (yz) case into the (xy)
 *     case, leaving the three cases below. */
struct ReflPattern {
    std::string name;
    int nobj = 1;
    std::vector<std::vector<int>> refl;  // refl[i][a]
};

inline std::vector<ReflPattern> patterns_for(int rank, int nobj) {
    std::vector<ReflPattern> out;
    if (rank < 1) throw error("BadRank", "BadRank");
    if (nobj == 1) {
        ReflPattern p;
        p.name = "point";
        p.nobj = 1;
        p.refl.assign(static_cast<size_t>(rank), {0});
        out.push_back(std::move(p));
        return out;
    }
    if (nobj == 2) {
        for (int kappa = 1; kappa <= rank; ++kappa) {
            ReflPattern p;
            p.name = "kappa=" + std::to_string(kappa);
            p.nobj = 2;
            for (int i = 0; i < rank; ++i)
                p.refl.push_back(i < kappa ? std::vector<int>{1, 0} : std::vector<int>{0, 1});
            out.push_back(std::move(p));
        }
        return out;
    }
    if (nobj == 3 && rank == 2) {
        ReflPattern p;
        p.name = "chain";
        p.nobj = 3;
        p.refl = {{1, 0, 2}, {0, 2, 1}};
        out.push_back(std::move(p));
        return out;
    }
    if (nobj == 3 && rank == 3) {
        const std::vector<int> swap_xy{1, 0, 2}, swap_yz{0, 2, 1}, swap_xz{2, 1, 0},
            ident{0, 1, 2};
        ReflPattern p1{"case1", 3, {swap_xy, swap_yz, ident}};
        ReflPattern p2{"case2", 3, {swap_xy, swap_yz, swap_xy}};
        ReflPattern p3{"case3", 3, {swap_xy, swap_yz, swap_xz}};
        out = {p1, p2, p3};
        return out;
    }
    throw error("UnsupportedSpace",
                "UnsupportedSpace: no canonical patterns for rank " + std::to_string(rank) +
                    ", " + std::to_string(nobj) + " objects");
}

struct SearchSpace {
    int rank = 2;
    int nobj = 2;
    ReflPattern pattern;
    int bound = 8;  // off-diagonal entries range over {0, -1, ..., -bound}
};

inline std::vector<SearchSpace> search_spaces(int rank, int nobj, int bound = 8) {
    std::vector<SearchSpace> out;
    for (ReflPattern& p : patterns_for(rank, nobj))
        out.push_back(SearchSpace{rank, nobj, std::move(p), bound});
    return out;
}

struct SearchOptions {
    bool keep_reducible = false;
    int jobs = 1;
    FinitenessOptions fin{};
    int pair_cap = 512;
};

struct ClassificationRecord {
    CartanScheme scheme;   // canonical representative
    std::vector<Int> key;  // its serialization, the dedup/sort key
    int nobj = 0;
    int rank = 0;
    size_t raw_count = 0;  // finite candidates that landed in this class
    size_t total_morphisms = 0;
    size_t positive_roots = 0;
    size_t stabilizer_order = 0;
    std::string stabilizer_type;
    std::string diagram;
    bool standard = false;
    std::string source_cell;
};

struct ClassifyResult {
    std::vector<ClassificationRecord> records;
    size_t pair_cells = 0;  // rank-2 restriction cells enumerated
    size_t cells = 0;       // full candidate schemes examined
    std::vector<std::string> inconclusive;  // must be empty for a complete run
};

namespace detail {

inline std::vector<std::string> object_names(int nobj) {
    static const char* names[] = {"x", "y", "z"};
    std::vector<std::string> out;
    for (int a = 0; a < nobj; ++a) out.emplace_back(names[a]);
    return out;
}

/* One index pair {i,j}: matrix entries c_ij and c_ji vary per object but are
 * tied along the orbits of rho_i (row i) and rho_j (row j); `profiles` ends
 * up holding every tied assignment whose rank-2 restriction is finite. */
struct PairCell {
    int i = 0, j = 0;
    std::vector<int> orbit_i, orbit_j;  // dense orbit id per object
    int vars_i = 0, vars_j = 0;
    std::vector<std::vector<std::pair<Int, Int>>> profiles;  // per object (c_ij, c_ji)
};

inline void fill_orbits(const ReflPattern& p, int i, std::vector<int>& orbit, int& count) {
    orbit.assign(static_cast<size_t>(p.nobj), -1);
    count = 0;
    for (int a = 0; a < p.nobj; ++a) {
        if (orbit[static_cast<size_t>(a)] >= 0) continue;
        orbit[static_cast<size_t>(a)] = count;
        orbit[static_cast<size_t>(p.refl[static_cast<size_t>(i)][static_cast<size_t>(a)])] =
            count;
        ++count;
    }
}

inline CartanScheme pair_scheme(const SearchSpace& space, const PairCell& cell,
                                const std::vector<std::pair<Int, Int>>& entries) {
    CartanScheme s;
    s.rank = 2;
    s.objects = object_names(space.nobj);
    s.refl = {space.pattern.refl[static_cast<size_t>(cell.i)],
              space.pattern.refl[static_cast<size_t>(cell.j)]};
    for (int a = 0; a < space.nobj; ++a) {
        Mat m(2);
        m.at(0, 0) = m.at(1, 1) = 2;
        m.at(0, 1) = entries[static_cast<size_t>(a)].first;
        m.at(1, 0) = entries[static_cast<size_t>(a)].second;
        s.cartan.push_back(std::move(m));
    }
    return validate_scheme(s);
}

}  // namespace detail

/* Bounded exhaustive classification over one reflection pattern.
 *
 * Stage 1 enumerates each index pair separately: assignments of the tied
 * entries over {0,-1,...,-bound} with the paired-zero rule checked per
 * object. A pair assignment survives only if the rank-2 scheme it induces
 * (same objects, indices restricted to the pair) admits a finite root
 * system: if the full scheme admitted one, its roots supported on the pair
 * would hand that rank-2 scheme a finite system too, so discarding these
 * cells loses nothing.
 *
 * Stage 2 walks the Cartesian product of the surviving pair profiles (pairs
 * are entry-disjoint, so every combination is a valid scheme), runs the full
 * finiteness decision on each candidate, and keeps the finite ones. Records
 * are deduplicated by canonical form; the raw pre-dedup count is kept for
 * audit. Any cell the decision procedure cannot settle is reported in
 * `inconclusive` rather than silently dropped, so an empty list means the
 * classification over this space is complete. Results are deterministic and
 * independent of the worker count: workers only fill per-candidate verdict
 * slots, and the merge walks candidates in enumeration order. */
inline ClassifyResult classify(const SearchSpace& space, const SearchOptions& opt = {}) {
    ClassifyResult res;
    const int rank = space.rank;
    const int nobj = space.nobj;
    if (static_cast<int>(space.pattern.refl.size()) != rank || space.pattern.nobj != nobj)
        throw error("BadSearchSpace", "BadSearchSpace: pattern does not match rank/objects");

    FinitenessOptions pair_fin = opt.fin;
    pair_fin.root_cap = opt.pair_cap;

    std::vector<detail::PairCell> pairs;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            detail::PairCell cell;
            cell.i = i;
            cell.j = j;
            detail::fill_orbits(space.pattern, i, cell.orbit_i, cell.vars_i);
            detail::fill_orbits(space.pattern, j, cell.orbit_j, cell.vars_j);
            int nvars = cell.vars_i + cell.vars_j;
            size_t assignments = 1;
            for (int v = 0; v < nvars; ++v) assignments *= static_cast<size_t>(space.bound + 1);

            std::vector<Int> value(static_cast<size_t>(nvars), 0);
            for (size_t id = 0; id < assignments; ++id) {
                size_t rest = id;
                for (int v = 0; v < nvars; ++v) {
                    value[static_cast<size_t>(v)] = -static_cast<Int>(rest %
                                                                      (space.bound + 1));
                    rest /= static_cast<size_t>(space.bound + 1);
                }
                ++res.pair_cells;
                std::vector<std::pair<Int, Int>> entries(static_cast<size_t>(nobj));
                bool m2_ok = true;
                for (int a = 0; a < nobj; ++a) {
                    Int eij = value[static_cast<size_t>(cell.orbit_i[static_cast<size_t>(a)])];
                    Int eji = value[static_cast<size_t>(cell.vars_i +
                                                        cell.orbit_j[static_cast<size_t>(a)])];
                    if ((eij == 0) != (eji == 0)) {
                        m2_ok = false;
                        break;
                    }
                    entries[static_cast<size_t>(a)] = {eij, eji};
                }
                if (!m2_ok) continue;
                CartanScheme sub = detail::pair_scheme(space, cell, entries);
                RootClosureResult verdict = decide_finiteness(sub, pair_fin);
                if (verdict.verdict == RootVerdict::Finite)
                    cell.profiles.push_back(std::move(entries));
                else if (verdict.verdict == RootVerdict::CapExceeded)
                    res.inconclusive.push_back(space.pattern.name + " pair (" +
                                               std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ") cell " +
                                               std::to_string(id));
            }
            pairs.push_back(std::move(cell));
        }

    size_t total = 1;
    for (const auto& cell : pairs) {
        total *= cell.profiles.size();
        if (total > 5000000)
            throw error("SearchTooLarge", "SearchTooLarge: too many candidate schemes");
    }
    if (!pairs.empty() && total == 0) total = 0;
    res.cells = total;

    auto build = [&](size_t id) {
        CartanScheme s;
        s.rank = rank;
        s.objects = detail::object_names(nobj);
        s.refl = space.pattern.refl;
        s.cartan.assign(static_cast<size_t>(nobj), Mat(rank));
        for (int a = 0; a < nobj; ++a)
            for (int i = 0; i < rank; ++i) s.cartan[static_cast<size_t>(a)].at(i, i) = 2;
        size_t rest = id;
        for (const auto& cell : pairs) {
            const auto& prof = cell.profiles[rest % cell.profiles.size()];
            rest /= cell.profiles.size();
            for (int a = 0; a < nobj; ++a) {
                s.cartan[static_cast<size_t>(a)].at(cell.i, cell.j) =
                    prof[static_cast<size_t>(a)].first;
                s.cartan[static_cast<size_t>(a)].at(cell.j, cell.i) =
                    prof[static_cast<size_t>(a)].second;
            }
        }
        return s;
    };

    /* verdict codes: 0 rejected, 1 finite, 2 inconclusive */
    std::vector<int8_t> codes(total, 0);
    auto worker = [&](int t, int stride) {
        for (size_t id = static_cast<size_t>(t); id < total; id += static_cast<size_t>(stride)) {
            CartanScheme s = build(id);
            RootClosureResult verdict = decide_finiteness(s, opt.fin);
            codes[id] = verdict.verdict == RootVerdict::Finite
                            ? 1
                            : (verdict.verdict == RootVerdict::CapExceeded ? 2 : 0);
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || total < 2) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t, jobs);
        for (auto& th : threads) th.join();
    }

    std::map<std::vector<Int>, size_t> index;  // canonical key -> position in records
    for (size_t id = 0; id < total; ++id) {
        if (codes[id] == 2) {
            res.inconclusive.push_back(space.pattern.name + " scheme cell " +
                                       std::to_string(id));
            continue;
        }
        if (codes[id] != 1) continue;
        CartanScheme s = build(id);
        if (!opt.keep_reducible && decompose_scheme(s).size() > 1) continue;
        if (!is_connected(s)) continue;
        auto canon = canonical_form(s);
        auto it = index.find(canon.first);
        if (it != index.end()) {
            ++res.records[it->second].raw_count;
            continue;
        }
        ClassificationRecord rec;
        rec.scheme = canon.second;
        rec.key = canon.first;
        rec.nobj = nobj;
        rec.rank = rank;
        rec.raw_count = 1;
        RootClosureResult roots = root_closure(rec.scheme, opt.fin.root_cap);
        rec.positive_roots = roots.system.pos.empty() ? 0 : roots.system.pos[0].size();
        Groupoid g = generate_groupoid(rec.scheme);
        rec.total_morphisms = total_size(g);
        std::vector<Mat> stab = stabilizer_matrices(g, 0);
        rec.stabilizer_order = stab.size();
        rec.stabilizer_type = identify_coxeter_type(stab);
        rec.diagram = diagram_signature(rec.scheme);
        rec.standard = is_standard(rec.scheme);
        rec.source_cell = space.pattern.name + " B=" + std::to_string(space.bound);
        index.emplace(rec.key, res.records.size());
        res.records.push_back(std::move(rec));
    }
    std::sort(res.records.begin(), res.records.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) {
                  return a.key < b.key;
              });
    return res;
}

/* Union over all canonical reflection patterns for (rank, nobj); records
 * deduplicated across patterns by canonical key. */
inline ClassifyResult classify_all(int rank, int nobj, int bound = 8,
                                   const SearchOptions& opt = {}) {
    ClassifyResult res;
    std::map<std::vector<Int>, size_t> index;
    for (const SearchSpace& space : search_spaces(rank, nobj, bound)) {
        ClassifyResult part = classify(space, opt);
        res.pair_cells += part.pair_cells;
        res.cells += part.cells;
        for (auto& s : part.inconclusive) res.inconclusive.push_back(std::move(s));
        for (auto& rec : part.records) {
            auto it = index.find(rec.key);
            if (it != index.end())
                res.records[it->second].raw_count += rec.raw_count;
            else {
                index.emplace(rec.key, res.records.size());
                res.records.push_back(std::move(rec));
            }
        }
    }
    std::sort(res.records.begin(), res.records.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) {
                  return a.key < b.key;
              });
    return res;
}

}  // namespace weylkit
