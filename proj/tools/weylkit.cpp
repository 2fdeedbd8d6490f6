#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "weylkit/catalog.hpp"
#include "weylkit/dot.hpp"
#include "weylkit/json_io.hpp"

using namespace weylkit;
using nlohmann::json;

namespace {

/* WEYLKIT_CAP overrides whichever cap a command uses by default; explicit
 * --cap flags win. Unset or unusable values fall back per command. */
int env_cap(int fallback) {
    const char* e = std::getenv("WEYLKIT_CAP");
    if (!e) return fallback;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end == e || *end != '\0' || v <= 0 || v > 1000000000L) return fallback;
    return static_cast<int>(v);
}

std::string verdict_string(RootVerdict v) { return to_string(v); }

std::string witness_kind(const RootWitness& w) {
    switch (w.kind) {
        case RootWitness::Kind::MixedSign: return "mixed-sign";
        case RootWitness::Kind::SimpleMultiple: return "simple-multiple";
        case RootWitness::Kind::PairPeriod: return "pair-period";
        case RootWitness::Kind::InfiniteOrder: return "infinite-order";
    }
    return "unknown";
}

std::string vec_string(const Vec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

/* Exponent notation for a positive root: (3,5) -> "1^3 2^5", (1,1) -> "1 2". */
std::string exp_string(const Vec& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += std::to_string(i + 1);
        if (v[i] != 1) out += "^" + std::to_string(v[i]);
    }
    return out.empty() ? "0" : out;
}

json vec_json(const Vec& v) { return json(v); }

std::string scheme_descriptor(const CartanScheme& s) {
    std::string out = "ok: ";
    out += is_connected(s) ? "connected" : "disconnected";
    out += ", ";
    out += is_standard(s) ? "standard" : "non-standard";
    out += ", rank " + std::to_string(s.rank);
    out += ", " + std::to_string(s.nobj()) + (s.nobj() == 1 ? " object" : " objects");
    return out;
}

int cmd_validate(const std::string& path) {
    CartanScheme s = read_scheme_file(path);
    std::cout << scheme_descriptor(s) << "\n";
    return 0;
}

int cmd_roots(const std::string& path, int cap, const std::string& format) {
    CartanScheme s = read_scheme_file(path);
    FinitenessOptions opt;
    opt.root_cap = cap;
    RootClosureResult r = decide_finiteness(s, opt);
    if (format == "json") {
        json j;
        j["verdict"] = verdict_string(r.verdict);
        j["cap"] = cap;
        j["total_roots"] = r.total_roots;
        if (r.verdict == RootVerdict::Finite) {
            json pos = json::object();
            for (int a = 0; a < s.nobj(); ++a) {
                json list = json::array();
                for (const Vec& v : r.system.pos[static_cast<size_t>(a)])
                    list.push_back(vec_json(v));
                pos[s.objects[static_cast<size_t>(a)]] = list;
            }
            j["positive"] = pos;
        } else if (r.witness) {
            j["witness"]["kind"] = witness_kind(*r.witness);
            j["witness"]["description"] = r.witness->describe(s);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << verdict_string(r.verdict) << "\n";
        if (r.verdict == RootVerdict::Finite) {
            for (int a = 0; a < s.nobj(); ++a) {
                const auto& pos = r.system.pos[static_cast<size_t>(a)];
                std::cout << "object " << s.objects[static_cast<size_t>(a)] << ": "
                          << pos.size() << " positive roots\n";
                for (const Vec& v : pos)
                    std::cout << "  " << vec_string(v) << " = " << exp_string(v) << "\n";
            }
        } else if (r.witness) {
            std::cout << "witness: " << r.witness->describe(s) << "\n";
        }
    }
    return r.verdict == RootVerdict::Finite ? 0 : 1;
}

int cmd_groupoid(const std::string& path, int cap, const std::string& format) {
    CartanScheme s = read_scheme_file(path);
    Groupoid g = generate_groupoid(s, static_cast<size_t>(cap));
    bool finite = g.status == Groupoid::Status::Finite;
    std::string status = finite ? "finite"
                                : (g.status == Groupoid::Status::CapExceeded ? "cap-exceeded"
                                                                             : "truncated");
    if (format == "json") {
        json j;
        j["status"] = status;
        j["objects"] = s.nobj();
        if (finite) {
            j["total"] = total_size(g);
            json hom = json::object();
            for (int a = 0; a < s.nobj(); ++a) {
                json row = json::object();
                for (int b = 0; b < s.nobj(); ++b)
                    row[s.objects[static_cast<size_t>(b)]] = hom_size(g, a, b);
                hom[s.objects[static_cast<size_t>(a)]] = row;
            }
            j["hom"] = hom;
            std::vector<Mat> stab = stabilizer_matrices(g, 0);
            j["stabilizer"]["object"] = s.objects[0];
            j["stabilizer"]["order"] = stab.size();
            j["stabilizer"]["type"] = identify_coxeter_type(stab);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "status: " << status << "\n";
        if (finite) {
            std::cout << "total morphisms: " << total_size(g) << "\n";
            for (int a = 0; a < s.nobj(); ++a)
                for (int b = 0; b < s.nobj(); ++b)
                    std::cout << "hom(" << s.objects[static_cast<size_t>(a)] << ","
                              << s.objects[static_cast<size_t>(b)] << "): " << hom_size(g, a, b)
                              << "\n";
            for (int a = 0; a < s.nobj(); ++a)
                std::cout << "max length from " << s.objects[static_cast<size_t>(a)] << ": "
                          << max_word_length_from(g, a) << "\n";
            std::vector<Mat> stab = stabilizer_matrices(g, 0);
            std::cout << "stabilizer at " << s.objects[0] << ": order " << stab.size()
                      << ", type " << identify_coxeter_type(stab) << "\n";
        }
    }
    return finite ? 0 : 1;
}

int cmd_diagram(const std::string& path, const std::string& dot_path) {
    CartanScheme s = read_scheme_file(path);
    if (!dot_path.empty()) {
        std::string text = emit_dot(object_change_diagram(s));
        if (dot_path == "-") {
            std::cout << text;
        } else {
            std::ofstream out(dot_path, std::ios::binary);
            if (!out) throw error("FileError", "FileError: cannot write " + dot_path);
            out << text;
        }
        return 0;
    }
    std::string sig = diagram_signature(s);
    if (sig.empty()) {
        std::cout << "(no edges)\n";
    } else {
        for (char& c : sig)
            if (c == ';') c = '\n';
        std::cout << sig << "\n";
    }
    return 0;
}

int cmd_restrict(const std::string& path, const std::string& indices) {
    CartanScheme s = read_scheme_file(path);
    std::vector<int> J;
    std::stringstream ss(indices);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        int v = std::stoi(part);
        J.push_back(v - 1);
    }
    std::cout << scheme_to_json(restrict_scheme(s, J));
    return 0;
}

int cmd_decompose(const std::string& path) {
    CartanScheme s = read_scheme_file(path);
    auto comps = decompose_scheme(s);
    std::cout << "components: " << comps.size() << "\n";
    for (size_t k = 0; k < comps.size(); ++k) {
        std::cout << "component " << (k + 1) << ": indices";
        for (int i : comps[k]) std::cout << " " << (i + 1);
        std::cout << "\n";
    }
    return 0;
}

json record_json(const ClassificationRecord& rec) {
    json j;
    j["objects"] = rec.nobj;
    j["rank"] = rec.rank;
    j["total_morphisms"] = rec.total_morphisms;
    j["positive_roots"] = rec.positive_roots;
    j["stabilizer_order"] = rec.stabilizer_order;
    j["stabilizer_type"] = rec.stabilizer_type;
    j["standard"] = rec.standard;
    j["diagram"] = rec.diagram;
    j["source_cell"] = rec.source_cell;
    j["raw_count"] = rec.raw_count;
    j["scheme"] = json::parse(scheme_to_json(rec.scheme));
    return j;
}

int cmd_classify(int rank, int objects, int bound, int jobs, bool keep, int cap,
                 const std::string& format) {
    SearchOptions opt;
    opt.keep_reducible = keep;
    opt.jobs = jobs;
    opt.fin.root_cap = cap;
    opt.pair_cap = cap;
    ClassifyResult res = classify_all(rank, objects, bound, opt);
    if (format == "json") {
        json j;
        j["rank"] = rank;
        j["objects"] = objects;
        j["bound"] = bound;
        j["records"] = json::array();
        for (const auto& rec : res.records) j["records"].push_back(record_json(rec));
        j["cells"] = res.cells;
        j["pair_cells"] = res.pair_cells;
        j["inconclusive"] = res.inconclusive;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "|A|,|I|,|W|,|R+|,stabilizer,standard,diagram,source_cell\n";
        for (const auto& rec : res.records)
            std::cout << rec.nobj << "," << rec.rank << "," << rec.total_morphisms << ","
                      << rec.positive_roots << "," << rec.stabilizer_type << ","
                      << (rec.standard ? "yes" : "no") << "," << rec.diagram << ","
                      << rec.source_cell << "\n";
    } else {
        std::cout << "records: " << res.records.size() << "\n";
        size_t n = 0;
        for (const auto& rec : res.records) {
            std::cout << "record " << ++n << ": objects " << rec.nobj << ", rank " << rec.rank
                      << ", |W| " << rec.total_morphisms << ", |R+| " << rec.positive_roots
                      << ", stabilizer " << rec.stabilizer_type << " (order "
                      << rec.stabilizer_order << "), "
                      << (rec.standard ? "standard" : "non-standard") << ", diagram ["
                      << rec.diagram << "], raw " << rec.raw_count << ", cell ["
                      << rec.source_cell << "]\n";
        }
        std::cout << "cells examined: " << res.cells << " (pair cells " << res.pair_cells
                  << ")\n";
        if (!res.inconclusive.empty()) {
            std::cout << "inconclusive cells: " << res.inconclusive.size() << "\n";
            for (const auto& c : res.inconclusive) std::cout << "  " << c << "\n";
        }
    }
    return 0;
}

int cmd_table(const std::string& format) {
    std::vector<TableRow> rows = classification_table();
    if (format == "json") {
        json j = json::array();
        for (const auto& row : rows) {
            json r;
            r["objects"] = row.nobj;
            r["rank"] = row.rank;
            r["total_morphisms"] = row.total_morphisms;
            r["positive_roots"] = row.positive_roots;
            r["stabilizer_order"] = row.stabilizer_order;
            r["stabilizer_type"] = row.stabilizer_type;
            j.push_back(r);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << row.nobj << "," << row.rank << "," << row.total_morphisms << ","
                      << row.positive_roots << "," << row.stabilizer_type << "\n";
    }
    return 0;
}

int cmd_equiv(const std::string& path1, const std::string& path2) {
    CartanScheme s1 = read_scheme_file(path1);
    CartanScheme s2 = read_scheme_file(path2);
    std::optional<EquivalenceWitness> w;
    try {
        w = schemes_equivalent(s1, s2);
    } catch (const error&) {
        w = std::nullopt;  // rank/object-count mismatch: plainly not equivalent
    }
    if (!w) {
        std::cout << "not equivalent\n";
        return 1;
    }
    std::cout << "equivalent\n";
    std::cout << "phi0:";
    for (size_t i = 0; i < w->phi0.size(); ++i)
        std::cout << " " << (i + 1) << "->" << (w->phi0[i] + 1);
    std::cout << "\nphi1:";
    for (size_t a = 0; a < w->phi1.size(); ++a)
        std::cout << " " << s1.objects[a] << "->"
                  << s2.objects[static_cast<size_t>(w->phi1[a])];
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weylkit: Cartan schemes, Weyl groupoids, and finite root systems"};
    app.require_subcommand(1);
    std::string path, path2, format = "text", dot_path, indices;
    int cap = env_cap(512), gcap = env_cap(100000), rank = 2, objects = 1, bound = 8, jobs = 1;
    bool keep = false;

    auto* validate = app.add_subcommand("validate", "Check a scheme file against the axioms");
    validate->add_option("file", path)->required();

    auto* roots = app.add_subcommand("roots", "Root closure verdict and positive roots");
    roots->add_option("file", path)->required();
    roots->add_option("--cap", cap, "per-object root cap");
    roots->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* groupoid = app.add_subcommand("groupoid", "Generate the groupoid of a scheme");
    groupoid->add_option("file", path)->required();
    groupoid->add_option("--cap", gcap, "per-hom-set morphism cap");
    groupoid->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* diagram = app.add_subcommand("diagram", "Object change diagram");
    diagram->add_option("file", path)->required();
    diagram->add_option("--dot", dot_path, "write Graphviz DOT to this path ('-' = stdout)");

    auto* restrict_cmd = app.add_subcommand("restrict", "Restrict a scheme to an index subset");
    restrict_cmd->add_option("file", path)->required();
    restrict_cmd->add_option("--indices", indices, "comma-separated 1-based index list")
        ->required();

    auto* decompose = app.add_subcommand("decompose", "Connected components of the index set");
    decompose->add_option("file", path)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Bounded exhaustive classification");
    classify_cmd->add_option("--rank", rank)->required()->check(CLI::Range(1, 4));
    classify_cmd->add_option("--objects", objects)->required()->check(CLI::Range(1, 3));
    classify_cmd->add_option("--bound", bound)->check(CLI::Range(1, 64));
    classify_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 64));
    classify_cmd->add_option("--cap", cap, "per-object root cap");
    classify_cmd->add_flag("--keep", keep, "keep reducible records");
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* table = app.add_subcommand("table", "The nine non-standard finite schemes");
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two scheme files");
    equiv->add_option("file1", path)->required();
    equiv->add_option("file2", path2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(path);
        if (*roots) return cmd_roots(path, cap, format);
        if (*groupoid) return cmd_groupoid(path, gcap, format);
        if (*diagram) return cmd_diagram(path, dot_path);
        if (*restrict_cmd) return cmd_restrict(path, indices);
        if (*decompose) return cmd_decompose(path);
        if (*classify_cmd) return cmd_classify(rank, objects, bound, jobs, keep, cap, format);
        if (*table) return cmd_table(format);
        if (*equiv) return cmd_equiv(path, path2);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
