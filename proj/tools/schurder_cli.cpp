#include "json_io.hpp"
#include "sweeps.hpp"

#include "schurder/a2.hpp"
#include "schurder/f3.hpp"
#include "schurder/homotopy.hpp"
#include "schurder/random.hpp"
#include "schurder/schur.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace schurder;
using io::json;

namespace {

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// Field used for exact arithmetic. Only the rationals drive the oracles;
// a prime-field request is refused rather than silently ignored.
void check_field_mode() {
    const char* mode = std::getenv("SCHURDER_FIELD");
    if (!mode) return;
    const std::string m = mode;
    if (m.empty() || m == "rational" || m == "Q") return;
    throw Error("unsupported-field", "SCHURDER_FIELD=" + m + ": only \"rational\" is implemented");
}

CohomologyVector parse_cohomology(const std::string& text) {
    CohomologyVector h;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw Error("invalid-params", "cohomology entries look like degree:dim");
        try {
            const int deg = std::stoi(item.substr(0, colon)), dim = std::stoi(item.substr(colon + 1));
            if (dim < 0) throw Error("invalid-params", "negative dimension in " + item);
            if (dim > 0) h[deg] += dim;
        } catch (const std::logic_error&) {
            throw Error("invalid-params", "bad cohomology entry " + item);
        }
    }
    return h;
}

json partition_json(const Partition& p) { return json(p); }

json classify_json(const SchurSpec& s) {
    Classification c = classify(s);
    MoritaReport m = block_morita_types(s);
    json j{{"schema", "1"},
           {"p", s.p},
           {"n", s.n},
           {"d", s.d},
           {"semisimple", c.semisimple},
           {"repr_type", to_string(c.repr)},
           {"derived_type", to_string(c.derived)},
           {"clause", c.clause},
           {"repr_clause", c.repr_clause},
           {"blocks", {{"types", m.types}, {"covered", m.covered}}}};
    if (s.r) j["r"] = *s.r;
    return j;
}

json blocks_json(int d, int p, int n) {
    BlockReport r = symmetric_blocks(d, p, n);
    json blocks = json::array();
    for (auto& b : r.blocks) {
        json members = json::array();
        for (auto& m : b.members) members.push_back(partition_json(m));
        blocks.push_back({{"core", partition_json(b.core)}, {"members", members}, {"s", b.s}, {"morita_type", b.morita_type}});
    }
    return {{"schema", "1"}, {"d", d}, {"p", p}, {"n", n}, {"in_range", r.in_range}, {"blocks", blocks}};
}

json word_json(const std::string& text) {
    f3::Word w = f3::parse_word(text);
    f3::WordInfo info = f3::classify_word(w);
    json j{{"schema", "1"}, {"word", f3::to_string(w)}, {"valid", info.valid}};
    if (!info.valid) {
        j["violation"] = info.violation;
        return j;
    }
    j.update({{"full", info.full},
              {"cycle", info.cycle},
              {"aperiodic", info.aperiodic},
              {"simple", info.simple},
              {"d_l", info.d_l},
              {"d_r", info.d_r}});
    if (info.full && info.simple) {
        const int d = info.d_l + info.d_r;
        j["string_type"] = d == 0 ? "usual" : d == 1 ? "special" : "bispecial";
        if (d < 2) {
            const std::string clause = f3::psi_clause(f3::make_string(w, 0));
            j["psi"] = !clause.empty();
            if (!clause.empty()) j["psi_clause"] = clause;
        } else {
            j["psi"] = false;
        }
    }
    return j;
}

json f3_json(int max_length, bool bands, const std::vector<std::string>& eigen, bool truncations) {
    std::vector<Rational> lambdas;
    if (bands)
        for (auto& e : eigen) lambdas.push_back(parse_rational(e));
    const Algebra& alg = catalog_get("F", 3).algebra;
    json out = json::array();
    for (auto& e : f3::enumerate_db_f3(max_length, lambdas, truncations)) {
        json item{{"origin", e.origin}, {"band", e.is_band}, {"truncated", e.truncated}, {"psi", e.psi},
                  {"nonperfect", e.nonperfect}, {"complex", io::complex_json("F3", alg, e.complex)}};
        if (e.truncation) {
            const ModuleRep& k = e.truncation->terms.front();
            json dims = json::object();
            for (int v = 0; v < alg.quiver().num_vertices(); ++v) dims[alg.quiver().vertices()[v]] = k.dims[v];
            item["kernel"] = {{"degree", e.truncation->lo}, {"dims", dims}};
        }
        out.push_back(item);
    }
    return {{"schema", "1"}, {"objects", out}};
}

struct LoadedComplex {
    const Algebra* alg;
    std::string label;
    ProjComplex c;
};

LoadedComplex load_complex(const std::string& path) {
    json j = io::read_file(path);
    if (!j.is_object() || !j.contains("algebra")) throw Error("schema-violation", "/algebra: missing");
    const Algebra& alg = io::algebra_from_json(j["algebra"]);
    return {&alg, j["algebra"].is_string() ? j["algebra"].get<std::string>() : alg.name(), io::complex_from_json(alg, j)};
}

int selftest(int f3_length) {
    std::vector<CheckResult> rows{sweeps::catalog(f3_length), sweeps::a2_shapes(), sweeps::f3_objects(f3_length, f3_length),
                                  sweeps::band_family(), sweeps::witnesses()};
    bool ok = true;
    std::cout << std::left << std::setw(24) << "check" << std::setw(6) << "ok" << "detail\n";
    for (auto& r : rows) {
        std::cout << std::setw(24) << r.name << std::setw(6) << (r.passed ? "yes" : "NO") << r.detail << "\n";
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Derived representation type of Schur algebras: classifier, catalog and enumerators"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "Seed for the oracle's random sampling");

    SchurSpec spec;
    int r_value = 0;
    auto* classify_cmd = app.add_subcommand("classify", "Decide the derived type of a Schur algebra");
    auto* classify_schur = classify_cmd->add_subcommand("schur", "S(n,d) or S(n,d)_r over characteristic p");
    classify_cmd->require_subcommand(1);
    classify_schur->add_option("-p", spec.p, "Characteristic (prime)")->required();
    classify_schur->add_option("-n", spec.n, "n >= 1")->required();
    classify_schur->add_option("-d", spec.d, "d >= 0")->required();
    auto* r_opt = classify_schur->add_option("-r", r_value, "Frobenius twist r >= 1 for S(n,d)_r");

    int bd = 0, bp = 2, bn = 1;
    auto* blocks_cmd = app.add_subcommand("blocks", "Blocks of the symmetric group via p-cores");
    blocks_cmd->add_option("-d", bd)->required();
    blocks_cmd->add_option("-p", bp)->required();
    blocks_cmd->add_option("-n", bn)->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "Named quivers with relations");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "List catalog names");
    std::string show_name;
    int show_m = 0;
    auto* catalog_show = catalog_cmd->add_subcommand("show", "Show one entry as quiver JSON");
    catalog_show->add_option("name", show_name, "Name such as D4, or A3 / F5")->required();
    catalog_show->add_option("-m", show_m, "Parameter for A and F");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Indecomposables of the derived category");
    enumerate_cmd->require_subcommand(1);
    std::string coh;
    auto* enum_a1 = enumerate_cmd->add_subcommand("a1", "Indecomposables over A_1 with given cohomology");
    enum_a1->add_option("--cohomology", coh, "degree:dim,...")->required();
    auto* enum_a2 = enumerate_cmd->add_subcommand("a2", "Indecomposables over A_2 with given cohomology");
    enum_a2->add_option("--cohomology", coh, "degree:dim,...")->required();
    int max_length = 2;
    bool with_bands = false, truncations = false, bispecial = false;
    std::vector<std::string> eigen{"1"};
    auto* enum_f3 = enumerate_cmd->add_subcommand("f3", "P(M) for strings and bands of C(F_3)");
    enum_f3->add_option("--max-length", max_length)->required()->check(CLI::Range(0, 12));
    enum_f3->add_flag("--bands", with_bands, "Include bands");
    enum_f3->add_option("--eigenvalues", eigen, "Band eigenvalues, e.g. 1,2,3")->delimiter(',');
    enum_f3->add_flag("--truncations", truncations, "Add the good truncation of each member of Psi");
    enum_f3->add_flag("--bispecial", bispecial, "Enable the unverified bispecial construction");

    std::string file_x, file_y;
    auto* verify_cmd = app.add_subcommand("verify", "Check d^2 = 0 and the radical condition");
    verify_cmd->add_option("complex", file_x, "Complex JSON")->required()->check(CLI::ExistingFile);
    auto* hom_cmd = app.add_subcommand("hom", "Dimensions of Hom in the homotopy category");
    hom_cmd->add_option("x", file_x)->required()->check(CLI::ExistingFile);
    hom_cmd->add_option("y", file_y)->required()->check(CLI::ExistingFile);
    auto* indec_cmd = app.add_subcommand("indec", "Indecomposability in the homotopy category");
    indec_cmd->add_option("complex", file_x)->required()->check(CLI::ExistingFile);

    int wcase = 1, wdim = 0, wm = 3;
    std::string wrep, wfamily = "A";
    auto* witness_cmd = app.add_subcommand("witness", "Wildness witness complex from a quiver representation");
    witness_cmd->add_option("--case", wcase)->required()->check(CLI::Range(1, 8));
    auto* rep_opt = witness_cmd->add_option("--rep", wrep, "Representation JSON")->check(CLI::ExistingFile);
    auto* random_opt = witness_cmd->add_option("--random", wdim, "Random representation of this dimension");
    rep_opt->excludes(random_opt);
    witness_cmd->add_option("--family", wfamily, "Case 8 algebra: A, F or R4");
    witness_cmd->add_option("--m", wm, "Case 8 parameter");

    std::string word_text;
    auto* word_cmd = app.add_subcommand("word", "C(F_3) words");
    word_cmd->require_subcommand(1);
    auto* word_classify = word_cmd->add_subcommand("classify", "Validity, shape and Psi membership of a word");
    word_classify->add_option("word", word_text, "e.g. \"<q0>~<z1>-<p1>\"")->required();

    int st_length = 4;
    auto* selftest_cmd = app.add_subcommand("selftest", "Catalog self-test and property sweeps");
    selftest_cmd->add_option("--f3-length", st_length)->check(CLI::Range(0, 8));

    try {
        app.parse(argc, argv);
        if (witness_cmd->parsed() && wrep.empty() && wdim <= 0)
            throw CLI::ValidationError("witness", "needs --rep FILE or --random DIM");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        check_field_mode();
        seed_oracle(seed);
        if (classify_schur->parsed()) {
            if (*r_opt) spec.r = r_value;
            validate(spec);
            print(classify_json(spec));
        } else if (blocks_cmd->parsed()) {
            validate(SchurSpec{bp, bn, bd, std::nullopt});
            print(blocks_json(bd, bp, bn));
        } else if (catalog_list->parsed()) {
            json out = json::array();
            for (auto& n : catalog_names()) {
                const bool family = n == "A" || n == "F";
                out.push_back({{"name", n}, {"parametrized", family},
                               {"arises_from", family ? catalog_get(n, n == "A" ? 1 : 3).arises_from : catalog_get(n).arises_from}});
            }
            print({{"schema", "1"}, {"entries", out}});
        } else if (catalog_show->parsed()) {
            auto [name, m] = io::parse_label(show_name);
            if (show_m) m = show_m;
            const CatalogEntry& e = catalog_get(name, m);
            json j = io::quiver_json(e.algebra.name(), e.algebra.quiver(), e.algebra.relations());
            j["dimension"] = e.algebra.dim();
            j["arises_from"] = e.arises_from;
            print(j);
        } else if (enum_a1->parsed()) {
            print({{"schema", "1"}, {"degrees", enumerate_a1(parse_cohomology(coh))}});
        } else if (enum_a2->parsed()) {
            const Algebra& alg = catalog_get("A", 2).algebra;
            json out = json::array();
            for (auto& x : enumerate_a2(parse_cohomology(coh)))
                out.push_back({{"shape", to_string(x)}, {"complex", io::complex_json("A2", alg, realize(x))}});
            print({{"schema", "1"}, {"objects", out}});
        } else if (enum_f3->parsed()) {
            f3::set_bispecial_enabled(bispecial);
            print(f3_json(max_length, with_bands, eigen, truncations));
        } else if (verify_cmd->parsed()) {
            LoadedComplex x = load_complex(file_x);
            json j{{"schema", "1"}, {"algebra", x.label}, {"valid", check_complex(*x.alg, x.c)},
                   {"in_frak_p", in_frak_p(*x.alg, x.c)}};
            if (auto deg = first_noncomposing_degree(*x.alg, x.c)) j["failing_degrees"] = {*deg, *deg + 1};
            print(j);
        } else if (hom_cmd->parsed()) {
            LoadedComplex x = load_complex(file_x), y = load_complex(file_y);
            if (x.alg != y.alg) throw Error("invalid-params", "complexes live over different algebras");
            ChainMapSpace h = hom_complex(*x.alg, x.c, y.c);
            print({{"schema", "1"}, {"chain_maps", h.dim_chain()}, {"null_homotopic", h.dim_null()},
                   {"hom_K", h.dim_homotopy()}});
        } else if (indec_cmd->parsed()) {
            LoadedComplex x = load_complex(file_x);
            print({{"schema", "1"}, {"indecomposable", is_indecomposable(*x.alg, x.c)}});
        } else if (witness_cmd->parsed()) {
            const Quiver& q = catalog_get(witness_quiver(wcase)).algebra.quiver();
            ModuleRep rep = wrep.empty() ? random_witness_rep(wcase, wdim, oracle_rng()) : io::rep_from_json(q, io::read_file(wrep));
            Witness w = wildness_witness(wcase, rep, wfamily, wm);
            print({{"schema", "1"}, {"case", wcase}, {"input", io::rep_json(witness_quiver(wcase), q, rep)},
                   {"complex", io::complex_json(w.algebra->name(), *w.algebra, w.complex)}});
        } else if (word_classify->parsed()) {
            print(word_json(word_text));
        } else if (selftest_cmd->parsed()) {
            return selftest(st_length);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"schema", "1"}, {"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
