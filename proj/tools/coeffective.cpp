// Command-line surface: validate models, build extended complexes, compute
// and cross-check cohomology, run ellipticity and local-exactness sweeps.
//
// Exit codes: 0 success (and every match flag true), 1 mismatch or failed
// validation, 2 input errors (with machine-readable JSON on stderr).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "coeffective/builder.hpp"
#include "coeffective/homology.hpp"
#include "coeffective/model.hpp"
#include "coeffective/serialize.hpp"
#include "coeffective/strands.hpp"

using namespace coeffective;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

struct RunConfig {
    std::string builtin_name;
    std::string model_path;
    std::string shape;  // symbol-check / local-exactness
    std::string format = "markdown";
    std::string out_path;
    std::string emit_model_path;
    int n = 0;
    int samples = 100;
    int max_homogeneity = -1;
    std::uint64_t seed = kDefaultSeed;
    bool second_half_only = false;
};

[[noreturn]] void input_error(const std::string& code, const std::string& message) {
    ordered_json err;
    err["error"]["code"] = code;
    err["error"]["message"] = message;
    std::cerr << err.dump(2) << "\n";
    std::exit(2);
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) input_error("io", "cannot open output path: " + cfg.out_path);
    out << text;
}

ModelData load_model_data(const RunConfig& cfg) {
    if (!cfg.model_path.empty()) return parse_model_file(cfg.model_path);
    if (cfg.builtin_name.empty()) input_error("usage", "need --builtin or --model");
    Builtin b = builtin(cfg.builtin_name, cfg.n, cfg.max_homogeneity);
    if (!b.is_model())
        input_error("usage",
                    "builtin '" + cfg.builtin_name + "' has no cochain model for this subcommand");
    return b.model();
}

std::string dims_csv(const std::vector<std::pair<std::string, std::vector<int>>>& rows) {
    std::ostringstream os;
    os << "name,degree,dim\n";
    for (const auto& [name, dims] : rows)
        for (size_t r = 0; r < dims.size(); ++r) os << name << "," << r << "," << dims[r] << "\n";
    return os.str();
}

// deterministic covector sampling: integer components uniform in [-9, 9],
// the whole covector resampled while zero
Form sample_covector(std::mt19937_64& rng, int m) {
    while (true) {
        Form xi(m);
        for (int i = 1; i <= m; ++i) {
            int c = static_cast<int>(rng() % 19) - 9;
            if (c != 0) xi.add_term(Blade(m, {i}), Rational(c));
        }
        if (!xi.is_zero()) return xi;
    }
}

bool exact_at(const CochainComplex& cx, const std::vector<int>& ranks, int r) {
    int out = (r < static_cast<int>(ranks.size())) ? ranks[r] : 0;
    int in = (r > 0) ? ranks[r - 1] : 0;
    return cx.dims[r] - out == in;
}

std::vector<int> complex_ranks(const CochainComplex& cx) {
    std::vector<int> ranks(cx.diffs.size());
    for (size_t r = 0; r < cx.diffs.size(); ++r) ranks[r] = rank(cx.diffs[r]);
    return ranks;
}

Calibration shape_calibration(const RunConfig& cfg) {
    if (cfg.shape == "symplectic") {
        if (cfg.n < 1) input_error("usage", "--shape symplectic needs --n >= 1");
        return standard_symplectic(cfg.n);
    }
    if (cfg.shape == "g2") return standard_g2();
    input_error("usage", "--shape must be symplectic or g2");
}

int exit_for_validation(const ValidationReport& rep, const RunConfig& cfg) {
    std::string text =
        cfg.format == "json" ? validation_to_json(rep).dump(2) : validation_to_markdown(rep);
    write_output(cfg, text);
    return rep.ok ? 0 : 1;
}

// ---- subcommands -----------------------------------------------------------

int cmd_validate(const RunConfig& cfg) {
    ModelData m;
    try {
        m = load_model_data(cfg);
    } catch (const ModelError& e) {
        if (e.code == "jacobi") {
            ValidationReport rep;
            rep.ok = false;
            rep.code = ValidationReport::Code::DSquaredNonzero;
            rep.message = e.what();
            return exit_for_validation(rep, cfg);
        }
        input_error("model", e.what());
    }
    if (!cfg.emit_model_path.empty()) {
        std::ofstream out(cfg.emit_model_path, std::ios::binary);
        if (!out) input_error("io", "cannot open " + cfg.emit_model_path);
        out << model_to_json(m).dump(2) << "\n";
    }
    auto rep = validate_structure(StructureData::from_model_data(m));
    if (rep.ok && cfg.format != "json") {
        std::ostringstream os;
        os << validation_to_markdown(rep);
        os << "\ncolumn profile of the calibration form:\n\n";
        os << profile_to_markdown(column_profile(m.F));
        write_output(cfg, os.str());
        return 0;
    }
    if (rep.ok && cfg.format == "json") {
        ordered_json j = validation_to_json(rep);
        j["column_profile"] = profile_to_json(column_profile(m.F));
        write_output(cfg, j.dump(2));
        return 0;
    }
    return exit_for_validation(rep, cfg);
}

int cmd_cohomology(const RunConfig& cfg) {
    ModelData m = load_model_data(cfg);
    auto plain = twisted_cohomology(m.model, Form(m.model.dim), 0);
    Form dalpha = m.model.d(m.alpha);
    if (!dalpha.is_zero()) {
        ValidationReport rep;
        rep.ok = false;
        rep.code = ValidationReport::Code::AlphaNotClosed;
        rep.offending = dalpha;
        rep.message = "d alpha != 0; no twisted table";
        return exit_for_validation(rep, cfg);
    }
    auto twisted = twisted_cohomology(m.model, m.alpha, 2);
    if (cfg.format == "json") {
        ordered_json j;
        j["model"] = m.model.name;
        j["betti_plain"] = plain.dims;
        j["betti_twisted_weight2"] = twisted.dims;
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        write_output(cfg, dims_csv({{"plain", plain.dims}, {"twisted_weight2", twisted.dims}}));
    } else {
        std::ostringstream os;
        os << "## " << m.model.name << "\n\n";
        os << table_to_markdown(plain, "plain");
        os << "\n" << table_to_markdown(twisted, "twisted (weight 2)");
        write_output(cfg, os.str());
    }
    return 0;
}

void require_complex_kind(const ModelData& m) {
    if (m.kind == CalKind::Generic)
        input_error("usage", "this subcommand needs a symplectic or g2 calibration");
}

int cmd_build(const RunConfig& cfg) {
    ModelData m = load_model_data(cfg);
    require_complex_kind(m);
    auto rep = validate_structure(StructureData::from_model_data(m));
    if (!rep.ok) return exit_for_validation(rep, cfg);
    if (cfg.format == "csv") input_error("usage", "build emits matrices; use --format json");
    auto built = build_extended_complex(StructureData::from_model_data(m));
    ordered_json j = complex_to_json(built);
    j["model"] = m.model.name;
    write_output(cfg, j.dump(2));
    return 0;
}

int cmd_hj(const RunConfig& cfg) {
    ModelData m = load_model_data(cfg);
    require_complex_kind(m);
    auto rep = validate_structure(StructureData::from_model_data(m));
    if (!rep.ok) return exit_for_validation(rep, cfg);
    auto built = build_extended_complex(StructureData::from_model_data(m));
    CohomologyTable table = cohomology(built.cochain());
    if (cfg.format == "json") {
        ordered_json j;
        j["model"] = m.model.name;
        j["dims"] = table.dims;
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        write_output(cfg, dims_csv({{m.model.name, table.dims}}));
    } else {
        write_output(cfg, table_to_markdown(table, m.model.name));
    }
    return 0;
}

LESComparison les_for_model(const ModelData& m) {
    LESComparison cmp;
    cmp.model_name = m.model.name;
    StructureData s = StructureData::from_model_data(m);
    auto plain = model_cohomology(s.model, s.alpha, 0);
    auto twisted = model_cohomology(s.model, s.alpha, 2);
    auto cups = cup_family(plain, twisted, s.F);
    LESKind kind = s.kind == CalKind::G2 ? LESKind::G2 : LESKind::Symplectic;
    cmp.report = les_predict(kind, s.model.dim / 2, plain.table.dims, twisted.table.dims, cups);
    cmp.direct = cohomology(build_extended_complex(s).cochain()).dims;
    cmp.has_direct = true;
    cmp.match = cmp.direct == cmp.report.predicted;
    return cmp;
}

LESComparison les_for_ring(const RingModel& ring, int n) {
    LESComparison cmp;
    cmp.model_name = ring.name;
    cmp.report = les_predict(LESKind::Symplectic, n, ring.betti, ring.betti, ring.cup);
    cmp.has_direct = false;
    cmp.match = true;  // nothing to disagree with: ring models have no cochain model
    return cmp;
}

int emit_les(const RunConfig& cfg, const LESComparison& cmp) {
    if (cfg.format == "json")
        write_output(cfg, les_to_json(cmp).dump(2));
    else if (cfg.format == "csv")
        write_output(cfg, les_to_csv(cmp));
    else
        write_output(cfg, les_to_markdown(cmp));
    return cmp.match ? 0 : 1;
}

int cmd_les(const RunConfig& cfg) {
    if (cfg.model_path.empty() && cfg.builtin_name == "cpn") {
        if (cfg.n < 1) input_error("usage", "cpn requires --n >= 1");
        return emit_les(cfg, les_for_ring(builtin("cpn", cfg.n).ring(), cfg.n));
    }
    ModelData m = load_model_data(cfg);
    require_complex_kind(m);
    auto rep = validate_structure(StructureData::from_model_data(m));
    if (!rep.ok) return exit_for_validation(rep, cfg);
    return emit_les(cfg, les_for_model(m));
}

int cmd_symbol_check(const RunConfig& cfg) {
    if (cfg.samples < 1) input_error("usage", "--samples must be >= 1");
    Calibration cal = shape_calibration(cfg);
    std::mt19937_64 rng(cfg.seed);
    int passed = 0;
    std::vector<Form> failures;
    for (int s = 0; s < cfg.samples; ++s) {
        Form xi = sample_covector(rng, cal.dim);
        bool ok = true;
        if (cfg.second_half_only) {
            auto cx = symbol_complex_second_half(cal, xi);
            auto ranks = complex_ranks(cx);
            if (exact_at(cx, ranks, 0)) ok = false;  // must fail at the first position
            for (int r = 1; r < cx.length(); ++r)
                if (!exact_at(cx, ranks, r)) ok = false;
        } else {
            auto cx = symbol_complex(cal, xi);
            auto ranks = complex_ranks(cx);
            for (int r = 0; r < cx.length(); ++r)
                if (!exact_at(cx, ranks, r)) ok = false;
        }
        if (ok)
            ++passed;
        else
            failures.push_back(xi);
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["shape"] = cfg.shape;
        if (cfg.shape == "symplectic") j["n"] = cfg.n;
        j["second_half_only"] = cfg.second_half_only;
        j["seed"] = cfg.seed;
        j["samples"] = cfg.samples;
        j["passed"] = passed;
        j["failures"] = ordered_json::array();
        for (const auto& xi : failures) j["failures"].push_back(form_to_json(xi));
        write_output(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << passed << "/" << cfg.samples << " exact";
        if (cfg.second_half_only) os << " (second half: exact except at the first position)";
        os << "\n";
        for (const auto& xi : failures) os << "failure: xi = " << form_to_json(xi).dump() << "\n";
        write_output(cfg, os.str());
    }
    return failures.empty() ? 0 : 1;
}

int cmd_local_exactness(const RunConfig& cfg) {
    Calibration cal = shape_calibration(cfg);
    int max_h =
        cfg.max_homogeneity >= 0 ? cfg.max_homogeneity : (cal.kind == CalKind::G2 ? 4 : 6);
    StrandBuilder sb(cal);
    // expected interior cohomology: the constants at position 0 for h = 0 and
    // one class at position 1 (symplectic, h = 2) or position 2 (G2, h = 3)
    auto expected = [&](int h, int r) -> int {
        if (h == 0 && r == 0) return 1;
        if (cal.kind == CalKind::Symplectic && h == 2 && r == 1) return 1;
        if (cal.kind == CalKind::G2 && h == 3 && r == 2) return 1;
        return 0;
    };
    bool all_match = true;
    std::vector<std::vector<int>> tables;
    for (int h = 0; h <= max_h; ++h) {
        auto dims = cohomology(sb.strand(h)).dims;
        for (int r = 0; r < static_cast<int>(dims.size()); ++r)
            if (dims[r] != expected(h, r)) all_match = false;
        tables.push_back(dims);
    }
    if (cfg.format == "json") {
        ordered_json j;
        j["shape"] = cfg.shape;
        j["ambient_dim"] = cal.dim;
        j["max_homogeneity"] = max_h;
        j["strand_cohomology"] = tables;
        j["match"] = all_match;
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        std::ostringstream os;
        os << "homogeneity,position,dim,expected,match\n";
        for (int h = 0; h <= max_h; ++h)
            for (int r = 0; r < static_cast<int>(tables[h].size()); ++r)
                os << h << "," << r << "," << tables[h][r] << "," << expected(h, r) << ","
                   << (tables[h][r] == expected(h, r) ? "true" : "false") << "\n";
        write_output(cfg, os.str());
    } else {
        std::ostringstream os;
        os << "strand cohomology, " << cfg.shape << " on Q^" << cal.dim << ":\n\n";
        os << "| h \\ position |";
        for (size_t r = 0; r < tables[0].size(); ++r) os << " " << r << " |";
        os << "\n|---|";
        for (size_t r = 0; r < tables[0].size(); ++r) os << "---|";
        os << "\n";
        for (int h = 0; h <= max_h; ++h) {
            os << "| " << h << " |";
            for (int d : tables[h]) os << " " << d << " |";
            os << "\n";
        }
        os << "\nmatch: " << (all_match ? "true" : "false") << "\n";
        write_output(cfg, os.str());
    }
    return all_match ? 0 : 1;
}

int cmd_report(const RunConfig& cfg) {
    std::ostringstream os;
    bool all_match = true;
    os << "# Extended coeffective complexes: verification report\n\n";
    os << "Exact computations over Q on built-in models. Direct columns are the\n";
    os << "cohomology of the built complex; predicted columns come from the\n";
    os << "long-exact-sequence rule on plain and twisted Betti numbers with the\n";
    os << "cup-product connecting maps.\n\n";

    for (int n : {2, 3}) {
        auto cmp = les_for_ring(builtin("cpn", n).ring(), n);
        os << les_to_markdown(cmp) << "\n";
        all_match = all_match && cmp.match;
    }
    for (const char* name : {"torus", "torus7_g2", "hopf4", "kodaira_thurston"}) {
        Builtin b = std::string(name) == "torus" ? builtin("torus", 2) : builtin(name);
        auto cmp = les_for_model(b.model());
        os << les_to_markdown(cmp) << "\n";
        all_match = all_match && cmp.match;
    }
    {
        auto hopf = builtin("hopf4").model();
        auto tw = twisted_cohomology(hopf.model, hopf.alpha, 2);
        os << "### hopf4 twisted Betti numbers (weight 2)\n\n";
        os << table_to_markdown(tw, "twisted");
        bool all_zero = true;
        for (int d : tw.dims) all_zero = all_zero && d == 0;
        os << "\nall zero: " << (all_zero ? "true" : "false") << "\n\n";
        all_match = all_match && all_zero;
    }
    os << "## overall\n\nmatch: " << (all_match ? "true" : "false") << "\n";
    write_output(cfg, os.str());
    return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for extended coeffective complexes on symplectic, "
                 "conformally symplectic, and G2 models"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool model_flags = true) {
        sub->add_option("--format", cfg.format, "json | markdown | csv")
            ->check(CLI::IsMember({"json", "markdown", "csv"}));
        sub->add_option("--out", cfg.out_path, "write the report to a file instead of stdout");
        if (model_flags) {
            sub->add_option("--builtin", cfg.builtin_name, "built-in model name");
            sub->add_option("--model", cfg.model_path, "path to a model JSON file");
            sub->add_option("--n", cfg.n, "parameter for torus/cpn builtins");
        }
    };

    auto* validate = app.add_subcommand(
        "validate", "check a structure: d^2, Lee form, structure equation, column profile");
    add_common(validate);
    validate->add_option("--emit-model", cfg.emit_model_path,
                         "also write the parsed model back out as schema JSON");

    auto* cohom = app.add_subcommand("cohomology", "plain and weight-2 twisted Betti tables");
    add_common(cohom);

    auto* build = app.add_subcommand("build", "serialize the extended complex");
    add_common(build);

    auto* hj = app.add_subcommand("hj", "direct cohomology table of the built complex");
    add_common(hj);

    auto* les = app.add_subcommand("les", "long-exact-sequence prediction and match flag");
    add_common(les);

    auto* symbol = app.add_subcommand("symbol-check", "random-covector exactness sweep");
    add_common(symbol, false);
    symbol->add_option("--shape", cfg.shape, "symplectic | g2")->required();
    symbol->add_option("--n", cfg.n, "half-dimension for the symplectic shape");
    symbol->add_option("--samples", cfg.samples, "number of covectors");
    symbol->add_option("--seed", cfg.seed, "RNG seed (fixed default for reproducibility)");
    symbol->add_flag("--second-half-only", cfg.second_half_only,
                     "sweep only the coeffective half (exact except at its first position)");

    auto* local = app.add_subcommand("local-exactness", "polynomial strand sweep");
    add_common(local, false);
    local->add_option("--shape", cfg.shape, "symplectic | g2")->required();
    local->add_option("--n", cfg.n, "half-dimension for the symplectic shape");
    local->add_option("--max-homogeneity", cfg.max_homogeneity, "sweep strands h = 0..H");

    auto* report = app.add_subcommand("report", "one-shot verification report (markdown)");
    add_common(report, false);
    report->add_option("--seed", cfg.seed, "unused; accepted for reproducible pipelines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(cfg);
        if (cohom->parsed()) return cmd_cohomology(cfg);
        if (build->parsed()) return cmd_build(cfg);
        if (hj->parsed()) return cmd_hj(cfg);
        if (les->parsed()) return cmd_les(cfg);
        if (symbol->parsed()) return cmd_symbol_check(cfg);
        if (local->parsed()) return cmd_local_exactness(cfg);
        if (report->parsed()) return cmd_report(cfg);
    } catch (const ModelError& e) {
        input_error(e.code == "jacobi" ? "jacobi" : "model", e.what());
    } catch (const StructureError& e) {
        ordered_json err;
        err["error"]["code"] = ValidationReport::code_name(e.report.code);
        err["error"]["message"] = e.report.message;
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        input_error("internal", e.what());
    }
    return 2;
}
