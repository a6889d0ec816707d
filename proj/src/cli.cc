// Copyright 2026 The kdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kdsim/cli.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kdsim/circuit.h"
#include "kdsim/exact_sim.h"
#include "kdsim/kd.h"
#include "kdsim/lp.h"
#include "kdsim/phase_space_sim.h"
#include "kdsim/polytope.h"
#include "kdsim/state_io.h"
#include "kdsim/version.h"
#include "kdsim/volume.h"

namespace kdsim {

namespace {

using Json = nlohmann::ordered_json;

std::string num(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return ec == std::errc() ? std::string(buf, ptr) : std::to_string(x);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Config {
    std::optional<double> tol;
    uint64_t seed = 0;
    int workers = 1;
    std::string format = "tsv";
    std::string out_path;
    std::string command_line;

    double tol_or(double fallback) const { return tol.value_or(fallback); }
};

/// Ordered key/value metadata rendered as '#' lines (TSV) or a "meta" object (JSON).
class Output {
   public:
    explicit Output(const Config &cfg) : cfg_(cfg) {
        meta_.emplace_back("version", kVersion);
        meta_.emplace_back("command", cfg.command_line);
    }

    void meta(const std::string &key, const std::string &value) { meta_.emplace_back(key, value); }
    bool json() const { return cfg_.format == "json"; }

    Json meta_json() const {
        Json j = Json::object();
        for (const auto &[k, v] : meta_) {
            j[k] = v;
        }
        return j;
    }

    std::string tsv_header() const {
        std::string s;
        for (const auto &[k, v] : meta_) {
            s += "# " + k + ": " + v + "\n";
        }
        return s;
    }

    /// `body` is the TSV payload or the JSON document without "meta".
    void emit(std::ostream &out, const std::string &tsv_body, Json body = Json::object()) const {
        std::string text;
        if (json()) {
            Json doc = Json::object();
            doc["meta"] = meta_json();
            for (auto &[k, v] : body.items()) {
                doc[k] = v;
            }
            text = doc.dump(2) + "\n";
        } else {
            text = tsv_header() + tsv_body;
        }
        if (cfg_.out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream file(cfg_.out_path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot write " + cfg_.out_path);
        }
        file << text;
    }

   private:
    const Config &cfg_;
    std::vector<std::pair<std::string, std::string>> meta_;
};

void add_common(CLI::App *sub, Config &cfg, bool with_seed, bool with_workers) {
    sub->add_option("--tol", cfg.tol, "Positivity tolerance");
    if (with_seed) {
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    }
    if (with_workers) {
        sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    }
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of standard output");
}

struct StateSource {
    std::string path;
    std::string css;
};

void add_state_source(CLI::App *sub, StateSource &src, bool positional) {
    if (positional) {
        sub->add_option("state", src.path, "Density matrix JSON file");
    } else {
        sub->add_option("--state", src.path, "Density matrix JSON file");
    }
    sub->add_option("--css", src.css, "Named CSS state css:H=<gens>;g=<bits>;x=<bits>");
}

DensityMatrix load_state(const StateSource &src) {
    if (src.path.empty() == src.css.empty()) {
        throw std::invalid_argument("give exactly one of a state file or --css");
    }
    if (!src.css.empty()) {
        return projector(CssSpec::parse(src.css).state());
    }
    return load_density_matrix(src.path);
}

std::string state_label(const StateSource &src) {
    return src.css.empty() ? src.path : src.css;
}

Json violation_json(const KDViolation &v) {
    return {{"g", v.where.g.str()},
            {"chi", v.where.chi.str()},
            {"re", v.value.real()},
            {"im", v.value.imag()},
            {"amount", v.amount}};
}

// ---------------------------------------------------------------------------

void cmd_kd(const Config &cfg, const StateSource &src, std::ostream &out) {
    double tol = cfg.tol_or(kDefaultTol);
    DensityMatrix rho = load_state(src);
    KDDistribution q = kd_distribution(rho, tol);
    bool positive = is_kd_positive(q, tol);
    double mana = kd_mana(q);
    KDViolation worst = worst_violation(q);

    Output o(cfg);
    o.meta("state", state_label(src));
    o.meta("tol", num(tol));
    o.meta("mana_log_base", "2");
    o.meta("kd_positive", positive ? "true" : "false");
    o.meta("mana_bits", num(mana));

    std::ostringstream tsv;
    tsv << "g\tchi\tre\tim\n";
    uint64_t d = uint64_t{1} << q.n;
    for (uint64_t g = 0; g < d; g++) {
        for (uint64_t c = 0; c < d; c++) {
            Complex z = q.table(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(c));
            tsv << BitVector::from_index(g, q.n).str() << "\t" << BitVector::from_index(c, q.n).str() << "\t"
                << num(z.real()) << "\t" << num(z.imag()) << "\n";
        }
    }
    Json body;
    body["kd"] = to_json(q);
    body["kd_positive"] = positive;
    body["mana_bits"] = mana;
    body["worst_violation"] = violation_json(worst);
    o.emit(out, tsv.str(), body);
}

void cmd_simulate(const Config &cfg, const std::string &circuit_path, const StateSource &src, uint64_t shots,
                  std::ostream &out) {
    double tol = cfg.tol_or(kDefaultTol);
    Circuit circuit = parse_circuit(read_text_file(circuit_path));
    PhasePointSampler sampler = [&] {
        if (!src.css.empty() && src.path.empty()) {
            return PhasePointSampler::from_css(CssSpec::parse(src.css));
        }
        return PhasePointSampler::from_table(kd_distribution(load_state(src), tol), tol);
    }();
    Histogram h = run_shots(circuit, sampler, shots, cfg.seed, cfg.workers);

    Output o(cfg);
    o.meta("circuit", circuit_path);
    o.meta("state", state_label(src));
    o.meta("seed", std::to_string(cfg.seed));
    o.meta("tol", num(tol));
    o.meta("shots", std::to_string(shots));
    Json hist = Json::object();
    for (const auto &[k, v] : h) {
        hist[k] = v;
    }
    o.emit(out, histogram_to_tsv(h), {{"shots", shots}, {"histogram", hist}});
}

void cmd_oracle(const Config &cfg, const std::string &circuit_path, const StateSource &src, std::ostream &out) {
    Circuit circuit = parse_circuit(read_text_file(circuit_path));
    DensityMatrix rho = load_state(src);
    validate_density_matrix(rho, cfg.tol_or(kDefaultTol));
    ProbabilityMap p = exact_simulate(circuit, rho);

    Output o(cfg);
    o.meta("circuit", circuit_path);
    o.meta("state", state_label(src));
    o.meta("tol", num(cfg.tol_or(kDefaultTol)));
    std::string tsv;
    Json probs = Json::object();
    for (const auto &[k, v] : p) {
        tsv += k + "\t" + num(v) + "\n";
        probs[k] = v;
    }
    o.emit(out, tsv, {{"probabilities", probs}});
}

void cmd_facets(const Config &cfg, const std::string &hrep, const std::string &vrep, std::ostream &out) {
    Output o(cfg);
    if (!vrep.empty()) {
        VertexSet set = parse_vertex_set(vrep);
        o.meta("vertex_set", vertex_set_name(set));
        std::string tsv;
        Json rows = Json::array();
        for (const auto &v : two_qubit_vertices(set)) {
            Json row = Json::array();
            for (size_t k = 0; k < v.size(); k++) {
                tsv += (k ? "\t" : "") + rational_to_string(v[k]);
                row.push_back(rational_to_string(v[k]));
            }
            tsv += "\n";
            rows.push_back(row);
        }
        o.emit(out, tsv, {{"vertices", rows}});
        return;
    }
    RationalPolytope rebit = facet_enumeration(two_qubit_vertices(VertexSet::Rebit));
    RationalPolytope css = facet_enumeration(two_qubit_vertices(VertexSet::Css));
    std::vector<Facet> shared = shared_facets(rebit, css);
    if (!hrep.empty()) {
        std::vector<Facet> chosen;
        if (hrep == "rebit") {
            chosen = rebit.facets;
        } else if (hrep == "css") {
            chosen = css.facets;
        } else if (hrep == "shared") {
            chosen = shared;
        } else {
            throw std::invalid_argument("--hrep expects rebit, css or shared");
        }
        o.meta("polytope", hrep);
        std::string text;
        Json rows = Json::array();
        for (const auto &f : chosen) {
            text += f.str() + "\n";
            rows.push_back(f.str());
        }
        o.emit(out, text, {{"facets", rows}});
        return;
    }
    std::ostringstream tsv;
    tsv << "polytope\tvertices\tfacets\taffine_dim\n";
    tsv << "rebit\t" << rebit.vertices.size() << "\t" << rebit.facets.size() << "\t" << rebit.affine_dim << "\n";
    tsv << "css\t" << css.vertices.size() << "\t" << css.facets.size() << "\t" << css.affine_dim << "\n";
    tsv << "shared\t-\t" << shared.size() << "\t-\n";
    Json shared_json = Json::array();
    for (const auto &f : shared) {
        shared_json.push_back(f.str());
    }
    Json body;
    body["rebit"] = {{"vertices", rebit.vertices.size()},
                     {"facets", rebit.facets.size()},
                     {"affine_dim", rebit.affine_dim}};
    body["css"] = {{"vertices", css.vertices.size()}, {"facets", css.facets.size()}, {"affine_dim", css.affine_dim}};
    body["shared"] = shared.size();
    body["shared_facets"] = shared_json;
    o.emit(out, tsv.str(), body);
}

void cmd_bound_scan(const Config &cfg, bool only_f, std::ostream &out) {
    std::vector<FacetScanResult> results;
    std::vector<std::string> labels;
    if (only_f) {
        results.push_back(bound_state_scan(exact_operator_coords(matrix_F())));
        labels.push_back("F");
    } else {
        RationalPolytope rebit = facet_enumeration(two_qubit_vertices(VertexSet::Rebit));
        RationalPolytope css = facet_enumeration(two_qubit_vertices(VertexSet::Css));
        std::vector<Facet> shared = shared_facets(rebit, css);
        results = bound_state_scan_all(shared, cfg.workers);
        for (const auto &f : shared) {
            labels.push_back(f.str());
        }
    }
    Output o(cfg);
    o.meta("bisection_tol", num(kBisectionTol));
    o.meta("positivity_tol", num(kScanPositivityTol));
    o.meta("workers", std::to_string(cfg.workers));
    std::ostringstream tsv;
    tsv << "facet_id\tlambda_magic\tlambda_sd\tlambda_kdpos\tfacet\n";
    Json rows = Json::array();
    for (size_t k = 0; k < results.size(); k++) {
        const auto &r = results[k];
        tsv << r.facet_id << "\t" << num(r.lambda_magic) << "\t" << num(r.lambda_sd) << "\t" << num(r.lambda_kdpos)
            << "\t" << labels[k] << "\n";
        rows.push_back({{"facet_id", r.facet_id},
                        {"lambda_magic", r.lambda_magic},
                        {"lambda_sd", r.lambda_sd},
                        {"lambda_kdpos", r.lambda_kdpos},
                        {"facet", labels[k]}});
    }
    o.emit(out, tsv.str(), {{"scans", rows}});
}

void cmd_volume(const Config &cfg, uint64_t samples, std::ostream &out) {
    double tol = cfg.tol_or(kVolumeKdTol);
    VolumeReport report = estimate_volumes(samples, cfg.seed, cfg.workers, tol);
    Output o(cfg);
    o.meta("seed", std::to_string(cfg.seed));
    o.meta("samples", std::to_string(samples));
    o.meta("kd_tol", num(tol));
    o.meta("float_lp_margin", num(kFloatLpMargin));
    o.meta("lp_float_verdicts", std::to_string(report.lp.float_verdicts));
    o.meta("lp_certified_bases", std::to_string(report.lp.certified_bases));
    o.meta("lp_exact_solves", std::to_string(report.lp.exact_solves));
    o.meta("kd_positive_not_dgbr_positive", std::to_string(report.kd_positive_not_dgbr_positive));
    o.emit(out, report.to_tsv(), {{"report", Json::parse(report.to_json())}});
}

void cmd_css_list(const Config &cfg, int n, std::ostream &out) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("css-list supports 1 <= n <= 4");
    }
    auto specs = enumerate_css_specs(n);
    Output o(cfg);
    o.meta("n", std::to_string(n));
    o.meta("count", std::to_string(specs.size()));
    std::string tsv;
    Json names = Json::array();
    for (const auto &s : specs) {
        tsv += s.str() + "\n";
        names.push_back(s.str());
    }
    o.emit(out, tsv, {{"states", names}});
}

void cmd_classify(const Config &cfg, const StateSource &src, std::ostream &out) {
    double tol = cfg.tol_or(kDefaultTol);
    DensityMatrix rho = load_state(src);
    KDDistribution q = kd_distribution(rho, tol);
    bool positive = is_kd_positive(q, tol);
    double mana = kd_mana(q);

    Output o(cfg);
    o.meta("state", state_label(src));
    o.meta("tol", num(tol));
    o.meta("mana_log_base", "2");
    Json body;
    body["n"] = rho.n;
    body["kd_positive"] = positive;
    body["mana_bits"] = mana;
    std::ostringstream tsv;
    tsv << "kd_positive\t" << (positive ? "true" : "false") << "\n";
    tsv << "mana_bits\t" << num(mana) << "\n";
    if (rho.n == 2) {
        FeasibilityResult lp = stabilizer_membership(rho, VertexSet::Stabilizer);
        const char *category = lp.feasible ? (positive ? "STAB_KDPOS" : "STAB_KDNEG")
                                           : (positive ? "MAGIC_KDPOS" : "MAGIC_KDNEG");
        body["stabilizer_mixture"] = lp.feasible;
        body["category"] = category;
        tsv << "stabilizer_mixture\t" << (lp.feasible ? "true" : "false") << "\n";
        tsv << "category\t" << category << "\n";
        if (lp.feasible) {
            Json w = Json::array();
            for (size_t k = 0; k < lp.weights.size(); k++) {
                if (sgn(lp.weights[k]) != 0) {
                    w.push_back({{"vertex", k}, {"weight", rational_to_string(lp.weights[k])}});
                }
            }
            body["witness"] = w;
        } else {
            Json y = Json::array();
            for (const auto &x : lp.certificate) {
                y.push_back(rational_to_string(x));
            }
            body["separating_functional"] = y;
        }
    }
    o.emit(out, tsv.str(), body);
}

std::string join_args(const std::vector<std::string> &args) {
    std::string s = "kdsim";
    for (const auto &a : args) {
        s += " " + a;
    }
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Kirkwood-Dirac phase-space tools for Z2^n", "kdsim"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Config cfg;
    cfg.command_line = join_args(args);
    StateSource src;
    std::string circuit_path, hrep, vrep;
    uint64_t shots = 10000, samples = 100000;
    int css_n = 2;
    bool only_f = false;

    auto *kd = app.add_subcommand("kd", "KD table, positivity verdict and mana of a state");
    add_state_source(kd, src, true);
    add_common(kd, cfg, false, false);

    auto *sim = app.add_subcommand("simulate", "Phase-space sampling of a circuit on a KD-positive input");
    sim->add_option("circuit", circuit_path, "Circuit file")->required();
    add_state_source(sim, src, false);
    sim->add_option("--shots", shots, "Number of trajectories")->capture_default_str();
    add_common(sim, cfg, true, true);

    auto *oracle = app.add_subcommand("oracle", "Exact outcome distribution by dense simulation");
    oracle->add_option("circuit", circuit_path, "Circuit file")->required();
    add_state_source(oracle, src, false);
    add_common(oracle, cfg, false, false);

    auto *facets = app.add_subcommand("facets", "Facet counts of the rebit-stabilizer and CSS polytopes");
    facets->add_option("--hrep", hrep, "Print the H-representation of rebit, css or shared");
    facets->add_option("--vrep", vrep, "Print the V-representation of stabilizer, rebit or css as JSON");
    add_common(facets, cfg, false, false);

    auto *scan = app.add_subcommand("bound-scan", "Threshold bisection along every shared facet normal");
    scan->add_flag("--only-f", only_f, "Scan only the built-in facet operator F");
    add_common(scan, cfg, false, true);

    auto *volume = app.add_subcommand("volume", "Monte Carlo volumes of the four two-rebit categories");
    volume->add_option("--samples", samples, "Number of Ginibre samples")->capture_default_str();
    add_common(volume, cfg, true, true);

    auto *css_list = app.add_subcommand("css-list", "Names of all CSS states on n qubits");
    css_list->add_option("n", css_n, "Qubit count")->required();
    add_common(css_list, cfg, false, false);

    auto *classify = app.add_subcommand("classify", "KD positivity and stabilizer membership of a state");
    add_state_source(classify, src, true);
    add_common(classify, cfg, false, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cfg.tol && !(*cfg.tol >= 0)) {
            throw std::invalid_argument("--tol must be nonnegative");
        }
        if (kd->parsed()) {
            cmd_kd(cfg, src, out);
        } else if (sim->parsed()) {
            cmd_simulate(cfg, circuit_path, src, shots, out);
        } else if (oracle->parsed()) {
            cmd_oracle(cfg, circuit_path, src, out);
        } else if (facets->parsed()) {
            cmd_facets(cfg, hrep, vrep, out);
        } else if (scan->parsed()) {
            cmd_bound_scan(cfg, only_f, out);
        } else if (volume->parsed()) {
            cmd_volume(cfg, samples, out);
        } else if (css_list->parsed()) {
            cmd_css_list(cfg, css_n, out);
        } else if (classify->parsed()) {
            cmd_classify(cfg, src, out);
        }
    } catch (const KdNonpositiveError &e) {
        err << "kdsim: refusing to simulate: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        err << "kdsim: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range &e) {
        err << "kdsim: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        err << "kdsim: numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace kdsim
