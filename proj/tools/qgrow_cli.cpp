// Command-line front end: grow codes from seeds, probe distances, validate
// code files, convert CSS checks to spider networks, and export graphs.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or IO error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgrow/catalog.hpp"
#include "qgrow/css_network.hpp"
#include "qgrow/distance.hpp"
#include "qgrow/grow.hpp"
#include "qgrow/serialize.hpp"
#include "qgrow/subsystem_code.hpp"

namespace {

struct CliError {
    int status;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw CliError{2, "cannot write " + path};
}

qgrow::CssSubsystemCode load_code(const std::string& path) {
    try {
        return qgrow::parse_code_file(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw CliError{2, path + ": " + e.what()};
    }
}

qgrow::CssSubsystemCode load_validated_code(const std::string& path) {
    qgrow::CssSubsystemCode code = load_code(path);
    qgrow::ValidationReport rep = qgrow::validate(code);
    if (!rep.ok()) throw CliError{1, path + ": " + rep.violations.front()};
    return code;
}

struct GrowArgs {
    std::string seed_file, catalog_name, out_file, log_file;
    std::size_t w_x = 2, w_z = 2, q_x = 2, q_z = 2;
    std::size_t m_x = 1, m_z = 1;
    std::size_t iters = 0;
};

int run_grow(const GrowArgs& a) {
    qgrow::CssSubsystemCode seed;
    if (!a.catalog_name.empty()) {
        try {
            seed = qgrow::catalog_code(a.catalog_name);
        } catch (const std::invalid_argument& e) {
            throw CliError{2, e.what()};
        }
    } else {
        seed = load_code(a.seed_file);
    }

    qgrow::GrowthConfig cfg;
    cfg.w_x = a.w_x;
    cfg.w_z = a.w_z;
    cfg.q_x = a.q_x;
    cfg.q_z = a.q_z;
    cfg.m_x = a.m_x;
    cfg.m_z = a.m_z;
    cfg.iterations = a.iters * (a.m_x + a.m_z);

    auto t0 = std::chrono::steady_clock::now();
    qgrow::CssSubsystemCode grown;
    qgrow::GrowthLog log;
    try {
        std::tie(grown, log) = qgrow::grow(seed, cfg);
    } catch (const std::exception& e) {
        throw CliError{1, e.what()};
    }
    auto t1 = std::chrono::steady_clock::now();

    if (!a.out_file.empty()) write_file(a.out_file, qgrow::emit_code_file(grown));
    if (!a.log_file.empty()) write_file(a.log_file, qgrow::emit_growth_log(log));

    qgrow::DistanceBounds bounds = qgrow::distance_bounds(log, grown);
    std::size_t upper_x = grown.n, upper_z = grown.n;
    for (std::size_t w : bounds.upper_x) upper_x = std::min(upper_x, w);
    for (std::size_t w : bounds.upper_z) upper_z = std::min(upper_z, w);

    qgrow::WeightProfile prof = qgrow::weight_profile(grown);
    nlohmann::ordered_json rep;
    rep["n"] = grown.n;
    rep["k"] = grown.k;
    rep["d_lower"] = bounds.lower;
    rep["d_upper_x"] = upper_x;
    rep["d_upper_z"] = upper_z;
    rep["weight_profile"] = {
        {"w_x", prof.w_x}, {"w_z", prof.w_z}, {"q_x", prof.q_x}, {"q_z", prof.q_z}};
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [deg, count] : qgrow::degree_histogram(grown))
        hist[std::to_string(deg)] = count;
    rep["degree_histogram"] = hist;
    rep["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();
    if (a.log_file.empty())
        rep["growth_log"] = nullptr;
    else
        rep["growth_log"] = a.log_file;
    std::cout << rep.dump(2) << "\n";
    return 0;
}

int run_distance(const std::string& in_file, const std::string& type, std::size_t wmax) {
    qgrow::CssSubsystemCode code = load_validated_code(in_file);
    std::size_t cap = wmax == 0 ? code.n : wmax;
    auto report = [&](qgrow::PauliType t) {
        auto d = qgrow::dressed_distance(code, t, cap);
        if (d)
            std::cout << "d_" << qgrow::type_char(t) << " = " << *d << "\n";
        else
            std::cout << "d_" << qgrow::type_char(t) << " exceeds wmax " << cap << "\n";
    };
    if (type != "z") report(qgrow::PauliType::X);
    if (type != "x") report(qgrow::PauliType::Z);
    return 0;
}

int run_verify(const std::string& in_file) {
    qgrow::CssSubsystemCode code = load_code(in_file);
    qgrow::ValidationReport rep = qgrow::validate(code);
    if (rep.ok()) {
        std::cout << "OK: n = " << code.n << ", k = " << code.k << "\n";
        return 0;
    }
    std::cout << "INVALID:\n";
    for (const std::string& v : rep.violations) std::cout << "  " << v << "\n";
    return 1;
}

int run_css2lego(const std::string& in_file, bool check) {
    qgrow::CssSubsystemCode code = load_code(in_file);
    qgrow::CssCodeInput input{code.gauge_x, code.gauge_z};
    qgrow::ConjoinNetwork net;
    try {
        net = qgrow::css_state_network(input.h_x, input.h_z);
    } catch (const std::invalid_argument& e) {
        throw CliError{1, e.what()};
    }
    std::size_t open = 0;
    for (const auto& b : net.blocks) open += b.legs;
    open -= 2 * net.contractions.size();
    std::cout << "blocks = " << net.blocks.size() << "\n"
              << "contractions = " << net.contractions.size() << "\n"
              << "open legs = " << open << "\n";
    if (!check) return 0;
    qgrow::UniversalityReport rep = qgrow::verify_universality(input);
    if (rep.ok) {
        std::cout << "universality check passed\n";
        return 0;
    }
    std::cout << "universality check FAILED, witness: " << rep.witness->to_string() << "\n";
    return 1;
}

int run_export(const std::string& in_file, const std::string& dot_file,
               const std::string& json_file, const std::string& degrees_file) {
    qgrow::CssSubsystemCode code = load_validated_code(in_file);
    if (!dot_file.empty()) write_file(dot_file, qgrow::emit_dot(code));
    if (!json_file.empty()) write_file(json_file, qgrow::emit_code_file(code));
    if (!degrees_file.empty()) write_file(degrees_file, qgrow::emit_degrees_csv(code));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grow sparse CSS-like subsystem codes and inspect the results"};
    app.require_subcommand(1);

    GrowArgs ga;
    CLI::App* grow = app.add_subcommand("grow", "Grow a code from a seed");
    CLI::Option* seed_opt = grow->add_option("--seed", ga.seed_file, "Seed code file");
    CLI::Option* cat_opt = grow->add_option("--catalog", ga.catalog_name, "Named catalog seed");
    seed_opt->excludes(cat_opt);
    grow->add_option("--wx", ga.w_x, "Max X check weight")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
    grow->add_option("--wz", ga.w_z, "Max Z check weight")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
    grow->add_option("--qx", ga.q_x, "Max X-check degree per qubit")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
    grow->add_option("--qz", ga.q_z, "Max Z-check degree per qubit")->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
    grow->add_option("--mx", ga.m_x, "X rounds per iteration");
    grow->add_option("--mz", ga.m_z, "Z rounds per iteration");
    grow->add_option("--iters", ga.iters, "Growth iterations (each runs mx X rounds and mz Z rounds)");
    grow->add_option("--out", ga.out_file, "Output code file");
    grow->add_option("--log", ga.log_file, "Growth log file (JSON lines)");

    std::string d_in, d_type = "both";
    std::size_t d_wmax = 0;
    CLI::App* distance = app.add_subcommand("distance", "Brute-force dressed distance");
    distance->add_option("--in", d_in, "Code file")->required();
    distance->add_option("--type", d_type, "Which distance: x, z, or both")
        ->check(CLI::IsMember({"x", "z", "both"}));
    distance->add_option("--wmax", d_wmax, "Search cutoff weight (0 = up to n)");

    std::string v_in;
    CLI::App* verify = app.add_subcommand("verify", "Validate a code file");
    verify->add_option("--in", v_in, "Code file")->required();

    std::string c_in;
    bool c_check = false;
    CLI::App* css2lego = app.add_subcommand("css2lego", "Build the spider network of a CSS code");
    css2lego->add_option("--in", c_in, "Code file with commuting check matrices")->required();
    css2lego->add_flag("--check", c_check, "Verify the network against the encoder state");

    std::string e_in, e_dot, e_json, e_degrees;
    CLI::App* exp = app.add_subcommand("export", "Export Tanner graph or histograms");
    exp->add_option("--in", e_in, "Code file")->required();
    CLI::Option* dot_opt = exp->add_option("--dot", e_dot, "Write Tanner graph as DOT");
    CLI::Option* json_opt = exp->add_option("--json", e_json, "Write canonical code JSON");
    CLI::Option* deg_opt = exp->add_option("--degrees", e_degrees, "Write degree histogram CSV");
    dot_opt->excludes(json_opt)->excludes(deg_opt);
    json_opt->excludes(deg_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (grow->parsed()) {
            if (ga.seed_file.empty() == ga.catalog_name.empty())
                throw CliError{2, "grow needs exactly one of --seed or --catalog"};
            return run_grow(ga);
        }
        if (distance->parsed()) return run_distance(d_in, d_type, d_wmax);
        if (verify->parsed()) return run_verify(v_in);
        if (css2lego->parsed()) return run_css2lego(c_in, c_check);
        if (exp->parsed()) {
            if (e_dot.empty() + e_json.empty() + e_degrees.empty() != 2)
                throw CliError{2, "export needs exactly one of --dot, --json, --degrees"};
            return run_export(e_in, e_dot, e_json, e_degrees);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
