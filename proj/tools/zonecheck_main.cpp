// zonecheck: probabilistic timed automata model checker.
//
//   zonecheck check <model> <property> [--engine backwards|digital] ...
//   zonecheck bench <suite> [--c-sweep ...] [--deadline-sweep ...] [--out csv]
//   zonecheck info <model>
//   zonecheck fixtures [--out-dir DIR]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zonecheck/backwards.hpp"
#include "zonecheck/bench.hpp"
#include "zonecheck/digital.hpp"
#include "zonecheck/fixtures.hpp"
#include "zonecheck/model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitModelError = 3;
constexpr int kExitEngineLimitation = 4;
constexpr int kExitEngineFailure = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw zonecheck::ModelError("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt_prob(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void print_human(const zonecheck::ProbResult& r, const std::string& engine) {
    std::cout << "probability: " << fmt_prob(r.probability) << "\n";
    if (r.verdict) std::cout << "verdict: " << (*r.verdict ? "true" : "false") << "\n";
    std::cout << "engine: " << engine << "\n";
    if (engine == "digital") {
        std::cout << "digital_states: " << r.stats.digital_states << "\n";
    } else {
        std::cout << "seeds: " << r.stats.seeds << "\n";
        std::cout << "states_max: " << r.stats.states_max << "\n";
        std::cout << "states_min: " << r.stats.states_min << "\n";
        std::cout << "iter_maxv: " << r.stats.iter_maxv << "\n";
        std::cout << "iter_maxu1: " << r.stats.iter_maxu1 << "\n";
    }
    std::cout << "vi_sweeps: " << r.stats.vi_sweeps << "\n";
}

void print_json(const zonecheck::ProbResult& r, const std::string& engine) {
    nlohmann::ordered_json doc;
    doc["probability"] = r.probability;
    if (r.verdict) doc["verdict"] = *r.verdict;
    doc["engine"] = engine;
    doc["stats"] = {{"seeds", r.stats.seeds},
                    {"states_max", r.stats.states_max},
                    {"states_min", r.stats.states_min},
                    {"mdp_transitions", r.stats.mdp_transitions},
                    {"iter_maxv", r.stats.iter_maxv},
                    {"iter_maxu1", r.stats.iter_maxu1},
                    {"vi_sweeps", r.stats.vi_sweeps},
                    {"digital_states", r.stats.digital_states},
                    {"time_graph_ms", r.stats.time_graph_ms},
                    {"time_explore_ms", r.stats.time_explore_ms},
                    {"time_vi_ms", r.stats.time_vi_ms}};
    std::cout << doc.dump(2) << "\n";
}

std::string property_source(const std::string& arg) {
    // property arguments ending in .json are read from disk
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json" && std::ifstream(arg).good())
        return read_file(arg);
    return arg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zonecheck: zone-based model checker for probabilistic timed automata"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "check one property of one model");
    std::string model_arg, property_arg;
    std::string engine = "backwards";
    std::string format = "human";
    std::int64_t c_param = 0;
    double epsilon = 1e-6;
    check->add_option("model", model_arg, "model file or fixture:<name>")->required();
    check->add_option("property", property_arg, "property (inline text or JSON file)")->required();
    check->add_option("--engine", engine, "backwards|digital")
        ->check(CLI::IsMember({"backwards", "digital"}));
    check->add_option("--c", c_param, "divergence-analysis parameter (positive integer)")
        ->check(CLI::PositiveNumber);
    check->add_option("--epsilon", epsilon, "value-iteration convergence threshold")
        ->check(CLI::PositiveNumber);
    check->add_option("--format", format, "human|csv|json")
        ->check(CLI::IsMember({"human", "csv", "json"}));

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark suite and emit CSV");
    std::string suite_arg, out_path;
    std::vector<std::int64_t> c_sweep, deadline_sweep;
    bench->add_option("suite", suite_arg, "suite JSON file")->required();
    bench->add_option("--c-sweep", c_sweep, "override the per-row c values")->delimiter(',');
    bench->add_option("--deadline-sweep", deadline_sweep, "override the per-row deadlines")
        ->delimiter(',');
    bench->add_option("--out", out_path, "write CSV here instead of stdout");
    bench->add_option("--epsilon", epsilon, "value-iteration convergence threshold");

    // info
    auto* info = app.add_subcommand("info", "print a model summary");
    std::string info_arg;
    info->add_option("model", info_arg, "model file or fixture:<name>")->required();

    // fixtures
    auto* fixtures_cmd = app.add_subcommand("fixtures", "write the bundled models and suite");
    std::string out_dir = "models";
    fixtures_cmd->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        zonecheck::EngineConfig cfg;
        cfg.epsilon = epsilon;
        if (c_param > 0) cfg.c = c_param;

        if (check->parsed()) {
            zonecheck::Pta model = zonecheck::bench::load_model(model_arg);
            zonecheck::Property prop =
                zonecheck::parse_property(property_source(property_arg), model);
            zonecheck::ProbResult r = zonecheck::bench::run_check(model, prop, engine, cfg);
            if (format == "human") {
                print_human(r, engine);
            } else if (format == "json") {
                print_json(r, engine);
            } else {
                zonecheck::bench::RunRecord rec;
                rec.model = model_arg;
                rec.property = property_arg;
                rec.engine = engine;
                rec.maximize = prop.maximize;
                if (cfg.c) rec.c = *cfg.c;
                if (prop.bound) rec.deadline = prop.bound->value;
                if (prop.threshold) rec.lambda = prop.threshold->value;
                rec.probability = r.probability;
                rec.verdict = r.verdict;
                rec.stats = r.stats;
                std::cout << zonecheck::bench::csv_header() << "\n"
                          << zonecheck::bench::to_csv_row(rec) << "\n";
            }
            return kExitOk;
        }

        if (bench->parsed()) {
            auto suite = zonecheck::bench::parse_suite(read_file(suite_arg));
            auto records = zonecheck::bench::run_suite(suite, c_sweep, deadline_sweep, cfg);
            std::string csv = zonecheck::bench::to_csv(records);
            if (out_path.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(out_path);
                if (!out) throw zonecheck::ModelError("cannot write '" + out_path + "'");
                out << csv;
            }
            return kExitOk;
        }

        if (info->parsed()) {
            zonecheck::Pta model = zonecheck::bench::load_model(info_arg);
            zonecheck::ValidationReport rep = zonecheck::validate(model);
            std::cout << "clocks: " << model.clocks.size() << "\n";
            std::cout << "locations: " << model.locations.size() << "\n";
            std::cout << "edges: " << model.edges.size() << "\n";
            std::cout << "initial: " << model.initial << "\n";
            std::cout << "closed: " << (rep.closed ? "true" : "false") << "\n";
            std::cout << "diagonal_free: " << (rep.diagonal_free ? "true" : "false") << "\n";
            std::cout << "initial_ok: " << (rep.initial_ok ? "true" : "false") << "\n";
            for (const auto& [clock, k] : rep.max_constants)
                std::cout << "max_constant " << clock << ": " << k << "\n";
            return kExitOk;
        }

        if (fixtures_cmd->parsed()) {
            namespace fs = zonecheck::fixtures;
            auto write = [&](const std::string& name, const std::string& content) {
                std::string path = out_dir + "/" + name;
                std::ofstream out(path);
                if (!out) throw zonecheck::ModelError("cannot write '" + path + "'");
                out << content;
                std::cout << "wrote " << path << "\n";
            };
            write("example.json", zonecheck::render_model(fs::example_pta()));
            write("csma1.json", zonecheck::render_model(fs::csma(1)));
            write("csma2.json", zonecheck::render_model(fs::csma(2)));
            write("firewire.json", zonecheck::render_model(fs::firewire()));

            nlohmann::ordered_json suite;
            suite["rows"] = nlohmann::ordered_json::array();
            auto row = [&](const std::string& model, const std::string& property,
                           std::vector<std::string> engines, std::vector<std::int64_t> cs,
                           std::vector<std::int64_t> ds) {
                nlohmann::ordered_json r;
                r["model"] = model;
                r["property"] = property;
                r["engines"] = engines;
                if (!cs.empty()) r["c"] = cs;
                if (!ds.empty()) r["D"] = ds;
                suite["rows"].push_back(r);
            };
            // graph-analysis rows: qualitative reachability with probability one
            row("fixture:csma1", "Pmin >= 1 F done", {"backwards"}, {50, 400, 500, 600, 700, 800}, {});
            row("fixture:csma2", "Pmin >= 1 F done", {"backwards"}, {50, 400, 500, 600, 700, 800}, {});
            row("fixture:firewire", "Pmin >= 1 F done", {"backwards"},
                {10, 100, 360, 1670, 2000, 3000, 10000}, {});
            // deadline rows: bounded reachability, both optima and both engines
            row("fixture:csma1", "Pmax F (done & z <= 200)", {"backwards", "digital"}, {400},
                {50, 100, 112, 120, 150});
            row("fixture:csma1", "Pmin F (done & z <= 200)", {"backwards", "digital"}, {400},
                {50, 100, 112, 120, 150});
            row("fixture:csma2", "Pmax F (done & z <= 200)", {"backwards", "digital"}, {400},
                {100, 124, 132, 150});
            row("fixture:csma2", "Pmin F (done & z <= 200)", {"backwards", "digital"}, {400},
                {100, 124, 132, 150});
            row("fixture:firewire", "Pmax F (done & z <= 400)", {"backwards", "digital"}, {400},
                {50, 76, 200, 250, 400});
            row("fixture:firewire", "Pmin F (done & z <= 400)", {"backwards", "digital"}, {400},
                {50, 76, 200, 250, 400});
            // the protocol example, cross-engine
            row("fixture:example", "Pmax F done", {"backwards", "digital"}, {}, {});
            row("fixture:example", "Pmin F done", {"backwards", "digital"}, {}, {});
            row("fixture:example", "Pmax F (done & z <= 10)", {"backwards", "digital"}, {}, {});
            write("suite.json", suite.dump(2) + "\n");
            return kExitOk;
        }
    } catch (const zonecheck::EngineLimitation& e) {
        std::cerr << "engine limitation: " << e.what() << "\n";
        return kExitEngineLimitation;
    } catch (const zonecheck::IterationCapExceeded& e) {
        std::cerr << "engine failure: " << e.what() << "\n";
        return kExitEngineFailure;
    } catch (const zonecheck::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitModelError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
