// Benchmark harness: expands suite files into deterministic (model,
// property, engine, c, D) rows, runs each query, and emits one CSV row per
// run. Timing columns are wall-clock and therefore not reproducible; every
// other column is deterministic for fixed inputs.

#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonecheck/backwards.hpp"
#include "zonecheck/digital.hpp"
#include "zonecheck/fixtures.hpp"
#include "zonecheck/model.hpp"
#include "zonecheck/result.hpp"

namespace zonecheck::bench {

// Loads a model from a file path or a "fixture:<name>" reference.
inline Pta load_model(const std::string& ref) {
    if (ref.rfind("fixture:", 0) == 0) {
        auto p = fixtures::by_name(ref.substr(8));
        if (!p) throw ModelError("unknown fixture '" + ref.substr(8) + "'");
        return *p;
    }
    std::ifstream in(ref);
    if (!in) throw ModelError("cannot read model file '" + ref + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model_or_throw(ss.str());
}

// One query against one engine; property-clock injection happens here.
inline ProbResult run_check(const Pta& model, const Property& prop, const std::string& engine,
                            const EngineConfig& cfg) {
    ProbResult r;
    if (engine == "digital") {
        r = digital::check(model, prop, cfg);
    } else if (engine == "backwards") {
        auto [p, q] = inject_property_clock(model, prop);
        ExprPtr avoid = Expr::negate(q.left);
        r = prop.maximize ? backwards::pmax_until(p, avoid, q.right, cfg)
                          : backwards::pmin_until(p, avoid, q.right, cfg);
    } else {
        throw ModelError("unknown engine '" + engine + "'");
    }
    if (prop.threshold) backwards::evaluate_threshold(r, *prop.threshold);
    return r;
}

struct RunRecord {
    std::string model;
    std::string property;
    std::string engine;
    bool maximize = true;
    std::optional<std::int64_t> c;
    std::optional<std::int64_t> deadline;
    std::optional<Rational> lambda;
    std::optional<double> probability;
    std::optional<bool> verdict;
    EngineStats stats;
    std::string error;
};

inline std::string csv_header() {
    return "model,property,engine,c,D,lambda,probability,verdict,states_max,time_max,"
           "states_min,time_min,iter_maxv,iter_maxu1,digital_states,error";
}

namespace detail {

inline std::string fmt_double(double v, const char* format) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

inline std::string csv_escape(std::string s) {
    for (auto& ch : s)
        if (ch == ',' || ch == '\n') ch = ';';
    return s;
}

} // namespace detail

inline std::string to_csv_row(const RunRecord& r) {
    const bool has_result = r.probability.has_value();
    const bool is_digital = r.engine == "digital";
    const bool max_phase = has_result && !is_digital && r.maximize;
    const bool min_phase = has_result && !is_digital && !r.maximize;
    const double total_ms = r.stats.time_graph_ms + r.stats.time_explore_ms + r.stats.time_vi_ms;
    const std::string time_str = detail::fmt_double(total_ms, "%.3f");

    std::string out;
    out += detail::csv_escape(r.model) + ",";
    out += detail::csv_escape(r.property) + ",";
    out += r.engine + ",";
    out += (r.c ? std::to_string(*r.c) : "") + ",";
    out += (r.deadline ? std::to_string(*r.deadline) : "") + ",";
    out += (r.lambda ? r.lambda->to_string() : "") + ",";
    out += (has_result ? detail::fmt_double(*r.probability, "%.9g") : "") + ",";
    out += (r.verdict ? (*r.verdict ? std::string("true") : std::string("false")) : "") + ",";
    out += (max_phase ? std::to_string(r.stats.states_max) : "") + ",";
    out += (max_phase || (is_digital && has_result && r.maximize) ? time_str : "") + ",";
    out += (min_phase ? std::to_string(r.stats.states_min) : "") + ",";
    out += (min_phase || (is_digital && has_result && !r.maximize) ? time_str : "") + ",";
    out += (min_phase ? std::to_string(r.stats.iter_maxv) : "") + ",";
    out += (min_phase ? std::to_string(r.stats.iter_maxu1) : "") + ",";
    out += (is_digital && has_result ? std::to_string(r.stats.digital_states) : "") + ",";
    out += detail::csv_escape(r.error);
    return out;
}

struct SuiteEntry {
    std::string model_ref;
    std::string property_text; // inline text or JSON object dump
    std::vector<std::string> engines;
    std::vector<std::int64_t> c_values;
    std::vector<std::int64_t> deadlines;
    std::optional<Rational> lambda;
};

inline std::vector<SuiteEntry> parse_suite(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelError(std::string("suite: ") + e.what());
    }
    std::vector<SuiteEntry> out;
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw ModelError("suite needs a 'rows' array");
    for (const auto& row : doc["rows"]) {
        SuiteEntry e;
        e.model_ref = row.at("model").get<std::string>();
        e.property_text = row.at("property").is_string() ? row.at("property").get<std::string>()
                                                         : row.at("property").dump();
        for (const auto& eng : row.value("engines", nlohmann::json::array({"backwards"})))
            e.engines.push_back(eng.get<std::string>());
        for (const auto& c : row.value("c", nlohmann::json::array()))
            e.c_values.push_back(c.get<std::int64_t>());
        for (const auto& d : row.value("D", nlohmann::json::array()))
            e.deadlines.push_back(d.get<std::int64_t>());
        if (row.contains("lambda")) {
            std::string l = row["lambda"].is_string() ? row["lambda"].get<std::string>()
                                                      : row["lambda"].dump();
            auto lam = Rational::parse(l);
            if (!lam) throw ModelError("suite: unparsable lambda '" + l + "'");
            e.lambda = lam;
        }
        out.push_back(std::move(e));
    }
    return out;
}

// Expands and runs a suite. Row order is: suite order, then engine, then c,
// then deadline. Failures become rows with the error column set.
inline std::vector<RunRecord> run_suite(const std::vector<SuiteEntry>& suite,
                                        const std::vector<std::int64_t>& c_sweep,
                                        const std::vector<std::int64_t>& deadline_sweep,
                                        const EngineConfig& base_cfg) {
    std::vector<RunRecord> records;
    for (const auto& entry : suite) {
        std::vector<std::int64_t> cs = !c_sweep.empty() ? c_sweep : entry.c_values;
        std::vector<std::int64_t> ds = !deadline_sweep.empty() ? deadline_sweep : entry.deadlines;

        Pta model;
        std::optional<Property> base_prop;
        std::string load_error;
        try {
            model = load_model(entry.model_ref);
            base_prop = parse_property(entry.property_text, model);
            if (entry.lambda) {
                if (!base_prop->threshold) base_prop->threshold = Threshold{CmpOp::Ge, *entry.lambda};
                else base_prop->threshold->value = *entry.lambda;
            }
        } catch (const std::exception& e) {
            load_error = e.what();
        }

        bool has_bound = base_prop && base_prop->bound.has_value();
        std::vector<std::optional<std::int64_t>> deadline_axis;
        if (has_bound && !ds.empty())
            for (auto d : ds) deadline_axis.push_back(d);
        else
            deadline_axis.push_back(std::nullopt);

        for (const auto& engine : entry.engines) {
            std::vector<std::optional<std::int64_t>> c_axis;
            if (engine == "backwards" && !cs.empty())
                for (auto c : cs) c_axis.push_back(c);
            else
                c_axis.push_back(std::nullopt);

            for (const auto& c : c_axis) {
                for (const auto& d : deadline_axis) {
                    RunRecord rec;
                    rec.model = entry.model_ref;
                    rec.property = entry.property_text;
                    rec.engine = engine;
                    rec.c = c;
                    rec.lambda = entry.lambda;
                    if (!base_prop) {
                        rec.error = load_error;
                        records.push_back(std::move(rec));
                        continue;
                    }
                    Property prop = *base_prop;
                    rec.maximize = prop.maximize;
                    if (d && prop.bound) prop.bound->value = *d;
                    if (prop.bound) rec.deadline = prop.bound->value;
                    EngineConfig cfg = base_cfg;
                    if (c) cfg.c = *c;
                    try {
                        ProbResult r = run_check(model, prop, engine, cfg);
                        rec.probability = r.probability;
                        rec.verdict = r.verdict;
                        rec.stats = r.stats;
                    } catch (const std::exception& e) {
                        rec.error = e.what();
                    }
                    records.push_back(std::move(rec));
                }
            }
        }
    }
    return records;
}

inline std::string to_csv(const std::vector<RunRecord>& records) {
    std::string out = csv_header() + "\n";
    for (const auto& r : records) out += to_csv_row(r) + "\n";
    return out;
}

} // namespace zonecheck::bench
