// PTA and property data model: JSON text format, validation, predicate
// compilation to federations, and property-clock injection.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zonecheck/error.hpp"
#include "zonecheck/expr.hpp"
#include "zonecheck/federation.hpp"
#include "zonecheck/rational.hpp"

namespace zonecheck {

struct Branch {
    Rational probability; // in (0, 1]
    std::vector<std::string> resets;
    std::string target;
};

struct Edge {
    std::string source;
    std::string action;
    ExprPtr guard;
    std::vector<Branch> branches;
};

struct Location {
    std::string name;
    ExprPtr invariant;
};

struct Pta {
    std::vector<std::string> clocks;
    std::string initial;
    std::vector<Location> locations;
    std::vector<Edge> edges;

    std::size_t dim() const { return clocks.size() + 1; }

    std::optional<std::size_t> clock_index(const std::string& name) const {
        for (std::size_t i = 0; i < clocks.size(); ++i)
            if (clocks[i] == name) return i + 1; // matrix index
        return std::nullopt;
    }

    std::optional<std::size_t> location_index(const std::string& name) const {
        for (std::size_t i = 0; i < locations.size(); ++i)
            if (locations[i].name == name) return i;
        return std::nullopt;
    }

    std::size_t initial_index() const { return *location_index(initial); }
};

struct TimeBound {
    std::string clock;
    bool strict = false; // false: z <= value, true: z < value
    std::int64_t value = 0;
};

struct Threshold {
    CmpOp op = CmpOp::Ge;
    Rational value;
};

struct Property {
    bool maximize = true;
    ExprPtr left;  // until left-hand side; true for plain reachability
    ExprPtr right; // until right-hand side (the target predicate)
    std::optional<TimeBound> bound;
    std::optional<Threshold> threshold;
};

struct EngineConfig {
    std::optional<std::int64_t> c; // MaxV parameter; defaults to the largest model constant
    double epsilon = 1e-6;
    std::uint64_t vi_cap = 1000000;
    std::size_t explore_cap = 10000;
    std::size_t maxv_cap = 1000;
    std::size_t tpre_cap = 10000;
};

struct ParseIssue {
    std::string context;
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;

    std::string to_string() const {
        std::string out;
        if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
        if (!context.empty()) out += context + ": ";
        return out + message;
    }
};

struct ModelParseResult {
    std::optional<Pta> model;
    std::vector<ParseIssue> errors;
    bool ok() const { return model.has_value() && errors.empty(); }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

inline void check_names(const Pta& p, const ExprPtr& e, const std::string& context,
                        bool allow_locations, std::vector<ParseIssue>& errors) {
    visit_expr(e, [&](const Expr& x) {
        if (x.kind == Expr::Kind::Loc) {
            if (!allow_locations) {
                errors.push_back({context, "location atom '" + x.name + "' is not allowed here"});
            } else if (!p.location_index(x.name)) {
                errors.push_back({context, "unknown location '" + x.name + "'"});
            }
        } else if (x.kind == Expr::Kind::Clock) {
            if (!p.clock_index(x.name))
                errors.push_back({context, "unknown clock '" + x.name + "'"});
            if (!x.rhs_clock.empty() && !p.clock_index(x.rhs_clock))
                errors.push_back({context, "unknown clock '" + x.rhs_clock + "'"});
        }
    });
}

inline void check_model_constants(const ExprPtr& e, const std::string& context,
                                  std::vector<ParseIssue>& errors) {
    visit_expr(e, [&](const Expr& x) {
        if (x.kind == Expr::Kind::Clock && x.constant < 0)
            errors.push_back({context, "negative constant " + std::to_string(x.constant)});
    });
}

inline std::optional<ExprPtr> parse_expr_field(const std::string& text, const std::string& context,
                                               std::vector<ParseIssue>& errors) {
    try {
        return parse_expr(text);
    } catch (const ExprError& e) {
        errors.push_back({context, e.message, 1, e.offset + 1});
        return std::nullopt;
    }
}

} // namespace detail

// ── Model parsing ───────────────────────────────────────────────────────────

inline ModelParseResult parse_model(const std::string& text) {
    using json = nlohmann::ordered_json;
    ModelParseResult result;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        result.errors.push_back({"", e.what(), line, col});
        return result;
    }

    Pta p;
    auto& errors = result.errors;
    try {
        if (!doc.contains("clocks") || !doc["clocks"].is_array())
            throw ModelError("missing 'clocks' array");
        for (const auto& c : doc["clocks"]) p.clocks.push_back(c.get<std::string>());
        if (!doc.contains("initial")) throw ModelError("missing 'initial'");
        p.initial = doc["initial"].get<std::string>();
        if (!doc.contains("locations") || !doc["locations"].is_array())
            throw ModelError("missing 'locations' array");
        for (const auto& l : doc["locations"]) {
            Location loc;
            loc.name = l.at("name").get<std::string>();
            std::string inv = l.value("invariant", "true");
            auto e = detail::parse_expr_field(inv, "locations/" + loc.name + "/invariant", errors);
            loc.invariant = e.value_or(Expr::make_true());
            p.locations.push_back(std::move(loc));
        }
        for (const auto& ej : doc.value("edges", json::array())) {
            Edge e;
            e.source = ej.at("source").get<std::string>();
            e.action = ej.value("action", "");
            std::string guard = ej.value("guard", "true");
            auto g = detail::parse_expr_field(guard, "edges/" + e.source + "/" + e.action + "/guard", errors);
            e.guard = g.value_or(Expr::make_true());
            for (const auto& bj : ej.at("branches")) {
                Branch b;
                std::string prob = bj.at("prob").is_string() ? bj.at("prob").get<std::string>()
                                                             : bj.at("prob").dump();
                auto r = Rational::parse(prob);
                if (!r) {
                    errors.push_back({"edges/" + e.source + "/" + e.action, "unparsable probability '" + prob + "'"});
                    b.probability = Rational(1);
                } else {
                    b.probability = *r;
                }
                for (const auto& rs : bj.value("resets", json::array()))
                    b.resets.push_back(rs.get<std::string>());
                b.target = bj.at("target").get<std::string>();
                e.branches.push_back(std::move(b));
            }
            p.edges.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        errors.push_back({"", e.what()});
        return result;
    } catch (const ModelError& e) {
        errors.push_back({"", e.what()});
        return result;
    }

    // name tables
    for (std::size_t i = 0; i < p.clocks.size(); ++i)
        for (std::size_t j = i + 1; j < p.clocks.size(); ++j)
            if (p.clocks[i] == p.clocks[j])
                errors.push_back({"clocks", "duplicate clock '" + p.clocks[i] + "'"});
    for (std::size_t i = 0; i < p.locations.size(); ++i)
        for (std::size_t j = i + 1; j < p.locations.size(); ++j)
            if (p.locations[i].name == p.locations[j].name)
                errors.push_back({"locations", "duplicate location '" + p.locations[i].name + "'"});
    if (!p.location_index(p.initial))
        errors.push_back({"initial", "unknown initial location '" + p.initial + "'"});

    for (const auto& loc : p.locations) {
        detail::check_names(p, loc.invariant, "locations/" + loc.name + "/invariant", false, errors);
        detail::check_model_constants(loc.invariant, "locations/" + loc.name + "/invariant", errors);
    }
    for (const auto& e : p.edges) {
        std::string ctx = "edges/" + e.source + "/" + e.action;
        if (!p.location_index(e.source))
            errors.push_back({ctx, "unknown source location '" + e.source + "'"});
        detail::check_names(p, e.guard, ctx + "/guard", false, errors);
        detail::check_model_constants(e.guard, ctx + "/guard", errors);
        if (e.branches.empty()) errors.push_back({ctx, "edge has no branches"});
        Rational sum(0);
        for (const auto& b : e.branches) {
            if (!p.location_index(b.target))
                errors.push_back({ctx, "unknown target location '" + b.target + "'"});
            for (const auto& r : b.resets)
                if (!p.clock_index(r))
                    errors.push_back({ctx, "reset of unknown clock '" + r + "'"});
            if (!(b.probability > Rational(0)) || b.probability > Rational(1))
                errors.push_back({ctx, "branch probability " + b.probability.to_string() + " outside (0, 1]"});
            sum += b.probability;
        }
        if (!e.branches.empty() && sum != Rational(1))
            errors.push_back({ctx, "probabilities sum to " + sum.to_string()});
    }

    if (errors.empty()) result.model = std::move(p);
    return result;
}

inline Pta parse_model_or_throw(const std::string& text) {
    auto r = parse_model(text);
    if (!r.ok()) {
        std::string msg = "model rejected:";
        for (const auto& e : r.errors) msg += "\n  " + e.to_string();
        throw ModelError(msg);
    }
    return *r.model;
}

inline std::string render_model(const Pta& p) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["clocks"] = p.clocks;
    doc["initial"] = p.initial;
    doc["locations"] = json::array();
    for (const auto& l : p.locations)
        doc["locations"].push_back({{"name", l.name}, {"invariant", render_expr(l.invariant)}});
    doc["edges"] = json::array();
    for (const auto& e : p.edges) {
        json branches = json::array();
        for (const auto& b : e.branches)
            branches.push_back({{"prob", b.probability.to_string()},
                                {"resets", b.resets},
                                {"target", b.target}});
        doc["edges"].push_back({{"source", e.source},
                                {"action", e.action},
                                {"guard", render_expr(e.guard)},
                                {"branches", branches}});
    }
    return doc.dump(2) + "\n";
}

// ── Validation ──────────────────────────────────────────────────────────────

struct ValidationReport {
    bool closed = true;         // no strict comparators anywhere in the model
    bool diagonal_free = true;  // no x - y atoms
    bool initial_ok = true;     // the zero valuation satisfies the initial invariant
    std::map<std::string, std::int64_t> max_constants; // per clock
    std::vector<std::string> notes;
};

// Evaluates a predicate on integer clock values (reference semantics for the
// digital engine and for validation).
inline bool eval_expr(const ExprPtr& e, const std::string& location,
                      const Pta& p, const std::vector<std::int64_t>& values) {
    switch (e->kind) {
        case Expr::Kind::True: return true;
        case Expr::Kind::False: return false;
        case Expr::Kind::Loc: return location == e->name;
        case Expr::Kind::Clock: {
            std::int64_t lhs = values[*p.clock_index(e->name) - 1];
            if (!e->rhs_clock.empty()) lhs -= values[*p.clock_index(e->rhs_clock) - 1];
            switch (e->op) {
                case CmpOp::Lt: return lhs < e->constant;
                case CmpOp::Le: return lhs <= e->constant;
                case CmpOp::Eq: return lhs == e->constant;
                case CmpOp::Ge: return lhs >= e->constant;
                case CmpOp::Gt: return lhs > e->constant;
            }
            return false;
        }
        case Expr::Kind::Not: return !eval_expr(e->a, location, p, values);
        case Expr::Kind::And:
            return eval_expr(e->a, location, p, values) && eval_expr(e->b, location, p, values);
        case Expr::Kind::Or:
            return eval_expr(e->a, location, p, values) || eval_expr(e->b, location, p, values);
    }
    return false;
}

inline ValidationReport validate(const Pta& p) {
    ValidationReport rep;
    for (const auto& c : p.clocks) rep.max_constants[c] = 0;

    auto scan = [&](const ExprPtr& e) {
        visit_expr(e, [&](const Expr& x) {
            if (x.kind != Expr::Kind::Clock) return;
            if (x.op == CmpOp::Lt || x.op == CmpOp::Gt) rep.closed = false;
            if (!x.rhs_clock.empty()) rep.diagonal_free = false;
            std::int64_t c = x.constant < 0 ? -x.constant : x.constant;
            rep.max_constants[x.name] = std::max(rep.max_constants[x.name], c);
            if (!x.rhs_clock.empty())
                rep.max_constants[x.rhs_clock] = std::max(rep.max_constants[x.rhs_clock], c);
        });
    };
    for (const auto& l : p.locations) scan(l.invariant);
    for (const auto& e : p.edges) scan(e.guard);

    std::vector<std::int64_t> zeros(p.clocks.size(), 0);
    const Location& init = p.locations[p.initial_index()];
    rep.initial_ok = eval_expr(init.invariant, init.name, p, zeros);
    if (!rep.initial_ok)
        rep.notes.push_back("initial state violates the invariant of '" + init.name + "'");
    return rep;
}

// ── Predicate compilation ───────────────────────────────────────────────────

// Federation of valuations satisfying the predicate at the given location.
inline Federation compile_predicate(const ExprPtr& e, std::size_t location, const Pta& p) {
    const std::size_t dim = p.dim();
    switch (e->kind) {
        case Expr::Kind::True: return Federation::universe(dim);
        case Expr::Kind::False: return Federation(dim);
        case Expr::Kind::Loc:
            return p.locations[location].name == e->name ? Federation::universe(dim)
                                                         : Federation(dim);
        case Expr::Kind::Clock: {
            auto lhs = p.clock_index(e->name);
            if (!lhs) throw ModelError("unknown clock '" + e->name + "' in predicate");
            std::size_t i = *lhs;
            std::size_t j = 0;
            if (!e->rhs_clock.empty()) {
                auto rhs = p.clock_index(e->rhs_clock);
                if (!rhs) throw ModelError("unknown clock '" + e->rhs_clock + "' in predicate");
                j = *rhs;
            }
            Dbm u = Dbm::universe(dim);
            Dbm z = Dbm::universe(dim);
            switch (e->op) {
                case CmpOp::Lt: z = u.conjoined(i, j, Bound::strict(e->constant)); break;
                case CmpOp::Le: z = u.conjoined(i, j, Bound::weak(e->constant)); break;
                case CmpOp::Ge: z = u.conjoined(j, i, Bound::weak(-e->constant)); break;
                case CmpOp::Gt: z = u.conjoined(j, i, Bound::strict(-e->constant)); break;
                case CmpOp::Eq:
                    z = u.conjoined(i, j, Bound::weak(e->constant))
                            .conjoined(j, i, Bound::weak(-e->constant));
                    break;
            }
            return Federation::of(std::move(z));
        }
        case Expr::Kind::Not: return compile_predicate(e->a, location, p).complement();
        case Expr::Kind::And:
            return compile_predicate(e->a, location, p).intersect(compile_predicate(e->b, location, p));
        case Expr::Kind::Or:
            return compile_predicate(e->a, location, p).unite(compile_predicate(e->b, location, p));
    }
    return Federation(dim);
}

// ── Property-clock injection ────────────────────────────────────────────────

// Adds the property clock of a time-bounded property to the model (never
// reset, never constrained by the model) and conjoins the bound atom onto
// the right-hand predicate. Identity for unbounded properties.
inline std::pair<Pta, Property> inject_property_clock(const Pta& p, const Property& prop) {
    if (!prop.bound) return {p, prop};
    const TimeBound& b = *prop.bound;
    if (p.clock_index(b.clock))
        throw ModelError("property clock '" + b.clock + "' clashes with a model clock");
    Pta out = p;
    out.clocks.push_back(b.clock);
    Property q = prop;
    q.right = Expr::conj(prop.right,
                         Expr::clock(b.clock, "", b.strict ? CmpOp::Lt : CmpOp::Le, b.value));
    return {out, q};
}

// ── Property parsing ────────────────────────────────────────────────────────

namespace detail {

// Splits fresh-clock atoms (one unknown clock, upper bounds on top-level
// conjuncts of the right-hand side) off as the property time bound.
inline ExprPtr extract_bound(const ExprPtr& e, const Pta& p, const std::string& fresh,
                             std::optional<TimeBound>& bound) {
    if (e->kind == Expr::Kind::And) {
        ExprPtr a = extract_bound(e->a, p, fresh, bound);
        ExprPtr b = extract_bound(e->b, p, fresh, bound);
        if (a != e->a || b != e->b) return Expr::conj(a, b);
        return e;
    }
    if (e->kind == Expr::Kind::Clock && e->name == fresh && e->rhs_clock.empty() &&
        (e->op == CmpOp::Le || e->op == CmpOp::Lt)) {
        if (bound)
            throw ModelError("property clock '" + fresh + "' is bounded more than once");
        bound = TimeBound{fresh, e->op == CmpOp::Lt, e->constant};
        return Expr::make_true();
    }
    return e;
}

inline std::vector<std::string> unknown_clocks(const ExprPtr& e, const Pta& p) {
    std::vector<std::string> out;
    visit_expr(e, [&](const Expr& x) {
        if (x.kind != Expr::Kind::Clock) return;
        for (const std::string& n : {x.name, x.rhs_clock}) {
            if (n.empty() || p.clock_index(n)) continue;
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        }
    });
    return out;
}

inline void resolve_property_names(Property& prop, const Pta& p) {
    auto unknown_left = unknown_clocks(prop.left, p);
    if (!unknown_left.empty())
        throw ModelError("unknown clock '" + unknown_left[0] + "' in the left-hand predicate");
    auto unknown = unknown_clocks(prop.right, p);
    if (unknown.size() > 1)
        throw ModelError("more than one undeclared clock in the property: '" + unknown[0] +
                         "', '" + unknown[1] + "'");
    if (unknown.size() == 1) {
        std::optional<TimeBound> bound;
        ExprPtr right = extract_bound(prop.right, p, unknown[0], bound);
        if (!bound)
            throw ModelError("undeclared clock '" + unknown[0] +
                             "' must appear as an upper-bound conjunct of the target");
        if (!detail::unknown_clocks(right, p).empty())
            throw ModelError("property clock '" + unknown[0] +
                             "' may only appear as an upper-bound conjunct of the target");
        if (prop.bound)
            throw ModelError("property has both an explicit bound and a property-clock atom");
        prop.right = right;
        prop.bound = bound;
    }
    std::vector<ParseIssue> errors;
    check_names(p, prop.left, "property/left", true, errors);
    check_names(p, prop.right, "property/right", true, errors);
    if (!errors.empty()) throw ModelError(errors[0].to_string());
}

} // namespace detail

// Compact textual property syntax, e.g.:
//   "Pmax F (done & z <= 10)"            bounded reachability (z fresh)
//   "Pmin >= 0.99 F done"                threshold query
//   "(!fail) U (done)"                   until
// Without an explicit Pmax/Pmin, a >=/> threshold asks for the minimum
// probability and any other form for the maximum.
inline Property parse_property_text(const std::string& text, const Pta& p) {
    try {
        detail::ExprParser parser(text);
        Property prop;
        bool explicit_opt = false;

        if (parser.current().kind == detail::Tok::Ident) {
            const std::string& w = parser.current().text;
            if (w == "Pmax" || w == "max") { prop.maximize = true; explicit_opt = true; parser.advance(); }
            else if (w == "Pmin" || w == "min") { prop.maximize = false; explicit_opt = true; parser.advance(); }
        }

        auto cmp_of = [](detail::Tok t) -> std::optional<CmpOp> {
            switch (t) {
                case detail::Tok::Lt: return CmpOp::Lt;
                case detail::Tok::Le: return CmpOp::Le;
                case detail::Tok::Ge: return CmpOp::Ge;
                case detail::Tok::Gt: return CmpOp::Gt;
                default: return std::nullopt;
            }
        };
        if (auto op = cmp_of(parser.current().kind)) {
            parser.advance();
            if (parser.current().kind != detail::Tok::Number)
                throw ModelError("expected a probability after the threshold comparator");
            std::string num = parser.current().text;
            parser.advance();
            if (parser.current().kind == detail::Tok::Dot) {
                parser.advance();
                if (parser.current().kind != detail::Tok::Number)
                    throw ModelError("malformed decimal threshold");
                num += "." + parser.current().text;
                parser.advance();
            } else if (parser.current().kind == detail::Tok::Slash) {
                parser.advance();
                if (parser.current().kind != detail::Tok::Number)
                    throw ModelError("malformed rational threshold");
                num += "/" + parser.current().text;
                parser.advance();
            }
            auto lambda = Rational::parse(num);
            if (!lambda) throw ModelError("unparsable threshold '" + num + "'");
            prop.threshold = Threshold{*op, *lambda};
            if (!explicit_opt) prop.maximize = !(*op == CmpOp::Ge || *op == CmpOp::Gt);
        }

        if (parser.current().kind == detail::Tok::Ident && parser.current().text == "F") {
            parser.advance();
            prop.left = Expr::make_true();
            prop.right = parser.parse_or();
        } else {
            prop.left = parser.parse_or();
            if (parser.current().kind == detail::Tok::Ident && parser.current().text == "U") {
                parser.advance();
                prop.right = parser.parse_or();
            } else {
                // a bare predicate is reachability of that predicate
                prop.right = prop.left;
                prop.left = Expr::make_true();
            }
        }
        if (parser.current().kind != detail::Tok::End)
            throw ModelError("unexpected trailing input in property");

        detail::resolve_property_names(prop, p);
        return prop;
    } catch (const ExprError& e) {
        throw ModelError("property: " + e.message + " at offset " + std::to_string(e.offset));
    }
}

// JSON property format:
//   {"opt": "max"|"min", "until": {"left": "...", "right": "..."},
//    "bound": {"clock": "z", "op": "<="|"<", "value": 10},
//    "threshold": {"op": "<=", "value": "0.99"}}
inline Property parse_property_json(const nlohmann::json& doc, const Pta& p) {
    Property prop;
    bool explicit_opt = doc.contains("opt");
    if (explicit_opt) {
        std::string o = doc["opt"].get<std::string>();
        if (o == "max") prop.maximize = true;
        else if (o == "min") prop.maximize = false;
        else throw ModelError("opt must be 'max' or 'min'");
    }
    if (!doc.contains("until")) throw ModelError("property needs an 'until' object");
    try {
        prop.left = parse_expr(doc["until"].value("left", "true"));
        prop.right = parse_expr(doc["until"].at("right").get<std::string>());
    } catch (const ExprError& e) {
        throw ModelError("property predicate: " + e.message);
    }
    if (doc.contains("bound")) {
        TimeBound b;
        b.clock = doc["bound"].at("clock").get<std::string>();
        std::string op = doc["bound"].value("op", "<=");
        if (op == "<=") b.strict = false;
        else if (op == "<") b.strict = true;
        else throw ModelError("bound op must be '<=' or '<'");
        b.value = doc["bound"].at("value").get<std::int64_t>();
        prop.bound = b;
    }
    if (doc.contains("threshold")) {
        Threshold t;
        std::string op = doc["threshold"].at("op").get<std::string>();
        if (op == "<") t.op = CmpOp::Lt;
        else if (op == "<=") t.op = CmpOp::Le;
        else if (op == ">=") t.op = CmpOp::Ge;
        else if (op == ">") t.op = CmpOp::Gt;
        else throw ModelError("threshold op must be one of <, <=, >=, >");
        std::string v = doc["threshold"].at("value").is_string()
                            ? doc["threshold"].at("value").get<std::string>()
                            : doc["threshold"].at("value").dump();
        auto lambda = Rational::parse(v);
        if (!lambda) throw ModelError("unparsable threshold '" + v + "'");
        t.value = *lambda;
        prop.threshold = t;
        if (!explicit_opt) prop.maximize = !(t.op == CmpOp::Ge || t.op == CmpOp::Gt);
    }
    detail::resolve_property_names(prop, p);
    return prop;
}

// Accepts either inline text or a JSON object (detected by a leading '{').
inline Property parse_property(const std::string& text, const Pta& p) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    if (i < text.size() && text[i] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ModelError(std::string("property JSON: ") + e.what());
        }
        return parse_property_json(doc, p);
    }
    return parse_property_text(text, p);
}

inline std::string render_property(const Property& prop) {
    std::string out = prop.maximize ? "Pmax" : "Pmin";
    if (prop.threshold)
        out += " " + cmp_to_string(prop.threshold->op) + " " + prop.threshold->value.to_string();
    std::string right = render_expr(prop.right);
    if (prop.bound)
        right = "(" + right + " & " + prop.bound->clock + (prop.bound->strict ? " < " : " <= ") +
                std::to_string(prop.bound->value) + ")";
    if (prop.left->kind == Expr::Kind::True)
        return out + " F " + right;
    return out + " (" + render_expr(prop.left) + ") U " + right;
}

// Default MaxV parameter: the largest constant appearing in the model.
inline std::int64_t default_c(const Pta& p) {
    std::int64_t c = 1;
    auto scan = [&](const ExprPtr& e) {
        visit_expr(e, [&](const Expr& x) {
            if (x.kind == Expr::Kind::Clock)
                c = std::max(c, x.constant < 0 ? -x.constant : x.constant);
        });
    };
    for (const auto& l : p.locations) scan(l.invariant);
    for (const auto& e : p.edges) scan(e.guard);
    return c;
}

} // namespace zonecheck
