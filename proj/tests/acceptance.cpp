// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle_support.hpp"
#include "random_pta.hpp"
#include "zonecheck/backwards.hpp"
#include "zonecheck/digital.hpp"
#include "zonecheck/fixtures.hpp"

using namespace zonecheck;
using namespace zonecheck::backwards;

namespace {

std::vector<std::string> g_failures;

void expect(bool cond, const std::string& what) {
    if (!cond) g_failures.push_back(what);
}

Federation fed3(std::vector<oracle::RawConstraint> cs) {
    return Federation::of(oracle::to_dbm({3, std::move(cs)}));
}

constexpr std::size_t X = 1;
constexpr std::size_t Y = 2;

// ── criterion 1: golden symbolic MDP of the protocol example ───────────────

void criterion_1() {
    Pta p = fixtures::example_pta();
    EngineConfig cfg;

    // bounded property through the property clock: probability only
    Property bounded = parse_property_text("Pmax F (done & z <= 10)", p);
    auto [pz, bz] = inject_property_clock(p, bounded);
    ProbResult r = pmax_until(pz, Expr::negate(bz.left), bz.right, cfg);
    expect(std::abs(r.probability - 0.99) <= 1e-6,
           "bounded probability " + std::to_string(r.probability) + " != 0.99");

    // the same query phrased over the model clock reproduces the drawn MDP
    SymbolicMdp sym = max_u(p, Expr::make_false(), parse_expr("done & y <= 10"), cfg);
    expect(sym.states.size() == 5, "expected 5 symbolic states, got " +
                                       std::to_string(sym.states.size()));

    struct Expected {
        const char* loc;
        Federation zone;
    };
    std::vector<Expected> expected;
    expected.push_back({"done", fed3({{Y, 0, false, 10}})});
    expected.push_back({"init", fed3({{0, X, false, -1}, {X, 0, false, 2}, {Y, 0, false, 10}})});
    expected.push_back({"lost", fed3({{X, 0, false, 8}, {0, X, false, -8}, {Y, 0, false, 9}})});
    expected.push_back({"init", fed3({{0, X, false, -1}, {X, 0, false, 2}, {Y, X, false, 1}})});
    expected.push_back({"lost", fed3({{X, 0, false, 8}, {0, X, false, -8}, {Y, 0, false, 1}})});

    std::vector<std::ptrdiff_t> found(expected.size(), -1);
    for (std::size_t i = 0; i < expected.size(); ++i)
        for (std::size_t s = 0; s < sym.states.size(); ++s)
            if (p.locations[sym.states[s].location].name == expected[i].loc &&
                sym.states[s].zone.equals_sem(expected[i].zone))
                found[i] = static_cast<std::ptrdiff_t>(s);
    for (std::size_t i = 0; i < expected.size(); ++i)
        expect(found[i] >= 0, "missing symbolic state #" + std::to_string(i));
    if (g_failures.empty()) {
        expect(sym.seeds.size() == 1 && sym.seeds[0] == static_cast<std::size_t>(found[0]),
               "seed is not the done state");

        // exactly the two init states cover the initial valuation
        auto covering = sym.covering(*p.location_index("init"), ClockValuation::zero(2));
        expect(covering.size() == 2, "expected 2 covering states");
        for (std::size_t id : covering)
            expect(id == static_cast<std::size_t>(found[1]) ||
                       id == static_cast<std::size_t>(found[3]),
                   "unexpected covering state");

        // values of the drawn MDP
        mdp::Mdp m = sym.to_mdp();
        auto vi = m.value_iteration(true, 1e-9, 100000);
        auto val = [&](std::size_t i) { return vi.values[static_cast<std::size_t>(found[i])]; };
        expect(std::abs(val(1) - 0.9) <= 1e-6, "value of s1 is not 0.9");
        expect(std::abs(val(2) - 0.9) <= 1e-6, "value of s2 is not 0.9");
        expect(std::abs(val(3) - 0.99) <= 1e-6, "value of s3 is not 0.99");
        expect(std::abs(val(4) - 0.99) <= 1e-6, "value of s4 is not 0.99");
    }
}

// ── criterion 2: example probabilities on both engines ─────────────────────

void criterion_2() {
    Pta p = fixtures::example_pta();
    EngineConfig cfg;

    double bw_max = pmax_until(p, Expr::make_false(), parse_expr("done"), cfg).probability;
    double bw_min = pmin_until(p, Expr::make_false(), parse_expr("done"), cfg).probability;
    expect(std::abs(bw_max - 0.999) <= 1e-6, "Pmax(F done) backwards != 0.999");
    expect(std::abs(bw_min - 0.99) <= 1e-6, "Pmin(F done) backwards != 0.99");

    Property pmax_prop;
    pmax_prop.left = Expr::make_true();
    pmax_prop.right = parse_expr("done");
    Property pmin_prop = pmax_prop;
    pmin_prop.maximize = false;
    double dig_max = digital::check(p, pmax_prop, cfg).probability;
    double dig_min = digital::check(p, pmin_prop, cfg).probability;
    expect(std::abs(dig_max - bw_max) <= 1e-6, "engines disagree on Pmax(F done)");
    expect(std::abs(dig_min - bw_min) <= 1e-6, "engines disagree on Pmin(F done)");
}

// ── criterion 3: independence of the divergence parameter ──────────────────

void criterion_3() {
    Pta p = fixtures::example_pta();
    EngineConfig cfg;
    std::vector<Federation> not_done;
    auto inv = invariant_sets(p);
    for (std::size_t l = 0; l < p.locations.size(); ++l)
        not_done.push_back(compile_predicate(parse_expr("!done"), l, p).intersect(inv[l]));

    std::vector<std::vector<Federation>> results;
    std::vector<std::size_t> rounds;
    std::vector<double> pmins;
    for (std::int64_t c : {1, 2, 4, 8, 16}) {
        EngineStats stats;
        results.push_back(max_v_geq1(p, not_done, c, cfg, &stats));
        rounds.push_back(stats.iter_maxv);
        EngineConfig cc = cfg;
        cc.c = c;
        pmins.push_back(pmin_until(p, Expr::make_false(), parse_expr("done"), cc).probability);
    }
    for (std::size_t i = 1; i < results.size(); ++i) {
        for (std::size_t l = 0; l < p.locations.size(); ++l)
            expect(results[i][l].equals_sem(results[0][l]),
                   "divergence fixpoint differs between c values at location " + std::to_string(l));
        expect(std::abs(pmins[i] - pmins[0]) <= 1e-6, "Pmin differs between c values");
        expect(rounds[i] <= rounds[i - 1], "rounds increased with larger c");
    }
}

// ── criterion 4: cross-engine agreement on a random corpus ─────────────────

void criterion_4() {
    oracle::Rng rng(424242);
    EngineConfig cfg;
    cfg.epsilon = 1e-9; // converge well below the 1e-6 agreement tolerance
    for (int iter = 0; iter < 50; ++iter) {
        testgen::RandomCase rc = testgen::random_pta(rng);
        Property pmax_prop;
        pmax_prop.left = Expr::make_true();
        pmax_prop.right = rc.target;
        Property pmin_prop = pmax_prop;
        pmin_prop.maximize = false;

        double dig_max = digital::check(rc.model, pmax_prop, cfg).probability;
        double dig_min = digital::check(rc.model, pmin_prop, cfg).probability;
        double bw_max = pmax_until(rc.model, Expr::make_false(), rc.target, cfg).probability;
        double bw_min = pmin_until(rc.model, Expr::make_false(), rc.target, cfg).probability;
        expect(std::abs(dig_max - bw_max) <= 1e-6,
               "model #" + std::to_string(iter) + ": Pmax " + std::to_string(bw_max) +
                   " vs digital " + std::to_string(dig_max));
        expect(std::abs(dig_min - bw_min) <= 1e-6,
               "model #" + std::to_string(iter) + ": Pmin " + std::to_string(bw_min) +
                   " vs digital " + std::to_string(dig_min));
        if (g_failures.size() > 4) return; // enough evidence
    }
}

// ── criterion 5: zone algebra against the grid oracle ──────────────────────

void criterion_5() {
    oracle::Rng rng(11111);
    const int cases = 1000;

    auto clocks_for = [&](int iter) -> std::size_t {
        if (iter % 20 == 19) return 3; // 5% three-clock cases
        return iter % 2 == 0 ? 1 : 2;
    };

    std::size_t mismatches = 0;
    auto grid_compare = [&](std::size_t clocks,
                            const std::function<bool(const std::vector<Rational>&)>& expected,
                            const Federation& got) {
        oracle::for_each_grid_point(clocks, 7, static_cast<std::int64_t>(clocks + 1),
                                    [&](const std::vector<Rational>& v) {
                                        if (expected(v) != got.contains(ClockValuation(v)))
                                            ++mismatches;
                                    });
    };

    for (int iter = 0; iter < cases; ++iter) {
        std::size_t clocks = clocks_for(iter);

        // intersect
        oracle::RawZone a = oracle::random_zone(rng, clocks, 5, 4);
        oracle::RawZone b = oracle::random_zone(rng, clocks, 5, 4);
        grid_compare(clocks,
                     [&](const std::vector<Rational>& v) {
                         return oracle::raw_contains(a, v) && oracle::raw_contains(b, v);
                     },
                     Federation::of(oracle::to_dbm(a).intersect(oracle::to_dbm(b))));

        // down
        Dbm da = oracle::to_dbm(a);
        grid_compare(clocks,
                     [&](const std::vector<Rational>& v) {
                         return !da.is_empty() && oracle::down_oracle_accepts(a, v);
                     },
                     Federation::of(da.down()));

        // free
        std::size_t c = 1 + static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(clocks) - 1));
        grid_compare(clocks,
                     [&](const std::vector<Rational>& v) {
                         return !da.is_empty() && oracle::free_oracle_accepts(a, c, v);
                     },
                     Federation::of(da.freed(c)));

        // backwards reset (direct membership oracle: v[X:=0] in a)
        std::vector<std::size_t> resets;
        for (std::size_t k = 1; k <= clocks; ++k)
            if (rng.flag()) resets.push_back(k);
        grid_compare(clocks,
                     [&](const std::vector<Rational>& v) {
                         if (da.is_empty()) return false;
                         std::vector<Rational> w(v);
                         for (std::size_t k : resets) w[k - 1] = Rational(0);
                         return oracle::raw_contains(a, w);
                     },
                     Federation::of(da.backwards_reset(resets)));

        // subtract and complement on federations
        oracle::RawUnion ua = oracle::random_union(rng, clocks, 5, 3, 3);
        oracle::RawUnion ub = oracle::random_union(rng, clocks, 5, 3, 3);
        Federation fa = oracle::to_fed(ua);
        Federation fb = oracle::to_fed(ub);
        grid_compare(clocks,
                     [&](const std::vector<Rational>& v) {
                         return oracle::raw_contains(ua, v) && !oracle::raw_contains(ub, v);
                     },
                     fa.subtract(fb));
        grid_compare(clocks,
                     [&](const std::vector<Rational>& v) { return !oracle::raw_contains(ua, v); },
                     fa.complement());

        // tpre_within with the rational-time crossing oracle; every third
        // case negates the stay or target to hit complement-style aligned
        // open/closed member boundaries
        std::size_t tclocks = clocks == 3 ? 2 : clocks;
        oracle::RawUnion stay = oracle::random_union(rng, tclocks, 5, 2, 3);
        oracle::RawUnion target = oracle::random_union(rng, tclocks, 5, 2, 3);
        bool negate_stay = iter % 3 == 1;
        bool negate_target = iter % 6 >= 4;
        Federation fs = oracle::to_fed(stay);
        if (negate_stay) fs = fs.complement();
        Federation ft = oracle::to_fed(target);
        if (negate_target) ft = ft.complement();
        Federation tp = tpre_within(fs, ft);
        oracle::for_each_grid_point(tclocks, 7, static_cast<std::int64_t>(tclocks + 1),
                                    [&](const std::vector<Rational>& v) {
                                        bool e = oracle::tpre_oracle_accepts(stay, target, v,
                                                                             negate_stay, negate_target);
                                        if (e != tp.contains(ClockValuation(v))) ++mismatches;
                                    });

        if (mismatches > 0) {
            expect(false, "zone-algebra mismatch in case " + std::to_string(iter));
            return;
        }
    }
    expect(mismatches == 0, "grid mismatches: " + std::to_string(mismatches));
}

// ── criterion 6: non-canonicity regression and fixture termination ─────────

void criterion_6() {
    auto box = [](std::int64_t x_lo, std::int64_t x_hi, std::int64_t y_lo, std::int64_t y_hi) {
        return oracle::RawZone{
            3, {{0, X, false, -x_lo}, {X, 0, false, x_hi}, {0, Y, false, -y_lo}, {Y, 0, false, y_hi}}};
    };
    Federation left(3), middle(3);
    left.add(oracle::to_dbm(box(1, 5, 2, 5)));
    left.add(oracle::to_dbm(box(5, 8, 3, 8)));
    left.add(oracle::to_dbm(box(3, 5, 5, 8)));
    middle.add(oracle::to_dbm(box(1, 5, 2, 5)));
    middle.add(oracle::to_dbm(box(5, 8, 3, 5)));
    middle.add(oracle::to_dbm(box(3, 8, 5, 8)));
    expect(left.equals_sem(middle), "figure federations are not semantically equal");

    EngineConfig cfg;
    for (const auto& name : fixtures::names()) {
        Pta p = *fixtures::by_name(name);
        try {
            pmax_until(p, Expr::make_false(), parse_expr("done"), cfg);
            pmin_until(p, Expr::make_false(), parse_expr("done"), cfg);
            Property bounded = parse_property_text("Pmax F (done & z <= 120)", p);
            auto [pz, bz] = inject_property_clock(p, bounded);
            pmax_until(pz, Expr::negate(bz.left), bz.right, cfg);
        } catch (const IterationCapExceeded& e) {
            expect(false, name + ": " + e.what());
        }
    }
}

// ── criterion 7: exact zero detection below the minimum completion time ────

void criterion_7() {
    Pta p = fixtures::csma(1);
    EngineConfig cfg;
    Property bounded = parse_property_text("Pmax F (done & z <= 50)", p);
    auto [pz, bz] = inject_property_clock(p, bounded);
    QueryOutcome out = pmax_until_full(pz, Expr::negate(bz.left), bz.right, cfg);
    expect(out.result.probability == 0.0, "probability is not exactly zero");
    expect(out.result.stats.vi_sweeps == 0, "value iteration ran");
    expect(out.result.stats.states_max <= out.result.stats.seeds,
           "state count " + std::to_string(out.result.stats.states_max) + " exceeds seed count " +
               std::to_string(out.result.stats.seeds));
}

// ── criterion 8: byte-identical bench CSV after masking timings ─────────────

std::string run_bench_csv() {
    std::string cmd = std::string(ZONECHECK_BIN) + " bench " + ZONECHECK_ROOT +
                      "/models/suite.json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

std::string mask_times(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') { fields.push_back(cur); cur.clear(); }
            else cur += ch;
        }
        fields.push_back(cur);
        if (fields.size() >= 12) {
            if (!fields[9].empty()) fields[9] = "T";
            if (!fields[11].empty()) fields[11] = "T";
        }
        for (std::size_t i = 0; i < fields.size(); ++i)
            out += fields[i] + (i + 1 < fields.size() ? "," : "");
        out += "\n";
    }
    return out;
}

void criterion_8() {
    std::string a = run_bench_csv();
    std::string b = run_bench_csv();
    expect(!a.empty(), "bench produced no output");
    expect(a.find("error") != std::string::npos, "bench output lacks the CSV header");
    std::size_t rows = 0;
    for (char ch : a)
        if (ch == '\n') ++rows;
    expect(rows > 10, "bench produced too few rows");
    expect(mask_times(a) == mask_times(b), "bench CSV differs between runs");
    for (const auto& line : {a, b})
        expect(line.find(",engine failure") == std::string::npos, "a bench row failed");
}

// ── harness ─────────────────────────────────────────────────────────────────

struct Criterion {
    int number;
    const char* description;
    double limit_seconds;
    std::function<void()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "golden symbolic MDP and 0.99 for the bounded protocol property", 1.0, criterion_1},
        {2, "protocol probabilities 0.999/0.99 with engine agreement", 5.0, criterion_2},
        {3, "divergence fixpoint independent of c, rounds non-increasing", 30.0, criterion_3},
        {4, "50-model random corpus: backwards vs digital within 1e-6", 300.0, criterion_4},
        {5, "zone algebra matches the rational grid oracle (1000 cases/op)", 120.0, criterion_5},
        {6, "non-canonical federations equal; all fixtures terminate", 60.0, criterion_6},
        {7, "deadline below minimum completion time: exact zero, no sweeps", 10.0, criterion_7},
        {8, "bench CSV byte-identical across runs after masking timings", 600.0, criterion_8},
    };

    int failed = 0;
    for (auto& c : criteria) {
        g_failures.clear();
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run();
        } catch (const std::exception& e) {
            g_failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds)
            g_failures.push_back("runtime " + std::to_string(secs) + "s exceeds limit " +
                                 std::to_string(c.limit_seconds) + "s");
        bool ok = g_failures.empty();
        std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", c.number,
                    c.description, secs);
        for (const auto& f : g_failures) std::printf("       %s\n", f.c_str());
        if (!ok) ++failed;
    }
    if (failed > 0) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
