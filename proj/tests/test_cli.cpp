#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output; // stdout only
};

CmdResult run(const std::string& args) {
    std::string cmd = std::string(ZONECHECK_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/zonecheck_test_") + name;
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
    return path;
}

// masks the two wall-clock columns of a CSV (time_max at index 9, time_min at 11)
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

} // namespace

TEST_CASE("check on the bundled example model") {
    CmdResult r = run("check fixture:example \"Pmax F done\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("probability: 0.999") != std::string::npos);

    CmdResult bounded = run("check fixture:example \"Pmax F (done & z <= 10)\"");
    CHECK(bounded.exit_code == 0);
    CHECK(bounded.output.find("probability: 0.99\n") != std::string::npos);

    CmdResult digital = run("check fixture:example \"Pmax F (done & z <= 10)\" --engine digital");
    CHECK(digital.exit_code == 0);
    CHECK(digital.output.find("probability: 0.99\n") != std::string::npos);
}

TEST_CASE("both engines report the same probability") {
    for (const std::string prop : {"Pmax F done", "Pmin F done", "Pmax F (done & z <= 10)",
                                   "Pmin F (done & z <= 10)"}) {
        CmdResult a = run("check fixture:example \"" + prop + "\" --format json");
        CmdResult b = run("check fixture:example \"" + prop + "\" --engine digital --format json");
        REQUIRE(a.exit_code == 0);
        REQUIRE(b.exit_code == 0);
        auto prob_of = [](const std::string& out) {
            auto pos = out.find("\"probability\":");
            REQUIRE(pos != std::string::npos);
            return std::stod(out.substr(pos + 14));
        };
        CHECK(std::abs(prob_of(a.output) - prob_of(b.output)) <= 1e-6);
    }
}

TEST_CASE("unicode property syntax") {
    CmdResult r = run("check fixture:example \"◇ done ∧ z≤10\" --engine backwards");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("probability: 0.99\n") != std::string::npos);
}

TEST_CASE("threshold verdicts") {
    CmdResult r = run("check fixture:example \">= 0.99 F done\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: true") != std::string::npos);

    CmdResult f = run("check fixture:example \"<= 0.99 F done\"");
    CHECK(f.exit_code == 0);
    CHECK(f.output.find("verdict: false") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("check --no-such-flag x y").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("check onlyonearg").exit_code == 2);
}

TEST_CASE("model and property errors exit with 3") {
    CHECK(run("check /nonexistent/model.json \"Pmax F done\"").exit_code == 3);
    std::string bad = temp_file("bad_model.json", "{ \"clocks\": [\"x\"] }");
    CHECK(run("check " + bad + " \"Pmax F done\"").exit_code == 3);
    CHECK(run("check fixture:example \"Pmax F nosuchloc\"").exit_code == 3);
}

TEST_CASE("digital limitations exit with 4") {
    std::string strict = temp_file("strict_model.json", R"({
      "clocks": ["x"], "initial": "a",
      "locations": [{"name": "a", "invariant": "true"}, {"name": "b", "invariant": "true"}],
      "edges": [{"source": "a", "action": "go", "guard": "x > 1",
                 "branches": [{"prob": "1", "resets": [], "target": "b"}]}]
    })");
    CHECK(run("check " + strict + " \"Pmax F b\" --engine digital").exit_code == 4);
    CHECK(run("check " + strict + " \"Pmax F b\" --engine backwards").exit_code == 0);
}

TEST_CASE("info summarizes a model") {
    CmdResult r = run("info fixture:example");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("clocks: 2") != std::string::npos);
    CHECK(r.output.find("locations: 4") != std::string::npos);
    CHECK(r.output.find("edges: 4") != std::string::npos);
    CHECK(r.output.find("closed: true") != std::string::npos);
    CHECK(r.output.find("diagonal_free: true") != std::string::npos);
    CHECK(r.output.find("max_constant x: 8") != std::string::npos);
    CHECK(r.output.find("max_constant y: 24") != std::string::npos);
}

TEST_CASE("bench on an empty suite prints only the header") {
    std::string suite = temp_file("empty_suite.json", "{\"rows\": []}\n");
    CmdResult r = run("bench " + suite);
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "model,property,engine,c,D,lambda,probability,verdict,states_max,time_max,"
          "states_min,time_min,iter_maxv,iter_maxu1,digital_states,error\n");
}

TEST_CASE("bench rows are deterministic and errors are recorded") {
    std::string suite = temp_file("small_suite.json", R"json({
      "rows": [
        {"model": "fixture:example", "property": "Pmax F (done & z <= 10)",
         "engines": ["backwards", "digital"], "D": [5, 10]},
        {"model": "fixture:example", "property": "Pmin >= 1 F done",
         "engines": ["backwards"], "c": [2, 8]},
        {"model": "fixture:nosuch", "property": "Pmax F done", "engines": ["backwards"]}
      ]
    })json");
    CmdResult a = run("bench " + suite);
    CmdResult b = run("bench " + suite);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(mask_times(a.output) == mask_times(b.output));
    CHECK(a.output.find("unknown fixture") != std::string::npos);

    // row count: header + 2 engines x 2 deadlines + 2 c values + 1 error row
    std::size_t lines = 0;
    for (char ch : a.output)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 4 + 2 + 1);
}

TEST_CASE("csv output format") {
    CmdResult r = run("check fixture:example \"Pmax F (done & z <= 10)\" --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("model,property,engine,c,D,lambda,probability,verdict", 0) == 0);
    CHECK(r.output.find(",10,,0.99,") != std::string::npos);
}

TEST_CASE("divergence rounds shrink as c grows") {
    std::string suite = temp_file("firewire_suite.json", R"json({
      "rows": [{"model": "fixture:firewire", "property": "Pmin >= 1 F done",
                "engines": ["backwards"], "c": [10, 100, 360, 1670]}]
    })json");
    CmdResult r = run("bench " + suite);
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line); // header
    std::vector<long> rounds;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') { fields.push_back(cur); cur.clear(); }
            else cur += ch;
        }
        fields.push_back(cur);
        REQUIRE(fields.size() >= 13);
        CHECK(fields[6] == "1");     // probability
        CHECK(fields[7] == "true");  // verdict for >= 1
        rounds.push_back(std::stol(fields[12]));
    }
    REQUIRE(rounds.size() == 4);
    for (std::size_t i = 1; i < rounds.size(); ++i) CHECK(rounds[i] <= rounds[i - 1]);
}

TEST_CASE("bench sweep flags override suite values") {
    std::string suite = temp_file("sweep_suite.json", R"json({
      "rows": [{"model": "fixture:example", "property": "Pmax F (done & z <= 10)",
                "engines": ["backwards"], "D": [10]}]
    })json");
    CmdResult r = run("bench " + suite + " --deadline-sweep 5,10,20");
    REQUIRE(r.exit_code == 0);
    std::size_t lines = 0;
    for (char ch : r.output)
        if (ch == '\n') ++lines;
    CHECK(lines == 1 + 3);
    CHECK(r.output.find(",5,") != std::string::npos);
    CHECK(r.output.find(",20,") != std::string::npos);
}

TEST_CASE("fixtures subcommand writes models and the suite") {
    std::string dir = "/tmp/zonecheck_test_fixtures";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    CmdResult r = run("fixtures --out-dir " + dir);
    CHECK(r.exit_code == 0);
    for (const char* f : {"example.json", "csma1.json", "csma2.json", "firewire.json", "suite.json"}) {
        std::ifstream in(dir + "/" + f);
        CHECK(in.good());
    }
    // written model files load back through the CLI
    CmdResult check = run("check " + dir + "/example.json \"Pmax F done\"");
    CHECK(check.exit_code == 0);
    CHECK(check.output.find("probability: 0.999") != std::string::npos);
}

TEST_CASE("README examples produce their stated output") {
    std::ifstream in(std::string(ZONECHECK_ROOT) + "/README.md");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();

    // extract ```console blocks: lines "$ zonecheck ..." followed by expected output
    std::size_t pos = 0;
    int examples = 0;
    while ((pos = text.find("```console", pos)) != std::string::npos) {
        std::size_t end = text.find("```", pos + 10);
        REQUIRE(end != std::string::npos);
        std::istringstream block(text.substr(pos + 11, end - pos - 11));
        std::string line, command, expected;
        auto flush = [&] {
            if (command.empty()) return;
            CmdResult r = run(command);
            CHECK(r.exit_code == 0);
            CHECK(r.output == expected);
            ++examples;
            command.clear();
            expected.clear();
        };
        while (std::getline(block, line)) {
            if (line.rfind("$ zonecheck", 0) == 0) {
                flush();
                command = line.substr(std::string("$ zonecheck").size());
            } else if (!command.empty()) {
                expected += line + "\n";
            }
        }
        flush();
        pos = end;
    }
    CHECK(examples >= 2);
}
