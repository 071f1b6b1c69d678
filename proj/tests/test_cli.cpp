#include "cli.hpp"

#include "vogel/json_io.hpp"
#include "vogel/qsearch.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "vogel");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = vogel::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, EvalE8) {
    const auto r = run({"eval", "--builtin", "adjoint", "--algebra", "exc", "--param", "8", "--classical"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "248\n");
}

TEST(Cli, EvalPointAndSingular) {
    EXPECT_EQ(run({"eval", "--builtin", "q33", "--params", "2,3,1,1", "--point", "1,1,1", "--primed"}).out, "27/26\n");
    const auto pole = run({"eval", "--builtin", "adjoint", "--point", "0,1,1"});
    EXPECT_EQ(pole.code, 1);
    EXPECT_EQ(pole.out, "pole\n");
    const auto j = run({"--json", "eval", "--builtin", "adjoint", "--algebra", "sl", "--param", "5"});
    EXPECT_EQ(j.code, 0);
    EXPECT_EQ(vogel::rational_from_json(vogel::Json::parse(j.out)["value"], ""), 24);
}

TEST(Cli, EvalQuantumFlagged) {
    const auto r = run({"eval", "--builtin", "adjoint", "--algebra", "sl", "--param", "5", "--sinh", "--x", "0.000001"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("floating point"), std::string::npos);
    EXPECT_NEAR(std::stod(r.out), 24.0, 1e-6);
}

TEST(Cli, CheckIdentity) {
    const auto r = run({"check-identity", "--builtin", "q33", "--params", "2,3,1,1", "--lines", "sl,so,exc"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "sl: IdenticallyOne\nso: IdenticallyOne\nexc: IdenticallyOne\n");
    const auto sp = run({"check-identity", "--builtin", "q33", "--params", "2,3,1,1", "--lines", "sp"});
    EXPECT_EQ(sp.code, 1);
    EXPECT_NE(sp.out.find("NotConstant"), std::string::npos);
    const auto plane = run({"--json", "check-identity", "--builtin", "q33", "--params", "2,3,1,1", "--plane"});
    EXPECT_EQ(plane.code, 1);
    const auto j = vogel::Json::parse(plane.out);
    EXPECT_EQ(vogel::rational_from_json(j["reports"][0]["witness"]["value"], ""), vogel::Rational(27, 26));
    const auto q = run({"check-identity", "--builtin", "q-prop4", "--params", "2,5,-7,3", "--quantum", "--lines",
                        "sl,so,exc,sp", "--crosscheck", "3"});
    EXPECT_EQ(q.code, 0) << q.out << q.err;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"eval", "--builtin", "nope"}).code, 2);
    EXPECT_EQ(run({"eval", "--builtin", "adjoint", "--point", "1.5,2,3"}).code, 2);
    EXPECT_EQ(run({"eval", "--builtin", "q33", "--params", "1,2", "--point", "1,1,1"}).code, 2);
    EXPECT_EQ(run({"check-identity", "--builtin", "adjoint", "--lines", "e9"}).code, 2);
    EXPECT_EQ(run({"reproduce", "P9"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, MalformedJsonInput) {
    const auto path = temp_file("vogel_bad_formula.json", R"({"quantum": true, "sign": 1, "basis": "primed", "num": [)");
    const auto r = run({"eval", "--formula", path, "--point", "1,1,1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("vogel_bad_formula.json"), std::string::npos);
    const auto path2 = temp_file("vogel_bad_table.json", R"({"p":9,"l":9,"gamma":3,"pi":3,"columns":[[1,2,"x"]]})");
    const auto r2 = run({"configs-color", "--table", path2});
    EXPECT_EQ(r2.code, 2);
    EXPECT_NE(r2.err.find("/columns/0/2"), std::string::npos) << r2.err;
}

TEST(Cli, FormulaFile) {
    const auto path = temp_file("vogel_q33.json", vogel::formula_to_json(vogel::builtin_q33(2, 3, 1, 1)).dump());
    const auto r = run({"check-identity", "--formula", path, "--lines", "sl,so,exc"});
    EXPECT_EQ(r.code, 0);
}

TEST(Cli, Configs) {
    const auto e = run({"configs-enumerate", "--type", "9_3", "--color"});
    EXPECT_EQ(e.code, 0);
    EXPECT_EQ(e.out, "3 classes, 1 colorable\n");
    const auto c = run({"configs-color", "--builtin", "pappus"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "black: 1 2 3\nred: 4 5 6\ngreen: 7 8 9\n");
    const auto fano = temp_file("vogel_bad_color.json", R"({"p":9,"l":9,"gamma":3,"pi":3,"columns":[[1,2,3],[4,5,6],[7,8,9],[1,4,7],[2,5,8],[3,6,9],[1,5,9],[2,6,7],[3,4,8]]})");
    EXPECT_EQ(run({"configs-color", "--table", fano}).code, 0);
}

TEST(Cli, NoColoringExitsOne) {
    // The two non-colorable (9_3) classes.
    const auto j = vogel::Json::parse(run({"--json", "configs-enumerate", "--type", "9_3", "--color"}).out);
    int seen = 0;
    for (const auto& t : j["tables"]) {
        if (t["colorable"].get<bool>()) continue;
        const auto path = temp_file("vogel_nc" + std::to_string(seen++) + ".json", t["table"].dump());
        const auto r = run({"configs-color", "--table", path});
        EXPECT_EQ(r.code, 1);
        EXPECT_EQ(r.out, "no coloring\n");
    }
    EXPECT_EQ(seen, 2);
}

TEST(Cli, ExtractAndSketch) {
    const auto r = run({"extract-perms", "--builtin", "q-prop4", "--params", "2,5,-7,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "s=(12)(34) p=(14)(23) v=(13)(24)\n");
    const auto svg = (std::filesystem::temp_directory_path() / "vogel_cli.svg").string();
    const auto s = run({"sketch", "--builtin", "q33", "--params", "2,3,1,1", "--out", svg});
    EXPECT_EQ(s.code, 0);
    EXPECT_TRUE(std::filesystem::exists(svg));
    const auto bad = run({"sketch", "--builtin", "adjoint"});
    EXPECT_EQ(bad.code, 1);
}

TEST(Cli, VogelTableAndSearch) {
    const auto t = run({"vogel-table", "--family", "so", "--param", "7"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("dim 21"), std::string::npos);
    const auto s = run({"search", "--k", "3"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find(": 0 nontrivial families"), std::string::npos);
    const auto j = vogel::Json::parse(run({"--json", "search", "--k", "2"}).out);
    EXPECT_TRUE(j["families"].empty());
    EXPECT_FALSE(j["partial"].get<bool>());
    const auto h = vogel::Json::parse(run({"--json", "search-144", "--budget", "0"}).out);
    EXPECT_EQ(h["best_depth"], 0);
    EXPECT_FALSE(h["complete"].get<bool>());
}

TEST(Cli, Reproduce) {
    for (const char* p : {"P1-remark", "P2-k3", "P3", "P4"}) {
        const auto checks = vogel::cli::reproduce(p, 20211205, 0);
        EXPECT_FALSE(checks.empty());
        for (const auto& c : checks) EXPECT_TRUE(c.pass) << p << ": " << c.name << " " << c.detail;
        const auto a = run({"reproduce", p}), b = run({"reproduce", p});
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
}
