#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <nlohmann/json.hpp>

#include "support.hpp"

using testsupport::cli_path;
using testsupport::run;

TEST_CASE("table output") {
    const auto r = run(cli_path() + " table --n 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("e1*e2 = e3") != std::string::npos);
    CHECK(r.output.find("e1*e4 = e5") != std::string::npos);
    CHECK(r.output.find("(1,2,3)") != std::string::npos);

    const auto j = run(cli_path() + " table --n 2 --format json");
    CHECK(j.exit_code == 0);
    const auto root = nlohmann::json::parse(j.output);
    CHECK(root["n"] == 2);
    CHECK(root["table"][1][1] == "-e0");

    const auto bad = run(cli_path() + " table --n 3");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("1, 2, 4, 8") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    CHECK(run(cli_path() + " verify --n 8 --samples 100 --seed 42").exit_code == 0);
    CHECK(run(cli_path() + " verify --n 4 --samples 100 --seed 42").exit_code == 0);

    const auto mutated = run(cli_path() + " verify --n 8 --samples 50 --mutate-epsilon");
    CHECK(mutated.exit_code == 1);
    CHECK(mutated.output.find("composition: FAIL") != std::string::npos);

    CHECK(run(cli_path() + " verify --n 5").exit_code == 2);
}

TEST_CASE("check subcommand exit codes") {
    CHECK(run(cli_path() + " check --n 2 --expr x^2").exit_code == 0);
    CHECK(run(cli_path() + " check --n 8 --expr x^2").exit_code == 1);
    const auto amb = run(cli_path() + " check --n 8 --expr \"x*x*x\"");
    CHECK(amb.exit_code == 2);
    CHECK(amb.output.find("grouping") != std::string::npos);
}

TEST_CASE("check forms and report schema") {
    const auto r = run(cli_path() + " check --n 8 --expr \"conj(x)\" --form kappa --kappa 2 --format json");
    CHECK(r.exit_code == 1);
    const auto root = nlohmann::json::parse(r.output);
    CHECK(root["form"] == "kappa");
    CHECK(root["kappa"] == "2");
    CHECK(root["verdict"] == "not-analytic");
    CHECK(root["seed"] == 42);
    CHECK(root["points"].size() == 20);
    CHECK(root["points"][0].size() == 8);
    CHECK(root.contains("max_residual"));
    CHECK(root.contains("tolerance"));

    // identity map solves the trace form
    CHECK(run(cli_path() + " check --n 8 --expr x --form jadczyk").exit_code == 0);
    CHECK(run(cli_path() + " check --n 8 --expr x --form kappa --kappa 8").exit_code == 0);
    CHECK(run(cli_path() + " check --n 8 --expr x --form kappa --kappa 2").exit_code == 1);
    // block and vector forms agree with the real one
    for (const char* form : {"quat", "complex", "vector"}) {
        CHECK(run(cli_path() + " check --n 8 --expr x^2 --form " + std::string(form)).exit_code == 1);
    }
    const auto fam = run(cli_path() + " check --n 4 --expr \"conj(x)\" --form complex");
    CHECK(fam.exit_code == 1);

    // configuration errors
    CHECK(run(cli_path() + " check --n 8 --expr x --form kappa").exit_code == 2);
    CHECK(run(cli_path() + " check --n 8 --expr x --form nosuch").exit_code == 2);
    CHECK(run(cli_path() + " check --n 4 --expr x --form quat").exit_code == 2);
    CHECK(run(cli_path() + " check --n 8").exit_code == 2);
    CHECK(run(cli_path() + " check --n 8 --file /nonexistent.json").exit_code == 2);
}

TEST_CASE("check reads componentwise files") {
    const auto dump = run(cli_path() + " check --n 4 --expr x --format json");
    CHECK(dump.exit_code == 1);  // identity is not in the analytic kernel

    // write a componentwise file for the constant function e1
    const std::string path = "/tmp/compalg_test_fn.json";
    {
        std::ofstream out(path);
        out << R"({"N":4,"components":[[],[{"exps":[0,0,0,0],"coef":"1"}],[],[]]})";
    }
    CHECK(run(cli_path() + " check --n 4 --file " + path).exit_code == 0);
    CHECK(run(cli_path() + " check --n 8 --file " + path).exit_code == 2);
}

TEST_CASE("emit-matrix") {
    const auto r8 = run(cli_path() + " emit-matrix --n 8 --variant antianalytic");
    CHECK(r8.exit_code == 0);
    CHECK(r8.output.substr(0, r8.output.find('\n')) == "+d0 +d1 +d2 +d3 +d4 +d5 +d6 +d7");

    const auto r2 = run(cli_path() + " emit-matrix --n 2 --variant analytic");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "+d0 -d1\n+d1 +d0\n");

    const auto r4 = run(cli_path() + " emit-matrix --n 4 --variant analytic --format json");
    CHECK(r4.exit_code == 0);
    const auto root = nlohmann::json::parse(r4.output);
    const std::vector<std::vector<std::string>> want = {{"+d0", "-d1", "-d2", "-d3"},
                                                        {"+d1", "+d0", "-d3", "+d2"},
                                                        {"+d2", "+d3", "+d0", "-d1"},
                                                        {"+d3", "-d2", "+d1", "+d0"}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(root["rows"][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                  want[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);

    CHECK(run(cli_path() + " emit-matrix --n 3").exit_code == 2);
    CHECK(run(cli_path() + " emit-matrix --n 8 --variant sideways").exit_code == 2);
}

TEST_CASE("iso subcommand") {
    const std::string a = "/tmp/compalg_iso_a.json";
    const std::string b = "/tmp/compalg_iso_b.json";
    const std::string c = "/tmp/compalg_iso_c.json";
    REQUIRE(run(cli_path() + " table --n 8 --tensor > " + a).exit_code == 0);
    REQUIRE(run(cli_path() + " table --n 4 --tensor --double --alpha -1 > " + b).exit_code == 0);
    REQUIRE(run(cli_path() + " table --n 4 --tensor > " + c).exit_code == 0);

    const auto same = run(cli_path() + " iso " + a + " " + a);
    CHECK(same.exit_code == 0);
    CHECK(same.output.find("e1 -> +e1") != std::string::npos);

    const auto doubled = run(cli_path() + " iso " + b + " " + a + " --format json");
    CHECK(doubled.exit_code == 0);
    CHECK(nlohmann::json::parse(doubled.output)["found"] == true);

    CHECK(run(cli_path() + " iso " + a + " " + c).exit_code == 2);
    CHECK(run(cli_path() + " iso " + a + " /nonexistent.json").exit_code == 2);
}

TEST_CASE("byte-identical repeated runs") {
    for (const std::string& cmd :
         {std::string(" table --n 8 --format json"),
          std::string(" check --n 8 --expr \"(x*x)*conj(x)\" --format json --seed 7"),
          std::string(" verify --n 8 --samples 25 --format json"),
          std::string(" emit-matrix --n 8 --format csv")}) {
        const auto first = run(cli_path() + cmd);
        const auto second = run(cli_path() + cmd);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
    }
}

TEST_CASE("unknown flags and subcommands are usage errors") {
    CHECK(run(cli_path() + " nosuch").exit_code == 2);
    CHECK(run(cli_path() + " table --n 8 --bogus").exit_code == 2);
    CHECK(run(cli_path() + " table --n 8 --format yaml").exit_code == 2);
}
