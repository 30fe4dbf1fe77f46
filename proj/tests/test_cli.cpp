#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(SYMKERNEL_CLI_PATH) + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json parse(const CliResult& r) { return json::parse(r.out); }

} // namespace

TEST_CASE("cli eval frozen values") {
    const auto r = run_cli("eval --kernel szego --n 2 --z 0.5,0 0.2,0 --w 0.5,0 0.2,0");
    CHECK(r.exit_code == 0);
    const json j = parse(r);
    CHECK(j["command"] == "eval");
    CHECK(j.contains("config"));
    CHECK(j.contains("result"));
    CHECK(j["result"]["value"]["re"].get<double>() ==
          Catch::Approx(1.0 / (0.75 * 0.9 * 0.9 * 0.96)).epsilon(1e-12));
    CHECK(j["result"]["value"]["im"].get<double>() == 0.0);

    const auto g2 = run_cli("eval --kernel g2-explicit --u 0,0 0,0 --v 0,0 0,0");
    CHECK(g2.exit_code == 0);
    CHECK(parse(g2)["result"]["value"]["re"].get<double>() == 1.0);

    const auto anti =
        run_cli("eval --kernel anti --lambda 1 --n 2 --z 0.3,0 0.3,0 --w 0.1,0 0.2,0");
    CHECK(anti.exit_code == 0);
    CHECK(parse(anti)["result"]["value"]["re"].get<double>() == 0.0);
}

TEST_CASE("cli eval series metadata") {
    const auto r = run_cli(
        "eval --kernel anti --method series --max-weight 12 --n 2 --z 0.4,0.1 0.2,0 "
        "--w 0.3,0 0.1,0.2");
    CHECK(r.exit_code == 0);
    const json j = parse(r);
    CHECK(j["result"]["method"] == "series");
    CHECK(j["result"]["truncation_degree"] == 12);
    CHECK(j["result"]["tail_estimate"].get<double>() >= 0.0);
}

TEST_CASE("cli exit codes") {
    // degenerate-point refusal
    CHECK(run_cli("eval --kernel bergman-sym --n 2 --z 0.3,0 0.3,0 --w 0.1,0 0.2,0")
              .exit_code == 4);
    // domain violation
    CHECK(run_cli("eval --kernel anti --n 2 --z 1.5,0 0.3,0 --w 0.1,0 0.2,0").exit_code ==
          3);
    // parse failures
    CHECK(run_cli("eval --kernel anti --n 2 --z oops 0.3,0 --w 0.1,0 0.2,0").exit_code == 2);
    CHECK(run_cli("verify --identity nonsense").exit_code == 2);
    CHECK(run_cli("eval --kernel anti --n 2 --z 0.1,0 --w 0.1,0 0.2,0").exit_code == 2);
}

TEST_CASE("cli verify identities") {
    const auto cauchy = run_cli("verify --identity cauchy --n 2 --trials 5");
    CHECK(cauchy.exit_code == 0);
    const json jc = parse(cauchy);
    CHECK(jc["pass"] == true);
    CHECK(jc["deviations"]["max_rel"].get<double>() <= 1e-8);

    const auto jsnorm = run_cli("verify --identity jsnorm --lambda 2 --n 3");
    CHECK(jsnorm.exit_code == 0);
    const json jj = parse(jsnorm);
    CHECK(jj["result"]["value"].get<double>() == 1.0);
    CHECK(jj["pass"] == true);

    const auto ortho = run_cli("verify --identity lemma-ortho --n 3 --max-weight 6");
    CHECK(ortho.exit_code == 0);
    const json jo = parse(ortho);
    CHECK(jo["result"]["violations"] == 0);
    CHECK(jo["pass"] == true);
}

TEST_CASE("cli gram") {
    const auto analytic = run_cli("gram --n 2 --lambda 2 --max-weight 4 --method analytic");
    CHECK(analytic.exit_code == 0);
    const json ja = parse(analytic);
    CHECK(ja["pass"] == true);
    CHECK(ja["deviations"]["max_offdiag"].get<double>() <= 1e-13);
    CHECK(ja["deviations"]["max_diag_error"].get<double>() <= 1e-13);

    const auto mc = run_cli(
        "gram --n 2 --lambda 2 --max-weight 3 --method montecarlo --samples 50000 "
        "--seed 42");
    CHECK(mc.exit_code == 0);
    CHECK(parse(mc)["pass"] == true);
}

TEST_CASE("cli basis") {
    const auto r = run_cli("basis --n 2 --max-weight 1 --lambda 2");
    CHECK(r.exit_code == 0);
    const json rows = parse(r)["result"];
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["m"] == json::array({0, 0}));
    CHECK(rows[0]["p"] == json::array({1, 0}));
    CHECK(rows[0]["c_p"].get<double>() == 1.0);
    CHECK(rows[1]["p"] == json::array({2, 0}));

    const auto hardy = run_cli("basis --n 2 --max-weight 4 --lambda 1");
    for (const auto& row : parse(hardy)["result"])
        CHECK(row["norm_a_p"].get<double>() ==
              Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("cli output is byte-identical across runs") {
    const std::string cmd = "verify --identity det-vs-series --n 2 --trials 5 --seed 9";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    const auto g1 = run_cli("gram --n 2 --max-weight 3 --method montecarlo --samples 20000");
    const auto g2 = run_cli("gram --n 2 --max-weight 3 --method montecarlo --samples 20000");
    CHECK(g1.out == g2.out);
}

TEST_CASE("cli csv format") {
    const auto r = run_cli(
        "eval --format csv --kernel szego --n 2 --z 0.5,0 0.2,0 --w 0.5,0 0.2,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value_re") != std::string::npos);
    CHECK(r.out.find("value_im") != std::string::npos);
    CHECK(r.out.rfind("kernel,method,", 0) == 0);

    const auto v = run_cli("verify --format csv --identity cauchy --n 2 --trials 3");
    CHECK(v.exit_code == 0);
    CHECK(v.out.rfind("identity,trials,", 0) == 0);
}

TEST_CASE("cli seed from environment, flag wins") {
    const auto env_only = run_cli("basis --n 2 --max-weight 0", "SYMKERNEL_SEED=9 ");
    CHECK(parse(env_only)["config"]["seed"] == 9);
    const auto flag_wins = run_cli("basis --n 2 --max-weight 0 --seed 3",
                                   "SYMKERNEL_SEED=9 ");
    CHECK(parse(flag_wins)["config"]["seed"] == 3);
}
