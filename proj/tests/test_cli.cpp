#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "padictk/json_io.hpp"

using namespace padictk;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(PADICTK_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("kl subcommand reports the exact special value") {
    auto r = run("--p 5 kl --chi omega^2 --s -1");
    CHECK(r.exit_code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("exact") == "1/3");
    CHECK(j.at("value").at("valuation") == 0);
    CHECK(j.at("meta").at("config").at("seed") == 1);
}

TEST_CASE("byte-identical output across runs") {
    for (const char* args :
         {"--p 5 kl --chi omega^2 --s -3",
          "signs --k 2 --l 3 --m 3 --finite-prod 1",
          "--p 5 quadfield --D -23",
          "euler --op verify-8eq4x4 --samples 25 --seed 99"}) {
        auto r1 = run(args);
        auto r2 = run(args);
        CHECK(r1.exit_code == 0);
        CHECK(r1.out == r2.out);
    }
}

TEST_CASE("signs subcommand rows") {
    auto r = run("signs --region bal --finite-prod 1");
    auto j = Json::parse(r.out);
    CHECK(j.at("epsilon") == -1);
    CHECK(j.at("vanishing") == Json::array({"bal"}));

    auto r2 = run("signs --k 4 --l 3 --eps-f -1 ");
    auto j2 = Json::parse(r2.out);
    CHECK(j2.at("region") == "ad");  // 2l = 6 > 4
    CHECK(j2.at("eps_triple") == -1);
    CHECK(j2.at("eps_adjoint") == 1);
}

TEST_CASE("error channel: math errors exit 1 with a code") {
    auto r = run("--p 5 kl --chi omega^1 --s -1");
    CHECK(r.exit_code == 1);
    auto j = Json::parse(r.out);
    CHECK(j.at("error").at("code") == "OddCharacter");

    auto r2 = run("--p 7 gross-rhs --chi omega^2 --D -4");
    CHECK(r2.exit_code == 1);
    auto j2 = Json::parse(r2.out);
    CHECK(j2.at("error").at("code") == "NotSplit");

    // quadfield reports the split status instead of erroring
    auto r3 = run("--p 7 quadfield --D -4");
    CHECK(r3.exit_code == 0);
    CHECK(Json::parse(r3.out).at("split_at_p") == false);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("no-such-subcommand").exit_code == 2);
    CHECK(run("kl").exit_code == 2);              // missing required --s
    CHECK(run("--p 4 kl --s 0").exit_code == 2);  // p must be an odd prime
    CHECK(run("--p 5 --precision 1 kl --s 0").exit_code == 2);
}

TEST_CASE("verify driver runs a single suite") {
    auto r = run("verify --suite sign-tables");
    CHECK(r.exit_code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("cases").size() == 1);
    CHECK(j.at("cases").at(0).at("id") == 9);
}

TEST_CASE("gross-rhs end to end") {
    auto r = run("--p 5 --precision 4 --truncation 8 --budget 2000000 "
                 "gross-rhs --chi omega^2 --D -4");
    CHECK(r.exit_code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("product").contains("series"));
    CHECK(j.at("meta").at("calibration").at("u_exp") == 0);
}

TEST_CASE("gross truncation law enforced") {
    auto r = run("--p 5 --precision 6 --truncation 4 gross-rhs --chi omega^2 --D -4");
    CHECK(r.exit_code == 1);
    auto j = Json::parse(r.out);
    CHECK(j.at("error").at("code") == "BadInput");
}

TEST_CASE("every printed p-adic value carries its precision") {
    auto r = run("--p 5 --precision 6 quadfield --D -4");
    auto j = Json::parse(r.out);
    CHECK(j.at("log_u").contains("precision"));
    CHECK(j.at("u_embedded").contains("precision"));
}

TEST_CASE("config file sets defaults, flags override") {
    std::string path = "/tmp/padictk_test_config.toml";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f);
        fputs("p=13\nprecision=6\n", f);
        fclose(f);
    }
    auto r = run("--config " + path + " quadfield --D -4");
    CHECK(r.exit_code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("meta").at("config").at("p") == 13);
    CHECK(j.at("split_at_p") == true);
    CHECK(j.at("u") == Json::array({3, 2}));  // 9 + 4 = 13
    // explicit flag beats the config value
    auto r2 = run("--config " + path + " --p 5 quadfield --D -4");
    auto j2 = Json::parse(r2.out);
    CHECK(j2.at("meta").at("config").at("p") == 5);
    CHECK(j2.at("u") == Json::array({2, 1}));
    remove(path.c_str());
}

TEST_CASE("character and series JSON round trips") {
    auto chi = DirichletCharacter::omega(7).power(2) *
               DirichletCharacter::kronecker_character(-4);
    auto j = character_to_json(chi);
    auto back = character_from_json(j);
    CHECK(back == chi);

    auto F = IwasawaSeries::from_coeffs(5, 4, 6, {Int(1), Int(22), Int(333)});
    auto jf = series_to_json(F);
    CHECK(series_from_json(jf) == F);
}

TEST_CASE("leading-term subcommand") {
    auto r = run("leading-term --input "
                 "{\\\"ring\\\":{\\\"p\\\":2,\\\"a\\\":1,\\\"b\\\":2},"
                 "\\\"matrix\\\":[[[0,1],[0,1]]]}");
    CHECK(r.exit_code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("fitt_stark") == "equal");
    CHECK(j.at("delta_in_bidual") == true);
}
