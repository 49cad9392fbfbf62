#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dsurf/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = dsurf::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kR = "R(n=2,h=1,field=Q)";
const std::string kMap = "x->x; z->z+x^2*U; y->y+(2*z+1)*U+x^2*U^2";

}  // namespace

TEST_CASE("documented dispatch examples") {
    const Run a = run({"exp-verify", "--ring", kR, "--map", kMap});
    CHECK(a.code == 0);
    CHECK(a.out == "relation: pass\naxiom_i: pass\naxiom_ii: pass\nverified\n");

    const Run b = run({"iso-check", "--left", kR, "--right", "R(n=3,h=1,field=Q)"});
    CHECK(b.code == 0);
    CHECK(b.out == "{\"isomorphic\":false,\"eta\":null,\"mu\":null,\"reason\":\"n_mismatch\"}\n");

    const Run c = run({"normal-form", "--ring", "R(n=2,h=1,field=F2)", "--expr", "z^2+z"});
    CHECK(c.code == 0);
    CHECK(c.out == "x^2*y\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"exp-verify", "--ring", kR, "--map", "z->z+x*U"}).code == 1);
    CHECK(run({"exp-verify", "--ring", kR, "--map", "z->z+x^2*U^2"}).code == 1);
    CHECK(run({"aut-decompose", "--ring", kR, "--map", "x->x; y->y; z->z+x"}).code == 1);
    CHECK(run({"normal-form", "--ring", kR, "--expr", "2x"}).code == 2);
    CHECK(run({"normal-form", "--ring", "R(n=2,h=1+x^2,field=Q)", "--expr", "z"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"normal-form", "--ring", kR}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"cancel-verify", "--n1", "2", "--n2", "5"}).code == 2);
    CHECK(run({"exp-build", "--ring", kR, "--coeffs", "2: 1"}).code == 2);
    const Run e = run({"normal-form", "--ring", kR, "--expr", "2x"});
    CHECK(e.err.find("offset 1") != std::string::npos);
}

TEST_CASE("subcommand outputs") {
    CHECK(run({"exp-build", "--ring", kR, "--coeffs", "1: 1"}).out ==
          "x -> x\ny -> x^2*U^2 + 2*z*U + y + U\nz -> x^2*U + z\nrelation: pass\naxiom_i: pass\naxiom_ii: pass\n");
    CHECK(run({"exp-degree", "--ring", kR, "--map", kMap, "--expr", "y"}).out == "deg_phi = 2\ninvariant = false\n");
    CHECK(run({"exp-degree", "--ring", kR, "--map", kMap, "--expr", "x"}).out == "deg_phi = 0\ninvariant = true\n");
    CHECK(run({"derive", "--ring", kR, "--map", kMap, "--expr", "y", "--index", "2"}).out == "x^2\n");
    CHECK(run({"derive", "--ring", kR, "--map", kMap, "--expr", "y"}).out == "D^0: y\nD^1: 2*z + 1\nD^2: x^2\n");
    CHECK(run({"aut-apply", "--ring", "R(n=2,h=3,field=Q)", "--word", "L(2)", "--expr", "y+z"}).out ==
          "z + 1/4*y\n");
    CHECK(run({"aut-decompose", "--ring", "R(n=2,h=3,field=Q)", "--word", "L(2)*T*E(x+1)"}).out ==
          "L(2) * T * E(x + 1)\ntriple: (mu=2, sigma=-1, f=8*x^3 + 4*x^2 - 3)\nrecompose: pass\n");
    CHECK(run({"aut-structure", "--ring", "R(n=4,h=1+x^3,field=F7)"}).out ==
          "m = 3\nL = cyclic of order 3 {1, 2, 4}\nH = C2 x C3\nN = additive group of F7[x] (maps E_f)\n");
    const Run w = run({"iso-check", "--left", "R(n=2,h=1+x,field=Q)", "--right", "R(n=2,h=2+4*x,field=Q)", "--witness"});
    CHECK(w.out ==
          "{\"isomorphic\":true,\"eta\":\"2\",\"mu\":\"2\",\"reason\":\"ok\"}\n"
          "forward: x -> 2*x; y -> 1/16*y; z -> 1/2*z\nbackward: x -> 1/2*x; y -> 16*y; z -> 2*z\n");
    CHECK(run({"iso-check", "--left", "R(n=2,h=1+x,field=F5)", "--right", "R(n=2,h=1+2*x,field=F5)", "--oracle"}).out ==
          "{\"isomorphic\":true,\"eta\":\"1\",\"mu\":\"2\",\"reason\":\"ok\"}\n");
    const Run cv = run({"cancel-verify", "--n1", "2", "--n2", "3", "--field", "F2"});
    CHECK(cv.code == 0);
    CHECK(cv.out.find("s = x*T^2 + y\n") != std::string::npos);
    const Run h = run({"homogenize", "--ring", kR, "--map", kMap, "--weights", "w{x:0,y:2,z:1}", "--target",
                       "R(n=2,field=Q,graded)"});
    CHECK(h.code == 0);
    CHECK(h.out.find("  y -> x^2*U^2 + 2*z*U + y\n") != std::string::npos);
}

TEST_CASE("json envelope") {
    const Run r = run({"--json", "exp-verify", "--ring", kR, "--map", "z->z+x*U"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "exp-verify");
    CHECK(j["inputs"]["map"] == "z->z+x*U");
    CHECK(j["result"]["verified"] == false);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["name"] == "relation");
    CHECK(j["checks"][0]["pass"] == false);

    const auto e = nlohmann::json::parse(run({"--json", "normal-form", "--ring", "R(n=2,h=1+x^2,field=Q)", "--expr", "z"}).out);
    CHECK(e["error"]["code"] == "UnreducedSpec");
    CHECK(e["result"].is_null());

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--json", "exp-build", "--ring", kR, "--coeffs", "1: 1"},
             {"--json", "aut-structure", "--ring", kR},
             {"--json", "cancel-verify", "--n1", "3", "--n2", "5"},
             {"--json", "aut-compose", "--ring", kR, "--word", "T", "--word", "E(1)"},
             {"--json", "homogenize", "--ring", kR, "--map", kMap, "--weights", "w{x:0,y:2,z:1}", "--target",
              "R(n=2,field=Q,graded)"}}) {
        const Run x = run(args);
        CHECK(x.code == 0);
        const auto jj = nlohmann::json::parse(x.out);
        for (const char* key : {"command", "inputs", "result", "checks"}) CHECK(jj.contains(key));
        for (const auto& c : jj["checks"]) CHECK(c["pass"] == true);
    }
}

TEST_CASE("deterministic output") {
    const std::vector<std::string> args{"--json", "--seed", "17", "exp-verify", "--ring", kR, "--map", kMap, "--samples", "20"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"seed\": 17") != std::string::npos);
    CHECK(a.out.find("\"leibniz\"") != std::string::npos);
}
