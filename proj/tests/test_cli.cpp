#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <vector>

#include "glmn/cli.hpp"
#include "glmn/parser.hpp"

using namespace glmn;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<const char*> args) {
    args.insert(args.begin(), "glmn");
    std::ostringstream out, err;
    int code = cli_run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("weights dk-order prints the reference listing") {
    auto r = run({"weights", "dk-order", "--m", "3", "--r", "0", "--count", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "(0,0,0)\n(1,0,-1)\n(2,-1,-1)\n(1,1,-2)\n(2,0,-2)\n(3,-1,-2)\n(4,-2,-2)\n"
                   "(2,1,-3)\n(3,0,-3)\n(4,-1,-3)\n(5,-2,-3)\n(6,-3,-3)\n");
}

TEST_CASE("derive renders the image") {
    auto r = run({"derive", "--m", "1", "--n", "1", "--side", "right", "--pos", "1,2",
                  "--expr", "y[1,1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "x[1,2]\n");
}

TEST_CASE("phistar maps the even subring") {
    auto r = run({"phistar", "--m", "1", "--n", "1", "--expr", "x[2,2]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("x[2,2]") != std::string::npos);
}

TEST_CASE("verify tables reports cell counts and exit status") {
    auto r = run({"verify", "tables", "--m", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("32/32 cells pass") != std::string::npos);
}

TEST_CASE("verify gl11 passes") {
    auto r = run({"verify", "gl11"});
    CHECK(r.code == 0);
    auto r3 = run({"verify", "gl11", "--char", "3"});
    CHECK(r3.code == 0);
}

TEST_CASE("verify closure with a lambda argument") {
    auto r = run({"verify", "closure", "--m", "1", "--n", "1", "--lambda", "[[1],[0]]",
                  "--lmax", "1"});
    CHECK(r.code == 0);
}

TEST_CASE("partitions list with diagrams") {
    auto r = run({"partitions", "list", "--m", "3", "--size", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "(2,2,2)\n(3,2,1)\n(3,3,0)\n(4,2,0)\n(5,1,0)\n(6,0,0)\n");
    auto rd = run({"partitions", "list", "--m", "2", "--size", "2", "--diagrams"});
    CHECK(rd.out.find("[][]") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"derive", "--m", "1", "--n", "1", "--pos", "12", "--expr", "x[1,1]"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"verify", "closure", "--m", "1", "--n", "1"}).code == 2);  // missing lambda
    CHECK(run({"derive", "--m", "1", "--n", "1", "--pos", "1,2", "--expr", "x[1,1]^"}).code ==
          2);
}

TEST_CASE("json output round-trips through the parser") {
    auto r = run({"--format", "json", "basis", "m", "--m", "1", "--n", "1", "--lambda",
                  "[[2],[1]]"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["count"].get<int>() == 1);
    GenericMatrix gm(RingSpec(1, 1));
    for (auto& v : doc["vectors"]) {
        std::string rendered = v["expansion"].get<std::string>();
        SuperElem parsed = parse_expr(rendered, gm);
        CHECK(parsed.str() == rendered);
    }
}

TEST_CASE("basis json carries tableaux as row-lists") {
    auto r = run({"--format", "json", "basis", "c-quotient", "--m", "2", "--n", "1",
                  "--lambda", "[[1,0],[1]]"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["count"].get<int>() == 64);
    auto& first = doc["vectors"][0];
    CHECK(first.contains("mask12"));
    CHECK(first["even"]["plus"]["shape"] == nlohmann::json::array({1}));
    CHECK(first["even"]["plus"]["left"].is_array());
    CHECK(first["even"]["plus"]["left"][0].is_array());  // row-list
}

TEST_CASE("json verify closure follows the report schema") {
    auto r = run({"--format", "json", "verify", "closure", "--m", "1", "--n", "1", "--lambda",
                  "[[2],[1]]", "--lmax", "1"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.contains("lambda"));
    CHECK(doc.contains("lmax"));
    CHECK(doc["checks"].is_array());
    CHECK(!doc["checks"].empty());
    for (auto& c : doc["checks"]) {
        CHECK(c.contains("vector"));
        CHECK(c.contains("derivation"));
        CHECK(c["status"] == "pass");
    }
}

TEST_CASE("super weight order via the cli") {
    auto r = run({"weights", "dk-order", "--m", "2", "--n", "1", "--r", "1", "--rminus", "1",
                  "--count", "3", "--super"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "(1,0|1)");
}
