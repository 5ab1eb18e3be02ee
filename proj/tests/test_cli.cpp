#include "doctest.h"

#include "treealg/cli.hpp"

#include <json.hpp>
#include <sstream>

using namespace treealg;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    const int status = runCli(args, out, err, in);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sequence listing") {
    const auto r = run({"seq", "log-catalan", "--count", "7"});
    CHECK(r.status == 0);
    CHECK(r.out.find("1 1 4 13 46 166 610") != std::string::npos);
}

TEST_CASE("coproduct in text and json") {
    const auto text = run({"coproduct", "(x1 x2)"});
    CHECK(text.status == 0);
    CHECK(text.out.find("x1 (x) x2") != std::string::npos);
    const auto js = run({"--format", "json", "coproduct", "--reduced", "(x1 x2)"});
    REQUIRE(js.status == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["schema"] == 1);
}

TEST_CASE("polynomial from standard input") {
    const auto r = run({"derive", "--var", "2", "-"}, "(x1 ((x1 x2) x2))\n");
    CHECK(r.status == 0);
    CHECK(r.out.find("2*(x1 (x1 x2))") != std::string::npos);
}

TEST_CASE("iso images") {
    const auto r = run({"iso", "psi", "(o (o o))"});
    CHECK(r.status == 0);
    CHECK(r.out.find("(o (o o)) - ((o o) o)") != std::string::npos);
}

TEST_CASE("verification group") {
    const auto r = run({"verify", "jacobi"});
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with status 2") {
    CHECK(run({"coproduct", "(x1 x2"}).status == 2);
    CHECK(run({"no-such-command"}).status == 2);
    CHECK(run({"seq", "fibonacci"}).status == 2);
}

}  // TEST_SUITE
