#include <sstream>  // for istringstream, ostringstream
#include <string>   // for string
#include <vector>   // for vector

#include "doctest.h"

#include "../tools/cli.hpp"
#include "bzf/io.hpp"

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> const& args, std::string const& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int const          code = bzf::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
  }

}  // namespace

TEST_CASE("mul") {
  CHECK(run({"mul", "2,5,0", "3,1,1"}).out == "2,3,0\n");
  CHECK(run({"mul", "0,0,0", "0,0,0"}).out == "0,0,0\n");
  CHECK(run({"mul", "0,0,0", "0,0,1"}).out == "0,0,1\n");
  CHECK(run({"mul", "--", "-1,-2,1", "3,-4,0"}).out == "4,-4,0\n");
  CHECK(run({"mul", "2,5", "3,1,1"}).code == bzf::cli::bad_input);
  CHECK(run({"mul", "9223372036854775807,0,0", "1,0,0"}).code == bzf::cli::bad_input);
  CHECK(run({"mul", "0,0,2", "0,0,0"}).code == bzf::cli::bad_input);
}

TEST_CASE("apply") {
  CHECK(run({"apply", "alpha:2,1@0", "--", "-1,3,1"}).out == "-1,7,1\n");
  CHECK(run({"apply", "alpha:1,0@0", "4,-9,1"}).out == "4,-9,1\n");
  CHECK(run({"apply", "beta:2,1@-2", "0,0,1"}).out == "0,0,0\n");
  CHECK(run({"apply", "beta:2,0@0", "0,0,1"}).code == bzf::cli::bad_input);
  CHECK(run({"apply", "alpha:2,2", "0,0,1"}).code == bzf::cli::bad_input);
}

TEST_CASE("compose and decompose") {
  CHECK(run({"compose", "alpha:2,1@0", "alpha:3,2@0"}).out == "alpha:6,5@0\n");
  CHECK(run({"compose", "alpha:1,0@1", "alpha:1,0@1"}).out == "alpha:1,0@2\n");
  CHECK(run({"compose", "alpha:1,0", "alpha:1,0", "--window", "1"}).code == bzf::cli::bad_input);
  CHECK(run({"decompose", "alpha:3,1@-3"}).out == "alpha:3,1@0\nalpha:1,0@-3\n");
}

TEST_CASE("classify and verify") {
  auto const table = run({"table", "alpha:2,1@3", "--window", "6"});
  REQUIRE(table.code == 0);
  auto const classified = run({"classify"}, table.out);
  CHECK(classified.code == bzf::cli::ok);
  CHECK(classified.out.rfind("alpha:2,1@3\n", 0) == 0);

  auto const identity = run({"classify", "-"}, run({"table", "alpha:1,0", "--window", "2"}).out);
  CHECK(identity.out.rfind("alpha:1,0@0\n", 0) == 0);

  auto const verified = run({"verify", "--check", "all"}, table.out);
  CHECK(verified.code == bzf::cli::ok);
  CHECK(bzf::parse_json(verified.out)["verdict"] == "pass");

  SUBCASE("pseudo-alpha table") {
    // Entries of alpha(2, 1) with the [1) part shifted by one more: the
    // formula with p = k = 2.
    auto json = bzf::parse_json(run({"table", "alpha:2,1", "--window", "4"}).out);
    for (auto& e : json["entries"]) {
      if (e["x"][2] == 1) {
        e["y"][0] = e["y"][0].get<long long>() + 1;
        e["y"][1] = e["y"][1].get<long long>() + 1;
      }
    }
    auto const bad = run({"verify", "--check", "hom"}, json.dump());
    CHECK(bad.code == bzf::cli::violated);
    auto const report = bzf::parse_json(bad.out);
    CHECK(report["verdict"] == "fail");
    CHECK(report["kind"] == "homomorphism");
    CHECK(report.contains("lhs"));
    CHECK(report.contains("rhs"));
    CHECK(run({"classify"}, json.dump()).code == bzf::cli::violated);
  }

  CHECK(run({"classify"}, "{not json").code == bzf::cli::bad_input);
  CHECK(run({"classify", "/nonexistent/table.json"}).code == bzf::cli::bad_input);
  CHECK(run({"verify", "--check", "both"}, table.out).code == bzf::cli::bad_input);
}

TEST_CASE("suite and corner") {
  CHECK(run({"suite", "--window", "2", "--kmax", "2", "--trials", "1", "--seed", "0"}).code
        == bzf::cli::ok);
  CHECK(run({"suite", "--window", "1"}).code == bzf::cli::bad_input);
  CHECK(run({"suite", "--window", "x"}).code == bzf::cli::bad_input);

  auto const corner = run({"corner", "alpha:2,1", "--corner", "1", "--window", "4"});
  CHECK(corner.code == bzf::cli::ok);
  CHECK(bzf::parse_json(corner.out)["checks"] == 72);
  CHECK(run({"corner", "alpha:2,1@1"}).code == bzf::cli::bad_input);
}

TEST_CASE("usage") {
  CHECK(run({}).code == bzf::cli::bad_input);
  CHECK(run({"frobnicate"}).code == bzf::cli::bad_input);
  CHECK(run({"--help"}).code == bzf::cli::ok);
}

TEST_CASE("printed values re-parse") {
  auto const e = run({"compose", "beta:3,2@-1", "alpha:2,1@4"});
  REQUIRE(e.code == 0);
  auto const text = e.out.substr(0, e.out.size() - 1);
  CHECK(bzf::to_string(bzf::parse_endo(text)) == text);

  auto const x = run({"apply", text, "--", "-2,1,1"});
  REQUIRE(x.code == 0);
  auto const xt = x.out.substr(0, x.out.size() - 1);
  CHECK(bzf::to_string(bzf::parse_element(xt)) == xt);
}
