#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "derange/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = derange::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Example {
  const char* type;
  const char* n;
  const char* pair;
  const char* cls;
  const char* image;
  const char* preimage = nullptr;  // set when another pair shares the image
};

const Example kExamples[] = {
    {"A", "5", "(5,4,1,3,2);(5,3)(4,1,2)", "T1", "((4,1,3,2);(6,4,1,2)(5,3))"},
    {"A", "5", "(5,2)(4,1,3);(5,3)(4,1,2)", "T2", "((4,3,1,2);(6,3,5)(4,1,2))"},
    {"A", "5", "(5,4)(3,1,2);(5,4,1,3,2)", "T3", "((4,2,3,1);(6,2)(5,1,4,3))"},
    {"A", "5", "(5,4)(3,1,2);(5,2)(4,1,3)", "T4", "((4,3)(2,1);(6,2)(5,1,3,4))"},
    {"B", "6", "[-1,-6,-3,5,-4,-2];[-1,-2,6,-5,3,-4]", "B22/P1", "([-1,5,-3,2,-4];[-1,-2,6,-5,3,-7,4])"},
    {"B", "6", "[-1,-6,-3,5,-4,-2];[-1,-3,6,-5,-4,2]", "B22/P2", "([-1,3,-2,5,-4];[-1,-3,6,-5,-4,-7,-2])",
     "[-1,-2,-6,5,-4,-3];[-1,-3,6,-5,-4,2]"},
    {"B", "6", "[-1,-6,-3,5,-4,-2];[-1,-2,4,-5,3,-6]", "B22/P3", "([-1,-3,2,5,-4];[-1,-2,4,-5,3,-7,6])"},
    {"B", "6", "[-1,-6,-3,5,-4,2];[-1,-3,6,-5,-4,2]", "B21/ANY", "([-1,-2,-3,5,-4];[-1,-7,6,-5,-4,2,3])"},
    {"B", "6", "[2,3,1,-5,4,-6];[-1,-3,-2,5,-6,4]", "B1/P1'", "([-2,3,1,-5,4];[-1,3,-2,5,-6,4,-7])"},
    {"B", "6", "[2,3,1,-5,4,-6];[-1,-2,-3,-4,-5,-6]", "B1/P2'", "([-2,3,1,-5,4];[-1,-2,-3,-5,4,7,6])"},
    {"B", "6", "[-1,-2,-3,-4,-5,-6];[2,3,1,-5,-6,4]", "B1/P3'", "([-1,-2,5,-4,-3];[2,3,1,-5,-6,-7,-4])"},
};

}  // namespace

TEST_CASE("map prints class and image") {
  for (const auto& e : kExamples) {
    CAPTURE(e.pair);
    const auto r = run({"map", "--type", e.type, "--n", e.n, "--pair", e.pair});
    CHECK(r.code == 0);
    CHECK(r.out == std::string(e.cls) + "\n" + e.image + "\n");
    const auto c = run({"classify", "--type", e.type, "--n", e.n, "--pair", e.pair});
    CHECK(c.out == std::string(e.cls) + "\n");
  }
}

TEST_CASE("invert recovers the input") {
  for (const auto& e : kExamples) {
    CAPTURE(e.pair);
    std::string img = e.image;
    img = img.substr(1, img.size() - 2);
    const auto r = run({"invert", "--type", e.type, "--n", e.n, "--pair", img});
    CHECK(r.code == 0);
    const std::string expected = e.preimage ? e.preimage : e.pair;
    CHECK(r.out == "(" + expected + ")\n");
    const auto back = run({"map", "--type", e.type, "--n", e.n, "--pair", expected});
    CHECK(back.out.substr(back.out.find('\n') + 1) == std::string(e.image) + "\n");
  }
}

TEST_CASE("invert reports pairs outside the image") {
  const auto r = run({"invert", "--type", "A", "--n", "3", "--pair", "(2,1);(4,3)(2,1)"});
  CHECK(r.code == derange::cli::kFailed);
  CHECK(r.out == "NOT-IN-IMAGE\n");
}

TEST_CASE("parse errors report a position and exit 2") {
  auto r = run({"map", "--type", "B", "--n", "3", "--pair", "[1,x];[2,1]"});
  CHECK(r.code == derange::cli::kUsage);
  CHECK(r.err.find("position 3") != std::string::npos);
  CHECK(r.err.find("(at position") == std::string::npos);

  r = run({"map", "--type", "A", "--n", "3", "--pair", "(3,1,2);(3,1"});
  CHECK(r.code == derange::cli::kUsage);
  CHECK(r.err.find("position 12") != std::string::npos);

  CHECK(run({"map", "--type", "A", "--n", "5", "--pair", "(5,4,1,3,2)"}).code == derange::cli::kUsage);
  CHECK(run({"map", "--type", "C", "--n", "5", "--pair", "();()"}).code == derange::cli::kUsage);
  CHECK(run({"frobnicate"}).code == derange::cli::kUsage);
  CHECK(run({"map", "--type", "B", "--n", "3", "--pair", "[-2,-1];[2,1]"}).code == derange::cli::kUsage);
}

TEST_CASE("seq formats") {
  CHECK(run({"seq", "--family", "h", "--to", "5"}).out == "1:0 2:1 3:2 4:9 5:44\n");
  CHECK(run({"seq", "--family", "hB,hD", "--to", "3", "--format", "csv"}).out ==
        "family,n,value\nhB,1,1\nhB,2,5\nhB,3,29\nhD,1,0\nhD,2,3\nhD,3,14\n");
  const auto j = nlohmann::json::parse(run({"seq", "--family", "hB", "--to", "4", "--format", "json"}).out);
  CHECK(j[0]["values"] == nlohmann::json({"1", "5", "29", "233"}));
  CHECK(run({"seq", "--family", "hQ", "--to", "3"}).code == derange::cli::kUsage);
  CHECK(run({"seq", "--family", "hB", "--to", "9"}).code == derange::cli::kUsage);
}

TEST_CASE("verify and explore-d") {
  const auto s = run({"verify", "--suite", "sequences"});
  CHECK(s.code == 0);
  CHECK(s.out.find("sequences: PASSED") != std::string::npos);
  const auto n = run({"verify", "--suite", "naive"});
  CHECK(n.code == 0);
  CHECK(run({"verify", "--suite", "a", "--max-n", "A:4"}).code == 0);
  CHECK(run({"verify", "--suite", "a", "--max-n", "A:9"}).code == derange::cli::kUsage);
  CHECK(run({"verify", "--suite", "a", "--max-n", "Q:4"}).code == derange::cli::kUsage);

  const auto e = run({"explore-d", "--to", "5"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("EXPLORATORY", 0) == 0);
  CHECK(e.out.find("4,57,60\n") != std::string::npos);
  CHECK(run({"explore-d", "--to", "8"}).code == derange::cli::kUsage);
}
