#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "rpart/cli.hpp"

using namespace rpart;
using namespace rpart::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"count", "--avoid", "[0]", "--n", "5"}).code == kOk);
  CHECK(call({}).code == kBadInput);
  CHECK(call({"frobnicate"}).code == kBadInput);
  CHECK(call({"count", "--avoid", "[0"}).code == kBadInput);
  CHECK(call({"count", "--avoid", "[-1]"}).code == kBadInput);
  CHECK(call({"count", "--avoid", "[]"}).code == kBadInput);
  CHECK(call({"count", "--n", "abc"}).code == kBadInput);
  CHECK(call({"count", "--engine", "magic"}).code == kBadInput);
  CHECK(call({"count", "--format", "xml"}).code == kBadInput);
  CHECK(call({"count", "--engine", "brute", "--n", "41"}).code == kBadInput);
  CHECK(call({"scheme", "--format", "svg"}).code == kBadInput);
  CHECK(call({"oeis", "--avoid", "[0]", "--fetch"}).code == kBadInput);
  CHECK(call({"oeis", "--avoid", "[7,7]"}).code == kBadInput);
  CHECK(call({"oeis", "--avoid", "[0]", "--id", "B1"}).code == kBadInput);
  CHECK(call({"--help"}).code == kOk);
}

TEST_CASE("count output formats") {
  const auto lines = call({"count", "--avoid", "[0]", "--n", "6"});
  CHECK(lines.out == "0 1\n1 1\n2 1\n3 2\n4 2\n5 3\n6 4\n");

  const auto csv = call({"count", "--avoid", "[0],[1]", "--n", "9", "--format", "csv"});
  CHECK(csv.out == "1,1,1,1,2,2,3,3,4,5\n");

  const auto json = call({"count", "--avoid", "[1,1,1]", "--n", "10", "--format", "json"});
  REQUIRE(json.code == kOk);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["avoid"] == nlohmann::json::parse("[[1,1,1]]"));
  CHECK(doc["n"] == 10);
  CHECK(doc["engine"] == "positive");
  REQUIRE(doc["counts"].size() == 11);
  CHECK(doc["counts"][10] == "41");

  const auto none = call({"count", "--n", "10", "--format", "csv"});
  CHECK(none.out == "1,1,2,3,5,7,11,15,22,30,42\n");
}

TEST_CASE("engines print identical counts") {
  for (const std::string avoid : {"[0]", "[1,0]", "[2,1],[1,1]", ""}) {
    CAPTURE(avoid);
    const auto pos = call({"count", "--avoid", avoid, "--n", "25", "--engine", "positive"});
    const auto neg = call({"count", "--avoid", avoid, "--n", "25", "--engine", "negative"});
    const auto bru = call({"count", "--avoid", avoid, "--n", "25", "--engine", "brute"});
    CHECK(pos.out == neg.out);
    CHECK(pos.out == bru.out);
  }
}

TEST_CASE("scheme output") {
  const auto text = call({"scheme", "--avoid", "[1,1,1]"});
  REQUIRE(text.code == kOk);
  CHECK(text.out.find("states: 3") != std::string::npos);
  const auto json = call({"scheme", "--avoid", "[1,1,1]", "--format", "json"});
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["states"].size() == 3);
  const auto dot = call({"scheme", "--avoid", "[0]", "--format", "dot"});
  CHECK(dot.out.rfind("digraph scheme {", 0) == 0);
  CHECK(dot.out.find("DEAD") != std::string::npos);
}

TEST_CASE("verify") {
  const auto rr = call({"verify", "--avoid", "[0],[1]", "--n", "30"});
  CHECK(rr.code == kOk);
  CHECK(rr.out.find("ok residue_product(5;1,4)") != std::string::npos);
  CHECK(rr.out.find("PASS") != std::string::npos);

  const auto plain = call({"verify", "--avoid", "[1,0]", "--n", "30"});
  CHECK(plain.code == kOk);
  CHECK(plain.out.find("ok brute agrees with positive on n=0..30") != std::string::npos);
  CHECK(plain.out.find("ok negative agrees with positive on n=0..30") != std::string::npos);

  RunConfig config;
  config.avoid = PatternSet{Pattern{1, 0}};
  config.n = 30;
  std::ostringstream out, err;
  const int code = cmd_verify(config, out, err, [](std::string_view source, std::vector<BigInt>& v) {
    if (source == "negative") v[17] += 1;
  });
  CHECK(code == kMismatch);
  CHECK(out.str().find("MISMATCH negative n=17") != std::string::npos);
  CHECK(out.str().find("ok brute") != std::string::npos);
  CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("oeis") {
  const auto missing = call({"oeis", "--avoid", "[2]"});
  CHECK(missing.code == kOk);
  CHECK(missing.out == "{[2]}: no OEIS id on record\n");

  const auto distinct = call({"oeis", "--avoid", "[0]", "--n", "50"});
  CHECK(distinct.code == kOk);
  CHECK(distinct.out.find("A000009 fixture: 51 terms match (n=0..50)") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"count", "--avoid", "[2,1],[1,1]", "--n", "60", "--format", "json"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> scheme{"scheme", "--avoid", "[3,0,2],[1,2]", "--format", "json"};
  CHECK(call(scheme).out == call(scheme).out);
}
