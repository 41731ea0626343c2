// Copyright 2026 The motivekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "motivekit/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = motivekit::cli::run(args, out, err);
  std::string o = out.str();
  if (!o.empty() && o.back() == '\n') o.pop_back();
  return {code, o, err.str()};
}

const std::string kZ6 = R"j({"model":"formal","factors":[6]})j";
const std::string kZ2 = R"j({"model":"formal","factors":[2]})j";

}  // namespace

TEST_CASE("documented examples") {
  const auto iso = run({"motive", "iso", "--model", kZ6, "--left", "[0,1]", "--right", "[3,4]"});
  CHECK(iso.code == 0);
  CHECK(iso.out.rfind(R"j({"isomorphic":true,)j", 0) == 0);
  CHECK(run({"k0", "rank", "--per", "6"}).out == "4");
  CHECK(run({"sieve", "check", "--n", "4", "--m", "2"}).out == "true");
}

TEST_CASE("exit codes") {
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"brauer", "frobnicate"}).code == 2);
  CHECK(run({"motive", "iso", "--model", "{oops", "--left", "[0]", "--right", "[0]"}).code == 2);
  CHECK(run({"brauer", "period", "--class", "3"}).code == 2);  // bare integer without a model
  CHECK(run({"brauer", "ppart", "--model", kZ6, "--class", "1", "--p", "4"}).code == 3);
  CHECK(run({"brauer", "add", "--model", kZ6, "--a", "1", "--b", R"j({"model":"formal","factors":[4],"exponents":[1]})j"}).code == 3);
  CHECK(run({"sieve", "check", "--n", "30", "--m", "2"}).code == 4);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("environment caps") {
  setenv("MOTIVEKIT_CAP_SUBSET_BITS", "3", 1);
  CHECK(run({"sieve", "check", "--n", "4", "--m", "2"}).code == 4);
  unsetenv("MOTIVEKIT_CAP_SUBSET_BITS");
  CHECK(run({"sieve", "check", "--n", "4", "--m", "2"}).code == 0);
}

TEST_CASE("json output is canonical and deterministic") {
  const std::vector<std::string> args{"--format", "json", "brauer", "add", "--a",
                                      R"j({"exponents":[1],"factors":[6],"model":"formal"})j", "--b", "4"};
  const auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.out == R"j({"model":"formal","factors":[6],"exponents":[5]})j");
  const auto h = run({"--format", "json", "brauer", "add", "--a",
                      R"j({"model":"hasse","reciprocity":true,"invariants":{"v2":"1/2","v1":"1/2"}})j", "--b",
                      R"j({"model":"hasse","reciprocity":true,"invariants":{"v1":"1/4","v2":"3/4"}})j"});
  CHECK(h.code == 0);
  CHECK(h.out == R"j({"model":"hasse","reciprocity":true,"invariants":{"v1":"3/4","v2":"1/4"}})j");
  // multiset input order does not matter
  CHECK(run({"--format", "json", "motive", "sum", "--model", kZ6, "--left", "[4,1]", "--right", "[2]"}).out ==
        run({"--format", "json", "motive", "sum", "--model", kZ6, "--left", "[1,2]", "--right", "[4]"}).out);
}

TEST_CASE("every subcommand is reachable") {
  const std::string s3 = "S3";
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"brauer", "add", "--model", kZ6, "--a", "1", "--b", "2"}, "3"},
      {{"brauer", "period", "--model", kZ6, "--class", "2"}, "3"},
      {{"brauer", "index", "--class", R"j({"model":"hasse","invariants":{"v1":"1/2","v2":"1/2"}})j"}, "2"},
      {{"brauer", "ppart", "--model", kZ6, "--class", "1", "--p", "3"}, "4"},
      {{"brauer", "subgroup", "--model", kZ6, "--classes", "[2]"}, "[0, 2, 4]"},
      {{"brauer", "cyclic-equal", "--model", kZ6, "--a", "1", "--b", "5"}, R"j({"equal":true,"multiplier":5})j"},
      {{"brauer", "elements", "--model", kZ2}, "[0, 1]"},
      {{"motive", "plocal", "--model", kZ6, "--left", "[1]", "--right", "[3]", "--p", "2"}, "true"},
      {{"motive", "brute", "--model", kZ6, "--left", "[1]", "--right", "[5]"},
       R"j({"found":false,"provedAbsent":true,"nodes":0,"forward":null,"backward":null})j"},
      {{"motive", "summands", "--model", kZ6, "--motive", "[1,2]"}, "[1, 2, 4, 5]"},
      {{"motive", "lambda", "--model", kZ2, "--classes", "[0,1]"}, R"j({"classes":[{"model":"formal","factors":[2],"exponents":[0]},{"model":"formal","factors":[2],"exponents":[1]}],"mu":[[1,2],[2,1]],"valid":true})j"},
      {{"motive", "tensor", "--model", kZ6, "--left", "[0,1]", "--right", "[0,1]"}, "[0, 1, 1, 2]"},
      {{"motive", "sum", "--model", kZ6, "--left", "[5]", "--right", "[0]"}, "[0, 5]"},
      {{"motive", "hom", "--model", kZ6, "--a", "1", "--b", "5"}, "3"},
      {{"motive", "compose", "--model", kZ2, "--left", "[1]", "--mid", "[1]", "--right", "[1]", "--f", "[[2]]", "--g", "[[2]]"},
       R"j({"entries":[[4]]})j"},
      {{"motive", "from-poly", "--model", kZ6, "--class", "1", "--poly", R"j({"coeffs":[1,2,2,1]})j"}, "[0, 1, 1, 2, 2, 3]"},
      {{"motive", "period-poly", "--per", "6"}, "1 + 2*t + 2*t^2 + t^3"},
      {{"motive", "relation1", "--model", kZ6, "--class", "1"}, "true"},
      {{"motive", "relation2", "--model", kZ6, "--a", "3", "--b", "2", "--c", "1"}, "true"},
      {{"motive", "sigma", "--model", kZ6, "--generators", "[1]"}, "SKIP"},
      {{"k0", "class", "--per", "6", "--exponents", "[3,4]"}, "1 + t"},
      {{"k0", "generator", "--per", "2"}, "1 - t^2"},
      {{"k0", "reduce", "--per", "2", "--poly", "[0,0,0,1]"}, "t"},
      {{"k0", "kernel-check", "--per", "12"}, "true"},
      {{"flag", "decompose", "--model", kZ6, "--class", "1", "--n", "3", "--dims", "1,2"}, "[0, 1, 2]"},
      {{"flag", "grassmannian", "--model", kZ2, "--class", "1", "--n", "4", "--d", "2"}, "[0, 0, 0, 0, 1, 1]"},
      {{"flag", "sb", "--model", kZ6, "--class", "2", "--deg", "3"}, "[0, 2, 4]"},
      {{"flag", "equiv", "--model", R"j({"model":"formal","factors":[5]})j", "--a", "1", "--b", "2", "--n", "5", "--dims", "1,4"},
       R"j({"motivesIsomorphic":true,"sameSubgroup":true})j"},
      {{"sieve", "binomial", "--n", "4", "--m", "2"}, "1 + t + 2*t^2 + t^3 + t^4"},
      {{"sieve", "multinomial", "--n", "3", "--dims", "1,1,1"}, "1 + 2*t + 2*t^2 + t^3"},
      {{"sieve", "congruence", "--n", "4", "--m", "2", "--i", "3", "--l", "4"}, "true"},
      {{"sieve", "cyclotomic", "--d", "6"}, "1 - t + t^2"},
      {{"sieve", "eval", "--poly", "[1,1,2,1,1]", "--d", "2"}, "2"},
      {{"gset", "verify", "--group", R"j({"generators":["(1 2)","(1 2 3)"],"degree":3})j"}, "true"},
      {{"gset", "subgroups", "--group", "C2"}, R"j([{"order":1,"elements":["()"]},{"order":2,"elements":["()","(1 2)"]}])j"},
      {{"gset", "orbits", "--group", s3, "--H", R"j({"generators":["(1 2)"]})j", "--K", R"j(["(1 2)"])j"}, "SKIP"},
      {{"gset", "doublecosets", "--group", s3, "--H", R"j(["(1 2)"])j", "--K", R"j(["(1 2)"])j"},
       R"j({"count":2,"representatives":["()","(2 3)"],"sizes":[2,4]})j"},
      {{"gset", "convolve", "--group", s3, "--H", R"j(["(1 2)"])j", "--K", R"j(["(1 2)"])j", "--L", R"j(["(1 2)"])j", "--alpha",
        "[0,1]", "--beta", "[0,1]"},
       R"j({"values":[2,1],"covAgrees":true,"permAgrees":true})j"},
      {{"gset", "hecke", "--group", s3, "--H", R"j(["(1 2 3)"])j"},
       R"j({"representatives":["()","(2 3)"],"constants":[[[1,0],[0,1]],[[0,1],[1,0]]]})j"},
      {{"gset", "hecke-prime", "--group", s3, "--H", R"j(["(1 2 3)"])j", "--K", R"j(["(1 2 3)"])j", "--a", R"j({"(1 2 3)":"1/3"})j",
        "--b", R"j({"(1 2 3)":"1/3"})j", "--alpha", "[1,1]"},
       R"j({"representatives":["()","(2 3)"],"table":[1,3],"admissible":false})j"},
      {{"gset", "retraction", "--group", s3, "--samples", "2"}, R"j({"ok":true,"objects":6,"morphisms":72})j"},
  };
  for (const auto& [args, expected] : cases) {
    CAPTURE(args[0] + " " + args[1]);
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.err == "");
    if (expected != "SKIP") CHECK(r.out == expected);
  }
}
