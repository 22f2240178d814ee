/*
 * Copyright 2026 The multiunit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace multiunit;
using namespace multiunit::cli;
using testing::V;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("multiunit_" + name)).string();
}

}  // namespace

TEST_CASE("run prints one outcome") {
  const auto r = call({"run", "--mech", "vcg", "--alice", "0,3,5", "--bob", "0,2,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"allocation\": [\n    2,\n    0\n  ]") != std::string::npos);
  CHECK(r.out.find("\"pay_alice\": \"4\"") != std::string::npos);
  const auto t = call({"run", "--mech", "triage", "--w", "1", "--theta-a", "4/5", "--theta-b", "4/5", "--alice",
                       "0,9/10,1", "--bob", "0,7/10,3/4", "--out", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out == "alice,bob,alloc_a,alloc_b,pay_a,pay_b,welfare,opt,ratio\n"
                 "\"0,9/10,1\",\"0,7/10,3/4\",1,1,7/40,9/40,8/5,8/5,1\n");
}

TEST_CASE("usage and parameter errors exit with 2") {
  const auto bad = call({"run", "--mech", "triage", "--theta-a", "1/5", "--theta-b", "1/5", "--alice", "0,1,2",
                         "--bob", "0,1,2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ConstraintViolated") != std::string::npos);
  CHECK(call({}).code == 2);
  CHECK(call({"run", "--mech", "nope", "--alice", "0,1,2", "--bob", "0,1,2"}).code == 2);
  CHECK(call({"run", "--alice", "0,x,2", "--bob", "0,1,2"}).code == 2);
  CHECK(call({"run", "--alice", "0,2,1", "--bob", "0,1,2"}).code == 2);
  CHECK(call({"run", "--alice", "0,1,2"}).code == 2);
  CHECK(call({"sweep", "--out", "xml"}).code == 2);
  CHECK(call({"verify", "--props", "cheap"}).code == 2);
  CHECK(call({"verify", "--mech", "fractions", "--alphas", "1/2", "--m", "3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verify exit status follows the properties") {
  const auto ok = call({"verify", "--mech", "triage", "--theta-a", "4/5", "--theta-b", "4/5", "--props",
                        "truthful,feasible,scalable,ir", "--m", "2", "--denom", "4", "--max", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"passed\": false") == std::string::npos);
  const auto fp = call({"verify", "--mech", "strawman-firstprice", "--props", "truthful", "--m", "2", "--denom", "2",
                        "--max", "2", "--out", "csv"});
  CHECK(fp.code == 1);
  CHECK(fp.out.find("truthful,false") != std::string::npos);
  CHECK(call({"verify", "--mech", "fractions", "--alphas", "1/2", "--props", "feasible", "--m", "2"}).code == 0);
}

TEST_CASE("sweep csv columns and witness") {
  const auto csv = call({"sweep", "--mech", "triage", "--theta-a", "4/5", "--theta-b", "4/5", "--m", "2", "--denom",
                         "2", "--max", "1", "--out", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("alice,bob,alloc_a,alloc_b,pay_a,pay_b,welfare,opt,ratio\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 1 + 36);
  const auto json = call({"sweep", "--mech", "triage", "--theta-a", "4/5", "--theta-b", "4/5", "--m", "2",
                          "--denom", "8", "--max", "2"});
  CHECK(json.out.find("\"worst_ratio\": \"16/13\"") != std::string::npos);
  CHECK(json.out.find("\"witness\"") != std::string::npos);
}

TEST_CASE("probe, fit and affine subcommands") {
  const auto probe = call({"probe", "--mech", "triage", "--w", "2", "--theta-a", "3/5", "--theta-b", "4/5",
                           "--denom", "40"});
  CHECK(probe.code == 0);
  CHECK(probe.out.find("\"summary\": \"14/14\"") != std::string::npos);
  CHECK(call({"probe", "--mech", "shifted", "--alpha", "1/2"}).code == 1);

  const auto fit = call({"fit", "--mech", "triage", "--theta-a", "4/5", "--theta-b", "4/5", "--m", "4", "--out",
                         "csv"});
  CHECK(fit.code == 0);
  CHECK(fit.out.find("\"(2,4,2,4)\",1,1,1,") != std::string::npos);
  CHECK(fit.out.find("\"(1,4,1,4)\",1,4/5,4/5,") != std::string::npos);
  CHECK(call({"fit", "--mech", "shifted", "--alpha", "1/2", "--m", "2"}).code == 1);

  const auto affine = call({"affine", "--mech", "triage", "--theta-a", "3/5", "--theta-b", "3/5", "--denom", "6"});
  CHECK(affine.code == 0);
  CHECK(affine.out.find("\"verdict\": \"NotAffine\"") != std::string::npos);
  CHECK(affine.out.find("\"replayed\": true") != std::string::npos);
  const auto vcg = call({"affine", "--mech", "vcg", "--denom", "4", "--out", "csv"});
  CHECK(vcg.out.find("Rationalizable") != std::string::npos);
  CHECK(call({"affine", "--mech", "vcg", "--m", "3", "--denom", "1"}).code == 2);
}

TEST_CASE("instance files round-trip byte for byte") {
  InstanceFile file{3, {V("0,1/2,1,3"), V("0,0,0,0"), V("0,2,2,7/3")}};
  const auto text = format_instance_file(file);
  CHECK(text == "{\n  \"m\": 3,\n  \"valuations\": [\n    [\"0\", \"1/2\", \"1\", \"3\"],\n"
                "    [\"0\", \"0\", \"0\", \"0\"],\n    [\"0\", \"2\", \"2\", \"7/3\"]\n  ]\n}\n");
  CHECK(format_instance_file(parse_instance_file(text)) == text);
  const InstanceFile empty{2, {}};
  CHECK(format_instance_file(parse_instance_file(format_instance_file(empty))) == format_instance_file(empty));
  CHECK_ERRC(parse_instance_file("{"), Errc::Parse);
  CHECK_ERRC(parse_instance_file("{\"m\": 2, \"valuations\": [[0, 1, 2]]}"), Errc::Parse);
  CHECK_ERRC(parse_instance_file("{\"m\": 3, \"valuations\": [[\"0\", \"1\", \"2\"]]}"), Errc::LengthMismatch);
  CHECK_ERRC(parse_instance_file("{\"m\": 2, \"valuations\": [[\"1\", \"1\", \"2\"]]}"), Errc::NotNormalized);
  CHECK(parse_valuation("0,3/2,5") == V("0,3/2,5"));
}

TEST_CASE("emitted instances feed back into the cli") {
  const auto path = temp_path("instances.json");
  const auto first = call({"verify", "--mech", "vcg", "--m", "3", "--denom", "1", "--max", "1", "--random", "5",
                           "--seed", "9", "--emit-instances", path});
  REQUIRE(first.code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto file = parse_instance_file(buf.str());
  CHECK(file.m == 3);
  CHECK(format_instance_file(file) == buf.str());
  const auto second = call({"verify", "--mech", "vcg", "--instances", path});
  CHECK(second.code == 0);
  const auto run = call({"run", "--mech", "vcg", "--instances", path, "--out", "csv"});
  CHECK(run.code == 0);
  std::remove(path.c_str());
  CHECK(call({"verify", "--instances", temp_path("missing.json")}).code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands{
      {"run", "--mech", "triage", "--theta-a", "4/5", "--theta-b", "4/5", "--alice", "0,9/10,1", "--bob", "0,7/10,3/4"},
      {"verify", "--mech", "shifted", "--alpha", "1/2", "--m", "3", "--denom", "2", "--max", "1", "--random", "10",
       "--seed", "3"},
      {"sweep", "--mech", "fractions", "--alphas", "1/2", "--denom", "3", "--out", "csv"},
      {"probe", "--mech", "triage", "--theta-a", "4/5", "--theta-b", "4/5"},
      {"fit", "--mech", "triage", "--m", "4"},
      {"affine", "--mech", "triage", "--theta-a", "3/5", "--theta-b", "3/5", "--denom", "4"},
  };
  for (const auto& c : commands) {
    const auto a = call(c);
    const auto b = call(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
