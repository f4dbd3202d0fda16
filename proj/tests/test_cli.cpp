// Copyright 2026 The EGC Concierge Authors.
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

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "egc/json_io.hpp"

using egc::Json;

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with the shipped data; stderr is discarded.
Run egc_cli(const std::string &args, const std::string &data_dir = EGC_SOURCE_DATA_DIR) {
  const std::string cmd = std::string("'") + EGC_CLI_PATH + "' --data-dir '" + data_dir + "' " +
                          args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Json json_of(const Run &r) {
  REQUIRE(r.status == 0);
  // Exactly one line of JSON.
  REQUIRE(!r.out.empty());
  CHECK(r.out.find('\n') == r.out.size() - 1);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("parse prints the case frames") {
  Json j = json_of(egc_cli("parse 'I am going to get to the Hiroshima castle.'"));
  REQUIRE(j["frames"].size() == 1);
  const Json &f = j["frames"][0];
  CHECK(f["event_type"] == "V(S,OT)");
  CHECK(f["slots"]["ObjectTo"] == "hiroshima castle");
  CHECK(f["slots"]["Subject"] == "speaker");
  CHECK(f["intent"] == "Place");
  CHECK(egc_cli("parse 'Splendid weather.'").status == 2);
}

TEST_CASE("emote reports degree and emotion types") {
  Json j = json_of(egc_cli("emote 'I am going to get to the Hiroshima castle.'"));
  CHECK(std::abs(j["emotion"]["degree"].get<double>() - 0.2887) < 1e-4);
  CHECK(j["emotion"]["sign"] == "pleasure");
  CHECK(j["emotion"]["types"] == Json::array({"joy", "happy-for"}));
  Json lunch = json_of(egc_cli("emote 'I would like to eat a lunch.'"));
  CHECK(std::abs(lunch["emotion"]["degree"].get<double>() - 0.3464) < 1e-4);
}

TEST_CASE("score combines three channels") {
  Json j = json_of(egc_cli("score --g1 0.0958 --g2 0.8020 --egc 0.7071"));
  CHECK(std::abs(j["score"].get<double>() - 1.0735) < 1e-3);
  CHECK(egc_cli("score --g1 0.1").status != 0);
}

TEST_CASE("recommend output is stable across runs") {
  const auto a = egc_cli("recommend 'I would like to eat a lunch.' --user guest");
  const auto b = egc_cli("recommend 'I would like to eat a lunch.' --user guest");
  CHECK(a.out == b.out);
  Json j = json_of(a);
  REQUIRE(j["recommendations"].size() == 5);
  CHECK(j["recommendations"][0]["word"] == "okonomiyaki");
  CHECK(j["recommendations"][4]["word"] == "local sake");

  const auto pretty = egc_cli("recommend 'I am going to get to the Hiroshima castle.' --pretty");
  CHECK(pretty.status == 0);
  CHECK(pretty.out.find("gokuraku temple") < pretty.out.find("battleship yamato"));
}

TEST_CASE("index and tfidf over the shipped corpus") {
  Json idx = json_of(egc_cli(std::string("index '") + EGC_SOURCE_DATA_DIR + "/corpus'"));
  CHECK(idx["document_count"].get<int>() == static_cast<int>(idx["documents"].size()));
  CHECK(idx["max_tfidf"].get<double>() > 0.0);

  const std::string doc = idx["documents"][0]["doc_id"];
  Json t = json_of(egc_cli("tfidf Hiroshima '" + doc + "'"));
  CHECK(t["term"] == "hiroshima");
  const double n = t["count"], total = t["total"], df = t["df"], docs = t["documents"];
  const double expect = n == 0 ? 0.0 : (n / total) * std::log(docs / df);
  CHECK(t["tfidf"].get<double>() == doctest::Approx(expect));
  // The extension may be left off.
  Json bare = json_of(egc_cli("tfidf hiroshima '" + doc.substr(0, doc.size() - 4) + "'"));
  CHECK(bare["tfidf"] == t["tfidf"]);
  CHECK(egc_cli("tfidf hiroshima nosuchdoc").status == 2);
  CHECK(egc_cli("index /nonexistent/dir").status == 2);
}

TEST_CASE("fit recovers curves from a samples file") {
  const auto path = std::filesystem::temp_directory_path() / "egc-cli-fit-samples.tsv";
  {
    std::ofstream out(path);
    out << "# term\tvalue\n";
    for (int i = 0; i < 200; ++i) {
      const double p = (i + 0.5) / 200.0;
      out << "w" << i << '\t' << (std::log(1.0 / p - 1.0) - 9.0) / -15.0 << '\n';
    }
  }
  Json j = json_of(egc_cli("fit --channel g1 '" + path.string() + "'"));
  CHECK(j["channel"] == "g1");
  CHECK(j["samples"] == 200);
  // The file is normalised by its maximum, which rescales the slope.
  const double max = j["normalizer"];
  CHECK(j["a"].get<double>() == doctest::Approx(9.0).epsilon(1e-3));
  CHECK(j["b"].get<double>() == doctest::Approx(-15.0 * max).epsilon(1e-3));
  CHECK(egc_cli("fit --channel g3 '" + path.string() + "'").status != 0);
  std::filesystem::remove(path);

  Json hits = json_of(egc_cli(std::string("fit --channel g1 '") + EGC_SOURCE_DATA_DIR + "/hits.tsv'"));
  CHECK(hits["b"].get<double>() < 0.0);
}

TEST_CASE("usage errors") {
  CHECK(egc_cli("").status != 0);
  CHECK(egc_cli("frobnicate").status != 0);
  CHECK(egc_cli("recommend 'I eat lunch'", "/nonexistent").status == 2);
}
