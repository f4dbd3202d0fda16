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

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "egc/catalog.hpp"
#include "egc/error.hpp"

using egc::Category;
using egc::GeoPoint;

namespace {

const egc::Catalog &shipped() {
  static const egc::Catalog c = egc::Catalog::load(EGC_SOURCE_DATA_DIR "/catalog.tsv");
  return c;
}

egc::Poi poi(std::string id, std::string name, Category cat, double lat, double lon) {
  return {std::move(id), std::move(name), cat, {lat, lon}, ""};
}

}  // namespace

TEST_CASE("haversine distance") {
  const GeoPoint castle{34.4027, 132.4592}, kure{34.2414, 132.5564};
  CHECK(egc::haversine_km(castle, castle) == 0.0);
  CHECK(egc::haversine_km(castle, kure) == egc::haversine_km(kure, castle));
  // One degree of latitude on the 6371 km sphere.
  CHECK(egc::haversine_km({0, 0}, {1, 0}) == doctest::Approx(6371.0 * M_PI / 180.0));
  CHECK(egc::haversine_km({0, 0}, {0, 180}) == doctest::Approx(6371.0 * M_PI));
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> lat(-90, 90), lon(-180, 180);
  for (int i = 0; i < 1000; ++i) {
    GeoPoint a{lat(rng), lon(rng)}, b{lat(rng), lon(rng)};
    CHECK(egc::haversine_km(a, b) == doctest::Approx(egc::haversine_km(b, a)));
    CHECK(egc::haversine_km(a, b) <= 6371.0 * M_PI + 1e-9);
  }
}

TEST_CASE("resolve normalizes names") {
  const auto &c = shipped();
  CHECK(c.resolve("hiroshima castle").poi_id == "S01");
  CHECK(&c.resolve("  HIROSHIMA   Castle ") == &c.resolve("hiroshima castle"));
  CHECK_THROWS_AS(c.resolve("atlantis"), egc::LookupError);
  CHECK(c.find("atlantis") == nullptr);
  CHECK(c.by_id("S01")->name_lexeme == "hiroshima castle");
  CHECK(c.by_id("nope") == nullptr);
}

TEST_CASE("nearby around a POI excludes the POI itself") {
  const auto &c = shipped();
  const auto &castle = c.resolve("hiroshima castle");
  auto one = c.nearby(castle, Category::Spot, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].poi->poi_id != castle.poi_id);
  const auto spots = c.of_category(Category::Spot);
  auto all = c.nearby(castle, Category::Spot, 1000);
  CHECK(all.size() == spots.size() - 1);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto &a, const auto &b) {
    return a.distance_km < b.distance_km;
  }));
  for (const auto &n : all) CHECK(n.distance_km == egc::haversine_km(castle.location, n.poi->location));
}

TEST_CASE("equidistant POIs break ties by id") {
  egc::Catalog c;
  c.add(poi("b2", "east", Category::Food, 0.0, 1.0));
  c.add(poi("a9", "west", Category::Food, 0.0, -1.0));
  c.add(poi("c1", "far", Category::Food, 0.0, 2.0));
  c.add(poi("a1", "spot", Category::Spot, 0.0, 0.5));
  auto near = c.nearby(GeoPoint{0.0, 0.0}, Category::Food, 2);
  REQUIRE(near.size() == 2);
  CHECK(near[0].poi->poi_id == "a9");
  CHECK(near[1].poi->poi_id == "b2");
  CHECK(c.nearby(GeoPoint{0.0, 0.0}, Category::Gift, 3).empty());
}

TEST_CASE("nearby length and order on random catalogs") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> lat(34.0, 35.0), lon(132.0, 133.0);
  for (int trial = 0; trial < 50; ++trial) {
    egc::Catalog c;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      c.add(poi("p" + std::to_string(i), "n" + std::to_string(i),
                static_cast<Category>(rng() % 3), lat(rng), lon(rng)));
    }
    for (Category cat : {Category::Spot, Category::Food, Category::Gift}) {
      const std::size_t size = c.of_category(cat).size();
      for (std::size_t k : {0, 1, 5, 100}) {
        auto res = c.nearby(GeoPoint{lat(rng), lon(rng)}, cat, k);
        CHECK(res.size() == std::min(k, size));
        for (std::size_t i = 1; i < res.size(); ++i) {
          CHECK(res[i - 1].distance_km <= res[i].distance_km);
        }
      }
    }
  }
}

TEST_CASE("catalog validation") {
  egc::Catalog c;
  c.add(poi("x", "name", Category::Spot, 0, 0));
  CHECK_THROWS_AS(c.add(poi("x", "other", Category::Spot, 0, 0)), egc::InvalidArgument);
  CHECK_THROWS_AS(c.add(poi("y", "Name", Category::Spot, 0, 0)), egc::InvalidArgument);
  CHECK_THROWS_AS(c.add(poi("z", "z", Category::Spot, 91, 0)), egc::InvalidArgument);
  CHECK_THROWS_AS(c.add(poi("z", "z", Category::Spot, 0, -180.5)), egc::InvalidArgument);
  CHECK_THROWS_AS(c.add(poi("z", "", Category::Spot, 0, 0)), egc::InvalidArgument);

  auto rejects = [](const std::string &text, std::size_t row) {
    std::istringstream in(text);
    try {
      egc::Catalog::parse(in, "cat");
      FAIL("accepted");
    } catch (const egc::LoadError &e) {
      CHECK(e.row() == row);
    }
  };
  rejects("# h\nS1\tkure\tspot\t34\t132\tx\nS1\tkure2\tspot\t34\t132\tx\n", 3);
  rejects("S1\tkure\tplanet\t34\t132\tx\n", 1);
  rejects("S1\tkure\tspot\t34\n", 1);
  rejects("S1\tkure\tspot\tnorth\t132\tx\n", 1);
  CHECK(egc::parse_category("gift") == Category::Gift);
  CHECK(egc::to_string(Category::Food) == "food");
}
