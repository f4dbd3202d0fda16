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

#include "egc/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "egc/error.hpp"
#include "egc/text.hpp"

namespace egc {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Spot: return "spot";
    case Category::Food: return "food";
    case Category::Gift: return "gift";
  }
  return "spot";
}

std::optional<Category> parse_category(std::string_view text) {
  if (text == "spot") return Category::Spot;
  if (text == "food") return Category::Food;
  if (text == "gift") return Category::Gift;
  return std::nullopt;
}

double haversine_km(GeoPoint a, GeoPoint b) {
  constexpr double kRad = std::numbers::pi / 180.0;
  const double p1 = a.lat * kRad, p2 = b.lat * kRad;
  const double dp = p2 - p1, dl = (b.lon - a.lon) * kRad;
  const double s1 = std::sin(dp / 2), s2 = std::sin(dl / 2);
  double h = s1 * s1 + std::cos(p1) * std::cos(p2) * s2 * s2;
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

Catalog Catalog::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), 0, "cannot open catalog");
  return parse(in, path.string());
}

Catalog Catalog::parse(std::istream &in, const std::string &source) {
  Catalog c;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank_or_comment(line)) continue;
    auto f = split_tabs(line);
    if (f.size() != 6) throw LoadError(source, row, "expected 6 fields");
    Poi p;
    p.poi_id = f[0];
    p.name_lexeme = normalize_lexeme(f[1]);
    auto cat = parse_category(f[2]);
    if (!cat) throw LoadError(source, row, "unknown category '" + f[2] + "'");
    p.category = *cat;
    if (!parse_double(f[3], p.location.lat) || !parse_double(f[4], p.location.lon)) {
      throw LoadError(source, row, "bad coordinate");
    }
    p.description = f[5];
    try {
      c.add(std::move(p));
    } catch (const InvalidArgument &e) {
      throw LoadError(source, row, e.what());
    }
  }
  return c;
}

void Catalog::add(Poi poi) {
  poi.name_lexeme = normalize_lexeme(poi.name_lexeme);
  if (poi.poi_id.empty() || poi.name_lexeme.empty()) throw InvalidArgument("empty id or name");
  if (!(poi.location.lat >= -90 && poi.location.lat <= 90) ||
      !(poi.location.lon >= -180 && poi.location.lon <= 180)) {
    throw InvalidArgument("coordinates out of range for '" + poi.poi_id + "'");
  }
  if (by_id_.count(poi.poi_id)) throw InvalidArgument("duplicate poi_id '" + poi.poi_id + "'");
  if (by_name_.count(poi.name_lexeme)) {
    throw InvalidArgument("duplicate name '" + poi.name_lexeme + "'");
  }
  by_id_.emplace(poi.poi_id, pois_.size());
  by_name_.emplace(poi.name_lexeme, pois_.size());
  pois_.push_back(std::move(poi));
}

const Poi *Catalog::find(std::string_view lexeme) const {
  auto it = by_name_.find(normalize_lexeme(lexeme));
  return it == by_name_.end() ? nullptr : &pois_[it->second];
}

const Poi &Catalog::resolve(std::string_view lexeme) const {
  const Poi *p = find(lexeme);
  if (!p) throw LookupError("unknown place '" + normalize_lexeme(lexeme) + "'");
  return *p;
}

const Poi *Catalog::by_id(std::string_view poi_id) const {
  auto it = by_id_.find(poi_id);
  return it == by_id_.end() ? nullptr : &pois_[it->second];
}

std::vector<const Poi *> Catalog::of_category(Category category) const {
  std::vector<const Poi *> out;
  for (const Poi &p : pois_) {
    if (p.category == category) out.push_back(&p);
  }
  return out;
}

std::vector<Neighbor> Catalog::nearest(GeoPoint origin, Category category, std::size_t k,
                                       const Poi *skip) const {
  std::vector<Neighbor> all;
  for (const Poi &p : pois_) {
    if (p.category != category || (skip && p.poi_id == skip->poi_id)) continue;
    all.push_back({&p, haversine_km(origin, p.location)});
  }
  auto closer = [](const Neighbor &a, const Neighbor &b) {
    if (a.distance_km != b.distance_km) return a.distance_km < b.distance_km;
    return a.poi->poi_id < b.poi->poi_id;
  };
  const std::size_t n = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n), all.end(), closer);
  all.resize(n);
  return all;
}

std::vector<Neighbor> Catalog::nearby(GeoPoint origin, Category category, std::size_t k) const {
  return nearest(origin, category, k, nullptr);
}

std::vector<Neighbor> Catalog::nearby(const Poi &origin, Category category,
                                      std::size_t k) const {
  return nearest(origin.location, category, k, &origin);
}

}  // namespace egc
