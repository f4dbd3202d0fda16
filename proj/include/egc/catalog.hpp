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

#ifndef EGC_CATALOG_HPP_
#define EGC_CATALOG_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egc {

enum class Category { Spot, Food, Gift };

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view text);

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

inline constexpr double kEarthRadiusKm = 6371.0;

// Great-circle distance on a sphere of radius kEarthRadiusKm.
double haversine_km(GeoPoint a, GeoPoint b);

struct Poi {
  std::string poi_id;
  std::string name_lexeme;
  Category category = Category::Spot;
  GeoPoint location;
  std::string description;
};

struct Neighbor {
  const Poi *poi;
  double distance_km;
};

// poi_id<TAB>name_lexeme<TAB>category<TAB>lat<TAB>lon<TAB>description
class Catalog {
 public:
  static Catalog load(const std::filesystem::path &path);
  static Catalog parse(std::istream &in, const std::string &source = "<catalog>");

  // Throws InvalidArgument on duplicate id/name or out-of-range coordinates.
  void add(Poi poi);

  // Normalized-lexeme lookup; resolve() throws LookupError when unknown.
  const Poi &resolve(std::string_view lexeme) const;
  const Poi *find(std::string_view lexeme) const;
  const Poi *by_id(std::string_view poi_id) const;

  // k nearest POIs of a category, ascending by distance then poi_id.
  std::vector<Neighbor> nearby(GeoPoint origin, Category category, std::size_t k) const;
  // Same around a POI, which is itself left out.
  std::vector<Neighbor> nearby(const Poi &origin, Category category, std::size_t k) const;

  const std::vector<Poi> &pois() const { return pois_; }
  std::vector<const Poi *> of_category(Category category) const;
  bool empty() const { return pois_.empty(); }

 private:
  std::vector<Neighbor> nearest(GeoPoint origin, Category category, std::size_t k,
                                const Poi *skip) const;

  std::vector<Poi> pois_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

}  // namespace egc

#endif  // EGC_CATALOG_HPP_
