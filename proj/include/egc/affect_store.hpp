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

#ifndef EGC_AFFECT_STORE_HPP_
#define EGC_AFFECT_STORE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace egc {

struct FvRecord {
  std::string lexeme;
  std::optional<double> initial_fv;
  std::map<std::string, double> personal;  // user_id -> fv

  friend bool operator==(const FvRecord &, const FvRecord &) = default;
};

bool fv_in_range(double value);

// Favorite values keyed by normalized lexeme.
//
//   lexeme<TAB>initial_fv
//   PERSONAL<TAB>user_id<TAB>lexeme<TAB>fv
class FvTable {
 public:
  static FvTable load(const std::filesystem::path &path);
  static FvTable parse(std::istream &in, const std::string &source = "<fv>");
  void write(std::ostream &out) const;
  void save(const std::filesystem::path &path) const;

  // Both throw InvalidArgument for values outside [-1, 1] or empty keys.
  void set_initial(std::string_view lexeme, double value);
  void set_personal(std::string_view user, std::string_view lexeme, double value);

  // personal[user] if present, else initial, else nullopt.
  std::optional<double> find(std::string_view lexeme, std::string_view user = {}) const;
  // find(), defaulting unknown lexemes to 0.0.
  double lookup(std::string_view lexeme, std::string_view user = {}) const;

  const std::map<std::string, FvRecord, std::less<>> &records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  friend bool operator==(const FvTable &, const FvTable &) = default;

 private:
  std::map<std::string, FvRecord, std::less<>> records_;
};

// Per-user taboo lexemes with insertion timestamps.
//
//   user_id<TAB>lexeme<TAB>iso8601_timestamp
class TabooTable {
 public:
  using Entries = std::map<std::string, std::string, std::less<>>;  // lexeme -> timestamp

  static TabooTable load(const std::filesystem::path &path);
  static TabooTable parse(std::istream &in, const std::string &source = "<taboo>");
  void write(std::ostream &out) const;
  void save(const std::filesystem::path &path) const;

  // Returns false if already present; the original timestamp is kept.
  bool insert(std::string_view user, std::string_view lexeme, std::string timestamp);
  bool erase(std::string_view user, std::string_view lexeme);
  bool contains(std::string_view user, std::string_view lexeme) const;
  const Entries &entries(std::string_view user) const;

  const std::map<std::string, Entries, std::less<>> &users() const { return users_; }

  friend bool operator==(const TabooTable &, const TabooTable &) = default;

 private:
  std::map<std::string, Entries, std::less<>> users_;
};

// Immutable view handed to readers. A reader holding one never observes a
// later write.
struct AffectSnapshot {
  FvTable fv;
  TabooTable taboo;
  std::uint64_t version = 0;

  std::optional<double> find_fv(std::string_view lexeme, std::string_view user) const {
    return fv.find(lexeme, user);
  }
  double lookup_fv(std::string_view lexeme, std::string_view user) const {
    return fv.lookup(lexeme, user);
  }
  bool is_taboo(std::string_view user, std::string_view lexeme) const {
    return taboo.contains(user, lexeme);
  }
};

std::string utc_timestamp_now();

// Copy-on-write store: writers are serialized by a mutex, build a new
// snapshot, optionally persist it, then publish it with a pointer swap.
class AffectStore {
 public:
  using Clock = std::function<std::string()>;

  struct Paths {
    std::filesystem::path fv;
    std::filesystem::path taboo;
  };

  explicit AffectStore(FvTable fv = {}, TabooTable taboo = {},
                       std::optional<Paths> persist_to = std::nullopt,
                       Clock clock = utc_timestamp_now);

  // Loads both files. Writes go back to them only when persist is set.
  static std::unique_ptr<AffectStore> open(const Paths &paths, bool persist);

  std::shared_ptr<const AffectSnapshot> snapshot() const;

  double lookup_fv(std::string_view lexeme, std::string_view user) const;
  bool is_taboo(std::string_view user, std::string_view lexeme) const;

  // Idempotent. Returns the version after the call.
  std::uint64_t record_taboo(std::string_view user, std::string_view lexeme);
  std::uint64_t clear_taboo(std::string_view user, std::string_view lexeme);
  // Throws InvalidArgument when value is outside [-1, 1] and VersionConflict
  // when expected_version is given and stale.
  std::uint64_t set_personal_fv(std::string_view user, std::string_view lexeme, double value,
                                std::optional<std::uint64_t> expected_version = std::nullopt);

 private:
  template <typename Mutation>
  std::uint64_t mutate(Mutation &&m);

  mutable std::mutex read_mu_;
  std::mutex write_mu_;
  std::shared_ptr<const AffectSnapshot> current_;
  std::optional<Paths> persist_to_;
  Clock clock_;
};

}  // namespace egc

#endif  // EGC_AFFECT_STORE_HPP_
