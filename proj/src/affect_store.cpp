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

#include "egc/affect_store.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "egc/error.hpp"
#include "egc/text.hpp"

namespace egc {

namespace {

// Shortest representation that parses back to the same double.
std::string format_fv(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_fv(const std::string &text, const std::string &source, std::size_t row) {
  double v = 0.0;
  if (!parse_double(text, v)) throw LoadError(source, row, "bad favorite value '" + text + "'");
  if (!fv_in_range(v)) throw LoadError(source, row, "favorite value " + text + " outside [-1, 1]");
  return v;
}

std::string require_key(std::string_view raw, const char *what) {
  std::string key = normalize_lexeme(raw);
  if (key.empty()) throw InvalidArgument(std::string("empty ") + what);
  return key;
}

// Write to a sibling temp file and rename so a crash never leaves half a file.
template <typename Table>
void atomic_save(const Table &table, const std::filesystem::path &path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    table.write(out);
    out.flush();
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

template <typename Table>
Table load_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), 0, "cannot open");
  return Table::parse(in, path.string());
}

}  // namespace

bool fv_in_range(double value) { return value >= -1.0 && value <= 1.0; }

FvTable FvTable::load(const std::filesystem::path &path) { return load_file<FvTable>(path); }

FvTable FvTable::parse(std::istream &in, const std::string &source) {
  FvTable t;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank_or_comment(line)) continue;
    auto f = split_tabs(line);
    if (f[0] == "PERSONAL") {
      if (f.size() != 4) throw LoadError(source, row, "PERSONAL row needs user, lexeme, fv");
      std::string user = normalize_lexeme(f[1]);
      std::string lexeme = normalize_lexeme(f[2]);
      if (user.empty() || lexeme.empty()) throw LoadError(source, row, "empty user or lexeme");
      double v = parse_fv(f[3], source, row);
      FvRecord &rec = t.records_[lexeme];
      rec.lexeme = lexeme;
      if (!rec.personal.emplace(user, v).second) {
        throw LoadError(source, row, "duplicate personal value for '" + lexeme + "'");
      }
    } else {
      if (f.size() != 2) throw LoadError(source, row, "expected lexeme and fv");
      std::string lexeme = normalize_lexeme(f[0]);
      if (lexeme.empty()) throw LoadError(source, row, "empty lexeme");
      double v = parse_fv(f[1], source, row);
      FvRecord &rec = t.records_[lexeme];
      rec.lexeme = lexeme;
      if (rec.initial_fv) throw LoadError(source, row, "duplicate lexeme '" + lexeme + "'");
      rec.initial_fv = v;
    }
  }
  return t;
}

void FvTable::write(std::ostream &out) const {
  out << "# lexeme\tinitial_fv\n# PERSONAL\tuser_id\tlexeme\tfv\n";
  for (const auto &[lexeme, rec] : records_) {
    if (rec.initial_fv) out << lexeme << '\t' << format_fv(*rec.initial_fv) << '\n';
  }
  for (const auto &[lexeme, rec] : records_) {
    for (const auto &[user, v] : rec.personal) {
      out << "PERSONAL\t" << user << '\t' << lexeme << '\t' << format_fv(v) << '\n';
    }
  }
}

void FvTable::save(const std::filesystem::path &path) const { atomic_save(*this, path); }

void FvTable::set_initial(std::string_view lexeme, double value) {
  if (!fv_in_range(value)) throw InvalidArgument("favorite value outside [-1, 1]");
  std::string key = require_key(lexeme, "lexeme");
  FvRecord &rec = records_[key];
  rec.lexeme = key;
  rec.initial_fv = value;
}

void FvTable::set_personal(std::string_view user, std::string_view lexeme, double value) {
  if (!fv_in_range(value)) throw InvalidArgument("favorite value outside [-1, 1]");
  std::string u = require_key(user, "user id");
  std::string key = require_key(lexeme, "lexeme");
  FvRecord &rec = records_[key];
  rec.lexeme = key;
  rec.personal[u] = value;
}

std::optional<double> FvTable::find(std::string_view lexeme, std::string_view user) const {
  auto it = records_.find(normalize_lexeme(lexeme));
  if (it == records_.end()) return std::nullopt;
  if (!user.empty()) {
    auto p = it->second.personal.find(normalize_lexeme(user));
    if (p != it->second.personal.end()) return p->second;
  }
  return it->second.initial_fv;
}

double FvTable::lookup(std::string_view lexeme, std::string_view user) const {
  return find(lexeme, user).value_or(0.0);
}

TabooTable TabooTable::load(const std::filesystem::path &path) {
  return load_file<TabooTable>(path);
}

TabooTable TabooTable::parse(std::istream &in, const std::string &source) {
  TabooTable t;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank_or_comment(line)) continue;
    auto f = split_tabs(line);
    if (f.size() != 3) throw LoadError(source, row, "expected user, lexeme, timestamp");
    std::string user = normalize_lexeme(f[0]);
    std::string lexeme = normalize_lexeme(f[1]);
    if (user.empty() || lexeme.empty() || f[2].empty()) {
      throw LoadError(source, row, "empty field");
    }
    if (!t.insert(user, lexeme, f[2])) {
      throw LoadError(source, row, "duplicate taboo entry '" + lexeme + "'");
    }
  }
  return t;
}

void TabooTable::write(std::ostream &out) const {
  out << "# user_id\tlexeme\tiso8601_timestamp\n";
  for (const auto &[user, entries] : users_) {
    for (const auto &[lexeme, ts] : entries) out << user << '\t' << lexeme << '\t' << ts << '\n';
  }
}

void TabooTable::save(const std::filesystem::path &path) const { atomic_save(*this, path); }

bool TabooTable::insert(std::string_view user, std::string_view lexeme, std::string timestamp) {
  std::string u = require_key(user, "user id");
  std::string key = require_key(lexeme, "lexeme");
  return users_[u].emplace(key, std::move(timestamp)).second;
}

bool TabooTable::erase(std::string_view user, std::string_view lexeme) {
  auto it = users_.find(normalize_lexeme(user));
  if (it == users_.end()) return false;
  bool removed = it->second.erase(normalize_lexeme(lexeme)) > 0;
  if (it->second.empty()) users_.erase(it);
  return removed;
}

bool TabooTable::contains(std::string_view user, std::string_view lexeme) const {
  auto it = users_.find(normalize_lexeme(user));
  return it != users_.end() && it->second.find(normalize_lexeme(lexeme)) != it->second.end();
}

const TabooTable::Entries &TabooTable::entries(std::string_view user) const {
  static const Entries kEmpty;
  auto it = users_.find(normalize_lexeme(user));
  return it == users_.end() ? kEmpty : it->second;
}

std::string utc_timestamp_now() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

AffectStore::AffectStore(FvTable fv, TabooTable taboo, std::optional<Paths> persist_to,
                         Clock clock)
    : current_(std::make_shared<const AffectSnapshot>(
          AffectSnapshot{std::move(fv), std::move(taboo), 0})),
      persist_to_(std::move(persist_to)),
      clock_(std::move(clock)) {}

std::unique_ptr<AffectStore> AffectStore::open(const Paths &paths, bool persist) {
  FvTable fv = FvTable::load(paths.fv);
  TabooTable taboo;
  if (std::filesystem::exists(paths.taboo)) taboo = TabooTable::load(paths.taboo);
  return std::make_unique<AffectStore>(std::move(fv), std::move(taboo),
                                       persist ? std::optional<Paths>(paths) : std::nullopt);
}

std::shared_ptr<const AffectSnapshot> AffectStore::snapshot() const {
  std::lock_guard lock(read_mu_);
  return current_;
}

double AffectStore::lookup_fv(std::string_view lexeme, std::string_view user) const {
  return snapshot()->lookup_fv(normalize_lexeme(lexeme), normalize_lexeme(user));
}

bool AffectStore::is_taboo(std::string_view user, std::string_view lexeme) const {
  return snapshot()->is_taboo(normalize_lexeme(user), normalize_lexeme(lexeme));
}

// The mutation edits a private copy and returns whether anything changed;
// unchanged calls neither persist nor bump the version.
template <typename Mutation>
std::uint64_t AffectStore::mutate(Mutation &&m) {
  std::lock_guard wlock(write_mu_);
  auto base = snapshot();
  auto next = std::make_shared<AffectSnapshot>(*base);
  if (!m(*next, base->version)) return base->version;
  next->version = base->version + 1;
  if (persist_to_) {
    if (!(next->fv == base->fv)) next->fv.save(persist_to_->fv);
    if (!(next->taboo == base->taboo)) next->taboo.save(persist_to_->taboo);
  }
  std::lock_guard rlock(read_mu_);
  current_ = std::move(next);
  return current_->version;
}

std::uint64_t AffectStore::record_taboo(std::string_view user, std::string_view lexeme) {
  return mutate([&](AffectSnapshot &s, std::uint64_t) {
    return s.taboo.insert(user, lexeme, clock_());
  });
}

std::uint64_t AffectStore::clear_taboo(std::string_view user, std::string_view lexeme) {
  return mutate([&](AffectSnapshot &s, std::uint64_t) { return s.taboo.erase(user, lexeme); });
}

std::uint64_t AffectStore::set_personal_fv(std::string_view user, std::string_view lexeme,
                                           double value,
                                           std::optional<std::uint64_t> expected_version) {
  if (!fv_in_range(value)) throw InvalidArgument("favorite value outside [-1, 1]");
  return mutate([&](AffectSnapshot &s, std::uint64_t version) {
    if (expected_version && *expected_version != version) {
      throw VersionConflict("store is at version " + std::to_string(version) + ", expected " +
                            std::to_string(*expected_version));
    }
    s.fv.set_personal(user, lexeme, value);
    return true;
  });
}

}  // namespace egc
