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

#ifndef EGC_EVIDENCE_HPP_
#define EGC_EVIDENCE_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace egc {

struct Document {
  std::string doc_id;
  std::optional<std::string> source_url;
  std::vector<std::string> tokens;
};

// Term counts over a fixed document set. tf = n(t,d) / sum_k n(k,d),
// idf = ln(|D| / df(t)).
class CorpusIndex {
 public:
  // Throws IndexError for an empty corpus or a repeated doc_id.
  static CorpusIndex build(const std::vector<Document> &documents);

  std::size_t document_count() const { return ids_.size(); }
  const std::vector<std::string> &doc_ids() const { return ids_; }
  bool has_document(std::string_view doc_id) const;

  std::size_t document_frequency(std::string_view term) const;
  // Both throw LookupError for an unknown document.
  std::size_t count(std::string_view term, std::string_view doc_id) const;
  std::size_t total(std::string_view doc_id) const;

  double tfidf(std::string_view term, std::string_view doc_id) const;
  // Sum of the l largest tfidf values among the distinct terms given.
  double top_l_tfidf_sum(const std::vector<std::string> &terms, std::string_view doc_id,
                         std::size_t l) const;
  // top_l_tfidf_sum maximised over documents.
  double best_top_l(const std::vector<std::string> &terms, std::size_t l) const;
  // Largest tfidf of any (term, document) pair; the g2 normaliser.
  double max_tfidf() const { return max_tfidf_; }

 private:
  std::size_t position(std::string_view doc_id) const;
  double tfidf_at(const std::string &term, std::size_t doc) const;

  std::vector<std::string> ids_;
  std::map<std::string, std::size_t, std::less<>> pos_;
  std::vector<std::unordered_map<std::string, std::size_t>> counts_;
  std::vector<std::size_t> totals_;
  std::unordered_map<std::string, std::size_t> df_;
  double max_tfidf_ = 0.0;
};

inline CorpusIndex index_corpus(const std::vector<Document> &documents) {
  return CorpusIndex::build(documents);
}

// Every regular file of a directory, doc_id = file name, sorted by name.
std::vector<Document> load_corpus_dir(const std::filesystem::path &dir);

// term<TAB>count
class HitCountTable {
 public:
  static HitCountTable load(const std::filesystem::path &path);
  static HitCountTable parse(std::istream &in, const std::string &source = "<hits>");

  void set(std::string_view term, std::uint64_t count);
  std::uint64_t count(std::string_view term) const;  // 0 when unknown
  std::uint64_t max_count() const { return max_count_; }
  const std::map<std::string, std::uint64_t, std::less<>> &counts() const { return counts_; }

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t max_count_ = 0;
};

inline std::uint64_t hit_count(std::string_view term, const HitCountTable &table) {
  return table.count(term);
}

// A live search backend. Implementations throw TransportError on failure.
class HitCountBackend {
 public:
  virtual ~HitCountBackend() = default;
  virtual std::uint64_t hits(std::string_view term) = 0;
};

// Fixture-first provider: asks the live backend when one is attached and
// falls back to the fixture table when it fails.
class HitCountProvider {
 public:
  explicit HitCountProvider(HitCountTable fixture = {},
                            std::shared_ptr<HitCountBackend> live = nullptr)
      : fixture_(std::move(fixture)), live_(std::move(live)) {}

  std::uint64_t hit_count(std::string_view term) const;
  std::uint64_t max_count() const { return fixture_.max_count(); }
  const HitCountTable &fixture() const { return fixture_; }

 private:
  HitCountTable fixture_;
  std::shared_ptr<HitCountBackend> live_;
};

}  // namespace egc

#endif  // EGC_EVIDENCE_HPP_
