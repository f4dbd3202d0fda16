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

#include "egc/evidence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "egc/error.hpp"
#include "egc/text.hpp"

namespace egc {

CorpusIndex CorpusIndex::build(const std::vector<Document> &documents) {
  if (documents.empty()) throw IndexError("cannot index an empty corpus");
  CorpusIndex idx;
  idx.counts_.resize(documents.size());
  idx.totals_.resize(documents.size());
  for (std::size_t d = 0; d < documents.size(); ++d) {
    const Document &doc = documents[d];
    if (!idx.pos_.emplace(doc.doc_id, d).second) {
      throw IndexError("duplicate doc_id '" + doc.doc_id + "'");
    }
    idx.ids_.push_back(doc.doc_id);
    for (const std::string &t : doc.tokens) ++idx.counts_[d][t];
    idx.totals_[d] = doc.tokens.size();
    for (const auto &[term, n] : idx.counts_[d]) ++idx.df_[term];
  }
  for (std::size_t d = 0; d < documents.size(); ++d) {
    for (const auto &[term, n] : idx.counts_[d]) {
      idx.max_tfidf_ = std::max(idx.max_tfidf_, idx.tfidf_at(term, d));
    }
  }
  return idx;
}

bool CorpusIndex::has_document(std::string_view doc_id) const {
  return pos_.find(doc_id) != pos_.end();
}

std::size_t CorpusIndex::position(std::string_view doc_id) const {
  auto it = pos_.find(doc_id);
  if (it == pos_.end()) throw LookupError("unknown document '" + std::string(doc_id) + "'");
  return it->second;
}

std::size_t CorpusIndex::document_frequency(std::string_view term) const {
  auto it = df_.find(std::string(term));
  return it == df_.end() ? 0 : it->second;
}

std::size_t CorpusIndex::count(std::string_view term, std::string_view doc_id) const {
  const auto &counts = counts_[position(doc_id)];
  auto it = counts.find(std::string(term));
  return it == counts.end() ? 0 : it->second;
}

std::size_t CorpusIndex::total(std::string_view doc_id) const {
  return totals_[position(doc_id)];
}

double CorpusIndex::tfidf_at(const std::string &term, std::size_t doc) const {
  auto it = counts_[doc].find(term);
  if (it == counts_[doc].end()) return 0.0;
  const double tf = static_cast<double>(it->second) / static_cast<double>(totals_[doc]);
  const double idf = std::log(static_cast<double>(ids_.size()) /
                              static_cast<double>(df_.at(term)));
  return tf * idf;
}

double CorpusIndex::tfidf(std::string_view term, std::string_view doc_id) const {
  return tfidf_at(std::string(term), position(doc_id));
}

double CorpusIndex::top_l_tfidf_sum(const std::vector<std::string> &terms,
                                    std::string_view doc_id, std::size_t l) const {
  const std::size_t d = position(doc_id);
  std::set<std::string> distinct(terms.begin(), terms.end());
  std::vector<double> values;
  values.reserve(distinct.size());
  for (const std::string &t : distinct) values.push_back(tfidf_at(t, d));
  std::sort(values.begin(), values.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < std::min(l, values.size()); ++i) sum += values[i];
  return sum;
}

double CorpusIndex::best_top_l(const std::vector<std::string> &terms, std::size_t l) const {
  double best = 0.0;
  for (const std::string &id : ids_) best = std::max(best, top_l_tfidf_sum(terms, id, l));
  return best;
}

std::vector<Document> load_corpus_dir(const std::filesystem::path &dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IndexError("corpus directory '" + dir.string() + "' not found");
  }
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Document> docs;
  for (const auto &path : files) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    docs.push_back({path.filename().string(), std::nullopt, corpus_terms(buf.str())});
  }
  return docs;
}

HitCountTable HitCountTable::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string(), 0, "cannot open hit-count table");
  return parse(in, path.string());
}

HitCountTable HitCountTable::parse(std::istream &in, const std::string &source) {
  HitCountTable t;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (is_blank_or_comment(line)) continue;
    auto f = split_tabs(line);
    if (f.size() != 2) throw LoadError(source, row, "expected term and count");
    std::string term = normalize_lexeme(f[0]);
    unsigned long long n = 0;
    if (term.empty()) throw LoadError(source, row, "empty term");
    if (!parse_uint64(f[1], n)) throw LoadError(source, row, "bad count '" + f[1] + "'");
    if (t.counts_.count(term)) throw LoadError(source, row, "duplicate term '" + term + "'");
    t.set(term, n);
  }
  return t;
}

void HitCountTable::set(std::string_view term, std::uint64_t count) {
  std::string key = normalize_lexeme(term);
  auto [it, inserted] = counts_.insert_or_assign(key, count);
  if (count >= max_count_) {
    max_count_ = count;
  } else if (!inserted) {
    max_count_ = 0;
    for (const auto &[k, v] : counts_) max_count_ = std::max(max_count_, v);
  }
}

std::uint64_t HitCountTable::count(std::string_view term) const {
  auto it = counts_.find(term);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t HitCountProvider::hit_count(std::string_view term) const {
  if (live_) {
    try {
      return live_->hits(term);
    } catch (const TransportError &) {
      // fall through to the fixture
    }
  }
  return fixture_.count(term);
}

}  // namespace egc
