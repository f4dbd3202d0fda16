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

// egc: command-line driver for each pipeline stage. Prints one JSON object
// per invocation (or a table with --pretty); exit 2 on domain errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "egc/affect_store.hpp"
#include "egc/caseframe.hpp"
#include "egc/emotion.hpp"
#include "egc/error.hpp"
#include "egc/evidence.hpp"
#include "egc/json_io.hpp"
#include "egc/lexicon.hpp"
#include "egc/recommender.hpp"
#include "egc/scoring.hpp"
#include "egc/text.hpp"

namespace fs = std::filesystem;
using egc::Json;

namespace {

struct Globals {
  std::string data_dir = "./data";
  bool pretty = false;
};

void emit(const Json &j, const Globals &g) {
  std::cout << (g.pretty ? j.dump(2) : j.dump()) << '\n';
}

void print_list(const egc::RecommendationList &list) {
  std::printf("intent: %s  query: \"%s\"  query score: %.4f%s\n",
              std::string(egc::to_string(list.intent)).c_str(), list.query_word.c_str(),
              list.query_score, list.keyword_mode ? "  (keyword mode)" : "");
  if (list.emotion) {
    std::printf("emotion: %s  degree %.4f  egc %.4f  [",
                std::string(egc::to_string(list.emotion->sign)).c_str(), list.emotion->degree,
                list.emotion->egc());
    for (std::size_t i = 0; i < list.emotion->emotions.size(); ++i) {
      std::printf("%s%s", i ? ", " : "", list.emotion->emotions[i].c_str());
    }
    std::printf("]\n");
  }
  for (const auto &t : list.new_taboo) std::printf("taboo: %s\n", t.c_str());
  if (list.items.empty()) {
    std::printf("(no recommendations: %s)\n", list.reason.c_str());
    return;
  }
  std::printf("%-4s %-34s %10s %10s %8s %8s\n", "#", "word", "g1", "g2", "EGC", "Rec");
  int rank = 0;
  for (const auto &c : list.items) {
    std::printf("%-4d %-34s %10.4g %10.4g %8.4f %8.4f\n", ++rank, c.word.c_str(), c.g1, c.g2,
                c.egc, c.score);
  }
}

std::vector<double> read_samples(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw egc::LoadError(path.string(), 0, "cannot open samples file");
  std::vector<double> out;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (egc::is_blank_or_comment(line)) continue;
    // The value is the last tab-separated field, so hits.tsv can be fed directly.
    auto fields = egc::split_tabs(line);
    double v = 0;
    if (!egc::parse_double(fields.back(), v) || v < 0) {
      throw egc::LoadError(path.string(), row, "bad sample '" + fields.back() + "'");
    }
    out.push_back(v);
  }
  return out;
}

const egc::CaseFrame &pick_frame(const std::vector<egc::CaseFrame> &frames,
                                 const egc::Lexicon &lex) {
  for (const auto &f : frames) {
    if (egc::classify_intent(f, lex) != egc::Intent::Other) return f;
  }
  return frames.front();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Affective tourist recommender"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  if (const char *env = std::getenv("EGC_DATA_DIR")) g.data_dir = env;
  app.add_option("--data-dir", g.data_dir, "Data directory (env EGC_DATA_DIR)");
  app.add_flag("--pretty", g.pretty, "Human-readable output");

  std::string text, user = "guest";
  auto *parse_cmd = app.add_subcommand("parse", "Case frames of an utterance");
  parse_cmd->add_option("text", text)->required();

  auto *emote_cmd = app.add_subcommand("emote", "Emotion of an utterance");
  emote_cmd->add_option("text", text)->required();
  emote_cmd->add_option("--user", user);

  double g1 = 0, g2 = 0, egc_value = 0;
  auto *score_cmd = app.add_subcommand("score", "Combined score of three channel values");
  score_cmd->add_option("--g1", g1)->required();
  score_cmd->add_option("--g2", g2)->required();
  score_cmd->add_option("--egc", egc_value)->required();

  bool persist = false;
  auto *rec_cmd = app.add_subcommand("recommend", "Ranked recommendations for an utterance");
  rec_cmd->add_option("text", text)->required();
  rec_cmd->add_option("--user", user);
  rec_cmd->add_flag("--persist", persist, "Write taboo updates back to the data directory");

  std::string corpus_dir;
  auto *index_cmd = app.add_subcommand("index", "Index a corpus directory");
  index_cmd->add_option("corpus-dir", corpus_dir)->required();

  std::string channel, samples_file;
  auto *fit_cmd = app.add_subcommand("fit", "Fit logistic parameters to raw samples");
  fit_cmd->add_option("--channel", channel)->required()->check(CLI::IsMember({"g1", "g2"}));
  fit_cmd->add_option("samples-file", samples_file)->required();

  std::string term, doc;
  auto *tfidf_cmd = app.add_subcommand("tfidf", "TF-IDF of a term in a document");
  tfidf_cmd->add_option("term", term)->required();
  tfidf_cmd->add_option("doc", doc)->required();
  tfidf_cmd->add_option("--corpus", corpus_dir, "Corpus directory (default <data-dir>/corpus)");

  CLI11_PARSE(app, argc, argv);
  const fs::path data = g.data_dir;

  try {
    if (*parse_cmd) {
      auto lex = egc::Lexicon::load(data / "lexicon.tsv");
      auto frames = egc::parse_utterance(text, lex);
      Json out = Json::array();
      for (const auto &f : frames) {
        Json j = f;
        j["intent"] = egc::to_string(egc::classify_intent(f, lex));
        out.push_back(std::move(j));
      }
      emit(Json{{"frames", out}}, g);
    } else if (*emote_cmd) {
      auto lex = egc::Lexicon::load(data / "lexicon.tsv");
      auto config = egc::EgcConfig::load(data / "egc.conf");
      auto fv = egc::FvTable::load(data / "fv.tsv");
      const std::string u = egc::normalize_lexeme(user);
      auto frames = egc::parse_utterance(text, lex);
      const auto &frame = pick_frame(frames, lex);
      egc::FvResolver resolve = [&](std::string_view lexeme) { return fv.find(lexeme, u); };
      egc::EmotionContext ctx;
      ctx.other_fv = resolve(frame.slots.at(egc::CaseRole::Subject)).value_or(0.0);
      auto result = egc::evaluate(frame, resolve, ctx, config);
      emit(Json{{"frame", frame}, {"emotion", result}}, g);
    } else if (*score_cmd) {
      emit(Json(egc::ChannelValues{g1, g2, egc_value}), g);
    } else if (*rec_cmd) {
      auto kb = std::make_shared<const egc::KnowledgeBase>(egc::KnowledgeBase::load(data));
      auto store = egc::AffectStore::open(egc::affect_paths(data), persist);
      egc::Recommender rec(kb, *store);
      auto list = rec.recommend(text, user);
      if (g.pretty) {
        print_list(list);
      } else {
        emit(Json(list), g);
      }
    } else if (*index_cmd) {
      auto docs = egc::load_corpus_dir(corpus_dir);
      auto index = egc::CorpusIndex::build(docs);
      Json list = Json::array();
      std::size_t tokens = 0;
      for (const auto &d : docs) {
        list.push_back({{"doc_id", d.doc_id}, {"tokens", d.tokens.size()}});
        tokens += d.tokens.size();
      }
      emit(Json{{"documents", list},
                {"document_count", index.document_count()},
                {"token_count", tokens},
                {"max_tfidf", index.max_tfidf()}},
           g);
    } else if (*fit_cmd) {
      auto raw = read_samples(samples_file);
      double max = 0;
      for (double v : raw) max = std::max(max, v);
      std::vector<double> xs;
      xs.reserve(raw.size());
      for (double v : raw) xs.push_back(egc::normalize(v, max));
      auto fit = egc::fit_logistic_cdf_detailed(xs);
      emit(Json{{"channel", channel},
                {"a", fit.params.a},
                {"b", fit.params.b},
                {"sse", fit.sse},
                {"iterations", fit.iterations},
                {"samples", xs.size()},
                {"normalizer", max}},
           g);
    } else if (*tfidf_cmd) {
      fs::path dir = corpus_dir.empty() ? data / "corpus" : fs::path(corpus_dir);
      auto index = egc::CorpusIndex::build(egc::load_corpus_dir(dir));
      std::string id = doc;
      if (!index.has_document(id) && index.has_document(id + ".txt")) id += ".txt";
      const std::string t = egc::normalize_lexeme(term);
      // Evaluate before building the object: GCC < 13 leaks initializer-list
      // elements when one of them throws.
      const double value = index.tfidf(t, id);
      const auto count = index.count(t, id);
      const auto total = index.total(id);
      emit(Json{{"term", t},
                {"doc", id},
                {"tfidf", value},
                {"count", count},
                {"total", total},
                {"df", index.document_frequency(t)},
                {"documents", index.document_count()}},
           g);
    }
  } catch (const egc::Error &e) {
    std::cerr << "egc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "egc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
