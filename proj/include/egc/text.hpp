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

#ifndef EGC_TEXT_HPP_
#define EGC_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace egc {

// Lowercases ASCII, trims, and collapses internal whitespace to single spaces.
// This is the canonical form of every lexeme key in the stores.
std::string normalize_lexeme(std::string_view text);

// Lowercase word tokens of an utterance. Letters, digits and non-ASCII bytes
// form words; everything else (punctuation, apostrophes, spaces) separates.
std::vector<std::string> split_words(std::string_view text);

// Corpus pipeline: strips <...> markup, lowercases, splits on non-letters.
std::vector<std::string> corpus_terms(std::string_view html);

// Splits one line on tabs. A trailing '\r' is dropped first.
std::vector<std::string> split_tabs(std::string_view line);

std::string join(const std::vector<std::string> &parts, std::string_view sep,
                 std::size_t begin = 0, std::size_t end = std::string::npos);

bool is_blank_or_comment(std::string_view line);

// Strict real/integer parsing for data files; false on trailing garbage.
bool parse_double(std::string_view text, double &out);
bool parse_uint64(std::string_view text, unsigned long long &out);

}  // namespace egc

#endif  // EGC_TEXT_HPP_
