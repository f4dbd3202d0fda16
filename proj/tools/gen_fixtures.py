#!/usr/bin/env python3
# Copyright 2026 The EGC Concierge Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the tuned demo fixtures in data/.

The hit-count table, tourism corpus and candidate favorite values are derived
by inverting the two logistic estimation curves and the emotion degree so that
the Hiroshima demo utterances reproduce the reference recommendation tables.
Everything here is synthetic; the original search counts are not recoverable.

Usage: python3 tools/gen_fixtures.py [data-dir]
"""

import math
import os
import sys

G1 = (9.374561, -14.8033)
G2 = (9.5457524, -27.19415)
SCALE = 2.0              # SCALE in data/egc.conf
MAX_HITS = 120_000_000   # hit count of the most retrieved term ("hiroshima")
DOC_LEN = 5000           # tokens per corpus document
MAX_TERM_COUNT = 2000    # occurrences of the max-TF-IDF term in its document

SITES = ["hiroshima", "kure", "hatsukaichi", "onomichi", "fukuyama", "miyoshi", "akitakata"]

# word, g1, g2, EGC, anchor token, corpus document, subject FV on axis 1
TABLE4 = [
    ("gokuraku temple", 0.0958, 0.8020, 0.7071, "gokuraku", "hatsukaichi"),
    ("battleship yamato", 0.7082, 5.1722e-4, 0.7071, "yamato", "kure"),
    ("the self defense forces", 0.7639, 2.9405e-4, 0.5830, "defense", "kure"),
    ("miyajima", 0.3092, 7.9025e-4, 0.8602, "miyajima", "hatsukaichi"),
    ("itukushima shrine", 0.1335, 1.6933e-4, 0.8602, "itukushima", "hatsukaichi"),
    ("torii", 0.1251, 9.3482e-5, 0.8602, "torii", "hatsukaichi"),
    ("momijidani park", 0.2499, 7.5539e-5, 0.7071, "momijidani", "hatsukaichi"),
    ("rihga royal hotel hiroshima", 0.1705, 8.912e-5, 0.7071, "rihga", "hiroshima"),
    ("view the scarlet maple leaves", 0.1207, 1.0161e-4, 0.7071, "scarlet", "hatsukaichi"),
    ("hiroshima peace memorial park", 0.1136, 0.0025, 0.7071, "peace", "hiroshima"),
]
TABLE5 = [
    ("okonomiyaki", 0.5563, 0.0070, 1.1912, "okonomiyaki", "hiroshima"),
    ("fried oysters lunch", 0.2937, 7.3239e-5, 1.0488, "fried", "onomichi"),
    ("conger", 0.2547, 7.6289e-5, 1.0488, "conger", "hatsukaichi"),
    ("oyster", 0.5022, 0.0022, 0.9273, "oyster", "hatsukaichi"),
    ("local sake", 0.3622, 7.5449e-5, 0.9273, "sake", "miyoshi"),
]

# Non-table vocabulary: word -> (g1 target, g2 target or None, anchor, doc).
EXTRAS = {
    "hiroshima castle": (0.20, 0.0010, "castle", "hiroshima"),
    "atomic bomb dome": (0.60, 0.0300, "atomic", "hiroshima"),
    "shukkeien garden": (0.15, 0.0005, "shukkeien", "hiroshima"),
    "hiroshima station": (0.30, None, None, None),
    "hondori shopping street": (0.20, 0.0004, "hondori", "hiroshima"),
    "tsukemen": (0.25, 0.0003, "tsukemen", "hiroshima"),
    "momiji manju": (0.45, 0.0006, "manju", "hatsukaichi"),
    "lemon cake": (0.20, 0.0004, "lemon", "onomichi"),
    "kumano brush": (0.10, 0.0003, "kumano", "akitakata"),
    "lunch": (0.30, None, None, None),
}

# Seed favorite values for the demo vocabulary. "speaker@desire" is the
# speaker's FV inside a desire-mood frame ("would like to ...").
SEED_FV = [
    ("speaker", 0.5),
    ("speaker@desire", 0.0),
    ("lunch", 0.6),
    ("hiroshima castle", 0.0),
    ("go", 0.0),
    ("eat", 0.0),
    ("see", 0.0),
    ("come", 0.0),
    ("buy", 0.0),
    ("atomic bomb dome", -0.6),
    ("beautiful", 0.7),
    ("sad", -0.7),
    ("crowded", -0.5),
    ("momiji manju", 0.1),
    ("lemon cake", 0.1),
]

# Words present in every document: idf is zero for all of them.
FILLER = ("hiroshima travel guide welcome the city and its visitors enjoy "
          "local lunch spots along the river with friendly people every "
          "season of the year").split()


def inv_logistic(g, params):
    a, b = params
    return (math.log(1.0 / g - 1.0) - a) / b


def logistic(x, params):
    a, b = params
    return 1.0 / (1.0 + math.exp(a + b * x))


def candidate_fv(egc, subject_fv):
    # EGC = SCALE * sqrt(subject^2 + fv^2) / sqrt(3)
    target = (egc * math.sqrt(3.0) / SCALE) ** 2 - subject_fv ** 2
    return min(1.0, math.sqrt(max(target, 0.0)))


def main():
    data = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data")
    corpus_dir = os.path.join(data, "corpus")
    os.makedirs(corpus_dir, exist_ok=True)

    hits = {"hiroshima": MAX_HITS}
    anchors = {site: {} for site in SITES}
    anchors["hiroshima"]["sightseeing"] = MAX_TERM_COUNT
    fvs = {}

    def add(word, g1, g2, anchor, doc):
        x1 = max(inv_logistic(g1, G1), 0.0)
        hits[word] = int(round(x1 * MAX_HITS))
        if g2 is not None and anchor is not None:
            x2 = inv_logistic(g2, G2)
            count = int(round(max(x2, 0.0) * MAX_TERM_COUNT))
            if count > 0:
                anchors[doc][anchor] = count

    for word, g1, g2, egc, anchor, doc in TABLE4:
        add(word, g1, g2, anchor, doc)
        fvs[word] = round(candidate_fv(egc, 0.5), 4)
    for word, g1, g2, egc, anchor, doc in TABLE5:
        add(word, g1, g2, anchor, doc)
        fvs[word] = round(candidate_fv(egc, 0.0), 4)
    for word, (g1, g2, anchor, doc) in EXTRAS.items():
        add(word, g1, g2, anchor, doc)

    with open(os.path.join(data, "hits.tsv"), "w") as f:
        f.write("# term\thit_count (synthetic, tuned to the demo tables)\n")
        for term in sorted(hits):
            f.write(f"{term}\t{hits[term]}\n")

    for site in SITES:
        tokens = []
        for term, count in sorted(anchors[site].items()):
            tokens.extend([term] * count)
        filler_needed = DOC_LEN - len(tokens)
        assert filler_needed >= len(FILLER), site
        filler = (FILLER * (filler_needed // len(FILLER) + 1))[:filler_needed]
        # Interleave so the file reads as lines of mixed text.
        merged = []
        step = max(1, len(filler) // max(1, len(tokens))) if tokens else len(filler)
        fi = 0
        for tok in tokens:
            merged.extend(filler[fi:fi + step])
            fi += step
            merged.append(tok)
        merged.extend(filler[fi:])
        assert len(merged) == DOC_LEN
        with open(os.path.join(corpus_dir, f"{site}.txt"), "w") as f:
            for i in range(0, len(merged), 16):
                f.write(" ".join(merged[i:i + 16]) + "\n")

    with open(os.path.join(data, "fv.tsv"), "w") as f:
        f.write("# lexeme\tinitial_fv\n")
        f.write("# PERSONAL\tuser_id\tlexeme\tfv\n")
        for word, value in SEED_FV:
            f.write(f"{word}\t{value:.4f}\n")
        for word in sorted(fvs):
            f.write(f"{word}\t{fvs[word]:.4f}\n")

    # Report realized channels (same formulas as the library).
    max_tfidf = (MAX_TERM_COUNT / DOC_LEN) * math.log(len(SITES))
    def g2_of(word, rows):
        for w, _, _, _, anchor, doc in rows:
            if w == word:
                n = anchors[doc].get(anchor, 0)
                return logistic((n / DOC_LEN) * math.log(len(SITES)) / max_tfidf, G2)
    for rows, subj in ((TABLE4, 0.5), (TABLE5, 0.0)):
        for word, g1, g2, egc, _, _ in rows:
            rg1 = logistic(hits[word] / MAX_HITS, G1)
            rg2 = g2_of(word, rows)
            regc = SCALE * math.sqrt(subj ** 2 + fvs[word] ** 2) / math.sqrt(3.0)
            rec = math.sqrt(rg1 ** 2 + rg2 ** 2 + regc ** 2)
            print(f"{word:32s} g1={rg1:.4f} g2={rg2:.3e} egc={regc:.4f} rec={rec:.4f}"
                  f"  (table rec={math.sqrt(g1*g1+g2*g2+egc*egc):.4f})")


if __name__ == "__main__":
    main()
