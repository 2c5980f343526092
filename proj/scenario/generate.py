#!/usr/bin/env python3
# Copyright 2026 The sentivec Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the bundled example scenario.

Two 200-line corpora share a vocabulary of seed words and fillers. "bold"
sits between positive seeds in general.txt and between negative seeds in
domain.txt, so it should flip. "sunny" and "gloomy" keep the same side in
both corpora.
"""

import pathlib
import random

POS = ["good", "great", "happy", "excellent", "nice"]
NEG = ["bad", "awful", "sad", "terrible", "poor"]
FILLERS = ["day", "thing", "place", "time", "people", "work", "city", "food", "road", "book"]
STOP = ["the", "a", "of"]

HERE = pathlib.Path(__file__).resolve().parent


def sentence(rng, positive, planted, length=10):
    seeds = POS if positive else NEG
    words = [rng.choice(seeds) if rng.random() < 0.5 else rng.choice(FILLERS) for _ in range(length)]
    # each planted word gets its own segment so triples never overlap
    span = length // max(1, len(planted))
    for k, word in enumerate(planted):
        at = rng.randint(k * span + 1, (k + 1) * span - 2)
        words[at - 1] = rng.choice(seeds)
        words[at] = word
        words[at + 1] = rng.choice(seeds)
    # stop words never break up a planted triple
    words.insert(0, rng.choice(STOP))
    return " ".join(words)


def corpus(seed, bold_positive):
    rng = random.Random(seed)
    lines = []
    for i in range(200):
        positive = i % 2 == 0
        planted = ["sunny"] if positive else ["gloomy"]
        if positive == bold_positive and i % 4 < 2:
            planted.append("bold")
        lines.append(sentence(rng, positive, planted))
    return lines


def docs(seed, n=120):
    rng = random.Random(seed)
    out = []
    for i in range(n):
        label = 1 if i % 2 == 0 else -1
        seeds = POS if label == 1 else NEG
        words = [rng.choice(seeds) if rng.random() < 0.4 else rng.choice(FILLERS) for _ in range(8)]
        out.append(f"{label:+d}\t{' '.join(words)}")
    return out


def write(name, lines):
    (HERE / name).write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    write("general.txt", corpus(11, bold_positive=True))
    write("domain.txt", corpus(12, bold_positive=False))
    write("stopwords.txt", STOP)
    # "fine" is listed with opposite signs so that merging drops it
    write("lexicon_a.tsv", [f"{w}\t+" for w in POS[:3]] + [f"{w}\t-" for w in NEG[:3]] + ["fine\t+"])
    write("lexicon_b.tsv", [f"{w}\t+" for w in POS[3:]] + [f"{w}\t-" for w in NEG[3:]] + ["fine\t-"])
    write("gold.tsv", ["sunny\t+", "gloomy\t-", "bold\t+"])
    write("words.txt", ["bold", "sunny", "gloomy", "good", "bad", "day", "road"])
    write("docs.tsv", docs(13))
    write(
        "pipeline.conf",
        [
            "# hyperparameters for the bundled scenario",
            "dim = 50",
            "window = 5",
            "negatives = 5",
            "initial_lr = 0.05",
            "epochs = 5",
            "subsample = 0",
            "min_count = 5",
            "retrain_epochs = 1",
            "seed = 1",
            "threads = 1",
            "svm_c = 1.0",
            "svm_gamma = 0.7",
            "split_fraction = 0.8",
        ],
    )


if __name__ == "__main__":
    main()
