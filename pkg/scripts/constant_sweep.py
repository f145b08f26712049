#!/usr/bin/env python3
"""Sweep the acceptability threshold and locality constant over the corpus.

Prints the benchmark acceptability rate for each (threshold, locality)
pair, which is how usable defaults were picked for the bundled lexicon.
"""

from pictosem import defaults
from pictosem.analyzer import AnalyzerConfig
from pictosem.bench import load_corpus, run_benchmark
from pictosem.lexicon import load_lexicon
from pictosem.realizer import load_dictionary, load_templates

THRESHOLDS = [0.0, 0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.7, 0.9]
LOCALITIES = [1.0, 0.9, 0.8, 0.7, 0.6, 0.5]


def main() -> None:
    lexicon = load_lexicon(defaults.resolve_lexicon_path())
    dictionary = load_dictionary(defaults.demo_dictionary_path())
    templates = load_templates(defaults.demo_templates_path())
    corpus = load_corpus(defaults.mini_corpus_path())

    header = "thr\\loc " + "".join(f"{loc:>8.2f}" for loc in LOCALITIES)
    print(header)
    print("-" * len(header))
    for threshold in THRESHOLDS:
        cells = []
        for locality in LOCALITIES:
            config = AnalyzerConfig(threshold=threshold, locality=locality)
            report = run_benchmark(lexicon, dictionary, templates, corpus, config)
            cells.append(f"{report.acceptability_rate:>8.2f}")
        print(f"{threshold:<8.2f}" + "".join(cells))


if __name__ == "__main__":
    main()
