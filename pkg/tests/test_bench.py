import json

import pytest

from pictosem.analyzer import analyze
from pictosem.bench import GoldItem, categorize, load_corpus, run_benchmark
from pictosem.errors import CorpusFormatError

# Frozen regression snapshot for the bundled 20-item corpus.
SNAPSHOT_COUNTS = {"I": 17, "II": 1, "III": 1, "IV": 1}
SNAPSHOT_RATE = 0.9

SIX_DEMO_ITEMS = [
    GoldItem(("i", "eat", "meat"), frozenset({(1, "agent", 0), (1, "patient", 2)}), "Je mange la viande"),
    GoldItem(("meat", "i", "eat"), frozenset({(2, "agent", 1), (2, "patient", 0)}), "Je mange la viande"),
    GoldItem(("fork", "i", "eat"), frozenset({(2, "agent", 1), (2, "instrument", 0)}), "Je mange avec la fourchette"),
    GoldItem(
        ("fork", "i", "eat", "meat"),
        frozenset({(2, "agent", 1), (2, "instrument", 0), (2, "patient", 3)}),
        "Je mange la viande avec la fourchette",
    ),
    GoldItem(
        ("i", "give", "cat", "meat"),
        frozenset({(1, "agent", 0), (1, "patient", 3), (1, "beneficiary", 2)}),
        "Je donne la viande au chat",
    ),
    GoldItem(
        ("i", "give", "cat", "daddy"),
        frozenset({(1, "agent", 0), (1, "patient", 2), (1, "beneficiary", 3)}),
        "Je donne le chat à Papa",
    ),
]


def make_item(sequence, arcs, sentence=None):
    return GoldItem(tuple(sequence), frozenset(arcs), sentence)


def test_categorize_exact_match_is_category_one(lexicon, default_config):
    network = analyze(lexicon, ["i", "eat", "meat"], default_config)
    item = make_item(["i", "eat", "meat"], {(1, "agent", 0), (1, "patient", 2)}, "Je mange la viande")
    assert categorize(item, network, "Je mange la viande") == "I"


def test_categorize_sentence_mismatch_is_category_two(lexicon, default_config):
    network = analyze(lexicon, ["i", "eat", "meat"], default_config)
    item = make_item(["i", "eat", "meat"], {(1, "agent", 0), (1, "patient", 2)}, "Je mange la viande")
    assert categorize(item, network, "Je mange le viande") == "II"


def test_categorize_without_gold_sentence_collapses_to_one(lexicon, default_config):
    network = analyze(lexicon, ["i", "eat", "meat"], default_config)
    item = make_item(["i", "eat", "meat"], {(1, "agent", 0), (1, "patient", 2)})
    assert categorize(item, network, "anything at all") == "I"


def test_categorize_partial_overlap_is_category_three(lexicon, default_config):
    network = analyze(lexicon, ["i", "eat", "meat"], default_config)
    item = make_item(["i", "eat", "meat"], {(1, "agent", 0), (1, "location", 2)})
    assert categorize(item, network, None) == "III"


def test_categorize_disjoint_arcs_is_category_four(lexicon, default_config):
    network = analyze(lexicon, ["i", "eat", "meat"], default_config)
    item = make_item(["i", "eat", "meat"], {(1, "location", 2)})
    assert categorize(item, network, None) == "IV"


def test_categorize_empty_gold_and_empty_produced_match(lexicon, default_config):
    network = analyze(lexicon, ["flower", "table"], default_config)
    item = make_item(["flower", "table"], set())
    assert categorize(item, network, None) == "I"


def test_gold_item_positions_validated():
    with pytest.raises(CorpusFormatError):
        make_item(["i", "eat"], {(0, "agent", 9)})


def test_six_demo_items_all_category_one(lexicon, dictionary, templates, default_config):
    report = run_benchmark(lexicon, dictionary, templates, SIX_DEMO_ITEMS, default_config)
    assert report.counts == {"I": 6, "II": 0, "III": 0, "IV": 0}
    assert report.acceptability_rate == 1.0


def test_mini_corpus_matches_frozen_snapshot(
    lexicon, dictionary, templates, mini_corpus, default_config
):
    report = run_benchmark(lexicon, dictionary, templates, mini_corpus, default_config)
    assert report.counts == SNAPSHOT_COUNTS
    assert report.acceptability_rate == pytest.approx(SNAPSHOT_RATE)
    assert report.total == len(mini_corpus) == 20


def test_every_item_lands_in_exactly_one_category(
    lexicon, dictionary, templates, mini_corpus, default_config
):
    report = run_benchmark(lexicon, dictionary, templates, mini_corpus, default_config)
    assert sum(report.counts.values()) == len(mini_corpus)
    assert len(report.verdicts) == len(mini_corpus)
    for verdict in report.verdicts:
        assert verdict.category in ("I", "II", "III", "IV")


def test_rate_invariant_under_corpus_permutation(
    lexicon, dictionary, templates, mini_corpus, default_config
):
    shuffled = list(reversed(mini_corpus))
    report = run_benchmark(lexicon, dictionary, templates, shuffled, default_config)
    assert report.counts == SNAPSHOT_COUNTS


def test_report_serialises(lexicon, dictionary, templates, mini_corpus, default_config):
    report = run_benchmark(lexicon, dictionary, templates, mini_corpus, default_config)
    document = report.to_dict()
    assert document["total"] == 20
    assert json.loads(json.dumps(document)) == document
    table = report.table()
    assert "acceptability" in table


def test_corpus_loader_rejects_bad_lines(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text('{"seq": ["i"]}\nnot json\n', encoding="utf-8")
    with pytest.raises(CorpusFormatError, match="line 2"):
        load_corpus(path)


def test_corpus_loader_rejects_bad_arcs(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text('{"seq": ["i"], "arcs": [[0, "agent"]]}\n', encoding="utf-8")
    with pytest.raises(CorpusFormatError):
        load_corpus(path)
