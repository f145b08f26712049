"""Shared builders for randomised analyzer instances."""

import random

from pictosem.analyzer import AnalyzerConfig, scan_candidates
from pictosem.lexicon import lexicon_from_dict

ATTRIBUTE_POOL = "abcde"

THRESHOLDS = (-0.5, 0.0, 0.25, 0.4)
LOCALITIES = (1.0, 0.8, 0.5)


def random_feature_set(rng: random.Random, min_size=0, max_size=4):
    size = rng.randint(min_size, max_size)
    attributes = rng.sample(ATTRIBUTE_POOL, size)
    return {a: rng.choice([1, -1]) for a in attributes}


def random_instance(rng: random.Random):
    """One predicate (<=4 cases) among <=6 fillers with random +/-1 features.

    Returns (predicate_pos, surviving candidates, config) ready for the
    assignment search routes.
    """
    n_cases = rng.randint(1, 4)
    n_fillers = rng.randint(1, 6)
    cases = {
        f"c{i}": {"features": random_feature_set(rng, min_size=1)}
        for i in range(n_cases)
    }
    symbols = {
        "pred": {"taxeme": "t", "features": {}, "gloss": "pred", "cases": cases}
    }
    for j in range(n_fillers):
        symbols[f"f{j}"] = {
            "taxeme": "t",
            "features": random_feature_set(rng),
            "gloss": f"f{j}",
        }
    lexicon = lexicon_from_dict(
        {
            "domains": {"d": {"features": {}}},
            "taxemes": {"t": {"domain": "d", "features": {}}},
            "symbols": symbols,
        }
    )
    fillers = [f"f{j}" for j in range(n_fillers)]
    predicate_pos = rng.randint(0, n_fillers)
    utterance = fillers[:predicate_pos] + ["pred"] + fillers[predicate_pos:]
    config = AnalyzerConfig(
        threshold=rng.choice(THRESHOLDS), locality=rng.choice(LOCALITIES)
    )
    surviving, _ = scan_candidates(lexicon, utterance, config)
    mine = [c for c in surviving if c.predicate_pos == predicate_pos]
    return predicate_pos, mine, config
