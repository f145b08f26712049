#!/usr/bin/env python3
"""Run the bundled demo sequences end to end and print the sentences."""

from pictosem import defaults
from pictosem.analyzer import analyze
from pictosem.lexicon import load_lexicon
from pictosem.network import to_dot
from pictosem.realizer import load_dictionary, load_templates, realize

SEQUENCES = [
    ["i", "eat", "meat"],
    ["meat", "i", "eat"],
    ["fork", "i", "eat"],
    ["fork", "i", "eat", "meat"],
    ["i", "give", "cat", "meat"],
    ["i", "give", "cat", "daddy"],
    ["i", "want", "sleep"],
    ["i", "want", "eat", "fish", "cake"],
    ["animal", "play", "ball"],
]


def main() -> None:
    lexicon = load_lexicon(defaults.resolve_lexicon_path())
    dictionary = load_dictionary(defaults.demo_dictionary_path())
    templates = load_templates(defaults.demo_templates_path())

    for sequence in SEQUENCES:
        network = analyze(lexicon, sequence)
        sentence = realize(network, dictionary, templates)
        print(f"{'/'.join(sequence):32s} -> {sentence}")

    print()
    print("network for i/give/cat/daddy:")
    print(to_dot(analyze(lexicon, ["i", "give", "cat", "daddy"])))


if __name__ == "__main__":
    main()
