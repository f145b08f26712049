import json

import pytest
from hypothesis import given, strategies as st

from pictosem.errors import (
    DuplicateIdentifierError,
    LexiconFormatError,
    UnknownSymbolError,
    UnresolvedReferenceError,
)
from pictosem.lexicon import (
    lexicon_from_dict,
    lexicon_from_json,
    lexicon_to_json,
    validate_lexicon,
)

REQUIRED_SYMBOLS = ["i", "eat", "meat", "fork", "give", "cat", "daddy", "want", "sleep"]


def make_lexicon(domain=None, taxeme=None, specific=None, cases=None):
    """Minimal single-symbol lexicon for layering tests."""
    symbol = {"taxeme": "t", "features": specific or {}, "gloss": "s"}
    if cases is not None:
        symbol["cases"] = cases
    return lexicon_from_dict(
        {
            "domains": {"d": {"features": domain or {}}},
            "taxemes": {"t": {"domain": "d", "features": taxeme or {}}},
            "symbols": {"s": symbol},
        }
    )


def test_demo_lexicon_contents(lexicon):
    assert len(lexicon.symbols) >= 16
    for symbol_id in REQUIRED_SYMBOLS:
        assert symbol_id in lexicon


def test_unresolved_taxeme_reference():
    with pytest.raises(UnresolvedReferenceError, match="XYZ"):
        lexicon_from_dict(
            {
                "domains": {},
                "taxemes": {},
                "symbols": {"a": {"taxeme": "XYZ", "features": {}, "gloss": "a"}},
            }
        )


def test_unresolved_domain_reference():
    with pytest.raises(UnresolvedReferenceError, match="nowhere"):
        lexicon_from_dict(
            {"taxemes": {"t": {"domain": "nowhere", "features": {}}}, "symbols": {}}
        )


def test_empty_document_is_a_valid_empty_lexicon():
    lexicon = lexicon_from_json("{}")
    assert lexicon.domains == {} and lexicon.taxemes == {} and lexicon.symbols == {}


def test_duplicate_identifier_rejected():
    text = '{"domains": {}, "taxemes": {}, "symbols": {"a": {"taxeme": "t"}, "a": {"taxeme": "t"}}}'
    with pytest.raises(DuplicateIdentifierError, match="'a'"):
        lexicon_from_json(text)


def test_parse_error_reports_position():
    with pytest.raises(LexiconFormatError, match=r"line \d+, column \d+"):
        lexicon_from_json('{"domains": }')


def test_non_atomic_feature_value_rejected():
    with pytest.raises(LexiconFormatError, match="non-atomic"):
        lexicon_from_dict({"domains": {"d": {"features": {"a": [1, 2]}}}})


def test_intrinsic_union_without_collisions():
    lexicon = make_lexicon(domain={"a": 1}, taxeme={"b": -1}, specific={"c": 1})
    assert lexicon.intrinsic_features("s") == {"a": 1, "b": -1, "c": 1}


def test_intrinsic_precedence_specific_over_taxeme_over_domain():
    lexicon = make_lexicon(
        domain={"living": 1},
        taxeme={"living": 1, "animate": 1},
        specific={"animate": -1},
    )
    assert lexicon.intrinsic_features("s") == {"living": 1, "animate": -1}


def test_demo_meat_inherits_taxeme_and_keeps_specific(lexicon):
    features = lexicon.intrinsic_features("meat")
    assert features["edible"] == 1
    assert features["meat"] == 1


def test_intrinsic_unknown_symbol(lexicon):
    with pytest.raises(UnknownSymbolError):
        lexicon.intrinsic_features("no-such-symbol")


def test_intrinsic_is_deterministic_and_idempotent(lexicon):
    for symbol_id in lexicon.symbols:
        first = lexicon.intrinsic_features(symbol_id)
        assert lexicon.intrinsic_features(symbol_id) == first


def test_case_frame_of_predicates(lexicon):
    assert lexicon.case_frame("eat").labels() == ("agent", "patient", "instrument")
    assert lexicon.case_frame("want").labels() == ("agent", "theme")
    assert lexicon.case_frame("meat") is None


def test_case_frame_unknown_symbol(lexicon):
    with pytest.raises(UnknownSymbolError):
        lexicon.case_frame("no-such-symbol")


def test_validate_demo_lexicon_is_clean(lexicon):
    report = validate_lexicon(lexicon)
    assert report.errors == []
    assert report.warnings == []
    assert report.ok


def test_validate_flags_empty_selectional_set():
    lexicon = make_lexicon(
        domain={"a": 1}, cases={"agent": {"features": {}}, "patient": {"features": {"x": 1}}}
    )
    report = validate_lexicon(lexicon)
    assert len(report.errors) == 1
    assert "'s'" in report.errors[0] and "'agent'" in report.errors[0]


def test_validate_flags_zero_slot_frame():
    lexicon = make_lexicon(domain={"a": 1}, cases={})
    report = validate_lexicon(lexicon)
    assert any("no slots" in message for message in report.errors)


def test_validate_warns_on_single_member_taxeme():
    lexicon = make_lexicon(domain={"a": 1})
    report = validate_lexicon(lexicon)
    assert report.ok
    assert any("'t'" in message for message in report.warnings)


def test_validate_warns_on_layer_collision():
    lexicon = make_lexicon(domain={"a": 1}, taxeme={"a": -1})
    report = validate_lexicon(lexicon)
    assert any("'a'" in message and "overridden" in message for message in report.warnings)


def test_round_trip_through_serialisation(lexicon):
    assert lexicon_from_json(lexicon_to_json(lexicon)) == lexicon


def test_round_trip_preserves_case_order(lexicon):
    reloaded = lexicon_from_json(lexicon_to_json(lexicon))
    assert reloaded.case_frame("eat").labels() == ("agent", "patient", "instrument")


def test_case_order_in_document_is_preserved():
    text = json.dumps(
        {
            "domains": {"d": {"features": {"x": 1}}},
            "taxemes": {"t": {"domain": "d", "features": {}}},
            "symbols": {
                "v": {
                    "taxeme": "t",
                    "features": {},
                    "gloss": "v",
                    "cases": {
                        "zeta": {"features": {"x": 1}},
                        "alpha": {"features": {"x": 1}},
                    },
                }
            },
        }
    )
    assert lexicon_from_json(text).case_frame("v").labels() == ("zeta", "alpha")


feature_sets = st.dictionaries(
    st.sampled_from("abcdef"), st.sampled_from([1, -1]), max_size=4
)


@given(domain=feature_sets, taxeme=feature_sets, specific=feature_sets)
def test_precedence_property(domain, taxeme, specific):
    lexicon = make_lexicon(domain=domain, taxeme=taxeme, specific=specific)
    merged = lexicon.intrinsic_features("s")
    assert set(merged) == set(domain) | set(taxeme) | set(specific)
    for attribute, value in merged.items():
        if attribute in specific:
            assert value == specific[attribute]
        elif attribute in taxeme:
            assert value == taxeme[attribute]
        else:
            assert value == domain[attribute]
