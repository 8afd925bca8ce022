"""Generator determinism, validity, and the standard corpus contract."""

import pytest

from edgewise.cat import validate_category, validate_partial_monoid
from edgewise.checks import segal_check, two_segal_check
from edgewise.corpus import (
    coskeletal_from_graph,
    diamond_poset,
    idempotent_monoid,
    random_category,
    random_coskeletal_sset,
    random_partial_monoid,
    standard_corpus,
)
from edgewise.errors import GenerationError, InputError
from edgewise.sset import validate


TRI = [("e0", "a", "b"), ("e1", "b", "c"), ("e2", "a", "c")]
PAR2 = [("e0", "a", "b"), ("e1", "a", "b")]


def test_triangle_graph_is_a_nerve_in_disguise():
    X = coskeletal_from_graph(("a", "b", "c"), TRI, 4, name="tri")
    assert validate(X) == []
    # one edge per increasing pair: counts match composable strings
    assert X.level_sizes() == (3, 6, 10, 15, 21)
    assert segal_check(X).overall == "pass"
    assert two_segal_check(X).overall == "pass"


def test_parallel_pair_fails_downward_closure():
    X = coskeletal_from_graph(("a", "b"), PAR2, 5, name="par2")
    assert validate(X) == []
    report = two_segal_check(X)
    assert report.overall == "fail"
    assert report.entry("two_segal", (3, 0, 2)).verdict == "fail"


def test_sparse_graph_still_validates():
    X = coskeletal_from_graph(
        ("a", "b", "c"), [("e0", "a", "b"), ("e1", "b", "c")], 4)
    assert validate(X) == []
    assert X.level_sizes() == (3, 5, 7, 9, 11)


def test_graph_input_errors():
    with pytest.raises(InputError):
        coskeletal_from_graph(("a",), [("e0", "a", "z")], 2)
    with pytest.raises(InputError):
        coskeletal_from_graph(("a", "b"), [("e", "a", "b"), ("e", "a", "b")],
                              2)
    with pytest.raises(InputError):
        coskeletal_from_graph(("a",), [], 0)


def test_level_cap_aborts_generation():
    with pytest.raises(GenerationError) as exc:
        coskeletal_from_graph(
            ("a",), [("e0", "a", "a"), ("e1", "a", "a"), ("e2", "a", "a")],
            5, level_cap=200)
    assert exc.value.diagnostics["cap"] == 200


def test_random_coskeletal_deterministic_and_valid():
    for seed in range(5):
        X = random_coskeletal_sset(2, 2, 4, seed)
        assert validate(X) == []
    again = random_coskeletal_sset(2, 2, 4, 3)
    assert again == random_coskeletal_sset(2, 2, 4, 3)


def test_random_coskeletal_exhausts_tries():
    # every draw puts three extra loops on the lone vertex
    with pytest.raises(GenerationError):
        random_coskeletal_sset(1, 3, 5, 0, level_cap=200)


def test_random_partial_monoid_valid_and_deterministic():
    for seed in (1, 2, 7):
        M = random_partial_monoid(3, seed)
        assert validate_partial_monoid(M) == []
    assert random_partial_monoid(4, 5).product == \
        random_partial_monoid(4, 5).product
    with pytest.raises(InputError):
        random_partial_monoid(6, 0)


def test_some_random_monoids_are_genuinely_partial():
    hits = 0
    for seed in range(10):
        M = random_partial_monoid(3, seed)
        if any((a, b) not in M.product
               for a in M.elements for b in M.elements):
            hits += 1
    assert hits > 0


def test_random_category_valid_and_bounded():
    for seed in range(1, 9):
        A = random_category(seed)
        assert validate_category(A) == []
        assert len(A.objects) <= 4
        assert len(A.morphisms) <= 24
    assert random_category(2).morphisms == random_category(2).morphisms


def test_named_helpers_validate():
    assert validate_partial_monoid(idempotent_monoid()) == []
    assert validate_category(diamond_poset()) == []


def test_standard_corpus_contract():
    corpus = standard_corpus()
    kinds = {}
    for inst in corpus:
        kinds[inst.kind] = kinds.get(inst.kind, 0) + 1
    assert kinds["nerve"] >= 20
    assert kinds["bar"] >= 10
    assert kinds["coskeletal"] >= 20
    names = [inst.name for inst in corpus]
    assert len(set(names)) == len(names)
    for inst in corpus:
        assert validate(inst.sset) == [], inst.name
    tfm1_bars = [inst for inst in corpus
                 if inst.kind == "bar" and "tfm1" in inst.name]
    assert tfm1_bars and tfm1_bars[0].sset.truncation >= 7
