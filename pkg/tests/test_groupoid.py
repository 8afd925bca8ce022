"""Groupoid semantics: equivalences, iso-comma squares, and the
simplicial groupoid of triangular arrays."""

import pytest

from edgewise.cat import chain_poset, nerve
from edgewise.checks import segal_check, two_segal_check
from edgewise.corpus import coskeletal_from_graph
from edgewise.errors import InputError
from edgewise.groupoid import (
    FinGroupoid,
    Functor,
    act_gpd,
    compose_functors,
    discrete_sgpd,
    equivalence_verdict,
    esd_gpd,
    functor_violations,
    groupoid_equivalence,
    identity_functor,
    iso_comma,
    s_construction,
    sgpd_beta_gamma_equality,
    sgpd_segal_check,
    sgpd_segal_map,
    sgpd_two_segal_check,
    validate_groupoid,
    validate_sgpd,
)
from edgewise.sset import edgewise


def point_groupoid():
    return FinGroupoid(("*",), ("i",), {"i": "*"}, {"i": "*"}, {"*": "i"},
                       {("i", "i"): "i"}, name="pt", inverse={"i": "i"})


def pair_groupoid():
    """Two objects, one iso between them: contractible but not discrete."""
    compose = {
        ("ix", "ix"): "ix", ("iy", "iy"): "iy",
        ("u", "ix"): "u", ("iy", "u"): "u",
        ("v", "iy"): "v", ("ix", "v"): "v",
        ("v", "u"): "ix", ("u", "v"): "iy",
    }
    return FinGroupoid(
        ("x", "y"), ("ix", "iy", "u", "v"),
        {"ix": "x", "iy": "y", "u": "x", "v": "y"},
        {"ix": "x", "iy": "y", "u": "y", "v": "x"},
        {"x": "ix", "y": "iy"}, compose, name="pair",
        inverse={"ix": "ix", "iy": "iy", "u": "v", "v": "u"})


def flip_plus_point():
    """An object with one nontrivial automorphism, plus a lone object."""
    compose = {
        ("ix", "ix"): "ix", ("ix", "s"): "s", ("s", "ix"): "s",
        ("s", "s"): "ix", ("iy", "iy"): "iy",
    }
    return FinGroupoid(
        ("x", "y"), ("ix", "s", "iy"),
        {"ix": "x", "s": "x", "iy": "y"},
        {"ix": "x", "s": "x", "iy": "y"},
        {"x": "ix", "y": "iy"}, compose, name="flip+pt",
        inverse={"ix": "ix", "s": "s", "iy": "iy"})


def test_groupoid_validation_and_inverse_laws():
    assert validate_groupoid(pair_groupoid()) == []
    assert validate_groupoid(flip_plus_point()) == []
    broken = pair_groupoid()
    broken.inverse["u"] = "u"
    laws = {v.law for v in validate_groupoid(broken)}
    assert "inverse-endpoints" in laws or "inverse-law" in laws
    del broken.inverse["v"]
    assert any(v.law == "inverse-totality"
               for v in validate_groupoid(broken))


def test_identity_and_skeleton_inclusion_are_equivalences():
    G = pair_groupoid()
    assert groupoid_equivalence(identity_functor(G)) == []
    skeleton = Functor(point_groupoid(), G, {"*": "x"}, {"i": "ix"},
                       name="skel")
    assert functor_violations(skeleton) == []
    assert equivalence_verdict(skeleton) == ("pass", None)


def test_collapse_of_distinct_objects_fails_faithfully():
    # the flip automorphism and the identity become parallel and equal
    F = Functor(flip_plus_point(), point_groupoid(),
                {"x": "*", "y": "*"},
                {"ix": "i", "s": "i", "iy": "i"}, name="collapse")
    assert functor_violations(F) == []
    violations = groupoid_equivalence(F)
    faithful = [v for v in violations if v.law == "faithful"]
    assert faithful
    assert set(faithful[0].witness) == {"ix", "s"}


def test_missed_component_fails_essential_surjectivity():
    disc = FinGroupoid(
        ("a", "b"), ("ia", "ib"), {"ia": "a", "ib": "b"},
        {"ia": "a", "ib": "b"}, {"a": "ia", "b": "ib"},
        {("ia", "ia"): "ia", ("ib", "ib"): "ib"}, name="disc2",
        inverse={"ia": "ia", "ib": "ib"})
    F = Functor(point_groupoid(), disc, {"*": "a"}, {"i": "ia"})
    verdict, witness = equivalence_verdict(F)
    assert verdict == "fail"
    assert witness == ("essentially-surjective", ("b",))


def test_iso_comma_over_terminal_is_the_product():
    T = point_groupoid()
    A, B = pair_groupoid(), flip_plus_point()
    FA = Functor(A, T, {a: "*" for a in A.objects},
                 {f: "i" for f in A.morphisms})
    FB = Functor(B, T, {b: "*" for b in B.objects},
                 {f: "i" for f in B.morphisms})
    IC = iso_comma(FA, FB)
    assert validate_groupoid(IC.groupoid) == []
    assert len(IC.groupoid.objects) == len(A.objects) * len(B.objects)
    assert len(IC.groupoid.morphisms) == \
        len(A.morphisms) * len(B.morphisms)
    assert functor_violations(IC.left) == []
    assert functor_violations(IC.right) == []


def test_iso_comma_of_identities_is_equivalent_to_the_groupoid():
    G = pair_groupoid()
    IC = iso_comma(identity_functor(G), identity_functor(G))
    assert validate_groupoid(IC.groupoid) == []
    diag = Functor(G, IC.groupoid,
                   {a: IC.obj_id(a, a, G.identity[a]) for a in G.objects},
                   {f: f"{f}&{f}&{G.identity[G.src[f]]}"
                    for f in G.morphisms}, name="diag")
    assert functor_violations(diag) == []
    assert equivalence_verdict(diag) == ("pass", None)


def test_iso_comma_invariant_under_natural_isomorphism():
    # F and F2 pick the two objects of a contractible groupoid; the
    # conjugation by the connecting iso matches the commas up
    C = pair_groupoid()
    T = point_groupoid()
    F = Functor(T, C, {"*": "x"}, {"i": "ix"}, name="at_x")
    F2 = Functor(T, C, {"*": "y"}, {"i": "iy"}, name="at_y")
    G = identity_functor(C)
    IC = iso_comma(F, G)
    IC2 = iso_comma(F2, G)
    send = {g: C.compose[(g, "v")] for g in C.morphisms if C.src[g] == "x"}
    on_objects = {}
    on_morphisms = {}
    for oid, (a, b, gamma) in IC.obj_data.items():
        on_objects[oid] = IC2.obj_id(a, b, send[gamma])
    for mid, (p, q, gamma) in IC.mor_data.items():
        on_morphisms[mid] = f"{p}&{q}&{send[gamma]}"
    H = Functor(IC.groupoid, IC2.groupoid, on_objects, on_morphisms)
    assert functor_violations(H) == []
    assert equivalence_verdict(H) == ("pass", None)


def test_iso_comma_invariant_under_equivalent_leg():
    # collapse of the contractible pair onto the point is an
    # equivalence; precomposing a leg with it keeps the comma equivalent
    C = pair_groupoid()
    T = point_groupoid()
    A2 = pair_groupoid()
    E = Functor(A2, T, {a: "*" for a in A2.objects},
                {f: "i" for f in A2.morphisms}, name="crush")
    assert equivalence_verdict(E) == ("pass", None)
    F = Functor(T, C, {"*": "x"}, {"i": "ix"}, name="at_x")
    G = identity_functor(C)
    IC_small = iso_comma(F, G)
    IC_big = iso_comma(compose_functors(F, E), G)
    assert len(IC_big.groupoid.objects) <= 6
    on_objects = {oid: IC_small.obj_id(E.on_objects[a], b, gamma)
                  for oid, (a, b, gamma) in IC_big.obj_data.items()}
    on_morphisms = {mid: f"{E.on_morphisms[p]}&{q}&{gamma}"
                    for mid, (p, q, gamma) in IC_big.mor_data.items()}
    H = Functor(IC_big.groupoid, IC_small.groupoid, on_objects,
                on_morphisms)
    assert functor_violations(H) == []
    assert equivalence_verdict(H) == ("pass", None)


def test_iso_comma_rejects_reserved_separator_and_non_groupoids():
    weird = FinGroupoid(("a&b",), ("j",), {"j": "a&b"}, {"j": "a&b"},
                        {"a&b": "j"}, {("j", "j"): "j"},
                        inverse={"j": "j"})
    F = identity_functor(weird)
    with pytest.raises(InputError):
        iso_comma(F, F)


def tri3():
    return coskeletal_from_graph(
        "012", [("a", "0", "1"), ("b", "0", "2"), ("c", "1", "2")], 3,
        name="tri3")


def par3():
    return coskeletal_from_graph(
        "01", [("e", "0", "1"), ("f", "0", "1")], 3, name="par3")


def test_discrete_lift_validates_and_acts_like_the_set():
    X = tri3()
    D = discrete_sgpd(X)
    assert validate_sgpd(D) == []
    from edgewise.delta import SimplexMap
    from edgewise.sset import act
    alpha = SimplexMap((0, 2), 4)    # the long-ish edge of [3]
    assert act_gpd(alpha, D).on_objects == act(alpha, X)
    with pytest.raises(InputError):
        act_gpd(SimplexMap((0,), 5), D)


def test_validator_catches_a_tampered_face_functor():
    D = discrete_sgpd(tri3())
    F = D.face[(2, 1)]
    cell = F.source.objects[0]
    other = next(o for o in F.target.objects
                 if o != F.on_objects[cell])
    F.on_objects[cell] = other
    assert validate_sgpd(D) != []


def test_subdivision_levels_reindex_and_validate():
    S = s_construction(2, 3)
    E = esd_gpd(S)
    assert E.truncation == 1
    assert E.level(0) is S.level(1)
    assert E.level(1) is S.level(3)
    assert validate_sgpd(E) == []
    with pytest.raises(InputError):
        esd_gpd(s_construction(2, 0))


def test_discrete_subdivision_matches_set_subdivision():
    X = tri3()
    E = edgewise(X)
    D = esd_gpd(discrete_sgpd(X))
    for (n, i), F in D.face.items():
        assert F.on_objects == E.face_map(n, i)
    for (n, i), F in D.degeneracy.items():
        assert F.on_objects == E.degeneracy_map(n, i)


def test_array_level_counts_and_bounds():
    S = s_construction(2, 3)
    assert validate_sgpd(S) == []
    assert [len(S.level(n).objects) for n in range(4)] == [1, 2, 3, 4]
    # every level is discrete at this cardinality
    assert [len(S.level(n).morphisms) for n in range(4)] == [1, 2, 3, 4]
    S31 = s_construction(3, 1)
    assert len(S31.level(1).objects) == 3
    assert len(S31.level(1).morphisms) == 4
    assert validate_sgpd(s_construction(3, 2)) == []
    for bad in ((0, 2), (4, 2), (2, 5), (2, -1)):
        with pytest.raises(InputError):
            s_construction(*bad)


def test_arrays_are_two_segal_but_not_segal():
    S = s_construction(2, 3)
    r = sgpd_two_segal_check(S)
    assert r.summary == {
        "check": "two_segal",
        "mode": "full",
        "overall": "pass",
        "failures": 0,
        "certified_levels": [3, 3],
    }
    assert len(r.entries) == 6
    rs = sgpd_segal_check(S)
    assert rs.overall == "fail"
    e = rs.entry("segal", (2, 1))
    assert e.verdict == "fail"
    assert e.witness[0] == "essentially-surjective"


def test_array_subdivision_passes_level_one_segal():
    r = sgpd_segal_check(esd_gpd(s_construction(2, 3)))
    assert r.overall == "pass"
    assert r.summary["certified_levels"] == [1, 1]
    assert r.semantics == "groupoid"


def test_reduced_sweep_mode_and_bad_mode():
    S = s_construction(2, 3)
    full = sgpd_two_segal_check(S, mode="full")
    reduced = sgpd_two_segal_check(S, mode="reduced")
    assert reduced.summary["overall"] == full.summary["overall"]
    assert len(reduced.entries) < len(full.entries)
    with pytest.raises(InputError):
        sgpd_two_segal_check(S, mode="partial")


@pytest.mark.parametrize("make", [tri3, par3,
                                  lambda: nerve(chain_poset(2), 3)])
def test_discrete_consistency_with_set_verdicts(make):
    X = make()
    D = discrete_sgpd(X)
    set_report = two_segal_check(X)
    gpd_report = sgpd_two_segal_check(D)
    for e in gpd_report.entries:
        assert set_report.entry(e.kind, e.indices).verdict == e.verdict
    set_segal = segal_check(X)
    gpd_segal = sgpd_segal_check(D)
    for e in gpd_segal.entries:
        assert set_segal.entry(e.kind, e.indices).verdict == e.verdict


def test_discrete_witnesses_translate():
    X = par3()
    set_entry = two_segal_check(X).entry("two_segal", (3, 0, 2))
    gpd_entry = sgpd_two_segal_check(
        discrete_sgpd(X)).entry("two_segal", (3, 0, 2))
    assert set_entry.verdict == gpd_entry.verdict == "fail"
    # a collision of distinct cells reappears as a missing hom-set image
    assert set_entry.witness[0] == "collision"
    assert gpd_entry.witness[0] == "full"
    assert set(set_entry.witness[1]) <= set(gpd_entry.witness[1][:2])


def test_comparison_functors_swap_exactly_one_tier_up():
    S = s_construction(2, 3)
    res = sgpd_beta_gamma_equality(S, 1, 1)
    assert res.verdict == "pass"
    assert res.objects_equal and res.morphisms_equal
    assert sgpd_beta_gamma_equality(S, 2, 1).verdict == "out_of_truncation"
    with pytest.raises(InputError):
        sgpd_beta_gamma_equality(S, 1, 0)


def test_discrete_beta_gamma_matches_set_tier():
    X = tri3()
    res = sgpd_beta_gamma_equality(discrete_sgpd(X), 1, 1)
    assert res.verdict == "pass"


def test_segal_map_reports_functor_sizes():
    D = discrete_sgpd(nerve(chain_poset(2), 3))
    comp = sgpd_segal_map(D, 2, 1)
    assert comp.verdict == "pass"
    assert comp.domain_size == len(D.level(2).objects)
    assert comp.codomain_size == len(comp.comma.groupoid.objects)
    with pytest.raises(InputError):
        sgpd_segal_map(D, 4, 1)
