"""Randomized law checks over the ordinal-map layer.

Exhaustive sweeps in the other modules stop at small sizes; these push
the same laws to larger random instances.  Derandomized so runs are
reproducible without a seed database.
"""

from hypothesis import given, settings, strategies as st

from edgewise.delta import (SimplexMap, compose, edgewise_join_oracle,
                            edgewise_on_map, epi_mono_factorize, identity,
                            recompose)

settings.register_profile("suite", settings(max_examples=60,
                                            derandomize=True))
settings.load_profile("suite")


@st.composite
def monotone_maps(draw, max_dim=7):
    dom = draw(st.integers(0, max_dim))
    cod = draw(st.integers(0, max_dim))
    values = sorted(draw(st.lists(st.integers(0, cod), min_size=dom + 1,
                                  max_size=dom + 1)))
    return SimplexMap(tuple(values), cod + 1)


@st.composite
def composable_pairs(draw, max_dim=6):
    f = draw(monotone_maps(max_dim))
    cod = draw(st.integers(0, max_dim))
    values = sorted(draw(st.lists(st.integers(0, cod),
                                  min_size=f.cod_dim + 1,
                                  max_size=f.cod_dim + 1)))
    return SimplexMap(tuple(values), cod + 1), f


@given(monotone_maps())
def test_factorization_recomposes(f):
    cofaces, codegens = epi_mono_factorize(f)
    assert recompose(f.dom_dim, cofaces, codegens) == f


@given(monotone_maps())
def test_factorization_shape(f):
    cofaces, codegens = epi_mono_factorize(f)
    assert len(cofaces) == f.cod_dim + 1 - len(set(f.values))
    assert len(codegens) == f.dom_dim + 1 - len(set(f.values))


@given(monotone_maps())
def test_subdivision_on_maps_matches_oracle(f):
    assert edgewise_on_map(f) == edgewise_join_oracle(f)


@given(composable_pairs())
def test_subdivision_is_functorial(pair):
    g, f = pair
    assert edgewise_on_map(compose(g, f)) == \
        compose(edgewise_on_map(g), edgewise_on_map(f))


@given(monotone_maps())
def test_identity_laws(f):
    assert compose(identity(f.cod_dim), f) == f
    assert compose(f, identity(f.dom_dim)) == f


@given(monotone_maps())
def test_subdivision_doubles_dimensions(f):
    e = edgewise_on_map(f)
    assert e.dom_dim == 2 * f.dom_dim + 1
    assert e.cod_dim == 2 * f.cod_dim + 1
