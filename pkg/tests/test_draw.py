"""Diagram emitter: cell counts, determinism, and size limits."""

import pytest

from edgewise.cat import bar, truncated_free_monoid
from edgewise.draw import emit_diagram, subdivided_simplex
from edgewise.errors import InputError
from edgewise.sset import nondegenerate_cells, standard_simplex


def test_top_cell_counts_double_per_dimension():
    for k in (1, 2, 3, 4):
        X = subdivided_simplex(k)
        assert len(nondegenerate_cells(X, k)) == 2 ** k


def test_square_figure_counts():
    text = emit_diagram(2)
    assert "// nodes: 6" in text
    assert "// edges: 9" in text
    assert text.count("\n  // \"") == 4


def test_emitter_is_deterministic():
    assert emit_diagram(3) == emit_diagram(3)
    assert emit_diagram(subdivided_simplex(2)) == emit_diagram(2)


def test_plain_simplex_diagram():
    text = emit_diagram(standard_simplex(2, 2))
    assert '"0" -- "1";  // "01"' in text
    assert '// "012": 0, 1, 2' in text


def test_range_and_size_limits():
    with pytest.raises(InputError):
        subdivided_simplex(0)
    with pytest.raises(InputError):
        subdivided_simplex(5)
    with pytest.raises(InputError):
        emit_diagram("nonsense")
    with pytest.raises(InputError, match="limited"):
        emit_diagram(bar(truncated_free_monoid(3), 6))
