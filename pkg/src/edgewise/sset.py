"""Truncated simplicial sets over explicit finite cell sets.

A ``TruncatedSSet`` stores cell identifiers (opaque strings) for levels
0..truncation together with total face and degeneracy tables.  All
simplicial structure is tabulated; nothing is lazy, so validation and
every downstream check are finite enumerations.

``validate`` returns a list of violations instead of raising: invalid
instances are data one can inspect, generate on purpose in tests, and
report on.  Constructors only enforce basic shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .delta import (
    SimplexMap,
    all_monotone_maps,
    codegeneracy,
    coface,
    edgewise_on_map,
    epi_mono_factorize,
)
from .errors import InputError

__all__ = [
    "Violation",
    "TruncatedSSet",
    "validate",
    "standard_simplex",
    "act",
    "Pullback",
    "strict_pullback",
    "edgewise",
    "op_reverse",
    "nondegenerate_cells",
    "SimplicialMap",
    "simplicial_map_violations",
    "iso_check",
    "edgewise_map",
    "IsoSearchResult",
    "iso_search",
]


@dataclass(frozen=True)
class Violation:
    """One failed structural requirement, pinned to its witnesses.

    ``identity`` names the requirement ("dd", "ds", "ss", "totality",
    "naturality-face", ...); ``level`` and ``indices`` locate it; ``cell``
    is the witnessing cell.
    """

    identity: str
    level: int
    indices: tuple
    cell: str
    detail: str = ""

    def __str__(self):
        where = f"level {self.level}, indices {self.indices}, cell {self.cell!r}"
        return f"[{self.identity}] {where}: {self.detail}" if self.detail \
            else f"[{self.identity}] {where}"


class TruncatedSSet:
    """Finite simplicial data up to a truncation level.

    ``levels[n]`` is the ordered tuple of cell ids at level n.  ``face``
    maps (n, i) with 1 <= n <= truncation, 0 <= i <= n to a dict from
    level-n cells to level-(n-1) cells; ``degeneracy`` maps (n, i) with
    0 <= n < truncation to a dict from level-n cells to level-(n+1)
    cells.  Treated as immutable after construction; derived objects are
    always newly built.
    """

    def __init__(self, truncation, levels, face, degeneracy, name=""):
        if not isinstance(truncation, int) or truncation < 0:
            raise InputError(f"bad truncation {truncation!r}")
        levels = tuple(tuple(lv) for lv in levels)
        if len(levels) != truncation + 1:
            raise InputError(
                f"expected {truncation + 1} levels, got {len(levels)}")
        for n, lv in enumerate(levels):
            for c in lv:
                if not isinstance(c, str):
                    raise InputError(f"cell id {c!r} at level {n} is not str")
            if len(set(lv)) != len(lv):
                raise InputError(f"duplicate cell ids at level {n}")
        self.truncation = truncation
        self.levels = levels
        self.face = {k: dict(v) for k, v in face.items()}
        self.degeneracy = {k: dict(v) for k, v in degeneracy.items()}
        self.name = name
        self._level_sets = tuple(frozenset(lv) for lv in levels)

    def level(self, n):
        if not 0 <= n <= self.truncation:
            raise InputError(f"level {n} beyond truncation {self.truncation}")
        return self.levels[n]

    def level_set(self, n):
        self.level(n)
        return self._level_sets[n]

    def face_map(self, n, i):
        if not (1 <= n <= self.truncation and 0 <= i <= n):
            raise InputError(f"face index ({n}, {i}) out of range")
        try:
            return self.face[(n, i)]
        except KeyError:
            raise InputError(f"face table ({n}, {i}) missing") from None

    def degeneracy_map(self, n, i):
        if not (0 <= n < self.truncation and 0 <= i <= n):
            raise InputError(f"degeneracy index ({n}, {i}) out of range")
        try:
            return self.degeneracy[(n, i)]
        except KeyError:
            raise InputError(f"degeneracy table ({n}, {i}) missing") from None

    def level_sizes(self):
        return tuple(len(lv) for lv in self.levels)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSSet):
            return NotImplemented
        return (self.truncation == other.truncation
                and self.levels == other.levels
                and self.face == other.face
                and self.degeneracy == other.degeneracy)

    def __repr__(self):
        label = self.name or "sset"
        return f"<{label}: levels {self.level_sizes()}>"


def _lookup(table, key):
    if table is None:
        return None
    return table.get(key)


def validate(X: TruncatedSSet):
    """All structural violations of X: totality plus simplicial identities.

    Each reported violation names the identity, the level it was checked
    at, the generator indices involved, and the witnessing cell.
    Identities are only evaluated on entries that exist; missing entries
    are themselves reported under "totality".
    """
    out = []
    N = X.truncation

    def table(kind, n, i):
        store = X.face if kind == "face" else X.degeneracy
        return store.get((n, i))

    for n in range(1, N + 1):
        for i in range(n + 1):
            t = table("face", n, i)
            if t is None:
                out.append(Violation("totality", n, (i,), "",
                                     f"face table ({n}, {i}) missing"))
                continue
            for c in X.level(n):
                v = t.get(c)
                if v is None:
                    out.append(Violation("totality", n, (i,), c,
                                         "face entry missing"))
                elif v not in X.level_set(n - 1):
                    out.append(Violation("totality", n, (i,), c,
                                         f"face value {v!r} not a cell"))
            for c in t:
                if c not in X.level_set(n):
                    out.append(Violation("stray-entry", n, (i,), c,
                                         "face key is not a cell"))
    for n in range(N):
        for i in range(n + 1):
            t = table("degeneracy", n, i)
            if t is None:
                out.append(Violation("totality", n, (i,), "",
                                     f"degeneracy table ({n}, {i}) missing"))
                continue
            for c in X.level(n):
                v = t.get(c)
                if v is None:
                    out.append(Violation("totality", n, (i,), c,
                                         "degeneracy entry missing"))
                elif v not in X.level_set(n + 1):
                    out.append(Violation("totality", n, (i,), c,
                                         f"degeneracy value {v!r} not a cell"))
            for c in t:
                if c not in X.level_set(n):
                    out.append(Violation("stray-entry", n, (i,), c,
                                         "degeneracy key is not a cell"))

    # d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, N + 1):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                dj, di = table("face", n, j), table("face", n, i)
                dil, djl = table("face", n - 1, i), table("face", n - 1, j - 1)
                for c in X.level(n):
                    lhs = _lookup(dil, _lookup(dj, c))
                    rhs = _lookup(djl, _lookup(di, c))
                    if lhs is not None and rhs is not None and lhs != rhs:
                        out.append(Violation(
                            "dd", n, (i, j), c, f"{lhs!r} != {rhs!r}"))

    # s_i s_j = s_{j+1} s_i for i <= j
    for n in range(0, N - 1):
        for i in range(n + 1):
            for j in range(i, n + 1):
                sj, si = table("degeneracy", n, j), table("degeneracy", n, i)
                sih = table("degeneracy", n + 1, i)
                sjh = table("degeneracy", n + 1, j + 1)
                for c in X.level(n):
                    lhs = _lookup(sih, _lookup(sj, c))
                    rhs = _lookup(sjh, _lookup(si, c))
                    if lhs is not None and rhs is not None and lhs != rhs:
                        out.append(Violation(
                            "ss", n, (i, j), c, f"{lhs!r} != {rhs!r}"))

    # d_i s_j: identity on the diagonal pair, shifted degeneracy otherwise
    for n in range(0, N):
        for j in range(n + 1):
            sj = table("degeneracy", n, j)
            for i in range(n + 2):
                di = table("face", n + 1, i)
                for c in X.level(n):
                    lhs = _lookup(di, _lookup(sj, c))
                    if lhs is None:
                        continue
                    if i in (j, j + 1):
                        if lhs != c:
                            out.append(Violation(
                                "ds", n, (i, j), c,
                                f"expected identity, got {lhs!r}"))
                    elif i < j:
                        rhs = _lookup(table("degeneracy", n - 1, j - 1),
                                      _lookup(table("face", n, i), c))
                        if rhs is not None and lhs != rhs:
                            out.append(Violation(
                                "ds", n, (i, j), c, f"{lhs!r} != {rhs!r}"))
                    else:
                        rhs = _lookup(table("degeneracy", n - 1, j),
                                      _lookup(table("face", n, i - 1), c))
                        if rhs is not None and lhs != rhs:
                            out.append(Violation(
                                "ds", n, (i, j), c, f"{lhs!r} != {rhs!r}"))
    return out


def standard_simplex(k: int, truncation: int) -> TruncatedSSet:
    """The k-simplex: level n holds all monotone maps [n] -> [k]."""
    if k < 0 or truncation < 0:
        raise InputError("standard_simplex needs k >= 0 and truncation >= 0")
    # digit strings up to [9], dot-separated beyond, fixed by k for the
    # whole complex so names cannot collide
    sep = "" if k <= 9 else "."
    cell = lambda vals: sep.join(str(v) for v in vals)
    levels = []
    by_level = []
    for n in range(truncation + 1):
        cells = [tuple(a.values) for a in all_monotone_maps(n, k)]
        by_level.append(cells)
        levels.append([cell(c) for c in cells])
    face = {}
    degeneracy = {}
    for n in range(1, truncation + 1):
        for i in range(n + 1):
            face[(n, i)] = {cell(c): cell(c[:i] + c[i + 1:])
                            for c in by_level[n]}
    for n in range(truncation):
        for i in range(n + 1):
            degeneracy[(n, i)] = {cell(c): cell(c[:i + 1] + c[i:])
                                  for c in by_level[n]}
    return TruncatedSSet(truncation, levels, face, degeneracy,
                         name=f"standard-simplex-{k}")


def act(alpha: SimplexMap, X: TruncatedSSet) -> dict:
    """The table of X applied to a monotone map, contravariantly.

    For alpha: [n] -> [m] the result maps level-m cells to level-n
    cells, by composing face and degeneracy tables along the epi-mono
    factorization of alpha.
    """
    n, m = alpha.dom_dim, alpha.cod_dim
    if m > X.truncation or n > X.truncation:
        raise InputError(
            f"act needs levels {n} and {m} within truncation {X.truncation}")
    cofaces, codegens = epi_mono_factorize(alpha)
    table = {c: c for c in X.level(m)}
    level = m
    try:
        for i in reversed(cofaces):
            step = X.face_map(level, i)
            table = {c: step[v] for c, v in table.items()}
            level -= 1
        for j in codegens:
            step = X.degeneracy_map(level, j)
            table = {c: step[v] for c, v in table.items()}
            level += 1
    except KeyError as exc:
        raise InputError(
            f"structure table of {X.name or 'sset'} lacks entry {exc}") from None
    return table


@dataclass
class Pullback:
    """A strict pullback of two tables with a common codomain."""

    pairs: tuple
    left: dict = field(repr=False)
    right: dict = field(repr=False)

    def size(self):
        return len(self.pairs)


def strict_pullback(f: dict, g: dict, codomain=None) -> Pullback:
    """Pairs (a, b) with f[a] == g[b], in the insertion order of f and g.

    With ``codomain`` given, both tables must take values inside it.
    """
    if codomain is not None:
        cod = set(codomain)
        for tab, side in ((f, "left"), (g, "right")):
            for v in tab.values():
                if v not in cod:
                    raise InputError(
                        f"{side} table value {v!r} outside the codomain")
    pairs = tuple((a, b) for a in f for b in g if f[a] == g[b])
    left = {p: p[0] for p in pairs}
    right = {p: p[1] for p in pairs}
    return Pullback(pairs, left, right)


def edgewise(X: TruncatedSSet) -> TruncatedSSet:
    """The edgewise subdivision: level n is X's level 2n+1.

    The result is truncated at floor((truncation - 1) / 2); structure
    tables are X acted by the subdivided generators.
    """
    if X.truncation < 1:
        raise InputError("edgewise needs truncation >= 1")
    M = (X.truncation - 1) // 2
    levels = [X.level(2 * n + 1) for n in range(M + 1)]
    face = {}
    degeneracy = {}
    for n in range(1, M + 1):
        for i in range(n + 1):
            face[(n, i)] = act(edgewise_on_map(coface(i, n)), X)
    for n in range(M):
        for i in range(n + 1):
            degeneracy[(n, i)] = act(edgewise_on_map(codegeneracy(i, n)), X)
    return TruncatedSSet(M, levels, face, degeneracy,
                         name=f"esd({X.name})" if X.name else "esd")


def op_reverse(X: TruncatedSSet) -> TruncatedSSet:
    """The reversed simplicial set: structure index i becomes n - i."""
    face = {(n, i): dict(X.face_map(n, n - i))
            for n in range(1, X.truncation + 1) for i in range(n + 1)}
    degeneracy = {(n, i): dict(X.degeneracy_map(n, n - i))
                  for n in range(X.truncation) for i in range(n + 1)}
    return TruncatedSSet(X.truncation, X.levels, face, degeneracy,
                         name=f"rev({X.name})" if X.name else "rev")


def nondegenerate_cells(X: TruncatedSSet, n: int):
    """Level-n cells that are not degeneracy images; all of level 0."""
    if n == 0:
        return X.level(0)
    degenerate = set()
    for i in range(n):
        degenerate.update(X.degeneracy_map(n - 1, i).values())
    return tuple(c for c in X.level(n) if c not in degenerate)


@dataclass
class SimplicialMap:
    """A levelwise cell assignment between equal-truncation sets."""

    source: TruncatedSSet
    target: TruncatedSSet
    components: tuple
    name: str = ""

    def component(self, n):
        return self.components[n]


def simplicial_map_violations(f: SimplicialMap):
    """Totality and naturality failures of f; empty means f is simplicial."""
    out = []
    X, Y = f.source, f.target
    if X.truncation != Y.truncation:
        return [Violation("shape", -1, (), "",
                          f"truncations {X.truncation} != {Y.truncation}")]
    if len(f.components) != X.truncation + 1:
        return [Violation("shape", -1, (), "",
                          f"expected {X.truncation + 1} components")]
    for n in range(X.truncation + 1):
        comp = f.components[n]
        for c in X.level(n):
            v = comp.get(c)
            if v is None:
                out.append(Violation("totality", n, (), c,
                                     "component entry missing"))
            elif v not in Y.level_set(n):
                out.append(Violation("totality", n, (), c,
                                     f"image {v!r} not a cell of the target"))
    for n in range(1, X.truncation + 1):
        for i in range(n + 1):
            fx, fy = X.face_map(n, i), Y.face_map(n, i)
            lo, hi = f.components[n - 1], f.components[n]
            for c in X.level(n):
                lhs = _lookup(lo, _lookup(fx, c))
                rhs = _lookup(fy, _lookup(hi, c))
                if lhs is not None and rhs is not None and lhs != rhs:
                    out.append(Violation("naturality-face", n, (i,), c,
                                         f"{lhs!r} != {rhs!r}"))
    for n in range(X.truncation):
        for i in range(n + 1):
            sx, sy = X.degeneracy_map(n, i), Y.degeneracy_map(n, i)
            lo, hi = f.components[n], f.components[n + 1]
            for c in X.level(n):
                lhs = _lookup(hi, _lookup(sx, c))
                rhs = _lookup(sy, _lookup(lo, c))
                if lhs is not None and rhs is not None and lhs != rhs:
                    out.append(Violation("naturality-degeneracy", n, (i,), c,
                                         f"{lhs!r} != {rhs!r}"))
    return out


def iso_check(f: SimplicialMap):
    """Problems preventing f from being a simplicial isomorphism.

    Empty result means: simplicial, and a levelwise bijection.  Failures
    carry witnesses (the colliding pair or the uncovered cell).
    """
    out = list(simplicial_map_violations(f))
    if any(v.identity in ("shape", "totality") for v in out):
        return out
    X, Y = f.source, f.target
    for n in range(X.truncation + 1):
        comp = f.components[n]
        seen = {}
        for c in X.level(n):
            v = comp[c]
            if v in seen:
                out.append(Violation("bijectivity", n, (), c,
                                     f"collides with {seen[v]!r} at {v!r}"))
            seen[v] = c
        for y in Y.level(n):
            if y not in seen:
                out.append(Violation("bijectivity", n, (), y,
                                     "uncovered target cell"))
    return out


def edgewise_map(f: SimplicialMap) -> SimplicialMap:
    """Reindex a simplicial map along the subdivision of its ends."""
    src = edgewise(f.source)
    tgt = edgewise(f.target)
    comps = tuple(dict(f.components[2 * n + 1])
                  for n in range(src.truncation + 1))
    return SimplicialMap(src, tgt, comps,
                         name=f"esd({f.name})" if f.name else "")


@dataclass
class IsoSearchResult:
    """Outcome of a bounded isomorphism search.

    ``status`` is "found", "none", or "inconclusive"; the last means the
    node budget ran out before the search space was exhausted, which is
    not evidence either way.
    """

    status: str
    mapping: SimplicialMap | None
    nodes: int


def _vertex_signature(X, v):
    if X.truncation < 1:
        return (0, 0)
    d0 = X.face_map(1, 0)
    d1 = X.face_map(1, 1)
    outs = sum(1 for e in X.level(1) if d1[e] == v)
    ins = sum(1 for e in X.level(1) if d0[e] == v)
    return (outs, ins)


def iso_search(X: TruncatedSSet, Y: TruncatedSSet,
               budget: int = 20000) -> IsoSearchResult:
    """Backtracking search for a simplicial isomorphism X -> Y.

    Candidates are ordered by vertex degree signatures and face
    compatibility; every attempted assignment costs one node of budget.
    """
    nodes = 0
    if X.truncation != Y.truncation or X.level_sizes() != Y.level_sizes():
        return IsoSearchResult("none", None, nodes)
    N = X.truncation

    xsig = {v: _vertex_signature(X, v) for v in X.level(0)}
    ysig = {v: _vertex_signature(Y, v) for v in Y.level(0)}
    if sorted(xsig.values()) != sorted(ysig.values()):
        return IsoSearchResult("none", None, nodes)

    # fixed processing order: level 0 by signature, higher levels as stored
    order = [(0, v) for v in sorted(X.level(0), key=lambda v: (xsig[v], v))]
    for n in range(1, N + 1):
        order += [(n, c) for c in X.level(n)]

    # target index: face tuple -> candidates, per level
    yface = {}
    for n in range(1, N + 1):
        idx = {}
        maps = [Y.face_map(n, i) for i in range(n + 1)]
        for c in Y.level(n):
            key = tuple(m[c] for m in maps)
            idx.setdefault(key, []).append(c)
        yface[n] = idx

    # forced images: a degenerate cell maps wherever its witness goes
    forced_by = {}
    for n in range(1, N + 1):
        for i in range(n):
            table = X.degeneracy_map(n - 1, i)
            for w in X.level(n - 1):
                forced_by.setdefault(table[w], (i, w))

    assign = {}
    used = [set() for _ in range(N + 1)]

    def candidates(n, c):
        if c in forced_by:
            i, w = forced_by[c]
            if w in assign:
                return [Y.degeneracy_map(n - 1, i)[assign[w]]]
        if n == 0:
            sig = xsig[c]
            return [v for v in sorted(Y.level(0), key=lambda v: (ysig[v], v))
                    if ysig[v] == sig]
        key = tuple(assign[X.face_map(n, i)[c]] for i in range(n + 1))
        return yface[n].get(key, [])

    def extend(pos):
        nonlocal nodes
        if pos == len(order):
            return True
        n, c = order[pos]
        for y in candidates(n, c):
            if y in used[n]:
                continue
            nodes += 1
            if nodes > budget:
                raise _BudgetOut
            assign[c] = y
            used[n].add(y)
            if extend(pos + 1):
                return True
            del assign[c]
            used[n].remove(y)
        return False

    try:
        found = extend(0)
    except _BudgetOut:
        return IsoSearchResult("inconclusive", None, nodes)
    if not found:
        return IsoSearchResult("none", None, nodes)
    comps = tuple({c: assign[c] for c in X.level(n)} for n in range(N + 1))
    mapping = SimplicialMap(X, Y, comps, name="iso-search")
    if iso_check(mapping):
        # the search invariants should prevent this; treat as no result
        return IsoSearchResult("none", None, nodes)
    return IsoSearchResult("found", mapping, nodes)


class _BudgetOut(Exception):
    pass
