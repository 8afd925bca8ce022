"""Finite categories, partial monoids, and their simplicial incarnations.

Composition is always written ``compose[(g, f)]`` for "g after f".  Cell
identifiers of nerves and bar constructions are pipe-joined strings of
morphism or element names; twisted-arrow and span morphisms are
colon-joined triples.  Constructors reject names containing the
separator they would need, so generated identifiers never collide.

Partial monoids here satisfy the two-sided unit law and the strong
associativity axiom: for any triple, definedness of one bracketing
(including its outer product) is equivalent to definedness of the
other, and the results agree.  ``validate_partial_monoid`` checks
exactly that; the bar construction relies on it to keep its face
tables total.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .sset import SimplicialMap, TruncatedSSet, edgewise

__all__ = [
    "LawViolation",
    "FinCategory",
    "validate_category",
    "opposite_category",
    "nerve",
    "twisted_arrow",
    "canonical_tw_iso",
    "PartialMonoid",
    "validate_partial_monoid",
    "bar",
    "span_category",
    "canonical_partial_iso",
    "truncated_free_monoid",
    "cyclic_monoid",
    "monoid_category",
    "poset_category",
    "chain_poset",
    "product_category",
]


@dataclass(frozen=True)
class LawViolation:
    """A failed law together with the witnessing tuple."""

    law: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        return f"[{self.law}] at {self.witness}" + \
            (f": {self.detail}" if self.detail else "")


def _check_names(names, forbidden, what):
    for name in names:
        if not isinstance(name, str) or not name:
            raise InputError(f"{what} id {name!r} must be a nonempty string")
        for ch in forbidden:
            if ch in name:
                raise InputError(
                    f"{what} id {name!r} contains reserved character {ch!r}")


class FinCategory:
    """A finite category given by explicit tables.

    ``compose`` is keyed by (g, f) pairs of morphism ids and must be
    defined exactly on composable pairs; ``validate_category`` reports
    where that or any law fails.
    """

    def __init__(self, objects, morphisms, src, tgt, identity, compose,
                 name=""):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        _check_names(self.objects, ",", "object")
        _check_names(self.morphisms, ",", "morphism")
        if len(set(self.objects)) != len(self.objects):
            raise InputError("duplicate object ids")
        if len(set(self.morphisms)) != len(self.morphisms):
            raise InputError("duplicate morphism ids")
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.identity = dict(identity)
        self.compose = dict(compose)
        self.name = name
        obset, morset = set(self.objects), set(self.morphisms)
        for f in self.morphisms:
            if self.src.get(f) not in obset or self.tgt.get(f) not in obset:
                raise InputError(f"morphism {f!r} lacks valid endpoints")
        for x in self.objects:
            if self.identity.get(x) not in morset:
                raise InputError(f"object {x!r} lacks an identity morphism")

    def hom(self, a, b):
        return tuple(f for f in self.morphisms
                     if self.src[f] == a and self.tgt[f] == b)

    def composable(self, g, f):
        return self.src[g] == self.tgt[f]

    def __repr__(self):
        label = self.name or "category"
        return f"<{label}: {len(self.objects)} objects, " \
               f"{len(self.morphisms)} morphisms>"


def validate_category(A: FinCategory):
    """Law violations of A: composability, endpoints, units, associativity."""
    out = []
    for x in A.objects:
        i = A.identity[x]
        if A.src[i] != x or A.tgt[i] != x:
            out.append(LawViolation("identity-endpoints", (x,),
                                    f"identity {i!r} not an endomorphism"))
    for g in A.morphisms:
        for f in A.morphisms:
            defined = (g, f) in A.compose
            if defined != A.composable(g, f):
                out.append(LawViolation(
                    "composability", (g, f),
                    "defined" if defined else "missing"))
                continue
            if not defined:
                continue
            h = A.compose[(g, f)]
            if h not in set(A.morphisms):
                out.append(LawViolation("composability", (g, f),
                                        f"composite {h!r} unknown"))
            elif A.src[h] != A.src[f] or A.tgt[h] != A.tgt[g]:
                out.append(LawViolation("composite-endpoints", (g, f), h))
    for f in A.morphisms:
        left = A.compose.get((f, A.identity[A.src[f]]))
        right = A.compose.get((A.identity[A.tgt[f]], f))
        if left != f:
            out.append(LawViolation("unit", (f,), f"right unit gave {left!r}"))
        if right != f:
            out.append(LawViolation("unit", (f,), f"left unit gave {right!r}"))
    for h in A.morphisms:
        for g in A.morphisms:
            if not A.composable(h, g):
                continue
            hg = A.compose.get((h, g))
            for f in A.morphisms:
                if not A.composable(g, f):
                    continue
                gf = A.compose.get((g, f))
                lhs = A.compose.get((h, gf)) if gf is not None else None
                rhs = A.compose.get((hg, f)) if hg is not None else None
                if lhs != rhs:
                    out.append(LawViolation("associativity", (h, g, f),
                                            f"{lhs!r} != {rhs!r}"))
    return out


def opposite_category(A: FinCategory) -> FinCategory:
    """Same names, arrows reversed."""
    return FinCategory(
        A.objects, A.morphisms, dict(A.tgt), dict(A.src), dict(A.identity),
        {(f, g): h for (g, f), h in A.compose.items()},
        name=f"op({A.name})" if A.name else "op")


def nerve(A: FinCategory, truncation: int) -> TruncatedSSet:
    """Composable strings of A as a truncated simplicial set.

    Level n cells are pipe-joined strings of n composable morphisms
    (objects at level 0); inner faces compose adjacent entries, outer
    faces drop an end, degeneracies insert identities.
    """
    _check_names(A.objects, "|", "object")
    _check_names(A.morphisms, "|", "morphism")
    if truncation < 0:
        raise InputError("negative truncation")
    by_tuple = [[()], [(f,) for f in A.morphisms]]
    for n in range(2, truncation + 1):
        by_tuple.append([s + (f,) for s in by_tuple[n - 1]
                         for f in A.morphisms
                         if A.src[f] == A.tgt[s[-1]]])
    levels = [list(A.objects)]
    for n in range(1, truncation + 1):
        levels.append(["|".join(s) for s in by_tuple[n]])

    def vertex(s, i):
        # the i-th object visited by the string s
        return A.src[s[0]] if i == 0 else A.tgt[s[i - 1]]

    face = {}
    degeneracy = {}
    for n in range(1, truncation + 1):
        for i in range(n + 1):
            table = {}
            for s in by_tuple[n]:
                if n == 1:
                    table["|".join(s)] = vertex(s, 1 - i)
                elif i == 0:
                    table["|".join(s)] = "|".join(s[1:])
                elif i == n:
                    table["|".join(s)] = "|".join(s[:-1])
                else:
                    merged = s[:i - 1] + (A.compose[(s[i], s[i - 1])],) + \
                        s[i + 1:]
                    table["|".join(s)] = "|".join(merged)
            face[(n, i)] = table
    for n in range(truncation):
        for i in range(n + 1):
            if n == 0:
                degeneracy[(0, 0)] = {x: A.identity[x] for x in A.objects}
            else:
                degeneracy[(n, i)] = {
                    "|".join(s):
                    "|".join(s[:i] + (A.identity[vertex(s, i)],) + s[i:])
                    for s in by_tuple[n]}
    return TruncatedSSet(truncation, levels, face, degeneracy,
                         name=f"nerve({A.name or 'category'})")


def _escape(part):
    # ":" separates triple components, so literal occurrences are escaped;
    # the construction then iterates (ids of ids stay unambiguous)
    return part.replace("\\", "\\\\").replace(":", "\\:")


def _triple_id(f, u, v):
    return f"{_escape(f)}:{_escape(u)}:{_escape(v)}"


def twisted_arrow(A: FinCategory) -> FinCategory:
    """Objects are the morphisms of A; maps are two-sided factorizations.

    A morphism f -> g is a pair (u, v) with g = v o f o u, stored as the
    triple id "f:u:v" with escaped components; composition whiskers on
    both sides, contravariantly in u.
    """
    objects = tuple(A.morphisms)
    morphisms = []
    src = {}
    tgt = {}
    triple = {}
    for f in A.morphisms:
        for u in A.morphisms:
            if A.tgt[u] != A.src[f]:
                continue
            fu = A.compose[(f, u)]
            for v in A.morphisms:
                if A.src[v] != A.tgt[f]:
                    continue
                t = _triple_id(f, u, v)
                morphisms.append(t)
                src[t] = f
                tgt[t] = A.compose[(v, fu)]
                triple[t] = (f, u, v)
    identity = {f: _triple_id(f, A.identity[A.src[f]], A.identity[A.tgt[f]])
                for f in A.morphisms}
    compose = {}
    for t2 in morphisms:
        g2, u2, v2 = triple[t2]
        for t1 in morphisms:
            f1, u1, v1 = triple[t1]
            if tgt[t1] != g2:
                continue
            compose[(t2, t1)] = _triple_id(
                f1, A.compose[(u1, u2)], A.compose[(v2, v1)])
    return FinCategory(objects, morphisms, src, tgt, identity, compose,
                       name=f"tw({A.name})" if A.name else "tw")


def canonical_tw_iso(A: FinCategory, truncation: int) -> SimplicialMap:
    """The comparison from the subdivided nerve to the twisted-arrow nerve.

    A string of 2n+1 composable morphisms maps to the string of nested
    composites read outward from the middle entry.
    """
    source = edgewise(nerve(A, 2 * truncation + 1))
    target = nerve(twisted_arrow(A), truncation)
    comps = [{c: c for c in source.level(0)}]
    for n in range(1, truncation + 1):
        comp = {}
        for c in source.level(n):
            fs = c.split("|")
            mid = fs[n]
            entries = []
            g = mid
            for i in range(1, n + 1):
                u, v = fs[n - i], fs[n + i]
                entries.append(_triple_id(g, u, v))
                g = A.compose[(v, A.compose[(g, u)])]
            comp[c] = "|".join(entries)
        comps.append(comp)
    return SimplicialMap(source, target, tuple(comps),
                         name=f"tw-comparison({A.name})")


class PartialMonoid:
    """A finite set with unit and a partially defined product table."""

    def __init__(self, elements, unit, product, name=""):
        self.elements = tuple(elements)
        _check_names(self.elements, ",", "element")
        if len(set(self.elements)) != len(self.elements):
            raise InputError("duplicate element ids")
        if unit not in set(self.elements):
            raise InputError(f"unit {unit!r} is not an element")
        self.unit = unit
        self.product = dict(product)
        self.name = name
        elset = set(self.elements)
        for (a, b), c in self.product.items():
            if a not in elset or b not in elset or c not in elset:
                raise InputError(f"product entry ({a!r}, {b!r}) -> {c!r} "
                                 "names unknown elements")

    def defined(self, a, b):
        return (a, b) in self.product

    def multiply(self, a, b):
        return self.product.get((a, b))

    def __repr__(self):
        label = self.name or "partial monoid"
        return f"<{label}: {len(self.elements)} elements, " \
               f"{len(self.product)} products>"


def validate_partial_monoid(M: PartialMonoid):
    """Unit laws plus strong associativity, with witnessing tuples.

    Strong associativity: for every triple, the left-nested bracketing
    is defined exactly when the right-nested one is, and then they
    agree.  This is deliberately stricter than requiring agreement only
    when both sides happen to exist; the bar construction needs it.
    """
    out = []
    e = M.unit
    for a in M.elements:
        if M.multiply(e, a) != a:
            out.append(LawViolation("unit", (e, a), f"{M.multiply(e, a)!r}"))
        if M.multiply(a, e) != a:
            out.append(LawViolation("unit", (a, e), f"{M.multiply(a, e)!r}"))
    for a in M.elements:
        for b in M.elements:
            ab = M.multiply(a, b)
            for c in M.elements:
                bc = M.multiply(b, c)
                left = M.multiply(ab, c) if ab is not None else None
                right = M.multiply(a, bc) if bc is not None else None
                left_def = ab is not None and left is not None
                right_def = bc is not None and right is not None
                if left_def != right_def:
                    out.append(LawViolation(
                        "strong-associativity", (a, b, c),
                        "left defined" if left_def else "right defined"))
                elif left_def and left != right:
                    out.append(LawViolation(
                        "associativity-value", (a, b, c),
                        f"{left!r} != {right!r}"))
    return out


def _progressive_tuples(M: PartialMonoid, length: int):
    """Tuples whose left-nested products are defined at every step.

    Yields (tuple, running product).  Length 0 gives the empty tuple
    with the unit as its product.
    """
    if length == 0:
        yield (), M.unit
        return
    for prefix, run in _progressive_tuples(M, length - 1):
        if not prefix:
            for m in M.elements:
                yield (m,), m
            return
        for m in M.elements:
            prod = M.multiply(run, m)
            if prod is not None:
                yield prefix + (m,), prod


def bar(M: PartialMonoid, truncation: int) -> TruncatedSSet:
    """The bar construction: level n holds progressively defined tuples.

    Inner faces multiply adjacent entries; with strong associativity the
    results stay progressively defined, so the tables come out total.
    Without it, entries whose products do not exist are simply omitted
    and ``validate`` on the result reports them.
    """
    _check_names(M.elements, "|", "element")
    if truncation < 0:
        raise InputError("negative truncation")
    by_tuple = [[t for t, _ in _progressive_tuples(M, n)]
                for n in range(truncation + 1)]
    levels = [["*"]] + [["|".join(t) for t in by_tuple[n]]
                        for n in range(1, truncation + 1)]
    level_sets = [set(lv) for lv in levels]

    def put(table, t, parts, n):
        # record only entries that land on existing cells; validation
        # surfaces the gaps for defective inputs
        if parts is None:
            return
        cell = "|".join(parts) if parts else "*"
        if cell in level_sets[n]:
            table["|".join(t) if t else "*"] = cell

    face = {}
    degeneracy = {}
    for n in range(1, truncation + 1):
        for i in range(n + 1):
            table = {}
            for t in by_tuple[n]:
                if n == 1:
                    table["|".join(t)] = "*"
                elif i == 0:
                    put(table, t, t[1:], n - 1)
                elif i == n:
                    put(table, t, t[:-1], n - 1)
                else:
                    prod = M.multiply(t[i - 1], t[i])
                    merged = None if prod is None else \
                        t[:i - 1] + (prod,) + t[i + 1:]
                    put(table, t, merged, n - 1)
            face[(n, i)] = table
    for n in range(truncation):
        for i in range(n + 1):
            if n == 0:
                degeneracy[(0, 0)] = {"*": M.unit}
            else:
                degeneracy[(n, i)] = {
                    "|".join(t): "|".join(t[:i] + (M.unit,) + t[i:])
                    for t in by_tuple[n]}
    return TruncatedSSet(truncation, levels, face, degeneracy,
                         name=f"bar({M.name or 'monoid'})")


def span_category(M: PartialMonoid) -> FinCategory:
    """Elements as objects; two-sided multiplications as morphisms.

    A morphism m -> m' is a triple (m1, m, m2) with m1*m*m2 = m',
    progressively defined; composition multiplies the outer factors
    outward.  Requires a strongly associative M.
    """
    objects = tuple(M.elements)
    morphisms = []
    src = {}
    tgt = {}
    triple = {}
    for m1 in M.elements:
        for m in M.elements:
            m1m = M.multiply(m1, m)
            if m1m is None:
                continue
            for m2 in M.elements:
                full = M.multiply(m1m, m2)
                if full is None:
                    continue
                t = _triple_id(m1, m, m2)
                morphisms.append(t)
                src[t] = m
                tgt[t] = full
                triple[t] = (m1, m, m2)
    identity = {m: _triple_id(M.unit, m, M.unit) for m in M.elements}
    compose = {}
    for t2 in morphisms:
        n1, _, n2 = triple[t2]
        for t1 in morphisms:
            m1, m, m2 = triple[t1]
            if src[t2] != tgt[t1]:
                continue
            outer_left = M.multiply(n1, m1)
            outer_right = M.multiply(m2, n2)
            if outer_left is None or outer_right is None:
                raise InputError(
                    f"span composition undefined on ({t2}, {t1}); "
                    "is the monoid strongly associative?")
            compose[(t2, t1)] = _triple_id(outer_left, m, outer_right)
    return FinCategory(objects, morphisms, src, tgt, identity, compose,
                       name=f"spans({M.name})" if M.name else "spans")


def canonical_partial_iso(M: PartialMonoid, truncation: int) -> SimplicialMap:
    """Comparison from the subdivided bar construction to the span nerve.

    A tuple of odd length maps to the string of span morphisms obtained
    by multiplying outward from the middle entry.
    """
    source = edgewise(bar(M, 2 * truncation + 1))
    target = nerve(span_category(M), truncation)
    comps = [{c: c for c in source.level(0)}]
    for n in range(1, truncation + 1):
        comp = {}
        for c in source.level(n):
            ms = c.split("|")
            entries = []
            g = ms[n]
            for i in range(1, n + 1):
                m1, m2 = ms[n - i], ms[n + i]
                entries.append(_triple_id(m1, g, m2))
                g = M.multiply(M.multiply(m1, g), m2)
            comp[c] = "|".join(entries)
        comps.append(comp)
    return SimplicialMap(source, target, tuple(comps),
                         name=f"span-comparison({M.name})")


def truncated_free_monoid(k: int) -> PartialMonoid:
    """Powers of one generator up to k; higher products are undefined."""
    if k < 0:
        raise InputError("need k >= 0")
    names = ["e"] + ["a" if p == 1 else f"a{p}" for p in range(1, k + 1)]
    product = {}
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            if i + j <= k:
                product[(a, b)] = names[i + j]
    return PartialMonoid(names, "e", product, name=f"tfm{k}")


def cyclic_monoid(n: int) -> PartialMonoid:
    """The cyclic group of order n as a total partial monoid."""
    if n < 1:
        raise InputError("need n >= 1")
    names = ["e"] + ["g" if p == 1 else f"g{p}" for p in range(1, n)]
    product = {(names[i], names[j]): names[(i + j) % n]
               for i in range(n) for j in range(n)}
    return PartialMonoid(names, "e", product, name=f"cyclic{n}")


def monoid_category(M: PartialMonoid) -> FinCategory:
    """A total monoid as a one-object category.

    Elements become endomorphisms; a path reads left to right, so
    composing g after f multiplies f * g.
    """
    for a in M.elements:
        for b in M.elements:
            if not M.defined(a, b):
                raise InputError(
                    f"monoid_category needs a total product; "
                    f"({a!r}, {b!r}) is undefined")
    compose = {(g, f): M.product[(f, g)]
               for g in M.elements for f in M.elements}
    return FinCategory(
        ("o",), M.elements, {m: "o" for m in M.elements},
        {m: "o" for m in M.elements}, {"o": M.unit}, compose,
        name=f"B({M.name})" if M.name else "B")


def poset_category(elements, leq, name="") -> FinCategory:
    """A finite poset as a category with at most one map between objects.

    ``leq`` is the set of (a, b) pairs with a <= b; it must be
    reflexive, antisymmetric, and transitive.
    """
    elements = tuple(elements)
    rel = set(leq)
    for a in elements:
        if (a, a) not in rel:
            raise InputError(f"relation is not reflexive at {a!r}")
    for a, b in rel:
        if (b, a) in rel and a != b:
            raise InputError(f"relation is not antisymmetric at ({a!r}, {b!r})")
        for c in elements:
            if (b, c) in rel and (a, c) not in rel:
                raise InputError(
                    f"relation is not transitive at ({a!r}, {b!r}, {c!r})")
    morphisms = [f"{a}<{b}" for a, b in sorted(rel)]
    src = {f"{a}<{b}": a for a, b in rel}
    tgt = {f"{a}<{b}": b for a, b in rel}
    identity = {a: f"{a}<{a}" for a in elements}
    compose = {(f"{b}<{c}", f"{a}<{b0}"): f"{a}<{c}"
               for a, b0 in rel for b, c in rel if b0 == b}
    return FinCategory(elements, morphisms, src, tgt, identity, compose,
                       name=name or "poset")


def chain_poset(n: int) -> FinCategory:
    """The linear order 0 < 1 < ... < n as a category."""
    elements = tuple(str(i) for i in range(n + 1))
    leq = {(str(i), str(j)) for i in range(n + 1) for j in range(i, n + 1)}
    return poset_category(elements, leq, name=f"chain{n}")


def product_category(A: FinCategory, B: FinCategory) -> FinCategory:
    """The product, with star-joined component names."""
    for pool in (A.objects, A.morphisms, B.objects, B.morphisms):
        _check_names(pool, "*", "component")
    objects = tuple(f"{x}*{y}" for x in A.objects for y in B.objects)
    morphisms = tuple(f"{f}*{g}" for f in A.morphisms for g in B.morphisms)
    src = {f"{f}*{g}": f"{A.src[f]}*{B.src[g]}"
           for f in A.morphisms for g in B.morphisms}
    tgt = {f"{f}*{g}": f"{A.tgt[f]}*{B.tgt[g]}"
           for f in A.morphisms for g in B.morphisms}
    identity = {f"{x}*{y}": f"{A.identity[x]}*{B.identity[y]}"
                for x in A.objects for y in B.objects}
    compose = {}
    for (g1, f1), h1 in A.compose.items():
        for (g2, f2), h2 in B.compose.items():
            compose[(f"{g1}*{g2}", f"{f1}*{f2}")] = f"{h1}*{h2}"
    return FinCategory(objects, morphisms, src, tgt, identity, compose,
                       name=f"{A.name}x{B.name}")
