"""Finite groupoids as the homotopical semantics.

Weak equivalence means equivalence of groupoids here, and the homotopy
pullback is the iso-comma groupoid; both are decided exactly, with
witnesses.  The same Segal and 2-Segal comparisons as in the set
semantics are run one tier up, with comparison functors replacing
comparison tables.  The levelwise construction on triangular arrays of
pointed sets supplies the worked example.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as iproduct

from .cat import FinCategory, LawViolation, validate_category
from .delta import (
    SimplexMap,
    coface,
    codegeneracy,
    edgewise_on_map,
    epi_mono_factorize,
    segal_inclusions,
    two_segal_inclusions,
)
from .errors import InputError
from .sset import TruncatedSSet, Violation

__all__ = [
    "FinGroupoid",
    "validate_groupoid",
    "Functor",
    "functor_violations",
    "identity_functor",
    "compose_functors",
    "iso_classes",
    "groupoid_equivalence",
    "equivalence_verdict",
    "IsoComma",
    "iso_comma",
    "TruncatedSGpd",
    "validate_sgpd",
    "act_gpd",
    "esd_gpd",
    "discrete_sgpd",
    "SgpdComparison",
    "sgpd_segal_map",
    "sgpd_two_segal_map",
    "sgpd_segal_check",
    "sgpd_two_segal_check",
    "SgpdBetaGamma",
    "sgpd_beta_gamma_equality",
    "s_construction",
]


class FinGroupoid(FinCategory):
    """A finite category in which every morphism has a recorded inverse."""

    def __init__(self, objects, morphisms, src, tgt, identity, compose,
                 name="", inverse=None):
        super().__init__(objects, morphisms, src, tgt, identity, compose,
                         name)
        self.inverse = dict(inverse or {})


def validate_groupoid(G: FinGroupoid) -> list[LawViolation]:
    """Category laws plus two-sided invertibility of every morphism."""
    out = validate_category(G)
    for f in G.morphisms:
        g = G.inverse.get(f)
        if g is None:
            out.append(LawViolation("inverse-totality", (f,),
                                    "no inverse recorded"))
            continue
        if g not in G.morphisms:
            out.append(LawViolation("inverse-totality", (f, g),
                                    "inverse is not a morphism"))
            continue
        if G.src.get(g) != G.tgt.get(f) or G.tgt.get(g) != G.src.get(f):
            out.append(LawViolation("inverse-endpoints", (f, g), ""))
            continue
        if G.compose.get((g, f)) != G.identity.get(G.src[f]) or \
                G.compose.get((f, g)) != G.identity.get(G.tgt[f]):
            out.append(LawViolation("inverse-law", (f, g),
                                    "round trip is not the identity"))
    return out


@dataclass
class Functor:
    """Object and morphism assignments between finite categories."""

    source: FinCategory
    target: FinCategory
    on_objects: dict
    on_morphisms: dict
    name: str = ""

    def obj(self, a):
        return self.on_objects[a]

    def mor(self, f):
        return self.on_morphisms[f]

    def __repr__(self):
        return f"<functor {self.name or '?'}>"


def functor_violations(F: Functor) -> list[LawViolation]:
    """Totality, endpoint preservation, identities, and composition."""
    out = []
    for a in F.source.objects:
        b = F.on_objects.get(a)
        if b is None or b not in F.target.objects:
            out.append(LawViolation("object-totality", (a,), f"image {b!r}"))
    for f in F.source.morphisms:
        g = F.on_morphisms.get(f)
        if g is None or g not in F.target.morphisms:
            out.append(LawViolation("morphism-totality", (f,),
                                    f"image {g!r}"))
    if out:
        return out
    for f in F.source.morphisms:
        g = F.on_morphisms[f]
        if F.target.src[g] != F.on_objects[F.source.src[f]] or \
                F.target.tgt[g] != F.on_objects[F.source.tgt[f]]:
            out.append(LawViolation("endpoint-preservation", (f, g), ""))
    for a in F.source.objects:
        if F.on_morphisms[F.source.identity[a]] != \
                F.target.identity[F.on_objects[a]]:
            out.append(LawViolation("identity-preservation", (a,), ""))
    for (g, f), h in F.source.compose.items():
        expected = F.target.compose.get(
            (F.on_morphisms[g], F.on_morphisms[f]))
        if expected != F.on_morphisms[h]:
            out.append(LawViolation("composition-preservation", (g, f),
                                    f"{expected!r} != image of {h!r}"))
    return out


def identity_functor(A: FinCategory) -> Functor:
    return Functor(A, A, {a: a for a in A.objects},
                   {f: f for f in A.morphisms}, name=f"id[{A.name}]")


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G after F; sources and targets must chain."""
    if F.target is not G.source and F.target != G.source:
        raise InputError("functors do not chain")
    return Functor(F.source, G.target,
                   {a: G.on_objects[b] for a, b in F.on_objects.items()},
                   {f: G.on_morphisms[g] for f, g in F.on_morphisms.items()},
                   name=f"{G.name}.{F.name}")


def iso_classes(G: FinGroupoid) -> dict:
    """Connected components: object -> canonical representative."""
    parent = {a: a for a in G.objects}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f in G.morphisms:
        ra, rb = find(G.src[f]), find(G.tgt[f])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return {a: find(a) for a in G.objects}


def groupoid_equivalence(F: Functor) -> list[LawViolation]:
    """Empty iff F is full, faithful, and essentially surjective.

    Faithfulness witnesses are parallel pairs with equal image;
    fullness witnesses name the unreached target morphism; essential
    surjectivity witnesses name an unreached component representative.
    """
    out = []
    for a in F.source.objects:
        for b in F.source.objects:
            image = {}
            for f in F.source.hom(a, b):
                g = F.on_morphisms[f]
                if g in image:
                    out.append(LawViolation(
                        "faithful", (image[g], f), f"both map to {g!r}"))
                image.setdefault(g, f)
            for g in F.target.hom(F.on_objects[a], F.on_objects[b]):
                if g not in image:
                    out.append(LawViolation(
                        "full", (a, b, g), "no preimage in this hom-set"))
    classes = iso_classes(F.target)
    reached = {classes[F.on_objects[a]] for a in F.source.objects}
    for rep in sorted(set(classes.values())):
        if rep not in reached:
            out.append(LawViolation("essentially-surjective", (rep,),
                                    "component never hit"))
    return out


def equivalence_verdict(F: Functor):
    """Collapse the violation list to a (verdict, witness) pair."""
    violations = groupoid_equivalence(F)
    if not violations:
        return "pass", None
    v = violations[0]
    return "fail", (v.law, v.witness)


@dataclass
class IsoComma:
    """The groupoid of triples (a, b, iso F(a) -> G(b)) with projections.

    ``obj_data`` and ``mor_data`` recover the components from the
    generated ids; morphism ids carry the source iso so that equal
    component pairs starting at different isos stay distinct.
    """

    groupoid: FinGroupoid
    obj_data: dict
    mor_data: dict
    left: Functor
    right: Functor

    def obj_id(self, a, b, gamma):
        return f"{a}&{b}&{gamma}"


def iso_comma(F: Functor, G: Functor) -> IsoComma:
    """Homotopy pullback of F and G: match objects up to a chosen iso.

    The common codomain must be a groupoid; a morphism is then any pair
    of source morphisms, the companion iso at the target being solved
    uniquely by conjugation.
    """
    C = F.target
    if G.target is not C and G.target != C:
        raise InputError("iso_comma needs a common codomain")
    if not all(isinstance(E, FinGroupoid)
               for E in (C, F.source, G.source)):
        raise InputError("iso_comma needs groupoids throughout")
    for names in (F.source.objects, F.source.morphisms,
                  G.source.objects, G.source.morphisms, C.morphisms):
        for nm in names:
            if "&" in str(nm):
                raise InputError(f"name {nm!r} contains the reserved '&'")
    hom_index = {}
    for f in C.morphisms:
        hom_index.setdefault((C.src[f], C.tgt[f]), []).append(f)
    objects = []
    obj_data = {}
    obj_by_pair = {}
    for a in F.source.objects:
        for b in G.source.objects:
            key = (F.on_objects[a], G.on_objects[b])
            for gamma in hom_index.get(key, ()):
                oid = f"{a}&{b}&{gamma}"
                objects.append(oid)
                obj_data[oid] = (a, b, gamma)
                obj_by_pair.setdefault((a, b), []).append(oid)
    morphisms = []
    mor_data = {}
    src = {}
    tgt = {}
    by_signature = {}
    for p in F.source.morphisms:
        Fp_inv = C.inverse[F.on_morphisms[p]]
        for q in G.source.morphisms:
            Gq = G.on_morphisms[q]
            pair = (F.source.src[p], G.source.src[q])
            for oid in obj_by_pair.get(pair, ()):
                a, b, gamma = obj_data[oid]
                gamma2 = C.compose[(C.compose[(Gq, gamma)], Fp_inv)]
                mid = f"{p}&{q}&{gamma}"
                morphisms.append(mid)
                mor_data[mid] = (p, q, gamma)
                src[mid] = oid
                tgt[mid] = f"{F.source.tgt[p]}&{G.source.tgt[q]}&{gamma2}"
                by_signature[(p, q, oid)] = mid
    identity = {}
    for oid, (a, b, gamma) in obj_data.items():
        identity[oid] = by_signature[(F.source.identity[a],
                                      G.source.identity[b], oid)]
    by_src_obj = {}
    for mid in morphisms:
        by_src_obj.setdefault(src[mid], []).append(mid)
    compose = {}
    for m1 in morphisms:
        p1, q1, _ = mor_data[m1]
        for m2 in by_src_obj.get(tgt[m1], ()):
            p2, q2, _ = mor_data[m2]
            compose[(m2, m1)] = by_signature[(
                F.source.compose[(p2, p1)], G.source.compose[(q2, q1)],
                src[m1])]
    inverse = {}
    for mid in morphisms:
        p, q, _ = mor_data[mid]
        inverse[mid] = by_signature[(F.source.inverse[p],
                                     G.source.inverse[q], tgt[mid])]
    H = FinGroupoid(tuple(objects), tuple(morphisms), src, tgt, identity,
                    compose, name=f"({F.name})x^h({G.name})",
                    inverse=inverse)
    left = Functor(H, F.source, {o: obj_data[o][0] for o in objects},
                   {m: mor_data[m][0] for m in morphisms}, name="pr1")
    right = Functor(H, G.source, {o: obj_data[o][1] for o in objects},
                    {m: mor_data[m][1] for m in morphisms}, name="pr2")
    return IsoComma(H, obj_data, mor_data, left, right)


@dataclass
class TruncatedSGpd:
    """A truncated simplicial object in finite groupoids.

    Structure maps are functors and the simplicial identities are
    required strictly, on objects and on morphisms alike.
    """

    truncation: int
    levels: tuple
    face: dict
    degeneracy: dict
    name: str = ""

    def level(self, n) -> FinGroupoid:
        if not 0 <= n <= self.truncation:
            raise InputError(f"level {n} outside truncation")
        return self.levels[n]

    def face_functor(self, n, i) -> Functor:
        return self.face[(n, i)]

    def degeneracy_functor(self, n, i) -> Functor:
        return self.degeneracy[(n, i)]


def _functor_diff(F: Functor, G: Functor):
    for a, v in F.on_objects.items():
        if G.on_objects.get(a) != v:
            return str(a)
    for f, v in F.on_morphisms.items():
        if G.on_morphisms.get(f) != v:
            return str(f)
    if set(G.on_objects) != set(F.on_objects) or \
            set(G.on_morphisms) != set(F.on_morphisms):
        return "(domain mismatch)"
    return None


def validate_sgpd(Y: TruncatedSGpd) -> list[Violation]:
    """Valid groupoids, valid functors, strict simplicial identities."""
    out = []
    N = Y.truncation
    if len(Y.levels) != N + 1:
        return [Violation("shape", N, (), "", "level count != truncation+1")]
    for n, G in enumerate(Y.levels):
        for v in validate_groupoid(G):
            out.append(Violation("groupoid", n, (), str(v.witness), v.law))
    expected = {(n, i) for n in range(1, N + 1) for i in range(n + 1)}
    if set(Y.face) != expected:
        return out + [Violation("shape", N, (), "", "face keys wrong")]
    expected = {(n, i) for n in range(N) for i in range(n + 1)}
    if set(Y.degeneracy) != expected:
        return out + [Violation("shape", N, (), "", "degeneracy keys wrong")]
    for (n, i), F in Y.face.items():
        if F.source is not Y.levels[n] or F.target is not Y.levels[n - 1]:
            out.append(Violation("shape", n, (i,), "", "face endpoints"))
        out += [Violation("functor", n, (i,), str(v.witness), "face " + v.law)
                for v in functor_violations(F)]
    for (n, i), F in Y.degeneracy.items():
        if F.source is not Y.levels[n] or F.target is not Y.levels[n + 1]:
            out.append(Violation("shape", n, (i,), "", "degeneracy endpoints"))
        out += [Violation("functor", n, (i,), str(v.witness),
                          "degeneracy " + v.law)
                for v in functor_violations(F)]
    if out:
        return out

    def check(identity, level, indices, F, G):
        where = _functor_diff(F, G)
        if where is not None:
            out.append(Violation(identity, level, indices, where, ""))

    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                check("dd", n, (i, j),
                      compose_functors(Y.face[(n - 1, i)], Y.face[(n, j)]),
                      compose_functors(Y.face[(n - 1, j - 1)],
                                       Y.face[(n, i)]))
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                check("ss", n, (i, j),
                      compose_functors(Y.degeneracy[(n + 1, i)],
                                       Y.degeneracy[(n, j)]),
                      compose_functors(Y.degeneracy[(n + 1, j + 1)],
                                       Y.degeneracy[(n, i)]))
    for n in range(N):
        for j in range(n + 1):
            for i in range(n + 2):
                left = compose_functors(Y.face[(n + 1, i)],
                                        Y.degeneracy[(n, j)])
                if i == j or i == j + 1:
                    right = identity_functor(Y.levels[n])
                elif i < j:
                    right = compose_functors(Y.degeneracy[(n - 1, j - 1)],
                                             Y.face[(n, i)])
                else:
                    right = compose_functors(Y.degeneracy[(n - 1, j)],
                                             Y.face[(n, i - 1)])
                check("ds", n, (i, j), left, right)
    return out


def act_gpd(alpha: SimplexMap, Y: TruncatedSGpd) -> Functor:
    """The structure functor of Y at a monotone map, contravariantly."""
    n, m = alpha.dom_dim, alpha.cod_dim
    if m > Y.truncation or n > Y.truncation:
        raise InputError(
            f"act needs levels {n} and {m} within truncation {Y.truncation}")
    cofaces, codegens = epi_mono_factorize(alpha)
    out = identity_functor(Y.levels[m])
    level = m
    for i in reversed(cofaces):
        out = compose_functors(Y.face[(level, i)], out)
        level -= 1
    for j in codegens:
        out = compose_functors(Y.degeneracy[(level, j)], out)
        level += 1
    return out


def esd_gpd(Y: TruncatedSGpd) -> TruncatedSGpd:
    """Subdivision one tier up: level n is Y's level 2n+1."""
    if Y.truncation < 1:
        raise InputError("subdivision needs truncation >= 1")
    M = (Y.truncation - 1) // 2
    levels = tuple(Y.levels[2 * n + 1] for n in range(M + 1))
    face = {(n, i): act_gpd(edgewise_on_map(coface(i, n)), Y)
            for n in range(1, M + 1) for i in range(n + 1)}
    degeneracy = {(n, i): act_gpd(edgewise_on_map(codegeneracy(i, n)), Y)
                  for n in range(M) for i in range(n + 1)}
    return TruncatedSGpd(M, levels, face, degeneracy,
                         name=f"esd({Y.name})" if Y.name else "esd")


def _discrete_groupoid(cells, name):
    ident = {c: f"i({c})" for c in cells}
    morphisms = tuple(ident[c] for c in cells)
    src = {ident[c]: c for c in cells}
    return FinGroupoid(tuple(cells), morphisms, dict(src), dict(src),
                       dict(ident),
                       {(ident[c], ident[c]): ident[c] for c in cells},
                       name=name,
                       inverse={ident[c]: ident[c] for c in cells})


def discrete_sgpd(X: TruncatedSSet) -> TruncatedSGpd:
    """View a simplicial set as a levelwise-discrete simplicial groupoid."""
    levels = tuple(_discrete_groupoid(X.level(n), f"{X.name}[{n}]")
                   for n in range(X.truncation + 1))

    def lift(table, source, target):
        return Functor(source, target, dict(table),
                       {source.identity[c]: target.identity[v]
                        for c, v in table.items()})

    face = {(n, i): lift(X.face_map(n, i), levels[n], levels[n - 1])
            for n in range(1, X.truncation + 1) for i in range(n + 1)}
    degeneracy = {(n, i): lift(X.degeneracy_map(n, i), levels[n],
                               levels[n + 1])
                  for n in range(X.truncation) for i in range(n + 1)}
    return TruncatedSGpd(X.truncation, levels, face, degeneracy,
                         name=f"disc({X.name})" if X.name else "disc")


@dataclass
class SgpdComparison:
    """A comparison functor into an iso-comma, with its verdict."""

    kind: str
    indices: tuple
    functor: Functor
    comma: IsoComma
    verdict: str
    witness: tuple | None

    @property
    def domain_size(self):
        return len(self.functor.source.objects)

    @property
    def codomain_size(self):
        return len(self.comma.groupoid.objects)


def _comparison(kind, indices, Y, level_n, first, second, leg_first,
                leg_second, shared_leg):
    """Assemble the functor level_n -> iso_comma(leg_first, leg_second).

    ``first``/``second`` land in the legs' sources; ``shared_leg`` is
    the direct functor level_n -> common codomain, which must equal
    both composites strictly (the chosen iso is then an identity).
    """
    A = Y.level(level_n)
    IC = iso_comma(leg_first, leg_second)
    C = leg_first.target
    on_objects = {}
    for x in A.objects:
        a, b = first.on_objects[x], second.on_objects[x]
        if leg_first.on_objects[a] != shared_leg.on_objects[x] or \
                leg_second.on_objects[b] != shared_leg.on_objects[x]:
            raise InputError(
                f"legs disagree at object {x!r}; input is not strictly "
                "simplicial")
        gamma = C.identity[shared_leg.on_objects[x]]
        on_objects[x] = IC.obj_id(a, b, gamma)
    on_morphisms = {}
    for f in A.morphisms:
        p, q = first.on_morphisms[f], second.on_morphisms[f]
        gamma = C.identity[shared_leg.on_objects[A.src[f]]]
        on_morphisms[f] = f"{p}&{q}&{gamma}"
    H = Functor(A, IC.groupoid, on_objects, on_morphisms,
                name=f"{kind}{indices}")
    bad = functor_violations(H)
    if bad:
        raise InputError(f"comparison is not a functor: {bad[0]}")
    verdict, witness = equivalence_verdict(H)
    return SgpdComparison(kind, tuple(indices), H, IC, verdict, witness)


def _vertex(i, n):
    return SimplexMap((i,), n + 1)


def sgpd_segal_map(Y: TruncatedSGpd, m: int, j: int) -> SgpdComparison:
    """Level-m comparison functor into the iso-comma of the two faces."""
    if not 1 <= j <= m:
        raise InputError(f"need 1 <= j <= m, got ({m}, {j})")
    if m > Y.truncation:
        raise InputError(f"level {m} beyond truncation {Y.truncation}")
    front, back = segal_inclusions(m, j)
    return _comparison(
        "segal", (m, j), Y, m,
        act_gpd(front, Y), act_gpd(back, Y),
        act_gpd(_vertex(j, j), Y), act_gpd(_vertex(0, m - j), Y),
        act_gpd(_vertex(j, m), Y))


def sgpd_two_segal_map(Y: TruncatedSGpd, n: int, i: int,
                       j: int) -> SgpdComparison:
    """Polygon-subdivision comparison functor at the edge {i, j}."""
    if n > Y.truncation:
        raise InputError(f"level {n} beyond truncation {Y.truncation}")
    data = two_segal_inclusions(n, i, j)
    return _comparison(
        "two_segal", (n, i, j), Y, n,
        act_gpd(data.outer, Y), act_gpd(data.inner, Y),
        act_gpd(data.edge_in_outer, Y), act_gpd(data.edge_in_inner, Y),
        act_gpd(data.edge, Y))


def _sgpd_report(Y, entries, summary):
    from .checks import CheckEntry, CheckReport
    rows = tuple(CheckEntry(c.kind, c.indices, c.domain_size,
                            c.codomain_size, c.verdict, c.witness)
                 for c in entries)
    summary["overall"] = \
        "pass" if all(e.verdict == "pass" for e in rows) else "fail"
    summary["failures"] = sum(e.verdict != "pass" for e in rows)
    return CheckReport(Y.name or "anonymous", "groupoid", rows, summary)


def sgpd_segal_check(Y: TruncatedSGpd):
    """Equivalence verdicts for every level-splitting comparison functor."""
    entries = [sgpd_segal_map(Y, m, j)
               for m in range(1, Y.truncation + 1)
               for j in range(1, m + 1)]
    levels = [1, Y.truncation] if Y.truncation >= 1 else []
    return _sgpd_report(Y, entries, {
        "check": "segal",
        "overall": "",
        "failures": 0,
        "certified_levels": levels,
    })


def sgpd_two_segal_check(Y: TruncatedSGpd, mode: str = "full"):
    """Equivalence verdicts for the polygon comparisons, both sweep modes."""
    from .checks import _two_segal_indices
    if mode not in ("full", "reduced"):
        raise InputError(f"unknown mode {mode!r}")
    entries = [sgpd_two_segal_map(Y, n, i, j)
               for n, i, j in _two_segal_indices(Y.truncation, mode)]
    levels = [3, Y.truncation] if Y.truncation >= 3 else []
    return _sgpd_report(Y, entries, {
        "check": "two_segal",
        "mode": mode,
        "overall": "",
        "failures": 0,
        "certified_levels": levels,
    })


@dataclass(frozen=True)
class SgpdBetaGamma:
    """Nose-level match of the two comparison functors at one index."""

    m: int
    j: int
    verdict: str
    objects_equal: bool = True
    morphisms_equal: bool = True
    verdicts_equal: bool = True
    mismatch: str | None = None


def sgpd_beta_gamma_equality(Y: TruncatedSGpd, m: int,
                             j: int) -> SgpdBetaGamma:
    """The subdivision comparison equals the polygon one, factors swapped."""
    if not 1 <= j <= m:
        raise InputError(f"need 1 <= j <= m, got ({m}, {j})")
    if 2 * m + 1 > Y.truncation:
        return SgpdBetaGamma(m, j, "out_of_truncation")
    beta = sgpd_segal_map(esd_gpd(Y), m, j)
    gamma = sgpd_two_segal_map(Y, 2 * m + 1, m - j, m + j + 1)
    objects_equal = True
    morphisms_equal = True
    mismatch = None
    for x in beta.functor.source.objects:
        bi, bo, bg = beta.comma.obj_data[beta.functor.on_objects[x]]
        go, gi, gg = gamma.comma.obj_data[gamma.functor.on_objects[x]]
        if (bi, bo, bg) != (gi, go, gg):
            objects_equal = False
            mismatch = str(x)
            break
    for f in beta.functor.source.morphisms:
        bp, bq, bg = beta.comma.mor_data[beta.functor.on_morphisms[f]]
        gp, gq, gg = gamma.comma.mor_data[gamma.functor.on_morphisms[f]]
        if (bp, bq, bg) != (gq, gp, gg):
            morphisms_equal = False
            mismatch = mismatch or str(f)
            break
    verdicts_equal = beta.verdict == gamma.verdict
    ok = objects_equal and morphisms_equal and verdicts_equal
    return SgpdBetaGamma(m, j, "pass" if ok else "fail", objects_equal,
                         morphisms_equal, verdicts_equal, mismatch)


# ---------------------------------------------------------------------------
# Triangular arrays of pointed sets.
#
# A pointed set of total cardinality <= c is stored by its count of
# non-basepoint elements (0 .. c-1, basepoint implicit); a pointed map
# is a tuple over the source's non-base elements with -1 for the
# basepoint.  A level-n object is the full triangle {(i,j): i<=j<=n}
# with horizontal injections and vertical surjections, every short
# square bicartesian.


def _pcompose(g, f):
    return tuple(-1 if v == -1 else g[v] for v in f)


def _pidentity(s):
    return tuple(range(s))


@dataclass
class _Array:
    n: int
    sizes: dict     # (i,j) -> non-base count
    inj: dict       # (i,j,k) -> pointed map A_ij -> A_ik, i<=j<=k
    surj: dict      # (i,j,k) -> pointed map A_ik -> A_jk, i<=j<=k

    def signature(self):
        return (self.n, tuple(sorted(self.sizes.items())),
                tuple(sorted(self.inj.items())),
                tuple(sorted(self.surj.items())))


def _array_violations(A: _Array) -> list[str]:
    out = []
    idx = range(A.n + 1)
    for i in idx:
        if A.sizes.get((i, i)) != 0:
            out.append(f"diagonal ({i},{i}) not trivial")
    for (i, j, k), f in A.inj.items():
        if len(f) != A.sizes[(i, j)]:
            out.append(f"inj{(i, j, k)} wrong arity")
        if any(v == -1 or not 0 <= v < A.sizes[(i, k)] for v in f) or \
                len(set(f)) != len(f):
            out.append(f"inj{(i, j, k)} not a pointed injection")
    for (i, j, k), f in A.surj.items():
        if len(f) != A.sizes[(i, k)]:
            out.append(f"surj{(i, j, k)} wrong arity")
        hit = {v for v in f if v != -1}
        if hit != set(range(A.sizes[(j, k)])):
            out.append(f"surj{(i, j, k)} not onto")
    if out:
        return out
    for i in idx:
        for j in idx[i:]:
            for k in idx[j:]:
                if A.inj[(i, j, j)] != _pidentity(A.sizes[(i, j)]):
                    out.append(f"inj{(i, j, j)} not the identity")
                if A.surj[(i, i, k)] != _pidentity(A.sizes[(i, k)]):
                    out.append(f"surj{(i, i, k)} not the identity")
                fib = {x for x, v in enumerate(A.surj[(i, j, k)]) if v == -1}
                im = set(A.inj[(i, j, k)])
                if fib != im:
                    out.append(f"square {(i, j, k)} fiber != image")
                off = [v for v in A.surj[(i, j, k)] if v != -1]
                if len(set(off)) != len(off):
                    out.append(f"square {(i, j, k)} not rigid off the fiber")
                for l in idx[k:]:
                    if _pcompose(A.inj[(i, k, l)], A.inj[(i, j, k)]) != \
                            A.inj[(i, j, l)]:
                        out.append(f"inj chain {(i, j, k, l)}")
                    if _pcompose(A.surj[(j, k, l)], A.surj[(i, j, l)]) != \
                            A.surj[(i, k, l)]:
                        out.append(f"surj chain {(i, j, k, l)}")
                    if _pcompose(A.surj[(i, j, l)], A.inj[(i, k, l)]) != \
                            _pcompose(A.inj[(j, k, l)], A.surj[(i, j, k)]):
                        out.append(f"mixed square {(i, j, k, l)}")
    return out


def _pointed_injections(s, t):
    return list(permutations(range(t), s))


def _enumerate_arrays(c, n):
    if n == 0:
        yield _Array(0, {(0, 0): 0}, {(0, 0, 0): ()}, {(0, 0, 0): ()})
        return
    max_nb = c - 1
    size_chains = []

    def grow(chain):
        if len(chain) == n:
            size_chains.append(tuple(chain))
            return
        for s in range((chain[-1] if chain else 0), max_nb + 1):
            grow(chain + [s])
    grow([])

    for sizes0 in size_chains:
        full0 = (0,) + sizes0    # A_{00}..A_{0n} non-base counts
        step_pools = [_pointed_injections(full0[j - 1], full0[j])
                      for j in range(1, n + 1)]
        for steps in iproduct(*step_pools):
            inj0 = {(j, j): _pidentity(full0[j]) for j in range(n + 1)}
            for j in range(n + 1):
                for k in range(j + 1, n + 1):
                    inj0[(j, k)] = _pcompose(steps[k - 1], inj0[(j, k - 1)])
            q_pools = []
            q_keys = []
            for j in range(1, n + 1):
                for k in range(j, n + 1):
                    image = set(inj0[(j, k)])
                    rest = sorted(set(range(full0[k])) - image)
                    choices = []
                    for perm in permutations(range(len(rest))):
                        table = [-1] * full0[k]
                        for pos, x in enumerate(rest):
                            table[x] = perm[pos]
                        choices.append(tuple(table))
                    q_keys.append((j, k))
                    q_pools.append(choices)
            for qs in iproduct(*q_pools):
                q = dict(zip(q_keys, qs))
                yield _assemble_array(n, full0, inj0, q)


def _assemble_array(n, full0, inj0, q):
    sizes = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            sizes[(i, j)] = full0[j] - full0[i]
    qinv = {}
    for (j, k), table in q.items():
        qinv[(j, k)] = {v: x for x, v in enumerate(table) if v != -1}
    inj = {}
    surj = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                if i == 0:
                    inj[(i, j, k)] = inj0[(j, k)]
                    surj[(i, j, k)] = q[(j, k)] if j > 0 else \
                        _pidentity(full0[k])
                else:
                    inj[(i, j, k)] = tuple(
                        q[(i, k)][inj0[(j, k)][qinv[(i, j)][x]]]
                        for x in range(sizes[(i, j)]))
                    surj[(i, j, k)] = tuple(
                        (q[(j, k)][qinv[(i, k)][x]] if j < k else -1)
                        if j > i else x
                        for x in range(sizes[(i, k)]))
    A = _Array(n, sizes, inj, surj)
    bad = _array_violations(A)
    if bad:
        raise RuntimeError(f"derived array is incoherent: {bad[0]}")
    return A


def _array_pullback(A: _Array, alpha_values, m) -> _Array:
    """Reindex along a monotone map [m] -> [n]; duplicates collapse."""
    val = alpha_values
    sizes = {(p, r): A.sizes[(val[p], val[r])]
             for p in range(m + 1) for r in range(p, m + 1)}
    inj = {(p, r, s): A.inj[(val[p], val[r], val[s])]
           for p in range(m + 1) for r in range(p, m + 1)
           for s in range(r, m + 1)}
    surj = {(p, r, s): A.surj[(val[p], val[r], val[s])]
            for p in range(m + 1) for r in range(p, m + 1)
            for s in range(r, m + 1)}
    return _Array(m, sizes, inj, surj)


def _slots(n):
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


def _family_commutes(A, B, fam):
    for (i, j, k) in A.inj:
        phi_ij = fam[(i, j)] if i != j else ()
        phi_ik = fam[(i, k)] if i != k else ()
        if _pcompose(phi_ik, A.inj[(i, j, k)]) != \
                _pcompose(B.inj[(i, j, k)], phi_ij):
            return False
        phi_jk = fam[(j, k)] if j != k else ()
        if _pcompose(phi_jk, A.surj[(i, j, k)]) != \
                _pcompose(B.surj[(i, j, k)], phi_ik):
            return False
    return True


def _level_groupoid(c, n, name):
    arrays = list(_enumerate_arrays(c, n))
    obj_id = {}
    objects = []
    for idx, A in enumerate(arrays):
        oid = f"x{idx}"
        obj_id[A.signature()] = oid
        objects.append(oid)
    by_obj = dict(zip(objects, arrays))
    morphisms = []
    mor_data = {}
    src = {}
    tgt = {}
    by_signature = {}
    slots = _slots(n)
    for o1, A in by_obj.items():
        for o2, B in by_obj.items():
            if any(A.sizes[s] != B.sizes[s] for s in slots):
                continue
            pools = [permutations(range(A.sizes[s])) for s in slots]
            for perms in iproduct(*pools):
                fam = dict(zip(slots, perms))
                if not _family_commutes(A, B, fam):
                    continue
                mid = f"m{len(morphisms)}"
                morphisms.append(mid)
                key = (o1, o2, tuple(fam[s] for s in slots))
                mor_data[mid] = key
                src[mid] = o1
                tgt[mid] = o2
                by_signature[key] = mid
    identity = {}
    for o, A in by_obj.items():
        key = (o, o, tuple(_pidentity(A.sizes[s]) for s in slots))
        identity[o] = by_signature[key]
    compose = {}
    inverse = {}
    for m2 in morphisms:
        o2a, o2b, fam2 = mor_data[m2]
        for m1 in morphisms:
            o1a, o1b, fam1 = mor_data[m1]
            if o1b != o2a:
                continue
            composed = tuple(_pcompose(f2, f1)
                             for f2, f1 in zip(fam2, fam1))
            compose[(m2, m1)] = by_signature[(o1a, o2b, composed)]
    for m in morphisms:
        oa, ob, fam = mor_data[m]
        inv = tuple(tuple(sorted(range(len(p)), key=lambda x: p[x]))
                    for p in fam)
        inverse[m] = by_signature[(ob, oa, inv)]
    G = FinGroupoid(tuple(objects), tuple(morphisms), src, tgt, identity,
                    compose, name=name, inverse=inverse)
    return G, by_obj, obj_id, mor_data, by_signature, slots


def s_construction(max_card: int, truncation: int) -> TruncatedSGpd:
    """Levelwise groupoids of coherent triangular arrays of pointed sets.

    The universe is pointed sets of total cardinality at most
    ``max_card`` (basepoint included).  Faces delete an index of the
    triangle, degeneracies duplicate one; both are strict relabelings,
    so the simplicial identities hold on the nose.
    """
    if not 1 <= max_card <= 3:
        raise InputError("max_card must be between 1 and 3")
    if not 0 <= truncation <= 4:
        raise InputError("truncation must be between 0 and 4")
    built = [_level_groupoid(max_card, n, f"S{n}")
             for n in range(truncation + 1)]
    levels = tuple(b[0] for b in built)

    def transport(n, values, m):
        """Functor level n -> level m reindexing along [m] -> [n]."""
        G, by_obj, _, mor_data, _, slots = built[n]
        _, _, t_obj_id, _, t_by_signature, t_slots = built[m]
        on_objects = {}
        for o, A in by_obj.items():
            on_objects[o] = t_obj_id[_array_pullback(A, values, m)
                                     .signature()]
        on_morphisms = {}
        for mid, (o1, o2, fams) in mor_data.items():
            fam = dict(zip(slots, fams))
            new_fam = tuple(
                (fam[(values[i], values[j])]
                 if values[i] != values[j] else ())
                for (i, j) in t_slots)
            key = (on_objects[o1], on_objects[o2], new_fam)
            on_morphisms[mid] = t_by_signature[key]
        return Functor(G, built[m][0], on_objects, on_morphisms,
                       name=f"S({values})")

    face = {}
    degeneracy = {}
    for n in range(1, truncation + 1):
        for i in range(n + 1):
            keep = tuple(v for v in range(n + 1) if v != i)
            face[(n, i)] = transport(n, keep, n - 1)
    for n in range(truncation):
        for i in range(n + 1):
            values = tuple(v if v <= i else v - 1 for v in range(n + 2))
            degeneracy[(n, i)] = transport(n, values, n + 1)
    return TruncatedSGpd(truncation, levels, face, degeneracy,
                         name=f"s_construction({max_card})")
