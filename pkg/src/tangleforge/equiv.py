"""Pairs and triples of bounding homomorphisms, their pushouts, invariants and moves."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .presentation import (AbelianInvariants, Presentation, SimplifyResult,
                           abelianization, free_reduce, invert, simplify)
from .surface import (BoundingReport, FreeTargetHom, IllDefinedHom, SurfaceSignature,
                      arc_matching, associated_closed, verify_bounding)
from .unionfind import UnionFind
from .words import (EMPTY, Generator, Word, a, b, cyclic_reduce, h, is_conjugate, p,
                    substitute, t)

FLAVORS = ("Alg3", "Alg31", "Alg4", "Alg42")
DEFAULT_BUDGET = 100_000


class MoveRejected(ValueError):
    pass


class Inconclusive(MoveRejected):
    """The automorphism check could not certify the given map."""


def flavor_for(arity: int, bridges: int) -> str:
    if arity == 2:
        return "Alg3" if bridges == 0 else "Alg31"
    if arity == 3:
        return "Alg4" if bridges == 0 else "Alg42"
    raise ValueError(f"tuples have two or three homomorphisms, got {arity}")


@dataclass(frozen=True)
class SplittingTuple:
    homs: tuple[FreeTargetHom, ...]

    def __post_init__(self):
        object.__setattr__(self, "homs", tuple(self.homs))
        if len(self.homs) not in (2, 3):
            raise ValueError(f"tuples have two or three homomorphisms, got {len(self.homs)}")
        sigs = {phi.sig for phi in self.homs}
        if len(sigs) != 1:
            raise ValueError("all homomorphisms of a tuple must share genus and bridge count")

    @property
    def sig(self) -> SurfaceSignature:
        return self.homs[0].sig

    @property
    def arity(self) -> int:
        return len(self.homs)

    @property
    def flavor(self) -> str:
        return flavor_for(self.arity, self.sig.bridges)

    def __getitem__(self, i: int) -> FreeTargetHom:
        """1-based access, matching phi1, phi2, phi3."""
        return self.homs[i - 1]

    def replace(self, i: int, phi: FreeTargetHom) -> "SplittingTuple":
        homs = list(self.homs)
        homs[i - 1] = phi
        return SplittingTuple(tuple(homs))


# pushouts

def _encode(w: Word, offset: dict[Generator, int]) -> list[int]:
    return [offset[g] * s for g, s in w]


def _pushout(homs: Sequence[FreeTargetHom], labels: Sequence[int],
             chain: Sequence[tuple[int, int]]) -> Presentation:
    names: list[str] = []
    codes: list[dict[Generator, int]] = []
    for phi, k in zip(homs, labels):
        code = {}
        for g in phi.sig.target_generators():
            names.append(f"{g}.{k}")
            code[g] = len(names)
        codes.append(code)
    rels = []
    for x in homs[0].sig.domain_generators():
        for i, j in chain:
            r = free_reduce(_encode(homs[i][x], codes[i]) + list(invert(_encode(homs[j][x], codes[j]))))
            rels.append(r)
    return Presentation(tuple(names), tuple(rels))


def pushout_pair(tup: SplittingTuple, i: int, j: int) -> Presentation:
    return _pushout([tup[i], tup[j]], [i, j], [(0, 1)])


def pushout_tuple(tup: SplittingTuple) -> Presentation:
    n = tup.arity
    return _pushout(list(tup.homs), list(range(1, n + 1)), [(k, k + 1) for k in range(n - 1)])


def closed_pushout_pair(tup: SplittingTuple, i: int, j: int) -> Presentation:
    closed = SplittingTuple((associated_closed(tup[i]), associated_closed(tup[j])))
    return pushout_pair(closed, 1, 2)


# invariants of the arc systems

def _matchings(tup: SplittingTuple) -> list[list[tuple[int, int]]]:
    out = []
    for phi in tup.homs:
        report = verify_bounding(phi)
        if not report.cond2:
            raise ValueError("punctures do not pair up; " + "; ".join(report.failures))
        out.append(arc_matching(report))
    return out


def _count_components(b: int, matchings) -> int:
    uf = UnionFind(range(1, 2 * b + 1))
    for m in matchings:
        for x, y in m:
            uf.union(x, y)
    return uf.count()


def link_components(tup: SplittingTuple, i: int, j: int) -> int:
    ms = _matchings(tup)
    return _count_components(tup.sig.bridges, [ms[i - 1], ms[j - 1]])


def surface_components(tup: SplittingTuple) -> int:
    if tup.arity != 3:
        raise ValueError("surface components are defined for triples")
    return _count_components(tup.sig.bridges, _matchings(tup))


def euler_characteristic(tup: SplittingTuple) -> int:
    if tup.arity != 3 or tup.sig.bridges == 0:
        raise ValueError("Euler characteristic needs a triple with at least one bridge")
    ms = _matchings(tup)
    b = tup.sig.bridges
    return sum(_count_components(b, [ms[k], ms[(k + 1) % 3]]) for k in range(3)) - b


def is_spherical(tup: SplittingTuple) -> bool:
    return surface_components(tup) == 1 and euler_characteristic(tup) == 2


# membership

class ConditionVerdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN = "unknown"


@dataclass
class PairCheck:
    pair: tuple[int, int]
    verdict: ConditionVerdict
    simplified: Presentation
    abelian: AbelianInvariants
    expected_rank: int | None = None
    note: str = ""

    def as_json(self) -> dict:
        out = {"pair": list(self.pair), "verdict": self.verdict.value,
               "simplified": self.simplified.as_json(), "abelianization": self.abelian.as_json()}
        if self.expected_rank is not None:
            out["expectedRank"] = self.expected_rank
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class MembershipResult:
    flavor: str
    verdict: ConditionVerdict
    reports: list[BoundingReport | None]
    checks: list[PairCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "flavor": self.flavor,
            "verdict": self.verdict.value,
            "homs": [r.as_json() if r is not None else None for r in self.reports],
            "checks": [c.as_json() for c in self.checks],
            "notes": list(self.notes),
        }


def _free_check(pres: Presentation, pair, budget: int, expected_rank: int | None = None,
                label: str = "") -> PairCheck:
    res: SimplifyResult = simplify(pres, budget)
    ab = abelianization(pres)
    out = res.presentation
    if ab.torsion:
        return PairCheck(pair, ConditionVerdict.FAILS, out, ab, expected_rank,
                         f"{label}abelianization has torsion")
    if expected_rank is not None and ab.free_rank != expected_rank:
        return PairCheck(pair, ConditionVerdict.FAILS, out, ab, expected_rank,
                         f"{label}abelianization has rank {ab.free_rank}, expected {expected_rank}")
    if out.is_free:
        return PairCheck(pair, ConditionVerdict.HOLDS, out, ab, expected_rank)
    note = "budget exhausted" if res.exhausted else "no certificate of freeness"
    return PairCheck(pair, ConditionVerdict.UNKNOWN, out, ab, expected_rank, label + note)


def _combine(verdicts) -> ConditionVerdict:
    vs = list(verdicts)
    if ConditionVerdict.FAILS in vs:
        return ConditionVerdict.FAILS
    if ConditionVerdict.UNKNOWN in vs:
        return ConditionVerdict.UNKNOWN
    return ConditionVerdict.HOLDS


def verify_membership(tup: SplittingTuple, budget: int = DEFAULT_BUDGET) -> MembershipResult:
    flavor = tup.flavor
    reports: list[BoundingReport | None] = []
    notes = []
    for k, phi in enumerate(tup.homs, start=1):
        try:
            rep = verify_bounding(phi)
        except IllDefinedHom as exc:
            rep = None
            notes.append(f"phi{k}: {exc}")
        else:
            if not rep.ok:
                notes.append(f"phi{k}: " + "; ".join(rep.failures))
        reports.append(rep)
    if any(r is None or not r.ok for r in reports):
        return MembershipResult(flavor, ConditionVerdict.FAILS, reports, [], notes)
    if tup.arity == 2:
        return MembershipResult(flavor, ConditionVerdict.HOLDS, reports, [], notes)

    checks = []
    for i, j in ((1, 2), (2, 3), (3, 1)):
        if flavor == "Alg4":
            checks.append(_free_check(pushout_pair(tup, i, j), (i, j), budget))
            continue
        closed = _free_check(closed_pushout_pair(tup, i, j), (i, j), budget, label="closed pushout: ")
        checks.append(closed)
        expected = None
        if closed.verdict is ConditionVerdict.HOLDS:
            expected = len(closed.simplified.generators) + link_components(tup, i, j)
        checks.append(_free_check(pushout_pair(tup, i, j), (i, j), budget, expected))
    return MembershipResult(flavor, _combine(c.verdict for c in checks), reports, checks, notes)


# moves

def _with_images(phi: FreeTargetHom, sig: SurfaceSignature,
                 extra: Mapping[Generator, Word]) -> FreeTargetHom:
    images = dict(phi.images)
    images.update(extra)
    return FreeTargetHom(sig, images)


_ONE = EMPTY

# rows a_{g+1}, b_{g+1}, .., b_{g+3}; columns phi1, phi2, phi3; True means h_{g+k}
_TRIPLE_STABILIZATION = (
    (True, True, False),
    (False, False, True),
    (True, False, True),
    (False, True, False),
    (False, True, True),
    (True, False, False),
)


def _stabilize_pair(tup: SplittingTuple) -> SplittingTuple:
    g = tup.sig.genus
    sig = SurfaceSignature(g + 1, tup.sig.bridges)
    x = Word.of(h(g + 1))
    phi1 = _with_images(tup[1], sig, {a(g + 1): x, b(g + 1): _ONE})
    phi2 = _with_images(tup[2], sig, {a(g + 1): _ONE, b(g + 1): x})
    return SplittingTuple((phi1, phi2))


def move_stabilize_heegaard(tup: SplittingTuple) -> SplittingTuple:
    if tup.arity != 2 or tup.sig.bridges != 0:
        raise MoveRejected("Heegaard stabilization applies to pairs without bridges")
    return _stabilize_pair(tup)


def move_stabilize_genus(tup: SplittingTuple) -> SplittingTuple:
    if tup.arity == 2:
        return _stabilize_pair(tup)
    g = tup.sig.genus
    sig = SurfaceSignature(g + 3, tup.sig.bridges)
    extra: list[dict[Generator, Word]] = [{}, {}, {}]
    for row, cols in enumerate(_TRIPLE_STABILIZATION):
        k = g + 1 + row // 2
        gen = a(k) if row % 2 == 0 else b(k)
        for col, on in enumerate(cols):
            extra[col][gen] = Word.of(h(k)) if on else _ONE
    return SplittingTuple(tuple(_with_images(phi, sig, e) for phi, e in zip(tup.homs, extra)))


def _require_image(tup: SplittingTuple, i: int, gen: Generator, want: Word):
    if tup[i][gen] != want:
        raise MoveRejected(f"not in normal form: phi{i}({gen}) is {tup[i][gen]}, need {want}")


def _perturb_images(bb: int, pattern: str) -> dict[Generator, Word]:
    tb, tn = Word.of(t(bb)), Word.of(t(bb + 1))
    if pattern == "moved":
        return {p(2 * bb): tn, p(2 * bb + 1): tn.inverse(), p(2 * bb + 2): tb}
    if pattern == "kept":
        return {p(2 * bb + 1): tn, p(2 * bb + 2): tn.inverse()}
    raise ValueError(pattern)


def move_perturb(tup: SplittingTuple, side: int) -> SplittingTuple:
    if tup.arity != 2 or tup.sig.bridges == 0:
        raise MoveRejected("pair perturbation needs a pair with at least one bridge")
    if side not in (1, 2):
        raise ValueError(f"side must be 1 or 2, got {side}")
    bb = tup.sig.bridges
    tb = Word.of(t(bb))
    for i in (1, 2):
        _require_image(tup, i, p(2 * bb), tb)
    sig = SurfaceSignature(tup.sig.genus, bb + 1)
    moved = _perturb_images(bb, "moved")
    kept = {p(2 * bb): tb, p(2 * bb + 1): Word.of(t(bb + 1)), p(2 * bb + 2): Word.of(t(bb + 1)).inverse()}
    homs = []
    for i in (1, 2):
        homs.append(_with_images(tup[i], sig, moved if i == side else kept))
    return SplittingTuple(tuple(homs))


def move_perturb_triple(tup: SplittingTuple, color: int, mode: str = "shared",
                        budget: int = 20_000) -> SplittingTuple:
    if tup.arity != 3 or tup.sig.bridges == 0:
        raise MoveRejected("triple perturbation needs a triple with at least one bridge")
    if color not in (1, 2, 3):
        raise ValueError(f"color must be 1, 2 or 3, got {color}")
    if mode not in ("shared", "unshared"):
        raise ValueError(f"mode must be 'shared' or 'unshared', got {mode!r}")
    bb = tup.sig.bridges
    tb = Word.of(t(bb))
    first, second, third = color, color % 3 + 1, (color + 1) % 3 + 1
    if mode == "unshared":
        _require_image(tup, first, p(2 * bb - 1), tb)
        _require_image(tup, second, p(2 * bb), tb)
        return _perturb_unshared(tup, first, second, third, budget)
    _require_image(tup, first, p(2 * bb), tb)
    _require_image(tup, second, p(2 * bb), tb)
    sig = SurfaceSignature(tup.sig.genus, bb + 1)
    new = {
        first: _with_images(tup[first], sig, _perturb_images(bb, "moved")),
        second: _with_images(tup[second], sig, _perturb_images(bb, "moved")),
        third: _with_images(tup[third], sig, _perturb_images(bb, "kept")),
    }
    return SplittingTuple(tuple(new[i] for i in (1, 2, 3)))


def _perturb_unshared(tup: SplittingTuple, first: int, second: int, third: int,
                      budget: int) -> SplittingTuple:
    """Band the ``first``-colored arc at p_{2b-1} to the ``second``-colored arc at p_{2b}.

    The two new punctures are first placed between p_{2b-1} and p_{2b}, where
    the images can be written down directly, and are then carried past p_{2b}
    by one half twist applied to all three maps.  The result is only returned
    when the new triple is certified: the first/second link gains exactly one
    component and the membership check holds.
    """
    bb = tup.sig.bridges
    tb, tn = Word.of(t(bb)), Word.of(t(bb + 1))
    sig = SurfaceSignature(tup.sig.genus, bb + 1)
    between = {
        first: (tn, tn.inverse(), tb, tup[first][p(2 * bb)]),
        second: (tup[second][p(2 * bb - 1)], tn.inverse(), tn * tb * tn.inverse(), tn),
        third: (tup[third][p(2 * bb - 1)], tn, tn.inverse(), tup[third][p(2 * bb)]),
    }
    homs = []
    for k in (1, 2, 3):
        q, n1, n2, y = between[k]
        yi = y.inverse()
        homs.append(_with_images(tup[k], sig, {
            p(2 * bb - 1): q, p(2 * bb): y, p(2 * bb + 1): yi * n1 * y, p(2 * bb + 2): yi * n2 * y}))
    out = SplittingTuple(tuple(homs))
    if link_components(out, first, second) != link_components(tup, first, second) + 1:
        raise MoveRejected("the two arcs are not consecutive on one component of their link")
    if verify_membership(out, budget).verdict is not ConditionVerdict.HOLDS:
        raise MoveRejected("banded triple could not be certified")
    return out


def move_cyclic(tup: SplittingTuple) -> SplittingTuple:
    if tup.arity != 3:
        raise MoveRejected("cyclic relabeling applies to triples")
    return SplittingTuple((tup[2], tup[3], tup[1]))


def _check_inverse_pair(gens, images, inverse, what: str):
    fwd = {g: images.get(g, Word.of(g)) for g in gens}
    back = {g: inverse.get(g, Word.of(g)) for g in gens}
    for name, m in (("map", fwd), ("inverse", back)):
        for g, w in m.items():
            stray = w.generators() - set(gens)
            if stray:
                raise MoveRejected(f"{what} {name} sends {g} outside the generating set ({min(stray)})")
    for g in gens:
        if substitute(substitute(Word.of(g), fwd), back) != Word.of(g) or \
                substitute(substitute(Word.of(g), back), fwd) != Word.of(g):
            raise Inconclusive(f"{what} and its claimed inverse do not compose to the identity on {g}")
    return fwd, back


def move_target_automorphism(tup: SplittingTuple, i: int, images: Mapping[Generator, Word],
                             inverse: Mapping[Generator, Word]) -> SplittingTuple:
    phi = tup[i]
    gens = phi.sig.target_generators()
    fwd, _ = _check_inverse_pair(gens, images, inverse, "target automorphism")
    new = FreeTargetHom(phi.sig, {x: substitute(w, fwd) for x, w in phi.images.items()})
    report = verify_bounding(new)
    if not report.ok:
        raise MoveRejected("automorphism breaks the bounding conditions: " + "; ".join(report.failures))
    return tup.replace(i, new)


def surface_relator(sig: SurfaceSignature) -> Word:
    r = EMPTY
    for i in range(1, sig.genus + 1):
        x, y = Word.of(a(i)), Word.of(b(i))
        r = r * x * y * x.inverse() * y.inverse()
    for k in range(2 * sig.bridges, 0, -1):
        r = r * Word.of(p(k), -1)
    return r


def move_surface_automorphism(tup: SplittingTuple, images: Mapping[Generator, Word],
                              inverse: Mapping[Generator, Word]) -> SplittingTuple:
    """Precompose every homomorphism with the inverse of a surface automorphism.

    The map is accepted when it and its inverse are mutually inverse on the
    free group on the domain generators, permute the puncture loops up to
    conjugacy, and send the surface relator to a conjugate of itself.  Maps
    that might still be automorphisms but fail these checks are reported as
    inconclusive.
    """
    sig = tup.sig
    gens = sig.domain_generators()
    fwd, back = _check_inverse_pair(gens, images, inverse, "surface map")
    punctures = [p(k) for k in range(1, 2 * sig.bridges + 1)]
    hit = []
    for q in punctures:
        match = [r for r in punctures if is_conjugate(fwd[q], Word.of(r))]
        if len(match) != 1:
            raise Inconclusive(f"image of {q} is not a conjugate of a single puncture loop")
        hit.append(match[0])
    if sorted(hit) != punctures:
        raise Inconclusive("puncture loops are not permuted")
    rel = surface_relator(sig)
    image = substitute(rel, fwd)
    if not is_conjugate(image, rel):
        if rel and is_conjugate(image, rel.inverse()):
            raise MoveRejected("surface map reverses orientation")
        raise Inconclusive("surface relator is not sent to a conjugate of itself")
    homs = []
    for phi in tup.homs:
        homs.append(FreeTargetHom(sig, {x: phi.apply(back[x]) for x in gens}))
    return SplittingTuple(tuple(homs))


# normal forms for perturbation

def _relabel_to(phi: FreeTargetHom, q: Generator, bb: int):
    """Target automorphism (and inverse) after which phi(q) = t_bb."""
    c, core = cyclic_reduce(phi[q])
    if len(core) != 1 or core[0].gen.family != "t":
        raise MoveRejected(f"image of {q} is not a conjugate of a t-generator")
    gens = phi.sig.target_generators()
    x, sign = core[0]
    target = t(bb)
    # relabel: x^sign -> t_bb
    relabel = {g: Word.of(g) for g in gens}
    relabel[x] = Word.of(target, sign)
    if x != target:
        relabel[target] = Word.of(x)
    relabel_inv = {g: Word.of(g) for g in gens}
    relabel_inv[target] = Word.of(x, sign)
    if x != target:
        relabel_inv[x] = Word.of(target)
    c2 = substitute(c, relabel)
    ci = c2.inverse()
    fwd = {g: ci * substitute(Word.of(g), relabel) * c2 for g in gens}
    back = {g: substitute(c2 * Word.of(g) * ci, relabel_inv) for g in gens}
    return fwd, back


def perturbation_normal_form(tup: SplittingTuple, color: int = 1,
                             mode: str = "shared") -> SplittingTuple:
    """Apply target automorphisms so the perturbation tables apply directly."""
    bb = tup.sig.bridges
    if bb == 0:
        raise MoveRejected("no bridges to perturb")
    if tup.arity == 2:
        wanted = [(1, p(2 * bb)), (2, p(2 * bb))]
    else:
        first, second = color, color % 3 + 1
        if mode == "shared":
            wanted = [(first, p(2 * bb)), (second, p(2 * bb))]
        else:
            wanted = [(first, p(2 * bb - 1)), (second, p(2 * bb))]
    for i, q in wanted:
        if tup[i][q] != Word.of(t(bb)):
            fwd, back = _relabel_to(tup[i], q, bb)
            tup = move_target_automorphism(tup, i, fwd, back)
    return tup
