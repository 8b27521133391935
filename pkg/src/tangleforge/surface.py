"""Homomorphisms from punctured surface groups onto free groups.

The domain is generated by ``p1..p2b`` and ``a1, b1, .., ag, bg`` subject to

    p1 p2 ... p2b = [a1, b1] ... [ag, bg],   [x, y] = x y x^-1 y^-1

and the target is free on ``h1..hg`` and ``t1..tb``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .folding import generates_full
from .words import (EMPTY, Generator, Letter, Word, a, b, cyclic_reduce,
                    delete_letters, h, p, substitute, t)


class IllDefinedHom(ValueError):
    """The given images do not respect the surface relation."""


@dataclass(frozen=True)
class SurfaceSignature:
    genus: int
    bridges: int

    def __post_init__(self):
        if self.genus < 0 or self.bridges < 0:
            raise ValueError(f"negative genus or bridge count: {self}")

    def domain_generators(self) -> list[Generator]:
        gens = [p(i) for i in range(1, 2 * self.bridges + 1)]
        for i in range(1, self.genus + 1):
            gens += [a(i), b(i)]
        return gens

    def target_generators(self) -> list[Generator]:
        return ([h(i) for i in range(1, self.genus + 1)]
                + [t(j) for j in range(1, self.bridges + 1)])

    @property
    def rank(self) -> int:
        return self.genus + self.bridges


@dataclass(frozen=True, eq=False)
class FreeTargetHom:
    sig: SurfaceSignature
    images: Mapping[Generator, Word] = field(default_factory=dict)

    def __post_init__(self):
        dom = self.sig.domain_generators()
        extra = set(self.images) - set(dom)
        if extra:
            raise ValueError(f"images given for generators outside the domain: "
                             f"{', '.join(sorted(map(str, extra)))}")
        missing = [g for g in dom if g not in self.images]
        if missing:
            raise ValueError(f"no image for generator {missing[0]}")
        allowed = set(self.sig.target_generators())
        imgs = {}
        for g in dom:
            w = self.images[g].reduced()
            bad = w.generators() - allowed
            if bad:
                raise ValueError(f"image of {g} uses {min(bad)}, which is not a target generator")
            imgs[g] = w
        object.__setattr__(self, "images", imgs)

    def __getitem__(self, gen: Generator) -> Word:
        return self.images[gen]

    def __eq__(self, other):
        return (isinstance(other, FreeTargetHom) and self.sig == other.sig
                and self.images == other.images)

    def __hash__(self):
        return hash((self.sig, tuple(sorted(self.images.items()))))

    def apply(self, w: Word) -> Word:
        return substitute(w, self.images)

    def total_length(self) -> int:
        return sum(len(w) for w in self.images.values())

    def puncture_images(self) -> list[Word]:
        return [self.images[p(i)] for i in range(1, 2 * self.sig.bridges + 1)]

    def handle_images(self) -> list[Word]:
        out = []
        for i in range(1, self.sig.genus + 1):
            out += [self.images[a(i)], self.images[b(i)]]
        return out


def commutator(x: Word, y: Word) -> Word:
    return x * y * x.inverse() * y.inverse()


def surface_relation_sides(sig: SurfaceSignature) -> tuple[Word, Word]:
    lhs = Word(tuple(Letter(p(i), 1) for i in range(1, 2 * sig.bridges + 1)))
    rhs = EMPTY
    for i in range(1, sig.genus + 1):
        rhs = rhs * commutator(Word.of(a(i)), Word.of(b(i)))
    return lhs, rhs


def verify_hom(phi: FreeTargetHom) -> bool:
    lhs, rhs = surface_relation_sides(phi.sig)
    return phi.apply(lhs) == phi.apply(rhs)


@dataclass
class BoundingReport:
    ok: bool
    surjective: bool
    cond1: bool
    cond2: bool
    f: dict[Generator, Letter]
    conjugators: dict[Generator, Word]
    failures: list[str]

    def as_json(self) -> dict:
        return {
            "ok": self.ok,
            "surjective": self.surjective,
            "cond1": self.cond1,
            "cond2": self.cond2,
            "f": {str(k): str(v) for k, v in self.f.items()},
            "conjugators": {str(k): str(v) for k, v in self.conjugators.items()},
            "failures": list(self.failures),
        }


def verify_bounding(phi: FreeTargetHom) -> BoundingReport:
    if not verify_hom(phi):
        raise IllDefinedHom("images do not satisfy the surface relation")
    sig = phi.sig
    failures: list[str] = []
    targets = sig.target_generators()

    surjective = generates_full(list(phi.images.values()), sig.rank, targets)
    if not surjective:
        failures.append("images do not generate the whole free group")

    ts = [t(j) for j in range(1, sig.bridges + 1)]
    hs = [h(i) for i in range(1, sig.genus + 1)]
    reduced_handles = [delete_letters(w, ts) for w in phi.handle_images()]
    cond1 = generates_full(reduced_handles, sig.genus, hs)
    if not cond1:
        failures.append("handle images with t-letters deleted do not generate F_g")

    f: dict[Generator, Letter] = {}
    conj: dict[Generator, Word] = {}
    cond2 = True
    for i in range(1, 2 * sig.bridges + 1):
        gen = p(i)
        c, core = cyclic_reduce(phi[gen])
        if len(core) != 1 or core[0].gen.family != "t":
            cond2 = False
            failures.append(f"image of {gen} is not a conjugate of a t-generator or its inverse")
            continue
        f[gen] = core[0]
        conj[gen] = c
    hit = sorted(f.values())
    expected = sorted(Letter(x, s) for x in ts for s in (1, -1))
    if cond2 and hit != expected:
        cond2 = False
        failures.append("punctures do not map bijectively onto the t-generators and their inverses")

    return BoundingReport(surjective and cond1 and cond2, surjective, cond1, cond2,
                          f, conj, failures)


def associated_closed(phi: FreeTargetHom) -> FreeTargetHom:
    sig = SurfaceSignature(phi.sig.genus, 0)
    ts = [t(j) for j in range(1, phi.sig.bridges + 1)]
    images = {}
    for i in range(1, sig.genus + 1):
        images[a(i)] = delete_letters(phi[a(i)], ts)
        images[b(i)] = delete_letters(phi[b(i)], ts)
    return FreeTargetHom(sig, images)


def arc_matching(report: BoundingReport) -> list[tuple[int, int]]:
    """Puncture pairs joined by an arc: (index with t_j, index with t_j^-1), sorted by j."""
    plus = {l.gen: g.index for g, l in report.f.items() if l.sign > 0}
    minus = {l.gen: g.index for g, l in report.f.items() if l.sign < 0}
    return [(plus[x], minus[x]) for x in sorted(plus)]
