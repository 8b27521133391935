"""Worked examples, built in code so tests and fixture files can be compared."""

from __future__ import annotations

from .equiv import SplittingTuple, move_stabilize_genus
from .surface import FreeTargetHom, SurfaceSignature
from .words import EMPTY, Word, a, b, h, p, t


def _hom(genus: int, bridges: int, **images: str) -> FreeTargetHom:
    sig = SurfaceSignature(genus, bridges)
    parsed = {}
    for gen in sig.domain_generators():
        parsed[gen] = Word.parse(images.get(str(gen), "e"))
    return FreeTargetHom(sig, parsed)


def running_example() -> FreeTargetHom:
    return _hom(1, 2,
                p1="t2 h1 t1 h1^-1 t2^-1", p2="t2", p3="h1 t1^-1 h1^-1",
                p4="h1 t2^-1 h1^-1", a1="t2 h1", b1="h1")


def poincare() -> FreeTargetHom:
    return _hom(2, 0,
                a1="h1^-1", b1="h1 h2 " * 5 + "h1^-2",
                a2="h1 h2 " * 5 + "h2^3", b2="h2")


def poincare_partner() -> FreeTargetHom:
    """Handlebody map killing b1 and a2; its pushout with poincare() is perfect."""
    return _hom(2, 0, a1="h1", a2="e", b1="e", b2="h2")


def poincare_pair() -> SplittingTuple:
    return SplittingTuple((poincare(), poincare_partner()))


def rp2_minus() -> SplittingTuple:
    alpha = _hom(0, 2, p1="t1", p2="t1^-1", p3="t2", p4="t2^-1")
    beta = _hom(0, 2, p1="t1", p2="t2", p3="t2^-1", p4="t1^-1")
    gamma = _hom(0, 2, p1="t1", p2="t2", p3="t1^-1", p4="t1 t2^-1 t1^-1")
    return SplittingTuple((alpha, beta, gamma))


def rp2_plus() -> SplittingTuple:
    alpha, beta, _ = rp2_minus().homs
    gamma = _hom(0, 2, p1="t1", p2="t2", p3="t2^-1 t1^-1 t2", p4="t2^-1")
    return SplittingTuple((alpha, beta, gamma))


def unknot_hom() -> FreeTargetHom:
    return _hom(0, 1, p1="t1", p2="t1^-1")


def unknotted_sphere() -> SplittingTuple:
    s = unknot_hom()
    return SplittingTuple((s, s, s))


def unknot_pair() -> SplittingTuple:
    s = unknot_hom()
    return SplittingTuple((s, s))


def trivial_triple() -> SplittingTuple:
    s = _hom(0, 0)
    return SplittingTuple((s, s, s))


def standard_genus_three() -> SplittingTuple:
    return move_stabilize_genus(trivial_triple())


def identity_like(genus: int, bridges: int) -> FreeTargetHom:
    """a_i -> h_i, b_i -> 1, p_{2j-1} -> t_j, p_{2j} -> t_j^-1."""
    sig = SurfaceSignature(genus, bridges)
    images = {}
    for j in range(1, bridges + 1):
        images[p(2 * j - 1)] = Word.of(t(j))
        images[p(2 * j)] = Word.of(t(j), -1)
    for i in range(1, genus + 1):
        images[a(i)] = Word.of(h(i))
        images[b(i)] = EMPTY
    return FreeTargetHom(sig, images)


def running_partner() -> FreeTargetHom:
    return _hom(1, 2, p1="t1", p2="t1^-1", p3="t2", p4="t2^-1", a1="e", b1="h1")


def running_pair() -> SplittingTuple:
    return SplittingTuple((running_example(), running_partner()))
