"""Random bounding homomorphisms and tuples, produced by legal moves only."""

from __future__ import annotations

import random

from . import equiv
from .corpus import identity_like
from .equiv import SplittingTuple
from .surface import FreeTargetHom, SurfaceSignature
from .words import Generator, Word, a, b, p

Automorphism = tuple[dict[Generator, Word], dict[Generator, Word]]


def random_target_automorphism(sig: SurfaceSignature, rng: random.Random) -> Automorphism:
    """An elementary automorphism that keeps every t-generator in its own conjugacy class up to sign."""
    gens = sig.target_generators()
    hs = [g for g in gens if g.family == "h"]
    ts = [g for g in gens if g.family == "t"]
    ident = {g: Word.of(g) for g in gens}
    fwd, back = dict(ident), dict(ident)
    kinds = []
    if hs and len(gens) > 1:
        kinds += ["h_right", "h_left"]
    if ts and len(gens) > 1:
        kinds.append("t_conj")
    if ts:
        kinds.append("t_invert")
    if hs:
        kinds.append("h_invert")
    if len(ts) > 1:
        kinds.append("t_swap")
    if len(hs) > 1:
        kinds.append("h_swap")
    if not kinds:
        return fwd, back
    kind = rng.choice(kinds)
    e = rng.choice((1, -1))
    if kind in ("h_right", "h_left"):
        x = rng.choice(hs)
        y = Word.of(rng.choice([g for g in gens if g != x]), e)
        if kind == "h_right":
            fwd[x], back[x] = Word.of(x) * y, Word.of(x) * y.inverse()
        else:
            fwd[x], back[x] = y * Word.of(x), y.inverse() * Word.of(x)
    elif kind == "t_conj":
        x = rng.choice(ts)
        y = Word.of(rng.choice([g for g in gens if g != x]), e)
        fwd[x] = y * Word.of(x) * y.inverse()
        back[x] = y.inverse() * Word.of(x) * y
    elif kind in ("t_invert", "h_invert"):
        x = rng.choice(ts if kind == "t_invert" else hs)
        fwd[x] = back[x] = Word.of(x, -1)
    else:
        x, y = rng.sample(ts if kind == "t_swap" else hs, 2)
        fwd[x] = back[x] = Word.of(y)
        fwd[y] = back[y] = Word.of(x)
    return fwd, back


def random_surface_automorphism(sig: SurfaceSignature, rng: random.Random) -> Automorphism:
    """A handle twist or a half twist of two adjacent punctures; both fix the relator."""
    gens = sig.domain_generators()
    fwd = {g: Word.of(g) for g in gens}
    back = dict(fwd)
    kinds = []
    if sig.genus:
        kinds += ["twist_a", "twist_b"]
    if sig.bridges:
        kinds.append("braid")
    if not kinds:
        return fwd, back
    kind = rng.choice(kinds)
    if kind == "braid":
        i = rng.randrange(1, 2 * sig.bridges)
        x, y = Word.of(p(i)), Word.of(p(i + 1))
        fwd[p(i)], fwd[p(i + 1)] = x * y * x.inverse(), x
        back[p(i)], back[p(i + 1)] = y, y.inverse() * x * y
    else:
        k = rng.randrange(1, sig.genus + 1)
        x, y = Word.of(a(k)), Word.of(b(k))
        if kind == "twist_a":
            fwd[a(k)], back[a(k)] = x * y, x * y.inverse()
        else:
            fwd[b(k)], back[b(k)] = y * x, y * x.inverse()
    return fwd, back


def random_bounding_hom(rng: random.Random, max_genus: int = 3, max_bridges: int = 3,
                        steps: int = 12, max_length: int = 500) -> FreeTargetHom:
    while True:
        g = rng.randint(0, max_genus)
        bb = rng.randint(0, max_bridges)
        if g + bb:
            break
    tup = SplittingTuple((identity_like(g, bb), identity_like(g, bb)))
    for _ in range(rng.randint(1, steps)):
        try:
            if rng.random() < 0.5:
                new = equiv.move_target_automorphism(tup, 1, *random_target_automorphism(tup.sig, rng))
            else:
                new = equiv.move_surface_automorphism(tup, *random_surface_automorphism(tup.sig, rng))
        except equiv.MoveRejected:
            continue
        if new[1].total_length() <= max_length:
            tup = new
    return tup[1]


def _one_move(tup: SplittingTuple, rng: random.Random, max_genus: int,
              max_bridges: int) -> tuple[str, SplittingTuple]:
    names = ["h", "m"]
    if tup.sig.genus + (3 if tup.arity == 3 else 1) <= max_genus:
        names.append("sg")
    if tup.sig.bridges and tup.sig.bridges < max_bridges:
        names.append("perturb")
    if tup.arity == 3:
        names.append("c")
    name = rng.choice(names)
    if name == "h":
        i = rng.randint(1, tup.arity)
        return name, equiv.move_target_automorphism(tup, i, *random_target_automorphism(tup.sig, rng))
    if name == "m":
        return name, equiv.move_surface_automorphism(tup, *random_surface_automorphism(tup.sig, rng))
    if name == "sg":
        return name, equiv.move_stabilize_genus(tup)
    if name == "c":
        return name, equiv.move_cyclic(tup)
    if tup.arity == 2:
        side = rng.choice((1, 2))
        return f"perturb side {side}", equiv.move_perturb(equiv.perturbation_normal_form(tup), side)
    color = rng.choice((1, 2, 3))
    mode = rng.choice(("shared", "unshared"))
    normal = equiv.perturbation_normal_form(tup, color, mode)
    return f"perturb {color} {mode}", equiv.move_perturb_triple(normal, color, mode)


def random_move(tup: SplittingTuple, rng: random.Random, max_genus: int = 6,
                max_bridges: int = 5, attempts: int = 20) -> tuple[str, SplittingTuple]:
    """Apply one random legal move, retrying when a move refuses the tuple."""
    for _ in range(attempts):
        try:
            return _one_move(tup, rng, max_genus, max_bridges)
        except equiv.MoveRejected:
            continue
    if tup.arity == 3:
        return "c", equiv.move_cyclic(tup)
    return "none", tup


def synthetic_hom(length: int, seed: int = 0, genus: int = 2, bridges: int = 2) -> FreeTargetHom:
    """A bounding homomorphism with total image length between ``length`` and ``1.5 * length``."""
    rng = random.Random(seed)
    tup = SplittingTuple((identity_like(genus, bridges), identity_like(genus, bridges)))
    while tup[1].total_length() < length:
        try:
            if rng.random() < 0.5:
                new = equiv.move_target_automorphism(tup, 1, *random_target_automorphism(tup.sig, rng))
            else:
                new = equiv.move_surface_automorphism(tup, *random_surface_automorphism(tup.sig, rng))
        except equiv.MoveRejected:
            continue
        if new[1].total_length() <= 1.5 * length:
            tup = new
    return tup[1]
