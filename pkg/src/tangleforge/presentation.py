"""Finite group presentations, Tietze simplification and abelianization.

Relators are tuples of nonzero ints: ``k`` stands for generator ``k-1`` and
``-k`` for its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def free_reduce(w: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_core(w: Sequence[int]) -> tuple[int, ...]:
    w = free_reduce(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def invert(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(w))


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            for x in r:
                if x == 0 or abs(x) > n:
                    raise ValueError(f"relator letter {x} out of range for {n} generators")

    def word_text(self, w: Sequence[int]) -> str:
        if not w:
            return "1"
        return " ".join(self.generators[abs(x) - 1] + ("^-1" if x < 0 else "") for x in w)

    def __str__(self) -> str:
        rels = ", ".join(self.word_text(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"

    @property
    def is_free(self) -> bool:
        return not self.relators

    def as_json(self) -> dict:
        return {"generators": list(self.generators),
                "relators": [self.word_text(r) for r in self.relators]}


@dataclass(frozen=True)
class SimplifyResult:
    presentation: Presentation
    steps: int
    exhausted: bool


def simplify(pres: Presentation, budget: int = 100_000) -> SimplifyResult:
    """Tietze moves until nothing applies or ``budget`` moves have been made.

    Moves: drop a trivial relator; eliminate a generator that occurs exactly
    once in some relator; replace a relator by its product with a cyclic
    conjugate of another relator (or its inverse) when that is shorter.
    """
    alive = set(range(1, len(pres.generators) + 1))
    rels = [cyclic_core(r) for r in pres.relators]
    steps = 0

    def drop_trivial() -> bool:
        nonlocal rels, steps
        if all(rels) or steps >= budget:
            return False
        kept = []
        for r in rels:
            if not r and steps < budget:
                steps += 1
            else:
                kept.append(r)
        rels = kept
        return True

    def eliminate() -> bool:
        nonlocal rels, steps
        best = None
        for ri, r in enumerate(rels):
            counts: dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for gen, c in counts.items():
                if c == 1:
                    key = (len(r), gen, ri)
                    if best is None or key < best:
                        best = key
        if best is None:
            return False
        _, gen, ri = best
        r = rels[ri]
        k = next(i for i, x in enumerate(r) if abs(x) == gen)
        rot = r[k:] + r[:k]
        rest = rot[1:]
        value = invert(rest) if rot[0] > 0 else rest
        inv_value = invert(value)
        new = []
        for i, s in enumerate(rels):
            if i == ri:
                continue
            out: list[int] = []
            for x in s:
                if x == gen:
                    out.extend(value)
                elif x == -gen:
                    out.extend(inv_value)
                else:
                    out.append(x)
            new.append(cyclic_core(out))
        rels = new
        alive.discard(gen)
        steps += 1
        return True

    def shorten() -> bool:
        nonlocal steps
        order = sorted(range(len(rels)), key=lambda i: -len(rels[i]))
        for i in order:
            for j in range(len(rels)):
                if i == j or not rels[j]:
                    continue
                for s in (rels[j], invert(rels[j])):
                    for k in range(len(s)):
                        cand = cyclic_core(rels[i] + s[k:] + s[:k])
                        if len(cand) < len(rels[i]):
                            rels[i] = cand
                            steps += 1
                            return True
        return False

    while steps < budget:
        if drop_trivial():
            continue
        if eliminate():
            continue
        if shorten():
            continue
        break
    exhausted = steps >= budget

    order = sorted(alive)
    renum = {old: new for new, old in enumerate(order, start=1)}
    gens = tuple(pres.generators[i - 1] for i in order)
    out_rels = tuple(tuple(renum[abs(x)] * (1 if x > 0 else -1) for x in r) for r in rels if r)
    return SimplifyResult(Presentation(gens, out_rels), steps, exhausted)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def as_json(self) -> dict:
        return {"freeRank": self.free_rank, "torsion": list(self.torsion), "text": str(self)}


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    M = [list(row) for row in matrix]
    m = len(M)
    n = len(M[0]) if m else 0
    diag = []
    for s in range(min(m, n)):
        while True:
            piv = None
            for i in range(s, m):
                for j in range(s, n):
                    if M[i][j] and (piv is None or abs(M[i][j]) < abs(M[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return diag
            i, j = piv
            M[s], M[i] = M[i], M[s]
            for row in M:
                row[s], row[j] = row[j], row[s]
            pv = M[s][s]
            dirty = False
            for i in range(s + 1, m):
                q = M[i][s] // pv
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[s])]
                dirty |= M[i][s] != 0
            for j in range(s + 1, n):
                q = M[s][j] // pv
                if q:
                    for row in M:
                        row[j] -= q * row[s]
                dirty |= M[s][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(s + 1, m)
                        if any(M[i][j] % pv for j in range(s + 1, n))), None)
            if bad is None:
                break
            M[s] = [x + y for x, y in zip(M[s], M[bad])]
        diag.append(abs(M[s][s]))
    return diag


def exponent_matrix(pres: Presentation) -> list[list[int]]:
    n = len(pres.generators)
    rows = []
    for r in pres.relators:
        row = [0] * n
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianization(pres: Presentation) -> AbelianInvariants:
    n = len(pres.generators)
    diag = smith_diagonal(exponent_matrix(pres)) if pres.relators and n else []
    return AbelianInvariants(n - len(diag), tuple(d for d in diag if d > 1))
