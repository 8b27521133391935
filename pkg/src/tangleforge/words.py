"""Reduced words in free groups over the generator families h, t, a, b, p.

Generators are ordered by family (``h < t < a < b < p``) and then by index.
A word is an immutable sequence of letters; each letter is a generator with
a sign of +1 or -1.  Text form is a space separated list of ``name`` or
``name^k`` terms, with ``e`` standing for the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

FAMILIES = ("h", "t", "a", "b", "p")
_FAMILY_ORDER = {f: i for i, f in enumerate(FAMILIES)}

_TERM = re.compile(r"^([htabp])([1-9][0-9]*)(?:\^(-?[0-9]+))?$")


class WordParseError(ValueError):
    pass


class Generator(NamedTuple):
    order: int
    index: int

    @classmethod
    def of(cls, family: str, index: int) -> "Generator":
        if family not in _FAMILY_ORDER:
            raise ValueError(f"unknown generator family {family!r}")
        if index < 1:
            raise ValueError(f"generator index must be positive, got {index}")
        return cls(_FAMILY_ORDER[family], index)

    @classmethod
    def parse(cls, name: str) -> "Generator":
        m = re.fullmatch(r"([htabp])([1-9][0-9]*)", name.strip())
        if not m:
            raise WordParseError(f"bad generator name {name!r}")
        return cls.of(m.group(1), int(m.group(2)))

    @property
    def family(self) -> str:
        return FAMILIES[self.order]

    def __str__(self) -> str:
        return f"{self.family}{self.index}"

    def __repr__(self) -> str:
        return f"Generator({self})"


def h(i: int) -> Generator:
    return Generator.of("h", i)


def t(i: int) -> Generator:
    return Generator.of("t", i)


def a(i: int) -> Generator:
    return Generator.of("a", i)


def b(i: int) -> Generator:
    return Generator.of("b", i)


def p(i: int) -> Generator:
    return Generator.of("p", i)


class Letter(NamedTuple):
    gen: Generator
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return str(self.gen) if self.sign > 0 else f"{self.gen}^-1"


@dataclass(frozen=True)
class CancellationTrace:
    """Which input positions cancelled against each other during reduction.

    ``pairs`` holds ``(i, j)`` with ``i < j``; the pairs never cross.
    ``survivors`` lists the input positions that remain, in order.
    """

    pairs: tuple[tuple[int, int], ...]
    survivors: tuple[int, ...]


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str, reduce: bool = True) -> "Word":
        text = text.strip()
        if text in ("", "e", "1"):
            return cls()
        letters: list[Letter] = []
        for term in text.split():
            m = _TERM.match(term)
            if not m:
                raise WordParseError(f"bad term {term!r} in word {text!r}")
            gen = Generator.of(m.group(1), int(m.group(2)))
            k = int(m.group(3)) if m.group(3) is not None else 1
            if k == 0:
                raise WordParseError(f"zero exponent in term {term!r}")
            letters.extend([Letter(gen, 1 if k > 0 else -1)] * abs(k))
        w = cls(tuple(letters))
        return w.reduced() if reduce else w

    @classmethod
    def of(cls, gen: Generator, power: int = 1) -> "Word":
        return cls((Letter(gen, 1 if power > 0 else -1),) * abs(power))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.letters[i])
        return self.letters[i]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters).reduced()

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k)).reduced()

    def inverse(self) -> "Word":
        return Word(tuple(Letter(g, -s) for g, s in reversed(self.letters)))

    def reduced(self) -> "Word":
        return reduce(self)[0]

    def is_reduced(self) -> bool:
        ls = self.letters
        return all(ls[i].gen != ls[i + 1].gen or ls[i].sign == ls[i + 1].sign
                   for i in range(len(ls) - 1))

    def generators(self) -> set[Generator]:
        return {l.gen for l in self.letters}

    def __str__(self) -> str:
        if not self.letters:
            return "e"
        terms = []
        ls = self.letters
        i = 0
        while i < len(ls):
            j = i
            while j < len(ls) and ls[j] == ls[i]:
                j += 1
            k = (j - i) * ls[i].sign
            terms.append(str(ls[i].gen) if k == 1 else f"{ls[i].gen}^{k}")
            i = j
        return " ".join(terms)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


EMPTY = Word()


def word(text: str) -> Word:
    return Word.parse(text)


def reduce(w: Word | Iterable[Letter]) -> tuple[Word, CancellationTrace]:
    """Left-to-right stack reduction, recording which positions cancel."""
    letters = w.letters if isinstance(w, Word) else tuple(w)
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    for j, (g, s) in enumerate(letters):
        if stack:
            top = letters[stack[-1]]
            if top.gen == g and top.sign == -s:
                pairs.append((stack.pop(), j))
                continue
        stack.append(j)
    out = Word(tuple(letters[i] for i in stack))
    return out, CancellationTrace(tuple(pairs), tuple(stack))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split a word as ``c * core * c^-1`` with ``core`` cyclically reduced."""
    ls = w.reduced().letters
    i, j = 0, len(ls) - 1
    while i < j and ls[i].gen == ls[j].gen and ls[i].sign == -ls[j].sign:
        i += 1
        j -= 1
    return Word(ls[:i]), Word(ls[i:j + 1])


def exponent_sum(w: Word, gen: Generator) -> int:
    return sum(s for g, s in w.letters if g == gen)


def delete_letters(w: Word, gens: Iterable[Generator]) -> Word:
    drop = set(gens)
    return Word(tuple(l for l in w.letters if l.gen not in drop)).reduced()


def substitute(w: Word, images: Mapping[Generator, Word]) -> Word:
    out: list[Letter] = []
    for g, s in w.letters:
        if g not in images:
            raise KeyError(f"no image given for generator {g}")
        img = images[g]
        out.extend(img.letters if s > 0 else img.inverse().letters)
    return Word(tuple(out)).reduced()


def is_conjugate(u: Word, v: Word) -> bool:
    cu = cyclic_reduce(u)[1].letters
    cv = cyclic_reduce(v)[1].letters
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    doubled = cu + cu
    n = len(cv)
    return any(doubled[k:k + n] == cv for k in range(n))
