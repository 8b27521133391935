"""Text formats for homomorphisms, tuples and automorphism files.

A homomorphism file::

    genus = 1
    bridges = 2
    p1 -> t2 h1 t1 h1^-1 t2^-1
    ...

A tuple file starts with ``flavor = Alg42`` followed by ``[phi1]``,
``[phi2]`` (and ``[phi3]``) sections, each holding a homomorphism block.
An automorphism file lists ``name -> word`` lines, then ``[inverse]`` and
the images under the inverse map.  Blank lines and ``#`` comments are
ignored everywhere.
"""

from __future__ import annotations

import re
from pathlib import Path

from .equiv import SplittingTuple
from .surface import FreeTargetHom, SurfaceSignature
from .words import Generator, Word, WordParseError


class ParseError(ValueError):
    pass


_HEADER = re.compile(r"^(genus|bridges|flavor)\s*=\s*(\S+)$")
_MAP = re.compile(r"^([htabp][1-9][0-9]*)\s*->\s*(.*)$")
_SECTION = re.compile(r"^\[(\w+)\]$")


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _parse_map_line(n: int, line: str) -> tuple[Generator, Word]:
    m = _MAP.match(line)
    if not m:
        raise ParseError(f"line {n}: expected 'name -> word', got {line!r}")
    try:
        return Generator.parse(m.group(1)), Word.parse(m.group(2))
    except WordParseError as exc:
        raise ParseError(f"line {n}: {exc}") from exc


def _hom_from_lines(lines, where: str = "") -> FreeTargetHom:
    header: dict[str, int] = {}
    images: dict[Generator, Word] = {}
    for n, line in lines:
        m = _HEADER.match(line)
        if m and m.group(1) in ("genus", "bridges"):
            key = m.group(1)
            if key in header:
                raise ParseError(f"line {n}: {key} given twice{where}")
            try:
                header[key] = int(m.group(2))
            except ValueError:
                raise ParseError(f"line {n}: {key} must be an integer") from None
            continue
        gen, w = _parse_map_line(n, line)
        if gen in images:
            raise ParseError(f"line {n}: second image for {gen}{where}")
        images[gen] = w
    for key in ("genus", "bridges"):
        if key not in header:
            raise ParseError(f"missing '{key} = <int>' header{where}")
    try:
        sig = SurfaceSignature(header["genus"], header["bridges"])
        return FreeTargetHom(sig, images)
    except ValueError as exc:
        raise ParseError(f"{exc}{where}") from exc


def parse_hom(text: str) -> FreeTargetHom:
    return _hom_from_lines(_lines(text))


def format_hom(phi: FreeTargetHom) -> str:
    out = [f"genus = {phi.sig.genus}", f"bridges = {phi.sig.bridges}"]
    out += [f"{g} -> {phi[g]}" for g in phi.sig.domain_generators()]
    return "\n".join(out) + "\n"


def parse_tuple(text: str) -> SplittingTuple:
    flavor = None
    sections: dict[str, list] = {}
    current = None
    for n, line in _lines(text):
        m = _SECTION.match(line)
        if m:
            current = m.group(1)
            if current in sections:
                raise ParseError(f"line {n}: section [{current}] appears twice")
            sections[current] = []
            continue
        m = _HEADER.match(line)
        if m and m.group(1) == "flavor" and current is None:
            flavor = m.group(2)
            continue
        if current is None:
            raise ParseError(f"line {n}: content before the first [phiN] section")
        sections[current].append((n, line))
    names = [f"phi{k}" for k in range(1, len(sections) + 1)]
    if sorted(sections) != sorted(names) or len(names) not in (2, 3):
        raise ParseError(f"expected sections [phi1], [phi2] and optionally [phi3], got "
                         f"{', '.join('[' + s + ']' for s in sections)}")
    homs = tuple(_hom_from_lines(sections[s], f" in [{s}]") for s in names)
    try:
        tup = SplittingTuple(homs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if flavor is not None and flavor != tup.flavor:
        raise ParseError(f"flavor {flavor} does not match a {len(homs)}-tuple with "
                         f"{tup.sig.bridges} bridges ({tup.flavor})")
    return tup


def format_tuple(tup: SplittingTuple) -> str:
    parts = [f"flavor = {tup.flavor}"]
    for k, phi in enumerate(tup.homs, start=1):
        parts.append(f"[phi{k}]")
        parts.append(format_hom(phi).rstrip("\n"))
    return "\n".join(parts) + "\n"


def parse_automorphism(text: str) -> tuple[dict[Generator, Word], dict[Generator, Word]]:
    fwd: dict[Generator, Word] = {}
    back: dict[Generator, Word] = {}
    target = fwd
    for n, line in _lines(text):
        m = _SECTION.match(line)
        if m:
            if m.group(1) != "inverse" or target is back:
                raise ParseError(f"line {n}: only one [inverse] section is allowed")
            target = back
            continue
        gen, w = _parse_map_line(n, line)
        if gen in target:
            raise ParseError(f"line {n}: second image for {gen}")
        target[gen] = w
    if target is not back:
        raise ParseError("automorphism file needs an [inverse] section")
    return fwd, back


def detect_kind(path: str | Path, text: str) -> str:
    suffix = Path(path).suffix
    if suffix in (".hom", ".tuple", ".json", ".words", ".aut"):
        return suffix[1:]
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    if re.search(r"^\s*\[phi1\]", text, re.M):
        return "tuple"
    if re.search(r"^\s*genus\s*=", text, re.M):
        return "hom"
    return "words"


def parse_words(text: str) -> list[Word]:
    out = []
    for n, line in _lines(text):
        try:
            out.append(Word.parse(line))
        except WordParseError as exc:
            raise ParseError(f"line {n}: {exc}") from exc
    return out

