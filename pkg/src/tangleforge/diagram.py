"""Curve-and-arc diagrams on a punctured surface, recorded combinatorially.

A diagram is a list of dashes.  Each dash sits on one of the generator
curves (``a1``, ``b1``, .., or the puncture loop ``p1``, ..), crosses it with
a sign, and belongs to a component: a closed curve or an arc between two
punctures.  ``chords`` and ``links`` keep the wiring used to draw it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .surface import FreeTargetHom, SurfaceSignature
from .words import Generator, Letter, reduce


@dataclass(frozen=True)
class Dash:
    owner: str
    pos: int
    letter: Generator
    sign: int
    component: int


@dataclass(frozen=True)
class Component:
    id: int
    kind: str
    letter: Generator
    endpoints: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in ("closed", "arc"):
            raise ValueError(f"component kind must be 'closed' or 'arc', got {self.kind!r}")
        if (self.kind == "arc") != (self.endpoints is not None):
            raise ValueError(f"component {self.id}: arcs need endpoints, closed curves must not have them")


@dataclass(frozen=True)
class BandEvent:
    source: int
    target: int
    result: int
    case: str


@dataclass(frozen=True)
class Diagram:
    sig: SurfaceSignature
    components: tuple[Component, ...]
    dashes: tuple[Dash, ...]
    bands: tuple[BandEvent, ...] = ()
    # (dash, end, dash, end); ends are "L"/"R" on handle curves, "out"/"in" on puncture loops
    chords: tuple[tuple[int, str, int, str], ...] = ()
    # (dash, puncture index) for the dash that runs into a puncture
    links: tuple[tuple[int, int], ...] = ()

    def component(self, cid: int) -> Component:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(f"no component with id {cid}")

    def dashes_on(self, owner: str) -> list[Dash]:
        return sorted((d for d in self.dashes if d.owner == owner), key=lambda d: d.pos)


@dataclass
class Census:
    closed: dict[str, int] = field(default_factory=dict)
    arcs: dict[str, int] = field(default_factory=dict)
    endpoints: dict[str, list[tuple[int, int]]] = field(default_factory=dict)

    @property
    def closed_total(self) -> int:
        return sum(self.closed.values())

    @property
    def arc_total(self) -> int:
        return sum(self.arcs.values())

    def as_json(self) -> dict:
        return {"closed": dict(self.closed), "arcs": dict(self.arcs),
                "endpoints": {k: [list(e) for e in v] for k, v in self.endpoints.items()}}


def _owner_names(sig: SurfaceSignature) -> list[str]:
    return [str(g) for g in sig.domain_generators()]


def read_off(d: Diagram) -> FreeTargetHom:
    letters = {c.id: c.letter for c in d.components}
    images = {}
    for gen in d.sig.domain_generators():
        seq = []
        for dash in d.dashes_on(str(gen)):
            if dash.component not in letters:
                raise ValueError(f"dash {dash.owner}:{dash.pos} names unknown component {dash.component}")
            letter = letters[dash.component]
            if letter != dash.letter:
                raise ValueError(f"dash {dash.owner}:{dash.pos} is labeled {dash.letter} "
                                 f"but its component is labeled {letter}")
            seq.append(Letter(letter, dash.sign))
        images[gen] = reduce(seq)[0]
    return FreeTargetHom(d.sig, images)


def homology_matrix(d: Diagram) -> list[list[int]]:
    """Rows are the closed curves h1..hg in the basis (a1, b1, .., ag, bg).

    The a_j coordinate of a curve is its signed count of crossings with b_j
    and the b_j coordinate its signed count with a_j.
    """
    g = d.sig.genus
    closed = [c for c in d.components if c.kind == "closed"]
    letters = sorted(c.letter for c in closed)
    expected = [Generator.of("h", i) for i in range(1, g + 1)]
    if letters != expected:
        raise ValueError(f"need exactly one closed curve per h1..h{g}, found "
                         f"{[str(x) for x in letters]}")
    by_letter = {c.letter: c.id for c in closed}
    rows = []
    for gen in expected:
        cid = by_letter[gen]
        row = []
        for j in range(1, g + 1):
            for owner in (f"b{j}", f"a{j}"):
                row.append(sum(x.sign for x in d.dashes if x.owner == owner and x.component == cid))
        rows.append(row)
    return rows


def rank_q(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def is_cut_system(d: Diagram) -> bool:
    if d.sig.genus == 0:
        return not any(c.kind == "closed" for c in d.components)
    try:
        rows = homology_matrix(d)
    except ValueError:
        return False
    return rank_q(rows) == d.sig.genus


def component_census(d: Diagram) -> Census:
    census = Census()
    for c in sorted(d.components, key=lambda c: (c.letter, c.id)):
        key = str(c.letter)
        if c.kind == "closed":
            census.closed[key] = census.closed.get(key, 0) + 1
        else:
            census.arcs[key] = census.arcs.get(key, 0) + 1
            census.endpoints.setdefault(key, []).append(c.endpoints)
    return census


def to_json(d: Diagram) -> dict:
    comps = []
    for c in d.components:
        entry = {"id": c.id, "kind": c.kind, "letter": str(c.letter)}
        if c.endpoints is not None:
            entry["endpoints"] = list(c.endpoints)
        comps.append(entry)
    out = {
        "genus": d.sig.genus,
        "bridges": d.sig.bridges,
        "components": comps,
        "dashes": [{"owner": x.owner, "pos": x.pos, "letter": str(x.letter),
                    "sign": x.sign, "component": x.component} for x in d.dashes],
        "bands": [{"from": e.source, "to": e.target, "result": e.result, "case": e.case}
                  for e in d.bands],
    }
    if d.chords:
        out["chords"] = [list(c) for c in d.chords]
    if d.links:
        out["links"] = [list(x) for x in d.links]
    return out


def from_json(data: dict | str) -> Diagram:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        sig = SurfaceSignature(int(data["genus"]), int(data["bridges"]))
        comps = tuple(Component(int(c["id"]), c["kind"], Generator.parse(c["letter"]),
                                tuple(c["endpoints"]) if "endpoints" in c else None)
                      for c in data["components"])
        dashes = tuple(Dash(x["owner"], int(x["pos"]), Generator.parse(x["letter"]),
                            int(x["sign"]), int(x["component"])) for x in data["dashes"])
        bands = tuple(BandEvent(int(e["from"]), int(e["to"]), int(e["result"]), e["case"])
                      for e in data.get("bands", []))
        chords = tuple((int(c[0]), c[1], int(c[2]), c[3]) for c in data.get("chords", []))
        links = tuple((int(x[0]), int(x[1])) for x in data.get("links", []))
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed diagram JSON: {exc}") from exc
    owners = set(_owner_names(sig))
    for x in dashes:
        if x.owner not in owners:
            raise ValueError(f"dash owner {x.owner!r} is not a generator curve of this surface")
        if x.sign not in (1, -1):
            raise ValueError(f"dash sign must be 1 or -1, got {x.sign}")
    return Diagram(sig, comps, dashes, bands, chords, links)
