"""Build a curve-and-arc diagram whose read-off is a given bounding homomorphism.

Stage one draws one dash per letter of every image and wires the dashes
together: chords from the free reductions along the polygon boundary and the
puncture petals, plus the nested pairing inside each petal.  Stage two folds
the wedge of all images, with each edge tagged by the component of its dash;
a fold between two different tags bands those components together.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import BandEvent, Census, Component, Dash, Diagram, component_census
from .folding import FoldRecord, fold_to_core, is_rose, wedge_from_words
from .surface import BoundingReport, FreeTargetHom, verify_bounding
from .unionfind import UnionFind
from .words import Letter, reduce


class NotBounding(ValueError):
    def __init__(self, report: BoundingReport):
        self.report = report
        super().__init__("homomorphism is not bounding: " + "; ".join(report.failures))


@dataclass
class RealizationResult:
    diagram: Diagram
    preliminary: Diagram
    preliminary_census: Census
    fold_trace: list[FoldRecord]
    band_count: int
    report: BoundingReport

    def trace_json(self) -> dict:
        return {
            "preliminaryCensus": self.preliminary_census.as_json(),
            "bandCount": self.band_count,
            "folds": [r.as_json() for r in self.fold_trace],
        }


def _checked_report(phi: FreeTargetHom) -> BoundingReport:
    report = verify_bounding(phi)
    if not report.ok:
        raise NotBounding(report)
    return report


def preliminary_diagram(phi: FreeTargetHom, report: BoundingReport | None = None) -> Diagram:
    if report is None:
        report = _checked_report(phi)
    sig = phi.sig
    dashes: list[tuple[str, int, Letter]] = []
    ids: dict[str, list[int]] = {}
    for gen in sig.domain_generators():
        owner = str(gen)
        ids[owner] = []
        for pos, letter in enumerate(phi[gen]):
            ids[owner].append(len(dashes))
            dashes.append((owner, pos, letter))

    # occurrences are (dash, end, letter as read along the boundary)
    petals = [(d, "out", dashes[d][2]) for i in range(1, 2 * sig.bridges + 1) for d in ids[f"p{i}"]]
    boundary = []
    for j in range(1, sig.genus + 1):
        A, B = ids[f"a{j}"], ids[f"b{j}"]
        boundary += [(d, "L", dashes[d][2]) for d in A]
        boundary += [(d, "L", dashes[d][2]) for d in B]
        boundary += [(d, "R", dashes[d][2].inverse()) for d in reversed(A)]
        boundary += [(d, "R", dashes[d][2].inverse()) for d in reversed(B)]

    chords: list[tuple[int, str, int, str]] = []

    def matched(occ, trace):
        for i, j in trace.pairs:
            chords.append((occ[i][0], occ[i][1], occ[j][0], occ[j][1]))
        return [occ[k] for k in trace.survivors]

    w1, tr1 = reduce([o[2] for o in petals])
    w2, tr2 = reduce([o[2] for o in boundary])
    if w1 != w2:
        raise RuntimeError("reduced boundary words differ; the surface relation must have failed")
    rest1 = matched(petals, tr1)
    rest2 = matched(boundary, tr2)
    residual = [(d, e, l.inverse()) for d, e, l in reversed(rest2)] + rest1
    leftover, tr3 = reduce([o[2] for o in residual])
    if leftover:
        raise RuntimeError("residual boundary word did not cancel")
    matched(residual, tr3)

    links: list[tuple[int, int]] = []
    for i in range(1, 2 * sig.bridges + 1):
        P = ids[f"p{i}"]
        k = len(P)
        links.append((P[k // 2], i))
        for j in range(k // 2):
            chords.append((P[j], "in", P[k - 1 - j], "in"))

    uf = UnionFind(range(len(dashes)))
    for d1, _, d2, _ in chords:
        uf.union(d1, d2)
    linked = {d: i for d, i in links}
    comp_of: dict[int, int] = {}
    components = []
    groups = uf.groups()
    for cid, root in enumerate(sorted(groups), start=1):
        members = groups[root]
        letters = {dashes[d][2].gen for d in members}
        if len(letters) != 1:
            raise RuntimeError(f"component {cid} mixes letters {sorted(map(str, letters))}")
        letter = letters.pop()
        ends = [d for d in members if d in linked]
        if not ends:
            components.append(Component(cid, "closed", letter))
        elif len(ends) == 2:
            ends.sort(key=lambda d: -dashes[d][2].sign)
            components.append(Component(cid, "arc", letter, (linked[ends[0]], linked[ends[1]])))
        else:
            raise RuntimeError(f"component {cid} has {len(ends)} puncture ends")
        for d in members:
            comp_of[d] = cid
    out = tuple(Dash(o, pos, l.gen, l.sign, comp_of[k]) for k, (o, pos, l) in enumerate(dashes))
    return Diagram(sig, tuple(components), out, (), tuple(chords), tuple(links))


def realize(phi: FreeTargetHom) -> RealizationResult:
    report = _checked_report(phi)
    pre = preliminary_diagram(phi, report)
    sig = phi.sig

    words, tags = [], []
    for gen in sig.domain_generators():
        w = phi[gen]
        if w:
            words.append(w)
            tags.append([d.component for d in pre.dashes_on(str(gen))])
    trace: list[FoldRecord] = []
    if words:
        core, trace = fold_to_core(wedge_from_words(words, tags))
        if not is_rose(core, sig.target_generators(), sig.rank):
            raise RuntimeError("wedge of images did not fold to the rose")

    uf = UnionFind(c.id for c in pre.components)
    bands = []
    for rec in trace:
        if rec.is_band:
            x, y = rec.tags
            bands.append(BandEvent(x, y, uf.union(x, y), rec.case))

    groups = uf.groups()
    comps = []
    for root in sorted(groups):
        members = [pre.component(c) for c in groups[root]]
        arcs = [c for c in members if c.kind == "arc"]
        if len(arcs) > 1:
            raise RuntimeError(f"band merged {len(arcs)} arcs into one component")
        if arcs:
            comps.append(Component(root, "arc", members[0].letter, arcs[0].endpoints))
        else:
            comps.append(Component(root, "closed", members[0].letter))
    dashes = tuple(Dash(d.owner, d.pos, d.letter, d.sign, uf.find(d.component)) for d in pre.dashes)
    final = Diagram(sig, tuple(comps), dashes, tuple(bands), pre.chords, pre.links)

    census = component_census(final)
    if census.closed_total != sig.genus or census.arc_total != sig.bridges:
        raise RuntimeError("realized diagram has the wrong number of curves or arcs")
    return RealizationResult(final, pre, component_census(pre), trace, len(bands), report)
