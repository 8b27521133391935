"""Stallings folding of letter-colored graphs.

Edges carry a color (a generator) and an optional integer tag.  When two
edges with different tags are folded, the two tags are merged: every edge
carrying either tag afterwards carries the smaller one.

Folds are chosen deterministically: smallest shared vertex id, then smallest
color, then smallest pair of edge ids.  If the same pair is available both
as incoming and outgoing edges (two loops), the incoming reading wins.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple, Sequence

from .words import Generator, Word

UNTAGGED = -1
IN, OUT = 0, 1
_CASE = {IN: "I", OUT: "II"}


@dataclass(frozen=True)
class Edge:
    id: int
    src: int
    tgt: int
    color: Generator
    tag: int = UNTAGGED


@dataclass(frozen=True)
class FoldGraph:
    vertices: frozenset[int]
    basepoint: int
    edges: tuple[Edge, ...]

    def edge(self, eid: int) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)


class FoldPair(NamedTuple):
    vertex: int
    color: Generator
    edges: tuple[int, int]
    direction: int


@dataclass(frozen=True)
class FoldRecord:
    kind: str
    vertex: int
    color: Generator
    edges: tuple[int, int]
    surviving: int
    tags: tuple[int, int]
    case: str

    @property
    def is_band(self) -> bool:
        return self.tags[0] != self.tags[1]

    def as_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertex": self.vertex,
            "color": str(self.color),
            "edges": list(self.edges),
            "surviving": self.surviving,
            "tags": list(self.tags),
            "case": self.case,
        }


def wedge_from_words(words: Sequence[Word],
                     tags: Sequence[Sequence[int]] | None = None) -> FoldGraph:
    """One subdivided circle per word, all joined at basepoint 0."""
    vertices = [0]
    edges: list[Edge] = []
    next_v = 1
    for k, w in enumerate(words):
        if not w:
            raise ValueError(f"word {k} is empty; drop it before building the wedge")
        wtags = tags[k] if tags is not None else [UNTAGGED] * len(w)
        if len(wtags) != len(w):
            raise ValueError(f"word {k} has {len(w)} letters but {len(wtags)} tags")
        cur = 0
        for i, (g, s) in enumerate(w):
            if i == len(w) - 1:
                nxt = 0
            else:
                nxt = next_v
                vertices.append(nxt)
                next_v += 1
            src, tgt = (cur, nxt) if s > 0 else (nxt, cur)
            edges.append(Edge(len(edges), src, tgt, g, wtags[i]))
            cur = nxt
    return FoldGraph(frozenset(vertices), 0, tuple(edges))


def _incidence(g: FoldGraph) -> dict[tuple[int, Generator, int], list[int]]:
    inc: dict[tuple[int, Generator, int], list[int]] = {}
    for e in g.edges:
        inc.setdefault((e.tgt, e.color, IN), []).append(e.id)
        inc.setdefault((e.src, e.color, OUT), []).append(e.id)
    return inc


def all_folds(g: FoldGraph) -> list[FoldPair]:
    """Every foldable pair, in the deterministic order."""
    out = []
    for (v, c, d), ids in _incidence(g).items():
        ids = sorted(ids)
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                out.append(FoldPair(v, c, (ids[i], ids[j]), d))
    out.sort(key=lambda fp: (fp.vertex, fp.color, fp.edges, fp.direction))
    return out


def find_fold(g: FoldGraph) -> FoldPair | None:
    best = None
    for (v, c, d), ids in _incidence(g).items():
        if len(ids) < 2:
            continue
        e1, e2 = heapq.nsmallest(2, ids)
        key = (v, c, (e1, e2), d)
        if best is None or key < best:
            best = key
    return FoldPair(*best) if best is not None else None


def fold_once(g: FoldGraph, pair: FoldPair) -> tuple[FoldGraph, FoldRecord]:
    v, color, (e1, e2), d = pair
    if e1 > e2:
        e1, e2 = e2, e1
    E1, E2 = g.edge(e1), g.edge(e2)
    for E in (E1, E2):
        end = E.tgt if d == IN else E.src
        if E.color != color or end != v:
            raise ValueError(f"edges {e1}, {e2} are not a foldable pair at vertex {v}")
    o1 = E1.src if d == IN else E1.tgt
    o2 = E2.src if d == IN else E2.tgt
    tag = min(E1.tag, E2.tag)
    lose_tag = max(E1.tag, E2.tag)
    keep_v, gone_v = min(o1, o2), max(o1, o2)

    def fix(E: Edge) -> Edge:
        src = keep_v if E.src == gone_v else E.src
        tgt = keep_v if E.tgt == gone_v else E.tgt
        etag = tag if E.tag == lose_tag else E.tag
        return replace(E, src=src, tgt=tgt, tag=etag)

    edges = tuple(fix(E) for E in g.edges if E.id != e2)
    vertices = g.vertices - {gone_v} if o1 != o2 else g.vertices
    rec = FoldRecord("typeI" if o1 == o2 else "typeII", v, color, (e1, e2), e1,
                     (E1.tag, E2.tag), _CASE[d])
    return FoldGraph(frozenset(vertices), g.basepoint, edges), rec


class _Folder:
    """Mutable folding engine; same fold order as repeated find_fold/fold_once."""

    def __init__(self, g: FoldGraph):
        self.parent = {v: v for v in g.vertices}
        self.tag_parent: dict[int, int] = {}
        self.src = {e.id: e.src for e in g.edges}
        self.tgt = {e.id: e.tgt for e in g.edges}
        self.color = {e.id: e.color for e in g.edges}
        self.tag = {e.id: e.tag for e in g.edges}
        self.basepoint = g.basepoint
        self.inc: dict[int, dict[tuple[Generator, int], set[int]]] = {v: {} for v in g.vertices}
        self.hot: dict[int, set[tuple[Generator, int]]] = {v: set() for v in g.vertices}
        for e in g.edges:
            self._add(e.tgt, (e.color, IN), e.id)
            self._add(e.src, (e.color, OUT), e.id)
        self.heap = [v for v in g.vertices if self.hot[v]]
        heapq.heapify(self.heap)

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def find_tag(self, x: int) -> int:
        tp = self.tag_parent
        while x in tp:
            nxt = tp[x]
            if nxt in tp:
                tp[x] = tp[nxt]
            x = nxt
        return x

    def _add(self, v, key, eid):
        s = self.inc[v].setdefault(key, set())
        s.add(eid)
        if len(s) >= 2:
            self.hot[v].add(key)

    def _remove(self, v, key, eid):
        s = self.inc[v][key]
        s.discard(eid)
        if len(s) < 2:
            self.hot[v].discard(key)
            if not s:
                del self.inc[v][key]

    def _best(self, v):
        best = None
        for key in self.hot[v]:
            e1, e2 = heapq.nsmallest(2, self.inc[v][key])
            cand = (key[0], (e1, e2), key[1])
            if best is None or cand < best:
                best = cand
        return best

    def _other(self, eid, d):
        return self.find(self.src[eid] if d == IN else self.tgt[eid])

    def run(self) -> list[FoldRecord]:
        records = []
        while self.heap:
            v = heapq.heappop(self.heap)
            if self.find(v) != v or not self.hot[v]:
                continue
            color, (e1, e2), d = self._best(v)
            o1, o2 = self._other(e1, d), self._other(e2, d)
            t1, t2 = self.find_tag(self.tag[e1]), self.find_tag(self.tag[e2])
            self._remove(self.find(self.src[e2]), (color, OUT), e2)
            self._remove(self.find(self.tgt[e2]), (color, IN), e2)
            del self.src[e2], self.tgt[e2], self.color[e2], self.tag[e2]
            if t1 != t2:
                self.tag_parent[max(t1, t2)] = min(t1, t2)
            if o1 != o2:
                self._merge(min(o1, o2), max(o1, o2))
            heapq.heappush(self.heap, v)
            records.append(FoldRecord("typeI" if o1 == o2 else "typeII", v, color,
                                      (e1, e2), e1, (t1, t2), _CASE[d]))
        return records

    def _merge(self, keep: int, gone: int):
        self.parent[gone] = keep
        inc_k = self.inc[keep]
        for key, s in self.inc.pop(gone).items():
            target = inc_k.get(key)
            if target is None:
                inc_k[key] = s
                target = s
            else:
                if len(s) > len(target):
                    s, target = target, s
                    inc_k[key] = target
                target.update(s)
            if len(target) >= 2:
                self.hot[keep].add(key)
        del self.hot[gone]
        heapq.heappush(self.heap, keep)

    def graph(self) -> FoldGraph:
        verts = frozenset(v for v in self.parent if self.parent[v] == v)
        edges = tuple(Edge(eid, self.find(self.src[eid]), self.find(self.tgt[eid]),
                           self.color[eid], self.find_tag(self.tag[eid]))
                      for eid in sorted(self.src))
        return FoldGraph(verts, self.basepoint, edges)


def fold_to_core(g: FoldGraph) -> tuple[FoldGraph, list[FoldRecord]]:
    folder = _Folder(g)
    records = folder.run()
    return folder.graph(), records


def is_rose(g: FoldGraph, generators: Iterable[Generator] | None = None,
            rank: int | None = None) -> bool:
    if g.vertices != frozenset([g.basepoint]):
        return False
    colors = [e.color for e in g.edges]
    if len(set(colors)) != len(colors):
        return False
    if rank is not None and len(colors) != rank:
        return False
    if generators is not None and set(colors) != set(generators):
        return False
    return True


def generates_full(words: Iterable[Word], rank: int,
                   generators: Iterable[Generator] | None = None) -> bool:
    """True when the words generate the free group on ``rank`` generators.

    With ``generators`` given, the folded rose must use exactly those colors.
    """
    ws = [w for w in words if w]
    if not ws:
        return rank == 0 and not (generators and set(generators))
    core, _ = fold_to_core(wedge_from_words(ws))
    return is_rose(core, generators, rank)


def canonical_form(g: FoldGraph) -> tuple:
    """Isomorphism invariant of a folded graph, relabeling vertices by BFS from the basepoint."""
    out_adj: dict[int, list[Edge]] = {}
    in_adj: dict[int, list[Edge]] = {}
    for e in g.edges:
        out_adj.setdefault(e.src, []).append(e)
        in_adj.setdefault(e.tgt, []).append(e)
    label = {g.basepoint: 0}
    queue = deque([g.basepoint])
    while queue:
        v = queue.popleft()
        steps = [(e.color, OUT, e.tgt) for e in out_adj.get(v, [])]
        steps += [(e.color, IN, e.src) for e in in_adj.get(v, [])]
        for _, _, w in sorted(steps):
            if w not in label:
                label[w] = len(label)
                queue.append(w)
    unreached = len(g.vertices) - len(label)
    edges = sorted((label.get(e.src, -1), label.get(e.tgt, -1), e.color) for e in g.edges)
    return len(label), unreached, tuple(edges)
