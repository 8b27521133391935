"""``tangleforge`` command line.

Every verb prints a JSON report on stdout.  ``--out`` receives the produced
artifact (diagram JSON, homomorphism or tuple file) for ``realize``,
``readoff`` and ``move``, and a copy of the report otherwise.  Exit codes:
0 ok, 1 the check failed, 2 parse or usage error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import diagram as dg
from . import equiv
from .folding import (all_folds, canonical_form, fold_once, fold_to_core, is_rose,
                      wedge_from_words)
from .formats import (ParseError, detect_kind, format_hom, format_tuple, parse_automorphism,
                      parse_hom, parse_tuple, parse_words)
from .presentation import abelianization, simplify
from .realize import NotBounding, realize
from .render import render_svg
from .surface import IllDefinedHom, verify_bounding, verify_hom

EXIT = {"ok": 0, "fail": 1, "error": 2, "unknown": 3}
VERBS = ("verify", "realize", "readoff", "roundtrip", "fold", "pushout", "invariants",
         "move", "render")
KINDS = ("s", "sg", "sb1", "sb2", "sb3", "c", "h", "m")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tangleforge",
                                 description="Bounding homomorphisms, diagrams and splitting tuples.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("inputs", nargs="+", metavar="input")
    ap.add_argument("--budget", type=int, default=equiv.DEFAULT_BUDGET)
    ap.add_argument("--pair", default=None, help="i,j for pushout")
    ap.add_argument("--kind", choices=KINDS, default=None)
    ap.add_argument("--side", type=int, choices=(1, 2), default=None)
    ap.add_argument("--color", type=int, choices=(1, 2, 3), default=None)
    ap.add_argument("--mode", choices=("shared", "unshared"), default="shared")
    ap.add_argument("--out", default=None)
    ap.add_argument("--svg", default=None)
    ap.add_argument("--seed", type=int, default=None)
    return ap


def _read(path: str) -> tuple[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return detect_kind(path, text), text


def _load_hom(path: str):
    kind, text = _read(path)
    if kind != "hom":
        raise UsageError(f"{path}: expected a homomorphism file")
    return parse_hom(text)


def _load_tuple(path: str):
    kind, text = _read(path)
    if kind != "tuple":
        raise UsageError(f"{path}: expected a tuple file")
    return parse_tuple(text)


def _load_diagram(path: str):
    kind, text = _read(path)
    if kind != "json":
        raise UsageError(f"{path}: expected a diagram JSON file")
    try:
        return dg.from_json(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _bounding_payload(phi):
    try:
        report = verify_bounding(phi)
    except IllDefinedHom as exc:
        return "fail", {"wellDefined": False}, [str(exc)]
    payload = {"wellDefined": True, **report.as_json()}
    return ("ok" if report.ok else "fail"), payload, list(report.failures)


def cmd_verify(args):
    kind, text = _read(args.inputs[0])
    if kind == "hom":
        return _bounding_payload(parse_hom(text))
    if kind == "tuple":
        result = equiv.verify_membership(parse_tuple(text), args.budget)
        status = {"holds": "ok", "fails": "fail", "unknown": "unknown"}[result.verdict.value]
        return status, result.as_json(), list(result.notes)
    raise UsageError("verify takes a .hom or .tuple file")


def _write_svg(path, d, title):
    Path(path).write_text(render_svg(d, title))


def cmd_realize(args):
    phi = _load_hom(args.inputs[0])
    try:
        res = realize(phi)
    except (NotBounding, IllDefinedHom) as exc:
        return "fail", {}, [str(exc)]
    data = dg.to_json(res.diagram)
    data["trace"] = res.trace_json()
    if args.svg:
        _write_svg(args.svg, res.diagram, Path(args.inputs[0]).name)
    return "ok", data, [], json.dumps(data, indent=2) + "\n"


def cmd_readoff(args):
    d = _load_diagram(args.inputs[0])
    phi = dg.read_off(d)
    payload = {"hom": format_hom(phi), "wellDefined": verify_hom(phi)}
    return "ok", payload, [], format_hom(phi)


def cmd_roundtrip(args):
    phi = _load_hom(args.inputs[0])
    try:
        res = realize(phi)
    except (NotBounding, IllDefinedHom) as exc:
        return "fail", {}, [str(exc)]
    back = dg.read_off(res.diagram)
    census = dg.component_census(res.diagram)
    checks = {
        "readOffMatches": back == phi,
        "closedCurves": census.closed_total == phi.sig.genus,
        "arcs": census.arc_total == phi.sig.bridges,
        "cutSystem": dg.is_cut_system(res.diagram),
    }
    diags = [f"check {k} failed" for k, v in checks.items() if not v]
    return ("ok" if all(checks.values()) else "fail"), {"checks": checks,
                                                        "bandCount": res.band_count}, diags


def cmd_fold(args):
    kind, text = _read(args.inputs[0])
    if kind == "hom":
        phi = parse_hom(text)
        words = [w for w in phi.images.values() if w]
        gens = phi.sig.target_generators()
    elif kind == "words":
        words = [w for w in parse_words(text) if w]
        gens = sorted(set().union(*(w.generators() for w in words))) if words else []
    else:
        raise UsageError("fold takes a .hom file or a file of words, one per line")
    if not words:
        return "ok", {"rose": len(gens) == 0, "rank": len(gens), "folds": []}, []
    graph = wedge_from_words(words)
    core, trace = fold_to_core(graph)
    rose = is_rose(core, gens, len(gens))
    payload = {
        "rose": rose,
        "rank": len(gens),
        "generators": [str(g) for g in gens],
        "coreVertices": len(core.vertices),
        "coreEdges": len(core.edges),
        "folds": [r.as_json() for r in trace],
    }
    if args.seed is not None:
        rng = random.Random(args.seed)
        g = graph
        while True:
            options = all_folds(g)
            if not options:
                break
            g, _ = fold_once(g, rng.choice(options))
        payload["randomOrderAgrees"] = canonical_form(g) == canonical_form(core)
    return ("ok" if rose else "fail"), payload, []


def _pair(arg, arity):
    if arg is None:
        return None
    try:
        i, j = (int(x) for x in arg.split(","))
    except ValueError:
        raise UsageError(f"--pair must look like 1,2; got {arg!r}") from None
    if not (1 <= i <= arity and 1 <= j <= arity) or i == j:
        raise UsageError(f"--pair {arg} out of range for a {arity}-tuple")
    return i, j


def cmd_pushout(args):
    tup = _load_tuple(args.inputs[0])
    pair = _pair(args.pair, tup.arity)
    pres = equiv.pushout_pair(tup, *pair) if pair else equiv.pushout_tuple(tup)
    res = simplify(pres, args.budget)
    payload = {
        "pair": list(pair) if pair else None,
        "presentation": pres.as_json(),
        "simplified": res.presentation.as_json(),
        "simplifySteps": res.steps,
        "budgetExhausted": res.exhausted,
        "abelianization": abelianization(pres).as_json(),
    }
    return "ok", payload, []


def cmd_invariants(args):
    tup = _load_tuple(args.inputs[0])
    pairs = [(1, 2)] if tup.arity == 2 else [(1, 2), (2, 3), (3, 1)]
    payload = {"flavor": tup.flavor,
               "tuplePushoutAbelianization": abelianization(equiv.pushout_tuple(tup)).as_json()}
    if tup.sig.bridges:
        payload["linkComponents"] = {f"{i},{j}": equiv.link_components(tup, i, j) for i, j in pairs}
        if tup.arity == 3:
            payload["surfaceComponents"] = equiv.surface_components(tup)
            payload["eulerCharacteristic"] = equiv.euler_characteristic(tup)
            payload["spherical"] = equiv.is_spherical(tup)
    return "ok", payload, []


def cmd_move(args):
    tup = _load_tuple(args.inputs[0])
    kind = args.kind
    if kind is None:
        raise UsageError("move needs --kind")
    try:
        if kind == "s":
            new = (equiv.move_stabilize_heegaard(tup) if tup.arity == 2
                   else equiv.move_stabilize_genus(tup))
        elif kind == "sg":
            new = equiv.move_stabilize_genus(tup)
        elif kind in ("sb1", "sb2", "sb3"):
            n = int(kind[-1])
            if tup.arity == 2:
                if n == 3:
                    raise UsageError("sb3 needs a triple")
                new = equiv.move_perturb(equiv.perturbation_normal_form(tup), n)
            else:
                normal = equiv.perturbation_normal_form(tup, n, args.mode)
                new = equiv.move_perturb_triple(normal, n, args.mode, min(args.budget, 20_000))
        elif kind == "c":
            new = equiv.move_cyclic(tup)
        else:
            if len(args.inputs) < 2:
                raise UsageError(f"--kind {kind} needs an automorphism file as second input")
            _, text = _read(args.inputs[1])
            fwd, back = parse_automorphism(text)
            if kind == "h":
                index = args.color or args.side or 1
                if index > tup.arity:
                    raise UsageError(f"homomorphism index {index} out of range")
                new = equiv.move_target_automorphism(tup, index, fwd, back)
            else:
                new = equiv.move_surface_automorphism(tup, fwd, back)
    except equiv.Inconclusive as exc:
        return "unknown", {}, [str(exc)]
    except equiv.MoveRejected as exc:
        return "fail", {}, [str(exc)]
    text = format_tuple(new)
    return "ok", {"tuple": text, "flavor": new.flavor,
                  "genus": new.sig.genus, "bridges": new.sig.bridges}, [], text


def cmd_render(args):
    kind, text = _read(args.inputs[0])
    if kind == "json":
        d = dg.from_json(text)
    elif kind == "hom":
        try:
            d = realize(parse_hom(text)).diagram
        except (NotBounding, IllDefinedHom) as exc:
            return "fail", {}, [str(exc)]
    else:
        raise UsageError("render takes a diagram JSON or a .hom file")
    target = args.svg or args.out
    if not target:
        raise UsageError("render needs --svg PATH")
    _write_svg(target, d, Path(args.inputs[0]).name)
    census = dg.component_census(d)
    return "ok", {"svg": target, "closed": census.closed_total, "arcs": census.arc_total,
                  "bands": len(d.bands)}, []


COMMANDS = {
    "verify": cmd_verify, "realize": cmd_realize, "readoff": cmd_readoff,
    "roundtrip": cmd_roundtrip, "fold": cmd_fold, "pushout": cmd_pushout,
    "invariants": cmd_invariants, "move": cmd_move, "render": cmd_render,
}


def run(argv: list[str] | None = None) -> tuple[int, str]:
    args = build_parser().parse_args(argv)
    artifact = None
    try:
        result = COMMANDS[args.verb](args)
        status, payload, diags = result[:3]
        if len(result) > 3:
            artifact = result[3]
    except (ParseError, UsageError) as exc:
        status, payload, diags = "error", {}, [str(exc)]
    except ValueError as exc:
        status, payload, diags = "error", {}, [str(exc)]
    report = {"verb": args.verb, "inputs": list(args.inputs), "status": status,
              "payload": payload, "diagnostics": diags}
    text = json.dumps(report, indent=2) + "\n"
    if args.out and args.verb != "render":
        # realize, readoff and move write their artifact; other verbs write the report
        Path(args.out).write_text(artifact if artifact is not None else text)
    return EXIT[status], text


def main(argv: list[str] | None = None) -> int:
    code, text = run(argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
