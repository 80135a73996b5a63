"""Command-line entry point: JSON in, JSON out, deterministic output.

Exit codes: 0 on success, 1 when a mathematical hypothesis or validity check
fails (a machine-readable error object is still printed), 2 on malformed
input.  Identical inputs produce byte-identical output regardless of the
worker count.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import arrangements, evenclass, invariants, torsion
from .errors import DomainError, MalformedInputError
from .invariants import CATALOG, CoveringParams, SurfaceInvariants, catalog_entry
from .torsion import AutAction, FiniteAbelianGroup

SCHEMA = "plurican/1"

RECIPES = (
    "lemma-ev",
    "camp1-moduli",
    "cplus",
    "campedelli-cover",
    "burniat-cover",
    "mlp-cover",
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--workers", type=int, default=1,
        help="worker processes for internal enumeration (output is identical "
             "for every value)",
    )
    common.add_argument("--out", type=Path, default=None, help="write JSON here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="plurican",
        description="Exact computations for cyclic coverings of surfaces of "
                    "general type: covering invariants, totally even point "
                    "sets, torsion component counts, line arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "verify-lemma-ev", parents=[common],
        help="census of totally even 8-point sets in PG(3, F2) under GL(4, 2)",
    )

    inv = sub.add_parser(
        "invariants", parents=[common],
        help="invariants of a degree-d covering branched in a d*m-canonical curve",
    )
    inv.add_argument("--d", type=int, required=True, help="covering degree")
    inv.add_argument("--m", type=int, required=True, help="canonical multiple")
    inv.add_argument("--surface", help="catalogue surface name (see 'catalog')")
    inv.add_argument("--pa", type=int, help="arithmetic genus of the base")
    inv.add_argument("--k2", type=int, help="canonical self-intersection of the base")
    inv.add_argument("--q", type=int, default=0, help="irregularity of the base")

    comp = sub.add_parser(
        "components", parents=[common],
        help="torsion-group covering counts and component bounds",
    )
    comp.add_argument("--group", required=True,
                      help="cyclic factor orders, e.g. 2,2,2 (empty string = trivial)")
    comp.add_argument("--d", type=int, required=True, help="covering degree")
    comp.add_argument("--m", type=int, help="canonical multiple (enables the orbit criterion)")
    comp.add_argument("--aut", type=Path,
                      help="JSON file with automorphism generators of the group")

    chk = sub.add_parser(
        "check-arrangement", parents=[common],
        help="validate labeled line-arrangement covering data",
    )
    chk.add_argument("file", type=Path)
    chk.add_argument("--mode", choices=["campedelli", "extension"],
                     help="default: campedelli for 7 lines, extension for 8")

    inc = sub.add_parser(
        "incidences", parents=[common],
        help="exact intersection points and multiplicities of an arrangement",
    )
    inc.add_argument("file", type=Path)

    sub.add_parser("catalog", parents=[common], help="list the embedded base surfaces")

    rep = sub.add_parser(
        "reproduce", parents=[common],
        help="run a named headline computation end to end",
    )
    rep.add_argument("recipe", choices=RECIPES)
    rep.add_argument("--d", type=int, help="covering degree (cplus)")
    rep.add_argument("--m", type=int, help="canonical multiple (cplus)")

    return parser


def _load_json(path: Path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path} is not valid JSON: {exc}") from exc


def _parse_group(spec: str) -> FiniteAbelianGroup:
    spec = spec.strip()
    if not spec:
        return FiniteAbelianGroup(())
    try:
        orders = tuple(int(part) for part in spec.split(","))
    except ValueError as exc:
        raise MalformedInputError(f"cannot parse group {spec!r}: {exc}") from exc
    return FiniteAbelianGroup(orders)


def _load_generators(G: FiniteAbelianGroup, path: Path) -> list[AutAction]:
    data = _load_json(path)
    if isinstance(data, dict):
        raw = data.get("generators")
    else:
        raw = data
    if not isinstance(raw, list):
        raise MalformedInputError(
            f"{path}: expected a 'generators' array of automorphism specs"
        )
    gens = []
    for item in raw:
        if not isinstance(item, dict) or "kind" not in item:
            raise MalformedInputError(f"bad automorphism spec {item!r}")
        if item["kind"] == "matrix":
            gens.append(AutAction.from_matrix(G, item.get("entries", [])))
        elif item["kind"] == "permutation":
            gens.append(AutAction.from_table(G, item.get("pairs", [])))
        else:
            raise MalformedInputError(f"unknown automorphism kind {item['kind']!r}")
    return gens


def _surface_input(args) -> tuple[str | None, SurfaceInvariants]:
    if args.surface is not None:
        if args.pa is not None or args.k2 is not None:
            raise MalformedInputError("give either --surface or --pa/--k2, not both")
        entry = catalog_entry(args.surface)
        return entry.name, entry.invariants
    if args.pa is None or args.k2 is None:
        raise MalformedInputError("need --surface NAME or both --pa and --k2")
    return None, SurfaceInvariants.from_pa(args.pa, args.q, args.k2)


def cmd_verify_lemma_ev(args) -> tuple[dict, int]:
    report = evenclass.verify_lemma_ev(workers=args.workers)
    return {"command": "verify-lemma-ev", **report.as_json()}, 0


def cmd_invariants(args) -> tuple[dict, int]:
    name, X = _surface_input(args)
    c = CoveringParams(args.d, args.m)
    Y = invariants.covering_invariants(X, c)
    payload = {
        "command": "invariants",
        "input": {"surface": name, "X": X.as_json(), "d": c.d, "m": c.m},
        "Y": Y.as_json(),
        "branch_curve_genus": invariants.branch_curve_genus(X.K2, c),
        "generic_smooth": invariants.generic_pluricanonical_smooth(c.d, X.K2, c.m),
        "moduli_dim_lower_bound": invariants.moduli_dimension_lower_bound(c, X),
    }
    if c.d == 2 and 2 * c.m >= 5 and X.is_miyaoka_yau:
        payload["moduli_dim"] = invariants.moduli_dimension(c.m, X)
    return payload, 0


def cmd_components(args) -> tuple[dict, int]:
    G = _parse_group(args.group)
    payload = {
        "command": "components",
        "group": G.as_json(),
        "d": args.d,
        "tor_d_order": torsion.tor_d_order(G, args.d),
        "covering_count": torsion.covering_count(G, args.d),
        "theorem_mod_bound": torsion.theorem_mod_component_bound(G, args.d),
    }
    if args.aut is not None:
        gens = _load_generators(G, args.aut)
        payload["orbit_count"] = torsion.orbit_count(G, gens)
        if args.m is not None:
            payload["m"] = args.m
            payload["cnew_count"] = torsion.cnew_component_count(G, gens, args.d, args.m)
    return payload, 0


def cmd_check_arrangement(args) -> tuple[dict, int]:
    arr = arrangements.load_arrangement(_load_json(args.file))
    mode = args.mode
    if mode is None:
        if len(arr.lines) == 7:
            mode = "campedelli"
        elif len(arr.lines) == 8:
            mode = "extension"
        else:
            raise MalformedInputError(
                f"cannot infer mode for {len(arr.lines)} lines; pass --mode"
            )
    if mode == "campedelli":
        report = arrangements.check_campedelli(arr)
        passed = report.passed
    else:
        report = arrangements.analyze_extension(arr)
        passed = report.totally_even
    payload = {
        "command": "check-arrangement",
        "mode": mode,
        "passed": passed,
        "report": report.as_json(),
    }
    return payload, 0 if passed else 1


def cmd_incidences(args) -> tuple[dict, int]:
    arr = arrangements.load_arrangement(_load_json(args.file))
    report = arrangements.compute_incidences(arr)
    return {"command": "incidences", **report.as_json()}, 0


def cmd_catalog(args) -> tuple[dict, int]:
    return {
        "command": "catalog",
        "entries": [entry.as_json() for entry in CATALOG],
    }, 0


def _recipe_lemma_ev(args) -> dict:
    report = evenclass.verify_lemma_ev(workers=args.workers)
    return {
        "claim": "eight-point subsets of PG(3, F2) meeting every plane in an "
                 "even number of points fall into exactly two classes under "
                 "GL(4, 2): plane complements and one exceptional configuration",
        "inputs": {"space": "PG(3, F2)", "set_size": 8},
        "results": report.as_json(),
    }


def _recipe_camp1_moduli(args) -> dict:
    entry = catalog_entry("campedelli")
    cover = invariants.covering_invariants(entry.invariants, CoveringParams(2, 1))
    report = evenclass.verify_lemma_ev(workers=args.workers)
    return {
        "claim": "double covers of Campedelli surfaces branched along smooth "
                 "bicanonical curves fill exactly two connected components of "
                 "the moduli space of surfaces with K2 = 16, p_a = 4",
        "inputs": {"surface": entry.name, "d": 2, "m": 1},
        "results": {
            "components": report.orbit_count,
            "moduli_space": {"K2": cover.K2, "pa": cover.p_a},
            "coverings_per_branch_curve": torsion.covering_count(entry.torsion, 2),
            "census": report.as_json(),
        },
    }


def _recipe_cplus(args) -> dict:
    d = args.d if args.d is not None else 2
    m = args.m if args.m is not None else 3
    total = torsion.cplus_total(d, m)
    entry = catalog_entry("miyaoka-yau-333-1")
    return {
        "claim": "for admissible degrees the moduli space receiving the "
                 "coverings of the rigid K2 = 333 surfaces has at least "
                 f"3 * 5^6 = {total} connected components",
        "inputs": {"d": d, "m": m, "surfaces": [entry.name, "miyaoka-yau-333-2"]},
        "results": {
            "components": total,
            "orbit_count_per_surface": torsion.orbit_count(entry.torsion, []),
            "surface_count_factor": 3,
        },
    }


def _covering_chain(name: str, args) -> dict:
    entry = catalog_entry(name)
    cover = invariants.covering_invariants(entry.invariants, CoveringParams(2, 1))
    degree = invariants.composed_canonical_degree(entry.bicanonical_map_degree)
    out = {
        "inputs": {"surface": entry.name, "d": 2, "m": 1},
        "results": {
            "base_bicanonical_degree": entry.bicanonical_map_degree,
            "canonical_map_degree": degree,
            "Y": cover.as_json(),
            "canonical_image_ambient_dim": cover.p_g - 1,
        },
    }
    if entry.torsion is not None:
        out["results"]["coverings_per_branch_curve"] = torsion.covering_count(entry.torsion, 2)
    return out


def _recipe_campedelli_cover(args) -> dict:
    out = _covering_chain("campedelli", args)
    out["claim"] = (
        "the canonical map of a double cover of a Campedelli surface branched "
        "in a bicanonical curve is a degree 16 morphism onto the plane"
    )
    return out


def _recipe_burniat_cover(args) -> dict:
    surfaces = []
    for k2 in (6, 5, 4, 3):
        chain = _covering_chain(f"burniat-{k2}", args)
        surfaces.append({"surface": f"burniat-{k2}", **chain["results"]})
    return {
        "claim": "the canonical map of a double cover of a Burniat surface "
                 "branched in a bicanonical curve is a degree 8 morphism onto "
                 "a Del Pezzo surface of degree K2",
        "inputs": {"d": 2, "m": 1},
        "results": {"surfaces": surfaces},
    }


def _recipe_mlp_cover(args) -> dict:
    out = _covering_chain("mendes-lopes-pardini", args)
    out["claim"] = (
        "the canonical map of a double cover of a Mendes Lopes-Pardini "
        "surface branched in a bicanonical curve is a degree 4 map onto a "
        "sextic Enriques surface in P^3"
    )
    return out


_RECIPE_HANDLERS = {
    "lemma-ev": _recipe_lemma_ev,
    "camp1-moduli": _recipe_camp1_moduli,
    "cplus": _recipe_cplus,
    "campedelli-cover": _recipe_campedelli_cover,
    "burniat-cover": _recipe_burniat_cover,
    "mlp-cover": _recipe_mlp_cover,
}


def cmd_reproduce(args) -> tuple[dict, int]:
    payload = _RECIPE_HANDLERS[args.recipe](args)
    return {"command": "reproduce", "recipe": args.recipe, **payload}, 0


_HANDLERS = {
    "verify-lemma-ev": cmd_verify_lemma_ev,
    "invariants": cmd_invariants,
    "components": cmd_components,
    "check-arrangement": cmd_check_arrangement,
    "incidences": cmd_incidences,
    "catalog": cmd_catalog,
    "reproduce": cmd_reproduce,
}


def _emit(payload: dict, out: Path | None) -> None:
    text = json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = _HANDLERS[args.command](args)
    except MalformedInputError as exc:
        _emit({"error": exc.as_json()}, args.out)
        return 2
    except DomainError as exc:
        _emit({"error": exc.as_json()}, args.out)
        return 1
    _emit(payload, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
