"""Command-line front end: census classification and cyclotomic reports."""

from __future__ import annotations

import argparse
import json
import math
import sys
from importlib import resources

from .builder import euler_verify, solve_voltages
from .gf import coset_orbits, factor_xn_minus_1, is_prime, poly_str
from .homology import Subspace
from .lattice import Census, census
from .oracle import brute_force_submodules

BRANCH_NAMES = ("vertices", "edges", "faces")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platocover",
        description="Census of elementary abelian regular branched coverings "
        "of the Platonic maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cl = sub.add_parser("classify", help="enumerate the coverings of one map")
    cl.add_argument("--map", dest="map_name",
                    help="tetrahedron|cube|octahedron|dodecahedron|icosahedron"
                    "|dihedron:N|hosohedron:N")
    cl.add_argument("--prime", type=int, help="branching exponent p")
    cl.add_argument("--branch", default="faces",
                    help="comma list drawn from vertices,edges,faces")
    cl.add_argument("--format", choices=("table", "json"), default="table")
    cl.add_argument("--verify-euler", action="store_true",
                    help="rebuild each covering as a derived map and recount "
                    "its Euler characteristic (faces branching only)")
    cl.add_argument("--oracle", action="store_true",
                    help="cross-check the lattice against brute-force search")
    cl.add_argument("--fixtures", action="store_true",
                    help="run the committed regression fixtures and diff")
    cl.set_defaults(run=run_classify)

    cy = sub.add_parser("cyclotomic",
                        help="factorization pattern of x^n - 1 mod p")
    cy.add_argument("--n", type=int, required=True)
    cy.add_argument("--prime", type=int, required=True)
    cy.set_defaults(run=run_cyclotomic)
    return parser


def parse_branch(text: str) -> tuple[str, ...]:
    parts = tuple(s.strip() for s in text.split(",") if s.strip())
    for part in parts:
        if part not in BRANCH_NAMES:
            raise ValueError(f"unknown branch class {part!r}")
    if not parts:
        raise ValueError("empty branch list")
    return parts


# -- rendering ----------------------------------------------------------------


def census_payload(cen: Census) -> dict:
    fam = cen.module.group.map.family
    coverings = []
    for d in cen.coverings:
        coverings.append({
            "c": d.c,
            "type": list(d.cover_type),
            "genus": d.genus,
            "character": dict(d.character),
            "regular": d.regular,
            "mate": d.mate_index,
        })
    return {
        "family": fam.name,
        "n": fam.n,
        "m": fam.m,
        "p": cen.p,
        "branch": list(cen.branch_classes),
        "coverings": coverings,
        "summary": {
            "total": cen.total,
            "regular": cen.regular_count,
            "chiral": cen.chiral_count,
            "dims": cen.dimension_multiset,
        },
    }


def _dims_text(dims: list[int]) -> str:
    parts = []
    for value in sorted(set(dims)):
        k = dims.count(value)
        parts.append(f"{value}^{k}" if k > 1 else f"{value}")
    return "{" + ", ".join(parts) + "}"


def render_table(cen: Census) -> str:
    header = ("#", "c", "type", "genus", "character", "symmetry")
    rows = []
    for i, d in enumerate(cen.coverings):
        symmetry = "regular" if d.regular else f"chiral (mate #{d.mate_index + 1})"
        rows.append((str(i + 1), str(d.c), d.type_string, str(d.genus),
                     d.character_string, symmetry))
    widths = [max(len(r[j]) for r in [header, *rows]) for j in range(len(header))]
    lines = []
    for r in [header, *rows]:
        lines.append("  ".join(r[j].ljust(widths[j]) for j in range(len(header))).rstrip())
    lines.append(
        f"{cen.total} coverings, {cen.regular_count} regular, "
        f"{cen.chiral_count} chiral, dims {_dims_text(cen.dimension_multiset)}"
    )
    return "\n".join(lines)


# -- cross-checks -------------------------------------------------------------


def _euler_cross_check(cen: Census, budget: int = 10**6) -> str:
    if cen.branch_classes != ("faces",):
        raise ValueError("--verify-euler requires faces branching")
    checked = skipped = 0
    for d in cen.coverings:
        darts = cen.module.group.map.n_darts * cen.p**d.c
        if darts > budget:
            skipped += 1
            continue
        va = solve_voltages(cen.module, d.L)
        _, _, _, genus = euler_verify(va, budget=budget)
        assert genus == d.genus, f"euler genus {genus} != census genus {d.genus}"
        checked += 1
    return f"euler cross-check: {checked} verified, {skipped} skipped (dart budget)"


def _oracle_cross_check(cen: Census) -> str:
    spaces = brute_force_submodules(cen.module)
    expected = {d.L.key() for d in cen.coverings}
    expected.add(Subspace.full(cen.p, cen.module.dim).key())
    expected.add(Subspace.zero(cen.p, cen.module.dim).key())
    got = {s.key() for s in spaces}
    assert got == expected, "brute force disagrees with the lattice enumeration"
    return f"oracle cross-check: {len(spaces)} submodules confirmed"


# -- commands -----------------------------------------------------------------


def run_classify(args, out=None) -> int:
    out = out or sys.stdout
    if args.fixtures:
        return run_fixtures(out)
    if args.map_name is None or args.prime is None:
        raise ValueError("classify needs --map and --prime (or --fixtures)")
    branch = parse_branch(args.branch)
    cen = census(args.map_name, branch, args.prime)
    extras = []
    if args.verify_euler:
        extras.append(_euler_cross_check(cen))
    if args.oracle:
        extras.append(_oracle_cross_check(cen))
    if args.format == "json":
        print(json.dumps(census_payload(cen), indent=2), file=out)
    else:
        print(render_table(cen), file=out)
    for line in extras:
        print(line, file=out)
    return 0


def run_fixtures(out=None) -> int:
    out = out or sys.stdout
    failures = 0
    root = resources.files("platocover").joinpath("fixtures")
    entries = sorted(root.iterdir(), key=lambda e: e.name)
    if not entries:
        raise ValueError("no fixtures installed")
    for entry in entries:
        if not entry.name.endswith(".json"):
            continue
        fixture = json.loads(entry.read_text())
        spec = fixture["args"]
        cen = census(spec["map"], tuple(spec["branch"]), spec["prime"])
        got = census_payload(cen)
        if got == fixture["expected"]:
            print(f"fixture {entry.name}: ok", file=out)
        else:
            failures += 1
            print(f"fixture {entry.name}: MISMATCH", file=out)
            _print_diff(fixture["expected"], got, out)
    total = len([e for e in entries if e.name.endswith('.json')])
    print(f"{total - failures}/{total} fixtures match", file=out)
    return 0 if failures == 0 else 1


def _print_diff(expected: dict, got: dict, out) -> None:
    for key in expected:
        if expected.get(key) != got.get(key):
            print(f"  field {key}: expected {expected.get(key)!r}, "
                  f"got {got.get(key)!r}", file=out)


def run_cyclotomic(args, out=None) -> int:
    out = out or sys.stdout
    n, p = args.n, args.prime
    if n < 1 or not is_prime(p) or math.gcd(n, p) != 1:
        raise ValueError(f"need prime p with gcd(n, p) = 1, got n={n} p={p}")
    factors = factor_xn_minus_1(n, p)
    nu = 0
    for orbit in coset_orbits(n, p):
        polys = [poly for fo, poly in factors if set(fo.members) <= set(orbit.members)]
        if orbit.least == 0:
            label = "orbit {0}"
        else:
            nu += 1
            label = f"orbit of {orbit.least}"
        rendered = ", ".join(poly_str(poly) for poly in polys)
        print(
            f"{label}: m={orbit.m} e={orbit.e} size={orbit.size} "
            f"self_paired={'yes' if orbit.self_paired else 'no'} "
            f"factors: {rendered}",
            file=out,
        )
    print(f"nu = {nu}, coverings = {2**nu - 1}", file=out)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ValueError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
