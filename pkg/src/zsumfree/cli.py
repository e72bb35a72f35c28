"""Command-line front-end for the zsumfree library.

Commands:

* compute n ell   — build Δ_{n,ℓ}, print complex JSON (facets, minimal
                    non-faces, f/h-vectors, purity, connectivity,
                    decomposition); `--arrangement` adds the intersection
                    poset and characteristic polynomial, `--oracle` (n ≤ 24)
                    cross-checks against brute force, `--no-cache` bypasses
                    the artifact cache;
* family ...      — verify a closed-form family against the pipeline;
* scan ...        — run a conjecture scanner;
* table --n-max N — one text row per (n,ℓ);
* cache-clear     — delete cached artifacts.

Exit codes: 0 ok, 2 invalid parameters, 3 oracle or family mismatch,
4 capacity exceeded, 5 conjecture counterexample found.

Artifacts are cached under $ZSF_CACHE_DIR (default ~/.cache/zsumfree), keyed
by (n, ℓ, artifact version); cached payloads are byte-stable and carry no
timestamps.  Bumping the artifact version invalidates old entries.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from datetime import datetime, timezone
from pathlib import Path

from .arrangements import build_poset
from .complexes import (
    CapacityError,
    SimplicialComplex,
    decompose_disjoint_simplices,
    f_to_h,
    faces_by_dimension,
    is_connected,
    is_pure,
)
from .conjectures import SCANNERS
from .families import FamilySpec, family_report_ok, verify_family
from .zerosumfree import (
    BRUTE_FORCE_CAP,
    ZsfParams,
    brute_force_complex,
    build_complex,
    minimal_nonfaces,
)

ARTIFACT_VERSION = "1"
TABLE_N_MAX_CAP = 24

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_CAPACITY = 4
EXIT_COUNTEREXAMPLE = 5


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# cache


def cache_dir() -> Path:
    env = os.environ.get("ZSF_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "zsumfree"


def _cache_path(n: int, ell: int) -> Path:
    return cache_dir() / f"complex-n{n}-l{ell}-v{ARTIFACT_VERSION}.json"


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        os.write(fd, data)
        os.close(fd)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.close(fd)
        except OSError:
            pass
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_cached_payload(n: int, ell: int) -> dict | None:
    path = _cache_path(n, ell)
    try:
        entry = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if entry.get("key") != {"n": n, "ell": ell, "version": ARTIFACT_VERSION}:
        return None
    payload = entry.get("payload")
    return payload if isinstance(payload, dict) else None


def store_payload(n: int, ell: int, payload: dict) -> None:
    entry = {
        "key": {"n": n, "ell": ell, "version": ARTIFACT_VERSION},
        "created_at": datetime.now(timezone.utc).isoformat(),
        "payload": payload,
    }
    data = json.dumps(entry, sort_keys=True, separators=(",", ":")).encode()
    _atomic_write(_cache_path(n, ell), data)


# ---------------------------------------------------------------------------
# commands


def _complex_payload(params: ZsfParams) -> dict:
    c = build_complex(params)
    f = faces_by_dimension(c)
    decomposition = decompose_disjoint_simplices(c)
    return {
        "facets": [sorted(facet) for facet in sorted(c.facets, key=sorted)],
        "min_nonfaces": [sorted(s) for s in minimal_nonfaces(params)],
        "f_vector": f,
        "h_vector": f_to_h(f),
        "pure": is_pure(c),
        "connected": is_connected(c),
        "decomposition": list(decomposition) if decomposition is not None else None,
    }


def cmd_compute(args) -> int:
    params = ZsfParams(args.n, args.ell)
    use_cache = not args.no_cache

    payload = load_cached_payload(params.n, params.ell) if use_cache else None
    dirty = False
    if payload is None:
        payload = {"complex": _complex_payload(params)}
        dirty = True
    if args.arrangement and "poset" not in payload:
        facets = [frozenset(f) for f in payload["complex"]["facets"]]
        c = SimplicialComplex(range(params.n), facets)
        payload["poset"] = build_poset(c).to_json()
        dirty = True
    if use_cache and dirty:
        store_payload(params.n, params.ell, payload)

    out = {"n": params.n, "ell": params.ell}
    out.update(payload["complex"])
    if args.arrangement:
        out["poset"] = payload["poset"]
        out["char_poly"] = payload["poset"]["char_poly"]
    print(_dump(out))

    if args.oracle:
        oracle_facets = {tuple(sorted(f)) for f in brute_force_complex(params).facets}
        mine = {tuple(f) for f in payload["complex"]["facets"]}
        if oracle_facets != mine:
            print(f"oracle mismatch for n={params.n} ell={params.ell}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def _family_spec(args) -> FamilySpec:
    def need(name):
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"family '{args.kind}' requires --{name}")
        return value

    if args.kind == "doubling":
        return FamilySpec.doubling(need("rho"), need("m"))
    if args.kind == "prime-power":
        return FamilySpec.prime_power(need("p"), need("e"))
    return FamilySpec.arms_legs(need("p"), need("s"))


def cmd_family(args) -> int:
    spec = _family_spec(args)
    oracle = None
    if args.oracle:
        oracle = True
    elif args.no_oracle:
        oracle = False
    report = verify_family(spec, oracle=oracle)
    print(_dump(report))
    if not family_report_ok(spec, report):
        print("family verification found an unexpected mismatch", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_scan(args) -> int:
    scanner, flag = SCANNERS[args.conjecture]
    value = getattr(args, flag)
    if args.conjecture == "log-concavity":
        report = scanner(value, include_repeated=args.include_repeated)
    else:
        report = scanner(value)
    print(_dump(report.to_json()))
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def _decomposition_text(parts) -> str:
    if parts is None:
        return "-"
    return "(" + ",".join(str(x) for x in parts) + ")"


def table_rows(n_max: int) -> list[str]:
    rows = []
    for n in range(2, n_max + 1):
        for ell in range(1, n):
            c = build_complex(ZsfParams(n, ell))
            pure = "yes" if is_pure(c) else "no"
            conn = "yes" if is_connected(c) else "no"
            count = len(c.facets)
            noun = "facet" if count == 1 else "facets"
            dec = _decomposition_text(decompose_disjoint_simplices(c))
            rows.append(
                f"{n} {ell} | {count} {noun} | dim {c.dim()} | pure={pure} | conn={conn} | {dec}"
            )
    return rows


def cmd_table(args) -> int:
    if args.n_max > TABLE_N_MAX_CAP:
        raise CapacityError(f"table supports n_max up to {TABLE_N_MAX_CAP}, got {args.n_max}")
    rows = table_rows(args.n_max)
    if args.json:
        print(_dump(rows))
    else:
        for row in rows:
            print(row)
    return EXIT_OK


def cmd_cache_clear(args) -> int:
    directory = cache_dir()
    removed = 0
    if directory.is_dir():
        for path in sorted(directory.glob("complex-n*-l*-v*.json")):
            path.unlink()
            removed += 1
    print(f"removed {removed} cached artifact(s) from {directory}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsumfree",
        description="ℓ-zero-sumfree complexes of Z/nZ: build, verify, scan.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="build Δ_{n,ℓ} and print its JSON artifact")
    p.add_argument("n", type=int)
    p.add_argument("ell", type=int)
    p.add_argument("--arrangement", action="store_true", help="add intersection poset + char poly")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force (n ≤ 24)")
    p.add_argument("--no-cache", action="store_true", help="bypass the artifact cache")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="verify a closed-form facet family")
    p.add_argument("kind", choices=["doubling", "prime-power", "arms-legs"])
    p.add_argument("--rho", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--oracle", action="store_true", help="force the brute-force cross-check")
    p.add_argument("--no-oracle", action="store_true", help="skip the brute-force cross-check")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("scan", help="run a conjecture scanner")
    p.add_argument("conjecture", choices=sorted(SCANNERS))
    p.add_argument("--p-max", dest="p_max", type=int, default=11)
    p.add_argument("--n-max", dest="n_max", type=int, default=19)
    p.add_argument("--max-sum", dest="max_sum", type=int, default=30)
    p.add_argument("--include-repeated", action="store_true",
                   help="log-concavity only: also scan partitions with repeated parts")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("table", help="survey all (n,ℓ) up to n-max, one text row each")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--json", action="store_true", help="emit the rows as a JSON array")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cache-clear", help="delete cached artifacts")
    p.set_defaults(func=cmd_cache_clear)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
