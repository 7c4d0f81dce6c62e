"""Command-line front end.

Commands: classify, build, idempotents, virasoro, spectrum, aut, verify-paper.
Each reads a Gram matrix from a JSON file ({"gram": [[a,b],[b,d]]}), writes
JSON to stdout or --out, and exits 0 on success, 1 when a verification check
fails, 2 on input errors.  Rationals appear as "p/q" strings everywhere.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import algebra as algmod
from . import autgroup as autmod
from . import classify as clsmod
from . import lattice as latmod
from . import spectra as spmod
from . import verification
from .errors import VoaplusError
from .rationals import parse_rational


def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _load_algebra(path: str) -> algmod.Degree2Algebra:
    return algmod.build(latmod.from_json_file(path))


def cmd_classify(args) -> int:
    lat = latmod.from_json_file(args.gram)
    payload = latmod.classify(lat).to_json()
    payload["gram"] = [list(r) for r in lat.gram]
    payload["shells"] = [latmod.shell_to_json(latmod.shell(lat, m)) for m in (1, 2)]
    _emit(payload, args.out)
    return 0


def cmd_build(args) -> int:
    alg = _load_algebra(args.gram)
    _emit(algmod.algebra_to_json(alg), args.out)
    return 0


def cmd_idempotents(args) -> int:
    alg = _load_algebra(args.gram)
    norm = parse_rational(args.norm) if args.norm else None
    records = clsmod.enumerate_idempotents(alg, args.type, norm=norm)
    payload = {
        "basis": list(alg.basis),
        "type": args.type,
        "norm": args.norm,
        "count": len(records),
        "records": [r.to_json() for r in records],
    }
    if args.type == 0:
        payload["family"] = clsmod.type0_family_description(alg)["family"]
    _emit(payload, args.out)
    return 0


def cmd_virasoro(args) -> int:
    alg = _load_algebra(args.gram)
    c = parse_rational(args.central_charge)
    enum = clsmod.enumerate_virasoro(alg, c)
    payload = {"basis": list(alg.basis)}
    payload.update(enum.to_json(variables=[f"c{i}" for i in range(alg.dim)]))
    _emit(payload, args.out)
    return 0


def cmd_spectrum(args) -> int:
    alg = _load_algebra(args.gram)
    coords = [parse_rational(x) for x in args.element.split(",")]
    if len(coords) != alg.dim:
        raise VoaplusError(f"element needs {alg.dim} coordinates, got {len(coords)}")
    spectrum = spmod.ad_spectrum(alg, alg.element(coords))
    payload = {"basis": list(alg.basis)}
    payload.update(spectrum.to_json())
    _emit(payload, args.out)
    return 0


def cmd_aut(args) -> int:
    alg = _load_algebra(args.gram)
    dset = autmod.distinguished_set(alg, args.distinguished)
    result = autmod.aut_group(alg, dset)
    payload = {"basis": list(alg.basis)}
    payload.update(result.to_json())
    _emit(payload, args.out)
    return 0


def cmd_verify_paper(args) -> int:
    report = verification.verify_paper(threads=args.threads)
    _emit(report.to_json(), args.out)
    return 0 if report.passed else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="voaplus",
        description="Exact computations in degree-2 algebras of rootless rank-2 even lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_gram=True):
        p = sub.add_parser(name)
        if needs_gram:
            p.add_argument("gram", help='JSON file with {"gram": [[a,b],[b,d]]}')
        p.add_argument("--out", help="write the JSON report to this path instead of stdout")
        p.set_defaults(fn=fn)
        return p

    add("classify", cmd_classify)
    add("build", cmd_build)

    p = add("idempotents", cmd_idempotents)
    p.add_argument("--type", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--norm", help='norm constraint as "p/q"')

    p = add("virasoro", cmd_virasoro)
    p.add_argument("--central-charge", required=True, help='central charge as "p/q"')

    p = add("spectrum", cmd_spectrum)
    p.add_argument("--element", required=True, help='coordinates "p/q,p/q,..."')

    p = add("aut", cmd_aut)
    p.add_argument(
        "--distinguished",
        choices=(autmod.KIND_VIRASORO_HALF, autmod.KIND_TYPE1_NORM116),
        default=autmod.KIND_VIRASORO_HALF,
    )

    p = add("verify-paper", cmd_verify_paper, needs_gram=False)
    p.add_argument("--threads", type=int, default=None, help="overrides VOAPLUS_THREADS")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except VoaplusError as exc:
        sys.stderr.write(f"{exc.module}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
