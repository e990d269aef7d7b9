"""Command-line interface.

Subcommands:

* ``present``  — print the presentation of a compactification;
* ``class``    — compute the elliptic or nodal class of a partition;
* ``verify``   — run a named check suite (``appendix``, ``relations``,
  ``getzler``, ``torsion``, ``duality``, ``counts``);
* ``hilbert``  — print the free ranks of a compactification's graded
  pieces;
* ``restrict`` — pull an ambient class back to one stratum model.

Spaces are named ``dm``, ``smyth:<m>``, ``lp``, or ``qfile:<path>`` (a
JSON singularity specification).  Exit status: 0 when every check passes,
1 when a verification fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .corering import ClassTableError
from .exactring import IntPolynomial, PresentationError
from .keel import keel_presentation, mzero_point_poly
from .modular import (
    getzler_check,
    hilbert_poincare,
    qstable_presentation,
    torsion_report,
)
from .partitions import (
    QSpec,
    SetPartition,
    dm_space,
    enumerate_partitions,
    lp_minimal,
    smyth,
)
from .patch import (
    classes_equal,
    ell_class,
    expected_class,
    load_fixture_file,
    nod_class,
    relation_families,
    restricts_to_zero_everywhere,
)
from .strata import ell_model, restrict_to_ell, restrict_to_tail, tail_model


@dataclass(frozen=True)
class Check:
    name: str
    source: str  # "fixture" | "table" | "identity" | "count"
    ok: bool


def _emit_checks(checks: list[Check], fmt: str, out) -> int:
    passed = all(c.ok for c in checks)
    if fmt == "json":
        json.dump(
            {
                "checks": [
                    {
                        "name": c.name,
                        "source": c.source,
                        "status": "ok" if c.ok else "fail",
                    }
                    for c in checks
                ],
                "passed": passed,
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        width = max((len(c.name) for c in checks), default=4)
        for c in checks:
            status = "ok" if c.ok else "FAIL"
            out.write(f"{c.name:<{width}}  {c.source:<8}  {status}\n")
        good = sum(1 for c in checks if c.ok)
        out.write(f"passed {good}/{len(checks)}\n")
    return 0 if passed else 1


def _parse_space(n: int, text: str) -> QSpec:
    if text == "dm":
        return dm_space(n)
    if text == "lp":
        return lp_minimal(n)
    if text.startswith("smyth:"):
        return smyth(n, int(text.split(":", 1)[1]))
    if text.startswith("qfile:"):
        return QSpec.load(text.split(":", 1)[1])
    raise ValueError(f"unknown space {text!r}")


def _fixture_override(args) -> dict | None:
    path = args.fixtures or os.environ.get("ELLCHOW_FIXTURES")
    return load_fixture_file(path) if path else None


# -- verify suites --------------------------------------------------------------


def _verify_appendix(args) -> list[Check]:
    n = args.n
    table = _fixture_override(args)
    parts = list(enumerate_partitions(n))

    def one(s: SetPartition) -> Check:
        try:
            expected = expected_class(n, s, table)
            ok = classes_equal(n, ell_class(n, s), expected)
        except (KeyError, ClassTableError):
            ok = False
        return Check(f"class:{n}:{s.text()}", "fixture", ok)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(one, parts))
    return [one(s) for s in parts]


def _verify_relations(args) -> list[Check]:
    n = args.n
    out = []
    for family, rels in relation_families(n).items():
        ok = all(restricts_to_zero_everywhere(n, r) for r in rels)
        out.append(
            Check(f"relations:{family}:{n}", "identity", ok)
        )
    return out


def _verify_getzler(args) -> list[Check]:
    report = getzler_check()
    checks = [
        Check(
            "getzler:boundary-expression",
            "identity",
            report.corrected_identity,
        ),
        # The variant of the boundary expression ending in -2*t2*t4 does not
        # hold; the engine pins down -1 as the unique working coefficient.
        # This line passes when that discrepancy is reproduced exactly.
        Check(
            "getzler:coefficient-discrepancy",
            "identity",
            report.corrected_identity and not report.display_identity,
        ),
        Check("getzler:one-block-class", "table", report.ell_identity),
    ]
    checks.extend(
        Check(f"getzler:restriction:{name}", "table", ok)
        for name, ok in report.spot_values.items()
    )
    return checks


def _verify_torsion(args) -> list[Check]:
    n = args.n
    checks = []
    inv = torsion_report(qstable_presentation(n, dm_space(n)), 2)
    checks.append(
        Check(f"torsion:dm:{n}:degree2", "table", inv.torsion == (24,))
    )
    for m in range(1, n):
        inv = torsion_report(qstable_presentation(n, smyth(n, m)), 2)
        checks.append(
            Check(
                f"torsion:smyth:{m}:{n}:degree2", "table", inv.torsion == ()
            )
        )
    return checks


def _verify_duality(args) -> list[Check]:
    n = args.n
    spaces = [("dm", dm_space(n))] + [
        (f"smyth:{m}", smyth(n, m)) for m in range(1, n)
    ]
    checks = []
    for label, q in spaces:
        ranks = hilbert_poincare(qstable_presentation(n, q), n)
        checks.append(
            Check(f"duality:{label}:{n}", "identity", ranks == ranks[::-1])
        )
    return checks


def _verify_counts(args) -> list[Check]:
    checks = []
    for k in range(4, 8):
        poly = mzero_point_poly(k)
        ring = keel_presentation(range(1, k))
        ranks = ring.presentation.hilbert_function(k - 3)
        checks.append(
            Check(
                f"counts:genus-zero:{k}",
                "count",
                poly == list(reversed(ranks)),
            )
        )
    return checks


_VERIFY = {
    "appendix": _verify_appendix,
    "relations": _verify_relations,
    "getzler": _verify_getzler,
    "torsion": _verify_torsion,
    "duality": _verify_duality,
    "counts": _verify_counts,
}


# -- other subcommands -----------------------------------------------------------


def _cmd_present(args, out) -> int:
    qp = qstable_presentation(args.n, _parse_space(args.n, args.space))
    pres = qp.presentation
    if args.format == "json":
        json.dump(
            {
                "name": pres.name,
                "symbols": list(pres.symbols),
                "deleted": sorted(qp.deleted),
                "relations": [r.to_json_obj() for r in pres.relations]
                + [
                    IntPolynomial.monomial(m).to_json_obj()
                    for m in _kill_monomials(pres)
                ],
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(f"{pres.name}\n")
        out.write("generators: " + " ".join(pres.symbols) + "\n")
        if qp.deleted:
            out.write("deleted: " + " ".join(sorted(qp.deleted)) + "\n")
        for r in pres.relations:
            out.write(f"  {r.text()}\n")
        for m in _kill_monomials(pres):
            out.write(f"  {IntPolynomial.monomial(m).text()}\n")
    return 0


def _kill_monomials(pres) -> list:
    out = []
    for name, cap in pres.max_exp.items():
        if cap is not None:
            out.append(((name, cap + 1),))
    for kill in pres.squarefree_kills:
        out.append(tuple((nm, 1) for nm in sorted(kill)))
    out.extend(pres.general_kills)
    return out


def _cmd_class(args, out) -> int:
    n = args.n
    if (args.ell is None) == (args.nod is None):
        raise ValueError("pass exactly one of --ell or --nod")
    if args.ell is not None:
        part = SetPartition.parse(args.ell, n)
        value = ell_class(n, part)
        kind = "ell"
    else:
        part = SetPartition.parse(args.nod, n)
        value = nod_class(n, part)
        kind = "nod"
    if args.format == "json":
        json.dump(
            {
                "n": n,
                "kind": kind,
                "partition": part.text(),
                "class": value.to_json_obj(),
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(value.text() + "\n")
    return 0


def _cmd_hilbert(args, out) -> int:
    n = args.n
    qp = qstable_presentation(n, _parse_space(n, args.space))
    d_max = args.degree if args.degree is not None else n
    ranks = hilbert_poincare(qp, d_max)
    if args.format == "json":
        json.dump({"space": qp.presentation.name, "ranks": ranks}, out)
        out.write("\n")
    else:
        out.write(" ".join(str(r) for r in ranks) + "\n")
    return 0


def _cmd_restrict(args, out) -> int:
    n = args.n
    part = SetPartition.parse(args.partition, n)
    f = IntPolynomial.parse(args.poly)
    if args.ell:
        value = restrict_to_ell(n, part, f)
        pres = ell_model(n, part).presentation
    else:
        value = restrict_to_tail(n, part, f)
        pres = tail_model(n, part).presentation
    value = pres.normal_form(value)
    if args.format == "json":
        json.dump(
            {
                "n": n,
                "partition": part.text(),
                "model": "ell" if args.ell else "tail",
                "value": value.to_json_obj(),
            },
            out,
            indent=2,
        )
        out.write("\n")
    else:
        out.write(value.text() + "\n")
    return 0


# -- argument wiring ---------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellchow",
        description="Integral intersection rings of modular compactifications "
        "of genus-one curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=int, required=True, help="marking count")
        p.add_argument(
            "--format", choices=("text", "json"), default="text"
        )

    p = sub.add_parser("present", help="print a compactification presentation")
    common(p)
    p.add_argument("--space", default="dm")

    p = sub.add_parser("class", help="compute a singular-locus class")
    common(p)
    p.add_argument("--ell", metavar="PARTITION")
    p.add_argument("--nod", metavar="PARTITION")

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("target", choices=sorted(_VERIFY))
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--fixtures", help="alternative expected-class file")

    p = sub.add_parser("hilbert", help="free ranks of the graded pieces")
    common(p)
    p.add_argument("--space", default="dm")
    p.add_argument("--degree", type=int)

    p = sub.add_parser("restrict", help="pull a class back to a stratum")
    common(p)
    p.add_argument("--partition", required=True)
    p.add_argument(
        "--ell",
        action="store_true",
        help="use the elliptic-singularity model instead of the tail model",
    )
    p.add_argument("poly", help="polynomial text, e.g. '24*l^2 + t{1,2}^2'")

    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        if not 1 <= args.n <= 6:
            raise ValueError(
                f"marking count {args.n} out of range (supported: 1..6)"
            )
        if args.command == "verify":
            checks = _VERIFY[args.target](args)
            return _emit_checks(checks, args.format, out)
        if args.command == "present":
            return _cmd_present(args, out)
        if args.command == "class":
            return _cmd_class(args, out)
        if args.command == "hilbert":
            return _cmd_hilbert(args, out)
        if args.command == "restrict":
            return _cmd_restrict(args, out)
        raise ValueError(f"unknown command {args.command!r}")
    except (
        ValueError,
        PresentationError,
        ClassTableError,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
