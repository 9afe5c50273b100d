"""``csp-lab``: orbit experiments, fake degrees and the reproduction suite.

Exit status: 0 on success / PASS, 1 when a CSP check fails, 2 on usage
errors (bad arguments, budget exceeded, unreadable crystal file).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Callable

from . import crystal, diagrams, repro
from ._budget import BudgetExceeded
from .csp import CSPInputError, FiniteAction, orbits, verify_csp
from .liechar import UnsupportedRootSystem, frobenius_invariants, root_system, two_rho_pairing
from .qpoly import IntPolynomial, reduce_cyclic
from .symfunc import Partition, cycle_values_to_schur, fake_degree


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- experiments


def _invariants_polynomial(R_name: str, lam, r: int) -> IntPolynomial:
    inv = frobenius_invariants(root_system(R_name), lam, r)
    return inv.fake_degree()


def _crystal_experiment(X: crystal.CrystalGraph, r: int, poly: Callable[[], IntPolynomial] | None) -> dict:
    action = crystal.promotion_action(X, r)
    return _orbit_experiment(action, poly, fmt=lambda w: X.format_word(w))


def _orbit_experiment(action: FiniteAction, poly: Callable[[], IntPolynomial] | None, fmt=str) -> dict:
    rep = orbits(action)
    out: dict[str, Any] = {
        "size": rep.size,
        "order": rep.order,
        "orbit_counts": {str(s): c for s, c in rep.counts.items()},
        "fixed_points": rep.fixed_points,
        "orbits": [{"size": s, "representative": fmt(x)} for x, s in zip(rep.representatives, rep.orbit_sizes)],
    }
    if poly is not None:
        P = poly()
        out["polynomial"] = list(P.coeffs)
        out["polynomial_text"] = str(P)
        try:
            v = verify_csp(rep, P)
        except CSPInputError as exc:
            out.update(csp=False, error=str(exc))
        else:
            out.update(
                reduced=list(v.reduced.coeffs),
                reduced_text=str(v.reduced),
                csp=v.csp,
                mismatch=v.mismatch,
            )
    return out


def cmd_tl(a) -> dict:
    _nonneg(a.r, "--r")
    return _orbit_experiment(diagrams.tl_rotation_action(a.r), lambda: fake_degree([2] * a.r))


def cmd_sl2(a) -> dict:
    _nonneg(a.r, "--r")
    X = crystal.builtin("sl2", a.k)
    return _crystal_experiment(X, a.r, lambda: _invariants_polynomial("A1", (a.k,), a.r))


def cmd_typeA(a) -> dict:
    X = crystal.builtin("typeA_vector", a.n)
    _nonneg(a.k, "--k")
    R = root_system(f"A{a.n - 1}")
    shape = Partition([a.k] * a.n)

    def poly():
        # Schur-Weyl: the invariants form the irreducible for the n x k rectangle
        twisted = two_rho_pairing(R, R.fundamental_weight(1)) % 2 == 1
        return fake_degree(shape.conjugate() if twisted else shape)

    fmt = lambda w: str(diagrams.RectTableau.from_word(w).to_list())
    return _orbit_experiment(crystal.promotion_action(X, a.n * a.k), poly, fmt=fmt)


def cmd_g2(a) -> dict:
    _nonneg(a.r, "--r")
    return _crystal_experiment(crystal.builtin("g2_fund7"), a.r, lambda: _invariants_polynomial("G2", (1, 0), a.r))


def cmd_spin(a) -> dict:
    _nonneg(a.r, "--r")
    return _crystal_experiment(crystal.builtin("b3_spin"), a.r, lambda: _invariants_polynomial("B3", (0, 0, 1), a.r))


def cmd_matchings(a) -> dict:
    _nonneg(a.r, "--r")
    action = diagrams.matchings_rotation_action(a.r)
    return _orbit_experiment(action, lambda: repro.matchings_polynomial(a.r), fmt=lambda m: str(diagrams.PerfectMatching(m)))


def cmd_derangements(a) -> dict:
    _nonneg(a.n, "--n")
    action = diagrams.derangements_action(a.n)

    def poly():
        return cycle_values_to_schur(diagrams.derangements_character(a.n)).fake_degree()

    return _orbit_experiment(action, poly, fmt=lambda p: "(" + ",".join(map(str, p)) + ")")


def cmd_fakedeg(a) -> dict:
    shape = Partition(_int_list(a.shape, "--shape"))
    f = fake_degree(shape.conjugate() if a.conjugate else shape)
    out = {"shape": list(shape), "conjugate": a.conjugate, "coefficients": list(f.coeffs), "text": str(f)}
    if a.mod is not None:
        if a.mod < 1:
            raise UsageError("--mod must be positive")
        out["reduced"] = list(reduce_cyclic(f, a.mod).coeffs)
    return out


def cmd_crystal(a) -> dict:
    path = Path(a.file)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read crystal file {a.file}: {exc.strerror}") from None
    X = crystal.load_crystal(text)
    out: dict[str, Any] = {
        "name": X.name,
        "labels": X.rank,
        "vertices": X.size,
        "source": X.source,
        "sink": X.sink,
        "lowering_path": list(X.lowering_path()),
    }
    if a.word is not None:
        w = X.parse_word(a.word)
        out["word"] = X.format_word(w)
        out["promoted"] = X.format_word(crystal.promote(X, w))
    if a.r is not None:
        poly = None
        if a.root_system:
            if a.weight is None:
                raise UsageError("--root-system needs --weight")
            lam = tuple(_int_list(a.weight, "--weight"))
            poly = lambda: _invariants_polynomial(a.root_system, lam, a.r)
        out.update(_crystal_experiment(X, a.r, poly))
    return out


COMMANDS = {
    "tl": cmd_tl,
    "sl2": cmd_sl2,
    "typeA": cmd_typeA,
    "g2": cmd_g2,
    "spin": cmd_spin,
    "matchings": cmd_matchings,
    "derangements": cmd_derangements,
    "fakedeg": cmd_fakedeg,
    "crystal": cmd_crystal,
}


def _nonneg(x: int, flag: str) -> None:
    if x < 0:
        raise UsageError(f"{flag} must be nonnegative")


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------- rendering


def render(kind: str, result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"experiment": kind, **result}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for key, val in result.items():
            if key == "orbits":
                for k, o in enumerate(val):
                    w.writerow([f"orbit{k + 1}", f"{o['size']} {o['representative']}"])
            else:
                w.writerow([key, json.dumps(val) if isinstance(val, (list, dict, bool)) or val is None else val])
        return buf.getvalue()
    if kind == "fakedeg":
        lines = ["[" + ",".join(map(str, result["coefficients"])) + "]", result["text"]]
        if "reduced" in result:
            lines.append("reduced: " + str(IntPolynomial(result["reduced"])))
        return "\n".join(lines) + "\n"
    lines = []
    for key, val in result.items():
        if key in ("orbits", "tableaux", "polynomial", "reduced"):
            continue
        if key == "csp":
            val = "PASS" if val else "FAIL"
        lines.append(f"{key}: {val}")
    for o in result.get("orbits", []):
        lines.append(f"  orbit of size {o['size']}: {o['representative']}")
    return "\n".join(lines) + "\n"


def render_repro(results: list[repro.CriterionResult], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in results], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["criterion", "slug", "check", "status", "detail"])
        for r in results:
            for s in r.subchecks:
                w.writerow([r.number, r.slug, s.name, "PASS" if s.ok else "FAIL", s.detail])
        return buf.getvalue()
    lines = []
    for r in results:
        lines.append(r.line())
        for s in r.failures():
            lines.append(f"    {s.name}: {s.detail}")
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} criteria pass")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csp-lab", description="Promotion orbits and cyclic sieving checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("tl", parents=[common], help="Temperley-Lieb diagrams under rotation")
    s.add_argument("--r", type=int, required=True, help="number of arcs")
    s = sub.add_parser("sl2", parents=[common], help="invariant words of the (k+1)-dim sl2 crystal")
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("typeA", parents=[common], help="rectangular standard tableaux (n rows of length k)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s = sub.add_parser("g2", parents=[common], help="7-dimensional G2 crystal")
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("spin", parents=[common], help="spin crystal of so(7)")
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("matchings", parents=[common], help="perfect matchings under rotation")
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("derangements", parents=[common], help="derangements under conjugation by the long cycle")
    s.add_argument("--n", type=int, required=True)
    s = sub.add_parser("fakedeg", parents=[common], help="fake degree polynomial of a partition")
    s.add_argument("--shape", required=True, help="comma-separated parts, e.g. 2,2")
    s.add_argument("--conjugate", action="store_true", help="use the conjugate partition")
    s.add_argument("--mod", type=int, help="also reduce modulo q^MOD - 1")
    s = sub.add_parser("crystal", parents=[common], help="load, validate and promote on a crystal file")
    s.add_argument("file")
    s.add_argument("--word", help="promote this invariant word")
    s.add_argument("--r", type=int, help="enumerate invariant words of length r and their orbits")
    s.add_argument("--root-system", help="e.g. G2; with --weight, check CSP against the invariant-theory polynomial")
    s.add_argument("--weight", help="highest weight in Dynkin labels, e.g. 1,0")
    s = sub.add_parser("repro", parents=[common], help="run the reproduction suite")
    s.add_argument("--only", action="append", help="criterion numbers or slugs (repeatable, comma-separated)")
    s.add_argument("--sabotage", choices=["sign-twist"], help="negative control: deliberately break a step")
    return p


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if a.command == "repro":
            opts = repro.Options(flip_sign_twist=a.sabotage == "sign-twist")
            results = repro.run(a.only, opts)
            _emit(render_repro(results, a.format), a.output)
            return 0 if all(r.ok for r in results) else 1
        result = COMMANDS[a.command](a)
        _emit(render(a.command, result, a.format), a.output)
        return 1 if result.get("csp") is False else 0
    except BudgetExceeded as exc:
        print(f"csp-lab: budget exceeded: {exc}", file=sys.stderr)
    except crystal.CrystalError as exc:
        print(f"csp-lab: invalid crystal: {exc}", file=sys.stderr)
    except UsageError as exc:
        print(f"csp-lab: {exc}", file=sys.stderr)
    except (ValueError, UnsupportedRootSystem) as exc:
        print(f"csp-lab: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
