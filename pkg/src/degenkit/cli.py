"""Command-line front end and verification suites.

Verbs map one-to-one onto the library's activities: ``check`` (variety
identities), ``invariants`` (profile report), ``degenerate`` (run a
witness), ``pierce`` (idempotent split), ``separate`` (obstructions both
ways), ``catalog`` (list / emit algebras and witnesses) and ``verify``
(the named verification suites).

Algebra and witness arguments accept either a JSON file path or a catalog
reference such as ``catalog:gn1@5?alpha=2`` (witnesses: ``W2@3?zetas=1,0``).
Output is a human-readable table on stdout plus optional machine JSON via
``--json PATH`` (sorted keys, no timestamps unless requested).  Exit codes:
0 all checks passed, 1 some check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import catalog
from .algebra import (
    Algebra,
    algebra_from_dict,
    algebra_to_dict,
    check_variety,
)
from .degeneration import (
    Witness,
    limit0_algebra,
    transform,
    transform_matches_numeric,
    verify_witness,
    witness_from_dict,
    witness_to_dict,
)
from .exactnum import Pole, Singular, as_scalar, format_scalar, parse_scalar
from .invariants import (
    degeneration_obstructions,
    derivation_dim,
    invariant_profile,
    max_abelian_coordinate_ideal,
)
from .linalg import Matrix
from .pierce import IncompleteSplit, NotIdempotent, pierce_associative, pierce_jordan

H = Fraction(1, 2)

SUITES = ("level1", "jordan2", "lie2", "assoc2", "pierce", "separations", "chains")


class InputError(ValueError):
    """Bad file, reference or parameter on the command line."""


# -- argument parsing helpers ---------------------------------------------------


def _parse_param_value(text: str):
    if ";" in text:
        return tuple(_parse_param_value(part) for part in text.split(";"))
    if ":" in text:
        return tuple(_parse_param_value(part) for part in text.split(":"))
    if "," in text:
        return tuple(_parse_param_value(part) for part in text.split(","))
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return parse_scalar(text)
    except (ValueError, ZeroDivisionError):
        return text


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise InputError(f"parameter {pair!r} is not key=value")
        key, value = pair.split("=", 1)
        params[key.strip()] = _parse_param_value(value.strip())
    return params


def _parse_catalog_ref(text: str) -> tuple[str, int, dict]:
    body = text[len("catalog:"):] if text.startswith("catalog:") else text
    if "?" in body:
        body, query = body.split("?", 1)
        params = _parse_params(query.split("&"))
    else:
        params = {}
    if "@" not in body:
        raise InputError(f"catalog reference {text!r} needs @dimension")
    name, dim = body.rsplit("@", 1)
    try:
        n = int(dim)
    except ValueError:
        raise InputError(f"bad dimension in {text!r}")
    return name, n, params


def load_algebra_arg(text: str) -> Algebra:
    """Algebra from a JSON file path or a catalog:<name>@<n>[?params] ref."""
    if text.startswith("catalog:"):
        name, n, params = _parse_catalog_ref(text)
        try:
            return catalog.build(name, n, **params)
        except (catalog.UnknownName, catalog.DimensionConstraint,
                catalog.ParameterDomain, TypeError) as exc:
            raise InputError(str(exc))
    path = Path(text)
    if not path.exists():
        raise InputError(f"no such file: {text}")
    try:
        return algebra_from_dict(json.loads(path.read_text()))
    except (KeyError, ValueError) as exc:
        raise InputError(f"bad algebra file {text}: {exc}")


def load_witness_arg(text: str) -> Witness:
    """Witness from a JSON file path or an id reference like W2@3?zetas=1,0."""
    path = Path(text)
    if path.exists():
        try:
            return witness_from_dict(json.loads(path.read_text()))
        except (KeyError, ValueError) as exc:
            raise InputError(f"bad witness file {text}: {exc}")
    if "@" in text:
        wid, n, params = _parse_catalog_ref(text)
        try:
            return catalog.witness(wid, n, **params)
        except (catalog.UnknownWitness, catalog.ParameterDomain,
                catalog.DimensionConstraint, TypeError) as exc:
            raise InputError(str(exc))
    raise InputError(f"witness {text!r} is neither a file nor an id@n reference")


def _emit(data: dict, json_path: str | None):
    if json_path:
        Path(json_path).write_text(json.dumps(data, sort_keys=True, indent=2) + "\n")


# -- suite machinery -------------------------------------------------------------


@dataclass(frozen=True)
class SuiteItem:
    id: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    n_min: int
    n_max: int
    seed: int
    items: tuple[SuiteItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    @property
    def counts(self) -> dict:
        ok = sum(1 for item in self.items if item.passed)
        return {"passed": ok, "failed": len(self.items) - ok,
                "total": len(self.items)}

    def to_dict(self, timestamps: bool = False) -> dict:
        data = {
            "counts": self.counts,
            "items": [{"detail": i.detail, "id": i.id, "passed": i.passed}
                      for i in self.items],
            "n_max": self.n_max,
            "n_min": self.n_min,
            "ok": self.passed,
            "seed": self.seed,
            "suite": self.suite,
        }
        if timestamps:
            data["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
        return data

    def render(self) -> str:
        lines = [f"suite {self.suite}  n={self.n_min}..{self.n_max}  seed={self.seed}"]
        for item in self.items:
            mark = "PASS" if item.passed else "FAIL"
            detail = f"  [{item.detail}]" if item.detail and not item.passed else ""
            lines.append(f"  {mark}  {item.id}{detail}")
        c = self.counts
        lines.append(f"{c['passed']}/{c['total']} passed")
        return "\n".join(lines)


def _identity_items(n: int, names: set[str] | None = None):
    for name, params, alg in catalog.identity_sample_builds(n):
        if names is not None and name not in names:
            continue
        for tag in catalog.entry_varieties(name, params):
            pr = f"?{params}" if params else ""
            yield (f"identity/{name}@{n}{pr}/{tag}",
                   _check_identity(alg, tag))


def _check_identity(alg, tag):
    def run():
        report = check_variety(alg, tag)
        detail = "" if report.passed else str(report.violations[0])
        return report.passed, detail
    return run


def _witness_item(case):
    def run():
        verdict = verify_witness(case.source, case.witness, case.target)
        if not verdict.limit_exists:
            return False, f"pole at {verdict.pole_at}"
        if not verdict.limit_equals_target:
            return False, f"first residual {verdict.residuals[0]}"
        return True, ""
    return run


def _cross_check_item(case):
    def run():
        for t0 in (H, Fraction(1, 3)):
            if not transform_matches_numeric(case.source, case.witness, t0):
                return False, f"symbolic/numeric mismatch at t={t0}"
        return True, ""
    return run


def _der_dim_item(alg, expected):
    def run():
        got = derivation_dim(alg)[0]
        return got == expected, f"dim Der = {got}, expected {expected}"
    return run


def _ab_dim_item(alg, expected):
    def run():
        got = max_abelian_coordinate_ideal(alg)[0]
        return got == expected, f"dim ab = {got}, expected {expected}"
    return run


def _obstruction_item(a, b):
    def run():
        obs = degeneration_obstructions(a, b)
        kinds = ",".join(o.kind for o in obs)
        return bool(obs), kinds or "no obstruction found"
    return run


def _der_invariance_item(alg, seed):
    def run():
        import random

        rng = random.Random(seed)
        want = derivation_dim(alg)[0]
        for _ in range(2):
            while True:
                p = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(alg.n)]
                            for _ in range(alg.n)])
                if p.is_invertible():
                    break
            from .algebra import apply_basis_change

            got = derivation_dim(apply_basis_change(alg, p))[0]
            if got != want:
                return False, f"dim Der changed under basis change: {got} != {want}"
        return True, ""
    return run


def _pierce_item(kind, alg, vec, expect_dims=None):
    def run():
        try:
            split = (pierce_jordan if kind == "jordan" else pierce_associative)(alg, vec)
        except (NotIdempotent, IncompleteSplit) as exc:
            return False, str(exc)
        if not split.all_rules_hold:
            bad = [r.rule for r in split.rule_report if not r.holds]
            return False, f"rules violated: {bad}"
        if expect_dims is not None and split.dims() != expect_dims:
            return False, f"dims {split.dims()} != {expect_dims}"
        return True, ""
    return run


def _jordan_der_formula_items(n):
    j1 = catalog.build("J1", n)
    j2 = catalog.build("J2", n)
    j3 = catalog.build("J3", n)
    yield f"derdim/J1@{n}", _der_dim_item(j1, n * n - 2 * n + 1)
    yield f"derdim/J2@{n}", _der_dim_item(j2, n * n - 2 * n + 1)
    yield f"derdim/J3@{n}", _der_dim_item(j3, n * n - 3 * n + 4)


def _lie_table_items(n):
    values = [
        ("n51", {}, n * n - 5 * n + 15, n - 2),
        ("n52", {}, n * n - 5 * n + 13, n - 1),
        ("r2", {}, n * n - 3 * n + 4, n - 1),
        ("gn1", {"alpha": Fraction(2)}, n * n - 3 * n + 4, n - 1),
        ("gn1", {"alpha": Fraction(-1)}, n * n - 3 * n + 4, n - 1),
        ("gn1", {"alpha": H}, n * n - 3 * n + 4, n - 1),
        ("gn2", {}, n * n - 3 * n + 4, n - 1),
    ]
    for name, params, der, ab in values:
        alg = catalog.build(name, n, **params)
        pr = f"?alpha={format_scalar(params['alpha'])}" if params else ""
        yield f"derdim/{name}@{n}{pr}", _der_dim_item(alg, der)
        yield f"abdim/{name}@{n}{pr}", _ab_dim_item(alg, ab)


def _jordan_pair_items(n):
    algs = {name: catalog.build(name, n) for name in ("J1", "J2", "J3")}
    for a in algs:
        for b in algs:
            if a != b:
                yield (f"obstruction/{a}->{b}@{n}",
                       _obstruction_item(algs[a], algs[b]))


def _lie_pair_items(n):
    algs = {
        "n51": catalog.build("n51", n),
        "n52": catalog.build("n52", n),
        "r2": catalog.build("r2", n),
        "gn1(2)": catalog.build("gn1", n, alpha=2),
        "gn2": catalog.build("gn2", n),
    }
    for a in algs:
        for b in algs:
            if a != b:
                yield (f"obstruction/{a}->{b}@{n}",
                       _obstruction_item(algs[a], algs[b]))


def _suite_specs(suite: str, n_values: list[int], seed: int):
    items = []
    if suite == "level1":
        for n in n_values:
            items.extend(_identity_items(
                n, names={"p", "n3", "lambda2", "nu", "a"}))
            for case in catalog.level_one_cases(n):
                items.append((f"witness/W0/{case.source_ref}", _witness_item(case)))
    elif suite == "jordan2":
        for n in n_values:
            items.extend(_identity_items(n, names={"J1", "J2", "J3", "Jzeta", "T4"}))
            items.extend(_jordan_der_formula_items(n))
            for case in catalog.jordan_witness_cases(n):
                items.append((f"witness/{case.id}/{case.source_ref}",
                              _witness_item(case)))
            items.extend(_jordan_pair_items(n))
            items.append((f"property/derdim-invariance/J3@{n}",
                          _der_invariance_item(catalog.build("J3", n), seed + n)))
    elif suite == "lie2":
        for n in n_values:
            if n in (3, 4):
                names = {"r2", "r3", "n4", "r31a", "g41", "g42"}
                items.extend(_identity_items(n, names=names))
                continue
            items.extend(_identity_items(
                n, names={"n51", "n52", "r2", "gn1", "gn2", "heisenberg"}))
            items.extend(_lie_table_items(n))
            for case in catalog.lie_witness_cases(n):
                items.append((f"witness/{case.id}/{case.source_ref}",
                              _witness_item(case)))
            items.extend(_lie_pair_items(n))
            items.append((f"property/derdim-invariance/gn2@{n}",
                          _der_invariance_item(catalog.build("gn2", n), seed + n)))
    elif suite == "assoc2":
        for n in n_values:
            items.extend(_identity_items(
                n, names={"A1", "A2", "A3", "A4", "A5", "A6"}))
            for case in catalog.associative_witness_cases(n):
                items.append((f"witness/{case.id}/{case.source_ref}",
                              _witness_item(case)))
    elif suite == "pierce":
        for n in n_values:
            e1 = [1] + [0] * (n - 1)
            items.append((f"pierce/nu(1/2)@{n}", _pierce_item(
                "jordan", catalog.build("nu", n, alpha=H), e1,
                {"P0": 0, "P_half": n - 1, "P1": 1})))
            items.append((f"pierce/J1@{n}", _pierce_item(
                "jordan", catalog.build("J1", n), e1,
                {"P0": n - 1, "P_half": 0, "P1": 1})))
            items.append((f"pierce/J2@{n}", _pierce_item(
                "jordan", catalog.build("J2", n), e1,
                {"P0": 0, "P_half": 0, "P1": n})))
            items.append((f"pierce/A2@{n}", _pierce_item(
                "associative", catalog.build("A2", n), e1,
                {"A11": n, "A10": 0, "A01": 0, "A00": 0})))
            items.append((f"pierce/A3@{n}", _pierce_item(
                "associative", catalog.build("A3", n), e1,
                {"A11": 1, "A10": n - 1, "A01": 0, "A00": 0})))
            items.append((f"pierce/A4@{n}", _pierce_item(
                "associative", catalog.build("A4", n), e1,
                {"A11": 1, "A10": 0, "A01": n - 1, "A00": 0})))
    elif suite == "separations":
        for n in n_values:
            if n >= 3:
                items.extend(_jordan_pair_items(n))
            if n >= 5:
                items.extend(_lie_pair_items(n))
    elif suite == "chains":
        for n in n_values:
            for name, case in catalog.chain_cases(n):
                items.append((f"chain/{name}@{n}/{case.id}", _witness_item(case)))
                items.append((f"crosscheck/{name}@{n}/{case.id}",
                              _cross_check_item(case)))
            for case in catalog.level_one_cases(n):
                items.append((f"chain/level1/{case.source_ref}",
                              _witness_item(case)))
    else:
        raise InputError(f"unknown suite {suite!r}; choose from {SUITES}")
    return items


def run_suite(suite: str, n_range: tuple[int, int], seed: int = 0) -> SuiteReport:
    """Run a named verification suite over dimensions n_min..n_max.

    Deterministic for fixed arguments; the seed only affects the random
    basis-change property items.  Items run in a thread pool capped by
    DEGENKIT_THREADS (default: machine cores).
    """
    n_min, n_max = n_range
    n_values = list(range(n_min, n_max + 1))
    specs = _suite_specs(suite, n_values, seed)

    def execute(spec):
        item_id, fn = spec
        try:
            passed, detail = fn()
        except Exception as exc:  # suite items report, never raise
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        return SuiteItem(item_id, passed, detail)

    workers = os.environ.get("DEGENKIT_THREADS")
    max_workers = int(workers) if workers else (os.cpu_count() or 1)
    if max_workers > 1 and len(specs) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(execute, specs))
    else:
        results = [execute(spec) for spec in specs]
    results.sort(key=lambda item: item.id)
    return SuiteReport(suite, n_min, n_max, seed, tuple(results))


# -- commands -------------------------------------------------------------------


def _cmd_check(args) -> int:
    alg = load_algebra_arg(args.algebra)
    report = check_variety(alg, args.variety)
    print(f"variety {args.variety}: {'PASS' if report.passed else 'FAIL'}")
    for name, idx, residual in report.violations[:10]:
        res = ", ".join(format_scalar(x) for x in residual)
        print(f"  {name} at {idx}: residual ({res})")
    if len(report.violations) > 10:
        print(f"  ... {len(report.violations) - 10} more")
    _emit({"algebra": algebra_to_dict(alg), "pass": report.passed,
           "variety": args.variety,
           "violations": [{"identity": name, "indices": list(idx),
                           "residual": [format_scalar(x) for x in residual]}
                          for name, idx, residual in report.violations]},
          args.json)
    return 0 if report.passed else 1


def _cmd_invariants(args) -> int:
    alg = load_algebra_arg(args.algebra)
    profile = invariant_profile(alg)
    for key, value in profile.to_dict().items():
        print(f"{key}: {value}")
    _emit(profile.to_dict(), args.json)
    return 0


def _cmd_degenerate(args) -> int:
    src = load_algebra_arg(args.source)
    w = load_witness_arg(args.witness)
    try:
        pa = transform(src, w)
        limit = limit0_algebra(pa)
    except Singular as exc:
        print(f"witness not invertible: {exc}", file=sys.stderr)
        return 2
    except Pole as exc:
        print(f"limit does not exist: {exc}")
        _emit({"limit_exists": False, "pole_at": list(exc.position or ())},
              args.json)
        return 1
    print("limit table:")
    print(limit.table())
    data = {"limit": algebra_to_dict(limit), "limit_exists": True}
    code = 0
    if args.target:
        target = load_algebra_arg(args.target)
        verdict = verify_witness(src, w, target)
        data["limit_equals_target"] = verdict.limit_equals_target
        data["proper"] = verdict.proper
        data["residuals"] = [list(r) for r in verdict.residuals]
        print(f"equals target: {verdict.limit_equals_target}  "
              f"proper: {verdict.proper}")
        for r in verdict.residuals[:10]:
            print(f"  residual at {r[:3]}: got {r[3]}, want {r[4]}")
        code = 0 if verdict.passed else 1
    _emit(data, args.json)
    return code


def _cmd_pierce(args) -> int:
    alg = load_algebra_arg(args.algebra)
    vec = [parse_scalar(part) for part in args.idempotent.split(",")]
    mode = args.mode
    if mode == "auto":
        mode = "jordan" if check_variety(alg, "commutative").passed else "associative"
    try:
        split = (pierce_jordan if mode == "jordan" else pierce_associative)(alg, vec)
    except (NotIdempotent, IncompleteSplit) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(f"{mode} split at ({args.idempotent}):")
    for name in sorted(split.components):
        comp = split.components[name]
        vecs = ["(" + ", ".join(format_scalar(x) for x in v) + ")"
                for v in comp.vectors()]
        print(f"  {name}: dim {comp.dim}  " + "  ".join(vecs))
    for rule in split.rule_report:
        print(f"  rule {rule.rule}: {'holds' if rule.holds else 'FAILS'}"
              + (f" ({rule.detail})" if rule.detail else ""))
    _emit({
        "components": {name: {"dim": comp.dim,
                              "basis": [[format_scalar(x) for x in v]
                                        for v in comp.vectors()]}
                       for name, comp in split.components.items()},
        "idempotent": [format_scalar(x) for x in split.idempotent],
        "mode": mode,
        "rules": [{"holds": r.holds, "rule": r.rule} for r in split.rule_report],
    }, args.json)
    return 0 if split.all_rules_hold else 1


def _cmd_separate(args) -> int:
    a = load_algebra_arg(args.first)
    b = load_algebra_arg(args.second)
    data = {}
    for label, src, dst in (("forward", a, b), ("backward", b, a)):
        obs = degeneration_obstructions(src, dst)
        data[label] = [{"detail": [str(x) for x in o.detail], "kind": o.kind}
                       for o in obs]
        arrow = "->" if label == "forward" else "<-"
        if obs:
            print(f"{args.first} {arrow} {args.second}: obstructed")
            for o in obs:
                print(f"  {o.kind}: {o.describe()}")
        else:
            print(f"{args.first} {arrow} {args.second}: no obstruction found "
                  "(existence not implied)")
    _emit(data, args.json)
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for entry in catalog.list_entries():
            top = entry["n_max"] if entry["n_max"] is not None else ""
            dims = f"n>={entry['n_min']}" + (f"..{top}" if top else "")
            params = f"  params: {entry['params']}" if entry["params"] else ""
            cross = f"  (coincides with {entry['cross_ref']})" if entry["cross_ref"] else ""
            print(f"{entry['name']:14} {dims:9} {entry['summary']}{params}{cross}")
        print()
        for w in catalog.list_witnesses():
            print(f"{w['id']:14} {w['summary']}")
        return 0
    params = _parse_params(args.param)
    if args.action == "emit":
        alg = catalog.build(args.name, args.n, **params)
        text = json.dumps(algebra_to_dict(alg), sort_keys=True, indent=2)
    elif args.action == "witness":
        w = catalog.witness(args.name, args.n, **params)
        text = json.dumps(witness_to_dict(w), sort_keys=True, indent=2)
    else:
        raise InputError(f"unknown catalog action {args.action!r}")
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, (args.n_min, args.n_max), args.seed)
    print(report.render())
    if args.json:
        Path(args.json).write_text(
            json.dumps(report.to_dict(args.timestamps), sort_keys=True, indent=2)
            + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenkit",
        description="exact verification of structure-constant algebras, "
                    "their degenerations and invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check variety identities of an algebra")
    p.add_argument("algebra")
    p.add_argument("--variety", required=True,
                   choices=["associative", "lie", "jordan", "commutative",
                            "anticommutative"])
    p.add_argument("--json")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("invariants", help="invariant profile of an algebra")
    p.add_argument("algebra")
    p.add_argument("--json")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("degenerate", help="apply a witness and take t -> 0")
    p.add_argument("source")
    p.add_argument("--witness", required=True)
    p.add_argument("--target")
    p.add_argument("--json")
    p.set_defaults(fn=_cmd_degenerate)

    p = sub.add_parser("pierce", help="idempotent eigenspace split")
    p.add_argument("algebra")
    p.add_argument("--idempotent", required=True,
                   help="comma-separated exact scalar vector")
    p.add_argument("--mode", choices=["auto", "jordan", "associative"],
                   default="auto")
    p.add_argument("--json")
    p.set_defaults(fn=_cmd_pierce)

    p = sub.add_parser("separate", help="degeneration obstructions both ways")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--json")
    p.set_defaults(fn=_cmd_separate)

    p = sub.add_parser("catalog", help="list or emit catalog objects")
    p.add_argument("action", choices=["list", "emit", "witness"])
    p.add_argument("name", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--param", action="append", default=[],
                   help="key=value, repeatable")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=list(SUITES))
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json")
    p.add_argument("--timestamps", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (catalog.UnknownName, catalog.UnknownWitness,
            catalog.DimensionConstraint, catalog.ParameterDomain) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
