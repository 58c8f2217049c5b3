"""Command-line surface.

Every subcommand reads JSON documents (a file path or `catalog:<name>`),
prints a plain-text report or, with --json, a canonical JSON report that is
byte-identical across runs.  Exit codes: 0 success or property holds, 1
property fails or a witness was found, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog as _catalog
from . import serialize as _serialize
from .classify import census, classify, sample_ybe_solutions
from .constructions import (
    cartesian_product,
    derived_solution,
    disjoint_union_solution,
    glued_identity_extension,
    left_derived_solution,
    level_solution,
    trivial_extension,
)
from .homology import cohomology, homology, verify_complex
from .kgraph import (
    ThetaFamily,
    complete_diamond,
    normalize,
    periodicity,
    validate_kgraph,
)
from .semigroup import (
    check_cancellative,
    growth,
    presentations,
    semigroup_extension_check,
)
from .solution import (
    Solution,
    check_structure_equations,
    is_ybe,
    properties,
    ybe_witness,
)
from .errors import (
    BadModulus,
    DegreeOutOfRange,
    DegreesOverlap,
    Degenerate,
    FamilyMismatch,
    InvalidLetter,
    InvalidParams,
    NotABijection,
    NotAYbeSolution,
    NotDerivedType,
    OutOfRange,
    Overflow,
    ParseError,
    PositionOutOfRange,
    PreconditionFailed,
    PropertyMissing,
    SchemaError,
    SizeMismatch,
    SizeTooLarge,
    UnknownName,
    YbkError,
)

_USAGE_ERRORS = (
    ParseError,
    SchemaError,
    UnknownName,
    InvalidParams,
    OutOfRange,
    NotABijection,
    SizeTooLarge,
    SizeMismatch,
    BadModulus,
    Overflow,
    PositionOutOfRange,
    InvalidLetter,
    DegreeOutOfRange,
    FamilyMismatch,
)
_PROPERTY_ERRORS = (
    NotAYbeSolution,
    Degenerate,
    PropertyMissing,
    DegreesOverlap,
    NotDerivedType,
    PreconditionFailed,
)


def _read_text(source: str) -> str:
    if source.startswith("catalog:"):
        name = source.split(":", 1)[1]
        return _serialize.canonical_json(_catalog.catalog_document(name))
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.exists():
        raise ParseError(f"no such file: {source}")
    return path.read_text()


def _load_solution(source: str) -> Solution:
    return _serialize.parse_solution_document(_read_text(source)).solution


def _load_theta(source: str) -> ThetaFamily:
    return _serialize.parse_theta_document(_read_text(source)).family


def _parse_word(text: str) -> list[tuple[int, int]]:
    text = text.strip()
    if not text:
        return []
    out = []
    for token in text.split(","):
        colour, _, letter = token.partition(":")
        try:
            out.append((int(colour), int(letter)))
        except ValueError as exc:
            raise InvalidParams(
                f"word token {token!r} must look like colour:letter"
            ) from exc
    return out


def _emit(args, report: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        sys.stdout.write(_serialize.canonical_json(report))
    else:
        for line in lines:
            print(line)


def _cmd_verify(args) -> int:
    R = _load_solution(args.input)
    ok = is_ybe(R)
    witness = None if ok else ybe_witness(R)
    report = {"command": "verify", "ybe": ok, "witness": list(witness) if witness else None}
    lines = [f"YBE: {'yes' if ok else 'no'}"]
    if witness:
        lines.append(f"witness triple: {witness}")
    _emit(args, report, lines)
    return 0 if ok else 1


def _cmd_props(args) -> int:
    R = _load_solution(args.input)
    report = properties(R).as_dict()
    report["command"] = "props"
    lines = [
        f"{key}: {'yes' if report[key] else 'no'}"
        for key in (
            "is_bijection",
            "is_ybe",
            "involutive",
            "square_free",
            "non_degenerate",
            "symmetric",
            "derived_type",
        )
    ]
    for key, value in report["witnesses"].items():
        lines.append(f"witness[{key}]: {tuple(value)}")
    _emit(args, report, lines)
    return 0


def _cmd_equations(args) -> int:
    R = _load_solution(args.input)
    report = check_structure_equations(R).as_dict()
    report["command"] = "equations"
    lines = [
        f"alpha homomorphism equation: {'holds' if report['alpha_homomorphic'] else 'fails'}",
        f"beta anti-homomorphism equation: {'holds' if report['beta_antihomomorphic'] else 'fails'}",
        f"compatibility equation: {'holds' if report['compatible'] else 'fails'}",
        f"all hold (equivalent to YBE): {'yes' if report['all_hold'] else 'no'}",
    ]
    _emit(args, report, lines)
    return 0 if report["all_hold"] else 1


def _print_solution(solution: Solution, name: str | None = None) -> int:
    doc = _serialize.SolutionDocument(solution, name=name)
    sys.stdout.write(_serialize.emit_solution_document(doc))
    return 0


def _cmd_level(args) -> int:
    R = _load_solution(args.input)
    return _print_solution(level_solution(R, args.n))


def _cmd_derive(args) -> int:
    R = _load_solution(args.input)
    if args.left:
        return _print_solution(left_derived_solution(R))
    return _print_solution(derived_solution(R))


def _cmd_product(args) -> int:
    return _print_solution(
        cartesian_product(_load_solution(args.left), _load_solution(args.right))
    )


def _cmd_extend_trivial(args) -> int:
    return _print_solution(
        trivial_extension(_load_solution(args.left), _load_solution(args.right))
    )


def _cmd_extend_glued(args) -> int:
    family = _load_theta(args.theta)
    if family.k != 2:
        raise InvalidParams("extend-glued needs a 2-colour theta document")
    return _print_solution(
        glued_identity_extension(
            family.sizes[0], family.sizes[1], family.maps[0]
        )
    )


def _cmd_union(args) -> int:
    return _print_solution(disjoint_union_solution(_load_theta(args.theta)))


def _cmd_kgraph_verify(args) -> int:
    family = _load_theta(args.theta)
    ok, witness = validate_kgraph(family)
    report = {
        "command": "kgraph-verify",
        "valid": ok,
        "witness": None
        if witness is None
        else {"triple": list(witness[:3]), "point": list(witness[3])},
    }
    lines = [f"valid k-graph: {'yes' if ok else 'no'}"]
    if witness:
        lines.append(f"failing triple {witness[:3]} at point {witness[3]}")
    _emit(args, report, lines)
    return 0 if ok else 1


def _cmd_kgraph_normalize(args) -> int:
    family = _load_theta(args.theta)
    word = normalize(family, _parse_word(args.word))
    report = {
        "command": "kgraph-normalize",
        "normal_form": [list(pair) for pair in word.letters()],
        "degree": list(word.degree),
    }
    _emit(args, report, [f"normal form: {word}", f"degree: {word.degree}"])
    return 0


def _cmd_kgraph_diamond(args) -> int:
    family = _load_theta(args.theta)
    mu = normalize(family, _parse_word(args.mu))
    nu = normalize(family, _parse_word(args.nu))
    mu_t, nu_t = complete_diamond(family, mu, nu, args.direction)
    report = {
        "command": "kgraph-diamond",
        "direction": args.direction,
        "mu_tilde": [list(pair) for pair in mu_t.letters()],
        "nu_tilde": [list(pair) for pair in nu_t.letters()],
    }
    _emit(args, report, [f"mu~: {mu_t}", f"nu~: {nu_t}"])
    return 0


def _cmd_periodic(args) -> int:
    R = _load_solution(args.input)
    result = periodicity(R, args.bound)
    report = {
        "command": "periodic",
        "periodic": result.periodic,
        "order": result.order,
        "bound": result.bound,
    }
    _emit(args, report, [str(result)])
    return 0 if result.periodic else 1


def _default_maxlen(size: int) -> int:
    # keeps the largest word table near 3e5 entries
    if size <= 2:
        return 6
    if size == 3:
        return 5
    return 4


def _cmd_semigroup(args) -> int:
    R = _load_solution(args.input)
    if args.max_len is None:
        args.max_len = _default_maxlen(R.size)
    code = 0
    report: dict = {"command": "semigroup", "max_len": args.max_len}
    lines: list[str] = []
    counts = growth(R, args.max_len)
    report["growth"] = list(counts)
    lines.append("growth: " + " ".join(str(c) for c in counts))
    if args.presentation:
        pres = presentations(R)
        report["presentation"] = {
            "generators": list(pres.generators),
            "chains": [[list(word) for word in chain] for chain in pres.chains],
        }
        lines.append(pres.semigroup_text)
        lines.append(pres.group_text)
    if args.cancel:
        ok, witness = check_cancellative(R, args.max_len)
        report["cancellative"] = ok
        report["cancellation_witness"] = _witness_json(witness)
        lines.append(f"cancellative up to {args.max_len}: {'yes' if ok else 'no'}")
        if witness:
            lines.append(f"witness: {witness}")
        if not ok:
            code = 1
    if args.extension_check:
        ok, witness = semigroup_extension_check(R, args.max_len)
        report["extension_ok"] = ok
        report["extension_witness"] = _witness_json(witness)
        lines.append(f"braided extension up to {args.max_len}: {'yes' if ok else 'no'}")
        if witness:
            lines.append(f"witness: {witness}")
        if not ok:
            code = 1
    _emit(args, report, lines)
    return code


def _witness_json(witness):
    if witness is None:
        return None
    return [list(w) if isinstance(w, tuple) else w for w in witness]


def _cmd_enumerate(args) -> int:
    relation = {"yb-iso": "yb_iso", "conjugacy": "conjugacy"}[args.relation]
    if args.sample is not None:
        solutions = sample_ybe_solutions(args.size, args.sample, args.seed)
        result = classify(solutions, relation)
        header = (
            f"non-exhaustive sample, {args.sample} seeded draws (seed {args.seed})"
        )
        total = None
    else:
        result = census(args.size, relation)
        header = "exhaustive census"
        total = result.total_bijections
    report = {
        "command": "enumerate",
        "size": args.size,
        "relation": args.relation,
        "exhaustive": args.sample is None,
        "total_bijections": total,
        "solutions": len(result.solutions),
        "classes": len(result.classes),
        "class_sizes": [len(cls) for cls in result.classes],
        "representatives": [
            [list(pair) for pair in rep.table] for rep in result.representatives
        ],
    }
    lines = [
        f"size {args.size}: {header}",
        f"solutions: {len(result.solutions)}",
        f"{len(result.classes)} classes under {args.relation}",
    ]
    _emit(args, report, lines)
    return 0


def _cmd_homology(args) -> int:
    R = _load_solution(args.input)
    code = 0
    report: dict = {"command": "homology", "degree": args.degree}
    lines = []
    if args.verify_complex:
        ok = verify_complex(R, args.degree + 1)
        report["chain_condition"] = ok
        lines.append(f"chain condition through degree {args.degree + 1}: {'ok' if ok else 'VIOLATED'}")
        if not ok:
            code = 1
    integral = homology(R, args.degree)
    report["homology"] = str(integral)
    lines.append(f"H_{args.degree} = {integral}")
    coeff = args.coeff.strip().lower()
    if coeff == "z":
        group = cohomology(R, args.degree)
        report["cohomology"] = str(group)
        report["coefficients"] = "z"
        lines.append(f"H^{args.degree}(Z) = {group}")
    elif coeff.startswith("z/"):
        modulus = int(coeff[2:])
        group = cohomology(R, args.degree, modulus)
        report["cohomology"] = str(group)
        report["coefficients"] = f"z/{modulus}"
        lines.append(f"H^{args.degree}(Z/{modulus}) = {group}")
    else:
        raise InvalidParams(f"--coeff must be z or z/M, got {args.coeff!r}")
    _emit(args, report, lines)
    return code


def _cmd_catalog(args) -> int:
    if args.name is None:
        names = _catalog.catalog_names()
        if getattr(args, "json", False):
            sys.stdout.write(_serialize.canonical_json({"command": "catalog", "names": names}))
        else:
            for name in names:
                print(name)
        return 0
    sys.stdout.write(_serialize.canonical_json(_catalog.catalog_document(args.name)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybk",
        description="Set-theoretic Yang-Baxter solutions and single-vertex k-graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true", help="machine-readable canonical JSON")
        return p

    p = add("verify", _cmd_verify, help="decide the braid relation")
    p.add_argument("input")

    p = add("props", _cmd_props, help="structural property report")
    p.add_argument("input")

    p = add("equations", _cmd_equations, help="the three coordinate-map equations")
    p.add_argument("input")

    p = add("level", _cmd_level, help="emit the level-n solution document")
    p.add_argument("input")
    p.add_argument("--n", type=int, required=True)

    p = add("derive", _cmd_derive, help="emit the derived solution document")
    p.add_argument("input")
    p.add_argument("--left", action="store_true", help="the mirror-shape variant")

    p = add("product", _cmd_product, help="cartesian product of two solutions")
    p.add_argument("left")
    p.add_argument("right")

    p = add("extend-trivial", _cmd_extend_trivial, help="trivial extension of two solutions")
    p.add_argument("left")
    p.add_argument("right")

    p = add("extend-glued", _cmd_extend_glued, help="glued identity extension from a 2-colour theta document")
    p.add_argument("theta")

    p = add("union", _cmd_union, help="disjoint-union solution of a theta document")
    p.add_argument("theta")

    kgraph = sub.add_parser("kgraph", help="k-graph operations")
    ksub = kgraph.add_subparsers(dest="kgraph_command", required=True)

    def kadd(name, handler, **kwargs):
        p = ksub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--json", action="store_true")
        return p

    p = kadd("verify", _cmd_kgraph_verify, help="validate the triple identity")
    p.add_argument("theta")

    p = kadd("normalize", _cmd_kgraph_normalize, help="normal form of a word")
    p.add_argument("theta")
    p.add_argument("--word", required=True, help="comma-separated colour:letter pairs")

    p = kadd("diamond", _cmd_kgraph_diamond, help="complete a factorization diamond")
    p.add_argument("theta")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--direction", choices=("pullback", "pushout"), required=True)

    p = add("periodic", _cmd_periodic, help="search for a level with identity solution")
    p.add_argument("input")
    p.add_argument("--bound", type=int, default=6)

    p = add("semigroup", _cmd_semigroup, help="structure semigroup reports")
    p.add_argument("input")
    p.add_argument(
        "--max-len",
        type=int,
        default=None,
        help="default 6 for two elements, 5 for three, 4 beyond",
    )
    p.add_argument("--cancel", action="store_true")
    p.add_argument("--presentation", action="store_true")
    p.add_argument("--extension-check", action="store_true")

    for name in ("enumerate", "classify"):
        p = add(name, _cmd_enumerate, help="census and classification of small solutions")
        p.add_argument("--size", type=int, required=True)
        p.add_argument("--relation", choices=("yb-iso", "conjugacy"), default="yb-iso")
        p.add_argument("--sample", type=int, default=None, help="non-exhaustive seeded sampling")
        p.add_argument("--seed", type=int, default=0)

    p = add("homology", _cmd_homology, help="integral homology and cohomology")
    p.add_argument("input")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--coeff", default="z", help="z or z/M")
    p.add_argument("--verify-complex", action="store_true")

    p = add("catalog", _cmd_catalog, help="list or emit bundled inputs")
    p.add_argument("name", nargs="?", default=None)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _PROPERTY_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except YbkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
