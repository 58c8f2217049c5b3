"""Bundled named inputs: the standard families, the worked commutation
families on three colours, and the degenerate three-point extension.

Every entry carries its expected property profile in metadata so the profile
can be replayed against `ybk props` / `ybk kgraph verify`.
"""

from __future__ import annotations

from .constructions import trivial_extension
from .errors import UnknownName
from .kgraph import ThetaFamily, make_theta_family
from .serialize import (
    SolutionDocument,
    ThetaDocument,
    solution_document_dict,
    theta_document_dict,
)
from .solution import Solution, _mod1, builtin


def _glue_add() -> list[tuple[int, int]]:
    # (s, t) -> ((s + t) mod 2, t) on [2] x [2]
    return [(_mod1(s + t, 2), t) for s in (1, 2) for t in (1, 2)]


def _glue_id() -> list[tuple[int, int]]:
    return [(s, t) for s in (1, 2) for t in (1, 2)]


def _degenerate_extension() -> Solution:
    return trivial_extension(builtin("identity", 2), builtin("identity", 1))


def _solution_entries() -> dict[str, tuple[Solution, dict]]:
    entries: dict[str, tuple[Solution, dict]] = {}
    for n in range(2, 7):
        entries[f"identity-{n}"] = (
            builtin("identity", n),
            {"is_ybe": True, "involutive": True, "square_free": True, "non_degenerate": False},
        )
        entries[f"flip-{n}"] = (
            builtin("flip", n),
            {"is_ybe": True, "involutive": True, "square_free": True, "non_degenerate": True},
        )
        entries[f"double-shift-{n}"] = (
            builtin("double_shift", n),
            {"is_ybe": True, "involutive": n == 2, "square_free": False, "non_degenerate": True},
        )
        entries[f"shift-{n}"] = (
            builtin("shift", n),
            {"is_ybe": True, "involutive": False, "square_free": False, "non_degenerate": True},
        )
    for n in range(3, 7):
        entries[f"dihedral-{n}"] = (
            builtin("dihedral", n),
            {
                "is_ybe": True,
                "involutive": False,
                "square_free": True,
                "non_degenerate": True,
                "derived_type": True,
            },
        )
    entries["extension-degenerate-3"] = (
        _degenerate_extension(),
        {"is_ybe": True, "involutive": True, "square_free": True, "non_degenerate": False},
    )
    return entries


def _theta_entries() -> dict[str, tuple[ThetaFamily, dict]]:
    identity_family = make_theta_family(
        3, (2, 2, 2), {(1, 2): _glue_id(), (1, 3): _glue_id(), (2, 3): _glue_id()}
    )
    mixed_family = make_theta_family(
        3, (2, 2, 2), {(1, 2): _glue_id(), (1, 3): _glue_add(), (2, 3): _glue_add()}
    )
    return {
        "theta-identity-3": (identity_family, {"valid_kgraph": True}),
        "theta-mixed-3": (mixed_family, {"valid_kgraph": True}),
    }


def catalog_names() -> list[str]:
    return sorted(list(_solution_entries()) + list(_theta_entries()))


def catalog_document(name: str) -> dict:
    """The canonical document dict of a catalog entry."""
    solutions = _solution_entries()
    if name in solutions:
        solution, profile = solutions[name]
        doc = SolutionDocument(solution, name=name, metadata={"profile": profile})
        return solution_document_dict(doc)
    thetas = _theta_entries()
    if name in thetas:
        family, profile = thetas[name]
        doc = ThetaDocument(family, name=name, metadata={"profile": profile})
        return theta_document_dict(doc)
    raise UnknownName(f"no catalog entry named {name!r}; see `ybk catalog`")


def catalog_solution(name: str) -> Solution:
    solutions = _solution_entries()
    if name not in solutions:
        raise UnknownName(f"no solution catalog entry named {name!r}")
    return solutions[name][0]


def catalog_theta(name: str) -> ThetaFamily:
    thetas = _theta_entries()
    if name not in thetas:
        raise UnknownName(f"no theta catalog entry named {name!r}")
    return thetas[name][0]


def catalog_profile(name: str) -> dict:
    solutions = _solution_entries()
    if name in solutions:
        return solutions[name][1]
    thetas = _theta_entries()
    if name in thetas:
        return thetas[name][1]
    raise UnknownName(f"no catalog entry named {name!r}")
