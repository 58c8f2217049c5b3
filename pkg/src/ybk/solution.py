"""Bijections of [N] x [N] and the braid relation.

A candidate map R sends a pair (x, y) of 1-based elements to another pair.
Everything here is decided by exhaustive evaluation: the braid relation
R12 R23 R12 = R23 R12 R23 over all N**3 triples, the coordinate-map
decomposition R(x, y) = (alpha_x(y), beta_y(x)), and the structural flags
(involutive, square-free, non-degenerate, derived type) read off from it.

>>> R = builtin("dihedral", 3)
>>> is_ybe(R)
True
>>> properties(R).symmetric
True
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidParams,
    NotABijection,
    NotDerivedType,
    OutOfRange,
    PositionOutOfRange,
    UnknownName,
)

BUILTIN_NAMES = ("identity", "flip", "double_shift", "shift", "dihedral", "permutation")


@dataclass(frozen=True, slots=True)
class Solution:
    """A bijection of [N]^2, stored row-major with x outer.

    `table[(x-1)*N + (y-1)]` is the output pair R(x, y); all coordinates are
    1-based.  Instances are immutable; build them through `make_solution` so
    the bijection invariant is enforced.
    """

    size: int
    table: tuple[tuple[int, int], ...]

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.table[(x - 1) * self.size + (y - 1)]

    def inverse(self) -> "Solution":
        """The inverse bijection (R is invertible by construction)."""
        n = self.size
        inv = [(0, 0)] * (n * n)
        for idx, (u, v) in enumerate(self.table):
            x, y = divmod(idx, n)
            inv[(u - 1) * n + (v - 1)] = (x + 1, y + 1)
        return Solution(n, tuple(inv))


@dataclass(frozen=True, slots=True)
class AlphaBeta:
    """Coordinate maps of a solution: alpha[x-1][y-1] = alpha_x(y), beta[y-1][x-1] = beta_y(x)."""

    alpha: tuple[tuple[int, ...], ...]
    beta: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PropertyReport:
    """Flags of one solution plus least counterexamples for the failed ones."""

    is_bijection: bool
    is_ybe: bool
    involutive: bool
    square_free: bool
    non_degenerate: bool
    symmetric: bool
    derived_type: bool
    witnesses: dict

    def as_dict(self) -> dict:
        return {
            "is_bijection": self.is_bijection,
            "is_ybe": self.is_ybe,
            "involutive": self.involutive,
            "square_free": self.square_free,
            "non_degenerate": self.non_degenerate,
            "symmetric": self.symmetric,
            "derived_type": self.derived_type,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
        }


@dataclass(frozen=True)
class StructureReport:
    """Outcome of the three coordinate-map equations equivalent to the braid relation."""

    alpha_homomorphic: bool
    beta_antihomomorphic: bool
    compatible: bool
    witnesses: dict

    @property
    def all_hold(self) -> bool:
        return self.alpha_homomorphic and self.beta_antihomomorphic and self.compatible

    def as_dict(self) -> dict:
        return {
            "alpha_homomorphic": self.alpha_homomorphic,
            "beta_antihomomorphic": self.beta_antihomomorphic,
            "compatible": self.compatible,
            "all_hold": self.all_hold,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
        }


def make_solution(size: int, table) -> Solution:
    """Validate and freeze a candidate table.

    The table must list exactly size**2 output pairs, row-major with x outer;
    duplicates raise NotABijection with both preimages, out-of-range
    coordinates raise OutOfRange.
    """
    if not isinstance(size, int) or size < 1:
        raise InvalidParams(f"size must be a positive integer, got {size!r}")
    entries = [tuple(entry) for entry in table]
    if len(entries) != size * size:
        raise InvalidParams(
            f"table must have {size * size} entries for size {size}, got {len(entries)}"
        )
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for idx, pair in enumerate(entries):
        if len(pair) != 2:
            raise InvalidParams(f"entry {idx} is not a pair: {pair!r}")
        u, v = pair
        x, y = divmod(idx, size)
        if not (isinstance(u, int) and isinstance(v, int)):
            raise OutOfRange(f"entry for ({x + 1},{y + 1}) has non-integer coordinates {pair!r}")
        if not (1 <= u <= size and 1 <= v <= size):
            raise OutOfRange(
                f"entry for ({x + 1},{y + 1}) is {pair}, outside [1..{size}]^2"
            )
        if pair in seen:
            raise NotABijection(
                f"output pair {pair} produced by both {seen[pair]} and {(x + 1, y + 1)}"
            )
        seen[pair] = (x + 1, y + 1)
    return Solution(size, tuple(entries))


def _mod1(value: int, n: int) -> int:
    """Reduce into the 1-based window [1..n]."""
    return (value - 1) % n + 1


def builtin(name: str, size: int, f=None, g=None) -> Solution:
    """One of the catalog families on [size].

    identity, flip, double_shift R(i,j)=(j+1,i+1), shift R(i,j)=(j+1,i),
    dihedral R(i,j)=(j,2j-i) for size >= 3, and permutation R(x,y)=(f(y),g(x))
    for commuting bijections f, g given as 1-based image sequences.
    """
    if not isinstance(size, int) or size < 1:
        raise InvalidParams(f"size must be a positive integer, got {size!r}")
    n = size
    if name == "identity":
        table = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    elif name == "flip":
        table = [(y, x) for x in range(1, n + 1) for y in range(1, n + 1)]
    elif name == "double_shift":
        table = [
            (_mod1(y + 1, n), _mod1(x + 1, n))
            for x in range(1, n + 1)
            for y in range(1, n + 1)
        ]
    elif name == "shift":
        table = [
            (_mod1(y + 1, n), x) for x in range(1, n + 1) for y in range(1, n + 1)
        ]
    elif name == "dihedral":
        if n < 3:
            raise InvalidParams(f"dihedral needs size >= 3, got {n}")
        table = [
            (y, _mod1(2 * y - x, n)) for x in range(1, n + 1) for y in range(1, n + 1)
        ]
    elif name == "permutation":
        if f is None or g is None:
            raise InvalidParams("permutation needs both f and g")
        fm = _as_permutation(f, n, "f")
        gm = _as_permutation(g, n, "g")
        for x in range(1, n + 1):
            if fm[gm[x - 1] - 1] != gm[fm[x - 1] - 1]:
                raise InvalidParams("permutation solution needs f and g to commute")
        table = [(fm[y - 1], gm[x - 1]) for x in range(1, n + 1) for y in range(1, n + 1)]
    else:
        raise UnknownName(f"no builtin named {name!r}; known: {', '.join(BUILTIN_NAMES)}")
    return make_solution(n, table)


def _as_permutation(seq, n: int, label: str) -> tuple[int, ...]:
    images = tuple(seq)
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise InvalidParams(f"{label} must be a permutation of 1..{n}, got {images!r}")
    return images


def _table_is_ybe(n: int, table) -> bool:
    """Braid relation on a raw table, with early exit.  Hot path for censuses."""
    for x in range(1, n + 1):
        base = (x - 1) * n
        for y in range(1, n + 1):
            u1, v1 = table[base + y - 1]
            row_u1 = (u1 - 1) * n
            row_x = base
            for z in range(1, n + 1):
                a, b = table[(v1 - 1) * n + z - 1]
                c, d = table[row_u1 + a - 1]
                p, q = table[(y - 1) * n + z - 1]
                e, fo = table[row_x + p - 1]
                g, h = table[(fo - 1) * n + q - 1]
                if c != e or d != g or b != h:
                    return False
    return True


def is_ybe(R: Solution) -> bool:
    """True iff both sides of the braid relation agree on every triple."""
    return _table_is_ybe(R.size, R.table)


def ybe_witness(R: Solution):
    """Least triple (x, y, z) where the braid relation fails, or None."""
    n = R.size
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            for z in range(1, n + 1):
                lhs, rhs = _braid_sides(R, x, y, z)
                if lhs != rhs:
                    return (x, y, z)
    return None


def _braid_sides(R: Solution, x: int, y: int, z: int):
    u1, v1 = R(x, y)
    a, b = R(v1, z)
    c, d = R(u1, a)
    lhs = (c, d, b)
    p, q = R(y, z)
    e, f = R(x, p)
    g, h = R(f, q)
    rhs = (e, g, h)
    return lhs, rhs


def alpha_beta(R: Solution) -> AlphaBeta:
    """Split R(x, y) = (alpha_x(y), beta_y(x)) into its two coordinate families."""
    n = R.size
    alpha = tuple(
        tuple(R(x, y)[0] for y in range(1, n + 1)) for x in range(1, n + 1)
    )
    beta = tuple(
        tuple(R(x, y)[1] for x in range(1, n + 1)) for y in range(1, n + 1)
    )
    return AlphaBeta(alpha, beta)


def properties(R: Solution) -> PropertyReport:
    """All structural flags, each by direct exhaustive test."""
    n = R.size
    witnesses: dict = {}

    involutive = True
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            u, v = R(x, y)
            if R(u, v) != (x, y):
                involutive = False
                witnesses["involutive"] = (x, y)
                break
        if not involutive:
            break

    square_free = True
    for x in range(1, n + 1):
        if R(x, x) != (x, x):
            square_free = False
            witnesses["square_free"] = (x,)
            break

    ab = alpha_beta(R)
    non_degenerate = True
    for x in range(1, n + 1):
        row = ab.alpha[x - 1]
        collision = _first_collision(row)
        if collision is not None:
            non_degenerate = False
            witnesses["non_degenerate"] = ("alpha", x) + collision
            break
    if non_degenerate:
        for y in range(1, n + 1):
            row = ab.beta[y - 1]
            collision = _first_collision(row)
            if collision is not None:
                non_degenerate = False
                witnesses["non_degenerate"] = ("beta", y) + collision
                break

    identity_row = tuple(range(1, n + 1))
    alpha_is_id = all(row == identity_row for row in ab.alpha)
    beta_is_id = all(row == identity_row for row in ab.beta)
    derived_type = alpha_is_id or beta_is_id

    ybe = is_ybe(R)
    if not ybe:
        witnesses["is_ybe"] = ybe_witness(R)

    return PropertyReport(
        is_bijection=True,
        is_ybe=ybe,
        involutive=involutive,
        square_free=square_free,
        non_degenerate=non_degenerate,
        symmetric=involutive and non_degenerate and ybe,
        derived_type=derived_type,
        witnesses=witnesses,
    )


def _first_collision(row: tuple[int, ...]):
    """Least (a, b), a < b, with row[a-1] == row[b-1], or None if injective."""
    seen: dict[int, int] = {}
    for pos, value in enumerate(row, start=1):
        if value in seen:
            return (seen[value], pos)
        seen[value] = pos
    return None


def check_structure_equations(R: Solution) -> StructureReport:
    """Decide the three coordinate-map equations whose conjunction is the braid relation.

    alpha_x alpha_y = alpha_u alpha_v and beta_y beta_x = beta_v beta_u for
    R(x, y) = (u, v), plus the mixed compatibility equation, each checked on
    every triple.
    """
    n = R.size
    ab = alpha_beta(R)
    alpha, beta = ab.alpha, ab.beta
    witnesses: dict = {}

    alpha_hom = True
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            u, v = R(x, y)
            for z in range(1, n + 1):
                if alpha[x - 1][alpha[y - 1][z - 1] - 1] != alpha[u - 1][alpha[v - 1][z - 1] - 1]:
                    alpha_hom = False
                    witnesses["alpha_homomorphic"] = (x, y, z)
                    break
            if not alpha_hom:
                break
        if not alpha_hom:
            break

    beta_antihom = True
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            u, v = R(x, y)
            for z in range(1, n + 1):
                if beta[y - 1][beta[x - 1][z - 1] - 1] != beta[v - 1][beta[u - 1][z - 1] - 1]:
                    beta_antihom = False
                    witnesses["beta_antihomomorphic"] = (x, y, z)
                    break
            if not beta_antihom:
                break
        if not beta_antihom:
            break

    compatible = True
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            for z in range(1, n + 1):
                left = beta[alpha[beta[y - 1][x - 1] - 1][z - 1] - 1][alpha[x - 1][y - 1] - 1]
                right = alpha[beta[alpha[y - 1][z - 1] - 1][x - 1] - 1][beta[z - 1][y - 1] - 1]
                if left != right:
                    compatible = False
                    witnesses["compatible"] = (x, y, z)
                    break
            if not compatible:
                break
        if not compatible:
            break

    return StructureReport(alpha_hom, beta_antihom, compatible, witnesses)


def apply_leg(R: Solution, i: int, values) -> tuple[int, ...]:
    """Apply R to coordinates (i, i+1) of a tuple, identity elsewhere."""
    t = tuple(values)
    if not 1 <= i < len(t):
        raise PositionOutOfRange(f"leg position {i} does not fit a tuple of length {len(t)}")
    n = R.size
    for value in t:
        if not 1 <= value <= n:
            raise OutOfRange(f"tuple entry {value} outside [1..{n}]")
    u, v = R(t[i - 1], t[i])
    return t[: i - 1] + (u, v) + t[i + 1 :]


def mirror_derived(R: Solution) -> Solution:
    """Swap the two derived-type shapes: (f_x(y), x) <-> (y, f_y(x)).

    The two shapes satisfy the braid relation together or not at all, which
    the test suite uses as an invariant.
    """
    n = R.size
    ab = alpha_beta(R)
    identity_row = tuple(range(1, n + 1))
    if all(row == identity_row for row in ab.beta):
        table = [
            (y, ab.alpha[y - 1][x - 1]) for x in range(1, n + 1) for y in range(1, n + 1)
        ]
    elif all(row == identity_row for row in ab.alpha):
        table = [
            (ab.beta[x - 1][y - 1], x) for x in range(1, n + 1) for y in range(1, n + 1)
        ]
    else:
        raise NotDerivedType("neither coordinate family is the identity")
    return make_solution(n, table)


def qybe_form(R: Solution) -> Solution:
    """Compose with the flip: the quantum-form partner (x, y) -> swap(R(x, y))."""
    n = R.size
    table = [(v, u) for (u, v) in R.table]
    return Solution(n, tuple(table))
