"""New solutions from old ones.

Cartesian products, the two regular extensions, derived solutions, the
higher-level maps on blocks of letters, and the disjoint-union solution
attached to a commutation family.  Words in [N]^n are encoded big-endian:
(a_1, ..., a_n) -> 1 + sum (a_i - 1) * N**(n-i), so encoded order equals
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import Degenerate, InvalidParams, NotABijection, NotAYbeSolution, OutOfRange
from .limits import check_count
from .solution import Solution, alpha_beta, apply_leg, is_ybe, make_solution


def encode_word(word, n: int) -> int:
    """Big-endian 1-based integer code of a word over [n]."""
    code = 0
    for letter in word:
        code = code * n + (letter - 1)
    return code + 1


def decode_word(code: int, n: int, length: int) -> tuple[int, ...]:
    """Inverse of encode_word for words of the given length."""
    code -= 1
    letters = []
    for _ in range(length):
        code, digit = divmod(code, n)
        letters.append(digit + 1)
    return tuple(reversed(letters))


def cartesian_product(rx: Solution, ry: Solution) -> Solution:
    """Componentwise solution on pairs, encoded as (x-1)*|Y| + y."""
    if not is_ybe(rx):
        raise NotAYbeSolution("left factor does not satisfy the braid relation")
    if not is_ybe(ry):
        raise NotAYbeSolution("right factor does not satisfy the braid relation")
    nx, ny = rx.size, ry.size
    size = nx * ny

    def enc(x: int, y: int) -> int:
        return (x - 1) * ny + y

    # loop order (x1, y1, x2, y2) visits encoded pairs row-major
    table = []
    for x1 in range(1, nx + 1):
        for y1 in range(1, ny + 1):
            for x2 in range(1, nx + 1):
                for y2 in range(1, ny + 1):
                    ux, vx = rx(x1, x2)
                    uy, vy = ry(y1, y2)
                    table.append((enc(ux, uy), enc(vx, vy)))
    return make_solution(size, table)


def trivial_extension(rx: Solution, ry: Solution) -> Solution:
    """Disjoint union with flip cross blocks; X keeps 1..|X|, Y is offset by |X|."""
    if not is_ybe(rx):
        raise NotAYbeSolution("left summand does not satisfy the braid relation")
    if not is_ybe(ry):
        raise NotAYbeSolution("right summand does not satisfy the braid relation")
    nx, ny = rx.size, ry.size
    size = nx + ny
    table = []
    for x in range(1, size + 1):
        for y in range(1, size + 1):
            if x <= nx and y <= nx:
                table.append(rx(x, y))
            elif x > nx and y > nx:
                u, v = ry(x - nx, y - nx)
                table.append((u + nx, v + nx))
            else:
                table.append((y, x))
    return make_solution(size, table)


def glued_identity_extension(size_x: int, size_y: int, theta) -> Solution:
    """Identity on each block, a chosen bijection across blocks.

    `theta` lists size_x*size_y output pairs (t', s') in [size_y] x [size_x],
    row-major by (s, t); it is applied on X x Y and its inverse on Y x X.
    """
    pairs = [tuple(entry) for entry in theta]
    glue = make_solution_like_bijection(size_x, size_y, pairs)
    glue_inv = {}
    for idx, (tp, sp) in enumerate(pairs):
        s, t = divmod(idx, size_y)
        glue_inv[(tp, sp)] = (s + 1, t + 1)
    size = size_x + size_y
    table = []
    for x in range(1, size + 1):
        for y in range(1, size + 1):
            if (x <= size_x) == (y <= size_x):
                table.append((x, y))
            elif x <= size_x:
                tp, sp = glue[(x, y - size_x)]
                table.append((size_x + tp, sp))
            else:
                s, t = glue_inv[(x - size_x, y)]
                table.append((s, size_x + t))
    return make_solution(size, table)


def make_solution_like_bijection(size_a: int, size_b: int, pairs) -> dict:
    """Validate a table for a bijection [A] x [B] -> [B] x [A]; return the lookup."""
    if len(pairs) != size_a * size_b:
        raise InvalidParams(
            f"bijection table needs {size_a * size_b} entries, got {len(pairs)}"
        )
    lookup: dict = {}
    seen: dict = {}
    for idx, pair in enumerate(pairs):
        s, t = divmod(idx, size_b)
        if len(pair) != 2:
            raise InvalidParams(f"entry {idx} is not a pair: {pair!r}")
        tp, sp = pair
        if not (1 <= tp <= size_b and 1 <= sp <= size_a):
            raise OutOfRange(
                f"entry for ({s + 1},{t + 1}) is {pair}, outside [1..{size_b}] x [1..{size_a}]"
            )
        if pair in seen:
            raise NotABijection(
                f"output pair {pair} produced by both {seen[pair]} and {(s + 1, t + 1)}"
            )
        seen[pair] = (s + 1, t + 1)
        lookup[(s + 1, t + 1)] = (tp, sp)
    return lookup


def derived_solution(R: Solution) -> Solution:
    """The derived solution: (x, y) -> (beta_x(alpha_{beta_y^{-1}(x)}(y)), x)."""
    _require_nondegenerate_ybe(R)
    n = R.size
    ab = alpha_beta(R)
    beta_inv = tuple(_invert_row(row) for row in ab.beta)
    table = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            w = beta_inv[y - 1][x - 1]
            table.append((ab.beta[x - 1][ab.alpha[w - 1][y - 1] - 1], x))
    return make_solution(n, table)


def left_derived_solution(R: Solution) -> Solution:
    """The mirror-shape variant: (x, y) -> (y, alpha_y(beta_{alpha_x^{-1}(y)}(x)))."""
    _require_nondegenerate_ybe(R)
    n = R.size
    ab = alpha_beta(R)
    alpha_inv = tuple(_invert_row(row) for row in ab.alpha)
    table = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            w = alpha_inv[x - 1][y - 1]
            table.append((y, ab.alpha[y - 1][ab.beta[w - 1][x - 1] - 1]))
    return make_solution(n, table)


def _require_nondegenerate_ybe(R: Solution) -> None:
    if not is_ybe(R):
        raise NotAYbeSolution("the input does not satisfy the braid relation")
    ab = alpha_beta(R)
    n = R.size
    full = set(range(1, n + 1))
    for x in range(1, n + 1):
        if set(ab.alpha[x - 1]) != full:
            raise Degenerate(f"alpha_{x} is not invertible")
    for y in range(1, n + 1):
        if set(ab.beta[y - 1]) != full:
            raise Degenerate(f"beta_{y} is not invertible")


def _invert_row(row: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(row)
    for pos, value in enumerate(row, start=1):
        inv[value - 1] = pos
    return tuple(inv)


@dataclass(frozen=True, slots=True)
class LevelMap:
    """The bijection [N]^l x [N]^m -> [N]^m x [N]^l induced by pushing blocks.

    `table[(enc(u)-1) * N**m + (enc(v)-1)]` holds the output pair of words
    (v', u').
    """

    size: int
    left_length: int
    right_length: int
    table: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def apply(self, u, v) -> tuple[tuple[int, ...], tuple[int, ...]]:
        n = self.size
        idx = (encode_word(u, n) - 1) * n ** self.right_length + encode_word(v, n) - 1
        return self.table[idx]


def _push_letter(R: Solution, block: tuple[int, ...], letter: int):
    """Move one second-colour letter leftward through a first-colour block.

    Each adjacent swap rewrites (s, t) to R(s, t) = (t', s'); the moving
    letter crosses the whole block, transforming it in place.
    """
    moved = letter
    new_block = []
    for s in reversed(block):
        moved, s2 = R(s, moved)
        new_block.append(s2)
    return moved, tuple(reversed(new_block))


def level_map(R: Solution, l: int, m: int) -> LevelMap:
    """Push an m-block past an l-block by repeated adjacent swaps.

    Works for any bijection: with two colours every applicable swap is forced,
    so the rewriting order cannot matter.
    """
    if l < 1 or m < 1:
        raise InvalidParams("block lengths must be positive")
    n = R.size
    check_count(n ** (l + m), f"level map table on [{n}]^{l} x [{n}]^{m}")
    rng = range(1, n + 1)
    table = []
    for u in product(rng, repeat=l):
        for v in product(rng, repeat=m):
            block = u
            out = []
            for letter in v:
                moved, block = _push_letter(R, block, letter)
                out.append(moved)
            table.append((tuple(out), block))
    return LevelMap(n, l, m, tuple(table))


def level_map_via_legs(R: Solution, n_level: int) -> LevelMap:
    """Square-level map computed as the explicit product of adjacent legs.

    Independent of the rewriting engine; used as a cross-check oracle.
    """
    n = R.size
    check_count(n ** (2 * n_level), f"leg-composition table on [{n}]^{2 * n_level}")
    rng = range(1, n + 1)
    table = []
    for u in product(rng, repeat=n_level):
        for v in product(rng, repeat=n_level):
            t = u + v
            for i in range(n_level, 0, -1):
                for p in range(i, i + n_level):
                    t = apply_leg(R, p, t)
            table.append((t[:n_level], t[n_level:]))
    return LevelMap(n, n_level, n_level, tuple(table))


def level_solution(R: Solution, n_level: int) -> Solution:
    """The level solution on [N**n], words encoded big-endian."""
    n = R.size
    check_count(n ** n_level, f"level-{n_level} ground set on [{n}]")
    lm = level_map(R, n_level, n_level)
    size = n ** n_level
    table = [
        (encode_word(vp, n), encode_word(up, n)) for (vp, up) in lm.table
    ]
    return make_solution(size, table)


def disjoint_union_solution(family) -> Solution:
    """The block solution of a commutation family on the disjoint union.

    Identity on each diagonal block, theta_ij above the diagonal and its
    inverse below.  Satisfies the braid relation exactly when the family is a
    valid k-graph; it is always involutive and square-free.
    """
    sizes = family.sizes
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    size = offsets[-1]
    colour = []
    for i, block_size in enumerate(sizes, start=1):
        colour.extend([i] * block_size)

    table = []
    for x in range(1, size + 1):
        bx = colour[x - 1]
        s = x - offsets[bx - 1]
        for y in range(1, size + 1):
            by = colour[y - 1]
            t = y - offsets[by - 1]
            if bx == by:
                table.append((x, y))
            elif bx < by:
                tp, sp = family.apply(bx, by, s, t)
                table.append((offsets[by - 1] + tp, offsets[bx - 1] + sp))
            else:
                sp, tp = family.apply_inv(by, bx, s, t)
                table.append((offsets[by - 1] + sp, offsets[bx - 1] + tp))
    return make_solution(size, table)
