"""Single-vertex k-graph engine.

A family of bijections theta_ij: [N_i] x [N_j] -> [N_j] x [N_i] (one per
colour pair i < j) presents a candidate unital semigroup through the
commutation relations e^i_s e^j_t = e^j_{t'} e^i_{s'}.  The family presents a
genuine k-graph exactly when the conjugated maps satisfy the generalized
quantum braid identity on every colour triple, which `validate_kgraph`
decides point by point.  Valid families get unique colour-sorted normal
forms, unique degree factorizations, and, under the fiber-uniqueness
properties, unique completions of commuting diamonds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .constructions import encode_word, level_map, level_solution
from .errors import (
    DegreeOutOfRange,
    DegreesOverlap,
    FamilyMismatch,
    InvalidLetter,
    InvalidParams,
    NotABijection,
    NotAYbeSolution,
    PreconditionFailed,
    PropertyMissing,
)
from .limits import check_count
from .solution import Solution, is_ybe


@dataclass(frozen=True, slots=True)
class ThetaFamily:
    """Sizes N_1..N_k and one commutation bijection per colour pair i < j.

    `maps[p]` is the table of theta_ij for the p-th pair in lexicographic
    order, row-major by (s, t): entry (s-1)*N_j + (t-1) holds (t', s').
    `inv_maps[p]` holds the inverse, row-major by (t', s').
    """

    k: int
    sizes: tuple[int, ...]
    maps: tuple[tuple[tuple[int, int], ...], ...]
    inv_maps: tuple[tuple[tuple[int, int], ...], ...]

    def pair_index(self, i: int, j: int) -> int:
        # pairs (1,2), (1,3), ..., (1,k), (2,3), ... in lexicographic order
        if not (1 <= i < j <= self.k):
            raise InvalidParams(f"colour pair ({i},{j}) needs 1 <= i < j <= {self.k}")
        before = (i - 1) * self.k - (i - 1) * i // 2
        return before + (j - i - 1)

    def apply(self, i: int, j: int, s: int, t: int) -> tuple[int, int]:
        """theta_ij(s, t) = (t', s')."""
        return self.maps[self.pair_index(i, j)][(s - 1) * self.sizes[j - 1] + (t - 1)]

    def apply_inv(self, i: int, j: int, t: int, s: int) -> tuple[int, int]:
        """theta_ij^{-1}(t, s) = (s', t')."""
        return self.inv_maps[self.pair_index(i, j)][(t - 1) * self.sizes[i - 1] + (s - 1)]


@dataclass(frozen=True, slots=True)
class KWord:
    """An element of the family's semigroup in colour-sorted normal form.

    `blocks[i-1]` is the tuple of colour-i letters; the degree is the tuple
    of block lengths.
    """

    family: ThetaFamily
    blocks: tuple[tuple[int, ...], ...]

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def letters(self) -> tuple[tuple[int, int], ...]:
        """Flattened (colour, letter) pairs of the normal form."""
        out = []
        for colour, block in enumerate(self.blocks, start=1):
            out.extend((colour, letter) for letter in block)
        return tuple(out)

    def is_empty(self) -> bool:
        return all(not block for block in self.blocks)

    def __str__(self) -> str:
        tokens = [f"e{c}_{s}" for c, s in self.letters()]
        return " ".join(tokens) if tokens else "1"


def make_theta_family(k: int, sizes, maps) -> ThetaFamily:
    """Validate tables and freeze a family.

    `maps` is keyed by colour pairs (i, j) with i < j; each table lists
    N_i*N_j output pairs (t', s') row-major by (s, t).  Tables that repeat an
    output raise NotABijection.
    """
    if not isinstance(k, int) or k < 2:
        raise InvalidParams(f"k must be an integer >= 2, got {k!r}")
    sizes = tuple(sizes)
    if len(sizes) != k or any(not isinstance(n, int) or n < 1 for n in sizes):
        raise InvalidParams(f"sizes must be {k} positive integers, got {sizes!r}")
    expected = list(combinations(range(1, k + 1), 2))
    if set(maps.keys()) != set(expected):
        raise InvalidParams(
            f"maps must be keyed by exactly the colour pairs {expected}, got {sorted(maps.keys())}"
        )
    tables = []
    inverses = []
    for i, j in expected:
        ni, nj = sizes[i - 1], sizes[j - 1]
        pairs = [tuple(entry) for entry in maps[(i, j)]]
        if len(pairs) != ni * nj:
            raise InvalidParams(
                f"theta_{i}{j} needs {ni * nj} entries, got {len(pairs)}"
            )
        inverse = [None] * (ni * nj)
        seen: dict = {}
        for idx, pair in enumerate(pairs):
            s, t = divmod(idx, nj)
            tp, sp = pair
            if not (1 <= tp <= nj and 1 <= sp <= ni):
                raise InvalidParams(
                    f"theta_{i}{j} entry for ({s + 1},{t + 1}) is {pair},"
                    f" outside [1..{nj}] x [1..{ni}]"
                )
            if pair in seen:
                raise NotABijection(
                    f"theta_{i}{j} output {pair} produced by both"
                    f" {seen[pair]} and {(s + 1, t + 1)}"
                )
            seen[pair] = (s + 1, t + 1)
            inverse[(tp - 1) * ni + (sp - 1)] = (s + 1, t + 1)
        tables.append(tuple(pairs))
        inverses.append(tuple(inverse))
    return ThetaFamily(k, sizes, tuple(tables), tuple(inverses))


def constant_family(R: Solution, k: int) -> ThetaFamily:
    """All colours share the size N and the table of R."""
    if not isinstance(k, int) or k < 2:
        raise InvalidParams(f"k must be an integer >= 2, got {k!r}")
    maps = {pair: R.table for pair in combinations(range(1, k + 1), 2)}
    return make_theta_family(k, (R.size,) * k, maps)


def _hat(family: ThetaFamily, i: int, j: int, s: int, t: int) -> tuple[int, int]:
    """The conjugated map on [N_i] x [N_j]: flip after theta_ij."""
    tp, sp = family.apply(i, j, s, t)
    return sp, tp


@lru_cache(maxsize=None)
def _validate(family: ThetaFamily):
    for i, j, kk in combinations(range(1, family.k + 1), 3):
        ni = range(1, family.sizes[i - 1] + 1)
        nj = range(1, family.sizes[j - 1] + 1)
        nk = range(1, family.sizes[kk - 1] + 1)
        for s, t, u in product(ni, nj, nk):
            a, b, c = s, t, u
            b, c = _hat(family, j, kk, b, c)
            a, c = _hat(family, i, kk, a, c)
            a, b = _hat(family, i, j, a, b)
            lhs = (a, b, c)
            a, b, c = s, t, u
            a, b = _hat(family, i, j, a, b)
            a, c = _hat(family, i, kk, a, c)
            b, c = _hat(family, j, kk, b, c)
            rhs = (a, b, c)
            if lhs != rhs:
                return False, (i, j, kk, (s, t, u))
    return True, None


def validate_kgraph(family: ThetaFamily):
    """Decide the generalized braid identity on every colour triple.

    Triple-wise validity is exactly k-graph validity; returns the
    lexicographically least failing triple and point on failure.
    """
    ok, witness = _validate(family)
    return ok, witness


def _swap_adjacent(family: ThetaFamily, left, right):
    """Rewrite the adjacent pair of letters, exchanging their colours."""
    cl, sl = left
    cr, sr = right
    if cl == cr:
        raise InvalidParams("letters of equal colour do not commute")
    if cl < cr:
        tp, sp = family.apply(cl, cr, sl, sr)
        return (cr, tp), (cl, sp)
    sp, tp = family.apply_inv(cr, cl, sl, sr)
    return (cr, sp), (cl, tp)


def _check_letters(family: ThetaFamily, word):
    letters = []
    for item in word:
        colour, letter = item
        if not (isinstance(colour, int) and 1 <= colour <= family.k):
            raise InvalidLetter(f"colour {colour!r} outside 1..{family.k}")
        if not (isinstance(letter, int) and 1 <= letter <= family.sizes[colour - 1]):
            raise InvalidLetter(
                f"letter {letter!r} outside 1..{family.sizes[colour - 1]} for colour {colour}"
            )
        letters.append((colour, letter))
    return letters


def _gate_three_colours(family: ThetaFamily, letters) -> None:
    # with two colours every swap is forced, so normal forms exist for any
    # bijections; three or more colours need the validated triple identity
    if len({c for c, _ in letters}) >= 3:
        ok, witness = _validate(family)
        if not ok:
            raise PreconditionFailed(
                f"family is not a valid k-graph (failing triple {witness});"
                " normal forms with three or more colours are ill-defined"
            )


def normalize(family: ThetaFamily, word) -> KWord:
    """Sort a word of (colour, letter) pairs into the canonical normal form.

    Repeatedly rewrites the leftmost colour-inverted adjacent pair; length and
    colour multiset are preserved.
    """
    letters = _check_letters(family, word)
    _gate_three_colours(family, letters)
    i = 0
    while i < len(letters) - 1:
        if letters[i][0] > letters[i + 1][0]:
            letters[i], letters[i + 1] = _swap_adjacent(family, letters[i], letters[i + 1])
            if i:
                i -= 1
        else:
            i += 1
    blocks = [[] for _ in range(family.k)]
    for colour, letter in letters:
        blocks[colour - 1].append(letter)
    return KWord(family, tuple(tuple(block) for block in blocks))


def empty_word(family: ThetaFamily) -> KWord:
    return KWord(family, ((),) * family.k)


def multiply(a: KWord, b: KWord) -> KWord:
    """Concatenate and renormalize."""
    if a.family != b.family:
        raise FamilyMismatch("words come from different families")
    return normalize(a.family, a.letters() + b.letters())


def degree(a: KWord) -> tuple[int, ...]:
    return a.degree


def _reshape(family: ThetaFamily, letters, target_colours):
    """The unique equivalent word whose colour sequence is `target_colours`.

    Pulls, for each target position, the leftmost letter of the wanted colour
    across the (necessarily different-coloured) letters before it.
    """
    letters = list(letters)
    for pos, colour in enumerate(target_colours):
        src = next(
            idx for idx in range(pos, len(letters)) if letters[idx][0] == colour
        )
        while src > pos:
            letters[src - 1], letters[src] = _swap_adjacent(
                family, letters[src - 1], letters[src]
            )
            src -= 1
    return letters


def factorize(a: KWord, m) -> tuple[KWord, KWord]:
    """The unique split a = head * tail with degree(head) = m."""
    family = a.family
    m = tuple(m)
    d = a.degree
    if len(m) != family.k or any(part < 0 for part in m):
        raise DegreeOutOfRange(f"degree vector {m} must have {family.k} non-negative parts")
    if any(part > have for part, have in zip(m, d)):
        raise DegreeOutOfRange(f"degree vector {m} exceeds the word degree {d}")
    _gate_three_colours(family, a.letters())
    target = []
    for colour in range(1, family.k + 1):
        target.extend([colour] * m[colour - 1])
    split_at = len(target)
    for colour in range(1, family.k + 1):
        target.extend([colour] * (d[colour - 1] - m[colour - 1]))
    reshaped = _reshape(family, a.letters(), target)
    head = normalize(family, reshaped[:split_at])
    tail = normalize(family, reshaped[split_at:])
    return head, tail


def unique_pullback(family: ThetaFamily):
    """For every colour pair and pair (s, t): exactly one t' with theta_ij(s, t') = (t, _).

    Covers both colour orders: the inverted-order instances reduce to the same
    fibers of the stored sorted-pair tables.
    """
    for i, j in combinations(range(1, family.k + 1), 2):
        ni, nj = family.sizes[i - 1], family.sizes[j - 1]
        for s in range(1, ni + 1):
            hits = [0] * nj
            for tp in range(1, nj + 1):
                first = family.apply(i, j, s, tp)[0]
                hits[first - 1] += 1
            for t in range(1, nj + 1):
                if hits[t - 1] != 1:
                    return False, (i, j, s, t)
    return True, None


def unique_pushout(family: ThetaFamily):
    """Dual fiber condition: exactly one s with theta_ij(s, t') = (_, s')."""
    for i, j in combinations(range(1, family.k + 1), 2):
        ni, nj = family.sizes[i - 1], family.sizes[j - 1]
        for tp in range(1, nj + 1):
            hits = [0] * ni
            for s in range(1, ni + 1):
                second = family.apply(i, j, s, tp)[1]
                hits[second - 1] += 1
            for sp in range(1, ni + 1):
                if hits[sp - 1] != 1:
                    return False, (i, j, sp, tp)
    return True, None


def _single_letter(family: ThetaFamily, colour: int, letter: int) -> KWord:
    blocks = [()] * family.k
    blocks[colour - 1] = (letter,)
    return KWord(family, tuple(blocks))


def _pullback_edge(family: ThetaFamily, mu_letter, nu_letter):
    """Solve e^i_s e^j_{t'} = e^j_t e^i_{s'} for the unique (t', s')."""
    ci, s = mu_letter
    cj, t = nu_letter
    if ci < cj:
        for tp in range(1, family.sizes[cj - 1] + 1):
            t0, sp = family.apply(ci, cj, s, tp)
            if t0 == t:
                return (cj, tp), (ci, sp)
    else:
        for sp in range(1, family.sizes[ci - 1] + 1):
            s0, tp = family.apply(cj, ci, t, sp)
            if s0 == s:
                return (cj, tp), (ci, sp)
    raise PropertyMissing(
        f"no pullback completion for e{ci}_{s} against e{cj}_{t}"
    )


def _pushout_edge(family: ThetaFamily, mu_letter, nu_letter):
    """Solve e^i_s e^j_{t'} = e^j_t e^i_{s'} for the unique (t, s), given (s', t')."""
    ci, sp = mu_letter
    cj, tp = nu_letter
    if ci < cj:
        for s in range(1, family.sizes[ci - 1] + 1):
            t, sp0 = family.apply(ci, cj, s, tp)
            if sp0 == sp:
                return (cj, t), (ci, s)
    else:
        for t in range(1, family.sizes[cj - 1] + 1):
            s, tp0 = family.apply(cj, ci, t, sp)
            if tp0 == tp:
                return (cj, t), (ci, s)
    raise PropertyMissing(
        f"no pushout completion for e{ci}_{sp} against e{cj}_{tp}"
    )


def _first_letter_split(word: KWord) -> tuple[KWord, KWord]:
    """Split off the first letter of the normal form."""
    letters = word.letters()
    head = _single_letter(word.family, *letters[0])
    blocks = [list(block) for block in word.blocks]
    blocks[letters[0][0] - 1] = blocks[letters[0][0] - 1][1:]
    tail = KWord(word.family, tuple(tuple(block) for block in blocks))
    return head, tail


def _complete(family: ThetaFamily, mu: KWord, nu: KWord, edge_solver) -> tuple[KWord, KWord]:
    """Inductive peeling of the diamond: one letter of nu at a time."""
    if nu.is_empty():
        return mu, nu
    if mu.is_empty():
        return mu, nu
    if sum(mu.degree) == 1 and sum(nu.degree) == 1:
        new_nu_letter, new_mu_letter = edge_solver(
            family, mu.letters()[0], nu.letters()[0]
        )
        return (
            _single_letter(family, *new_mu_letter),
            _single_letter(family, *new_nu_letter),
        )
    if sum(nu.degree) >= 2:
        nu_head, nu_tail = _first_letter_split(nu)
        if edge_solver is _pullback_edge:
            mu_mid, nu_head_new = _complete(family, mu, nu_head, edge_solver)
            mu_new, nu_tail_new = _complete(family, mu_mid, nu_tail, edge_solver)
        else:
            mu_mid, nu_tail_new = _complete(family, mu, nu_tail, edge_solver)
            mu_new, nu_head_new = _complete(family, mu_mid, nu_head, edge_solver)
        return mu_new, multiply(nu_head_new, nu_tail_new)
    # |d(nu)| == 1 and |d(mu)| >= 2: the defining equation is symmetric
    nu_new, mu_new = _complete(family, nu, mu, edge_solver)
    return mu_new, nu_new


def complete_diamond(
    family: ThetaFamily, mu: KWord, nu: KWord, direction: str
) -> tuple[KWord, KWord]:
    """Complete the factorization diamond spanned by mu and nu.

    pullback: the unique (mu~, nu~) with mu * nu~ = nu * mu~;
    pushout: the unique (mu~, nu~) with mu~ * nu = nu~ * mu.
    Degrees are preserved sidewise.  Needs degree-disjoint words and the
    matching uniqueness property of the family.
    """
    if mu.family != family or nu.family != family:
        raise FamilyMismatch("words do not belong to the given family")
    if any(a and b for a, b in zip(mu.degree, nu.degree)):
        raise DegreesOverlap(
            f"degrees {mu.degree} and {nu.degree} share a colour"
        )
    if direction == "pullback":
        ok, witness = unique_pullback(family)
        if not ok:
            raise PropertyMissing(f"family lacks the unique pullback property at {witness}")
        return _complete(family, mu, nu, _pullback_edge)
    if direction == "pushout":
        ok, witness = unique_pushout(family)
        if not ok:
            raise PropertyMissing(f"family lacks the unique pushout property at {witness}")
        return _complete(family, mu, nu, _pushout_edge)
    raise InvalidParams(f"direction must be 'pullback' or 'pushout', got {direction!r}")


@dataclass(frozen=True, slots=True)
class Periodicity:
    """Either Periodic(order) or AperiodicUpTo(bound)."""

    periodic: bool
    order: int | None
    bound: int

    def __str__(self) -> str:
        if self.periodic:
            return f"Periodic({self.order})"
        return f"AperiodicUpTo({self.bound})"


def periodicity(R: Solution, bound: int = 6) -> Periodicity:
    """Least n <= bound with the level-n solution equal to the identity, if any.

    Non-degenerate solutions never find one; the identity finds n = 1.
    """
    if not is_ybe(R):
        raise NotAYbeSolution("periodicity is defined for braid-relation solutions")
    if bound < 1:
        raise InvalidParams(f"bound must be positive, got {bound}")
    n = R.size
    for level in range(1, bound + 1):
        candidate = level_solution(R, level)
        size = n ** level
        if all(
            candidate.table[(x - 1) * size + (y - 1)] == (x, y)
            for x in range(1, size + 1)
            for y in range(1, size + 1)
        ):
            return Periodicity(True, level, bound)
    return Periodicity(False, None, bound)


def _is_constant(family: ThetaFamily) -> bool:
    if len(set(family.sizes)) != 1:
        return False
    return len(set(family.maps)) == 1


def restrict(family: ThetaFamily, l: int, m: int, n: int) -> ThetaFamily:
    """Three-colour family of level maps of a constant family.

    Sizes become (N**l, N**m, N**n) with the level maps as commutation
    bijections; validity is preserved in both directions.
    """
    if not _is_constant(family):
        raise InvalidParams("restrict needs a constant family")
    if min(l, m, n) < 1:
        raise InvalidParams("level exponents must be positive")
    size = family.sizes[0]
    base = Solution(size, family.maps[0])
    check_count(size ** max(l + m, l + n, m + n), "restricted level tables")
    lengths = {(1, 2): (l, m), (1, 3): (l, n), (2, 3): (m, n)}
    maps = {}
    for pair, (a, b) in lengths.items():
        lm = level_map(base, a, b)
        table = [
            (encode_word(vp, size), encode_word(up, size)) for (vp, up) in lm.table
        ]
        maps[pair] = table
    return make_theta_family(3, (size ** l, size ** m, size ** n), maps)
