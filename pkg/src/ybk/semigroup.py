"""The structure semigroup of a solution, length by length.

Words over [N] of a fixed length are identified by the congruence generated
by rewriting adjacent pairs through R; classes are computed by union-find
over all single-position rewrites.  On top of that sit growth counts,
cancellativity checks, the presentation text of the structure semigroup and
group, and the two graded compatibility checks: the braided extension of R
to graded pieces and the closed action formulas for square level maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .constructions import decode_word, encode_word, level_map
from .errors import NotAYbeSolution, PreconditionFailed
from .limits import check_count
from .solution import Solution, alpha_beta, is_ybe


@dataclass(frozen=True)
class GradedClassSet:
    """Partition of all length-n words over [N] into congruence classes.

    `classes` are tuples of words (each word a tuple of letters), members
    lexicographically sorted, classes sorted by their least member; `reps`
    repeats those least members.
    """

    size: int
    length: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    reps: tuple[tuple[int, ...], ...]
    _index: dict = field(compare=False, repr=False)

    def index_of(self, word) -> int:
        return self._index[tuple(word)]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def graded_elements(R: Solution, n: int) -> GradedClassSet:
    """Classes of length-n words under single-position rewrites.

    Every rewrite preserves length, so lengths never mix; applying R at every
    position of every word covers both rewrite directions because R is a
    bijection.
    """
    size = R.size
    if n == 0:
        empty = ((),)
        return GradedClassSet(size, 0, (empty,), ((),), {(): 0})
    total = size ** n
    check_count(total, f"length-{n} words over [{size}]")
    uf = _UnionFind(total)
    for code in range(total):
        word = decode_word(code + 1, size, n)
        for pos in range(n - 1):
            u, v = R(word[pos], word[pos + 1])
            if (u, v) != (word[pos], word[pos + 1]):
                other = word[:pos] + (u, v) + word[pos + 2 :]
                uf.union(code, encode_word(other, size) - 1)
    groups: dict[int, list[int]] = {}
    for code in range(total):
        groups.setdefault(uf.find(code), []).append(code)
    # encoded order is lexicographic order, so the root is the least member
    classes = []
    for root in sorted(groups):
        members = tuple(decode_word(code + 1, size, n) for code in groups[root])
        classes.append(members)
    reps = tuple(members[0] for members in classes)
    index = {
        word: class_idx
        for class_idx, members in enumerate(classes)
        for word in members
    }
    return GradedClassSet(size, n, tuple(classes), reps, index)


def growth(R: Solution, maxlen: int) -> tuple[int, ...]:
    """Class counts by length, starting with the empty word: growth[0] = 1."""
    return tuple(
        len(graded_elements(R, n).classes) if n else 1 for n in range(maxlen + 1)
    )


def check_cancellative(R: Solution, maxlen: int):
    """Left and right cancellation on classes up to total length maxlen.

    The class product [a][b] is the class of concatenated representatives,
    well defined because the congruence is stable under concatenation.
    Returns (True, None) or (False, witness) with the least witness
    (side, rep_a, rep_b, rep_c).
    """
    graded = {n: graded_elements(R, n) for n in range(1, maxlen + 1)}
    for la in range(1, maxlen):
        for lb in range(1, maxlen - la + 1):
            whole = graded[la + lb]
            left_classes = graded[la].reps
            right_classes = graded[lb].reps
            for rep_a in left_classes:
                seen: dict[int, tuple[int, ...]] = {}
                for rep_b in right_classes:
                    key = whole.index_of(rep_a + rep_b)
                    if key in seen:
                        return False, ("left", rep_a, seen[key], rep_b)
                    seen[key] = rep_b
            for rep_b in right_classes:
                seen = {}
                for rep_a in left_classes:
                    key = whole.index_of(rep_a + rep_b)
                    if key in seen:
                        return False, ("right", rep_b, seen[key], rep_a)
                    seen[key] = rep_a
    return True, None


@dataclass(frozen=True)
class Presentation:
    """Generators and deduplicated relation chains of the structure semigroup/group."""

    generators: tuple[str, ...]
    chains: tuple[tuple[tuple[int, ...], ...], ...]

    def _relations_text(self) -> str:
        rendered = []
        for chain in self.chains:
            rendered.append(" = ".join(" ".join(f"e{x}" for x in word) for word in chain))
        return ", ".join(rendered)

    @property
    def semigroup_text(self) -> str:
        return f"G+ = < {', '.join(self.generators)} | {self._relations_text()} >"

    @property
    def group_text(self) -> str:
        return f"G  = < {', '.join(self.generators)} | {self._relations_text()} > (as a group)"


def presentations(R: Solution) -> Presentation:
    """Defining relations, one chain per nontrivial orbit of R on pairs.

    The relation set x y = y' x' generates, at length two, exactly the orbits
    of R acting on [N]^2; chaining each orbit deduplicates restatements of the
    same relation.  Purely syntactic: no completion is attempted.
    """
    generators = tuple(f"e{x}" for x in range(1, R.size + 1))
    chains = [
        members for members in graded_elements(R, 2).classes if len(members) > 1
    ]
    return Presentation(generators, tuple(chains))


def _ext_apply(lm_cache: dict, R: Solution, u: tuple, v: tuple):
    """The braided extension on a pair of words; empty words swap through."""
    if not u or not v:
        return v, u
    key = (len(u), len(v))
    if key not in lm_cache:
        lm_cache[key] = level_map(R, *key)
    return lm_cache[key].apply(u, v)


def semigroup_extension_check(R: Solution, maxlen: int):
    """Does R extend to a braided map on the graded semigroup?

    Checks the unit rules, that the block map respects the congruence in both
    arguments, and the braid relation on all graded triples of total length
    at most maxlen.  Returns (True, None) or (False, witness).
    """
    if not is_ybe(R):
        raise NotAYbeSolution("the extension is defined for braid-relation solutions")
    size = R.size
    lm_cache: dict = {}
    graded = {n: graded_elements(R, n) for n in range(1, maxlen + 1)}

    for n in range(1, maxlen + 1):
        for word in product(range(1, size + 1), repeat=n):
            if _ext_apply(lm_cache, R, word, ()) != ((), word):
                return False, ("unit-right", word)
            if _ext_apply(lm_cache, R, (), word) != (word, ()):
                return False, ("unit-left", word)

    for p in range(1, maxlen):
        for q in range(1, maxlen - p + 1):
            index_p = graded[p]
            index_q = graded[q]
            for members in index_p.classes:
                if len(members) == 1:
                    continue
                base = members[0]
                for v in product(range(1, size + 1), repeat=q):
                    vp0, up0 = _ext_apply(lm_cache, R, base, v)
                    ref = (index_q.index_of(vp0), index_p.index_of(up0))
                    for u in members[1:]:
                        vp, up = _ext_apply(lm_cache, R, u, v)
                        if (index_q.index_of(vp), index_p.index_of(up)) != ref:
                            return False, ("respects-left", base, u, v)
            for members in index_q.classes:
                if len(members) == 1:
                    continue
                base = members[0]
                for u in product(range(1, size + 1), repeat=p):
                    vp0, up0 = _ext_apply(lm_cache, R, u, base)
                    ref = (index_q.index_of(vp0), index_p.index_of(up0))
                    for v in members[1:]:
                        vp, up = _ext_apply(lm_cache, R, u, v)
                        if (index_q.index_of(vp), index_p.index_of(up)) != ref:
                            return False, ("respects-right", u, base, v)

    for l in range(1, maxlen - 1):
        for m in range(1, maxlen - l):
            for n in range(1, maxlen - l - m + 1):
                rng = range(1, size + 1)
                for u in product(rng, repeat=l):
                    for v in product(rng, repeat=m):
                        for w in product(rng, repeat=n):
                            # left side: swap (u,v), then the two right slots, then again
                            v1, u1 = _ext_apply(lm_cache, R, u, v)
                            w1, u2 = _ext_apply(lm_cache, R, u1, w)
                            w2, v2 = _ext_apply(lm_cache, R, v1, w1)
                            lhs = (w2, v2, u2)
                            wa, va = _ext_apply(lm_cache, R, v, w)
                            wb, ub = _ext_apply(lm_cache, R, u, wa)
                            vb, uc = _ext_apply(lm_cache, R, ub, va)
                            rhs = (wb, vb, uc)
                            if lhs != rhs:
                                return False, ("braid", u, v, w)
    return True, None


def _alpha_word(alpha, word, letter: int) -> int:
    """Left action of a word: alpha_{x_1...x_n} = alpha_{x_1} o ... o alpha_{x_n}."""
    for x in reversed(word):
        letter = alpha[x - 1][letter - 1]
    return letter


def _beta_letter_on_word(alpha, beta, word: tuple, letter: int) -> tuple:
    """Right action of one letter on a word, by the closed product formula."""
    n = len(word)
    out = []
    for i in range(2, n + 1):
        moved = _alpha_word(alpha, word[i - 1 :], letter)
        out.append(beta[moved - 1][word[i - 2] - 1])
    out.append(beta[letter - 1][word[-1] - 1])
    return tuple(out)


def action_formula_check(R: Solution, n: int) -> bool:
    """Compare the rewriting engine against the closed action formulas.

    The first output block of the square level map must be the sequence
    h_i = alpha_{beta_{y_1...y_{i-1}}(xbar)}(y_i) and the second block the
    iterated right action beta_{y_1...y_n}(xbar).
    """
    if not is_ybe(R):
        raise PreconditionFailed("the action formulas presuppose the braid relation")
    size = R.size
    check_count(size ** (2 * n), "action formula comparison")
    ab = alpha_beta(R)
    alpha, beta = ab.alpha, ab.beta
    lm = level_map(R, n, n)
    rng = range(1, size + 1)
    for xbar in product(rng, repeat=n):
        for ybar in product(rng, repeat=n):
            hs = []
            current = xbar
            for y in ybar:
                hs.append(_alpha_word(alpha, current, y))
                current = _beta_letter_on_word(alpha, beta, current, y)
            if lm.apply(xbar, ybar) != (tuple(hs), current):
                return False
    return True
