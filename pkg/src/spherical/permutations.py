"""Permutations of {1, ..., n} in one-line notation.

Values and positions are 1-based in every public interface, matching the
usual one-line notation w = w_1 w_2 ... w_n.

Composition convention: ``u * w`` is the permutation mapping ``i`` to
``u(w(i))``, so the right-hand factor acts first.  Every product in this
package (parabolic quotients ``longest_parabolic(J) * w``, weak-order
quotients ``v.inverse() * w``) is written in this convention and reads
left to right as a formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1, ..., n}, stored as the tuple of its values.

    >>> w = Permutation((2, 5, 3, 1, 4))
    >>> w(1), w(4)
    (2, 1)
    >>> str(w)
    '25314'
    >>> w.length()
    5
    """

    oneline: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.oneline)
        if word is not self.oneline:
            object.__setattr__(self, "oneline", word)
        n = len(word)
        if n == 0:
            raise ValueError("degree must be at least 1")
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {word!r}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        """The identity permutation (1, 2, ..., n).

        >>> str(Permutation.identity(3))
        '123'
        """
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse either digit-string form ("25314") or comma form ("2,5,3,1,4").

        Degrees of 10 and above must use the comma form.
        """
        s = text.strip()
        if not s:
            raise ValueError("empty permutation text")
        if "," in s:
            try:
                values = tuple(int(tok) for tok in s.split(","))
            except ValueError:
                raise ValueError(f"bad permutation text: {text!r}") from None
        else:
            if not (s.isascii() and s.isdigit()):
                raise ValueError(f"bad permutation text: {text!r}")
            values = tuple(int(ch) for ch in s)
        return cls(values)

    def to_text(self) -> str:
        """Digit string for degree at most 9, comma-separated otherwise."""
        if self.degree <= 9:
            return "".join(str(v) for v in self.oneline)
        return ",".join(str(v) for v in self.oneline)

    def __str__(self) -> str:
        return self.to_text()

    @property
    def degree(self) -> int:
        return len(self.oneline)

    def __len__(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        """The value w(i), with i in 1..n."""
        if not 1 <= i <= self.degree:
            raise ValueError(f"position {i} outside 1..{self.degree}")
        return self.oneline[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition u * w: apply w first, then u (i maps to u(w(i))).

        >>> str(Permutation((2, 1, 3)) * Permutation((1, 3, 2)))
        '231'
        """
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError(
                f"degree mismatch: {self.degree} vs {other.degree}"
            )
        u = self.oneline
        return Permutation(tuple(u[j - 1] for j in other.oneline))

    def inverse(self) -> "Permutation":
        """The inverse permutation: position of each value.

        >>> str(Permutation((2, 3, 1)).inverse())
        '312'
        """
        inv = [0] * self.degree
        for pos, v in enumerate(self.oneline, start=1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions, which is the minimal word length in the
        adjacent transpositions."""
        word = self.oneline
        n = len(word)
        return sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if word[i] > word[j]
        )

    def left_descents(self) -> "GeneratorSet":
        """Generators s_i whose value i+1 appears before the value i.

        >>> sorted(Permutation((2, 3, 1)).left_descents())
        [1]
        """
        n = self.degree
        pos = [0] * (n + 1)
        for p, v in enumerate(self.oneline):
            pos[v] = p
        members = frozenset(i for i in range(1, n) if pos[i + 1] < pos[i])
        return GeneratorSet(n, members)

    def value_window(self, a: int, b: int) -> frozenset[int]:
        """The set of values {w_a, ..., w_b} for 1 <= a <= b <= n.

        >>> sorted(Permutation((3, 4, 1, 2)).value_window(1, 2))
        [3, 4]
        """
        if not 1 <= a <= b <= self.degree:
            raise ValueError(f"bad window [{a}, {b}] for degree {self.degree}")
        return frozenset(self.oneline[a - 1 : b])


@dataclass(frozen=True)
class GeneratorSet:
    """A subset of the adjacent-transposition generators s_1 .. s_{n-1}.

    The integer i stands for the generator s_i = (i i+1).
    """

    degree: int
    members: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        if members is not self.members:
            object.__setattr__(self, "members", members)
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        bad = [i for i in members if not 1 <= i <= self.degree - 1]
        if bad:
            raise ValueError(
                f"generator indices {sorted(bad)} outside 1..{self.degree - 1}"
            )

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __bool__(self) -> bool:
        return bool(self.members)

    def components(self) -> list["GeneratorSet"]:
        """Maximal runs of consecutive indices (the type-A diagram is a path).

        >>> [sorted(c) for c in GeneratorSet(6, frozenset({1, 2, 4})).components()]
        [[1, 2], [4]]
        """
        out: list[GeneratorSet] = []
        run: list[int] = []
        for i in sorted(self.members):
            if run and i != run[-1] + 1:
                out.append(GeneratorSet(self.degree, frozenset(run)))
                run = []
            run.append(i)
        if run:
            out.append(GeneratorSet(self.degree, frozenset(run)))
        return out


def longest_parabolic(gens: GeneratorSet) -> Permutation:
    """Longest element of the subgroup generated by ``gens``.

    In one-line form: split 1..n into maximal blocks of consecutive values
    linked by members of ``gens`` and reverse each block in place.

    >>> str(longest_parabolic(GeneratorSet(5, frozenset({1, 2, 4}))))
    '32154'
    >>> str(longest_parabolic(GeneratorSet(4)))
    '1234'
    """
    n = gens.degree
    out: list[int] = []
    start = 1
    for i in range(1, n + 1):
        if i == n or i not in gens:
            out.extend(range(i, start - 1, -1))
            start = i + 1
    return Permutation(tuple(out))


def dominates(lower: Iterable[int], upper: Iterable[int]) -> bool:
    """Componentwise order on equal-size value sets.

    True when, after sorting both ascending, every element of ``lower`` is
    at most the corresponding element of ``upper``.

    >>> dominates({1, 2}, {1, 3})
    True
    >>> dominates({2, 3}, {1, 3})
    False
    """
    a = sorted(lower)
    b = sorted(upper)
    if len(a) != len(b):
        raise ValueError(f"cardinality mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def relative_order(values: Sequence[int]) -> tuple[int, ...]:
    """Ranks 1..k of the values, in the order given (the pattern they form).

    >>> relative_order((5, 4, 2))
    (3, 2, 1)
    """
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(rank[v] for v in values)


class PatternOccurrence(NamedTuple):
    """Positions in a host permutation realizing a pattern."""

    positions: tuple[int, ...]
    pattern: Permutation


def _scan_occurrences(
    host: tuple[int, ...], pat: tuple[int, ...], first_only: bool
) -> list[tuple[int, ...]]:
    # DFS over increasing position tuples, pruning as soon as the chosen
    # values stop matching the pattern's relative order.
    n, k = len(host), len(pat)
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen)
        if j == k:
            found.append(tuple(i + 1 for i in chosen))
            return not first_only
        for i in range(start, n - (k - j) + 1):
            x = host[i]
            ok = True
            for t, pos in enumerate(chosen):
                if (x > host[pos]) != (pat[j] > pat[t]):
                    ok = False
                    break
            if ok:
                chosen.append(i)
                keep = extend(i + 1)
                chosen.pop()
                if not keep:
                    return False
        return True

    extend(0)
    return found


def pattern_occurrences(w: Permutation, p: Permutation) -> list[PatternOccurrence]:
    """Every increasing position tuple at which w realizes the pattern p.

    An empty list means w avoids p.

    >>> [occ.positions for occ in pattern_occurrences(Permutation((3, 5, 1, 4, 2)), Permutation((3, 2, 1)))]
    [(2, 4, 5)]
    """
    if p.degree > w.degree:
        raise ValueError(f"pattern degree {p.degree} exceeds host degree {w.degree}")
    return [
        PatternOccurrence(positions, p)
        for positions in _scan_occurrences(w.oneline, p.oneline, first_only=False)
    ]


def first_pattern_occurrence(w: Permutation, p: Permutation) -> PatternOccurrence | None:
    """The lexicographically first occurrence of p in w, or None."""
    if p.degree > w.degree:
        raise ValueError(f"pattern degree {p.degree} exceeds host degree {w.degree}")
    hits = _scan_occurrences(w.oneline, p.oneline, first_only=True)
    return PatternOccurrence(hits[0], p) if hits else None


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    """Short-circuit containment test; stops at the first occurrence."""
    return first_pattern_occurrence(w, p) is not None


def avoids_all(w: Permutation, patterns: Iterable[Permutation]) -> bool:
    """True when w has no occurrence of any listed pattern.

    Patterns longer than w cannot occur and are skipped.

    >>> avoids_all(Permutation((2, 1, 4, 3)), [Permutation((3, 2, 1)), Permutation((3, 4, 1, 2))])
    True
    """
    by_degree: dict[int, set[tuple[int, ...]]] = {}
    for p in patterns:
        if p.degree <= w.degree:
            by_degree.setdefault(p.degree, set()).add(p.oneline)
    for k, targets in by_degree.items():
        for picked in itertools.combinations(w.oneline, k):
            if relative_order(picked) in targets:
                return False
    return True


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All degree-n permutations, in lexicographic one-line order."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)
