"""The monoid of zero-sum sequences over a subset of a finite abelian group.

A sequence is a finite multiset over a set G0 of group elements; it is
zero-sum when its entries add to the group identity.  Zero-sum sequences form
a monoid under concatenation whose atoms are the minimal zero-sum sequences,
and the factorization combinatorics of that monoid (length sets in
particular) model factorization in rings with the matching class group.

Everything here is exhaustive search at desk scale, guarded by caps:
sequences up to length 24, groups up to order 64 by default.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abelian import (
    CapExceeded,
    FinAbGroup,
    GroupElement,
    enumerate_elements,
    format_element,
)

DEFAULT_SEQ_CAP = 24
DEFAULT_GROUP_CAP = 64

_davenport_cache: dict[tuple, int] = {}
_atoms_cache: dict[tuple, tuple] = {}


class ZSeq:
    """A finite multiset over elements of one group (a "sequence").

    Stored as a multiplicity map; the canonical form sorts the support
    lexicographically by coordinates.  Immutable and hashable.
    """

    __slots__ = ("group", "counts", "_key")

    def __init__(self, group: FinAbGroup, counts: dict):
        # counts maps coordinate tuples to multiplicities >= 1
        self.group = group
        self.counts = {c: m for c, m in sorted(counts.items()) if m > 0}
        if any(m < 0 for m in counts.values()):
            raise ValueError("negative multiplicity")
        self._key = (group.moduli, tuple(self.counts.items()))

    @classmethod
    def from_elements(cls, group: FinAbGroup, elements) -> "ZSeq":
        counts: dict = {}
        for e in elements:
            if e.group != group:
                raise ValueError("elements belong to different groups")
            counts[e.coords] = counts.get(e.coords, 0) + 1
        return cls(group, counts)

    @classmethod
    def empty(cls, group: FinAbGroup) -> "ZSeq":
        return cls(group, {})

    @property
    def length(self) -> int:
        return sum(self.counts.values())

    def is_empty(self) -> bool:
        return not self.counts

    def support(self) -> list[GroupElement]:
        return [GroupElement(self.group, c) for c in self.counts]

    def multiplicity(self, e: GroupElement) -> int:
        return self.counts.get(e.coords, 0)

    def elements(self) -> list[GroupElement]:
        """The entries with multiplicity, in non-decreasing order."""
        out = []
        for c, m in self.counts.items():
            out.extend([GroupElement(self.group, c)] * m)
        return out

    def expanded(self) -> tuple:
        """Coordinate tuples with multiplicity; the canonical sort key."""
        out = []
        for c, m in self.counts.items():
            out.extend([c] * m)
        return tuple(out)

    def contains(self, other: "ZSeq") -> bool:
        """Sub-multiset test."""
        return all(self.counts.get(c, 0) >= m for c, m in other.counts.items())

    def minus(self, other: "ZSeq") -> "ZSeq":
        if not self.contains(other):
            raise ValueError("not a sub-multiset")
        counts = dict(self.counts)
        for c, m in other.counts.items():
            counts[c] -= m
        return ZSeq(self.group, counts)

    def __eq__(self, other):
        if not isinstance(other, ZSeq):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        if self.group != other.group:
            raise ValueError("sequences over different groups")
        return self.expanded() < other.expanded()

    def __repr__(self):
        return f"ZSeq({format_seq(self)!r})"


@dataclass(frozen=True)
class ZFactorization:
    """A multiset of atoms whose concatenation is the factored sequence."""

    parts: tuple

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def seq_sum(S: ZSeq) -> GroupElement:
    """Sum of all entries of S (with multiplicity) in the parent group."""
    moduli = S.group.moduli
    total = [0] * len(moduli)
    for c, m in S.counts.items():
        for i, x in enumerate(c):
            total[i] += x * m
    return GroupElement(S.group, tuple(t % n for t, n in zip(total, moduli)))


def concat(S: ZSeq, T: ZSeq) -> ZSeq:
    """Concatenation: multiplicities add.  The monoid product."""
    if S.group != T.group:
        raise ValueError("sequences over different groups")
    counts = dict(S.counts)
    for c, m in T.counts.items():
        counts[c] = counts.get(c, 0) + m
    return ZSeq(S.group, counts)


def is_zero_sum(S: ZSeq) -> bool:
    return seq_sum(S).is_zero()


def is_minimal_zero_sum(S: ZSeq) -> bool:
    """True iff S is non-empty, zero-sum, and has no non-empty proper
    zero-sum sub-multiset.

    Counts the sub-multisets summing to zero by dynamic programming over the
    support; minimality means exactly two (the empty and the full one).
    """
    if S.is_empty() or not is_zero_sum(S):
        return False
    moduli = S.group.moduli
    zero = (0,) * len(moduli)
    reach = {zero: 1}
    for c, m in S.counts.items():
        nxt: dict = {}
        for s, cnt in reach.items():
            t = s
            for mult in range(m + 1):
                nxt[t] = nxt.get(t, 0) + cnt
                t = tuple((a + b) % n for a, b, n in zip(t, c, moduli))
        reach = nxt
    return reach.get(zero, 0) == 2


def _vec_add(a, b, moduli):
    return tuple((x + y) % n for x, y, n in zip(a, b, moduli))


def _minimal_sequences(group: FinAbGroup, coords: list[tuple], max_len: int) -> list[ZSeq]:
    """All minimal zero-sum multisets over the given coordinate tuples,
    of length <= max_len.

    Depth-first search over non-decreasing element sequences.  Along a branch
    no non-empty sub-multiset may sum to zero; under that invariant a branch
    whose running total hits zero is automatically a minimal zero-sum
    sequence, and nothing beyond it can be.
    """
    moduli = group.moduli
    zero = (0,) * len(moduli)
    out: list[ZSeq] = []

    def extend(start: int, chosen: list, total: tuple, sums: frozenset):
        for i in range(start, len(coords)):
            g = coords[i]
            new_total = _vec_add(total, g, moduli)
            if new_total == zero:
                out.append(ZSeq.from_elements(
                    group, [GroupElement(group, c) for c in chosen + [g]]))
                continue
            if len(chosen) + 1 >= max_len:
                continue
            new_sums = sums | {g} | {_vec_add(s, g, moduli) for s in sums}
            if zero in new_sums:
                continue
            chosen.append(g)
            extend(i, chosen, new_total, new_sums)
            chosen.pop()

    extend(0, [], zero, frozenset())
    out.sort(key=lambda S: (S.length, S.expanded()))
    return out


def davenport(G: FinAbGroup, cap: int | None = None) -> int:
    """Maximum length of a minimal zero-sum sequence over all of G.

    Computed by exhaustive search; a minimal zero-sum sequence has pairwise
    distinct partial sums, so none is longer than |G| and the search depth
    |G| is complete.
    """
    limit = DEFAULT_GROUP_CAP if cap is None else cap
    if G.order > limit:
        raise CapExceeded(f"group order {G.order} exceeds cap {limit}")
    key = G.moduli
    if key not in _davenport_cache:
        coords = [e.coords for e in enumerate_elements(G)]
        found = _minimal_sequences(G, coords, G.order)
        _davenport_cache[key] = max(S.length for S in found)
    return _davenport_cache[key]


def atoms(G0, group: FinAbGroup | None = None, cap: int | None = None) -> list[ZSeq]:
    """All minimal zero-sum sequences over the set G0, in canonical order.

    The search depth is the Davenport constant of the parent group, so the
    list is complete.
    """
    G0 = list(G0)
    if group is None:
        if not G0:
            return []
        group = G0[0].group
    limit = DEFAULT_GROUP_CAP if cap is None else cap
    if group.order > limit or len(G0) > limit:
        raise CapExceeded(f"group of order {group.order} exceeds cap {limit}")
    coords = sorted({e.coords for e in G0})
    key = (group.moduli, tuple(coords))
    if key not in _atoms_cache:
        bound = davenport(group, cap=cap)
        _atoms_cache[key] = tuple(_minimal_sequences(group, coords, bound))
    return list(_atoms_cache[key])


def factorizations(S: ZSeq, cap: int | None = None) -> list[ZFactorization]:
    """All factorizations of S into minimal zero-sum sequences.

    Each factorization is a multiset of atoms, listed exactly once: parts are
    generated in non-decreasing canonical order, and the next part always
    consumes the smallest remaining element.
    """
    limit = DEFAULT_SEQ_CAP if cap is None else cap
    if S.length > limit:
        raise CapExceeded(f"sequence length {S.length} exceeds cap {limit}")
    if not is_zero_sum(S):
        raise ValueError("sequence is not zero-sum")
    candidates = atoms(S.support(), group=S.group)
    candidates.sort(key=lambda A: A.expanded())

    results: list[ZFactorization] = []

    def rec(remaining: dict, min_index: int, parts: list):
        if not remaining:
            results.append(ZFactorization(tuple(parts)))
            return
        g = min(remaining)
        for idx in range(min_index, len(candidates)):
            A = candidates[idx]
            if A.counts.get(g, 0) == 0:
                continue
            if any(remaining.get(c, 0) < m for c, m in A.counts.items()):
                continue
            rest = dict(remaining)
            for c, m in A.counts.items():
                rest[c] -= m
                if rest[c] == 0:
                    del rest[c]
            parts.append(A)
            rec(rest, idx, parts)
            parts.pop()

    rec(dict(S.counts), 0, [])
    results.sort(key=lambda F: (len(F.parts), [P.expanded() for P in F.parts]))
    return results


def length_set(S: ZSeq, cap: int | None = None) -> set[int]:
    """Set of factorization lengths of S; {0} for the empty sequence."""
    return {len(F) for F in factorizations(S, cap=cap)}


def half_factorial_witness(G0, max_len: int, group: FinAbGroup | None = None,
                           cap: int | None = None) -> ZSeq | None:
    """A zero-sum sequence over G0 of length <= max_len whose length set is
    not a singleton, or None if no such sequence exists up to that bound.

    Scans lengths in increasing order, so a returned witness is shortest
    possible.
    """
    G0 = list(G0)
    if not G0:
        return None
    if group is None:
        group = G0[0].group
    limit = DEFAULT_SEQ_CAP if cap is None else cap
    if max_len > limit:
        raise CapExceeded(f"max_len {max_len} exceeds sequence cap {limit}")
    coords = sorted({e.coords for e in G0})
    moduli = group.moduli
    zero = (0,) * len(moduli)
    for L in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(coords, L):
            total = zero
            for c in combo:
                total = _vec_add(total, c, moduli)
            if total != zero:
                continue
            S = ZSeq.from_elements(group, [GroupElement(group, c) for c in combo])
            if len(length_set(S, cap=cap)) > 1:
                return S
    return None


# ----------------------------------------------------------------------
# text syntax: "1^3 2^3" means the multiset with 1 three times, 2 three times

def parse_seq(group: FinAbGroup, text: str) -> ZSeq:
    counts: dict = {}
    for token in text.split():
        if "^" in token:
            elem_part, _, mult_part = token.partition("^")
            mult = int(mult_part)
            if mult < 0:
                raise ValueError(f"negative multiplicity in {token!r}")
        else:
            elem_part, mult = token, 1
        e = group.parse_element(elem_part)
        counts[e.coords] = counts.get(e.coords, 0) + mult
    return ZSeq(group, counts)


def format_seq(S: ZSeq) -> str:
    """Inverse of :func:`parse_seq`; empty string for the empty sequence."""
    parts = []
    for c, m in S.counts.items():
        e = format_element(GroupElement(S.group, c))
        parts.append(e if m == 1 else f"{e}^{m}")
    return " ".join(parts)
