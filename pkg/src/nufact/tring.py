"""Exact ideal arithmetic in the triangular order T(l) over a discrete
valuation ring, used as an oracle for the divisor calculus.

An ideal of T(l) is encoded by the l x l matrix of valuations of its entry
modules; the ring itself has valuation 0 on and below the diagonal and 1
above.  Containment is entrywise comparison (larger exponents = smaller
ideal), ideal multiplication is the min-plus matrix product, and intersection
is the entrywise maximum.  The valuation picture is independent of the chosen
DVR, so the uniformizer stays symbolic throughout.

Divisors of ideals are read off maximal chains of two-sided ideals and land
in the cycle structure of the maximal ideals, whose successor map is the
double left dual.  Everything here is desk scale and exhaustively checkable
against :mod:`nufact.divcalc`.
"""

from __future__ import annotations

import itertools
import json
import random

import numpy as np

from .divcalc import CycleStructure, Divisor, compose, is_realizable

DEFAULT_CANDIDATE_CAP = 5 * 10**6

_divisor_cache: dict = {}
_maxideal_cache: dict[int, list] = {}


class CapExceeded(ValueError):
    """An ideal enumeration would exceed the configured candidate cap."""


def _as_matrix(A) -> np.ndarray:
    M = np.asarray(A, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("exponent matrix must be square")
    return M


def _key(A: np.ndarray) -> bytes:
    return A.tobytes()


def ring_matrix(l: int) -> np.ndarray:
    """The exponent matrix of T(l) itself: 0 on and below the diagonal, 1
    above.  Sizes l >= 2 only; a 1x1 "triangular" order is just the DVR and
    has none of the cycle structure this module studies."""
    if l < 2:
        raise ValueError("triangular order needs size l >= 2")
    t = np.zeros((l, l), dtype=np.int64)
    t[np.triu_indices(l, 1)] = 1
    return t


def mul(A, B) -> np.ndarray:
    """Min-plus product: c[i,k] = min_j (a[i,j] + b[j,k])."""
    A, B = _as_matrix(A), _as_matrix(B)
    if A.shape != B.shape:
        raise ValueError("size mismatch")
    return np.min(A[:, :, None] + B[None, :, :], axis=1)


def intersect(A, B) -> np.ndarray:
    """Ideal intersection: entrywise maximum of the exponents."""
    A, B = _as_matrix(A), _as_matrix(B)
    if A.shape != B.shape:
        raise ValueError("size mismatch")
    return np.maximum(A, B)


def is_ideal(A) -> bool:
    """Two-sidedness: contains no entries below the ring's and is closed
    under multiplication by the ring on both sides."""
    A = _as_matrix(A)
    t = ring_matrix(A.shape[0])
    if not (A >= t).all():
        return False
    return (mul(t, A) >= A).all() and (mul(A, t) >= A).all()


def contains(A, B) -> bool:
    """Whether the ideal A contains the ideal B (exponents entrywise <=)."""
    return (_as_matrix(A) <= _as_matrix(B)).all()


def left_dual(A) -> np.ndarray:
    """Largest fractional matrix X with X*A inside the ring:
    x[i,j] = max_k (t[i,k] - a[j,k])."""
    A = _as_matrix(A)
    t = ring_matrix(A.shape[0])
    return (t[:, None, :] - A[None, :, :]).max(axis=2)


def double_dual(A) -> np.ndarray:
    """The double left dual; a bijection on nonzero ideals whose restriction
    to maximal ideals is the cycle successor."""
    return left_dual(left_dual(A))


def maximal_ideals(l: int) -> list[np.ndarray]:
    """The l maximal ideals, ordered so that the double dual steps through
    the list cyclically.

    Each maximal ideal raises exactly one diagonal entry of the ring matrix
    to 1; the orbit of the double dual fixes which bump gets which position.
    The list starts at the bump of the last diagonal entry, matching the
    usual presentation for l = 3.
    """
    if l not in _maxideal_cache:
        t = ring_matrix(l)
        bumps = []
        for d in range(l):
            Q = t.copy()
            Q[d, d] = 1
            bumps.append(Q)
        order = [bumps[l - 1]]
        for _ in range(l - 1):
            order.append(double_dual(order[-1]))
        seen = {_key(Q) for Q in order}
        if seen != {_key(Q) for Q in bumps} or _key(double_dual(order[-1])) != _key(order[0]):
            raise RuntimeError("double dual does not cycle through the diagonal bumps")
        _maxideal_cache[l] = order
    return [Q.copy() for Q in _maxideal_cache[l]]


def cycle_structure(l: int) -> CycleStructure:
    """The one-cycle structure Q1 > Q2 > ... > Ql matching maximal_ideals."""
    return CycleStructure([[f"Q{i + 1}" for i in range(l)]])


def tau_ideal(A) -> np.ndarray:
    """Double dual restricted to (and validated on) ideals."""
    A = _as_matrix(A)
    if not is_ideal(A):
        raise ValueError("not an integral ideal")
    return double_dual(A)


def _bump_candidates(e: np.ndarray, a: np.ndarray) -> list[tuple[int, int]]:
    """Positions where raising e by one step stays an ideal inside the box
    toward a.  These are exactly the covers of e above a: all maximal chains
    of ideals step one valuation unit at a time."""
    out = []
    l = e.shape[0]
    for i in range(l):
        for j in range(l):
            if e[i, j] >= a[i, j]:
                continue
            f = e.copy()
            f[i, j] += 1
            if is_ideal(f):
                out.append((i, j))
    return out


def divisor_of(A, rng: random.Random | None = None) -> Divisor:
    """The divisor of an ideal: walk any maximal chain of ideals from the
    ring down to A and record, for each step, the unique maximal ideal P
    with P * (previous link) inside the next link.

    With rng=None the chain picks the lexicographically least candidate at
    every step (deterministic, cached); passing an rng picks uniformly among
    the candidates, which exercises the chain-independence of the result.
    """
    A = _as_matrix(A)
    l = A.shape[0]
    cache_key = (l, _key(A))
    if rng is None and cache_key in _divisor_cache:
        return _divisor_cache[cache_key]
    if not is_ideal(A):
        raise ValueError("not an integral ideal")
    maxi = maximal_ideals(l)
    labels = cycle_structure(l).labels()
    counts: dict[str, int] = {}
    e = ring_matrix(l)
    while not np.array_equal(e, A):
        candidates = _bump_candidates(e, A)
        if not candidates:
            raise RuntimeError("no maximal ideal step found; chain search is broken")
        if rng is None:
            i, j = candidates[0]  # positions enumerated in lex order
        else:
            i, j = candidates[rng.randrange(len(candidates))]
        f = e.copy()
        f[i, j] += 1
        hits = [idx for idx, Q in enumerate(maxi) if (mul(Q, e) >= f).all()]
        if len(hits) != 1:
            raise RuntimeError(
                f"chain step admits {len(hits)} maximal ideals; expected exactly one")
        label = labels[hits[0]]
        counts[label] = counts.get(label, 0) + 1
        e = f
    D = Divisor(counts)
    if rng is None:
        _divisor_cache[cache_key] = D
    return D


def enumerate_ideals(l: int, max_exp: int, cap: int | None = None) -> list[np.ndarray]:
    """All integral ideals with every entry at most max(max_exp, ring entry),
    in lexicographic order of the exponent rows."""
    t = ring_matrix(l)
    limit = DEFAULT_CANDIDATE_CAP if cap is None else cap
    ranges = [range(t[i, j], max(t[i, j], max_exp) + 1)
              for i in range(l) for j in range(l)]
    total = 1
    for r in ranges:
        total *= len(r)
    if total > limit:
        raise CapExceeded(f"{total} candidate matrices exceed cap {limit}")

    out = []
    chunk = 200_000
    it = itertools.product(*ranges)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        M = np.array(block, dtype=np.int64).reshape(len(block), l, l)
        ok = (M >= t).all(axis=(1, 2))
        left = np.min(t[None, :, :, None] + M[:, None, :, :], axis=2)
        ok &= (left >= M).all(axis=(1, 2))
        right = np.min(M[:, :, :, None] + t[None, None, :, :], axis=2)
        ok &= (right >= M).all(axis=(1, 2))
        out.extend(M[ok])
    return out


# ----------------------------------------------------------------------
# cross-validation of the divisor calculus against this oracle

def oracle_report(l: int = 3, max_exp: int = 2, seed: int = 0,
                  chain_trials: int = 20, compose_fn=None) -> dict:
    """Exhaustively compare the abstract divisor composition with actual
    ideal arithmetic in T(l).

    Checks, over all ideals with exponents <= max_exp: the homomorphism law
    divisor_of(A*B) = divisor_of(A) o divisor_of(B); injectivity of
    divisor_of; realizability of every attained divisor plus attainment of
    every realizable divisor with counts <= max_exp - 1; and agreement of
    randomized alternative maximal chains.  compose_fn substitutes for the
    divisor composition (a hook for negative controls).

    Returns a report dict with one pass/fail entry per property and a
    counterexample for every failure.
    """
    cs = cycle_structure(l)
    comp = compose_fn if compose_fn is not None else compose
    corpus = enumerate_ideals(l, max_exp)
    divisors = [divisor_of(A) for A in corpus]
    report: dict = {
        "ring_size": l,
        "max_exp": max_exp,
        "seed": seed,
        "corpus_size": len(corpus),
        "properties": {},
    }

    def record(name, ok, counterexample=None):
        entry = {"pass": bool(ok)}
        if counterexample is not None:
            entry["counterexample"] = counterexample
        report["properties"][name] = entry

    # homomorphism: divisor of a product = composition of divisors
    bad = None
    for A, DA in zip(corpus, divisors):
        for B, DB in zip(corpus, divisors):
            got = divisor_of(mul(A, B))
            want = comp(cs, DA, DB)
            if got != want:
                bad = {
                    "A": A.tolist(), "B": B.tolist(),
                    "divisor_of_product": cs.format_divisor(got),
                    "composed": cs.format_divisor(want),
                }
                break
        if bad:
            break
    record("homomorphism", bad is None, bad)

    # injectivity of divisor_of on the corpus
    seen: dict = {}
    bad = None
    for A, DA in zip(corpus, divisors):
        if DA in seen and not np.array_equal(seen[DA], A):
            bad = {"A": seen[DA].tolist(), "B": A.tolist(),
                   "divisor": cs.format_divisor(DA)}
            break
        seen[DA] = A
    record("injectivity", bad is None, bad)

    # realizability: attained divisors satisfy the tau inequality, and every
    # realizable divisor with small counts is attained
    bad = None
    for A, DA in zip(corpus, divisors):
        if not is_realizable(cs, DA):
            bad = {"A": A.tolist(), "divisor": cs.format_divisor(DA)}
            break
    attained = set(divisors)
    if bad is None and max_exp >= 1:
        bound = max_exp - 1
        for combo in itertools.product(range(bound + 1), repeat=l):
            D = Divisor(dict(zip(cs.labels(), combo)))
            if is_realizable(cs, D) and D not in attained:
                bad = {"missing_divisor": cs.format_divisor(D)}
                break
    record("realizability_image", bad is None, bad)

    # chain independence: random alternative chains give the same divisor
    rng = random.Random(seed)
    bad = None
    for _ in range(chain_trials):
        A = corpus[rng.randrange(len(corpus))]
        base = divisor_of(A)
        alt = divisor_of(A, rng=rng)
        if alt != base:
            bad = {"A": A.tolist(), "expected": cs.format_divisor(base),
                   "got": cs.format_divisor(alt)}
            break
    record("chain_independence", bad is None, bad)

    report["all_pass"] = all(p["pass"] for p in report["properties"].values())
    return report


# ----------------------------------------------------------------------
# matrix I/O: JSON rows for machine use, the bracket style for humans

def parse_matrix(text: str) -> np.ndarray:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError:
        raise ValueError(f"expected a JSON array of integer rows, got {text!r}")
    return _as_matrix(rows)


def format_matrix(A) -> str:
    """Bracket style with D / (pi^k) entries, one row per line."""
    A = _as_matrix(A)

    def entry(v: int) -> str:
        if v == 0:
            return "D"
        if v == 1:
            return "(pi)"
        return f"(pi^{v})"

    cells = [[entry(int(v)) for v in row] for row in A]
    width = max(len(c) for row in cells for c in row)
    lines = ["[ " + "  ".join(c.ljust(width) for c in row) + " ]" for row in cells]
    return "\n".join(lines)
