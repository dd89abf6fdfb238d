"""Eventual structure of t-fold colored sumsets.

For a normalized tuple (A_1..A_q) and a threshold t, the set of integers
with at least t colored representations at exponents h eventually takes
the shape

    low_fringe  U  [low_cut, M - high_cut]  U  (M - high_fringe)

with M = sum_i h_i * max(A_i): a fixed sporadic set near 0, a solid
middle interval, and a fixed sporadic set hanging off the right
endpoint.  This module computes those four constants together with an
exponent vector past which the shape holds, by two routes:

* constructive: the constants come from unbounded partition counts of
  the nonzero union elements (low side) and of the reflected union
  (high side); the threshold vector comes from explicit witness
  representations.  Fast and certificate-backed, but its counts ignore
  colors, so on tuples where a nonzero element carries several colors
  the result can fail verification and is then refused.

* empirical: ascend the diagonal, read the shape off the computed
  t-fold set, and accept once the same constants reproduce every
  t-fold set in a margin box; then shrink coordinates greedily.  Total
  over every tuple that stabilizes, with a search ceiling.

Both routes verify the full margin box before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    BoundError,
    ConstructiveMismatchError,
    DegenerateAlphabetError,
    DimensionError,
    DomainError,
    NotNormalizedError,
    SearchExhaustedError,
)
from .intset import FiniteSet, HVec, SetTuple, hvec_leq, hvec_sup
from .oracle import oracle_partitions
from .repcount import inhomogeneous_count_table, partition_count_table, tfold_set

__all__ = [
    "StructureResult",
    "ColoredRep",
    "WitnessSet",
    "certified_rep_bound",
    "low_fringe_constants",
    "high_fringe_constants",
    "closed_form_threshold",
    "witness_representations",
    "threshold_constructive",
    "threshold_empirical",
    "verify_structure",
    "verify_structure_inhomogeneous",
    "structure_constants",
    "structure_constants_inhomogeneous",
]

DEFAULT_MARGIN = 3


@dataclass(frozen=True)
class StructureResult:
    """The four structure constants plus the exponent threshold.

    low_fringe lives in [0, low_cut - 2]; high_fringe holds offsets from
    the right endpoint and lives in [0, high_cut - 2].  verified_box is
    the closed box of exponent vectors over which the shape was checked
    exactly.
    """

    low_fringe: FiniteSet
    low_cut: int
    high_fringe: FiniteSet
    high_cut: int
    threshold: HVec
    strategy: str
    verified_box: tuple[HVec, HVec]

    def pattern_set(self, m: int) -> FiniteSet:
        """The predicted set for right endpoint m."""
        members = set(self.low_fringe.elements)
        members.update(range(self.low_cut, m - self.high_cut + 1))
        members.update(m - x for x in self.high_fringe.elements)
        return FiniteSet(tuple(sorted(members)))

    def to_json(self) -> dict:
        return {
            "C": list(self.low_fringe.elements),
            "c": self.low_cut,
            "D": list(self.high_fringe.elements),
            "d": self.high_cut,
            "h_t": list(self.threshold.coords),
            "strategy": self.strategy,
            "verified_box": [
                list(self.verified_box[0].coords),
                list(self.verified_box[1].coords),
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "StructureResult":
        if not isinstance(obj, dict):
            raise ValueError("expected a structure result object")
        try:
            return cls(
                low_fringe=FiniteSet(tuple(sorted(int(x) for x in obj["C"]))),
                low_cut=int(obj["c"]),
                high_fringe=FiniteSet(tuple(sorted(int(x) for x in obj["D"]))),
                high_cut=int(obj["d"]),
                threshold=HVec(tuple(int(x) for x in obj["h_t"])),
                strategy=str(obj["strategy"]),
                verified_box=(
                    HVec(tuple(int(x) for x in obj["verified_box"][0])),
                    HVec(tuple(int(x) for x in obj["verified_box"][1])),
                ),
            )
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed structure result: {exc}") from exc


@dataclass(frozen=True)
class ColoredRep:
    """A colored multiset as sorted (color, element, multiplicity) entries,
    positive multiplicities only; zero elements are implicit padding."""

    entries: tuple[tuple[int, int, int], ...]

    def total(self) -> int:
        return sum(a * m for _, a, m in self.entries)

    def color_load(self, i: int) -> int:
        """Number of nonzero parts carried by color i."""
        return sum(m for color, _, m in self.entries if color == i)

    def per_color_tuples(self, q: int) -> tuple[tuple[int, ...], ...]:
        """Expand to explicit non-decreasing per-color tuples (no padding)."""
        parts: list[list[int]] = [[] for _ in range(q)]
        for color, a, m in self.entries:
            parts[color].extend([a] * m)
        return tuple(tuple(sorted(p)) for p in parts)

    def to_json(self) -> list[dict]:
        return [
            {"color": c, "element": a, "multiplicity": str(m)}
            for c, a, m in self.entries
        ]

    @classmethod
    def from_json(cls, rows: list) -> "ColoredRep":
        entries = tuple(
            sorted(
                (int(r["color"]), int(r["element"]), int(r["multiplicity"]))
                for r in rows
            )
        )
        return cls(entries=entries)


@dataclass(frozen=True)
class WitnessSet:
    """t pairwise-distinct colored representations of one integer."""

    n: int
    reps: tuple[ColoredRep, ...]

    def to_json(self) -> dict:
        return {"n": str(self.n), "reps": [rep.to_json() for rep in self.reps]}

    @classmethod
    def from_json(cls, obj: dict) -> "WitnessSet":
        try:
            return cls(
                n=int(obj["n"]),
                reps=tuple(ColoredRep.from_json(rows) for rows in obj["reps"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed witness set: {exc}") from exc


def _require_normalized(st: SetTuple) -> None:
    if not st.normalized:
        raise NotNormalizedError("this operation requires a normalized tuple")


def _require_t(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise DomainError("t must be a positive integer")


def certified_rep_bound(st: SetTuple, t: int) -> int:
    """k * (t*a - 1) * a with k the number of nonzero elements counted over
    colors and a the largest element anywhere: every n at or above this
    has at least t uncolored representations over the union, and the
    residue-window witness construction succeeds there."""
    _require_normalized(st)
    _require_t(t)
    k = sum(len(A) - 1 for A in st.sets)
    a_star = max(st.maxima)
    return k * (t * a_star - 1) * a_star


def _nonzero_union(st: SetTuple) -> FiniteSet:
    return FiniteSet(tuple(a for a in st.union.elements if a != 0))


def low_fringe_constants(st: SetTuple, t: int) -> tuple[FiniteSet, int]:
    """(sporadic set, cut) from uncolored counts: cut is the smallest
    integer such that every n >= cut has at least t representations as an
    unbounded sum of nonzero union elements; the sporadic set collects
    the n <= cut - 2 that already have t.

    Counts here ignore colors.  When an element belongs to several
    component sets, colored counts of small n can exceed these, and the
    constants may then fail verification against the true t-fold sets;
    the empirical strategy covers those tuples.
    """
    _require_normalized(st)
    _require_t(t)
    parts = _nonzero_union(st)
    if parts.elements == (1,) and t >= 2:
        raise DegenerateAlphabetError(
            "the only nonzero element is 1: every integer has exactly one "
            "uncolored representation, so no t-threshold exists for t >= 2"
        )
    bound = certified_rep_bound(st, t)
    table = partition_count_table(parts, bound, cap=t)
    cut = 0
    for n in range(bound, -1, -1):
        if table.value(n) < t:
            cut = n + 1
            break
    sporadic = FiniteSet(
        tuple(n for n in range(0, max(cut - 1, 0)) if table.value(n) >= t)
    )
    return sporadic, cut


def high_fringe_constants(st: SetTuple, t: int) -> tuple[FiniteSet, int]:
    """Same as low_fringe_constants on the reflected tuple; the sporadic
    set holds offsets below the right endpoint."""
    return low_fringe_constants(st.reflected(), t)


def closed_form_threshold(A: FiniteSet, t: int) -> int:
    """(|A| - 1) * (t*max(A) - 1) * max(A) + 1: the explicit exponent bound
    past which a single normalized set's t-fold sumsets carry the
    eventual shape."""
    _require_t(t)
    if len(A) < 2:
        raise DomainError("the set needs at least two elements")
    if A.min != 0:
        raise DomainError("the set must contain 0 as its minimum")
    if A.gcd() != 1:
        raise DomainError("the set's elements must have gcd 1")
    k = len(A)
    a_star = A.max
    return (k - 1) * (t * a_star - 1) * a_star + 1


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = a*x + b*y = gcd(a, b), g >= 0 for a, b >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    return old_r, old_s, old_t


def _flat_nonzero(st: SetTuple) -> list[tuple[int, int]]:
    """Nonzero elements flattened in (color, element) order."""
    return [(i, a) for i, A in enumerate(st.sets) for a in A.elements if a != 0]


def witness_representations(st: SetTuple, n: int, t: int) -> WitnessSet:
    """t pairwise-distinct colored representations of n, built directly.

    Solve n as an integer combination of the flattened nonzero elements
    (extended-gcd folds left to right), then for s = 1..t shift every
    coefficient except the one on the largest element into the window
    [(s-1)*a, s*a - 1] by reduction mod a, absorbing the remainder into
    that largest element's coefficient.  Windows are disjoint across s,
    which makes the t representations distinct, and n at or above the
    certified bound keeps the absorbed coefficient nonnegative.
    """
    _require_normalized(st)
    _require_t(t)
    flat = _flat_nonzero(st)
    if len(flat) == 1 and t >= 2:
        # a single nonzero element with gcd 1 is the element 1
        raise DegenerateAlphabetError(
            "only one nonzero element: distinct representations cannot exist"
        )
    bound = certified_rep_bound(st, t)
    if n < bound:
        raise BoundError(
            f"n={n} is below the certified bound {bound}; the construction "
            "could produce a negative coefficient"
        )
    a_star = max(a for _, a in flat)
    dist = max(idx for idx, (_, a) in enumerate(flat) if a == a_star)

    g = flat[0][1]
    coeffs = [1]
    for _, e in flat[1:]:
        g2, u, v = _ext_gcd(g, e)
        coeffs = [c * u for c in coeffs] + [v]
        g = g2
    assert g == 1
    solved = [c * n for c in coeffs]

    reps = []
    for s in range(1, t + 1):
        entries: dict[tuple[int, int], int] = {}
        used = 0
        for idx, (color, a) in enumerate(flat):
            if idx == dist:
                continue
            val = (s - 1) * a_star + (solved[idx] % a_star)
            if val:
                entries[(color, a)] = val
                used += val * a
        residual = n - used
        assert residual >= 0 and residual % a_star == 0
        dist_mult = residual // a_star
        if dist_mult:
            entries[flat[dist]] = dist_mult
        reps.append(
            ColoredRep(entries=tuple(sorted((c, a, m) for (c, a), m in entries.items())))
        )
    assert len(set(reps)) == t
    return WitnessSet(n=n, reps=tuple(reps))


def _smallest_color(st: SetTuple, part: int) -> int:
    for i, A in enumerate(st.sets):
        if part in A:
            return i
    raise AssertionError(f"part {part} not in any color")


def _witness_loads(st: SetTuple, n: int, t: int, bound: int, parts: FiniteSet) -> HVec:
    """Per-color nonzero part counts sufficient for t distinct colored
    representations of n: maxima over the t representations.

    At or above the certified bound the residue-window construction
    supplies them; below it, exhaustive partition enumeration does,
    taking the t partitions with fewest parts (ties lexicographic) and
    coloring each part by the smallest color containing it.
    """
    q = st.q
    if n >= bound:
        ws = witness_representations(st, n, t)
        loads = [[rep.color_load(i) for i in range(q)] for rep in ws.reps]
    else:
        all_parts = sorted(oracle_partitions(parts, n), key=lambda p: (len(p), p))
        assert len(all_parts) >= t, "caller guarantees t uncolored representations"
        loads = []
        for partition in all_parts[:t]:
            load = [0] * q
            for part in partition:
                load[_smallest_color(st, part)] += 1
            loads.append(load)
    return HVec(tuple(max(load[i] for load in loads) for i in range(q)))


def _one_sided_threshold(st: SetTuple, t: int, sporadic: FiniteSet, cut: int) -> HVec:
    """Exponents at which every target (the sporadic set plus one full
    window [cut, cut + a - 1]) owns t distinct colored representations."""
    a_star = max(st.maxima)
    bound = certified_rep_bound(st, t)
    parts = _nonzero_union(st)
    targets = list(sporadic.elements) + list(range(cut, cut + a_star))
    vecs = [_witness_loads(st, n, t, bound, parts) for n in targets]
    return hvec_sup(vecs)


def threshold_constructive(st: SetTuple, t: int) -> HVec:
    """Exponent vector past which the constructed constants describe the
    t-fold sets (when they do at all; see low_fringe_constants).

    Grows the low-side witness exponents until the middle interval can
    chain upward, mirrors on the reflection, takes the componentwise
    sup, and enlarges it minimally until the two solid intervals meet.
    """
    _require_normalized(st)
    _require_t(t)
    sporadic_low, cut_low = low_fringe_constants(st, t)
    sporadic_high, cut_high = high_fringe_constants(st, t)
    a_star = max(st.maxima)
    maxima = st.maxima

    h_low = _one_sided_threshold(st, t, sporadic_low, cut_low)
    h_high = _one_sided_threshold(st.reflected(), t, sporadic_high, cut_high)

    gap_high = h_low.dot(maxima) - (cut_low + a_star - 1)
    gap_low = h_high.dot(maxima) - (cut_high + a_star - 1)

    ht = hvec_sup([h_low, h_high])
    # the two intervals must overlap: low side is solid up to M - gap_high,
    # high side from gap_low on
    bump = max(range(st.q), key=lambda i: maxima[i])
    while gap_low + gap_high > ht.dot(maxima):
        coords = list(ht.coords)
        coords[bump] += 1
        ht = HVec(tuple(coords))
    return ht


# ---------------------------------------------------------------------------
# empirical search


def _read_off(support: tuple[int, ...], m: int):
    """Decompose a support inside [0, m] as sporadic-low, solid interval,
    sporadic-high anchored at m.  The middle interval is the unique
    longest run of consecutive members; returns None when the support is
    empty, out of range, or the longest run is tied."""
    if not support or support[0] < 0 or support[-1] > m:
        return None
    runs = []
    start = end = support[0]
    for v in support[1:]:
        if v == end + 1:
            end = v
        else:
            runs.append((start, end))
            start = end = v
    runs.append((start, end))
    best_len = max(e - s for s, e in runs)
    best = [(s, e) for s, e in runs if e - s == best_len]
    if len(best) > 1:
        return None
    lo, hi = best[0]
    low = tuple(v for v in support if v < lo)
    high = tuple(sorted(m - v for v in support if v > hi))
    return low, lo, high, m - hi


def _pattern_members(dec, m: int) -> tuple[int, ...]:
    low, cut_low, high, cut_high = dec
    members = set(low)
    members.update(range(cut_low, m - cut_high + 1))
    members.update(m - x for x in high)
    return tuple(sorted(members))


def _counts_are_bounded(st: SetTuple) -> bool:
    """True when colored counts stay at most 1 for every exponent vector:
    at most one color has a second element (after normalization that
    element is then 1)."""
    return sum(1 for A in st.sets if len(A) >= 2) <= 1 and all(
        len(A) <= 2 for A in st.sets
    )


def _search_ceiling(st: SetTuple, t: int) -> int:
    u = st.union
    a_u = u.max
    return 4 * ((len(u) - 1) * (t * a_u - 1) * a_u + 1)


def _stabilize(
    st: SetTuple,
    t: int,
    margin: int,
    ceiling: int | None,
    support_of,
    endpoint_of,
    what: str,
) -> StructureResult:
    """Diagonal ascent with margin-box confirmation and greedy shrink.

    support_of(coords) must yield the support tuple at those exponents
    and endpoint_of(coords) its right endpoint.
    """
    q = st.q
    if ceiling is None:
        ceiling = _search_ceiling(st, t)
    cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    def support(coords: tuple[int, ...]) -> tuple[int, ...]:
        got = cache.get(coords)
        if got is None:
            got = support_of(coords)
            cache[coords] = got
        return got

    def box_decomposition(coords: tuple[int, ...]):
        dec = _read_off(support(coords), endpoint_of(coords))
        if dec is None:
            return None
        for deltas in product(range(margin + 1), repeat=q):
            pt = tuple(c + d for c, d in zip(coords, deltas))
            if support(pt) != _pattern_members(dec, endpoint_of(pt)):
                return None
        return dec

    found = None
    for m in range(ceiling + 1):
        base = (m,) * q
        dec = box_decomposition(base)
        if dec is not None:
            found = (base, dec)
            break
    if found is None:
        raise SearchExhaustedError(
            f"no stable {what} shape up to the diagonal ceiling {ceiling} "
            f"with margin {margin}"
        )

    coords, dec = found
    changed = True
    while changed:
        changed = False
        for i in range(q):
            while coords[i] > 0:
                cand = coords[:i] + (coords[i] - 1,) + coords[i + 1 :]
                dec2 = box_decomposition(cand)
                if dec2 is None:
                    break
                coords, dec = cand, dec2
                changed = True

    low, cut_low, high, cut_high = dec
    ht = HVec(coords)
    top = HVec(tuple(c + margin for c in coords))
    return StructureResult(
        low_fringe=FiniteSet(low),
        low_cut=cut_low,
        high_fringe=FiniteSet(high),
        high_cut=cut_high,
        threshold=ht,
        strategy="empirical",
        verified_box=(ht, top),
    )


def threshold_empirical(
    st: SetTuple, t: int, margin: int = DEFAULT_MARGIN, ceiling: int | None = None
) -> StructureResult:
    """Find the smallest exponent vector whose t-fold set decomposes into
    the eventual shape reproduced across the whole margin box."""
    _require_normalized(st)
    _require_t(t)
    if margin < 1:
        raise DomainError("margin must be a positive integer")
    if t >= 2 and _counts_are_bounded(st):
        raise DegenerateAlphabetError(
            "counts never exceed 1 on this tuple: t-fold sets are empty for t >= 2"
        )
    maxima = st.maxima

    def support_of(coords: tuple[int, ...]) -> tuple[int, ...]:
        return tfold_set(st, HVec(coords), t).elements

    def endpoint_of(coords: tuple[int, ...]) -> int:
        return sum(c * w for c, w in zip(coords, maxima))

    return _stabilize(st, t, margin, ceiling, support_of, endpoint_of, "t-fold")


def verify_structure(st: SetTuple, t: int, result: StructureResult, h: HVec) -> bool:
    """Exact check: does the t-fold set at h equal the predicted shape?"""
    _require_normalized(st)
    _require_t(t)
    if h.q != st.q or result.threshold.q != st.q:
        raise DimensionError("exponent vector length does not match tuple")
    if not hvec_leq(result.threshold, h):
        raise DomainError("h lies below the result's threshold vector")
    m = h.dot(st.maxima)
    if result.low_cut + result.high_cut > m:
        raise DomainError("malformed interval: the cuts overlap at this h")
    return tfold_set(st, h, t) == result.pattern_set(m)


def verify_structure_inhomogeneous(
    st: SetTuple, B: FiniteSet, t: int, result: StructureResult, h: HVec
) -> bool:
    """Exact check for the translated form, right endpoint shifted by max(B)."""
    _require_normalized(st)
    _require_t(t)
    if B.min != 0:
        raise DomainError("the translation set must have minimum 0")
    if h.q != st.q or result.threshold.q != st.q:
        raise DimensionError("exponent vector length does not match tuple")
    if not hvec_leq(result.threshold, h):
        raise DomainError("h lies below the result's threshold vector")
    m = h.dot(st.maxima) + B.max
    if result.low_cut + result.high_cut > m:
        raise DomainError("malformed interval: the cuts overlap at this h")
    support = inhomogeneous_count_table(st, h, B, cap=t).support_at_least(t)
    return support == result.pattern_set(m)


def _box_points(lo: HVec, margin: int):
    for deltas in product(range(margin + 1), repeat=lo.q):
        yield HVec(tuple(c + d for c, d in zip(lo.coords, deltas)))


def structure_constants(
    st: SetTuple, t: int, strategy: str = "empirical", margin: int = DEFAULT_MARGIN
) -> StructureResult:
    """Compute the four constants and a threshold vector, verified over the
    full margin box before returning."""
    _require_normalized(st)
    _require_t(t)
    if margin < 1:
        raise DomainError("margin must be a positive integer")
    if strategy == "empirical":
        return threshold_empirical(st, t, margin=margin)
    if strategy != "constructive":
        raise DomainError(f"unknown strategy {strategy!r}")

    sporadic_low, cut_low = low_fringe_constants(st, t)
    sporadic_high, cut_high = high_fringe_constants(st, t)
    ht = threshold_constructive(st, t)
    if st.q == 1:
        # the closed form is sufficient for a single set; never exceed it
        explicit = closed_form_threshold(st.sets[0], t)
        ht = HVec((min(ht.coords[0], explicit),))
    result = StructureResult(
        low_fringe=sporadic_low,
        low_cut=cut_low,
        high_fringe=sporadic_high,
        high_cut=cut_high,
        threshold=ht,
        strategy="constructive",
        verified_box=(ht, HVec(tuple(c + margin for c in ht.coords))),
    )
    for h in _box_points(ht, margin):
        if not verify_structure(st, t, result, h):
            raise ConstructiveMismatchError(
                f"uncolored constants fail at h={list(h.coords)}: some element "
                "carries several colors; use the empirical strategy"
            )
    return result


def structure_constants_inhomogeneous(
    st: SetTuple,
    B: FiniteSet,
    t: int,
    margin: int = DEFAULT_MARGIN,
    ceiling: int | None = None,
) -> StructureResult:
    """Empirical constants for the translated form (sum plus one element
    of B); the right endpoint is shifted by max(B).  With B = {0} this
    reduces exactly to the homogeneous search."""
    _require_normalized(st)
    _require_t(t)
    if margin < 1:
        raise DomainError("margin must be a positive integer")
    if B.min != 0:
        raise DomainError("the translation set must have minimum 0")
    if t >= 2 and _counts_are_bounded(st) and t > len(B):
        raise DegenerateAlphabetError(
            f"counts never exceed |B|={len(B)} on this tuple: t-fold sets "
            f"are empty for t={t}"
        )
    maxima = st.maxima
    b_star = B.max

    def support_of(coords: tuple[int, ...]) -> tuple[int, ...]:
        table = inhomogeneous_count_table(st, HVec(coords), B, cap=t)
        return table.support_at_least(t).elements

    def endpoint_of(coords: tuple[int, ...]) -> int:
        return sum(c * w for c, w in zip(coords, maxima)) + b_star

    return _stabilize(st, t, margin, ceiling, support_of, endpoint_of, "translated")
