"""Admissible path shortening for simple linear path schemes.

A shortening deletes whole cycle repetitions from a scheme path, reducing
its effect by a prescribed vector while keeping the run admissible.  The
operations here return certificates (original and reduced exponents plus
the delta) that are re-validated independently by re-running the reduced
word; they never rely on the construction being correct.

Shortenings are represented as exponent decrements only: unstarred
segments are never touched, which suffices because every construction
deletes whole cycle repetitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .cones import cone_contains, cone_contains_zero, rotate_ccw, zero_combination
from .core import (
    Configuration,
    PlaneVector,
    SchemePath,
    Slps,
    Word,
    ZERO,
    effect,
    instantiate,
    path_length,
    run,
)
from .errors import InternalDefectError, PreconditionError


@dataclass(frozen=True)
class Shortening:
    """A certificate: dropping some cycle repetitions of ``original``
    yields ``reduced``, whose effect is smaller by ``delta`` and whose run
    from ``source`` is admissible."""

    scheme: Slps
    original: SchemePath
    reduced: SchemePath
    delta: PlaneVector
    source: Configuration


def shortening_violation(sh: Shortening) -> Optional[str]:
    """Check all certificate invariants; None when valid, else the first
    violated invariant, named."""
    k = sh.scheme.K
    if len(sh.original) != k or len(sh.reduced) != k:
        return "exponent-count mismatch with scheme"
    if any(n < 0 for n in sh.reduced):
        return "negative exponent in reduced path"
    if any(r > o for r, o in zip(sh.reduced, sh.original)):
        return "reduced path is not a subword (exponent exceeds original)"
    if sum(sh.reduced) >= sum(sh.original):
        return "reduced path is not a proper subword (nothing deleted)"
    original_word = instantiate(sh.scheme, sh.original)
    reduced_word = instantiate(sh.scheme, sh.reduced)
    if effect(original_word) - effect(reduced_word) != sh.delta:
        return "effect difference does not equal delta"
    if not run(reduced_word, sh.source).admissible:
        return "reduced path is not admissible from the source"
    return None


@dataclass(frozen=True)
class ShorteningFamily:
    """Shortenings by n*gamma*direction for n = 1..N."""

    gamma: int
    direction: PlaneVector
    members: dict[int, Shortening]


@dataclass(frozen=True)
class AwayOtherResult:
    """Outcome of the corridor-exit analysis: either a vertical shortening
    family (case 1) or a climbing-left cycle vector (case 2)."""

    case: int
    family: Optional[ShorteningFamily] = None
    vector: Optional[PlaneVector] = None


def cycles_repeated_at_least(scheme: Slps, exponents: SchemePath, bound: int) -> set[PlaneVector]:
    """The set of cycle vectors repeated at least ``bound`` times."""
    if len(exponents) != scheme.K:
        raise PreconditionError(
            f"scheme has {scheme.K} cycles but {len(exponents)} exponents were given"
        )
    return {scheme.beta_vec(i) for i, n in enumerate(exponents) if n >= bound}


def drift_lower_bound(
    scheme: Slps, exponents: SchemePath, p: PlaneVector, bound: int, strict: bool
) -> int:
    """Lower bound on p . effect(path) when every cycle repeated at least
    ``bound`` times has positive (strict) or non-negative dot product with p."""
    heavy = cycles_repeated_at_least(scheme, exponents, bound)
    for a in sorted(heavy):
        d = p.dot(a)
        if strict and d <= 0:
            raise PreconditionError(f"repeated cycle {a} has {p}.{a} = {d}, not > 0")
        if not strict and d < 0:
            raise PreconditionError(f"repeated cycle {a} has {p}.{a} = {d}, not >= 0")
    kb1 = scheme.K * bound + 1
    if strict:
        return path_length(scheme, exponents) - kb1 * (2 * scheme.norm * p.norm + 1)
    return -kb1 * (2 * scheme.norm * p.norm)


# ---------------------------------------------------------------------------
# internal path views: letters with cycle tags


def _tagged_letters(scheme: Slps, exponents: SchemePath):
    """Instantiated letters paired with the index of the cycle each
    repetition came from (None for unstarred letters)."""
    letters: list[PlaneVector] = [scheme.alpha_vec(0)]
    tags: list[Optional[int]] = [None]
    for i, n in enumerate(exponents):
        letters.extend([scheme.beta_vec(i)] * n)
        tags.extend([i] * n)
        letters.append(scheme.alpha_vec(i + 1))
        tags.append(None)
    return letters, tags


def _heavy_in(letters, tags, lo: int, hi: int, bound: int):
    """Cycles with at least ``bound`` repetitions among letters [lo, hi).

    Returns (tag, vector, count) triples sorted by vector then tag.
    """
    counts: dict[int, int] = {}
    for i in range(max(lo, 0), min(hi, len(letters))):
        tag = tags[i]
        if tag is not None:
            counts[tag] = counts.get(tag, 0) + 1
    heavy = [
        (tag, letters_vec, count)
        for tag, count in counts.items()
        if count >= bound
        for letters_vec in [_tag_vector(letters, tags, tag)]
    ]
    heavy.sort(key=lambda item: (item[1], item[0]))
    return heavy


def _tag_vector(letters, tags, tag):
    return letters[tags.index(tag)]


def _find_cut(heavy, c: PlaneVector, coeff_bound: int):
    """Decompose gamma*c as a positive integer combination of heavy cycle
    vectors with coefficients at most ``coeff_bound``; gamma is minimal.

    Returns (gamma, deletions) with deletions a list of (cycle tag,
    per-unit count).  Raises InternalDefectError when no decomposition
    exists within the bound, which the cone preconditions rule out.
    """
    by_vector: dict[PlaneVector, int] = {}
    for tag, vec, _count in heavy:
        if vec not in by_vector:
            by_vector[vec] = tag
    vectors = sorted(by_vector)
    if c.is_zero():
        combo = zero_combination(set(vectors))
        if combo is None:
            raise InternalDefectError("zero cut requested but cone of heavy cycles excludes zero")
        return 1, [(by_vector[v], k) for v, k in combo.terms]
    for gamma in range(1, coeff_bound + 1):
        target = c.scale(gamma)
        for v in vectors:
            if v.is_zero() or v.cross(target) != 0 or v.dot(target) <= 0:
                continue
            lam = target.x // v.x if v.x != 0 else target.y // v.y
            if 1 <= lam <= coeff_bound and v.scale(lam) == target:
                return gamma, [(by_vector[v], lam)]
        for i, v1 in enumerate(vectors):
            for v2 in vectors[i + 1:]:
                d = v1.cross(v2)
                if d == 0:
                    continue
                sign = 1 if d > 0 else -1
                num1 = target.cross(v2) * sign
                num2 = v1.cross(target) * sign
                denom = abs(d)
                if num1 <= 0 or num2 <= 0 or num1 % denom or num2 % denom:
                    continue
                l1, l2 = num1 // denom, num2 // denom
                if l1 <= coeff_bound and l2 <= coeff_bound:
                    return gamma, [(by_vector[v1], l1), (by_vector[v2], l2)]
    raise InternalDefectError(f"no bounded decomposition of a multiple of {c} over heavy cycles")


def _apply_deletions(original: SchemePath, deletions, n: int) -> SchemePath:
    reduced = list(original)
    for tag, lam in deletions:
        reduced[tag] -= n * lam
        if reduced[tag] < 0:
            raise InternalDefectError(f"deletion of cycle {tag} exceeds its repetitions")
    return tuple(reduced)


def _certified(scheme, original, reduced, delta, source) -> Shortening:
    sh = Shortening(scheme, tuple(original), tuple(reduced), delta, source)
    reason = shortening_violation(sh)
    if reason is not None:
        raise InternalDefectError(f"constructed shortening is invalid: {reason}")
    return sh


def _family(scheme, original, source, gamma, direction, deletions, count) -> ShorteningFamily:
    members = {}
    for n in range(1, count + 1):
        reduced = _apply_deletions(original, deletions, n)
        members[n] = _certified(scheme, original, reduced, direction.scale(n * gamma), source)
    return ShorteningFamily(gamma=gamma, direction=direction, members=members)


# ---------------------------------------------------------------------------
# the directional cut and the five shortening operations


def cut_by_vector(
    scheme: Slps, exponents: SchemePath, source: Configuration, count: int, c: PlaneVector
) -> ShorteningFamily:
    """Shorten by n*gamma*c for all n = 1..count, given that c lies in the
    cone of cycles repeated at least 2*norm^2*count times and the whole
    run keeps a margin of 6*norm^3*count from both axes."""
    norm = scheme.norm
    if norm == 0:
        raise PreconditionError("scheme norm must be positive")
    if c.norm > norm:
        raise PreconditionError(f"cut vector {c} has norm above the scheme norm {norm}")
    word = instantiate(scheme, exponents)
    margin = 6 * norm**3 * count
    for point in run(word, source).visited:
        if point.x < margin or point.y < margin:
            raise PreconditionError(f"margin {margin} violated", point=point)
    heavy_bound = 2 * norm**2 * count
    heavy_vectors = cycles_repeated_at_least(scheme, exponents, heavy_bound)
    if not heavy_vectors:
        raise PreconditionError(f"no cycle is repeated at least {heavy_bound} times")
    if c.is_zero():
        if not cone_contains_zero(heavy_vectors):
            raise PreconditionError("cone of repeated cycles does not contain zero")
    elif not cone_contains(heavy_vectors, c):
        raise PreconditionError(f"cone of repeated cycles does not contain {c}")
    letters, tags = _tagged_letters(scheme, exponents)
    heavy = _heavy_in(letters, tags, 0, len(letters), heavy_bound)
    gamma, deletions = _find_cut(heavy, c, 2 * norm**2)
    return _family(scheme, exponents, source, gamma, c, deletions, count)


def shorten_close_away(
    scheme: Slps, exponents: SchemePath, source: Configuration, corridor: int, cycle_cap: int
) -> ShorteningFamily:
    """Vertical shortening for a path confined to the corridor
    [0, corridor) x [corridor, inf) whose climb exceeds
    (cycle_cap*corridor + 1) * norm."""
    if scheme.K > cycle_cap:
        raise PreconditionError(f"scheme has {scheme.K} cycles, more than the stated bound {cycle_cap}")
    word = instantiate(scheme, exponents)
    trace = run(word, source)
    for point in trace.visited:
        if not (0 <= point.x < corridor and point.y >= corridor):
            raise PreconditionError(f"corridor [0,{corridor}) x [{corridor},inf) violated", point=point)
    climb = (trace.target - source.to_vector()).y
    threshold = (cycle_cap * corridor + 1) * scheme.norm
    if climb <= threshold:
        raise PreconditionError(f"climb {climb} does not exceed {threshold}")
    candidates = [
        (vec.y, i)
        for i, n in enumerate(exponents)
        if n >= corridor
        for vec in [scheme.beta_vec(i)]
        if vec.x == 0 and vec.y >= 1
    ]
    if not candidates:
        raise InternalDefectError("no vertical cycle repeated corridor-many times")
    gamma, tag = min(candidates)
    return _family(
        scheme, exponents, source, gamma, PlaneVector(0, 1), [(tag, 1)], corridor // gamma
    )


def shorten_away_both(
    scheme: Slps, exponents: SchemePath, source: Configuration, count: int, cycle_cap: int
) -> ShorteningFamily:
    """Vertical shortening for a path far from both axes whose effect is
    steeply upward for every slope in [-norm, norm]."""
    if scheme.K > cycle_cap:
        raise PreconditionError(f"scheme has {scheme.K} cycles, more than the stated bound {cycle_cap}")
    norm = scheme.norm
    if norm == 0:
        raise PreconditionError("scheme norm must be positive")
    word = instantiate(scheme, exponents)
    trace = run(word, source)
    margin = 6 * norm**3 * count
    for point in trace.visited:
        if point.x < margin or point.y < margin:
            raise PreconditionError(f"margin {margin} violated", point=point)
    delta = trace.target - source.to_vector()
    threshold = (4 * cycle_cap * count + 2) * norm**4
    # linear in the slope, so checking the two endpoints is exact
    for slope in (-norm, norm):
        value = slope * delta.x + delta.y
        if value <= threshold:
            raise PreconditionError(
                f"<({slope},1)> . (t-s) = {value} does not exceed {threshold}"
            )
    heavy = cycles_repeated_at_least(scheme, exponents, 2 * norm**2 * count)
    if not heavy or not cone_contains(heavy, PlaneVector(0, 1)):
        raise InternalDefectError("(0,1) must lie in the cone of often-repeated cycles")
    return cut_by_vector(scheme, exponents, source, count, PlaneVector(0, 1))


@dataclass(frozen=True)
class _AwayOtherOutcome:
    case: int
    gamma: Optional[int] = None
    deletions: Optional[list] = None  # per-member-unit (tag, count) pairs
    max_n: int = 0
    vector: Optional[PlaneVector] = None
    tag: Optional[int] = None


def _away_other(letters, tags, points, corridor, count, cycle_cap, norm) -> _AwayOtherOutcome:
    """Core of the corridor-exit analysis, shared by the public operation
    and the one-visit operation (which also applies it with axes swapped).

    ``points`` is the visited sequence in the working frame; thresholds
    use the originating scheme's ``norm``.
    """
    if norm == 0:
        raise PreconditionError("scheme norm must be positive")
    if cycle_cap <= 0:
        raise PreconditionError("cycle bound must be positive")
    if corridor < 6 * norm**3 * count:
        raise PreconditionError(f"corridor width {corridor} below 6*norm^3*N = {6 * norm**3 * count}")
    s, t = points[0], points[-1]
    if s.x < 0 or s.y >= corridor:
        raise PreconditionError(f"source {s} not in N x [0,{corridor})")
    entry_threshold = 12 * (cycle_cap + 1) * (corridor + 1) * norm**4
    if t.x >= corridor or t.y < entry_threshold:
        raise PreconditionError(
            f"target {t} not in [0,{corridor}) x [{entry_threshold},inf)"
        )
    for point in points[1:]:
        if point.x < 0 or point.y < corridor:
            raise PreconditionError(f"band N x [{corridor},inf) violated after the source", point=point)

    first_return = next(i for i in range(1, len(points)) if points[i].x < corridor)
    t_prime = points[first_return]
    case1_threshold = 6 * (cycle_cap + 1) * (corridor + 1) * norm**4

    if (t - t_prime).y > case1_threshold:
        return _segment_surgery(letters, tags, points, first_return, corridor, count, cycle_cap, norm)

    heavy = _heavy_in(letters, tags, 1, first_return - 1, 2 * norm**2 * count)
    heavy_vectors = {vec for _tag, vec, _cnt in heavy}
    if first_return >= 2 and heavy_vectors and cone_contains(heavy_vectors, PlaneVector(0, 1)):
        gamma, deletions = _find_cut(heavy, PlaneVector(0, 1), 2 * norm**2)
        return _AwayOtherOutcome(case=1, gamma=gamma, deletions=deletions, max_n=count)

    case2_threshold = 7 * (cycle_cap + 2) * (corridor + 1) * norm**5
    anchor = PlaneVector(s.x, -t.y)
    candidates = [
        (vec, tag)
        for tag, vec, _cnt in heavy
        if vec.x < 0 < vec.y and rotate_ccw(vec).dot(anchor) < case2_threshold
    ]
    if not candidates:
        raise InternalDefectError("corridor-exit analysis found neither case")
    vec, tag = min(candidates)
    return _AwayOtherOutcome(case=2, vector=vec, tag=tag)


def _segment_surgery(letters, tags, points, first_return, corridor, count, cycle_cap, norm):
    """Locate a steeply climbing segment past the first corridor re-entry
    and shorten inside it: a confined segment yields a repeated vertical
    cycle, an excursion yields a cut toward (0,1)."""
    total = len(points) - 1
    close = [points[i].x < corridor for i in range(len(points))]
    segments = []  # (lo, hi, is_far) over point indices
    i = first_return
    while i < total:
        j = i
        while j < total and close[j + 1]:
            j += 1
        if j > i:
            segments.append((i, j, False))
            i = j
            continue
        j = i + 1
        while j <= total and not close[j]:
            j += 1
        segments.append((i, j, True))
        i = j
    for lo, hi, is_far in segments:
        seg_cycles = {tags[k] for k in range(lo, hi) if tags[k] is not None}
        gain = (points[hi] - points[lo]).y
        if gain <= (len(seg_cycles) * corridor + corridor + 1) * norm + 2 * norm**4:
            continue
        if not is_far:
            verticals = [
                (vec, tag, cnt)
                for tag, vec, cnt in _heavy_in(letters, tags, lo, hi, corridor)
                if vec.x == 0 and vec.y >= 1
            ]
            if not verticals:
                raise InternalDefectError("confined climbing segment lacks a vertical repeated cycle")
            vec, tag, _cnt = min(verticals)
            return _AwayOtherOutcome(
                case=1, gamma=vec.y, deletions=[(tag, 1)], max_n=corridor // vec.y
            )
        heavy = _heavy_in(letters, tags, lo + 1, hi - 1, 2 * norm**2 * count)
        heavy_vectors = {vec for _tag, vec, _cnt in heavy}
        if not heavy_vectors or not cone_contains(heavy_vectors, PlaneVector(0, 1)):
            raise InternalDefectError("excursion segment cone misses (0,1)")
        gamma, deletions = _find_cut(heavy, PlaneVector(0, 1), 2 * norm**2)
        return _AwayOtherOutcome(case=1, gamma=gamma, deletions=deletions, max_n=count)
    raise InternalDefectError("no climbing segment found despite the total climb")


def shorten_away_other(
    scheme: Slps,
    exponents: SchemePath,
    source: Configuration,
    corridor: int,
    count: int,
    cycle_cap: int,
) -> AwayOtherResult:
    """Analyze a path that starts near the bottom of a vertical corridor
    and ends high inside it: either produce vertical shortenings (case 1)
    or exhibit an up-left cycle responsible for the climb (case 2)."""
    letters, tags = _tagged_letters(scheme, exponents)
    points = list(run(tuple(letters), source).visited)
    outcome = _away_other(letters, tags, points, corridor, count, cycle_cap, scheme.norm)
    if outcome.case == 2:
        return AwayOtherResult(case=2, vector=outcome.vector)
    family = _family(
        scheme,
        exponents,
        source,
        outcome.gamma,
        PlaneVector(0, 1),
        outcome.deletions,
        min(count, outcome.max_n),
    )
    return AwayOtherResult(case=1, family=family)


def _swap(v: PlaneVector) -> PlaneVector:
    return PlaneVector(v.y, v.x)


def shorten_one_visit(
    scheme: Slps,
    exponents: SchemePath,
    source: Configuration,
    split_index: int,
    corridor: int,
    count: int,
    cycle_cap: int,
) -> ShorteningFamily:
    """Shorten a path that dives from the left wall toward the bottom and
    climbs back up the left side, deleting matched cycle repetitions in
    both halves so the net horizontal effect cancels."""
    norm = scheme.norm
    if norm == 0:
        raise PreconditionError("scheme norm must be positive")
    if cycle_cap <= 0:
        raise PreconditionError("cycle bound must be positive")
    if corridor < 8 * norm**4 * count:
        raise PreconditionError(
            f"corridor width {corridor} below 8*norm^4*N = {8 * norm**4 * count}"
        )
    letters, tags = _tagged_letters(scheme, exponents)
    if not 0 <= split_index <= len(letters):
        raise PreconditionError(f"split index {split_index} outside the word")
    points = list(run(tuple(letters), source).visited)
    r, s, t = points[0], points[split_index], points[-1]
    if r.x >= corridor:
        raise PreconditionError(f"start {r} not left of the corridor wall {corridor}")
    if s.x < 0 or s.y >= corridor:
        raise PreconditionError(f"split point {s} not in N x [0,{corridor})")
    height = 19 * (cycle_cap + 2) * (corridor + 1) * norm**6
    if t.x >= corridor or t.y < height or t.y < r.y:
        raise PreconditionError(f"target {t} fails the height conditions (needs y >= {height} and >= {r.y})")
    for point in points[1 : split_index + 1]:
        if point.x < corridor or point.y < 0:
            raise PreconditionError("descent half leaves the right band", point=point)
    for point in points[split_index + 1 :]:
        if point.x < 0 or point.y < corridor:
            raise PreconditionError("ascent half leaves the upper band", point=point)

    climb = _away_other(
        letters[split_index:], tags[split_index:], points[split_index:],
        corridor, count, cycle_cap, norm,
    )
    if climb.case == 1:
        return _family(
            scheme, exponents, source, climb.gamma, PlaneVector(0, 1), climb.deletions,
            min(count, climb.max_n),
        )

    v, v_tag = climb.vector, climb.tag
    swapped_letters = [_swap(w) for w in letters[:split_index]]
    swapped_points = [_swap(p) for p in points[: split_index + 1]]
    dive = _away_other(
        swapped_letters, tags[:split_index], swapped_points,
        corridor, count * norm, cycle_cap, norm,
    )
    members = {}
    if dive.case == 1:
        w = PlaneVector(dive.gamma, 0)
        rho_deletions = [(tag, lam * (-v.x)) for tag, lam in dive.deletions]
    else:
        w = _swap(dive.vector)
        rho_deletions = [(dive.tag, -v.x)]
    gamma = w.x * v.y - w.y * v.x
    if not 0 <= gamma <= 2 * norm**3:
        raise InternalDefectError(f"matched-deletion gamma {gamma} outside [0, 2*norm^3]")
    deletions = rho_deletions + [(v_tag, w.x)]
    return _family(scheme, exponents, source, gamma, PlaneVector(0, 1), deletions, count)


def shorten_far(
    scheme: Slps, exponents: SchemePath, source: Configuration, cycle_count: int
) -> Shortening:
    """Delete a zero-effect bundle of cycle repetitions from a path that
    wanders much further from the axes than its endpoints."""
    norm = scheme.norm
    if norm == 0:
        raise PreconditionError("scheme norm must be positive")
    word = instantiate(scheme, exponents)
    trace = run(word, source)
    margin = 6 * norm**3
    for point in trace.visited:
        if point.x < margin or point.y < margin:
            raise PreconditionError(f"margin {margin} violated", point=point)
    endpoint_norm = max(source.norm, trace.target.norm)
    # strict bound norm(f) > 3*norm^2*endpoints + 7.5*norm^5*K, doubled to
    # stay in integers
    peak = max(p.norm for p in trace.visited)
    if 2 * peak <= 6 * norm**2 * endpoint_norm + 15 * norm**5 * cycle_count:
        raise PreconditionError(
            f"peak {peak} does not exceed the far threshold for endpoints {endpoint_norm}"
        )
    heavy = cycles_repeated_at_least(scheme, exponents, 2 * norm**2)
    if not heavy or not cone_contains_zero(heavy):
        raise InternalDefectError("far-point cone must contain zero")
    family = cut_by_vector(scheme, exponents, source, 1, ZERO)
    return family.members[1]
