"""Degree profiles of Toeplitz graphs and their realization.

The profile ``(deg(1), ..., deg(n))`` is a palindrome whose consecutive
entries differ by at most one, and each step is decided by whether ``j``
and ``n - j`` are offsets.  Reading those steps backwards recovers an
offset set with any admissible profile.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence

from .core import ToeplitzError, ToeplitzSpec, degree, ell, new_spec

DegreeProfile = tuple[int, ...]
Step = Literal["equal", "up", "down"]


def degree_profile(spec: ToeplitzSpec) -> DegreeProfile:
    n = spec.n
    return tuple(ell(spec, i) + ell(spec, n - i + 1) for i in range(1, n + 1))


def profile_step_classification(spec: ToeplitzSpec, j: int) -> Step:
    """How ``deg(j + 1)`` compares with ``deg(j)``, read off the offsets alone."""
    if not 1 <= j <= spec.n - 1:
        raise ToeplitzError(f"position {j} outside [1, {spec.n - 1}]")
    present = spec.offset_set
    low_in = j in present
    high_in = (spec.n - j) in present
    if low_in == high_in:
        return "equal"
    return "up" if low_in else "down"


@dataclass(frozen=True)
class RealizabilityReport:
    """Outcome of checking an arranged profile against the realization conditions.

    ``failed_condition`` is one of ``"a"`` (consecutive step larger than one),
    ``"b"`` (not a palindrome), ``"c"`` (first entry outside ``[s, n-1-s]``)
    or ``"d"`` (parity mismatch for odd ``n``).
    """

    realizable: bool
    s: int
    offsets: Optional[tuple[int, ...]] = None
    failed_condition: Optional[str] = None
    b3_star: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.realizable and self.failed_condition is not None:
            raise ValueError("realizable report cannot carry a failed condition")
        if not self.realizable and self.failed_condition is None:
            raise ValueError("non-realizable report must name the failed condition")

    def to_dict(self) -> dict:
        return {
            "realizable": self.realizable,
            "s": self.s,
            "offsets": list(self.offsets) if self.offsets is not None else None,
            "failed_condition": self.failed_condition,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _step_count(profile: Sequence[int]) -> int:
    m = (len(profile) - 1) // 2
    return sum(1 for i in range(1, m + 1) if profile[i] != profile[i - 1])


def _first_failure(profile: Sequence[int]) -> tuple[int, Optional[str]]:
    n = len(profile)
    s = _step_count(profile)
    if any(abs(profile[i + 1] - profile[i]) > 1 for i in range(n - 1)):
        return s, "a"
    if any(profile[i] != profile[n - 1 - i] for i in range(n)):
        return s, "b"
    d1 = profile[0]
    if not s <= d1 <= n - 1 - s:
        return s, "c"
    if n % 2 == 1 and (d1 - s) % 2:
        return s, "d"
    return s, None


def _validate_profile(profile: Sequence[int]) -> tuple[int, ...]:
    values = tuple(profile)
    if not values:
        raise ToeplitzError("degree profile must be non-empty")
    for d in values:
        if isinstance(d, bool) or not isinstance(d, int) or d < 0:
            raise ToeplitzError(f"degrees must be non-negative integers, got {d!r}")
    return values


def check_profile(profile: Sequence[int]) -> RealizabilityReport:
    """Test conditions (a)-(d) on the profile taken as already arranged.

    ``s`` counts the non-zero steps among the first ``floor((n - 1) / 2)``.
    No offsets are constructed; see :func:`realize_profile`.
    """
    values = _validate_profile(profile)
    s, failed = _first_failure(values)
    if failed is not None:
        return RealizabilityReport(False, s, failed_condition=failed)
    return RealizabilityReport(True, s)


def realization_report(profile: Sequence[int]) -> RealizabilityReport:
    """Like :func:`check_profile`, with the witness offsets filled in on success."""
    values = _validate_profile(profile)
    report = check_profile(values)
    if not report.realizable:
        return report
    n = len(values)
    m = (n - 1) // 2
    up, down, flat = [], [], []
    for i in range(1, m + 1):
        diff = values[i] - values[i - 1]
        (up if diff == 1 else down if diff == -1 else flat).append(i)
    spare = values[0] - report.s
    # any floor(spare / 2) flat positions work; take the smallest
    b3_star = flat[: spare // 2]
    offsets = set(up)
    offsets.update(n - i for i in down)
    offsets.update(b3_star)
    offsets.update(n - i for i in b3_star)
    if spare % 2:
        offsets.add(n // 2)
    return RealizabilityReport(True, report.s, tuple(sorted(offsets)), None, tuple(b3_star))


def realize_profile(profile: Sequence[int]) -> ToeplitzSpec:
    """Toeplitz graph whose degree of vertex ``i`` is ``profile[i - 1]``."""
    report = realization_report(profile)
    if not report.realizable:
        raise ToeplitzError(f"profile {list(profile)} violates condition ({report.failed_condition})")
    spec = new_spec(len(profile), report.offsets, allow_edgeless=True)
    realized = tuple(degree(spec, i) for i in range(1, spec.n + 1))
    if realized != tuple(profile):
        raise AssertionError(f"realized profile {realized} differs from {tuple(profile)}")
    return spec


@dataclass
class SearchOutcome:
    """Result of looking for an admissible arrangement of a degree sequence.

    ``pruned`` counts abandoned branches per condition letter.
    """

    arrangement: Optional[DegreeProfile]
    spec: Optional[ToeplitzSpec]
    pruned: Counter = field(default_factory=Counter)

    @property
    def realizable(self) -> bool:
        return self.arrangement is not None


def search_arrangement(seq: Sequence[int]) -> SearchOutcome:
    """Search for a palindromic, step-at-most-one arrangement meeting (c) and (d).

    Only the first ``ceil(n / 2)`` positions are chosen; the rest mirror them.
    Values are tried in order of decreasing remaining multiplicity, and a
    branch is cut when the unused values together with the last placed value
    do not form a run of consecutive integers.
    """
    values = _validate_profile(seq)
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise ToeplitzError("degree sequence must be non-increasing")
    n = len(values)
    outcome = SearchOutcome(None, None)
    counts = Counter(values)
    odd_values = [v for v, c in counts.items() if c % 2]
    center: Optional[int] = None
    if n % 2 == 0:
        if odd_values:
            outcome.pruned["b"] += 1
            return outcome
    else:
        if len(odd_values) != 1:
            outcome.pruned["b"] += 1
            return outcome
        center = odd_values[0]
    pool = Counter({v: c // 2 for v, c in counts.items() if c // 2})
    half = n // 2
    chosen: list[int] = []

    def contiguous(last: Optional[int]) -> bool:
        rest = {v for v, c in pool.items() if c}
        if center is not None:
            rest.add(center)
        if last is not None:
            rest.add(last)
        return not rest or max(rest) - min(rest) + 1 == len(rest)

    def finish() -> Optional[DegreeProfile]:
        first = list(chosen)
        if center is not None:
            if first and abs(center - first[-1]) > 1:
                outcome.pruned["a"] += 1
                return None
            arranged = first + [center] + first[::-1]
        else:
            arranged = first + first[::-1]
        _, failed = _first_failure(arranged)
        if failed is not None:
            outcome.pruned[failed] += 1
            return None
        return tuple(arranged)

    def place() -> Optional[DegreeProfile]:
        if len(chosen) == half:
            return finish()
        last = chosen[-1] if chosen else None
        options = sorted((v for v, c in pool.items() if c), key=lambda v: (-pool[v], -v))
        for v in options:
            if last is not None and abs(v - last) > 1:
                outcome.pruned["a"] += 1
                continue
            pool[v] -= 1
            chosen.append(v)
            if contiguous(v):
                found = place()
                if found is not None:
                    return found
            else:
                outcome.pruned["a"] += 1
            chosen.pop()
            pool[v] += 1
        return None

    found = place()
    if found is not None:
        outcome.arrangement = found
        outcome.spec = realize_profile(found)
    return outcome


def realize_sequence(seq: Sequence[int]) -> Optional[tuple[DegreeProfile, ToeplitzSpec]]:
    """Arrangement and Toeplitz graph for a non-increasing degree sequence, or ``None``."""
    outcome = search_arrangement(seq)
    if outcome.arrangement is None:
        return None
    return outcome.arrangement, outcome.spec


def is_circulant(spec: ToeplitzSpec) -> bool:
    present = spec.offset_set
    return all(spec.n - t in present for t in spec.offsets)


def is_regular(spec: ToeplitzSpec) -> Optional[int]:
    """Common degree if every vertex has the same degree, else ``None``."""
    profile = degree_profile(spec)
    return profile[0] if len(set(profile)) == 1 else None
