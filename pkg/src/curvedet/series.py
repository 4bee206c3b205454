"""Linear series on a general plane curve via Hilbert-function constraints.

A divisor D of degree delta on a smooth plane curve of degree d can be
viewed as a zero-dimensional subscheme of the plane.  The canonical
series is cut by curves of degree d - 3, so Riemann-Roch turns
statements about the complete series |D + zH| (H a line section) into
equalities and inequalities on the Hilbert function of D at levels near
d - 3.  This module enumerates the Hilbert functions compatible with a
query, attaches the cancellation-free Betti numbers of each, and asks
the decision engine whether a general curve of degree d contains such a
divisor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decide import contains_subscheme
from .errors import InfeasibleQueryError
from .resolution import (
    BettiData,
    generic_betti,
    hilbert_function,
    is_admissible_hvector,
    plane_dim,
    stabilization_bound,
)

NONSPECIAL = "nonspecial"
EFFECTIVE = "effective"


def genus(d: int) -> int:
    """Genus of a smooth plane curve of degree d: (d-1)(d-2)/2."""
    if d < 1:
        raise ValueError("curve degree must be >= 1")
    return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class ShiftedProperty:
    """A property of the shifted divisor D + zH.

    kind "nonspecial": D + zH is non-special (its speciality index is 0).
    kind "effective": D + zH is linearly equivalent to an effective divisor.
    """

    z: int
    kind: str

    def __post_init__(self):
        if self.kind not in (NONSPECIAL, EFFECTIVE):
            raise ValueError(f"unknown property kind {self.kind!r}")


@dataclass(frozen=True)
class SeriesQuery:
    """Does a general curve of degree d carry a complete series g^r_delta
    whose divisors satisfy the given shifted properties?"""

    curve_degree: int
    divisor_degree: int
    series_dim: int
    properties: tuple[ShiftedProperty, ...] = ()

    def __post_init__(self):
        if self.curve_degree < 4:
            raise ValueError("curve degree must be >= 4 (positive genus regime)")
        if self.divisor_degree < 1:
            raise ValueError("divisor degree must be >= 1")
        if self.series_dim < 0:
            raise ValueError("series dimension must be >= 0")


@dataclass(frozen=True)
class HFConstraint:
    """A single condition on the Hilbert function of the divisor.

    relation is one of '==' / '<=' / '>='.  Mandatory constraints cut
    the enumeration; the others are evaluated as flags per row.
    """

    level: int
    relation: str
    value: int
    mandatory: bool
    label: str

    def satisfied_by(self, hf_value: int) -> bool:
        if self.relation == "==":
            return hf_value == self.value
        if self.relation == "<=":
            return hf_value <= self.value
        return hf_value >= self.value


def hf_constraints(query: SeriesQuery) -> list[HFConstraint]:
    """Translate a series query into Hilbert-function conditions.

    Speciality of D + zH equals the dimension of the degree-(d-3-z)
    piece of the ideal of D, so with g the genus and i = r + g - delta:

    - complete g^r_delta: HF(d-3) = P(d-3) - i  (mandatory);
    - D + zH nonspecial:  HF(d-3-z) = P(d-3-z);
    - D + zH effective:   HF(d-3-z) <= P(d-3-z) - g + delta + z*d,
      from h0(D + zH) = delta + z*d - g + 1 + speciality >= 1.
    """
    d, delta, r = query.curve_degree, query.divisor_degree, query.series_dim
    g = genus(d)
    speciality = r + g - delta
    level = d - 3
    required = plane_dim(level) - speciality
    if required < 0:
        raise InfeasibleQueryError(
            f"a g^{r}_{delta} on a degree-{d} curve would need speciality {speciality} "
            f"> P({level}) = {plane_dim(level)}"
        )
    constraints = [
        HFConstraint(level, "==", required, True, f"complete series dimension {r}")
    ]
    for prop in query.properties:
        lvl = d - 3 - prop.z
        name = f"D{prop.z:+d}H"
        if prop.kind == NONSPECIAL:
            constraints.append(
                HFConstraint(lvl, "==", plane_dim(lvl), False, f"{name} nonspecial")
            )
        else:
            bound = plane_dim(lvl) - g + delta + prop.z * d
            constraints.append(
                HFConstraint(lvl, "<=", bound, False, f"{name} effective")
            )
    return constraints


def enumerate_hvectors(delta: int, constraints, curve_degree: int) -> list[tuple[int, ...]]:
    """All admissible h-vectors of total delta meeting the mandatory constraints.

    Admissibility is Macaulay growth with the curve bound
    h[t] <= min(t+1, curve_degree); a constraint at level t is checked
    against the partial sum through t.  Output is sorted by Hilbert
    function, lexicographically decreasing.
    """
    if delta < 1:
        return []
    mandatory = [c for c in constraints if c.mandatory]
    results: list[tuple[int, ...]] = []

    def check_level(t: int, partial: int) -> bool:
        return all(c.satisfied_by(partial) for c in mandatory if c.level == t)

    def final_ok(support_end: int) -> bool:
        # beyond the support the Hilbert function sits at delta
        return all(c.satisfied_by(delta) for c in mandatory if c.level >= support_end)

    def extend(h: list[int], total: int):
        t = len(h)
        if total == delta:
            if final_ok(t) and is_admissible_hvector(h, curve_degree):
                results.append(tuple(h))
            return
        cap = min(h[-1] + 1 if h else 1, t + 1, curve_degree, delta - total)
        if h and h[-1] <= t - 1:
            cap = min(cap, h[-1])
        for value in range(cap, 0, -1):
            if not check_level(t, total + value):
                continue
            h.append(value)
            extend(h, total + value)
            h.pop()
        # ending the support here means h[t] = 0 onward; only valid if done
        return

    if check_level(0, 1):
        extend([1], 1)

    def hf_key(h: tuple[int, ...]):
        partial = []
        total = 0
        for x in h:
            total += x
            partial.append(total)
        return tuple(partial) + (delta,) * (delta - len(h))

    results.sort(key=hf_key, reverse=True)
    return results


@dataclass(frozen=True)
class SeriesRow:
    """One compatible Hilbert function with its existence analysis."""

    hvector: tuple[int, ...]
    betti: BettiData
    exists_on_general_curve: bool
    flags: tuple[tuple[str, bool], ...]

    def hilbert_values(self, tmax: int) -> tuple[int, ...]:
        return tuple(hilbert_function(self.betti, t) for t in range(tmax + 1))

    def to_json(self) -> dict:
        tmax = stabilization_bound(self.betti) + 1
        return {
            "h": list(self.hvector),
            "hf": list(self.hilbert_values(tmax)),
            "gens": list(self.betti.gens),
            "syz": list(self.betti.syz),
            "existsOnGeneralCurve": self.exists_on_general_curve,
            "flags": {label: ok for label, ok in self.flags},
        }


@dataclass(frozen=True)
class SeriesAnswer:
    query: SeriesQuery
    constraints: tuple[HFConstraint, ...]
    rows: tuple[SeriesRow, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "curveDegree": self.query.curve_degree,
            "divisorDegree": self.query.divisor_degree,
            "seriesDim": self.query.series_dim,
            "constraints": [
                {
                    "level": c.level,
                    "relation": c.relation,
                    "value": c.value,
                    "mandatory": c.mandatory,
                    "label": c.label,
                }
                for c in self.constraints
            ],
            "rows": [row.to_json() for row in self.rows],
        }


def analyze(query: SeriesQuery) -> SeriesAnswer:
    """Full pipeline: constraints, h-vector enumeration, existence, flags.

    Property constraints never filter the table; each row reports them
    as booleans.  An infeasible query yields an empty answer.
    """
    try:
        constraints = hf_constraints(query)
    except InfeasibleQueryError:
        return SeriesAnswer(query, ())
    d = query.curve_degree
    rows = []
    for h in enumerate_hvectors(query.divisor_degree, constraints, d):
        betti = generic_betti(h)
        decision = contains_subscheme(betti.to_dhb(), d)
        flags = tuple(
            (c.label, c.satisfied_by(hilbert_function(betti, c.level)))
            for c in constraints
            if not c.mandatory
        )
        rows.append(SeriesRow(h, betti, decision.verdict, flags))
    return SeriesAnswer(query, tuple(constraints), tuple(rows))
