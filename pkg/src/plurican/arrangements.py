"""Exact projective line arrangements over Q and Q(omega).

Scalars are elements a + b*omega of the cyclotomic field Q(omega), omega a
primitive cube root of unity (omega^2 = -1 - omega), with exact rational
components; setting b = 0 recovers plain rationals.  No floating point is
used anywhere: intersection multiplicities are discontinuous, so incidence
must be grouped exactly.

Lines are projective classes of coefficient triples, normalized so that the
first nonzero coefficient is 1; two lines intersect in the projective point
given by the exact cross product of their coefficient vectors.  Genericity
is never assumed: the incidence report states the actual multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import MalformedInputError, ValidationError
from .evenclass import EvenSetType, classify_type
from .f2geom import F2Point, PointSet, is_totally_even
from .invariants import k2_from_heavy_points

__all__ = [
    "ExactScalar",
    "ProjLine",
    "LabeledArrangement",
    "IncidencePoint",
    "IncidenceReport",
    "CampedelliReport",
    "ExtensionReport",
    "compute_incidences",
    "check_campedelli",
    "analyze_extension",
    "k2_from_heavy_points",
    "load_arrangement",
    "arrangement_to_json",
]


class ExactScalar:
    """An element a + b*omega of Q(omega), with exact rational a and b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def omega(cls) -> "ExactScalar":
        return cls(0, 1)

    @staticmethod
    def _coerce(value) -> "ExactScalar":
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return ExactScalar(value)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        # (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a - self.b * other.b,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        # 1 / (a + b w) = ((a - b) - b w) / (a^2 - a b + b^2)
        n = self.a * self.a - self.a * self.b + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(omega)")
        return ExactScalar((self.a - self.b) / n, -self.b / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def __repr__(self):
        if self.b == 0:
            return f"ExactScalar({self.a})"
        return f"ExactScalar({self.a}, {self.b})"


def _normalize(coeffs) -> tuple[ExactScalar, ExactScalar, ExactScalar]:
    vec = tuple(c if isinstance(c, ExactScalar) else ExactScalar(c) for c in coeffs)
    if len(vec) != 3:
        raise ValidationError(f"expected 3 coefficients, got {len(vec)}")
    lead = next((c for c in vec if not c.is_zero()), None)
    if lead is None:
        raise ValidationError("coefficient vector is zero")
    inv = lead.inverse()
    return tuple(c * inv for c in vec)


@dataclass(frozen=True)
class ProjLine:
    """A projective line, its coefficient triple normalized to leading 1."""

    coeffs: tuple[ExactScalar, ExactScalar, ExactScalar]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def __repr__(self):
        return f"ProjLine{self.coeffs}"


@dataclass(frozen=True)
class IncidencePoint:
    """An intersection point with the indices of all lines through it."""

    coords: tuple[ExactScalar, ExactScalar, ExactScalar]
    lines: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.lines)


@dataclass
class IncidenceReport:
    """All pairwise intersection points of an arrangement, grouped exactly."""

    points: list[IncidencePoint]
    histogram: dict[int, int]
    line_count: int

    def __post_init__(self):
        pairs = sum(m * (m - 1) // 2 * c for m, c in self.histogram.items())
        if pairs != self.line_count * (self.line_count - 1) // 2:
            raise ValidationError(
                "intersection grouping lost pairs: sum C(mult, 2) != C(lines, 2)",
                pair_sum=pairs, line_count=self.line_count,
            )

    def as_json(self) -> dict:
        return {
            "line_count": self.line_count,
            "point_count": len(self.points),
            "histogram": [[m, c] for m, c in sorted(self.histogram.items(), reverse=True)],
            "points": [
                {
                    "coords": [_scalar_to_json(c) for c in p.coords],
                    "lines": list(p.lines),
                    "multiplicity": p.multiplicity,
                }
                for p in self.points
            ],
        }


@dataclass(frozen=True)
class LabeledArrangement:
    """Distinct projective lines, optionally labeled by points over F2."""

    lines: tuple[ProjLine, ...]
    labels: tuple[F2Point, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "labels", tuple(self.labels))
        seen: dict[ProjLine, int] = {}
        for i, line in enumerate(self.lines):
            if line in seen:
                raise ValidationError(
                    f"lines {seen[line]} and {i} coincide", indices=[seen[line], i]
                )
            seen[line] = i
        if self.labels and len(self.labels) != len(self.lines):
            raise ValidationError(
                f"{len(self.labels)} labels for {len(self.lines)} lines"
            )
        if self.labels:
            k = self.labels[0].k
            if any(lab.k != k for lab in self.labels):
                raise ValidationError("labels of mixed dimensions")


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def intersection(l1: ProjLine, l2: ProjLine) -> tuple[ExactScalar, ...]:
    """Normalized intersection point of two distinct lines."""
    if l1 == l2:
        raise ValidationError("lines coincide; no unique intersection")
    return _normalize(_cross(l1.coeffs, l2.coeffs))


def compute_incidences(arr: LabeledArrangement) -> IncidenceReport:
    """Intersect all line pairs and group equal points exactly."""
    lines = arr.lines
    if len(lines) < 2:
        raise ValidationError("need at least two lines to intersect")
    by_point: dict[tuple, set[int]] = {}
    for i, j in combinations(range(len(lines)), 2):
        p = intersection(lines[i], lines[j])
        by_point.setdefault(p, set()).update((i, j))
    points = [
        IncidencePoint(coords, tuple(sorted(idx)))
        for coords, idx in by_point.items()
    ]
    points.sort(key=lambda p: tuple(c.sort_key() for c in p.coords))
    histogram: dict[int, int] = {}
    for p in points:
        histogram[p.multiplicity] = histogram.get(p.multiplicity, 0) + 1
    return IncidenceReport(points=points, histogram=histogram, line_count=len(lines))


@dataclass
class CampedelliReport:
    """Validity report for 7-line covering data with (Z/2)^3 labels."""

    passed: bool
    violations: list[dict]
    histogram: dict[int, int]

    def as_json(self) -> dict:
        return {
            "passed": self.passed,
            "histogram": [[m, c] for m, c in sorted(self.histogram.items(), reverse=True)],
            "violations": self.violations,
        }


def check_campedelli(arr: LabeledArrangement) -> CampedelliReport:
    """Check the three covering-data conditions for a labeled 7-line
    arrangement: labels exhaust the nonzero vectors of (Z/2)^3, no point has
    multiplicity 4 or more, and the labels at every triple point sum to a
    nonzero vector.  Every violation is reported with its witness.
    """
    if len(arr.lines) != 7:
        raise ValidationError(f"expected 7 lines, got {len(arr.lines)}")
    if len(arr.labels) != 7 or any(lab.k != 3 for lab in arr.labels):
        raise ValidationError("expected 7 labels over (Z/2)^3")
    violations: list[dict] = []
    codes = sorted(lab.code for lab in arr.labels)
    if codes != list(range(1, 8)):
        violations.append(
            {
                "kind": "labels-not-complete",
                "labels": [list(lab.coords) for lab in arr.labels],
            }
        )
    report = compute_incidences(arr)
    for p in report.points:
        if p.multiplicity >= 4:
            violations.append(
                {
                    "kind": "multiple-point",
                    "multiplicity": p.multiplicity,
                    "point": [_scalar_to_json(c) for c in p.coords],
                    "lines": list(p.lines),
                }
            )
        elif p.multiplicity == 3:
            s = 0
            for i in p.lines:
                s ^= arr.labels[i].code
            if s == 0:
                violations.append(
                    {
                        "kind": "zero-sum-triple",
                        "point": [_scalar_to_json(c) for c in p.coords],
                        "lines": list(p.lines),
                        "labels": [list(arr.labels[i].coords) for i in p.lines],
                    }
                )
    return CampedelliReport(
        passed=not violations, violations=violations, histogram=report.histogram
    )


@dataclass
class ExtensionReport:
    """Label analysis of an 8-line extension of 7-line covering data."""

    sum_zero: bool
    totally_even: bool
    even_type: EvenSetType

    def as_json(self) -> dict:
        out = {
            "sum_zero": self.sum_zero,
            "totally_even": self.totally_even,
            "type": self.even_type.tag.value,
        }
        if self.even_type.witness is not None:
            out["witness_hyperplane"] = list(self.even_type.witness.coords)
        return out


def analyze_extension(arr: LabeledArrangement) -> ExtensionReport:
    """Analyze the (Z/2)^4 labels of an 8-line arrangement: whether they sum
    to zero, whether they form a totally even set, and of which type."""
    if len(arr.lines) != 8:
        raise ValidationError(f"expected 8 lines, got {len(arr.lines)}")
    if len(arr.labels) != 8 or any(lab.k != 4 for lab in arr.labels):
        raise ValidationError("expected 8 labels over (Z/2)^4")
    if len({lab.code for lab in arr.labels}) != 8:
        raise ValidationError(
            "labels must be pairwise distinct",
            labels=[list(lab.coords) for lab in arr.labels],
        )
    total = 0
    for lab in arr.labels:
        total ^= lab.code
    point_set = PointSet.from_points(arr.labels)
    return ExtensionReport(
        sum_zero=(total == 0),
        totally_even=is_totally_even(point_set),
        even_type=classify_type(point_set),
    )


# --- JSON schema -----------------------------------------------------------
#
# {"field": "Q" | "Q(omega)",
#  "lines": [[coeff, coeff, coeff], ...],
#  "labels": [[bit, ...], ...]}          (labels optional)
#
# A coefficient is [[a_num, a_den]] over Q and
# [[a_num, a_den], [b_num, b_den]] over Q(omega); bare integers and
# [num, den] pairs are accepted on input.


def _fraction_from_json(value) -> Fraction:
    if isinstance(value, int):
        return Fraction(value)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(x, int) for x in value)
    ):
        if value[1] == 0:
            raise MalformedInputError(f"zero denominator in {value!r}")
        return Fraction(value[0], value[1])
    raise MalformedInputError(f"cannot parse rational {value!r}")


def _scalar_from_json(value, allow_omega: bool) -> ExactScalar:
    if isinstance(value, int):
        return ExactScalar(value)
    if not isinstance(value, list):
        raise MalformedInputError(f"cannot parse coefficient {value!r}")
    if len(value) == 2 and all(isinstance(x, int) for x in value):
        return ExactScalar(_fraction_from_json(value))
    if len(value) == 1:
        return ExactScalar(_fraction_from_json(value[0]))
    if len(value) == 2:
        if not allow_omega:
            raise MalformedInputError(
                "omega component present but field is Q; use field Q(omega)"
            )
        return ExactScalar(_fraction_from_json(value[0]), _fraction_from_json(value[1]))
    raise MalformedInputError(f"cannot parse coefficient {value!r}")


def _scalar_to_json(s: ExactScalar) -> list:
    out = [[s.a.numerator, s.a.denominator]]
    if s.b != 0:
        out.append([s.b.numerator, s.b.denominator])
    return out


def load_arrangement(data: dict) -> LabeledArrangement:
    """Parse an arrangement from its JSON object form."""
    if not isinstance(data, dict):
        raise MalformedInputError("arrangement must be a JSON object")
    fld = data.get("field", "Q")
    if fld not in ("Q", "Q(omega)"):
        raise MalformedInputError(f"unknown field {fld!r}; use 'Q' or 'Q(omega)'")
    raw_lines = data.get("lines")
    if not isinstance(raw_lines, list) or not raw_lines:
        raise MalformedInputError("arrangement needs a non-empty 'lines' array")
    lines = []
    for raw in raw_lines:
        if not isinstance(raw, list) or len(raw) != 3:
            raise MalformedInputError(f"line must have 3 coefficients, got {raw!r}")
        lines.append(ProjLine(tuple(_scalar_from_json(c, fld == "Q(omega)") for c in raw)))
    labels: list[F2Point] = []
    if data.get("labels") is not None:
        if not isinstance(data["labels"], list):
            raise MalformedInputError("'labels' must be an array of coordinate arrays")
        for raw in data["labels"]:
            if not isinstance(raw, list):
                raise MalformedInputError(f"label must be a coordinate array, got {raw!r}")
            try:
                labels.append(F2Point.from_coords(raw))
            except ValidationError as exc:
                raise MalformedInputError(f"bad label {raw!r}: {exc}") from exc
    return LabeledArrangement(tuple(lines), tuple(labels))


def arrangement_to_json(arr: LabeledArrangement) -> dict:
    fld = "Q" if all(line.is_rational() for line in arr.lines) else "Q(omega)"
    out = {
        "field": fld,
        "lines": [[_scalar_to_json(c) for c in line.coeffs] for line in arr.lines],
    }
    if arr.labels:
        out["labels"] = [list(lab.coords) for lab in arr.labels]
    return out
