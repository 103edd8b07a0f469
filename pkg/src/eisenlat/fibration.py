"""Dictionary between root multiplicities of p12(t) in y^2 = x^3 + p12(t)
and Kodaira fibers, fixed-locus types and the genus of the double section.

A configuration is just the multiset of multiplicities of the multiple
roots; the polynomial itself never appears.  The translation is

    simple -> II,  double -> IV,  4-uple -> IV*,  5-uple -> II*

with n = #doubles + 3 #IV* + 4 #II* isolated fixed points and
k = 2 + #IV* + 2 #II* fixed curves (section + double section + one curve in
each IV* fiber + two in each II* fiber).  Triple and >= 6-fold roots fall
outside the classified families and are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classification import is_admissible
from .errors import DegenerateSection, NegativeGenus, OutsideFamily, UnsupportedType

DEGREE = 12

KODAIRA_EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}

_MULT_TO_FIBER = {1: "II", 2: "IV", 4: "IV*", 5: "II*"}

# isolated fixed points / fixed curves contributed per fiber of each type
_FIBER_POINTS = {"IV": 1, "IV*": 3, "II*": 4, "II": 0}
_FIBER_CURVES = {"IV*": 1, "II*": 2, "II": 0, "IV": 0}


@dataclass(frozen=True)
class FiberConfig:
    """Multiplicities of the multiple roots (each >= 2, total <= 12)."""

    multiplicities: tuple

    def __init__(self, multiplicities):
        mults = tuple(sorted((int(m) for m in multiplicities), reverse=True))
        if any(m < 2 for m in mults):
            raise ValueError("listed multiplicities must be >= 2")
        if sum(mults) > DEGREE:
            raise ValueError(f"multiplicities sum to {sum(mults)} > {DEGREE}")
        object.__setattr__(self, "multiplicities", mults)

    @property
    def simple_roots(self) -> int:
        return DEGREE - sum(self.multiplicities)


@dataclass(frozen=True)
class FibrationReport:
    config: FiberConfig
    fibers: tuple  # ((kodaira type, count), ...) including the II fibers
    n: int
    k: int
    genus: int
    euler_total: int
    valid: bool = True


def kodaira_from_multiplicity(m: int) -> str:
    """Fiber type over a root of p12 of multiplicity m."""
    if m < 1:
        raise ValueError("multiplicity must be positive")
    if m not in _MULT_TO_FIBER:
        raise OutsideFamily(
            f"multiplicity {m} does not occur in the classified Weierstrass families"
        )
    return _MULT_TO_FIBER[m]


def euler_number(fiber_type: str, n_param=None) -> int:
    if fiber_type in KODAIRA_EULER:
        return KODAIRA_EULER[fiber_type]
    if fiber_type == "I_n":
        return int(n_param)
    if fiber_type == "I*_n":
        return int(n_param) + 6
    raise UnsupportedType(fiber_type)


def fixed_curves_in_fiber(fiber_type: str, n_param=None) -> int:
    """Number of pointwise fixed curves in a singular fiber, from the fiber
    table: IV and IV* fix one component, III* three, II* two, I_n fixes
    F_1, F_4, ..., F_{n-2} and I*_{n-5} fixes F_3, F_6, ..., F_{n-2}."""
    if fiber_type == "IV":
        return 1
    if fiber_type == "IV*":
        return 1
    if fiber_type == "III*":
        return 3
    if fiber_type == "II*":
        return 2
    if fiber_type == "I_n":
        n = int(n_param or 0)
        if n not in (3, 6, 9, 12, 15, 18):
            raise UnsupportedType(f"I_{n} carries no fixed curve here")
        return n // 3
    if fiber_type == "I*_n":
        n = int(n_param or 0)  # the fiber is I*_{n-5}
        if n not in (5, 8, 11, 14, 17):
            raise UnsupportedType(f"I*_{n - 5} carries no fixed curve here")
        return (n - 2) // 3
    raise UnsupportedType(fiber_type)


def genus_double_section(cfg: FiberConfig) -> int:
    """Genus of the smooth model of y^2 = p12(t): branch points are the
    odd-multiplicity roots, and degree 12 leaves infinity unbranched."""
    branch = cfg.simple_roots + sum(1 for m in cfg.multiplicities if m % 2)
    if branch < 2:
        raise NegativeGenus(f"only {branch} branch points")
    return branch // 2 - 1


def analyze_config(cfg: FiberConfig) -> FibrationReport:
    """Classify a multiplicity profile; raises OutsideFamily for profiles the
    dictionary does not cover and DegenerateSection when the derived type
    falls outside the fixed-locus table (reducible double section)."""
    for m in cfg.multiplicities:
        kodaira_from_multiplicity(m)
    big = sum(1 for m in cfg.multiplicities if m >= 4)
    if big > 2:
        raise OutsideFamily("more than two 4/5-uple roots would force k > 6")

    doubles = sum(1 for m in cfg.multiplicities if m == 2)
    quads = sum(1 for m in cfg.multiplicities if m == 4)
    quints = sum(1 for m in cfg.multiplicities if m == 5)
    n = doubles + 3 * quads + 4 * quints
    k = 2 + quads + 2 * quints
    try:
        genus = genus_double_section(cfg)
    except NegativeGenus as exc:
        raise DegenerateSection(
            f"profile {cfg.multiplicities} gives no irreducible double section: {exc}"
        ) from None
    if not is_admissible(n, k) or genus != 3 + k - n:
        raise DegenerateSection(
            f"profile {cfg.multiplicities} derives (n, k) = ({n}, {k}), genus {genus}, "
            "outside the fixed-locus table"
        )

    fiber_counts = []
    if cfg.simple_roots:
        fiber_counts.append(("II", cfg.simple_roots))
    for ftype, count in (("IV", doubles), ("IV*", quads), ("II*", quints)):
        if count:
            fiber_counts.append((ftype, count))
    euler = sum(KODAIRA_EULER[t] * c for t, c in fiber_counts)
    return FibrationReport(cfg, tuple(fiber_counts), n, k, genus, euler)


def fixed_curve_count(report: FibrationReport) -> int:
    """Section + irreducible double section + fixed curves inside fibers."""
    return 2 + sum(fixed_curves_in_fiber(t) * c for t, c in report.fibers if t in ("IV*", "II*"))


def enumerate_valid_configs():
    """Every multiplicity profile over {2, 4, 5} that the analyzer accepts,
    sorted by (n, k, profile)."""
    out = []
    for quints in range(3):
        for quads in range(3):
            if quads + quints > 2:
                continue
            room = DEGREE - 4 * quads - 5 * quints
            if room < 0:
                continue
            for doubles in range(room // 2 + 1):
                mults = (5,) * quints + (4,) * quads + (2,) * doubles
                try:
                    report = analyze_config(FiberConfig(mults))
                except (OutsideFamily, DegenerateSection):
                    continue
                out.append(report)
    out.sort(key=lambda r: (r.n, r.k, r.config.multiplicities))
    return out
