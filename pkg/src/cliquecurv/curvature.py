"""Exact curvature on graphs.

Two curvature forms are provided.  ``general_curvature`` works on every
finite simple graph and always sums to the Euler characteristic.  The
Euler form (``euler_form``) is specific to a dimension d and only depends
on the sphere counts V_1..V_{d-2}; it sums to the Euler characteristic on
d-graphs without boundary.  All values are ``fractions.Fraction``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .complex import FVector, TransferReport, f_vector, sphere_profiles, verify_transfer
from .errors import DimensionTooSmall
from .graph import Graph, unit_sphere

__all__ = [
    "coefficient_a",
    "coefficient_e",
    "general_curvature",
    "general_curvature_from_profile",
    "euler_form_coefficients",
    "euler_form",
    "euler_form_from_profile",
    "CurvatureReport",
    "curvature_report",
    "check_gauss_bonnet",
    "GaussBonnetCheck",
    "euler_form_nonzero",
]

Method = Literal["general", "euler-form"]


def coefficient_a(n: int) -> Fraction:
    """a_n = (1/2 - 1/(n+2)) (-1)^n."""
    if n < 1:
        raise ValueError("a_n is defined for n >= 1")
    return (Fraction(1, 2) - Fraction(1, n + 2)) * (-1) ** n


def coefficient_e(d: int) -> Fraction:
    """1 for even d, 0 for odd d."""
    if d < 0:
        raise ValueError("e_d is defined for d >= 0")
    return Fraction(1 + (-1) ** d, 2)


def general_curvature_from_profile(profile: FVector) -> Fraction:
    # K = 1 + sum_{k>=1} (-1)^k V_{k-1} / (k+1); V_j = 0 past the sphere's top dimension
    k_sum = Fraction(1)
    for j, count in enumerate(profile.counts):
        k = j + 1
        k_sum += Fraction((-1) ** k * count, k + 1)
    return k_sum


def general_curvature(g: Graph, p: int) -> Fraction:
    sphere, _ = unit_sphere(g, p)
    return general_curvature_from_profile(f_vector(sphere))


def euler_form_coefficients(d: int) -> tuple[Fraction, ...]:
    """Constant term followed by the multipliers of V_1, ..., V_{d-2}.

    >>> euler_form_coefficients(4)
    (Fraction(1, 1), Fraction(-1, 6), Fraction(1, 10))
    """
    if d < 2:
        raise DimensionTooSmall(f"Euler form needs d >= 2, got {d}")
    if d == 2:
        return (coefficient_e(2), coefficient_a(1))
    coeffs = [coefficient_e(d)]
    coeffs += [coefficient_a(k) for k in range(1, d - 2)]
    coeffs.append(coefficient_a(d - 2) + Fraction(2, d) * coefficient_a(d - 1))
    return tuple(coeffs)


def euler_form_from_profile(profile: FVector, d: int) -> Fraction:
    coeffs = euler_form_coefficients(d)
    value = coeffs[0]
    for k, c in enumerate(coeffs[1:], start=1):
        value += c * profile.count(k)
    return value


def euler_form(g: Graph, p: int, d: int) -> Fraction:
    """Euler curvature form at ``p`` for a graph assumed d-dimensional.

    Sphere counts beyond the sphere's actual dimension read as zero.
    """
    coeffs = euler_form_coefficients(d)
    sphere, _ = unit_sphere(g, p)
    return euler_form_from_profile(f_vector(sphere, cap=len(coeffs) - 1), d)


def euler_form_nonzero(g: Graph, d: int, profiles: list[FVector] | None = None) -> list[tuple[int, Fraction]]:
    """Vertices where the d-dimensional Euler form does not vanish, with the value.

    For odd d the total is zero on valid d-graphs, and on every example
    constructed so far the form is zero pointwise.  Whether that always
    holds is not known; this is the probe for counterexamples.
    """
    if profiles is None:
        profiles = sphere_profiles(g)
    values = ((p, euler_form_from_profile(pr, d)) for p, pr in enumerate(profiles))
    return [(p, k) for p, k in values if k != 0]


@dataclass(frozen=True)
class CurvatureReport:
    method: Method
    dimension_used: int | None
    per_vertex: tuple[Fraction, ...]
    class_multiplicities: dict[Fraction, int]
    total: Fraction
    euler_characteristic: int
    gbc_holds: bool

    @classmethod
    def build(cls, method, dimension_used, per_vertex, chi):
        per_vertex = tuple(per_vertex)
        classes = Counter(per_vertex)
        total = sum(per_vertex, Fraction(0))
        return cls(
            method=method,
            dimension_used=dimension_used,
            per_vertex=per_vertex,
            class_multiplicities=dict(sorted(classes.items())),
            total=total,
            euler_characteristic=chi,
            gbc_holds=total == chi,
        )


def curvature_report(
    g: Graph,
    method: Method = "general",
    d: int | None = None,
    profiles: list[FVector] | None = None,
    workers: int | None = None,
) -> CurvatureReport:
    if method not in ("general", "euler-form"):
        raise ValueError(f"unknown curvature method {method!r}")
    if method == "euler-form" and d is None:
        raise ValueError("method 'euler-form' requires a dimension d")
    if method == "euler-form":
        euler_form_coefficients(d)  # raises DimensionTooSmall early
    if profiles is None:
        profiles = sphere_profiles(g, workers=workers)
    chi = f_vector(g).euler_characteristic
    if method == "general":
        values = [general_curvature_from_profile(pr) for pr in profiles]
        return CurvatureReport.build("general", None, values, chi)
    values = [euler_form_from_profile(pr, d) for pr in profiles]
    return CurvatureReport.build("euler-form", d, values, chi)


@dataclass(frozen=True)
class GaussBonnetCheck:
    holds: bool
    report: CurvatureReport
    transfer: TransferReport

    def __bool__(self) -> bool:
        return self.holds


def check_gauss_bonnet(g: Graph, workers: int | None = None) -> GaussBonnetCheck:
    """Sum the general curvature and compare with the Euler characteristic.

    A failure can only come from a counting bug; ``transfer`` then names
    the simplex dimension whose counts disagree.
    """
    profiles = sphere_profiles(g, workers=workers)
    report = curvature_report(g, "general", profiles=profiles)
    return GaussBonnetCheck(report.gbc_holds, report, verify_transfer(g, profiles))
