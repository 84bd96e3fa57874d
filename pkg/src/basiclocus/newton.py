"""Newton points, Kottwitz components, straightness and the order on Newton classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .affweyl import AffElement, format_word
from .rootdata import DiagramAuto, RootDatum, dominant_integral, identity_auto


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class NewtonPoint:
    datum: RootDatum
    nu: tuple[Fraction, ...]        # dominant, in lattice coordinates
    kappa: tuple                    # key of the Omega-component
    pairing: Fraction               # <nu, 2 rho>

    @property
    def coords(self) -> tuple[Fraction, ...]:
        """nu in reporting coordinates (eps for B/C/D, first n entries in GL, omega otherwise)."""
        return self.datum.to_output(self.nu)

    @property
    def is_central(self) -> bool:
        return all(sum(f * x for f, x in zip(fn, self.nu)) == 0 for fn in self.datum.simple_fns)

    def key(self) -> tuple:
        return (self.nu, self.kappa)

    def to_json(self) -> dict:
        return {
            "system": self.datum.output_system,
            "nu": [frac_str(x) for x in self.coords],
            "pairing_2rho": frac_str(self.pairing),
            "central": self.is_central,
        }

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


@dataclass(frozen=True)
class NewtonClass:
    point: NewtonPoint
    representative: AffElement | None = None

    @property
    def basic(self) -> bool:
        return self.point.is_central

    @property
    def rank(self) -> Fraction:
        return self.point.pairing


class NewtonError(RuntimeError):
    pass


def sigma_power_product(w: AffElement, sigma: DiagramAuto) -> AffElement:
    """(w sigma)^o = w sigma(w) ... sigma^{o-1}(w) where o is the order of sigma."""
    o = sigma.order
    out = w
    cur = w
    for _ in range(o - 1):
        cur = sigma.apply(cur)
        out = out * cur
    return out


def newton_point(w: AffElement, sigma: DiagramAuto | None = None) -> NewtonPoint:
    datum = w.datum
    if sigma is None:
        sigma = identity_auto(datum)
    o = sigma.order
    p = sigma_power_product(w, sigma)
    x = p
    j = 1
    limit = 100000
    while not x.is_finite_part_identity:
        x = x * p
        j += 1
        if j > limit:
            raise NewtonError("finite part of (w sigma)^n never becomes trivial")
    n = o * j
    # dominance is scale invariant: dominantize n*nu in integers, divide once
    nu = tuple(Fraction(v, n) for v in dominant_integral(datum, x.lam))
    return NewtonPoint(datum, nu, w.omega_part.key, datum.pair_2rho(nu))


def is_sigma_straight(w: AffElement, sigma: DiagramAuto | None = None, point: NewtonPoint | None = None) -> bool:
    if point is None:
        point = newton_point(w, sigma)
    return Fraction(w.length) == point.pairing


def dominance_leq(a: NewtonPoint, b: NewtonPoint) -> bool:
    """a <= b: equal kappa and b - a a non-negative rational combination of simple coroots."""
    if a.kappa != b.kappa:
        return False
    diff = tuple(y - x for x, y in zip(a.nu, b.nu))
    coeffs = a.datum.coroot_coordinates(diff)
    return coeffs is not None and all(c >= 0 for c in coeffs)


@dataclass
class NewtonOrderReport:
    classes: list[NewtonClass]
    relations: list[tuple[int, int]]        # (i, j) with classes[i] < classes[j]
    hasse: list[tuple[int, int]]
    almost_linear: bool
    violations: list[tuple[int, int]]

    def to_json(self) -> dict:
        return {
            "classes": [c.point.to_json() for c in self.classes],
            "hasse": [list(e) for e in self.hasse],
            "almost_linear": self.almost_linear,
            "violations": [list(e) for e in self.violations],
        }


def newton_order(classes) -> NewtonOrderReport:
    """Dominance order on distinct classes and the almost-linearity check (x < y iff rank x < rank y)."""
    uniq: dict = {}
    for c in classes:
        uniq.setdefault(c.point.key(), c)
    cl = sorted(uniq.values(), key=lambda c: (c.rank, [str(x) for x in c.point.coords]))
    n = len(cl)
    less = set()
    for i, j in itertools.permutations(range(n), 2):
        if dominance_leq(cl[i].point, cl[j].point):
            less.add((i, j))
    hasse = sorted((i, j) for (i, j) in less
                   if not any((i, k) in less and (k, j) in less for k in range(n)))
    violations = []
    for i, j in itertools.permutations(range(n), 2):
        if ((i, j) in less) != (cl[i].rank < cl[j].rank):
            violations.append((i, j))
    return NewtonOrderReport(cl, sorted(less), hasse, not violations, violations)


def describe(w: AffElement, sigma: DiagramAuto | None = None) -> dict:
    p = newton_point(w, sigma)
    return {"word": format_word(w), "length": w.length, **p.to_json(),
            "straight": is_sigma_straight(w, sigma, p)}
