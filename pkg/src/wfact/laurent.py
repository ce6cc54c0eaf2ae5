"""Exact Laurent polynomials in X = e^z and the bridge to length-count sequences.

A factorization-count series Sum_N count(N) z^N/N! that happens to be a finite
Laurent polynomial in X = e^z is stored here exactly, with Fraction
coefficients.  ``egf_prefix`` expands back to counts; ``laurent_from_egf``
reconstructs the Laurent form from enough counts via an exact Vandermonde
solve.  ``extract_phi`` peels off the structural factors
(1/order) * (X-1)^ell * X^(-hyperplanes) around the palindromic-ish core
polynomial, and ``find_roots`` locates that core's complex roots numerically
(the single deliberately inexact operation; it only feeds plots).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "LaurentPoly",
    "laurent_from_egf",
    "lowest_order",
    "extract_phi",
    "find_roots",
    "RootFindingError",
]

Rational = Fraction


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected an integer or Fraction coefficient, got {type(v).__name__}")


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable Laurent polynomial with dense Fraction coefficients.

    ``coeffs[i]`` is the coefficient of X**(min_deg + i).  Canonical form:
    both end coefficients are nonzero; the zero polynomial is stored as
    ``min_deg = 0`` with an empty coefficient tuple.
    """

    min_deg: int
    coeffs: tuple[Fraction, ...]

    # -- construction ------------------------------------------------------

    def __init__(self, min_deg: int, coeffs: Iterable) -> None:
        cs = [_as_fraction(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_deg", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_deg", min_deg + lo)
            object.__setattr__(self, "coeffs", tuple(cs[lo:hi]))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(0, (Fraction(1),))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "LaurentPoly":
        return cls(degree, (coeff,))

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_deg(self) -> int:
        """Degree of the highest nonzero term (0 for the zero polynomial)."""
        if not self.coeffs:
            return 0
        return self.min_deg + len(self.coeffs) - 1

    def coefficient(self, degree: int) -> Fraction:
        i = degree - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def support(self) -> list[int]:
        return [self.min_deg + i for i, c in enumerate(self.coeffs) if c != 0]

    def is_palindromic(self) -> bool:
        """True if the coefficient sequence reads the same in both directions."""
        return self.coeffs == self.coeffs[::-1]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg, other.max_deg)
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_deg + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_deg + i - lo] += c
        return LaurentPoly(lo, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_deg, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LaurentPoly(self.min_deg + other.min_deg, out)

    __rmul__ = __mul__

    def scale(self, factor) -> "LaurentPoly":
        f = _as_fraction(factor)
        if f == 0:
            return LaurentPoly.zero()
        return LaurentPoly(self.min_deg, tuple(c * f for c in self.coeffs))

    def substitute_power(self, c: int) -> "LaurentPoly":
        """X -> X**c (equivalently z -> c*z in the exponential form); c >= 1."""
        if not isinstance(c, int) or c < 1:
            raise ValueError(f"substitution power must be a positive integer, got {c!r}")
        if c == 1 or self.is_zero():
            return self
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * c + 1)
        for i, coeff in enumerate(self.coeffs):
            out[i * c] = coeff
        return LaurentPoly(self.min_deg * c, out)

    # -- evaluation / expansion -------------------------------------------

    def evaluate(self, x: Fraction) -> Fraction:
        """Exact value at a nonzero rational point (or any point if min_deg >= 0)."""
        x = _as_fraction(x)
        if x == 0:
            if self.min_deg < 0:
                raise ZeroDivisionError("evaluating negative powers at 0")
            return self.coefficient(0)
        # Horner on the polynomial part, then the monomial shift.
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x**self.min_deg

    def egf_prefix(self, n: int) -> list[Fraction]:
        """Counts [c_0, ..., c_n]: entry j is Sum_k coeff_k * k**j (0**0 = 1)."""
        if n < 0:
            raise ValueError("prefix length must be nonnegative")
        out = []
        terms = [(self.min_deg + i, c) for i, c in enumerate(self.coeffs) if c != 0]
        for j in range(n + 1):
            out.append(sum((c * k**j for k, c in terms), start=Fraction(0)))
        return out

    # -- division helpers --------------------------------------------------

    def divide_by_x_minus_one(self) -> "LaurentPoly":
        """Exact quotient by (X - 1); raises ValueError if 1 is not a root."""
        if self.is_zero():
            return self
        # Write self = X**min_deg * P(X); divide the polynomial part.
        p = self.coeffs
        q = [Fraction(0)] * (len(p) - 1)
        carry = Fraction(0)
        # P = (X-1) Q  <=>  p_i = q_{i-1} - q_i  (q_{-1} = q_{deg} = 0)
        for i in range(len(p) - 1):
            q[i] = carry - p[i]
            carry = q[i]
        if p[-1] != carry:
            raise ValueError("polynomial is not divisible by (X - 1)")
        return LaurentPoly(self.min_deg, q)

    # -- misc --------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            d = self.min_deg + i
            if d == 0:
                parts.append(f"{c}")
            elif d == 1:
                parts.append(f"{c}*X" if c != 1 else "X")
            else:
                parts.append(f"{c}*X^{d}" if c != 1 else f"X^{d}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "min_deg": self.min_deg,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPoly":
        return cls(int(data["min_deg"]), [Fraction(s) for s in data["coeffs"]])


# ---------------------------------------------------------------------------
# Count-sequence reconstruction
# ---------------------------------------------------------------------------


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square system exactly by Gaussian elimination over Fraction."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system in exact solve")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def laurent_from_egf(prefix: Sequence, min_deg: int, max_deg: int) -> LaurentPoly:
    """The unique Laurent polynomial on [min_deg, max_deg] with these counts.

    ``prefix[j]`` must be the coefficient of z**j/j!.  The first
    ``max_deg - min_deg + 1`` entries determine the polynomial through an
    exact Vandermonde solve on the integer nodes min_deg..max_deg; any
    surplus entries are verified and a mismatch raises ValueError (meaning
    the window or the counts are wrong).
    """
    if max_deg < min_deg:
        raise ValueError("empty degree window")
    width = max_deg - min_deg + 1
    vals = [_as_fraction(v) for v in prefix]
    if len(vals) < width:
        raise ValueError(f"need at least {width} prefix entries, got {len(vals)}")
    nodes = list(range(min_deg, max_deg + 1))
    matrix = [[Fraction(k) ** j for k in nodes] for j in range(width)]
    coeffs = _solve_exact(matrix, vals[:width])
    poly = LaurentPoly(min_deg, coeffs)
    check = poly.egf_prefix(len(vals) - 1)
    for j in range(width, len(vals)):
        if check[j] != vals[j]:
            raise ValueError(
                f"count prefix inconsistent with window [{min_deg}, {max_deg}] "
                f"at index {j}: expected {vals[j]}, reconstruction gives {check[j]}"
            )
    return poly


def lowest_order(poly: LaurentPoly) -> tuple[int, Fraction]:
    """(s, c): the z-expansion of ``poly`` starts c * z**s / s!.

    s is the multiplicity of the root X = 1 (repeated exact division) and c
    is the first nonzero count — s! times the value of poly/(X-1)**s at 1.
    """
    if poly.is_zero():
        raise ValueError("lowest_order of the zero polynomial is undefined")
    s = 0
    current = poly
    while True:
        try:
            nxt = current.divide_by_x_minus_one()
        except ValueError:
            break
        s += 1
        current = nxt
    value = current.evaluate(Fraction(1))
    return s, value * math.factorial(s)


def extract_phi(
    poly: LaurentPoly, group_order: int, num_hyperplanes: int
) -> tuple[LaurentPoly, int]:
    """Peel the structural factors off a full-factorization series.

    Writes ``poly = (1/group_order) * phi(X) * (X-1)**ell / X**num_hyperplanes``
    with ell maximal, and returns (phi, ell).  phi comes out with
    min_deg >= 0; a failure of exact divisibility (or a negative-degree phi)
    raises ValueError, signalling the input is not a full-factorization
    series for the claimed group data.
    """
    if poly.is_zero():
        raise ValueError("cannot extract the core polynomial of the zero series")
    ell = 0
    current = poly
    while True:
        try:
            nxt = current.divide_by_x_minus_one()
        except ValueError:
            break
        ell += 1
        current = nxt
    phi = current.scale(group_order) * LaurentPoly.monomial(num_hyperplanes)
    if phi.min_deg < 0:
        raise ValueError(
            "series has support below the stated hyperplane count "
            f"(min_deg {phi.min_deg} after shifting by {num_hyperplanes})"
        )
    return phi, ell


# ---------------------------------------------------------------------------
# Root finding (inexact; feeds plots only)
# ---------------------------------------------------------------------------


class RootFindingError(ArithmeticError):
    """Raised when the simultaneous iteration fails to meet tolerance."""

    def __init__(self, message: str, best: list[complex]):
        super().__init__(message)
        self.best = best


def _initial_radius(coeffs: np.ndarray) -> float:
    """An inclusion radius for all roots: min(Cauchy bound, Fujiwara bound)."""
    deg = len(coeffs) - 1
    lead = abs(coeffs[-1])
    ratios = np.abs(coeffs[:-1]) / lead
    cauchy = 1.0 + float(ratios.max())
    fujiwara = 2.0 * max(
        float(ratios[deg - i]) ** (1.0 / i) for i in range(1, deg + 1)
    )
    return max(min(cauchy, fujiwara), 1e-12)


def _residuals(z: np.ndarray, asc: np.ndarray, rev: np.ndarray) -> np.ndarray:
    """Relative backward error |p(z)| / sum_i |a_i| |z|**i.

    This is the scale a double-precision Horner evaluation can actually
    resolve: at an exact root the computed |p(z)| is roundoff of size
    ~eps * sum_i |a_i||z|**i, so the ratio bottoms out near eps regardless
    of the coefficient magnitudes, and a point far from every root scores
    large at every radius.  Overflow-safe for |z| > 1 via the reversal
    p(z) = z**deg * q(1/z), under which the ratio is |q(w)| / sum |a~_i||w|**i.
    """
    polyval = np.polynomial.polynomial.polyval
    out = np.empty(len(z))
    small = np.abs(z) <= 1.0
    if small.any():
        zs = z[small]
        out[small] = np.abs(polyval(zs, asc)) / polyval(np.abs(zs), np.abs(asc))
    if (~small).any():
        w = 1.0 / z[~small]
        out[~small] = np.abs(polyval(w, rev)) / polyval(np.abs(w), np.abs(rev))
    return out


def _exact_newton(cs, z: complex, steps: int = 3) -> complex:
    """Newton corrections with p and p' evaluated in exact arithmetic.

    A double is a dyadic rational, so z = (A + B*i) / D with integers A, B
    and a power-of-two D; p(z) * D**deg is then an all-integer Horner sum,
    giving a noise-free Newton step.  The iterate is rounded back to a
    double after each step, so the only residual error is float rounding;
    stops early once the step is at rounding level.
    """
    denoms = [Fraction(c).denominator for c in cs]
    common = 1
    for d in denoms:
        common = common // math.gcd(common, d) * d
    ics = [int(Fraction(c) * common) for c in cs]
    dics = [i * c for i, c in enumerate(ics)][1:]
    for _ in range(steps):
        ar, dr = z.real.as_integer_ratio()
        ai, di = z.imag.as_integer_ratio()
        D = max(dr, di)  # both denominators are powers of two
        A = ar * (D // dr)
        B = ai * (D // di)
        pr, pi = _int_horner(ics, A, B, D)
        qr, qi = _int_horner(dics, A, B, D)
        # p/p' = (pr + pi*i) / ((qr + qi*i) * D)  after the D**deg scalings
        qr *= D
        qi *= D
        den = qr * qr + qi * qi
        if den == 0:
            return z
        step = complex(Fraction(pr * qr + pi * qi, den), Fraction(pi * qr - pr * qi, den))
        z -= step
        if abs(step) <= 1e-14 * (1.0 + abs(z)):
            break
    return z


def _int_horner(ics: list, A: int, B: int, D: int) -> tuple[int, int]:
    """p((A + B*i) / D) * D**deg for integer coefficients, as (re, im)."""
    acc_re, acc_im = ics[-1], 0
    scale = 1
    for c in reversed(ics[:-1]):
        scale *= D
        acc_re, acc_im = acc_re * A - acc_im * B + c * scale, acc_re * B + acc_im * A
    return acc_re, acc_im


def find_roots(
    poly: LaurentPoly, *, tol: float = 1e-10, max_iter: int = 500
) -> list[complex]:
    """All complex roots of an ordinary polynomial (min_deg >= 0), degree >= 1.

    Aberth-Ehrlich simultaneous iteration on double-precision coefficients,
    started on a circle bounded by min(Cauchy, Fujiwara).  Converged when
    every relative backward error |p(r)| / sum_i |a_i||r|**i is below
    ``tol``, followed by polishing sweeps and an exact-arithmetic Newton
    certification of any still-suspect root; failure to converge within
    ``max_iter`` sweeps raises RootFindingError carrying the best iterate.
    Results are sorted by (real, imag).
    """
    if poly.min_deg < 0:
        raise ValueError("find_roots expects an ordinary polynomial (min_deg >= 0)")
    # Roots of the monomial-shifted polynomial part: X = 0 with multiplicity
    # min_deg, plus the roots of the coefficient vector.
    zero_roots = [0j] * poly.min_deg
    cs = poly.coeffs
    deg = len(cs) - 1
    if deg < 1:
        if not zero_roots:
            raise ValueError("find_roots requires degree >= 1")
        return zero_roots
    asc = np.array([float(c) for c in cs], dtype=np.float64)
    # Scale to unit maximum coefficient magnitude; the roots and the
    # relative residual are unchanged, the float range headroom improves.
    asc /= np.abs(asc).max()
    rev = asc[::-1].copy()
    d_asc = asc[1:] * np.arange(1, deg + 1, dtype=np.float64)
    d_rev = rev[1:] * np.arange(1, deg + 1, dtype=np.float64)

    radius = _initial_radius(asc)
    angles = 2.0 * np.pi * np.arange(deg) / deg + 0.45
    z = radius * np.exp(1j * angles)

    def newton_ratio(z: np.ndarray) -> np.ndarray:
        # Newton ratio p/p', overflow-safe for |z| > 1 via w = 1/z:
        #   p'(z)/p(z) = deg/z - w**2 * q'(w)/q(w)   with q = reversed coeffs
        newton = np.empty_like(z)
        small = np.abs(z) <= 1.0
        if small.any():
            zs = z[small]
            p = np.polynomial.polynomial.polyval(zs, asc)
            dp = np.polynomial.polynomial.polyval(zs, d_asc)
            dp = np.where(dp == 0, 1e-300, dp)
            newton[small] = p / dp
        if (~small).any():
            zl = z[~small]
            w = 1.0 / zl
            q = np.polynomial.polynomial.polyval(w, rev)
            dq = np.polynomial.polynomial.polyval(w, d_rev)
            q = np.where(q == 0, 1e-300, q)
            ratio = deg / zl - w * w * (dq / q)
            ratio = np.where(ratio == 0, 1e-300, ratio)
            newton[~small] = 1.0 / ratio
        return newton

    # After the residual drops below tolerance, run extra sweeps: the
    # residual certifies backward error, but an ill-conditioned simple root
    # can still sit noticeably off when the test first passes.  The extra
    # sweeps use the same repelled step as the main loop (plain Newton could
    # collapse two iterates onto one root) and count against the budget.
    polish_left = 15
    for _ in range(max_iter):
        res = _residuals(z, asc, rev)
        if float(res.max()) < tol:
            if polish_left == 0:
                break
            polish_left -= 1
        newton = newton_ratio(z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        repulsion = (1.0 / diff).sum(axis=1)
        denom = 1.0 - newton * repulsion
        denom = np.where(np.abs(denom) < 1e-300, 1.0, denom)
        step = newton / denom
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
    res = _residuals(z, asc, rev)
    if float(res.max()) < tol:
        # Certification pass: double-precision evaluation noise caps the
        # attainable accuracy of a root with condition number kappa at about
        # eps * kappa, which for the largest inputs is worse than the root
        # spacing downstream consumers rely on.  Roots whose Newton ratio is
        # still above rounding level get a few Newton corrections evaluated
        # in exact rational arithmetic, which is noise-free and lands on the
        # true root to within float rounding.
        suspect = np.abs(newton_ratio(z)) > 1e-12 * (1.0 + np.abs(z))
        if suspect.any():
            z = z.copy()
            for i in np.nonzero(suspect)[0]:
                z[i] = _exact_newton(cs, complex(z[i]))
        res = _residuals(z, asc, rev)
    roots = zero_roots + [complex(v) for v in z]
    if float(res.max()) >= tol:
        raise RootFindingError(
            f"root finding did not reach residual {tol} within {max_iter} "
            f"iterations (worst residual {float(res.max()):.3e})",
            sorted(roots, key=lambda r: (r.real, r.imag)),
        )
    return sorted(roots, key=lambda r: (r.real, r.imag))
