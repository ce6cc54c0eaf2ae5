"""Full reflection factorization series for G(m,p,n), with lengths and counts.

The headline pipeline: the full-factorization series of any element factors
into a cyclic-group series (driven by the element's total color) times a
Möbius-weighted combination of symmetric-group full series in rescaled
arguments (driven by the gcd d of the cycle colors with p).  From the series
one reads the minimum full factorization length and the count of
minimum-length factorizations; both also have direct closed forms (the
four-case length formula and the Hurwitz-number leading coefficients), which
are computed here from cycle data alone so series-vs-formula comparisons are
genuine two-route checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .cyclic import cyclic_element_order, cyclic_full_series
from .groups import CycleData, Element, GroupParams, cycle_data, project, validate_element, weight
from .hurwitz import hurwitz_h0, hurwitz_h1
from .laurent import LaurentPoly, extract_phi
from .numtheory import divisors, euler_phi, jordan_j2, moebius
from .symmetric import full_series_sn_type

__all__ = [
    "series_ppn",
    "series_full",
    "series_full_factored",
    "full_length",
    "lead_coeff",
    "lead_from_phi",
    "series_window",
    "phi_data",
]


def series_window(params: GroupParams) -> tuple[int, int]:
    """Laurent support window of any full series: [-#A, #R]."""
    return (-params.num_hyperplanes, params.num_reflections)


def _moebius_sum(p_like: int, n: int, cd: CycleData, scale_base: int) -> LaurentPoly:
    """Sum over r | d of moebius(r) r^(n+k-2) S_lambda(X -> X^(scale_base/r))."""
    acc = LaurentPoly.zero()
    base_series = full_series_sn_type(cd.partition)
    for r in divisors(cd.d):
        mu = moebius(r)
        if mu == 0:
            continue
        term = base_series.substitute_power(scale_base // r)
        acc = acc + term.scale(mu * r ** (n + cd.k - 2))
    return acc


def series_ppn(p: int, n: int, cd: CycleData) -> LaurentPoly:
    """Full series in G(p,p,n) for an element with the given cycle data.

    (1/p^(n-1)) * Sum_{r | d} moebius(r) r^(n+k-2) S_lambda(X -> X^(p/r)),
    where S_lambda is the symmetric-group full series of the underlying
    cycle type.  The n = 1 group is trivial (empty reflection set), so its
    series is 1 regardless of the formula's degenerate value.
    """
    if sum(cd.lengths) != n:
        raise ValueError(f"cycle lengths {cd.lengths} do not sum to n = {n}")
    if p % cd.d != 0:
        raise ValueError(f"cycle-color gcd d = {cd.d} must divide p = {p}")
    if n == 1:
        return LaurentPoly.one()
    return _moebius_sum(p, n, cd, p).scale(Fraction(1, p ** (n - 1)))


def _cyclic_factor(params: GroupParams, g: Element) -> LaurentPoly:
    """The rank-1 factor: full series of the color's image in G(m,p,1)."""
    order = cyclic_element_order(params.m, params.p, weight(g, params))
    return cyclic_full_series(params.m // params.p, order)


def series_full(params: GroupParams, g: Element) -> LaurentPoly:
    """Full-factorization series of g in G(m,p,n) as an exact Laurent polynomial.

    (1/m^(n-1)) * cyclic_factor(z -> n z) *
    Sum_{r | d} moebius(r) r^(n+k-2) S_lambda(z -> (m/r) z).
    For p = m the cyclic factor is the trivial series 1; for n = 1 the whole
    group is cyclic and the series is exactly the cyclic factor.
    """
    validate_element(g, params)
    n, m = params.n, params.m
    if n == 1:
        return _cyclic_factor(params, g)
    cd = cycle_data(g, params)
    body = _moebius_sum(params.p, n, cd, m)
    cyc = _cyclic_factor(params, g).substitute_power(n)
    return (cyc * body).scale(Fraction(1, m ** (n - 1)))


def series_full_factored(params: GroupParams, g: Element) -> LaurentPoly:
    """Two-stage route: project to G(p,p,n), rescale, multiply the cyclic factor.

    (1/(m/p)^(n-1)) * series_ppn(p, n, projected cycle data)(z -> (m/p) z)
                    * cyclic_factor(z -> n z).
    Defined for p < m; agrees with series_full as an identity of Laurent
    polynomials.
    """
    validate_element(g, params)
    if params.p >= params.m:
        raise ValueError("the factored route applies to p < m")
    n, m, p = params.n, params.m, params.p
    ppn_params = GroupParams(p, p, n)
    projected = project(g, params, p)
    cd = cycle_data(projected, ppn_params)
    inner = series_ppn(p, n, cd).substitute_power(m // p)
    cyc = _cyclic_factor(params, g).substitute_power(n)
    return (inner * cyc).scale(Fraction(1, (m // p) ** (n - 1)))


def full_length(params: GroupParams, g: Element) -> int:
    """Minimum length of a full reflection factorization of g.

    Case split on (m = p), d, a from the cycle data:
    m = p:  n+k-2 if d = 1, else n+k;
    m != p: n+k-1 (a=1, d=1), n+k (a!=1, d=1), n+k+1 (a=1, d!=1),
            n+k+2 (a!=1, d!=1).
    """
    validate_element(g, params)
    cd = cycle_data(g, params)
    n, k = params.n, cd.k
    if params.m == params.p:
        return n + k - 2 if cd.d == 1 else n + k
    if cd.d == 1:
        return n + k - 1 if cd.a == 1 else n + k
    return n + k + 1 if cd.a == 1 else n + k + 2


def lead_coeff(params: GroupParams, g: Element) -> Fraction:
    """Count of minimum-length full factorizations of g, by the closed forms.

    Hurwitz numbers of the underlying cycle type scaled by explicit factors
    of m, n, k, Euler phi and the second Jordan totient; the case split
    mirrors full_length.  Exact and asserted integral.
    """
    validate_element(g, params)
    cd = cycle_data(g, params)
    n, m, p, k = params.n, params.m, params.p, cd.k
    shape = cd.partition
    if m == p:
        if cd.d == 1:
            value = Fraction(m ** (k - 1)) * hurwitz_h0(shape)
        else:
            value = Fraction(m ** (k + 1) * jordan_j2(cd.d), cd.d**2) * hurwitz_h1(shape)
    elif cd.d == 1:
        if cd.a == 1:
            value = Fraction(n * (n + k - 1) * m ** (k - 1)) * hurwitz_h0(shape)
        else:
            value = (
                Fraction(n * n * (n + k) * (n + k - 1) * m**k, 2)
                * Fraction(euler_phi(cd.a), p * cd.a)
                * hurwitz_h0(shape)
            )
    else:
        jfactor = Fraction(jordan_j2(cd.d), cd.d**2)
        if cd.a == 1:
            value = Fraction(n * (n + k + 1) * m ** (k + 1)) * jfactor * hurwitz_h1(shape)
        else:
            value = (
                Fraction(n * n * (n + k + 2) * (n + k + 1) * m ** (k + 2), 2)
                * Fraction(euler_phi(cd.a), p * cd.a)
                * jfactor
                * hurwitz_h1(shape)
            )
    assert value.denominator == 1, f"leading count non-integral for {g}: {value}"
    return value


def lead_from_phi(phi: LaurentPoly, group_order: int, ell: int) -> Fraction:
    """Minimum-length count from the core polynomial: phi(1) * ell! / order."""
    if group_order < 1 or ell < 0:
        raise ValueError("need a positive group order and nonnegative ell")
    return phi.evaluate(Fraction(1)) * factorial(ell) / group_order


def phi_data(params: GroupParams, g: Element) -> tuple[LaurentPoly, int, LaurentPoly]:
    """(phi, ell, series): core polynomial and root-1 multiplicity of g's series."""
    series = series_full(params, g)
    phi, ell = extract_phi(series, params.order, params.num_hyperplanes)
    return phi, ell, series
