"""Bundled exact fixtures.

Two kinds of frozen reference data live here:

* ``load_phi_fixtures`` reads the plain-text fixture file bundled under
  ``wfact/data/`` containing the core polynomials of the full-factorization
  series at the identity for several well-known reflection groups
  (G2, H3, H4, F4, E6, E7, E8 in Cartan-type naming).
* ``TABLE1`` holds exact closed-form full-factorization series of the
  identity for the reflection subgroup types occurring inside the rank-3
  icosahedral group, built directly from Laurent-polynomial arithmetic.

Fixture file format, one record per line::

    name=G2; lowest=0; coeffs=1,4,10,16,10,16,10,4,1

with coefficients ascending from ``X**lowest``.  Blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
from pathlib import Path

from .laurent import LaurentPoly

__all__ = ["load_phi_fixtures", "default_fixture_path", "TABLE1"]


def _poly(coeffs: list[int], min_deg: int = 0) -> LaurentPoly:
    return LaurentPoly(min_deg, [Fraction(c) for c in coeffs])


def _power(base: LaurentPoly, k: int) -> LaurentPoly:
    out = LaurentPoly.one()
    for _ in range(k):
        out = out * base
    return out


_XM1 = _poly([-1, 1])  # X - 1

# Exact full-factorization series of the identity, one per subgroup type of
# the rank-3 icosahedral group.  A1^2 and A1^3 are recorded as displayed
# (explicit products), not as powers of the A1 entry; the product identity
# is checked downstream, not assumed here.
TABLE1: dict[str, LaurentPoly] = {
    "trivial": LaurentPoly.one(),
    "A1": (_power(_XM1, 2) * LaurentPoly.monomial(-1)).scale(Fraction(1, 2)),
    "A1^2": (_power(_XM1, 4) * LaurentPoly.monomial(-2)).scale(Fraction(1, 4)),
    "A1^3": (_power(_XM1, 6) * LaurentPoly.monomial(-3)).scale(Fraction(1, 8)),
    "A2": (_poly([1, 4, 1]) * _power(_XM1, 4) * LaurentPoly.monomial(-3)).scale(
        Fraction(1, 6)
    ),
    "I2(5)": (
        _poly([1, 4, 10, 20, 10, 4, 1])
        * _power(_XM1, 4)
        * LaurentPoly.monomial(-5)
    ).scale(Fraction(1, 10)),
}


def default_fixture_path() -> Path:
    """Path of the fixture file bundled with the package."""
    return Path(str(resources.files("wfact").joinpath("data/phi_fixtures.txt")))


def load_phi_fixtures(path: str | Path | None = None) -> dict[str, LaurentPoly]:
    """Parse a fixture file into a name -> LaurentPoly mapping.

    Raises FileNotFoundError if the file is absent and ValueError (with the
    offending line number) on any malformed record.
    """
    fpath = Path(path) if path is not None else default_fixture_path()
    if not fpath.is_file():
        raise FileNotFoundError(f"fixture file not found: {fpath}")
    out: dict[str, LaurentPoly] = {}
    for lineno, raw in enumerate(fpath.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields: dict[str, str] = {}
        for chunk in line.split(";"):
            chunk = chunk.strip()
            if "=" not in chunk:
                raise ValueError(f"line {lineno}: expected key=value, got {chunk!r}")
            key, _, value = chunk.partition("=")
            fields[key.strip()] = value.strip()
        missing = {"name", "lowest", "coeffs"} - fields.keys()
        if missing:
            raise ValueError(f"line {lineno}: missing fields {sorted(missing)}")
        name = fields["name"]
        if not name or name in out:
            raise ValueError(f"line {lineno}: bad or duplicate name {name!r}")
        try:
            lowest = int(fields["lowest"])
            coeffs = [Fraction(int(c)) for c in fields["coeffs"].split(",")]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if not coeffs:
            raise ValueError(f"line {lineno}: empty coefficient list")
        out[name] = LaurentPoly(lowest, coeffs)
    if not out:
        raise ValueError(f"no fixture records found in {fpath}")
    return out
