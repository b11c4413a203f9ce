"""Exact truncated power series in a size variable x whose coefficients are
sparse polynomials in two marking variables y and q.

A `Series` stores, for each x-degree n up to a fixed inclusive truncation
order, a polynomial in (y, q) as a dict mapping (y_deg, q_deg) to an exact
coefficient (int, or Fraction when a reciprocal forces one).  Arithmetic is
exact and never consults terms above the truncation order.  Reciprocals
exist whenever the x^0 coefficient is a nonzero constant; every denominator
built here has constant term exactly 1, so the integer path is used
throughout and expanded counting coefficients come out as plain ints.

The constructors at the bottom expand, to any requested order, the series
counting compositions weighted x^size y^parts q^successions:

* `gf_general(params, order)`  - any modulus m and shift r, assembled by
  solving the cyclic system relating the sections of the series grouped by
  first-part residue (`solve_cyclic`).
* `gf_congruence(m, order)`    - the r = 0 specialization, built directly
  from its m-term closed form.
* `gf_parity(order)`           - the m = 2 case from its explicit rational
  form (quadratic in q).
* `gf_carlitz(order)` and `gf_carlitz_alt(order)` - two classical
  constructions counting compositions with no equal adjacent parts by size
  and parts.  Truncating their infinite sums at the order is lossless: the
  k-th summand has x-valuation k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .compositions import SuccessionParams, residue_bar

Coeff = Union[int, Fraction]
Monom = tuple[int, int]  # (y_deg, q_deg)
Poly = dict[Monom, Coeff]


def _padd(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for k, v in q.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pscale(p: Poly, c: Coeff) -> Poly:
    if not c:
        return {}
    return {k: v * c for k, v in p.items()}


def _pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (y1, q1), c1 in p.items():
        for (y2, q2), c2 in q.items():
            k = (y1 + y2, q1 + q2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _peval(p: Poly, y: Coeff | None, q: Coeff | None) -> Poly:
    out: Poly = {}
    for (dy, dq), c in p.items():
        if y is not None:
            c = c * y**dy
            dy = 0
        if q is not None:
            c = c * q**dq
            dq = 0
        k = (dy, dq)
        out[k] = out.get(k, 0) + c
    return {k: v for k, v in out.items() if v}


class Series:
    """Truncated series; treat instances as immutable after construction."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[Poly] | None = None):
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        if coeffs is None:
            polys: list[Poly] = [{} for _ in range(order + 1)]
        else:
            if len(coeffs) != order + 1:
                raise ValueError(f"need {order + 1} coefficient polynomials, got {len(coeffs)}")
            polys = [{k: v for k, v in p.items() if v} for p in coeffs]
        self.order = order
        self.coeffs: tuple[Poly, ...] = tuple(polys)

    @classmethod
    def _raw(cls, order: int, polys: list[Poly]) -> "Series":
        # internal: takes ownership of polys, skips validation/copies
        s = object.__new__(cls)
        s.order = order
        s.coeffs = tuple(polys)
        return s

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.monomial(order)

    @classmethod
    def monomial(cls, order: int, x: int = 0, y: int = 0, q: int = 0, coeff: Coeff = 1) -> "Series":
        """coeff * x^x y^y q^q as a series of the given order; degrees above
        the order give the zero series."""
        if x < 0 or y < 0 or q < 0:
            raise ValueError("monomial degrees must be >= 0")
        s = cls(order)
        if x <= order and coeff:
            polys = [{} for _ in range(order + 1)]
            polys[x] = {(y, q): coeff}
            return cls._raw(order, polys)
        return s

    def _check_order(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} != {other.order}")

    def __add__(self, other: "Series | Coeff") -> "Series":
        if isinstance(other, Series):
            self._check_order(other)
            return Series._raw(
                self.order, [_padd(a, b) for a, b in zip(self.coeffs, other.coeffs)]
            )
        if isinstance(other, (int, Fraction)):
            polys = list(self.coeffs)
            polys[0] = _padd(polys[0], {(0, 0): other})
            return Series._raw(self.order, polys)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series._raw(self.order, [_pscale(p, -1) for p in self.coeffs])

    def __sub__(self, other: "Series | Coeff") -> "Series":
        if isinstance(other, Series):
            return self + (-other)
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: "Series | Coeff") -> "Series":
        return (-self) + other

    def __mul__(self, other: "Series | Coeff") -> "Series":
        if isinstance(other, Series):
            self._check_order(other)
            out: list[Poly] = [{} for _ in range(self.order + 1)]
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j in range(self.order - i + 1):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] = _padd(out[i + j], _pmul(a, b))
            return Series._raw(self.order, out)
        if isinstance(other, (int, Fraction)):
            return Series._raw(self.order, [_pscale(p, other) for p in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Series":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self) -> "Series":
        """Multiplicative inverse up to the truncation order.

        Requires the x^0 coefficient to be a nonzero constant; coefficients
        stay integral when that constant is +-1.
        """
        c0 = self.coeffs[0]
        if not c0:
            raise ValueError("series with zero constant term has no reciprocal")
        if set(c0) != {(0, 0)}:
            raise ValueError(f"constant term must be a constant polynomial, got {c0!r}")
        c = c0[(0, 0)]
        if c == 1:
            inv0: Coeff = 1
        elif c == -1:
            inv0 = -1
        else:
            inv0 = Fraction(1, 1) / c
        g: list[Poly] = [{(0, 0): inv0}]
        for n in range(1, self.order + 1):
            acc: Poly = {}
            for k in range(1, n + 1):
                fk = self.coeffs[k]
                if fk:
                    acc = _padd(acc, _pmul(fk, g[n - k]))
            g.append(_pscale(acc, -inv0))
        return Series._raw(self.order, g)

    def __truediv__(self, other: "Series") -> "Series":
        if isinstance(other, Series):
            return self * other.reciprocal()
        return NotImplemented

    def specialize(self, *, y: Coeff | None = None, q: Coeff | None = None) -> "Series":
        """Substitute numeric values for y and/or q, exactly."""
        return Series._raw(self.order, [_peval(p, y, q) for p in self.coeffs])

    def coefficient(self, n: int, y: int = 0, q: int = 0) -> Coeff:
        """Exact coefficient of x^n y^y q^q; n above the order is rejected."""
        if not 0 <= n <= self.order:
            raise ValueError(f"x-degree {n} outside truncation order {self.order}")
        return self.coeffs[n].get((y, q), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        nonzero = [n for n, p in enumerate(self.coeffs) if p]
        return f"Series(order={self.order}, nonzero_x_degrees={nonzero[:8]}{'...' if len(nonzero) > 8 else ''})"


def coefficient(series: Series, n: int, d: int, a: int) -> int:
    """Exact integer coefficient of x^n y^d q^a; rejects non-integral values."""
    c = series.coefficient(n, d, a)
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError(f"coefficient at ({n},{d},{a}) is not an integer: {c}")
        return int(c)
    return c


def series_table_rows(series: Series) -> list[dict]:
    """Canonical table form: one row {n, d, a, coefficient} per nonzero term,
    sorted by (n, d, a), with the coefficient as a decimal string."""
    rows = []
    for n, poly in enumerate(series.coeffs):
        for dy, dq in sorted(poly):
            rows.append({"n": n, "d": dy, "a": dq, "coefficient": str(coefficient(series, n, dy, dq))})
    return rows


@dataclass(frozen=True)
class CyclicSystem:
    """Cyclic linear relations u_j = a_j + b_j * u_{j+shift} on 1-based indices
    taken mod `size`, with every b_j of zero constant term (which makes each
    cyclic product 1 - prod(b) invertible)."""

    size: int
    shift: int
    a: tuple[Series, ...]
    b: tuple[Series, ...]

    def __post_init__(self) -> None:
        if self.size < 1 or not 0 <= self.shift <= self.size - 1:
            raise ValueError(f"need size >= 1 and 0 <= shift < size, got {self.size}, {self.shift}")
        if len(self.a) != self.size or len(self.b) != self.size:
            raise ValueError("need exactly `size` series on each side")
        orders = {s.order for s in self.a} | {s.order for s in self.b}
        if len(orders) != 1:
            raise ValueError(f"all series must share one truncation order, got {orders}")
        for j, bj in enumerate(self.b, start=1):
            if bj.coeffs[0]:
                raise ValueError(f"b_{j} must have zero constant term")

    @property
    def order(self) -> int:
        return self.a[0].order


def solve_cyclic(system: CyclicSystem) -> list[Series]:
    """Solve the cyclic relations exactly up to the truncation order.

    With s = gcd(size, shift) and p = size/s the indices j + l*shift for
    j = 1..s, l = 0..p-1 cover each residue class once; unwinding the
    relation around each length-p cycle gives

        u_{j+l*shift} = sum_{i=l}^{l+p-1} a_{j+i*shift} * prod_{k=l}^{i-1} b_{j+k*shift}
                        / (1 - prod_{k=l}^{l+p-1} b_{j+k*shift}).
    """
    m, r = system.size, system.shift
    s = math.gcd(m, r) if r else m
    p = m // s
    order = system.order
    one = Series.one(order)
    out: list[Series | None] = [None] * m
    for j in range(1, s + 1):
        for ell in range(p):
            num = Series.zero(order)
            prod = one
            for i in range(ell, ell + p):
                idx = residue_bar(j + i * r, m) - 1
                num = num + system.a[idx] * prod
                prod = prod * system.b[idx]
            target = residue_bar(j + ell * r, m) - 1
            out[target] = num * (one - prod).reciprocal()
    assert all(u is not None for u in out)
    return out  # type: ignore[return-value]


def _one_minus_x_pow(m: int, order: int) -> Series:
    return Series.one(order) - Series.monomial(order, x=m)


def _y_q_minus_1(order: int, x: int) -> Series:
    # x^x * y * (q - 1)
    return Series.monomial(order, x=x, y=1, q=1) - Series.monomial(order, x=x, y=1)


def gf_general(params: SuccessionParams, order: int) -> Series:
    """Series counting compositions by size, parts and (m, r)-successions.

    The sections of the series grouped by first-part residue satisfy a cyclic
    linear system; solving it and summing the sections yields the full
    series as 1 / (1 - sum of per-residue section kernels).
    """
    m, r = params.m, params.r
    inv = _one_minus_x_pow(m, order).reciprocal()
    a = tuple(Series.monomial(order, x=j, y=1) * inv for j in range(1, m + 1))
    b = tuple(_y_q_minus_1(order, j) * inv for j in range(1, m + 1))
    sections = solve_cyclic(CyclicSystem(size=m, shift=r, a=a, b=b))
    total = Series.zero(order)
    for u in sections:
        total = total + u
    return (Series.one(order) - total).reciprocal()


def gf_congruence(m: int, order: int) -> Series:
    """The r = 0 series from its m-term closed form: equals
    gf_general(SuccessionParams(m, 0), order) coefficientwise."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    total = Series.zero(order)
    for a in range(1, m + 1):
        den = _one_minus_x_pow(m, order) - _y_q_minus_1(order, a)
        total = total + Series.monomial(order, x=a, y=1) * den.reciprocal()
    return (Series.one(order) - total).reciprocal()


def gf_parity(order: int) -> Series:
    """The m = 2 series from its explicit rational form (quadratic in q)."""
    one = Series.one(order)
    x2 = Series.monomial(order, x=2)
    u = one - x2
    num = (u - _y_q_minus_1(order, 1)) * (u - _y_q_minus_1(order, 2))
    den = (
        u * u
        - Series.monomial(order, x=3, y=2)
        - Series.monomial(order, x=1, y=1, q=1) * u * (one + Series.monomial(order, x=1))
        + Series.monomial(order, x=3, y=2, q=2)
    )
    return num * den.reciprocal()


def gf_carlitz(order: int) -> Series:
    """Compositions with no equal adjacent parts, counted by size and parts:
    1 / (1 - sum_a x^a y / (1 + x^a y)), the a-sum truncated at the order
    (the a-th summand has x-valuation a)."""
    total = Series.zero(order)
    for a in range(1, order + 1):
        t = Series.monomial(order, x=a, y=1)
        total = total + t * (Series.one(order) + t).reciprocal()
    return (Series.one(order) - total).reciprocal()


def gf_carlitz_alt(order: int) -> Series:
    """Same counts via the alternating run-length form
    1 / (1 + sum_j (-xy)^j / (1 - x^j)), the j-sum truncated at the order."""
    total = Series.zero(order)
    for j in range(1, order + 1):
        t = Series.monomial(order, x=j, y=j, coeff=(-1) ** j)
        total = total + t * _one_minus_x_pow(j, order).reciprocal()
    return (Series.one(order) + total).reciprocal()


def count_no_successions(m: int, n_max: int) -> list[int]:
    """Exact number of compositions of n with no (m, 0)-succession, for
    n = 0..n_max, read off the congruence series at y = 1, q = 0."""
    f = gf_congruence(m, n_max).specialize(y=1, q=0)
    return [coefficient(f, n, 0, 0) for n in range(n_max + 1)]
