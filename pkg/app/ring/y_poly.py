"""
Polynomials on the P^1-bundle Y over Delta.

A YPoly maps (e, i, j, k) -> coefficient of xi^e f*(T1^i T2^j P^k).
Ring operations are plain polynomial arithmetic; the relation
xi (xi - f*P) = 0 is applied by `y_canonicalize`.
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

from app.ring.delta_poly import DeltaPoly, Scalar

YMonomial = Tuple[int, int, int, int]


class YPoly:
    """Commutative polynomial in xi, f*T1, f*T2, f*P with exact coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[YMonomial, Scalar] = None):
        cleaned: Dict[YMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != 4 or min(mono) < 0:
                raise ValueError(f"bad YPoly exponent {mono}")
            if coeff:
                cleaned[tuple(mono)] = Fraction(coeff)
        self._terms = cleaned

    @classmethod
    def _raw(cls, terms: Dict[YMonomial, Fraction]) -> "YPoly":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def xi(cls) -> "YPoly":
        return cls({(1, 0, 0, 0): 1})

    @classmethod
    def pullback(cls, base: DeltaPoly) -> "YPoly":
        """f* of a class on Delta."""
        return cls._raw({(0,) + mono: c for mono, c in base.items()})

    @classmethod
    def linear(cls, xi: Scalar = 0, t1: Scalar = 0, t2: Scalar = 0, p: Scalar = 0) -> "YPoly":
        """The divisor xi*xi + t1*f*T1 + t2*f*T2 + p*f*P."""
        return cls({(1, 0, 0, 0): xi, (0, 1, 0, 0): t1, (0, 0, 1, 0): t2, (0, 0, 0, 1): p})

    @property
    def terms(self) -> Dict[YMonomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[YMonomial, Fraction]]:
        return iter(self._terms.items())

    def xi_degree(self) -> int:
        return max((m[0] for m in self._terms), default=-1)

    def split(self) -> Tuple[DeltaPoly, DeltaPoly]:
        """(A, B) with self == f*A + xi f*B; requires a canonical polynomial."""
        base: Dict[Tuple[int, int, int], Fraction] = {}
        xi_part: Dict[Tuple[int, int, int], Fraction] = {}
        for (e, i, j, k), coeff in self._terms.items():
            if e == 0:
                base[(i, j, k)] = coeff
            elif e == 1:
                xi_part[(i, j, k)] = coeff
            else:
                raise ValueError("split() needs a canonical YPoly (xi-degree <= 1)")
        return DeltaPoly._raw(base), DeltaPoly._raw(xi_part)

    def __add__(self, other: Union["YPoly", Scalar]) -> "YPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = out.get(mono, 0) + coeff
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return YPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "YPoly":
        return YPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["YPoly", Scalar]) -> "YPoly":
        return self + (-_coerce(other))

    def __mul__(self, other: Union["YPoly", Scalar]) -> "YPoly":
        if not isinstance(other, YPoly):
            scalar = Fraction(other)
            if not scalar:
                return YPoly()
            return YPoly._raw({m: c * scalar for m, c in self._terms.items()})
        out: Dict[YMonomial, Fraction] = {}
        for (e1, i1, j1, k1), c1 in self._terms.items():
            for (e2, i2, j2, k2), c2 in other._terms.items():
                key = (e1 + e2, i1 + i2, j1 + j2, k1 + k2)
                out[key] = out.get(key, 0) + c1 * c2
        return YPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "YPoly":
        if exponent < 0:
            raise ValueError("YPoly powers must be non-negative")
        result = YPoly({(0, 0, 0, 0): 1})
        for _ in range(exponent):
            result = y_canonicalize(result * self)
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, YPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == _coerce(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"YPoly({dict(sorted(self._terms.items(), reverse=True))})"


def y_canonicalize(poly: YPoly) -> YPoly:
    """Rewrite xi^e -> xi (f*P)^{e-1} for e >= 2, leaving xi-degree <= 1."""
    out: Dict[YMonomial, Fraction] = {}
    for (e, i, j, k), coeff in poly.items():
        key = (1, i, j, k + e - 1) if e >= 2 else (e, i, j, k)
        out[key] = out.get(key, 0) + coeff
    return YPoly._raw({m: c for m, c in out.items() if c})


def _coerce(value: Union[YPoly, Scalar]) -> YPoly:
    if isinstance(value, YPoly):
        return value
    return YPoly({(0, 0, 0, 0): value})
