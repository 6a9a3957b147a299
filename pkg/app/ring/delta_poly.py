"""
Polynomials in the divisor classes T1, T2, P of Delta.

A DeltaPoly maps exponent triples (i, j, k) -> coefficient of
T1^i T2^j P^k. Values are immutable; zero coefficients are never stored.
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

Monomial = Tuple[int, int, int]
Scalar = Union[int, Fraction]


class DeltaPoly:
    """Commutative polynomial in T1, T2, P with exact coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != 3 or min(mono) < 0:
                raise ValueError(f"bad DeltaPoly exponent {mono}")
            if coeff:
                cleaned[tuple(mono)] = Fraction(coeff)
        self._terms = cleaned

    # ── constructors ─────────────────────────────────────────────────
    @classmethod
    def constant(cls, value: Scalar) -> "DeltaPoly":
        return cls({(0, 0, 0): value})

    @classmethod
    def t1(cls) -> "DeltaPoly":
        return cls({(1, 0, 0): 1})

    @classmethod
    def t2(cls) -> "DeltaPoly":
        return cls({(0, 1, 0): 1})

    @classmethod
    def p(cls) -> "DeltaPoly":
        return cls({(0, 0, 1): 1})

    @classmethod
    def linear(cls, t1: Scalar = 0, t2: Scalar = 0, p: Scalar = 0) -> "DeltaPoly":
        """The divisor class t1*T1 + t2*T2 + p*P."""
        return cls({(1, 0, 0): t1, (0, 1, 0): t2, (0, 0, 1): p})

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "DeltaPoly":
        # Caller guarantees no zeros and Fraction values
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    # ── inspection ───────────────────────────────────────────────────
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Largest total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    # ── ring operations ──────────────────────────────────────────────
    def __add__(self, other: Union["DeltaPoly", Scalar]) -> "DeltaPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = out.get(mono, 0) + coeff
            if total:
                out[mono] = total
            else:
                out.pop(mono, None)
        return DeltaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "DeltaPoly":
        return DeltaPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Union["DeltaPoly", Scalar]) -> "DeltaPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "DeltaPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["DeltaPoly", Scalar]) -> "DeltaPoly":
        if not isinstance(other, DeltaPoly):
            scalar = Fraction(other)
            if not scalar:
                return DeltaPoly()
            return DeltaPoly._raw({m: c * scalar for m, c in self._terms.items()})
        out: Dict[Monomial, Fraction] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2, k1 + k2)
                out[key] = out.get(key, 0) + c1 * c2
        return DeltaPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DeltaPoly":
        if exponent < 0:
            raise ValueError("DeltaPoly powers must be non-negative")
        result = DeltaPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def times_monomial(self, i: int = 0, j: int = 0, k: int = 0) -> "DeltaPoly":
        """Multiply by T1^i T2^j P^k (an exponent shift)."""
        return DeltaPoly._raw({(a + i, b + j, c + k): v for (a, b, c), v in self._terms.items()})

    def substitute(self, t1: "DeltaPoly", t2: "DeltaPoly", p: "DeltaPoly") -> "DeltaPoly":
        """Apply the ring homomorphism T1 -> t1, T2 -> t2, P -> p."""
        result = DeltaPoly()
        for (i, j, k), coeff in self._terms.items():
            result = result + (t1 ** i) * (t2 ** j) * (p ** k) * coeff
        return result

    # ── comparison ───────────────────────────────────────────────────
    def __eq__(self, other: object) -> bool:
        if isinstance(other, DeltaPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == _coerce(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "DeltaPoly(0)"
        parts = []
        for (i, j, k), c in sorted(self._terms.items(), reverse=True):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in (("T1", i), ("T2", j), ("P", k)) if e
            ]
            parts.append(f"{c}*{'*'.join(factors)}" if factors else f"{c}")
        return f"DeltaPoly({' + '.join(parts)})"


def _coerce(value: Union[DeltaPoly, Scalar]) -> DeltaPoly:
    if isinstance(value, DeltaPoly):
        return value
    return DeltaPoly.constant(value)
