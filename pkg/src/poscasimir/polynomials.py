"""
Exact polynomial arithmetic with integer coefficients.

:class:`LaurentPoly` holds Laurent polynomials in ``k_1..k_n`` whose
exponents live in ``(1/denom) Z``; :class:`MultiPoly` holds ordinary
polynomials in ``X_1..X_n`` (printed as ``X, Y, Z`` for up to three
variables); :class:`UniPoly` is a polynomial in ``x`` whose coefficients are
either of those or plain integers.

Discriminants are resultants ``Res(P, P')`` computed as a Sylvester
determinant.  Over :class:`MultiPoly` the determinant is evaluated by
Kronecker substitution into a single big integer followed by integer Bareiss
elimination, then unpacked; :func:`bareiss_det` is the slow generic route and
serves as a cross-check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

__all__ = ["LaurentPoly", "MultiPoly", "UniPoly", "sylvester", "bareiss_det",
           "kronecker_det", "resultant", "discriminant", "DEFAULT_NAMES"]

DEFAULT_NAMES = ("X", "Y", "Z")


def _fmt_exp(num: int, den: int) -> str:
    f = Fraction(num, den)
    if f.denominator == 1:
        return "" if f == 1 else f"^{f.numerator}"
    return f"^({f.numerator}/{f.denominator})"


def _term_text(coeff: int, mono: str) -> str:
    if not mono:
        return str(coeff)
    if coeff == 1:
        return mono
    if coeff == -1:
        return "-" + mono
    return f"{coeff}*{mono}"


def _join_terms(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


def _clean(terms: Mapping[tuple, int]) -> dict[tuple, int]:
    return {e: c for e, c in terms.items() if c}


# -- Laurent polynomials ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """Laurent polynomial in ``k_1..k_n`` with exponents in ``(1/denom) Z``.

    ``terms`` maps integer vectors ``e`` (true exponents ``e/denom``) to
    nonzero integer coefficients.  ``names`` is used only for printing.
    """
    nvars: int
    denom: int
    terms: Mapping[tuple[int, ...], int]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.denom < 1:
            raise ValueError("denom must be a positive integer")
        clean = _clean(self.terms)
        for e in clean:
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong length for {self.nvars} variables")
        object.__setattr__(self, "terms", clean)

    # -- construction ----------------------------------------------------
    @classmethod
    def constant(cls, nvars: int, c: int, denom: int = 1) -> "LaurentPoly":
        return cls(nvars, denom, {(0,) * nvars: int(c)})

    @classmethod
    def monomial(cls, exps: Sequence, coeff: int = 1) -> "LaurentPoly":
        """``coeff * prod k_i^{exps_i}`` for rational ``exps``."""
        fr = [Fraction(x) for x in exps]
        den = math.lcm(1, *(x.denominator for x in fr))
        return cls(len(fr), den, {tuple(int(x * den) for x in fr): int(coeff)})

    @classmethod
    def from_rational_terms(cls, nvars: int, items: Iterable[tuple[Sequence, int]]) -> "LaurentPoly":
        """Sum of ``coeff * k^exps`` with rational exponent vectors."""
        items = [([Fraction(x) for x in e], int(c)) for e, c in items]
        den = math.lcm(1, *(x.denominator for e, _ in items for x in e))
        terms: dict[tuple[int, ...], int] = {}
        for e, c in items:
            key = tuple(int(x * den) for x in e)
            terms[key] = terms.get(key, 0) + c
        return cls(nvars, den, terms)

    # -- normal form -----------------------------------------------------
    def with_denom(self, denom: int) -> "LaurentPoly":
        if denom % self.denom:
            raise ValueError(f"cannot express denominator {self.denom} over {denom}")
        f = denom // self.denom
        return LaurentPoly(self.nvars, denom,
                           {tuple(x * f for x in e): c for e, c in self.terms.items()},
                           self.names)

    def reduced(self) -> "LaurentPoly":
        """Same polynomial over the smallest possible exponent denominator."""
        g = math.gcd(self.denom, *(x for e in self.terms for x in e))
        if g == 1:
            return self
        return LaurentPoly(self.nvars, self.denom // g,
                           {tuple(x // g for x in e): c for e, c in self.terms.items()},
                           self.names)

    def _common(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        if self.nvars != other.nvars:
            raise ValueError("Laurent polynomials in different numbers of variables")
        den = math.lcm(self.denom, other.denom)
        return self.with_denom(den), other.with_denom(den)

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    def exponents(self) -> dict[tuple[Fraction, ...], int]:
        return {tuple(Fraction(x, self.denom) for x in e): c for e, c in self.terms.items()}

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(a.nvars, a.denom, terms, self.names).reduced()

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, self.denom,
                           {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPoly(a.nvars, a.denom, terms, self.names).reduced()

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of a Laurent polynomial are not supported")
        out = LaurentPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        return a.terms == b.terms

    def __hash__(self):
        r = self.reduced()
        return hash((r.nvars, r.denom, frozenset(r.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def invert(self) -> "LaurentPoly":
        """Substitute ``k_i -> k_i^{-1}``."""
        return LaurentPoly(self.nvars, self.denom,
                           {tuple(-x for x in e): c for e, c in self.terms.items()},
                           self.names)

    def monomial_map(self, matrix: Sequence[Sequence]) -> "LaurentPoly":
        """Substitute ``k_j -> prod_i k_i^{matrix[i][j]}`` (rational entries allowed)."""
        n_out = len(matrix)
        items = []
        for e, c in self.exponents().items():
            items.append(([sum(Fraction(matrix[i][j]) * e[j] for j in range(self.nvars))
                           for i in range(n_out)], c))
        return LaurentPoly.from_rational_terms(n_out, items)

    # -- evaluation ------------------------------------------------------
    def evaluate_log(self, logs: Sequence[float]) -> float:
        """Value at ``k_i = exp(logs_i)``, accumulated without overflow of partial sums."""
        if not self.terms:
            return 0.0
        exps = [sum(x * y for x, y in zip(e, logs)) / self.denom for e in self.terms]
        top = max(exps)
        return math.fsum(c * math.exp(x - top)
                         for c, x in zip(self.terms.values(), exps)) * math.exp(top)

    def evaluate_t(self, t: Sequence[float]) -> float:
        """Value at ``k_i = exp(2 pi t_i)``."""
        return self.evaluate_log([2 * math.pi * x for x in t])

    def at_one(self) -> int:
        """Value at ``k_i = 1``."""
        return sum(self.terms.values())

    # -- printing --------------------------------------------------------
    def to_text(self) -> str:
        names = self.names or tuple(f"k{i + 1}" for i in range(self.nvars))
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            mono = "*".join(f"{names[i]}{_fmt_exp(x, self.denom)}"
                            for i, x in enumerate(e) if x)
            parts.append(_term_text(self.terms[e], mono))
        return _join_terms(parts)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"


# -- ordinary multivariate polynomials ------------------------------------

@dataclass(frozen=True, eq=False)
class MultiPoly:
    """Polynomial in ``X_1..X_n`` with integer coefficients."""
    nvars: int
    terms: Mapping[tuple[int, ...], int]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        clean = _clean(self.terms)
        for e in clean:
            if len(e) != self.nvars or min(e, default=0) < 0:
                raise ValueError(f"bad exponent {e} for {self.nvars} variables")
        object.__setattr__(self, "terms", clean)

    @classmethod
    def var(cls, i: int, nvars: int, names: tuple[str, ...] | None = None) -> "MultiPoly":
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1}, names)

    @classmethod
    def variables(cls, nvars: int, names: tuple[str, ...] | None = None) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(i, nvars, names) for i in range(nvars))

    @classmethod
    def constant(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: int(c)})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.nvars, terms, self.names or other.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return MultiPoly(self.nvars, terms, self.names or other.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, i: int | None = None) -> int:
        """Total degree, or the degree in variable ``i``; ``-1`` for zero."""
        if not self.terms:
            return -1
        if i is None:
            return max(sum(e) for e in self.terms)
        return max(e[i] for e in self.terms)

    def norm1(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Leading exponent and coefficient in graded-lexicographic order."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def divmod(self, other: "MultiPoly") -> tuple["MultiPoly", "MultiPoly"]:
        """Multivariate division by one divisor (graded-lex leading terms).

        Returns ``(q, r)`` with ``self = q*other + r`` and no term of ``r``
        divisible by the leading term of ``other``.  Quotient coefficients
        must be integers; a non-integral step moves the term to ``r``.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading()
        q: dict[tuple[int, ...], int] = {}
        rem: dict[tuple[int, ...], int] = {}
        p = MultiPoly(self.nvars, self.terms)
        while p.terms:
            e, c = p.leading()
            shift = tuple(a - b for a, b in zip(e, le))
            if min(shift) >= 0 and c % lc == 0:
                f = c // lc
                q[shift] = q.get(shift, 0) + f
                p = p - MultiPoly(self.nvars, {shift: f}) * other
            else:
                rem[e] = c
                p = MultiPoly(self.nvars, {k: v for k, v in p.terms.items() if k != e})
        names = self.names or other.names
        return MultiPoly(self.nvars, q, names), MultiPoly(self.nvars, rem, names)

    def exquo(self, other: "MultiPoly") -> "MultiPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division, remainder {r.to_text()}")
        return q

    def evaluate(self, values: Sequence):
        """Substitute ``values`` (numbers or ring elements) for the variables."""
        total = None
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * (v ** k)
            total = term if total is None else total + term
        return 0 if total is None else total

    def partial(self, i: int) -> "MultiPoly":
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                terms[tuple(f)] = c * e[i]
        return MultiPoly(self.nvars, terms, self.names)

    def gradient(self) -> tuple["MultiPoly", ...]:
        return tuple(self.partial(i) for i in range(self.nvars))

    def rename(self, names: tuple[str, ...]) -> "MultiPoly":
        return MultiPoly(self.nvars, self.terms, names)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Substitute ``X_i -> X_perm[i]``."""
        terms = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, k in enumerate(e):
                f[perm[i]] += k
            terms[tuple(f)] = c
        return MultiPoly(self.nvars, terms, self.names)

    def to_text(self) -> str:
        names = self.names or (DEFAULT_NAMES if self.nvars <= 3
                               else tuple(f"X{i + 1}" for i in range(self.nvars)))
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            mono = "*".join(f"{names[i]}{'' if x == 1 else '^' + str(x)}"
                            for i, x in enumerate(e) if x)
            parts.append(_term_text(self.terms[e], mono))
        return _join_terms(parts)

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"


# -- univariate polynomials over a ring ----------------------------------

@dataclass(frozen=True, eq=False)
class UniPoly:
    """Polynomial in ``x``; ``coeffs[j]`` multiplies ``x^j``."""
    coeffs: tuple

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(j * c for j, c in enumerate(self.coeffs) if j))

    def map(self, f: Callable) -> "UniPoly":
        return UniPoly(tuple(f(c) for c in self.coeffs))

    @classmethod
    def from_roots(cls, roots: Sequence, one) -> "UniPoly":
        """``prod_j (x + r_j)``; ``one`` is the unit of the coefficient ring."""
        coeffs = [one]
        for r in roots:
            nxt = [r * coeffs[0]]
            for j in range(1, len(coeffs)):
                nxt.append(coeffs[j - 1] + r * coeffs[j])
            nxt.append(coeffs[-1])
            coeffs = nxt
        return cls(tuple(coeffs))


def _is_zero(c) -> bool:
    if isinstance(c, (MultiPoly, LaurentPoly)):
        return c.is_zero()
    return c == 0


def sylvester(p: UniPoly, q: UniPoly, zero=0) -> list[list]:
    """Sylvester matrix of ``p`` (degree m) and ``q`` (degree n), size ``m+n``."""
    m, n = p.degree, q.degree
    size = m + n
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    rows = []
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(mat: Sequence[Sequence], exquo: Callable | None = None, one=1):
    """Fraction-free Gaussian elimination; exact for integral domains.

    ``exquo(a, b)`` performs exact division (defaults to ``//`` for ints and
    :meth:`MultiPoly.exquo` otherwise).
    """
    n = len(mat)
    if n == 0:
        return one
    a = [list(row) for row in mat]
    if exquo is None:
        def exquo(x, y):
            if isinstance(x, int) and isinstance(y, int):
                q, r = divmod(x, y)
                if r:
                    raise ArithmeticError("inexact integer division in Bareiss")
                return q
            if isinstance(y, int):
                y = MultiPoly.constant(x.nvars, y)
            if isinstance(x, int):
                x = MultiPoly.constant(y.nvars, x)
            return x.exquo(y)
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            swap = next((r for r in range(k + 1, n) if not _is_zero(a[r][k])), None)
            if swap is None:
                return 0 * one
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exquo(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def _coerce_multi(c, nvars: int) -> MultiPoly:
    return c if isinstance(c, MultiPoly) else MultiPoly.constant(nvars, int(c))


def kronecker_det(mat: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant of a matrix of :class:`MultiPoly` via one big-integer determinant.

    Each variable is packed into its own block of base-``2^K`` digits, with
    ``K`` chosen so that every coefficient of the determinant fits in a
    balanced digit and block widths exceeding the degree bounds.
    """
    n = len(mat)
    nvars = next(c.nvars for row in mat for c in row if isinstance(c, MultiPoly))
    names = next((c.names for row in mat for c in row
                  if isinstance(c, MultiPoly) and c.names), None)
    m = [[_coerce_multi(c, nvars) for c in row] for row in mat]
    # degree bound per variable and a coefficient bound for the determinant
    deg_bound = [sum(max(c.degree(v) for c in row) for row in m) for v in range(nvars)]
    deg_bound = [max(b, 0) for b in deg_bound]
    coeff_bound = math.factorial(n)
    for row in m:
        coeff_bound *= max(c.norm1() for c in row)
    if coeff_bound == 0:
        return MultiPoly(nvars, {}, names)
    K = coeff_bound.bit_length() + 2
    K += -K % 8
    weights = []
    w = 1
    for b in deg_bound:
        weights.append(w)
        w *= b + 1
    ndigits = w
    shifts = [K * x for x in weights]

    def pack(p: MultiPoly) -> int:
        return sum(c << sum(s * k for s, k in zip(shifts, e)) for e, c in p.terms.items())

    value = bareiss_det([[pack(c) for c in row] for row in m])
    half = 1 << (K - 1)
    offset = sum(half << (K * j) for j in range(ndigits))
    raw = (value + offset).to_bytes(ndigits * K // 8, "little")
    step = K // 8
    terms = {}
    for j in range(ndigits):
        digit = int.from_bytes(raw[j * step:(j + 1) * step], "little") - half
        if digit:
            e = []
            rest = j
            for b in deg_bound:
                e.append(rest % (b + 1))
                rest //= b + 1
            terms[tuple(e)] = digit
    return MultiPoly(nvars, terms, names)


def resultant(p: UniPoly, q: UniPoly):
    """``Res(p, q)`` as the Sylvester determinant."""
    sample = next((c for c in p.coeffs + q.coeffs if isinstance(c, MultiPoly)), None)
    if sample is None:
        return bareiss_det(sylvester(p, q, 0))
    zero = MultiPoly(sample.nvars, {}, sample.names)
    return kronecker_det(sylvester(p, q, zero))


def discriminant(p: UniPoly):
    """``(-1)^{n(n-1)/2} Res(P, P') / lc(P)`` for ``P`` of degree ``n >= 2``."""
    n = p.degree
    if n < 2:
        raise ValueError("discriminant needs degree at least 2")
    res = resultant(p, p.derivative())
    if n * (n - 1) // 2 % 2:
        res = -res
    lc = p.lead
    if isinstance(res, MultiPoly):
        return res.exquo(_coerce_multi(lc, res.nvars))
    q, r = divmod(res, lc)
    if r:
        raise ArithmeticError("leading coefficient does not divide the resultant")
    return q
