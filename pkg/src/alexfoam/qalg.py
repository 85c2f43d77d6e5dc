"""Exact graded algebra: Laurent polynomials, quantum integers, Pell numbers, dominoes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Iterator, Mapping

Rational = Fraction

# Exponents must stay within a signed 64-bit range.
_EXP_BOUND = 2**62


def _check_exp(e: int) -> int:
    if not -_EXP_BOUND < e < _EXP_BOUND:
        raise OverflowError(f"Laurent exponent {e} exceeds the machine-width bound")
    return e


def _monomial_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _coeff_prefix(c: Fraction, mono: str) -> tuple[str, str]:
    """Return (sign, body) for a term with coefficient c and monomial text."""
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not mono:
        return sign, str(a)
    if a == 1:
        return sign, mono
    return sign, f"{a}{mono}"


def _join_terms(terms: list[tuple[str, str]]) -> str:
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


class LaurentPoly:
    """Immutable one-variable Laurent polynomial with rational coefficients."""

    __slots__ = ("_c", "var", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None, var: str = "q"):
        c: dict[int, Fraction] = {}
        if coeffs:
            for e, v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[_check_exp(int(e))] = v
        self._c = c
        self.var = var
        self._hash: int | None = None

    @classmethod
    def const(cls, a: object, var: str = "q") -> "LaurentPoly":
        return cls({0: a}, var)

    @classmethod
    def monomial(cls, e: int, a: object = 1, var: str = "q") -> "LaurentPoly":
        return cls({e: a}, var)

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def __getitem__(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def _coerce(self, other: object) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.var)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "LaurentPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -v for e, v in self._c.items()}, self.var)

    def __sub__(self, other: object) -> "LaurentPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: object) -> "LaurentPoly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            return LaurentPoly({-e * (-n): Fraction(1) / v ** (-n)}, self.var)
        out = LaurentPoly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()}, self.var)

    def substitute_power(self, m: int, var: str | None = None) -> "LaurentPoly":
        """Replace var by var^m (m may be negative)."""
        return LaurentPoly({e * m: v for e, v in self._c.items()}, var or self.var)

    def bar(self) -> "LaurentPoly":
        """The involution var -> var^-1."""
        return self.substitute_power(-1)

    def is_symmetric(self) -> bool:
        return self == self.bar()

    def evaluate(self, x: object) -> Fraction:
        x = Fraction(x)
        return sum((v * x**e for e, v in self._c.items()), Fraction(0))

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises ValueError if other does not divide self."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly({}, self.var)
        rem = dict(self._c)
        lo, hi = other.min_exp(), other.max_exp()
        lead = other._c[hi]
        quot: dict[int, Fraction] = {}
        while rem:
            top = max(rem)
            if top - hi < min(self._c) - lo:
                break
            f = rem[top] / lead
            quot[top - hi] = f
            for e, v in other._c.items():
                k = e + top - hi
                nv = rem.get(k, 0) - f * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        if rem:
            raise ValueError("polynomial division is not exact")
        return LaurentPoly(quot, self.var)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __str__(self) -> str:
        terms = [_coeff_prefix(v, _monomial_str(self.var, e)) for e, v in sorted(self._c.items())]
        return _join_terms(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "LaurentPoly":
        """Parse the output format of __str__."""
        text = text.strip()
        if text == "0":
            return cls({}, var)
        out: dict[int, Fraction] = {}
        for sign, body in _split_terms(text):
            coeff, exps = _parse_term(body, (var,))
            out[exps[0]] = out.get(exps[0], 0) + sign * coeff
        return cls(out, var)


class BiGradedPoly:
    """Immutable Laurent polynomial in (t, q) with rational coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], object] | None = None):
        c: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (a, b), v in coeffs.items():
                v = Fraction(v)
                if v:
                    c[(_check_exp(int(a)), _check_exp(int(b)))] = v
        self._c = c

    @property
    def coeffs(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._c)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._c.get(key, Fraction(0))

    def __add__(self, other: "BiGradedPoly") -> "BiGradedPoly":
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BiGradedPoly(c)

    def __mul__(self, other: "BiGradedPoly") -> "BiGradedPoly":
        c: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                c[k] = c.get(k, 0) + v1 * v2
        return BiGradedPoly(c)

    def at_t(self, t: object) -> LaurentPoly:
        """Specialize t to a rational value, leaving a Laurent polynomial in q."""
        t = Fraction(t)
        out: dict[int, Fraction] = {}
        for (a, b), v in self._c.items():
            out[b] = out.get(b, 0) + v * t**a
        return LaurentPoly(out, "q")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiGradedPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __str__(self) -> str:
        terms = []
        for (a, b), v in sorted(self._c.items()):
            mono = _monomial_str("t", a) + _monomial_str("q", b)
            terms.append(_coeff_prefix(v, mono))
        return _join_terms(terms)

    def __repr__(self) -> str:
        return f"BiGradedPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "BiGradedPoly":
        text = text.strip()
        if text == "0":
            return cls({})
        out: dict[tuple[int, int], Fraction] = {}
        for sign, body in _split_terms(text):
            coeff, (a, b) = _parse_term(body, ("t", "q"))
            out[(a, b)] = out.get((a, b), 0) + sign * coeff
        return cls(out)


def _split_terms(text: str) -> list[tuple[int, str]]:
    parts: list[tuple[int, str]] = []
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    for chunk in text.split(" "):
        if chunk == "+":
            sign = 1
        elif chunk == "-":
            sign = -1
        elif chunk:
            parts.append((sign, chunk))
    return parts


def _parse_term(body: str, variables: tuple[str, ...]) -> tuple[Fraction, list[int]]:
    i = 0
    while i < len(body) and (body[i].isdigit() or body[i] == "/"):
        i += 1
    coeff = Fraction(body[:i]) if i else Fraction(1)
    exps = [0] * len(variables)
    rest = body[i:]
    while rest:
        var = rest[0]
        if var not in variables:
            raise ValueError(f"unexpected symbol {var!r} in term {body!r}")
        rest = rest[1:]
        e = 1
        if rest.startswith("^"):
            j = 1
            if j < len(rest) and rest[j] == "-":
                j += 1
            while j < len(rest) and rest[j].isdigit():
                j += 1
            e = int(rest[1:j])
            rest = rest[j:]
        exps[variables.index(var)] += e
    return coeff, exps


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def qint(n: int) -> LaurentPoly:
    """Quantum integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        raise ValueError("qint expects n >= 0")
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def qfactorial(n: int) -> LaurentPoly:
    out = ONE
    for i in range(2, n + 1):
        out = out * qint(i)
    return out


def qbinom(n: int, a: int) -> LaurentPoly:
    if n < 0 or a < 0:
        raise ValueError("qbinom expects n, a >= 0")
    if a > n:
        return ZERO
    # q-Pascal: [n, a] = q^a [n-1, a] + q^(a-n) [n-1, a-1] (symmetric normalization)
    row = [ONE]
    for m in range(1, n + 1):
        new = []
        for b in range(m + 1):
            left = row[b].shift(-b) if b < m else ZERO
            right = row[b - 1].shift(m - b) if b > 0 else ZERO
            new.append(left + right)
        row = new
    return row[a]


def pell(n: int) -> LaurentPoly:
    """Quantum Pell number: p0 = 1, p1 = [2], p(i+1) = [2] p(i) + p(i-1)."""
    if n < 0:
        raise ValueError("pell expects n >= 0")
    two = qint(2)
    prev, cur = ONE, two
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, two * cur + prev
    return cur


class Domino(Enum):
    MINUS = "minus"
    ZERO = "zero"
    PLUS = "plus"

    @property
    def boxes(self) -> int:
        return 2 if self is Domino.ZERO else 1

    @property
    def weight(self) -> int:
        return {Domino.MINUS: -1, Domino.ZERO: 0, Domino.PLUS: 1}[self]

    @property
    def dual(self) -> "Domino":
        return {Domino.MINUS: Domino.PLUS, Domino.ZERO: Domino.ZERO, Domino.PLUS: Domino.MINUS}[self]

    @property
    def symbol(self) -> str:
        return {Domino.MINUS: "-", Domino.ZERO: "0", Domino.PLUS: "+"}[self]


class Box(Enum):
    """A single box of a domino configuration; a zero domino fills ZERO_A then ZERO_B."""

    MINUS = 0
    ZERO_A = 1
    ZERO_B = 2
    PLUS = 3

    @property
    def rank(self) -> int:
        # both halves of a zero domino compare as zero
        return {Box.MINUS: 0, Box.ZERO_A: 1, Box.ZERO_B: 1, Box.PLUS: 2}[self]


@total_ordering
@dataclass(frozen=True)
class DominoConfig:
    dominos: tuple[Domino, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dominos", tuple(Domino(d) for d in self.dominos))

    @classmethod
    def from_string(cls, text: str) -> "DominoConfig":
        table = {"-": Domino.MINUS, "+": Domino.PLUS, "0": Domino.ZERO}
        return cls(tuple(table[ch] for ch in text))

    @property
    def length(self) -> int:
        return sum(d.boxes for d in self.dominos)

    @property
    def weight(self) -> int:
        return sum(d.weight for d in self.dominos)

    @property
    def dual(self) -> "DominoConfig":
        return DominoConfig(tuple(d.dual for d in self.dominos))

    def boxes(self) -> tuple[Box, ...]:
        out: list[Box] = []
        for d in self.dominos:
            if d is Domino.MINUS:
                out.append(Box.MINUS)
            elif d is Domino.PLUS:
                out.append(Box.PLUS)
            else:
                out.extend((Box.ZERO_A, Box.ZERO_B))
        return tuple(out)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(b.rank for b in reversed(self.boxes()))

    def __lt__(self, other: "DominoConfig") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "".join(d.symbol for d in self.dominos) or "()"


def _compositions(n: int) -> Iterator[tuple[Domino, ...]]:
    if n == 0:
        yield ()
        return
    for d in (Domino.MINUS, Domino.PLUS, Domino.ZERO):
        if d.boxes <= n:
            for rest in _compositions(n - d.boxes):
                yield (d,) + rest


def enumerate_dominoes(n: int) -> list[DominoConfig]:
    """All domino configurations with n boxes, ascending in the anti-lexicographic order."""
    if n < 0:
        raise ValueError("enumerate_dominoes expects n >= 0")
    return sorted((DominoConfig(c) for c in _compositions(n)), key=DominoConfig.sort_key)


def weight_polynomial(configs: Iterable[DominoConfig]) -> LaurentPoly:
    out: dict[int, int] = {}
    for s in configs:
        out[s.weight] = out.get(s.weight, 0) + 1
    return LaurentPoly(out)
