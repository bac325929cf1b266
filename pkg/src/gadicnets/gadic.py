"""Minimum length g-adic representations.

Every integer ``n`` is a sum of signed powers of a base ``g >= 2``.  The
canonical signed-digit form computed here is the unique digit vector with

* ``|e_i| <= g // 2`` for even ``g`` and, when ``|e_i| == g/2``, the next
  digit is strictly smaller in magnitude and does not have the opposite
  sign (for ``g = 2`` this is the non-adjacent form);
* ``|e_i| <= (g - 1) // 2`` for odd ``g`` (balanced ternary for ``g = 3``).

Its digit magnitudes sum to the word length of ``n`` with respect to the
generating set ``{0} U {+-g^i}``.

Digit vectors are little-endian tuples without trailing zeros; zero is the
empty tuple.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import InvalidBaseError

__all__ = [
    "Term", "SignedDigitRepr", "RawRepresentation",
    "canonical_repr", "length", "extend_length", "is_canonical",
    "shorten", "iter_sphere", "lengths_array",
]


def _check_base(g) -> int:
    try:
        g = operator.index(g)
    except TypeError:
        raise InvalidBaseError(g) from None
    if g < 2:
        raise InvalidBaseError(g)
    return g


class Term(NamedTuple):
    """A signed generator ``sign * base**exp``; ``sign == 0`` is the identity."""

    sign: int
    base: int
    exp: int

    @property
    def value(self) -> int:
        return self.sign * self.base ** self.exp

    def __neg__(self) -> "Term":
        return Term(-self.sign, self.base, self.exp)

    def to_json(self) -> dict:
        return {"sign": self.sign, "base": self.base, "exp": self.exp}

    @classmethod
    def from_json(cls, obj: dict) -> "Term":
        return cls(int(obj["sign"]), int(obj["base"]), int(obj["exp"]))


def is_canonical(g: int, digits: Sequence[int]) -> bool:
    """Check the canonicity conditions for a little-endian digit vector."""
    g = _check_base(g)
    if digits and digits[-1] == 0:
        return False
    if g % 2:
        bound = (g - 1) // 2
        return all(abs(d) <= bound for d in digits)
    half = g // 2
    for i, d in enumerate(digits):
        if abs(d) > half:
            return False
        if abs(d) == half:
            nxt = digits[i + 1] if i + 1 < len(digits) else 0
            if abs(nxt) >= half or d * nxt < 0:
                return False
    return True


@dataclass(frozen=True)
class SignedDigitRepr:
    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))

    @property
    def value(self) -> int:
        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total

    @property
    def length(self) -> int:
        return sum(abs(d) for d in self.digits)

    @property
    def leading_index(self) -> int:
        """Index of the leading nonzero digit, -1 for zero."""
        return len(self.digits) - 1

    @property
    def leading_digit(self) -> int:
        return self.digits[-1] if self.digits else 0

    def is_canonical(self) -> bool:
        return is_canonical(self.base, self.digits)

    def terms(self) -> list[Term]:
        """Expand into unit terms, lowest exponent first."""
        out = []
        for i, d in enumerate(self.digits):
            s = 1 if d > 0 else -1
            out.extend([Term(s, self.base, i)] * abs(d))
        return out

    def __neg__(self) -> "SignedDigitRepr":
        return SignedDigitRepr(self.base, tuple(-d for d in self.digits))

    def to_json(self) -> dict:
        return {"base": self.base, "digits": list(self.digits)}

    @classmethod
    def from_json(cls, obj: dict) -> "SignedDigitRepr":
        return cls(_check_base(obj["base"]), tuple(obj["digits"]))


def canonical_repr(g: int, n: int) -> SignedDigitRepr:
    """Return the minimum length g-adic representation of ``n``.

    Balanced division; for even ``g`` a remainder of exactly ``g/2`` takes
    the sign that keeps the next digit compatible.

    >>> canonical_repr(2, 7).digits
    (-1, 0, 0, 1)
    >>> canonical_repr(4, 10).digits
    (-2, -1, 1)
    """
    g = _check_base(g)
    n = operator.index(n)
    half = g // 2
    odd = g % 2 == 1
    digits = []
    while n:
        r = n % g
        if r > half:
            r -= g
        elif r == half and not odd:
            q = (n - half) // g
            if q % g >= half:
                r = -half
        digits.append(r)
        n = (n - r) // g
    return SignedDigitRepr(g, tuple(digits))


def length(g: int, n: int) -> int:
    """Word length of ``n`` with respect to ``{0} U {+-g^i}``."""
    return canonical_repr(g, n).length


def extend_length(g: int, n: int) -> Term:
    """A generator ``a = +-g^k`` with ``length(g, n + a) == length(g, n) + 1``.

    ``k`` is two above the leading index of ``n`` and the sign follows ``n``
    (positive for zero).
    """
    rep = canonical_repr(g, n)
    k = rep.leading_index + 2 if n else 2
    return Term(1 if n >= 0 else -1, g, k)


def lengths_array(g: int, xs) -> np.ndarray:
    """Vectorised :func:`length` for int64 arrays (``|x| < 2**62 / g``)."""
    g = _check_base(g)
    x = np.array(xs, dtype=np.int64, copy=True)
    out = np.zeros(x.shape, dtype=np.int64)
    half = g // 2
    odd = g % 2 == 1
    while np.any(x):
        r = x % g
        r = np.where(r > half, r - g, r)
        if not odd:
            tie = r == half
            if np.any(tie):
                q = (x - half) // g
                r = np.where(tie & (q % g >= half), -half, r)
        out += np.abs(r)
        x = (x - r) // g
    return out


def iter_sphere(g: int, h: int, max_index: int) -> Iterator[int]:
    """Yield every integer of length ``h`` whose leading index is <= ``max_index``.

    Enumerates canonical digit vectors directly, so each value appears once.
    """
    g = _check_base(g)
    half = g // 2
    odd = g % 2 == 1
    bound = (g - 1) // 2 if odd else half

    def ok(prev: int, d: int) -> bool:
        if odd or abs(prev) != half:
            return True
        return abs(d) < half and prev * d >= 0

    def rec(i: int, remaining: int, prev: int, value: int, power: int):
        if remaining == 0:
            if ok(prev, 0):
                yield value
            return
        if i > max_index:
            return
        top = min(bound, remaining)
        for d in range(-top, top + 1):
            if ok(prev, d):
                yield from rec(i + 1, remaining - abs(d), d,
                               value + d * power, power * g)

    yield from rec(0, h, 0, 0, 1)


@dataclass(frozen=True)
class RawRepresentation:
    """An arbitrary word over the generators: a multiset of signed powers.

    ``terms`` holds ``(sign, exp)`` pairs; ``sign`` is -1, 0 or +1, where 0
    stands for the identity summand.
    """

    base: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        _check_base(self.base)
        object.__setattr__(self, "terms",
                           tuple((int(s), int(e)) for s, e in self.terms))
        for s, e in self.terms:
            if s not in (-1, 0, 1) or e < 0:
                raise ValueError(f"bad term {(s, e)!r}")

    @property
    def value(self) -> int:
        return sum(s * self.base ** e for s, e in self.terms)

    @property
    def term_count(self) -> int:
        return len(self.terms)


class _Tally:
    """Occurrence counts of +g^i and -g^i plus a count of zero summands."""

    def __init__(self, rep: RawRepresentation):
        self.g = rep.base
        top = max((e for _, e in rep.terms), default=0) + 2
        self.pos = [0] * top
        self.neg = [0] * top
        self.zeros = 0
        for s, e in rep.terms:
            if s > 0:
                self.pos[e] += 1
            elif s < 0:
                self.neg[e] += 1
            else:
                self.zeros += 1

    def count(self) -> int:
        return self.zeros + sum(self.pos) + sum(self.neg)

    def _grow(self, i: int):
        while len(self.pos) <= i + 1:
            self.pos.append(0)
            self.neg.append(0)

    def digit(self, i: int) -> int:
        return self.pos[i] - self.neg[i] if i < len(self.pos) else 0

    def set_digit(self, i: int, d: int):
        self._grow(i)
        self.pos[i], self.neg[i] = max(d, 0), max(-d, 0)

    def step(self) -> str | None:
        """Apply the first applicable rewrite at the lowest index."""
        g = self.g
        if self.zeros:
            self.zeros = 0
            return "a"
        size = len(self.pos)
        for i in range(size):
            k = min(self.pos[i], self.neg[i])
            if k:
                self.pos[i] -= k
                self.neg[i] -= k
                return "b"
        for i in range(size):
            for same, _ in ((self.pos, self.neg), (self.neg, self.pos)):
                if same[i] >= g:
                    self._grow(i)
                    q, s = divmod(same[i], g)
                    same[i] = s
                    same[i + 1] += q
                    return "c"
        for i in range(size):
            for same, other in ((self.pos, self.neg), (self.neg, self.pos)):
                m = same[i]
                if g < 2 * m < 2 * g:
                    self._grow(i)
                    same[i] = 0
                    other[i] += g - m
                    same[i + 1] += 1
                    return "d"
        if g % 2:
            return None
        half = g // 2
        for i in range(size):
            d, nxt = self.digit(i), self.digit(i + 1)
            if d == -half and nxt >= 1:
                self.set_digit(i, half)
                self.set_digit(i + 1, nxt - 1)
                return "e"
            if d == half and nxt <= -1:
                self.set_digit(i, -half)
                self.set_digit(i + 1, nxt + 1)
                return "e"
        for i in range(size):
            d = self.digit(i)
            if abs(d) == half and self.digit(i + 1) == d:
                k = 2
                while self.digit(i + k) == d:
                    k += 1
                s = 1 if d > 0 else -1
                self.set_digit(i, -d)
                for j in range(i + 1, i + k):
                    self.set_digit(j, -s * (half - 1))
                self.set_digit(i + k, self.digit(i + k) + s)
                return "run"
        return None

    def digits(self) -> tuple[int, ...]:
        ds = [p - q for p, q in zip(self.pos, self.neg)]
        while ds and ds[-1] == 0:
            ds.pop()
        return tuple(ds)


def shorten(rep: RawRepresentation,
            trace: list[tuple[str, int]] | None = None) -> SignedDigitRepr:
    """Reduce an arbitrary word to the canonical representation of its value.

    Rewrites are tried in the order a (drop zeros), b (cancel +-g^i pairs),
    c (carry g copies), d (fold more than g/2 copies), then for even bases
    e (sign clash at g/2) and run (runs of equal +-g/2 digits), each at the
    lowest applicable index.  If ``trace`` is given, ``(rule, term_count)``
    is appended after every rewrite, preceded by ``("start", count)``.
    """
    tally = _Tally(rep)
    if trace is not None:
        trace.append(("start", tally.count()))
    while (rule := tally.step()) is not None:
        if trace is not None:
            trace.append((rule, tally.count()))
    return SignedDigitRepr(rep.base, tally.digits())
