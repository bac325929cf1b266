"""Word lengths for generating sets built from several bases.

Supported generating sets, all symmetric and containing 0:

* single base ``g``: ``{+-g^i}``;
* prime powers ``P``: ``{+-p^i : p in P}`` (``P = {2, 3}`` is Conway's set);
* the multiplicative semigroup ``S(P)``: ``{+-s : s a P-smooth integer}``.

Exponents are capped at ``cap`` so the generator tables are finite.  Lengths
are found by iterative deepening with a meet-in-the-middle join of two
precomputed balls.  For multi-base sets a result is only an upper bound on
the uncapped length, and is flagged ``capped``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import UnreachableError
from .gadic import Term, canonical_repr
from .window import Window, as_window

SINGLE = "single"
PRIMES = "primes"
SEMIGROUP = "semigroup"

DEFAULT_CAP = 20
DEFAULT_MAX_LENGTH = 6
# entries per precomputed ball before the engine stops materialising layers
_BALL_BUDGET = 2_000_000


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class GeneratingSetSpec:
    kind: str
    params: tuple[int, ...]
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(sorted(int(p) for p in self.params)))
        if self.kind not in (SINGLE, PRIMES, SEMIGROUP):
            raise ValueError(f"unknown generating set kind {self.kind!r}")
        if self.cap < 0:
            raise ValueError("cap must be >= 0")
        if not self.params:
            raise ValueError("empty parameter list")
        if len(set(self.params)) != len(self.params):
            raise ValueError("parameters must be distinct")
        if self.kind == SINGLE:
            if len(self.params) != 1 or self.params[0] < 2:
                raise ValueError("single-base spec needs one base >= 2")
        elif not all(_is_prime(p) for p in self.params):
            raise ValueError(f"not all primes: {self.params}")

    @classmethod
    def single(cls, g: int, cap: int = DEFAULT_CAP) -> "GeneratingSetSpec":
        return cls(SINGLE, (g,), cap)

    @classmethod
    def primes(cls, ps: Iterable[int], cap: int = DEFAULT_CAP) -> "GeneratingSetSpec":
        return cls(PRIMES, tuple(ps), cap)

    @classmethod
    def semigroup(cls, ps: Iterable[int], cap: int = DEFAULT_CAP) -> "GeneratingSetSpec":
        return cls(SEMIGROUP, tuple(ps), cap)

    @classmethod
    def parse(cls, text: str, cap: int = DEFAULT_CAP) -> "GeneratingSetSpec":
        """Parse ``"2,3"``, ``"g=4"``, ``"P=2,3,5"`` or ``"S(P)=2,3"``.

        A bare list with one entry is a single base; with several it is a
        prime-power set.
        """
        text = text.strip().replace(" ", "")
        key, sep, rest = text.partition("=")
        if not sep:
            key, rest = "", text
        try:
            nums = tuple(int(x) for x in rest.split(",") if x)
        except ValueError:
            raise ValueError(f"cannot parse generating set {text!r}") from None
        key = key.upper()
        if key == "G" or (key == "" and len(nums) == 1):
            return cls(SINGLE, nums, cap)
        if key in ("", "P"):
            return cls(PRIMES, nums, cap)
        if key in ("S(P)", "S"):
            return cls(SEMIGROUP, nums, cap)
        raise ValueError(f"cannot parse generating set {text!r}")

    def label(self) -> str:
        ps = ",".join(map(str, self.params))
        return {SINGLE: f"g={ps}", PRIMES: f"P={ps}", SEMIGROUP: f"S(P)={ps}"}[self.kind]

    @property
    def magnitude_cap(self) -> int:
        """Largest generator magnitude admitted."""
        return max(self.params) ** self.cap

    def generators(self) -> tuple[Term, ...]:
        """Nonzero generators, both signs, in tie-break order."""
        if self.kind == SEMIGROUP:
            mags = sorted(_smooth_numbers(self.params, self.magnitude_cap))
            pos = [Term(1, s, 1) for s in mags]
        else:
            seen = set()
            pos = []
            for p in self.params:
                for i in range(self.cap + 1):
                    v = p ** i
                    if v not in seen:
                        seen.add(v)
                        pos.append(Term(1, p, i))
        gens = pos + [-t for t in pos]
        return tuple(sorted(gens, key=_term_key))

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": list(self.params), "cap": self.cap}

    @classmethod
    def from_json(cls, obj: dict) -> "GeneratingSetSpec":
        return cls(obj["kind"], tuple(obj["params"]), int(obj["cap"]))


def _term_key(t: Term):
    return (t.exp, t.sign, t.base)


def _word_key(word) -> list:
    """Tie-break between words of equal length: compare term keys from the
    largest down, so words built from smaller powers win."""
    return sorted(map(_term_key, word), reverse=True)


def _smooth_numbers(primes: tuple[int, ...], limit: int) -> list[int]:
    out = [1]
    for p in primes:
        grown = []
        for s in out:
            while s <= limit:
                grown.append(s)
                s *= p
        out = grown
    return out


@dataclass(frozen=True)
class LengthResult:
    n: int
    length: int
    witness: tuple[Term, ...]
    capped: bool
    cap: int

    def to_json(self) -> dict:
        return {"n": self.n, "length": self.length,
                "witness": [t.to_json() for t in self.witness],
                "capped": self.capped, "cap": self.cap}

    @classmethod
    def from_json(cls, obj: dict) -> "LengthResult":
        return cls(int(obj["n"]), int(obj["length"]),
                   tuple(Term.from_json(t) for t in obj["witness"]),
                   bool(obj["capped"]), int(obj["cap"]))


class _Engine:
    """Balls of the capped generating set, built lazily layer by layer.

    ``layers[j]`` maps every value of capped length exactly ``j`` to one
    witness word.  Tables are only appended to, never mutated afterwards.
    """

    def __init__(self, spec: GeneratingSetSpec):
        self.spec = spec
        self.gens = spec.generators()
        self.values = [t.value for t in self.gens]
        self.layers: list[dict[int, tuple[Term, ...]]] = [{0: ()}]
        self.ball: dict[int, int] = {0: 0}  # value -> capped length
        self.full = False

    def _grow(self) -> bool:
        if self.full:
            return False
        prev = self.layers[-1]
        if len(prev) * len(self.gens) > _BALL_BUDGET * 4 or len(self.ball) > _BALL_BUDGET:
            self.full = True
            return False
        j = len(self.layers)
        layer: dict[int, tuple[Term, ...]] = {}
        ball = self.ball
        for v, w in prev.items():
            for t, tv in zip(self.gens, self.values):
                x = v + tv
                if x in ball:
                    continue
                old = layer.get(x)
                if old is None:
                    layer[x] = w + (t,)
                elif _word_key(w + (t,)) < _word_key(old):
                    layer[x] = w + (t,)
        for x in layer:
            ball[x] = j
        self.layers.append(layer)
        return True

    def radius(self, want: int) -> int:
        while len(self.layers) <= want and self._grow():
            pass
        return len(self.layers) - 1

    def witness(self, x: int) -> tuple[Term, ...]:
        return self.layers[self.ball[x]][x]

    def iter_ball(self, k: int) -> Iterator[tuple[int, tuple[Term, ...]]]:
        """All (value, word) with word length <= k; values may repeat past
        the materialised radius."""
        r = self.radius(k)
        if k <= r:
            for j in range(k + 1):
                yield from self.layers[j].items()
            return
        for v, w in self.iter_ball(r):
            for u, z in self.iter_ball(k - r):
                yield v + u, w + z

    def find(self, n: int, h: int) -> tuple[Term, ...] | None:
        """A word of length exactly h for n, assuming none shorter exists."""
        r = self.radius((h + 1) // 2)
        a = min((h + 1) // 2, r)
        ball, layers = self.ball, self.layers
        best = None
        best_key = None
        for x, wx in self.iter_ball(h - a):
            y = n - x
            j = ball.get(y)
            if j is None or j > a:
                continue
            word = tuple(sorted(wx + layers[j][y], key=_term_key))
            if len(word) != h:
                continue
            key = _word_key(word)
            if best is None or key < best_key:
                best, best_key = word, key
        return best

    def length_at_most(self, n: int, h: int):
        """``(length, word)`` if the capped length of n is <= h, else None."""
        r = self.radius((h + 1) // 2)
        j = self.ball.get(n)
        if j is not None:
            return (j, self.witness(n)) if j <= h else None
        for k in range(r + 1, h + 1):
            word = self.find(n, k)
            if word is not None:
                return k, word
        return None


@lru_cache(maxsize=32)
def _engine(spec: GeneratingSetSpec) -> _Engine:
    return _Engine(spec)


def _is_capped(spec: GeneratingSetSpec, n: int) -> bool:
    if spec.kind != SINGLE:
        return True
    return canonical_repr(spec.params[0], n).leading_index > spec.cap


def word_length(spec: GeneratingSetSpec, n: int,
                max_length: int = DEFAULT_MAX_LENGTH) -> LengthResult:
    """Least number of capped generators summing to ``n``, with a witness.

    Raises :class:`UnreachableError` if nothing of length <= ``max_length``
    exists under the cap.
    """
    if abs(n) > max_length * spec.magnitude_cap:
        raise UnreachableError(n, max_length, spec.cap)
    found = _engine(spec).length_at_most(n, max_length)
    if found is None:
        raise UnreachableError(n, max_length, spec.cap)
    h, word = found
    return LengthResult(n, h, tuple(sorted(word, key=_term_key)),
                        _is_capped(spec, n), spec.cap)


def sphere(spec: GeneratingSetSpec, h: int, window) -> set[int]:
    """Integers in ``window`` whose capped length is exactly ``h``."""
    if h < 0:
        raise ValueError("radius must be >= 0")
    window = as_window(window)
    eng = _engine(spec)
    out = set()
    for n in window:
        found = eng.length_at_most(n, h)
        if found is not None and found[0] == h:
            out.add(n)
    return out


def smallest_of_length(spec: GeneratingSetSpec, h: int,
                       search_limit: int) -> int | None:
    """Smallest positive ``n <= search_limit`` of capped length ``h``."""
    if h < 1:
        raise ValueError("h must be >= 1")
    eng = _engine(spec)
    for n in range(1, search_limit + 1):
        found = eng.length_at_most(n, h)
        if found is not None and found[0] == h:
            return n
    return None


lambda_ = smallest_of_length


def diophantine_search(targets: Iterable[int], exponent_bound: int = 200,
                       bases: tuple[int, int] = (2, 3)) -> list[tuple[int, int, int]]:
    """All ``(a, b, c)`` with ``1 <= a, b <= exponent_bound`` and
    ``x**a - y**b == c`` for ``c`` in ``targets``, ``(x, y) = bases``."""
    if exponent_bound < 1:
        raise ValueError("exponent_bound must be >= 1")
    x, y = bases
    wanted = set(targets)
    xs = {x ** a: a for a in range(1, exponent_bound + 1)}
    out = []
    yb = 1
    for b in range(1, exponent_bound + 1):
        yb *= y
        for c in wanted:
            a = xs.get(yb + c)
            if a is not None:
                out.append((a, b, c))
    return sorted(out)


def geodesic_subword_check(spec: GeneratingSetSpec, witness) -> bool:
    """True iff every contiguous sub-sum of ``witness`` has capped length
    equal to its number of terms."""
    vals = [t.value if isinstance(t, Term) else int(t) for t in witness]
    eng = _engine(spec)
    for i in range(len(vals)):
        s = 0
        for j in range(i, len(vals)):
            s += vals[j]
            k = j - i + 1
            found = eng.length_at_most(s, k)
            if found is None or found[0] != k:
                return False
    return True
