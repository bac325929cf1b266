"""A length-preserving bijection between (Z, d_2) and (Z, d_3).

Write ``n`` in non-adjacent form, ``n = sum e_i 2^{k_i}`` with
``k_{i+1} - k_i >= 2``.  Shifting the i-th exponent down by ``i`` gives a
strictly increasing sequence, which is the support of a balanced-ternary
expansion: ``f(n) = sum e_i 3^{k_i - i}``.  ``f`` preserves length and
maps spheres onto spheres, but it is not bi-Lipschitz; see
:func:`distortion_witness`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gadic import canonical_repr, length


@dataclass(frozen=True)
class ExponentProfile:
    signs: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.signs)

    @property
    def compressed(self) -> tuple[int, ...]:
        return tuple(k - i for i, k in enumerate(self.exponents))


def profile(n: int) -> ExponentProfile:
    """Signs and exponents of the nonzero digits of ``n`` in base 2."""
    digits = canonical_repr(2, n).digits
    pairs = [(d, k) for k, d in enumerate(digits) if d]
    return ExponentProfile(tuple(d for d, _ in pairs), tuple(k for _, k in pairs))


def map23(n: int) -> int:
    """``f(n)``; e.g. ``f(9) == 10`` and ``f(8) == 27``."""
    p = profile(n)
    return sum(s * 3 ** k for s, k in zip(p.signs, p.compressed))


def map23_inverse(t: int) -> int:
    digits = canonical_repr(3, t).digits
    pairs = [(d, k) for k, d in enumerate(digits) if d]
    return sum(d * 2 ** (k + i) for i, (d, k) in enumerate(pairs))


@dataclass(frozen=True)
class DistortionWitness:
    r: int
    m: int
    n: int
    d2: int
    d3: int

    @property
    def ratio(self) -> int:
        return self.d3 // self.d2

    def to_json(self) -> dict:
        return {"r": self.r, "m": self.m, "nprime": self.n, "d2": self.d2,
                "d3": self.d3, "fm": map23(self.m), "fn": map23(self.n)}


def distortion_witness(r: int) -> DistortionWitness:
    """A pair at 2-adic distance 1 whose images are at 3-adic distance
    ``2r + 1``.  Both distances are measured, not assumed."""
    if r < 1:
        raise ValueError("r must be >= 1")
    m = sum(2 ** (3 * i) for i in range(r + 1))
    n = sum(2 ** (3 * (i + 1)) for i in range(r))
    return DistortionWitness(r, m, n, length(2, m - n), length(3, map23(m) - map23(n)))
