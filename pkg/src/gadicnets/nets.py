"""h-nets in the metric spaces (Z, d_g).

A set ``C`` is an h-net when every integer lies within word distance ``h``
of some element of ``C``.  Two constructions are provided, both taking
``C`` to be the integers whose length is a multiple of a stride ``s``:

* ``s = h + 1`` works for any symmetric generating set;
* ``s = 2h + 1`` needs, for each ``x``, a generator that lengthens ``x`` by
  one; :func:`gadicnets.gadic.extend_length` supplies it.

:func:`cover_witness` follows those constructions and returns a certificate
for every integer, so coverage of a constructed net holds globally.
:func:`net_check_window` is the independent, window-limited check.
"""

from __future__ import annotations

from collections.abc import Collection
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import gadic
from .gadic import Term, canonical_repr, lengths_array
from .window import Window, as_window
from .wordlen import GeneratingSetSpec, _engine

COVERED = "covered"
COUNTEREXAMPLE = "counterexample"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class NetSpec:
    """``C = {n : length(base, n) is a multiple of stride}``."""

    base: int
    h: int
    stride: int

    def __post_init__(self):
        gadic._check_base(self.base)
        if self.h < 0:
            raise ValueError("h must be >= 0")
        if self.stride not in (self.h + 1, 2 * self.h + 1):
            raise ValueError(f"stride must be h+1 or 2h+1, got {self.stride}")

    @classmethod
    def build(cls, base: int, h: int, wide: bool = True) -> "NetSpec":
        """Stride ``2h+1`` if ``wide`` else ``h+1``."""
        return cls(base, h, 2 * h + 1 if wide else h + 1)

    def __contains__(self, n: int) -> bool:
        return gadic.length(self.base, n) % self.stride == 0

    def members(self, window) -> list[int]:
        w = as_window(window)
        xs = np.arange(w.lo, w.hi + 1, dtype=np.int64)
        return xs[lengths_array(self.base, xs) % self.stride == 0].tolist()

    def to_json(self) -> dict:
        return {"base": self.base, "h": self.h, "stride": self.stride}

    @classmethod
    def from_json(cls, obj: dict) -> "NetSpec":
        return cls(int(obj["base"]), int(obj["h"]), int(obj["stride"]))


def net_member(spec: NetSpec, n: int) -> bool:
    return n in spec


@dataclass(frozen=True)
class CoverCertificate:
    """``n == c + sum(word)`` with ``c`` in the net and ``len(word) <= h``."""

    n: int
    c: int
    word: tuple[Term, ...]

    def validate(self, member, h: int) -> bool:
        if len(self.word) > h:
            return False
        if self.c + sum(t.value for t in self.word) != self.n:
            return False
        return self.c in member if not callable(member) else bool(member(self.c))

    def to_json(self) -> dict:
        return {"n": self.n, "c": self.c, "word": [t.to_json() for t in self.word]}

    @classmethod
    def from_json(cls, obj: dict) -> "CoverCertificate":
        return cls(int(obj["n"]), int(obj["c"]),
                   tuple(Term.from_json(t) for t in obj["word"]))


def cover_witness(spec: NetSpec, n: int) -> CoverCertificate:
    """Certificate that ``n`` is within distance ``h`` of the net.

    Write ``length(n) = s*q + r`` with ``0 <= r <= h`` (stride ``h+1``) or
    ``|r| <= h`` (stride ``2h+1``).  For ``r >= 0`` the ``r`` highest-order
    terms of the canonical word are split off; for ``r < 0``, ``n`` is
    pushed outward ``|r|`` times by :func:`gadic.extend_length`.
    """
    g, h, s = spec.base, spec.h, spec.stride
    rep = canonical_repr(g, n)
    ell = rep.length
    q, r = divmod(ell, s)
    if s == 2 * h + 1 and r > h:
        q, r = q + 1, r - s
    if r >= 0:
        terms = rep.terms()
        word = tuple(terms[len(terms) - r:]) if r else ()
        c = n - sum(t.value for t in word)
        return CoverCertificate(n, c, tuple(reversed(word)))
    x = n
    pushes = []
    for _ in range(-r):
        a = gadic.extend_length(g, x)
        pushes.append(a)
        x += a.value
    return CoverCertificate(n, x, tuple(-a for a in reversed(pushes)))


@dataclass(frozen=True)
class Verdict:
    status: str
    window: Window
    h: int
    cap: int | None
    failed_at: int | None = None
    certificates: tuple[CoverCertificate, ...] = field(default=(), repr=False)
    uncovered: tuple[int, ...] = ()

    @property
    def covered(self) -> bool:
        return self.status == COVERED

    def to_json(self, with_certificates: bool = False) -> dict:
        out = {"status": self.status, "window": self.window.to_json(),
               "h": self.h, "cap": self.cap, "failed_at": self.failed_at,
               "uncovered": list(self.uncovered)}
        if with_certificates:
            out["certificates"] = [c.to_json() for c in self.certificates]
        return out


def _default_cap(g: int, window: Window, h: int) -> int:
    top = max(canonical_repr(g, window.lo).leading_index,
              canonical_repr(g, window.hi).leading_index, 0)
    return top + 2 * h + 2


def _ball(g: int, h: int, cap: int):
    eng = _engine(GeneratingSetSpec.single(g, cap))
    eng.radius(h)
    vals, words = [], []
    for j in range(h + 1):
        for v, w in eng.layers[j].items():
            vals.append(v)
            words.append(w)
    return vals, words


def net_check_window(C, base: int, h: int, window, cap: int | None = None,
                     exhaustive: bool = False) -> Verdict:
    """Check that every ``n`` in ``window`` is within distance ``h`` of ``C``.

    ``C`` may be

    * a :class:`NetSpec` or any predicate / container: coverage is searched
      over words of length <= h with exponents <= ``cap``; a miss is
      reported as ``undecided`` since longer exponents were not tried;
    * a finite collection of integers: coverage is decided exactly with the
      g-adic length, and a miss is a ``counterexample``.

    Stops at the first uncovered ``n`` unless ``exhaustive`` is set, in
    which case every uncovered point is collected in ``uncovered``.
    """
    window = as_window(window)
    if cap is None:
        cap = _default_cap(base, window, h)
    if isinstance(C, NetSpec):
        return _check_netspec(C, base, h, window, cap, exhaustive)
    if callable(C):
        return _check_predicate(C, base, h, window, cap, exhaustive)
    if isinstance(C, Collection):
        return _check_finite(sorted(set(C)), base, h, window, exhaustive)
    return _check_predicate(C.__contains__, base, h, window, cap, exhaustive)


def _finish(status_on_miss, window, h, cap, certs, misses) -> Verdict:
    if misses:
        return Verdict(status_on_miss, window, h, cap, misses[0],
                       tuple(certs), tuple(misses))
    return Verdict(COVERED, window, h, cap, None, tuple(certs))


def _check_predicate(pred: Callable[[int], bool], g, h, window, cap,
                     exhaustive=False) -> Verdict:
    vals, words = _ball(g, h, cap)
    certs, misses = [], []
    for n in window:
        for v, w in zip(vals, words):
            if pred(n - v):
                certs.append(CoverCertificate(n, n - v, w))
                break
        else:
            misses.append(n)
            if not exhaustive:
                break
    return _finish(UNDECIDED, window, h, cap, certs, misses)


def _check_netspec(spec: NetSpec, g, h, window, cap, exhaustive=False,
                   chunk: int = 512) -> Verdict:
    if spec.base != g:
        return _check_predicate(spec.__contains__, g, h, window, cap, exhaustive)
    vals, words = _ball(g, h, cap)
    reach = max(abs(v) for v in vals) + max(abs(window.lo), abs(window.hi))
    if reach * g >= 2 ** 62:
        return _check_predicate(spec.__contains__, g, h, window, cap, exhaustive)
    V = np.array(vals, dtype=np.int64)
    certs, misses = [], []
    for start in range(window.lo, window.hi + 1, chunk):
        ns = np.arange(start, min(start + chunk, window.hi + 1), dtype=np.int64)
        ok = lengths_array(g, ns[:, None] - V[None, :]) % spec.stride == 0
        hit = ok.any(axis=1)
        first = ok.argmax(axis=1)
        for n, found, j in zip(ns.tolist(), hit.tolist(), first.tolist()):
            if not found:
                misses.append(n)
                if not exhaustive:
                    return _finish(UNDECIDED, window, h, cap, certs, misses)
                continue
            certs.append(CoverCertificate(n, n - vals[j], words[j]))
    return _finish(UNDECIDED, window, h, cap, certs, misses)


def _check_finite(members: list[int], g, h, window, exhaustive=False) -> Verdict:
    certs, misses = [], []
    for n in window:
        for c in members:
            rep = canonical_repr(g, n - c)
            if rep.length <= h:
                certs.append(CoverCertificate(n, c, tuple(reversed(rep.terms()))))
                break
        else:
            misses.append(n)
            if not exhaustive:
                break
    return _finish(COUNTEREXAMPLE, window, h, None, certs, misses)


def _as_predicate(C) -> Callable[[int], bool]:
    if callable(C) and not isinstance(C, NetSpec):
        return C
    return C.__contains__


def superset_translate_closure_check(C, base: int, h: int, window,
                                     shifts: Iterable[int] = (0, 1),
                                     extras: Iterable[int] = (),
                                     cap: int | None = None) -> bool:
    """Re-check coverage of ``C + t`` for each shift and ``C | {e}`` for
    each extra element; True iff every variant is covered on ``window``."""
    pred = _as_predicate(C)
    for t in shifts:
        moved = (lambda t: lambda x: pred(x - t))(t)
        if not net_check_window(moved, base, h, window, cap).covered:
            return False
    for e in extras:
        grown = (lambda e: lambda x: x == e or pred(x))(e)
        if not net_check_window(grown, base, h, window, cap).covered:
            return False
    return True


def _abs_order(xs: Iterable[int]) -> list[int]:
    return sorted(xs, key=lambda c: (abs(c), c))


def greedy_minimal_net(base: int, h: int, window) -> list[int]:
    """Heuristic experiment: thin ``window`` itself into a set that still
    covers ``window`` at radius ``h``, removing points in order of
    increasing ``|c|`` (negative first) whenever coverage survives.

    The result is minimal relative to the window only; it says nothing
    about minimal nets of the whole space.
    """
    window = as_window(window)
    xs = np.arange(window.lo, window.hi + 1, dtype=np.int64)
    near = lengths_array(base, xs[:, None] - xs[None, :]) <= h
    cover = near.sum(axis=1)
    alive = np.ones(len(xs), dtype=bool)
    for c in _abs_order(xs.tolist()):
        j = c - window.lo
        hits = near[:, j]
        if np.all(cover[hits] >= 2):
            alive[j] = False
            cover[hits] -= 1
    return xs[alive].tolist()
