"""Additive complements of finite sets.

``C`` is a complement to ``W`` if ``W + C = Z`` and an asymptotic
complement if ``W + C`` misses only finitely many integers.  Complements
here are eventually periodic, which makes both questions decidable: the
sumset is eventually periodic with the same period, so it is enough to
inspect a finite core and the residues of the two tails.

Minimal complements are produced by walking ``C`` in a fixed order and
dropping every element whose removal keeps ``W + C = Z``.  Only the
elements of ``c + W`` can lose their representation when ``c`` is dropped,
which keeps each decision local.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import NotAComplementError, NotAMemberError
from .window import Window, as_window


@dataclass(frozen=True)
class FiniteSet:
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(sorted(set(int(x) for x in self.elements)))
        if not els:
            raise ValueError("W must be nonempty")
        object.__setattr__(self, "elements", els)

    @classmethod
    def of(cls, *xs: int) -> "FiniteSet":
        return cls(tuple(xs))

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    @property
    def diameter(self) -> int:
        return self.max - self.min

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def to_json(self) -> dict:
        return {"elements": list(self.elements)}

    @classmethod
    def from_json(cls, obj) -> "FiniteSet":
        if isinstance(obj, dict):
            obj = obj["elements"]
        return cls(tuple(obj))


def _as_finite(W) -> FiniteSet:
    return W if isinstance(W, FiniteSet) else FiniteSet(tuple(W))


@dataclass(frozen=True)
class EventuallyPeriodicSet:
    """Explicit on ``[lo, hi]``; above ``hi`` membership is ``x % period in
    pos_residues``, below ``lo`` it is ``x % period in neg_residues``."""

    period: int
    lo: int
    hi: int
    members: frozenset[int] = frozenset()
    pos_residues: frozenset[int] = frozenset()
    neg_residues: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be >= 1")
        if self.lo > self.hi:
            raise ValueError("core window is empty")
        m = self.period
        object.__setattr__(self, "members", frozenset(int(x) for x in self.members))
        object.__setattr__(self, "pos_residues", frozenset(int(r) % m for r in self.pos_residues))
        object.__setattr__(self, "neg_residues", frozenset(int(r) % m for r in self.neg_residues))
        if any(not self.lo <= x <= self.hi for x in self.members):
            raise ValueError("core members must lie in [lo, hi]")

    @classmethod
    def periodic(cls, period: int, residues: Iterable[int]) -> "EventuallyPeriodicSet":
        res = frozenset(r % period for r in residues)
        members = {x for x in range(0, period) if x % period in res}
        return cls(period, 0, period - 1, frozenset(members), res, res)

    @classmethod
    def integers(cls) -> "EventuallyPeriodicSet":
        return cls.periodic(1, [0])

    @classmethod
    def from_predicate(cls, period: int, lo: int, hi: int, pred,
                       pos_residues: Iterable[int], neg_residues: Iterable[int]
                       ) -> "EventuallyPeriodicSet":
        members = frozenset(x for x in range(lo, hi + 1) if pred(x))
        return cls(period, lo, hi, members, frozenset(pos_residues), frozenset(neg_residues))

    def __contains__(self, x) -> bool:
        if x > self.hi:
            return x % self.period in self.pos_residues
        if x < self.lo:
            return x % self.period in self.neg_residues
        return x in self.members

    def widened(self, lo: int, hi: int) -> "EventuallyPeriodicSet":
        """Same set with a larger explicit core."""
        lo, hi = min(lo, self.lo), max(hi, self.hi)
        members = frozenset(x for x in range(lo, hi + 1) if x in self)
        return EventuallyPeriodicSet(self.period, lo, hi, members,
                                     self.pos_residues, self.neg_residues)

    def translate(self, t: int) -> "EventuallyPeriodicSet":
        m = self.period
        return EventuallyPeriodicSet(
            m, self.lo + t, self.hi + t, frozenset(x + t for x in self.members),
            frozenset((r + t) % m for r in self.pos_residues),
            frozenset((r + t) % m for r in self.neg_residues))

    def union(self, other: "EventuallyPeriodicSet") -> "EventuallyPeriodicSet":
        m = _lcm(self.period, other.period)
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        pos = {r for r in range(m) if r in _lift(self.pos_residues, self.period, m)
               or r in _lift(other.pos_residues, other.period, m)}
        neg = {r for r in range(m) if r in _lift(self.neg_residues, self.period, m)
               or r in _lift(other.neg_residues, other.period, m)}
        members = frozenset(x for x in range(lo, hi + 1) if x in self or x in other)
        return EventuallyPeriodicSet(m, lo, hi, members, frozenset(pos), frozenset(neg))

    def with_points(self, add: Iterable[int] = (), remove: Iterable[int] = ()
                    ) -> "EventuallyPeriodicSet":
        add, remove = set(add), set(remove)
        pts = add | remove
        base = self.widened(min(pts, default=self.lo), max(pts, default=self.hi))
        members = (base.members | add) - remove
        return EventuallyPeriodicSet(base.period, base.lo, base.hi, frozenset(members),
                                     base.pos_residues, base.neg_residues)

    def window_members(self, window) -> list[int]:
        w = as_window(window)
        return [x for x in w if x in self]

    def to_json(self) -> dict:
        return {"period": self.period,
                "core": {"lo": self.lo, "hi": self.hi, "members": sorted(self.members)},
                "pos_residues": sorted(self.pos_residues),
                "neg_residues": sorted(self.neg_residues)}

    @classmethod
    def from_json(cls, obj: dict) -> "EventuallyPeriodicSet":
        core = obj["core"]
        return cls(int(obj["period"]), int(core["lo"]), int(core["hi"]),
                   frozenset(core["members"]), frozenset(obj["pos_residues"]),
                   frozenset(obj["neg_residues"]))


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def _lift(res: frozenset[int], m: int, big: int) -> set[int]:
    return {r for r in range(big) if r % m in res}


def sumset(W, C: EventuallyPeriodicSet) -> EventuallyPeriodicSet:
    """Exact ``W + C``.  Beyond the widened core every ``x - w`` falls in a
    tail of ``C``, so the tails are the residues shifted by ``W``."""
    W = _as_finite(W)
    m = C.period
    lo, hi = C.lo + W.min, C.hi + W.max
    members = frozenset(x for x in range(lo, hi + 1)
                        if any((x - w) in C for w in W))
    pos = frozenset((r + w) % m for r in C.pos_residues for w in W)
    neg = frozenset((r + w) % m for r in C.neg_residues for w in W)
    return EventuallyPeriodicSet(m, lo, hi, members, pos, neg)


def is_complement(W, C: EventuallyPeriodicSet) -> bool:
    S = sumset(W, C)
    full = frozenset(range(S.period))
    return (S.pos_residues == full and S.neg_residues == full
            and len(S.members) == S.hi - S.lo + 1)


@dataclass(frozen=True)
class AsymptoticVerdict:
    is_asymptotic: bool
    exceptional: frozenset[int] | None = None
    # (side, residue, period): every x beyond the core on ``side`` with
    # x % period == residue is missed
    missing_class: tuple[str, int, int] | None = None

    def __iter__(self):
        yield self.is_asymptotic
        yield self.exceptional if self.is_asymptotic else self.missing_class

    def to_json(self) -> dict:
        return {"asymptotic": self.is_asymptotic,
                "exceptional": sorted(self.exceptional) if self.exceptional is not None else None,
                "missing_class": list(self.missing_class) if self.missing_class else None}


def is_asymptotic_complement(W, C: EventuallyPeriodicSet) -> AsymptoticVerdict:
    """Decide ``|Z \\ (W + C)| < inf``; unpacks as ``(flag, exceptional set
    or missing residue class)``."""
    S = sumset(W, C)
    m = S.period
    for side, res in (("+", S.pos_residues), ("-", S.neg_residues)):
        for r in range(m):
            if r not in res:
                return AsymptoticVerdict(False, None, (side, r, m))
    missed = frozenset(x for x in range(S.lo, S.hi + 1) if x not in S.members)
    return AsymptoticVerdict(True, missed)


@dataclass(frozen=True)
class MinimalityCertificate:
    """``target`` is in ``c + W`` and every other candidate
    ``target - w`` (``w`` in ``W``) is outside ``C``."""

    c: int
    target: int
    checked: tuple[int, ...]

    def verify(self, W, C) -> bool:
        W = _as_finite(W)
        if self.target - self.c not in W or self.c not in C:
            return False
        cands = tuple(self.target - w for w in W.elements)
        if set(cands) != set(self.checked):
            return False
        return all(x == self.c or x not in C for x in cands)

    def to_json(self) -> dict:
        return {"c": self.c, "target": self.target, "checked": list(self.checked)}

    @classmethod
    def from_json(cls, obj: dict) -> "MinimalityCertificate":
        return cls(int(obj["c"]), int(obj["target"]), tuple(obj["checked"]))


def _blocking_target(W: FiniteSet, C, c: int) -> int | None:
    for w in W.elements:
        n = c + w
        if not any((n - v) != c and (n - v) in C for v in W.elements):
            return n
    return None


def removable(W, C, c: int) -> bool:
    """True iff ``C - {c}`` still covers ``c + W``.

    ``C`` is anything supporting ``in``; it is assumed to be a complement.
    """
    W = _as_finite(W)
    if c not in C:
        raise NotAMemberError(f"{c} is not in C")
    return _blocking_target(W, C, c) is None


def certify(W, C, c: int) -> MinimalityCertificate | None:
    """Certificate that ``c`` cannot be dropped, or None if it can."""
    W = _as_finite(W)
    n = _blocking_target(W, C, c)
    if n is None:
        return None
    return MinimalityCertificate(c, n, tuple(n - w for w in W.elements))


def abs_order(lo: int, hi: int) -> list[int]:
    """Integers of ``[lo, hi]`` by increasing ``|x|``, negatives first."""
    return sorted(range(lo, hi + 1), key=lambda x: (abs(x), x))


@dataclass(frozen=True)
class PrunedView:
    """Membership of the pruned complement on ``window`` widened by
    ``margin``; outside that range nothing is known."""

    window: Window
    margin: int
    members: frozenset[int]
    certificates: tuple[MinimalityCertificate, ...] = field(repr=False, default=())

    @property
    def extent(self) -> Window:
        return self.window.widen(self.margin)

    def __contains__(self, x) -> bool:
        if x not in self.extent:
            raise KeyError(f"{x} is outside the pruned range {self.extent}")
        return x in self.members

    def core_members(self) -> list[int]:
        return sorted(x for x in self.members if x in self.window)

    def to_json(self) -> dict:
        return {"window": self.window.to_json(), "margin": self.margin,
                "members": self.core_members(),
                "certificates": [c.to_json() for c in self.certificates]}


class _Pruning:
    """Membership of C minus the elements removed so far."""

    def __init__(self, C):
        self.C = C
        self.removed: set[int] = set()

    def __contains__(self, x) -> bool:
        return x not in self.removed and x in self.C


def prune_minimal(W, C: EventuallyPeriodicSet, window) -> PrunedView:
    """Thin ``C`` to a minimal complement of ``W``, viewed on ``window``.

    Elements are visited in :func:`abs_order` and dropped when
    :func:`removable` allows it against the current state.  When ``c`` is
    visited every ``|x| < |c|`` is already decided and every ``|x| > |c|``
    still has its original membership, so decisions for ``|c| <= R`` only
    need ``C`` itself.  Visiting up to the window plus twice the diameter of
    ``W`` makes every decision within one diameter of the window final,
    which is what the certificates on the window rely on.
    """
    W = _as_finite(W)
    window = as_window(window)
    if not is_complement(W, C):
        raise NotAComplementError("C is not a complement to W")
    d = W.diameter
    margin = 2 * d
    reach = max(abs(window.lo), abs(window.hi)) + margin
    state = _Pruning(C)
    for c in abs_order(-reach, reach):
        if c in state and _blocking_target(W, state, c) is None:
            state.removed.add(c)
    extent = window.widen(d)
    members = frozenset(x for x in extent if x in state)
    view = PrunedView(window, d, members)
    certs = tuple(certify(W, view, c) for c in view.core_members())
    return PrunedView(window, d, members, certs)


def is_minimal_on_window(W, C, window):
    """``(flag, certificates)``: flag is True iff no element of ``C`` in
    ``window`` is removable.  ``C`` must answer membership up to one
    diameter of ``W`` beyond the window."""
    W = _as_finite(W)
    window = as_window(window)
    certs = []
    for c in window:
        if c not in C:
            continue
        cert = certify(W, C, c)
        if cert is None:
            return False, tuple(certs)
        certs.append(cert)
    return True, tuple(certs)
