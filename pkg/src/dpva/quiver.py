"""Quivers over a semisimple base of orthogonal idempotents, and path words.

Paths compose left to right: a word (a1, ..., an) needs head(ai) = tail(ai+1).
The trivial path at vertex s is the idempotent e_s; it is a Word with no
letters and an anchor vertex.  Invertible arrows b come with a formal partner
b^-1 (swapped endpoints) subject to the cancellations b.b^-1 = e_tail(b) and
b^-1.b = e_head(b).  Jet quivers carry one arrow D^k(g) per base arrow g and
order k up to a finite cap; order 0 keeps the base name.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InversesNotJettable, QuiverError


def inverse_name(name):
    return name + "^-1"


def jet_arrow_name(base, k):
    return base if k == 0 else f"D^{k}({base})"


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: str
    head: str
    invertible: bool = False
    inverse_of: str | None = None  # set on the formal partner only
    star: str | None = None        # involution partner in a double quiver
    sign: int = 1                  # +1 on original arrows, -1 on starred partners
    base: str | None = None        # order-0 arrow name, jet quivers only
    jet_order: int | None = None   # k in D^k(base), jet quivers only


class Quiver:
    def __init__(self, vertices, arrows, jet_cap=None, name=""):
        self.name = name
        self.vertices = tuple(vertices)
        self.jet_cap = jet_cap
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex ids")
        self._vindex = {v: i for i, v in enumerate(self.vertices)}

        full = []
        for a in arrows:
            full.append(a)
            if a.invertible:
                inv = inverse_name(a.name)
                if not any(x.name == inv for x in arrows):
                    full.append(Arrow(inv, a.head, a.tail, inverse_of=a.name))
        self.arrows = tuple(full)
        self._by_name = {}
        for a in self.arrows:
            if a.name in self._by_name:
                raise QuiverError(f"duplicate arrow id {a.name!r}")
            if a.tail not in self._vindex or a.head not in self._vindex:
                raise QuiverError(f"arrow {a.name!r} references undeclared vertex")
            self._by_name[a.name] = a
        self._aindex = {a.name: i for i, a in enumerate(self.arrows)}

        # inverse pairing must swap endpoints
        self._inv = {}
        for a in self.arrows:
            if a.inverse_of is not None:
                b = self._by_name.get(a.inverse_of)
                if b is None or (a.tail, a.head) != (b.head, b.tail):
                    raise QuiverError(f"bad inverse pairing on {a.name!r}")
                self._inv[a.name] = b.name
                self._inv[b.name] = a.name
        # star involution: declared on the +1 arrow, endpoints swapped
        self._star = {}
        for a in self.arrows:
            if a.star is not None:
                b = self._by_name.get(a.star)
                if b is None or (a.tail, a.head) != (b.head, b.tail):
                    raise QuiverError(f"bad star pairing on {a.name!r}")
                self._star[a.name] = b.name
                self._star[b.name] = a.name
        if jet_cap is not None:
            for a in self.arrows:
                if a.jet_order is None or a.base is None:
                    raise QuiverError(f"jet quiver arrow {a.name!r} lacks jet data")

    # -- lookups -----------------------------------------------------------
    @property
    def is_jet(self):
        return self.jet_cap is not None

    def arrow(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise QuiverError(f"unknown arrow id {name!r}") from None

    def has_arrow(self, name):
        return name in self._by_name

    def aindex(self, name):
        if name not in self._aindex:
            raise QuiverError(f"unknown arrow id {name!r}")
        return self._aindex[name]

    def vindex(self, v):
        if v not in self._vindex:
            raise QuiverError(f"unknown vertex id {v!r}")
        return self._vindex[v]

    def inv(self, name):
        """Name of the formal inverse partner, or None."""
        return self._inv.get(name)

    def star(self, name):
        return self._star.get(name)

    def sign(self, name):
        return self.arrow(name).sign

    def direct_arrows(self):
        """Arrows that are not formal inverse partners."""
        return [a for a in self.arrows if a.inverse_of is None]

    # -- jets --------------------------------------------------------------
    def jet(self, cap, name=None):
        """Materialize the jet quiver with generators D^k(g), k <= cap."""
        if self.is_jet:
            raise QuiverError("already a jet quiver")
        if self._inv:
            raise InversesNotJettable(
                "jets of invertible generators are not supported")
        arrows = []
        for a in self.arrows:
            for k in range(cap + 1):
                arrows.append(Arrow(jet_arrow_name(a.name, k), a.tail, a.head,
                                    star=a.star if k == 0 else None,
                                    sign=a.sign, base=a.name, jet_order=k))
        return Quiver(self.vertices, arrows, jet_cap=cap,
                      name=name or (self.name + "_jets" if self.name else ""))

    def shift_arrow(self, name):
        """D^k(g) -> D^{k+1}(g); raises CapExceeded past the cap."""
        from .errors import CapExceeded
        a = self.arrow(name)
        if not self.is_jet:
            raise QuiverError("not a jet quiver")
        k = a.jet_order + 1
        if k > self.jet_cap:
            raise CapExceeded(
                f"jet order {k} of {a.base!r} exceeds the cap {self.jet_cap}")
        return jet_arrow_name(a.base, k)

    def base_quiver(self, name=""):
        """Order-0 part of a jet quiver, as a plain quiver."""
        if not self.is_jet:
            return self
        arrows = [replace(a, base=None, jet_order=None)
                  for a in self.arrows if a.jet_order == 0]
        return Quiver(self.vertices, arrows, name=name)

    # -- words -------------------------------------------------------------
    def word_tail(self, w):
        return w.anchor if not w.letters else self.arrow(w.letters[0]).tail

    def word_head(self, w):
        return w.anchor if not w.letters else self.arrow(w.letters[-1]).head

    def word_closed(self, w):
        return self.word_tail(w) == self.word_head(w)

    def word_key(self, w):
        """Canonical term order: length, then arrow indices (declaration order)."""
        if not w.letters:
            return (0, (self.vindex(w.anchor),))
        return (len(w.letters), tuple(self.aindex(l) for l in w.letters))


class Word:
    """A composable path, or the trivial path e_anchor when letters is empty."""
    __slots__ = ("letters", "anchor")

    def __init__(self, letters=(), anchor=None):
        self.letters = tuple(letters)
        self.anchor = None if self.letters else anchor
        if not self.letters and self.anchor is None:
            raise QuiverError("trivial path needs an anchor vertex")

    def __eq__(self, other):
        return (isinstance(other, Word) and self.letters == other.letters
                and self.anchor == other.anchor)

    def __hash__(self):
        return hash((self.letters, self.anchor))

    def __repr__(self):
        if not self.letters:
            return f"e_{self.anchor}"
        return ".".join(self.letters)

    def is_trivial(self):
        return not self.letters


def trivial(vertex):
    return Word((), anchor=vertex)
