"""Laurent monomials in the variables Y_i(n) and their crystal structure."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Optional

from . import _backend
from .errors import MonomialParseError, RankMismatchError
from .weights import RankedCartan, Weight


class Convention:
    """Rank plus the integer matrix ``c`` entering the correction monomials.

    ``c`` maps ordered pairs ``(i, j)``, ``i != j``, to integers with
    ``c[i, j] + c[j, i] == 1``. Omitting it selects the type A default
    ``c[i, j] = 1`` for ``i < j`` and ``0`` for ``i > j``.
    """

    __slots__ = ("cartan", "c", "_templates", "templates", "_hash")

    def __init__(self, n: int, c: Optional[Mapping[tuple[int, int], int]] = None):
        self.cartan = RankedCartan(n)
        pairs = [(i, j) for i in self.cartan.indices for j in self.cartan.indices if i != j]
        if c is None:
            c = {(i, j): 1 if i < j else 0 for i, j in pairs}
        missing = [p for p in pairs if p not in c]
        if missing:
            raise ValueError(f"c-matrix is missing entries {missing}")
        for i, j in pairs:
            if c[i, j] + c[j, i] != 1:
                raise ValueError(f"c[{i},{j}] + c[{j},{i}] = {c[i, j] + c[j, i]}, expected 1")
        self.c = {p: int(c[p]) for p in pairs}
        self._templates = {i: self._a_template(i) for i in self.cartan.indices}
        self.templates = tuple(self._templates[i] for i in self.cartan.indices)
        self._hash = hash((n, tuple(sorted(self.c.items()))))

    @property
    def n(self) -> int:
        return self.cartan.n

    @property
    def is_default(self) -> bool:
        return all(v == (1 if i < j else 0) for (i, j), v in self.c.items())

    def reindexed(self, shifts: Mapping[int, int]) -> Convention:
        """The convention ``c'_ij = c_ij + m_i - m_j`` matched by ``Y_i(n) -> Y_i(n + m_i)``."""
        m = {i: shifts.get(i, 0) for i in self.cartan.indices}
        return Convention(self.n, {(i, j): v + m[i] - m[j] for (i, j), v in self.c.items()})

    def _a_template(self, i: int) -> tuple:
        # A_i(0) as canonical items; A_i(s) adds s to every shift
        exps = {(i, 0): 1, (i, 1): 1}
        for j in self.cartan.indices:
            if j != i and self.cartan.entry(j, i):
                key = (j, self.c[j, i])
                exps[key] = exps.get(key, 0) + self.cartan.entry(j, i)
        return tuple(sorted((j, s, e) for (j, s), e in exps.items() if e))

    def __eq__(self, other):
        return isinstance(other, Convention) and self.n == other.n and self.c == other.c

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Convention(n={self.n}{'' if self.is_default else ', custom c'})"


class Monomial:
    """Immutable sparse Laurent monomial over a fixed rank.

    Stored as ``items``: ``(index, shift, exponent)`` triples sorted by
    ``(index, shift)``, with no zero exponents, so two monomials are equal
    exactly when their item tuples are.
    """

    __slots__ = ("rank", "items", "_hash", "_sig", "_text")

    def __init__(self, rank: int, exps: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = ()):
        if isinstance(exps, Mapping):
            triples = ((i, s, e) for (i, s), e in exps.items())
        else:
            triples = exps
        acc: dict[tuple[int, int], int] = {}
        for i, s, e in triples:
            if not 1 <= i <= rank:
                raise IndexError(f"variable index {i} out of range 1..{rank}")
            acc[i, s] = acc.get((i, s), 0) + int(e)
        self._set(rank, tuple(sorted((i, s, e) for (i, s), e in acc.items() if e)))

    def _set(self, rank, items):
        self.rank = rank
        self.items = items
        self._hash = hash((rank, items))
        self._sig = None
        self._text = None

    @classmethod
    def _raw(cls, rank: int, items: tuple) -> Monomial:
        m = cls.__new__(cls)
        m._set(rank, items)
        return m

    @classmethod
    def one(cls, rank: int) -> Monomial:
        return cls._raw(rank, ())

    @classmethod
    def y(cls, rank: int, i: int, shift: int, exp: int = 1) -> Monomial:
        """The single factor Y_i(shift)^exp."""
        return cls(rank, ((i, shift, exp),))

    def _same_rank(self, other: Monomial) -> None:
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        self._same_rank(other)
        return Monomial._raw(self.rank, _backend.merge(self.items, other.items))

    def inverse(self) -> Monomial:
        return Monomial._raw(self.rank, tuple((i, s, -e) for i, s, e in self.items))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if other.__class__ is not Monomial:
            return NotImplemented
        return self.items == other.items and self.rank == other.rank

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def is_one(self) -> bool:
        return not self.items

    def exponent(self, i: int, shift: int) -> int:
        for j, s, e in self.items:
            if j == i and s == shift:
                return e
        return 0

    def signatures(self):
        """Cached ``[(phi, eps, n_f, n_e)]`` for colors 1..rank."""
        if self._sig is None:
            self._sig = _backend.signatures(self.items, self.rank)
        return self._sig

    def weight(self) -> Weight:
        coeffs = [0] * self.rank
        for i, _, e in self.items:
            coeffs[i - 1] += e
        return Weight(tuple(coeffs))

    def phi(self, i: int) -> int:
        return self.signatures()[i - 1][0]

    def eps(self, i: int) -> int:
        return self.signatures()[i - 1][1]

    def __str__(self):
        if self._text is None:
            self._text = render(self)
        return self._text

    def __repr__(self):
        return f"Monomial({self.rank}, {str(self)!r})"

    def __lt__(self, other: Monomial) -> bool:
        return str(self) < str(other)

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.items]

    @classmethod
    def from_json(cls, rank: int, data) -> Monomial:
        return cls(rank, ((int(i), int(s), int(e)) for i, s, e in data))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def weight(m: Monomial) -> Weight:
    return m.weight()


def phi(m: Monomial, i: int) -> int:
    """max over n of sum_{k <= n} y_i(k), the empty prefix counting as 0."""
    if not 1 <= i <= m.rank:
        raise IndexError(f"color {i} out of range 1..{m.rank}")
    return m.phi(i)


def eps(m: Monomial, i: int) -> int:
    """max over n of -sum_{k > n} y_i(k), the empty suffix counting as 0."""
    if not 1 <= i <= m.rank:
        raise IndexError(f"color {i} out of range 1..{m.rank}")
    return m.eps(i)


def a_monomial(conv: Convention, i: int, shift: int) -> Monomial:
    """A_i(shift) = Y_i(shift) Y_i(shift+1) prod_{j != i} Y_j(shift + c_ji)^{<h_j, alpha_i>}."""
    conv.cartan.check_index(i)
    return Monomial._raw(conv.n, _backend.shifted(conv._templates[i], shift, 1))


def x_monomial(cartan: RankedCartan, i: int, shift: int) -> Monomial:
    """X_i(shift) = Y_{i-1}(shift+1)^{-1} Y_i(shift), with Y_0 = Y_{n+1} = 1."""
    n = cartan.n
    if not 1 <= i <= n + 1:
        raise IndexError(f"X index {i} out of range 1..{n + 1}")
    items = []
    if i >= 2:
        items.append((i - 1, shift + 1, -1))
    if i <= n:
        items.append((i, shift, 1))
    return Monomial._raw(n, tuple(items))


def _check(conv: Convention, m: Monomial, i: int) -> None:
    if m.rank != conv.n:
        raise RankMismatchError(f"monomial of rank {m.rank} under convention of rank {conv.n}")
    conv.cartan.check_index(i)


def f_tilde(conv: Convention, m: Monomial, i: int) -> Optional[Monomial]:
    """Lowering operator; None stands for the zero element."""
    _check(conv, m, i)
    phi_i, _, n_f, _ = m.signatures()[i - 1]
    if phi_i == 0:
        return None
    assert m.exponent(i, n_f) > 0 and m.exponent(i, n_f + 1) <= 0
    return Monomial._raw(m.rank, _backend.merge(m.items, _backend.shifted(conv._templates[i], n_f, -1)))


def e_tilde(conv: Convention, m: Monomial, i: int) -> Optional[Monomial]:
    """Raising operator; None stands for the zero element."""
    _check(conv, m, i)
    _, eps_i, _, n_e = m.signatures()[i - 1]
    if eps_i == 0:
        return None
    assert m.exponent(i, n_e + 1) < 0 and m.exponent(i, n_e) >= 0
    return Monomial._raw(m.rank, _backend.merge(m.items, _backend.shifted(conv._templates[i], n_e, 1)))


def arrows(conv: Convention, m: Monomial) -> list[tuple[Optional[Monomial], Optional[Monomial]]]:
    """``[(f_i m, e_i m)]`` for i = 1..n in one pass over ``m``."""
    if m.rank != conv.n:
        raise RankMismatchError(f"monomial of rank {m.rank} under convention of rank {conv.n}")
    rank = m.rank
    raw = Monomial._raw
    return [
        (None if down is None else raw(rank, down), None if up is None else raw(rank, up))
        for down, up in _backend.neighbors(m.items, rank, conv.templates)
    ]


def is_highest(conv: Convention, m: Monomial) -> bool:
    """True iff every raising operator kills ``m`` (equivalently every eps_i is 0)."""
    if m.rank != conv.n:
        raise RankMismatchError(f"monomial of rank {m.rank} under convention of rank {conv.n}")
    return _backend.epsilons_vanish(m.items)


def substitute_shifts(m: Monomial, shifts: Mapping[int, int]) -> Monomial:
    """Apply Y_i(n) -> Y_i(n + shifts[i])."""
    return Monomial(m.rank, ((i, s + shifts.get(i, 0), e) for i, s, e in m.items))


@lru_cache(maxsize=None)
def y_monomial(rank: int, i: int, shift: int) -> Monomial:
    return Monomial.y(rank, i, shift)


# -- text form ---------------------------------------------------------------


def render(m: Monomial) -> str:
    """Canonical text: factors sorted by (index, shift), ``^1`` elided, ``1`` when empty."""
    if not m.items:
        return "1"
    parts = []
    for i, s, e in m.items:
        parts.append(f"Y_{i}({s})" if e == 1 else f"Y_{i}({s})^{e}")
    return "*".join(parts)


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise MonomialParseError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, literal: str):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            self.fail(f"expected {literal!r}")
        self.pos += len(literal)

    def integer(self, signed: bool) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse(text: str, n: int) -> Monomial:
    """Parse ``Y_<i>(<shift>)[^<exp>]`` factors joined by ``*``; ``1`` is the empty monomial."""
    r = _Reader(text)
    if text.strip() == "1":
        return Monomial.one(n)
    if r.at_end():
        r.fail("empty monomial text")
    triples = []
    while True:
        r.expect("Y_")
        index_pos = r.pos
        i = r.integer(signed=False)
        if not 1 <= i <= n:
            r.pos = index_pos
            r.fail(f"variable index {i} out of range 1..{n}")
        r.expect("(")
        s = r.integer(signed=True)
        r.expect(")")
        e = 1
        r.skip_ws()
        if r.pos < len(text) and text[r.pos] == "^":
            r.pos += 1
            exp_pos = r.pos
            e = r.integer(signed=True)
            if e == 0:
                r.pos = exp_pos
                r.fail("exponent 0 is not allowed")
        triples.append((i, s, e))
        if r.at_end():
            break
        r.expect("*")
    return Monomial(n, triples)
