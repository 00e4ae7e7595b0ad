"""Weight lattice of type A_n, written in the fundamental-weight basis."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class RankedCartan:
    """Type A_n Cartan datum; the index set is ``1..n``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")

    @property
    def indices(self) -> range:
        return range(1, self.n + 1)

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} out of range 1..{self.n}")

    def entry(self, i: int, j: int) -> int:
        """Cartan matrix entry a_ij = <h_i, alpha_j>."""
        self.check_index(i)
        self.check_index(j)
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0


@dataclass(frozen=True, order=True)
class Weight:
    """Integer vector; ``coeffs[i - 1]`` is the coefficient of Lambda_i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a weight needs rank >= 1")

    @classmethod
    def zero(cls, n: int) -> Weight:
        return cls((0,) * n)

    @classmethod
    def fundamental(cls, n: int, k: int) -> Weight:
        """Lambda_k; ``k`` of 0 or n+1 gives the zero weight."""
        if not 0 <= k <= n + 1:
            raise IndexError(f"fundamental weight index {k} out of range 0..{n + 1}")
        coeffs = [0] * n
        if 1 <= k <= n:
            coeffs[k - 1] = 1
        return cls(tuple(coeffs))

    @classmethod
    def sum_of(cls, n: int, indices: Iterable[int]) -> Weight:
        """Lambda_{k_1} + Lambda_{k_2} + ...; indices 0 and n+1 contribute nothing."""
        total = cls.zero(n)
        for k in indices:
            total = total + cls.fundamental(n, k)
        return total

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def _check(self, other: Weight) -> None:
        if self.n != other.n:
            from .errors import RankMismatchError

            raise RankMismatchError(f"rank {self.n} vs rank {other.n}")

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> Weight:
        return Weight(tuple(k * a for a in self.coeffs))

    def __str__(self) -> str:
        return format_weight(self)


def pairing(cartan: RankedCartan, lam: Weight, i: int) -> int:
    """<h_i, lam>; in the Lambda basis this is just the i-th coordinate."""
    cartan.check_index(i)
    if lam.n != cartan.n:
        from .errors import RankMismatchError

        raise RankMismatchError(f"weight of rank {lam.n} paired in rank {cartan.n}")
    return lam.coeffs[i - 1]


def simple_root(cartan: RankedCartan, i: int) -> Weight:
    """alpha_i = 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1}."""
    cartan.check_index(i)
    return Weight(tuple(cartan.entry(j, i) for j in cartan.indices))


def is_dominant(lam: Weight) -> bool:
    return all(c >= 0 for c in lam.coeffs)


def from_epsilon_basis(cartan: RankedCartan, counts: Sequence[int]) -> Weight:
    """Convert sum_j counts[j] * eps_j (j = 1..n+1) to the Lambda basis.

    With eps_1 = Lambda_1, eps_i = Lambda_i - Lambda_{i-1} and
    eps_{n+1} = -(eps_1 + ... + eps_n), the coefficient of Lambda_i is
    counts[i] - counts[i+1].
    """
    n = cartan.n
    if len(counts) != n + 1:
        raise ValueError(f"expected {n + 1} epsilon counts, got {len(counts)}")
    return Weight(tuple(counts[i] - counts[i + 1] for i in range(n)))


def format_weight(lam: Weight) -> str:
    """Render as ``L2+L5``, ``2*L2``, ``L1-L3`` or ``0``."""
    out = []
    for idx, c in enumerate(lam.coeffs, start=1):
        if c == 0:
            continue
        mag = abs(c)
        term = f"L{idx}" if mag == 1 else f"{mag}*L{idx}"
        if c < 0:
            out.append("-" + term)
        else:
            out.append(("+" if out else "") + term)
    return "".join(out) if out else "0"


_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*\*\s*)?L(\d+)\s*")


def parse_weight(text: str, n: int) -> Weight:
    """Inverse of :func:`format_weight`."""
    s = text.strip()
    if s == "0":
        return Weight.zero(n)
    coeffs = [0] * n
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or (not first and not m.group(1)):
            raise ValueError(f"malformed weight at position {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(3))
        if not 1 <= k <= n:
            raise ValueError(f"weight index {k} out of range 1..{n}: {text!r}")
        coeffs[k - 1] += sign * int(m.group(2) or 1)
        pos = m.end()
        first = False
    if first:
        raise ValueError(f"empty weight: {text!r}")
    return Weight(tuple(coeffs))
