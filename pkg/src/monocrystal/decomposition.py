"""Fundamental monomial crystals of type A_n, their products, and the
closed-form decompositions checked against brute force."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Optional

from .crystal import Component, MonomialCrystal, decompose, generate_component, tensor_product
from .errors import RankMismatchError, TheoremViolation, UnsupportedWeight
from .monomial import Convention, Monomial, is_highest, x_monomial
from .tableaux import ssyt_count
from .weights import RankedCartan, Weight, format_weight


@lru_cache(maxsize=None)
def default_convention(n: int) -> Convention:
    return Convention(n)


def _check_index(n: int, k: int, name: str = "index") -> None:
    if not 1 <= k <= n:
        raise IndexError(f"{name} {k} out of range 1..{n}")


def Y(n: int, i: int, shift: int) -> Monomial:
    """Y_i(shift) over rank n, with Y_0 = Y_{n+1} = 1."""
    if i in (0, n + 1):
        return Monomial.one(n)
    return Monomial.y(n, i, shift)


def L(n: int, *indices: int) -> Weight:
    """Lambda_{k_1} + Lambda_{k_2} + ...; Lambda_0 and Lambda_{n+1} are zero."""
    return Weight.sum_of(n, indices)


# -- fundamental crystals ----------------------------------------------------


@lru_cache(maxsize=None)
def fundamental_crystal(n: int, k: int, shift: int) -> frozenset[Monomial]:
    """All X_{i_1}(k+N-1) X_{i_2}(k+N-2) ... X_{i_k}(N) for 1 <= i_1 < ... < i_k <= n+1."""
    _check_index(n, k)
    cartan = RankedCartan(n)
    out = set()
    for idx in itertools.combinations(range(1, n + 2), k):
        m = Monomial.one(n)
        for j, i in enumerate(idx):
            m = m * x_monomial(cartan, i, k + shift - 1 - j)
        out.add(m)
    return frozenset(out)


def prop42_member(n: int, m: Monomial, k: int, shift: int) -> bool:
    """Does ``m`` factor as prod_j Y_{a_j}(m_{j-1})^{-1} Y_{b_j}(m_j) with
    0 <= a_1 < b_1 < ... < a_r < b_r <= n+1, k+N = m_0 > ... > m_r = N and
    a_j + m_{j-1} = b_j + m_j?

    Factors have distinct indices, so they cannot cancel; the factorization
    is read off the support sorted by index, restoring the invisible
    boundary factors Y_0 and Y_{n+1} where the sign pattern needs them.
    """
    _check_index(n, k)
    if m.rank != n:
        raise RankMismatchError(f"monomial of rank {m.rank} tested in rank {n}")
    factors = [(i, s, e) for i, s, e in m.items]
    if any(e not in (1, -1) for _, _, e in factors):
        return False
    if len({i for i, _, _ in factors}) != len(factors):
        return False
    top, bottom = k + shift, shift
    if not factors or factors[0][2] == 1:
        factors.insert(0, (0, top, -1))
    if factors[-1][2] == -1:
        factors.append((n + 1, bottom, 1))
    if len(factors) % 2:
        return False
    prev_shift = top
    for j in range(0, len(factors), 2):
        a, sa, ea = factors[j]
        b, sb, eb = factors[j + 1]
        if ea != -1 or eb != 1 or not a < b:
            return False
        if sa != prev_shift or a + sa != b + sb:
            return False
        prev_shift = sb
    return prev_shift == bottom


# -- products ------------------------------------------------------------------


class ProductSet(NamedTuple):
    elements: frozenset
    pair_count: int


@dataclass(frozen=True)
class ProductSpec:
    """Ordered factors ``(p, m)`` standing for M(Y_p(m)) in rank ``n``."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(p), int(m)) for p, m in self.factors))
        if not self.factors:
            raise ValueError("a product needs at least one factor")
        for p, _ in self.factors:
            _check_index(self.n, p, "factor index")


def product_set(a, b) -> ProductSet:
    """Distinct pairwise products; ``pair_count`` is ``len(a) * len(b)``."""
    out = set()
    for x in a:
        for y in b:
            out.add(x * y)
    return ProductSet(frozenset(out), len(a) * len(b))


def multi_product(spec: ProductSpec) -> frozenset[Monomial]:
    p, m = spec.factors[0]
    acc = fundamental_crystal(spec.n, p, m)
    for p, m in spec.factors[1:]:
        acc = product_set(acc, fundamental_crystal(spec.n, p, m)).elements
    return acc


# -- closed-form predictions -------------------------------------------------


def predicted_tensor_decomposition(n: int, p: int, q: int) -> tuple[Weight, ...]:
    """Highest weights of B(Lambda_p) ⊗ B(Lambda_q), as a sorted tuple."""
    _check_index(n, p)
    _check_index(n, q)
    big, small = max(p, q), min(p, q)
    if p + q > n:
        out = [L(n, big + i, small - i) for i in range(0, n - big + 1)]
        out.append(L(n, p + q - n - 1))
    else:
        out = [L(n, big + i, small - i) for i in range(0, small)]
        out.append(L(n, p + q))
    return tuple(sorted(out))


def predicted_product_decomposition(n: int, p: int, q: int, m: int) -> tuple[Weight, ...]:
    """Highest weights of M(Y_p(m)) · M(Y_q(1)) for m >= 1, as a sorted tuple."""
    _check_index(n, p)
    _check_index(n, q)
    if m < 1:
        raise ValueError(f"predictions need m >= 1, got {m}")
    out = [L(n, p, q)]
    if p + q > n:
        low = max(1, p + q - n, q + 1 - m)
    else:
        low = max(1, q + 1 - m)
    out.extend(L(n, p + q - i, i) for i in range(low, min(p, q)))
    if p + q > n:
        if m >= n - p + 2:
            out.append(L(n, p + q - n - 1))
    elif m >= q + 1:
        out.append(L(n, p + q))
    return tuple(sorted(out))


def weight_monomials_in_fundamental(n: int, q: int, target: Weight, p: int) -> Monomial:
    """The unique monomial of weight ``target`` in M(Y_q(1)), for the four
    weight patterns that can complete Y_p(m) to a highest product."""
    _check_index(n, q)
    _check_index(n, p)
    if target.n != n:
        raise RankMismatchError(f"weight of rank {target.n} in rank {n}")
    result = None
    if target == L(n, q):
        result = Y(n, q, 1)
    elif p + q > n and target == L(n, p + q - n - 1) - L(n, p):
        result = Y(n, p + q - n - 1, n - p + 2) / Y(n, p, n - p + 2)
    elif p + q <= n and target == L(n, p + q) - L(n, p):
        result = Y(n, p + q, 1) / Y(n, p, q + 1)
    else:
        for i in range(max(1, p + q - n), min(p, q)):
            if target == L(n, p + q - i, i) - L(n, p):
                result = Y(n, i, q - i + 1) * Y(n, p + q - i, 1) / Y(n, p, q - i + 1)
                break
    if result is None:
        raise UnsupportedWeight(
            f"{format_weight(target)} matches no pattern for n={n}, p={p}, q={q}"
        )
    if result not in fundamental_crystal(n, q, 1) or result.weight() != target:
        raise TheoremViolation(f"closed form {result} is not a weight-{target} element of M(Y_{q}(1))")
    return result


def expected_highest_second_factors(n: int, p: int, q: int, m: int) -> list[Monomial]:
    """Second factors M_2 with Y_p(m) · M_2 highest, from the closed forms."""
    out = [weight_monomials_in_fundamental(n, q, L(n, q), p)]
    for i in range(max(1, p + q - n), min(p, q)):
        if m >= q - i + 1:
            out.append(weight_monomials_in_fundamental(n, q, L(n, p + q - i, i) - L(n, p), p))
    if p + q > n and m >= n - p + 2:
        out.append(weight_monomials_in_fundamental(n, q, L(n, p + q - n - 1) - L(n, p), p))
    if p + q <= n and m >= q + 1:
        out.append(weight_monomials_in_fundamental(n, q, L(n, p + q) - L(n, p), p))
    return out


def classify_highest_pairs(n: int, p: int, q: int, m: int) -> list[tuple[Monomial, Monomial]]:
    """Every pair (M_1, M_2) in M(Y_p(m)) × M(Y_q(1)) with M_1·M_2 highest.

    Raises TheoremViolation if some first factor differs from Y_p(m) or the
    second factors disagree with the closed forms.
    """
    if m < 1:
        raise ValueError(f"classification needs m >= 1, got {m}")
    conv = default_convention(n)
    pairs = [
        (a, b)
        for a in fundamental_crystal(n, p, m)
        for b in fundamental_crystal(n, q, 1)
        if is_highest(conv, a * b)
    ]
    pairs.sort(key=lambda ab: (str(ab[0]), str(ab[1])))
    top = Y(n, p, m)
    wrong = [a for a, _ in pairs if a != top]
    if wrong:
        raise TheoremViolation(f"highest pair with first factor {wrong[0]} != {top}")
    found = sorted(str(b) for _, b in pairs)
    expected = sorted(str(b) for b in expected_highest_second_factors(n, p, q, m))
    if found != expected:
        raise TheoremViolation(f"second factors {found} != closed forms {expected}")
    return pairs


# -- verification ----------------------------------------------------------------


def multiset_contains(big, small) -> bool:
    return not (Counter(small) - Counter(big))


@dataclass(frozen=True)
class DecompositionReport:
    """Brute-force decomposition of one product or tensor case next to its prediction."""

    n: int
    p: int
    q: int
    m: Optional[int]
    computed: tuple[Weight, ...]
    predicted: Optional[tuple[Weight, ...]]
    components: tuple[Component, ...]
    universe_size: int
    tensor_size: int
    containment_ok: bool
    dimensions_ok: bool

    @property
    def match(self) -> Optional[bool]:
        if self.predicted is None:
            return None
        return self.computed == self.predicted

    @property
    def witnesses(self) -> tuple:
        return tuple(c.highest for c in self.components)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.components)

    @property
    def ok(self) -> bool:
        return self.match is not False and self.containment_ok and self.dimensions_ok

    def to_json(self) -> dict:
        out = {"n": self.n, "p": self.p, "q": self.q}
        if self.m is not None:
            out["m"] = self.m
        out.update(
            computed=[format_weight(w) for w in self.computed],
            predicted=None if self.predicted is None else [format_weight(w) for w in self.predicted],
            match=self.match,
            universe_size=self.universe_size,
            tensor_size=self.tensor_size,
            components=[c.to_json() for c in self.components],
        )
        return out


def _size_checks(n: int, components) -> bool:
    return all(c.size == ssyt_count(n, c.weight) for c in components)


def verify_case(n: int, p: int, q: int, m: int) -> DecompositionReport:
    """Decompose M(Y_p(m)) · M(Y_q(1)) by brute force and compare with the
    closed form (for m >= 1) and with the tensor-product decomposition."""
    _check_index(n, p)
    _check_index(n, q)
    conv = default_convention(n)
    prod = product_set(fundamental_crystal(n, p, m), fundamental_crystal(n, q, 1))
    result = decompose(prod.elements, MonomialCrystal(conv))
    computed = result.weights()
    predicted = predicted_product_decomposition(n, p, q, m) if m >= 1 else None
    tensor = predicted_tensor_decomposition(n, p, q)
    return DecompositionReport(
        n=n,
        p=p,
        q=q,
        m=m,
        computed=computed,
        predicted=predicted,
        components=result.components,
        universe_size=result.universe_size,
        tensor_size=prod.pair_count,
        containment_ok=multiset_contains(tensor, computed),
        dimensions_ok=_size_checks(n, result.components)
        and sum(c.size for c in result.components) == result.universe_size,
    )


@lru_cache(maxsize=None)
def fundamental_graph(n: int, k: int):
    """B(Lambda_k) realised as the component of Y_k(1)."""
    conv = default_convention(n)
    return generate_component(Y(n, k, 1), MonomialCrystal(conv))


def verify_tensor_case(n: int, p: int, q: int) -> DecompositionReport:
    """Decompose B(Lambda_p) ⊗ B(Lambda_q) and compare with the tensor prediction."""
    _check_index(n, p)
    _check_index(n, q)
    graph = tensor_product(fundamental_graph(n, p), fundamental_graph(n, q))
    result = decompose(graph.nodes, graph)
    computed = result.weights()
    return DecompositionReport(
        n=n,
        p=p,
        q=q,
        m=None,
        computed=computed,
        predicted=predicted_tensor_decomposition(n, p, q),
        components=result.components,
        universe_size=result.universe_size,
        tensor_size=comb(n + 1, p) * comb(n + 1, q),
        containment_ok=True,
        dimensions_ok=_size_checks(n, result.components)
        and result.universe_size == comb(n + 1, p) * comb(n + 1, q),
    )


def iter_cases(n_max: int, m_max: int, n_min: int = 1) -> Iterator[tuple[int, int, int, int]]:
    """(n, p, q, m) in lexicographic order for n_min <= n <= n_max, 1 <= m <= m_max."""
    for n in range(n_min, n_max + 1):
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                for m in range(1, m_max + 1):
                    yield n, p, q, m
