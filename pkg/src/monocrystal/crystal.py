"""Finite crystal graphs over arbitrary element types.

Anything exposing ``cartan``, ``f(b, i)``, ``e(b, i)``, ``eps(b, i)``,
``phi(b, i)`` and ``weight(b)`` is a crystal here; operators return None for
the zero element. :class:`MonomialCrystal`, :class:`TensorCrystal` and
:class:`CrystalGraph` itself all follow that interface.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, NamedTuple, Optional

from .errors import NodeBudgetExceeded, NotClosedError, RankMismatchError, UncoveredError
from .monomial import Convention, Monomial, arrows, e_tilde, f_tilde
from .weights import RankedCartan, Weight, format_weight, pairing, simple_root

DEFAULT_NODE_BUDGET = 10**6


class TensorElement(NamedTuple):
    left: Any
    right: Any


def element_label(b) -> str:
    if isinstance(b, TensorElement):
        return f"{element_label(b.left)} ⊗ {element_label(b.right)}"
    return str(b)


def element_json(b):
    if isinstance(b, TensorElement):
        return [element_json(b.left), element_json(b.right)]
    if isinstance(b, Monomial):
        return b.to_json()
    return str(b)


class MonomialCrystal:
    """The monomial crystal for a fixed convention."""

    def __init__(self, conv: Convention):
        self.conv = conv
        self.cartan = conv.cartan

    def f(self, b: Monomial, i: int) -> Optional[Monomial]:
        return f_tilde(self.conv, b, i)

    def e(self, b: Monomial, i: int) -> Optional[Monomial]:
        return e_tilde(self.conv, b, i)

    def arrows(self, b: Monomial):
        return arrows(self.conv, b)

    def phi(self, b: Monomial, i: int) -> int:
        return b.phi(i)

    def eps(self, b: Monomial, i: int) -> int:
        return b.eps(i)

    def weight(self, b: Monomial) -> Weight:
        return b.weight()


class TensorCrystal:
    """``B1 ⊗ B2`` under the signature rule: f acts on the left factor when
    phi_i(b1) > eps_i(b2), e acts on the left when phi_i(b1) >= eps_i(b2)."""

    def __init__(self, first, second):
        if first.cartan != second.cartan:
            raise RankMismatchError(f"rank {first.cartan.n} vs rank {second.cartan.n}")
        self.first = first
        self.second = second
        self.cartan = first.cartan

    def f(self, b: TensorElement, i: int) -> Optional[TensorElement]:
        if self.first.phi(b.left, i) > self.second.eps(b.right, i):
            left = self.first.f(b.left, i)
            return None if left is None else TensorElement(left, b.right)
        right = self.second.f(b.right, i)
        return None if right is None else TensorElement(b.left, right)

    def e(self, b: TensorElement, i: int) -> Optional[TensorElement]:
        if self.first.phi(b.left, i) >= self.second.eps(b.right, i):
            left = self.first.e(b.left, i)
            return None if left is None else TensorElement(left, b.right)
        right = self.second.e(b.right, i)
        return None if right is None else TensorElement(b.left, right)

    def eps(self, b: TensorElement, i: int) -> int:
        return max(
            self.first.eps(b.left, i),
            self.second.eps(b.right, i) - pairing(self.cartan, self.first.weight(b.left), i),
        )

    def phi(self, b: TensorElement, i: int) -> int:
        # equivalent to max(phi_2, phi_1 + <h_i, wt(b2)>)
        return self.eps(b, i) + pairing(self.cartan, self.weight(b), i)

    def weight(self, b: TensorElement) -> Weight:
        return self.first.weight(b.left) + self.second.weight(b.right)


class CrystalGraph:
    """Finite crystal with cached statistics.

    ``f_map`` and ``e_map`` are stored separately, keyed by ``(node, color)``,
    so that a damaged graph can be detected by :func:`validate_axioms`.
    """

    def __init__(self, cartan: RankedCartan, nodes: Iterable[Hashable], f_map: dict, e_map: dict, stats: dict):
        self.cartan = cartan
        self.nodes = tuple(sorted(nodes, key=element_label))
        self.f_map = f_map
        self.e_map = e_map
        # node -> (weight, eps per color, phi per color)
        self.stats = stats
        self._node_set = frozenset(self.nodes)

    @classmethod
    def from_ops(cls, nodes: Iterable[Hashable], ops) -> CrystalGraph:
        """Graph on ``nodes`` with arrows taken from ``ops``; raises NotClosedError
        if an operator leaves the node set."""
        node_set = set(nodes)
        f_map, e_map = _operator_maps(node_set, ops)
        return cls(ops.cartan, node_set, f_map, e_map, _collect_stats(node_set, ops))

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __contains__(self, b):
        return b in self._node_set

    def f(self, b, i: int):
        return self.f_map.get((b, i))

    def e(self, b, i: int):
        return self.e_map.get((b, i))

    def weight(self, b) -> Weight:
        return self.stats[b][0]

    def eps(self, b, i: int) -> int:
        return self.stats[b][1][i - 1]

    def phi(self, b, i: int) -> int:
        return self.stats[b][2][i - 1]

    @property
    def edges(self) -> list[tuple[Any, int, Any]]:
        """``(source, color, target)`` for every f-arrow, in node then color order."""
        out = []
        for b in self.nodes:
            for i in self.cartan.indices:
                t = self.f_map.get((b, i))
                if t is not None:
                    out.append((b, i, t))
        return out

    def highest_elements(self) -> list:
        return [b for b in self.nodes if all(self.e_map.get((b, i)) is None for i in self.cartan.indices)]

    def without_edge(self, source, color: int) -> CrystalGraph:
        """Copy with the f-arrow at ``(source, color)`` removed (e-arrows untouched)."""
        f_map = dict(self.f_map)
        f_map.pop((source, color), None)
        return CrystalGraph(self.cartan, self.nodes, f_map, dict(self.e_map), dict(self.stats))


def _arrows(ops, b):
    """``[(f_i b, e_i b)]`` per color, through the crystal's bulk method when it has one."""
    bulk = getattr(ops, "arrows", None)
    if bulk is not None:
        return bulk(b)
    return [(ops.f(b, i), ops.e(b, i)) for i in ops.cartan.indices]


def _operator_maps(node_set, ops):
    f_map: dict = {}
    e_map: dict = {}
    for b in node_set:
        for i, (down, up) in enumerate(_arrows(ops, b), start=1):
            if down is not None:
                if down not in node_set:
                    raise NotClosedError(b, i, down, "f")
                f_map[b, i] = down
            if up is not None:
                if up not in node_set:
                    raise NotClosedError(b, i, up, "e")
                e_map[b, i] = up
    return f_map, e_map


def _collect_stats(node_set, ops) -> dict:
    colors = ops.cartan.indices
    return {
        b: (
            ops.weight(b),
            tuple(ops.eps(b, i) for i in colors),
            tuple(ops.phi(b, i) for i in colors),
        )
        for b in node_set
    }


def generate_component(seed, ops, node_budget: int = DEFAULT_NODE_BUDGET) -> CrystalGraph:
    """Connected component of ``seed``: closure under every f_i and e_i."""
    seen = {seed}
    queue = deque([seed])
    f_map: dict = {}
    e_map: dict = {}
    while queue:
        b = queue.popleft()
        for i, pair in enumerate(_arrows(ops, b), start=1):
            for t, table in zip(pair, (f_map, e_map)):
                if t is None:
                    continue
                table[b, i] = t
                if t not in seen:
                    if len(seen) >= node_budget:
                        raise NodeBudgetExceeded(
                            f"component of {element_label(seed)} exceeds {node_budget} nodes"
                        )
                    seen.add(t)
                    queue.append(t)
    return CrystalGraph(ops.cartan, seen, f_map, e_map, _collect_stats(seen, ops))


@dataclass(frozen=True)
class Component:
    highest: Any
    weight: Weight
    size: int
    graph: CrystalGraph = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {"highest": element_json(self.highest), "weight": format_weight(self.weight), "size": self.size}


@dataclass(frozen=True)
class Decomposition:
    """Connected components of a finite crystal, ordered by highest element label."""

    components: tuple[Component, ...]
    universe_size: int

    def weights(self) -> tuple[Weight, ...]:
        """The multiset of highest weights as a sorted tuple."""
        return tuple(sorted(c.weight for c in self.components))

    def weight_counts(self) -> Counter:
        return Counter(c.weight for c in self.components)

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components], "universe_size": self.universe_size}


def decompose(universe: Iterable[Hashable], ops) -> Decomposition:
    """Split a finite subcrystal into highest-weight components.

    Raises NotClosedError when an operator leaves ``universe`` and
    UncoveredError when some element is reachable from no highest element.
    """
    node_set = set(universe)
    f_map, e_map = _operator_maps(node_set, ops)
    stats = _collect_stats(node_set, ops)
    colors = ops.cartan.indices
    highest = sorted(
        (b for b in node_set if all((b, i) not in e_map for i in colors)),
        key=element_label,
    )
    owner: dict = {}
    components = []
    for h in highest:
        members = {h}
        queue = deque([h])
        while queue:
            b = queue.popleft()
            for i in colors:
                for table in (f_map, e_map):
                    t = table.get((b, i))
                    if t is not None and t not in members:
                        members.add(t)
                        queue.append(t)
        for b in members:
            if b in owner:
                raise UncoveredError(
                    f"{element_label(b)} lies in the components of both "
                    f"{element_label(owner[b])} and {element_label(h)}"
                )
            owner[b] = h
        sub_f = {k: v for k, v in f_map.items() if k[0] in members}
        sub_e = {k: v for k, v in e_map.items() if k[0] in members}
        graph = CrystalGraph(ops.cartan, members, sub_f, sub_e, {b: stats[b] for b in members})
        components.append(Component(h, stats[h][0], len(members), graph))
    if len(owner) != len(node_set):
        stray = sorted((b for b in node_set if b not in owner), key=element_label)
        raise UncoveredError(f"{len(stray)} elements in no component, e.g. {element_label(stray[0])}")
    return Decomposition(tuple(components), len(node_set))


def tensor_product(first: CrystalGraph, second: CrystalGraph) -> CrystalGraph:
    """Graph of ``first ⊗ second`` on the full cartesian product."""
    ops = TensorCrystal(first, second)
    nodes = [TensorElement(a, b) for a in first.nodes for b in second.nodes]
    return CrystalGraph.from_ops(nodes, ops)


@dataclass(frozen=True)
class Violation:
    rule: str
    node: Any
    color: int
    detail: str

    def __str__(self):
        return f"[{self.rule}] {element_label(self.node)} color {self.color}: {self.detail}"


def validate_axioms(graph: CrystalGraph) -> list[Violation]:
    """Check the crystal axioms, closure, degree bounds and semi-normality on every node."""
    cartan = graph.cartan
    out: list[Violation] = []
    roots = {i: simple_root(cartan, i) for i in cartan.indices}
    incoming: Counter = Counter()
    for b in graph.nodes:
        wt = graph.weight(b)
        for i in cartan.indices:
            eps_b, phi_b = graph.eps(b, i), graph.phi(b, i)
            if phi_b != eps_b + pairing(cartan, wt, i):
                out.append(Violation("phi=eps+<h,wt>", b, i, f"phi={phi_b} eps={eps_b} wt={wt}"))
            up, down = graph.e(b, i), graph.f(b, i)
            if phi_b == float("-inf") and (up is not None or down is not None):
                out.append(Violation("phi=-inf", b, i, "operator acts although phi is -inf"))
            for t, op, sign in ((up, "e", 1), (down, "f", -1)):
                if t is None:
                    continue
                if t not in graph:
                    out.append(Violation("closure", b, i, f"{op} leaves the graph"))
                    continue
                if graph.weight(t) != wt + sign * roots[i]:
                    out.append(Violation(f"wt({op}b)", b, i, f"weight {graph.weight(t)}"))
                if (graph.eps(t, i), graph.phi(t, i)) != (eps_b - sign, phi_b + sign):
                    out.append(
                        Violation(
                            f"eps/phi({op}b)", b, i, f"got ({graph.eps(t, i)}, {graph.phi(t, i)})"
                        )
                    )
            if down is not None:
                incoming[down, i] += 1
                if graph.e(down, i) != b:
                    out.append(Violation("f b=b' iff e b'=b", b, i, "f-arrow without matching e-arrow"))
            if up is not None and graph.f(up, i) != b:
                out.append(Violation("f b=b' iff e b'=b", b, i, "e-arrow without matching f-arrow"))
            if _string_length(graph.e, b, i, len(graph)) != eps_b:
                out.append(Violation("semi-normal", b, i, f"e-string length differs from eps={eps_b}"))
            if _string_length(graph.f, b, i, len(graph)) != phi_b:
                out.append(Violation("semi-normal", b, i, f"f-string length differs from phi={phi_b}"))
    for (t, i), count in incoming.items():
        if count > 1:
            out.append(Violation("in-degree", t, i, f"{count} incoming {i}-arrows"))
    return out


def _string_length(op, b, i: int, limit: int) -> int:
    steps = 0
    while True:
        b = op(b, i)
        if b is None or steps > limit:
            return steps
        steps += 1


def to_dot(graph: CrystalGraph, name: str = "crystal") -> str:
    """Deterministic DOT text; nodes appear in sorted label order."""
    ids = {b: f"n{k}" for k, b in enumerate(graph.nodes)}
    lines = [f"digraph {name} {{"]
    for b in graph.nodes:
        label = element_label(b).replace('"', '\\"')
        lines.append(f'  {ids[b]} [label="{label}"];')
    for src, i, dst in graph.edges:
        lines.append(f'  {ids[src]} -> {ids[dst]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
