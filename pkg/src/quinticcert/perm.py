"""Brute-force permutation groups on at most 7 points.

Permutations are tuples of images of ``0..n-1``; the helpers
:func:`cycle` and :func:`perm_str` speak the usual 1-based cycle notation.
Groups are explicit frozensets of elements, which is plenty for |G| <= 5040.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

Perm = tuple[int, ...]

__all__ = [
    "Perm",
    "PermGroup",
    "ElementNotInGroup",
    "identity",
    "cycle",
    "compose",
    "inverse",
    "cycle_type",
    "perm_str",
    "closure",
    "symmetric_group",
    "centralizer",
    "is_cyclic",
    "is_transitive",
    "conjugacy_classes",
    "are_conjugate_subgroups",
    "verify_32_generation",
    "verify_transposition_generation",
    "generation_scan",
    "s6_admissible",
    "S6_ADMISSIBLE_TYPES",
]


class ElementNotInGroup(ValueError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def cycle(n: int, *cycles: Sequence[int]) -> Perm:
    """Permutation of degree n from 1-based cycles, e.g. ``cycle(5, (1, 2), (3, 4, 5))``."""
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a - 1] = b - 1
    perm = tuple(img)
    if sorted(perm) != list(range(n)):
        raise ValueError("cycles are not disjoint")
    return perm


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: i -> a[b[i]]."""
    return tuple(a[i] for i in b)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def cycles_of(a: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(a)):
        if i in seen:
            continue
        c = [i]
        seen.add(i)
        j = a[i]
        while j != i:
            c.append(j)
            seen.add(j)
            j = a[j]
        out.append(tuple(c))
    return out


def cycle_type(a: Perm) -> tuple[int, ...]:
    """Cycle lengths, descending, fixed points omitted; () for the identity."""
    return tuple(sorted((len(c) for c in cycles_of(a) if len(c) > 1), reverse=True))


def full_cycle_type(a: Perm) -> tuple[int, ...]:
    """Cycle lengths including fixed points, descending."""
    return tuple(sorted((len(c) for c in cycles_of(a)), reverse=True))


def order(a: Perm) -> int:
    from math import lcm

    return lcm(*(len(c) for c in cycles_of(a)))


def perm_str(a: Perm) -> str:
    cs = [c for c in cycles_of(a) if len(c) > 1]
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(i + 1) for i in c) + ")" for c in cs)


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: frozenset[Perm]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Perm) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def conjugate(self, g: Perm) -> "PermGroup":
        gi = inverse(g)
        return PermGroup(self.degree, frozenset(compose(compose(g, x), gi) for x in self.elements))


def closure(gens: Iterable[Perm], n: int | None = None) -> PermGroup:
    """Smallest group containing ``gens`` (breadth-first over right multiplication)."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("degree needed for an empty generating set")
        n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise ValueError("generators of different degrees")
    e = identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return PermGroup(n, frozenset(seen))


@cache
def symmetric_group(n: int) -> PermGroup:
    return PermGroup(n, frozenset(permutations(range(n))))


def centralizer(G: PermGroup, x: Perm) -> PermGroup:
    if x not in G:
        raise ElementNotInGroup(perm_str(x))
    return PermGroup(G.degree, frozenset(g for g in G.elements if compose(g, x) == compose(x, g)))


def is_cyclic(G: PermGroup) -> bool:
    return any(order(g) == G.order for g in G.elements)


def orbit(gens: Iterable[Perm], point: int) -> set[int]:
    gens = list(gens)
    orb = {point}
    stack = [point]
    while stack:
        i = stack.pop()
        for g in gens:
            j = g[i]
            if j not in orb:
                orb.add(j)
                stack.append(j)
    return orb


def is_transitive(G: PermGroup | Iterable[Perm], n: int | None = None) -> bool:
    if isinstance(G, PermGroup):
        n = G.degree
        gens = list(G.elements)
    else:
        gens = list(G)
    if n is None:
        n = len(gens[0])
    return len(orbit(gens, 0)) == n


def conjugacy_classes(G: PermGroup) -> list[frozenset[Perm]]:
    remaining = set(G.elements)
    classes = []
    while remaining:
        x = min(remaining)
        cls = frozenset(compose(compose(g, x), inverse(g)) for g in G.elements)
        classes.append(cls)
        remaining -= cls
    return classes


def are_conjugate_subgroups(H: PermGroup, K: PermGroup, G: PermGroup | None = None) -> bool:
    if H.order != K.order:
        return False
    G = G or symmetric_group(H.degree)
    return any(H.conjugate(g).elements == K.elements for g in G.elements)


def transpositions(n: int) -> list[Perm]:
    return [cycle(n, (i, j)) for i, j in combinations(range(1, n + 1), 2)]


def generation_scan(type_x: tuple[int, ...], types_y: Iterable[tuple[int, ...]], n: int = 5) -> dict:
    """Closure orders for every pair (x, y) with x of cycle type ``type_x``
    and y of a cycle type in ``types_y``.  Returns counts keyed by order."""
    types_y = set(types_y)
    Sn = symmetric_group(n)
    xs = [g for g in Sn.elements if cycle_type(g) == type_x]
    ys = [g for g in Sn.elements if cycle_type(g) in types_y]
    orders: dict[int, int] = {}
    for x in xs:
        for y in ys:
            k = closure([x, y], n).order
            orders[k] = orders.get(k, 0) + 1
    return {"pairs": len(xs) * len(ys), "x_count": len(xs), "y_count": len(ys), "orders": orders}


@cache
def verify_32_generation() -> bool:
    """Every element of type (3,2) together with any element of type (5) or
    (4,1) generates S5.  Exhaustive over 20 x 54 pairs."""
    scan = generation_scan((3, 2), [(5,), (4,)], 5)
    return scan["pairs"] == 20 * 54 and set(scan["orders"]) == {120}


@cache
def verify_transposition_generation(n: int) -> bool:
    """Every transitive subgroup of S_n generated by transpositions is S_n.

    Runs over all 2**C(n,2) subsets of transpositions.  For n <= 5 every
    transitive subset is closed directly.  For larger n a transitive subset
    with a transitive one-smaller subset is settled by that subset (already
    shown to generate S_n, processed in order of size); only the minimal
    transitive subsets are closed explicitly.
    """
    ts = transpositions(n)
    full = symmetric_group(n).order
    direct = n <= 5
    good: set[int] = set()
    for mask in sorted(range(1 << len(ts)), key=lambda m: bin(m).count("1")):
        gens = [t for i, t in enumerate(ts) if mask >> i & 1]
        if not gens or not is_transitive(gens, n):
            continue
        if not direct and any(mask & ~(1 << i) in good for i in range(len(ts)) if mask >> i & 1):
            good.add(mask)
            continue
        if closure(gens, n).order != full:
            return False
        good.add(mask)
    return True


S6_ADMISSIBLE_TYPES = (
    [cycle(6, (1, 2))],
    [cycle(6, (1, 2)), cycle(6, (3, 4), (5, 6))],
    [cycle(6, (1, 2)), cycle(6, (3, 4, 5))],
)


@cache
def _s6_admissible_groups() -> tuple[PermGroup, ...]:
    return tuple(closure(g, 6) for g in S6_ADMISSIBLE_TYPES)


def s6_admissible(gens: Iterable[Perm]) -> bool:
    """Whether <gens> is S6-conjugate to one of <(1,2)>, <(1,2),(3,4)(5,6)>,
    <(1,2),(3,4,5)>."""
    H = closure(gens, 6)
    return any(are_conjugate_subgroups(H, K) for K in _s6_admissible_groups())
