"""Arrows of the simplex category: monotone maps between finite ordinals.

[n] denotes the ordered set {0, ..., n}.  Everything downstream (coskeleta,
homotopies, nerve combinatorics) indexes through the maps in this module, so
orderings here are canonical and deterministic: maps are sorted by
(source size, value tuple).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb


@dataclass(frozen=True, order=True)
class MonotoneMap:
    """A non-decreasing map [source] -> [target]; values[k] is the image of k."""

    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.source < 0 or self.target < 0:
            raise ValueError("ordinal dimensions must be nonnegative")
        if len(self.values) != self.source + 1:
            raise ValueError("value list must have length source+1")
        prev = 0
        for v in self.values:
            if not (prev <= v <= self.target):
                raise ValueError(f"values {self.values} not monotone into [{self.target}]")
            prev = v

    def __call__(self, k: int) -> int:
        return self.values[k]

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target + 1

    @property
    def is_identity(self) -> bool:
        return self.source == self.target and all(v == k for k, v in enumerate(self.values))


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def constant(j: int, target: int, value: int) -> MonotoneMap:
    return MonotoneMap(j, target, (value,) * (j + 1))


def coface(n: int, i: int) -> MonotoneMap:
    """The injection [n-1] -> [n] skipping i."""
    if not (0 <= i <= n and n >= 1):
        raise ValueError("coface index out of range")
    return MonotoneMap(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def codegeneracy(n: int, i: int) -> MonotoneMap:
    """The surjection [n+1] -> [n] repeating i."""
    if not (0 <= i <= n):
        raise ValueError("codegeneracy index out of range")
    return MonotoneMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """g after f; requires f.target == g.source."""
    if f.target != g.source:
        raise ValueError(f"cannot compose [{f.source}]->[{f.target}] with [{g.source}]->[{g.target}]")
    return MonotoneMap(f.source, g.target, tuple(g.values[v] for v in f.values))


def epi_mono_factorization(alpha: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """Unique factorization alpha = delta o sigma, sigma surjective, delta injective."""
    image = sorted(set(alpha.values))
    k = len(image) - 1
    pos = {v: idx for idx, v in enumerate(image)}
    sigma = MonotoneMap(alpha.source, k, tuple(pos[v] for v in alpha.values))
    delta = MonotoneMap(k, alpha.target, tuple(image))
    return sigma, delta


def enumerate_monotone(i: int, m: int) -> list[MonotoneMap]:
    """All monotone maps [i] -> [m] in canonical (lexicographic) order."""
    if i < 0 or m < 0:
        raise ValueError("dimensions must be nonnegative")
    return [MonotoneMap(i, m, vals) for vals in combinations_with_replacement(range(m + 1), i + 1)]


def enumerate_injective(i: int, m: int) -> list[MonotoneMap]:
    """All injective monotone maps [i] -> [m] (strictly increasing), lexicographic."""
    if i < 0 or m < 0:
        raise ValueError("dimensions must be nonnegative")
    if i > m:
        return []
    return [MonotoneMap(i, m, vals) for vals in combinations(range(m + 1), i + 1)]


def monotone_count(i: int, m: int) -> int:
    return comb(i + m + 1, i + 1)


def interval_maps(j: int) -> list[MonotoneMap]:
    """The j+2 maps [j] -> [1], by decreasing preimage of 0.

    First entry is the constant-0 map, last the constant-1 map; entry t has
    exactly t ones.
    """
    if j < 0:
        raise ValueError("dimension must be nonnegative")
    return [MonotoneMap(j, 1, (0,) * (j + 1 - t) + (1,) * t) for t in range(j + 2)]


@dataclass(frozen=True)
class IndexCategory:
    """Injective monotone maps [i] -> [m] with i <= n, and all maps between them.

    morphisms holds triples (a, b, alpha) with objects[b] o alpha == objects[a];
    alpha is injective (forced).  Object and morphism lists are canonically
    ordered.
    """

    n: int
    m: int
    objects: tuple[MonotoneMap, ...]
    morphisms: tuple[tuple[int, int, MonotoneMap], ...]


def build_index_category(n: int, m: int) -> IndexCategory:
    if n < 0 or m <= n:
        raise ValueError("need 0 <= n < m")
    objects: list[MonotoneMap] = []
    for i in range(min(n, m) + 1):
        objects.extend(enumerate_injective(i, m))
    index = {phi: a for a, phi in enumerate(objects)}
    morphisms = []
    for b, phi_prime in enumerate(objects):
        ip = phi_prime.source
        for i in range(min(n, ip) + 1):
            for alpha in enumerate_injective(i, ip):
                phi = compose(phi_prime, alpha)
                morphisms.append((index[phi], b, alpha))
    morphisms.sort(key=lambda t: (t[0], t[1], t[2].values))
    return IndexCategory(n, m, tuple(objects), tuple(morphisms))


def full_diagram_objects(n: int, m: int) -> list[MonotoneMap]:
    """All monotone maps [i] -> [m] with i <= n, canonically ordered."""
    objs: list[MonotoneMap] = []
    for i in range(n + 1):
        objs.extend(enumerate_monotone(i, m))
    return objs
