"""Test corpora: exhaustive antichains on tiny ground sets and seeded random clutters.

Random clutter model (reproducible from the seed alone): draw an edge count
``m`` uniformly from ``1..2n``; for each edge draw a size uniformly from
``1..n`` and then a uniform subset of that size; finally keep only the
inclusion-minimal sets.

That model yields few edges once minimalized (small sets swallow the rest),
so :func:`dense_clutter` offers a second model with edges of size 2 or 3,
closer to edge ideals and their 3-uniform relatives.
"""

from __future__ import annotations

import random
from typing import Iterator

from .clutter import Clutter, VertexSet, canonical_key, minimalize, vset


def default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def antichains(n: int) -> Iterator[tuple[VertexSet, ...]]:
    """Every antichain of nonempty subsets of ``{0..n-1}``, the empty one included."""
    universe = sorted(range(1, 1 << n), key=canonical_key)

    def extend(start: int, chosen: tuple[VertexSet, ...]) -> Iterator[tuple[VertexSet, ...]]:
        yield chosen
        for j in range(start, len(universe)):
            s = universe[j]
            if all(s & c != c and s & c != s for c in chosen):
                yield from extend(j + 1, chosen + (s,))

    yield from extend(0, ())


def all_clutters(n: int) -> Iterator[Clutter]:
    names = default_names(n)
    for edges in antichains(n):
        yield Clutter(names, edges)


def exhaustive_corpus(max_n: int = 4) -> list[Clutter]:
    """All clutters on ``0..max_n`` vertices (isolated vertices and edgeless ones included)."""
    return [C for n in range(max_n + 1) for C in all_clutters(n)]


def random_clutter(rng: random.Random, n: int) -> Clutter:
    m = rng.randint(1, 2 * n)
    sets = []
    for _ in range(m):
        size = rng.randint(1, n)
        sets.append(vset(rng.sample(range(n), size)))
    return Clutter(default_names(n), minimalize(sets))


def dense_clutter(rng: random.Random, n: int) -> Clutter:
    """Edge count uniform in ``n..2n``, each edge a uniform 2- or 3-subset, then minimalized."""
    sets = [vset(rng.sample(range(n), rng.choice((2, 3)))) for _ in range(rng.randint(n, 2 * n))]
    return Clutter(default_names(n), minimalize(sets))


def dense_corpus(seed: int, count: int, n_range: tuple[int, int] = (5, 8)) -> list[Clutter]:
    rng = random.Random(seed)
    lo, hi = n_range
    return [dense_clutter(rng, lo + j % (hi - lo + 1)) for j in range(count)]


def random_corpus(seed: int, count: int, n_range: tuple[int, int] = (5, 8)) -> list[Clutter]:
    """``count`` clutters with vertex counts cycling through ``n_range`` (inclusive)."""
    rng = random.Random(seed)
    lo, hi = n_range
    return [random_clutter(rng, lo + j % (hi - lo + 1)) for j in range(count)]


def random_independent_set(rng: random.Random, C: Clutter, tries: int = 64) -> VertexSet | None:
    """A uniformly sized nonempty subset of the ground set containing no edge, if one turns up."""
    for _ in range(tries):
        size = rng.randint(1, C.n)
        A = vset(rng.sample(range(C.n), size))
        if not any(e & ~A == 0 for e in C.edges):
            return A
    return None


def random_colon_pairs(seed: int, count: int, n_range: tuple[int, int] = (4, 7)) -> list[tuple[Clutter, VertexSet]]:
    """Seeded pairs ``(C, A)`` with ``A`` nonempty and independent, so ``C : A`` is proper."""
    rng = random.Random(seed)
    lo, hi = n_range
    out = []
    while len(out) < count:
        C = random_clutter(rng, rng.randint(lo, hi))
        A = random_independent_set(rng, C)
        if A is not None:
            out.append((C, A))
    return out
