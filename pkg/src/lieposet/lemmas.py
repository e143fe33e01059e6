"""Random row systems for the sign-combination lemmas.

Each generator draws a path or cycle of distinct coordinates and builds
integer row vectors in Z^N that satisfy one lemma's hypotheses, together
with the target vector the lemma says some ±1 combination reaches.  Row
``k`` is a list of length N and coordinate x_i sits at position i - 1.

Rows of the "cone" lemmas always carry x_1 and are tagged by the signs on
their two path coordinates: ``pp`` = x_1 + x_a + x_b, ``pm`` = x_1 + x_a - x_b,
``mp`` = x_1 - x_a + x_b.  A ``pm`` row must be followed by an ``mp`` row
and vice versa, so these sequences are tilings by ``pp`` and ``pm mp``.
"""

from __future__ import annotations

import random
from typing import Callable, NamedTuple

MAX_ROWS = 12


class LemmaInstance(NamedTuple):
    lemma: str
    rows: list[list[int]]
    target: list[int]
    vertices: list[int]
    kinds: list[str]


def _vec(N: int, terms: dict[int, int]) -> list[int]:
    v = [0] * N
    for i, c in terms.items():
        v[i - 1] += c
    return v


def _vertices(rng: random.Random, count: int, N: int, low: int = 1) -> list[int]:
    return rng.sample(range(low, N + 1), count)


def _tiling(rng: random.Random, length: int) -> list[str]:
    kinds: list[str] = []
    while len(kinds) < length:
        if length - len(kinds) >= 2 and rng.random() < 0.4:
            kinds += ["pm", "mp"]
        else:
            kinds.append("pp")
    return kinds


def _cone_row(N: int, kind: str, a: int, b: int) -> list[int]:
    sa, sb = {"pp": (1, 1), "pm": (1, -1), "mp": (-1, 1)}[kind]
    return _vec(N, {1: 1, a: sa, b: sb})


def path_instance(rng: random.Random) -> LemmaInstance:
    """Solid path rows -x_a - x_b; target x_{i_0} - (-1)^n x_{i_n}."""
    n = rng.randint(1, MAX_ROWS)
    N = n + 1 + rng.randint(0, 3)
    vs = _vertices(rng, n + 1, N)
    rows = [_vec(N, {vs[j]: -1, vs[j + 1]: -1}) for j in range(n)]
    target = _vec(N, {vs[0]: 1, vs[n]: -(-1) ** n})
    return LemmaInstance("path", rows, target, vs, ["solid"] * n)


def _closed_walk(rng: random.Random, odd: bool) -> LemmaInstance:
    n = rng.randint(1, MAX_ROWS - 1)
    N = n + 1 + rng.randint(0, 3)
    vs = _vertices(rng, n + 1, N)
    kinds = [rng.choice(("diff", "sum")) for _ in range(n + 1)]
    if (kinds.count("sum") % 2 == 1) != odd:
        k = rng.randrange(n + 1)
        kinds[k] = "sum" if kinds[k] == "diff" else "diff"
    rows = []
    for j, kind in enumerate(kinds):
        a, b = vs[j], vs[(j + 1) % (n + 1)]
        rows.append(_vec(N, {a: 1, b: -1}) if kind == "diff" else _vec(N, {a: -1, b: -1}))
    target = _vec(N, {vs[0]: -2}) if odd else [0] * N
    return LemmaInstance("odd-cycle" if odd else "even-cycle", rows, target, vs, kinds)


def odd_cycle_instance(rng: random.Random) -> LemmaInstance:
    """Closed walk with an odd number of -x_a - x_b rows; target -2 x_{i_0}."""
    return _closed_walk(rng, odd=True)


def even_cycle_instance(rng: random.Random) -> LemmaInstance:
    """Closed walk with an even number of -x_a - x_b rows; target 0."""
    return _closed_walk(rng, odd=False)


def cone_path_instance(rng: random.Random) -> LemmaInstance:
    """Cone path rows over i_0..i_n (all > 1).

    Target x_1 + x_{i_0} + x_{i_n} for odd n, x_{i_0} - x_{i_n} for even n.
    """
    n = rng.randint(1, MAX_ROWS)
    N = n + 2 + rng.randint(0, 3)
    vs = _vertices(rng, n + 1, N, low=2)
    kinds = _tiling(rng, n)
    rows = [_cone_row(N, k, vs[j], vs[j + 1]) for j, k in enumerate(kinds)]
    if n % 2:
        target = _vec(N, {1: 1, vs[0]: 1, vs[n]: 1})
    else:
        target = _vec(N, {vs[0]: 1, vs[n]: -1})
    return LemmaInstance("cone-path", rows, target, vs, kinds)


def cone_cycle_instance(rng: random.Random) -> LemmaInstance:
    """Cone cycle of n + 1 rows closing back at i_0, n >= 2.

    The closing row joins i_n to i_0.  Target x_1 + 2 x_{i_0} for even n,
    0 for odd n.
    """
    n = rng.randint(2, MAX_ROWS - 1)
    N = n + 2 + rng.randint(0, 3)
    vs = _vertices(rng, n + 1, N, low=2)
    kinds = _tiling(rng, n + 1)
    rows = [_cone_row(N, k, vs[j], vs[(j + 1) % (n + 1)]) for j, k in enumerate(kinds)]
    target = _vec(N, {1: 1, vs[0]: 2}) if n % 2 == 0 else [0] * N
    return LemmaInstance("cone-cycle", rows, target, vs, kinds)


def cone_cycle_reversed_instance(rng: random.Random) -> LemmaInstance:
    """Cone cycle whose two rows at i_0 both carry -x_{i_0}, n even.

    The middle rows form a cone path over i_1..i_n.  Target -x_1 + 2 x_{i_0}.
    """
    n = rng.choice(range(2, MAX_ROWS, 2))
    N = n + 2 + rng.randint(0, 3)
    vs = _vertices(rng, n + 1, N, low=2)
    middle = _tiling(rng, n - 1)
    kinds = ["mp"] + middle + ["mp"]
    rows = [_cone_row(N, "mp", vs[0], vs[1])]
    rows += [_cone_row(N, k, vs[j + 1], vs[j + 2]) for j, k in enumerate(middle)]
    rows.append(_cone_row(N, "mp", vs[0], vs[n]))
    target = _vec(N, {1: -1, vs[0]: 2})
    return LemmaInstance("cone-cycle-reversed", rows, target, vs, kinds)


GENERATORS: dict[str, Callable[[random.Random], LemmaInstance]] = {
    "path": path_instance,
    "odd-cycle": odd_cycle_instance,
    "even-cycle": even_cycle_instance,
    "cone-path": cone_path_instance,
    "cone-cycle": cone_cycle_instance,
    "cone-cycle-reversed": cone_cycle_reversed_instance,
}


def instances(lemma: str, count: int, seed: int = 0) -> list[LemmaInstance]:
    rng = random.Random(f"{lemma}:{seed}")
    return [GENERATORS[lemma](rng) for _ in range(count)]
