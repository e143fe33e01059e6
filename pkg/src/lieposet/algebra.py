"""The Lie poset algebra of a signed poset in its defining representation.

Brackets are computed as matrix commutators of the basis matrices and then
decomposed back over the basis.  Distinct basis matrices have disjoint
supports, so the decomposition is read off entry by entry; any entry outside
the span raises ``ClosureViolation``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Mapping, NamedTuple, Union

from .errors import ClosureViolation, EvenDimension, UnsupportedPoset
from .exactla import RATIONAL, ExactMatrix, Field, Scalar
from .poset import SignedPoset
from .relgraph import RelationGraph, m_rows

DIAG = "D"          # D_i = E_{-i,-i} - E_{i,i}
DASHED = "R"        # R_{i,j} = E_{-j,-i} - E_{i,j}, i < j
LOOP = "E"          # E_{-i,i}, type C only
SOLID_C = "Rpm"     # R±_{i,j} = E_{-i,j} + E_{-j,i}, i < j
SOLID_D = "Rso"     # E_{-i,j} - E_{-j,i}, j < i (types B, D)

_GROUP = {DIAG: 0, DASHED: 1, LOOP: 2, SOLID_C: 3, SOLID_D: 3}

Sparse = dict[tuple[int, int], int]


class BasisElement(NamedTuple):
    kind: str
    i: int
    j: int = 0

    def sort_key(self) -> tuple:
        return (_GROUP[self.kind], min(self.i, self.j or self.i), max(self.i, self.j))

    @property
    def is_diagonal(self) -> bool:
        return self.kind == DIAG

    def __str__(self) -> str:
        if self.kind == DIAG:
            return f"D_{self.i}"
        if self.kind == LOOP:
            return f"E_{{-{self.i},{self.i}}}"
        if self.kind == DASHED:
            return f"R_{{{self.i},{self.j}}}"
        if self.kind == SOLID_C:
            return f"R±_{{{self.i},{self.j}}}"
        return f"S_{{{self.i},{self.j}}}"


Functional = Mapping[BasisElement, Union[int, Fraction]]


def support(e: BasisElement) -> Sparse:
    """Nonzero entries of the matrix of ``e``, keyed by signed (row, col) labels."""
    i, j = e.i, e.j
    if e.kind == DIAG:
        return {(-i, -i): 1, (i, i): -1}
    if e.kind == DASHED:
        return {(-j, -i): 1, (i, j): -1}
    if e.kind == LOOP:
        return {(-i, i): 1}
    if e.kind == SOLID_C:
        return {(-i, j): 1, (-j, i): 1}
    if e.kind == SOLID_D:
        return {(-i, j): 1, (-j, i): -1}
    raise ValueError(f"unknown basis element kind {e.kind!r}")


def basis(p: SignedPoset) -> tuple[BasisElement, ...]:
    """Ordered basis: diagonals, dashed, loops, then solid elements."""
    if p.family == "B" and any(0 in r for r in p.relations):
        raise UnsupportedPoset("UnsupportedPoset: type-B posets relating 0 have no basis here")
    elems = {BasisElement(DIAG, i) for i in range(1, p.n + 1)}
    for x, y in p.relations:
        if x == 0 or y == 0 or x >= 0:
            continue
        if y < 0:
            elems.add(BasisElement(DASHED, -y, -x))
        elif -x == y:
            if p.family == "C":
                elems.add(BasisElement(LOOP, y))
        else:
            a, b = sorted((-x, y))
            elems.add(BasisElement(SOLID_C, a, b) if p.family == "C" else BasisElement(SOLID_D, b, a))
    return tuple(sorted(elems, key=BasisElement.sort_key))


def labels(family: str, n: int) -> list[int]:
    return [x for x in range(-n, n + 1) if x != 0 or family == "B"]


def realize(e: BasisElement, family: str, n: int) -> ExactMatrix:
    """Dense matrix of ``e``; rows and columns indexed -n..-1, (0), 1..n."""
    idx = {x: k for k, x in enumerate(labels(family, n))}
    size = len(idx)
    entries = [0] * (size * size)
    for (r, c), v in support(e).items():
        entries[idx[r] * size + idx[c]] = v
    return ExactMatrix(size, size, entries)


def _mul(a: Sparse, b: Sparse) -> Sparse:
    by_row: dict[int, list[tuple[int, int]]] = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    out: Sparse = {}
    for (r, k), v in a.items():
        for c, w in by_row.get(k, ()):
            out[(r, c)] = out.get((r, c), 0) + v * w
    return out


def commutator(a: Sparse, b: Sparse) -> Sparse:
    out = _mul(a, b)
    for key, v in _mul(b, a).items():
        out[key] = out.get(key, 0) - v
    return {k: v for k, v in out.items() if v}


class LieAlgebra:
    """g(P) with its ordered basis and structure constants."""

    def __init__(self, p: SignedPoset, order: tuple[BasisElement, ...] | None = None):
        self.poset = p
        self.family = p.family
        self.n = p.n
        self.basis = tuple(order) if order is not None else basis(p)
        self.index = {e: k for k, e in enumerate(self.basis)}
        self._supports = [support(e) for e in self.basis]
        self._position: dict[tuple[int, int], tuple[int, int]] = {}
        for k, sup in enumerate(self._supports):
            for pos, v in sup.items():
                self._position[pos] = (k, v)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def decompose(self, m: Sparse) -> dict[int, Fraction]:
        """Coefficients of ``m`` over the basis; raises if ``m`` leaves the span."""
        coeffs: dict[int, Fraction] = {}
        for pos, val in m.items():
            if pos not in self._position:
                raise ClosureViolation(f"entry {pos} lies outside the algebra")
            k, unit = self._position[pos]
            c = scalar(Fraction(val, unit))
            if coeffs.setdefault(k, c) != c:
                raise ClosureViolation(f"inconsistent coefficient for {self.basis[k]}")
        for k, c in coeffs.items():
            if any(pos not in m for pos in self._supports[k]):
                raise ClosureViolation(f"partial support of {self.basis[k]}")
        return {k: c for k, c in coeffs.items() if c}

    @cached_property
    def structure(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """Nonzero brackets [E_a, E_b] for a < b, as sparse coefficient maps."""
        table = {}
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                br = commutator(self._supports[a], self._supports[b])
                if br:
                    table[(a, b)] = self.decompose(br)
        return table

    def bracket_coeffs(self, a: int, b: int) -> dict[int, Fraction]:
        if a == b:
            return {}
        if a < b:
            return self.structure.get((a, b), {})
        return {k: -c for k, c in self.structure.get((b, a), {}).items()}

    def bracket(self, x: BasisElement, y: BasisElement) -> list[Fraction]:
        vec = [Fraction(0)] * self.dim
        for k, c in self.bracket_coeffs(self.index[x], self.index[y]).items():
            vec[k] = c
        return vec

    def phi_vector(self, phi: Functional) -> list:
        unknown = set(phi) - set(self.index)
        if unknown:
            raise KeyError(f"functional mentions elements outside the basis: {sorted(map(str, unknown))}")
        return [phi.get(e, 0) for e in self.basis]

    def commutator_rows(self, values: list) -> list[list]:
        """phi(C) as nested lists, phi given by its values on the basis."""
        size = self.dim
        rows = [[0] * size for _ in range(size)]
        for (a, b), coeffs in self.structure.items():
            v = sum(c * values[k] for k, c in coeffs.items())
            if v:
                if isinstance(v, Fraction) and v.denominator == 1:
                    v = v.numerator
                rows[a][b] = v
                rows[b][a] = -v
        return rows

    def extended_rows(self, values: list) -> list[list]:
        if self.dim % 2 == 0:
            raise EvenDimension(f"extended matrix needs odd dimension, got {self.dim}")
        inner = self.commutator_rows(values)
        rows = [[0] + list(values)]
        rows += [[-values[a]] + inner[a] for a in range(self.dim)]
        return rows

    def commutator_matrix(self, phi: Functional, field: Field = RATIONAL) -> ExactMatrix:
        return ExactMatrix.from_rows(self.commutator_rows(self.phi_vector(phi)), field, cols=self.dim)

    def extended_matrix(self, phi: Functional, field: Field = RATIONAL) -> ExactMatrix:
        return ExactMatrix.from_rows(self.extended_rows(self.phi_vector(phi)), field, cols=self.dim + 1)

    def jacobi_defects(self) -> list[tuple[int, int, int]]:
        """Triples (a, b, c) where [[a,b],c] + [[b,c],a] + [[c,a],b] != 0."""
        def bracket_vec(u: dict[int, Fraction], c: int) -> dict[int, Fraction]:
            out: dict[int, Fraction] = {}
            for k, cu in u.items():
                for m, cm in self.bracket_coeffs(k, c).items():
                    out[m] = out.get(m, 0) + cu * cm
            return out

        bad = []
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                for c in range(b + 1, self.dim):
                    total: dict[int, Fraction] = {}
                    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                        for m, v in bracket_vec(self.bracket_coeffs(x, y), z).items():
                            total[m] = total.get(m, 0) + v
                    if any(total.values()):
                        bad.append((a, b, c))
        return bad


def ones(alg: LieAlgebra, include_diagonal: bool = True) -> dict[BasisElement, int]:
    return {e: 1 for e in alg.basis if include_diagonal or not e.is_diagonal}


def m_matrix(g: RelationGraph) -> ExactMatrix:
    """|E| x |V| matrix M(G); rows dashed, loops, solid; columns sorted vertices."""
    return ExactMatrix.from_rows(m_rows(g), cols=len(g.vertices))


def algebra(p: SignedPoset) -> LieAlgebra:
    return LieAlgebra(p)


def bracket(p: SignedPoset, x: BasisElement, y: BasisElement) -> list[Fraction]:
    return LieAlgebra(p).bracket(x, y)


def scalar(v) -> Scalar:
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v
