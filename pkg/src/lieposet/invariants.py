"""Index, Frobenius and contact classification of Lie poset algebras.

Each quantity is available along two independent routes: a combinatorial one
read off the relation graph, and a linear-algebraic one built from the
commutator matrix.  The second route works for posets of any height.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .algebra import (DASHED, DIAG, LOOP, SOLID_C, SOLID_D, BasisElement,
                      LieAlgebra, m_matrix, scalar)
from .errors import (HeightError, InconsistencyError, NotTree, TooManyRows,
                     TrivialGraph)
from .exactla import DEFAULT_PRIME, RATIONAL, ExactMatrix, Scalar, det_mod, determinant, rank, rank_mod
from .poset import SignedPoset, height
from .relgraph import ComponentCensus, Edge, RelationGraph, build_relation_graph, census

DEFAULT_SAMPLES = 8
DEFAULT_DET_SAMPLES = 16


@lru_cache(maxsize=4096)
def algebra_of(p: SignedPoset) -> LieAlgebra:
    return LieAlgebra(p)


@lru_cache(maxsize=4096)
def graph_of(p: SignedPoset) -> RelationGraph:
    return build_relation_graph(p)


def _require_height_one(p: SignedPoset) -> None:
    h = height(p)
    if h > 1:
        raise HeightError(f"HeightError: needs a poset of height <= 1, got height {h}")


def element_for_edge(e: Edge, family: str) -> BasisElement:
    if e.kind == "dashed":
        return BasisElement(DASHED, e.u, e.v)
    if e.is_loop:
        return BasisElement(LOOP, e.u)
    if family == "C":
        return BasisElement(SOLID_C, e.u, e.v)
    return BasisElement(SOLID_D, e.v, e.u)


@dataclass(frozen=True)
class IndexResult:
    dim: int
    oracle: int
    max_rank: int
    combinatorial: Optional[int]
    m_rank: Optional[int]
    samples: int
    seed: int
    prime: int

    @property
    def index(self) -> int:
        return self.oracle

    def to_json(self) -> dict:
        return {"dim": self.dim, "index": self.oracle, "maxRank": self.max_rank,
                "combinatorial": self.combinatorial, "mRank": self.m_rank,
                "samples": self.samples, "seed": self.seed, "prime": self.prime}


def index_combinatorial(p: SignedPoset) -> int:
    """|E| - |V| + 2·eta, eta = number of components without an odd cycle."""
    _require_height_one(p)
    g = graph_of(p)
    return len(g.edges) - len(g.vertices) + 2 * census(g).eta


def max_sampled_rank(alg: LieAlgebra, samples: int, rng: random.Random, prime: int) -> int:
    """Largest rank of phi(C) over the all-ones functional and ``samples`` random ones."""
    if alg.dim == 0:
        return 0
    best = rank_mod(alg.commutator_rows([1] * alg.dim), prime)
    for _ in range(samples):
        if best == alg.dim - alg.dim % 2:
            break
        values = [rng.randrange(prime) for _ in range(alg.dim)]
        best = max(best, rank_mod(alg.commutator_rows(values), prime))
    return best


def index_oracle(p: SignedPoset, samples: int = DEFAULT_SAMPLES, seed: int = 0,
                 prime: int = DEFAULT_PRIME, strict: bool = True) -> IndexResult:
    """dim - max rank phi(C), maximized over sampled functionals mod ``prime``.

    For height <= 1 also records rank M(P) and the combinatorial formula; with
    ``strict`` any disagreement between the three raises InconsistencyError.
    """
    alg = algebra_of(p)
    rng = random.Random(seed)
    best = max_sampled_rank(alg, samples, rng, prime)
    combinatorial = m_rank = None
    if height(p) <= 1:
        combinatorial = index_combinatorial(p)
        m_rank = rank(m_matrix(graph_of(p)))
    result = IndexResult(alg.dim, alg.dim - best, best, combinatorial, m_rank, samples, seed, prime)
    if strict and combinatorial is not None:
        if not (combinatorial == result.oracle == alg.dim - 2 * m_rank):
            raise InconsistencyError(
                f"index mismatch: formula {combinatorial}, oracle {result.oracle}, "
                f"dim - 2 rank M = {alg.dim - 2 * m_rank}")
    return result


def frobenius_by_graph(c: ComponentCensus) -> bool:
    return all(comp.is_single_odd_cycle for comp in c.components)


def contact_by_graph(c: ComponentCensus) -> bool:
    trees = [comp for comp in c.components if comp.is_tree]
    return len(trees) == 1 and all(comp.is_tree or comp.is_single_odd_cycle for comp in c.components)


def is_frobenius(p: SignedPoset, samples: int = DEFAULT_SAMPLES, seed: int = 0,
                 prime: int = DEFAULT_PRIME) -> tuple[bool, bool]:
    """(index == 0 by the oracle, every component is a single odd cycle)."""
    _require_height_one(p)
    res = index_oracle(p, samples, seed, prime, strict=False)
    return res.oracle == 0, frobenius_by_graph(census(graph_of(p)))


def contact_form(p: SignedPoset) -> dict[BasisElement, int]:
    """(D_p0)* plus the dual of every edge element, p0 the smallest leaf."""
    _require_height_one(p)
    g = graph_of(p)
    c = census(g)
    if c.component_count != 1 or not c.components[0].is_tree:
        raise NotTree("contact_form needs a relation graph that is a tree")
    if len(g.vertices) <= 1:
        raise TrivialGraph("contact_form needs at least two vertices")
    return _tree_form(g, p.family)


def _tree_form(g: RelationGraph, family: str) -> dict[BasisElement, int]:
    if len(g.vertices) == 1:
        return {BasisElement(DIAG, g.vertices[0]): 1}
    p0 = min(v for v in g.vertices if g.degree(v) == 1)
    phi = {BasisElement(DIAG, p0): 1}
    for e in g.edges:
        phi[element_for_edge(e, family)] = 1
    return phi


@dataclass
class ContactCertificate:
    verdict: str                       # "contact" | "notContact" | "notApplicable"
    method: str                        # "explicitForm" | "randomSample" | "graphCriterion"
    reason: str                        # why the verdict holds
    criterion: bool                    # graph criterion prediction
    form: Optional[dict] = None
    determinant: Optional[Scalar] = None
    samples: int = 0
    seed: int = 0
    prime: int = DEFAULT_PRIME
    attempts: int = field(default=0, repr=False)

    @property
    def is_contact(self) -> bool:
        return self.verdict == "contact"

    def to_json(self) -> dict:
        form = None
        if self.form is not None:
            form = {str(b): json_scalar(v) for b, v in sorted(self.form.items(), key=lambda kv: kv[0].sort_key())
                    if v}
        return {"verdict": self.verdict, "method": self.method, "reason": self.reason,
                "graphCriterion": self.criterion, "form": form,
                "determinant": json_scalar(self.determinant),
                "samples": self.samples, "seed": self.seed, "prime": self.prime}


def json_scalar(v):
    """Integers stay integers; other rationals become "a/b" strings."""
    if v is None or isinstance(v, int):
        return v
    v = scalar(v)
    return v if isinstance(v, int) else str(v)


def assemble_contact_form(p: SignedPoset, rng: random.Random | None = None) -> dict[BasisElement, int]:
    """Component-wise candidate form for a poset meeting the one-tree rule.

    The tree component gets its explicit form; every other component gets
    value 1 on its edge elements (random nonzero values when ``rng`` is given)
    and 0 on its diagonal elements.
    """
    g = graph_of(p)
    phi: dict[BasisElement, int] = {}
    for comp in census(g).components:
        sub = g.subgraph(comp.vertices)
        if comp.is_tree:
            phi.update(_tree_form(sub, p.family))
        else:
            for e in sub.edges:
                phi[element_for_edge(e, p.family)] = rng.randrange(1, 1 << 16) if rng else 1
    return phi


def extended_determinant(p: SignedPoset, phi) -> Scalar:
    alg = algebra_of(p)
    return determinant(alg.extended_matrix(phi, RATIONAL))


def classify_contact(p: SignedPoset, samples: int = DEFAULT_DET_SAMPLES, seed: int = 0,
                     prime: int = DEFAULT_PRIME, index_samples: int = DEFAULT_SAMPLES,
                     retries: int = 8) -> ContactCertificate:
    """Decide contactness by the one-tree rule and certify it with determinants.

    Positive predictions are certified by an explicit form with nonzero
    determinant of phi(Ĉ) over the rationals.  Negative predictions are
    confirmed by even dimension, index != 1, or ``samples`` random functionals
    mod ``prime`` all giving det phi(Ĉ) = 0.  Disagreement raises
    InconsistencyError.
    """
    _require_height_one(p)
    alg = algebra_of(p)
    predicted = contact_by_graph(census(graph_of(p)))
    rng = random.Random(seed)
    base = dict(samples=samples, seed=seed, prime=prime)
    if predicted:
        if alg.dim % 2 == 0:
            raise InconsistencyError("one-tree rule holds but the dimension is even")
        phi = assemble_contact_form(p)
        det = extended_determinant(p, phi)
        attempts = 1
        while det == 0 and attempts <= retries:
            phi = assemble_contact_form(p, rng)
            det = extended_determinant(p, phi)
            attempts += 1
        if det == 0:
            raise InconsistencyError("one-tree rule holds but no certified contact form was found")
        return ContactCertificate("contact", "explicitForm", "nonzeroDeterminant", True,
                                  form=phi, determinant=scalar(det), attempts=attempts, **base)
    if alg.dim % 2 == 0:
        return ContactCertificate("notApplicable", "graphCriterion", "evenDimension", False, **base)
    idx = index_oracle(p, index_samples, seed, prime, strict=False).oracle
    if idx != 1:
        return ContactCertificate("notContact", "graphCriterion", "indexNotOne", False, **base)
    witness = sample_contact_determinant(alg, samples, rng, prime)
    if witness is not None:
        raise InconsistencyError("one-tree rule fails but a random functional has det phi(Ĉ) != 0")
    return ContactCertificate("notContact", "randomSample", "determinantSamples", False,
                              determinant=0, **base)


def sample_contact_determinant(alg: LieAlgebra, samples: int, rng: random.Random,
                               prime: int) -> Optional[list[int]]:
    """Values of a sampled functional with det phi(Ĉ) != 0 mod prime, or None."""
    if alg.dim % 2 == 0:
        return None
    for _ in range(samples):
        values = [rng.randrange(prime) for _ in range(alg.dim)]
        if det_mod(alg.extended_rows(values), prime):
            return values
    return None


def contact_by_sampling(p: SignedPoset, samples: int = DEFAULT_DET_SAMPLES, seed: int = 0,
                        prime: int = DEFAULT_PRIME) -> ContactCertificate:
    """Height-free fallback: a nonzero sampled determinant certifies contact."""
    alg = algebra_of(p)
    base = dict(samples=samples, seed=seed, prime=prime)
    if alg.dim % 2 == 0:
        return ContactCertificate("notApplicable", "graphCriterion", "evenDimension", False, **base)
    values = sample_contact_determinant(alg, samples, random.Random(seed), prime)
    if values is None:
        return ContactCertificate("notContact", "randomSample", "determinantSamples", False,
                                  determinant=0, **base)
    phi = dict(zip(alg.basis, values))
    det = determinant(alg.extended_matrix(phi, RATIONAL))
    return ContactCertificate("contact", "randomSample", "nonzeroDeterminant", False,
                              form=phi, determinant=scalar(det), **base)


def find_sign_combination(rows: Sequence[Sequence[int]], target: Sequence[int],
                          max_rows: int = 20) -> Optional[list[int]]:
    """Signs c in {-1, 1}^k with sum c_j rows_j == target, or None.

    Exhaustive over all 2^k sign vectors, split in two halves that meet in
    the middle.
    """
    k = len(rows)
    if k > max_rows:
        raise TooManyRows(f"{k} rows exceeds the brute-force limit of {max_rows}")
    width = len(target)
    if any(len(r) != width for r in rows):
        raise ValueError("rows and target must have the same length")
    if k == 0:
        return [] if not any(target) else None
    half = k // 2
    left, right = rows[:half], rows[half:]

    def sums(part):
        for signs in product((1, -1), repeat=len(part)):
            yield signs, tuple(sum(s * r[c] for s, r in zip(signs, part)) for c in range(width))

    table = {}
    for signs, vec in sums(right):
        table.setdefault(vec, signs)
    for signs, vec in sums(left):
        need = tuple(t - v for t, v in zip(target, vec))
        if need in table:
            return list(signs) + list(table[need])
    return None


def sign_combination_holds(rows, signs, target) -> bool:
    width = len(target)
    return all(sum(s * r[c] for s, r in zip(signs, rows)) == target[c] for c in range(width))


@dataclass(frozen=True)
class ClassificationReport:
    poset: SignedPoset
    index: IndexResult
    eta: Optional[int]
    frobenius: bool
    frobenius_by_graph: Optional[bool]
    contact: Optional[ContactCertificate]
    census: Optional[ComponentCensus] = None

    def to_json(self) -> dict:
        c = self.contact
        return {
            "family": self.poset.family,
            "n": self.poset.n,
            "relations": [list(r) for r in self.poset.sorted_relations()],
            "dim": self.index.dim,
            "index": self.index.oracle,
            "eta": self.eta,
            "frobenius": self.frobenius,
            "contact": None if c is None else c.is_contact,
            "method": None if c is None else c.method,
            "determinant": None if c is None else json_scalar(c.determinant),
            "seed": self.index.seed,
            "samples": self.index.samples,
            "prime": self.index.prime,
        }


def certify_contact(p: SignedPoset, samples: int = DEFAULT_DET_SAMPLES, seed: int = 0,
                    prime: int = DEFAULT_PRIME, index_samples: int = DEFAULT_SAMPLES) -> ContactCertificate:
    """classify_contact for height <= 1, contact_by_sampling above that."""
    if height(p) <= 1:
        return classify_contact(p, samples, seed, prime, index_samples=index_samples)
    return contact_by_sampling(p, samples, seed, prime)


def classify(p: SignedPoset, samples: int = DEFAULT_SAMPLES, det_samples: int = DEFAULT_DET_SAMPLES,
             seed: int = 0, prime: int = DEFAULT_PRIME) -> ClassificationReport:
    idx = index_oracle(p, samples, seed, prime)
    if height(p) <= 1:
        cen = census(graph_of(p))
        cert = classify_contact(p, det_samples, seed, prime, index_samples=samples)
        by_graph = frobenius_by_graph(cen)
        if by_graph != (idx.oracle == 0):
            raise InconsistencyError("Frobenius graph criterion disagrees with the index")
        return ClassificationReport(p, idx, cen.eta, idx.oracle == 0, by_graph, cert, cen)
    cert = contact_by_sampling(p, det_samples, seed, prime)
    return ClassificationReport(p, idx, None, idx.oracle == 0, None, cert)
