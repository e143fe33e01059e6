"""Exhaustive height-one enumeration and the theorem-verification harness."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from itertools import combinations, islice, product
from multiprocessing import Pool
from typing import Iterator, Optional

from .algebra import m_matrix
from .errors import InconsistencyError, LiePosetError, ValidationError
from .exactla import DEFAULT_PRIME, rank
from .invariants import (DEFAULT_DET_SAMPLES, DEFAULT_SAMPLES, algebra_of, classify_contact,
                         contact_by_graph, frobenius_by_graph, graph_of, index_oracle)
from .poset import FAMILIES, SignedPoset, drop_zero, from_generators, height, is_separable
from .relgraph import (RelationGraph, balanced_cycle, census, dashed_elimination_steps,
                       delete_even_cycle_edge, forbidden_patterns)

NONE, SOLID, DASHED = 0, 1, 2
PAIR_SYMBOLS = "-sd"


@dataclass(frozen=True)
class CandidateAssignment:
    """Edge kind per pair {i, j} (i < j, lexicographic), loop flags per vertex."""

    family: str
    n: int
    pairs: tuple[int, ...]
    loops: tuple[bool, ...]

    @property
    def encoding(self) -> str:
        s = "".join(PAIR_SYMBOLS[k] for k in self.pairs)
        if self.family == "C":
            s += "|" + "".join("l" if f else "." for f in self.loops)
        return s

    def generators(self) -> list[tuple[int, int]]:
        gens = []
        for (i, j), kind in zip(combinations(range(1, self.n + 1), 2), self.pairs):
            if kind == SOLID:
                gens.append((-i, j))
            elif kind == DASHED:
                gens.append((-j, -i))
        gens += [(-i, i) for i, flag in enumerate(self.loops, start=1) if flag]
        return gens


def candidate_count(family: str, n: int) -> int:
    pairs = 3 ** (n * (n - 1) // 2)
    return pairs * 2 ** n if family == "C" else pairs


def candidates(family: str, n: int) -> Iterator[CandidateAssignment]:
    if family not in FAMILIES:
        raise ValidationError(f"unknown family {family!r}; expected one of B, C, D")
    npairs = n * (n - 1) // 2
    loop_choices = list(product((False, True), repeat=n)) if family == "C" else [(False,) * n]
    for pairs in product((NONE, SOLID, DASHED), repeat=npairs):
        for loops in loop_choices:
            yield CandidateAssignment(family, n, pairs, loops)


def build(c: CandidateAssignment) -> Optional[SignedPoset]:
    """The generated poset if it is valid and of height <= 1, else None."""
    try:
        p = from_generators(c.family, c.n, c.generators())
    except ValidationError:
        return None
    return p if height(p) <= 1 else None


def generate_height_one(family: str, n: int) -> Iterator[SignedPoset]:
    for c in candidates(family, n):
        p = build(c)
        if p is not None:
            yield p


def generate_with_encoding(family: str, n: int) -> Iterator[tuple[str, SignedPoset]]:
    for c in candidates(family, n):
        p = build(c)
        if p is not None:
            yield c.encoding, p


def generate_trees(family: str, n: int) -> Iterator[SignedPoset]:
    """Height-one posets whose relation graph is a spanning tree on n >= 2 vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for chosen in combinations(range(len(pairs)), n - 1):
        for kinds in product((SOLID, DASHED), repeat=n - 1):
            assignment = [NONE] * len(pairs)
            for k, kind in zip(chosen, kinds):
                assignment[k] = kind
            c = CandidateAssignment(family, n, tuple(assignment), (False,) * n)
            p = build(c)
            if p is not None and graph_of(p).is_connected():
                yield p


def generate_all(family: str, n: int, loop_free: bool = False) -> Iterator[SignedPoset]:
    """Every valid poset on the nonzero elements, any height, each once.

    Generators range over mirror orbits of relations x ≺ y; distinct
    generator sets with equal closures are reported once.  For type B the
    element 0 stays isolated.
    """
    elems = [x for x in range(-n, n + 1) if x != 0]
    orbits = sorted({min((x, y), (-y, -x)) for x in elems for y in elems if x < y})
    seen: set[frozenset] = set()
    for mask in range(1 << len(orbits)):
        gens = [o for k, o in enumerate(orbits) if mask >> k & 1]
        try:
            p = from_generators(family, n, gens)
        except ValidationError:
            continue
        if p.relations in seen:
            continue
        seen.add(p.relations)
        if loop_free and any((-i, i) in p.relations for i in range(1, n + 1)):
            continue
        yield p


def rewrite_trace(g: RelationGraph) -> list[tuple[str, RelationGraph, RelationGraph]]:
    """Balanced-cycle deletions, then dashed-edge eliminations, as (rule, before, after)."""
    trace = []
    while balanced_cycle(g) is not None:
        h = delete_even_cycle_edge(g)
        trace.append(("even-cycle", g, h))
        g = h
    for step in dashed_elimination_steps(g):
        trace.append((step.rule, g, step.graph))
        g = step.graph
    return trace


def rewrite_rank_failures(g: RelationGraph) -> list[str]:
    base = rank(m_matrix(g))
    out = []
    for rule, before, after in rewrite_trace(g):
        r = rank(m_matrix(after))
        if r != base:
            out.append(f"{rule} changed rank(M) from {base} to {r}")
    return out


@dataclass
class VerificationSummary:
    family: str
    n: int
    candidateCount: int = 0
    validCount: int = 0
    checksRun: int = 0
    failures: list[str] = field(default_factory=list)
    wallTime: float = 0.0

    def merge(self, other: "VerificationSummary") -> "VerificationSummary":
        return VerificationSummary(self.family, self.n,
                                   self.candidateCount + other.candidateCount,
                                   self.validCount + other.validCount,
                                   self.checksRun + other.checksRun,
                                   self.failures + other.failures,
                                   self.wallTime + other.wallTime)

    def to_json(self) -> dict:
        d = asdict(self)
        d["wallTime"] = round(self.wallTime, 3)
        return d


def check_poset(p: SignedPoset, samples: int = DEFAULT_SAMPLES, det_samples: int = DEFAULT_DET_SAMPLES,
                seed: int = 0, prime: int = DEFAULT_PRIME) -> tuple[int, list[str]]:
    """Run every theorem cross-check on one height-one poset; returns (checks, failures)."""
    checks = 0
    failures: list[str] = []

    def fail(what: str, detail: str) -> None:
        failures.append(f"{what}: {detail}")

    if p.family == "B":
        reduct = drop_zero(p)
        alg_b, alg_c = algebra_of(p), algebra_of(reduct)
        ib = index_oracle(p, samples, seed, prime, strict=False).oracle
        ic = index_oracle(reduct, samples, seed, prime, strict=False).oracle
        checks += 1
        if (alg_b.dim, ib) != (alg_c.dim, ic):
            fail("typeB", f"dim/index {alg_b.dim}/{ib} vs C reduct {alg_c.dim}/{ic}")
    if p.family == "D" or (p.family == "C" and not graph_of(p).loops):
        other = p.with_family("C" if p.family == "D" else "D")
        a, b = algebra_of(p), algebra_of(other)
        ia = index_oracle(p, samples, seed, prime, strict=False).oracle
        ib = index_oracle(other, samples, seed, prime, strict=False).oracle
        checks += 1
        if (a.dim, ia) != (b.dim, ib):
            fail("typeCD", f"dim/index {a.dim}/{ia} vs {b.dim}/{ib}")

    try:
        idx = index_oracle(p, samples, seed, prime, strict=True)
    except InconsistencyError as exc:
        fail("index", str(exc))
        return checks + 1, failures
    checks += 1

    g = graph_of(p)
    cen = census(g)
    checks += 1
    if (idx.oracle == 0) != frobenius_by_graph(cen):
        fail("frobenius", f"index {idx.oracle} vs graph criterion {frobenius_by_graph(cen)}")

    if idx.dim % 2 == 1:
        checks += 1
        try:
            cert = classify_contact(p, det_samples, seed, prime, index_samples=samples)
            if cert.is_contact != contact_by_graph(cen):
                fail("contact", f"verdict {cert.verdict} vs graph criterion")
        except InconsistencyError as exc:
            fail("contact", str(exc))

    checks += 1
    bad = forbidden_patterns(g)
    if bad:
        fail("patterns", f"forbidden subgraphs {bad}")

    if g.is_connected() and not is_separable(p):
        checks += 1
        try:
            for msg in rewrite_rank_failures(g):
                fail("rewrite", msg)
        except LiePosetError as exc:
            fail("rewrite", f"{type(exc).__name__}: {exc}")
    return checks, failures


def _verify_chunk(args) -> VerificationSummary:
    family, n, samples, det_samples, seed, prime, start, stop = args
    t0 = time.perf_counter()
    s = VerificationSummary(family, n)
    for c in islice(candidates(family, n), start, stop):
        s.candidateCount += 1
        p = build(c)
        if p is None:
            continue
        s.validCount += 1
        checks, failures = check_poset(p, samples, det_samples, seed, prime)
        s.checksRun += checks
        s.failures += [f"{c.encoding}: {f}" for f in failures]
    s.wallTime = time.perf_counter() - t0
    return s


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    size = -(-total // parts)
    return [(a, min(a + size, total)) for a in range(0, total, size)]


def verify_theorems(family: str, n: int, samples: int = DEFAULT_SAMPLES, seed: int = 0,
                    det_samples: int = DEFAULT_DET_SAMPLES, prime: int = DEFAULT_PRIME,
                    jobs: int = 1) -> VerificationSummary:
    """Exhaustive cross-check over every height-one candidate of (family, n).

    Every sampled quantity is seeded from ``seed`` alone, so the summary does
    not depend on ``jobs``.
    """
    if family not in FAMILIES:
        raise ValidationError(f"unknown family {family!r}; expected one of B, C, D")
    t0 = time.perf_counter()
    total = candidate_count(family, n)
    parts = _chunks(total, max(1, jobs) * 4 if jobs > 1 else 1)
    args = [(family, n, samples, det_samples, seed, prime, a, b) for a, b in parts]
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_verify_chunk, args)
    else:
        results = [_verify_chunk(a) for a in args]
    summary = VerificationSummary(family, n)
    for r in results:
        summary = summary.merge(r)
    summary.wallTime = time.perf_counter() - t0
    return summary
