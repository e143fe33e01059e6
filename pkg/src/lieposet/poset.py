"""Type-B, C and D posets on the signed ground set {-n..-1, (0), 1..n}."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import CoverViolation, GroundSetError, OrderViolation, ValidationError, ZeroRelation

FAMILIES = ("B", "C", "D")

Relation = tuple[int, int]


def fmt(x: int) -> str:
    return f"−{-x}" if x < 0 else str(x)


def fmt_rel(x: int, y: int) -> str:
    return f"{fmt(x)} ≺ {fmt(y)}"


def ground_set(family: str, n: int) -> tuple[int, ...]:
    if family == "B":
        return tuple(range(-n, n + 1))
    return tuple(x for x in range(-n, n + 1) if x != 0)


class HeightPair(NamedTuple):
    plus_height: int
    total_height: int


@dataclass(frozen=True)
class Subposet:
    """Restriction of a poset to a subset of its elements."""

    elements: tuple[int, ...]
    relations: frozenset[Relation]

    def height(self) -> int:
        return _height(self.elements, self.relations)


@dataclass(frozen=True)
class SignedPoset:
    family: str
    n: int
    relations: frozenset[Relation]

    @property
    def elements(self) -> tuple[int, ...]:
        return ground_set(self.family, self.n)

    def sorted_relations(self) -> list[Relation]:
        return sorted(self.relations)

    def precedes(self, x: int, y: int) -> bool:
        return (x, y) in self.relations

    def covers(self) -> list[Relation]:
        """Covering relations x ⋖ y, sorted."""
        succ = _successors(self.relations)
        return sorted((x, y) for (x, y) in self.relations
                      if not any(y in succ.get(z, ()) for z in succ.get(x, ()) if z != y))

    def with_family(self, family: str) -> "SignedPoset":
        """Re-validate the same relations under another family tag."""
        return from_generators(family, self.n, self.relations)

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n,
                "relations": [list(r) for r in self.sorted_relations()]}


def _successors(relations: Iterable[Relation]) -> dict[int, set[int]]:
    succ: dict[int, set[int]] = {}
    for x, y in relations:
        succ.setdefault(x, set()).add(y)
    return succ


def transitive_closure(elements: Iterable[int], relations: Iterable[Relation]) -> set[Relation]:
    elements = list(elements)
    succ = {x: set() for x in elements}
    for x, y in relations:
        succ[x].add(y)
    for k in elements:
        reach_k = succ[k]
        if not reach_k:
            continue
        for i in elements:
            if k in succ[i]:
                succ[i] |= reach_k
    return {(x, y) for x in elements for y in succ[x]}


def _height(elements: Iterable[int], relations: Iterable[Relation]) -> int:
    # relations are increasing in integer order, so ascending order is topological
    preds: dict[int, list[int]] = {}
    for x, y in relations:
        preds.setdefault(y, []).append(x)
    longest: dict[int, int] = {}
    best = 0
    for y in sorted(elements):
        longest[y] = 1 + max((longest[x] for x in preds.get(y, ())), default=0)
        best = max(best, longest[y])
    return max(best - 1, 0)


def from_generators(family: str, n: int, generators: Iterable[Iterable[int]]) -> SignedPoset:
    """Symmetrize and transitively close ``generators`` into a validated poset.

    Raises ``OrderViolation`` if the closure contains x ≺ y with x >= y,
    ``CoverViolation`` if a B/D poset has -i ⋖ i, and ``ZeroRelation`` if a
    type-B poset relates 0 while being of height <= 1 or separable.
    """
    if family not in FAMILIES:
        raise ValidationError(f"unknown family {family!r}; expected one of B, C, D")
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    ground = ground_set(family, n)
    members = set(ground)
    rels: set[Relation] = set()
    for pair in generators:
        x, y = (int(v) for v in pair)
        if x not in members or y not in members:
            raise GroundSetError(f"GroundSetError: {fmt_rel(x, y)} uses an element outside {fmt(-n)}..{fmt(n)}"
                                 + (" (0 exists only in type B)" if 0 in (x, y) and family != "B" else ""))
        if x == y:
            raise GroundSetError(f"GroundSetError: {fmt_rel(x, y)} is not a strict relation")
        if x > y:
            raise OrderViolation(f"OrderViolation: {fmt_rel(x, y)}")
        rels.add((x, y))
        rels.add((-y, -x))
    closed = transitive_closure(ground, rels)
    bad = sorted((x, y) for (x, y) in closed if x >= y)
    if bad:
        x, y = bad[0]
        raise OrderViolation(f"OrderViolation: {fmt_rel(x, y)}")
    p = SignedPoset(family, n, frozenset(closed))
    if family in ("B", "D"):
        covers = set(p.covers())
        for i in range(1, n + 1):
            if (-i, i) in covers:
                raise CoverViolation(f"CoverViolation: {fmt(i)} covers {fmt(-i)}")
    if family == "B" and any(0 in r for r in closed):
        if height(p) <= 1 or is_separable(p):
            r = next(r for r in sorted(closed) if 0 in r)
            raise ZeroRelation(f"ZeroRelation: {fmt_rel(*r)} relates 0 in a height-one or separable poset")
    return p


def height(p: SignedPoset) -> int:
    return _height(p.elements, p.relations)


def induced(p: SignedPoset, keep: Iterable[int]) -> Subposet:
    keep = set(keep)
    bad = keep - set(p.elements)
    if bad:
        raise GroundSetError(f"GroundSetError: {sorted(bad)} not in the ground set")
    return Subposet(tuple(sorted(keep)),
                    frozenset((x, y) for (x, y) in p.relations if x in keep and y in keep))


def positive_part(p: SignedPoset) -> Subposet:
    return induced(p, range(1, p.n + 1))


def negative_part(p: SignedPoset) -> Subposet:
    return induced(p, range(-p.n, 0))


def height_pair(p: SignedPoset) -> HeightPair:
    return HeightPair(positive_part(p).height(), height(p))


def is_separable(p: SignedPoset) -> bool:
    return not any(x < 0 < y for (x, y) in p.relations)


def drop_zero(p: SignedPoset) -> SignedPoset:
    """The type-C poset on P \\ {0} for a type-B poset whose 0 is isolated."""
    if p.family != "B":
        raise ValidationError("drop_zero applies to type-B posets only")
    if any(0 in r for r in p.relations):
        raise ZeroRelation("ZeroRelation: 0 is related, cannot drop it")
    return SignedPoset("C", p.n, p.relations)


def load(text: str) -> SignedPoset:
    """Parse the JSON poset file format ({family, n, relations})."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError("poset file must hold a single JSON object")
    missing = {"family", "n", "relations"} - data.keys()
    if missing:
        raise ValidationError(f"poset file is missing fields: {sorted(missing)}")
    rels = data["relations"]
    if not isinstance(rels, list) or not all(isinstance(r, list) and len(r) == 2 for r in rels):
        raise ValidationError("relations must be an array of 2-element integer arrays")
    return from_generators(data["family"], data["n"], rels)


def dump(p: SignedPoset) -> str:
    return json.dumps(p.to_json())


def disjoint_union(*posets: SignedPoset) -> SignedPoset:
    """Place the posets side by side, shifting labels of each by the sizes before it."""
    if not posets:
        raise ValidationError("disjoint_union needs at least one poset")
    family = posets[0].family
    if any(p.family != family for p in posets):
        raise ValidationError("disjoint_union needs posets of one family")
    rels: set[Relation] = set()
    offset = 0
    for p in posets:
        for x, y in p.relations:
            rels.add((_shift(x, offset), _shift(y, offset)))
        offset += p.n
    return from_generators(family, offset, rels)


def _shift(x: int, offset: int) -> int:
    return x + offset if x > 0 else x - offset if x < 0 else 0
