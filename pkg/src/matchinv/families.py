"""Parameterized witness families with closed-form matching invariants.

Three families, G1/G2/G3, each a clique core decorated with pendant and
matching blocks.  Every valid parameter choice has known values for all
three matching invariants, which is what makes the families usable as
realizability witnesses:

* ``G1(a, b, c)``: clique on 2a vertices (block X), a pendant vertex y_i
  on x_i for i = 1..2b (block Y), and c pendant vertices on x_2a
  (block Z).  Invariants (1, a, a+b).
* ``G2(a, b, c, d, e)``: a G1 part, plus d disjoint edges inside a block
  U of 2d vertices, a pendant u'_i on every u_i (block U'), e disjoint
  edges on a block V of 2e vertices, and an apex w joined to X, U and V.
  Invariants (d+e+1, a+d+e, a+b+2d+e+1).
* ``G3(a, b, c)``: clique block X, b disjoint edges on a block Y of 2b
  vertices, a star center v with c leaves (block Z), and an apex w
  joined to X, Y and v.  Invariants (b+2, a+b+1, a+b+1).

Canonical vertex order is X, Y, Z, U, U', V, then w; built graphs carry
per-vertex block labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import MAX_VERTICES, Graph, from_edge_list
from .matching import InvariantTriple

FAMILY_NAMES = ("G1", "G2", "G3")


@dataclass(frozen=True)
class FamilySpec:
    """One family member: family tag plus integer parameters."""

    family: str
    a: int
    b: int
    c: int
    d: int = 0
    e: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family != "G2" and (self.d or self.e):
            raise ValueError(f"{self.family} takes only parameters a, b, c")
        self.validate()

    def validate(self) -> None:
        a, b, c, d, e = self.a, self.b, self.c, self.d, self.e
        if self.family == "G1":
            if a < 1:
                raise ValueError("G1 needs a >= 1")
            if not a >= b >= 0:
                raise ValueError("G1 needs a >= b >= 0")
            if c < 0:
                raise ValueError("G1 needs c >= 0")
        elif self.family == "G2":
            if not a > b >= 0:
                raise ValueError("G2 needs a > b >= 0")
            if c < 1:
                raise ValueError("G2 needs c >= 1")
            if d < 0 or e < 0:
                raise ValueError("G2 needs d, e >= 0")
            if d + e < 1:
                raise ValueError("G2 needs d + e >= 1")
        else:
            if a < 1:
                raise ValueError("G3 needs a >= 1")
            if b < 0:
                raise ValueError("G3 needs b >= 0")
            if c < 1:
                raise ValueError("G3 needs c >= 1")
        if self.vertex_count() > MAX_VERTICES:
            raise ValueError(
                f"{self.to_text()} would have {self.vertex_count()} vertices, "
                f"more than {MAX_VERTICES}")

    def vertex_count(self) -> int:
        a, b, c, d, e = self.a, self.b, self.c, self.d, self.e
        if self.family == "G1":
            return 2 * a + 2 * b + c
        if self.family == "G2":
            return 2 * a + 2 * b + c + 4 * d + 2 * e + 1
        return 2 * a + 2 * b + c + 2

    def params(self) -> tuple[int, ...]:
        if self.family == "G2":
            return (self.a, self.b, self.c, self.d, self.e)
        return (self.a, self.b, self.c)

    def to_text(self) -> str:
        return f"{self.family}({','.join(map(str, self.params()))})"

    def __str__(self) -> str:
        return self.to_text()


_SPEC_RE = re.compile(r"^(G[123])\((-?\d+(?:,-?\d+)*)\)$")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse text like ``G2(2,0,1,0,1)`` back into a FamilySpec."""
    m = _SPEC_RE.match(text.replace(" ", ""))
    if not m:
        raise ValueError(f"cannot parse family spec {text!r}")
    family = m.group(1)
    nums = [int(x) for x in m.group(2).split(",")]
    want = 5 if family == "G2" else 3
    if len(nums) != want:
        raise ValueError(f"{family} takes {want} parameters, got {len(nums)}")
    return FamilySpec(family, *nums)


def predict_invariants(spec: FamilySpec) -> tuple[int, InvariantTriple]:
    """Closed-form (vertex count, invariant triple) for a family member."""
    a, b, d, e = spec.a, spec.b, spec.d, spec.e
    if spec.family == "G1":
        triple = InvariantTriple(1, a, a + b)
    elif spec.family == "G2":
        triple = InvariantTriple(d + e + 1, a + d + e, a + b + 2 * d + e + 1)
    else:
        triple = InvariantTriple(b + 2, a + b + 1, a + b + 1)
    return spec.vertex_count(), triple


def build_family(spec: FamilySpec) -> Graph:
    """Construct the family graph in canonical vertex order with labels."""
    a, b, c, d, e = spec.a, spec.b, spec.c, spec.d, spec.e
    edges: list[tuple[int, int]] = []
    labels: list[str] = []

    def clique_block(start: int, size: int) -> None:
        for i in range(start, start + size):
            for j in range(i + 1, start + size):
                edges.append((i, j))

    # block X: clique on 2a vertices (all families)
    clique_block(0, 2 * a)
    labels += [f"x{i + 1}" for i in range(2 * a)]
    y0 = 2 * a

    if spec.family in ("G1", "G2"):
        # block Y: pendant y_i on x_i
        edges += [(i, y0 + i) for i in range(2 * b)]
        labels += [f"y{i + 1}" for i in range(2 * b)]
        # block Z: pendants on the last clique vertex
        z0 = y0 + 2 * b
        edges += [(2 * a - 1, z0 + i) for i in range(c)]
        labels += [f"z{i + 1}" for i in range(c)]
        if spec.family == "G1":
            return from_edge_list(spec.vertex_count(), edges, labels)
        # block U: perfect matching u_i -- u_{d+i}
        u0 = z0 + c
        edges += [(u0 + i, u0 + d + i) for i in range(d)]
        labels += [f"u{i + 1}" for i in range(2 * d)]
        # block U': pendant u'_i on every u_i
        up0 = u0 + 2 * d
        edges += [(u0 + i, up0 + i) for i in range(2 * d)]
        labels += [f"u'{i + 1}" for i in range(2 * d)]
        # block V: perfect matching v_i -- v_{e+i}
        v0 = up0 + 2 * d
        edges += [(v0 + i, v0 + e + i) for i in range(e)]
        labels += [f"v{i + 1}" for i in range(2 * e)]
        # apex w joined to X, U and V
        w = v0 + 2 * e
        edges += [(i, w) for i in range(2 * a)]
        edges += [(u0 + i, w) for i in range(2 * d)]
        edges += [(v0 + i, w) for i in range(2 * e)]
        labels.append("w")
        return from_edge_list(spec.vertex_count(), edges, labels)

    # G3.  Block Y: b disjoint edges y_i -- y_{b+i}.
    edges += [(y0 + i, y0 + b + i) for i in range(b)]
    labels += [f"y{i + 1}" for i in range(2 * b)]
    z0 = y0 + 2 * b
    v = z0 + c
    w = v + 1
    # block Z: star leaves around v
    edges += [(v, z0 + i) for i in range(c)]
    labels += [f"z{i + 1}" for i in range(c)]
    labels += ["v", "w"]
    # apex w joined to X, Y and v
    edges += [(i, w) for i in range(2 * a)]
    edges += [(y0 + i, w) for i in range(2 * b)]
    edges.append((v, w))
    return from_edge_list(spec.vertex_count(), edges, labels)


def expected_edge_count(spec: FamilySpec) -> int:
    """Closed-form edge count, used as a construction self-check."""
    a, b, c, d, e = spec.a, spec.b, spec.c, spec.d, spec.e
    clique = a * (2 * a - 1)
    if spec.family == "G1":
        return clique + 2 * b + c
    if spec.family == "G2":
        return clique + 2 * b + c + d + 2 * d + e + (2 * a + 2 * d + 2 * e)
    return clique + b + c + (2 * a + 2 * b + 1)


def spec_grid(max_vertices: int = 12) -> list[FamilySpec]:
    """Small valid parameter grid across all three families.

    Ranges: G1 with a <= 3, b <= a, c <= 3; G2 with a <= 2, b < a,
    c <= 2, d <= 1, e <= 1; G3 with a <= 2, b <= 2, c <= 3; filtered to
    the given vertex budget.
    """
    out: list[FamilySpec] = []
    for a in range(1, 4):
        for b in range(0, a + 1):
            for c in range(0, 4):
                spec = FamilySpec("G1", a, b, c)
                if spec.vertex_count() <= max_vertices:
                    out.append(spec)
    for a in range(1, 3):
        for b in range(0, a):
            for c in range(1, 3):
                for d in range(0, 2):
                    for e in range(0, 2):
                        if d + e < 1:
                            continue
                        spec = FamilySpec("G2", a, b, c, d, e)
                        if spec.vertex_count() <= max_vertices:
                            out.append(spec)
    for a in range(1, 3):
        for b in range(0, 3):
            for c in range(1, 4):
                spec = FamilySpec("G3", a, b, c)
                if spec.vertex_count() <= max_vertices:
                    out.append(spec)
    return out
