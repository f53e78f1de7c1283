"""Symmetric polynomials in the two alphabets y_1..y_d and z_1..z_d.

Provides the elementary symmetric polynomials of each alphabet, their
two-alphabet polarizations e_{p,q} (sums of products over disjoint
increasing index tuples), the exact verification of the rank-2 rewriting
identity for e_{1,1}^2, and a greedy desk-scale search for module
generators of the symmetric invariants of the algebra's bulk over the
coefficient algebra generated by the e_k of both alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .algebra_core import YZPolynomial
from .group_action import act_bulk, permutation_matrix, symmetric_group
from .invariants import (
    EchelonBasis,
    coefficient_spans,
    invariant_basis,
    poly_to_row,
)


def elementary_symmetric(alphabet: str, d: int, k: int) -> YZPolynomial:
    """e_k of the chosen alphabet: the sum over all k-subsets of variables."""
    if alphabet not in ("y", "z"):
        raise ValueError(f"alphabet must be 'y' or 'z', got {alphabet!r}")
    if not 1 <= k <= d:
        raise ValueError(f"k must lie in 1..{d}, got {k}")
    zeros = (0,) * d
    terms = {}
    for subset in combinations(range(d), k):
        exps = [0] * d
        for i in subset:
            exps[i] = 1
        key = (tuple(exps), zeros) if alphabet == "y" else (zeros, tuple(exps))
        terms[key] = Fraction(1)
    return YZPolynomial(d, terms)


def polarized_elementary(d: int, p: int, q: int) -> YZPolynomial:
    """The polarization e_{p,q}: products over disjoint increasing index tuples.

    Sums y_{i_1}...y_{i_p} z_{j_1}...z_{j_q} over strictly increasing tuples
    with all p+q indices pairwise different.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    if p + q > d:
        raise ValueError(f"need p + q <= d, got p={p}, q={q}, d={d}")
    terms = {}
    for i_set in combinations(range(d), p):
        remaining = [j for j in range(d) if j not in i_set]
        for j_set in combinations(remaining, q):
            alpha = [0] * d
            beta = [0] * d
            for i in i_set:
                alpha[i] = 1
            for j in j_set:
                beta[j] = 1
            terms[(tuple(alpha), tuple(beta))] = Fraction(1)
    return YZPolynomial(d, terms)


def is_symmetric(poly: YZPolynomial) -> bool:
    """Invariance under the simultaneous index action of each adjacent swap."""
    d = poly.rank
    for i in range(d - 1):
        perm = list(range(d))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if act_bulk(permutation_matrix(perm), poly) != poly:
            return False
    return True


@dataclass(frozen=True)
class D2IdentityReport:
    """Outcome of expanding the rank-2 rewriting identity for e_{1,1}^2."""

    lhs: YZPolynomial
    rhs: YZPolynomial
    difference: YZPolynomial
    holds: bool
    note: str


def verify_d2_identity() -> D2IdentityReport:
    """Check e_{1,1}^2 = e_1(Y)e_1(Z)e_{1,1} - e_1^2(Y)e_2(Z) - e_2(Y)e_1^2(Z) + 4e_2(Y)e_2(Z).

    Full exact expansion in rank 2.  The e_2 factor multiplying e_1^2(Y) is
    read as e_2 of the whole two-variable z alphabet; the report records
    that reading instead of silently assuming it.
    """
    e11 = polarized_elementary(2, 1, 1)
    e1y = elementary_symmetric("y", 2, 1)
    e2y = elementary_symmetric("y", 2, 2)
    e1z = elementary_symmetric("z", 2, 1)
    e2z = elementary_symmetric("z", 2, 2)
    lhs = e11 * e11
    rhs = e1y * e1z * e11 - e1y * e1y * e2z - e2y * e1z * e1z + 4 * (e2y * e2z)
    difference = lhs - rhs
    return D2IdentityReport(
        lhs=lhs,
        rhs=rhs,
        difference=difference,
        holds=difference.is_zero(),
        note=(
            "verified with e_2 taken over the full two-variable z alphabet "
            "in the e_1^2(Y) term"
        ),
    )


@dataclass(frozen=True)
class SymmetricGeneratorTag:
    """Names one symmetric building block: e_k(Y), e_k(Z) or e_{p,q}(Y,Z)."""

    kind: str  # "e_y" | "e_z" | "e_pq"
    p: int
    q: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("e_y", "e_z", "e_pq"):
            raise ValueError(f"unknown tag kind {self.kind!r}")
        if self.p < 1 or (self.kind == "e_pq" and self.q < 1):
            raise ValueError("tag parameters must be >= 1")

    @property
    def degree(self) -> int:
        return self.p + self.q if self.kind == "e_pq" else self.p

    def polynomial(self, d: int) -> YZPolynomial:
        if self.kind == "e_y":
            return elementary_symmetric("y", d, self.p)
        if self.kind == "e_z":
            return elementary_symmetric("z", d, self.p)
        return polarized_elementary(d, self.p, self.q)

    def label(self) -> str:
        if self.kind == "e_y":
            return f"e_{self.p}(Y)"
        if self.kind == "e_z":
            return f"e_{self.p}(Z)"
        return f"e_{{{self.p},{self.q}}}"


@dataclass(frozen=True)
class ModuleGenerator:
    """A candidate module generator: a product of tagged symmetric blocks."""

    tags: tuple[tuple[SymmetricGeneratorTag, int], ...]
    polynomial: YZPolynomial
    degree: int

    def label(self) -> str:
        parts = []
        for tag, exponent in self.tags:
            parts.append(tag.label() if exponent == 1 else f"{tag.label()}^{exponent}")
        return "*".join(parts)


@dataclass(frozen=True)
class DegreeSaturation:
    degree: int
    span_dimension: int
    invariant_dimension: int

    @property
    def saturated(self) -> bool:
        return self.span_dimension == self.invariant_dimension


@dataclass(frozen=True)
class SymmetricModuleGenerators:
    """Result of the greedy module-generator search for the symmetric group."""

    rank: int
    degree_bound: int
    generators: tuple[ModuleGenerator, ...]
    saturation: tuple[DegreeSaturation, ...]
    exponent_bounds: dict[tuple[int, int], int]

    def saturated_everywhere(self) -> bool:
        return all(entry.saturated for entry in self.saturation)


def _polarization_product_candidates(d: int, bound: int) -> list[ModuleGenerator]:
    pq_list = sorted(
        ((p, q) for p in range(1, d) for q in range(1, d) if p + q <= d),
        key=lambda pq: (pq[0] + pq[1], pq[0]),
    )
    polys = {pq: polarized_elementary(d, *pq) for pq in pq_list}
    ranges = [range(bound // (p + q) + 1) for p, q in pq_list]
    keyed = []
    for exponents in product(*ranges):
        degree = sum(e * (p + q) for e, (p, q) in zip(exponents, pq_list))
        if sum(exponents) < 1 or degree > bound:
            continue
        poly = YZPolynomial.constant(d, 1)
        tags = []
        for e, pq in zip(exponents, pq_list):
            if e:
                poly = poly * polys[pq] ** e
                tags.append((SymmetricGeneratorTag("e_pq", *pq), e))
        keyed.append(((degree, exponents), ModuleGenerator(tuple(tags), poly, degree)))
    keyed.sort(key=lambda pair: pair[0])
    return [generator for _, generator in keyed]


def _pair_product_candidates(d: int, bound: int) -> list[ModuleGenerator]:
    candidates = []
    for p in range(1, d + 1):
        for q in range(1, d + 1):
            if p + q > bound:
                continue
            poly = elementary_symmetric("y", d, p) * elementary_symmetric("z", d, q)
            tags = (
                (SymmetricGeneratorTag("e_y", p), 1),
                (SymmetricGeneratorTag("e_z", q), 1),
            )
            candidates.append(ModuleGenerator(tags, poly, p + q))
    return candidates


def symmetric_module_generators(d: int, degree_bound: int) -> SymmetricModuleGenerators:
    """Greedy search for module generators of the symmetric bulk invariants.

    Candidates are taken in increasing degree, the pair products
    e_p(Y) e_q(Z) before the power products of the polarizations e_{p,q} at
    equal degree.  A candidate is kept exactly when it enlarges the span,
    over the coefficient algebra generated by all e_k(Y) and e_k(Z), at
    some degree up to the bound.  Every candidate is a symmetric invariant
    of the bulk, so the span can never exceed the invariants; the search
    stops as soon as the two agree at every degree.  The per-degree
    comparison is returned as a saturation report, together with the
    empirically sufficient exponent bound for each polarization.
    """
    if d < 2:
        raise ValueError("rank must be >= 2")
    if degree_bound < 2:
        raise ValueError("degree bound must be >= 2")
    s_d = symmetric_group(d)
    invariant_dims = {
        n: invariant_basis(s_d, n).dimension for n in range(2, degree_bound + 1)
    }
    coefficient_gens = [
        elementary_symmetric(alphabet, d, k)
        for alphabet in ("y", "z")
        for k in range(1, d + 1)
    ]
    spans = coefficient_spans(coefficient_gens, degree_bound - 2, d)
    module_bases = {n: EchelonBasis() for n in range(2, degree_bound + 1)}

    def unsaturated_degrees(minimum: int) -> list[int]:
        return [
            n
            for n in range(max(2, minimum), degree_bound + 1)
            if module_bases[n].dimension < invariant_dims[n]
        ]

    candidates = _pair_product_candidates(d, degree_bound)
    candidates += _polarization_product_candidates(d, degree_bound)
    candidates.sort(
        key=lambda c: (c.degree, 1 if c.tags[0][0].kind == "e_pq" else 0)
    )
    selected: list[ModuleGenerator] = []
    for candidate in candidates:
        if not unsaturated_degrees(2):
            break
        if not unsaturated_degrees(candidate.degree):
            continue
        improved = False
        for n in range(candidate.degree, degree_bound + 1):
            for coefficient in spans[n - candidate.degree]:
                if module_bases[n].add(poly_to_row(coefficient * candidate.polynomial, n)):
                    improved = True
        if improved:
            selected.append(candidate)
    saturation = tuple(
        DegreeSaturation(n, module_bases[n].dimension, invariant_dims[n])
        for n in range(2, degree_bound + 1)
    )
    bounds: dict[tuple[int, int], int] = {}
    for generator in selected:
        for tag, exponent in generator.tags:
            if tag.kind == "e_pq":
                key = (tag.p, tag.q)
                bounds[key] = max(bounds.get(key, 0), exponent)
    return SymmetricModuleGenerators(
        rank=d,
        degree_bound=degree_bound,
        generators=tuple(selected),
        saturation=saturation,
        exponent_bounds=bounds,
    )
