"""Quantum minors, torus evaluation, kernels, and the derivation maps.

A diagram B and threshold t determine the evaluation homomorphism sending
each generator x_{i,j} to its path sum in the quantum torus; its kernel is
the torus-invariant prime attached to B at level t.  Minors whose maximum
coordinate is at most the threshold coordinate evaluate by the q-analogue of
the Lindstrom/Gessel-Viennot rule: a sum of weights over vertex-disjoint
path systems, which vanishes exactly when the family is empty.

The deleting/adding derivation maps connect the algebras at neighbouring
thresholds after inverting the threshold generator:

    forward  (level t-1 to t):  y_{i,j} -> x_{i,j} - x_{i,s} x_{r,s}^{-1} x_{r,j}
    backward (level t to t-1):  x_{i,j} -> y_{i,j} + y_{i,s} y_{r,s}^{-1} y_{r,j}

for (i,j) northwest of (r,s), identity on all other generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .coeff import q_power
from .torus import Coord, Shape, TorusElement, key_entry, mono_key, torus_product
from .straighten import QmPoly, Threshold
from .cauchon import (
    Diagram,
    build_graph,
    enumerate_vdps,
    generator,
    is_cauchon,
    system_weight,
    vdps_exists,
)


@dataclass(frozen=True)
class MinorSpec:
    """Index pair of a quantum minor: equal-size increasing row/column sets."""

    I: tuple
    J: tuple

    def __post_init__(self):
        if len(self.I) != len(self.J) or not self.I:
            raise ValueError("row and column sets must be nonempty of equal size")
        if any(a >= b for a, b in zip(self.I, self.I[1:])) or any(
            a >= b for a, b in zip(self.J, self.J[1:])
        ):
            raise ValueError("index sets must be strictly increasing")

    @classmethod
    def of(cls, I, J) -> "MinorSpec":
        return cls(tuple(I), tuple(J))

    @property
    def k(self) -> int:
        return len(self.I)

    @property
    def diagonal_coords(self) -> tuple:
        return tuple(zip(self.I, self.J))

    @property
    def max_coord(self) -> Coord:
        return (self.I[-1], self.J[-1])

    def check_in_shape(self, shape: Shape) -> "MinorSpec":
        if self.I[-1] > shape.m or self.J[-1] > shape.n:
            raise ValueError(f"minor {self} does not fit a {shape.m}x{shape.n} grid")
        return self

    def diagonal_subminors(self, proper: bool = True):
        """Minors on subsets of the diagonal coordinate pairs."""
        top = self.k if proper else self.k + 1
        for size in range(1, top):
            for pick in combinations(range(self.k), size):
                yield MinorSpec(
                    tuple(self.I[p] for p in pick),
                    tuple(self.J[p] for p in pick),
                )

    def __str__(self):
        return "[{}|{}]".format(
            ",".join(map(str, self.I)), ",".join(map(str, self.J))
        )

    @classmethod
    def parse(cls, text: str) -> "MinorSpec":
        body = text.strip()
        if not body.startswith("[") or not body.endswith("]") or "|" not in body:
            raise ValueError(f"cannot parse minor spec {text!r}")
        left, right = body[1:-1].split("|", 1)
        return cls(
            tuple(int(x) for x in left.replace(" ", "").split(",") if x),
            tuple(int(x) for x in right.replace(" ", "").split(",") if x),
        )


def inversions(perm) -> int:
    return sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )


def minor_poly(shape: Shape, t, spec: MinorSpec) -> QmPoly:
    """The quantum minor as a polynomial: sum over permutations sigma of
    (-q)^{inv(sigma)} x_{i_1, j_sigma(1)} ... x_{i_k, j_sigma(k)}.

    Each summand is already a lexicographic term, so this expression is the
    canonical form.
    """
    spec.check_in_shape(shape)
    terms = []
    k = spec.k
    for perm in permutations(range(k)):
        key = mono_key((spec.I[a], spec.J[perm[a]], 1) for a in range(k))
        coeff = q_power(inversions(perm)) * ((-1) ** inversions(perm))
        terms.append((key, coeff))
    return QmPoly(shape, t, terms)


# ---------------------------------------------------------------------------
# evaluation into the torus


class HPrimeHandle:
    """A Cauchon diagram with a threshold level; names ker(sigma)."""

    __slots__ = ("diagram", "threshold", "graph")

    def __init__(self, diagram: Diagram, t: int):
        if not is_cauchon(diagram):
            raise ValueError("handle requires a Cauchon diagram")
        self.diagram = diagram
        self.threshold = Threshold.of(diagram.shape, t)
        self.graph = build_graph(diagram)

    @property
    def shape(self) -> Shape:
        return self.diagram.shape

    @property
    def t(self) -> int:
        return self.threshold.t

    @property
    def rs(self) -> Coord:
        return self.threshold.rs

    def __eq__(self, other):
        return (
            isinstance(other, HPrimeHandle)
            and self.diagram == other.diagram
            and self.threshold == other.threshold
        )

    def __hash__(self):
        return hash((self.diagram, self.threshold))

    def __repr__(self):
        return f"HPrimeHandle({self.diagram.to_inline()!r}, t={self.t})"

    def generator_image(self, coord: Coord) -> TorusElement:
        return generator(self.graph, self.t, coord[0], coord[1])


def sigma(handle: HPrimeHandle, a: QmPoly) -> TorusElement:
    """Evaluate a polynomial by substituting path sums for generators.

    Monomials are evaluated left-to-right in lexicographic generator order.
    Localized input is accepted when the localized coordinate is white, so
    that its image is an invertible monomial.
    """
    if a.shape != handle.shape:
        raise ValueError("shape mismatch")
    if a.threshold != handle.threshold:
        raise ValueError("threshold mismatch")
    images: dict[Coord, TorusElement] = {}

    def image(coord, e):
        base = images.get(coord)
        if base is None:
            base = handle.generator_image(coord)
            images[coord] = base
        if e >= 0:
            return [base] * e
        if handle.diagram.is_black(coord):
            raise ValueError("cannot invert the image of a black coordinate")
        return [base.inverse()] * (-e)

    total = TorusElement.zero(handle.shape)
    for key, coeff in a.terms.items():
        factors = []
        for i, j, e in key:
            factors.extend(image((i, j), e))
        total = total + torus_product(handle.shape, factors).scale(coeff)
    return total


def kernel_member(handle: HPrimeHandle, a: QmPoly) -> bool:
    """Membership in ker(sigma)."""
    return sigma(handle, a).is_zero()


def lindstrom_eval(handle: HPrimeHandle, spec: MinorSpec) -> TorusElement:
    """Evaluate a minor as the weight sum over vertex-disjoint path systems.

    Valid only when the minor's maximum coordinate is at most the threshold
    coordinate; sigma(minor_poly(...)) evaluates without that hypothesis.
    """
    spec.check_in_shape(handle.shape)
    if spec.max_coord > handle.rs:
        raise ValueError(
            f"maximum coordinate {spec.max_coord} exceeds threshold {handle.rs}"
        )
    total = TorusElement.zero(handle.shape)
    for system in enumerate_vdps(handle.graph, handle.t, spec.I, spec.J):
        total = total + system_weight(handle.graph, system)
    return total


def minor_in_kernel(handle: HPrimeHandle, spec: MinorSpec) -> bool:
    """A minor with maximum coordinate <= (r, s) lies in the kernel exactly
    when its vertex-disjoint path family is empty."""
    spec.check_in_shape(handle.shape)
    if spec.max_coord > handle.rs:
        raise ValueError(
            f"maximum coordinate {spec.max_coord} exceeds threshold {handle.rs}"
        )
    return not vdps_exists(handle.graph, handle.t, spec.I, spec.J)


def quantum_determinant(shape: Shape, t=None) -> QmPoly:
    if shape.m != shape.n:
        raise ValueError("the quantum determinant needs a square shape")
    n = shape.n
    return minor_poly(
        shape,
        shape.mn if t is None else t,
        MinorSpec.of(range(1, n + 1), range(1, n + 1)),
    )


# ---------------------------------------------------------------------------
# deleting / adding derivations


def _substitute(a: QmPoly, images: dict, out_zero: QmPoly) -> QmPoly:
    total = out_zero
    for key, coeff in a.terms.items():
        prod = QmPoly.one(out_zero.shape, out_zero.threshold, out_zero.loc)
        for i, j, e in key:
            img, inv_img = images[(i, j)]
            factor = img if e > 0 else inv_img
            if factor is None:
                raise ValueError(f"no inverse image for {(i, j)}")
            for _ in range(abs(e)):
                prod = prod * factor
        total = total + prod.scale(coeff)
    return total


def dd_forward(a: QmPoly) -> QmPoly:
    """Deleting-derivations image: level t-1 element into the level-t algebra
    localized at its threshold coordinate (r, s).

    Generators northwest of (r, s) map to x_{i,j} - x_{i,s} x_{r,s}^{-1} x_{r,j};
    all others map to themselves.  Input may itself be localized at (r, s).
    """
    t = a.threshold.t + 1
    if t > a.shape.mn:
        raise ValueError("no level above the top threshold")
    r, s = rs = a.shape.threshold_coord(t)
    if a.loc is not None and a.loc != rs:
        raise ValueError("input localization must be at the target coordinate")
    zero = QmPoly.zero(a.shape, t, loc=rs)
    images = {}
    for coord in a.shape.coords():
        i, j = coord
        gen = QmPoly.generator(a.shape, t, coord, loc=rs)
        if i < r and j < s:
            corr = QmPoly(
                a.shape,
                t,
                [(mono_key([(i, s, 1), (r, j, 1), (r, s, -1)]), q_power(1))],
                loc=rs,
            )
            images[coord] = (gen - corr, None)
        else:
            inv = (
                QmPoly.generator(a.shape, t, coord, e=-1, loc=rs)
                if coord == rs
                else None
            )
            images[coord] = (gen, inv)
    return _substitute(a, images, zero)


def dd_backward(a: QmPoly) -> QmPoly:
    """Adding-derivations image: level t element into the level-(t-1) algebra
    localized at (r, s), the t-th coordinate.

    Generators northwest of (r, s) map to y_{i,j} + y_{i,s} y_{r,s}^{-1} y_{r,j};
    all others to themselves.
    """
    t = a.threshold.t
    if t < 2:
        raise ValueError("no level below the bottom threshold")
    r, s = rs = a.threshold.rs
    if a.loc is not None and a.loc != rs:
        raise ValueError("input localization must be at the threshold coordinate")
    zero = QmPoly.zero(a.shape, t - 1, loc=rs)
    images = {}
    for coord in a.shape.coords():
        i, j = coord
        gen = QmPoly.generator(a.shape, t - 1, coord, loc=rs)
        if i < r and j < s:
            corr = QmPoly(
                a.shape,
                t - 1,
                [(mono_key([(i, s, 1), (r, j, 1), (r, s, -1)]), q_power(1))],
                loc=rs,
            )
            images[coord] = (gen + corr, None)
        else:
            inv = (
                QmPoly.generator(a.shape, t - 1, coord, e=-1, loc=rs)
                if coord == rs
                else None
            )
            images[coord] = (gen, inv)
    return _substitute(a, images, zero)


def localized_embed(a: QmPoly, loc: Coord) -> QmPoly:
    """View a plain polynomial inside the algebra localized at loc."""
    return a.with_loc(loc)


def clear_denominator(a: QmPoly) -> tuple[QmPoly, int]:
    """Right-multiply a localized element by x_loc^h to land in the
    polynomial algebra; returns (polynomial, h)."""
    if a.loc is None:
        return a, 0
    h = 0
    for key in a.terms:
        e = key_entry(key, a.loc)
        if e < 0:
            h = max(h, -e)
    if h == 0:
        return a.as_polynomial(), 0
    factor = QmPoly.generator(a.shape, a.threshold, a.loc, e=h, loc=a.loc)
    return (a * factor).as_polynomial(), h
