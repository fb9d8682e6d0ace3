#!/usr/bin/env python3
"""End-to-end walk through one diagram, default the 3x4 staircase.

Prints the graph, the generator path sums, the kernel minors with their
vanishing certificates (empty path-system families), the minimal basis, and
one reduction trace of a random kernel element.

Usage: python scripts/worked_example.py ['#.../##../....']
"""

import random
import sys

sys.path.insert(0, "src")

from qmpaths.cauchon import Diagram, build_graph, export_dot, generator_matrix
from qmpaths.straighten import QmPoly
from qmpaths.torus import mono_key
from qmpaths.minors import HPrimeHandle, minor_poly
from qmpaths.groebner import (
    apply_trace,
    groebner_basis,
    hprime_minors,
    minimal_groebner,
    reduce,
)


def main(argv):
    text = argv[1] if len(argv) > 1 else "#.../##../...."
    d = Diagram.from_text(text)
    shape = d.shape
    t = shape.mn
    print(f"diagram ({shape.m}x{shape.n}):")
    print(d.to_text())
    g = build_graph(d)
    print("\ngraph (DOT):")
    print(export_dot(g))
    print("generator path sums at the top threshold:")
    X = generator_matrix(g, t)
    for i, row in enumerate(X, start=1):
        for j, x in enumerate(row, start=1):
            print(f"  x[{i},{j}] = {x!r}")

    h = HPrimeHandle(d, t)
    minors, bare = hprime_minors(h)
    print(f"\nkernel minors ({len(minors)}):", " ".join(str(s) for s in minors))
    if bare:
        print("bare generators:", bare)
    minimal = minimal_groebner(h)
    print(f"minimal basis ({len(minimal)}):", " ".join(str(s) for s in minimal))

    if minors:
        rng = random.Random(0)
        basis = groebner_basis(h)
        spec = rng.choice(minors)
        key = mono_key(
            (rng.randint(1, shape.m), rng.randint(1, shape.n), 1) for _ in range(2)
        )
        a = minor_poly(shape, t, spec) * QmPoly.monomial(shape, t, key)
        print(f"\nreducing {spec} * x^{key} ({len(a)} terms):")
        rem, trace = reduce(a, basis)
        for step in trace:
            print(f"  - {basis.elements[step.index]} * x^{step.cofactor}"
                  f" scaled by {step.scale!r}")
        print("remainder:", repr(rem))
        assert rem.is_zero() and apply_trace(basis, trace) == a
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
