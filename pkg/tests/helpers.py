"""Shared digraph constructors for the test suite."""

from gammahom import Digraph


def D(n, *arcs):
    """Shorthand: D(3, "01", "12") or D(3, (0, 1), (1, 2))."""
    parsed = []
    for arc in arcs:
        if isinstance(arc, str):
            parsed.append((int(arc[0]), int(arc[1])))
        else:
            parsed.append((arc[0], arc[1]))
    return Digraph(n, tuple(parsed))


def reflexive(n, *arcs):
    """A digraph with all loops plus the given proper arcs."""
    base = D(n, *arcs)
    return Digraph(n, base.arcs + tuple((v, v) for v in range(n)))


# One-element antichain (reflexive point), two-chain, reflexive two-antichain.
A1 = reflexive(1)
C2 = reflexive(2, "01")
A2R = reflexive(2)
CHAIN3 = reflexive(3, "01", "12", "02")
V3 = reflexive(3, "02", "12")  # two minimal elements under one top
