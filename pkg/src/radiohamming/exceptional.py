"""The two exceptional families and closed-form radio numbers.

Every diameter-3 Hamming graph K_l x K_m x K_n (2 <= l <= m <= n) is radio
graceful, so its radio number is lmn, except for two families:

* K_2 x K_2 x K_n has radio number 6n - 1.  No three vertices admit
  consecutive labels, so among 4n labels at least 2n - 1 gaps of size >= 2
  are forced.
* K_2 x K_3 x K_3 has radio number 20.  No seven vertices admit consecutive
  labels (a six-step chain of pairwise constraints forces the seventh vertex
  to equal the first), so two label jumps are forced among 18 vertices.

This module carries explicit optimal labelings for both families, the
run-length search behind those "no k consecutive labels" facts, and the
jump-counting lower bound that turns a run-length cap into a radio-number
bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import HammingGraph, Vertex
from .labeling import RadioLabeling

DEFAULT_RUN_CAP = 1_000_000


class FormulaDomainError(ValueError):
    """Factor sizes outside the closed-form radio number's domain."""


class RunSearchBudgetError(RuntimeError):
    """Run-length search exceeded its node cap.

    best_found is the longest run seen before giving up, a valid lower
    bound on the true maximum run length.
    """

    def __init__(self, best_found: int, cap: int):
        super().__init__(
            f"run search exceeded {cap} nodes; best run found so far: {best_found}"
        )
        self.best_found = best_found
        self.cap = cap


@dataclass(frozen=True)
class RnFormulaResult:
    value: int
    case_tag: str  # "graceful", "two_two_n", or "two_three_three"


def radio_number_formula(n1: int, n2: int, n3: int) -> RnFormulaResult:
    """Radio number of K_{n1} x K_{n2} x K_{n3} for sorted sizes.

    Requires 2 <= n1 <= n2 <= n3.  The degenerate (2, 2, 1) is also
    accepted: K_2 x K_2 x K_1 is K_2 x K_2, covered by the 6n - 1 family
    with n = 1.
    """
    if (n1, n2, n3) == (2, 2, 1):
        return RnFormulaResult(value=5, case_tag="two_two_n")
    if not (2 <= n1 <= n2 <= n3):
        raise FormulaDomainError(
            f"factor sizes must satisfy 2 <= n1 <= n2 <= n3, got {(n1, n2, n3)}"
        )
    if (n1, n2) == (2, 2):
        return RnFormulaResult(value=6 * n3 - 1, case_tag="two_two_n")
    if (n1, n2, n3) == (2, 3, 3):
        return RnFormulaResult(value=20, case_tag="two_three_three")
    return RnFormulaResult(value=n1 * n2 * n3, case_tag="graceful")


# Optimal labeling of K_2 x K_3 x K_3, span 20.  The first six labels are
# consecutive (the longest run this graph admits); each later group of six
# starts after a forced jump.
_LABELING_233: tuple[tuple[Vertex, int], ...] = (
    ((1, 1, 1), 1),
    ((2, 2, 2), 2),
    ((1, 3, 3), 3),
    ((2, 1, 1), 4),
    ((1, 2, 2), 5),
    ((2, 3, 3), 6),
    ((1, 1, 2), 8),
    ((2, 2, 3), 9),
    ((1, 3, 1), 10),
    ((2, 1, 2), 11),
    ((1, 2, 3), 12),
    ((2, 3, 1), 13),
    ((1, 1, 3), 15),
    ((2, 2, 1), 16),
    ((1, 3, 2), 17),
    ((2, 1, 3), 18),
    ((1, 2, 1), 19),
    ((2, 3, 2), 20),
)


def labeling_233() -> RadioLabeling:
    """Explicit radio labeling of K_2 x K_3 x K_3 with span exactly 20."""
    return dict(_LABELING_233)


def ordering_233() -> list[Vertex]:
    """Vertices of the span-20 labeling in label order."""
    return [v for v, _ in _LABELING_233]


# Base orderings for K_2 x K_2 x K_n.  n = 1 degenerates to K_2 x K_2 with
# two-coordinate vertices.  The n = 2 and n = 3 orderings induce the tight
# labels 1,2,4,5,7,8,10,11(,13,14,16,17); even-n orderings end with
# (1,1,n),(2,2,n-1) and the n = 3 ordering ends with (1,2,3), which is what
# the append step below relies on.
_ORDER_2X2: tuple[Vertex, ...] = ((1, 1), (2, 2), (2, 1), (1, 2))

_ORDER_2X2X2: tuple[Vertex, ...] = (
    (1, 1, 1),
    (2, 2, 2),
    (2, 1, 1),
    (1, 2, 2),
    (2, 1, 2),
    (1, 2, 1),
    (1, 1, 2),
    (2, 2, 1),
)

_ORDER_2X2X3: tuple[Vertex, ...] = (
    (1, 1, 1),
    (2, 2, 2),
    (2, 1, 1),
    (1, 2, 2),
    (2, 2, 1),
    (1, 1, 3),
    (1, 2, 1),
    (2, 1, 3),
    (1, 1, 2),
    (2, 2, 3),
    (2, 1, 2),
    (1, 2, 3),
)


def _append_block(n_prev: int) -> list[Vertex]:
    """Eight vertices extending an ordering of K_2 x K_2 x K_{n_prev} by two
    new last-coordinate values; their tight labels are 6*n_prev + 1, +2, +4,
    +5, +7, +8, +10, +11."""
    a, b = n_prev + 1, n_prev + 2
    return [
        (1, 1, a),
        (2, 2, b),
        (2, 1, a),
        (1, 2, b),
        (2, 1, b),
        (1, 2, a),
        (1, 1, b),
        (2, 2, a),
    ]


def ordering_22n(n: int) -> list[Vertex]:
    """Vertex ordering of K_2 x K_2 x K_n whose tight labeling has span 6n-1.

    For n = 1 the graph degenerates to K_2 x K_2 and the vertices are
    two-coordinate.  For n >= 4 the ordering grows from the n = 2 or n = 3
    base by appending one eight-vertex block per two new K_n values.
    """
    if n < 1:
        raise FormulaDomainError(f"need n >= 1, got {n}")
    if n == 1:
        return list(_ORDER_2X2)
    order = list(_ORDER_2X2X2 if n % 2 == 0 else _ORDER_2X2X3)
    for n_prev in range(2 if n % 2 == 0 else 3, n, 2):
        order.extend(_append_block(n_prev))
    return order


def labeling_22n(n: int) -> RadioLabeling:
    """Radio labeling of K_2 x K_2 x K_n with span exactly 6n - 1.

    Position i of the ordering gets the i-th positive integer not divisible
    by 3 (1, 2, 4, 5, 7, 8, ...); position 4n then carries 6n - 1.
    """
    order = ordering_22n(n)
    labels = []
    value = 0
    while len(labels) < len(order):
        value += 1
        if value % 3 != 0:
            labels.append(value)
    return dict(zip(order, labels))


def max_consecutive_run(g: HammingGraph, cap: int = DEFAULT_RUN_CAP) -> int:
    """Longest sequence of distinct vertices that could carry consecutive
    labels in some radio labeling of g.

    A sequence y_1, ..., y_r qualifies when d(y_i, y_{i+D}) >= diam - D + 1
    for every window width D < diam; in particular consecutive entries must
    be at distance exactly diam.  Found by depth-first search over
    extensible sequences.  Hamming graphs are vertex transitive, so the
    start is fixed at (1, ..., 1), and coordinate values within each factor
    are interchangeable, so a new value may enter only right after all
    smaller values of its factor (canonical first use).  Both reductions
    preserve the maximum length.

    Raises RunSearchBudgetError (carrying the best length found) once more
    than cap extensions have been tried.
    """
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    diam = g.diameter
    if diam <= 1:
        # No window constraints: any order of all vertices qualifies.
        return g.vertex_count
    verts = g.vertices()
    window = diam - 1
    start: Vertex = tuple(1 for _ in g.factor_sizes)
    best = 1
    nodes = 0

    def extend(seq: list[Vertex], used: set[Vertex], max_used: list[int]) -> None:
        nonlocal best, nodes
        if len(seq) > best:
            best = len(seq)
        last = seq[-1]
        for cand in verts:
            if cand in used:
                continue
            if any(c > m + 1 for c, m in zip(cand, max_used)):
                continue
            if g.distance(last, cand) != diam:
                continue
            ok = True
            for delta in range(2, min(window, len(seq)) + 1):
                if g.distance(seq[-delta], cand) < diam - delta + 1:
                    ok = False
                    break
            if not ok:
                continue
            nodes += 1
            if nodes > cap:
                raise RunSearchBudgetError(best, cap)
            seq.append(cand)
            used.add(cand)
            new_max = [max(m, c) for m, c in zip(max_used, cand)]
            extend(seq, used, new_max)
            used.remove(cand)
            seq.pop()

    extend([start], {start}, [1] * len(g.factor_sizes))
    return best


def jump_lower_bound(vertex_count: int, run_length: int) -> int:
    """Lower bound on the radio number of any graph whose maximum
    consecutive run is run_length.

    The labels of all vertex_count vertices split into maximal runs of
    consecutive values, each of length at most run_length, so at least
    ceil(N / r) - 1 label gaps of size >= 2 are forced on top of the N - 1
    unit steps: rn >= N + ceil(N / r) - 1.
    """
    if run_length < 1 or run_length > vertex_count:
        raise ValueError(
            f"run length must be in 1..{vertex_count}, got {run_length}"
        )
    return vertex_count + math.ceil(vertex_count / run_length) - 1
