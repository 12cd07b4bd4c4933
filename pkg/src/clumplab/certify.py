"""Packing certificates: nonnegative dual weights on clumps whose
neighborhood sums stay at most 1.  Scaled by the degree bound, their
total lower-bounds the order of any blow-up, which converts a per-layer
weight guarantee into a diameter upper bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .canonical import check_canonical
from .core import WeightedClumpGraph

ClumpKey = tuple[int, int]  # (layer, color)


@dataclass
class PackingReport:
    feasible: bool
    objective: Fraction
    slack: dict[ClumpKey, Fraction]  # 1 - neighbor sum per clump

    @property
    def worst_slack(self) -> Fraction:
        return min(self.slack.values())


@dataclass
class DualCertificate:
    u: dict[ClumpKey, Fraction]
    layer_totals: list[Fraction]
    u_tilde: Fraction
    feasible: bool
    k: int

    @property
    def objective(self) -> Fraction:
        return sum(self.u.values(), Fraction(0))


def dual_certificate(graph: WeightedClumpGraph, k: int | None = None) -> DualCertificate:
    """The uniform-by-layer dual weights for a canonical graph.

    Layers of fewer than k clumps share (k-1)/(3k-4) evenly.  A layer of
    k clumps splits: clumps whose color misses both neighbor layers (so
    they see everything next door) get 1/(3k-4) and the rest get
    correspondingly less, keeping the layer total at (k-1)/(3k-4).
    """
    if k is None:
        k = graph.k
    if k < 3:
        raise ValueError(f"k={k} must be at least 3")
    if k != graph.k:
        raise ValueError(f"k={k} does not match the graph's color count {graph.k}")
    report = check_canonical(graph)
    if not report.passes:
        raise ValueError(f"graph is not canonical: {report.violations or report.pattern_violations}")
    layer_total = Fraction(k - 1, 3 * k - 4)
    u: dict[ClumpKey, Fraction] = {}
    totals: list[Fraction] = []
    for i, layer in enumerate(graph.layers):
        if len(layer) < k:
            w = Fraction(k - 1, (3 * k - 4) * len(layer))
            for c in layer:
                u[(i, c.color)] = w
        else:
            nearby = graph.colors_of_layer(i - 1) | graph.colors_of_layer(i + 1)
            x_set = [c for c in layer if c.color not in nearby]
            if len(x_set) > k - 2:
                raise ValueError(
                    f"layer {i}: {len(x_set)} clumps dominate both neighbor "
                    f"layers; canonical graphs allow at most {k - 2}"
                )
            heavy = Fraction(1, 3 * k - 4)
            light = heavy - Fraction(1, (3 * k - 4) * (k - len(x_set)))
            x_colors = {c.color for c in x_set}
            for c in layer:
                u[(i, c.color)] = heavy if c.color in x_colors else light
        totals.append(sum(u[(i, c.color)] for c in layer))
    feasible = verify_packing(graph, u).feasible
    return DualCertificate(
        u=u, layer_totals=totals, u_tilde=layer_total, feasible=feasible, k=k
    )


def verify_packing(graph: WeightedClumpGraph, u: dict[ClumpKey, Fraction]) -> PackingReport:
    """Check the packing constraint: each clump's neighbor weights sum to
    at most 1.  Exact rational arithmetic throughout."""
    slack: dict[ClumpKey, Fraction] = {}
    for c in graph.clumps():
        if (c.layer, c.color) not in u:
            raise ValueError(f"no dual weight for clump {(c.layer, c.color)}")
    for key, value in u.items():
        if value < 0:
            raise ValueError(f"negative dual weight at {key}")
    for c in graph.clumps():
        total = sum(
            u[(nbr.layer, nbr.color)] for nbr in graph.neighbors(c.layer, c.color)
        )
        slack[(c.layer, c.color)] = 1 - total
    objective = sum(u.values(), Fraction(0))
    return PackingReport(
        feasible=all(s >= 0 for s in slack.values()), objective=objective, slack=slack
    )


def bound_from_certificate(
    cert: DualCertificate, n: int, delta: int, big_c: Fraction | int = 1
) -> Fraction:
    """Diameter bound (1/u_tilde)(n/delta) + C implied by a feasible
    certificate whose every layer total reaches u_tilde."""
    if not cert.feasible:
        raise ValueError("certificate is infeasible")
    if any(t < cert.u_tilde for t in cert.layer_totals):
        raise ValueError("some layer total falls short of u_tilde")
    return Fraction(1, 1) / cert.u_tilde * Fraction(n, delta) + big_c


def bound_coefficient(k: int) -> Fraction:
    """(3k-4)/(k-1), i.e. 3 - 1/(k-1): the n/delta coefficient at k colors."""
    return Fraction(3 * k - 4, k - 1)
