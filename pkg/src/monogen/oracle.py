"""Brute-force reference searches.

These loops are kept short and direct on purpose: they are the yardstick the
pipeline is measured against, so they do no pruning beyond the +- symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import BinaryFormZ
from .forms import QuadraticPair, QuarticGenerator, Triple, index_form, index_of, iter_box
from .thue import Pair, dedupe_pairs

DEFAULT_TRIPLE_BOX = 20
DEFAULT_PAIR_BOX = 200


@dataclass(frozen=True)
class SearchBox:
    bound: int

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError(f"search box bound must be >= 1, got {self.bound}")

    def contains(self, point: Iterable[int]) -> bool:
        return all(abs(c) <= self.bound for c in point)


def _as_box(box: SearchBox | int) -> SearchBox:
    return box if isinstance(box, SearchBox) else SearchBox(int(box))


def oracle_monogenizers(
    P: QuarticGenerator, box: SearchBox | int = DEFAULT_TRIPLE_BOX, *, cross_check: bool = False
) -> set[Triple]:
    """Sign-normalized (x, y, z) in the box with index_of = 1.

    With ``cross_check`` every box point is also evaluated through the sextic
    index form and any disagreement raises.
    """
    box = _as_box(box)
    sextic = index_form(P) if cross_check else None
    found = set()
    for x, y, z in iter_box(box.bound):
        idx = index_of(P, x, y, z)
        if sextic is not None and abs(sextic(x, y, z)) != idx:
            raise AssertionError(f"index paths disagree at {(x, y, z)}")
        if idx == 1:
            found.add((x, y, z))
    return found


def oracle_system(pair: QuadraticPair, u0: int, v0: int, box: SearchBox | int) -> set[Triple]:
    """Sign-normalized triples in the box with Q1 = u0 and Q2 = v0."""
    box = _as_box(box)
    return {
        (x, y, z)
        for x, y, z in iter_box(box.bound)
        if pair.q1(x, y, z) == u0 and pair.q2(x, y, z) == v0
    }


def oracle_thue(form: BinaryFormZ, rhs_values: Iterable[int], box: SearchBox | int) -> list[Pair]:
    """All (u, v) in the box with F(u, v) in rhs_values, up to (u, v) ~ (-u, -v)."""
    box = _as_box(box)
    rhs = set(rhs_values)
    b = box.bound
    hits = [
        (u, v)
        for u in range(-b, b + 1)
        for v in range(-b, b + 1)
        if (u, v) != (0, 0) and form(u, v) in rhs
    ]
    if 0 in rhs:
        hits.append((0, 0))
    return dedupe_pairs(hits)
