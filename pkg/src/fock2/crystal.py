"""Rank-e crystal operators on charged bipartitions and graph construction.

The abacus module encodes each component through its transpose, so the
matching crystal reads boxes by the column content s_j + x - y (the charged
content of the transposed diagram). Residue classes and the reading order
both use this key; BoxRef.content keeps the usual row-reading value
s_j + y - x for display. Boxes of a residue class are ordered by column
content with a component tie-break, the addable/removable word is reduced by
cancelling bracketed pairs, and f/e act on the surviving good box. The
reading direction, tie-break and cancellation orientation are frozen below;
they were fixed by requiring source vertices to coincide with totally
periodic abaci across the whole calibration grid (|bp| <= 8, e in {2,3},
s in [-3,3]). No row-reading convention satisfies that equivalence: for
e = 2 the removable box of ((1,1),[]) at s = -3 sits strictly between the
two addable boxes in every row-reading order, so it always cancels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .fock import FockParams
from .partitions import (
    Bipartition,
    add_cell,
    addable_cells,
    enumerate_bipartitions,
    format_bipartition,
    remove_cell,
    removable_cells,
)

# Frozen calibration: column content ascending, component 2 before
# component 1 on ties, cancel removable-then-addable adjacent pairs.
_CONTENT_SIGN = 1
_COMPONENT_RANK = {2: 0, 1: 1}
_CANCEL_REMOVABLE_FIRST = True

ADDABLE = "addable"
REMOVABLE = "removable"


@dataclass(frozen=True)
class BoxRef:
    component: int
    row: int
    col: int
    content: int  # row-reading charged content s_j + col - row

    @property
    def column_content(self) -> int:
        """Charged content of the transposed box, s_j + row - col."""
        return self.content - 2 * (self.col - self.row)


def box_residue(box: BoxRef, e: int) -> int:
    """Residue class used by the crystal, in [0, e)."""
    return box.column_content % e


def _charge(fp: FockParams, j: int) -> int:
    return fp.s1 if j == 1 else fp.s2


def _boxes(bp: Bipartition, fp: FockParams) -> Iterator[tuple[BoxRef, str]]:
    for j in (1, 2):
        comp = bp.component(j)
        sj = _charge(fp, j)
        for x, y in addable_cells(comp):
            yield BoxRef(j, x, y, sj + y - x), ADDABLE
        for x, y in removable_cells(comp):
            yield BoxRef(j, x, y, sj + y - x), REMOVABLE


def _order_key(box: BoxRef) -> tuple[int, int]:
    return (_CONTENT_SIGN * box.column_content, _COMPONENT_RANK[box.component])


def ordered_boxes(
    bp: Bipartition, fp: FockParams, i: int
) -> list[tuple[BoxRef, str]]:
    """Addable and removable boxes of residue i in the frozen reading order."""
    if not 0 <= i < fp.e:
        raise ValueError(f"residue must lie in [0, {fp.e}), got {i}")
    word = [bt for bt in _boxes(bp, fp) if box_residue(bt[0], fp.e) == i]
    word.sort(key=lambda bt: _order_key(bt[0]))
    return word


def _reduced_word(bp: Bipartition, fp: FockParams, i: int) -> list[tuple[BoxRef, str]]:
    stack: list[tuple[BoxRef, str]] = []
    for box, tag in ordered_boxes(bp, fp, i):
        if _CANCEL_REMOVABLE_FIRST:
            if tag == ADDABLE and stack and stack[-1][1] == REMOVABLE:
                stack.pop()
                continue
        else:
            if tag == REMOVABLE and stack and stack[-1][1] == ADDABLE:
                stack.pop()
                continue
        stack.append((box, tag))
    return stack


def _good_box(bp: Bipartition, fp: FockParams, i: int, tag: str) -> Optional[BoxRef]:
    word = _reduced_word(bp, fp, i)
    matching = [box for box, t in word if t == tag]
    if not matching:
        return None
    # reduced word is A..AR..R, f acts on the last A and e on the first R
    # (mirrored for the opposite cancellation orientation)
    if _CANCEL_REMOVABLE_FIRST:
        return matching[-1] if tag == ADDABLE else matching[0]
    return matching[0] if tag == ADDABLE else matching[-1]


def _with_component(bp: Bipartition, j: int, comp) -> Bipartition:
    if j == 1:
        return Bipartition(comp, bp.second)
    return Bipartition(bp.first, comp)


def apply_f(bp: Bipartition, fp: FockParams, i: int) -> Optional[Bipartition]:
    """Add the good addable box of residue i, or None if there is none."""
    box = _good_box(bp, fp, i, ADDABLE)
    if box is None:
        return None
    return _with_component(bp, box.component, add_cell(bp.component(box.component), box.row))


def apply_e(bp: Bipartition, fp: FockParams, i: int) -> Optional[Bipartition]:
    """Remove the good removable box of residue i, or None if there is none."""
    box = _good_box(bp, fp, i, REMOVABLE)
    if box is None:
        return None
    return _with_component(bp, box.component, remove_cell(bp.component(box.component), box.row))


def is_source_vertex(bp: Bipartition, fp: FockParams) -> bool:
    """No incoming arrow: every e_i is undefined."""
    return all(apply_e(bp, fp, i) is None for i in range(fp.e))


@dataclass(frozen=True)
class CrystalGraph:
    params: FockParams
    n_max: int
    nodes: tuple[Bipartition, ...]
    edges: tuple[tuple[Bipartition, Bipartition, int], ...]


def build_crystal_graph(n_max: int, fp: FockParams) -> CrystalGraph:
    """Nodes: all bipartitions of size <= n_max; edges: f-arrows staying inside."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    nodes = []
    for n in range(n_max + 1):
        nodes.extend(enumerate_bipartitions(n))
    edges = []
    for u in nodes:
        if u.size >= n_max:
            continue
        for i in range(fp.e):
            v = apply_f(u, fp, i)
            if v is not None:
                edges.append((u, v, i))
    return CrystalGraph(fp, n_max, tuple(nodes), tuple(edges))


def crystal_to_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for node in graph.nodes:
        label = format_bipartition(node)
        lines.append(f'  "{label}";')
    for u, v, i in graph.edges:
        lines.append(
            f'  "{format_bipartition(u)}" -> "{format_bipartition(v)}" [label="{i}"];'
        )
    lines.append("}")
    return "\n".join(lines)


def crystal_to_json(graph: CrystalGraph) -> dict:
    return {
        "e": graph.params.e,
        "s": graph.params.s,
        "n_max": graph.n_max,
        "nodes": [format_bipartition(n) for n in graph.nodes],
        "edges": [
            {
                "source": format_bipartition(u),
                "target": format_bipartition(v),
                "residue": i,
            }
            for u, v, i in graph.edges
        ],
    }
