"""DOT and JSON emitters.  Output is byte-stable: sorted keys, fixed ordering."""
from __future__ import annotations

import json
from pathlib import Path

from .sortable import CoxeterElementContext, c_sorting_word

__all__ = ["dumps_json", "element_label", "lattice_graph", "export_lattice", "write_output"]


def dumps_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=None, separators=(",", ":"))


def element_label(system, w: int, context: CoxeterElementContext | None = None) -> str:
    """Compact digit label: c-sorting word with dividers, or the shortlex reduced word."""
    if context is not None:
        return c_sorting_word(context, w).render(compact=True)
    return "".join(str(a) for a in system.reduced_word(w))


def lattice_graph(lattice) -> tuple[list[int], list[tuple[int, int]]]:
    """Element indices and cover pairs (as element indices) of a weak-order-like lattice."""
    elements = getattr(lattice, "elements", None)
    if elements is None:
        return list(range(lattice.order)), lattice.cover_pairs()
    return list(elements), [(elements[a], elements[b]) for a, b in lattice.cover_pairs()]


def export_lattice(
    lattice, fmt: str = "dot", context: CoxeterElementContext | None = None
) -> bytes:
    """Render a WeakOrderLattice or CambrianLattice as DOT or JSON bytes."""
    system = lattice.weak_order.system if hasattr(lattice, "weak_order") else lattice.system
    if context is None:
        context = getattr(lattice, "context", None)
    elements, covers = lattice_graph(lattice)
    labels = {w: element_label(system, w, context) for w in elements}
    if fmt == "dot":
        lines = ["digraph {", "  rankdir=BT;"]
        lines += [f'  {w} [label="{labels[w]}"];' for w in elements]
        lines += [f"  {lo} -> {hi};" for lo, hi in covers]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "json":
        doc = {
            "elements": [{"id": w, "word": labels[w]} for w in elements],
            "covers": [[lo, hi] for lo, hi in covers],
        }
        return (dumps_json(doc) + "\n").encode("utf-8")
    raise ValueError(f"unsupported lattice format {fmt!r}; use dot or json")


def write_output(data: bytes, path=None, stream=None) -> None:
    if path is not None:
        Path(path).write_bytes(data)
    else:
        stream.write(data.decode("utf-8"))
