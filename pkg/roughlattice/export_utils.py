import json
from typing import Dict, List, Optional, Sequence

import pandas as pd
import plotly.graph_objects as go

from roughlattice.approx import (
    ApproxContext,
    CorrespondenceReport,
    RoughSet,
    lower,
    lower_inv,
    rough_pair,
    upper,
    upper_inv,
)
from roughlattice.complement import ComplementReport
from roughlattice.config import COMPONENT_COLORS, DOT_GRAPH_ATTRS, DOT_NODE_ATTRS, UNCOLORED_NODE
from roughlattice.irreducible import IrreducibleCatalog
from roughlattice.lattice import RsLattice
from roughlattice.relation import ComponentPartition, SubsetMask, Universe
from roughlattice.structure import StructureReport, component_of
from roughlattice.topology import AlexandrovTopology


def dumps(data) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def mask_to_list(mask: SubsetMask) -> List[int]:
    return mask.indices()


def mask_from_list(size: int, indices: Sequence[int]) -> SubsetMask:
    return SubsetMask.from_indices(size, indices)


def rough_set_to_dict(element: RoughSet) -> Dict[str, List[int]]:
    return {"lower": mask_to_list(element.lower), "upper": mask_to_list(element.upper)}


def rough_set_from_dict(size: int, data) -> RoughSet:
    return RoughSet(mask_from_list(size, data["lower"]), mask_from_list(size, data["upper"]))


def lattice_to_dict(lattice: RsLattice) -> dict:
    return {
        "universe": list(lattice.universe.names),
        "within": mask_to_list(lattice.within),
        "elements": [
            dict(rough_set_to_dict(element), representative=mask_to_list(rep))
            for element, rep in zip(lattice.elements, lattice.representatives)
        ],
        "cover_edges": [list(edge) for edge in lattice.cover_edges()],
        "bottom": rough_set_to_dict(lattice.bottom),
        "top": rough_set_to_dict(lattice.top),
    }


def lattice_from_dict(data: dict) -> RsLattice:
    universe = Universe(tuple(data["universe"]))
    n = universe.size
    return RsLattice(
        universe=universe,
        within=mask_from_list(n, data["within"]),
        elements=tuple(rough_set_from_dict(n, item) for item in data["elements"]),
        representatives=tuple(mask_from_list(n, item["representative"]) for item in data["elements"]),
        bottom=rough_set_from_dict(n, data["bottom"]),
        top=rough_set_from_dict(n, data["top"]),
    )


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot_attrs(attrs: Dict[str, str]) -> str:
    return ", ".join(f"{key}={_dot_quote(value)}" for key, value in sorted(attrs.items()))


def lattice_to_dot(lattice: RsLattice, components: Optional[ComponentPartition] = None) -> str:
    """Hasse diagram in DOT; with ``components`` given, nodes living in one component share its colour."""
    lines = [
        "digraph RS {",
        f"  graph [{_dot_attrs(DOT_GRAPH_ATTRS)}];",
        f"  node [{_dot_attrs(DOT_NODE_ATTRS)}];",
    ]
    for i, element in enumerate(lattice.elements):
        color = UNCOLORED_NODE
        if components is not None:
            home = component_of(components, element.upper)
            if home is not None:
                color = COMPONENT_COLORS[components.blocks.index(home) % len(COMPONENT_COLORS)]
        attrs = {"label": element.format(lattice.universe), "fillcolor": color}
        lines.append(f"  n{i} [{_dot_attrs(attrs)}];")
    for low, high in lattice.cover_edges():
        lines.append(f"  n{low} -> n{high};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_figure(lattice: RsLattice, title: str = "Rough set lattice") -> go.Figure:
    """Plotly rendering of the Hasse diagram, elements layered by height."""
    edges = lattice.cover_edges()
    height = [0] * len(lattice)
    # canonical order is a linear extension, so one forward pass settles heights
    for low, high in edges:
        height[high] = max(height[high], height[low] + 1)
    layers: Dict[int, List[int]] = {}
    for i, level in enumerate(height):
        layers.setdefault(level, []).append(i)
    x = [0.0] * len(lattice)
    for members in layers.values():
        for slot, i in enumerate(members):
            x[i] = slot - (len(members) - 1) / 2

    fig = go.Figure()
    edge_x, edge_y = [], []
    for low, high in edges:
        edge_x += [x[low], x[high], None]
        edge_y += [height[low], height[high], None]
    fig.add_trace(go.Scatter(x=edge_x, y=edge_y, mode="lines", line=dict(color="#888", width=1), hoverinfo="skip"))
    labels = [element.format(lattice.universe) for element in lattice.elements]
    fig.add_trace(go.Scatter(
        x=x,
        y=height,
        mode="markers+text",
        text=labels,
        textposition="top center",
        marker=dict(size=12, color=COMPONENT_COLORS[0]),
        hovertext=labels,
    ))
    fig.update_layout(
        title=title,
        showlegend=False,
        xaxis=dict(visible=False),
        yaxis=dict(visible=False),
        plot_bgcolor="white",
    )
    return fig


def structure_report_to_dict(report: StructureReport) -> dict:
    witness = None
    if report.stone_witness is not None:
        witness = {
            "point": report.stone_witness.point,
            "composed": mask_to_list(report.stone_witness.composed),
            "joined": mask_to_list(report.stone_witness.joined),
        }
    shape = None
    if report.equivalence_shape is not None:
        shape = {
            "singletons": report.equivalence_shape.singletons,
            "larger": report.equivalence_shape.larger,
            "predicted_rs_size": report.equivalence_shape.predicted_size,
        }
    return {
        "components": [mask_to_list(block) for block in report.components.blocks],
        "per_component_rs_size": list(report.per_component_rs_size),
        "is_stone": report.is_stone,
        "stone_witness": witness,
        "is_directly_indecomposable": report.is_directly_indecomposable,
        "equivalence_shape": shape,
        "down_directed_components": (
            None if report.down_directed_components is None else list(report.down_directed_components)
        ),
    }


def topology_to_dict(t: AlexandrovTopology, opens: Optional[Sequence[SubsetMask]] = None) -> dict:
    data = {"kind": t.kind.value, "base": [mask_to_list(member) for member in t.base]}
    if opens is not None:
        data["opens"] = [mask_to_list(member) for member in opens]
    return data


def catalog_to_dict(catalog: IrreducibleCatalog) -> dict:
    return {
        "join_irreducibles": [
            dict(rough_set_to_dict(element), origin={"kind": origin.kind.value, "point": origin.point})
            for element, origin in zip(catalog.join_irr, catalog.origin)
        ],
        "meet_irreducibles": [rough_set_to_dict(element) for element in catalog.meet_irr],
    }


def elements_table(lattice: RsLattice) -> pd.DataFrame:
    universe = lattice.universe
    return pd.DataFrame([
        {
            "Lower": element.lower.format(universe),
            "Upper": element.upper.format(universe),
            "Representative": rep.format(universe),
            "Exact": element.lower == element.upper,
        }
        for element, rep in zip(lattice.elements, lattice.representatives)
    ])


def catalog_table(catalog: IrreducibleCatalog, universe: Universe) -> pd.DataFrame:
    rows = [
        {"Kind": "join", "Element": element.format(universe), "Origin": f"{origin.kind.value} {universe.names[origin.point]}"}
        for element, origin in zip(catalog.join_irr, catalog.origin)
    ]
    rows += [{"Kind": "meet", "Element": element.format(universe), "Origin": ""} for element in catalog.meet_irr]
    return pd.DataFrame(rows)


def approximation_table(ctx: ApproxContext, x: SubsetMask) -> pd.DataFrame:
    universe = ctx.relation.universe
    operators = [("lower", lower), ("upper", upper), ("lower_inv", lower_inv), ("upper_inv", upper_inv)]
    return pd.DataFrame([{"Operator": name, "Result": op(ctx, x).format(universe)} for name, op in operators])


def correspondence_table(report: CorrespondenceReport) -> pd.DataFrame:
    return pd.DataFrame([
        {"Property": row.name, "Relation": row.relational, "Approximations": row.approximational}
        for row in report.rows
    ])


def export_to_csv(table: pd.DataFrame) -> str:
    return table.to_csv(index=False)


def export_to_text(table: pd.DataFrame) -> str:
    return table.to_string(index=False) + "\n"


def complement_report_to_dict(report: ComplementReport) -> dict:
    return {
        "element": rough_set_to_dict(report.element),
        "de_morgan": rough_set_to_dict(report.de_morgan),
        "pseudocomplement": rough_set_to_dict(report.pseudo),
        "dual_pseudocomplement": rough_set_to_dict(report.dual_pseudo),
        "is_exact": report.is_exact,
        "is_complemented": report.is_complemented,
    }


def approximations_to_dict(ctx: ApproxContext, x: SubsetMask) -> dict:
    return {
        "set": mask_to_list(x),
        "lower": mask_to_list(lower(ctx, x)),
        "upper": mask_to_list(upper(ctx, x)),
        "lower_inv": mask_to_list(lower_inv(ctx, x)),
        "upper_inv": mask_to_list(upper_inv(ctx, x)),
        "rough_pair": rough_set_to_dict(rough_pair(ctx, x)),
    }


def correspondence_to_dict(report: CorrespondenceReport) -> dict:
    return {
        "frame": [
            {
                "property": row.name,
                "relational": row.relational,
                "approximational": row.approximational,
                "agrees": row.agrees,
            }
            for row in report.rows
        ]
    }
