"""Graph-description emission for assembled interpretations.

Two views: the domains view draws the elements with the function mappings
as labeled edges and the predicate mappings as styled edges or fact notes;
the worlds view draws the worlds with the positive accessibility relation
and highlights the local world.  Output is DOT text; the same graph can
also be rendered to an image file with matplotlib.
"""

from __future__ import annotations

from .interp.model import (
    KripkeInterpretation, TarskianInterpretation, element_key,
)

_PALETTE = {
    "function": "black",
    "true": "darkgreen",
    "false": "gray60",
}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _element_node(spec, element) -> str:
    return f"{spec.domain_type}.{element_key(element)}"


def domains_view(interp: TarskianInterpretation) -> str:
    """Elements as nodes, function entries as labeled edges, predicate
    entries as styled edges (binary) or fact notes (other arities)."""
    lines = ["digraph interpretation {", "  rankdir=LR;", "  node [shape=ellipse];"]
    node_of: dict = {}
    for i, spec in enumerate(interp.domains.values()):
        if not spec.elements:
            continue
        lines.append(f"  subgraph cluster_{i} {{")
        label = spec.domain_type if spec.domain_type == spec.problem_type \
            else f"{spec.problem_type} / {spec.domain_type}"
        lines.append(f"    label={_quote(label)};")
        for e in spec.elements:
            node = _element_node(spec, e)
            node_of[e] = node
            lines.append(f"    {_quote(node)} [label={_quote(element_key(e))}];")
        lines.append("  }")

    def node_for(element) -> str:
        if element not in node_of:
            node_of[element] = element_key(element)
            lines.append(f"  {_quote(node_of[element])} [label={_quote(element_key(element))}];")
        return node_of[element]

    fact_count = 0
    for mapping in interp.mappings.values():
        for key, value in mapping.entries.items():
            if mapping.kind == "function":
                if len(key) == 1:
                    lines.append(f"  {_quote(node_for(key[0]))} -> {_quote(node_for(value))}"
                                 f" [label={_quote(mapping.symbol)}];")
                elif len(key) == 0:
                    sym_node = f"const.{mapping.symbol}"
                    lines.append(f"  {_quote(sym_node)} [shape=plaintext,"
                                 f" label={_quote(mapping.symbol)}];")
                    lines.append(f"  {_quote(sym_node)} -> {_quote(node_for(value))}"
                                 f" [style=dotted];")
                else:
                    mid = f"app.{mapping.symbol}.{fact_count}"
                    fact_count += 1
                    args = ",".join(element_key(e) for e in key)
                    lines.append(f"  {_quote(mid)} [shape=box,"
                                 f" label={_quote(mapping.symbol + '(' + args + ')')}];")
                    for e in key:
                        lines.append(f"  {_quote(node_for(e))} -> {_quote(mid)} [style=dashed];")
                    lines.append(f"  {_quote(mid)} -> {_quote(node_for(value))};")
            else:
                color = _PALETTE["true" if value else "false"]
                label = mapping.symbol if value else "~" + mapping.symbol
                if len(key) == 2:
                    lines.append(f"  {_quote(node_for(key[0]))} -> {_quote(node_for(key[1]))}"
                                 f" [label={_quote(label)}, style=dashed, color={color}];")
                else:
                    note = f"fact.{mapping.symbol}.{fact_count}"
                    fact_count += 1
                    args = ",".join(element_key(e) for e in key)
                    lines.append(f"  {_quote(note)} [shape=note, color={color},"
                                 f" label={_quote(label + '(' + args + ')')}];")
                    for e in key:
                        lines.append(f"  {_quote(node_for(e))} -> {_quote(note)}"
                                     f" [style=dashed, color={color}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def worlds_view(k: KripkeInterpretation) -> str:
    """Worlds as nodes (local world doubled), positive accessibility as edges."""
    lines = ["digraph worlds {", "  node [shape=circle];"]
    for w in k.worlds:
        attrs = " [peripheries=2]" if w == k.local_world else ""
        lines.append(f"  {_quote(w)}{attrs};")
    for a, b in sorted(k.accessible):
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dot(interp, view: str) -> str:
    if view == "worlds":
        if not isinstance(interp, KripkeInterpretation):
            raise ValueError("the worlds view needs a Kripke interpretation")
        return worlds_view(interp)
    if view == "domains":
        if isinstance(interp, KripkeInterpretation):
            if interp.local_world is not None:
                return domains_view(interp.per_world[interp.local_world].interpretation)
            if interp.worlds:
                return domains_view(interp.per_world[interp.worlds[0]].interpretation)
            return domains_view(TarskianInterpretation())
        return domains_view(interp)
    raise ValueError(f"unknown view {view!r}")


def render(interp, view: str, path: str) -> None:
    """Draw the same graph with matplotlib/networkx and save it to *path*."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import networkx as nx

    graph = nx.MultiDiGraph()
    edge_labels: dict = {}
    if view == "worlds" and isinstance(interp, KripkeInterpretation):
        for w in interp.worlds:
            graph.add_node(w)
        for a, b in sorted(interp.accessible):
            graph.add_edge(a, b)
        colors = ["gold" if w == interp.local_world else "lightblue" for w in graph.nodes]
    else:
        flat = interp
        if isinstance(interp, KripkeInterpretation):
            world = interp.local_world or (interp.worlds[0] if interp.worlds else None)
            flat = interp.per_world[world].interpretation if world else TarskianInterpretation()
        for spec in flat.domains.values():
            for e in spec.elements:
                graph.add_node(element_key(e))
        for mapping in flat.mappings.values():
            for key, value in mapping.entries.items():
                if mapping.kind == "function" and len(key) == 1:
                    graph.add_edge(element_key(key[0]), element_key(value))
                    edge_labels[(element_key(key[0]), element_key(value))] = mapping.symbol
                elif mapping.kind == "predicate" and len(key) == 2 and value:
                    graph.add_edge(element_key(key[0]), element_key(key[1]))
                    edge_labels[(element_key(key[0]), element_key(key[1]))] = mapping.symbol
        colors = ["lightblue"] * graph.number_of_nodes()

    fig, ax = plt.subplots(figsize=(6, 6))
    pos = nx.circular_layout(graph)
    nx.draw_networkx_nodes(graph, pos, node_color=colors, node_size=1200, ax=ax)
    nx.draw_networkx_labels(graph, pos, ax=ax, font_size=9)
    nx.draw_networkx_edges(graph, pos, ax=ax, connectionstyle="arc3,rad=0.12",
                           node_size=1200)
    if edge_labels:
        nx.draw_networkx_edge_labels(graph, pos, edge_labels=edge_labels,
                                     font_size=8, ax=ax)
    ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
