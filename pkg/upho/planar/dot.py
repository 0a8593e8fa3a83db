import graphviz

from ..poset.model import RankedPoset


def to_dot(P: RankedPoset, name: str = "poset") -> str:
    """
    DOT-описание диаграммы Хассе: корень снизу, вершины одного ранга в одной
    строке, порядок слева направо держится невидимыми рёбрами.
    """
    g = graphviz.Digraph(name, graph_attr={"rankdir": "BT"})
    g.attr("node", shape="circle")
    for i in range(P.depth):
        layer = P.layer(i)
        with g.subgraph(name=f"rank{i}") as s:
            s.attr(rank="same")
            for v in layer:
                s.node(str(v))
            for u, v in zip(layer, layer[1:]):
                s.edge(str(u), str(v), style="invis")
    for u, v in sorted(P.covers):
        g.edge(str(u), str(v), arrowhead="none")
    return g.source
