"""
Graph text format::

    c interval <positions> <variant>     (interval graphs only)
    p graph <n> <m>
    <u> <v>                              (m edge lines)
    l <v> <a1> <a2> ...                  (label table, when labels exist)
"""
from coverenc.exceptions import FormatError
from coverenc.graphs.graph import Graph
from coverenc.graphs.intervals import as_variant


def write_graph(graph):
    lines = []
    if graph.interval_info is not None:
        positions, variant = graph.interval_info
        lines.append(f"c interval {positions} {variant.value}")
    lines.append(f"p graph {graph.n} {graph.num_edges}")
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    if graph.has_labels():
        for v in graph.vertices():
            lines.append("l " + " ".join(str(part) for part in (v,) + tuple(graph.label(v))))
    return "\n".join(lines) + "\n"


def read_graph(text):
    """
    Parse the graph text format.

    Args:
        text (str): File contents.

    Returns:
        Graph: The graph, with labels and interval metadata when present.
    """
    header = None
    interval_info = None
    edges = []
    labels = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        try:
            if parts[0] == "c":
                if len(parts) == 4 and parts[1] == "interval":
                    interval_info = (int(parts[2]), as_variant(parts[3]))
            elif parts[0] == "p":
                if len(parts) != 4 or parts[1] != "graph":
                    raise FormatError(f"Line {line_number}: bad header {line!r}")
                header = (int(parts[2]), int(parts[3]))
            elif parts[0] == "l":
                labels[int(parts[1])] = tuple(int(a) for a in parts[2:])
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise FormatError(f"Line {line_number}: unexpected {line!r}")
        except ValueError as e:
            if isinstance(e, FormatError):
                raise
            raise FormatError(f"Line {line_number}: {e}")

    if header is None:
        raise FormatError("Missing 'p graph' header")
    if len(edges) != header[1]:
        raise FormatError(f"Header declares {header[1]} edges, found {len(edges)}")
    try:
        return Graph(header[0], edges, labels=labels, interval_info=interval_info)
    except ValueError as e:
        raise FormatError(str(e))
