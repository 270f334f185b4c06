__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Reader and writer for the line-oriented instance format:

    c <comment>
    p ucluster <n> <m>
    e <u> <v>          (m lines, 1 <= u < v <= n)

Ids in the file are 1-based; the Graph uses 0-based ids.
"""

from UCluster.Graph import Graph
from UCluster._Exceptions import ParseException

FORMAT_NAME = "ucluster"


def _int_field(token, line_no, what):
    try:
        return int(token)
    except ValueError:
        raise ParseException(line_no, "{} is not an integer: {}".format(what, token))


def parse_instance(text):
    """Parse instance text into a Graph."""
    n = None
    m = None
    edges = []
    seen = set()
    line_no = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        # blank and comment lines
        if not fields or fields[0] == "c":
            continue
        if fields[0] == "p":
            if n is not None:
                raise ParseException(line_no, "second header line")
            if len(fields) != 4 or fields[1] != FORMAT_NAME:
                raise ParseException(
                    line_no, "malformed header, expected 'p {} <n> <m>'".format(
                        FORMAT_NAME
                    )
                )
            n = _int_field(fields[2], line_no, "vertex count")
            m = _int_field(fields[3], line_no, "edge count")
            if n < 0 or m < 0:
                raise ParseException(line_no, "negative count in header")
        elif fields[0] == "e":
            if n is None:
                raise ParseException(line_no, "edge line before header")
            if len(fields) != 3:
                raise ParseException(line_no, "malformed edge line")
            u = _int_field(fields[1], line_no, "vertex id")
            v = _int_field(fields[2], line_no, "vertex id")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseException(
                    line_no, "vertex id out of range 1..{}: {} {}".format(n, u, v)
                )
            if u == v:
                raise ParseException(line_no, "self-loop on vertex {}".format(u))
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in seen:
                raise ParseException(line_no, "duplicate edge {} {}".format(u, v))
            seen.add(e)
            edges.append(e)
        else:
            raise ParseException(line_no, "unknown line type: {}".format(fields[0]))
    if n is None:
        raise ParseException(line_no + 1, "missing header line")
    if len(edges) != m:
        raise ParseException(
            line_no + 1, "header announces {} edges, found {}".format(m, len(edges))
        )
    return Graph(n, edges)


def write_instance(g, comments=()):
    """Canonical text of a graph: comments, header, edges in sorted order."""
    lines = ["c {}".format(c) for c in comments]
    lines.append("p {} {} {}".format(FORMAT_NAME, g.n, g.m))
    for (u, v) in g.edges():
        lines.append("e {} {}".format(u + 1, v + 1))
    return "\n".join(lines) + "\n"


def read_instance(path):
    with open(path) as fh:
        return parse_instance(fh.read())


def save_instance(path, g, comments=()):
    with open(path, "w") as fh:
        fh.write(write_instance(g, comments))
