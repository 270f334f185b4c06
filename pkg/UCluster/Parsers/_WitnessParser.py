__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""Reader and writer for witness files:

    w <variant> <size>
    v <id>                              vertex deletion
    e <u> <v>                           edge deletion / addition / toggle
    s <v> | <ids-comma> | <ids-comma>   split step, either set may be empty

Ids are 1-based.  Split steps refer to the graph as it is after the earlier
steps; the copy created by a step gets the next id after the current largest.
"""

from UCluster._Instance import (
    Witness, SplitStep, VARIANTS
)
from UCluster._Exceptions import ParseException


def _ids(token, line_no):
    token = token.strip()
    if not token:
        return ()
    try:
        return tuple(int(x) - 1 for x in token.split(","))
    except ValueError:
        raise ParseException(line_no, "bad id list: {}".format(token))


def parse_witness(text):
    variant = None
    size = None
    items = []
    line_no = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "w":
            if variant is not None:
                raise ParseException(line_no, "second witness header")
            if len(fields) != 3 or fields[1] not in VARIANTS:
                raise ParseException(line_no, "malformed witness header")
            variant = fields[1]
            try:
                size = int(fields[2])
            except ValueError:
                raise ParseException(line_no, "size is not an integer")
            continue
        if variant is None:
            raise ParseException(line_no, "entry before witness header")
        kind = VARIANTS[variant].kind
        try:
            if tag == "v" and kind == "vertex" and len(fields) == 2:
                items.append(int(fields[1]) - 1)
            elif tag == "e" and kind == "edge" and len(fields) == 3:
                items.append((int(fields[1]) - 1, int(fields[2]) - 1))
            elif tag == "s" and kind == "split":
                parts = line.strip()[1:].split("|")
                if len(parts) != 3:
                    raise ParseException(line_no, "split step needs three fields")
                mode = VARIANTS[variant].mode
                items.append(SplitStep(
                    int(parts[0]) - 1, _ids(parts[1], line_no),
                    _ids(parts[2], line_no), mode
                ))
            else:
                raise ParseException(
                    line_no, "line type '{}' not valid for {}".format(tag, variant)
                )
        except ValueError:
            raise ParseException(line_no, "bad id in line: {}".format(line.strip()))
    if variant is None:
        raise ParseException(line_no + 1, "missing witness header")
    if size != len(items):
        raise ParseException(
            line_no + 1,
            "header announces {} entries, found {}".format(size, len(items))
        )
    return Witness(variant, items)


def write_witness(w):
    lines = ["w {} {}".format(w.variant, w.size)]
    kind = VARIANTS[w.variant].kind
    for item in w.items:
        if kind == "vertex":
            lines.append("v {}".format(item + 1))
        elif kind == "edge":
            lines.append("e {} {}".format(item[0] + 1, item[1] + 1))
        else:
            lines.append("s {} | {} | {}".format(
                item.vertex + 1,
                ",".join(str(x + 1) for x in item.first),
                ",".join(str(x + 1) for x in item.second),
            ))
    return "\n".join(lines) + "\n"


def read_witness(path):
    with open(path) as fh:
        return parse_witness(fh.read())


def save_witness(path, w):
    with open(path, "w") as fh:
        fh.write(write_witness(w))
