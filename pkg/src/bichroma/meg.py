"""File formats: the MEG text format for mixed graphs, and graph6 input
for plain graphs (whose edges become Flexible).

MEG layout: optional '#' comment lines, a header line `meg <n>`, then one
line per edge `<u> <v> <R|B|F>` with 0-based indices.  Writers emit u < v
and sorted edges so output is bit-exact reproducible.
"""

from .graphs import MixedGraph, SimpleGraph, from_simple


class MegParseError(Exception):
    pass


def parse_meg(text):
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "meg":
                raise MegParseError("line %d: expected header 'meg <n>'" % lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise MegParseError("line %d: bad vertex count %r" % (lineno, fields[1]))
            if n < 0:
                raise MegParseError("line %d: negative vertex count" % lineno)
            continue
        if len(fields) != 3:
            raise MegParseError("line %d: expected '<u> <v> <R|B|F>'" % lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise MegParseError("line %d: bad vertex index" % lineno)
        kind = fields[2]
        if kind not in ("R", "B", "F"):
            raise MegParseError("line %d: bad edge kind %r" % (lineno, kind))
        if u == v:
            raise MegParseError("line %d: loop at vertex %d" % (lineno, u))
        if not (0 <= u < n and 0 <= v < n):
            raise MegParseError("line %d: edge %d %d out of range" % (lineno, u, v))
        edges.append((u, v, kind))
    if n is None:
        raise MegParseError("missing 'meg <n>' header")
    seen = set()
    for u, v, _ in edges:
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise MegParseError("duplicate edge %d %d" % pair)
        seen.add(pair)
    return MixedGraph(n, edges)


def write_meg(M):
    lines = ["meg %d" % M.n]
    for (u, v), kind in M.edge_list():
        lines.append("%d %d %s" % (u, v, kind.value))
    return "\n".join(lines) + "\n"


def parse_graph6(line):
    """Decode one graph6 line into a SimpleGraph (n < 63 and the 3-byte
    extended form are both accepted)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MegParseError("empty graph6 input")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise MegParseError("invalid graph6 character in %r" % s)
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[0] == 63 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise MegParseError("unsupported graph6 size encoding")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise MegParseError("graph6 body too short for n=%d" % n)
    bits = []
    for b in body[:need]:
        for shift in range(5, -1, -1):
            bits.append((b >> shift) & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return SimpleGraph.from_edges(n, edges)


def load_mixed(path):
    """Read a mixed graph from a .meg or .g6 file (by extension)."""
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".g6"):
        return from_simple(parse_graph6(text))
    return parse_meg(text)
