"""graph6 text format: parser and encoder for simple undirected graphs.

The format packs the upper triangle of the adjacency matrix column-wise,
x(0,1), x(0,2), x(1,2), x(0,3), ... into 6-bit groups, each emitted as one
printable byte (value + 63).  Vertex counts n <= 62 use a single leading
byte; 63 <= n <= 258047 use '~' followed by three bytes carrying 18 bits.
The optional ">>graph6<<" header is accepted and ignored.
"""

from __future__ import annotations

from .errors import ConnectivityError, Graph6Error
from .graphs import Graph

HEADER = ">>graph6<<"
_MIN, _MAX = 63, 126


def _decode_size(data, offset):
    """Return (n, next_offset); data is a bytes-like of printable values."""
    if offset >= len(data):
        raise Graph6Error("empty graph6 line", offset=offset)
    first = data[offset]
    if not _MIN <= first <= _MAX:
        raise Graph6Error(f"byte {first} outside graph6 range", offset=offset)
    if first != 126:
        return first - 63, offset + 1
    # '~' escape: three bytes of 6 bits each (18-bit n).  The 8-byte '~~'
    # form (n > 258047) is out of scope here.
    if offset + 3 >= len(data):
        raise Graph6Error("truncated extended vertex count", offset=offset)
    if data[offset + 1] == 126:
        raise Graph6Error("'~~' vertex counts above 258047 not supported", offset=offset + 1)
    n = 0
    for i in range(1, 4):
        byte = data[offset + i]
        if not _MIN <= byte <= _MAX:
            raise Graph6Error(f"byte {byte} outside graph6 range", offset=offset + i)
        n = (n << 6) | (byte - 63)
    return n, offset + 4


def parse_graph6(line, *, require_connected=True) -> Graph:
    """Decode one graph6 line into a Graph.

    Raises Graph6Error (with a byte offset) on malformed input and, by
    default, ConnectivityError on disconnected graphs, which the analysis
    layer rejects at load time.
    """
    if isinstance(line, bytes):
        text = line.decode("ascii", errors="replace").strip()
    else:
        text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :].lstrip()
    if not text:
        raise Graph6Error("empty graph6 line", offset=0)
    data = text.encode("ascii", errors="replace")

    n, offset = _decode_size(data, 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - offset != nbytes:
        raise Graph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - offset}",
            offset=offset,
        )

    bits = []
    for i in range(nbytes):
        byte = data[offset + i]
        if not _MIN <= byte <= _MAX:
            raise Graph6Error(f"byte {byte} outside graph6 range", offset=offset + i)
        value = byte - 63
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    if any(bits[nbits:]):
        raise Graph6Error("padding bits are not zero", offset=offset + nbytes - 1)

    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    try:
        return Graph.from_edges(n, edges, require_connected=require_connected)
    except ConnectivityError:
        raise ConnectivityError(
            f"graph6 input with n={n} is disconnected; analysis requires connected graphs"
        )


def encode_graph6(g: Graph, *, header=False) -> str:
    """Encode a Graph as a graph6 line (inverse of parse_graph6)."""
    n = g.n
    if n > 258047:
        raise Graph6Error(f"n={n} above the supported encoding range")
    if n <= 62:
        prefix = chr(n + 63)
    else:
        prefix = "~" + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    bits = []
    for j in range(1, n):
        row = g.neighbor_set(j)
        for i in range(j):
            bits.append(1 if i in row else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    body = prefix + "".join(chars)
    return HEADER + body if header else body


def parse_graph6_stream(lines, *, require_connected=True):
    """Yield (line_number, Graph) for each nonempty line of an iterable."""
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        yield lineno, parse_graph6(stripped, require_connected=require_connected)
