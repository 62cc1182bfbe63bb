"""graph6 encoding (https://users.cecs.anu.edu.au/~bdm/data/formats.txt)."""

from __future__ import annotations

from .errors import Graph6Error
from .graph import Graph

_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"order {n} too large for graph6")


def encode(g: Graph) -> bytes:
    n = g.order
    out = bytearray(_encode_n(n))
    chunk = 0
    nbits = 0
    adj = g.adj
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            chunk = (chunk << 1) | (aj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chunk + 63)
                chunk = nbits = 0
    if nbits:
        out.append((chunk << (6 - nbits)) + 63)
    return bytes(out)


def encode_str(g: Graph) -> str:
    return encode(g).decode("ascii")


def decode(s) -> Graph:
    """Parse one graph6 string; a trailing newline and the optional header are accepted."""
    if isinstance(s, str):
        try:
            s = s.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    s = bytes(s)
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
    if s.endswith(b"\n"):
        s = s[:-1]
    data = s[base:]
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126", base + i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order header", base + len(data))
        n, pos = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte order header", base + len(data))
        n, pos = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        off = base + pos + min(len(body), need)
        raise Graph6Error(f"expected {need} data bytes for order {n}, got {len(body)}", off)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            b = body[k // 6] - 63
            if b >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph(n, edges)
