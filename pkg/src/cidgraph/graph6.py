"""graph6 interchange format: parse and emit.

Encoding: a header gives the order n (one byte ``n+63`` for n <= 62,
``'~'`` plus three bytes of 18 bits for larger), then the strict upper
triangle is packed column-major -- bit (i,j) for j = 1..n-1, i < j -- six
bits per byte, most significant first, each byte offset by 63, zero-padded
to a byte boundary.  Parsing is strict: bad characters, short or long bit
blocks, and nonzero padding are all rejected so that parse and emit are
exact inverses on valid lines.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _decode_header(line: str) -> tuple[int, int]:
    """Return (n, index of first payload char)."""
    if not line:
        raise Graph6Error("empty graph6 line")
    c0 = ord(line[0])
    if c0 != 126:
        if not 63 <= c0 <= 125:
            raise Graph6Error(f"malformed header byte {line[0]!r}")
        return c0 - 63, 1
    if len(line) >= 2 and line[1] == "~":
        if len(line) < 8:
            raise Graph6Error("truncated 8-byte order header")
        n = 0
        for ch in line[2:8]:
            v = ord(ch) - 63
            if not 0 <= v < 64:
                raise Graph6Error(f"malformed header byte {ch!r}")
            n = n << 6 | v
        return n, 8
    if len(line) < 4:
        raise Graph6Error("truncated 4-byte order header")
    n = 0
    for ch in line[1:4]:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise Graph6Error(f"malformed header byte {ch!r}")
        n = n << 6 | v
    if n < 63:
        raise Graph6Error("overlong order header")
    return n, 4


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line into a Graph."""
    line = line.rstrip("\n")
    n, at = _decode_header(line)
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = line[at:]
    if len(payload) < nbytes:
        raise Graph6Error("truncated edge-bit block")
    if len(payload) > nbytes:
        raise Graph6Error("trailing garbage after edge bits")
    adj = [0] * n
    bit = 0
    for ch in payload:
        v6 = ord(ch) - 63
        if not 0 <= v6 < 64:
            raise Graph6Error(f"byte {ch!r} outside graph6 range")
        for k in range(5, -1, -1):
            if bit >= nbits:
                if v6 >> k & 1:
                    raise Graph6Error("nonzero padding bits")
                bit += 1
                continue
            if v6 >> k & 1:
                i, j = _bit_to_pair(bit)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))


def _bit_to_pair(bit: int) -> tuple[int, int]:
    # column-major: column j holds j bits (i = 0..j-1)
    j = 1
    while bit >= j:
        bit -= j
        j += 1
    return bit, j


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical graph6 line."""
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    else:
        raise Graph6Error("order too large for the supported headers")
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = 0
                nacc = 0
    if nacc:
        acc <<= 6 - nacc
        out.append(chr(acc + 63))
    return "".join(out)
