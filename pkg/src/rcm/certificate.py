"""Certificates for a monochromatic connected nK_r and the rcmcert v1 format."""

from __future__ import annotations

from dataclasses import dataclass, field

from .colouring import Colour, FormatError


@dataclass(frozen=True)
class Certificate:
    colour: Colour
    cliques: tuple[tuple[int, ...], ...]
    # smallest vertex of the colour component holding the cliques
    component: int = -1
    witness_edges: tuple[tuple[int, int], ...] = ()
    colour_roles_swapped: bool = field(default=False, compare=False)

    @property
    def r(self) -> int:
        return len(self.cliques[0]) if self.cliques else 0

    @property
    def n(self) -> int:
        return len(self.cliques)


def format_certificate(cert: Certificate, r: int | None = None) -> str:
    r = cert.r if r is None else r
    lines = ["rcmcert 1", cert.colour.value, f"{r} {cert.n}"]
    lines += [" ".join(map(str, c)) for c in cert.cliques]
    lines += [f"edge {u} {v}" for u, v in cert.witness_edges]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = [ln.rstrip("\r") for ln in text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 3 or lines[0].strip() != "rcmcert 1":
        raise FormatError("missing 'rcmcert 1' header")
    try:
        colour = Colour.from_char(lines[1].strip())
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    try:
        r, n = (int(x) for x in lines[2].split())
    except ValueError:
        raise FormatError(f"bad 'r n' line {lines[2]!r}") from None
    if r < 1 or n < 0:
        raise FormatError("r must be positive and n non-negative")
    if len(lines) < 3 + n:
        raise FormatError(f"expected {n} clique lines, found {len(lines) - 3}")
    cliques = []
    for line in lines[3:3 + n]:
        try:
            clique = tuple(int(x) for x in line.split())
        except ValueError:
            raise FormatError(f"bad clique line {line!r}") from None
        if len(clique) != r:
            raise FormatError(f"clique line {line!r} does not hold {r} vertices")
        cliques.append(clique)
    edges = []
    for line in lines[3 + n:]:
        parts = line.split()
        if not parts:
            continue
        if parts[0] != "edge" or len(parts) != 3:
            raise FormatError(f"unexpected line {line!r}")
        try:
            edges.append((int(parts[1]), int(parts[2])))
        except ValueError:
            raise FormatError(f"bad edge line {line!r}") from None
    return Certificate(colour, tuple(cliques), witness_edges=tuple(edges))
