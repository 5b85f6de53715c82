"""Linear operators on Boolean functions, represented by digraphs on P[n].

A digraph A (a set of edges (c, d) in P[n] x P[n]) encodes the operator
obtained by summing one building-block term per edge.  Four bases are
supported, named by the pair of factor families used:

* ms -- point mask times shift:        sum of m^c s^d
* md -- point mask times derivative:   sum of m^c del^d
* xs -- up-set mask times shift:       sum of x^c s^d
* xd -- up-set mask times derivative:  sum of x^c del^d

Each basis is a linear isomorphism between digraphs (as GF(2) edge grids)
and 2^n x 2^n matrices acting on truth vectors in the point basis; both
directions are closed-form subset sums and invert each other exactly.

Internally all grids are mask-indexed (row c, bit position d); card-lex
indexing appears only on the public Gf2Matrix boundary and in text formats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .errors import DimensionError, DomainError, ParseError
from .functions import BooleanFunction, _from_packed, _packed, derivative_packed
from .gf2 import Gf2Matrix, mat_rank
from .lattice import (
    bits_of,
    format_subset,
    parse_subset,
    shift_packed,
    tables,
    validate_dimension,
    validate_subset,
)


class Basis(enum.Enum):
    """Which factor pair a digraph's edges are read in."""

    MS = "ms"
    MD = "md"
    XS = "xs"
    XD = "xd"

    @classmethod
    def from_string(cls, text: str) -> Basis:
        try:
            return cls(text.lower())
        except ValueError:
            raise DomainError(f"unknown basis {text!r}; expected ms, md, xs or xd") from None


_POINT_BASES = (Basis.MS, Basis.MD)
_SHIFT_BASES = (Basis.MS, Basis.XS)


@dataclass(frozen=True)
class Digraph:
    """A set of edges on P[n]; when plotted, the edge (c, d) runs from d to c."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        validate_dimension(self.n)
        for c, d in self.edges:
            validate_subset(c, self.n)
            validate_subset(d, self.n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
        return cls(n, frozenset((c, d) for c, d in edges))

    @classmethod
    def empty(cls, n: int) -> Digraph:
        return cls(n, frozenset())

    def contains(self, c: int, d: int) -> bool:
        return (c, d) in self.edges


def sorted_edges(a: Digraph) -> list[tuple[int, int]]:
    """Edges ordered by (index_of(c), index_of(d))."""
    t = tables(a.n)
    return sorted(a.edges, key=lambda e: (t.index[e[0]], t.index[e[1]]))


def identity_digraph(n: int, basis: Basis) -> Digraph:
    """The digraph whose operator is the identity in the given basis."""
    if basis in _POINT_BASES:
        return Digraph.from_edges(n, ((c, 0) for c in range(1 << n)))
    return Digraph.from_edges(n, [(0, 0)])


def digraph_grid(a: Digraph) -> list[int]:
    """Mask-indexed edge grid: bit d of row c says whether (c, d) is an edge."""
    rows = [0] * (1 << a.n)
    for c, d in a.edges:
        rows[c] |= 1 << d
    return rows


def digraph_from_grid(n: int, rows: list[int]) -> Digraph:
    return Digraph(n, frozenset((c, d) for c in range(1 << n) for d in bits_of(rows[c])))


def _down_first(rows: list[int], n: int) -> None:
    # out(c, d) = XOR of in(e, d) over e a subset of c -- row-level subset sums.
    for i in range(n):
        bit = 1 << i
        for c in range(1 << n):
            if c & bit:
                rows[c] ^= rows[c ^ bit]


def _up_second(rows: list[int], n: int) -> None:
    # out(c, d) = XOR of in(c, e) over e a superset of d -- within-row transform.
    t = tables(n)
    for c in range(t.size):
        v = rows[c]
        for i in range(n):
            v ^= (v >> (1 << i)) & t.bit_clear[i]
        rows[c] = v


def _hat_grid(rows: list[int], n: int, basis: Basis) -> list[int]:
    """Convert a coefficient grid between ``basis`` and ms, in place.

    The conversion is its own inverse (each leg is a GF(2) subset-sum
    involution), so the same call serves both directions.
    """
    if basis in (Basis.XS, Basis.XD):
        _down_first(rows, n)
    if basis in (Basis.MD, Basis.XD):
        _up_second(rows, n)
    return rows


def _matrix_rows_masked(a: Digraph, basis: Basis) -> list[int]:
    # Mask-indexed matrix of the operator: entry (p, q) = ms-coefficient (p, p + q).
    rows = _hat_grid(digraph_grid(a), a.n, basis)
    return [shift_packed(rows[p], p, a.n) for p in range(1 << a.n)]


def _digraph_from_masked_rows(n: int, rows: list[int], basis: Basis) -> Digraph:
    grid = [shift_packed(rows[p], p, n) for p in range(1 << n)]
    return digraph_from_grid(n, _hat_grid(grid, n, basis))


def operator_matrix(a: Digraph, basis: Basis) -> Gf2Matrix:
    """The 2^n x 2^n matrix (card-lex axes) of the operator a encodes."""
    t = tables(a.n)
    masked = _matrix_rows_masked(a, basis)
    out = [0] * t.size
    for p in range(t.size):
        r = masked[p]
        packed = 0
        for q in bits_of(r):
            packed |= 1 << t.index[q]
        out[t.index[p]] = packed
    return Gf2Matrix.from_packed_rows(t.size, t.size, out)


def operator_digraph(m: Gf2Matrix, basis: Basis) -> Digraph:
    """The unique digraph whose operator matrix in ``basis`` equals m."""
    if m.rows != m.cols:
        raise DomainError(f"operator matrices are square, got {m.rows}x{m.cols}")
    size = m.rows
    if size == 0 or size & (size - 1):
        raise DomainError(f"operator matrices have 2^n rows, got {size}")
    n = size.bit_length() - 1
    t = tables(n)
    masked = [0] * size
    for i, row in enumerate(m.packed_rows()):
        packed = 0
        for j in bits_of(row):
            packed |= 1 << t.order[j]
        masked[t.order[i]] = packed
    return _digraph_from_masked_rows(n, masked, basis)


def change_operator_basis(a: Digraph, source: Basis, target: Basis) -> Digraph:
    """Re-express the same operator's digraph in another basis."""
    if source is target:
        return a
    grid = _hat_grid(digraph_grid(a), a.n, source)
    return digraph_from_grid(a.n, _hat_grid(grid, a.n, target))


def apply_operator(a: Digraph, basis: Basis, f: BooleanFunction) -> BooleanFunction:
    """Apply the operator encoded by a (read in ``basis``) to f."""
    if a.n != f.n:
        raise DimensionError(f"operator on [{a.n}] applied to a function on [{f.n}]")
    n = a.n
    t = tables(n)
    u = _packed(f)
    out = 0
    shift_family = basis in _SHIFT_BASES
    point_family = basis in _POINT_BASES
    for c, d in a.edges:
        w = shift_packed(u, d, n) if shift_family else derivative_packed(u, d, n)
        out ^= w & ((1 << c) if point_family else t.upsets[c])
    return _from_packed(n, out)


def operator_rank_profile(a: Digraph, basis: Basis) -> tuple[int, int, int]:
    """(rank, image size, kernel size) of the operator on the 2^n-dim space.

    Counts follow rank-nullity on BF_n: the image has 2^rank elements and
    the kernel 2^(2^n - rank); both are verified against brute-force
    enumeration in the tests.
    """
    r = mat_rank(operator_matrix(a, basis))
    return r, 1 << r, 1 << ((1 << a.n) - r)


@dataclass(frozen=True)
class OperatorExpr:
    """A printable operator expression: ordered terms plus a collapsed identity."""

    basis: Basis
    n: int
    terms: tuple[tuple[int, int], ...]
    collapse_identity: bool = field(default=False)

    def __str__(self) -> str:
        c_sym = "m" if self.basis in _POINT_BASES else "x"
        d_sym = "s" if self.basis in _SHIFT_BASES else "d"
        parts = [f"{c_sym}^{format_subset(c)}{d_sym}^{format_subset(d)}" for c, d in self.terms]
        if self.collapse_identity:
            parts.append("1")
        return " + ".join(parts) if parts else "0"


def operator_expr(a: Digraph, basis: Basis, collapse: bool = True) -> OperatorExpr:
    """Build the expression for a digraph; term order is card-lex on (c, d).

    With ``collapse`` set, a full diagonal {(c, {}) for every c} prints as a
    trailing "+ 1"; a partial diagonal never collapses.
    """
    diagonal = {(c, 0) for c in range(1 << a.n)}
    edges = set(a.edges)
    collapsed = collapse and diagonal <= edges
    if collapsed:
        edges -= diagonal
    t = tables(a.n)
    terms = tuple(sorted(edges, key=lambda e: (t.index[e[0]], t.index[e[1]])))
    return OperatorExpr(basis, a.n, terms, collapsed)


def format_operator(a: Digraph, basis: Basis, collapse: bool = True) -> str:
    return str(operator_expr(a, basis, collapse))


def format_digraph(a: Digraph) -> str:
    """Canonical text form: n, then one "<c> <d>" line per edge, sorted."""
    lines = [str(a.n)]
    lines.extend(f"{format_subset(c)} {format_subset(d)}" for c, d in sorted_edges(a))
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """Parse the text form; duplicate edges are an error, comments allowed."""
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.isdigit():
                raise ParseError(f"expected the dimension n, got {line!r}", lineno)
            n = int(line)
            validate_dimension(n)
            continue
        close = line.find("}")
        if close == -1:
            raise ParseError(f"expected '<c> <d>', got {line!r}", lineno)
        try:
            edge = (parse_subset(line[: close + 1], n), parse_subset(line[close + 1 :], n))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
        if edge in edges:
            raise ParseError(f"duplicate edge {line!r}", lineno)
        edges.add(edge)
    if n is None:
        raise ParseError("missing dimension line")
    return Digraph(n, frozenset(edges))
