"""Integer model of K_0 with its (non-symmetric) Euler form.

Classes are plain tuples of Python ints written in the reference basis; a
collection is a tuple of such tuples. Everything here is exact and pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _linalg
from .errors import DimensionMismatch, HelixlabError, ZeroVector

KVector = tuple[int, ...]
Collection = tuple[KVector, ...]


def kvector(coords) -> KVector:
    """Coerce to a KVector, refusing anything that is not an exact integer."""
    out = []
    for x in coords:
        if isinstance(x, bool) or not isinstance(x, int):
            if hasattr(x, "denominator") and x.denominator == 1:
                x = int(x)
            else:
                raise HelixlabError(f"coordinate {x!r} is not an integer")
        out.append(int(x))
    return tuple(out)


def unit_vector(n: int, i: int) -> KVector:
    """e_i with 1-based i."""
    return tuple(int(j == i - 1) for j in range(n))


@dataclass(frozen=True)
class GramForm:
    """Gram matrix of the Euler pairing on the reference basis.

    entries[i][j] = chi(e_{i+1}, e_{j+1}); must be unit upper triangular.
    """

    entries: tuple[tuple[int, ...], ...]
    n: int = field(init=False)

    def __post_init__(self):
        rows = tuple(kvector(row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise HelixlabError("Gram matrix must be square and non-empty")
        for i in range(n):
            if rows[i][i] != 1:
                raise HelixlabError(f"Gram diagonal entry ({i + 1},{i + 1}) is {rows[i][i]}, not 1")
            for j in range(i):
                if rows[i][j] != 0:
                    raise HelixlabError(f"Gram entry ({i + 1},{j + 1}) below the diagonal is nonzero")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "n", n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def reference_basis(self) -> Collection:
        return tuple(unit_vector(self.n, i) for i in range(1, self.n + 1))

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _check_dims(G: GramForm, *vectors):
    for v in vectors:
        if len(v) != G.n:
            raise DimensionMismatch(f"vector of length {len(v)} against rank-{G.n} Gram form")


def euler_pair(G: GramForm, u, v) -> int:
    """chi(u, v) = u^T G v."""
    _check_dims(G, u, v)
    return _pair(G.entries, u, v)


def _pair(entries, u, v) -> int:
    # unchecked inner loop used by the search code
    total = 0
    for i, ui in enumerate(u):
        if ui:
            row = entries[i]
            total += ui * sum(row[j] * v[j] for j in range(i, len(v)))
    return total


def is_exceptional(G: GramForm, u) -> bool:
    return euler_pair(G, u, u) == 1


@dataclass(frozen=True)
class SODVerdict:
    """Outcome of check_sod_basis. Indices in the report are 1-based."""

    exceptional: tuple[bool, ...]
    # chi(u_j, u_i) for every j > i, keyed (j, i)
    lower_pairs: dict
    determinant: int

    @property
    def unimodular(self) -> bool:
        return abs(self.determinant) == 1

    @property
    def orthogonality_violations(self) -> list[tuple[int, int, int]]:
        return [(j, i, val) for (j, i), val in self.lower_pairs.items() if val != 0]

    @property
    def ok(self) -> bool:
        return all(self.exceptional) and not self.orthogonality_violations and self.unimodular

    def __bool__(self):
        return self.ok

    def problems(self) -> list[str]:
        msgs = []
        for idx, flag in enumerate(self.exceptional, start=1):
            if not flag:
                msgs.append(f"element {idx} is not exceptional")
        for j, i, val in self.orthogonality_violations:
            msgs.append(f"pair ({j},{i}) is not semiorthogonal: chi = {val}")
        if not self.unimodular:
            msgs.append(f"coordinate matrix is not unimodular: det = {self.determinant}")
        return msgs


def check_sod_basis(G: GramForm, C) -> SODVerdict:
    if len(C) != G.n:
        raise DimensionMismatch(f"collection has {len(C)} elements, rank is {G.n}")
    _check_dims(G, *C)
    e = G.entries
    exceptional = tuple(_pair(e, u, u) == 1 for u in C)
    lower = {(j + 1, i + 1): _pair(e, C[j], C[i])
             for j in range(len(C)) for i in range(j)}
    det = int(_linalg.det(C))
    return SODVerdict(exceptional, lower, det)


def _canonical_vector(u) -> KVector:
    for x in u:
        if x > 0:
            return tuple(u)
        if x < 0:
            return tuple(-y for y in u)
    raise ZeroVector("the zero class has no sign-canonical form")


def canonical_vector(u) -> KVector:
    """Sign representative whose first nonzero coordinate is positive."""
    return _canonical_vector(kvector(u))


def canonicalize(C) -> Collection:
    """Apply canonical_vector elementwise, keeping the order."""
    return tuple(canonical_vector(u) for u in C)


def height(C) -> int:
    """Max absolute coordinate of a vector or a whole collection."""
    if C and isinstance(C[0], int):
        return max((abs(x) for x in C), default=0)
    return max((abs(x) for u in C for x in u), default=0)


def gram_of(G: GramForm, C) -> list[list[int]]:
    """Matrix of chi(u_i, u_j) for a collection."""
    _check_dims(G, *C)
    return [[_pair(G.entries, u, v) for v in C] for u in C]
