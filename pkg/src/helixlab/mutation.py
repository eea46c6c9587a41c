"""Braid group action on semiorthogonal bases, Serre operator and helix shift.

Convention: for an adjacent pair (u, v) with m = chi(u, v),

    L: (u, v) -> (v - m u, u)
    R: (u, v) -> (v, u - m v)

L_i and R_i are mutually inverse and the braid relations hold on the nose.
Words act left to right and are written ``"L1 R2 L3"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from . import _linalg
from .errors import BadPosition, HelixlabError, NotSODBasis, ParseError
from .lattice import Collection, GramForm, _pair, check_sod_basis, kvector


class Move(NamedTuple):
    side: str
    position: int

    def __str__(self):
        return f"{self.side}{self.position}"


BraidWord = tuple[Move, ...]

_MOVE_RE = re.compile(r"([LR])([1-9][0-9]*)")


def parse_word(text: str) -> BraidWord:
    """Parse whitespace-separated moves such as ``"L1 R2"``; ``""`` is the identity."""
    moves = []
    for token in text.split():
        m = _MOVE_RE.fullmatch(token)
        if m is None:
            raise ParseError(f"bad move {token!r}; expected L<i> or R<i>")
        moves.append(Move(m.group(1), int(m.group(2))))
    return tuple(moves)


def format_word(word) -> str:
    return " ".join(str(Move(*mv)) for mv in word)


def _as_word(word) -> BraidWord:
    if isinstance(word, str):
        return parse_word(word)
    return tuple(Move(*mv) for mv in word)


def _mutate_unchecked(entries, C, side: str, i: int) -> Collection:
    # i is 0-based here
    u, v = C[i], C[i + 1]
    m = _pair(entries, u, v)
    if side == "L":
        new = (tuple(y - m * x for x, y in zip(u, v)), u)
    else:
        new = (v, tuple(x - m * y for x, y in zip(u, v)))
    return C[:i] + new + C[i + 2:]


def mutate(G: GramForm, C, side: str, i: int, check: bool = True) -> Collection:
    """Left or right mutation of the pair at 1-based position (i, i+1)."""
    if side not in ("L", "R"):
        raise ParseError(f"side must be 'L' or 'R', got {side!r}")
    if not 1 <= i <= G.n - 1:
        raise BadPosition(f"position {i} outside 1..{G.n - 1}")
    C = tuple(kvector(u) for u in C)
    if check:
        verdict = check_sod_basis(G, C)
        if not verdict:
            raise NotSODBasis("; ".join(verdict.problems()))
    out = _mutate_unchecked(G.entries, C, side, i - 1)
    if check:
        verdict = check_sod_basis(G, out)
        if not verdict:  # pragma: no cover - would indicate a bug in the formula
            raise AssertionError(f"mutation broke the basis: {verdict.problems()}")
    return out


def apply_word(G: GramForm, C, word) -> Collection:
    word = _as_word(word)
    C = tuple(kvector(u) for u in C)
    verdict = check_sod_basis(G, C)
    if not verdict:
        raise NotSODBasis("; ".join(verdict.problems()))
    for side, i in word:
        if not 1 <= i <= G.n - 1:
            raise BadPosition(f"position {i} outside 1..{G.n - 1}")
        C = _mutate_unchecked(G.entries, C, side, i - 1)
    return C


@dataclass(frozen=True)
class SerreOperator:
    """Integer matrix kappa = -G^{-1} G^T acting on coordinate columns.

    chi(u, kappa v) = -chi(v, u). On a threefold the Serre functor is
    (x) K [3], and the odd shift flips the sign of its class, so kappa itself
    is tensoring with K and its inverse is tensoring with -K.
    """

    matrix: tuple[tuple[int, ...], ...]

    def apply(self, v):
        return _linalg.matvec(self.matrix, v)

    @property
    def twist_by_K(self) -> tuple[tuple[int, ...], ...]:
        return self.matrix

    @property
    def twist_by_minus_K(self) -> tuple[tuple[int, ...], ...]:
        inv = _linalg.inverse(self.twist_by_K)
        return tuple(tuple(int(x) for x in row) for row in inv)


def serre_operator(G: GramForm) -> SerreOperator:
    ginv = _linalg.inverse(G.rows())
    prod = _linalg.matmul(ginv, _linalg.transpose(G.rows()))
    if any(x.denominator != 1 for row in prod for x in row):  # pragma: no cover
        raise HelixlabError("Serre operator is not integral; Gram form is not unimodular")
    return SerreOperator(tuple(tuple(-int(x) for x in row) for row in prod))


def helix_shift(G: GramForm, C, direction: str = "forward") -> Collection:
    """Shift the window of the helix generated by C by one step.

    forward:  (u_1, ..., u_n) -> (u_2, ..., u_n, u_1 (x) O(-K))
    backward: (u_1, ..., u_n) -> (u_n (x) O(K), u_1, ..., u_{n-1})
    """
    C = tuple(kvector(u) for u in C)
    verdict = check_sod_basis(G, C)
    if not verdict:
        raise NotSODBasis("; ".join(verdict.problems()))
    kappa = serre_operator(G)
    if direction == "forward":
        return C[1:] + (_linalg.matvec(kappa.twist_by_minus_K, C[0]),)
    if direction == "backward":
        return (_linalg.matvec(kappa.twist_by_K, C[-1]),) + C[:-1]
    raise HelixlabError(f"unknown direction {direction!r}")
