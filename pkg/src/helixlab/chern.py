"""Chern characters on Fano threefolds with Picard rank one.

A class is written ch = r + aH + bL + cP, where H is the ample generator,
L the class of H^2 / d and P the point class, so that H.H = dL, H.L = P and
H^3 = dP. Todd coefficients are derived from the degree d and index k:
td = 1 + (k/2) H + ((k^2 d + 24/k) / 12) L + P.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import _linalg
from .errors import HelixlabError, NoSolution, NotInLattice
from .lattice import GramForm, KVector


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise HelixlabError("floating point values are not accepted")
    return Fraction(x)


def _int(x) -> int:
    q = _frac(x)
    if q.denominator != 1:
        raise HelixlabError(f"expected an integer, got {q}")
    return int(q)


@dataclass(frozen=True)
class ChernCharacter:
    r: int
    a: int
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", _int(self.r))
        object.__setattr__(self, "a", _int(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        object.__setattr__(self, "c", _frac(self.c))

    def __iter__(self):
        return iter((self.r, self.a, self.b, self.c))

    def __add__(self, other):
        return ChernCharacter(self.r + other.r, self.a + other.a, self.b + other.b, self.c + other.c)

    def __neg__(self):
        return ChernCharacter(-self.r, -self.a, -self.b, -self.c)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, m: int) -> ChernCharacter:
        return ChernCharacter(m * self.r, m * self.a, m * self.b, m * self.c)

    def is_integral(self) -> bool:
        """Denominators of ch_2 and ch_3 divide 2 and 6."""
        return (2 * self.b).denominator == 1 and (6 * self.c).denominator == 1

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self) + ")"


ZERO = ChernCharacter(0, 0, 0, 0)


def line_bundle(d: int, m: int) -> ChernCharacter:
    """ch(O(m)) = exp(mH)."""
    return ChernCharacter(1, m, Fraction(m * m * d, 2), Fraction(m ** 3 * d, 6))


@dataclass(frozen=True)
class FanoPreset:
    """Numeric descriptor of a Fano threefold.

    ``gram`` and ``basis_ch`` are optional: presets for which no reference
    collection is configured still support HRR and K3 computations.
    ``gram`` is kept as raw integer rows so that broken configurations can
    be loaded and diagnosed by validate_preset.
    """

    name: str
    d: int
    k: int
    b2: int = 1
    b3: int = 0
    gram: Optional[tuple[tuple[int, ...], ...]] = None
    basis_ch: Optional[tuple[ChernCharacter, ...]] = None
    tau1: Fraction = field(init=False, repr=False, compare=False)
    tau2: Fraction = field(init=False, repr=False, compare=False)
    tau3: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k == 0:
            raise HelixlabError("index must be nonzero")
        if self.gram is not None:
            object.__setattr__(self, "gram", tuple(tuple(_int(x) for x in row) for row in self.gram))
        if self.basis_ch is not None:
            object.__setattr__(self, "basis_ch", tuple(
                x if isinstance(x, ChernCharacter) else ChernCharacter(*x) for x in self.basis_ch))
        object.__setattr__(self, "tau1", Fraction(self.k, 2))
        object.__setattr__(self, "tau2", (Fraction(self.k ** 2 * self.d) + Fraction(24, self.k)) / 12)
        object.__setattr__(self, "tau3", Fraction(1))

    @property
    def gram_form(self) -> GramForm:
        if self.gram is None:
            raise HelixlabError(f"preset {self.name!r} has no Gram form configured")
        return GramForm(self.gram)

    @property
    def has_basis(self) -> bool:
        return self.gram is not None and self.basis_ch is not None


def hrr_euler(V: FanoPreset, x: ChernCharacter, y: ChernCharacter) -> Fraction:
    """chi(x, y) = integral of ch(x)^dual * ch(y) * td(X)."""
    r1, a1, b1, c1 = x
    r2, a2, b2, c2 = y
    deg3 = r1 * c2 - r2 * c1 + (a2 * b1 - a1 * b2)
    deg2 = r1 * b2 + r2 * b1 - V.d * a1 * a2
    deg1 = r1 * a2 - r2 * a1
    return Fraction(deg3) + V.tau1 * deg2 + V.tau2 * deg1 + V.tau3 * r1 * r2


def twist(V: FanoPreset, x: ChernCharacter, m: int) -> ChernCharacter:
    """x * exp(mH)."""
    r, a, b, c = x
    d = V.d
    return ChernCharacter(
        r,
        a + r * m,
        b + m * d * a + Fraction(r * m * m * d, 2),
        c + m * b + Fraction(m * m * d, 2) * a + Fraction(r * m ** 3 * d, 6),
    )


def canonical_twist(V: FanoPreset, x: ChernCharacter, direction: str = "by_K") -> ChernCharacter:
    """Tensor with K (``by_K``) or with -K (``by_minus_K``); -K = kH."""
    if direction == "by_K":
        return twist(V, x, -V.k)
    if direction == "by_minus_K":
        return twist(V, x, V.k)
    raise HelixlabError(f"unknown direction {direction!r}")


def to_coordinates(V: FanoPreset, x: ChernCharacter) -> KVector:
    """Integer coordinates of x in the preset's reference collection."""
    if V.basis_ch is None:
        raise HelixlabError(f"preset {V.name!r} has no reference collection")
    # columns are the basis characters
    rows = [[tuple(e)[row] for e in V.basis_ch] for row in range(4)]
    try:
        sol = _linalg.solve(rows, list(x))
    except NoSolution:
        raise NoSolution(f"{x} is not a rational combination of the reference collection") from None
    if any(q.denominator != 1 for q in sol):
        raise NotInLattice(f"{x} has non-integral coordinates {[str(q) for q in sol]}")
    return tuple(int(q) for q in sol)


def from_coordinates(V: FanoPreset, xi) -> ChernCharacter:
    if V.basis_ch is None:
        raise HelixlabError(f"preset {V.name!r} has no reference collection")
    if len(xi) != len(V.basis_ch):
        raise HelixlabError(f"expected {len(V.basis_ch)} coordinates, got {len(xi)}")
    total = ZERO
    for m, e in zip(xi, V.basis_ch):
        total = total + e.scale(m)
    return total


@dataclass(frozen=True)
class PresetVerdict:
    violations: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def validate_preset(V: FanoPreset) -> PresetVerdict:
    problems = []
    if V.b2 != 1:
        problems.append(f"b2 = {V.b2}, expected 1")
    if V.b3 != 0:
        problems.append(f"b3 = {V.b3}, expected 0")
    if V.d <= 0:
        problems.append(f"degree d = {V.d} must be positive")
    if V.k <= 0 or 24 % V.k:
        problems.append(f"index k = {V.k} must be a positive divisor of 24")
    O = line_bundle(V.d, 0)
    if hrr_euler(V, O, O) != 1:
        problems.append("chi(O, O) != 1")
    if (V.gram is None) != (V.basis_ch is None):
        problems.append("gram and basis_ch must be given together")
    if V.gram is None or V.basis_ch is None:
        return PresetVerdict(tuple(problems))

    n = len(V.gram)
    if any(len(row) != n for row in V.gram):
        problems.append("gram is not square")
        return PresetVerdict(tuple(problems))
    if len(V.basis_ch) != n:
        problems.append(f"basis_ch has {len(V.basis_ch)} entries, gram has rank {n}")
        return PresetVerdict(tuple(problems))
    for i in range(n):
        if V.gram[i][i] != 1:
            problems.append(f"gram diagonal ({i + 1},{i + 1}) = {V.gram[i][i]}, expected 1")
        for j in range(i):
            if V.gram[i][j] != 0:
                problems.append(f"gram ({i + 1},{j + 1}) = {V.gram[i][j]} below the diagonal")
    for idx, e in enumerate(V.basis_ch, start=1):
        if not e.is_integral():
            problems.append(f"basis_ch[{idx}] = {e} violates ch2/ch3 integrality")
    for i, x in enumerate(V.basis_ch):
        for j, y in enumerate(V.basis_ch):
            chi = hrr_euler(V, x, y)
            if chi.denominator != 1:
                problems.append(f"chi(basis[{i + 1}], basis[{j + 1}]) = {chi} is not an integer")
            elif chi != V.gram[i][j]:
                problems.append(f"gram mismatch at ({i + 1},{j + 1}): stored {V.gram[i][j]}, HRR gives {chi}")
    if n == 4 and _linalg.det([list(e) for e in V.basis_ch]) == 0:
        problems.append("basis characters are linearly dependent")
    return PresetVerdict(tuple(problems))


def line_bundle_obstruction(V: FanoPreset, x: ChernCharacter) -> Optional[str]:
    """Why x cannot be the class of a shifted exceptional bundle, if cheaply provable.

    Exceptional bundles of rank one on a Picard-rank-one variety are line
    bundles, so a class of rank +-1 must be +-ch(O(a)). Returns None when this
    test does not apply or passes.
    """
    if abs(x.r) != 1:
        return None
    y = x if x.r == 1 else -x
    if y != line_bundle(V.d, y.a):
        return f"rank-one class {y} is not ch(O({y.a}))"
    return None
