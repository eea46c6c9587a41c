"""Restriction to a generic anticanonical K3 surface S and Mukai-lattice numerics.

S has Picard rank one, generated by H_S = H|_S with H_S^2 = k d. A Mukai
vector is (r, a, s) with c_1 = a H_S and s = ch_2 + r (in points), and

    <v, w> = a_v a_w (k d) - r_v s_w - r_w s_v,

so that a spherical class has <v, v> = -2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .chern import ChernCharacter, FanoPreset
from .errors import AmbientMismatch, HelixlabError, ZeroRank

# value asserted for rank-2 spherical bundles in the source argument
CLAIMED_RANK2_DISCRIMINANT = 2


@dataclass(frozen=True)
class MukaiVector:
    r: int
    a: Fraction
    s: Fraction
    ambient: int  # H_S^2

    def __post_init__(self):
        if self.ambient <= 0:
            raise HelixlabError("polarization must have positive self-intersection")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "s", Fraction(self.s))

    def __iter__(self):
        return iter((self.r, self.a, self.s))

    def __str__(self):
        return f"({self.r}, {self.a}, {self.s})"


def restrict_to_k3(V: FanoPreset, x: ChernCharacter) -> MukaiVector:
    # ch_2(x|_S) = ch_2(x) . (-K) = k b points
    return MukaiVector(x.r, Fraction(x.a), V.k * x.b + x.r, V.k * V.d)


def mukai_pair(v: MukaiVector, w: MukaiVector) -> Fraction:
    if v.ambient != w.ambient:
        raise AmbientMismatch(f"H_S^2 = {v.ambient} vs {w.ambient}")
    return v.a * w.a * v.ambient - v.r * w.s - w.r * v.s


def is_spherical_class(v: MukaiVector) -> bool:
    return mukai_pair(v, v) == -2


def slope(x: Union[ChernCharacter, MukaiVector]) -> Fraction:
    """c_1 / rank in units of H (or H_S)."""
    if x.r == 0:
        raise ZeroRank("slope is undefined for rank 0")
    return Fraction(x.a) / x.r


def discriminant(v: MukaiVector) -> Fraction:
    """2r c_2 - (r-1) c_1^2, i.e. <v, v> + 2 r^2; 4c_2 - c_1^2 in rank two."""
    if v.r == 0:
        raise ZeroRank("discriminant needs nonzero rank")
    return mukai_pair(v, v) + 2 * v.r * v.r


@dataclass(frozen=True)
class BogomolovReport:
    index: int
    rank: int
    discriminant: Fraction
    threshold: Fraction          # Delta / 2 + 1 with the computed Delta
    satisfied: bool              # index >= threshold
    claimed_discriminant: Optional[int]
    claimed_threshold: Optional[Fraction]
    claimed_satisfied: Optional[bool]
    index_hypothesis: bool       # index >= 2
    caveat: Optional[str]


def bogomolov_restriction_report(V: FanoPreset, v: MukaiVector) -> BogomolovReport:
    """Compare the index with the restriction threshold Delta/2 + 1.

    For rank 2 both the computed discriminant and the claimed value 2 are
    evaluated; they disagree (6 vs 2 for spherical classes) and neither is
    substituted for the other.
    """
    delta = discriminant(v)
    rank = abs(v.r)
    threshold = delta / 2 + 1
    claimed = claimed_t = claimed_ok = caveat = None
    if rank == 2:
        claimed = CLAIMED_RANK2_DISCRIMINANT
        claimed_t = Fraction(claimed, 2) + 1
        claimed_ok = V.k >= claimed_t
        if delta != claimed:
            caveat = (f"computed 4c2 - c1^2 = {delta} differs from the claimed value {claimed}; "
                      "the two normalizations give different thresholds")
    return BogomolovReport(V.k, rank, delta, threshold, V.k >= threshold,
                           claimed, claimed_t, claimed_ok, V.k >= 2, caveat)
