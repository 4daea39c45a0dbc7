"""Dehn twist actions on words and composite monodromies.

Twists along the chain curves a_1..a_{2g} act letterwise: t_{a_j} moves
only alpha_{j-1} and alpha_j, every other letter is fixed (curves beyond
the first knot block are disjoint from all a_j).  Composite monodromies
are stored in application order: the FIRST entry of MonodromySpec.twists
is applied first, so the tuple reads left to right while the usual
composition notation reads right to left.

The Stallings monodromy t_{a3}^m t_{a4} t_{b2} t_{a2}^-1 t_{a1}^-1 cannot
be applied letterwise (there is no letter rule for t_{b2}); its images of
the B-curves come from the precomputed tables in stallings_rules instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .surfaces import CurveId, FiberSurface, beta_word, eta_word, phi_b_word, validate_word
from .words import Word, alpha, concat, invert, reduce_word


class UnsupportedTwistError(ValueError):
    """Raised when a twist has no letterwise rule (t_{b2}, and t_{a4} inside phi_m)."""


@dataclass(frozen=True)
class TwistRule:
    """Letterwise action of one signed Dehn twist.

    `images` maps unsigned letter codes to replacement words; letters not
    in the map are fixed.  Inverse letters receive inverted images.
    """

    curve: CurveId
    sign: int
    images: Mapping[int, Word]
    surface: FiberSurface


def chain_twist_rule(j: int, sign: int, s: FiberSurface) -> TwistRule:
    """Rule table for t_{a_j}^sign, 1 <= j <= 2g.

    t_{a_j}(alpha_{j-1}) = alpha_{j-1} alpha_j^-1 alpha_{j-1}
    t_{a_j}(alpha_j)     = alpha_{j-1}
    and the mutually inverse pair for sign = -1.  Twists outside the
    stated range are rejected rather than guessed.
    """
    if not 1 <= j <= 2 * s.g:
        raise ValueError(f"chain twist index {j} out of range [1, {2 * s.g}]")
    if sign not in (1, -1):
        raise ValueError(f"twist sign must be +-1, got {sign}")
    lo, hi = alpha(j - 1), alpha(j)
    if sign == 1:
        images = {abs(lo): (lo, -hi, lo), abs(hi): (lo,)}
    else:
        images = {abs(lo): (hi,), abs(hi): (hi, -lo, hi)}
    return TwistRule(CurveId("a", j), sign, images, s)


def apply_twist(rule: TwistRule, w: Word) -> Word:
    """Apply one twist rule letterwise and reduce.

    Every letter of w must belong to the rule's surface alphabet.
    """
    validate_word(w, rule.surface)
    out: list[Word] = []
    for c in w:
        img = rule.images.get(abs(c))
        if img is None:
            out.append((c,))
        else:
            out.append(img if c > 0 else invert(img))
    return concat(*out)


@dataclass(frozen=True)
class MonodromySpec:
    """Ordered sequence of signed twists; twists[0] is applied first."""

    twists: tuple[tuple[CurveId, int], ...]
    source: str = "custom"

    def __len__(self):
        return len(self.twists)

    def inverse(self) -> "MonodromySpec":
        rev = tuple((c, -sgn) for c, sgn in reversed(self.twists))
        return MonodromySpec(rev, source=f"inverse({self.source})")

    def serialize(self) -> str:
        """Wire form, leftmost applied first, runs collapsed: `a1^-1 a2^-1 b2 a4 a3^3`."""
        parts: list[str] = []
        run: tuple[CurveId, int] | None = None
        count = 0

        def flush():
            if run is None:
                return
            curve, sgn = run
            power = sgn * count
            parts.append(str(curve) if power == 1 else f"{curve}^{power}")

        for entry in self.twists:
            if entry == run:
                count += 1
            else:
                flush()
                run, count = entry, 1
        flush()
        return " ".join(parts)

    def composition_str(self) -> str:
        """Composition notation, rightmost twist applied first."""
        toks = self.serialize().split()
        return " ".join(f"t_{t}" for t in reversed(toks)) if toks else "id"


def apply_monodromy(phi: MonodromySpec, w: Word, s: FiberSurface) -> Word:
    """Apply the twists of `phi` to w in sequence (twists[0] first)."""
    for curve, sign in phi.twists:
        if curve.family != "a":
            raise UnsupportedTwistError(
                f"twist t_{curve} has no letterwise rule; use its precomputed images"
            )
        w = apply_twist(chain_twist_rule(curve.index, sign, s), w)
    return reduce_word(w)


def mirror(eps: Sequence[int]) -> tuple[int, ...]:
    """Sign sequence of the mirror knot: negate every entry."""
    return tuple(-e for e in eps)


def _check_eps(eps: Sequence[int]) -> tuple[int, ...]:
    eps = tuple(eps)
    if not eps or len(eps) % 2:
        raise ValueError(f"fibered sign sequence must have even positive length, got {len(eps)}")
    if any(e not in (1, -1) for e in eps):
        raise ValueError(f"fibered sign sequence must be +-1 entries, got {eps}")
    return eps


def two_bridge_monodromy(eps: Sequence[int]) -> MonodromySpec:
    """Fibration monodromy of the two-bridge knot with signs eps.

    t_{a_1}^{eps_1} acts first, t_{a_{2k}}^{eps_{2k}} last.
    """
    eps = _check_eps(eps)
    twists = tuple((CurveId("a", j + 1), e) for j, e in enumerate(eps))
    src = "twobridge:" + ",".join("+" if e > 0 else "-" for e in eps)
    return MonodromySpec(twists, source=src)


def piece_monodromy(eps: Sequence[int]) -> MonodromySpec:
    """The composite whose images label the phi-half of each piece's factorization.

    Same signs as the fibration monodromy but applied in the opposite
    order: t_{a_{2g}}^{eps_{2g}} first, t_{a_1}^{eps_1} last.  With this
    ordering the image of alpha_i is a word over alpha_0..alpha_{i+1}
    crossing alpha_{i+1} exactly once.
    """
    eps = _check_eps(eps)
    twists = tuple((CurveId("a", j + 1), e) for j, e in reversed(list(enumerate(eps))))
    src = "piece:" + ",".join("+" if e > 0 else "-" for e in eps)
    return MonodromySpec(twists, source=src)


def stallings_monodromy(m: int) -> MonodromySpec:
    """phi_m = t_{a3}^m ∘ t_{a4} ∘ t_{b2} ∘ t_{a2}^-1 ∘ t_{a1}^-1."""
    twists: list[tuple[CurveId, int]] = [
        (CurveId("a", 1), -1),
        (CurveId("a", 2), -1),
        (CurveId("b2"), 1),
        (CurveId("a", 4), 1),
    ]
    twists += [(CurveId("a", 3), 1 if m > 0 else -1)] * abs(m)
    return MonodromySpec(tuple(twists), source=f"stallings:m={m}")


def ta3_power(w: Word, m: int, s: FiberSurface | None = None) -> Word:
    """t_{a3}^m applied letterwise (moves alpha_2 and alpha_3 only)."""
    if s is None:
        s = FiberSurface(2, 1)
    sign = 1 if m > 0 else -1
    rule = chain_twist_rule(3, sign, s)
    for _ in range(abs(m)):
        w = apply_twist(rule, w)
    return reduce_word(w)


@dataclass(frozen=True)
class StallingsImages:
    """Precomputed phi_m images of the genus-2 curves B_0..B_4.

    heads[i] is the image of the beta part of B_i; the closing arcs are
    untouched by the twists and are appended per surface convention by
    phi_b_word.  At m = 0 these are the five eta-decompositions of the
    untwisted monodromy image; the t_{a3}^m factor only rewrites the
    alpha_2/alpha_3 letters.
    """

    m: int
    heads: tuple[Word, ...]

    def phi_b_word(self, i: int, s: FiberSurface) -> Word:
        if s.g != 2:
            raise ValueError("Stallings images live on the genus-2 fiber")
        return phi_b_word(i, self.heads[i], s)


def stallings_rules(m: int) -> StallingsImages:
    """Build the phi_m image table for the Stallings knot K_m."""
    s = FiberSurface(2, 1)
    eta = eta_word()
    t_a3 = ta3_power((alpha(3),), m, s)
    t_a2inv = ta3_power((alpha(2, -1),), m, s)
    b0, b1, b3, b4 = (beta_word(i, s) for i in (0, 1, 3, 4))
    heads = (
        concat(eta, t_a3, t_a2inv),
        concat(eta, t_a3, b0),
        concat(eta, t_a3, b1),
        concat(eta, t_a3, b4),
        concat(b4, ta3_power(invert(b3), m, s), b4),
    )
    return StallingsImages(m, heads)


__all__ = [
    "TwistRule",
    "MonodromySpec",
    "UnsupportedTwistError",
    "chain_twist_rule",
    "apply_twist",
    "apply_monodromy",
    "mirror",
    "two_bridge_monodromy",
    "piece_monodromy",
    "stallings_monodromy",
    "ta3_power",
    "StallingsImages",
    "stallings_rules",
]
