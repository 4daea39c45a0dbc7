"""Positive factorizations of the two Lefschetz pieces over the disk.

The hyperelliptic word W lists the base vanishing cycles; each piece is W
together with its monodromy-image block, X1 in image-first order and X2
rotated by |W|.  Attaching a cycle contributes a 2-handle framed one less
than the fiber surface framing, so framing labels are symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .knots import Knot, StallingsKnot, TwoBridgeKnot
from .surfaces import CurveId, FiberSurface, b_word, beta_word, c_word, phi_b_word
from .twists import MonodromySpec, apply_monodromy, stallings_rules
from .words import Word, concat, invert, word_str

FRAMING = "fiber-1"


@dataclass(frozen=True)
class VanishingCycle:
    """One factor: curve identity, optional phi tag, attaching word (None = opaque)."""

    curve: CurveId
    word: Word | None
    phi_image: bool = False
    framing: str = FRAMING
    conj: tuple[tuple[str, int], ...] = ()

    def label(self) -> str:
        base = ("phi(" + str(self.curve) + ")") if self.phi_image else str(self.curve)
        for name, sign in self.conj:
            base = f"{base}^{name}" if sign > 0 else f"{base}^{name}'"
        return base


@dataclass(frozen=True)
class Factorization:
    cycles: tuple[VanishingCycle, ...]
    fiber: FiberSurface

    def __len__(self):
        return len(self.cycles)


@dataclass(frozen=True)
class LFPiece:
    """One side of the splitting: X1 carries image-block-first order, X2 the rotation."""

    which: str
    factorization: Factorization


def build_W(s: FiberSurface) -> Factorization:
    """The word W as an ordered cycle list.

    n >= 2: c_{2n-2} .. c_2 c_1 c_1 c_2 .. c_{2n-2} B_0 .. B_{2g} c_{2n-1};
    n = 1 degenerates to B_0 .. B_{2g} c_1 with the c_1 word unknown
    (carried opaque).  |W| = 2g + 4n - 2 in both cases.
    """
    cycles: list[VanishingCycle] = []
    if s.n >= 2:
        down = list(range(2 * s.n - 2, 1, -1))
        for i in down + [1, 1] + list(reversed(down)):
            cycles.append(VanishingCycle(CurveId("c", i), c_word(i, s)))
    for i in range(2 * s.g + 1):
        cycles.append(VanishingCycle(CurveId("B", i), b_word(i, s)))
    if s.n >= 2:
        cycles.append(VanishingCycle(CurveId("c", 2 * s.n - 1), c_word(2 * s.n - 1, s)))
    else:
        cycles.append(VanishingCycle(CurveId("c", 1), None))
    assert len(cycles) == 2 * s.g + 4 * s.n - 2
    return Factorization(tuple(cycles), s)


def _phi_cycle(vc: VanishingCycle, knot: Knot, s: FiberSurface) -> VanishingCycle:
    if isinstance(knot, StallingsKnot):
        if vc.curve.family == "B":
            word = stallings_rules(knot.m).phi_b_word(vc.curve.index, s)
        else:
            word = None  # no letterwise rules for t_{b2}; c-images stay opaque
        return replace(vc, word=word, phi_image=True)
    phi = knot.piece_monodromy()
    if vc.word is None:
        return replace(vc, phi_image=True)
    if vc.curve.family == "B" and s.n >= 2:
        # The stored B_i spelling is basepoint-rotated, so the image is
        # assembled from the image of the beta part; applying the letter
        # rules to the rotated spelling would not be the twist action.
        head = apply_monodromy(phi, beta_word(vc.curve.index, s), s)
        return replace(vc, word=phi_b_word(vc.curve.index, head, s), phi_image=True)
    return replace(vc, word=apply_monodromy(phi, vc.word, s), phi_image=True)


def build_pieces(knot: Knot, n: int) -> tuple[LFPiece, LFPiece]:
    """Factorizations of both pieces for the given knot and elliptic index."""
    if isinstance(knot, TwoBridgeKnot) and not knot.is_fibered:
        raise ValueError(f"{knot} is not fibered; no Lefschetz piece exists")
    s = FiberSurface(knot.genus, n)
    base = build_W(s)
    phi_block = tuple(_phi_cycle(vc, knot, s) for vc in base.cycles)
    x1 = Factorization(phi_block + base.cycles, s)
    x2 = Factorization(base.cycles + phi_block, s)
    return LFPiece("X1", x1), LFPiece("X2", x2)


def piece_handle_counts(s: FiberSurface) -> tuple[int, int, int]:
    """(0-handles, 1-handles, 2-handles) of one piece, boundary handle included."""
    return 1, s.num_handles, 4 * s.g + 8 * s.n - 3


def conjugate_factorization(f: Factorization, phi: MonodromySpec, inverse: bool = False) -> Factorization:
    """Simultaneous conjugation: replace every word by its (inverse-)image."""
    spec = phi.inverse() if inverse else phi
    cycles = tuple(
        vc if vc.word is None else replace(vc, word=apply_monodromy(spec, vc.word, f.fiber))
        for vc in f.cycles
    )
    return Factorization(cycles, f.fiber)


def _cancel_conj(tags: tuple[tuple[str, int], ...], new: tuple[str, int]) -> tuple[tuple[str, int], ...]:
    if tags and tags[-1] == (new[0], -new[1]):
        return tags[:-1]
    return tags + (new,)


def hurwitz_move(f: Factorization, i: int, inverse: bool = False) -> Factorization:
    """Elementary transposition at 1-based position i: (t_a, t_b) -> (t_b, t_{b^-1 a b}).

    The conjugated word is computed when both words are known, otherwise
    the conjugation is recorded symbolically on the cycle label.  The
    inverse move at the same position undoes the forward move exactly.
    """
    if not 1 <= i < len(f.cycles):
        raise ValueError(f"move position {i} out of range [1, {len(f.cycles) - 1}]")
    cycles = list(f.cycles)
    a, b = cycles[i - 1], cycles[i]
    if not inverse:
        if a.word is not None and b.word is not None:
            conjugated = replace(a, word=concat(invert(b.word), a.word, b.word))
        else:
            # No word to conjugate through: record the move symbolically.
            conjugated = replace(a, conj=_cancel_conj(a.conj, (b.label(), 1)))
        cycles[i - 1], cycles[i] = b, conjugated
    else:
        if a.word is not None and b.word is not None:
            conjugated = replace(b, word=concat(a.word, b.word, invert(a.word)))
        else:
            conjugated = replace(b, conj=_cancel_conj(b.conj, (a.label(), -1)))
        cycles[i - 1], cycles[i] = conjugated, a
    return Factorization(tuple(cycles), f.fiber)


def factorization_json(f: Factorization) -> dict:
    """Stable JSON form: ordered cycles with curve, word text and framing."""
    return {
        "fiber": {"g": f.fiber.g, "n": f.fiber.n},
        "cycles": [
            {
                "curve": vc.label(),
                "word": None if vc.word is None else word_str(vc.word),
                "framing": vc.framing,
            }
            for vc in f.cycles
        ],
    }


__all__ = [
    "FRAMING",
    "VanishingCycle",
    "Factorization",
    "LFPiece",
    "build_W",
    "build_pieces",
    "piece_handle_counts",
    "conjugate_factorization",
    "hurwitz_move",
    "factorization_json",
]
