"""Semidirect-product group law for (SL(2,C) cover) x translations.

Elements are stored as (h, x) with h in SL(2,C); the Lorentz image of h is
recomputed through the covering map whenever it acts on a translation, never
stored, so the two-to-one ambiguity stays confined to h itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .minkowski import FourVector
from .spin import SL2CElement, covering_map, random_sl2c

__all__ = [
    "PoincareElement",
    "poincare_identity",
    "poincare_multiply",
    "poincare_inverse",
    "act_on_momentum",
    "act_on_event",
    "random_poincare",
]


@dataclass(frozen=True)
class PoincareElement:
    h: SL2CElement
    x: FourVector


def poincare_identity() -> PoincareElement:
    return PoincareElement(SL2CElement(np.eye(2)), FourVector(0.0, 0.0, 0.0, 0.0))


def poincare_multiply(g1: PoincareElement, g2: PoincareElement) -> PoincareElement:
    """(h1, x1)(h2, x2) = (h1 h2, x1 + delta(h1) x2)."""
    h = SL2CElement(g1.h.m @ g2.h.m)
    x = g1.x.as_array() + covering_map(g1.h) @ g2.x.as_array()
    return PoincareElement(h, FourVector.from_array(x))


def poincare_inverse(g: PoincareElement) -> PoincareElement:
    """(h, x)^-1 = (h^-1, -delta(h^-1) x)."""
    det = g.h.m[0, 0] * g.h.m[1, 1] - g.h.m[0, 1] * g.h.m[1, 0]
    hinv = SL2CElement(
        np.array(
            [[g.h.m[1, 1], -g.h.m[0, 1]], [-g.h.m[1, 0], g.h.m[0, 0]]], dtype=complex
        )
        / det
    )
    x = -(covering_map(hinv) @ g.x.as_array())
    return PoincareElement(hinv, FourVector.from_array(x))


def act_on_momentum(g: PoincareElement, p: FourVector) -> FourVector:
    """Momentum-space action: translations act trivially, h acts by delta(h)."""
    return FourVector.from_array(covering_map(g.h) @ p.as_array())


def act_on_event(g: PoincareElement, y: FourVector) -> FourVector:
    """Configuration-space action: y -> delta(h) y + x."""
    return FourVector.from_array(covering_map(g.h) @ y.as_array() + g.x.as_array())


def random_poincare(
    rng: np.random.Generator,
    max_rapidity: float = 1.0,
    max_translation: float = 1.0,
) -> PoincareElement:
    h = random_sl2c(rng, max_rapidity)
    x = FourVector.from_array(max_translation * rng.uniform(-1.0, 1.0, size=4))
    return PoincareElement(h, x)
