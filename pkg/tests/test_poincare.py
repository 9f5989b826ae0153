import numpy as np

from weylnoise.minkowski import FourVector
from weylnoise.poincare import (
    PoincareElement,
    act_on_event,
    act_on_momentum,
    poincare_identity,
    poincare_inverse,
    poincare_multiply,
    random_poincare,
)
from weylnoise.spin import covering_map


def _affine(g: PoincareElement) -> np.ndarray:
    """Faithful 5x5 matrix model of the semidirect product: the group laws
    below are checked against plain matrix algebra on this model."""
    M = np.eye(5)
    M[:4, :4] = covering_map(g.h)
    M[:4, 4] = g.x.as_array()
    return M


def test_group_laws_match_affine_matrices(rng):
    for _ in range(50):
        g1 = random_poincare(rng, max_translation=2.0)
        g2 = random_poincare(rng, max_translation=2.0)
        assert np.allclose(
            _affine(poincare_multiply(g1, g2)), _affine(g1) @ _affine(g2), atol=1e-12
        )
        assert np.allclose(
            _affine(poincare_inverse(g1)), np.linalg.inv(_affine(g1)), atol=1e-12
        )
    assert np.allclose(_affine(poincare_identity()), np.eye(5))


def test_event_action_is_affine(rng):
    for _ in range(20):
        g = random_poincare(rng, max_translation=2.0)
        y = FourVector(*rng.normal(size=4))
        want = _affine(g) @ np.append(y.as_array(), 1.0)
        assert np.allclose(act_on_event(g, y).as_array(), want[:4], atol=1e-12)


def test_momentum_action_ignores_translation(rng):
    g = random_poincare(rng, max_translation=3.0)
    p = FourVector(2.0, 1.0, -0.5, 0.3)
    want = covering_map(g.h) @ p.as_array()
    assert np.allclose(act_on_momentum(g, p).as_array(), want, atol=1e-13)


def test_inverse_of_product(rng):
    g1 = random_poincare(rng)
    g2 = random_poincare(rng)
    lhs = poincare_inverse(poincare_multiply(g1, g2))
    rhs = poincare_multiply(poincare_inverse(g2), poincare_inverse(g1))
    assert np.allclose(lhs.h.m, rhs.h.m, atol=1e-12)
    assert np.allclose(lhs.x.as_array(), rhs.x.as_array(), atol=1e-12)
