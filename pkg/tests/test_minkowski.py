import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from weylnoise.minkowski import (
    ETA,
    FourVector,
    character_eval,
    is_proper_orthochronous,
    lorentz_invert,
    minkowski_form,
    minkowski_form_array,
)

coord = st.floats(-5, 5, allow_nan=False, allow_infinity=False, allow_subnormal=False)
fourvec = st.builds(FourVector, coord, coord, coord, coord)


def _boost_matrix(t: float) -> np.ndarray:
    ch, sh = np.cosh(t), np.sinh(t)
    return np.array(
        [[ch, 0, 0, sh], [0, 1, 0, 0], [0, 0, 1, 0], [sh, 0, 0, ch]]
    )


def test_signature_frozen_values():
    assert minkowski_form(FourVector(1, 2, 3, 4), FourVector(1, 1, 1, 1)) == -8.0
    assert minkowski_form(FourVector(2, 0, 0, 0), FourVector(3, 1, 1, 1)) == 6.0
    k = FourVector(1, 0, 0, 1)
    assert minkowski_form(k, k) == 0.0
    assert minkowski_form(k, FourVector(1, 0, 0, -1)) == 2.0
    assert np.array_equal(np.diag(ETA), [1.0, -1.0, -1.0, -1.0])


@given(fourvec, fourvec, fourvec, coord)
def test_bilinear_and_symmetric(k1, k2, g, a):
    combo = FourVector.from_array(a * k1.as_array() + k2.as_array())
    lhs = minkowski_form(combo, g)
    rhs = a * minkowski_form(k1, g) + minkowski_form(k2, g)
    assert abs(lhs - rhs) < 1e-9 * (1 + abs(rhs))
    assert minkowski_form(k1, g) == minkowski_form(g, k1)


def test_form_array_matches_scalar(rng):
    x = FourVector(*rng.normal(size=4))
    batch = rng.normal(size=(32, 4))
    vals = minkowski_form_array(x.as_array(), batch)
    for row, want in zip(batch, vals):
        assert abs(minkowski_form(x, FourVector.from_array(row)) - want) < 1e-12


def test_character_is_unimodular_invariant_phase(rng):
    p = FourVector(2.0, 0.5, -1.0, 1.0)
    x = FourVector(0.3, 1.0, 0.0, -0.7)
    z = character_eval(p, x)
    assert abs(abs(z) - 1.0) < 1e-14
    assert abs(z - np.exp(1j * minkowski_form(p, x))) < 1e-14
    L = _boost_matrix(0.8)
    z2 = character_eval(
        FourVector.from_array(L @ p.as_array()), FourVector.from_array(L @ x.as_array())
    )
    assert abs(z - z2) < 1e-12


def test_lightlike_predicate():
    assert FourVector(1, 0, 0, 1).is_forward_lightlike()
    assert FourVector(3, 3, 0, 0).is_forward_lightlike()
    assert not FourVector(1, 0, 0, -0.5).is_forward_lightlike()
    assert not FourVector(-1, 0, 0, -1).is_forward_lightlike()


def test_invert_via_metric_conjugation():
    L = _boost_matrix(0.6)
    assert np.allclose(lorentz_invert(L), _boost_matrix(-0.6), atol=1e-14)
    assert np.allclose(lorentz_invert(L) @ L, np.eye(4), atol=1e-14)
    assert is_proper_orthochronous(L)
    assert not is_proper_orthochronous(np.diag([-1.0, 1, 1, -1]))
