# Copyright 2026 The Spinform Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import functools

import numpy as np
import pytest

import spinform as sf

SY = np.array([[0, -1j], [1j, 0]])


def dense_flip(psi):
    n = int(np.log2(psi.size))
    f = functools.reduce(np.kron, [SY] * n)
    return f @ psi.conj()


def random_vec(rng, n):
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return v / np.linalg.norm(v)


def test_flip_matches_dense():
    rng = np.random.default_rng(1)
    for n in range(1, 6):
        psi = random_vec(rng, n)
        np.testing.assert_allclose(sf.flip_state(psi), dense_flip(psi), atol=1e-12)


def test_form_values():
    zero, one = np.array([1, 0], complex), np.array([0, 1], complex)
    assert sf.bilinear_form(zero, one) == pytest.approx(-1j)
    assert sf.form_kind(2) == "orthogonal"
    assert sf.form_kind(3) == "symplectic"
    rng = np.random.default_rng(2)
    a = random_vec(rng, 3)
    assert abs(sf.bilinear_form(a, a)) < 1e-14


def test_tangle_golden():
    r = 1 / np.sqrt(2)
    assert sf.tangle(np.array([r, 0, 0, r])) == pytest.approx(1.0, abs=1e-10)
    assert sf.tangle(np.array([1, 0, 0, 0], complex)) == pytest.approx(0.0, abs=1e-10)
    w = np.zeros(16, complex)
    w[[1, 2, 4, 8]] = 0.5
    assert sf.tangle(w) == pytest.approx(0.0, abs=1e-10)


def test_magic_basis_is_biorthonormal():
    for n in (2, 4):
        x = sf.magic_basis(n)
        v = sf.check_biorthonormal(x)
        assert v.passed
        np.testing.assert_allclose(x.conj().T @ x, np.eye(2**n), atol=1e-12)


def test_orthogonal_round_trip():
    o = sf.random_real_orthogonal(4, 7)
    x = sf.basis_from_orthogonal(o)
    np.testing.assert_allclose(sf.decompose_basis(x), o, atol=1e-10)


def test_odd_basis_from_unitary_symplectic():
    s = sf.random_unitary_symplectic(8, 3)
    assert sf.check_biorthonormal(sf.basis_from_unitary_symplectic(s)).passed


def test_local_sl2_preserves_form():
    m = sf.expand_local(sf.random_sl2_list(2, 5))
    assert sf.is_form_preserving(m).passed
    r = sf.represent_in_basis(m)
    assert sf.group_residual(r, 2) < 1e-8
    assert sf.slocc_obstruction(2 * np.eye(4)).obstructed


def test_maxent_round_trip():
    psi = sf.maxent_generate(2, 0.4, [0.6, 0.8, 0.0, 0.0])
    rep = sf.is_maximally_entangled(psi)
    assert rep.passed and rep.conditions_agree
    assert sf.tangle(psi) == pytest.approx(1.0, abs=1e-12)
    assert not sf.is_maximally_entangled(np.array([1, 0, 0, 0], complex)).passed


def test_amplitude_bound_tight_case():
    b = sf.amplitude_bound_check(np.array([1, 0, 0, 0], complex))
    assert b.passed
    assert b.slack == pytest.approx(0.0, abs=1e-10)


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        sf.flip_state(np.ones(3, complex))
    with pytest.raises(ValueError):
        sf.magic_basis(3)
    with pytest.raises(ValueError):
        sf.Tolerances(residual=-1.0)
