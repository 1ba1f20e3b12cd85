import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deformed_discord.correlations import (
    F_of_z, binary_entropy, concurrence_closed, concurrence_paper, discord_analytic, entropy_rho_AB,
    entropy_rho_B, eof, q_of_p, z_pm, z_pm_simplified)
from deformed_discord.deformation import DeformationSpec
from deformed_discord.errors import FormulaDomainError, OutOfDomain
from deformed_discord.oracle import eig_hermitian, von_neumann_entropy, wootters_concurrence
from deformed_discord.states import (CatBasis, cat_basis, partial_trace, pure_concurrence,
                                     werner_from_basis)

BG = DeformationSpec.barut_girardello
S06 = CatBasis.from_overlap(0.6)


def h_direct(x):
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def test_binary_entropy_examples():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.9) == pytest.approx(0.468996, abs=1e-6)
    assert binary_entropy(0.9) == pytest.approx(h_direct(0.9), abs=1e-15)


def test_binary_entropy_domain():
    assert binary_entropy(-1e-13) == 0.0
    with pytest.raises(OutOfDomain):
        binary_entropy(1.1)


@given(st.floats(0.0, 1.0))
def test_binary_entropy_symmetric(x):
    assert binary_entropy(x) == pytest.approx(binary_entropy(1 - x), abs=1e-12)
    assert 0.0 <= binary_entropy(x) <= 1.0


@pytest.mark.parametrize("p, q", [(0, 0.25), (1, 1.0), (0.5, 0.625)])
def test_q_of_p(p, q):
    assert q_of_p(p) == q


def test_concurrence_paper_q_quarter_is_negative_before_clamp():
    for c_psi in (0.0, 0.3, 1.0):
        assert concurrence_paper(0.25, c_psi, clamp=False) == pytest.approx(-0.25, abs=1e-15)
        assert concurrence_paper(0.25, c_psi) == 0.0


def test_concurrence_paper_fails_at_q_one():
    for reading in ("printed", "squared"):
        with pytest.raises(FormulaDomainError):
            concurrence_paper(1.0, 1.0, radicand=reading)


def test_concurrence_paper_without_entanglement():
    for q in np.linspace(0.25, 1.0, 16):
        assert concurrence_paper(q, 0.0) >= 0.0


def test_concurrence_paper_disagrees_with_wootters():
    # the printed formula is a documented reference, not a correct result
    b = CatBasis.from_overlap(0.0)
    p = 0.8
    true = wootters_concurrence(werner_from_basis(p, b))
    try:
        printed = concurrence_paper(q_of_p(p), 1.0)
    except FormulaDomainError:
        return
    assert abs(printed - true) > 1e-3


@pytest.mark.parametrize("p, c_psi, expected", [
    (1.0, 1.0, 1.0),
    (0.0, 0.7, 0.0),
    (0.5, 0.64 / 1.36, 0.0),
    (0.8, 1.0, 0.7),
])
def test_concurrence_closed_examples(p, c_psi, expected):
    assert concurrence_closed(p, c_psi) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("s", [0.0, 0.2, 0.6, 0.95])
def test_concurrence_closed_matches_wootters(s):
    b = CatBasis.from_overlap(s)
    for p in np.linspace(0, 1, 41):
        rho = werner_from_basis(p, b)
        assert abs(concurrence_closed(p, pure_concurrence(b)) - wootters_concurrence(rho)) <= 1e-10


def test_eof_examples():
    assert eof(0.0) == 0.0
    assert eof(1.0) == 1.0
    assert eof(0.6) == pytest.approx(h_direct(0.9), abs=1e-15)


def test_eof_monotone():
    cs = np.linspace(0, 1, 201)
    vals = [eof(c) for c in cs]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_z_pm_examples():
    assert z_pm(0.0, S06) == (0.5, 0.5)
    zp, zm = z_pm(1.0, S06)
    assert zp == pytest.approx(0.5 + 0.6 / 1.36, abs=1e-12)
    assert zm == pytest.approx(0.5 - 0.6 / 1.36, abs=1e-12)
    assert zp == pytest.approx(0.941176, abs=1e-6)
    assert zm == pytest.approx(0.058824, abs=1e-6)


@given(p=st.floats(0, 1), s=st.floats(0, 0.999))
@settings(max_examples=300)
def test_z_pm_identities(p, s):
    b = CatBasis.from_overlap(s)
    zp, zm = z_pm(p, b)
    sp, sm = z_pm_simplified(p, s)
    assert zp + zm == pytest.approx(1.0, abs=1e-15)
    assert abs(zp - sp) <= 1e-12 and abs(zm - sm) <= 1e-12
    ev = eig_hermitian(partial_trace(werner_from_basis(p, b), "B"))
    assert abs(zp - ev[0]) <= 1e-12 and abs(zm - ev[1]) <= 1e-12
    assert abs(entropy_rho_B(p, pure_concurrence(b)) - binary_entropy(zp)) <= 1e-12


def test_F_of_z_examples():
    for z in (0.01, 0.3, 1.0):
        assert F_of_z(z, 1.0) == 0.0
    assert F_of_z(0.5, 0.25) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(OutOfDomain):
        F_of_z(0.25, 0.25)
    # both logarithms diverge at z -> r but their difference vanishes
    assert abs(F_of_z(0.25 + 1e-9, 0.25)) < 1e-6


def test_F_of_z_equals_outcome_conditional_entropy():
    # F(z) = -q1 log q1 - r log r + z log z, with q1 = z - r the diagonal entry
    for q in (0.3, 0.6, 0.9):
        r = (1 - q) / 3
        for z in np.linspace(r + 0.01, 1, 9):
            q1 = z - r
            expected = -q1 * math.log2(q1) - r * math.log2(r) + z * math.log2(z)
            assert F_of_z(z, q) == pytest.approx(expected, abs=1e-13)


def test_F_of_z_natural_log_variant():
    assert F_of_z(0.5, 0.25, base=math.e) == pytest.approx(0.5 * math.log(2), abs=1e-15)


def test_entropy_rho_B_examples():
    assert entropy_rho_B(1.0, 1.0) == 1.0
    assert entropy_rho_B(0.0, 0.3) == 1.0
    c = pure_concurrence(S06)
    assert entropy_rho_B(1.0, c) == pytest.approx(h_direct(1 / 17), abs=1e-12)
    assert entropy_rho_B(1.0, c) == pytest.approx(0.322757, abs=1e-6)


def test_entropy_rho_AB_matches_eigensolve():
    for p in np.linspace(0, 1, 11):
        rho = werner_from_basis(p, S06)
        assert entropy_rho_AB(p) == pytest.approx(von_neumann_entropy(rho), abs=1e-12)


def test_discord_zero_at_p0_for_every_basis():
    for s in np.linspace(0, 0.99, 34):
        assert abs(discord_analytic(0.0, CatBasis.from_overlap(s))) <= 1e-12


def test_natural_log_breaks_zero_discord():
    dc = discord_analytic(0.0, S06, log_base=math.e)
    assert dc == pytest.approx(1 + math.log(2) - 2, abs=1e-12)


@pytest.mark.parametrize("kappa", [0.5, 1.0, 1.5])
@pytest.mark.parametrize("alpha", [0.1, 0.5, 1.0])
def test_discord_equals_eof_for_pure_state(kappa, alpha):
    b = cat_basis(BG(kappa), alpha)
    c = pure_concurrence(b)
    dc = discord_analytic(1.0, b)
    assert dc == pytest.approx(eof(concurrence_closed(1.0, c)), abs=1e-12)
    assert dc == pytest.approx(binary_entropy(0.5 - 0.5 * math.sqrt(1 - c * c)), abs=1e-12)


def test_discord_bounded():
    for s in np.linspace(0, 0.99, 12):
        b = CatBasis.from_overlap(s)
        for p in np.linspace(0, 1, 21):
            assert -1e-12 <= discord_analytic(p, b) <= 1.0 + 1e-12


def test_discord_rejects_bad_p():
    with pytest.raises(OutOfDomain):
        discord_analytic(1.5, S06)
