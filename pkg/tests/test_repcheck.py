from fractions import Fraction

import pytest

from ospcentre import repcheck
from ospcentre.brauer import brauer_symmetriser, group_symmetriser
from ospcentre.coeff import gamma, ratfun_eval
from ospcentre.errors import InvalidArgument, PoleAtEvaluation
from ospcentre.superspace import Signature, build_P, build_Q, product, rho
from ospcentre.uea import evaluate, f_matrix, f_tau

S11, S30 = Signature(1, 1), Signature(3, 0)


def test_cyclic1_example():
    x = (("s", 1, 2),)
    y = (("f", -1, 1), ("f", -1, 2))
    assert repcheck.cyclic1(S11, 2, x, y) == (True, None)


def test_cyclic1_rejects_affine_x():
    ok, witness = repcheck.cyclic1(S11, 1, (("f", 1, 1),), (("f", -1, 1),))
    assert not ok and witness


def test_symmetriser_trace_full_sandwich():
    # γ_2 Q^(2) S^(2) F[-1]_1 F[-1]_2 Q^(2) = Q^(2) H^(2) F[-1]_1 F[-1]_2 Q^(2) on legs 0..4
    sig, L = S30, 5
    Q = product(build_Q(1, 3, L, sig, base=0), build_Q(2, 4, L, sig, base=0))
    g = ratfun_eval(gamma(2), sig.omega)
    S = rho(brauer_symmetriser(2), sig, L, (1, 2)).scale(g)
    H = rho(group_symmetriser(2), sig, L, (1, 2))
    F = product(f_matrix(-1, 1, L, sig, base=0), f_matrix(-1, 2, L, sig, base=0))
    lhs, rhs = product(Q, S, F, Q), product(Q, H, F, Q)
    assert evaluate(lhs, "U") == evaluate(rhs, "U")
    assert evaluate(product(Q, S.scale(2), F, Q), "U") != evaluate(rhs, "U")
    assert repcheck.symmetriser_trace(sig, (-1, -1))[0]


def test_symmetriser_trace_without_gamma_fails():
    sig = S30
    L = 3
    S = rho(brauer_symmetriser(2), sig, L, (1, 2))
    H = rho(group_symmetriser(2), sig, L, (1, 2))
    F = product(f_matrix(-1, 1, L, sig, base=0), f_matrix(-1, 2, L, sig, base=0))
    z = (("f", 1, 0),)
    lhs = repcheck._reduced(sig, 2, S, F, z, ())
    rhs = repcheck._reduced(sig, 2, H, F, z, ())
    assert not repcheck._compare(lhs, rhs, "vacuum")[0]


def test_qfq_example():
    assert repcheck.matrix_relation(S11, "QFQ", -1, 0)[0]
    with pytest.raises(InvalidArgument):
        repcheck.matrix_relation(S11, "nope", 0, 0)


@pytest.mark.parametrize("x", [
    (("f", -1, 1), ("s", 1, 2)),
    (("e", 0, 1), ("f", 1, 2), ("tau",)),
    (("ft", 1), ("ft", 2), ("f", 0, 0)),
    (("s", 0, 2), ("K",), ("f", -2, 1)),
])
def test_sandwich_reduction(x):
    assert repcheck.sandwich_check(S11, 2, x)


def test_manin_and_mutation():
    assert repcheck.manin(S11, 2, 1, 2)[0]
    assert repcheck.manin(S30, 3, 1, 3, (("f", 1, 2),), (("tau",),))[0]
    sig, L = S11, 3
    S = repcheck._sym_image(sig, 2, L, (1, 2))
    F = product(f_tau(1, L, sig, base=0), f_tau(2, L, sig, base=0))
    wrong = repcheck._compare(product(build_Q(1, 2, L, sig, base=0), F, S), product(F, S), "vacuum")
    assert not wrong[0]


def test_phi_independence():
    assert repcheck.phi_independence(S11, 2, 1, 2, (("f", 1, 0),), (("f", -1, 0),))[0]
    assert repcheck.phi_independence(S30, 3, 1, 3, (("tau",),), (("f", 0, 0),))[0]


@pytest.mark.parametrize("sig,m", [(S11, 2), (S30, 2), (S30, 3), (S11, 3)])
def test_f1_expansion(sig, m):
    z, w = (("f", 1, 0),), (("f", -1, 0),)
    assert repcheck.f1_expansion(sig, m, z, w)[0]


def test_f1_expansion_needs_k_factor():
    z, w = (("f", 1, 0),), (("f", -1, 0),)
    scal = Fraction(3 + 2, 3)
    good = [scal * (3 - 2), scal]
    assert repcheck.f1_expansion(S30, 2, z, w, kfactor=good)[0]
    assert not repcheck.f1_expansion(S30, 2, z, w, kfactor=[good[0], good[1] + 1])[0]
    assert not repcheck.f1_expansion(S30, 2, z, w, kfactor=[good[0] + 1, good[1]])[0]


def test_f1_expansion_pole():
    with pytest.raises(PoleAtEvaluation):
        repcheck.f1_expansion(Signature(0, 1), 3)


def test_campaign_small_and_deterministic():
    a = repcheck.verify_rep_identities(S11, 2, seed=5, instances=3)
    b = repcheck.verify_rep_identities(S11, 2, seed=5, instances=3)
    assert a.passed, a.to_text()
    assert a.to_json(timing=False) == b.to_json(timing=False)
    assert len(a.checks) == 3 * len(repcheck.IDENTITIES)
    with pytest.raises(InvalidArgument):
        repcheck.verify_rep_identities(S11, 4)


def test_word_text():
    assert repcheck.word_text(()) == "1"
    assert repcheck.word_text((("s", 1, 2), ("f", -1, 0), ("tau",))) == "s_12 f[-1]_0 τ"
