import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ospcentre.brauer import group_symmetriser
from ospcentre.osp import build_structure
from ospcentre.repcheck import matrix_relation
from ospcentre.superspace import Signature, TensorOperator, compose, partial_supertrace, product, rho
from ospcentre.uea import (
    KLETTER,
    TAU,
    VacuumElement,
    engine,
    evaluate,
    f_matrix,
    letter,
    normal_order,
    scalar_value,
    u_multiply,
)

S11 = Signature(1, 1)


def test_nonnegative_modes_kill_vacuum():
    st = build_structure(S11)
    for a in range(st.dim):
        assert normal_order([letter(st, a, 0)], S11).is_zero()
        assert normal_order([letter(st, a, 2)], S11).is_zero()
    assert normal_order([TAU], S11).is_zero()


def test_tau_lowers_mode():
    st = build_structure(Signature(3, 0))
    sig = st.sig
    x = letter(st, 0, -1)
    assert normal_order([TAU, x], sig) == normal_order([letter(st, 0, -2)], sig)


def test_single_contraction():
    st = build_structure(Signature(3, 0))
    sig = st.sig
    a = 0  # even, and [x, x] = 0
    got = normal_order([letter(st, a, 1), letter(st, a, -1)], sig)
    assert got == VacuumElement(sig, {((), 1): st.form[a][a]})


def test_k_letter_is_central_marker():
    st = build_structure(S11)
    x = letter(st, 0, -1)
    got = normal_order([KLETTER, x], S11)
    assert got == VacuumElement(S11, {((x,), 1): 1})


def test_odd_square_reduces_to_half_bracket():
    st = build_structure(S11)
    odd = next(a for a in range(st.dim) if st.parity[a])
    x = letter(st, odd, -1)
    got = normal_order([x, x], S11, "U")
    expected = VacuumElement(S11)
    for c, v in st.structconst[odd][odd].items():
        expected = expected + normal_order([letter(st, c, -2)], S11, "U").scale(Fraction(v, 2))
    assert got == expected


def test_swap_example():
    st = build_structure(Signature(2, 1))
    sig = st.sig
    x, y = letter(st, 0, -1), letter(st, 1, -2)
    got = normal_order([x, y], sig, "U")
    sign = -1 if st.parity[0] * st.parity[1] else 1
    expected = normal_order([y, x], sig, "U").scale(sign)
    for c, v in st.structconst[0][1].items():
        expected = expected + normal_order([letter(st, c, -3)], sig, "U").scale(v)
    assert got == expected
    assert got.terms != {((x, y), 0): 1}


def words(sig):
    st_ = build_structure(sig)
    lt = st.builds(lambda a, r: letter(st_, a, r), st.integers(0, st_.dim - 1), st.integers(-2, 2))
    return st.lists(st.one_of(lt, st.just(TAU)), min_size=2, max_size=5)


@pytest.mark.parametrize("sig", [S11, Signature(2, 1), Signature(3, 0)])
@pytest.mark.parametrize("mode", ["vacuum", "U"])
@given(data=st.data())
def test_confluence(sig, mode, data):
    w = data.draw(words(sig))
    i = data.draw(st.integers(0, len(w) - 2))
    g, h = w[i], w[i + 1]
    eng = engine(sig, mode)
    lhs = VacuumElement(sig, eng.word(tuple(w)))
    swapped = w[:i] + [h, g] + w[i + 2:]
    sign = -1 if g[2] and h[2] else 1
    rhs = VacuumElement(sig, eng.word(tuple(swapped))).scale(sign)
    lin, central = eng.bracket(g, h)
    for lt, c in lin:
        rhs = rhs + VacuumElement(sig, eng.word(tuple(w[:i] + [lt] + w[i + 2:]))).scale(c)
    if central:
        rhs = rhs + VacuumElement(sig, eng.word(tuple(w[:i] + [KLETTER] + w[i + 2:]))).scale(central)
    assert lhs == rhs


@given(data=st.data())
def test_u_multiply_parity_and_unit(data):
    sig = S11
    st_ = build_structure(sig)
    neg = st.builds(lambda a, r: letter(st_, a, r), st.integers(0, st_.dim - 1), st.integers(-3, -1))
    w1 = data.draw(st.lists(neg, min_size=1, max_size=3))
    w2 = data.draw(st.lists(neg, min_size=1, max_size=3))
    x, y = normal_order(w1, sig, "U"), normal_order(w2, sig, "U")
    xy = u_multiply(x, y)
    assert xy == normal_order(w1 + w2, sig, "U")
    p = (sum(g[2] for g in w1) + sum(g[2] for g in w2)) % 2
    assert all(sum(g[2] for g in mono) % 2 == p for mono, _ in xy.terms)
    assert xy.k_degree() == 0
    assert u_multiply(VacuumElement.vacuum(sig), x) == x


@pytest.mark.parametrize("sig", [S11, Signature(2, 1), Signature(3, 0)])
def test_str_f_vanishes(sig):
    for r in (-2, -1, 0, 1):
        tr = partial_supertrace(f_matrix(r, 1, 1, sig), [0])
        assert tr.is_zero()


def test_mode_zero_kills_vacuum_termwise():
    vals = evaluate(f_matrix(0, 1, 2, S11))
    assert all(not v for v in vals.values())


def test_h_f_f_trace_even_and_k_linear():
    sig = S11
    H = rho(group_symmetriser(2), sig)
    x = product(H, f_matrix(-1, 1, 2, sig), f_matrix(-1, 2, 2, sig))
    v = scalar_value(partial_supertrace(x, [0, 1]))
    assert v.is_even() and v.k_degree() <= 1 and v.modes_negative()


@pytest.mark.parametrize("sig", [S11, Signature(2, 1)])
@pytest.mark.parametrize("kind", ["QFQ", "PF", "QF", "FQ", "tau"])
def test_single_matrix_relations(sig, kind):
    for r in range(-2, 3):
        ok, witness = matrix_relation(sig, kind, r, 0)
        assert ok, witness


@pytest.mark.parametrize("sig", [S11, Signature(2, 1)])
def test_ff_matrix_relation(sig):
    for r in range(-2, 3):
        for s in range(-2, 3):
            ok, witness = matrix_relation(sig, "FF", r, s)
            assert ok, (r, s, witness)


def test_ff_relation_detects_missing_central_term():
    sig = S11
    from ospcentre.superspace import build_P, build_Q
    from ospcentre.uea import k_op
    from ospcentre.repcheck import _compare

    Fa = f_matrix(1, 1, 2, sig)
    Gb = f_matrix(-1, 2, 2, sig)
    G0 = f_matrix(0, 2, 2, sig)
    PQ = build_P(1, 2, 2, sig) - build_Q(1, 2, 2, sig)
    lhs = compose(Fa, Gb) - compose(Gb, Fa)
    rhs = compose(PQ, G0) - compose(G0, PQ)
    assert not _compare(lhs, rhs, "U")[0]
    assert _compare(lhs, rhs + compose(PQ, k_op(2, sig)), "U")[0]
