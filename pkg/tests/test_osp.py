import itertools
import random
from fractions import Fraction

import pytest

from ospcentre.errors import InvalidArgument
from ospcentre.osp import (
    GlElement,
    affine_bracket,
    build_structure,
    displayed_bracket,
    expected_dimension,
    f_element,
    gl_bracket,
)
from ospcentre.superspace import Signature

SIGS = [Signature(1, 1), Signature(2, 1), Signature(3, 0), Signature(0, 1), Signature(3, 1), Signature(0, 2)]


def combo(st, coeffs):
    out = GlElement(st.sig)
    for a, c in coeffs.items():
        out = out + st.basis[a].scale(c)
    return out


def bracket_coords(st, x: dict, y: dict) -> dict:
    out: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for c, v in st.structconst[a][b].items():
                out[c] = out.get(c, 0) + ca * cb * v
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("sig,dim", [(Signature(1, 1), 5), (Signature(3, 0), 3), (Signature(0, 1), 3),
                                     (Signature(2, 1), 8), (Signature(3, 1), 12)])
def test_dimension(sig, dim):
    assert build_structure(sig).dim == dim == expected_dimension(sig)


def test_f_examples():
    sig = Signature(0, 1)
    assert f_element(1, 2, sig) == GlElement(sig, {(1, 2): 2})
    sig = Signature(1, 1)
    total = GlElement(sig)
    for i in sig.indices():
        total = total + f_element(i, i, sig)
    assert total.is_zero()
    with pytest.raises(InvalidArgument):
        f_element(0, 1, sig)


@pytest.mark.parametrize("sig", SIGS)
def test_f_skew_relation(sig):
    p = sig.parity
    for i, j in itertools.product(sig.indices(), repeat=2):
        s = sig.sign(i) * sig.sign(j) * (-1) ** (p(i) * p(j) + p(j))
        assert (f_element(i, j, sig) + f_element(sig.prime(j), sig.prime(i), sig).scale(s)).is_zero()


@pytest.mark.parametrize("sig", SIGS)
def test_closure_and_displayed_bracket(sig):
    st = build_structure(sig)
    for (i, j), (k, l) in itertools.product(itertools.product(sig.indices(), repeat=2), repeat=2):
        gl = gl_bracket(f_element(i, j, sig), f_element(k, l, sig))
        assert gl == displayed_bracket(sig, (i, j), (k, l))
        st.coords(gl)  # raises when the bracket leaves osp


@pytest.mark.parametrize("sig", SIGS[:5])
def test_structure_constants_reproduce_gl_bracket(sig):
    st = build_structure(sig)
    for a, b in itertools.product(range(st.dim), repeat=2):
        assert combo(st, st.structconst[a][b]) == gl_bracket(st.basis[a], st.basis[b])


@pytest.mark.parametrize("sig", SIGS[:5])
def test_super_antisymmetry_and_jacobi(sig):
    st = build_structure(sig)
    par = st.parity
    for a, b in itertools.product(range(st.dim), repeat=2):
        s = -1 if par[a] * par[b] else 1
        neg = {c: -s * v for c, v in st.structconst[b][a].items()}
        assert st.structconst[a][b] == neg
    for a, b, c in itertools.product(range(st.dim), repeat=3):
        x, y, z = {a: 1}, {b: 1}, {c: 1}
        lhs = bracket_coords(st, x, bracket_coords(st, y, z))
        r1 = bracket_coords(st, bracket_coords(st, x, y), z)
        r2 = bracket_coords(st, y, bracket_coords(st, x, z))
        s = -1 if par[a] * par[b] else 1
        rhs = dict(r1)
        for k, v in r2.items():
            rhs[k] = rhs.get(k, 0) + s * v
        assert lhs == {k: v for k, v in rhs.items() if v}


@pytest.mark.parametrize("sig", SIGS[:5])
def test_form_is_half_supertrace_and_invariant(sig):
    st = build_structure(sig)
    d = st.dim
    for a, b in itertools.product(range(d), repeat=2):
        expected = Fraction(1, 2) * st.basis[a].matrix_product(st.basis[b]).supertrace()
        assert st.form[a][b] == expected
        s = -1 if st.parity[a] * st.parity[b] else 1
        assert st.form[a][b] == s * st.form[b][a]

    def kappa(x, y):
        return sum((cx * cy * st.form[p][q] for p, cx in x.items() for q, cy in y.items()), Fraction(0))

    for a, b, c in itertools.product(range(d), repeat=3):
        xy = bracket_coords(st, {a: 1}, {b: 1})
        yz = bracket_coords(st, {b: 1}, {c: 1})
        assert kappa(xy, {c: 1}) == kappa({a: 1}, yz)


def test_dual_coxeter():
    for sig in SIGS:
        assert build_structure(sig).dual_coxeter == sig.M - 2 * sig.n - 2


@pytest.mark.parametrize("sig", [Signature(1, 1), Signature(3, 0)])
def test_affine_bracket_examples(sig):
    st = build_structure(sig)
    rng = random.Random(1)
    for a, b in itertools.product(range(st.dim), repeat=2):
        assert affine_bracket(st, (a, 0), (b, 0)).central == 0
        r, s = rng.randint(-2, 2), rng.randint(-2, 2)
        one = affine_bracket(st, (a, r), (b, s))
        two = affine_bracket(st, (b, s), (a, r))
        sign = -1 if st.parity[a] * st.parity[b] else 1
        assert one.linear == {k: -sign * v for k, v in two.linear.items()}
        assert one.central == -sign * two.central
        if r + s != 0:
            assert one.central == 0
    for a in range(st.dim):
        if st.parity[a] == 0 and not st.structconst[a][a]:
            assert affine_bracket(st, (a, 1), (a, -1)).central == st.form[a][a]
