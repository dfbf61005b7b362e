"""Representation-level checks of the identities in the extended Brauer algebra.

Legs are labelled ``0..k`` (0-based, leg 0 is the auxiliary copy).  Every
sandwich ``Q^(k) X Q^(k)`` with ``X`` supported on legs ``0..k`` equals
``str_{1..k}(X) · Q^(k)``, so each identity is compared through the leg-0
operator ``str_{1..k}(X)``.  Both sides are normal ordered on the vacuum (or in
U) with K symbolic and compared exactly.

Random words are drawn from tokens:

``("s", a, b)``, ``("e", a, b)``, ``("phi", a, b)``  P_ab, Q_ab, P_ab - Q_ab
``("f", r, b)``                                    F[r]_b
``("ft", b)``                                      f_b = τ + F[-1]_b
``("tau",)``, ``("K",)``
"""
from __future__ import annotations

import random
from fractions import Fraction

from .brauer import brauer_symmetriser, group_symmetriser
from .coeff import gamma, ratfun_eval
from .errors import InvalidArgument, PoleAtEvaluation
from .reports import VerificationReport
from .superspace import (
    Signature,
    TensorOperator,
    build_P,
    build_Q,
    compose,
    pad_legs,
    product,
    rho,
    supertrace_product,
)
from .uea import VacuumElement, evaluate, f_matrix, f_tau, k_op, tau_op

MODES = (-2, -1, 0, 1, 2)
IDENTITIES = ("cyclic1", "cyclic2", "manin", "phi_independence", "f1_expansion", "symmetriser_trace",
              "matrix")


def token_op(tok, sig: Signature, L: int) -> TensorOperator:
    kind = tok[0]
    if kind == "s":
        return build_P(tok[1], tok[2], L, sig, base=0)
    if kind == "e":
        return build_Q(tok[1], tok[2], L, sig, base=0)
    if kind == "phi":
        return build_P(tok[1], tok[2], L, sig, base=0) - build_Q(tok[1], tok[2], L, sig, base=0)
    if kind == "f":
        return f_matrix(tok[1], tok[2], L, sig, base=0)
    if kind == "ft":
        return f_tau(tok[1], L, sig, base=0)
    if kind == "tau":
        return tau_op(L, sig)
    if kind == "K":
        return k_op(L, sig)
    raise InvalidArgument(f"unknown token {tok!r}")


def token_text(tok) -> str:
    kind = tok[0]
    if kind in ("s", "e", "phi"):
        name = {"s": "s", "e": "eps", "phi": "phi"}[kind]
        return f"{name}_{tok[1]}{tok[2]}"
    if kind == "f":
        return f"f[{tok[1]}]_{tok[2]}"
    if kind == "ft":
        return f"f_{tok[1]}"
    return "τ" if kind == "tau" else "K"


def word_text(word) -> str:
    return " ".join(token_text(t) for t in word) if word else "1"


def word_op(word, sig: Signature, L: int) -> TensorOperator:
    if not word:
        return TensorOperator.identity(sig, L)
    return product(*[token_op(t, sig, L) for t in word])


def _brauer_tokens(lo: int, hi: int):
    """Adjacent generators s_a, ε_a acting on legs a, a+1 for lo <= a < hi."""
    return [(kind, a, a + 1) for a in range(lo, hi) for kind in ("s", "e")]


def _affine_tokens(legs):
    return [("f", r, b) for b in legs for r in MODES] + [("tau",), ("K",)]


def random_word(rng: random.Random, tokens, lo: int, hi: int):
    return tuple(rng.choice(tokens) for _ in range(rng.randint(lo, hi)))


def _sym_image(sig, k, L, legs, group=False):
    """Image of s^(k) (or h^(k)) placed on ``legs``."""
    x = group_symmetriser(k) if group else brauer_symmetriser(k)
    return rho(x, sig, L, tuple(legs))


def _compare(lhs, rhs, mode):
    a, b = evaluate(lhs, mode), evaluate(rhs, mode)
    if a == b:
        return True, None
    for legs in sorted(set(a) | set(b), key=repr):
        if a.get(legs) != b.get(legs):
            da = VacuumElement(lhs.sig, a.get(legs, {}))
            db = VacuumElement(lhs.sig, b.get(legs, {}))
            return False, f"legs {legs}: {da.to_text()} vs {db.to_text()}"
    return False, "differ"


def _str(x, y, legs):
    return supertrace_product(x, y, legs)


# -- the identities -------------------------------------------------------------


def cyclic1(sig, k, x, y, mode="vacuum"):
    """``Q^(k) x y Q^(k) = Q^(k) y x Q^(k)`` with x in B_k and y on legs 0..k."""
    L = k + 1
    X, Y = word_op(x, sig, L), word_op(y, sig, L)
    legs = range(1, L)
    return _compare(_str(X, Y, legs), _str(Y, X, legs), mode)


def cyclic2(sig, k, x, y, mode="vacuum"):
    """Same identity with x on legs 1..k and y in {s_0a, ε_0a}."""
    return cyclic1(sig, k, x, y, mode)


def manin(sig, k, a, b, z=(), w=(), mode="vacuum"):
    """``z s_ab f_1…f_k s^(k) w = z f_1…f_k s^(k) w`` on legs 1..k (leg 0 idle)."""
    L = k + 1
    S = _sym_image(sig, k, L, range(1, L))
    F = word_op(tuple(("ft", c) for c in range(1, L)), sig, L)
    Z, W = word_op(z, sig, L), word_op(w, sig, L)
    rhs = product(Z, F, S, W)
    lhs = product(Z, build_P(a, b, L, sig, base=0), F, S, W)
    return _compare(lhs, rhs, mode)


def _reduced(sig, k, left, right, z, w):
    """``z · str_{1..k}(left · right) · w`` as a one-leg operator."""
    L = k + 1
    core = _str(left, right, range(1, L))
    return product(word_op(z, sig, 1), core, word_op(w, sig, 1))


def phi_independence(sig, k, a, b, z=(), w=(), mode="vacuum"):
    """``Q^(k) s^(k) φ_0a f_1…f_k Q^(k)`` does not depend on a."""
    L = k + 1
    S = _sym_image(sig, k, L, range(1, L))
    F = word_op(tuple(("ft", c) for c in range(1, L)), sig, L)
    sides = []
    for c in (a, b):
        sides.append(_reduced(sig, k, S, compose(token_op(("phi", 0, c), sig, L), F), z, w))
    return _compare(sides[0], sides[1], mode)


def f1_expansion_parts(sig, m, z=(), w=(), mode="vacuum"):
    """Evaluated pieces ``(lhs, first, rest)`` of the f[1]_0 expansion, reduced to leg 0.

    The identity reads ``lhs = (ω+K-2)(ω+2m-2)/(ω+2m-4) · first + rest``.
    """
    if m < 2:
        raise InvalidArgument("needs m >= 2")
    L = m + 1
    S = _sym_image(sig, m, L, range(1, L))
    f = [None] + [token_op(("ft", c), sig, L) for c in range(1, L)]
    F_all = product(*f[1:])
    F_head = product(*f[1:m])
    f0m = f_matrix(0, m, L, sig, base=0)
    phi0m = token_op(("phi", 0, m), sig, L)
    one = lambda tok: token_op(tok, sig, 1)  # noqa: E731

    def red(left, right):
        return _str(left, right, range(1, L))

    lhs = compose(one(("f", 1, 0)), red(S, F_all))

    # first term lives on legs 0..m-1
    Lm = m
    Sm = _sym_image(sig, m - 1, Lm, range(1, Lm))
    Fm = product(*[token_op(("ft", c), sig, Lm) for c in range(1, Lm)])
    acc = None
    for a in range(1, m):
        t = _str(Sm, compose(token_op(("phi", 0, a), sig, Lm), Fm), range(1, Lm))
        acc = t if acc is None else acc + t
    first = acc
    rest = (
        red(compose(phi0m, S), compose(F_head, f0m)).scale(-m)
        + compose(red(S, F_head), one(("f", 0, 0))).scale(m)
        + red(S, product(phi0m, F_head, f0m)).scale(m)
        + compose(red(S, F_all), one(("f", 1, 0)))
    )
    Z, W = word_op(z, sig, 1), word_op(w, sig, 1)
    return tuple(evaluate(product(Z, x, W), mode) for x in (lhs, first, rest))


def f1_expansion(sig, m, z=(), w=(), mode="vacuum", kfactor=None):
    """``lhs = kfactor(K) · first + rest``; ``kfactor`` defaults to ``(ω+K-2)(ω+2m-2)/(ω+2m-4)``.

    ``kfactor`` is a coefficient list in K (used by the tests to perturb it).
    """
    w0 = sig.omega
    if kfactor is None:
        if w0 + 2 * m - 4 == 0:
            raise PoleAtEvaluation(f"(ω+{2 * m - 2})/(ω+{2 * m - 4}) has a pole", w0)
        scal = Fraction(w0 + 2 * m - 2, w0 + 2 * m - 4)
        kfactor = [scal * (w0 - 2), scal]
    ev_l, ev_first, ev_rest = f1_expansion_parts(sig, m, z, w, mode)
    rhs = {}
    for legs in set(ev_first) | set(ev_rest):
        v = VacuumElement(sig, ev_first.get(legs, {})).times_K(kfactor)
        v = v + VacuumElement(sig, ev_rest.get(legs, {}))
        if not v.is_zero():
            rhs[legs] = v.terms
    if ev_l == rhs:
        return True, None
    for legs in sorted(set(ev_l) | set(rhs), key=repr):
        if ev_l.get(legs) != rhs.get(legs):
            return False, (f"legs {legs}: {VacuumElement(sig, ev_l.get(legs, {})).to_text()} vs "
                           f"{VacuumElement(sig, rhs.get(legs, {})).to_text()}")
    return False, "differ"


def symmetriser_trace(sig, modes, z=(), w=(), mode="vacuum"):
    """``γ_ℓ str S^(ℓ) F[r_1]_1…F[r_ℓ]_ℓ = str H^(ℓ) F[r_1]_1…F[r_ℓ]_ℓ`` with leg-0 factors."""
    ell = len(modes)
    L = ell + 1
    g = ratfun_eval(gamma(ell), sig.omega)
    S = _sym_image(sig, ell, L, range(1, L)).scale(g)
    H = _sym_image(sig, ell, L, range(1, L), group=True)
    F = product(*[f_matrix(r, a + 1, L, sig, base=0) for a, r in enumerate(modes)])
    return _compare(_reduced(sig, ell, S, F, z, w), _reduced(sig, ell, H, F, z, w), mode)


def matrix_relation(sig, kind, r, s, mode="U"):
    """The relations of the affine extension on two legs (0, 1), normal ordered in U."""
    L = 2
    P, Q = build_P(0, 1, L, sig, base=0), build_Q(0, 1, L, sig, base=0)
    Fa, Fb = f_matrix(r, 0, L, sig, base=0), f_matrix(r, 1, L, sig, base=0)
    zero = TensorOperator.zero(sig, L)
    if kind == "QFQ":
        return _compare(product(Q, Fa, Q), zero, mode)
    if kind == "PF":
        return _compare(compose(P, Fa), compose(Fb, P), mode)
    if kind == "QF":
        return _compare(compose(Q, Fa + Fb), zero, mode)
    if kind == "FQ":
        return _compare(compose(Fa + Fb, Q), zero, mode)
    if kind == "tau":
        lhs = compose(Fa, tau_op(L, sig)) - compose(tau_op(L, sig), Fa)
        return _compare(lhs, f_matrix(r - 1, 0, L, sig, base=0).scale(r), mode)
    if kind == "FF":
        Gb = f_matrix(s, 1, L, sig, base=0)
        Gsum = f_matrix(r + s, 1, L, sig, base=0)
        lhs = compose(Fa, Gb) - compose(Gb, Fa)
        rhs = compose(P - Q, Gsum) - compose(Gsum, P - Q)
        if r + s == 0 and r:
            rhs = rhs + compose(P - Q, k_op(L, sig)).scale(r)
        return _compare(lhs, rhs, mode)
    raise InvalidArgument(f"unknown relation {kind!r}")


# -- the campaign -------------------------------------------------------------


def _draw(name, sig, m, rng):
    """One random instance: (label, thunk)."""
    if name == "cyclic1":
        k = rng.randint(2, m) if m >= 2 else 1
        x = random_word(rng, _brauer_tokens(1, k), 1, 3) if k >= 2 else ()
        y = random_word(rng, _brauer_tokens(0, k) + _affine_tokens(range(0, k + 1)), 1, 3)
        return f"k={k} x={word_text(x)} y={word_text(y)}", lambda: cyclic1(sig, k, x, y)
    if name == "cyclic2":
        k = rng.randint(1, m)
        x = random_word(rng, _brauer_tokens(1, k) + _affine_tokens(range(1, k + 1)), 1, 3)
        a = rng.randint(1, k)
        y = ((rng.choice(("s", "e")), 0, a),)
        return f"k={k} x={word_text(x)} y={word_text(y)}", lambda: cyclic2(sig, k, x, y)
    if name == "manin":
        k = rng.randint(2, m)
        a = rng.randint(1, k - 1)
        b = rng.randint(a + 1, k)
        fam = _brauer_tokens(1, k) + _affine_tokens(range(1, k + 1))
        z = random_word(rng, fam, 0, 2)
        w = random_word(rng, fam, 0, 1)
        return (f"k={k} a={a} b={b} z={word_text(z)} w={word_text(w)}",
                lambda: manin(sig, k, a, b, z, w))
    leg0 = [("f", r, 0) for r in (-2, -1, 0, 1)] + [("tau",), ("K",)]
    z = random_word(rng, leg0, 0, 2)
    w = random_word(rng, leg0, 0, 2)
    tail = f"z={word_text(z)} w={word_text(w)}"
    if name == "phi_independence":
        k = rng.randint(2, m)
        a = rng.randint(1, k - 1)
        b = rng.randint(a + 1, k)
        return f"k={k} a={a} b={b} {tail}", lambda: phi_independence(sig, k, a, b, z, w)
    if name == "f1_expansion":
        k = rng.randint(2, m)
        return f"m={k} {tail}", lambda: f1_expansion(sig, k, z, w)
    if name == "symmetriser_trace":
        ell = rng.randint(1, m)
        modes = tuple(rng.randint(-3, 2) for _ in range(ell))
        return f"modes={modes} {tail}", lambda: symmetriser_trace(sig, modes, z, w)
    if name == "matrix":
        kind = rng.choice(("QFQ", "PF", "QF", "FQ", "tau", "FF"))
        r = rng.choice(MODES)
        s = rng.choice(MODES) if rng.random() < 0.7 else -r
        return f"{kind} r={r} s={s}", lambda: matrix_relation(sig, kind, r, s)
    raise InvalidArgument(f"unknown identity {name!r}")


def verify_rep_identities(sig: Signature, m: int, seed: int = 0, instances: int = 50,
                          identities=IDENTITIES) -> VerificationReport:
    if not 2 <= m <= 3:
        raise InvalidArgument(f"need 2 <= m <= 3, got {m}")
    if instances < 1:
        raise InvalidArgument("instances must be positive")
    report = VerificationReport(
        "rep", {"M": sig.M, "n": sig.n, "m": m, "seed": seed, "instances": instances}, sort_checks=False
    )
    for name in identities:
        rng = random.Random(f"{seed}:{name}:{sig.M}:{sig.n}:{m}")
        for i in range(instances):
            label, thunk = _draw(name, sig, m, rng)
            check = f"{name} #{i:02d} {label}"
            try:
                ok, witness = thunk()
            except PoleAtEvaluation:
                report.skip(check)
                continue
            report.add(check, ok, witness)
    return report.finish()


def sandwich_check(sig: Signature, k: int, x) -> bool:
    """Direct check of ``Q^(k) X Q^(k) = str_{1..k}(X) Q^(k)`` on 2k+1 legs for a word X on legs 0..k."""
    L = 2 * k + 1
    X = pad_legs(word_op(x, sig, k + 1), L)
    Qk = product(*[build_Q(a, k + a, L, sig, base=0) for a in range(1, k + 1)])
    lhs = product(Qk, X, Qk)
    tr = _str(word_op(x, sig, k + 1), TensorOperator.identity(sig, k + 1), range(1, k + 1))
    rhs = compose(pad_legs(tr, L, [0]), Qk)
    return evaluate(lhs, "U") == evaluate(rhs, "U")
