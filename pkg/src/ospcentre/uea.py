"""PBW normal ordering for the affine superalgebra extended by τ.

A letter is a tuple ``(r, α, p)``: mode ``r``, basis index ``α`` of the osp
basis and parity ``p``.  The derivation τ is the letter :data:`TAU`, which
sorts after every affine letter.  Monomials are sorted tuples of letters with
odd letters strictly increasing.  Coefficients carry the power of the central
element ``K`` in the key, so an element is a dict ``(monomial, kdeg) -> Fraction``.

Two engines are provided.  In ``"vacuum"`` mode a letter reaching the vacuum
vector is dropped when it is τ or has mode ``>= 0``; the result lives in the
vacuum module.  In ``"U"`` mode nothing is dropped and the result is the PBW
normal form in the enveloping algebra itself.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coeff import KVAR, VarPoly
from .errors import InvalidArgument
from .osp import OspStructure, build_structure
from .superspace import Signature, TensorOperator, expand_legs

TAU = (float("inf"), -1, 0)
KLETTER = (float("inf"), -2, 0)  # the central element K inside a word
HALF = Fraction(1, 2)


def letter(st: OspStructure, alpha: int, r: int):
    return (r, alpha, st.parity[alpha])


def is_tau(g) -> bool:
    return g == TAU


def _acc(out: dict, key, val):
    new = out.get(key, 0) + val
    if new == 0:
        out.pop(key, None)
    else:
        out[key] = new


class PBWEngine:
    """Memoised left action of a letter on a normally ordered monomial."""

    def __init__(self, st: OspStructure, mode: str = "vacuum"):
        if mode not in ("vacuum", "U"):
            raise InvalidArgument(f"unknown mode {mode!r}")
        self.st = st
        self.mode = mode
        self._act: dict = {}
        self._word: dict = {(): {((), 0): Fraction(1)}}

    def bracket(self, g, h):
        """``[g, h]`` as (list of (letter, coeff), central coefficient)."""
        if is_tau(g):
            if is_tau(h):
                return [], 0
            s, b, p = h
            return ([((s - 1, b, p), Fraction(-s))] if s else []), 0
        if is_tau(h):
            r, a, p = g
            return ([((r - 1, a, p), Fraction(r))] if r else []), 0
        r, a, _ = g
        s, b, _ = h
        st = self.st
        lin = [((r + s, c, st.parity[c]), v) for c, v in st.structconst[a][b].items()]
        central = r * st.form[a][b] if r + s == 0 and r else 0
        return lin, central

    def act(self, g, mono) -> dict:
        key = (g, mono)
        res = self._act.get(key)
        if res is not None:
            return res
        res = self._compute(g, mono)
        self._act[key] = res
        return res

    def _compute(self, g, mono) -> dict:
        if g == KLETTER:
            return {(mono, 1): Fraction(1)}
        if not mono:
            if self.mode == "vacuum" and (is_tau(g) or g[0] >= 0):
                return {}
            return {((g,), 0): Fraction(1)}
        h = mono[0]
        if g < h:
            return {((g,) + mono, 0): Fraction(1)}
        rest = mono[1:]
        if g == h:
            if g[2]:
                return self._bracket_act(g, g, rest, HALF)
            return {((g,) + mono, 0): Fraction(1)}
        out: dict = {}
        sign = -1 if (g[2] and h[2]) else 1
        for (m2, kd), c in self.act(g, rest).items():
            for (m3, kd3), c3 in self.act(h, m2).items():
                _acc(out, (m3, kd + kd3), sign * c * c3)
        for k, v in self._bracket_act(g, h, rest, 1).items():
            _acc(out, k, v)
        return out

    def _bracket_act(self, g, h, rest, scale) -> dict:
        lin, central = self.bracket(g, h)
        out: dict = {}
        for lt, c in lin:
            for k, v in self.act(lt, rest).items():
                _acc(out, k, scale * c * v)
        if central:
            _acc(out, (rest, 1), scale * central)
        return out

    def act_element(self, g, elem: dict) -> dict:
        out: dict = {}
        for (mono, kd), c in elem.items():
            for (m2, kd2), c2 in self.act(g, mono).items():
                _acc(out, (m2, kd + kd2), c * c2)
        return out

    def word(self, word) -> dict:
        """Normal form of ``word`` applied to the vacuum (or to 1 in U mode)."""
        word = tuple(word)
        res = self._word.get(word)
        if res is None:
            res = self.act_element(word[0], self.word(word[1:]))
            self._word[word] = res
        return res

    def multiply(self, x: dict, y: dict) -> dict:
        """Product of two normal forms (monomials of ``x`` act on ``y`` letter by letter)."""
        out: dict = {}
        for (mono, kd), c in x.items():
            v = y
            for g in reversed(mono):
                v = self.act_element(g, v)
            for (m2, kd2), c2 in v.items():
                _acc(out, (m2, kd + kd2), c * c2)
        return out


@lru_cache(maxsize=None)
def engine(sig: Signature, mode: str = "vacuum") -> PBWEngine:
    return PBWEngine(build_structure(sig), mode)


def letter_text(g) -> str:
    if g == KLETTER:
        return "K"
    return "τ" if is_tau(g) else f"F[{g[1]},{g[0]}]"


class VacuumElement:
    """Normal-form element ``Σ c · monomial|0>`` with coefficients polynomial in K."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms=None):
        self.sig = sig
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def vacuum(cls, sig):
        return cls(sig, {((), 0): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return VacuumElement(self.sig, out)

    def __neg__(self):
        return VacuumElement(self.sig, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return VacuumElement(self.sig, {k: v * c for k, v in self.terms.items()})

    def times_K(self, coeffs):
        """Multiply by the polynomial ``Σ coeffs[d] K^d``."""
        out: dict = {}
        for (mono, kd), v in self.terms.items():
            for d, c in enumerate(coeffs):
                if c:
                    _acc(out, (mono, kd + d), v * c)
        return VacuumElement(self.sig, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, VacuumElement):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    __hash__ = None

    def substitute_K(self, k) -> "VacuumElement":
        out: dict = {}
        for (mono, kd), v in self.terms.items():
            _acc(out, (mono, 0), v * Fraction(k) ** kd)
        return VacuumElement(self.sig, out)

    def k_degree(self) -> int:
        return max((kd for _, kd in self.terms), default=0)

    def is_even(self) -> bool:
        return all(sum(g[2] for g in mono) % 2 == 0 for mono, _ in self.terms)

    def modes_negative(self) -> bool:
        return all(not is_tau(g) and g[0] < 0 for mono, _ in self.terms for g in mono)

    def grouped(self):
        """``{monomial: VarPoly in K}``, sorted by monomial."""
        out: dict = {}
        for (mono, kd), v in self.terms.items():
            out.setdefault(mono, {})[kd] = v
        return {
            mono: VarPoly([ks.get(d, 0) for d in range(max(ks) + 1)], KVAR)
            for mono, ks in sorted(out.items())
        }

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, poly in self.grouped().items():
            body = "".join(letter_text(g) for g in mono) + "|0>"
            parts.append(f"({poly}) {body}")
        return " + ".join(parts)

    __str__ = to_text

    def to_json(self):
        return [
            {"monomial": [[g[1], g[0]] for g in mono], "coeffK": [str(c) for c in poly.coeffs]}
            for mono, poly in self.grouped().items()
        ]


def normal_order(word, sig: Signature, mode: str = "vacuum") -> VacuumElement:
    """Normal form of a word of letters applied to the vacuum (``mode="vacuum"``) or in U."""
    return VacuumElement(sig, engine(sig, mode).word(tuple(word)))


def u_multiply(x: VacuumElement, y: VacuumElement) -> VacuumElement:
    """Product in U(t^{-1}osp[t^{-1}]) of two elements with negative modes."""
    if x.sig != y.sig:
        raise InvalidArgument("signature mismatch")
    return VacuumElement(x.sig, engine(x.sig, "U").multiply(x.terms, y.terms))


# -- U-valued tensor operators ------------------------------------------------


def f_matrix(r: int, a: int, L: int, sig: Signature, base: int = 1) -> TensorOperator:
    """``F[r]_a = Σ e_ij ⊗ F_ij[r] (-1)^{īj̄+ī+j̄}`` on leg ``a``."""
    pos = a - base
    if not 0 <= pos < L:
        raise InvalidArgument(f"leg {a} out of range for {L} legs (base {base})")
    return _f_matrix(r, pos, L, sig)


@lru_cache(maxsize=4096)
def _f_matrix(r, pos, L, sig):
    st = build_structure(sig)
    terms = {}
    for i in sig.indices():
        for j in sig.indices():
            pi, pj = sig.parity(i), sig.parity(j)
            sign = -1 if (pi * pj + pi + pj) & 1 else 1
            legs = [None] * L
            legs[pos] = (i, j)
            for alpha, c in st.f_coords(i, j):
                terms[(tuple(legs), ((r, alpha, st.parity[alpha]),))] = sign * c
    return TensorOperator(sig, L, terms)


def k_op(L: int, sig: Signature) -> TensorOperator:
    return TensorOperator.word_scalar(sig, L, (KLETTER,))


def tau_op(L: int, sig: Signature) -> TensorOperator:
    return TensorOperator.word_scalar(sig, L, (TAU,))


def f_tau(a: int, L: int, sig: Signature, base: int = 1) -> TensorOperator:
    """``f_a = τ + F[-1]_a``."""
    return tau_op(L, sig) + f_matrix(-1, a, L, sig, base)


def evaluate(op: TensorOperator, mode: str = "vacuum") -> dict:
    """Normal-order every coefficient word; returns ``{legs: {(mono, kdeg): c}}`` with legs explicit."""
    eng = engine(op.sig, mode)
    return expand_legs(op, range(op.L)).map_words(eng.word)


def scalar_value(op: TensorOperator, mode: str = "vacuum") -> VacuumElement:
    """The coefficient of a zero-leg operator as a :class:`VacuumElement`."""
    if op.L != 0:
        raise InvalidArgument("operator still has legs")
    vals = evaluate(op, mode)
    return VacuumElement(op.sig, vals.get((), {}))


def utensor_compose(x: TensorOperator, y: TensorOperator) -> TensorOperator:
    from .superspace import compose

    return compose(x, y)


def utensor_supertrace(x: TensorOperator, legs) -> TensorOperator:
    from .superspace import partial_supertrace

    return partial_supertrace(x, legs)
