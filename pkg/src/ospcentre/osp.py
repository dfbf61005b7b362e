"""The orthosymplectic Lie superalgebra osp_{M|2n} inside gl_{M|2n}.

The spanning elements ``F_ij = E_ij - (-1)^{īj̄+j̄} ε_i ε_j E_{j'i'}`` are row
reduced in lexicographic order of ``(i, j)``; the ones that enlarge the span
form the basis.  Basis element ``α`` is therefore literally ``F_{ij}`` for the
label ``labels[α]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidArgument
from .linalg import SparseEchelon
from .superspace import Signature


class GlElement:
    """Sparse combination of the matrix units E_ij of gl_{M|2n}."""

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs=None):
        self.sig = sig
        self.coeffs = {}
        for k, v in (coeffs or {}).items():
            if v != 0:
                self.coeffs[k] = self.coeffs.get(k, 0) + Fraction(v)
        self.coeffs = {k: v for k, v in self.coeffs.items() if v != 0}

    @property
    def parity(self):
        pars = {(self.sig.parity(i) + self.sig.parity(j)) & 1 for i, j in self.coeffs}
        if len(pars) > 1:
            raise InvalidArgument("inhomogeneous element")
        return pars.pop() if pars else 0

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return GlElement(self.sig, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GlElement(self.sig, {k: v * c for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, GlElement) and self.sig == other.sig and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        parts = [f"{v}*E{i},{j}" for (i, j), v in sorted(self.coeffs.items())]
        return " + ".join(parts) if parts else "0"

    def matrix_product(self, other) -> "GlElement":
        """Ordinary matrix product in End C^{M|2n}."""
        out = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                if j == k:
                    out[(i, l)] = out.get((i, l), 0) + a * b
        return GlElement(self.sig, out)

    def supertrace(self) -> Fraction:
        return sum((v * (-1 if self.sig.parity(i) else 1) for (i, j), v in self.coeffs.items() if i == j),
                   Fraction(0))


def gl_bracket(x: GlElement, y: GlElement) -> GlElement:
    """Super commutator from ``[E_ij, E_kl] = δ_kj E_il - δ_il (-1)^{(ī+j̄)(k̄+l̄)} E_kj``."""
    sig = x.sig
    out = {}
    for (i, j), a in x.coeffs.items():
        pij = sig.parity(i) + sig.parity(j)
        for (k, l), b in y.coeffs.items():
            c = a * b
            if k == j:
                out[(i, l)] = out.get((i, l), 0) + c
            if i == l:
                pkl = sig.parity(k) + sig.parity(l)
                s = -1 if (pij * pkl) & 1 else 1
                out[(k, j)] = out.get((k, j), 0) - s * c
    return GlElement(sig, out)


def _f_sign(sig, i, j):
    pi, pj = sig.parity(i), sig.parity(j)
    s = sig.sign(i) * sig.sign(j)
    return -s if (pi * pj + pj) & 1 else s


def f_element(i: int, j: int, sig: Signature) -> GlElement:
    """``F_ij = E_ij - (-1)^{īj̄+j̄} ε_i ε_j E_{j'i'}`` (possibly zero)."""
    if not (1 <= i <= sig.N and 1 <= j <= sig.N):
        raise InvalidArgument(f"indices ({i}, {j}) out of range for {sig}")
    coeffs = {(i, j): Fraction(1)}
    key = (sig.prime(j), sig.prime(i))
    coeffs[key] = coeffs.get(key, 0) - _f_sign(sig, i, j)
    return GlElement(sig, coeffs)


def central_coefficient(sig: Signature, ij, kl) -> int:
    """``(-1)^ī δ_il δ_jk - (-1)^{īj̄} ε_i ε_j δ_{ik'} δ_{jl'}`` for labels (i,j), (k,l)."""
    i, j = ij
    k, l = kl
    out = 0
    if i == l and j == k:
        out += -1 if sig.parity(i) else 1
    if i == sig.prime(k) and j == sig.prime(l):
        s = sig.sign(i) * sig.sign(j)
        out -= -s if sig.parity(i) * sig.parity(j) else s
    return out


@dataclass
class AffineBracketResult:
    linear: dict = field(default_factory=dict)  # (basis index, mode) -> Fraction
    central: Fraction = Fraction(0)


@dataclass
class OspStructure:
    sig: Signature
    labels: list
    basis: list
    parity: list
    structconst: list  # structconst[a][b] = {c: Fraction}
    form: list  # form[a][b] = κ(x_a, x_b)
    _echelon: SparseEchelon = field(repr=False, default=None)
    _label_index: dict = field(repr=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def dual_coxeter(self) -> int:
        return self.sig.dual_coxeter

    def coords(self, x: GlElement) -> dict:
        residual, combo = self._echelon.reduce(x.coeffs)
        if residual:
            raise InvalidArgument(f"{x!r} is not in {self.sig}")
        return {self._label_index[t]: c for t, c in combo.items() if c != 0}

    @lru_cache(maxsize=None)
    def f_coords(self, i: int, j: int) -> tuple:
        """Coordinates of F_ij as a sorted tuple of (basis index, coefficient)."""
        return tuple(sorted(self.coords(f_element(i, j, self.sig)).items()))

    def __hash__(self):
        return hash(self.sig)

    def __eq__(self, other):
        return self is other

    def bracket(self, a: int, b: int) -> dict:
        return self.structconst[a][b]

    def to_json(self):
        return {
            "M": self.sig.M,
            "n": self.sig.n,
            "dim": self.dim,
            "basis": [{"label": list(lab), "parity": p, "gl": {f"{i},{j}": str(v) for (i, j), v in sorted(b.coeffs.items())}}
                      for lab, b, p in zip(self.labels, self.basis, self.parity)],
            "structconst": [[a, b, c, str(v)] for a in range(self.dim) for b in range(self.dim)
                            for c, v in sorted(self.structconst[a][b].items())],
            "form": [[a, b, str(self.form[a][b])] for a in range(self.dim) for b in range(self.dim)
                     if self.form[a][b]],
        }


def expected_dimension(sig: Signature) -> int:
    M, n = sig.M, sig.n
    return M * (M - 1) // 2 + n * (2 * n + 1) + 2 * M * n


@lru_cache(maxsize=None)
def build_structure(sig: Signature) -> OspStructure:
    if sig.N < 1:
        raise InvalidArgument("need M + 2n >= 1")
    ech = SparseEchelon()
    labels, basis = [], []
    for i in sig.indices():
        for j in sig.indices():
            f = f_element(i, j, sig)
            if ech.add(dict(f.coeffs), tag=(i, j)):
                labels.append((i, j))
                basis.append(f)
    label_index = {lab: a for a, lab in enumerate(labels)}
    st = OspStructure(sig, labels, basis, [b.parity for b in basis], [], [], ech, label_index)
    dim = len(basis)
    st.structconst = [[st.coords(gl_bracket(basis[a], basis[b])) for b in range(dim)] for a in range(dim)]
    st.form = [[Fraction(central_coefficient(sig, labels[a], labels[b])) for b in range(dim)]
               for a in range(dim)]
    return st


def affine_bracket(st: OspStructure, x, y) -> AffineBracketResult:
    """``[x_a[r], y_b[s]]`` for ``x = (a, r)``, ``y = (b, s)``."""
    (a, r), (b, s) = x, y
    linear = {(c, r + s): v for c, v in st.structconst[a][b].items()}
    central = Fraction(r) * st.form[a][b] if r + s == 0 else Fraction(0)
    return AffineBracketResult(linear, central)


def displayed_bracket(sig: Signature, ij, kl) -> GlElement:
    """Linear part of the affine bracket of F_ij and F_kl as displayed, in gl coordinates."""
    i, j = ij
    k, l = kl
    p = sig.parity
    out = GlElement(sig)
    if j == k:
        out = out + f_element(i, l, sig)
    if i == l:
        s = -1 if ((p(i) + p(j)) * (p(k) + p(l))) & 1 else 1
        out = out - f_element(k, j, sig).scale(s)
    if i == sig.prime(k):
        s = sig.sign(i) * sig.sign(j) * (-1 if (p(i) * p(j) + p(j)) & 1 else 1)
        out = out - f_element(sig.prime(j), l, sig).scale(s)
    if j == sig.prime(l):
        s = sig.sign(i) * sig.sign(j) * (-1 if (p(i) * p(k) + p(j) * p(k)) & 1 else 1)
        out = out + f_element(k, sig.prime(i), sig).scale(s)
    return out
