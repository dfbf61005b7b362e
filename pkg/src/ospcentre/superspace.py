"""The super vector space C^{M|2n} and sparse operators on its tensor powers.

A :class:`TensorOperator` on ``L`` legs is a finite sum of terms
``c · x_1 ⊗ … ⊗ x_L ⊗ u`` where each ``x_a`` is either a matrix unit
``e_ij`` (stored as the pair ``(i, j)``) or the identity (stored as ``None``),
``u`` is a word in the letters of :mod:`ospcentre.uea` (the empty word for
scalar operators) and ``c`` is a rational.  Words are multiplied formally;
normal ordering happens downstream.

Multiplication follows the super tensor product rule

    (a_1 ⊗ … ⊗ a_L ⊗ u)(b_1 ⊗ … ⊗ b_L ⊗ v)
        = (-1)^{Σ_k |b_k| (Σ_{l>k} |a_l| + |u|)} a_1 b_1 ⊗ … ⊗ a_L b_L ⊗ uv.

Leg positions are 0-based internally.  ``build_P``/``build_Q`` take 1-based
legs unless ``base=0`` is passed.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .brauer import BrauerElement, diagram_word
from .coeff import ratfun_eval
from .errors import InvalidArgument, SizeMismatch


@dataclass(frozen=True)
class Signature:
    M: int
    n: int

    def __post_init__(self):
        if self.M < 0 or self.n < 0:
            raise InvalidArgument(f"negative signature ({self.M}, {self.n})")

    @property
    def N(self) -> int:
        return self.M + 2 * self.n

    @property
    def sdim(self) -> int:
        return self.M - 2 * self.n

    @property
    def omega(self) -> int:
        """The Brauer parameter ω = M - 2n."""
        return self.M - 2 * self.n

    @property
    def dual_coxeter(self) -> int:
        return self.M - 2 * self.n - 2

    @property
    def critical_level(self) -> int:
        return -(self.M - 2 * self.n - 2)

    def indices(self):
        return range(1, self.N + 1)

    def _check(self, i):
        if not 1 <= i <= self.N:
            raise InvalidArgument(f"index {i} out of range 1..{self.N}")

    def prime(self, i: int) -> int:
        self._check(i)
        return self.N - i + 1

    def parity(self, i: int) -> int:
        self._check(i)
        return 1 if i <= self.n or i >= self.M + self.n + 1 else 0

    def sign(self, i: int) -> int:
        self._check(i)
        return 1 if i <= self.M + self.n else -1

    def __str__(self):
        return f"osp({self.M}|{2 * self.n})"


@lru_cache(maxsize=None)
def _parity_table(sig: Signature):
    return (0,) + tuple(sig.parity(i) for i in sig.indices())


def word_parity(word) -> int:
    return sum(letter[2] for letter in word) & 1


def _leg_parity(par, leg) -> int:
    return 0 if leg is None else (par[leg[0]] + par[leg[1]]) & 1


def _add_into(out: dict, key, val):
    new = out.get(key, 0) + val
    if new == 0:
        out.pop(key, None)
    else:
        out[key] = new


class TensorOperator:
    """Sparse element of (End C^{M|2n})^{⊗L} ⊗ (free words)."""

    __slots__ = ("sig", "L", "terms")

    def __init__(self, sig: Signature, L: int, terms=None):
        self.sig = sig
        self.L = L
        self.terms: dict = {}
        if terms:
            for (legs, word), c in terms.items():
                if len(legs) != L:
                    raise SizeMismatch(f"term with {len(legs)} legs in operator on {L}")
                if c != 0:
                    _add_into(self.terms, (tuple(legs), tuple(word)), Fraction(c))

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, sig, L, coeff=1):
        return cls(sig, L, {((None,) * L, ()): coeff})

    @classmethod
    def zero(cls, sig, L):
        return cls(sig, L)

    @classmethod
    def word_scalar(cls, sig, L, word, coeff=1):
        """``1 ⊗ … ⊗ 1 ⊗ word``."""
        return cls(sig, L, {((None,) * L, tuple(word)): coeff})

    @classmethod
    def unit(cls, sig, L, leg, i, j, coeff=1):
        legs = [None] * L
        legs[leg] = (i, j)
        return cls(sig, L, {(tuple(legs), ()): coeff})

    def _new(self, terms):
        op = TensorOperator(self.sig, self.L)
        op.terms = terms
        return op

    # -- linear structure ---------------------------------------------------
    def _check_shape(self, other):
        if self.sig != other.sig or self.L != other.L:
            raise SizeMismatch(f"operators on {self.sig}^{self.L} and {other.sig}^{other.L}")

    def __add__(self, other):
        self._check_shape(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return self._new(out)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return TensorOperator(self.sig, self.L)
        return self._new({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorOperator):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return not self.terms

    def canonical(self) -> dict:
        """Terms with every identity leg expanded into diagonal matrix units."""
        return expand_legs(self, range(self.L)).terms

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return self.sig == other.sig and self.L == other.L and self.canonical() == other.canonical()

    __hash__ = None

    def __repr__(self):
        return f"TensorOperator({self.sig}, L={self.L}, {len(self.terms)} terms)"

    def to_json(self):
        out = []
        for (legs, word), c in sorted(self.terms.items(), key=lambda kv: repr(kv[0])):
            out.append({
                "I": [None if x is None else x[0] for x in legs],
                "J": [None if x is None else x[1] for x in legs],
                "word": [_letter_json(letter) for letter in word],
                "coefficient": str(c),
            })
        return out

    def map_words(self, fn):
        """Apply ``fn(word) -> dict[key, Fraction]`` to every coefficient word.

        Returns a dict ``legs -> dict[key, Fraction]``.
        """
        out: dict = {}
        cache: dict = {}
        for (legs, word), c in self.terms.items():
            res = cache.get(word)
            if res is None:
                res = cache[word] = fn(word)
            slot = out.setdefault(legs, {})
            for k, v in res.items():
                _add_into(slot, k, c * v)
        return {legs: v for legs, v in out.items() if v}


def _letter_json(letter):
    if letter[0] == float("inf"):
        return "tau" if letter[1] == -1 else "K"
    return [letter[1], letter[0]]


def expand_legs(x: TensorOperator, legs) -> TensorOperator:
    """Replace identity factors on the given legs by ``Σ_i e_ii``."""
    legs = [a for a in legs]
    idx = list(x.sig.indices())
    out: dict = {}
    for (lg, word), c in x.terms.items():
        holes = [a for a in legs if lg[a] is None]
        if not holes:
            _add_into(out, (lg, word), c)
            continue
        base = list(lg)
        for choice in itertools.product(idx, repeat=len(holes)):
            for a, i in zip(holes, choice):
                base[a] = (i, i)
            _add_into(out, (tuple(base), word), c)
    return x._new(out)


# -- multiplication ---------------------------------------------------------


class _Index:
    """Terms of the right factor grouped for hash joins on matching middle indices."""

    def __init__(self, y: TensorOperator):
        par = _parity_table(y.sig)
        self.groups: dict = {}
        for (legs, word), c in y.terms.items():
            pattern = tuple(leg is not None for leg in legs)
            pb = [_leg_parity(par, leg) for leg in legs]
            self.groups.setdefault(pattern, []).append((legs, word, c, pb))
        self.sub: dict = {}

    def lookup(self, pattern, shared, key):
        idx = self.sub.get((pattern, shared))
        if idx is None:
            idx = {}
            for entry in self.groups[pattern]:
                legs = entry[0]
                idx.setdefault(tuple(legs[a][0] for a in shared), []).append(entry)
            self.sub[(pattern, shared)] = idx
        return idx.get(key, ())


def compose(x: TensorOperator, y: TensorOperator) -> TensorOperator:
    """The product ``x·y`` in the super tensor product algebra."""
    x._check_shape(y)
    L = x.L
    par = _parity_table(x.sig)
    index = _Index(y)
    out: dict = {}
    for (lx, wx), cx in x.terms.items():
        pa = [_leg_parity(par, leg) for leg in lx]
        pu = word_parity(wx)
        suffix = [0] * (L + 1)
        for a in range(L - 1, -1, -1):
            suffix[a] = suffix[a + 1] + pa[a]
        for pattern in index.groups:
            shared = tuple(a for a in range(L) if pattern[a] and lx[a] is not None)
            key = tuple(lx[a][1] for a in shared)
            for ly, wy, cy, pb in index.lookup(pattern, shared, key):
                exp = 0
                legs = []
                for a in range(L):
                    xa, ya = lx[a], ly[a]
                    if ya is None:
                        legs.append(xa)
                        continue
                    if pb[a]:
                        exp += suffix[a + 1] + pu
                    legs.append(ya if xa is None else (xa[0], ya[1]))
                c = cx * cy
                _add_into(out, (tuple(legs), wx + wy), -c if exp & 1 else c)
    return x._new(out)


def product(*ops: TensorOperator) -> TensorOperator:
    out = ops[0]
    for op in ops[1:]:
        out = compose(out, op)
    return out


def partial_supertrace(x: TensorOperator, legs_to_trace) -> TensorOperator:
    """Supertrace over the given 0-based legs; surviving legs keep their relative order."""
    traced = sorted(set(legs_to_trace))
    if any(not 0 <= a < x.L for a in traced):
        raise InvalidArgument(f"legs {traced} out of range for {x.L} legs")
    par = _parity_table(x.sig)
    keep = [a for a in range(x.L) if a not in traced]
    out: dict = {}
    for (legs, word), c in x.terms.items():
        f = c
        for a in traced:
            leg = legs[a]
            if leg is None:
                f *= x.sig.sdim
            elif leg[0] != leg[1]:
                f = 0
                break
            elif par[leg[0]]:
                f = -f
        if f:
            _add_into(out, (tuple(legs[a] for a in keep), word), f)
    res = TensorOperator(x.sig, len(keep))
    res.terms = out
    return res


def supertrace_product(x: TensorOperator, y: TensorOperator, legs_to_trace) -> TensorOperator:
    """``partial_supertrace(compose(x, y), legs)`` without forming off-diagonal terms."""
    x._check_shape(y)
    traced = sorted(set(legs_to_trace))
    keep = [a for a in range(x.L) if a not in traced]
    par = _parity_table(x.sig)
    xs = expand_legs(x, traced)
    ys = expand_legs(y, traced)
    idx: dict = {}
    for (ly, wy), cy in ys.terms.items():
        key = tuple(ly[a] for a in traced)
        pb = [_leg_parity(par, leg) for leg in ly]
        idx.setdefault(key, []).append((ly, wy, cy, pb))
    out: dict = {}
    L = x.L
    for (lx, wx), cx in xs.terms.items():
        key = tuple((lx[a][1], lx[a][0]) for a in traced)
        bucket = idx.get(key)
        if not bucket:
            continue
        tsign = sum(par[lx[a][0]] for a in traced) & 1
        pa = [_leg_parity(par, leg) for leg in lx]
        pu = word_parity(wx)
        suffix = [0] * (L + 1)
        for a in range(L - 1, -1, -1):
            suffix[a] = suffix[a + 1] + pa[a]
        for ly, wy, cy, pb in bucket:
            exp = tsign
            legs = []
            ok = True
            for a in range(L):
                xa, ya = lx[a], ly[a]
                if pb[a]:
                    exp += suffix[a + 1] + pu
                if a in traced:
                    continue
                if ya is None:
                    legs.append(xa)
                elif xa is None:
                    legs.append(ya)
                elif xa[1] != ya[0]:
                    ok = False
                    break
                else:
                    legs.append((xa[0], ya[1]))
            if ok:
                c = cx * cy
                _add_into(out, (tuple(legs), wx + wy), -c if exp & 1 else c)
    res = TensorOperator(x.sig, len(keep))
    res.terms = out
    return res


def pad_legs(x: TensorOperator, L: int, positions=None) -> TensorOperator:
    """Place ``x`` on the given positions of ``L`` legs, identity elsewhere."""
    positions = list(range(x.L)) if positions is None else list(positions)
    if len(positions) != x.L or len(set(positions)) != x.L or any(not 0 <= p < L for p in positions):
        raise InvalidArgument(f"bad positions {positions} for {L} legs")
    out: dict = {}
    for (legs, word), c in x.terms.items():
        new = [None] * L
        for p, leg in zip(positions, legs):
            new[p] = leg
        out[(tuple(new), word)] = c
    res = TensorOperator(x.sig, L)
    res.terms = out
    return res


# -- P, Q and the Brauer representation --------------------------------------


def _legs_pair(a, b, L, base):
    i, j = a - base, b - base
    if not (0 <= i < L and 0 <= j < L) or i == j:
        raise InvalidArgument(f"bad legs ({a}, {b}) for {L} legs (base {base})")
    return (i, j) if i < j else (j, i)


@lru_cache(maxsize=4096)
def _build_P(a: int, b: int, L: int, sig: Signature) -> TensorOperator:
    par = _parity_table(sig)
    terms = {}
    for i in sig.indices():
        for j in sig.indices():
            legs = [None] * L
            legs[a], legs[b] = (i, j), (j, i)
            terms[(tuple(legs), ())] = -1 if par[j] else 1
    return TensorOperator(sig, L, terms)


@lru_cache(maxsize=4096)
def _build_Q(a: int, b: int, L: int, sig: Signature) -> TensorOperator:
    par = _parity_table(sig)
    terms = {}
    for i in sig.indices():
        for j in sig.indices():
            legs = [None] * L
            legs[a], legs[b] = (i, j), (sig.prime(i), sig.prime(j))
            s = sig.sign(i) * sig.sign(j)
            if (par[i] * par[j] + par[i] + par[j]) & 1:
                s = -s
            terms[(tuple(legs), ())] = s
    return TensorOperator(sig, L, terms)


def build_P(a: int, b: int, L: int, sig: Signature, base: int = 1) -> TensorOperator:
    i, j = _legs_pair(a, b, L, base)
    return _build_P(i, j, L, sig)


def build_Q(a: int, b: int, L: int, sig: Signature, base: int = 1) -> TensorOperator:
    i, j = _legs_pair(a, b, L, base)
    return _build_Q(i, j, L, sig)


@lru_cache(maxsize=1 << 14)
def rho_diagram(d, sig: Signature, L: int, positions: tuple) -> TensorOperator:
    """Image of a single diagram placed on ``positions`` (0-based legs)."""
    out = TensorOperator.identity(sig, L)
    for kind, i in diagram_word(d):
        a, b = positions[i], positions[i + 1]
        gen = build_P(a, b, L, sig, base=0) if kind == "s" else build_Q(a, b, L, sig, base=0)
        out = compose(out, gen)
    return out


def rho(x: BrauerElement, sig: Signature, L: int | None = None, positions=None) -> TensorOperator:
    """Image of ``x`` at ω = M - 2n; raises PoleAtEvaluation on a singular coefficient."""
    L = x.size if L is None else L
    positions = tuple(range(x.size)) if positions is None else tuple(positions)
    if len(positions) != x.size or len(set(positions)) != x.size or any(
        not 0 <= p < L for p in positions
    ):
        raise InvalidArgument(f"bad positions {positions} for {L} legs")
    values = [(d, ratfun_eval(c, sig.omega)) for d, c in x.terms.items()]
    out: dict = {}
    for d, c in values:
        if c == 0:
            continue
        for k, v in rho_diagram(d, sig, L, positions).terms.items():
            _add_into(out, k, c * v)
    res = TensorOperator(sig, L)
    res.terms = out
    return res


# -- checks -----------------------------------------------------------------


def random_scalar_operator(sig: Signature, L: int, nterms: int, rng: random.Random) -> TensorOperator:
    idx = list(sig.indices())
    terms = {}
    for _ in range(nterms):
        legs = tuple((rng.choice(idx), rng.choice(idx)) if rng.random() < 0.8 else None for _ in range(L))
        terms[(legs, ())] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return TensorOperator(sig, L, terms)


def qxq_check(sig: Signature, m: int, seed: int = 0, samples: int = 5):
    """``Q_{a,m+1} X Q_{a,m+1} = (str_a X) Q_{a,m+1}`` on random and structured X."""
    from .reports import VerificationReport

    if not 1 <= m <= 3:
        raise InvalidArgument("qxq_check supports 1 <= m <= 3")
    rng = random.Random(seed)
    report = VerificationReport("qxq", {"M": sig.M, "n": sig.n, "m": m, "seed": seed})
    L = m + 1
    operands = [("identity", TensorOperator.identity(sig, m))]
    for c in range(2, m + 1):
        operands.append((f"P_1{c}", build_P(1, c, m, sig)))
        operands.append((f"Q_1{c}", build_Q(1, c, m, sig)))
    for t in range(samples):
        operands.append((f"random#{t}", random_scalar_operator(sig, m, 5, rng)))
    for name, X in operands:
        Xp = pad_legs(X, L)
        for a in range(1, m + 1):
            Q = build_Q(a, L, L, sig)
            lhs = product(Q, Xp, Q)
            tr = partial_supertrace(X, [a - 1])
            rhs = compose(pad_legs(tr, L, [p for p in range(m) if p != a - 1]), Q)
            report.add(f"qxq X={name} a={a}", lhs == rhs)
    return report.finish()


def rep_relations_check(sig: Signature, m: int):
    """The P/Q images satisfy the defining Brauer relations at ω = M - 2n."""
    from .reports import VerificationReport

    report = VerificationReport("rep-relations", {"M": sig.M, "n": sig.n, "m": m})
    w = sig.omega
    one = TensorOperator.identity(sig, m)
    P = [None] + [build_P(a, a + 1, m, sig) for a in range(1, m)]
    Q = [None] + [build_Q(a, a + 1, m, sig) for a in range(1, m)]
    for a in range(1, m):
        report.add(f"P_{a}^2 = 1", P[a] * P[a] == one)
        report.add(f"Q_{a}^2 = ω Q_{a}", Q[a] * Q[a] == Q[a].scale(w))
        report.add(f"P_{a} Q_{a} = Q_{a} P_{a} = Q_{a}", P[a] * Q[a] == Q[a] and Q[a] * P[a] == Q[a])
        for b in range(a + 2, m):
            report.add(f"far commutation ({a},{b})",
                       P[a] * P[b] == P[b] * P[a] and Q[a] * Q[b] == Q[b] * Q[a]
                       and P[a] * Q[b] == Q[b] * P[a] and P[b] * Q[a] == Q[a] * P[b])
        if a + 1 < m:
            b = a + 1
            report.add(f"braid P_{a} P_{b} P_{a}", product(P[a], P[b], P[a]) == product(P[b], P[a], P[b]))
            report.add(f"Q_{a} Q_{b} Q_{a} = Q_{a}", product(Q[a], Q[b], Q[a]) == Q[a])
            report.add(f"Q_{b} Q_{a} Q_{b} = Q_{b}", product(Q[b], Q[a], Q[b]) == Q[b])
            report.add(f"P_{a} Q_{b} Q_{a} = P_{b} Q_{a}", product(P[a], Q[b], Q[a]) == P[b] * Q[a])
            report.add(f"Q_{b} Q_{a} P_{b} = Q_{b} P_{a}", product(Q[b], Q[a], P[b]) == Q[b] * P[a])
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            report.add(f"P_({a},{b}) = P_({b},{a})", build_P(a, b, m, sig) == build_P(b, a, m, sig))
    if m >= 2:
        report.add("str_2(Q_12) = 1", partial_supertrace(build_Q(1, 2, 2, sig), [1])
                   == TensorOperator.identity(sig, 1))
        report.add("str_12(P_12) = M - 2n",
                   partial_supertrace(build_P(1, 2, 2, sig), [0, 1])
                   == TensorOperator.identity(sig, 0, sig.sdim))
    return report.finish()
