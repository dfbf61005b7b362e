"""The Brauer algebra B_m(ω) in its diagram basis.

A diagram on ``m`` legs is a perfect matching of the ``2m`` nodes
``T1..Tm`` (stored at positions ``0..m-1``) and ``B1..Bm`` (positions
``m..2m-1``), kept as the involution array ``match`` with ``match[i]`` the
partner of node ``i``.  The product ``x*y`` stacks ``y`` above ``x``; every
closed loop becomes a factor ω.

Leg labels in the public helpers are 1-based by default.  Pass ``base=0`` to
use the labels ``0..n-1`` of the size-``2m+1`` instances.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .coeff import RatFun, as_ratfun, gamma, half_binomial
from .errors import InvalidArgument, SizeMismatch
from .linalg import SparseEchelon


class BrauerDiagram(tuple):
    """Involution array of a Brauer diagram (a tuple subclass, so it hashes and sorts)."""

    __slots__ = ()

    @property
    def size(self) -> int:
        return len(self) // 2

    @classmethod
    def identity(cls, m: int) -> "BrauerDiagram":
        return cls(tuple(range(m, 2 * m)) + tuple(range(m)))

    @classmethod
    def from_permutation(cls, perm) -> "BrauerDiagram":
        """Diagram joining ``T(i+1)`` to ``B(perm[i]+1)`` (``perm`` is 0-based)."""
        m = len(perm)
        match = [0] * (2 * m)
        for i, p in enumerate(perm):
            match[i] = m + p
            match[m + p] = i
        return cls(match)

    @classmethod
    def from_pairs(cls, m: int, pairs) -> "BrauerDiagram":
        """Build from node pairs such as ``[("T1", "B2"), ("T2", "B1")]``."""
        match = [None] * (2 * m)

        def pos(node):
            side, idx = node[0].upper(), int(node[1:])
            if not 1 <= idx <= m or side not in "TB":
                raise InvalidArgument(f"bad node {node!r} for size {m}")
            return idx - 1 if side == "T" else m + idx - 1

        for u, v in pairs:
            i, j = pos(u), pos(v)
            if i == j or match[i] is not None or match[j] is not None:
                raise InvalidArgument(f"pairs do not form a matching: {pairs}")
            match[i], match[j] = j, i
        if any(p is None for p in match):
            raise InvalidArgument("matching does not cover every node")
        return cls(match)

    @classmethod
    def parse(cls, text: str) -> "BrauerDiagram":
        pairs = [tok.split("-") for tok in text.split()]
        nodes = [int(n[1:]) for pair in pairs for n in pair]
        return cls.from_pairs(max(nodes) if nodes else 0, pairs)

    def node_name(self, i: int) -> str:
        m = self.size
        return f"T{i + 1}" if i < m else f"B{i - m + 1}"

    def pairs(self):
        return [(i, j) for i, j in enumerate(self) if i < j]

    def __str__(self):
        return " ".join(f"{self.node_name(i)}-{self.node_name(j)}" for i, j in self.pairs())

    def top_arcs(self):
        m = self.size
        return [(i, j) for i, j in self.pairs() if j < m]

    def bottom_arcs(self):
        m = self.size
        return [(i - m, j - m) for i, j in self.pairs() if i >= m]

    def throughs(self):
        """Through strings as ``(top leg, bottom leg)``, 0-based, sorted by top leg."""
        m = self.size
        return [(i, j - m) for i, j in self.pairs() if i < m <= j]

    def is_permutation(self) -> bool:
        return all((i < self.size) != (j < self.size) for i, j in enumerate(self))


def _check_same_size(x, y):
    if x.size != y.size:
        raise SizeMismatch(f"sizes {x.size} and {y.size} differ")


@lru_cache(maxsize=1 << 18)
def compose_diagrams(x: BrauerDiagram, y: BrauerDiagram):
    """Stack ``y`` above ``x``; return ``(diagram, number of closed loops)``."""
    _check_same_size(x, y)
    m = len(x) // 2
    res = [0] * (2 * m)
    seen_mid = [False] * m
    for start in range(2 * m):
        if start < m:
            in_y, node = True, start
        else:
            in_y, node = False, start
        while True:
            if in_y:
                p = y[node]
                if p < m:
                    res[start] = p
                    break
                mid = p - m
                seen_mid[mid] = True
                in_y, node = False, mid
            else:
                p = x[node]
                if p >= m:
                    res[start] = p
                    break
                seen_mid[p] = True
                in_y, node = True, m + p
    loops = 0
    for i in range(m):
        if seen_mid[i]:
            continue
        loops += 1
        node = i  # a middle point: top of x, bottom of y
        while True:
            seen_mid[node] = True
            p = x[node]  # stays in the middle for a loop
            seen_mid[p] = True
            q = y[m + p] - m
            if q == i:
                break
            node = q
    return BrauerDiagram(res), loops


_OMEGA_POWERS = [as_ratfun(1)]


def _omega_pow(k: int) -> RatFun:
    while len(_OMEGA_POWERS) <= k:
        _OMEGA_POWERS.append(_OMEGA_POWERS[-1] * RatFun.omega())
    return _OMEGA_POWERS[k]


class BrauerElement:
    """Finite linear combination of diagrams with coefficients in Q(ω)."""

    __slots__ = ("size", "terms")

    def __init__(self, size: int, terms=None):
        self.size = size
        self.terms: dict = {}
        if terms:
            for d, c in terms.items():
                if d.size != size:
                    raise SizeMismatch(f"diagram of size {d.size} in element of size {size}")
                c = as_ratfun(c)
                if not c.is_zero():
                    self.terms[d] = c

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, coeff=1) -> "BrauerElement":
        return cls(d.size, {d: coeff})

    @classmethod
    def one(cls, m: int) -> "BrauerElement":
        return cls.from_diagram(BrauerDiagram.identity(m))

    @classmethod
    def zero(cls, m: int) -> "BrauerElement":
        return cls(m)

    def is_zero(self) -> bool:
        return not self.terms

    def _add(self, other, sign):
        _check_same_size(self, other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            c = c if sign > 0 else -c
            new = out[d] + c if d in out else c
            if new.is_zero():
                out.pop(d, None)
            else:
                out[d] = new
        el = BrauerElement(self.size)
        el.terms = out
        return el

    def __add__(self, other):
        return self._add(other, 1)

    def __sub__(self, other):
        return self._add(other, -1)

    def __neg__(self):
        el = BrauerElement(self.size)
        el.terms = {d: -c for d, c in self.terms.items()}
        return el

    def scale(self, c) -> "BrauerElement":
        c = as_ratfun(c)
        el = BrauerElement(self.size)
        if not c.is_zero():
            el.terms = {d: v * c for d, v in self.terms.items()}
        return el

    def __mul__(self, other):
        if not isinstance(other, BrauerElement):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, BrauerElement):
            return NotImplemented
        return self.size == other.size and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"BrauerElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})[{d}]" for d, c in sorted(self.terms.items()))

    def coefficient(self, d: BrauerDiagram) -> RatFun:
        return self.terms.get(d, as_ratfun(0))

    def to_json(self):
        return [{"coeff": str(c), "diagram": str(d)} for d, c in sorted(self.terms.items())]


def multiply(x: BrauerElement, y: BrauerElement) -> BrauerElement:
    _check_same_size(x, y)
    out: dict = {}
    for dx, cx in x.terms.items():
        for dy, cy in y.terms.items():
            d, loops = compose_diagrams(dx, dy)
            c = cx * cy
            if loops:
                c = c * _omega_pow(loops)
            prev = out.get(d)
            out[d] = c if prev is None else prev + c
    el = BrauerElement(x.size)
    el.terms = {d: c for d, c in out.items() if not c.is_zero()}
    return el


def product(*factors: BrauerElement) -> BrauerElement:
    out = factors[0]
    for f in factors[1:]:
        out = multiply(out, f)
    return out


# ---------------------------------------------------------------------------
# generators and distinguished elements


def _leg(a: int, m: int, base: int) -> int:
    pos = a - base
    if not 0 <= pos < m:
        raise InvalidArgument(f"leg {a} out of range for size {m} (base {base})")
    return pos


def transposition_diagram(m: int, i: int, j: int) -> BrauerDiagram:
    perm = list(range(m))
    perm[i], perm[j] = perm[j], perm[i]
    return BrauerDiagram.from_permutation(perm)


def contraction_diagram(m: int, i: int, j: int) -> BrauerDiagram:
    match = list(BrauerDiagram.identity(m))
    match[i], match[j] = j, i
    match[m + i], match[m + j] = m + j, m + i
    return BrauerDiagram(match)


def generator(kind: str, a: int, b: int, m: int, base: int = 1) -> BrauerElement:
    """``s_ab`` (``kind="transposition"``) or ``ε_ab`` (``kind="contraction"``)."""
    i, j = _leg(a, m, base), _leg(b, m, base)
    if i == j:
        raise InvalidArgument("generator legs must differ")
    if kind in ("transposition", "s"):
        return BrauerElement.from_diagram(transposition_diagram(m, i, j))
    if kind in ("contraction", "e", "epsilon"):
        return BrauerElement.from_diagram(contraction_diagram(m, i, j))
    raise InvalidArgument(f"unknown generator kind {kind!r}")


def s(a, b, m, base=1):
    return generator("transposition", a, b, m, base)


def eps(a, b, m, base=1):
    return generator("contraction", a, b, m, base)


def phi(a, b, m, base=1):
    """``s_ab - ε_ab``."""
    return s(a, b, m, base) - eps(a, b, m, base)


def embed(x: BrauerElement, size: int, legs) -> BrauerElement:
    """Place ``x`` on the given 0-based leg positions of a size-``size`` algebra."""
    k = x.size
    legs = list(legs)
    if len(legs) != k or len(set(legs)) != k or not all(0 <= p < size for p in legs):
        raise InvalidArgument(f"bad leg positions {legs} for size {size}")
    node = legs + [size + p for p in legs]
    out = BrauerElement(size)
    for d, c in x.terms.items():
        match = list(BrauerDiagram.identity(size))
        for i, j in enumerate(d):
            match[node[i]] = node[j]
        out.terms[BrauerDiagram(match)] = c
    return out


@lru_cache(maxsize=None)
def all_diagrams(m: int):
    """All (2m-1)!! diagrams of size m, in sorted order."""

    def matchings(nodes):
        if not nodes:
            yield ()
            return
        first, rest = nodes[0], nodes[1:]
        for idx, other in enumerate(rest):
            for tail in matchings(rest[:idx] + rest[idx + 1:]):
                yield ((first, other),) + tail

    out = []
    for pairs in matchings(tuple(range(2 * m))):
        match = [0] * (2 * m)
        for i, j in pairs:
            match[i], match[j] = j, i
        out.append(BrauerDiagram(match))
    return tuple(sorted(out))


def permutation_diagrams(k: int):
    return [BrauerDiagram.from_permutation(p) for p in itertools.permutations(range(k))]


@lru_cache(maxsize=None)
def _h_small(k: int) -> BrauerElement:
    w = Fraction(1, factorial(k))
    return BrauerElement(k, {d: w for d in permutation_diagrams(k)})


def group_symmetriser(k: int, m: int | None = None, legs=None) -> BrauerElement:
    """Average of the k! permutation diagrams on the first ``k`` legs (or on ``legs``)."""
    m = k if m is None else m
    if not 1 <= k <= m:
        raise InvalidArgument(f"need 1 <= k <= m, got k={k}, m={m}")
    return embed(_h_small(k), m, range(k) if legs is None else legs)


@lru_cache(maxsize=None)
def _sym_small(k: int) -> BrauerElement:
    by_arcs: dict = {}
    for d in all_diagrams(k):
        by_arcs.setdefault(len(d.top_arcs()), []).append(d)
    terms = {}
    for r in range(k // 2 + 1):
        coeff = RatFun(half_binomial(k, r)).inverse() * Fraction((-1) ** r, factorial(k))
        for d in by_arcs.get(r, []):
            terms[d] = coeff
    return BrauerElement(k, terms)


def brauer_symmetriser(k: int, m: int | None = None, legs=None) -> BrauerElement:
    """The Brauer symmetriser on the first ``k`` legs, via the closed diagram-sum formula."""
    m = k if m is None else m
    if not 1 <= k <= m:
        raise InvalidArgument(f"need 1 <= k <= m, got k={k}, m={m}")
    return embed(_sym_small(k), m, range(k) if legs is None else legs)


def symmetriser_by_recursion(k: int) -> BrauerElement:
    """Cross-check path: build ``s^(k)`` in B_k from ``s^(k-1)``, expanded form of the recursion."""
    if k < 1:
        raise InvalidArgument("k must be positive")
    if k == 1:
        return BrauerElement.one(1)
    prev = embed(symmetriser_by_recursion(k - 1), k, range(k - 1))
    w = RatFun.omega()
    bracket = BrauerElement.one(k)
    contractions = BrauerElement.zero(k)
    for a in range(1, k):
        bracket = bracket + s(a, k, k)
        contractions = contractions + eps(a, k, k)
    for a in range(1, k):
        for b in range(a + 1, k):
            contractions = contractions + s(a, k, k) * eps(b, k, k)
    bracket = bracket - contractions.scale(2 / (w + 2 * k - 4))
    return (bracket * prev).scale(Fraction(1, k))


def symmetriser_by_factored_recursion(k: int) -> BrauerElement:
    """``1/(k(ω+2k-4)) (1 + Σφ_ak)(ω + k - 3 + Σφ_ak) s^(k-1)``."""
    if k == 1:
        return BrauerElement.one(1)
    prev = embed(symmetriser_by_factored_recursion(k - 1), k, range(k - 1))
    w = RatFun.omega()
    total_phi = BrauerElement.zero(k)
    for a in range(1, k):
        total_phi = total_phi + phi(a, k, k)
    one = BrauerElement.one(k)
    left = one + total_phi
    right = one.scale(w + k - 3) + total_phi
    return (left * right * prev).scale(1 / (k * (w + 2 * k - 4)))


# ---------------------------------------------------------------------------
# partial transposition and the subspace J


def transpose_diagram(d: BrauerDiagram, pos: int) -> BrauerDiagram:
    m = d.size
    top, bot = pos, m + pos
    if d[top] == bot:
        return d
    p, q = d[top], d[bot]
    match = list(d)
    match[top], match[q] = q, top
    match[bot], match[p] = p, bot
    return BrauerDiagram(match)


def partial_transpose(x: BrauerElement, a: int, base: int = 1) -> BrauerElement:
    pos = _leg(a, x.size, base)
    out = BrauerElement(x.size)
    for d, c in x.terms.items():
        out.terms[transpose_diagram(d, pos)] = c
    return out


@dataclass
class JmCertificate:
    """``target = Σ c·(d + d^{t_a})`` over the listed ``(d, a, c)`` with 1-based legs ``a``."""

    size: int
    decomposition: list = field(default_factory=list)

    def expand(self) -> BrauerElement:
        out: dict = {}
        for d, a, c in self.decomposition:
            for dd in (d, transpose_diagram(d, a - 1)):
                out[dd] = out.get(dd, as_ratfun(0)) + c
        return BrauerElement(self.size, out)

    def verify(self, target: BrauerElement) -> bool:
        return self.expand() == target

    def to_json(self):
        return [{"diagram": str(d), "leg": a, "coeff": str(c)} for d, a, c in self.decomposition]


def restrict(x: BrauerElement, k: int) -> BrauerElement:
    """Inverse of embedding on the first ``k`` legs; fails unless legs ``k+1..m`` are vertical."""
    m = x.size
    out = BrauerElement(k)
    for d, c in x.terms.items():
        for leg in range(k, m):
            if d[leg] != m + leg:
                raise InvalidArgument(f"diagram {d} is not vertical on leg {leg + 1}")
        match = [j if j < m else j - m + k for j in (d[i] for i in range(k))]
        match += [j if j < m else j - m + k for j in (d[m + i] for i in range(k))]
        out.terms[BrauerDiagram(match)] = c
    return out


@lru_cache(maxsize=None)
def _jm_echelon(k: int) -> SparseEchelon:
    ech = SparseEchelon()
    for d in all_diagrams(k):
        for pos in range(k):
            vec: dict = {}
            for dd in (d, transpose_diagram(d, pos)):
                vec[dd] = vec.get(dd, 0) + 1
            ech.add(vec, tag=(d, pos + 1))
    return ech


def jm_membership(x: BrauerElement, k: int, m: int | None = None):
    """Decide whether ``x`` lies in the span of ``d + d^{t_a}`` (d on the first k legs, a <= k).

    Returns a :class:`JmCertificate` on success and ``None`` otherwise.
    """
    m = x.size if m is None else m
    if x.size != m or not 1 <= k <= m:
        raise InvalidArgument(f"bad sizes k={k}, m={m} for element of size {x.size}")
    small = restrict(x, k)
    residual, combo = _jm_echelon(k).reduce(small.terms)
    if residual:
        return None
    node_map = list(range(k)) + [m + i for i in range(k)]
    decomposition = []
    for (d, a), c in sorted(combo.items()):
        if c == 0:
            continue
        big = list(BrauerDiagram.identity(m))
        for i, j in enumerate(d):
            big[node_map[i]] = node_map[j]
        decomposition.append((BrauerDiagram(big), a, as_ratfun(c)))
    cert = JmCertificate(m, decomposition)
    if not cert.verify(x):
        raise AssertionError("certificate failed re-expansion")
    return cert


# ---------------------------------------------------------------------------
# decomposition into generator words (used by the tensor representation)


def permutation_word(perm):
    """Adjacent transpositions ``i`` with ``from_permutation(perm) = s_{i1} s_{i2} ...``."""
    p = list(perm)
    rights = []
    while True:
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                rights.append(i)
                break
        else:
            break
    return rights[::-1]


@lru_cache(maxsize=1 << 16)
def diagram_word(d: BrauerDiagram):
    """Word of adjacent generators ``("s", i)``/``("e", i)`` (0-based) whose product is ``d``.

    The diagram is written as ``σ · ε_1 ε_3 … ε_{2r-1} · π`` with permutation diagrams σ, π.
    """
    m = d.size
    tops, bots, thr = d.top_arcs(), d.bottom_arcs(), d.throughs()
    r = len(tops)
    p = [0] * m  # top permutation: T_i -> B_{p(i)}
    q = [0] * m  # bottom permutation: T_k -> B_{q(k)}
    for t, (a, b) in enumerate(tops):
        p[a], p[b] = 2 * t, 2 * t + 1
    for t, (a, b) in enumerate(bots):
        q[2 * t], q[2 * t + 1] = a, b
    for j, (a, b) in enumerate(thr):
        p[a] = 2 * r + j
        q[2 * r + j] = b
    word = [("s", i) for i in permutation_word(q)]
    word += [("e", 2 * t) for t in range(r)]
    word += [("s", i) for i in permutation_word(p)]
    return tuple(word)


def word_element(word, m: int) -> BrauerElement:
    out = BrauerElement.one(m)
    for kind, i in word:
        g = transposition_diagram(m, i, i + 1) if kind == "s" else contraction_diagram(m, i, i + 1)
        out = out * BrauerElement.from_diagram(g)
    return out


# ---------------------------------------------------------------------------
# the diagrammatic identity catalogue


def _defining_relations(n: int, report):
    """All relations of the Coxeter-style presentation in B_n."""
    w = RatFun.omega()
    one = BrauerElement.one(n)
    sg = [None] + [s(a, a + 1, n) for a in range(1, n)]
    eg = [None] + [eps(a, a + 1, n) for a in range(1, n)]
    tag = f"B{n}"
    for a in range(1, n):
        report.add(f"{tag} s_{a}^2 = 1", sg[a] * sg[a] == one)
        report.add(f"{tag} e_{a}^2 = ω e_{a}", eg[a] * eg[a] == eg[a].scale(w))
        report.add(f"{tag} s_{a} e_{a} = e_{a} s_{a} = e_{a}",
                   sg[a] * eg[a] == eg[a] and eg[a] * sg[a] == eg[a])
        for b in range(a + 2, n):
            report.add(f"{tag} far commutation ({a},{b})",
                       sg[a] * sg[b] == sg[b] * sg[a]
                       and eg[a] * eg[b] == eg[b] * eg[a]
                       and sg[a] * eg[b] == eg[b] * sg[a]
                       and sg[b] * eg[a] == eg[a] * sg[b])
        if a + 1 < n:
            b = a + 1
            report.add(f"{tag} braid s_{a} s_{b} s_{a}", sg[a] * sg[b] * sg[a] == sg[b] * sg[a] * sg[b])
            report.add(f"{tag} e_{a} e_{b} e_{a} = e_{a}", eg[a] * eg[b] * eg[a] == eg[a])
            report.add(f"{tag} e_{b} e_{a} e_{b} = e_{b}", eg[b] * eg[a] * eg[b] == eg[b])
            report.add(f"{tag} s_{a} e_{b} e_{a} = s_{b} e_{a}", sg[a] * eg[b] * eg[a] == sg[b] * eg[a])
            report.add(f"{tag} e_{b} e_{a} s_{b} = e_{b} s_{a}", eg[b] * eg[a] * sg[b] == eg[b] * sg[a])
    # s_ab and ε_ab agree with the conjugation words that define them
    for a in range(1, n):
        for b in range(a + 2, n + 1):
            conj = BrauerElement.one(n)
            for c in range(a, b - 1):
                conj = conj * sg[c]
            inv = BrauerElement.one(n)
            for c in range(b - 2, a - 1, -1):
                inv = inv * sg[c]
            report.add(f"{tag} s_({a},{b}) word", s(a, b, n) == conj * sg[b - 1] * inv)
            report.add(f"{tag} e_({a},{b}) word", eps(a, b, n) == conj * eg[b - 1] * inv)


def _symmetriser_properties(k: int, report):
    S = brauer_symmetriser(k)
    report.add(f"s^({k}) closed form = expanded recursion", S == symmetriser_by_recursion(k))
    report.add(f"s^({k}) closed form = factored recursion", S == symmetriser_by_factored_recursion(k))
    report.add(f"s^({k}) idempotent", S * S == S)
    zero = BrauerElement.zero(k)
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            sab, eab = s(a, b, k), eps(a, b, k)
            report.add(f"s^({k}) absorbs s_({a},{b})", sab * S == S and S * sab == S)
            report.add(f"s^({k}) kills e_({a},{b})", eab * S == zero and S * eab == zero)
    H = group_symmetriser(k)
    report.add(f"h^({k}) idempotent", H * H == H)


def _extended_identities(m: int, report):
    """Identities inside B_{2m+1}(ω), legs labelled 0..2m."""
    L = 2 * m + 1
    w = RatFun.omega()
    tag = f"B{L}"

    def S_(a, b):
        return s(a, b, L, base=0)

    def E_(a, b):
        return eps(a, b, L, base=0)

    def P_(a, b):
        return phi(a, b, L, base=0)

    def sym(k):
        if k == 0:
            return BrauerElement.one(L)
        return brauer_symmetriser(k, L, legs=range(1, k + 1))

    zero = BrauerElement.zero(L)
    for a in range(1, m + 1):
        ea = E_(a, m + a)
        for b in range(a + 1, m + 1):
            eb = E_(b, m + b)
            report.add(f"{tag} cyclic-1 e e s_ab ({a},{b})", ea * eb * S_(a, b) == ea * eb * S_(m + a, m + b))
            report.add(f"{tag} cyclic-1 e e e_ab ({a},{b})", ea * eb * E_(a, b) == ea * eb * E_(m + a, m + b))
            report.add(f"{tag} cyclic-1 s_ab e e ({a},{b})", S_(m + a, m + b) * ea * eb == S_(a, b) * ea * eb)
            report.add(f"{tag} cyclic-1 e_ab e e ({a},{b})", E_(m + a, m + b) * ea * eb == E_(a, b) * ea * eb)
        report.add(f"{tag} cyclic-2 e s_0a = e e_0,m+a ({a})", ea * S_(0, a) == ea * E_(0, m + a))
        report.add(f"{tag} cyclic-2 e_0,m+a e = s_0a e ({a})", E_(0, m + a) * ea == S_(0, a) * ea)
        report.add(f"{tag} cyclic-2 e e_0a = e s_0,m+a ({a})", ea * E_(0, a) == ea * S_(0, m + a))
        report.add(f"{tag} cyclic-2 s_0,m+a e = e_0a e ({a})", S_(0, m + a) * ea == E_(0, a) * ea)

    # relations used for the integral form
    for ell in range(1, m + 1):
        q = BrauerElement.one(L)
        for c in range(1, ell + 1):
            q = q * E_(c, m + c)
        for b in range(1, ell + 1):
            sb = S_(b, m + b)
            report.add(f"{tag} Q^({ell}) = Q^({ell}) s_b,m+b = s_b,m+b Q^({ell}) (b={b})",
                       q * sb == q and sb * q == q)
            for a in range(L):
                if a in (b, m + b):
                    continue
                report.add(
                    f"{tag} Q^({ell})(s+e)_ab = Q^({ell})(s+e)_a,m+b (a={a},b={b})",
                    q * (S_(a, b) + E_(a, b)) == q * (S_(a, m + b) + E_(a, m + b)),
                )

    for k in range(1, m + 1):
        ek = E_(k, m + k)
        Sk, Sk1 = sym(k), sym(k - 1)
        c_sandwich = (w + k - 3) * (w + 2 * k - 2) / (k * (w + 2 * k - 4))
        report.add(f"{tag} e s^(k) e = c s^(k-1) e (k={k})", ek * Sk * ek == (Sk1 * ek).scale(c_sandwich))
        c_phi = (w + 2 * k - 2) / (k * (w + 2 * k - 4))
        total = BrauerElement.zero(L)
        for a in range(1, k):
            total = total + P_(0, a)
        report.add(f"{tag} e s^(k) phi_0k e = c s^(k-1) sum phi_0a e (k={k})", ek * Sk * P_(0, k) * ek == (Sk1 * total * ek).scale(c_phi))
        report.add(f"{tag} e phi_0k e = 0 (k={k})", ek * P_(0, k) * ek == zero)
        for a in range(1, k):
            report.add(f"{tag} e s_ak phi_0k e = phi_0a e ({a},{k})",
                       ek * S_(a, k) * P_(0, k) * ek == P_(0, a) * ek)
            report.add(f"{tag} e e_ak phi_0k e = -phi_0a e ({a},{k})",
                       ek * E_(a, k) * P_(0, k) * ek == -(P_(0, a) * ek))
            for b in range(1, k):
                if b == a:
                    continue
                report.add(f"{tag} e s_ak e_bk phi_0k e = e_ab phi_0a e ({a},{b},{k})",
                           ek * S_(a, k) * E_(b, k) * P_(0, k) * ek == E_(a, b) * P_(0, a) * ek)
                if a < b:
                    report.add(f"{tag} e_ab phi_0a s^({k - 1}) = 0 ({a},{b})",
                               E_(a, b) * P_(0, a) * Sk1 == zero)

    Sm = sym(m)
    total = BrauerElement.zero(L)
    for a in range(1, m + 1):
        total = total + P_(0, a)
    report.add(f"{tag} s^({m}) commutes with sum phi_0a", Sm * total == total * Sm)
    for a in range(1, m):
        report.add(f"{tag} s^({m}) phi_0m s_am = s^({m}) phi_0a (a={a})",
                   Sm * P_(0, m) * S_(a, m) == Sm * P_(0, a))
        report.add(f"{tag} s^({m}) phi_0m e_am = 0 (a={a})", Sm * P_(0, m) * E_(a, m) == zero)
        report.add(f"{tag} s^({m}) phi_0m phi_am = s^({m}) phi_0a (a={a})",
                   Sm * P_(0, m) * P_(a, m) == Sm * P_(0, a))
        report.add(f"{tag} phi_am phi_0m s^({m}) = phi_0a s^({m}) (a={a})",
                   P_(a, m) * P_(0, m) * Sm == P_(0, a) * Sm)
    for x in range(1, m + 1):
        for y in range(x + 1, m + 1):
            report.add(f"{tag} phi_({x},{y}) s^({m}) = s^({m}) phi_({x},{y}) = s^({m})",
                       P_(x, y) * Sm == Sm and Sm * P_(x, y) == Sm)
    # conjugation rules for s_wx used when moving permutations through words
    legs = range(min(L, 4))
    for wv, xv, yv, zv in itertools.permutations(legs, 4):
        if wv < xv and yv < zv:
            report.add(f"{tag} s_wx phi_yz = phi_yz s_wx ({wv},{xv},{yv},{zv})",
                       S_(wv, xv) * P_(yv, zv) == P_(yv, zv) * S_(wv, xv))
    for wv, xv, yv in itertools.permutations(range(min(L, 4)), 3):
        report.add(f"{tag} s_wx phi_xy = phi_wy s_wx ({wv},{xv},{yv})",
                   S_(wv, xv) * P_(xv, yv) == P_(wv, yv) * S_(wv, xv))
        report.add(f"{tag} s_wx phi_wx = phi_wx s_wx ({wv},{xv})",
                   S_(wv, xv) * P_(wv, xv) == P_(wv, xv) * S_(wv, xv))


def identity_suite(m_max: int = 4):
    """Check the diagrammatic identity catalogue exactly over Q(ω) for sizes up to B_{2m_max+1}."""
    from .reports import VerificationReport

    if not 1 <= m_max <= 4:
        raise InvalidArgument("m_max must lie in 1..4")
    report = VerificationReport("brauer", {"m_max": m_max})
    for n in range(2, 2 * m_max + 2):
        _defining_relations(n, report)
    for k in range(1, m_max + 1):
        _symmetriser_properties(k, report)
    for m in range(1, m_max + 1):
        _extended_identities(m, report)
    for k in range(1, m_max + 1):
        x = brauer_symmetriser(k).scale(gamma(k)) - group_symmetriser(k)
        cert = jm_membership(x, k)
        report.add(f"gamma_{k} s^({k}) - h^({k}) in J_{k}", cert is not None and cert.verify(x))
    for ell in (1, 3, 5):
        if ell <= 2 * m_max - 1:
            h = group_symmetriser(ell)
            cert = jm_membership(h, ell)
            report.add(f"h^({ell}) in J_{ell}", cert is not None and cert.verify(h))
    return report.finish()
