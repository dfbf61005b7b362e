"""Segal–Sugawara vectors Φ_m for osp_{M|2n} and the checks run on them.

Φ_m is stored applied to the vacuum, as a :class:`VacuumElement` whose
coefficients are polynomials in K.  Two constructions are provided:

* :func:`phi_integral` sums ``Y_{m,ℓ}(M-2n-1) c_λ str_{1..ℓ} H^(ℓ) F[-λ]`` over
  partitions of even length.  Only group symmetrisers appear, so it is
  defined for every signature.
* :func:`phi_rational` takes the τ-free part of
  ``γ_m str_{1..m} S^(m) (τ+F[-1]_1)…(τ+F[-1]_m)``; it raises
  :class:`PoleAtEvaluation` when ``γ_m s^(m)`` is singular at ω = M-2n.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .brauer import brauer_symmetriser, group_symmetriser
from .coeff import VarPoly, binomial_at, gamma, render_poly
from .errors import InvalidArgument, PoleAtEvaluation
from .osp import build_structure
from .reports import VerificationReport
from .superspace import Signature, product, rho, supertrace_product
from .uea import (
    TAU,
    VacuumElement,
    engine,
    f_matrix,
    f_tau,
    letter,
    letter_text,
    scalar_value,
)

# -- partitions and weights ---------------------------------------------------


def partitions(m: int):
    """All partitions of ``m`` in reverse-lexicographic order."""
    if m < 0:
        raise InvalidArgument(f"negative m={m}")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return list(gen(m, m))


def partitions_even_length(m: int):
    if m < 2:
        raise InvalidArgument(f"need m >= 2, got {m}")
    return [lam for lam in partitions(m) if len(lam) % 2 == 0]


def _check_partition(lam):
    lam = tuple(lam)
    if not lam or any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise InvalidArgument(f"not a partition: {lam}")
    return lam


def cycle_count(lam) -> int:
    """Number of permutations of cycle type ``lam``: m!/z_λ."""
    lam = _check_partition(lam)
    z = 1
    for part in set(lam):
        mult = lam.count(part)
        z *= part ** mult * factorial(mult)
    return factorial(sum(lam)) // z


def y_poly(m: int, ell: int) -> VarPoly:
    """``Y_{m,ℓ}(T) = (ℓ!/m!) Π_{k=ℓ}^{m-1} (T+k)``."""
    if not 2 <= ell <= m:
        raise InvalidArgument(f"need 2 <= ell <= m, got ell={ell}, m={m}")
    out = VarPoly((Fraction(factorial(ell), factorial(m)),), "T")
    for k in range(ell, m):
        out = out * VarPoly((k, 1), "T")
    return out


# -- Φ_m -----------------------------------------------------------------------


@dataclass
class SSVector:
    sig: Signature
    m: int
    value: VacuumElement
    expansion: list = field(default_factory=list)  # [(λ, c_λ, Y value)]
    reports: list = field(default_factory=list)

    def to_json(self):
        return {
            "M": self.sig.M,
            "n": self.sig.n,
            "m": self.m,
            "terms": self.value.to_json(),
            "expansion": [{"lambda": list(lam), "c": c, "Y": str(y)} for lam, c, y in self.expansion],
            "reports": [r.to_json(timing=False) for r in self.reports],
        }

    def to_text(self) -> str:
        lines = [f"Phi_{self.m} for {self.sig}"]
        for lam, c, y in self.expansion:
            lines.append(f"  lambda={lam}: c={c}, Y={y}")
        lines.append(f"  = {self.value.to_text()}")
        return "\n".join(lines)


def _check_m(m):
    if m < 2:
        raise InvalidArgument(f"need m >= 2, got {m}")


def _f_product(modes, sig: Signature, L: int):
    """``F[r_1]_1 … F[r_ℓ]_ℓ`` on ``L`` legs (1-based)."""
    return product(*[f_matrix(r, a + 1, L, sig) for a, r in enumerate(modes)])


@lru_cache(maxsize=None)
def _group_image(ell: int, sig: Signature):
    return rho(group_symmetriser(ell), sig)


@lru_cache(maxsize=None)
def trace_term(sig: Signature, modes: tuple) -> VacuumElement:
    """``str_{1..ℓ} H^(ℓ) F[r_1]_1 … F[r_ℓ]_ℓ`` applied to the vacuum."""
    ell = len(modes)
    op = supertrace_product(_group_image(ell, sig), _f_product(modes, sig, ell), range(ell))
    return scalar_value(op, "vacuum")


@lru_cache(maxsize=None)
def _phi_integral(sig: Signature, m: int) -> SSVector:
    value = VacuumElement(sig)
    expansion = []
    for lam in partitions_even_length(m):
        c = cycle_count(lam)
        y = y_poly(m, len(lam))(sig.sdim - 1)
        expansion.append((lam, c, y))
        if y:
            value = value + trace_term(sig, tuple(-p for p in lam)).scale(c * y)
    return SSVector(sig, m, value, expansion)


def phi_integral(sig: Signature, m: int) -> SSVector:
    _check_m(m)
    res = _phi_integral(sig, m)
    return SSVector(sig, m, res.value, list(res.expansion))


@lru_cache(maxsize=None)
def _rational_image(sig: Signature, m: int):
    return rho(brauer_symmetriser(m).scale(gamma(m)), sig)


def phi_rational(sig: Signature, m: int) -> SSVector:
    """τ-free part of ``γ_m str S^(m) f_1 … f_m`` on the vacuum; may raise PoleAtEvaluation."""
    _check_m(m)
    S = _rational_image(sig, m)
    F = product(*[f_tau(a, m, sig) for a in range(1, m + 1)])
    value = scalar_value(supertrace_product(S, F, range(m)), "vacuum")
    return SSVector(sig, m, value)


def integral_rational_check(sig: Signature, m: int) -> VerificationReport:
    report = VerificationReport("integral-rational", {"M": sig.M, "n": sig.n, "m": m})
    name = f"phi_rational = phi_integral (m={m})"
    try:
        rat = phi_rational(sig, m)
    except PoleAtEvaluation:
        report.skip(name)
        return report.finish()
    integ = phi_integral(sig, m)
    diff = rat.value - integ.value
    report.add(name, diff.is_zero(), diff.to_text())
    return report.finish()


def odd_length_vanishing(sig: Signature, m: int) -> VerificationReport:
    """Odd-length partitions would contribute ``str H^(ℓ) F[-λ] = 0``."""
    report = VerificationReport("odd-length", {"M": sig.M, "n": sig.n, "m": m})
    for lam in partitions(m):
        if len(lam) % 2:
            v = trace_term(sig, tuple(-p for p in lam))
            report.add(f"str H F[-{lam}] = 0", v.is_zero(), v.to_text())
    return report.finish()


# -- annihilation and commutativity -------------------------------------------


def annihilate(sig: Signature, value: VacuumElement, alpha: int, r: int) -> VacuumElement:
    st = build_structure(sig)
    return VacuumElement(sig, engine(sig, "vacuum").act_element(letter(st, alpha, r), value.terms))


def verify_annihilation(sig: Signature, m: int, modes=(0, 1), level=None) -> VerificationReport:
    """``F_α[r] Φ_m = 0`` for every basis α and r in ``modes``.

    ``level`` defaults to the critical level.  Mode 0 is also checked before
    substituting K.
    """
    _check_m(m)
    modes = sorted(set(modes))
    if any(r < 0 for r in modes):
        raise InvalidArgument(f"modes must be nonnegative, got {modes}")
    level = sig.critical_level if level is None else Fraction(level)
    report = VerificationReport(
        "annihilation", {"M": sig.M, "n": sig.n, "m": m, "modes": modes, "K": str(level)}
    )
    st = build_structure(sig)
    phi = phi_integral(sig, m).value
    for alpha in range(st.dim):
        for r in modes:
            out = annihilate(sig, phi, alpha, r)
            tag = f"F[{alpha},{r}] Phi_{m}"
            if r == 0:
                report.add(f"{tag} = 0 for all K", out.is_zero(), out.to_text())
            at = out.substitute_K(level)
            report.add(f"{tag} = 0 at K={level}", at.is_zero(), at.to_text())
    return report.finish()


def negative_control(sig: Signature, m: int, level=0) -> VerificationReport:
    """At a non-critical level some ``F_α[1] Φ_m`` must be nonzero (when Φ_m ≠ 0)."""
    report = VerificationReport("negative-control", {"M": sig.M, "n": sig.n, "m": m, "K": str(level)})
    phi = phi_integral(sig, m).value
    if phi.is_zero():
        report.skip(f"Phi_{m} nonzero", "Phi_m vanishes")
        return report.finish()
    if Fraction(level) == sig.critical_level:
        raise InvalidArgument("the control level must differ from the critical level")
    st = build_structure(sig)
    hits = [a for a in range(st.dim) if not annihilate(sig, phi, a, 1).substitute_K(level).is_zero()]
    report.add(f"F[α,1] Phi_{m} != 0 for some α at K={level}", bool(hits), "all zero")
    return report.finish()


def commutator(x: VacuumElement, y: VacuumElement) -> VacuumElement:
    eng = engine(x.sig, "U")
    return VacuumElement(x.sig, eng.multiply(x.terms, y.terms)) - VacuumElement(
        x.sig, eng.multiply(y.terms, x.terms)
    )


def verify_commutativity(sig: Signature, degrees=(2, 3)) -> VerificationReport:
    degrees = sorted(set(degrees))
    if not degrees or any(d not in (2, 3, 4) for d in degrees):
        raise InvalidArgument(f"degrees must be a subset of {{2,3,4}}, got {degrees}")
    report = VerificationReport("commutativity", {"M": sig.M, "n": sig.n, "degrees": degrees})
    phis = {d: phi_integral(sig, d).value for d in degrees}
    for i, a in enumerate(degrees):
        for b in degrees[i:]:
            c = commutator(phis[a], phis[b])
            report.add(f"[Phi_{a}, Phi_{b}] = 0", c.is_zero(), c.to_text())
    return report.finish()


# -- ψ-coefficients -------------------------------------------------------------


@dataclass
class TauPolynomial:
    """``ψ_{k0} τ^k + … + ψ_{kk}``; ``coeffs[j]`` is ψ_{kj}."""

    sig: Signature
    k: int
    coeffs: list

    def to_json(self):
        return {"k": self.k, "psi": [c.to_json() for c in self.coeffs]}


def tau_polynomial(sig: Signature, k: int) -> TauPolynomial:
    """``γ_k str_{1..k} S^(k) f_1 … f_k`` in U, split by powers of τ (τ kept to the right)."""
    if k < 0:
        raise InvalidArgument(f"negative k={k}")
    if k == 0:
        return TauPolynomial(sig, 0, [VacuumElement.vacuum(sig)])
    S = _rational_image(sig, k)
    F = product(*[f_tau(a, k, sig) for a in range(1, k + 1)])
    total = scalar_value(supertrace_product(S, F, range(k)), "U")
    parts = [dict() for _ in range(k + 1)]
    for (mono, kd), c in total.terms.items():
        p = 0
        while p < len(mono) and mono[len(mono) - 1 - p] == TAU:
            p += 1
        parts[k - p][(mono[: len(mono) - p], kd)] = c
    return TauPolynomial(sig, k, [VacuumElement(sig, t) for t in parts])


def psi_relation_check(sig: Signature, m: int, k: int | None = None) -> VerificationReport:
    """``ψ_{ka} = binom(ω+k-2, k-a) ψ_{aa}`` for 0 <= a <= k."""
    k = m if k is None else k
    if not 0 <= k <= m:
        raise InvalidArgument(f"need 0 <= k <= m, got k={k}, m={m}")
    report = VerificationReport("psi", {"M": sig.M, "n": sig.n, "m": m, "k": k})
    polys = []
    for a in range(k + 1):
        try:
            polys.append(tau_polynomial(sig, a))
        except PoleAtEvaluation:
            polys.append(None)
    w = sig.omega
    for a in range(k + 1):
        name = f"psi_{k}{a} = binom(ω{k - 2:+d},{k - a}) psi_{a}{a}"
        if polys[k] is None or polys[a] is None:
            report.skip(name)
            continue
        rhs = polys[a].coeffs[a].scale(binomial_at(w + k - 2, k - a))
        diff = polys[k].coeffs[a] - rhs
        report.add(name, diff.is_zero(), diff.to_text())
    return report.finish()


# -- evaluation homomorphism --------------------------------------------------


def ev_z(value: VacuumElement, z) -> VacuumElement:
    """Image under t ↦ z, normal ordered in U(osp_{M|2n})."""
    z = Fraction(z)
    if z == 0:
        raise InvalidArgument("z must be nonzero")
    eng = engine(value.sig, "U")
    out = VacuumElement(value.sig)
    for (mono, kd), c in value.terms.items():
        if any(g == TAU for g in mono):
            raise InvalidArgument("ev_z is defined on τ-free elements")
        word = tuple((0, g[1], g[2]) for g in mono)
        weight = z ** sum(g[0] for g in mono)
        out = out + VacuumElement(value.sig, {(mo, kd + k2): c * weight * v for (mo, k2), v in eng.word(word).items()})
    return out


def ev_centrality_check(sig: Signature, m: int, z) -> VerificationReport:
    if m not in (2, 3):
        raise InvalidArgument(f"need m in {{2,3}}, got {m}")
    report = VerificationReport("centrality", {"M": sig.M, "n": sig.n, "m": m, "z": str(Fraction(z))})
    image = ev_z(phi_integral(sig, m).value, z)
    st = build_structure(sig)
    for alpha in range(st.dim):
        x = VacuumElement(sig, {(((0, alpha, st.parity[alpha]),), 0): 1})
        c = commutator(image, x)
        report.add(f"[ev_z(Phi_{m}), F_{alpha}] = 0", c.is_zero(), c.to_text())
    return report.finish()


def describe_letter(g) -> str:
    return letter_text(g)


def render_y(m: int, ell: int) -> str:
    return render_poly(y_poly(m, ell))
