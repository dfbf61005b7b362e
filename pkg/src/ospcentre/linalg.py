"""Sparse row reduction over an exact field.

Vectors are dicts mapping comparable coordinate keys to field elements.  The
spanning set is reduced over :class:`~fractions.Fraction`; a target vector may
carry coefficients in any ring that accepts multiplication by a Fraction
(e.g. :class:`~ospcentre.coeff.RatFun`), which is how subspace membership over
Q(ω) is decided for subspaces defined over Q.
"""
from __future__ import annotations

from fractions import Fraction


def _axpy(target: dict, scale, row: dict):
    for key, val in row.items():
        new = target.get(key, 0) - scale * val
        if new == 0:
            target.pop(key, None)
        else:
            target[key] = new


class SparseEchelon:
    """Incremental echelon form of a set of tagged vectors.

    Each stored row has its smallest key as pivot with coefficient 1.  Alongside
    every row we keep its expression in terms of the tags of the inserted
    vectors, so reductions come with certificates.
    """

    def __init__(self, track=True):
        self.rows: dict = {}
        self.combos: dict = {}
        self.track = track

    def __len__(self):
        return len(self.rows)

    def add(self, vec: dict, tag=None) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        combo = {tag: Fraction(1)} if self.track else None
        while True:
            vec = {k: v for k, v in vec.items() if v != 0}
            if not vec:
                return False
            p = min(vec)
            row = self.rows.get(p)
            if row is None:
                break
            c = vec[p]
            _axpy(vec, c, row)
            if combo is not None:
                _axpy(combo, c, self.combos[p])
        inv = Fraction(1) / vec[p]
        self.rows[p] = {k: v * inv for k, v in vec.items()}
        if combo is not None:
            self.combos[p] = {k: v * inv for k, v in combo.items()}
        return True

    def reduce(self, vec: dict):
        """Return ``(residual, combination)`` with ``vec = residual + sum(c * tag_vector)``.

        The residual is zero exactly when ``vec`` lies in the span.
        """
        combo: dict = {}
        vec = {k: v for k, v in vec.items() if v != 0}
        while True:
            pivots = [k for k in vec if k in self.rows]
            if not pivots:
                break
            p = min(pivots)
            c = vec[p]
            _axpy(vec, c, self.rows[p])
            if self.track:
                for tag, val in self.combos[p].items():
                    new = combo.get(tag, 0) + c * val
                    if new == 0:
                        combo.pop(tag, None)
                    else:
                        combo[tag] = new
        return vec, combo
