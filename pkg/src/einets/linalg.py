"""Exact rational spans of integer matrices.

Matrices are flattened row-major.  A span is stored as its reduced
row-echelon basis over the rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from einets import kernels

Rational = Fraction


def flatten(m) -> tuple:
    return tuple(x for row in m for x in row)


def _to_int_rows(vecs) -> list[list[int]]:
    """Scale rational rows to integer rows with the same span."""
    out = []
    for v in vecs:
        den = 1
        for x in v:
            d = Fraction(x).denominator
            den = den * d // _gcd(den, d)
        out.append([int(Fraction(x) * den) for x in v])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class RationalMatrixSpace:
    ambient_dim: int
    key: tuple  # primitive-integer RREF rows

    @property
    def dim(self) -> int:
        return len(self.key)

    @property
    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        """Basis rows in strict reduced row-echelon form."""
        rows = []
        for row in self.key:
            pivot = next(x for x in row if x)
            rows.append(tuple(Fraction(x, pivot) for x in row))
        return tuple(rows)

    def basis_matrices(self, n: int) -> list[list[list[Fraction]]]:
        return [[list(b[i * n:(i + 1) * n]) for i in range(n)] for b in self.basis]


def span_of_vectors(vecs: Sequence[Sequence], ambient_dim: int | None = None) -> RationalMatrixSpace:
    vecs = list(vecs)
    if ambient_dim is None:
        if not vecs:
            raise ValueError("ambient dimension needed for an empty family")
        ambient_dim = len(vecs[0])
    if any(len(v) != ambient_dim for v in vecs):
        raise ValueError("vector length mismatch")
    rows = _to_int_rows(vecs) if any(isinstance(x, Fraction) for v in vecs for x in v) else [list(v) for v in vecs]
    return RationalMatrixSpace(ambient_dim, kernels.rref_key(rows))


def span_of(mats: Sequence) -> RationalMatrixSpace:
    """Span of a list of equally sized matrices."""
    if not mats:
        raise ValueError("span_of needs at least one matrix")
    shape = (len(mats[0]), len(mats[0][0]) if len(mats[0]) else 0)
    for m in mats:
        if len(m) != shape[0] or any(len(r) != shape[1] for r in m):
            raise ValueError("matrices have mismatched dimensions")
    return span_of_vectors([flatten(m) for m in mats], shape[0] * shape[1])


def _check_dims(a: int, b: int):
    if a != b:
        raise ValueError(f"ambient dimension mismatch: {a} vs {b}")


def contains(space: RationalMatrixSpace, mat) -> bool:
    v = flatten(mat) if mat and isinstance(mat[0], (list, tuple)) else tuple(mat)
    _check_dims(space.ambient_dim, len(v))
    rows = [list(r) for r in space.key] + _to_int_rows([v])
    return kernels.rank(rows) == space.dim


def spaces_equal(a: RationalMatrixSpace, b: RationalMatrixSpace) -> bool:
    _check_dims(a.ambient_dim, b.ambient_dim)
    return a.key == b.key


def rank(mats: Sequence) -> int:
    return span_of(mats).dim
