"""Finite-dimensional Lie algebras with exact structure constants.

Structure constants are stored sparsely: brackets[(i, j)] maps k to the
coefficient of e_k in [e_i, e_j], with 0-based i < j and only nonzero
entries kept.  Reading (j, i) negates.  The Jacobi identity is validated
eagerly at construction; a violation reports the offending basis triple
(1-based, to match the external bracket format).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .errors import (
    DegenerateError,
    JacobiError,
    OwnerMismatchError,
    SingularMatrixError,
    TowerMismatchError,
)
from .fields import FieldElement, FieldTower, format_element, lift_to


def _coerce(field: FieldTower, value) -> FieldElement:
    if isinstance(value, FieldElement):
        if value.field == field:
            return value
        return lift_to(value, field)
    return field.from_rational(Fraction(value))


class LieAlgebra:
    """Immutable-by-convention Lie algebra over one field tower."""

    __slots__ = ("field", "dim", "brackets", "labels", "meta")

    def __init__(self, field: FieldTower, dim: int, brackets,
                 labels: Optional[Sequence[str]] = None,
                 meta: Optional[dict] = None):
        if dim < 0:
            raise DegenerateError("negative dimension")
        self.field = field
        self.dim = dim
        clean: dict = {}
        for (i, j), comps in brackets.items():
            if not (0 <= i < j < dim):
                raise DegenerateError(
                    "bracket indices (%d,%d) out of range or not i<j (0-based)"
                    % (i, j))
            entry = {}
            for k, c in comps.items():
                if not 0 <= k < dim:
                    raise DegenerateError("target index %d out of range" % k)
                cv = _coerce(field, c)
                if not cv.is_zero():
                    entry[k] = cv
            if entry:
                clean[(i, j)] = entry
        self.brackets = clean
        if labels is None:
            labels = tuple("X%d" % (t + 1) for t in range(dim))
        else:
            labels = tuple(labels)
            if len(labels) != dim:
                raise DegenerateError("label count does not match dimension")
        self.labels = labels
        self.meta = dict(meta) if meta else {}
        self._validate_jacobi()

    # ------------------------------------------------------------ basics

    def bracket_basis(self, i: int, j: int) -> dict:
        """[e_i, e_j] as a sparse {k: coeff} dict."""
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        entry = self.brackets.get((j, i), {})
        return {k: -c for k, c in entry.items()}

    def bracket_coords(self, u: Sequence[FieldElement],
                       v: Sequence[FieldElement]) -> list[FieldElement]:
        """[u, v] in coordinates; bilinear expansion over the sparse table."""
        out = [self.field.zero()] * self.dim
        for (i, j), comps in self.brackets.items():
            ui, uj = u[i], u[j]
            vi, vj = v[i], v[j]
            coeff = ui * vj - uj * vi
            if coeff.is_zero():
                continue
            for k, c in comps.items():
                out[k] = out[k] + coeff * c
        return out

    def bracket(self, u: "Vector", v: "Vector") -> "Vector":
        self._own(u)
        self._own(v)
        return Vector(self, tuple(self.bracket_coords(u.coords, v.coords)))

    def basis_vector(self, i: int) -> "Vector":
        coords = [self.field.zero()] * self.dim
        coords[i] = self.field.one()
        return Vector(self, tuple(coords))

    def vector(self, coords: Sequence) -> "Vector":
        cs = [_coerce(self.field, c) for c in coords]
        if len(cs) != self.dim:
            raise OwnerMismatchError("coordinate count != dimension")
        return Vector(self, tuple(cs))

    def structure_constant(self, i: int, j: int, k: int) -> FieldElement:
        return self.bracket_basis(i, j).get(k, self.field.zero())

    def ad_matrix(self, coords: Sequence[FieldElement]) -> list[list]:
        """Matrix of ad_x: column j is [x, e_j]."""
        cols = []
        for j in range(self.dim):
            col = [self.field.zero()] * self.dim
            for i in range(self.dim):
                ci = coords[i]
                if ci.is_zero():
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    col[k] = col[k] + ci * c
            cols.append(col)
        return [[cols[j][r] for j in range(self.dim)] for r in range(self.dim)]

    def bracket_table(self) -> list[tuple[int, int, int, FieldElement]]:
        """Sorted (i, j, k, coeff) rows, 1-based, for serialization."""
        rows = []
        for (i, j), comps in sorted(self.brackets.items()):
            for k in sorted(comps):
                rows.append((i + 1, j + 1, k + 1, comps[k]))
        return rows

    def relabel(self, labels: Sequence[str]) -> "LieAlgebra":
        return LieAlgebra(self.field, self.dim, self.brackets, labels,
                          self.meta)

    def with_meta(self, **meta) -> "LieAlgebra":
        merged = dict(self.meta)
        merged.update(meta)
        return LieAlgebra(self.field, self.dim, self.brackets, self.labels,
                          merged)

    def __eq__(self, other) -> bool:
        """Equality of field, dimension and structure constants only."""
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and self.brackets == other.brackets)

    def __hash__(self):
        items = tuple(sorted((ij, tuple(sorted(comps.items())))
                             for ij, comps in self.brackets.items()))
        return hash((self.field, self.dim, items))

    def __repr__(self) -> str:
        name = self.meta.get("name", "LieAlgebra")
        return "%s(dim=%d over %r)" % (name, self.dim, self.field)

    def _own(self, v: "Vector") -> None:
        if v.algebra is not self and v.algebra != self:
            raise OwnerMismatchError("vector belongs to a different algebra")

    # ------------------------------------------------------------ validation

    def _validate_jacobi(self) -> None:
        support = set()
        for (i, j) in self.brackets:
            support.add(i)
            support.add(j)
        # A triple can only fail if at least two of its members bracket
        # nontrivially with something, but double brackets through any pair
        # matter; restrict to indices appearing in the table plus pairs.
        idx = sorted(support)
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                for c in range(b + 1, len(idx)):
                    i, j, k = idx[a], idx[b], idx[c]
                    acc: dict = {}
                    self._jacobi_term(acc, i, j, k)
                    self._jacobi_term(acc, j, k, i)
                    self._jacobi_term(acc, k, i, j)
                    bad = {m: v for m, v in acc.items() if not v.is_zero()}
                    if bad:
                        raise JacobiError((i + 1, j + 1, k + 1), bad)

    def _jacobi_term(self, acc: dict, i: int, j: int, k: int) -> None:
        # [e_i, [e_j, e_k]]
        for m, c in self.bracket_basis(j, k).items():
            for t, d in self.bracket_basis(i, m).items():
                acc[t] = acc.get(t, self.field.zero()) + c * d


@dataclass(frozen=True)
class Vector:
    algebra: LieAlgebra
    coords: tuple

    def __add__(self, other: "Vector") -> "Vector":
        self.algebra._own(other)
        return Vector(self.algebra, tuple(a + b for a, b in
                                          zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self.algebra._own(other)
        return Vector(self.algebra, tuple(a - b for a, b in
                                          zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(self.algebra, tuple(-a for a in self.coords))

    def scale(self, c) -> "Vector":
        cv = _coerce(self.algebra.field, c)
        return Vector(self.algebra, tuple(cv * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __repr__(self) -> str:
        parts = []
        for c, label in zip(self.coords, self.algebra.labels):
            if not c.is_zero():
                parts.append("(%s)%s" % (format_element(c), label))
        return " + ".join(parts) if parts else "0"


# ------------------------------------------------------------------ maps

@dataclass(frozen=True)
class LinearMap:
    """Linear map between algebras; matrix rows are target coordinates."""

    source: LieAlgebra
    target: LieAlgebra
    matrix: tuple

    @staticmethod
    def make(source: LieAlgebra, target: LieAlgebra, rows) -> "LinearMap":
        mat = tuple(tuple(_coerce(target.field, c) for c in row)
                    for row in rows)
        if len(mat) != target.dim or any(len(r) != source.dim for r in mat):
            raise OwnerMismatchError("matrix shape does not match algebras")
        return LinearMap(source, target, mat)

    def apply(self, v: Vector) -> Vector:
        self.source._own(v)
        coords = linalg.mat_vec([list(r) for r in self.matrix],
                                list(v.coords), self.target.field)
        return Vector(self.target, tuple(coords))

    def column(self, i: int) -> list[FieldElement]:
        return [row[i] for row in self.matrix]

    def is_bijective(self) -> bool:
        if self.source.dim != self.target.dim:
            return False
        return linalg.rank([list(r) for r in self.matrix],
                           self.target.field) == self.source.dim

    def verify(self) -> bool:
        return verify_morphism(self.source, self.target, self.matrix)


@dataclass(frozen=True)
class SemiLinearMap:
    """sigma-semilinear map: phi(c x) = sigma(c) phi(x)."""

    source: LieAlgebra
    target: LieAlgebra
    sigma: object
    matrix: tuple

    def verify(self) -> bool:
        return verify_sigma_isomorphism(self.source, self.target, self.sigma,
                                        self.matrix, require_bijective=False)


def verify_morphism(source: LieAlgebra, target: LieAlgebra, matrix) -> bool:
    """Exact check that matrix defines a Lie algebra morphism on the basis."""
    if source.field != target.field:
        raise TowerMismatchError("morphism between algebras over different "
                                 "fields")
    mat = [[_coerce(target.field, c) for c in row] for row in matrix]
    if len(mat) != target.dim or any(len(r) != source.dim for r in mat):
        return False
    field = target.field
    cols = [[mat[r][i] for r in range(target.dim)] for i in range(source.dim)]
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            lhs = [field.zero()] * target.dim
            for k, c in source.bracket_basis(i, j).items():
                for r in range(target.dim):
                    lhs[r] = lhs[r] + c * cols[k][r]
            rhs = target.bracket_coords(cols[i], cols[j])
            if any(not (a - b).is_zero() for a, b in zip(lhs, rhs)):
                return False
    return True


def verify_sigma_isomorphism(source: LieAlgebra, target: LieAlgebra, sigma,
                             matrix, require_bijective: bool = True) -> bool:
    """Check a sigma-semilinear morphism (and bijectivity by default)."""
    if source.field != target.field:
        raise TowerMismatchError("sigma-isomorphism requires one common field")
    mat = [[_coerce(target.field, c) for c in row] for row in matrix]
    if len(mat) != target.dim or any(len(r) != source.dim for r in mat):
        return False
    field = target.field
    cols = [[mat[r][i] for r in range(target.dim)] for i in range(source.dim)]
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            lhs = [field.zero()] * target.dim
            for k, c in source.bracket_basis(i, j).items():
                sc = sigma(c)
                for r in range(target.dim):
                    lhs[r] = lhs[r] + sc * cols[k][r]
            rhs = target.bracket_coords(cols[i], cols[j])
            if any(not (a - b).is_zero() for a, b in zip(lhs, rhs)):
                return False
    if require_bijective:
        if source.dim != target.dim:
            return False
        if linalg.rank(mat, field) != source.dim:
            return False
    return True


# ------------------------------------------------------------------ sums

def direct_sum(*algebras: LieAlgebra) -> LieAlgebra:
    """Direct sum with block-diagonal brackets; labels get block suffixes."""
    if not algebras:
        raise DegenerateError("direct sum of no algebras")
    field = algebras[0].field
    for a in algebras[1:]:
        if a.field != field:
            raise TowerMismatchError("direct sum over mixed fields")
    dim = sum(a.dim for a in algebras)
    brackets = {}
    labels = []
    offset = 0
    for blk, a in enumerate(algebras):
        for (i, j), comps in a.brackets.items():
            brackets[(i + offset, j + offset)] = {
                k + offset: c for k, c in comps.items()}
        suffix = chr(ord("a") + blk) if len(algebras) > 1 else ""
        labels.extend(lab + suffix for lab in a.labels)
        offset += a.dim
    meta = {"direct_sum": [a.meta.get("name", "block%d" % t)
                           for t, a in enumerate(algebras)]}
    return LieAlgebra(field, dim, brackets, labels, meta)


def change_basis(L: LieAlgebra, P) -> LieAlgebra:
    """Rewrite L in the basis whose j-th vector is column j of P."""
    field = L.field
    mat = [[_coerce(field, c) for c in row] for row in P]
    if len(mat) != L.dim or any(len(r) != L.dim for r in mat):
        raise OwnerMismatchError("change of basis matrix has wrong shape")
    try:
        inv = linalg.inverse(mat, field)
    except SingularMatrixError:
        raise SingularMatrixError("change of basis matrix is singular")
    cols = [[mat[r][j] for r in range(L.dim)] for j in range(L.dim)]
    brackets = {}
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            w = L.bracket_coords(cols[a], cols[b])
            new = linalg.mat_vec(inv, w, field)
            entry = {k: c for k, c in enumerate(new) if not c.is_zero()}
            if entry:
                brackets[(a, b)] = entry
    return LieAlgebra(field, L.dim, brackets,
                      tuple("Y%d" % (t + 1) for t in range(L.dim)), L.meta)


# ------------------------------------------------------------------ spans

def span_rows(L: LieAlgebra, vectors) -> tuple[list, list]:
    """rref rows and pivots of the span of the given coordinate vectors."""
    rows = [list(v) for v in vectors]
    return linalg.rref(rows, L.field)


def bracket_span(L: LieAlgebra, rows_a, rows_b) -> list:
    """Coordinate vectors spanning [span(rows_a), span(rows_b)]."""
    out = []
    for u in rows_a:
        for v in rows_b:
            w = L.bracket_coords(u, v)
            if any(not c.is_zero() for c in w):
                out.append(w)
    return out


def commutator_rows(L: LieAlgebra) -> tuple[list, list]:
    """Echelonized basis of [L, L]."""
    vecs = []
    for (i, j), comps in sorted(L.brackets.items()):
        v = [L.field.zero()] * L.dim
        for k, c in comps.items():
            v[k] = c
        vecs.append(v)
    return linalg.rref(vecs, L.field)


def center_rows(L: LieAlgebra) -> tuple[list, list]:
    """Echelonized basis of the center."""
    eqs = []
    for j in range(L.dim):
        for k in range(L.dim):
            row = [L.structure_constant(i, j, k) for i in range(L.dim)]
            if any(not c.is_zero() for c in row):
                eqs.append(row)
    if not eqs:
        basis = linalg.identity_matrix(L.field, L.dim)
        return linalg.rref(basis, L.field)
    null = linalg.nullspace(eqs, L.field)
    return linalg.rref(null, L.field)


def is_ideal(L: LieAlgebra, rows) -> bool:
    """True when span(rows) is an ideal of L."""
    red, pivots = linalg.rref([list(r) for r in rows], L.field)
    basis = linalg.identity_matrix(L.field, L.dim)
    for e in basis:
        for w in red:
            v = L.bracket_coords(e, w)
            if linalg.express_in_rows(red, pivots, v, L.field) is None:
                return False
    return True


def restrict_to_span(L: LieAlgebra, rows,
                     labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """The induced algebra on a bracket-closed subspace (echelonized rows)."""
    red, pivots = linalg.rref([list(r) for r in rows], L.field)
    brackets = {}
    for a in range(len(red)):
        for b in range(a + 1, len(red)):
            w = L.bracket_coords(red[a], red[b])
            coords = linalg.express_in_rows(red, pivots, w, L.field)
            if coords is None:
                raise DegenerateError("span is not closed under the bracket")
            entry = {k: c for k, c in enumerate(coords) if not c.is_zero()}
            if entry:
                brackets[(a, b)] = entry
    return LieAlgebra(L.field, len(red), brackets, labels)


# ------------------------------------------------------------------ fingerprint

@dataclass(frozen=True)
class Fingerprint:
    """Cheap exact isomorphism invariants."""

    dim: int
    lower_central: tuple[int, ...]
    derived: tuple[int, ...]
    center_dim: int
    commutator_dim: int
    nilpotency_class: Optional[int]
    solvable: bool
    two_step: Optional[tuple[int, int]]


def fingerprint(L: LieAlgebra) -> Fingerprint:
    field = L.field
    full = linalg.identity_matrix(field, L.dim)
    full_red, full_piv = linalg.rref(full, field)

    # lower central series
    lcs = [L.dim]
    current = (full_red, full_piv)
    while True:
        vecs = bracket_span(L, full_red, current[0])
        nxt = linalg.rref(vecs, field)
        d = len(nxt[0])
        if d == lcs[-1]:
            lcs.append(d)
            break
        lcs.append(d)
        current = nxt
        if d == 0:
            break
    nilpotency_class = None
    if lcs[-1] == 0:
        nilpotency_class = len(lcs) - 1

    # derived series
    ds = [L.dim]
    current = (full_red, full_piv)
    while True:
        vecs = bracket_span(L, current[0], current[0])
        nxt = linalg.rref(vecs, field)
        d = len(nxt[0])
        if d == ds[-1]:
            ds.append(d)
            break
        ds.append(d)
        current = nxt
        if d == 0:
            break
    solvable = ds[-1] == 0

    comm = commutator_rows(L)
    cen = center_rows(L)
    two_step = None
    if nilpotency_class is not None and nilpotency_class <= 2:
        two_step = (L.dim - len(comm[0]), len(comm[0]))
    return Fingerprint(
        dim=L.dim,
        lower_central=tuple(lcs),
        derived=tuple(ds),
        center_dim=len(cen[0]),
        commutator_dim=len(comm[0]),
        nilpotency_class=nilpotency_class,
        solvable=solvable,
        two_step=two_step,
    )
