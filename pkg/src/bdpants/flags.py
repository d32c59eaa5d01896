"""Flags in R^n and their projective invariants.

A flag is a full chain of nested subspaces, stored here as an ordered
basis (v_1, ..., v_n): the i-dimensional piece is the span of the first
i vectors.  Coordinates are taken against the fixed monomial basis
b_1 = X^{n-1}, b_2 = X^{n-2}Y, ..., b_n = Y^{n-1}, and the top wedge
b_1 ^ ... ^ b_n is identified with 1, so a wedge of n vectors is just
the determinant of their coordinate matrix.

Triple ratios and double ratios are alternating products of such wedge
determinants over prefix bases of the flags involved.  Both are
projective invariants: rescaling any basis vector, or moving all flags
by one invertible matrix, leaves them unchanged.  They are returned
*exponentiated* (the conventional invariant is their log) so the exact
backend can compare independently computed values exactly.

Genericity of a flag tuple means every dimension-compatible choice of
prefixes spans: for each way of writing n = n_1 + ... + n_k with
n_i >= 0, the first n_1 vectors of the first flag, the first n_2 of the
second, and so on, are linearly independent.  The ratio operations do
not run this full sweep; they only check the determinants they actually
divide by, which both is cheaper and pins the failure to the offending
factor.
"""

from __future__ import annotations

from itertools import combinations

from . import linalg
from .scalars import Scalar


class DegenerateFlagsError(ArithmeticError):
    """A wedge determinant that an invariant divides by vanished."""


class Flag:
    """An ordered basis of R^n; prefix spans are the flag subspaces."""

    __slots__ = ("basis",)

    def __init__(self, basis, check: bool = True):
        basis = tuple(tuple(v) for v in basis)
        n = len(basis)
        if n == 0 or any(len(v) != n for v in basis):
            raise ValueError("flag basis must be n vectors of dimension n")
        if check and linalg.det(list(basis)) == 0:
            raise ValueError("flag basis is not linearly independent")
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    def prefix(self, i: int):
        """The first i basis vectors (a basis of the i-dimensional piece)."""
        return self.basis[:i]

    def scaled(self, i: int, factor: Scalar) -> "Flag":
        """Copy of the flag with basis vector i (1-based) rescaled."""
        if factor == 0:
            raise ValueError("scale factor must be nonzero")
        new = list(self.basis)
        new[i - 1] = tuple(factor * x for x in new[i - 1])
        return Flag(new, check=False)

    def __repr__(self):
        return f"Flag({list(self.basis)!r})"


def wedge_det(vectors) -> Scalar:
    """Wedge product of n vectors in R^n under the monomial-basis
    identification of the top exterior power with the scalars.

    The determinant of the matrix with the vectors as columns equals the
    determinant of its transpose, so the vectors are used as rows.
    """
    vectors = list(vectors)
    n = len(vectors)
    if n == 0:
        raise ValueError("empty wedge")
    if any(len(v) != n for v in vectors):
        raise ValueError(f"need {n} vectors of dimension {n}")
    return linalg.det(vectors)


def apply_matrix(m, flag: Flag, check: bool = False) -> Flag:
    """Image flag under an invertible matrix (basis mapped vector-wise)."""
    return Flag([linalg.mat_vec(m, list(v)) for v in flag.basis], check=check)


def flags_equal(f: Flag, g: Flag, tol: float = 1e-9) -> bool:
    """Subspace-wise equality: every prefix of one lies in the span of
    the same-length prefix of the other."""
    if f.dim != g.dim:
        return False
    n = f.dim
    for i in range(1, n):
        rows = list(f.prefix(i)) + list(g.prefix(i))
        if linalg.rank(rows, tol=tol) != i:
            return False
    return True


def _compositions(total: int, parts: int):
    """All ways to write total = n_1 + ... + n_parts with n_i >= 0."""
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(total + parts - 2 - prev)
        yield comp


def is_generic(flags) -> bool:
    """Whether every dimension-compatible prefix combination spans R^n."""
    flags = list(flags)
    if not flags:
        raise ValueError("need at least one flag")
    n = flags[0].dim
    if any(f.dim != n for f in flags):
        raise ValueError("flags have mismatched dimensions")
    for comp in _compositions(n, len(flags)):
        vectors = []
        for f, ni in zip(flags, comp):
            vectors.extend(f.prefix(ni))
        if wedge_det(vectors) == 0:
            return False
    return True


def _x_factor(e: Flag, f: Flag, g: Flag, a: int, b: int, c: int) -> Scalar:
    """Wedge of the a-, b- and c-prefixes of three flags (a + b + c = n).
    A zero index contributes no vectors."""
    return wedge_det(list(e.prefix(a)) + list(f.prefix(b)) + list(g.prefix(c)))


def _check_pqr(n: int, p: int, q: int, r: int):
    if p < 1 or q < 1 or r < 1 or p + q + r != n:
        raise ValueError(f"invalid index triple ({p},{q},{r}) for n={n}")


def triple_ratio_exp(e: Flag, f: Flag, g: Flag, p: int, q: int, r: int) -> Scalar:
    """The (p,q,r)-th triple ratio of a generic flag triple:

        X(p+1,q,r-1)   X(p,q-1,r+1)   X(p-1,q+1,r)
        ------------ * ------------ * ------------
        X(p-1,q,r+1)   X(p,q+1,r-1)   X(p+1,q-1,r)

    where X(a,b,c) wedges the a-, b- and c-prefixes of the three flags.
    """
    return triple_ratios_exp(e, f, g, [(p, q, r)])[(p, q, r)]


def triple_ratios_exp(e: Flag, f: Flag, g: Flag, triples) -> dict:
    """Triple ratios for many (p,q,r) at once, sharing wedge factors."""
    n = e.dim
    cache: dict = {}

    def x(a, b, c):
        key = (a, b, c)
        if key not in cache:
            cache[key] = _x_factor(e, f, g, a, b, c)
        return cache[key]

    out = {}
    for (p, q, r) in triples:
        _check_pqr(n, p, q, r)
        den = (x(p - 1, q, r + 1), x(p, q + 1, r - 1), x(p + 1, q - 1, r))
        if any(d == 0 for d in den):
            raise DegenerateFlagsError("degenerate flags")
        num = x(p + 1, q, r - 1) * x(p, q - 1, r + 1) * x(p - 1, q + 1, r)
        out[(p, q, r)] = num / (den[0] * den[1] * den[2])
    return out


def double_ratio_exp(e: Flag, f: Flag, g: Flag, g2: Flag, p: int) -> Scalar:
    """The p-th double ratio of a generic flag quadruple:

        D_p = - (Y(p) / Y'(p)) * (Y'(p-1) / Y(p-1))

    with Y(i) wedging the i-prefix of the first flag, the
    (n-i-1)-prefix of the second and the line of the third, and Y'(i)
    the same with the fourth flag's line.
    """
    values = double_ratios_exp(e, f, g, g2, (p,))
    return values[0]


def double_ratios_exp(e: Flag, f: Flag, g: Flag, g2: Flag, ps=None):
    """Double ratios for several p at once, sharing the Y determinants."""
    n = e.dim
    if ps is None:
        ps = range(1, n)
    ps = list(ps)
    if any(p < 1 or p > n - 1 for p in ps):
        raise ValueError("p out of range")
    needed = sorted({i for p in ps for i in (p, p - 1)})
    y = {i: _x_factor(e, f, g, i, n - i - 1, 1) for i in needed}
    y2 = {i: _x_factor(e, f, g2, i, n - i - 1, 1) for i in needed}
    out = []
    for p in ps:
        if y2[p] == 0 or y[p - 1] == 0:
            raise DegenerateFlagsError("degenerate flags")
        out.append(-(y[p] * y2[p - 1]) / (y2[p] * y[p - 1]))
    return out
