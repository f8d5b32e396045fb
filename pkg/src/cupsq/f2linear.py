"""Linear algebra over F2 with Python ints as packed bit rows.

Bit ``j`` of a row is the entry in column ``j``; column order follows the
lexicographic order of simplices, and pivots are always taken at the
lowest available column so every basis below is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .simplicial import Cochain, Simplex, SimplicialComplex, faces

F2Vector = int


def low_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def to_bits(v: F2Vector, length: int) -> tuple[int, ...]:
    return tuple((v >> j) & 1 for j in range(length))


def from_bits(bits: Iterable[int]) -> F2Vector:
    v = 0
    for j, b in enumerate(bits):
        if b & 1:
            v |= 1 << j
    return v


@dataclass
class F2Matrix:
    nrows: int
    ncols: int
    rows: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.rows:
            self.rows = [0] * self.nrows
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        if any(r >> self.ncols for r in self.rows):
            raise ValueError("row has bits beyond ncols")

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], ncols: int | None = None) -> F2Matrix:
        if ncols is None:
            ncols = len(dense[0]) if dense else 0
        return cls(len(dense), ncols, [from_bits(r) for r in dense])

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls(n, n, [1 << j for j in range(n)])

    def to_dense(self) -> list[list[int]]:
        return [list(to_bits(r, self.ncols)) for r in self.rows]

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def transpose(self) -> F2Matrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = low_bit(r)
                cols[j] |= 1 << i
                r &= r - 1
        return F2Matrix(self.ncols, self.nrows, cols)

    def apply(self, v: F2Vector) -> F2Vector:
        """Matrix-vector product."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        rows = []
        for r in self.rows:
            acc = 0
            while r:
                acc ^= other.rows[low_bit(r)]
                r &= r - 1
            rows.append(acc)
        return F2Matrix(self.nrows, other.ncols, rows)

    def is_zero(self) -> bool:
        return not any(self.rows)


class Echelon:
    """Incrementally built echelon basis keyed by lowest set bit."""

    def __init__(self):
        self.rows: dict[int, int] = {}

    def reduce(self, v: int) -> int:
        while v:
            row = self.rows.get(low_bit(v))
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.rows[low_bit(v)] = v
        return bool(v)

    def __len__(self) -> int:
        return len(self.rows)


def rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form. Returns (nonzero reduced rows, pivot columns).

    ``ncols`` only bounds the columns; pivots are the lowest set bits.
    """
    echelon = Echelon()
    for r in rows:
        echelon.add(r)
    pivots = sorted(echelon.rows)
    pivot_mask = 0
    for p in pivots:
        pivot_mask |= 1 << p
    reduced: dict[int, int] = {}
    # higher pivots first: reducing by a finished row only adds non-pivot bits
    for p in reversed(pivots):
        r = echelon.rows[p]
        rest = r & pivot_mask & ~(1 << p)
        while rest:
            r ^= reduced[low_bit(rest)]
            rest = r & pivot_mask & ~(1 << p)
        reduced[p] = r
    return [reduced[p] for p in pivots], pivots


def rank(M: F2Matrix) -> int:
    echelon = Echelon()
    for r in M.rows:
        echelon.add(r)
    return len(echelon)


def solve(M: F2Matrix, b: F2Vector) -> F2Vector | None:
    """Some x with Mx = b (free variables set to 0), or None if inconsistent."""
    if b >> M.nrows:
        raise ValueError(f"right-hand side longer than {M.nrows} rows")
    flag = 1 << M.ncols
    aug = [r | (flag if (b >> i) & 1 else 0) for i, r in enumerate(M.rows)]
    reduced, pivots = rref(aug, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = 0
    for r, c in zip(reduced, pivots):
        if r & flag:
            x |= 1 << c
    return x


def kernel_basis(M: F2Matrix) -> list[F2Vector]:
    """Basis of the null space, one vector per free column in column order."""
    reduced, pivots = rref(M.rows, M.ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(M.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for r, c in zip(reduced, pivots):
            if (r >> f) & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def cochain_to_vector(X: SimplicialComplex, alpha: Cochain) -> F2Vector:
    index = X.index(alpha.degree)
    v = 0
    for x in alpha.support:
        try:
            v |= 1 << index[x]
        except KeyError:
            raise ValueError(f"{x} is not a simplex of the complex") from None
    return v


def vector_to_cochain(X: SimplicialComplex, n: int, v: F2Vector) -> Cochain:
    simplices = X.simplices(n)
    support = []
    while v:
        support.append(simplices[low_bit(v)])
        v &= v - 1
    return Cochain(n, support)


def coboundary_matrix(X: SimplicialComplex, n: int) -> F2Matrix:
    """Matrix of the coboundary C^n -> C^(n+1); row y, column x is 1 iff x is a face of y."""
    cols = X.simplices(n) if n >= 0 else ()
    targets = X.simplices(n + 1) if n >= -1 else ()
    if not cols:
        return F2Matrix(len(targets), 0)
    index = X.index(n)
    rows = []
    for y in targets:
        r = 0
        for x in faces(y):
            r |= 1 << index[x]
        rows.append(r)
    return F2Matrix(len(rows), len(cols), rows)


def coboundary(X: SimplicialComplex, alpha: Cochain) -> Cochain:
    n = alpha.degree
    supp = alpha.support
    out = [y for y in X.simplices(n + 1) if sum(x in supp for x in faces(y)) & 1]
    return Cochain(n + 1, out)


def is_cocycle(X: SimplicialComplex, alpha: Cochain) -> bool:
    return not coboundary(X, alpha)


def is_coboundary(X: SimplicialComplex, alpha: Cochain) -> bool:
    if not alpha:
        return True
    if alpha.degree == 0:
        return False
    M = coboundary_matrix(X, alpha.degree - 1)
    return solve(M, cochain_to_vector(X, alpha)) is not None


@dataclass
class CohomologySpace:
    """Cocycle representatives for a basis of H^n(X; F2).

    ``basis`` extends ``coboundary_basis`` to a basis of the cocycles.
    """

    complex: SimplicialComplex
    degree: int
    basis: list[Cochain]
    coboundary_basis: list[Cochain]
    _solver: F2Matrix | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def coordinates(self, alpha: Cochain) -> tuple[int, ...]:
        return class_coordinates(self, alpha)


def cohomology_basis(X: SimplicialComplex, n: int) -> CohomologySpace:
    if n < 0:
        raise ValueError("cohomology degree must be nonnegative")
    if n > X.top_dimension:
        return CohomologySpace(X, n, [], [])
    cocycles = kernel_basis(coboundary_matrix(X, n))
    echelon = Echelon()
    coboundaries = []
    if n > 0:
        # columns of the previous coboundary are the images of dual simplices
        for v in coboundary_matrix(X, n - 1).transpose().rows:
            if echelon.add(v):
                coboundaries.append(v)
    reps = [v for v in cocycles if echelon.add(v)]
    return CohomologySpace(
        X, n,
        [vector_to_cochain(X, n, v) for v in reps],
        [vector_to_cochain(X, n, v) for v in coboundaries],
    )


def betti_numbers(X: SimplicialComplex) -> list[int]:
    """Mod-2 Betti numbers, computed by rank-nullity in each degree."""
    ranks = [rank(coboundary_matrix(X, n)) for n in range(X.top_dimension + 1)]
    f = X.f_vector()
    return [f[n] - ranks[n] - (ranks[n - 1] if n else 0) for n in range(len(f))]


def class_coordinates(H: CohomologySpace, alpha: Cochain) -> tuple[int, ...]:
    """Coordinates of [alpha] in the basis of H, ignoring coboundaries."""
    if alpha.degree != H.degree:
        raise ValueError(f"degree {alpha.degree} cochain in H^{H.degree}")
    X = H.complex
    if not is_cocycle(X, alpha):
        raise ValueError("not a cocycle")
    if H._solver is None:
        gens = H.basis + H.coboundary_basis
        rows = [0] * len(X.simplices(H.degree))
        index = X.index(H.degree)
        for g, gen in enumerate(gens):
            for x in gen.support:
                rows[index[x]] |= 1 << g
        H._solver = F2Matrix(len(rows), len(gens), rows)
    x = solve(H._solver, cochain_to_vector(X, alpha))
    if x is None:
        raise AssertionError("cocycle outside the span of the cohomology basis")
    return to_bits(x, H.dim)


def class_representative(H: CohomologySpace, coords: Sequence[int]) -> Cochain:
    support: set[Simplex] = set()
    for c, b in zip(coords, H.basis):
        if c:
            support ^= b.support
    return Cochain(H.degree, support)
