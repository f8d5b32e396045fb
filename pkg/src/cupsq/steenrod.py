"""Steenrod squares on mod-2 simplicial cohomology.

For a degree-n cochain alpha, Sq^k is represented by x -> (alpha (x) alpha) Delta_{n-k}(x)
on (n+k)-simplices.  :func:`sq_support` computes that support from pairs of
support simplices only; :func:`sq_direct_oracle` evaluates it simplex by
simplex and is kept as an independent check and timing baseline.
"""

from __future__ import annotations

from typing import Collection, Sequence

from .cupi import delta_i_simplex, evaluate_pairing
from .f2linear import (
    CohomologySpace,
    F2Matrix,
    class_coordinates,
    cohomology_basis,
    from_bits,
    is_cocycle,
)
from .simplicial import Cochain, Simplex, SimplicialComplex


def position(S: Sequence[int], v: int) -> int:
    """1-based position of ``v`` in the ascending sequence ``S``."""
    try:
        return S.index(v) + 1
    except ValueError:
        raise ValueError(f"{v} is not in {S}") from None


def sq_support(A: Collection[Simplex], n: int, k: int, X: SimplicialComplex) -> set[Simplex]:
    """Support of (alpha (x) alpha) Delta_{n-k} where alpha has support A."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    for a in A:
        if len(a) != n + 1 or a not in X:
            raise ValueError(f"{a} is not an {n}-simplex of the complex")
    members = sorted(A)
    sets = [frozenset(a) for a in members]
    size = n + k + 1
    B: set[Simplex] = set()
    for i, si in enumerate(sets):
        for sj in sets[i + 1:]:
            union = si | sj
            if len(union) != size:
                continue
            a_ij = tuple(sorted(union))
            if a_ij not in X:
                continue
            only_i = si - sj
            only_j = sj - si
            sym = sorted(only_i | only_j)
            ind = {v: (position(a_ij, v) + position(sym, v)) % 2 for v in sym}
            if {ind[v] for v in only_i} ^ {ind[v] for v in only_j} == {0, 1}:
                B ^= {a_ij}
    return B


def sq_cochain(alpha: Cochain, k: int, X: SimplicialComplex) -> Cochain:
    n = alpha.degree
    if k < 0 or k > n:
        return Cochain(n + k)
    if k == 0:
        return alpha
    return Cochain(n + k, sq_support(alpha.support, n, k, X))


def sq_direct_oracle(alpha: Cochain, k: int, X: SimplicialComplex) -> Cochain:
    """Evaluate alpha (x) alpha on Delta_{n-k}(x) for every (n+k)-simplex x."""
    n = alpha.degree
    if n + k < 0:
        return Cochain(n + k)
    support = [x for x in X.simplices(n + k)
               if evaluate_pairing(alpha, alpha, delta_i_simplex(x, n - k))]
    return Cochain(n + k, support)


METHODS = {"fast": sq_cochain, "direct": sq_direct_oracle}


def sq_class(H: CohomologySpace, class_index: int, k: int,
             target: CohomologySpace | None = None, method: str = "fast") -> tuple[int, ...]:
    """Coordinates of Sq^k of a basis class, in the basis of H^(n+k)."""
    X = H.complex
    if target is None:
        target = cohomology_basis(X, H.degree + k) if H.degree + k >= 0 else None
    if target is None:
        return ()
    beta = METHODS[method](H.basis[class_index], k, X)
    if not is_cocycle(X, beta):
        raise AssertionError(f"Sq^{k} of a cocycle is not a cocycle")
    return class_coordinates(target, beta)


def sq_matrix(X: SimplicialComplex, n: int, k: int, method: str = "fast",
              source: CohomologySpace | None = None,
              target: CohomologySpace | None = None) -> F2Matrix:
    """Matrix of Sq^k: H^n -> H^(n+k); column j is the image of basis class j."""
    source = source or cohomology_basis(X, n)
    if n + k < 0:
        return F2Matrix(0, source.dim)
    target = target or cohomology_basis(X, n + k)
    cols = [sq_class(source, j, k, target, method) for j in range(source.dim)]
    rows = [from_bits(c[r] for c in cols) for r in range(target.dim)]
    return F2Matrix(target.dim, source.dim, rows)
