"""Cup-i coproducts on simplices and the cup-i products they induce.

On an n-simplex x, for 0 <= i <= n::

    Delta_i(x) = sum over U in {0..n}, |U| = n - i, of d_{U0}(x) (x) d_{U1}(x)

where U = {u_1 < ... < u_q} is split by the parity of u_j + j.  Outside
that range of i the coproduct vanishes.  Tensors are frozensets of pairs
of simplices, so a sum mod 2 is a symmetric difference.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .simplicial import (
    Chain,
    Cochain,
    Simplex,
    SimplicialComplex,
    VertexMap,
    face_composite,
    faces,
)

TensorSum = frozenset  # frozenset[tuple[Simplex, Simplex]]
Pair = tuple[Simplex, Simplex]


def subset_partition(U: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split ascending U into (U0, U1), where u_j is in U0 iff u_j = j mod 2 (j from 1)."""
    if any(a >= b for a, b in zip(U, U[1:])):
        raise ValueError(f"index set not strictly ascending: {U}")
    U0, U1 = [], []
    for j, u in enumerate(U, start=1):
        (U0 if (u - j) % 2 == 0 else U1).append(u)
    return tuple(U0), tuple(U1)


def index_function(U: Sequence[int]) -> dict[int, int]:
    """u_j -> (u_j + j) mod 2, with j counted from 1."""
    return {u: (u + j) % 2 for j, u in enumerate(U, start=1)}


def delta_i_simplex(x: Simplex, i: int) -> TensorSum:
    n = len(x) - 1
    if not 0 <= i <= n:
        return frozenset()
    out: set[Pair] = set()
    for U in combinations(range(n + 1), n - i):
        U0, U1 = subset_partition(U)
        out ^= {(face_composite(x, U0), face_composite(x, U1))}
    return frozenset(out)


def delta_i_chain(c: Chain | Iterable[Simplex], i: int) -> TensorSum:
    support = c.support if isinstance(c, Chain) else c
    out: set[Pair] = set()
    for x in support:
        out ^= delta_i_simplex(x, i)
    return frozenset(out)


def alexander_whitney(x: Simplex) -> TensorSum:
    """Front face (x) back face, summed over split points."""
    return frozenset((x[: j + 1], x[j:]) for j in range(len(x)))


def swap(t: TensorSum) -> TensorSum:
    return frozenset((b, a) for a, b in t)


def tensor_boundary(t: TensorSum) -> TensorSum:
    """Boundary on the tensor square, acting on each factor in turn (signs vanish mod 2)."""
    out: set[Pair] = set()
    for a, b in t:
        if len(a) > 1:
            for f in faces(a):
                out ^= {(f, b)}
        if len(b) > 1:
            for f in faces(b):
                out ^= {(a, f)}
    return frozenset(out)


def tensor_push_forward(f: VertexMap, t: TensorSum) -> TensorSum:
    out: set[Pair] = set()
    for a, b in t:
        fa, fb = f.image(a), f.image(b)
        if fa is not None and fb is not None:
            out ^= {(fa, fb)}
    return frozenset(out)


def evaluate_pairing(alpha: Cochain, beta: Cochain, t: TensorSum) -> int:
    """(alpha (x) beta)(t) in F2."""
    sa, sb = alpha.support, beta.support
    count = 0
    for a, b in t:
        if a in sa and b in sb:
            count += 1
    return count & 1


def cup_i_product(alpha: Cochain, beta: Cochain, i: int, X: SimplicialComplex) -> Cochain:
    """Cochain x -> (alpha (x) beta) Delta_i(x), evaluated simplex by simplex."""
    d = alpha.degree + beta.degree - i
    if d < 0:
        return Cochain(d)
    support = [x for x in X.simplices(d)
               if evaluate_pairing(alpha, beta, delta_i_simplex(x, i))]
    return Cochain(d, support)


def cup_product(alpha: Cochain, beta: Cochain, X: SimplicialComplex) -> Cochain:
    return cup_i_product(alpha, beta, 0, X)
