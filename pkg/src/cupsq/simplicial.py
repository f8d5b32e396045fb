"""Ordered simplicial complexes over F2.

Simplices are tuples of strictly increasing nonnegative integers.  Chains
and cochains carry their mod-2 coefficients as support sets, so addition is
symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

Simplex = tuple[int, ...]


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate and return ``vertices`` as a simplex tuple."""
    x = tuple(int(v) for v in vertices)
    if not x:
        raise ValueError("a simplex needs at least one vertex")
    if x[0] < 0:
        raise ValueError(f"negative vertex in {x}")
    if any(a >= b for a, b in zip(x, x[1:])):
        raise ValueError(f"vertices not strictly increasing: {x}")
    return x


def dim(x: Simplex) -> int:
    return len(x) - 1


def face(x: Simplex, i: int) -> Simplex:
    """The i-th face map: delete the vertex at position ``i``."""
    if len(x) < 2:
        raise ValueError("a 0-simplex has no faces")
    if not 0 <= i < len(x):
        raise IndexError(f"face index {i} out of range for {x}")
    return x[:i] + x[i + 1:]


def face_composite(x: Simplex, U: Sequence[int]) -> Simplex:
    """d_U(x) = d_{u_1} ... d_{u_r}(x) for ascending ``U``.

    Applying the face maps right to left deletes exactly the vertices at
    the original positions in ``U``.
    """
    if any(a >= b for a, b in zip(U, U[1:])):
        raise ValueError(f"index set not strictly ascending: {U}")
    if U and (U[0] < 0 or U[-1] >= len(x)):
        raise IndexError(f"index set {U} out of range for {x}")
    if len(U) >= len(x):
        raise ValueError("face_composite would delete every vertex")
    if not U:
        return x
    drop = set(U)
    return tuple(v for p, v in enumerate(x) if p not in drop)


def faces(x: Simplex) -> Iterator[Simplex]:
    for i in range(len(x)):
        yield x[:i] + x[i + 1:]


@dataclass(frozen=True)
class Chain:
    """Mod-2 chain: a degree and the set of simplices with coefficient 1."""

    degree: int
    support: frozenset[Simplex] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        for x in self.support:
            if len(x) != self.degree + 1:
                raise ValueError(f"{x} has wrong dimension for degree {self.degree}")

    def __add__(self, other: Chain) -> Chain:
        if self.degree != other.degree:
            raise ValueError("cannot add chains of different degrees")
        return type(self)(self.degree, self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def sorted(self) -> list[Simplex]:
        return sorted(self.support)


class Cochain(Chain):
    """Mod-2 cochain, stored as its support: the simplices it sends to 1."""

    def __call__(self, x: Simplex) -> int:
        return int(x in self.support)


def boundary_chain(c: Chain) -> Chain:
    out: set[Simplex] = set()
    if c.degree > 0:
        for x in c.support:
            for y in faces(x):
                out ^= {y}
    return Chain(c.degree - 1, out)


class SimplicialComplex:
    """Face-closed family of simplices, immutable after construction.

    Use :meth:`from_maximal_simplices` to build one from generating simplices.
    """

    def __init__(self, simplices: Iterable[Simplex]):
        by_dim: dict[int, set[Simplex]] = {}
        for x in simplices:
            by_dim.setdefault(len(x) - 1, set()).add(x)
        self._sets: dict[int, frozenset[Simplex]] = {d: frozenset(s) for d, s in by_dim.items()}
        self._sorted: dict[int, tuple[Simplex, ...]] = {}
        self._index: dict[int, dict[Simplex, int]] = {}
        missing = [y for d in self._sets if d > 0 for x in self._sets[d] for y in faces(x)
                   if y not in self._sets.get(d - 1, ())]
        if missing:
            raise ValueError(f"not face-closed, e.g. missing {missing[0]}")

    @classmethod
    def from_maximal_simplices(cls, maximal: Iterable[Iterable[int]]) -> SimplicialComplex:
        closure: set[Simplex] = set()
        for m in maximal:
            x = as_simplex(m)
            if x in closure:
                continue
            for r in range(1, len(x) + 1):
                closure.update(combinations(x, r))
        return cls(closure)

    @property
    def top_dimension(self) -> int:
        return max(self._sets, default=-1)

    @property
    def vertices(self) -> list[int]:
        return [x[0] for x in self.simplices(0)]

    def simplices(self, n: int) -> tuple[Simplex, ...]:
        """The n-simplices in lexicographic order."""
        if n not in self._sorted:
            self._sorted[n] = tuple(sorted(self._sets.get(n, ())))
        return self._sorted[n]

    def index(self, n: int) -> dict[Simplex, int]:
        """Position of each n-simplex in :meth:`simplices` order."""
        if n not in self._index:
            self._index[n] = {x: j for j, x in enumerate(self.simplices(n))}
        return self._index[n]

    def __contains__(self, x) -> bool:
        return x in self._sets.get(len(x) - 1, ())

    def __iter__(self) -> Iterator[Simplex]:
        for d in range(self.top_dimension + 1):
            yield from self.simplices(d)

    def __len__(self) -> int:
        return sum(len(s) for s in self._sets.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._sets == other._sets

    def __hash__(self):
        return hash(frozenset(self._sets.items()))

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector()})"

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self._sets.get(d, ())) for d in range(self.top_dimension + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def maximal_simplices(self) -> list[Simplex]:
        covered: set[Simplex] = set()
        for d in range(1, self.top_dimension + 1):
            for x in self._sets[d]:
                covered.update(faces(x))
        return sorted((x for x in self if x not in covered), key=lambda x: (len(x), x))

    def relabel(self, mapping: Mapping[int, int]) -> SimplicialComplex:
        """Injective vertex relabeling; simplices are re-sorted."""
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("relabel needs an injective map")
        return SimplicialComplex(tuple(sorted(mapping[v] for v in x)) for x in self)


@dataclass(frozen=True)
class VertexMap:
    """Vertex assignment between complexes, checked simplex by simplex."""

    assignment: Mapping[int, int]
    source: SimplicialComplex
    target: SimplicialComplex = field(repr=False)

    def image(self, x: Simplex) -> Simplex | None:
        """Sorted image simplex, or None when the image repeats a vertex."""
        try:
            img = {self.assignment[v] for v in x}
        except KeyError as e:
            raise ValueError(f"vertex {e.args[0]} of {x} has no image") from None
        y = tuple(sorted(img))
        if y not in self.target:
            raise ValueError(f"image of {x} is not a simplex of the target")
        return y if len(y) == len(x) else None

    def is_order_preserving(self) -> bool:
        """Weakly monotone on vertices, i.e. a map of vertex posets."""
        pairs = sorted(self.assignment.items())
        return all(a[1] <= b[1] for a, b in zip(pairs, pairs[1:]))

    def is_simplicial(self) -> bool:
        try:
            for x in self.source:
                self.image(x)
        except ValueError:
            return False
        return True


def push_forward(f: VertexMap, c: Chain) -> Chain:
    """Induced chain map: degenerate images contribute zero."""
    out: set[Simplex] = set()
    for x in c.support:
        if x not in f.source:
            raise ValueError(f"{x} is not in the source complex")
        y = f.image(x)
        if y is not None:
            out ^= {y}
    return type(c)(c.degree, out)


def suspension(X: SimplicialComplex) -> SimplicialComplex:
    """Double cone on X with two new apexes labelled above every vertex."""
    if not len(X):
        raise ValueError("cannot suspend the empty complex")
    top = max(X.vertices)
    north, south = top + 1, top + 2
    simplices = list(X)
    simplices += [x + (a,) for x in X for a in (north, south)]
    simplices += [(north,), (south,)]
    return SimplicialComplex(simplices)


def wedge(X: SimplicialComplex, Y: SimplicialComplex,
          px: int | None = None, py: int | None = None) -> SimplicialComplex:
    """One-point union identifying ``py`` in Y with ``px`` in X.

    Defaults to the minimum vertex of each complex.
    """
    px = min(X.vertices) if px is None else px
    py = min(Y.vertices) if py is None else py
    if (px,) not in X:
        raise ValueError(f"basepoint {px} is not a vertex of X")
    if (py,) not in Y:
        raise ValueError(f"basepoint {py} is not a vertex of Y")
    offset = max(X.vertices) + 1
    mapping = {v: (px if v == py else v + offset) for v in Y.vertices}
    moved = [tuple(sorted(mapping[v] for v in y)) for y in Y]
    return SimplicialComplex(list(X) + moved)
