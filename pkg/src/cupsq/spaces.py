"""Built-in test spaces.

The projective-plane triangulations are embedded as literal facet lists and
are only accepted after checking them with the machinery in this package:
f-vector, pseudomanifold condition, Betti numbers and the rank of the
relevant Steenrod square.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .f2linear import betti_numbers, rank
from .simplicial import SimplicialComplex, faces, suspension, wedge
from .steenrod import sq_matrix

# 6-vertex RP^2: antipodal quotient of the icosahedron
_RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
]

# 9-vertex CP^2 (Kuehnel-Banchoff), vertices shifted to start at 0
_CP2_FACETS = [
    (1, 2, 4, 5, 6), (2, 3, 5, 6, 4), (3, 1, 6, 4, 5),
    (1, 2, 4, 5, 9), (2, 3, 5, 6, 7), (3, 1, 6, 4, 8),
    (2, 3, 6, 4, 9), (3, 1, 4, 5, 7), (1, 2, 5, 6, 8),
    (3, 1, 5, 6, 9), (1, 2, 6, 4, 7), (2, 3, 4, 5, 8),
    (4, 5, 7, 8, 9), (5, 6, 8, 9, 7), (6, 4, 9, 7, 8),
    (4, 5, 7, 8, 3), (5, 6, 8, 9, 1), (6, 4, 9, 7, 2),
    (5, 6, 9, 7, 3), (6, 4, 7, 8, 1), (4, 5, 8, 9, 2),
    (6, 4, 8, 9, 3), (4, 5, 9, 7, 1), (5, 6, 7, 8, 2),
    (7, 8, 1, 2, 3), (8, 9, 2, 3, 1), (9, 7, 3, 1, 2),
    (7, 8, 1, 2, 6), (8, 9, 2, 3, 4), (9, 7, 3, 1, 5),
    (8, 9, 3, 1, 6), (9, 7, 1, 2, 4), (7, 8, 2, 3, 5),
    (9, 7, 2, 3, 6), (7, 8, 3, 1, 4), (8, 9, 1, 2, 5),
]


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class NamedSpace:
    name: str
    complex: SimplicialComplex
    expected_betti: tuple[int, ...]

    def __post_init__(self):
        got = tuple(betti_numbers(self.complex))
        if got != tuple(self.expected_betti):
            raise FixtureError(f"{self.name}: Betti numbers {got}, expected {self.expected_betti}")


def standard_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex.from_maximal_simplices([range(n + 1)])


def sphere(n: int) -> SimplicialComplex:
    """Boundary of the standard (n+1)-simplex."""
    if n == 0:
        return SimplicialComplex([(0,), (1,)])
    return SimplicialComplex.from_maximal_simplices(combinations(range(n + 2), n + 1))


def sphere_betti(n: int) -> tuple[int, ...]:
    if n == 0:
        return (2,)
    return (1,) + (0,) * (n - 1) + (1,)


def is_closed_pseudomanifold(X: SimplicialComplex) -> bool:
    """Pure, and every codimension-one face lies in exactly two facets."""
    d = X.top_dimension
    if X.maximal_simplices() != sorted(X.simplices(d), key=lambda x: (len(x), x)):
        return False
    counts = Counter(f for x in X.simplices(d) for f in faces(x))
    return len(counts) == len(X.simplices(d - 1)) and set(counts.values()) == {2}


def _check(cond: bool, msg: str):
    if not cond:
        raise FixtureError(msg)


@lru_cache(maxsize=None)
def rp2() -> NamedSpace:
    X = SimplicialComplex.from_maximal_simplices(_RP2_FACETS)
    _check(X.f_vector() == (6, 15, 10), f"rp2 f-vector {X.f_vector()}")
    _check(is_closed_pseudomanifold(X), "rp2 is not a closed surface")
    _check(X.euler_characteristic() == 1, "rp2 Euler characteristic")
    space = NamedSpace("rp2", X, (1, 1, 1))
    _check(rank(sq_matrix(X, 1, 1)) == 1, "rp2 Sq^1 rank")
    return space


@lru_cache(maxsize=None)
def cp2() -> NamedSpace:
    X = SimplicialComplex.from_maximal_simplices(
        sorted(v - 1 for v in facet) for facet in _CP2_FACETS)
    _check(X.f_vector() == (9, 36, 84, 90, 36), f"cp2 f-vector {X.f_vector()}")
    _check(is_closed_pseudomanifold(X), "cp2 is not a closed pseudomanifold")
    _check(X.euler_characteristic() == 3, "cp2 Euler characteristic")
    space = NamedSpace("cp2", X, (1, 0, 1, 0, 1))
    _check(rank(sq_matrix(X, 2, 2)) == 1, "cp2 Sq^2 rank")
    return space


def sphere_space(n: int) -> NamedSpace:
    return NamedSpace(f"s{n}", sphere(n), sphere_betti(n))


def simplex_space(n: int) -> NamedSpace:
    return NamedSpace(f"d{n}", standard_simplex(n), (1,) + (0,) * n)


def _suspended_betti(betti: tuple[int, ...]) -> tuple[int, ...]:
    # reduced cohomology shifts up by one; H^0 of a suspension is F2
    reduced = (betti[0] - 1,) + tuple(betti[1:])
    return (1,) + reduced


def iterated_suspension(S: NamedSpace, i: int) -> NamedSpace:
    if i < 0:
        raise ValueError("suspension index must be nonnegative")
    if i == 0:
        return S
    X, betti = S.complex, S.expected_betti
    for _ in range(i):
        X, betti = suspension(X), _suspended_betti(betti)
    return NamedSpace(f"susp{i}_{S.name}", X, betti)


def wedge_space(S: NamedSpace, T: NamedSpace) -> NamedSpace:
    n = max(len(S.expected_betti), len(T.expected_betti))
    a = S.expected_betti + (0,) * (n - len(S.expected_betti))
    b = T.expected_betti + (0,) * (n - len(T.expected_betti))
    betti = tuple(x + y for x, y in zip(a, b))
    betti = (betti[0] - 1,) + betti[1:]
    return NamedSpace(f"{S.name}_v_{T.name}", wedge(S.complex, T.complex), betti)


def s1_wedge_s2() -> NamedSpace:
    return wedge_space(sphere_space(1), sphere_space(2))


def s2_wedge_s4() -> NamedSpace:
    return wedge_space(sphere_space(2), sphere_space(4))


SPACES = {
    "rp2": rp2,
    "cp2": cp2,
    "s1": lambda: sphere_space(1),
    "s2": lambda: sphere_space(2),
    "s4": lambda: sphere_space(4),
    "d2": lambda: simplex_space(2),
    "s1_v_s2": s1_wedge_s2,
    "s2_v_s4": s2_wedge_s4,
    "susp_cp2": lambda: iterated_suspension(cp2(), 1),
    "susp_s2_v_s4": lambda: iterated_suspension(s2_wedge_s4(), 1),
}


def get_space(name: str) -> NamedSpace:
    """Look up a built-in space; ``susp<i>_<name>`` suspends ``name`` i times."""
    if name in SPACES:
        return SPACES[name]()
    if name.startswith("susp") and "_" in name:
        count, base = name[4:].split("_", 1)
        if count.isdigit() and base in SPACES:
            return iterated_suspension(SPACES[base](), int(count))
    raise KeyError(f"unknown space {name!r}; known: {', '.join(sorted(SPACES))}")
