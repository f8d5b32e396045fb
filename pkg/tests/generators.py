"""Random complexes, cochains and vertex maps for property tests."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from cupsq.simplicial import Cochain, SimplicialComplex, VertexMap


def random_complex(rng: random.Random, max_vertices: int = 9, max_dim: int = 4,
                   max_simplices: int = 200, n_facets: int | None = None) -> SimplicialComplex:
    """Union of random facets, keeping only facets that fit the simplex budget."""
    nv = rng.randint(2, max_vertices)
    n_facets = n_facets or rng.randint(1, 12)
    facets: list[tuple[int, ...]] = []
    closure: set[tuple[int, ...]] = set()
    for _ in range(n_facets):
        d = rng.randint(0, min(max_dim, nv - 1))
        x = tuple(sorted(rng.sample(range(nv), d + 1)))
        new = {s for r in range(1, len(x) + 1) for s in combinations(x, r)} - closure
        if len(closure) + len(new) > max_simplices:
            continue
        closure |= new
        facets.append(x)
    if not facets:
        facets = [(0,)]
    return SimplicialComplex.from_maximal_simplices(facets)


def random_cochain(rng: random.Random, X: SimplicialComplex, n: int, p: float = 0.5) -> Cochain:
    return Cochain(n, [x for x in X.simplices(n) if rng.random() < p])


def random_vertex_map(rng: random.Random, X: SimplicialComplex, collapse: bool = True,
                      monotone: bool = False) -> VertexMap:
    """Random vertex map into the complex generated by the images of X's simplices."""
    verts = X.vertices
    width = rng.randint(1, len(verts)) if collapse else len(verts)
    codomain = rng.sample(range(len(verts) + 5), width)
    if collapse:
        images = [rng.choice(codomain) for _ in verts]
    else:
        images = codomain
    if monotone:
        images = sorted(images)
    assignment = dict(zip(verts, images))
    target = SimplicialComplex.from_maximal_simplices(
        sorted({assignment[v] for v in x}) for x in X)
    return VertexMap(assignment, X, target)


@st.composite
def simplices(draw, max_vertex: int = 12, max_dim: int = 6):
    verts = draw(st.sets(st.integers(0, max_vertex), min_size=1, max_size=max_dim + 1))
    return tuple(sorted(verts))


@st.composite
def complexes(draw, max_vertex: int = 8, max_dim: int = 4, max_facets: int = 6):
    facets = draw(st.lists(simplices(max_vertex, max_dim), min_size=1, max_size=max_facets))
    return SimplicialComplex.from_maximal_simplices(facets)


@st.composite
def complexes_with_cochain(draw, max_vertex: int = 8, max_dim: int = 4):
    X = draw(complexes(max_vertex, max_dim))
    n = draw(st.integers(0, X.top_dimension))
    members = X.simplices(n)
    mask = draw(st.lists(st.booleans(), min_size=len(members), max_size=len(members)))
    return X, Cochain(n, [x for x, keep in zip(members, mask) if keep])


def unit_cochain(x) -> Cochain:
    return Cochain(len(x) - 1, [tuple(x)])
