"""Complex text files and cochain JSON.

A complex file lists one simplex per line as ascending integers separated
by spaces; ``#`` starts a comment and the file denotes the downward closure.
A cochain file is a JSON object ``{"degree": n, "support": [[v0, ...], ...]}``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, TextIO

from .simplicial import Cochain, SimplicialComplex, as_simplex


class ParseError(ValueError):
    pass


def parse_complex(text: str) -> SimplicialComplex:
    maximal = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            maximal.append(as_simplex(int(tok) for tok in line.split()))
        except ValueError as e:
            raise ParseError(f"line {lineno}: {e}") from None
    return SimplicialComplex.from_maximal_simplices(maximal)


def read_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex(Path(path).read_text(encoding="utf-8"))


def format_complex(X: SimplicialComplex, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines += [" ".join(map(str, x)) for x in X.maximal_simplices()]
    return "\n".join(lines) + "\n"


def write_complex(X: SimplicialComplex, out: TextIO, comment: str | None = None) -> None:
    out.write(format_complex(X, comment))


def cochain_from_json(data: dict) -> Cochain:
    try:
        degree = data["degree"]
        support = data["support"]
    except (KeyError, TypeError):
        raise ParseError("cochain JSON needs keys 'degree' and 'support'") from None
    if not isinstance(degree, int) or degree < 0:
        raise ParseError(f"bad degree {degree!r}")
    try:
        simplices = [as_simplex(s) for s in support]
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad simplex in support: {e}") from None
    for s in simplices:
        if len(s) != degree + 1:
            raise ParseError(f"{list(s)} is not a {degree}-simplex")
    if len(set(simplices)) != len(simplices):
        raise ParseError("repeated simplex in support")
    return Cochain(degree, simplices)


def read_cochain(path: str | Path) -> Cochain:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return cochain_from_json(data)


def simplex_lists(simplices: Iterable[tuple[int, ...]]) -> list[list[int]]:
    return [list(x) for x in sorted(simplices)]


def cochain_to_json(alpha: Cochain) -> dict:
    return {"degree": alpha.degree, "support": simplex_lists(alpha.support)}
