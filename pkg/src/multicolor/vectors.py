"""Integer vector arithmetic on demand vectors.

Vectors are plain tuples of non-negative ints, one coordinate per vertex in
the canonical order of the instance.  Sets of vectors are ordinary Python
sets (tuples hash), deduplicated by construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Vec = tuple[int, ...]


def _check_dims(x: Vec, y: Vec) -> None:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")


def leq(x: Vec, y: Vec) -> bool:
    """Componentwise partial order: every coordinate of x is <= that of y."""
    _check_dims(x, y)
    return all(a <= b for a, b in zip(x, y))


def norm(x: Vec) -> int:
    """Sum of coordinates."""
    return sum(x)


def vec_add(x: Vec, y: Vec) -> Vec:
    _check_dims(x, y)
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vec, y: Vec) -> Vec:
    """Componentwise difference x - y; requires y <= x."""
    if not leq(y, x):
        raise ValueError(f"{y} is not <= {x}")
    return tuple(a - b for a, b in zip(x, y))


def vec_min(x: Vec, y: Vec) -> Vec:
    """Componentwise minimum."""
    _check_dims(x, y)
    return tuple(min(a, b) for a, b in zip(x, y))


def zero(n: int) -> Vec:
    return (0,) * n


def indicator(members: Iterable[int], n: int) -> Vec:
    """0/1 vector of length n with ones exactly at the given indices."""
    coords = [0] * n
    for i in members:
        if not 0 <= i < n:
            raise ValueError(f"vertex index {i} out of range for dimension {n}")
        coords[i] = 1
    return tuple(coords)


def support(x: Vec) -> frozenset[int]:
    """Indices of the nonzero coordinates."""
    return frozenset(i for i, a in enumerate(x) if a)


def vectorial_sum(sets: Sequence[Iterable[Vec]]) -> set[Vec]:
    """All sums picking one vector from each input set, deduplicated.

    Raises:
        ValueError: on an empty sequence of sets, an empty member set, or
            mismatched dimensions.
    """
    if not sets:
        raise ValueError("vectorial sum of an empty sequence of sets")
    acc: set[Vec] | None = None
    for vecs in sets:
        batch = set(vecs)
        if not batch:
            raise ValueError("vectorial sum over an empty set of vectors")
        if acc is None:
            dim = len(next(iter(batch)))
            for v in batch:
                if len(v) != dim:
                    raise ValueError("dimension mismatch inside vector set")
            acc = batch
        else:
            acc = {vec_add(a, b) for a in acc for b in batch}
    assert acc is not None
    return acc


def in_hyperrectangle(w: Vec, vecs: Iterable[Vec]) -> Vec | None:
    """Dominance witness: some member x with w <= x, or None.

    Membership of w in the downward closure of `vecs` is equivalent to a
    witness existing.  Ties break to the lexicographically smallest witness
    so callers get deterministic output.
    """
    best: Vec | None = None
    for x in vecs:
        if leq(w, x) and (best is None or x < best):
            best = x
    return best
