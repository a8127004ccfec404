"""Root-system data for the rank-1 and rank-2 simple Lie algebras.

Weights are tuples of integers in the fundamental-weight basis.  The Weyl
group is materialized as explicit integer matrices acting on those
coordinates; the full group is generated once per algebra by breadth-first
closure of the simple reflections and cached.

Conventions: the simple root ``alpha_i`` written in weight coordinates is
row ``i`` of the Cartan matrix, and the simple reflection acts by
``w_i(n)_j = n_j - n_i * C[i][j]``.  Root lengths are normalized so the
short root has squared length 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]
FracMatrix = tuple[tuple[Fraction, ...], ...]

# Coordinates this far out would overflow no Python int, but they signal a
# runaway caller; everything acceptance-sized stays tiny.
_COORD_LIMIT = 2**31


class AlgebraId(Enum):
    A1 = "A1"
    A2 = "A2"
    C2 = "C2"
    G2 = "G2"


_CARTAN: dict[AlgebraId, IntMatrix] = {
    AlgebraId.A1: ((2,),),
    AlgebraId.A2: ((2, -1), (-1, 2)),
    AlgebraId.C2: ((2, -1), (-2, 2)),
    AlgebraId.G2: ((2, -1), (-3, 2)),
}

_WEYL_ORDER = {
    AlgebraId.A1: 2,
    AlgebraId.A2: 6,
    AlgebraId.C2: 8,
    AlgebraId.G2: 12,
}


@dataclass(frozen=True)
class WeylElement:
    """One Weyl-group element: matrix on weight coordinates, determinant,
    and a shortest generator word (1-based indices, breadth-first order)."""

    matrix: IntMatrix
    det: int
    word_length: int
    word: tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    algebra: AlgebraId
    cartan: IntMatrix
    cartan_inverse: FracMatrix
    elements: tuple[WeylElement, ...]
    rho: Weight
    gram: FracMatrix
    symmetrizer: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def generators(self) -> tuple[WeylElement, ...]:
        return tuple(w for w in self.elements if w.word_length == 1)


def _identity(d: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    d = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d))
        for i in range(d)
    )


def _det(m: IntMatrix) -> int:
    if len(m) == 1:
        return m[0][0]
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _reflection_matrix(cartan: IntMatrix, i: int) -> IntMatrix:
    # w_i fixes every coordinate except that column i picks up -C[i][j].
    d = len(cartan)
    return tuple(
        tuple((1 if j == k else 0) - (cartan[i][j] if k == i else 0) for k in range(d))
        for j in range(d)
    )


def _invert(cartan: IntMatrix) -> FracMatrix:
    if len(cartan) == 1:
        return ((Fraction(1, cartan[0][0]),),)
    (a, b), (c, d) = cartan
    det = a * d - b * c
    return (
        (Fraction(d, det), Fraction(-b, det)),
        (Fraction(-c, det), Fraction(a, det)),
    )


@lru_cache(maxsize=None)
def build_root_system(algebra: AlgebraId) -> RootSystem:
    """Construct (and cache) the full root-system record for ``algebra``."""
    cartan = _CARTAN[algebra]
    d = len(cartan)
    gens = [_reflection_matrix(cartan, i) for i in range(d)]

    ident = _identity(d)
    elements = [WeylElement(ident, 1, 0, ())]
    seen = {ident}
    queue: deque[tuple[IntMatrix, tuple[int, ...]]] = deque([(ident, ())])
    while queue:
        mat, word = queue.popleft()
        for gi, gen in enumerate(gens, start=1):
            prod = _matmul(mat, gen)
            if prod in seen:
                continue
            seen.add(prod)
            next_word = word + (gi,)
            elements.append(WeylElement(prod, _det(prod), len(next_word), next_word))
            queue.append((prod, next_word))

    if len(elements) != _WEYL_ORDER[algebra]:
        raise RuntimeError(
            f"Weyl closure for {algebra.value} produced {len(elements)} elements,"
            f" expected {_WEYL_ORDER[algebra]}"
        )

    inverse = _invert(cartan)
    symmetrizer = _symmetrizer(cartan)
    gram = tuple(
        tuple(symmetrizer[i] * inverse[j][i] for j in range(d)) for i in range(d)
    )
    for i in range(d):
        for j in range(d):
            if gram[i][j] != gram[j][i]:
                raise RuntimeError("gram matrix failed to symmetrize")

    return RootSystem(
        algebra=algebra,
        cartan=cartan,
        cartan_inverse=inverse,
        elements=tuple(elements),
        rho=(1,) * d,
        gram=gram,
        symmetrizer=symmetrizer,
    )


def _symmetrizer(cartan: IntMatrix) -> tuple[Fraction, ...]:
    # d_i = (alpha_i, alpha_i)/2, scaled so the minimum (short root) is 1.
    if len(cartan) == 1:
        return (Fraction(1),)
    d2 = Fraction(cartan[1][0], cartan[0][1])
    low = min(Fraction(1), d2)
    return (Fraction(1) / low, d2 / low)


def act(rs: RootSystem, w: WeylElement, mu: Weight) -> Weight:
    """Image of the weight ``mu`` under the group element ``w``."""
    if len(mu) != rs.rank:
        raise ValueError("weight rank mismatch")
    if any(abs(c) >= _COORD_LIMIT for c in mu):
        raise ValueError("weight coordinate out of supported range")
    return tuple(sum(row[k] * mu[k] for k in range(rs.rank)) for row in w.matrix)


def to_root_coords(rs: RootSystem, mu: Weight) -> tuple[Fraction, ...]:
    """Coordinates of ``mu`` over the simple roots (rational in general)."""
    d = rs.rank
    inv = rs.cartan_inverse
    return tuple(
        sum((mu[i] * inv[i][j] for i in range(d)), start=Fraction(0)) for j in range(d)
    )


def is_dominant(mu: Weight) -> bool:
    return all(c >= 0 for c in mu)


def is_strictly_dominant(mu: Weight) -> bool:
    return all(c > 0 for c in mu)


def dominant_representative(rs: RootSystem, mu: Weight) -> tuple[WeylElement, Weight]:
    """First group element (in closure order) sending ``mu`` into the closed
    dominant chamber, together with the image.

    Every orbit meets the closed chamber in exactly one point, so the image
    is canonical even though the witnessing element need not be.
    """
    for w in rs.elements:
        image = act(rs, w, mu)
        if is_dominant(image):
            return w, image
    raise RuntimeError("orbit failed to meet the dominant chamber")


def positive_roots(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """All positive roots, as integer coordinate vectors over the simple
    roots, sorted lexicographically."""
    roots: set[Weight] = set()
    for i in range(rs.rank):
        simple = rs.cartan[i]
        for w in rs.elements:
            roots.add(act(rs, w, simple))
    positive = []
    for root in roots:
        coords = to_root_coords(rs, root)
        if any(c.denominator != 1 for c in coords):
            raise RuntimeError("root with non-integer root coordinates")
        ints = tuple(int(c) for c in coords)
        if all(c >= 0 for c in ints):
            positive.append(ints)
    return tuple(sorted(positive))


def inner_weight_root(rs: RootSystem, mu: Weight, alpha_root: tuple[int, ...]) -> Fraction:
    """Invariant inner product of a weight (weight coordinates) with a root
    (root coordinates), in the short-root-squared-length-2 normalization."""
    return sum(
        (Fraction(mu[j] * alpha_root[j]) * rs.symmetrizer[j] for j in range(rs.rank)),
        start=Fraction(0),
    )


def inner_weights(rs: RootSystem, mu: Weight, nu: Weight) -> Fraction:
    """Invariant inner product of two weights via the gram matrix."""
    d = rs.rank
    total = Fraction(0)
    for i in range(d):
        for j in range(d):
            total += mu[i] * rs.gram[i][j] * nu[j]
    return total
