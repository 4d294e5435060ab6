"""Exact arithmetic in finite modules Z_{d_1} x ... x Z_{d_k} inside Z_n.

A ModuleShape fixes the ambient characteristic n together with the additive
orders d_1 | n, ..., d_k | n of a distinguished coordinate system.  Elements
are plain integer tuples, coordinate i reduced mod d_i, so they are hashable
and can live in sets.  Linear forms into Z_n are weight tuples; the weight
on a coordinate of order d must be a multiple of n/d, which is exactly the
condition weight * d = 0 (mod n) needed for the map to be well defined.
Counting those choices gives d forms per coordinate, hence as many forms as
elements in total.

Everything is immutable and all operations are pure.  Enumerations run in
lexicographic coordinate order and are guarded by an explicit size cap;
exceeding the cap raises EnumerationCapError, never silently truncates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod
from typing import Callable, Iterable, Iterator

Element = tuple[int, ...]

DEFAULT_CAP = 1 << 20


class EnumerationCapError(ValueError):
    """An enumeration would exceed the configured size cap."""


@dataclass(frozen=True)
class ModuleShape:
    """Coordinate description of a finite abelian group inside char n."""

    n: int
    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        if self.n < 1:
            raise ValueError(f"characteristic must be positive, got {self.n}")
        for i, d in enumerate(self.orders):
            if d < 1:
                raise ValueError(f"order of coordinate {i} must be positive, got {d}")
            if self.n % d != 0:
                raise ValueError(
                    f"order {d} of coordinate {i} does not divide the characteristic {self.n}"
                )

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def cardinality(self) -> int:
        return prod(self.orders)

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == self.rank
            and all(isinstance(c, int) and 0 <= c < d for c, d in zip(x, self.orders))
        )

    def reduce(self, coords: Iterable[int]) -> Element:
        """Reduce an integer coordinate vector into canonical range."""
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(c % d for c, d in zip(coords, self.orders))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % d for a, d in zip(x, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple((a - b) % d for a, b, d in zip(x, y, self.orders))

    def scale(self, c: int, x: Element) -> Element:
        return tuple((c * a) % d for a, d in zip(x, self.orders))

    def element_order(self, x: Element) -> int:
        """Additive order of x: lcm of the per-coordinate orders."""
        return lcm(*(d // gcd(d, a) for a, d in zip(x, self.orders))) if self.rank else 1


@dataclass(frozen=True)
class ZnLinearForm:
    """Additive map into Z_n given by a weight per coordinate."""

    shape: ModuleShape
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        n = self.shape.n
        if len(self.weights) != self.shape.rank:
            raise ValueError(
                f"expected {self.shape.rank} weights, got {len(self.weights)}"
            )
        for i, (w, d) in enumerate(zip(self.weights, self.shape.orders)):
            if not 0 <= w < n:
                raise ValueError(f"weight {w} at coordinate {i} not reduced mod {n}")
            if (w * d) % n != 0:
                raise ValueError(
                    f"weight {w} at coordinate {i} is not a multiple of {n // d}, "
                    "so the map is not well defined on a coordinate of order "
                    f"{d}"
                )

    def evaluate(self, x: Element) -> int:
        return sum(w * c for w, c in zip(self.weights, x)) % self.shape.n

    __call__ = evaluate


def _check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise EnumerationCapError(f"{what} has {size} entries, cap is {cap}")


def enumerate_module(shape: ModuleShape, cap: int = DEFAULT_CAP) -> Iterator[Element]:
    """Yield every element of the module in lexicographic coordinate order."""
    _check_cap(shape.cardinality, cap, "module")
    return product(*(range(d) for d in shape.orders))


def enumerate_forms(shape: ModuleShape, cap: int = DEFAULT_CAP) -> Iterator[ZnLinearForm]:
    """Yield every linear form into Z_n, ordered by weight tuples.

    Coordinate i of order d contributes the d weights 0, n/d, 2n/d, ...,
    so exactly as many forms are produced as the module has elements.
    """
    _check_cap(shape.cardinality, cap, "form space")
    steps = [shape.n // d for d in shape.orders]
    for js in product(*(range(d) for d in shape.orders)):
        yield ZnLinearForm(shape, tuple(j * s for j, s in zip(js, steps)))


def span(gens: Iterable[Element], shape: ModuleShape) -> frozenset[Element]:
    """Additive subgroup generated by gens, as a frozenset."""
    gens = [shape.reduce(g) for g in gens]
    closed = {shape.zero}
    grew = True
    while grew:
        grew = False
        for g in gens:
            for a in list(closed):
                s = shape.add(a, g)
                if s not in closed:
                    closed.add(s)
                    grew = True
    return frozenset(closed)


def kernel_elements(
    pairing: Callable[[Element, Element], int],
    left_shape: ModuleShape,
    right_shape: ModuleShape,
    cap: int = DEFAULT_CAP,
) -> frozenset[Element]:
    """All x in the left module with pairing(x, y) = 0 for every y.

    The pairing must return values already reduced mod n.  This is the
    brute-force ground truth used by every nondegeneracy decision.
    """
    right = list(enumerate_module(right_shape, cap))
    return frozenset(
        x
        for x in enumerate_module(left_shape, cap)
        if all(pairing(x, y) == 0 for y in right)
    )
