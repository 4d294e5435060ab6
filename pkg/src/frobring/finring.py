"""Finite unital rings presented by additive generators and structure constants.

A FiniteRing is a Z_n-algebra: an additive group Z_{d_1} x ... x Z_{d_k}
(each d_i dividing n) together with a multiplication table for the basis
vectors e_1, ..., e_k and a distinguished identity element.  Products of
arbitrary elements come from extending the table Z-bilinearly, which is
well defined exactly when d_i * (e_i e_j) = d_j * (e_i e_j) = 0 holds for
every table entry.  Construction validates well-definedness, associativity
and the unit laws on the basis, and that the additive order of 1 equals n,
so the characteristic really is n.

Structural computations are all brute force over the element list, sized
for rings of a few hundred elements: units by two-sided inverse search,
the Jacobson radical by quasi-regularity (x is in the radical iff 1 - a*x
is a unit for every a), socles as annihilators of the radical, and the
Frobenius test by looking for a single socle generator on each side.
Rings cache these computations; treat constructed rings as immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .znmod import (
    DEFAULT_CAP,
    Element,
    EnumerationCapError,
    ModuleShape,
    enumerate_module,
)


class RingValidationError(ValueError):
    """A structure-constant presentation failed a ring axiom.

    Carries the failed check's name and a witness (indices or elements)."""

    def __init__(self, check: str, witness=None, message: str | None = None):
        self.check = check
        self.witness = witness
        super().__init__(message or f"{check} failed, witness {witness!r}")


@dataclass(frozen=True)
class Ideal:
    """A one- or two-sided ideal given by its element set."""

    side: str  # 'left', 'right' or 'two-sided'
    elements: frozenset[Element]

    def __post_init__(self):
        if self.side not in ("left", "right", "two-sided"):
            raise ValueError(f"bad ideal side {self.side!r}")

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SocleCertificate:
    """Outcome of the socle-generator Frobenius test, with witnesses."""

    is_frobenius: bool
    radical_size: int
    right_socle_size: int
    left_socle_size: int
    right_witness: Element | None
    left_witness: Element | None

    def __bool__(self) -> bool:
        return self.is_frobenius


class FiniteRing:
    """Finite unital ring over Z_n given by structure constants."""

    def __init__(
        self,
        shape: ModuleShape,
        mul_table: Sequence[Sequence[Iterable[int]]],
        one: Iterable[int],
        *,
        label: str | None = None,
        cayley: Sequence[Sequence[int]] | None = None,
        cap: int = DEFAULT_CAP,
        check: bool = True,
    ):
        self.shape = shape
        k = shape.rank
        if len(mul_table) != k or any(len(row) != k for row in mul_table):
            raise RingValidationError(
                "table-shape", (len(mul_table), k), f"multiplication table must be {k}x{k}"
            )
        self.mul_table: tuple[tuple[Element, ...], ...] = tuple(
            tuple(shape.reduce(entry) for entry in row) for row in mul_table
        )
        self.one: Element = shape.reduce(one)
        self.label = label
        self.cayley = tuple(tuple(row) for row in cayley) if cayley is not None else None
        self.cap = cap
        self._elements: tuple[Element, ...] | None = None
        self._units: frozenset[Element] | None = None
        self._radical: Ideal | None = None
        self._socles: dict[str, Ideal] = {}
        if check:
            failures = table_validation_report(self)
            for check_name, ok, witness in failures:
                if not ok:
                    raise RingValidationError(check_name, witness)

    # -- basic structure ---------------------------------------------------

    @property
    def rank(self) -> int:
        return self.shape.rank

    @property
    def characteristic(self) -> int:
        return self.shape.n

    @property
    def cardinality(self) -> int:
        return self.shape.cardinality

    @property
    def zero(self) -> Element:
        return self.shape.zero

    def basis(self, i: int) -> Element:
        # reduce: a coordinate of order 1 has no generator besides 0
        return self.shape.reduce(1 if j == i else 0 for j in range(self.rank))

    def element(self, coords: Iterable[int]) -> Element:
        return self.shape.reduce(coords)

    def elements(self) -> tuple[Element, ...]:
        if self._elements is None:
            self._elements = tuple(enumerate_module(self.shape, self.cap))
        return self._elements

    # -- arithmetic --------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return self.shape.add(a, b)

    def sub(self, a: Element, b: Element) -> Element:
        return self.shape.sub(a, b)

    def neg(self, a: Element) -> Element:
        return self.shape.neg(a)

    def scale(self, c: int, a: Element) -> Element:
        return self.shape.scale(c, a)

    def mul(self, a: Element, b: Element) -> Element:
        """Product by Z-bilinear extension of the basis table."""
        k = self.rank
        acc = [0] * k
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row = self.mul_table[i]
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                c = ai * bj
                e = row[j]
                for l in range(k):
                    acc[l] += c * e[l]
        orders = self.shape.orders
        return tuple(acc[l] % orders[l] for l in range(k))

    def units(self) -> frozenset[Element]:
        if self._units is None:
            elems = self.elements()
            found = set()
            for a in elems:
                for b in elems:
                    if self.mul(a, b) == self.one and self.mul(b, a) == self.one:
                        found.add(a)
                        break
            self._units = frozenset(found)
        return self._units

    def is_unit(self, a: Element) -> bool:
        return a in self.units()

    # -- radical and socle -------------------------------------------------

    def jacobson_radical(self) -> Ideal:
        """Radical by quasi-regularity: x with 1 - a*x a unit for every a."""
        if self._radical is None:
            elems = self.elements()
            units = self.units()
            rad = frozenset(
                x
                for x in elems
                if all(self.sub(self.one, self.mul(a, x)) in units for a in elems)
            )
            self._radical = Ideal("two-sided", rad)
        return self._radical

    def socle(self, side: str) -> Ideal:
        """Annihilator of the radical: right socle kills the radical from
        the left (x * J = 0), left socle from the right (J * x = 0)."""
        if side not in ("left", "right"):
            raise ValueError(f"bad socle side {side!r}")
        if side not in self._socles:
            rad = self.jacobson_radical().elements
            if side == "right":
                soc = frozenset(
                    x for x in self.elements() if all(self.mul(x, j) == self.zero for j in rad)
                )
            else:
                soc = frozenset(
                    x for x in self.elements() if all(self.mul(j, x) == self.zero for j in rad)
                )
            self._socles[side] = Ideal(side, soc)
        return self._socles[side]

    # -- conveniences ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteRing)
            and self.shape == other.shape
            and self.mul_table == other.mul_table
            and self.one == other.one
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.mul_table, self.one))

    def __repr__(self) -> str:
        name = self.label or "FiniteRing"
        return f"<{name}: char {self.characteristic}, orders {self.shape.orders}>"


def table_validation_report(ring: FiniteRing) -> list[tuple[str, bool, object]]:
    """Run every presentation check, returning (name, ok, witness) rows.

    Checks run in dependency order; a bilinearity failure makes the later
    product-based checks meaningless, so they are skipped once it fails.
    """
    shape = ring.shape
    k = shape.rank
    orders = shape.orders
    report: list[tuple[str, bool, object]] = []

    witness = None
    for i in range(k):
        for j in range(k):
            e = ring.mul_table[i][j]
            for l in range(k):
                if (orders[i] * e[l]) % orders[l] or (orders[j] * e[l]) % orders[l]:
                    witness = (i, j, l)
                    break
            if witness:
                break
        if witness:
            break
    report.append(("bilinear-well-defined", witness is None, witness))
    if witness is not None:
        return report

    witness = None
    for i in range(k):
        for j in range(k):
            for l in range(k):
                left = ring.mul(ring.mul_table[i][j], ring.basis(l))
                right = ring.mul(ring.basis(i), ring.mul_table[j][l])
                if left != right:
                    witness = (i, j, l)
                    break
            if witness:
                break
        if witness:
            break
    report.append(("associativity", witness is None, witness))

    witness = None
    for i in range(k):
        e = ring.basis(i)
        if ring.mul(ring.one, e) != e or ring.mul(e, ring.one) != e:
            witness = i
            break
    report.append(("unit-laws", witness is None, witness))

    order_of_one = shape.element_order(ring.one)
    report.append(
        ("characteristic", order_of_one == shape.n, (order_of_one, shape.n))
    )
    return report


# -- constructors ----------------------------------------------------------


def ring_zn(n: int, *, label: str | None = None) -> FiniteRing:
    """The ring Z_n itself; n = 1 gives the zero ring."""
    shape = ModuleShape(n, (n,))
    return FiniteRing(shape, (((1,),),), (1,), label=label or f"Z{n}")


def ring_from_table(
    n: int,
    orders: Sequence[int],
    mul: Sequence[Sequence[Iterable[int]]],
    one: Iterable[int],
    *,
    label: str | None = None,
    cap: int = DEFAULT_CAP,
) -> FiniteRing:
    """Build and fully validate a ring from an explicit presentation."""
    return FiniteRing(ModuleShape(n, tuple(orders)), mul, one, label=label, cap=cap)


def ring_product(*rings: FiniteRing, label: str | None = None) -> FiniteRing:
    """Direct product; the characteristic is the lcm of the factors'."""
    if not rings:
        raise ValueError("product needs at least one factor")
    n = lcm(*(r.characteristic for r in rings))
    orders: list[int] = []
    for r in rings:
        orders.extend(r.shape.orders)
    shape = ModuleShape(n, tuple(orders))
    k = shape.rank
    offsets = []
    pos = 0
    for r in rings:
        offsets.append(pos)
        pos += r.rank

    def embed(r_idx: int, coords: Element) -> Element:
        out = [0] * k
        off = offsets[r_idx]
        for t, c in enumerate(coords):
            out[off + t] = c
        return tuple(out)

    table = [[shape.zero] * k for _ in range(k)]
    for r_idx, r in enumerate(rings):
        off = offsets[r_idx]
        for i in range(r.rank):
            for j in range(r.rank):
                table[off + i][off + j] = embed(r_idx, r.mul_table[i][j])
    one = [0] * k
    for r_idx, r in enumerate(rings):
        for t, c in enumerate(r.one):
            one[offsets[r_idx] + t] = c
    return FiniteRing(shape, table, tuple(one), label=label)


def ring_matrix(base: FiniteRing, t: int, *, label: str | None = None,
                cap: int = DEFAULT_CAP) -> FiniteRing:
    """t x t matrices over base, basis E_pq e_i ordered by (p, q, i)."""
    if t < 1:
        raise ValueError("matrix size must be positive")
    k0 = base.rank
    k = t * t * k0
    orders = tuple(base.shape.orders[i] for _ in range(t * t) for i in range(k0))
    shape = ModuleShape(base.characteristic, orders)
    if shape.cardinality > cap:
        raise EnumerationCapError(
            f"matrix ring would have {shape.cardinality} elements, cap is {cap}"
        )

    def flat(p: int, q: int, i: int) -> int:
        return (p * t + q) * k0 + i

    table = [[shape.zero] * k for _ in range(k)]
    for p in range(t):
        for q in range(t):
            for i in range(k0):
                for r in range(t):
                    for s in range(t):
                        if q != r:
                            continue
                        for j in range(k0):
                            prod_ij = base.mul_table[i][j]
                            entry = [0] * k
                            for l in range(k0):
                                entry[flat(p, s, l)] = prod_ij[l]
                            table[flat(p, q, i)][flat(r, s, j)] = tuple(entry)
    one = [0] * k
    for p in range(t):
        for i in range(k0):
            one[flat(p, p, i)] = base.one[i]
    return FiniteRing(shape, table, tuple(one), label=label or f"M{t}({base.label})",
                      cap=cap)


def ring_group_algebra(
    n: int, cayley: Sequence[Sequence[int]], *, label: str | None = None
) -> FiniteRing:
    """Group algebra Z_n[G] from a Cayley table (indices into the group).

    The table must be a finite group: a Latin square with a two-sided
    identity and associative composition.  The group basis is kept on the
    ring (attribute ``cayley``) so duality helpers can invert elements.
    """
    g = len(cayley)
    if g < 1 or any(len(row) != g for row in cayley):
        raise RingValidationError("group-table-shape", g, "Cayley table must be square")
    rows = [tuple(row) for row in cayley]
    for idx, row in enumerate(rows):
        if sorted(row) != list(range(g)):
            raise RingValidationError("group-table-latin", ("row", idx))
    for j in range(g):
        col = [rows[i][j] for i in range(g)]
        if sorted(col) != list(range(g)):
            raise RingValidationError("group-table-latin", ("column", j))
    identity = None
    for e in range(g):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(g)):
            identity = e
            break
    if identity is None:
        raise RingValidationError("group-identity", None, "no two-sided identity")
    for a in range(g):
        for b in range(g):
            for c in range(g):
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    raise RingValidationError("group-associativity", (a, b, c))

    shape = ModuleShape(n, (n,) * g)
    table = [
        [tuple(1 if l == rows[i][j] else 0 for l in range(g)) for j in range(g)]
        for i in range(g)
    ]
    one = tuple(1 if l == identity else 0 for l in range(g))
    return FiniteRing(shape, table, one, label=label or f"Z{n}[G{g}]", cayley=rows)


# -- ideal machinery -------------------------------------------------------


def is_left_ideal(ring: FiniteRing, elems: frozenset[Element]) -> bool:
    return (
        ring.zero in elems
        and all(ring.add(a, b) in elems for a in elems for b in elems)
        and all(ring.mul(r, a) in elems for r in ring.elements() for a in elems)
    )


def is_right_ideal(ring: FiniteRing, elems: frozenset[Element]) -> bool:
    return (
        ring.zero in elems
        and all(ring.add(a, b) in elems for a in elems for b in elems)
        and all(ring.mul(a, r) in elems for r in ring.elements() for a in elems)
    )


def cyclic_left_ideals(ring: FiniteRing) -> set[frozenset[Element]]:
    """The principal left ideals R*a for every a (images of right mult)."""
    out = set()
    elems = ring.elements()
    for a in elems:
        out.add(frozenset(ring.mul(r, a) for r in elems))
    return out


def cyclic_right_ideals(ring: FiniteRing) -> set[frozenset[Element]]:
    out = set()
    elems = ring.elements()
    for a in elems:
        out.add(frozenset(ring.mul(a, r) for r in elems))
    return out


def _close_under_sums(seeds: set[frozenset[Element]], add) -> list[frozenset[Element]]:
    """Close a family of subgroups under pairwise sums I + J = {i + j}."""
    family = set(seeds)
    frontier = list(seeds)
    while frontier:
        fresh: list[frozenset[Element]] = []
        for I in frontier:
            for J in list(family):
                s = frozenset(add(i, j) for i in I for j in J)
                if s not in family:
                    family.add(s)
                    fresh.append(s)
        frontier = fresh
    return sorted(family, key=lambda s: (len(s), sorted(s)))


def left_ideals(ring: FiniteRing) -> list[Ideal]:
    """Every left ideal, as sums of principal ones; sorted by size.

    Exhaustive because each left ideal is the sum of the principal ideals
    of its members.  Intended for rings up to a hundred or so elements.
    """
    sets = _close_under_sums(cyclic_left_ideals(ring), ring.add)
    return [Ideal("left", s) for s in sets]


def right_ideals(ring: FiniteRing) -> list[Ideal]:
    sets = _close_under_sums(cyclic_right_ideals(ring), ring.add)
    return [Ideal("right", s) for s in sets]


# -- the socle Frobenius test ---------------------------------------------


def is_frobenius_socle(ring: FiniteRing) -> SocleCertificate:
    """Decide the Frobenius property through socle generators.

    The ring is Frobenius iff on each side the socle is generated by a
    single element as a module over the ring and has the same number of
    elements as R/J.  A generator s of the right socle with |s R| = |R/J|
    is exactly a module isomorphism R/J -> Soc(R) sending 1 + J to s, and
    symmetrically on the left.  Both one-sided conditions are verified.
    """
    rad = ring.jacobson_radical()
    quotient_size = ring.cardinality // len(rad)
    right_soc = ring.socle("right")
    left_soc = ring.socle("left")
    elems = ring.elements()

    right_witness = None
    if len(right_soc) == quotient_size:
        for s in sorted(right_soc.elements):
            if frozenset(ring.mul(s, r) for r in elems) == right_soc.elements:
                right_witness = s
                break
    left_witness = None
    if len(left_soc) == quotient_size:
        for s in sorted(left_soc.elements):
            if frozenset(ring.mul(r, s) for r in elems) == left_soc.elements:
                left_witness = s
                break

    return SocleCertificate(
        is_frobenius=right_witness is not None and left_witness is not None,
        radical_size=len(rad),
        right_socle_size=len(right_soc),
        left_socle_size=len(left_soc),
        right_witness=right_witness,
        left_witness=left_witness,
    )
