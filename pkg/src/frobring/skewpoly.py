"""Skew polynomials over a finite ring and their two-sided monic quotients.

In A[x; aut] the variable twists scalars as x * a = aut(a) * x, so the
product of coefficient lists is c_l = sum_{i+j=l} f_i * aut^i(g_j).  A
monic modulus f of degree m generates a two-sided ideal exactly when

  (i)  f * a = aut^m(a) * f for every a in A (checked on the basis), and
  (ii) f * x lies in the left ideal, which pins the unique monic degree-1
       left quotient x + c with c = f_{m-1} - aut(f_{m-1}) and demands
       f_{i-1} - aut(f_{i-1}) = c * f_i for every i.

When that holds, left remainders of degree < m form a finite ring with
m * rank(A) additive generators.  If the constant coefficient of f is a
unit and A carries a Frobenius functional eps, then g |-> eps(g_0) is a
Frobenius functional on the quotient; construction re-verifies the
nondegeneracy instead of trusting it.

For f = x^m - 1 with aut^m = id the quotient also carries the involution
sum g_i x^i |-> sum aut^{-i}(g_i) x^{-i} (indices mod m), which reverses
products and links the Euclidean dual of a code to a form orthogonal.

Quotient elements are tuples of m coefficient elements of A, coefficient
index = degree, so they double directly as length-m codewords over A.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .znmod import DEFAULT_CAP, Element, ModuleShape, ZnLinearForm, _check_cap
from .finring import FiniteRing
from .frobenius import FrobeniusFunctional, _as_form

QElement = tuple[Element, ...]


class AutomorphismError(ValueError):
    """A candidate basis-image list does not define a ring automorphism."""


class NotTwoSidedError(ValueError):
    """The modulus does not generate a two-sided ideal."""

    def __init__(self, witness, message: str | None = None):
        self.witness = witness
        super().__init__(message or f"modulus is not two-sided, witness {witness!r}")


class UnsupportedModulusError(ValueError):
    """Operation requires the modulus x^m - 1 with aut^m = id."""


class InternalConsistencyError(RuntimeError):
    """A fact the construction guarantees failed to re-verify."""


class RingAutomorphism:
    """Ring automorphism of a FiniteRing, stored by basis images."""

    def __init__(self, ring: FiniteRing, images: Sequence[Iterable[int]], *, check: bool = True):
        self.ring = ring
        if len(images) != ring.rank:
            raise AutomorphismError(f"expected {ring.rank} images, got {len(images)}")
        self.images: tuple[Element, ...] = tuple(ring.element(im) for im in images)
        if check:
            self._validate()
        self._power_tables: list[tuple[Element, ...]] | None = None

    def _validate(self):
        ring = self.ring
        orders = ring.shape.orders
        for i, im in enumerate(self.images):
            if ring.shape.element_order(im) > orders[i]:
                raise AutomorphismError(
                    f"image of basis {i} has additive order larger than {orders[i]}, "
                    "map is not well defined"
                )
        seen = {self.apply(a) for a in ring.elements()}
        if len(seen) != ring.cardinality:
            raise AutomorphismError("map is not a bijection")
        if self.apply(ring.one) != ring.one:
            raise AutomorphismError("map does not fix the identity")
        for i in range(ring.rank):
            for j in range(ring.rank):
                lhs = self.apply(ring.mul_table[i][j])
                rhs = ring.mul(self.images[i], self.images[j])
                if lhs != rhs:
                    raise AutomorphismError(
                        f"map is not multiplicative on basis pair ({i}, {j})"
                    )

    @classmethod
    def identity(cls, ring: FiniteRing) -> "RingAutomorphism":
        return cls(ring, [ring.basis(i) for i in range(ring.rank)], check=False)

    def _extend(self, images: tuple[Element, ...], a: Element) -> Element:
        out = self.ring.zero
        for i, c in enumerate(a):
            if c:
                out = self.ring.add(out, self.ring.scale(c, images[i]))
        return out

    def apply(self, a: Element) -> Element:
        return self._extend(self.images, a)

    @property
    def order(self) -> int:
        """Multiplicative order of the automorphism."""
        return len(self._tables())

    def _tables(self) -> list[tuple[Element, ...]]:
        if self._power_tables is None:
            ident = tuple(self.ring.basis(i) for i in range(self.ring.rank))
            tables = [ident]
            current = self.images
            guard = 0
            while current != ident:
                tables.append(current)
                current = tuple(self.apply(c) for c in current)
                guard += 1
                if guard > 10**6:
                    raise InternalConsistencyError("automorphism order runaway")
            self._power_tables = tables
        return self._power_tables

    def apply_power(self, j: int, a: Element) -> Element:
        tables = self._tables()
        return self._extend(tables[j % len(tables)], a)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RingAutomorphism)
            and self.ring == other.ring
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.images))


# -- raw polynomial arithmetic (coefficient lists, index = degree) ---------


def poly_mul(ring: FiniteRing, aut: RingAutomorphism, f: Sequence[Element],
             g: Sequence[Element]) -> list[Element]:
    if not f or not g:
        return []
    out = [ring.zero] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi == ring.zero:
            continue
        for j, gj in enumerate(g):
            if gj == ring.zero:
                continue
            out[i + j] = ring.add(out[i + j], ring.mul(fi, aut.apply_power(i, gj)))
    return out


def poly_left_divmod(
    ring: FiniteRing, aut: RingAutomorphism, g: Sequence[Element], f: Sequence[Element]
) -> tuple[list[Element], list[Element]]:
    """Write g = q * f + r with deg r < deg f; requires f monic.

    Monicity makes the division exact without inverting lead terms: the
    quotient term killing degree D is lead(g) * x^(D - m).
    """
    m = len(f) - 1
    if m < 0 or f[m] != ring.one:
        raise ValueError("divisor must be monic")
    r = list(g)
    q = [ring.zero] * max(len(r) - m, 0)
    while len(r) > m:
        lead = r[-1]
        d = len(r) - 1 - m
        if lead != ring.zero:
            q[d] = ring.add(q[d], lead)
            for i, fi in enumerate(f):
                r[d + i] = ring.sub(r[d + i], ring.mul(lead, aut.apply_power(d, fi)))
        r.pop()
    return q, r


@dataclass(frozen=True)
class TwoSidedCheck:
    ok: bool
    reason: str | None = None
    witness: object = None


def check_two_sided(
    ring: FiniteRing, aut: RingAutomorphism, modulus: Sequence[Element]
) -> TwoSidedCheck:
    """Decide whether a monic modulus generates a two-sided ideal.

    Condition (i) is linear in the scalar, so the ring basis suffices;
    condition (ii) compares f * x against its unique candidate monic
    degree-1 left quotient coefficient by coefficient.
    """
    m = len(modulus) - 1
    if m < 1 or modulus[m] != ring.one:
        raise ValueError("modulus must be monic of degree >= 1")
    for idx in range(ring.rank):
        a = ring.basis(idx)
        top = aut.apply_power(m, a)
        for i, fi in enumerate(modulus):
            if ring.mul(fi, aut.apply_power(i, a)) != ring.mul(top, fi):
                return TwoSidedCheck(
                    False,
                    "scalar-commutation",
                    {"basis": idx, "degree": i},
                )
    c = ring.sub(modulus[m - 1], aut.apply(modulus[m - 1]))
    for i in range(m):
        prev = modulus[i - 1] if i >= 1 else ring.zero
        if ring.sub(prev, aut.apply(prev)) != ring.mul(c, modulus[i]):
            return TwoSidedCheck(False, "shift-quotient", {"degree": i})
    return TwoSidedCheck(True)


class SkewQuotient:
    """The finite ring A[x; aut] / (f) for a monic two-sided f."""

    def __init__(
        self,
        base: FiniteRing,
        aut: RingAutomorphism,
        modulus: Sequence[Iterable[int]],
        *,
        label: str | None = None,
        cap: int = DEFAULT_CAP,
        check: bool = True,
    ):
        self.base = base
        self.aut = aut
        self.modulus: tuple[Element, ...] = tuple(base.element(c) for c in modulus)
        self.m = len(self.modulus) - 1
        self.label = label
        self.cap = cap
        if self.m < 1:
            raise ValueError("modulus must have degree at least 1")
        if self.modulus[self.m] != base.one:
            raise ValueError("modulus must be monic")
        if check:
            if aut.ring != base:
                raise ValueError("automorphism acts on a different ring")
            verdict = check_two_sided(base, aut, self.modulus)
            if not verdict.ok:
                raise NotTwoSidedError((verdict.reason, verdict.witness))
            if not base.is_unit(self.modulus[0]):
                raise ValueError("constant coefficient of the modulus must be a unit")
        self._ring: FiniteRing | None = None

    # -- element plumbing --------------------------------------------------

    @property
    def cardinality(self) -> int:
        return self.base.cardinality ** self.m

    @property
    def zero(self) -> QElement:
        return (self.base.zero,) * self.m

    @property
    def one(self) -> QElement:
        return self.embed_scalar(self.base.one)

    def embed_scalar(self, a: Element) -> QElement:
        return (a,) + (self.base.zero,) * (self.m - 1)

    def shift_generator(self) -> QElement:
        """The class of x (reduced, so for m = 1 it is a scalar)."""
        if self.m == 1:
            # x = (x - f) + f reduces to -f_0
            return (self.base.neg(self.modulus[0]),)
        out = [self.base.zero] * self.m
        out[1] = self.base.one
        return tuple(out)

    def elements(self) -> Iterator[QElement]:
        _check_cap(self.cardinality, self.cap, "skew quotient")
        return product(self.base.elements(), repeat=self.m)

    def reduce_poly(self, coeffs: Sequence[Element]) -> QElement:
        _, r = poly_left_divmod(self.base, self.aut, list(coeffs), list(self.modulus))
        r = list(r) + [self.base.zero] * (self.m - len(r))
        return tuple(r)

    # -- arithmetic --------------------------------------------------------

    def add(self, g: QElement, h: QElement) -> QElement:
        return tuple(self.base.add(a, b) for a, b in zip(g, h))

    def neg(self, g: QElement) -> QElement:
        return tuple(self.base.neg(a) for a in g)

    def scale_left(self, a: Element, g: QElement) -> QElement:
        return tuple(self.base.mul(a, c) for c in g)

    def mul(self, g: QElement, h: QElement) -> QElement:
        """Left remainder of the skew product; the canonical ring product."""
        return self.reduce_poly(poly_mul(self.base, self.aut, list(g), list(h)))

    def constant_term_product(self, g: QElement, h: QElement) -> Element:
        """Closed form for the constant coefficient of g * h:

            (gh)_0 = g_0 h_0 - sum_{i=1}^{m-1} g_{m-i} aut^{m-i}(h_i) f_0

        Exact whenever reducing degrees above m cannot feed back into the
        constant term, in particular for m <= 2 and for f = x^m - c.  The
        cross-check against mul() in the tests runs on such moduli.
        """
        base, aut = self.base, self.aut
        out = base.mul(g[0], h[0])
        f0 = self.modulus[0]
        for i in range(1, self.m):
            term = base.mul(base.mul(g[self.m - i], aut.apply_power(self.m - i, h[i])), f0)
            out = base.sub(out, term)
        return out

    # -- the quotient as a plain finite ring -------------------------------

    def flatten(self, g: QElement) -> Element:
        return tuple(c for coeff in g for c in coeff)

    def unflatten(self, flat: Element) -> QElement:
        k = self.base.rank
        return tuple(tuple(flat[j * k : (j + 1) * k]) for j in range(self.m))

    def as_finite_ring(self) -> FiniteRing:
        """Structure-constant presentation on the basis e_i x^j.

        The additive orders of A repeat once per degree; the FiniteRing
        constructor re-validates associativity, units and characteristic.
        """
        if self._ring is None:
            base = self.base
            k = base.rank
            rank = self.m * k
            orders = base.shape.orders * self.m
            shape = ModuleShape(base.characteristic, orders)
            _check_cap(shape.cardinality, self.cap, "skew quotient")

            def basis_q(t: int) -> QElement:
                j, i = divmod(t, k)
                out = [base.zero] * self.m
                out[j] = base.basis(i)
                return tuple(out)

            table = [
                [self.flatten(self.mul(basis_q(t1), basis_q(t2))) for t2 in range(rank)]
                for t1 in range(rank)
            ]
            self._ring = FiniteRing(
                shape,
                table,
                self.flatten(self.one),
                label=self.label or "skew-quotient",
                cap=self.cap,
            )
        return self._ring

    # -- Frobenius structure ----------------------------------------------

    def frobenius_functional(self, base_functional) -> FrobeniusFunctional:
        """Lift eps on A to g |-> eps(g_0) on the quotient ring.

        The base functional must itself be Frobenius (validated here when
        a raw form is passed).  The lifted form is provably nondegenerate
        for a unit constant coefficient; it is still re-verified, and a
        failure raises InternalConsistencyError rather than passing
        silently.
        """
        base_form = _as_form(base_functional)
        if not isinstance(base_functional, FrobeniusFunctional):
            FrobeniusFunctional(self.base, base_form)  # validates, raises if degenerate
        ring = self.as_finite_ring()
        weights = tuple(base_form.weights) + (0,) * (ring.rank - self.base.rank)
        lifted = ZnLinearForm(ring.shape, weights)
        try:
            return FrobeniusFunctional(ring, lifted)
        except Exception as exc:
            raise InternalConsistencyError(
                "lifted constant-coefficient functional failed nondegeneracy"
            ) from exc

    # -- the reversal involution ------------------------------------------

    def has_cyclic_modulus(self) -> bool:
        """True when f = x^m - 1 and aut^m = id."""
        base = self.base
        if self.modulus[0] != base.neg(base.one):
            return False
        if any(self.modulus[i] != base.zero for i in range(1, self.m)):
            return False
        return self.m % self.aut.order == 0

    def reversal(self, g: QElement) -> QElement:
        """The involution sum g_i x^i |-> sum aut^{-i}(g_i) x^{(m-i) mod m}.

        Defined only for f = x^m - 1 with aut^m = id, where x is a unit
        with inverse x^{m-1}.  Additive, fixes 1, and reverses products.
        """
        if not self.has_cyclic_modulus():
            raise UnsupportedModulusError(
                "reversal needs modulus x^m - 1 and automorphism order dividing m"
            )
        out = [self.base.zero] * self.m
        for i, gi in enumerate(g):
            out[(self.m - i) % self.m] = self.aut.apply_power(-i, gi)
        return tuple(out)

    def __repr__(self) -> str:
        return f"<SkewQuotient deg {self.m} over {self.base!r}>"
