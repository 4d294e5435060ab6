"""Named example rings used by the test corpus and the documentation.

Everything here is plain data fed through the public constructors: the
field with four elements presented over Z_2, its squaring automorphism,
cyclic group Cayley tables, the standard 8-element non-Frobenius witness,
and the skew polynomial quotients exercised by the verification suite.
"""

from __future__ import annotations

from .finring import (
    FiniteRing,
    ring_from_table,
    ring_group_algebra,
    ring_matrix,
    ring_product,
    ring_zn,
)
from .skewpoly import RingAutomorphism, SkewQuotient


def gf4() -> FiniteRing:
    """The field with 4 elements: basis {1, w} over Z_2, w^2 = 1 + w."""
    return ring_from_table(
        2,
        (2, 2),
        (
            ((1, 0), (0, 1)),
            ((0, 1), (1, 1)),
        ),
        (1, 0),
        label="GF4",
    )


def gf4_frobenius(field: FiniteRing | None = None) -> RingAutomorphism:
    """The squaring automorphism a |-> a^2 of gf4: fixes 1, sends w to 1 + w."""
    return RingAutomorphism(field or gf4(), ((1, 0), (1, 1)))


def double_nil_ring() -> FiniteRing:
    """8-element commutative Z_2-algebra spanned by 1, u, v with
    u^2 = uv = vu = v^2 = 0.

    Its radical and both socles all equal {0, u, v, u+v}, so the socle is
    too big to match R/J and the ring is not Frobenius.  This is the
    standard small witness separating self-duality from mere finiteness.
    """
    z = (0, 0, 0)
    return ring_from_table(
        2,
        (2, 2, 2),
        (
            ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
            ((0, 1, 0), z, z),
            ((0, 0, 1), z, z),
        ),
        (1, 0, 0),
        label="Z2[u,v]/(u,v)^2",
    )


def cyclic_cayley(k: int) -> list[list[int]]:
    """Cayley table of the cyclic group of order k on indices 0..k-1."""
    return [[(i + j) % k for j in range(k)] for i in range(k)]


def gf4_skew_quotient() -> SkewQuotient:
    """GF4[x; squaring] / (x^2 - 1): a noncommutative 16-element ring."""
    field = gf4()
    return SkewQuotient(
        field,
        gf4_frobenius(field),
        ((1, 0), (0, 0), (1, 0)),  # x^2 - 1 = x^2 + 1 in characteristic 2
        label="GF4[x;sq]/(x^2-1)",
    )


def z4_quotient_x2_minus_1() -> SkewQuotient:
    """Z_4[x] / (x^2 - 1): a commutative local 16-element ring."""
    base = ring_zn(4)
    return SkewQuotient(
        base,
        RingAutomorphism.identity(base),
        ((3,), (0,), (1,)),
        label="Z4[x]/(x^2-1)",
    )


def z2_quotient_x3_minus_1() -> SkewQuotient:
    """Z_2[x] / (x^3 - 1): the classical length-3 binary cyclic setting."""
    base = ring_zn(2)
    return SkewQuotient(
        base,
        RingAutomorphism.identity(base),
        ((1,), (0,), (0,), (1,)),
        label="Z2[x]/(x^3-1)",
    )


def corpus_rings() -> dict[str, FiniteRing]:
    """The standard verification corpus, keyed by display name.

    Ordered dict: Z_1 .. Z_12, two products, the 2x2 matrix ring over
    Z_2, two group algebras, both degree-2 skew quotients (as plain
    rings), and the non-Frobenius witness.
    """
    rings: dict[str, FiniteRing] = {}
    for n in range(1, 13):
        rings[f"Z{n}"] = ring_zn(n)
    rings["Z2xZ4"] = ring_product(ring_zn(2), ring_zn(4), label="Z2xZ4")
    rings["Z2xZ2"] = ring_product(ring_zn(2), ring_zn(2), label="Z2xZ2")
    rings["M2(F2)"] = ring_matrix(ring_zn(2), 2, label="M2(F2)")
    rings["Z2C2"] = ring_group_algebra(2, cyclic_cayley(2), label="Z2C2")
    rings["Z3C3"] = ring_group_algebra(3, cyclic_cayley(3), label="Z3C3")
    rings["GF4[x;sq]/(x^2-1)"] = gf4_skew_quotient().as_finite_ring()
    rings["Z4[x]/(x^2-1)"] = z4_quotient_x2_minus_1().as_finite_ring()
    rings["Z2[u,v]/(u,v)^2"] = double_nil_ring()
    return rings
