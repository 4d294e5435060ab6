"""Linear codes over a finite ring alphabet and their duality theory.

A code is a left, right, or merely additive submodule of A^m, stored with
its full codeword set (these are small-alphabet, short-length objects by
design).  Duals are orthogonals under an ambient bilinear form; the dual
of a left code is the right orthogonal {y : <c, y> = 0} and lands on the
opposite module side, and conversely.

The MacWilliams transform of a Hamming weight enumerator is computed by
exact integer binomial expansion of W(X + (q-1)Y, X - Y) / |C|, with a
hard error on non-integral coefficients.  The transform equals the dual's
enumerator precisely when the gram matrix is monomial (one unit entry per
row and column), and the package treats that as a testable fact, not an
assumption: see macwilliams_holds.

Two specialisations connect ring structure to code duality.  For a skew
polynomial quotient with modulus x^m - 1, codes that are left ideals are
closed under the twisted coordinate shift, and the Euclidean dual of such
a code V equals the left orthogonal of reversal(V) under the quotient's
Frobenius pairing.  For a group algebra Z_n[G], the Euclidean dual of a
left ideal is the support-inversion image of its right orthogonal under
the coefficient-of-identity pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .znmod import DEFAULT_CAP, Element, _check_cap
from .finring import FiniteRing, left_ideals
from .frobenius import (
    AmbientForm,
    DegenerateFormError,
    FrobeniusFunctional,
    Vector,
    _as_form,
)
from .skewpoly import InternalConsistencyError, SkewQuotient

_SIDES = ("left", "right", "additive")
_ORTH_FOR_SIDE = {"left": "right", "right": "left", "additive": "right"}


class LinearCode:
    """A submodule (or additive subgroup) of A^m with explicit codewords."""

    def __init__(
        self,
        alphabet: FiniteRing,
        m: int,
        side: str,
        generators: Sequence[Vector],
        codewords: Iterable[Vector],
        *,
        check: bool = False,
    ):
        if side not in _SIDES:
            raise ValueError(f"bad code side {side!r}")
        self.alphabet = alphabet
        self.m = m
        self.side = side
        self.generators = tuple(generators)
        self.codewords = frozenset(codewords)
        if check:
            self._validate()

    @classmethod
    def generate(
        cls,
        alphabet: FiniteRing,
        m: int,
        generators: Sequence[Sequence[Iterable[int]]],
        side: str = "left",
        cap: int = DEFAULT_CAP,
    ) -> "LinearCode":
        """Close the generators under addition and the requested scalar
        action.  'additive' skips the scalar action (integer multiples
        are already sums)."""
        if side not in _SIDES:
            raise ValueError(f"bad code side {side!r}")
        _check_cap(alphabet.cardinality**m, cap, "ambient module")
        gens = [tuple(alphabet.element(c) for c in g) for g in generators]
        for g in gens:
            if len(g) != m:
                raise ValueError(f"generator {g!r} does not have length {m}")
        if side == "left":
            seeds = [_scale_left(alphabet, a, g) for g in gens for a in alphabet.elements()]
        elif side == "right":
            seeds = [_scale_right(alphabet, g, a) for g in gens for a in alphabet.elements()]
        else:
            seeds = list(gens)
        zero = (alphabet.zero,) * m
        closed = {zero}
        grew = True
        while grew:
            grew = False
            for s in seeds:
                for v in list(closed):
                    w = _vadd(alphabet, v, s)
                    if w not in closed:
                        closed.add(w)
                        grew = True
        return cls(alphabet, m, side, tuple(gens), closed)

    def _validate(self):
        A = self.alphabet
        words = self.codewords
        zero = (A.zero,) * self.m
        if zero not in words:
            raise ValueError("code does not contain the zero word")
        for v in words:
            for w in words:
                if _vadd(A, v, w) not in words:
                    raise ValueError(f"code not closed under addition at {v!r} + {w!r}")
        if self.side == "left":
            for a in A.elements():
                for v in words:
                    if _scale_left(A, a, v) not in words:
                        raise ValueError(f"code not closed under left scalar {a!r}")
        elif self.side == "right":
            for a in A.elements():
                for v in words:
                    if _scale_right(A, v, a) not in words:
                        raise ValueError(f"code not closed under right scalar {a!r}")

    @property
    def cardinality(self) -> int:
        return len(self.codewords)

    def sorted_codewords(self) -> list[Vector]:
        return sorted(self.codewords)

    def __contains__(self, v) -> bool:
        return v in self.codewords

    def __iter__(self):
        return iter(self.sorted_codewords())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.alphabet == other.alphabet
            and self.m == other.m
            and self.side == other.side
            and self.codewords == other.codewords
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.m, self.side, self.codewords))

    def same_codewords(self, other: "LinearCode") -> bool:
        """Explicit side-blind comparison; == requires matching sides."""
        return (
            self.alphabet == other.alphabet
            and self.m == other.m
            and self.codewords == other.codewords
        )

    def __repr__(self) -> str:
        return f"<LinearCode side={self.side} |C|={self.cardinality} m={self.m}>"


def _vadd(A: FiniteRing, v: Vector, w: Vector) -> Vector:
    return tuple(A.add(a, b) for a, b in zip(v, w))


def _scale_left(A: FiniteRing, a: Element, v: Vector) -> Vector:
    return tuple(A.mul(a, c) for c in v)


def _scale_right(A: FiniteRing, v: Vector, a: Element) -> Vector:
    return tuple(A.mul(c, a) for c in v)


# -- weight enumerators ----------------------------------------------------


@dataclass(frozen=True)
class WeightEnumerator:
    """Homogeneous bivariate enumerator sum_w counts[w] X^(m-w) Y^w."""

    m: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.m + 1:
            raise ValueError("need m + 1 weight counts")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def polynomial(self) -> str:
        terms = []
        for w, c in enumerate(self.counts):
            if c == 0:
                continue
            factors = []
            if c != 1 or w == self.m == 0:
                factors.append(str(c))
            dx = self.m - w
            if dx:
                factors.append("X" if dx == 1 else f"X^{dx}")
            if w:
                factors.append("Y" if w == 1 else f"Y^{w}")
            terms.append("*".join(factors) or "1")
        return " + ".join(terms) if terms else "0"


def hamming_weight(v: Vector, zero: Element) -> int:
    return sum(1 for c in v if c != zero)


def weight_enumerator(code: LinearCode) -> WeightEnumerator:
    counts = [0] * (code.m + 1)
    zero = code.alphabet.zero
    for v in code.codewords:
        counts[hamming_weight(v, zero)] += 1
    return WeightEnumerator(code.m, tuple(counts))


# -- duals -----------------------------------------------------------------


def dual(code: LinearCode, form: AmbientForm, side: str | None = None) -> LinearCode:
    """Orthogonal of the code under the form, on the named slot side.

    Defaults to the side that pairs against the code's module structure:
    right orthogonal for a left code, left orthogonal for a right code.
    The form must be nondegenerate (exhaustively checked, cached).
    """
    if form.ring != code.alphabet or form.m != code.m:
        raise ValueError("form and code live in different ambients")
    zero_vec = (code.alphabet.zero,) * code.m
    for kern, side_name in ((form.left_kernel(), "right"), (form.right_kernel(), "left")):
        if kern != frozenset({zero_vec}):
            raise DegenerateFormError(side_name, sorted(kern - {zero_vec})[0])
    orth_side = side or _ORTH_FOR_SIDE[code.side]
    if orth_side not in ("left", "right"):
        raise ValueError(f"bad orthogonal side {orth_side!r}")
    A = code.alphabet
    zero = A.zero
    words = sorted(code.codewords)
    if orth_side == "right":
        out = [y for y in form.vectors() if all(form.pairing(c, y) == zero for c in words)]
    else:
        out = [x for x in form.vectors() if all(form.pairing(x, c) == zero for c in words)]
    return LinearCode(A, code.m, orth_side, (), out)


def identity_form(A: FiniteRing, m: int, cap: int = DEFAULT_CAP) -> AmbientForm:
    matrix = [[A.one if i == j else A.zero for j in range(m)] for i in range(m)]
    return AmbientForm(A, m, matrix, cap=cap)


def euclidean_dual(code: LinearCode, side: str | None = None) -> LinearCode:
    """Dual under the identity gram matrix <x, y> = sum x_i y_i."""
    return dual(code, identity_form(code.alphabet, code.m), side)


# -- MacWilliams -----------------------------------------------------------


class TransformError(ValueError):
    """MacWilliams transform produced non-integral coefficients."""


def is_monomial(A: FiniteRing, matrix: Sequence[Sequence[Element]]) -> bool:
    """One nonzero entry per row and per column, each entry a unit."""
    m = len(matrix)
    if any(len(row) != m for row in matrix):
        return False
    zero = A.zero
    for row in matrix:
        nonzero = [e for e in row if e != zero]
        if len(nonzero) != 1 or not A.is_unit(nonzero[0]):
            return False
    for j in range(m):
        col = [matrix[i][j] for i in range(m)]
        if sum(1 for e in col if e != zero) != 1:
            return False
    return True


def macwilliams_transform(
    enum: WeightEnumerator, alphabet_size: int, code_size: int
) -> WeightEnumerator:
    """Exact integer expansion of W(X + (q-1)Y, X - Y) / code_size."""
    m = enum.m
    q = alphabet_size
    out = [0] * (m + 1)
    for w, a_w in enumerate(enum.counts):
        if a_w == 0:
            continue
        for s in range(m - w + 1):
            left = comb(m - w, s) * (q - 1) ** s
            for t in range(w + 1):
                out[s + t] += a_w * left * comb(w, t) * (-1) ** t
    counts = []
    for u, val in enumerate(out):
        if val % code_size != 0:
            raise TransformError(
                f"coefficient of Y^{u} is {val}, not divisible by |C| = {code_size}"
            )
        counts.append(val // code_size)
    return WeightEnumerator(m, tuple(counts))


@dataclass(frozen=True)
class MacWilliamsReport:
    identity_holds: bool
    gram_is_monomial: bool
    code_enumerator: WeightEnumerator
    dual_enumerator: WeightEnumerator
    transformed: WeightEnumerator
    dual: LinearCode


def macwilliams_holds(code: LinearCode, form: AmbientForm) -> MacWilliamsReport:
    """Compare the transform of W_C against the actual dual's enumerator."""
    d = dual(code, form)
    w_code = weight_enumerator(code)
    w_dual = weight_enumerator(d)
    transformed = macwilliams_transform(
        w_code, code.alphabet.cardinality, code.cardinality
    )
    return MacWilliamsReport(
        identity_holds=transformed == w_dual,
        gram_is_monomial=is_monomial(code.alphabet, form.matrix),
        code_enumerator=w_code,
        dual_enumerator=w_dual,
        transformed=transformed,
        dual=d,
    )


# -- submodule sweeps ------------------------------------------------------


def submodule_codes(
    A: FiniteRing, m: int, side: str, cap: int = DEFAULT_CAP
) -> list[LinearCode]:
    """Every submodule of A^m on the given side, smallest first.

    Exhaustive by the same argument as ideal enumeration: every submodule
    is a sum of the cyclic submodules of its members.
    """
    if side not in _SIDES:
        raise ValueError(f"bad code side {side!r}")
    _check_cap(A.cardinality**m, cap, "ambient module")
    elems = A.elements()
    vectors = list(identity_form(A, m, cap).vectors())
    zero = (A.zero,) * m
    cyclic: set[frozenset[Vector]] = {frozenset({zero})}
    for v in vectors:
        if side == "left":
            cyclic.add(frozenset(_scale_left(A, a, v) for a in elems))
        elif side == "right":
            cyclic.add(frozenset(_scale_right(A, v, a) for a in elems))
        else:
            orbit = {zero}
            w = v
            while w != zero:
                orbit.add(w)
                w = _vadd(A, w, v)
            cyclic.add(frozenset(orbit))
    family = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        fresh = []
        for I in frontier:
            for J in list(family):
                s = frozenset(_vadd(A, i, j) for i in I for j in J)
                if s not in family:
                    family.add(s)
                    fresh.append(s)
        frontier = fresh
    ordered = sorted(family, key=lambda s: (len(s), sorted(s)))
    return [LinearCode(A, m, side, (), words) for words in ordered]


# -- skew-cyclic codes -----------------------------------------------------


def is_skew_cyclic(code, quotient: SkewQuotient) -> bool:
    """Is the (additively closed) codeword set a left ideal of the quotient?

    Decided two ways that must agree: closure under the shift x and left
    scalars, and closure under left multiplication by every ring element.
    """
    words = code.codewords if isinstance(code, LinearCode) else frozenset(code)
    A = quotient.base
    x = quotient.shift_generator()
    route_shift = all(
        quotient.mul(x, c) in words for c in words
    ) and all(
        quotient.scale_left(A.basis(i), c) in words
        for i in range(A.rank)
        for c in words
    )
    route_full = all(
        quotient.mul(r, c) in words for r in quotient.elements() for c in words
    )
    if route_shift != route_full:
        raise InternalConsistencyError(
            "shift-closure and full-closure disagree; input not additively closed?"
        )
    return route_full


def quotient_left_ideal_codes(quotient: SkewQuotient) -> list[frozenset[Vector]]:
    """All left ideals of the quotient ring, as coefficient-vector sets."""
    ring = quotient.as_finite_ring()
    out = []
    for ideal in left_ideals(ring):
        out.append(frozenset(quotient.unflatten(v) for v in ideal.elements))
    return out


@dataclass(frozen=True)
class SkewCyclicDualReport:
    dual_matches_reversal_orthogonal: bool
    dual_is_skew_cyclic: bool
    cardinality_product_ok: bool
    euclidean_dual: frozenset[Vector]
    reversal_orthogonal: frozenset[Vector]


def skew_cyclic_dual_report(
    V: Iterable[Vector], quotient: SkewQuotient, base_functional
) -> SkewCyclicDualReport:
    """Check the duality bridge for one left ideal V of the quotient.

    The Euclidean dual here is {f : sum_i f_i g_i = 0 for all g in V},
    i.e. the first-slot orthogonal; it must equal the first-slot
    orthogonal of reversal(V) under the pairing (g, t) |-> eps((g t)_0),
    and must itself be skew-cyclic.
    """
    base = quotient.base
    eps = _as_form(base_functional)
    V = frozenset(V)
    vectors = list(quotient.elements())
    zero = base.zero

    def euclid(f: Vector, g: Vector) -> Element:
        out = zero
        for a, b in zip(f, g):
            out = base.add(out, base.mul(a, b))
        return out

    e_dual = frozenset(f for f in vectors if all(euclid(f, g) == zero for g in V))
    reversed_V = [quotient.reversal(v) for v in sorted(V)]
    r_orth = frozenset(
        g
        for g in vectors
        if all(eps.evaluate(quotient.mul(g, t)[0]) == 0 for t in reversed_V)
    )
    return SkewCyclicDualReport(
        dual_matches_reversal_orthogonal=e_dual == r_orth,
        dual_is_skew_cyclic=is_skew_cyclic(e_dual, quotient),
        cardinality_product_ok=len(V) * len(e_dual) == quotient.cardinality,
        euclidean_dual=e_dual,
        reversal_orthogonal=r_orth,
    )


# -- group algebra duality -------------------------------------------------


@dataclass(frozen=True)
class GroupAlgebraDualReport:
    dual_matches_inverted_orthogonal: bool
    dual_is_left_ideal: bool
    euclidean_dual: frozenset[Element]
    inverted_right_orthogonal: frozenset[Element]


def group_inversion(R: FiniteRing, a: Element) -> Element:
    """Support inversion sum a_g g |-> sum a_g g^{-1} of a group algebra."""
    inv = _inversion_permutation(R)
    return tuple(a[inv[s]] for s in range(R.rank))


def _inversion_permutation(R: FiniteRing) -> list[int]:
    if R.cayley is None:
        raise ValueError("alphabet is not a group algebra (no Cayley table attached)")
    g = R.rank
    identity = next(
        e for e in range(g) if all(R.cayley[e][x] == x for x in range(g))
    )
    inv = [0] * g
    for a in range(g):
        inv[a] = next(b for b in range(g) if R.cayley[a][b] == identity)
    return inv


def group_algebra_dual_report(R: FiniteRing, S: Iterable[Element]) -> GroupAlgebraDualReport:
    """Check Euclidean-vs-form duality for one left ideal of Z_n[G].

    Both pairings are Z_n-valued on coefficient vectors: the Euclidean one
    is sum_g a_g b_g, the algebra one is eps(a b) = sum_g a_g b_{g^{-1}}
    for eps = coefficient of the group identity.  The Euclidean dual of a
    left ideal is the support-inversion image of its right orthogonal
    under the algebra pairing, and is again a left ideal.
    """
    inv = _inversion_permutation(R)
    n = R.characteristic
    S = sorted(frozenset(S))
    elems = R.elements()

    def euclid(a: Element, b: Element) -> int:
        return sum(x * y for x, y in zip(a, b)) % n

    def algebra_pairing(a: Element, b: Element) -> int:
        return sum(a[t] * b[inv[t]] for t in range(R.rank)) % n

    e_dual = frozenset(b for b in elems if all(euclid(a, b) == 0 for a in S))
    r_orth = frozenset(b for b in elems if all(algebra_pairing(a, b) == 0 for a in S))
    inverted = frozenset(
        tuple(b[inv[s]] for s in range(R.rank)) for b in r_orth
    )
    left_ideal = all(R.mul(r, d) in e_dual for r in elems for d in e_dual)
    return GroupAlgebraDualReport(
        dual_matches_inverted_orthogonal=e_dual == inverted,
        dual_is_left_ideal=left_ideal,
        euclidean_dual=e_dual,
        inverted_right_orthogonal=inverted,
    )
