"""Frobenius functionals and bilinear pairings on finite rings.

A Frobenius functional on a ring R of characteristic n is a linear form
eps: R -> Z_n whose multiplication pairing (a, b) |-> eps(a*b) has trivial
kernel on both sides.  Such a form generates the whole dual module under
either translation action, which is what makes annihilator duality and the
MacWilliams identities work over R.

Side conventions, fixed once here and used everywhere:

* orthogonals are named by the slot they live in.  The left orthogonal of
  S is {x : <x, s> = 0 for all s in S} and the right orthogonal is
  {y : <s, y> = 0 for all s in S}.
* nondegeneracy is named by the injective translation map, matching the
  usual usage: right nondegenerate means the *first*-slot kernel
  {a : <a, -> = 0} is trivial, left nondegenerate means the second-slot
  kernel is trivial.

Ambient forms <x, y> = sum_i,j x_i Q_ij y_j on A^m are the coding-theory
face of the same machinery; their kernels are computed by exhaustive
search, which is the package-wide ground truth for nondegeneracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from .znmod import (
    DEFAULT_CAP,
    Element,
    ZnLinearForm,
    enumerate_forms,
    _check_cap,
)
from .finring import FiniteRing, Ideal

Vector = tuple[Element, ...]


class DegenerateFormError(ValueError):
    """A pairing required to be nondegenerate has a nontrivial kernel."""

    def __init__(self, side: str, witness=None):
        self.side = side
        self.witness = witness
        super().__init__(f"pairing is degenerate ({side} kernel contains {witness!r})")


def _as_form(functional) -> ZnLinearForm:
    return functional.form if isinstance(functional, FrobeniusFunctional) else functional


def pairing_of_functional(ring: FiniteRing, functional) -> Callable[[Element, Element], int]:
    """The multiplication pairing (a, b) |-> eps(a * b) as a callable."""
    form = _as_form(functional)
    return lambda a, b: form.evaluate(ring.mul(a, b))


def pairing_from_gram(ring: FiniteRing, gram: Sequence[Sequence[int]]) -> Callable:
    """Z_n-bilinear pairing on the ring's module from a gram matrix."""
    n = ring.characteristic
    g = [tuple(int(v) % n for v in row) for row in gram]
    if len(g) != ring.rank or any(len(row) != ring.rank for row in g):
        raise ValueError("gram matrix must be rank x rank")

    def pairing(a: Element, b: Element) -> int:
        return sum(ai * g[i][j] * bj for i, ai in enumerate(a) for j, bj in enumerate(b)) % n

    return pairing


def pairing_kernel(ring: FiniteRing, pairing: Callable, slot: str) -> frozenset[Element]:
    """Kernel of a Z_n-valued pairing on R x R in the named slot."""
    elems = ring.elements()
    if slot == "first":
        return frozenset(a for a in elems if all(pairing(a, b) == 0 for b in elems))
    if slot == "second":
        return frozenset(b for b in elems if all(pairing(a, b) == 0 for a in elems))
    raise ValueError(f"bad slot {slot!r}")


def is_nondegenerate(ring: FiniteRing, pairing: Callable, side: str = "both") -> bool:
    """side='right' means the first-slot kernel is trivial; 'left' the second."""
    zero = ring.zero
    if side in ("right", "both"):
        if pairing_kernel(ring, pairing, "first") != frozenset({zero}):
            return False
    if side in ("left", "both"):
        if pairing_kernel(ring, pairing, "second") != frozenset({zero}):
            return False
    return True


def associativity_violation(ring: FiniteRing, pairing: Callable):
    """First basis triple (i, j, l) with <e_i e_j, e_l> != <e_i, e_j e_l>.

    Only valid for Z_n-bilinear pairings, where checking basis triples
    suffices.  Returns None when the pairing is associative.
    """
    for i in range(ring.rank):
        ei = ring.basis(i)
        for j in range(ring.rank):
            ej = ring.basis(j)
            for l in range(ring.rank):
                el = ring.basis(l)
                if pairing(ring.mul(ei, ej), el) != pairing(ei, ring.mul(ej, el)):
                    return (i, j, l)
    return None


def is_associative(ring: FiniteRing, pairing: Callable) -> bool:
    return associativity_violation(ring, pairing) is None


class FrobeniusFunctional:
    """A linear form whose multiplication pairing is nondegenerate both ways."""

    def __init__(self, ring: FiniteRing, form: ZnLinearForm, *, check: bool = True):
        if form.shape != ring.shape:
            raise ValueError("form is not defined on the ring's module")
        self.ring = ring
        self.form = form
        if check:
            pairing = pairing_of_functional(ring, form)
            first = pairing_kernel(ring, pairing, "first")
            if first != frozenset({ring.zero}):
                raise DegenerateFormError("right", sorted(first - {ring.zero})[0])
            second = pairing_kernel(ring, pairing, "second")
            if second != frozenset({ring.zero}):
                raise DegenerateFormError("left", sorted(second - {ring.zero})[0])

    @property
    def weights(self) -> tuple[int, ...]:
        return self.form.weights

    def evaluate(self, a: Element) -> int:
        return self.form.evaluate(a)

    __call__ = evaluate

    def pairing(self, a: Element, b: Element) -> int:
        return self.form.evaluate(self.ring.mul(a, b))

    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of eps(e_i * e_j) over Z_n."""
        return tuple(
            tuple(self.form.evaluate(self.ring.mul_table[i][j]) for j in range(self.ring.rank))
            for i in range(self.ring.rank)
        )

    def __repr__(self) -> str:
        return f"FrobeniusFunctional(weights={self.weights})"


def find_frobenius_functional(
    ring: FiniteRing, cap: int = DEFAULT_CAP
) -> FrobeniusFunctional | None:
    """First form, in weight-lexicographic order, that is Frobenius.

    Scans all |R| forms and tests both kernels with early exit; returns
    None when the ring admits no such form (i.e. is not Frobenius).
    """
    elems = None
    for form in enumerate_forms(ring.shape, cap):
        if elems is None:
            elems = ring.elements()
        ok = True
        for a in elems:
            if a == ring.zero:
                continue
            if all(form.evaluate(ring.mul(a, b)) == 0 for b in elems):
                ok = False
                break
        if not ok:
            continue
        for b in elems:
            if b == ring.zero:
                continue
            if all(form.evaluate(ring.mul(a, b)) == 0 for a in elems):
                ok = False
                break
        if ok:
            return FrobeniusFunctional(ring, form, check=False)
    return None


@dataclass(frozen=True)
class GeneratorEquivalenceReport:
    """The equivalent ways a functional generates the dual module.

    right_orbit_full: the translates b |-> eps(b * -) exhaust all forms.
    left_orbit_full: the translates b |-> eps(- * b) exhaust all forms.
    first_slot_bijective: a |-> eps(a * -) is injective (hence bijective).
    second_slot_bijective: b |-> eps(- * b) is injective.
    pairing_associative: <a, b> = eps(ab) satisfies <ab, c> = <a, bc>.
    """

    right_orbit_full: bool
    left_orbit_full: bool
    first_slot_bijective: bool
    second_slot_bijective: bool
    pairing_associative: bool

    @property
    def all_passed(self) -> bool:
        return (
            self.right_orbit_full
            and self.left_orbit_full
            and self.first_slot_bijective
            and self.second_slot_bijective
            and self.pairing_associative
        )


def verify_generator_equivalences(ring: FiniteRing, functional) -> GeneratorEquivalenceReport:
    """Check each dual-generation property of a candidate functional.

    Degenerate forms fail the orbit and bijectivity items coherently; the
    associativity item depends only on associativity of the ring product,
    so it holds even for degenerate forms.
    """
    form = _as_form(functional)
    elems = ring.elements()
    all_weights = {f.weights for f in enumerate_forms(ring.shape, ring.cap)}

    def translate_weights(b: Element, on_left: bool) -> tuple[int, ...]:
        if on_left:
            return tuple(form.evaluate(ring.mul(b, ring.basis(j))) for j in range(ring.rank))
        return tuple(form.evaluate(ring.mul(ring.basis(j), b)) for j in range(ring.rank))

    first_images = [translate_weights(b, True) for b in elems]
    second_images = [translate_weights(b, False) for b in elems]
    pairing = pairing_of_functional(ring, form)
    return GeneratorEquivalenceReport(
        right_orbit_full=set(first_images) == all_weights,
        left_orbit_full=set(second_images) == all_weights,
        first_slot_bijective=len(set(first_images)) == len(elems),
        second_slot_bijective=len(set(second_images)) == len(elems),
        pairing_associative=is_associative(ring, pairing),
    )


# -- annihilators in the ring ---------------------------------------------


def left_annihilator(ring: FiniteRing, subset: Iterable[Element]) -> Ideal:
    """{a : a * s = 0 for all s in the subset}; always a left ideal."""
    subset = list(subset)
    ann = frozenset(
        a for a in ring.elements() if all(ring.mul(a, s) == ring.zero for s in subset)
    )
    return Ideal("left", ann)


def right_annihilator(ring: FiniteRing, subset: Iterable[Element]) -> Ideal:
    """{a : s * a = 0 for all s in the subset}; always a right ideal."""
    subset = list(subset)
    ann = frozenset(
        a for a in ring.elements() if all(ring.mul(s, a) == ring.zero for s in subset)
    )
    return Ideal("right", ann)


def functional_left_orthogonal(
    ring: FiniteRing, functional, subset: Iterable[Element]
) -> frozenset[Element]:
    """{a : eps(a * s) = 0 for all s}.  For a Frobenius eps and a right
    ideal this coincides with the left annihilator."""
    form = _as_form(functional)
    subset = list(subset)
    return frozenset(
        a for a in ring.elements() if all(form.evaluate(ring.mul(a, s)) == 0 for s in subset)
    )


def functional_right_orthogonal(
    ring: FiniteRing, functional, subset: Iterable[Element]
) -> frozenset[Element]:
    """{b : eps(s * b) = 0 for all s}."""
    form = _as_form(functional)
    subset = list(subset)
    return frozenset(
        b for b in ring.elements() if all(form.evaluate(ring.mul(s, b)) == 0 for s in subset)
    )


# -- ambient forms on A^m --------------------------------------------------


class AmbientForm:
    """A-valued bilinear form <x, y> = sum x_i Q_ij y_j on A^m."""

    def __init__(
        self,
        ring: FiniteRing,
        m: int,
        matrix: Sequence[Sequence[Iterable[int]]],
        *,
        cap: int = DEFAULT_CAP,
        check: bool = True,
    ):
        if m < 1:
            raise ValueError("ambient length must be positive")
        self.ring = ring
        self.m = m
        if check and (len(matrix) != m or any(len(row) != m for row in matrix)):
            raise ValueError(f"gram matrix must be {m}x{m}")
        self.matrix: tuple[tuple[Element, ...], ...] = tuple(
            tuple(ring.element(entry) for entry in row) for row in matrix
        )
        self.cap = cap
        self._left_kernel: frozenset[Vector] | None = None
        self._right_kernel: frozenset[Vector] | None = None

    @property
    def cardinality(self) -> int:
        return self.ring.cardinality ** self.m

    def vectors(self) -> Iterator[Vector]:
        _check_cap(self.cardinality, self.cap, "ambient module")
        return product(self.ring.elements(), repeat=self.m)

    def pairing(self, x: Vector, y: Vector) -> Element:
        out = self.ring.zero
        for i in range(self.m):
            xi = x[i]
            if xi == self.ring.zero:
                continue
            row = self.matrix[i]
            for j in range(self.m):
                yj = y[j]
                if yj == self.ring.zero:
                    continue
                out = self.ring.add(out, self.ring.mul(self.ring.mul(xi, row[j]), yj))
        return out

    def left_kernel(self) -> frozenset[Vector]:
        """First-slot kernel {x : <x, y> = 0 for all y}, by full search."""
        if self._left_kernel is None:
            vecs = list(self.vectors())
            zero = self.ring.zero
            self._left_kernel = frozenset(
                x for x in vecs if all(self.pairing(x, y) == zero for y in vecs)
            )
        return self._left_kernel

    def right_kernel(self) -> frozenset[Vector]:
        if self._right_kernel is None:
            vecs = list(self.vectors())
            zero = self.ring.zero
            self._right_kernel = frozenset(
                y for y in vecs if all(self.pairing(x, y) == zero for x in vecs)
            )
        return self._right_kernel

    def is_nondegenerate(self, side: str = "both") -> bool:
        """'right' checks the first-slot kernel, 'left' the second-slot."""
        zero_vec = (self.ring.zero,) * self.m
        ok = True
        if side in ("right", "both"):
            ok = ok and self.left_kernel() == frozenset({zero_vec})
        if side in ("left", "both"):
            ok = ok and self.right_kernel() == frozenset({zero_vec})
        if side not in ("left", "right", "both"):
            raise ValueError(f"bad side {side!r}")
        return ok


def orthogonal(
    form: AmbientForm, subset: Iterable[Vector], side: str
) -> frozenset[Vector]:
    """Ring-valued orthogonal of a subset, in the named slot.

    side='left' gives {x : <x, s> = 0 for all s}, side='right' gives
    {y : <s, y> = 0 for all s}.
    """
    subset = list(subset)
    zero = form.ring.zero
    if side == "left":
        return frozenset(
            x for x in form.vectors() if all(form.pairing(x, s) == zero for s in subset)
        )
    if side == "right":
        return frozenset(
            y for y in form.vectors() if all(form.pairing(s, y) == zero for s in subset)
        )
    raise ValueError(f"bad side {side!r}")


def functional_orthogonal(
    form: AmbientForm, functional, subset: Iterable[Vector], side: str
) -> frozenset[Vector]:
    """Z_n-valued orthogonal: composes the pairing with a functional.

    For a Frobenius functional on the alphabet this agrees with the
    ring-valued orthogonal on submodules of the matching side.
    """
    eps = _as_form(functional)
    subset = list(subset)
    if side == "left":
        return frozenset(
            x
            for x in form.vectors()
            if all(eps.evaluate(form.pairing(x, s)) == 0 for s in subset)
        )
    if side == "right":
        return frozenset(
            y
            for y in form.vectors()
            if all(eps.evaluate(form.pairing(s, y)) == 0 for s in subset)
        )
    raise ValueError(f"bad side {side!r}")
