"""Acceptance sweep: one test per numbered criterion, timed where promised.

The two big sweeps (monomial positive sweep, non-monomial converse search)
run once and are shared: criterion 6 consumes the cardinality records they
collect instead of recomputing duals.
"""

import time
from functools import lru_cache

from frobring.catalog import (
    corpus_rings,
    gf4,
    gf4_skew_quotient,
    z2_quotient_x3_minus_1,
    z4_quotient_x2_minus_1,
)
from frobring.codes import (
    LinearCode,
    is_monomial,
    macwilliams_holds,
    quotient_left_ideal_codes,
    skew_cyclic_dual_report,
    group_algebra_dual_report,
    submodule_codes,
)
from frobring.finring import (
    cyclic_left_ideals,
    cyclic_right_ideals,
    is_frobenius_socle,
    left_ideals,
    right_ideals,
    ring_product,
    ring_zn,
)
from frobring.frobenius import (
    AmbientForm,
    find_frobenius_functional,
    functional_left_orthogonal,
    functional_right_orthogonal,
    is_nondegenerate,
    left_annihilator,
    pairing_of_functional,
    right_annihilator,
)
from frobring.znmod import ZnLinearForm, enumerate_forms


@lru_cache(maxsize=None)
def corpus():
    return corpus_rings()


@lru_cache(maxsize=None)
def alphabets():
    return (
        ("F2", ring_zn(2)),
        ("F3", ring_zn(3)),
        ("Z4", ring_zn(4)),
        ("F4", gf4()),
        ("Z2xZ4", ring_product(ring_zn(2), ring_zn(4), label="Z2xZ4")),
    )


def monomial_matrices(A):
    """All 2x2 monomial matrices over A: permutation times unit diagonal."""
    zero = A.zero
    units = sorted(A.units())
    out = []
    for u in units:
        for v in units:
            out.append(((u, zero), (zero, v)))
            out.append(((zero, u), (v, zero)))
    return out


@lru_cache(maxsize=None)
def positive_sweep():
    """Every monomial gram against every one-sided submodule code, m = 2.

    Returns (elapsed_seconds, records); each record is
    (alphabet, identity_holds, cardinality_product_ok).
    """
    t0 = time.perf_counter()
    records = []
    for label, A in alphabets():
        ambient = A.cardinality ** 2
        codes = submodule_codes(A, 2, "left") + submodule_codes(A, 2, "right")
        for mat in monomial_matrices(A):
            form = AmbientForm(A, 2, mat)
            for code in codes:
                rep = macwilliams_holds(code, form)
                card_ok = len(code.codewords) * len(rep.dual.codewords) == ambient
                records.append((label, rep.identity_holds, card_ok))
    return time.perf_counter() - t0, records


@lru_cache(maxsize=None)
def converse_search():
    """For each nondegenerate non-monomial gram over F_2, m = 2, test all codes.

    Returns (elapsed, per-gram violation counts, cardinality records).
    """
    A = ring_zn(2)
    t0 = time.perf_counter()
    elems = A.elements()
    grams = [
        ((a, b), (c, d))
        for a in elems for b in elems for c in elems for d in elems
    ]
    targets = []
    for mat in grams:
        form = AmbientForm(A, 2, mat)
        zero_vec = ((0,), (0,))
        if form.left_kernel() == {zero_vec} and form.right_kernel() == {zero_vec}:
            if not is_monomial(A, mat):
                targets.append(form)
    codes = submodule_codes(A, 2, "left") + submodule_codes(A, 2, "right")
    violations = []
    card_records = []
    for form in targets:
        found = 0
        for code in codes:
            rep = macwilliams_holds(code, form)
            if not rep.identity_holds:
                found += 1
            card_records.append(
                len(code.codewords) * len(rep.dual.codewords) == 4
            )
        violations.append(found)
    return time.perf_counter() - t0, violations, card_records


def test_criterion_01_counterexample_exact_and_fast():
    A = ring_zn(2)
    code = LinearCode.generate(A, 2, [((1,), (0,))], side="left")
    form = AmbientForm(A, 2, (((1,), (1,)), ((0,), (1,))))

    rep = macwilliams_holds(code, form)
    assert rep.dual.codewords == frozenset({((0,), (0,)), ((1,), (1,))})
    assert rep.code_enumerator.counts == (1, 1, 0)
    assert rep.code_enumerator.polynomial() == "X^2 + X*Y"
    assert rep.dual_enumerator.counts == (1, 0, 1)
    assert rep.dual_enumerator.polynomial() == "X^2 + Y^2"
    assert rep.transformed.counts == (1, 1, 0)
    assert rep.transformed != rep.dual_enumerator
    assert rep.identity_holds is False
    assert rep.gram_is_monomial is False

    best = min(
        _timed(lambda: macwilliams_holds(code, form)) for _ in range(300)
    )
    assert best < 1e-3, f"counterexample took {best * 1e3:.3f} ms"


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_criterion_02_monomial_sweep_identity_always_holds():
    elapsed, records = positive_sweep()
    assert len(records) == 1808
    bad = [(label, card) for label, ok, card in records if not ok]
    assert bad == []
    assert elapsed < 60, f"sweep took {elapsed:.1f} s"


def test_criterion_03_every_nonmonomial_gram_has_a_witness():
    elapsed, violations, _ = converse_search()
    # GL_2(F_2) has 6 elements, 2 of them monomial
    assert len(violations) == 4
    assert all(count >= 1 for count in violations)
    assert elapsed < 1, f"search took {elapsed:.2f} s"


def test_criterion_04_functional_and_socle_routes_agree():
    t0 = time.perf_counter()
    negatives = []
    for name, ring in corpus().items():
        eps = find_frobenius_functional(ring)
        cert = is_frobenius_socle(ring)
        assert (eps is not None) == cert.is_frobenius, name
        if not cert.is_frobenius:
            negatives.append(name)
    assert negatives == ["Z2[u,v]/(u,v)^2"]
    assert time.perf_counter() - t0 < 30


def test_criterion_05_double_annihilators_close():
    for name, ring in corpus().items():
        eps = find_frobenius_functional(ring)
        if eps is None:
            continue
        if ring.cardinality <= 16:
            rights = [i.elements for i in right_ideals(ring)]
            lefts = [i.elements for i in left_ideals(ring)]
        else:
            rights = sorted(cyclic_right_ideals(ring), key=sorted)
            lefts = sorted(cyclic_left_ideals(ring), key=sorted)
        for S in rights:
            la = left_annihilator(ring, S)
            assert right_annihilator(ring, la.elements).elements == S, name
            assert la.elements == functional_left_orthogonal(ring, eps, S), name
        for S in lefts:
            ra = right_annihilator(ring, S)
            assert left_annihilator(ring, ra.elements).elements == S, name
            assert ra.elements == functional_right_orthogonal(ring, eps, S), name


def test_criterion_06_cardinality_identity_across_sweeps():
    _, records = positive_sweep()
    assert records and all(card for _, _, card in records)
    _, _, card_records = converse_search()
    assert card_records and all(card_records)


def test_criterion_07_skew_quotient_construction():
    t0 = time.perf_counter()
    cases = [
        (gf4_skew_quotient(), ZnLinearForm(gf4().shape, (0, 1))),
        (z4_quotient_x2_minus_1(), ZnLinearForm(ring_zn(4).shape, (1,))),
    ]
    for q, base_eps in cases:
        elems = list(q.elements())
        for g in elems:
            for h in elems:
                assert q.constant_term_product(g, h) == q.mul(g, h)[0]
        eps = q.frobenius_functional(base_eps)
        R = q.as_finite_ring()
        assert is_nondegenerate(R, pairing_of_functional(R, eps), side="both")
        assert is_frobenius_socle(R).is_frobenius
    assert time.perf_counter() - t0 < 5


def test_criterion_08_skew_cyclic_duality_bridge():
    cases = [
        (gf4_skew_quotient(), ZnLinearForm(gf4().shape, (0, 1))),
        (z2_quotient_x3_minus_1(), ZnLinearForm(ring_zn(2).shape, (1,))),
    ]
    for q, base_eps in cases:
        ideals = quotient_left_ideal_codes(q)
        assert len(ideals) >= 4
        for V in ideals:
            rep = skew_cyclic_dual_report(V, q, base_eps)
            assert rep.dual_matches_reversal_orthogonal
            assert rep.dual_is_skew_cyclic
            assert rep.cardinality_product_ok


def test_criterion_09_group_algebra_duality_bridge():
    for name in ("Z2C2", "Z3C3"):
        ring = corpus()[name]
        for ideal in left_ideals(ring):
            rep = group_algebra_dual_report(ring, ideal.elements)
            assert rep.dual_matches_inverted_orthogonal, name
            assert rep.dual_is_left_ideal, name


def test_criterion_10_form_count_equals_ring_size():
    for name, ring in corpus().items():
        count = sum(1 for _ in enumerate_forms(ring.shape))
        assert count == ring.cardinality, name
