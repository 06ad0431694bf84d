import json

import pytest

from coxorder.harness import (CheckReport, exit_code, enumerate_reflection_orders,
    admissible_orders_of, reduced_words, tau_bruhat, tau_bruhat_roots, check, CHECKS,
    CONJECTURES, THEOREMS, extreme, PASS, FAIL, LIMIT)
from coxorder.errors import UnknownCheck, TruncationLimit, UnsupportedSystem
from conftest import system


def test_reflection_orders():
    for name, n in [("A2", 2), ("B2", 2), ("G2", 2), ("A3", 16)]:
        W = system(name)
        orders = enumerate_reflection_orders(W)
        assert len(orders) == n
        assert all(o.is_valid(W) for o in orders)
        assert all(len(o) == len(W.positive_roots()) for o in orders)


def test_admissible_orders(A3):
    w0 = A3.longest()
    assert len(reduced_words(w0)) == 16
    adm = admissible_orders_of(w0)
    assert {o.roots for o in adm} == {o.roots for o in enumerate_reflection_orders(A3)}
    x = A3.parse_element("1.2")
    (o,) = admissible_orders_of(x)
    assert o.initial_sections()[-1] == x.inversion_set()


def test_tau_bruhat(A2, Iinf):
    b = A2.make_root([1, 1])
    assert tau_bruhat(A2, {b}) == {A2.identity, A2.reflection_element(b)}
    assert tau_bruhat(A2, A2.positive_roots()) == set(A2.elements())
    assert tau_bruhat(A2, []) == {A2.identity}
    assert tau_bruhat_roots(A2, A2.simple_roots) == A2.positive_roots()
    with pytest.raises(TruncationLimit):
        tau_bruhat(Iinf, Iinf.simple_roots)
    with pytest.raises(TruncationLimit):
        tau_bruhat(Iinf, Iinf.simple_roots, max_length=3)


def test_report_invariants():
    r = CheckReport("unipodal", "A2", "all", PASS, None, 3)
    d = json.loads(r.to_json())
    assert set(d) == {"check", "system", "instance", "status", "witness", "ms"}
    with pytest.raises(AssertionError):
        CheckReport("unipodal", "A2", "all", FAIL, None, 3)
    with pytest.raises(AssertionError):
        CheckReport("unipodal", "A2", "all", LIMIT, None, 3)


def test_exit_codes():
    ok = CheckReport("unipodal", "A2", "x", PASS, None, 0)
    lim = CheckReport("unipodal", "A2", "x", LIMIT, {"bound": 1}, 0)
    conj = CheckReport("unipodal", "A2", "x", FAIL, {"set": []}, 0)
    thm = CheckReport("d-variant", "A2", "x", FAIL, {"set": []}, 0)
    assert exit_code([]) == 0 and exit_code([ok]) == 0
    assert exit_code([ok, lim]) == 2
    assert exit_code([lim, conj]) == 4
    assert exit_code([conj, thm, lim]) == 1


def test_check_ids():
    assert set(CHECKS) == set(CONJECTURES) | set(THEOREMS)
    with pytest.raises(UnknownCheck):
        list(check("nope", system("A2")))


def _strip(reports):
    return [dict(r.as_dict(), ms=0) for r in reports]


@pytest.mark.parametrize("cid", sorted(CHECKS))
def test_checks_pass_on_A2(cid):
    W = system("A2")
    reps = list(check(cid, W))
    assert reps and all(r.status == PASS for r in reps), [r.as_dict() for r in reps if r.status != PASS]
    assert _strip(reps) == _strip(check(cid, W))


def test_checks_B2_theorems():
    W = system("B2")
    for cid in THEOREMS:
        assert all(r.status == PASS for r in check(cid, W))


def test_limits():
    reps = list(check("ortholattice", system("A3"), {"max_lambda": 6}))
    assert any(r.status == LIMIT for r in reps)
    assert exit_code(reps) == 2
    reps = list(check("AB-equal", system("I2(inf)")))
    assert all(r.status == LIMIT for r in reps)


def test_z_variant_needs_crystal():
    with pytest.raises(UnsupportedSystem):
        list(check("z-variant", system("H3")))


def test_extreme_rays(A3):
    from coxorder.rootsys import bruhat_stratum
    for x in A3.elements():
        assert extreme(x.complement()) == bruhat_stratum(x, 1)
    reps = list(check("extreme-rays", A3))
    assert len(reps) == 24 and all(r.status == PASS for r in reps)
