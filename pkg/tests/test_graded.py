from fractions import Fraction as F

import pytest

from algd.fixtures import (
    broken_koszul,
    complete_bracket,
    complete_mult,
    dual_numbers,
    koszul,
    q_cdga,
    two_term_acyclic,
)
from algd.graded import (
    Cdga,
    DegreeWindow,
    DgMap,
    DgModule,
    InputError,
    free_module,
    shift,
    validate_cdga,
    validate_dg_module,
    validate_map,
    vadd,
    vfmt,
    vscale,
    vsub,
)
from algd.scalars import ONE


def test_vec_helpers():
    u = {"a": F(1), "b": F(2)}
    v = {"b": F(-2), "c": F(3)}
    assert vadd(u, v) == {"a": F(1), "c": F(3)}
    assert vsub(u, u) == {}
    assert vscale(0, u) == {}
    assert vfmt({}) == "0"
    assert "a" in vfmt(u)


def test_window_semantics():
    w = DegreeWindow(-2, 1)
    assert -2 in w and 1 in w and 2 not in w
    assert list(w.interior()) == [-1, 0]
    with pytest.raises(InputError):
        DegreeWindow(3, 1)


def test_q_cdga_valid():
    assert validate_cdga(q_cdga()).ok


def test_koszul_valid_by_hand_check():
    # hand check recorded in fixtures: d(xxi) = x*x = 0 is forced
    A = koszul()
    rep = validate_cdga(A)
    assert rep.ok, rep.summary()
    assert A.d({"xi": ONE}) == {"x": ONE}
    assert A.d({"xxi": ONE}) == {}
    assert A.mul({"x": ONE}, {"xi": ONE}) == {"xxi": ONE}
    assert A.mul({"xi": ONE}, {"x": ONE}) == {"xxi": ONE}  # (-1)^(0*-1) = +1
    assert A.mul({"xi": ONE}, {"xi": ONE}) == {}


def test_broken_koszul_derivation_witness():
    rep = validate_cdga(broken_koszul())
    assert not rep.ok
    axioms = {v.axiom for v in rep.violations}
    assert "derivation" in axioms or "d_squared" in axioms
    witnesses = [v.witness for v in rep.violations if v.axiom == "derivation"]
    assert ("x", "xi") in witnesses


def test_cdga_degree_bounds_rejected():
    with pytest.raises(InputError):
        Cdga(window=(0, 1), basis={0: ("1",), 1: ("y",)}, unit="1", mult={})


def test_input_error_for_bad_structure_constants():
    # product of two degree-0 elements hitting a degree -1 name
    A = Cdga(
        window=(-1, 0),
        basis={0: ("1", "x"), -1: ("y",)},
        unit="1",
        mult={("1", "1"): {"1": ONE}, ("x", "x"): {"y": ONE}},
    )
    rep = validate_cdga(A)
    assert rep.input_errors and not rep.violations


def test_module_over_itself_valid():
    for A in (q_cdga(), dual_numbers(), koszul()):
        M = A.as_module()
        rep = validate_dg_module(M)
        assert rep.ok, rep.summary()


def test_free_module_valid_and_unit_action():
    D = dual_numbers()
    M = free_module(D, {"e": 0})
    assert validate_dg_module(M).ok
    assert M.act_pair("1", "e") == {"e": ONE}
    assert M.act_pair("x", "e") == {"x*e": ONE}
    assert M.act_pair("x", "x*e") == {}


def test_free_module_with_differential_leibniz():
    KZ = koszul()
    M = free_module(KZ, {"a": -1, "b": 0}, diff={"a": {"b": ONE}})
    rep = validate_dg_module(M)
    assert rep.ok, rep.summary()
    # d(xi*a) = d(xi)a + (-1)^{-1} xi*d(a) = x*a - xi*b
    assert M.d({"xi*a": ONE}) == {"x*a": ONE, "xi*b": F(-1)}


def test_module_leibniz_violation_witness():
    D = dual_numbers()
    M = free_module(D, {"e": 0})
    # corrupt: d(e) = e while d(x*e) stays 0 => d(x.e) != d(x).e + x.d(e)
    bad = DgModule(D, M.window, M.basis, M.action, {"e": {"e": ONE}}, M.exterior_zero, "bad")
    rep = validate_dg_module(bad)
    assert not rep.ok
    assert any(v.axiom == "action_leibniz" and v.witness == ("x", "e") for v in rep.violations)


def test_shift_round_trip_and_sign():
    M = two_term_acyclic()
    assert shift(M, 0) is M
    S = shift(M, -2)
    assert S.window == DegreeWindow(2, 3)
    assert S.names(2) == ("a[-2]",)
    # d picks up (-1)^n
    assert S.d({"a[-2]": ONE}) == {"b[-2]": ONE}
    S1 = shift(M, 1)
    assert S1.d({"a[1]": ONE}) == {"b[1]": F(-1)}
    R = shift(shift(M, 3), -3)
    assert R.window == M.window
    assert [R.dim(n) for n in R.window.degrees()] == [M.dim(n) for n in M.window.degrees()]
    assert validate_dg_module(shift(koszul().as_module(), 1)).ok


def test_dgmap_chain_and_alinear():
    D = dual_numbers()
    M = free_module(D, {"e": 0})
    idm = DgMap.identity(M)
    assert validate_map(idm).ok
    ok, _ = idm.is_a_linear()
    assert ok
    # x-multiplication as a degree-0 self map: A-linear and a chain map
    xmul = DgMap(M, M, {m: M.act({"x": ONE}, {m: ONE}) for m in M.all_names()}, 0, name="x.")
    assert validate_map(xmul).ok
    # a non-A-linear map: swap e and x*e
    swap = DgMap(M, M, {"e": {"x*e": ONE}, "x*e": {"e": ONE}}, 0)
    ok, why = swap.is_a_linear()
    assert not ok and "x" in why


def test_dgmap_compose_and_matrix():
    M = two_term_acyclic()
    d_as_map = DgMap(M, M, {"a": {"b": ONE}}, degree=1)
    assert d_as_map.matrix(0) == [[ONE]]
    twice = d_as_map.compose(d_as_map)
    assert twice.value("a") == {}
    assert d_as_map.compose(DgMap.identity(M)).equals(d_as_map)


def test_complete_mult_and_bracket_signs():
    deg = {"a": -1, "b": 0}.__getitem__
    filled = complete_mult(deg, {("a", "b"): {"a": ONE}})
    assert filled[("b", "a")] == {"a": ONE}  # (-1)^(0*-1) = +1
    deg2 = {"u": -1, "v": -1}.__getitem__
    br = complete_bracket(deg2, {("u", "v"): {"u": ONE}})
    assert br[("v", "u")] == {"u": ONE}  # (-1)^(1+1) = +1
    deg3 = {"e": 0, "f": 0}.__getitem__
    br2 = complete_bracket(deg3, {("e", "f"): {"f": ONE}})
    assert br2[("f", "e")] == {"f": F(-1)}
