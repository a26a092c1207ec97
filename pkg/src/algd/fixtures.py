"""Built-in fixtures: small cdgas, modules, Lie algebras and algebroids used
by the test suite, the demos and the CLI examples.

Builders return fresh objects; helpers to complete multiplication/bracket
tables by (anti)symmetry live here too, shared with the JSON loader.
"""

from __future__ import annotations

from typing import Dict, Mapping, Tuple

from .graded import Cdga, DegreeWindow, DgMap, DgModule, TRIVIAL_CDGA, Vec, vscale
from .scalars import ONE, rat


def complete_mult(degree_of, mult: Mapping[Tuple[str, str], Vec]) -> Dict[Tuple[str, str], Vec]:
    """Fill in absent (b,a) products from (a,b) by graded commutativity.
    Explicit entries are never overridden, so violations stay representable."""
    out = {k: dict(v) for k, v in dict(mult).items()}
    for (a, b), v in list(out.items()):
        if (b, a) not in out and a != b:
            sign = -1 if (degree_of(a) * degree_of(b)) % 2 else 1
            out[(b, a)] = vscale(sign, v)
    return {k: v for k, v in out.items() if v}


def complete_unit_mult(names, unit, mult):
    out = {k: dict(v) for k, v in dict(mult).items()}
    for a in names:
        out.setdefault((unit, a), {a: ONE})
        out.setdefault((a, unit), {a: ONE})
    return out


def complete_unit_action(a_unit, module_names, action):
    out = {k: dict(v) for k, v in dict(action).items()}
    for m in module_names:
        out.setdefault((a_unit, m), {m: ONE})
    return out


def complete_bracket(degree_of, bracket: Mapping[Tuple[str, str], Vec]) -> Dict[Tuple[str, str], Vec]:
    """Fill in absent (y,x) brackets from (x,y) via [x,y] = (-1)^(|x||y|+1)[y,x]."""
    out = {k: dict(v) for k, v in dict(bracket).items()}
    for (x, y), v in list(out.items()):
        if (y, x) not in out and x != y:
            sign = -1 if (degree_of(x) * degree_of(y) + 1) % 2 else 1
            out[(y, x)] = vscale(sign, v)
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# cdgas


def q_cdga() -> Cdga:
    """The base field itself, concentrated in degree 0."""
    return Cdga(
        window=(0, 0),
        basis={0: ("1",)},
        unit="1",
        mult={("1", "1"): {"1": ONE}},
        diff={},
        exterior_zero=True,
        name="Q",
    )


def dual_numbers() -> Cdga:
    """Fixture D: Q[x]/(x^2) in degree 0 with zero differential."""
    basis = {0: ("1", "x")}
    mult = {("x", "x"): {}}
    mult = complete_unit_mult(["1", "x"], "1", mult)

    def deg(_):
        return 0

    return Cdga(
        window=(0, 0),
        basis=basis,
        unit="1",
        mult=complete_mult(deg, mult),
        diff={},
        generators=("x",),
        exterior_zero=True,
        name="D",
    )


def koszul() -> Cdga:
    """Fixture KZ: (Q[x]/(x^2)) tensor an exterior generator xi of degree -1
    with d(xi) = x.  Basis {1, x} in degree 0 and {xi, xxi} in degree -1；
    the forced value d(xxi) = x*x = 0 makes d^2 = 0 work out."""
    basis = {0: ("1", "x"), -1: ("xi", "xxi")}
    degrees = {"1": 0, "x": 0, "xi": -1, "xxi": -1}
    mult: Dict[Tuple[str, str], Vec] = {
        ("x", "x"): {},
        ("x", "xi"): {"xxi": ONE},
        ("xi", "xi"): {},
        ("x", "xxi"): {},
        ("xi", "xxi"): {},
        ("xxi", "xxi"): {},
    }
    mult = complete_unit_mult(list(degrees), "1", mult)
    mult = complete_mult(lambda n: degrees[n], mult)
    diff = {"xi": {"x": ONE}}
    return Cdga(
        window=(-1, 0),
        basis=basis,
        unit="1",
        mult=mult,
        diff=diff,
        generators=("x", "xi"),
        exterior_zero=True,
        name="KZ",
    )


def broken_koszul() -> Cdga:
    """KZ with d(xxi) = x: violates the derivation rule at (x, xi)."""
    A = koszul()
    diff = dict(A.diff)
    diff["xxi"] = {"x": ONE}
    return Cdga(A.window, A.basis, A.unit, A.mult, diff, A.generators, A.exterior_zero, name="KZ-broken")


# ---------------------------------------------------------------------------
# modules


def two_term_acyclic() -> DgModule:
    """0 -> Q --id--> Q -> 0 in degrees 0, 1."""
    return DgModule(
        over=TRIVIAL_CDGA,
        window=(0, 1),
        basis={0: ("a",), 1: ("b",)},
        action={},
        diff={"a": {"b": ONE}},
        exterior_zero=True,
        name="acyclic2",
    )


def zero_diff_module(n_gens: int, degree: int = 0, name: str = "Z") -> DgModule:
    names = tuple(f"e{i}" for i in range(n_gens))
    return DgModule(
        over=TRIVIAL_CDGA,
        window=(degree, degree),
        basis={degree: names},
        action={},
        diff={},
        exterior_zero=True,
        name=name,
    )


def q_point(degree: int = 0, name: str = "Qpt") -> DgModule:
    return zero_diff_module(1, degree, name)
