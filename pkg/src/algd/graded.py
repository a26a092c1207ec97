"""Finite presentations of cdgas and dg-modules inside a degree window.

Conventions used throughout the package:
  * cohomological grading, the differential raises degree by 1, d^2 = 0;
  * a cdga A is nonpositively graded and graded commutative,
    d(ab) = d(a)b + (-1)^|a| a d(b);
  * a dg-module M over A carries an A-action with
    d(a.m) = d(a).m + (-1)^|a| a.d(m);
  * degrees outside a window are UNKNOWN, not zero, unless the object is
    flagged exterior_zero.  Cohomology is only reported at degrees whose
    incoming and outgoing differentials are both known.

Elements are sparse named vectors: dicts basis-name -> Fraction.  Basis names
are unique across degrees within one object, so a vector may mix degrees and
the grading stays recoverable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .linalg import Vector
from .scalars import ONE, ZERO, rat

Vec = Dict[str, Fraction]


class InputError(Exception):
    """Structurally malformed data: bad names, shapes, or schemas."""


class WindowError(Exception):
    """A computation escaped the representable degree window."""


# ---------------------------------------------------------------------------
# sparse named vectors


def vec(*pairs, **names) -> Vec:
    out: Vec = {}
    for name, c in pairs:
        c = rat(c)
        if c:
            out[name] = c
    for name, c in names.items():
        c = rat(c)
        if c:
            out[name] = c
    return out


def vadd(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, ZERO) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vscale(c, v: Vec) -> Vec:
    c = rat(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vsub(u: Vec, v: Vec) -> Vec:
    return vadd(u, vscale(-1, v))


def vaddmul(u: Vec, c, v: Vec) -> Vec:
    return vadd(u, vscale(c, v))


def vis_zero(v: Vec) -> bool:
    return not v


def vfmt(v: Vec) -> str:
    if not v:
        return "0"
    parts = []
    for k in v:
        c = v[k]
        if c == 1:
            parts.append(k)
        elif c == -1:
            parts.append(f"-{k}")
        else:
            parts.append(f"{c}*{k}")
    return " + ".join(parts).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# degree windows


@dataclass(frozen=True)
class DegreeWindow:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise InputError(f"empty degree window [{self.lo},{self.hi}]")

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def interior(self) -> range:
        return range(self.lo + 1, self.hi)

    def shifted(self, n: int) -> "DegreeWindow":
        return DegreeWindow(self.lo - n, self.hi - n)


# ---------------------------------------------------------------------------
# validation reports


@dataclass
class Violation:
    axiom: str
    witness: Tuple[str, ...]
    detail: str

    def __str__(self):
        return f"{self.axiom} at ({', '.join(self.witness)}): {self.detail}"


@dataclass
class ValidationReport:
    subject: str
    violations: List[Violation] = field(default_factory=list)
    input_errors: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.input_errors

    def add(self, axiom: str, witness: Sequence[str], detail: str):
        self.violations.append(Violation(axiom, tuple(witness), detail))

    def add_input_error(self, msg: str):
        self.input_errors.append(msg)

    def merge(self, other: "ValidationReport"):
        self.violations.extend(other.violations)
        self.input_errors.extend(other.input_errors)

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: INVALID"]
        lines += [f"  input error: {e}" for e in self.input_errors]
        lines += [f"  {v}" for v in self.violations]
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "input_errors": list(self.input_errors),
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail}
                for v in self.violations
            ],
        }


# ---------------------------------------------------------------------------
# graded basis bookkeeping shared by Cdga and DgModule


class _GradedBasis:
    def __init__(self, window: DegreeWindow, basis: Mapping[int, Sequence[str]]):
        self.window = window
        self.basis: Dict[int, Tuple[str, ...]] = {}
        self._degree_of: Dict[str, int] = {}
        self._index_of: Dict[str, int] = {}
        for n in window.degrees():
            names = tuple(basis.get(n, ()))
            self.basis[n] = names
            for i, name in enumerate(names):
                if name in self._degree_of:
                    raise InputError(f"duplicate basis name {name!r}")
                self._degree_of[name] = n
                self._index_of[name] = i
        for n in basis:
            if n not in self.basis and basis[n]:
                raise InputError(f"basis declared at degree {n} outside window [{window.lo},{window.hi}]")

    def names(self, n: int) -> Tuple[str, ...]:
        return self.basis.get(n, ())

    def dim(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def total_dim(self) -> int:
        return sum(len(v) for v in self.basis.values())

    def all_names(self) -> List[str]:
        return [name for n in self.window.degrees() for name in self.basis[n]]

    def degree_of(self, name: str) -> int:
        try:
            return self._degree_of[name]
        except KeyError:
            raise InputError(f"unknown basis name {name!r}") from None

    def has(self, name: str) -> bool:
        return name in self._degree_of

    def coords(self, v: Vec, n: int) -> Vector:
        """Dense coordinates of the degree-n component; rejects stray degrees."""
        out = [ZERO] * self.dim(n)
        for name, c in v.items():
            d = self.degree_of(name)
            if d != n:
                raise InputError(f"{name!r} has degree {d}, expected {n}")
            out[self._index_of[name]] = c
        return out

    def from_coords(self, coords: Sequence, n: int) -> Vec:
        names = self.names(n)
        if len(coords) != len(names):
            raise InputError(f"coordinate length {len(coords)} != dim {len(names)} at degree {n}")
        return {name: rat(c) for name, c in zip(names, coords) if rat(c)}

    def split_by_degree(self, v: Vec) -> Dict[int, Vec]:
        out: Dict[int, Vec] = {}
        for name, c in v.items():
            out.setdefault(self.degree_of(name), {})[name] = c
        return out

    def degree_of_vec(self, v: Vec) -> Optional[int]:
        """The common degree of a homogeneous vector (None for zero); raises if mixed."""
        degs = {self.degree_of(name) for name in v}
        if not degs:
            return None
        if len(degs) > 1:
            raise InputError(f"vector is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()


def _check_table(table: Mapping, known, report: ValidationReport, what: str):
    """Structure constants must reference known names; returns usable entries."""
    for key, value in table.items():
        names = key if isinstance(key, tuple) else (key,)
        for name in names + tuple(value.keys()):
            if not known(name):
                report.add_input_error(f"{what} entry {key}: unknown name {name!r}")
                break


# ---------------------------------------------------------------------------
# cdga


class Cdga:
    """A graded-commutative dg-algebra, nonpositively graded, with finite
    per-degree basis and sparse multiplication constants.

    mult maps (a, b) -> Vec for basis names a, b; absent pairs multiply to 0.
    diff maps a -> Vec.  Do not mutate after construction.
    """

    def __init__(
        self,
        window: DegreeWindow | Tuple[int, int],
        basis: Mapping[int, Sequence[str]],
        unit: str,
        mult: Mapping[Tuple[str, str], Vec],
        diff: Mapping[str, Vec] = (),
        generators: Optional[Sequence[str]] = None,
        exterior_zero: bool = False,
        name: str = "A",
    ):
        if not isinstance(window, DegreeWindow):
            window = DegreeWindow(*window)
        if window.hi > 0:
            raise InputError("cdga window must satisfy hi <= 0")
        self._b = _GradedBasis(window, basis)
        self.window = window
        self.exterior_zero = exterior_zero
        self.name = name
        if not self._b.has(unit):
            raise InputError(f"unit {unit!r} is not a basis name")
        self.unit = unit
        self.mult: Dict[Tuple[str, str], Vec] = {
            k: dict(v) for k, v in dict(mult).items() if v
        }
        self.diff: Dict[str, Vec] = {k: dict(v) for k, v in dict(diff).items() if v}
        if generators is None:
            generators = [x for x in self._b.all_names() if x != unit]
        self.generators = tuple(generators)
        for g in self.generators:
            if not self._b.has(g):
                raise InputError(f"generator {g!r} is not a basis name")
        for (a, b) in self.mult:
            self._b.degree_of(a), self._b.degree_of(b)
        for a in self.diff:
            self._b.degree_of(a)

    # basis plumbing
    def names(self, n):
        return self._b.names(n)

    def dim(self, n):
        return self._b.dim(n)

    def all_names(self):
        return self._b.all_names()

    def degree_of(self, name):
        return self._b.degree_of(name)

    def coords(self, v, n):
        return self._b.coords(v, n)

    def from_coords(self, coords, n):
        return self._b.from_coords(coords, n)

    def mult_vec(self, a: str, b: str) -> Vec:
        return self.mult.get((a, b), {})

    def mul(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for a, ca in u.items():
            for b, cb in v.items():
                out = vaddmul(out, ca * cb, self.mult_vec(a, b))
        return out

    def diff_vec(self, a: str) -> Vec:
        return self.diff.get(a, {})

    def d(self, v: Vec) -> Vec:
        out: Vec = {}
        for a, c in v.items():
            out = vaddmul(out, c, self.diff_vec(a))
        return out

    def unit_vec(self) -> Vec:
        return {self.unit: ONE}

    def as_module(self, name: Optional[str] = None) -> "DgModule":
        """A viewed as a dg-module over itself (basis names get an 'm:' prefix
        so module files stay distinguishable from algebra names)."""
        prefix = "m:"
        basis = {n: tuple(prefix + x for x in self.names(n)) for n in self.window.degrees()}
        action = {}
        for a in self.all_names():
            for b in self.all_names():
                prod = self.mult_vec(a, b)
                if prod:
                    action[(a, prefix + b)] = {prefix + k: c for k, c in prod.items()}
        diff = {}
        for a in self.all_names():
            da = self.diff_vec(a)
            if da:
                diff[prefix + a] = {prefix + k: c for k, c in da.items()}
        return DgModule(
            over=self,
            window=self.window,
            basis=basis,
            action=action,
            diff=diff,
            exterior_zero=self.exterior_zero,
            name=name or f"{self.name}-as-module",
        )


TRIVIAL_CDGA = Cdga(
    window=(0, 0),
    basis={0: ("1",)},
    unit="1",
    mult={("1", "1"): {"1": ONE}},
    diff={},
    exterior_zero=True,
    name="Q",
)


def is_trivial_base(A: Cdga) -> bool:
    return A.window == DegreeWindow(0, 0) and A.dim(0) == 1


# ---------------------------------------------------------------------------
# dg-modules


class DgModule:
    """A dg-module over a Cdga, finitely presented inside a degree window.

    action maps (a, m) -> Vec for an algebra basis name a and module basis
    name m; diff maps m -> Vec.  Treat as immutable.
    """

    def __init__(
        self,
        over: Cdga,
        window: DegreeWindow | Tuple[int, int],
        basis: Mapping[int, Sequence[str]],
        action: Mapping[Tuple[str, str], Vec],
        diff: Mapping[str, Vec] = (),
        exterior_zero: bool = False,
        name: str = "M",
    ):
        if not isinstance(window, DegreeWindow):
            window = DegreeWindow(*window)
        self.over = over
        self.window = window
        self._b = _GradedBasis(window, basis)
        self.exterior_zero = exterior_zero
        self.name = name
        self.action: Dict[Tuple[str, str], Vec] = {
            k: dict(v) for k, v in dict(action).items() if v
        }
        self.diff: Dict[str, Vec] = {k: dict(v) for k, v in dict(diff).items() if v}
        for (a, m) in self.action:
            over.degree_of(a)
            self._b.degree_of(m)
        for m in self.diff:
            self._b.degree_of(m)

    def names(self, n):
        return self._b.names(n)

    def dim(self, n):
        return self._b.dim(n)

    def total_dim(self):
        return self._b.total_dim()

    def all_names(self):
        return self._b.all_names()

    def degree_of(self, name):
        return self._b.degree_of(name)

    def has(self, name):
        return self._b.has(name)

    def coords(self, v, n):
        return self._b.coords(v, n)

    def from_coords(self, coords, n):
        return self._b.from_coords(coords, n)

    def split_by_degree(self, v):
        return self._b.split_by_degree(v)

    def degree_of_vec(self, v):
        return self._b.degree_of_vec(v)

    def act_pair(self, a: str, m: str) -> Vec:
        if a == self.over.unit:
            return {m: ONE} if (a, m) not in self.action else dict(self.action[(a, m)])
        return self.action.get((a, m), {})

    def act(self, avec: Vec, mvec: Vec) -> Vec:
        """Bilinear extension of the action (module coefficients on the left
        of the basis element, so no Koszul signs appear here)."""
        out: Vec = {}
        for a, ca in avec.items():
            for m, cm in mvec.items():
                out = vaddmul(out, ca * cm, self.act_pair(a, m))
        return out

    def diff_of(self, m: str) -> Vec:
        return self.diff.get(m, {})

    def d(self, v: Vec) -> Vec:
        out: Vec = {}
        for m, c in v.items():
            out = vaddmul(out, c, self.diff_of(m))
        return out

    def d_matrix(self, n: int) -> List[Vector]:
        """Matrix of d: M^n -> M^(n+1); rows indexed by target basis."""
        rows = self.dim(n + 1) if (n + 1) in self.window else 0
        cols = self.dim(n)
        m = [[ZERO] * cols for _ in range(rows)]
        tgt_names = self.names(n + 1)
        tgt_index = {name: i for i, name in enumerate(tgt_names)}
        for j, src in enumerate(self.names(n)):
            for name, c in self.diff_of(src).items():
                if name in tgt_index:
                    m[tgt_index[name]][j] = c
        return m

    def reported_degrees(self) -> range:
        """Degrees at which cohomology is known: the whole window when
        exterior_zero, otherwise only the interior."""
        if self.exterior_zero:
            return self.window.degrees()
        return self.window.interior()


ZERO_MODULE = DgModule(
    over=TRIVIAL_CDGA,
    window=(0, 0),
    basis={0: ()},
    action={},
    diff={},
    exterior_zero=True,
    name="0",
)


def free_module(A: Cdga, gens: Mapping[str, int], diff: Mapping[str, Vec] = (), name: str = "F") -> DgModule:
    """Free A-module on generators gens (name -> degree).  The k-basis is
    {a*g}; names are 'a*g' except degree-0 unit multiples which keep the bare
    generator name.  diff is given on the free generators and extended by the
    Leibniz rule."""
    unit = A.unit
    basis: Dict[int, List[str]] = {}
    pair_name = {}
    inv_pair = {}
    window_lo = A.window.lo + min(gens.values())
    window_hi = max(gens.values())
    for g, dg in gens.items():
        for a in A.all_names():
            n = A.degree_of(a) + dg
            nm = g if a == unit else f"{a}*{g}"
            basis.setdefault(n, []).append(nm)
            pair_name[(a, g)] = nm
            inv_pair[nm] = (a, g)
    window = DegreeWindow(window_lo, window_hi)
    basis_t = {n: tuple(basis.get(n, ())) for n in window.degrees()}

    def expand(avec: Vec, g: str) -> Vec:
        return {pair_name[(a, g)]: c for a, c in avec.items()}

    def act_on(b: str, nm: str) -> Vec:
        a, g = inv_pair[nm]
        return expand(A.mult_vec(b, a), g)

    action: Dict[Tuple[str, str], Vec] = {}
    for b in A.all_names():
        for nm in inv_pair:
            prod = act_on(b, nm)
            if prod:
                action[(b, nm)] = prod
    # diff values may reference any k-basis name of the free module
    dgen = {g: dict(v) for g, v in dict(diff).items()}
    dd: Dict[str, Vec] = {}
    for (a, g), nm in pair_name.items():
        # d(a*g) = d(a)*g + (-1)^|a| a*d(g)
        total: Vec = expand(A.diff_vec(a), g)
        sign = -1 if A.degree_of(a) % 2 else 1
        for nm2, c in dgen.get(g, {}).items():
            total = vaddmul(total, sign * c, act_on(a, nm2))
        if total:
            dd[nm] = total
    return DgModule(A, window, basis_t, action, dd, exterior_zero=A.exterior_zero, name=name)


# ---------------------------------------------------------------------------
# maps of dg-modules


class DgMap:
    """A k-linear graded map between dg-modules, given by its values on the
    source basis.  degree 0 maps are the morphisms; other degrees appear as
    homotopies and hom-complex elements."""

    def __init__(self, source: DgModule, target: DgModule, entries: Mapping[str, Vec], degree: int = 0, name: str = ""):
        self.source = source
        self.target = target
        self.degree = degree
        self.name = name
        self.entries: Dict[str, Vec] = {}
        for m, v in dict(entries).items():
            source.degree_of(m)
            for t in v:
                target.degree_of(t)
            v = {t: rat(c) for t, c in v.items() if rat(c)}
            if v:
                self.entries[m] = v

    @classmethod
    def identity(cls, M: DgModule) -> "DgMap":
        return cls(M, M, {m: {m: ONE} for m in M.all_names()}, 0, name="id")

    @classmethod
    def zero(cls, source: DgModule, target: DgModule, degree: int = 0) -> "DgMap":
        return cls(source, target, {}, degree, name="0")

    def value(self, m: str) -> Vec:
        return self.entries.get(m, {})

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for m, c in v.items():
            out = vaddmul(out, c, self.value(m))
        return out

    def __call__(self, v: Vec) -> Vec:
        return self.apply(v)

    def compose(self, other: "DgMap") -> "DgMap":
        """self after other."""
        if other.target is not self.source:
            raise InputError("compose: target/source mismatch")
        entries = {m: self.apply(other.value(m)) for m in other.source.all_names()}
        return DgMap(other.source, self.target, entries, self.degree + other.degree)

    def add(self, other: "DgMap") -> "DgMap":
        if other.source is not self.source or other.target is not self.target or other.degree != self.degree:
            raise InputError("add: incompatible maps")
        entries = {m: vadd(self.value(m), other.value(m)) for m in self.source.all_names()}
        return DgMap(self.source, self.target, entries, self.degree)

    def scale(self, c) -> "DgMap":
        return DgMap(self.source, self.target, {m: vscale(c, v) for m, v in self.entries.items()}, self.degree)

    def sub(self, other: "DgMap") -> "DgMap":
        return self.add(other.scale(-1))

    def equals(self, other: "DgMap") -> bool:
        if self.source is not other.source or self.target is not other.target or self.degree != other.degree:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.value(m) == other.value(m) for m in keys)

    def matrix(self, n: int) -> List[Vector]:
        """Matrix of the degree-n block M^n -> N^(n+degree)."""
        tgt = n + self.degree
        rows = self.target.dim(tgt)
        cols = self.source.dim(n)
        mat = [[ZERO] * cols for _ in range(rows)]
        tgt_index = {name: i for i, name in enumerate(self.target.names(tgt))}
        for j, src in enumerate(self.source.names(n)):
            for name, c in self.value(src).items():
                if self.target.degree_of(name) != tgt:
                    raise InputError(
                        f"map entry {src!r} -> {name!r} breaks degree by "
                        f"{self.target.degree_of(name) - self.source.degree_of(src)} != {self.degree}"
                    )
                mat[tgt_index[name]][j] = c
        return mat

    def chain_defect(self, m: str) -> Vec:
        """d_N(f(m)) - (-1)^degree f(d_M(m)) on a source basis name."""
        sign = -1 if self.degree % 2 else 1
        return vsub(self.target.d(self.value(m)), vscale(sign, self.apply(self.source.d({m: ONE}))))

    def is_chain_map(self) -> Tuple[bool, Optional[str]]:
        for m in self.source.all_names():
            defect = self.chain_defect(m)
            if defect:
                return False, f"chain defect at {m}: {vfmt(defect)}"
        return True, None

    def is_a_linear(self) -> Tuple[bool, Optional[str]]:
        """A-linearity with the Koszul sign of the map degree:
        f(a.m) = (-1)^(deg f * |a|) a.f(m)."""
        if self.source.over is not self.target.over:
            return False, "source and target live over different cdgas"
        A = self.source.over
        for a in A.all_names():
            sign = -1 if (self.degree * A.degree_of(a)) % 2 else 1
            for m in self.source.all_names():
                lhs = self.apply(self.source.act_pair(a, m))
                rhs = vscale(sign, self.target.act({a: ONE}, self.value(m)))
                if lhs != rhs:
                    return False, f"A-linearity fails at ({a}, {m}): {vfmt(lhs)} != {vfmt(rhs)}"
        return True, None


# ---------------------------------------------------------------------------
# validators


def validate_cdga(A: Cdga) -> ValidationReport:
    """Check every cdga axiom on basis tuples; violations carry the witness."""
    rep = ValidationReport(f"cdga {A.name}")
    names = A.all_names()

    for (a, b), v in A.mult.items():
        want = A.degree_of(a) + A.degree_of(b)
        for target, _ in v.items():
            if A.degree_of(target) != want:
                rep.add_input_error(
                    f"product ({a},{b}) hits {target!r} of degree {A.degree_of(target)}, expected {want}"
                )
    for a, v in A.diff.items():
        want = A.degree_of(a) + 1
        for target, _ in v.items():
            if A.degree_of(target) != want:
                rep.add_input_error(
                    f"d({a}) hits {target!r} of degree {A.degree_of(target)}, expected {want}"
                )
    if rep.input_errors:
        return rep

    def known_product_degree(n: int) -> bool:
        # products landing above 0 are genuinely zero; below the window they
        # are unknown unless exterior_zero
        return n > 0 or n in A.window or A.exterior_zero

    unit = A.unit
    if A.degree_of(unit) != 0:
        rep.add("unit", (unit,), f"unit has degree {A.degree_of(unit)}")
    for a in names:
        left = A.mult_vec(unit, a)
        right = A.mult_vec(a, unit)
        if left != {a: ONE}:
            rep.add("unit", (unit, a), f"1*{a} = {vfmt(left)}")
        if right != {a: ONE}:
            rep.add("unit", (a, unit), f"{a}*1 = {vfmt(right)}")

    for a in names:
        for b in names:
            if not known_product_degree(A.degree_of(a) + A.degree_of(b)):
                continue
            sign = -1 if (A.degree_of(a) * A.degree_of(b)) % 2 else 1
            lhs = A.mult_vec(a, b)
            rhs = vscale(sign, A.mult_vec(b, a))
            if lhs != rhs:
                rep.add("graded_commutativity", (a, b), f"{a}*{b} = {vfmt(lhs)} but (-1)^|a||b| {b}*{a} = {vfmt(rhs)}")

    for a in names:
        for b in names:
            for c in names:
                n = A.degree_of(a) + A.degree_of(b) + A.degree_of(c)
                if not (known_product_degree(n) and known_product_degree(A.degree_of(a) + A.degree_of(b)) and known_product_degree(A.degree_of(b) + A.degree_of(c))):
                    continue
                lhs = A.mul(A.mult_vec(a, b), {c: ONE})
                rhs = A.mul({a: ONE}, A.mult_vec(b, c))
                if lhs != rhs:
                    rep.add("associativity", (a, b, c), f"({a}*{b})*{c} = {vfmt(lhs)} != {a}*({b}*{c}) = {vfmt(rhs)}")

    for a in names:
        dd = A.d(A.diff_vec(a))
        if dd:
            rep.add("d_squared", (a,), f"d(d({a})) = {vfmt(dd)}")

    for a in names:
        for b in names:
            if not known_product_degree(A.degree_of(a) + A.degree_of(b)):
                continue
            sign = -1 if A.degree_of(a) % 2 else 1
            lhs = A.d(A.mult_vec(a, b))
            rhs = vadd(A.mul(A.diff_vec(a), {b: ONE}), vscale(sign, A.mul({a: ONE}, A.diff_vec(b))))
            if lhs != rhs:
                rep.add("derivation", (a, b), f"d({a}*{b}) = {vfmt(lhs)} != {vfmt(rhs)}")
    return rep


def validate_dg_module(M: DgModule) -> ValidationReport:
    """d^2, unitality/associativity of the action, and the action Leibniz rule."""
    rep = ValidationReport(f"module {M.name}")
    A = M.over

    for (a, m), v in M.action.items():
        want = A.degree_of(a) + M.degree_of(m)
        for target in v:
            if M.degree_of(target) != want:
                rep.add_input_error(
                    f"action ({a},{m}) hits {target!r} of degree {M.degree_of(target)}, expected {want}"
                )
    for m, v in M.diff.items():
        want = M.degree_of(m) + 1
        for target in v:
            if M.degree_of(target) != want:
                rep.add_input_error(f"d({m}) hits {target!r} of degree {M.degree_of(target)}, expected {want}")
    if rep.input_errors:
        return rep

    def known(n: int) -> bool:
        return n in M.window or M.exterior_zero

    for m in M.all_names():
        if M.degree_of(m) + 2 > M.window.hi and not M.exterior_zero:
            continue
        dd = M.d(M.d({m: ONE}))
        if dd:
            rep.add("d_squared", (m,), f"d(d({m})) = {vfmt(dd)}")

    for m in M.all_names():
        got = M.act_pair(A.unit, m)
        if got != {m: ONE}:
            rep.add("unit_action", (A.unit, m), f"1.{m} = {vfmt(got)}")

    for a in A.all_names():
        for b in A.all_names():
            for m in M.all_names():
                n = A.degree_of(a) + A.degree_of(b) + M.degree_of(m)
                if not (known(n) and (A.degree_of(a) + A.degree_of(b) in A.window or A.exterior_zero)):
                    continue
                lhs = M.act({a: ONE}, M.act_pair(b, m))
                rhs = M.act(A.mult_vec(a, b), {m: ONE})
                if lhs != rhs:
                    rep.add("action_associativity", (a, b, m), f"{a}.({b}.{m}) = {vfmt(lhs)} != ({a}{b}).{m} = {vfmt(rhs)}")

    for a in A.all_names():
        for m in M.all_names():
            if not known(A.degree_of(a) + M.degree_of(m) + 1):
                continue
            sign = -1 if A.degree_of(a) % 2 else 1
            lhs = M.d(M.act_pair(a, m))
            rhs = vadd(M.act(A.diff_vec(a), {m: ONE}), vscale(sign, M.act({a: ONE}, M.d({m: ONE}))))
            if lhs != rhs:
                rep.add("action_leibniz", (a, m), f"d({a}.{m}) = {vfmt(lhs)} != {vfmt(rhs)}")
    return rep


def validate_map(f: DgMap) -> ValidationReport:
    rep = ValidationReport(f"map {f.name or '(unnamed)'}")
    ok, why = f.is_chain_map()
    if not ok:
        rep.add("chain_map", (), why)
    if f.source.over is f.target.over:
        ok, why = f.is_a_linear()
        if not ok:
            rep.add("a_linearity", (), why)
    return rep


# ---------------------------------------------------------------------------
# shift


def shift(M: DgModule, n: int, name: Optional[str] = None) -> DgModule:
    """M[n]^i = M^(i+n); the differential picks up the sign (-1)^n and the
    A-action matrices are unchanged.  Basis names get a [n] suffix."""
    if n == 0:
        return M
    suffix = f"[{n}]"
    window = M.window.shifted(n)
    rename = {m: m + suffix for m in M.all_names()}

    def rn(v: Vec) -> Vec:
        return {rename[k]: c for k, c in v.items()}

    basis = {i: tuple(rename[m] for m in M.names(i + n)) for i in window.degrees()}
    action = {(a, rename[m]): rn(v) for (a, m), v in M.action.items()}
    sign = -1 if n % 2 else 1
    diff = {rename[m]: vscale(sign, rn(v)) for m, v in M.diff.items()}
    return DgModule(M.over, window, basis, action, diff, M.exterior_zero, name or f"{M.name}[{n}]")
