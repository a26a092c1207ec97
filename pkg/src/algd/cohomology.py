"""Exact rational cohomology, quasi-isomorphism tests, Hom-complexes and
fibered products of dg-modules.

All ranks come from exact Gaussian elimination; representatives are actual
cocycles, independent modulo coboundaries by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import linalg
from .graded import (
    Cdga,
    DegreeWindow,
    DgMap,
    DgModule,
    InputError,
    TRIVIAL_CDGA,
    Vec,
    WindowError,
    vadd,
    vaddmul,
    vfmt,
    vscale,
    vsub,
)
from .scalars import ONE, ZERO


# ---------------------------------------------------------------------------
# cohomology


@dataclass
class DegreeCohomology:
    degree: int
    dim: int
    cycle_rank: int
    boundary_rank: int
    betti: int
    representatives: List[Vec]


@dataclass
class CohomologyReport:
    module_name: str
    degrees: Dict[int, DegreeCohomology]

    def betti(self, n: int, default: Optional[int] = 0) -> Optional[int]:
        if n in self.degrees:
            return self.degrees[n].betti
        return default

    def betti_table(self) -> Dict[int, int]:
        return {n: d.betti for n, d in self.degrees.items()}

    def to_json_dict(self) -> dict:
        return {
            "module": self.module_name,
            "degrees": {
                str(n): {
                    "dim": d.dim,
                    "cycle_rank": d.cycle_rank,
                    "boundary_rank": d.boundary_rank,
                    "betti": d.betti,
                    "representatives": [{k: str(c) for k, c in r.items()} for r in d.representatives],
                }
                for n, d in self.degrees.items()
            },
        }


def cohomology(M: DgModule) -> CohomologyReport:
    """Betti numbers and cocycle representatives at every reported degree.

    Degrees at the window boundary are refused unless the module is flagged
    exterior_zero: there the incoming or outgoing differential is unknown.
    """
    degrees: Dict[int, DegreeCohomology] = {}
    for n in M.reported_degrees():
        degrees[n] = _cohomology_at(M, n)
    return CohomologyReport(M.name, degrees)


def cohomology_at(M: DgModule, n: int) -> DegreeCohomology:
    if n not in M.reported_degrees():
        raise WindowError(
            f"cohomology of {M.name} at degree {n} is unknown: window "
            f"[{M.window.lo},{M.window.hi}] without exterior_zero"
        )
    return _cohomology_at(M, n)


def _cohomology_at(M: DgModule, n: int) -> DegreeCohomology:
    dim = M.dim(n)
    d_out = M.d_matrix(n)
    kernel = linalg.nullspace(d_out, ncols=dim) if d_out else [linalg.unit_vector(dim, j) for j in range(dim)]
    if (n - 1) in M.window:
        d_in = M.d_matrix(n - 1)
        image = linalg.column_space_basis(d_in) if M.dim(n - 1) else []
    else:
        image = []
    keep = linalg.extend_basis(image, kernel, nrows=dim)
    reps = [M.from_coords(kernel[i], n) for i in keep]
    return DegreeCohomology(
        degree=n,
        dim=dim,
        cycle_rank=len(kernel),
        boundary_rank=len(image),
        betti=len(kernel) - len(image),
        representatives=reps,
    )


# ---------------------------------------------------------------------------
# quasi-isomorphisms


@dataclass
class DegreeEvidence:
    degree: int
    source_betti: int
    target_betti: int
    induced: List[List]  # matrix of the induced map on chosen representatives
    invertible: bool


@dataclass
class QuasiIsoReport:
    ok: bool
    degrees: Dict[int, DegreeEvidence] = field(default_factory=dict)
    reason: Optional[str] = None

    def __bool__(self):
        return self.ok


def is_quasi_iso(f: DgMap) -> QuasiIsoReport:
    """True iff f induces an isomorphism on cohomology at every degree where
    both sides are known.  Requires a degree-0 chain map."""
    if f.degree != 0:
        raise InputError("is_quasi_iso requires a degree-0 map")
    ok, why = f.is_chain_map()
    if not ok:
        raise InputError(f"is_quasi_iso requires a chain map: {why}")
    M, N = f.source, f.target
    if M.exterior_zero and N.exterior_zero:
        lo = min(M.window.lo, N.window.lo)
        hi = max(M.window.hi, N.window.hi)
        degrees = range(lo, hi + 1)
    else:
        if M.window != N.window:
            raise WindowError(
                f"window mismatch: {M.name} has [{M.window.lo},{M.window.hi}], "
                f"{N.name} has [{N.window.lo},{N.window.hi}]"
            )
        degrees = range(max(M.reported_degrees().start, N.reported_degrees().start),
                        min(M.reported_degrees().stop, N.reported_degrees().stop))

    report = QuasiIsoReport(ok=True)
    for n in degrees:
        hm = _betti_data(M, n)
        hn = _betti_data(N, n)
        evidence = _induced_matrix(f, n, hm, hn)
        report.degrees[n] = evidence
        if not evidence.invertible:
            report.ok = False
            if report.reason is None:
                report.reason = f"induced map not invertible at degree {n}"
    return report


def _betti_data(M: DgModule, n: int) -> DegreeCohomology:
    if n in M.window:
        return _cohomology_at(M, n)
    return DegreeCohomology(n, 0, 0, 0, 0, [])


def _induced_matrix(f: DgMap, n: int, hm: DegreeCohomology, hn: DegreeCohomology) -> DegreeEvidence:
    N = f.target
    dimN = N.dim(n) if n in N.window else 0
    rep_cols = [N.coords(r, n) for r in hn.representatives]
    if (n - 1) in N.window:
        bound_cols = linalg.column_space_basis(N.d_matrix(n - 1))
    else:
        bound_cols = []
    basis_mat = linalg.columns_matrix(rep_cols + bound_cols, dimN)
    induced = []
    for r in hm.representatives:
        img = f.apply(r)
        col = N.coords(img, n) if n in N.window else ([ZERO] if img else [])
        if n not in N.window:
            if img:
                raise InputError("image escaped the target window")
            induced.append([ZERO] * hn.betti)
            continue
        sol = linalg.solve(basis_mat, col)
        if sol is None:
            raise InputError(f"image of a cocycle is not a cocycle class at degree {n}")
        induced.append(sol[: hn.betti])
    # induced is rows = source reps, entries over target reps; transpose to map-matrix
    matrix = [[induced[j][i] for j in range(hm.betti)] for i in range(hn.betti)]
    invertible = hm.betti == hn.betti and linalg.rank(matrix) == hn.betti if hn.betti or hm.betti else True
    return DegreeEvidence(n, hm.betti, hn.betti, matrix, invertible)


# ---------------------------------------------------------------------------
# Hom-complexes


@dataclass
class HomComplex:
    """The complex of A-linear maps P -> E, as a dg-module over Q whose basis
    elements are actual DgMaps.  delta(phi) = d_E o phi - (-1)^|phi| phi o d_P."""

    source: DgModule
    target: DgModule
    module: DgModule
    maps: Dict[str, DgMap]

    def express(self, f: DgMap) -> Optional[Vec]:
        """Coordinates of an A-linear map in the hom basis, or None."""
        n = f.degree
        names = [h for h in self.module.names(n)]
        cols = [_flatten_map(self.maps[h], self.source, self.target, n) for h in names]
        target_vec = _flatten_map(f, self.source, self.target, n)
        if not target_vec:
            return {}
        sol = linalg.in_span(cols, target_vec, len(target_vec)) if cols else None
        if sol is None:
            return None
        return {name: c for name, c in zip(names, sol) if c}


def _hom_pairs(P: DgModule, E: DgModule, n: int) -> List[Tuple[str, str]]:
    pairs = []
    for i in P.window.degrees():
        if (i + n) not in E.window:
            continue
        for p in P.names(i):
            for e in E.names(i + n):
                pairs.append((p, e))
    return pairs


def _flatten_map(f: DgMap, P: DgModule, E: DgModule, n: int) -> List:
    pairs = _hom_pairs(P, E, n)
    out = []
    for p, e in pairs:
        out.append(f.value(p).get(e, ZERO))
    return out


def hom_complex(P: DgModule, E: DgModule, name: Optional[str] = None) -> HomComplex:
    """Solve the A-linearity equations degree by degree.

    Both modules must be exterior_zero: a window that merely truncates an
    unbounded complex cannot house all composites."""
    if P.over is not E.over:
        raise InputError("hom_complex requires modules over the same cdga")
    if not (P.exterior_zero and E.exterior_zero):
        raise WindowError("hom_complex needs exterior_zero modules (all composites must be known)")
    A = P.over
    n_lo = E.window.lo - P.window.hi
    n_hi = E.window.hi - P.window.lo
    window = DegreeWindow(n_lo, n_hi + 1) if n_lo <= n_hi + 1 else DegreeWindow(0, 0)

    basis: Dict[int, List[str]] = {}
    maps: Dict[str, DgMap] = {}
    solutions: Dict[int, List[DgMap]] = {}
    for n in range(n_lo, n_hi + 1):
        pairs = _hom_pairs(P, E, n)
        index = {pm: j for j, pm in enumerate(pairs)}
        rows = []
        for a in A.all_names():
            if a == A.unit:
                continue
            s = -1 if (n * A.degree_of(a)) % 2 else 1
            for m in P.all_names():
                # phi(a.m) - (-1)^(n|a|) a.phi(m) = 0, one row per target name
                am = P.act_pair(a, m)
                tdeg = A.degree_of(a) + P.degree_of(m) + n
                for t in E.names(tdeg) if tdeg in E.window else ():
                    row = [ZERO] * len(pairs)
                    for m2, c in am.items():
                        key = (m2, t)
                        if key in index:
                            row[index[key]] += c
                    # subtract (-1)^(n|a|) * a.phi(m): phi(m) = sum x[(m,e)] e
                    for e in E.names(P.degree_of(m) + n) if (P.degree_of(m) + n) in E.window else ():
                        ae = E.act({a: ONE}, {e: ONE})
                        c = ae.get(t, ZERO)
                        if c:
                            row[index[(m, e)]] -= s * c
                    if any(row):
                        rows.append(row)
        kernel = linalg.nullspace(rows, ncols=len(pairs)) if pairs else []
        sols = []
        for v in kernel:
            entries: Dict[str, Vec] = {}
            for (p, e), c in zip(pairs, v):
                if c:
                    entries.setdefault(p, {})[e] = c
            sols.append(DgMap(P, E, entries, degree=n))
        solutions[n] = sols
        names = tuple(f"h{n}_{i}" for i in range(len(sols)))
        basis[n] = list(names)
        for nm, f in zip(names, sols):
            maps[nm] = f

    # assemble the hom module over Q with the delta differential
    hom_basis = {n: tuple(basis.get(n, ())) for n in window.degrees()}
    diff: Dict[str, Vec] = {}
    for n in range(n_lo, n_hi + 1):
        next_maps = solutions.get(n + 1, [])
        next_names = basis.get(n + 1, [])
        next_cols = [_flatten_map(g, P, E, n + 1) for g in next_maps]
        for nm, f in zip(basis.get(n, []), solutions.get(n, [])):
            delta = _hom_delta(f, P, E)
            col = _flatten_map(delta, P, E, n + 1)
            if not any(col):
                continue
            sol = linalg.in_span(next_cols, col, len(col)) if next_cols else None
            if sol is None:
                raise InputError("delta(phi) is not A-linear: hom solver inconsistency")
            v = {name: c for name, c in zip(next_names, sol) if c}
            if v:
                diff[nm] = v
    module = DgModule(
        over=TRIVIAL_CDGA,
        window=window,
        basis=hom_basis,
        action={},
        diff=diff,
        exterior_zero=True,
        name=name or f"Hom({P.name},{E.name})",
    )
    return HomComplex(P, E, module, maps)


def _hom_delta(f: DgMap, P: DgModule, E: DgModule) -> DgMap:
    n = f.degree
    sign = -1 if n % 2 else 1
    entries = {}
    for m in P.all_names():
        v = vsub(E.d(f.value(m)), vscale(sign, f.apply(P.d({m: ONE}))))
        if v:
            entries[m] = v
    return DgMap(P, E, entries, degree=n + 1)


def induced_hom_map(f: DgMap, hom_src: HomComplex, hom_tgt: HomComplex) -> DgMap:
    """Hom(P, f): phi -> f o phi between two hom complexes with the same P."""
    if hom_src.source is not hom_tgt.source:
        raise InputError("induced_hom_map needs a common probe module")
    if f.source is not hom_src.target or f.target is not hom_tgt.target:
        raise InputError("induced_hom_map endpoints do not match the hom complexes")
    entries: Dict[str, Vec] = {}
    for nm, phi in hom_src.maps.items():
        comp = f.compose(phi)
        v = hom_tgt.express(comp)
        if v is None:
            raise InputError(f"f o {nm} is not in the target hom complex")
        if v:
            entries[nm] = v
    return DgMap(hom_src.module, hom_tgt.module, entries, degree=0, name=f"Hom(P,{f.name})")


# ---------------------------------------------------------------------------
# fibered products


@dataclass
class FiberedProduct:
    module: DgModule
    p1: DgMap
    p2: DgMap

    def mediating_map(self, h1: DgMap, h2: DgMap) -> DgMap:
        """The unique map u with p1 o u = h1 and p2 o u = h2 for a cone
        (h1, h2) with f o h1 = g o h2; raises if no such chain map exists."""
        C = h1.source
        if h2.source is not C:
            raise InputError("cone legs must share a source")
        entries: Dict[str, Vec] = {}
        for n in C.window.degrees():
            names = self.module.names(n)
            if not names and C.dim(n) == 0:
                continue
            # stacked [p1; p2] coordinates of the product basis at this degree
            cols = []
            dim1 = self.p1.target.dim(n)
            dim2 = self.p2.target.dim(n)
            for w in names:
                c1 = self.p1.target.coords(self.p1.value(w), n)
                c2 = self.p2.target.coords(self.p2.value(w), n)
                cols.append(c1 + c2)
            for m in C.names(n):
                rhs = self.p1.target.coords(h1.value(m), n) + self.p2.target.coords(h2.value(m), n)
                sol = linalg.in_span(cols, rhs, dim1 + dim2) if cols else (None if any(rhs) else [])
                if sol is None:
                    raise InputError(f"cone is not compatible at {m}")
                v = {w: c for w, c in zip(names, sol) if c}
                if v:
                    entries[m] = v
        return DgMap(C, self.module, entries, degree=0, name="mediating")


def fibered_product(f: DgMap, g: DgMap, name: Optional[str] = None) -> FiberedProduct:
    """Per-degree kernel of (f, -g): M1 (+) M2 -> N, with its projections.

    f and g must be degree-0 chain maps with a common target; the result is a
    dg-module over the same cdga (the A-action descends because f and g are
    A-linear)."""
    if f.degree != 0 or g.degree != 0:
        raise InputError("fibered_product requires degree-0 maps")
    if f.target is not g.target:
        raise InputError("fibered_product requires a common target")
    M1, M2, N = f.source, g.source, f.target
    if M1.over is not M2.over or M1.over is not N.over:
        raise InputError("fibered_product requires one base cdga")
    if not (M1.window == M2.window == N.window):
        raise WindowError("fibered_product: inconsistent windows")
    for h, lbl in ((f, "f"), (g, "g")):
        ok, why = h.is_chain_map()
        if not ok:
            raise InputError(f"{lbl} is not a chain map: {why}")

    window = M1.window
    ext = M1.exterior_zero and M2.exterior_zero and N.exterior_zero
    basis: Dict[int, Tuple[str, ...]] = {}
    reps: Dict[str, Tuple[Vec, Vec]] = {}
    kern_cols: Dict[int, List] = {}
    for n in window.degrees():
        d1, d2 = M1.dim(n), M2.dim(n)
        rows = []
        for i in range(N.dim(n)):
            rows.append([ZERO] * (d1 + d2))
        fm = f.matrix(n)
        gm = g.matrix(n)
        for i in range(N.dim(n)):
            for j in range(d1):
                rows[i][j] = fm[i][j]
            for j in range(d2):
                rows[i][d1 + j] = -gm[i][j]
        kernel = linalg.nullspace(rows, ncols=d1 + d2) if (d1 + d2) else []
        kern_cols[n] = kernel
        names = tuple(f"w{n}_{i}" for i in range(len(kernel)))
        basis[n] = names
        for nm, v in zip(names, kernel):
            reps[nm] = (M1.from_coords(v[:d1], n), M2.from_coords(v[d1:], n))

    def express(n: int, u1: Vec, u2: Vec) -> Vec:
        cols = kern_cols.get(n, [])
        d1, d2 = M1.dim(n), M2.dim(n)
        target = M1.coords(u1, n) + M2.coords(u2, n)
        if not any(target):
            return {}
        sol = linalg.in_span(cols, target, d1 + d2) if cols else None
        if sol is None:
            raise InputError("vector escaped the fibered product (not in the kernel)")
        return {nm: c for nm, c in zip(basis[n], sol) if c}

    diff: Dict[str, Vec] = {}
    action: Dict[Tuple[str, str], Vec] = {}
    A = M1.over
    for n in window.degrees():
        for nm in basis[n]:
            u1, u2 = reps[nm]
            if (n + 1) in window:
                dv = express(n + 1, M1.d(u1), M2.d(u2))
                if dv:
                    diff[nm] = dv
            for a in A.all_names():
                if a == A.unit:
                    continue
                tn = n + A.degree_of(a)
                if tn not in window:
                    continue
                av = express(tn, M1.act({a: ONE}, u1), M2.act({a: ONE}, u2))
                if av:
                    action[(a, nm)] = av

    module = DgModule(
        over=A,
        window=window,
        basis=basis,
        action=action,
        diff=diff,
        exterior_zero=ext,
        name=name or f"{M1.name}x_{N.name}{M2.name}",
    )
    p1 = DgMap(module, M1, {nm: reps[nm][0] for nm in reps if reps[nm][0]}, 0, name="p1")
    p2 = DgMap(module, M2, {nm: reps[nm][1] for nm in reps if reps[nm][1]}, 0, name="p2")
    return FiberedProduct(module, p1, p2)
