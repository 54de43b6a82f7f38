"""Curated scenarios with known topology and the audits that check the bounds.

Verdict vocabulary: VIOLATION is reserved for exact contradictions (an
oracle Betti number exceeding an exact bound, which would mean a bug);
every approximation-sourced mismatch is INCONCLUSIVE and comes with a
refinement hint (finer grid, smaller eps or delta).  Oracle Betti vectors
are hardcoded with a provenance note and never computed by the code under
audit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .bounds import b_ci, bound_aggregate, bound_betti
from .homology import (
    INCONCLUSIVE,
    PASS,
    VIOLATION,
    CubicalComplex,
    betti,
    cube_all_faces,
    make_cube,
    close_under_faces,
    mayer_vietoris_audit,
    pad_betti,
)
from .quadforms import (
    CiProbeReport,
    DeformationParams,
    GridSpec,
    QuadraticForm,
    QuadraticPoly,
    _GridScale,
    ci_probe,
    dehomogenize,
    format_rational,
    grid_complex,
    homogenize,
    is_nonsingular_quadric,
    random_pd_form,
    sphere_band_complex,
    sphere_region_complex,
    sphere_zero_complex,
)

__all__ = [
    "USE_ORACLE",
    "Scenario",
    "scenario_products",
    "scenario_shell",
    "AuditRow",
    "BoundAuditReport",
    "bound_audit",
    "SmithReport",
    "smith_audit",
    "DoubleCoverReport",
    "double_cover_audit",
    "DeformationReport",
    "deformation_audit",
    "AlexanderReport",
    "alexander_equator_audit",
    "MVExample",
    "mv_wedge_example",
    "mv_disjoint_example",
    "mv_three_arc_example",
    "mv_fabricated_example",
    "SuiteResult",
    "run_verification_suite",
]

USE_ORACLE = "use-oracle"


@dataclass(frozen=True)
class Scenario:
    """Inequality system with an optional hand-derived Betti oracle."""

    name: str
    system: Tuple[QuadraticPoly, ...]
    s: int
    k: int
    grid: GridSpec
    oracle_betti: Optional[Tuple[int, ...]] = None
    oracle_note: str = ""

    def __post_init__(self):
        if self.s != len(self.system):
            raise ValueError(f"s={self.s} but system has {len(self.system)} polynomials")
        if self.oracle_betti is not None and len(self.oracle_betti) != self.k + 1:
            raise ValueError(
                f"oracle must list b_0..b_{self.k} ({self.k + 1} entries), "
                f"got {len(self.oracle_betti)}"
            )


def scenario_products(k: int) -> Scenario:
    """The coordinate-product system X_i(X_i - 1) >= 0, i = 1..k.

    Its solution set is the union of 2^k unbounded contractible 'quadrant'
    pieces, one per choice of X_i <= 0 or X_i >= 1, so the oracle is
    b_0 = 2^k and nothing above.  On the recommended box [-1, 2]^k at
    resolution 1/4 the grid reproduces each piece as a solid block.
    """
    if not 1 <= k <= 6:
        raise ValueError(f"desk scale is 1 <= k <= 6, got {k}")
    system = []
    for i in range(k):
        quad = [
            [Fraction(1) if (a == i and b == i) else Fraction(0) for b in range(k)]
            for a in range(k)
        ]
        lin = [Fraction(-1) if a == i else Fraction(0) for a in range(k)]
        system.append(QuadraticPoly.make(k, quad=quad, lin=lin, const=0))
    grid = GridSpec(box=((Fraction(-1), Fraction(2)),) * k, resolution=Fraction(1, 4))
    return Scenario(
        name=f"products-k{k}",
        system=tuple(system),
        s=k,
        k=k,
        grid=grid,
        oracle_betti=(2**k,) + (0,) * k,
        oracle_note="2^k contractible quadrant pieces (product structure)",
    )


def scenario_shell(k: int, r_in, r_out) -> Scenario:
    """Spherical shell r_in <= |x| <= r_out, which retracts to the (k-1)-sphere."""
    if not 2 <= k <= 3:
        raise ValueError(f"desk scale is 2 <= k <= 3, got {k}")
    rin = Fraction(r_in)
    rout = Fraction(r_out)
    if not 0 < rin < rout:
        raise ValueError(f"need 0 < r_in < r_out, got {rin}, {rout}")
    neg_identity = [
        [Fraction(-1) if a == b else Fraction(0) for b in range(k)] for a in range(k)
    ]
    identity = [
        [Fraction(1) if a == b else Fraction(0) for b in range(k)] for a in range(k)
    ]
    outer = QuadraticPoly.make(k, quad=neg_identity, const=rout * rout)
    inner = QuadraticPoly.make(k, quad=identity, const=-rin * rin)
    res = Fraction(1, 20) if k == 2 else Fraction(1, 10)
    grid = GridSpec.symmetric(rout * Fraction(5, 4), res, k)
    oracle = [0] * (k + 1)
    oracle[0] = 1
    oracle[k - 1] += 1  # sphere S^{k-1}: b_0 = b_{k-1} = 1
    return Scenario(
        name=f"shell-k{k}",
        system=(outer, inner),
        s=2,
        k=k,
        grid=grid,
        oracle_betti=tuple(oracle),
        oracle_note=f"shell between radii {rin} and {rout} retracts onto a midsphere S^{k - 1}",
    )


@dataclass(frozen=True)
class AuditRow:
    i: int
    betti: int
    bound: Fraction
    verdict: str
    source: str  # "oracle" | "grid"

    def to_dict(self) -> Dict:
        return {
            "i": self.i,
            "betti": self.betti,
            "bound_num": self.bound.numerator,
            "bound_den": self.bound.denominator,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class BoundAuditReport:
    scenario: str
    s: int
    k: int
    rows: Tuple[AuditRow, ...]
    total: AuditRow
    overall: str
    params: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {
            "scenario": self.scenario,
            "s": self.s,
            "k": self.k,
            "rows": [r.to_dict() for r in self.rows],
            "total": self.total.to_dict(),
            "overall": self.overall,
            "params": dict(self.params),
        }


def _overall(verdicts: Sequence[str]) -> str:
    if VIOLATION in verdicts:
        return VIOLATION
    if INCONCLUSIVE in verdicts:
        return INCONCLUSIVE
    return PASS


def bound_audit(sc: Scenario, spec=USE_ORACLE) -> BoundAuditReport:
    """Compare per-degree Betti numbers of a scenario against the exact bounds.

    With spec == "use-oracle" the hardcoded oracle vector is audited and a
    failed comparison is a VIOLATION.  With a GridSpec the Betti numbers
    come from grid homology, and a failed comparison is only INCONCLUSIVE
    (grid values approximate; they cannot falsify a bound).
    """
    if sc.s < 1:
        raise ValueError("bound audit needs at least one inequality")
    if sc.s > sc.k:
        raise ValueError(f"hypothesis s <= k fails: s={sc.s}, k={sc.k}")
    params: Dict[str, str] = {}
    if isinstance(spec, str):
        if spec != USE_ORACLE:
            raise ValueError(f"unknown spec {spec!r}")
        if sc.oracle_betti is None:
            raise ValueError(f"scenario {sc.name} has no oracle Betti vector")
        vec = pad_betti(sc.oracle_betti, sc.k + 1)
        source = "oracle"
        params["oracle_note"] = sc.oracle_note
    else:
        vec = pad_betti(betti(grid_complex(sc.system, spec)), sc.k + 1)
        source = "grid"
        params["resolution"] = format_rational(spec.resolution)
    fail = VIOLATION if source == "oracle" else INCONCLUSIVE
    rows = []
    for i in range(sc.k):
        bound = bound_betti(sc.s, sc.k, i)
        rows.append(
            AuditRow(
                i=i,
                betti=vec[i],
                bound=bound,
                verdict=PASS if vec[i] <= bound else fail,
                source=source,
            )
        )
    total_bound = bound_aggregate(sc.s, sc.k).total
    total_val = sum(vec)
    total = AuditRow(
        i=-1,
        betti=total_val,
        bound=total_bound,
        verdict=PASS if total_val <= total_bound else fail,
        source=source,
    )
    overall = _overall([r.verdict for r in rows] + [total.verdict])
    if overall == INCONCLUSIVE:
        params["hint"] = "halve the grid resolution or supply an oracle"
    return BoundAuditReport(
        scenario=sc.name, s=sc.s, k=sc.k, rows=tuple(rows), total=total,
        overall=overall, params=params,
    )


@dataclass(frozen=True)
class SmithReport:
    verdict: str
    sphere_betti: Tuple[int, ...]
    sphere_total: int
    projective_total: int
    bound: int
    codim: int
    proj_dim: int
    note: str = ""
    probe: Optional[CiProbeReport] = None

    def to_dict(self) -> Dict:
        out = {
            "verdict": self.verdict,
            "sphere_betti": list(self.sphere_betti),
            "sphere_total": self.sphere_total,
            "projective_total": self.projective_total,
            "bound": self.bound,
            "codim": self.codim,
            "proj_dim": self.proj_dim,
            "note": self.note,
        }
        if self.probe is not None:
            out["probe_verdict"] = self.probe.verdict
        return out


def smith_audit(
    forms: Sequence[QuadraticForm],
    radius=1,
    spec: Optional[GridSpec] = None,
    tau=None,
    probe: bool = True,
) -> SmithReport:
    """Check the projective zero set of a quadric tuple against its bound.

    The zero set is approximated on the sphere of the given radius, its
    total Betti number is halved (the sphere set double-covers the
    projective set under the antipodal map; halving can only undercount,
    which keeps the audited inequality sound), and the result is compared
    with the exact total for a smooth degree-2 complete intersection of
    the same codimension.  Grid-based throughout, so the verdict is PASS
    or INCONCLUSIVE, never VIOLATION.  Each input form must be exactly
    nonsingular (invertible Gram matrix) or a ValueError is raised.
    """
    if not forms:
        raise ValueError("need at least one form")
    n = forms[0].n
    for f in forms:
        if not is_nonsingular_quadric(f):
            raise ValueError("singular quadric rejected (Gram matrix not invertible)")
    codim = len(forms)
    proj_dim = n - 1
    if codim > proj_dim:
        raise ValueError(f"codimension {codim} exceeds projective dimension {proj_dim}")
    r = Fraction(radius)
    if spec is None:
        res = r / 8
        spec = GridSpec.symmetric(r + 2 * res, res, n)
    if tau is None:
        tau = 2 * spec.resolution
    complex_ = sphere_zero_complex(forms, r, spec, tau)
    vec = betti(complex_)
    total = sum(vec)
    bound = b_ci(codim, proj_dim, (2,) * codim)
    probe_report = ci_probe(forms, samples=8, seed=0) if probe else None
    if total % 2 != 0:
        return SmithReport(
            verdict=INCONCLUSIVE,
            sphere_betti=vec,
            sphere_total=total,
            projective_total=total // 2,
            bound=bound,
            codim=codim,
            proj_dim=proj_dim,
            note="sphere total is odd, antipodal pairing broken; refine the grid",
            probe=probe_report,
        )
    projective_total = total // 2
    ok = projective_total <= bound
    return SmithReport(
        verdict=PASS if ok else INCONCLUSIVE,
        sphere_betti=vec,
        sphere_total=total,
        projective_total=projective_total,
        bound=bound,
        codim=codim,
        proj_dim=proj_dim,
        note="" if ok else "grid estimate exceeds the bound; refine the grid or tau",
        probe=probe_report,
    )


def _scenario_fits_ball(sc: Scenario, eps: Fraction) -> bool:
    corner_sq = sum(max(lo * lo, hi * hi) for lo, hi in sc.grid.box)
    return corner_sq <= (1 / eps) ** 2


def _lift_spec(eps: Fraction, dim: int, resolution=None) -> Tuple[GridSpec, Fraction]:
    r = 2 / eps
    hs = Fraction(resolution) if resolution is not None else r / 32
    return GridSpec.symmetric(r + 2 * hs, hs, dim), r


@dataclass(frozen=True)
class DoubleCoverReport:
    scenario: str
    verdict: str
    base_betti: Tuple[int, ...]
    base_source: str
    lifted_betti: Tuple[int, ...]
    eps: Fraction
    note: str = ""

    def to_dict(self) -> Dict:
        return {
            "scenario": self.scenario,
            "verdict": self.verdict,
            "base_betti": list(self.base_betti),
            "base_source": self.base_source,
            "lifted_betti": list(self.lifted_betti),
            "eps": format_rational(self.eps),
            "note": self.note,
        }


def double_cover_audit(
    sc: Scenario,
    params: Optional[DeformationParams] = None,
    sphere_resolution=None,
) -> DoubleCoverReport:
    """Check that lifting a scenario onto the sphere of radius 2/eps doubles Betti.

    The lifted set consists of two polar copies of the affine set (each cap
    is a graph over the truncating ball, and the homogenized inequalities
    restrict to the originals there), so every Betti number must double.
    Uses the oracle vector when the scenario has one, else the affine grid
    vector.  If the scenario's box pokes outside the ball of radius 1/eps
    the verdict is INCONCLUSIVE with guidance to shrink eps.
    """
    params = params or DeformationParams()
    eps = params.eps
    if not _scenario_fits_ball(sc, eps):
        return DoubleCoverReport(
            scenario=sc.name,
            verdict=INCONCLUSIVE,
            base_betti=(),
            base_source="none",
            lifted_betti=(),
            eps=eps,
            note="scenario box exceeds the radius-1/eps ball; shrink eps",
        )
    if sc.oracle_betti is not None:
        base = pad_betti(sc.oracle_betti, sc.k + 1)
        base_source = "oracle"
    else:
        base = pad_betti(betti(grid_complex(sc.system, sc.grid)), sc.k + 1)
        base_source = "grid"
    spec, r = _lift_spec(eps, sc.k + 1, sphere_resolution)
    lifted_polys = [homogenize(p).as_poly() for p in sc.system]
    lifted = pad_betti(betti(sphere_region_complex(lifted_polys, eps, spec)), sc.k + 2)
    expected = pad_betti(tuple(2 * b for b in base), sc.k + 2)
    ok = lifted == expected
    return DoubleCoverReport(
        scenario=sc.name,
        verdict=PASS if ok else INCONCLUSIVE,
        base_betti=base,
        base_source=base_source,
        lifted_betti=lifted,
        eps=eps,
        note="" if ok else "doubling mismatch; refine the sphere grid or shrink eps",
    )


@dataclass(frozen=True)
class DeformationReport:
    scenario: str
    verdict: str
    betti_by_t: Dict[str, Tuple[int, ...]]
    family_scale: Fraction
    eps: Fraction
    delta: Fraction
    note: str = ""

    def to_dict(self) -> Dict:
        return {
            "scenario": self.scenario,
            "verdict": self.verdict,
            "betti_by_t": {t: list(v) for t, v in self.betti_by_t.items()},
            "family_scale": format_rational(self.family_scale),
            "eps": format_rational(self.eps),
            "delta": format_rational(self.delta),
            "note": self.note,
        }


def _family_bound(poly: QuadraticPoly, width: Fraction) -> Fraction:
    total = abs(poly.const)
    for i in range(poly.k):
        total += abs(poly.lin[i]) * width
        for j in range(poly.k):
            total += abs(poly.quad[i][j]) * width * width
    return total


def deformation_audit(
    sc: Scenario,
    params: Optional[DeformationParams] = None,
    t_values: Sequence = (Fraction(0), Fraction(1, 1000)),
    sphere_resolution=None,
    seed: int = 0,
    family_scale=None,
) -> DeformationReport:
    """Blend the lifted system toward a positive definite family and re-audit.

    For each t the system (1-t) * P_h + t * H is lifted onto the sphere
    and its grid Betti vector computed; the verdict is PASS when every
    vector matches the t = 0 vector.  The seeded positive definite family
    is scaled (unless family_scale overrides it) so that the largest
    requested t keeps the perturbation below the grid's sign granularity;
    that makes "sufficiently small" concrete for the given grid.  The
    closed-set grid approximation stands in for both the open and the
    closed deformed sets.
    """
    params = params or DeformationParams()
    ts = sorted({Fraction(t) for t in t_values})
    for t in ts:
        if not 0 <= t <= params.delta:
            raise ValueError(f"t={t} outside [0, delta={params.delta}]")
    if not _scenario_fits_ball(sc, params.eps):
        return DeformationReport(
            scenario=sc.name,
            verdict=INCONCLUSIVE,
            betti_by_t={},
            family_scale=Fraction(0),
            eps=params.eps,
            delta=params.delta,
            note="scenario box exceeds the radius-1/eps ball; shrink eps",
        )
    spec, r = _lift_spec(params.eps, sc.k + 1, sphere_resolution)
    base_polys = [homogenize(p).as_poly() for p in sc.system]
    family = [
        dehomogenize(random_pd_form(sc.k + 2, seed + i)) for i in range(sc.s)
    ]
    t_max = max(ts, default=Fraction(0))
    if family_scale is not None:
        scale = Fraction(family_scale)
    elif t_max > 0 and family:
        grid_scale = _GridScale(spec).scale
        coeff_lcm = 1
        for p in base_polys:
            dens = [p.const.denominator]
            dens.extend(x.denominator for x in p.lin)
            dens.extend(x.denominator for row in p.quad for x in row)
            coeff_lcm = math.lcm(coeff_lcm, *dens)
        granularity = Fraction(1, coeff_lcm * grid_scale * grid_scale)
        width = max(max(abs(lo), abs(hi)) for lo, hi in spec.box)
        biggest = max(_family_bound(h, width) for h in family)
        scale = granularity / (4 * t_max * biggest)
        if scale > 1:
            scale = Fraction(1)
    else:
        scale = Fraction(1)
    scaled_family = [scale * h for h in family]
    reference: Optional[Tuple[int, ...]] = None
    betti_by_t: Dict[str, Tuple[int, ...]] = {}

    def region_betti(t: Fraction) -> Tuple[int, ...]:
        polys_t = [
            (1 - t) * p + t * h for p, h in zip(base_polys, scaled_family)
        ] or list(base_polys)
        return pad_betti(betti(sphere_region_complex(polys_t, params.eps, spec)), sc.k + 2)

    reference = region_betti(Fraction(0))
    for t in ts:
        betti_by_t[format_rational(t)] = reference if t == 0 else region_betti(t)
    constant = all(v == reference for v in betti_by_t.values())
    return DeformationReport(
        scenario=sc.name,
        verdict=PASS if constant else INCONCLUSIVE,
        betti_by_t=betti_by_t,
        family_scale=scale,
        eps=params.eps,
        delta=params.delta,
        note="" if constant else "Betti drift across t; shrink delta or refine the grid",
    )


@dataclass(frozen=True)
class AlexanderReport:
    verdict: str
    subset_reduced: Tuple[int, ...]
    complement_reduced: Tuple[int, ...]
    sphere_dim: int
    note: str = ""

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict,
            "subset_reduced": list(self.subset_reduced),
            "complement_reduced": list(self.complement_reduced),
            "sphere_dim": self.sphere_dim,
            "note": self.note,
        }


def _reduced(vec: Sequence[int]) -> Tuple[int, ...]:
    vec = tuple(vec)
    if not vec or vec[0] < 1:
        raise ValueError("reduced Betti needs a nonempty complex")
    return (vec[0] - 1,) + vec[1:]


def alexander_equator_audit(
    radius=1, resolution=Fraction(1, 8), tau=None
) -> AlexanderReport:
    """Duality spot-check on the 2-sphere with the equator circle as subset.

    Compares reduced homology ranks of the complement (two polar caps)
    with reduced ranks of the subset in complementary degree.  Both sides
    are taken reduced; over a field, cohomology ranks equal homology
    ranks, so reduced homology numbers stand in for reduced cohomology.
    """
    r = Fraction(radius)
    res = Fraction(resolution)
    spec = GridSpec.symmetric(r + 2 * res, res, 3)
    if tau is None:
        tau = 2 * res
    equator_form = QuadraticForm.make(
        3, [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
    )  # zero set of X3^2 is the equator plane
    subset = sphere_zero_complex([equator_form], r, spec, tau)
    band = sphere_band_complex(r, spec)
    # complement: band top cells whose closed cube misses the subset entirely
    subset_cells = subset.cells
    complement_tops = [
        c
        for c in band.cells_of_dim(3)
        if not any(f in subset_cells for f in cube_all_faces(c))
    ]
    complement = close_under_faces(complement_tops, ambient_dim=3)
    sub_red = _reduced(pad_betti(betti(subset), 3))
    comp_red = _reduced(pad_betti(betti(complement), 3))
    k = 2
    ok = all(comp_red[i] == sub_red[k - i - 1] for i in range(k))
    return AlexanderReport(
        verdict=PASS if ok else INCONCLUSIVE,
        subset_reduced=sub_red,
        complement_reduced=comp_red,
        sphere_dim=k,
        note="" if ok else "reduced ranks mismatch; refine the grid",
    )


# ---------------------------------------------------------------------------
# Mayer-Vietoris example inputs, generated with the homology engine.


@dataclass(frozen=True)
class MVExample:
    name: str
    union_betti: Tuple[int, ...]
    pieces: Dict[Tuple[int, ...], Tuple[int, ...]]
    degree: int
    verdict: str

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "union_betti": list(self.union_betti),
            "pieces": {
                ",".join(map(str, key)): list(vec) for key, vec in self.pieces.items()
            },
            "degree": self.degree,
            "verdict": self.verdict,
        }


def _hollow_square(x: int, y: int) -> CubicalComplex:
    edges = [
        make_cube([(x, x + 1), (y, y)]),
        make_cube([(x, x + 1), (y + 1, y + 1)]),
        make_cube([(x, x), (y, y + 1)]),
        make_cube([(x + 1, x + 1), (y, y + 1)]),
    ]
    return close_under_faces(edges)


def _mv_example(name, parts: Dict[Tuple[int, ...], CubicalComplex], union, degree,
                union_override=None) -> MVExample:
    union_betti = union_override or betti(union)
    pieces = {key: betti(cx) for key, cx in parts.items()}
    verdict = mayer_vietoris_audit(union_betti, pieces, degree)
    return MVExample(
        name=name,
        union_betti=tuple(union_betti),
        pieces=pieces,
        degree=degree,
        verdict=verdict,
    )


def mv_wedge_example() -> MVExample:
    """Two circles joined at one point: b_1 = 2 against bound 0 + 0 + 1 + ..."""
    a = _hollow_square(0, 0)
    b = _hollow_square(1, 1)
    union = CubicalComplex(2, a.cells | b.cells)
    inter = CubicalComplex(2, a.cells & b.cells)
    return _mv_example(
        "mv-wedge", {(1,): a, (2,): b, (1, 2): inter}, union, degree=1
    )


def mv_disjoint_example() -> MVExample:
    """Two far-apart circles; checks the degree-1 bound with an empty overlap."""
    a = _hollow_square(0, 0)
    b = _hollow_square(3, 0)
    union = CubicalComplex(2, a.cells | b.cells)
    inter = CubicalComplex(2, a.cells & b.cells)
    return _mv_example(
        "mv-disjoint", {(1,): a, (2,): b, (1, 2): inter}, union, degree=1
    )


def _three_arc_parts():
    bottom = make_cube([(0, 1), (0, 0)])
    top = make_cube([(0, 1), (1, 1)])
    left = make_cube([(0, 0), (0, 1)])
    right = make_cube([(1, 1), (0, 1)])
    a = close_under_faces([bottom, right])
    b = close_under_faces([top])
    c = close_under_faces([left])
    union = CubicalComplex(2, a.cells | b.cells | c.cells)
    parts = {
        (1,): a,
        (2,): b,
        (3,): c,
        (1, 2): CubicalComplex(2, a.cells & b.cells),
        (1, 3): CubicalComplex(2, a.cells & c.cells),
        (2, 3): CubicalComplex(2, b.cells & c.cells),
    }
    return parts, union


def mv_three_arc_example() -> MVExample:
    """A circle covered by three arcs meeting pairwise in single vertices."""
    parts, union = _three_arc_parts()
    return _mv_example("mv-three-arcs", parts, union, degree=1)


def mv_fabricated_example() -> MVExample:
    """Deliberately inflated union Betti vector: the checker must flag it."""
    parts, union = _three_arc_parts()
    return _mv_example(
        "mv-fabricated-violation", parts, union, degree=1, union_override=(1, 10)
    )


# ---------------------------------------------------------------------------
# Batch runner used by the command line front end.


@dataclass(frozen=True)
class SuiteResult:
    name: str
    verdict: str
    note: str = ""
    document: Optional[Dict] = None


def _grid_matches_oracle(sc: Scenario) -> SuiteResult:
    vec = pad_betti(betti(grid_complex(sc.system, sc.grid)), sc.k + 1)
    oracle = pad_betti(sc.oracle_betti, sc.k + 1)
    ok = vec == oracle
    return SuiteResult(
        name=f"grid-oracle-{sc.name}",
        verdict=PASS if ok else INCONCLUSIVE,
        note=f"grid {list(vec)} vs oracle {list(oracle)}",
    )


def run_verification_suite(seed: int = 0, full: bool = False) -> List[SuiteResult]:
    """Run the built-in scenario and audit batch; deterministic given seed."""
    results: List[SuiteResult] = []

    for k in (1, 2, 3):
        rep = bound_audit(scenario_products(k))
        results.append(
            SuiteResult(f"bounds-products-k{k}", rep.overall, document=rep.to_dict())
        )
    results.append(_grid_matches_oracle(scenario_products(2)))

    shell2 = scenario_shell(2, Fraction(1, 2), 1)
    rep = bound_audit(shell2)
    results.append(SuiteResult("bounds-shell-k2", rep.overall, document=rep.to_dict()))
    results.append(_grid_matches_oracle(shell2))

    cone = QuadraticForm.make(3, [[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    smith = smith_audit([cone], probe=False)
    results.append(
        SuiteResult(
            "smith-cone",
            smith.verdict,
            note=f"projective total {smith.projective_total} vs bound {smith.bound}",
            document=smith.to_dict(),
        )
    )

    for example in (mv_wedge_example(), mv_disjoint_example(), mv_three_arc_example()):
        results.append(SuiteResult(example.name, example.verdict, document=example.to_dict()))

    alex = alexander_equator_audit()
    results.append(SuiteResult("alexander-equator", alex.verdict, document=alex.to_dict()))

    dc1 = double_cover_audit(scenario_products(1))
    results.append(SuiteResult("double-cover-products-k1", dc1.verdict, document=dc1.to_dict()))

    de1 = deformation_audit(scenario_products(1), seed=seed)
    results.append(SuiteResult("deformation-products-k1", de1.verdict, document=de1.to_dict()))

    if full:
        results.append(_grid_matches_oracle(scenario_products(3)))
        results.append(_grid_matches_oracle(scenario_products(4)))
        shell3 = scenario_shell(3, Fraction(1, 2), 1)
        rep = bound_audit(shell3)
        results.append(SuiteResult("bounds-shell-k3", rep.overall, document=rep.to_dict()))
        results.append(_grid_matches_oracle(shell3))
        dc2 = double_cover_audit(scenario_products(2))
        results.append(
            SuiteResult("double-cover-products-k2", dc2.verdict, document=dc2.to_dict())
        )
        dcs = double_cover_audit(shell2)
        results.append(
            SuiteResult("double-cover-shell-k2", dcs.verdict, document=dcs.to_dict())
        )
        des = deformation_audit(shell2, seed=seed)
        results.append(
            SuiteResult("deformation-shell-k2", des.verdict, document=des.to_dict())
        )
    return results
