"""Claim tables for ten twist families of fillings, with verification.

Each family records, per slope, a closed-form description of the filled
manifold, together with a list of machine-checkable claims: the distance
between the designated reducible and finite slopes, reducibility and
finite-type classifications, and provable distinctness of selected
pairs.  Checks never assume what they are supposed to establish; they
run the catalog's classifiers on the built manifolds and report a
three-valued outcome.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .manifolds import (BASE_D2, BASE_S2, CableSpace, FiniteType,
                        Comparison, IllFormedClaimError, Manifold, OpaqueTag,
                        S1xS2, TAG_TOROIDAL, TAG_TOROIDAL_IRREDUCIBLE, ZxS1,
                        classify_finite_type, connected_sum, is_reducible,
                        lens_space, manifold_compare, sfs_orders, torus_union)
from .slopes import INFINITY, Slope, distance, format_slope


class DomainError(ValueError):
    """Parameters are outside the family's domain of validity."""


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Claim:
    """One slope of a family: the filled manifold in closed form."""

    slope: Slope
    formula: str
    build: Callable[..., Manifold]


@dataclass(frozen=True)
class Check:
    """A verifiable assertion about a family's claims.

    Kinds: "wellformed", "distance", "reducible", "finite_type",
    "distinct".  ``when`` restricts a check to part of the domain; a
    check whose predicate rejects the parameters is simply not run.
    """

    kind: str
    slopes: tuple[Slope, ...] = ()
    expected: object = None
    when: Callable[[dict], bool] | None = None


@dataclass(frozen=True)
class Edge:
    """A pointer from one family to a related one (e.g. closed members).

    ``slope_text`` names the filling slope the edge lives at, when there
    is one; it is text because some edges use a symbolic slope ("1/q").
    Slopes named here count as rows of the family's table, so checks may
    refer to them.
    """

    target: str
    note: str
    slope_text: str | None = None


@dataclass(frozen=True)
class FamilySpec:
    name: str
    description: str
    param_names: tuple[str, ...]
    domain_doc: str
    in_domain: Callable[..., bool]
    claims: tuple[Claim, ...]
    checks: tuple[Check, ...]
    designated_pair: tuple[Slope, Slope] | None = None
    edges: tuple[Edge, ...] = ()

    def claim_at(self, r: Slope) -> Claim:
        for c in self.claims:
            if c.slope == r:
                return c
        slopes = ", ".join(format_slope(c.slope) for c in self.claims)
        raise ValueError(
            f"family {self.name} has no claim at slope {format_slope(r)} "
            f"(claimed slopes: {slopes})"
        )


@dataclass(frozen=True)
class CheckResult:
    kind: str
    detail: str
    status: Status
    observed: str

    def as_dict(self) -> dict:
        return {"kind": self.kind, "detail": self.detail,
                "status": self.status.value, "observed": self.observed}


@dataclass(frozen=True)
class VerificationReport:
    family: str
    params: dict
    status: Status
    checks: tuple[CheckResult, ...]

    def as_dict(self) -> dict:
        return {"family": self.family, "params": dict(self.params),
                "status": self.status.value,
                "checks": [c.as_dict() for c in self.checks]}


@dataclass(frozen=True)
class SweepReport:
    family: str
    ranges: dict
    points: int
    passed: int
    failed: int
    indeterminate: int
    failures: tuple[dict, ...] = field(default_factory=tuple)

    def as_dict(self) -> dict:
        return {"family": self.family,
                "ranges": {k: list(v) for k, v in self.ranges.items()},
                "points": self.points, "passed": self.passed,
                "failed": self.failed, "indeterminate": self.indeterminate,
                "failures": list(self.failures)}


# ---------------------------------------------------------------------------
# The family tables


def _slope(p: int, q: int = 1) -> Slope:
    return Slope(p, q)


_CYCLIC = FamilySpec(
    name="cyclic",
    description="Twist family whose 0-filling is a lens sum and whose "
                "infinity-filling is a large lens space",
    param_names=("p", "q"),
    domain_doc="p >= 2, q >= 4",
    in_domain=lambda p, q: p >= 2 and q >= 4,
    claims=(
        Claim(_slope(0), "L(p,1) # L(q-2,1)",
              lambda p, q: connected_sum(lens_space(p, 1), lens_space(q - 2, 1))),
        Claim(INFINITY, "L((3p+2)(-2q+1)+6, (3p+2)q-3)",
              lambda p, q: lens_space((3 * p + 2) * (-2 * q + 1) + 6,
                                      (3 * p + 2) * q - 3)),
        Claim(_slope(-1), "tag(toroidal_irreducible_nonSFS)",
              lambda p, q: OpaqueTag(TAG_TOROIDAL_IRREDUCIBLE)),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(0), INFINITY), 1),
        Check("reducible", (_slope(0),)),
        Check("finite_type", (INFINITY,), FiniteType.CYCLIC),
        Check("distinct", (INFINITY, _slope(-1))),
    ),
    designated_pair=(_slope(0), INFINITY),
)

_EW_PRIOR = FamilySpec(
    name="ew_prior",
    description="One-parameter family with cyclic 0-filling and reducible "
                "1/3-filling",
    param_names=("p",),
    domain_doc="p >= 2",
    in_domain=lambda p: p >= 2,
    claims=(
        Claim(_slope(0), "L((p-1)(p+3)+1, p+3)",
              lambda p: lens_space((p - 1) * (p + 3) + 1, p + 3)),
        Claim(Slope(1, 3), "L(3,1) # L(2,1)",
              lambda p: connected_sum(lens_space(3, 1), lens_space(2, 1))),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (Slope(1, 3), _slope(0)), 1),
        Check("reducible", (Slope(1, 3),)),
        Check("finite_type", (_slope(0),), FiniteType.CYCLIC),
    ),
    designated_pair=(Slope(1, 3), _slope(0)),
    edges=(Edge("bz_w6", "at p = 2 the 0-filling L(6,5) is the same lens "
                         "space as the infinity-filling L(6,1) there"),),
)

_BZ_W6 = FamilySpec(
    name="bz_w6",
    description="A single knot exterior with reducible 1-filling and lens "
                "infinity-filling",
    param_names=(),
    domain_doc="no parameters",
    in_domain=lambda: True,
    claims=(
        Claim(_slope(1), "L(3,1) # L(2,1)",
              lambda: connected_sum(lens_space(3, 1), lens_space(2, 1))),
        Claim(INFINITY, "L(6,1)", lambda: lens_space(6, 1)),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(1), INFINITY), 1),
        Check("reducible", (_slope(1),)),
        Check("finite_type", (INFINITY,), FiniteType.CYCLIC),
    ),
    designated_pair=(_slope(1), INFINITY),
)

_DIHEDRAL = FamilySpec(
    name="dihedral",
    description="Two-parameter family pairing a reducible 0-filling with a "
                "prism infinity-filling",
    param_names=("p", "q"),
    domain_doc="p >= 3, q >= 3",
    in_domain=lambda p, q: p >= 3 and q >= 3,
    claims=(
        Claim(_slope(0), "L(p,1) # L(2q+1,1)",
              lambda p, q: connected_sum(lens_space(p, 1),
                                         lens_space(2 * q + 1, 1))),
        Claim(INFINITY, "S2(2,2,2pq-p-2)",
              lambda p, q: sfs_orders(BASE_S2, (2, 2, 2 * p * q - p - 2))),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(0), INFINITY), 1),
        Check("reducible", (_slope(0),)),
        Check("finite_type", (INFINITY,), FiniteType.DIHEDRAL),
    ),
    designated_pair=(_slope(0), INFINITY),
)

_DIHEDRAL_AUX = FamilySpec(
    name="dihedral_aux_Np",
    description="Tangle-exterior family behind the dihedral one; its 1/q "
                "fillings are the closed dihedral members",
    param_names=("p",),
    domain_doc="p >= 3",
    in_domain=lambda p: p >= 3,
    claims=(
        Claim(INFINITY, "D2(2,p+2)",
              lambda p: sfs_orders(BASE_D2, (2, p + 2))),
        Claim(_slope(0), "U[C(1,2), D2(2,p)]",
              lambda p: torus_union(CableSpace(1, 2),
                                    sfs_orders(BASE_D2, (2, p)))),
        Claim(_slope(1), "D2(2,p-2)",
              lambda p: sfs_orders(BASE_D2, (2, p - 2))),
        Claim(_slope(2), "ZxS1", lambda p: ZxS1()),
    ),
    checks=(
        Check("wellformed"),
        Check("distinct", (INFINITY, _slope(1))),
        Check("distance", (_slope(0), _slope(2)), 2),
    ),
    edges=(Edge("dihedral", "the closed members are the 1/q fillings of "
                            "this exterior", slope_text="1/q"),),
)

_TETRAHEDRAL = FamilySpec(
    name="tetrahedral",
    description="A filling triple realizing the tetrahedral type next to a "
                "reducible and a dihedral filling",
    param_names=(),
    domain_doc="no parameters",
    in_domain=lambda: True,
    claims=(
        Claim(_slope(0), "L(3,1) # L(3,1)",
              lambda: connected_sum(lens_space(3, 1), lens_space(3, 1))),
        Claim(INFINITY, "S2(2,3,3)",
              lambda: sfs_orders(BASE_S2, (2, 3, 3))),
        Claim(_slope(1), "S2(2,2,7)",
              lambda: sfs_orders(BASE_S2, (2, 2, 7))),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(0), INFINITY), 1),
        Check("reducible", (_slope(0),)),
        Check("finite_type", (INFINITY,), FiniteType.TETRAHEDRAL),
        Check("finite_type", (_slope(1),), FiniteType.DIHEDRAL),
        Check("distinct", (INFINITY, _slope(1))),
    ),
    designated_pair=(_slope(0), INFINITY),
)

_OCTAHEDRAL = FamilySpec(
    name="octahedral",
    description="One-parameter family pairing a reducible 0-filling with "
                "the octahedral infinity-filling",
    param_names=("p",),
    domain_doc="p >= 3",
    in_domain=lambda p: p >= 3,
    claims=(
        Claim(_slope(0), "L(2,1) # S2(4,p,2p+1)",
              lambda p: connected_sum(lens_space(2, 1),
                                      sfs_orders(BASE_S2, (4, p, 2 * p + 1)))),
        Claim(INFINITY, "S2(2,3,4)",
              lambda p: sfs_orders(BASE_S2, (2, 3, 4))),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(0), INFINITY), 1),
        Check("reducible", (_slope(0),)),
        Check("finite_type", (INFINITY,), FiniteType.OCTAHEDRAL),
    ),
    designated_pair=(_slope(0), INFINITY),
)

_OCTAHEDRAL_AUX = FamilySpec(
    name="octahedral_aux_Np",
    description="Tangle-exterior family behind the octahedral one; its "
                "slope-4 filling is the closed member",
    param_names=("p",),
    domain_doc="p >= 3",
    in_domain=lambda p: p >= 3,
    claims=(
        Claim(_slope(0), "L(2,1) # D2(p,2p+1)",
              lambda p: connected_sum(lens_space(2, 1),
                                      sfs_orders(BASE_D2, (p, 2 * p + 1)))),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(0), _slope(4)), 4),
        Check("reducible", (_slope(0),)),
    ),
    edges=(Edge("octahedral", "the closed member is the slope-4 filling of "
                              "this exterior", slope_text="4"),),
)


_LEE_FINITE_AT_0 = frozenset({(3, -1), (-4, -1)})
_LEE_FINITE_AT_MINUS_1 = frozenset({(-3, 1), (4, 1)})


_ICOSAHEDRAL_LEE = FamilySpec(
    name="icosahedral_lee",
    description="Two-parameter family with an S1xS2 filling at -1/2 and "
                "icosahedral fillings at four exceptional parameter pairs",
    param_names=("p", "q"),
    domain_doc="|p| >= 2, q != 0, (p, q) not in {(+-2, +-1)}",
    in_domain=lambda p, q: abs(p) >= 2 and q != 0 and (abs(p), abs(q)) != (2, 1),
    claims=(
        Claim(Slope(-1, 2), "S1xS2", lambda p, q: S1xS2()),
        Claim(_slope(0), "S2(|p-1|, |2q-1|, |pq+q-1|)",
              lambda p, q: sfs_orders(BASE_S2, (abs(p - 1), abs(2 * q - 1),
                                                abs(p * q + q - 1)))),
        Claim(_slope(-1), "S2(|p+1|, |2q+1|, |pq-q-1|)",
              lambda p, q: sfs_orders(BASE_S2, (abs(p + 1), abs(2 * q + 1),
                                                abs(p * q - q - 1)))),
        Claim(INFINITY, "tag(toroidal)", lambda p, q: OpaqueTag(TAG_TOROIDAL)),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(0), Slope(-1, 2)), 1),
        Check("distance", (_slope(-1), Slope(-1, 2)), 1),
        Check("distance", (Slope(-1, 2), INFINITY), 2),
        Check("reducible", (Slope(-1, 2),)),
        Check("finite_type", (_slope(0),), FiniteType.ICOSAHEDRAL,
              when=lambda ps: (ps["p"], ps["q"]) in _LEE_FINITE_AT_0),
        Check("finite_type", (_slope(-1),), FiniteType.ICOSAHEDRAL,
              when=lambda ps: (ps["p"], ps["q"]) in _LEE_FINITE_AT_MINUS_1),
    ),
    designated_pair=(Slope(-1, 2), _slope(0)),
)

_ICOSAHEDRAL_SECOND = FamilySpec(
    name="icosahedral_second",
    description="A filling triple realizing the icosahedral type next to a "
                "reducible filling and a non-finite Seifert filling",
    param_names=(),
    domain_doc="no parameters",
    in_domain=lambda: True,
    claims=(
        Claim(_slope(0), "L(3,1) # L(4,1)",
              lambda: connected_sum(lens_space(3, 1), lens_space(4, 1))),
        Claim(INFINITY, "S2(2,3,5)",
              lambda: sfs_orders(BASE_S2, (2, 3, 5))),
        Claim(_slope(1), "S2(2,3,7)",
              lambda: sfs_orders(BASE_S2, (2, 3, 7))),
    ),
    checks=(
        Check("wellformed"),
        Check("distance", (_slope(0), INFINITY), 1),
        Check("reducible", (_slope(0),)),
        Check("finite_type", (INFINITY,), FiniteType.ICOSAHEDRAL),
        Check("finite_type", (_slope(1),), FiniteType.NOT_FINITE),
        Check("distinct", (INFINITY, _slope(1))),
    ),
    designated_pair=(_slope(0), INFINITY),
)


FAMILIES: dict[str, FamilySpec] = {
    spec.name: spec for spec in (
        _CYCLIC, _EW_PRIOR, _BZ_W6, _DIHEDRAL, _DIHEDRAL_AUX, _TETRAHEDRAL,
        _OCTAHEDRAL, _OCTAHEDRAL_AUX, _ICOSAHEDRAL_LEE, _ICOSAHEDRAL_SECOND,
    )
}


def family_catalog() -> tuple[FamilySpec, ...]:
    return tuple(FAMILIES.values())


def get_family(name: str) -> FamilySpec:
    try:
        return FAMILIES[name]
    except KeyError:
        known = ", ".join(FAMILIES)
        raise ValueError(f"unknown family {name!r} (known: {known})") from None


def _check_params(spec: FamilySpec, params: dict) -> None:
    if set(params) != set(spec.param_names):
        wanted = ", ".join(spec.param_names) or "none"
        raise DomainError(
            f"family {spec.name} takes parameters: {wanted}; got {sorted(params)}"
        )
    if not spec.in_domain(**params):
        raise DomainError(
            f"parameters {params} are outside the domain of {spec.name} "
            f"({spec.domain_doc})"
        )


def evaluate_filling(name: str, params: dict, r: Slope) -> Manifold:
    """The closed-form filling of a family member at a claimed slope."""
    spec = get_family(name)
    _check_params(spec, params)
    return spec.claim_at(r).build(**params)


def _run_check(spec: FamilySpec, check: Check, params: dict) -> CheckResult:
    if check.kind == "wellformed":
        try:
            for c in spec.claims:
                c.build(**params)
        except IllFormedClaimError as exc:
            return CheckResult("wellformed", "all claims build", Status.FAIL,
                               str(exc))
        return CheckResult("wellformed", "all claims build", Status.PASS, "ok")

    if check.kind == "distance":
        r1, r2 = check.slopes
        detail = f"distance({format_slope(r1)}, {format_slope(r2)}) = {check.expected}"
        d = distance(r1, r2)
        status = Status.PASS if d == check.expected else Status.FAIL
        return CheckResult("distance", detail, status, str(d))

    if check.kind == "reducible":
        (r,) = check.slopes
        m = spec.claim_at(r).build(**params)
        detail = f"filling({format_slope(r)}) is reducible"
        status = Status.PASS if is_reducible(m) else Status.FAIL
        return CheckResult("reducible", detail, status, str(m))

    if check.kind == "finite_type":
        (r,) = check.slopes
        m = spec.claim_at(r).build(**params)
        expected: FiniteType = check.expected  # type: ignore[assignment]
        observed = classify_finite_type(m)
        detail = f"classify(filling({format_slope(r)})) = {expected.value}"
        if observed is FiniteType.UNKNOWN:
            status = Status.INDETERMINATE
        elif observed is expected:
            status = Status.PASS
        else:
            status = Status.FAIL
        return CheckResult("finite_type", detail, status,
                           f"{m} -> {observed.value}")

    if check.kind == "distinct":
        r1, r2 = check.slopes
        m1 = spec.claim_at(r1).build(**params)
        m2 = spec.claim_at(r2).build(**params)
        detail = f"filling({format_slope(r1)}) != filling({format_slope(r2)})"
        outcome = manifold_compare(m1, m2)
        if outcome is Comparison.DISTINCT:
            status = Status.PASS
        elif outcome is Comparison.EQUAL:
            status = Status.FAIL
        else:
            status = Status.INDETERMINATE
        return CheckResult("distinct", detail, status,
                           f"{m1} vs {m2}: {outcome.value}")

    raise ValueError(f"unknown check kind {check.kind!r}")


def _aggregate(statuses) -> Status:
    statuses = list(statuses)
    if any(s is Status.FAIL for s in statuses):
        return Status.FAIL
    if any(s is Status.INDETERMINATE for s in statuses):
        return Status.INDETERMINATE
    return Status.PASS


def verify_family(name: str, params: dict) -> VerificationReport:
    """Run every applicable check of a family at one parameter point."""
    spec = get_family(name)
    _check_params(spec, params)
    results = []
    for check in spec.checks:
        if check.when is not None and not check.when(params):
            continue
        results.append(_run_check(spec, check, params))
    return VerificationReport(spec.name, dict(params),
                              _aggregate(r.status for r in results),
                              tuple(results))


def _worker_count() -> int:
    raw = os.environ.get("DEHNCALC_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def sweep_point_reports(
    name: str, ranges: dict[str, tuple[int, int]]
) -> tuple[VerificationReport, ...]:
    """Verify a family at every in-domain point of an inclusive grid.

    Out-of-domain grid points are skipped.  Results are ordered by
    parameter tuple, independent of DEHNCALC_THREADS.
    """
    spec = get_family(name)
    if set(ranges) != set(spec.param_names):
        wanted = ", ".join(spec.param_names) or "none"
        raise DomainError(
            f"family {spec.name} takes parameters: {wanted}; got {sorted(ranges)}"
        )
    names = spec.param_names
    grids = [range(ranges[n][0], ranges[n][1] + 1) for n in names]
    points = [dict(zip(names, combo))
              for combo in itertools.product(*grids)
              if spec.in_domain(**dict(zip(names, combo)))]

    def run(params: dict) -> VerificationReport:
        return verify_family(name, params)

    workers = _worker_count()
    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return tuple(pool.map(run, points))
    return tuple(run(p) for p in points)


def sweep_verify(name: str, ranges: dict[str, tuple[int, int]]) -> SweepReport:
    """Verify a family over an inclusive integer grid, aggregated."""
    spec = get_family(name)
    reports = sweep_point_reports(name, ranges)
    failures = []
    passed = failed = indeterminate = 0
    for report in reports:
        if report.status is Status.PASS:
            passed += 1
            continue
        if report.status is Status.FAIL:
            failed += 1
        else:
            indeterminate += 1
        for c in report.checks:
            if c.status is not Status.PASS:
                failures.append({"params": report.params, "detail": c.detail,
                                 "status": c.status.value,
                                 "observed": c.observed})
    return SweepReport(spec.name, {k: tuple(v) for k, v in ranges.items()},
                       len(reports), passed, failed, indeterminate,
                       tuple(failures))


def scan_icosahedral_pairs(bound: int = 10) -> dict[str, tuple[tuple[int, int], ...]]:
    """Parameter pairs of icosahedral_lee whose 0- or (-1)-filling is
    icosahedral, discovered by classifying the claimed fillings over the
    window |p|, |q| <= bound rather than asserted."""
    spec = get_family("icosahedral_lee")
    hits: dict[str, list[tuple[int, int]]] = {"0": [], "-1": []}
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            if not spec.in_domain(p=p, q=q):
                continue
            for slope_text in ("0", "-1"):
                claim = spec.claim_at(Slope(int(slope_text)))
                m = claim.build(p=p, q=q)
                if classify_finite_type(m) is FiniteType.ICOSAHEDRAL:
                    hits[slope_text].append((p, q))
    return {k: tuple(sorted(v)) for k, v in hits.items()}
