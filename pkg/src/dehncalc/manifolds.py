"""Closed-form catalog of the 3-manifolds that show up as fillings.

Every manifold is a small immutable description: lens spaces and Seifert
fibered spaces over S^2 carry exact invariants, while a few shapes are
deliberately partial (exceptional-fiber orders without their framings, or
an opaque tag for a manifold we only know qualitatively).  Partial shapes
make comparisons three-valued instead of silently guessing.

Conventions:
  * Lens spaces are unoriented: L(p, q) is stored with p >= 2 and q the
    minimum of {+-q^{+-1} mod p}, which is a complete invariant.
  * SfsS2(e, fibers) is the Seifert space over S^2 with integer Euler
    term e and normalized exceptional fibers 0 < beta < alpha, at least
    three of them (fewer would be a lens space in disguise).
  * SfsOrdersOnly(base, orders) records only the exceptional-fiber
    orders over base S2, D2, or M2 (Mobius band).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from math import gcd


class IllFormedClaimError(ValueError):
    """A manifold description violates its arithmetic side conditions."""


class IndeterminateError(Exception):
    """The requested answer is not determined by a partial description."""


TAG_TOROIDAL_IRREDUCIBLE = "toroidal_irreducible_nonSFS"
TAG_TOROIDAL = "toroidal"
TAG_LENS_TYPE = "lens-type"

# "prime" is tracked separately from "reducible": the lens-type tag covers
# both lens spaces and S1xS2, so its reducibility is unknown but it is prime.
_TAG_PROPS: dict[str, dict[str, bool]] = {
    TAG_TOROIDAL_IRREDUCIBLE: {"closed": True, "reducible": False, "prime": True,
                               "toroidal": True},
    TAG_TOROIDAL: {"closed": True, "toroidal": True},
    TAG_LENS_TYPE: {"closed": True, "prime": True, "toroidal": False},
}


class Manifold:
    """Base class; all concrete shapes are frozen dataclasses below."""

    def __str__(self) -> str:  # pragma: no cover - overridden everywhere
        return type(self).__name__


@dataclass(frozen=True)
class S3(Manifold):
    def __str__(self) -> str:
        return "S3"


@dataclass(frozen=True)
class S1xS2(Manifold):
    def __str__(self) -> str:
        return "S1xS2"


@dataclass(frozen=True)
class SolidTorus(Manifold):
    def __str__(self) -> str:
        return "ST"


@dataclass(frozen=True)
class T2xI(Manifold):
    def __str__(self) -> str:
        return "T2xI"


@dataclass(frozen=True)
class ZxS1(Manifold):
    """Product of a compact planar surface Z with S^1 (an exceptional filling)."""

    def __str__(self) -> str:
        return "ZxS1"


def lens_parameter_orbit(p: int, q: int) -> tuple[int, ...]:
    """All residues in [1, p) giving the same unoriented lens space as L(p, q)."""
    if p < 2:
        raise ValueError("orbit needs p >= 2")
    q %= p
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    inv = pow(q, -1, p)
    return tuple(sorted({q, p - q, inv, p - inv}))


@dataclass(frozen=True)
class Lens(Manifold):
    """L(p, q), normalized on construction to the canonical unoriented form."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p = abs(self.p)
        if p < 2:
            raise IllFormedClaimError(
                f"L({self.p},{self.q}) is degenerate; use lens_space() for |p| <= 1"
            )
        q = self.q % p
        if gcd(p, q) != 1:
            raise IllFormedClaimError(f"L({self.p},{self.q}) needs gcd(p, q) = 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", lens_parameter_orbit(p, q)[0])

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


def lens_space(p: int, q: int) -> Manifold:
    """L(p, q) with the degenerate cases folded in: L(0, 1) = S1xS2, L(+-1, q) = S3."""
    if gcd(p, q) != 1:
        raise IllFormedClaimError(f"L({p},{q}) needs gcd(p, q) = 1")
    if p == 0:
        return S1xS2()
    if abs(p) == 1:
        return S3()
    return Lens(p, q)


def lens_homeomorphic(a: Manifold, b: Manifold) -> bool:
    """Whether two lens-space-like manifolds are (unoriented) homeomorphic.

    Both arguments must be Lens, S3, or S1xS2.  Because Lens construction
    already folds q into the canonical orbit representative
    min{+-q^{+-1} mod p}, homeomorphism is exactly normal-form equality.
    """
    for m in (a, b):
        if not isinstance(m, (Lens, S3, S1xS2)):
            raise ValueError(f"not a lens-space-like manifold: {m}")
    return a == b


@dataclass(frozen=True)
class SfsS2(Manifold):
    """Seifert space over S^2 with exact invariants (e; beta1/alpha1, ...)."""

    e: int
    fibers: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        e = self.e
        normalized = []
        for alpha, beta in self.fibers:
            if alpha == 0:
                raise IllFormedClaimError("exceptional fiber with alpha = 0")
            if alpha < 0:
                alpha, beta = -alpha, -beta
            e += beta // alpha
            beta %= alpha
            if gcd(alpha, beta) != 1:
                raise IllFormedClaimError(f"fiber ({alpha},{beta}) needs gcd = 1")
            if alpha > 1:
                normalized.append((alpha, beta))
        if len(normalized) < 3:
            raise IllFormedClaimError(
                "SfsS2 needs at least three exceptional fibers; fewer is lens-type"
            )
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "fibers", tuple(sorted(normalized)))

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(sorted(alpha for alpha, _ in self.fibers))

    def mirror(self) -> "SfsS2":
        return SfsS2(-self.e - len(self.fibers),
                     tuple((a, a - b) for a, b in self.fibers))

    def __str__(self) -> str:
        parts = ", ".join(f"{b}/{a}" for a, b in self.fibers)
        return f"SFS({self.e}; {parts})"


BASE_S2 = "S2"
BASE_D2 = "D2"
BASE_M2 = "M2"

_MIN_ORDER_COUNT = {BASE_S2: 3, BASE_D2: 2, BASE_M2: 1}


@dataclass(frozen=True)
class SfsOrdersOnly(Manifold):
    """A Seifert space known only by base and exceptional-fiber orders."""

    base: str
    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base not in _MIN_ORDER_COUNT:
            raise IllFormedClaimError(f"unknown base {self.base!r}")
        orders = tuple(sorted(self.orders))
        if any(a < 2 for a in orders):
            raise IllFormedClaimError(f"orders must be >= 2, got {self.orders}")
        if len(orders) < _MIN_ORDER_COUNT[self.base]:
            raise IllFormedClaimError(
                f"{self.base} base with {len(orders)} orders has an exact form; "
                "use sfs_orders()"
            )
        object.__setattr__(self, "orders", orders)

    def __str__(self) -> str:
        return f"{self.base}({','.join(str(a) for a in self.orders)})"


def sfs_orders(base: str, orders: tuple[int, ...] | list[int]) -> Manifold:
    """Orders-only Seifert shape, rewriting the degenerate cases exactly.

    Orders equal to 1 are dropped and signs are ignored (only |order|
    matters for an orders-only description); an order of 0 is rejected.
    Degenerate rewrites: a D2 base with <= 1 exceptional fiber is a solid
    torus, an M2 base with none is the twisted piece D2(2, 2), and an S2
    base with <= 2 fibers is only known to be lens-type, which stays
    opaque.
    """
    cleaned = []
    for a in orders:
        a = abs(a)
        if a == 0:
            raise IllFormedClaimError("exceptional fiber of order 0")
        if a > 1:
            cleaned.append(a)
    cleaned.sort()
    if base == BASE_S2 and len(cleaned) < 3:
        return OpaqueTag(TAG_LENS_TYPE)
    if base == BASE_D2 and len(cleaned) < 2:
        return SolidTorus()
    if base == BASE_M2 and not cleaned:
        return SfsOrdersOnly(BASE_D2, (2, 2))
    return SfsOrdersOnly(base, tuple(cleaned))


@dataclass(frozen=True)
class CableSpace(Manifold):
    """C(s, t): the exterior of an (s, t)-curve in a solid torus, t >= 2 strands."""

    s: int
    t: int

    def __post_init__(self) -> None:
        if self.t < 2:
            raise IllFormedClaimError(f"C({self.s},{self.t}) needs t >= 2")
        if gcd(self.s, self.t) != 1:
            raise IllFormedClaimError(f"C({self.s},{self.t}) needs gcd(s, t) = 1")

    def __str__(self) -> str:
        return f"C({self.s},{self.t})"


@dataclass(frozen=True)
class OpaqueTag(Manifold):
    """A manifold known only through qualitative properties (see _TAG_PROPS)."""

    label: str

    def __str__(self) -> str:
        return f"tag({self.label})"


@dataclass(frozen=True)
class ConnSum(Manifold):
    """Connected sum, kept flat, S3-free, and sorted so equality is structural."""

    summands: tuple[Manifold, ...]

    def __post_init__(self) -> None:
        flat: list[Manifold] = []
        for m in self.summands:
            if isinstance(m, ConnSum):
                flat.extend(m.summands)
            elif not isinstance(m, S3):
                flat.append(m)
        if len(flat) < 2:
            raise IllFormedClaimError(
                "ConnSum needs >= 2 nontrivial summands; use connected_sum()"
            )
        object.__setattr__(self, "summands", tuple(sorted(flat, key=_sort_key)))

    def __str__(self) -> str:
        return " # ".join(str(m) for m in self.summands)


def connected_sum(*summands: Manifold) -> Manifold:
    """Connected sum with S3 summands absorbed and singletons unwrapped."""
    flat: list[Manifold] = []
    for m in summands:
        if isinstance(m, ConnSum):
            flat.extend(m.summands)
        elif not isinstance(m, S3):
            flat.append(m)
    if not flat:
        return S3()
    if len(flat) == 1:
        return flat[0]
    return ConnSum(tuple(flat))


@dataclass(frozen=True)
class TorusUnion(Manifold):
    """A union of two or more pieces glued along boundary tori, gluing unspecified."""

    pieces: tuple[Manifold, ...]

    def __post_init__(self) -> None:
        if len(self.pieces) < 2:
            raise IllFormedClaimError("TorusUnion needs >= 2 pieces")
        object.__setattr__(self, "pieces", tuple(sorted(self.pieces, key=_sort_key)))

    def __str__(self) -> str:
        return f"U[{', '.join(str(m) for m in self.pieces)}]"


def torus_union(*pieces: Manifold) -> TorusUnion:
    return TorusUnion(tuple(pieces))


def _sort_key(m: Manifold):
    if isinstance(m, Lens):
        return ("Lens", (m.p, m.q))
    if isinstance(m, SfsS2):
        return ("SfsS2", (m.e,) + m.fibers)
    if isinstance(m, SfsOrdersOnly):
        return ("SfsOrders:" + m.base, m.orders)
    if isinstance(m, CableSpace):
        return ("Cable", (m.s, m.t))
    if isinstance(m, OpaqueTag):
        return ("Tag:" + m.label, ())
    if isinstance(m, ConnSum):
        return ("ConnSum", tuple(_sort_key(s) for s in m.summands))
    if isinstance(m, TorusUnion):
        return ("TorusUnion", tuple(_sort_key(s) for s in m.pieces))
    return (type(m).__name__, ())


# ---------------------------------------------------------------------------
# First homology


@dataclass(frozen=True)
class H1Result:
    """|H1| when finite (free_rank = 0), otherwise the free rank with order None."""

    order: int | None
    free_rank: int = 0

    @classmethod
    def finite(cls, order: int) -> "H1Result":
        return cls(order=order, free_rank=0)

    @classmethod
    def infinite(cls, free_rank: int) -> "H1Result":
        return cls(order=None, free_rank=free_rank)

    @property
    def is_finite(self) -> bool:
        return self.order is not None


def _sfs_s2_h1_order(e: int, fibers: tuple[tuple[int, int], ...]) -> int:
    """|e prod(alpha) + sum_i beta_i prod_{j != i} alpha_j|, 0 meaning infinite H1."""
    prod = 1
    for alpha, _ in fibers:
        prod *= alpha
    total = e * prod
    for i, (alpha, beta) in enumerate(fibers):
        term = beta
        for j, (alpha_j, _) in enumerate(fibers):
            if j != i:
                term *= alpha_j
        total += term
    return abs(total)


def h1(m: Manifold) -> H1Result:
    """First homology for every exact shape; raises on partial descriptions."""
    if isinstance(m, S3):
        return H1Result.finite(1)
    if isinstance(m, Lens):
        return H1Result.finite(m.p)
    if isinstance(m, S1xS2):
        return H1Result.infinite(1)
    if isinstance(m, SolidTorus):
        return H1Result.infinite(1)
    if isinstance(m, T2xI):
        return H1Result.infinite(2)
    if isinstance(m, CableSpace):
        return H1Result.infinite(2)
    if isinstance(m, ZxS1):
        return H1Result.infinite(3)
    if isinstance(m, SfsS2):
        order = _sfs_s2_h1_order(m.e, m.fibers)
        return H1Result.finite(order) if order else H1Result.infinite(1)
    if isinstance(m, ConnSum):
        parts = [h1(s) for s in m.summands]
        rank = sum(r.free_rank for r in parts)
        if rank:
            return H1Result.infinite(rank)
        order = 1
        for r in parts:
            order *= r.order  # type: ignore[operator]
        return H1Result.finite(order)
    raise IndeterminateError(f"h1 is not determined by {m}")


def _h1_or_none(m: Manifold) -> H1Result | None:
    try:
        return h1(m)
    except IndeterminateError:
        return None


# ---------------------------------------------------------------------------
# Reducibility, finite-type classification


def is_reducible(m: Manifold) -> bool:
    """True exactly for connected sums and S1xS2; every other shape is prime."""
    return isinstance(m, (ConnSum, S1xS2))


class FiniteType(Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    TETRAHEDRAL = "tetrahedral"
    OCTAHEDRAL = "octahedral"
    ICOSAHEDRAL = "icosahedral"
    NOT_FINITE = "not_finite"
    UNKNOWN = "unknown"


def spherical_triple_type(orders: tuple[int, int, int]) -> FiniteType:
    """Finite type of a Seifert space over S^2 with the given three orders.

    The triple is spherical iff 1/a + 1/b + 1/c > 1, and the solutions are
    exactly (2, 2, n), (2, 3, 3), (2, 3, 4), (2, 3, 5) up to order.
    """
    a, b, c = sorted(orders)
    if a == 2 and b == 2:
        return FiniteType.DIHEDRAL
    if (a, b) == (2, 3) and c in (3, 4, 5):
        return {3: FiniteType.TETRAHEDRAL,
                4: FiniteType.OCTAHEDRAL,
                5: FiniteType.ICOSAHEDRAL}[c]
    return FiniteType.NOT_FINITE


def classify_finite_type(m: Manifold) -> FiniteType:
    """Fundamental-group finiteness type of a manifold description.

    Partial shapes still classify exactly when the orders pin the answer
    down (a spherical triple of orders forces a nonzero Euler number, so
    no framing data is needed); the lens-type tag is the one genuinely
    unknown case.
    """
    if isinstance(m, (S3, Lens)):
        return FiniteType.CYCLIC
    if isinstance(m, (S1xS2, ConnSum, TorusUnion, SolidTorus, T2xI, CableSpace, ZxS1)):
        return FiniteType.NOT_FINITE
    if isinstance(m, SfsS2):
        orders = m.orders
        if len(orders) != 3:
            return FiniteType.NOT_FINITE
        return spherical_triple_type(orders)  # type: ignore[arg-type]
    if isinstance(m, SfsOrdersOnly):
        if m.base != BASE_S2:
            return FiniteType.NOT_FINITE
        if len(m.orders) != 3:
            return FiniteType.NOT_FINITE
        return spherical_triple_type(m.orders)  # type: ignore[arg-type]
    if isinstance(m, OpaqueTag):
        if _TAG_PROPS.get(m.label, {}).get("toroidal"):
            return FiniteType.NOT_FINITE
        return FiniteType.UNKNOWN
    raise TypeError(f"not a manifold: {m!r}")


# ---------------------------------------------------------------------------
# Three-valued comparison


class Comparison(Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    INDETERMINATE = "indeterminate"


_RIGID = (S3, Lens, SfsS2, S1xS2, SolidTorus, T2xI, CableSpace, ZxS1)


def _is_rigid(m: Manifold) -> bool:
    """Shapes whose normal form is a complete (unoriented) invariant."""
    if isinstance(m, ConnSum):
        return all(_is_rigid(s) for s in m.summands)
    return isinstance(m, _RIGID)


def _is_closed(m: Manifold) -> bool | None:
    if isinstance(m, (S3, Lens, SfsS2, S1xS2)):
        return True
    if isinstance(m, (SolidTorus, T2xI, CableSpace, ZxS1)):
        return False
    if isinstance(m, ConnSum):
        answers = [_is_closed(s) for s in m.summands]
        if any(a is False for a in answers):
            return False
        if all(a is True for a in answers):
            return True
        return None
    if isinstance(m, SfsOrdersOnly):
        return m.base == BASE_S2
    if isinstance(m, OpaqueTag):
        return _TAG_PROPS.get(m.label, {}).get("closed")
    return None  # a torus union may or may not use up all its boundary


def _incompressible_boundary(m: Manifold) -> bool:
    """Pieces whose boundary tori are incompressible (solid tori are not)."""
    if isinstance(m, SfsOrdersOnly):
        return m.base in (BASE_D2, BASE_M2)
    return isinstance(m, (CableSpace, T2xI, ZxS1))


def _is_reducible_known(m: Manifold) -> bool | None:
    if isinstance(m, (ConnSum, S1xS2)):
        return True
    if isinstance(m, (S3, Lens, SfsS2, SolidTorus, T2xI, CableSpace, ZxS1,
                      SfsOrdersOnly)):
        return False
    if isinstance(m, TorusUnion):
        # Irreducible pieces glued along incompressible tori stay irreducible.
        if all(_incompressible_boundary(piece) for piece in m.pieces):
            return False
        return None
    if isinstance(m, OpaqueTag):
        return _TAG_PROPS.get(m.label, {}).get("reducible")
    return None


def _known_prime(m: Manifold) -> bool:
    """True when the description proves the manifold is prime."""
    if isinstance(m, (S3, Lens, SfsS2, S1xS2, SolidTorus, T2xI, CableSpace,
                      ZxS1, SfsOrdersOnly)):
        return True
    if isinstance(m, OpaqueTag):
        return bool(_TAG_PROPS.get(m.label, {}).get("prime"))
    return False


def _is_toroidal(m: Manifold) -> bool | None:
    """Presence of an essential torus, where the description decides it."""
    if isinstance(m, (S3, Lens, S1xS2)):
        return False
    if isinstance(m, SfsS2):
        return len(m.fibers) >= 4 or not h1(m).is_finite
    if isinstance(m, SfsOrdersOnly):
        if m.base == BASE_S2 and len(m.orders) == 3:
            # A spherical triple forces an atoroidal small Seifert space;
            # otherwise the missing Euler number can flip the answer.
            if spherical_triple_type(m.orders) is not FiniteType.NOT_FINITE:  # type: ignore[arg-type]
                return False
            return None
        return None
    if isinstance(m, ConnSum):
        answers = [_is_toroidal(s) for s in m.summands]
        if any(a is True for a in answers):
            return True
        if all(a is False for a in answers):
            return False
        return None
    if isinstance(m, OpaqueTag):
        return _TAG_PROPS.get(m.label, {}).get("toroidal")
    return None


def _compare_conn_sums(m1: ConnSum, m2: ConnSum) -> Comparison:
    """Compare via uniqueness of prime decompositions (summands must biject)."""
    if len(m1.summands) != len(m2.summands):
        return Comparison.DISTINCT
    for perm in itertools.permutations(m2.summands):
        outcomes = [manifold_compare(a, b) for a, b in zip(m1.summands, perm)]
        if all(o is Comparison.EQUAL for o in outcomes):
            return Comparison.EQUAL
        if not any(o is Comparison.DISTINCT for o in outcomes):
            return Comparison.INDETERMINATE
    return Comparison.DISTINCT


def manifold_compare(m1: Manifold, m2: Manifold) -> Comparison:
    """Sound three-valued homeomorphism comparison of two descriptions.

    EQUAL and DISTINCT are only returned when the descriptions prove it;
    partial shapes (orders-only, tags, torus unions) give INDETERMINATE
    whenever the missing data could change the answer.
    """
    if m1 == m2:
        if _is_rigid(m1):
            return Comparison.EQUAL
        # Identical partial descriptions may still denote different manifolds.
        return Comparison.INDETERMINATE

    if isinstance(m1, SfsS2) and isinstance(m2, SfsS2):
        return Comparison.EQUAL if m1.mirror() == m2 else Comparison.DISTINCT

    if _is_rigid(m1) and _is_rigid(m2):
        if isinstance(m1, ConnSum) and isinstance(m2, ConnSum):
            return _compare_conn_sums(m1, m2)
        return Comparison.DISTINCT

    # One side (at least) is partial: run the invariant battery.
    closed1, closed2 = _is_closed(m1), _is_closed(m2)
    if closed1 is not None and closed2 is not None and closed1 != closed2:
        return Comparison.DISTINCT
    red1, red2 = _is_reducible_known(m1), _is_reducible_known(m2)
    if red1 is not None and red2 is not None and red1 != red2:
        return Comparison.DISTINCT
    tor1, tor2 = _is_toroidal(m1), _is_toroidal(m2)
    if tor1 is not None and tor2 is not None and tor1 != tor2:
        return Comparison.DISTINCT
    r1, r2 = _h1_or_none(m1), _h1_or_none(m2)
    if r1 is not None and r2 is not None and r1 != r2:
        return Comparison.DISTINCT

    if isinstance(m1, ConnSum) and isinstance(m2, ConnSum):
        return _compare_conn_sums(m1, m2)
    if isinstance(m1, ConnSum) != isinstance(m2, ConnSum):
        total, single = (m1, m2) if isinstance(m1, ConnSum) else (m2, m1)
        # A sum of >= 2 provably prime pieces cannot be a prime manifold.
        if all(_known_prime(s) for s in total.summands) and _known_prime(single):
            return Comparison.DISTINCT
        return Comparison.INDETERMINATE

    orders1, orders2 = _seifert_s2_orders(m1), _seifert_s2_orders(m2)
    if orders1 is not None and orders2 is not None:
        # Seifert spaces over S^2 with >= 3 fibers have a unique such
        # presentation, so the order multiset is a homeomorphism invariant.
        return Comparison.INDETERMINATE if orders1 == orders2 else Comparison.DISTINCT
    if (orders1 is None) != (orders2 is None):
        if isinstance(m1, (Lens, S3, S1xS2)) or isinstance(m2, (Lens, S3, S1xS2)):
            # Lens-like spaces never fiber over S^2 with >= 3 exceptional fibers.
            return Comparison.DISTINCT

    if isinstance(m1, SfsOrdersOnly) and isinstance(m2, SfsOrdersOnly):
        if m1.base != m2.base or m1.orders != m2.orders:
            # Bounded pieces over D2/M2 with these order counts carry a
            # unique Seifert structure, so base and orders must agree.
            return Comparison.DISTINCT
        return Comparison.INDETERMINATE
    if isinstance(m1, SfsOrdersOnly) or isinstance(m2, SfsOrdersOnly):
        partial, other = (m1, m2) if isinstance(m1, SfsOrdersOnly) else (m2, m1)
        if isinstance(other, (SolidTorus, T2xI, CableSpace, ZxS1)):
            # These atoms are Seifert pieces whose structure differs from
            # any D2/M2 piece with the retained orders.
            return Comparison.DISTINCT

    return Comparison.INDETERMINATE


def _seifert_s2_orders(m: Manifold) -> tuple[int, ...] | None:
    """The >= 3 exceptional orders of an S^2-base Seifert description, if that."""
    if isinstance(m, SfsS2):
        return m.orders
    if isinstance(m, SfsOrdersOnly) and m.base == BASE_S2:
        return m.orders
    return None


def manifold_equal(m1: Manifold, m2: Manifold) -> bool:
    """Two-valued comparison; raises IndeterminateError when undecided."""
    outcome = manifold_compare(m1, m2)
    if outcome is Comparison.INDETERMINATE:
        raise IndeterminateError(f"cannot decide {m1} vs {m2}")
    return outcome is Comparison.EQUAL
