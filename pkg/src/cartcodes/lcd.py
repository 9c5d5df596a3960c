"""Deciding the linear-complementary-dual (LCD) property.

For one-dimensional point sets the decision is exact and fast: run the
extended Euclidean algorithm on the set's vanishing polynomial L and the
code's associated polynomial H, and read the answer off the remainder
degrees.  Two independent brute-force routes (Gram-matrix rank and an
explicit intersection of the code with its dual) back every analytic
verdict; product grids additionally get the one-directional component
criteria.

A note on the remainder-degree rule: the gap criterion says the code of
degree k fails to be LCD exactly when n - k falls strictly between two
consecutive remainder degrees of the sequence g_0 = L, g_1 = H, ...,
g_{t+1} = 1.  Since deg g_0 = n, the admissible values of n - k are exactly
the degrees of g_1, ..., g_{t+1} — including the top gap between deg H and
n, which matters whenever deg H < n - 1 (reachable: the coefficient of
X^(n-1) in H is the sum of the squared scalars, which can vanish).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .codes import (
    CartesianSpec,
    LinearCode,
    dimension_formula,
    generator_matrix,
    min_distance_formula,
)
from .errors import InconsistencyError
from .field import Field, FieldElement
from .linalg import (
    Matrix,
    _gram_vals,
    _intersection_vals,
    _nullspace_vals,
    _rref_vals,
)
from .multipoly import CartesianSet, MPoly, lagrange_point
from .unipoly import EeaResult, Poly, eea_sequence, lagrange_term, vanishing_poly

LCD = "lcd"
NOT_LCD = "not-lcd"
UNKNOWN = "unknown"
INAPPLICABLE = "inapplicable"


@dataclass
class LcdReport:
    """Outcome of one LCD decision.

    ``witness`` is a basis of the intersection of the code with its dual;
    it is present and nonempty exactly when the code is not LCD and the
    decision ran through the linear-algebra route.
    """

    spec: CartesianSpec
    is_lcd: bool
    method: str  # "eea" | "gram" | "intersection" | "product-theorem"
    witness: Optional[Matrix] = None
    eea_degrees: Optional[frozenset] = None
    trivial_range: bool = False

    def to_json(self) -> dict:
        out = {
            "k": self.spec.k,
            "n": self.spec.n,
            "components": self.spec.cset.to_json(),
            "scalars": [v.to_json() for v in self.spec.scalars],
            "lcd": self.is_lcd,
            "method": self.method,
        }
        if self.eea_degrees is not None:
            out["eea_degrees"] = sorted(self.eea_degrees)
        if self.witness is not None and self.witness.nrows:
            out["witness"] = self.witness.to_json()
        if self.trivial_range:
            out["full_space"] = True
        return out


@dataclass(frozen=True)
class CartesianScalars:
    """Per-component scalar vectors and their product vector on the grid.

    The product entry at a grid point is the product of the component
    scalars picked out by that point's coordinates, in grid point order.
    """

    component_vectors: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self):
        for vec in self.component_vectors:
            if not vec:
                raise ValueError("component scalar vectors must be non-empty")
            if any(v.val == 0 for v in vec):
                raise ValueError("component scalars must be nonzero")

    @property
    def product_vector(self) -> tuple[FieldElement, ...]:
        out = []
        for combo in itertools.product(*self.component_vectors):
            acc = combo[0]
            for v in combo[1:]:
                acc = acc * v
            out.append(acc)
        return tuple(out)


def cartesian_scalars(
    component_vectors: Sequence[Sequence[FieldElement]],
) -> tuple[FieldElement, ...]:
    return CartesianScalars(
        tuple(tuple(vec) for vec in component_vectors)
    ).product_vector


# -- the univariate (generalized Reed-Solomon) criterion ------------------------


class PointSetData:
    """Per-point-set polynomials, reusable across many scalar vectors:
    the vanishing polynomial L and the single-point Lagrange factors."""

    __slots__ = ("points", "L", "lagrange_terms")

    def __init__(self, points: Sequence[FieldElement]):
        self.points = tuple(points)
        self.L = vanishing_poly(self.points)
        self.lagrange_terms = tuple(lagrange_term(self.points, a) for a in self.points)

    def associated_poly(self, scalars: Sequence[FieldElement]) -> Poly:
        if len(scalars) != len(self.points):
            raise ValueError("need one scalar per point")
        if any(v.val == 0 for v in scalars):
            raise ValueError("scalars must be nonzero")
        field = self.points[0].field
        acc = [field.zero] * len(self.points)
        for term, v in zip(self.lagrange_terms, scalars):
            v2 = v * v
            for i, c in enumerate(term.coeffs):
                if c.val:
                    acc[i] = acc[i] + v2 * c
        return Poly(field, acc)


def associated_poly_univariate(
    points: Sequence[FieldElement], scalars: Sequence[FieldElement]
) -> Poly:
    """H(X) = sum of v_i^2 * L_{a_i}(X): the unique polynomial of degree < n
    interpolating v_i^2 * L'(a_i) on the point set.  Coprime to the set's
    vanishing polynomial because it vanishes nowhere on the set."""
    return PointSetData(points).associated_poly(scalars)


class UnivariateLcdAnalysis:
    """Everything the remainder-degree criterion needs for one (A, v) pair.

    Shares the Euclidean sequence across all degrees k, which is what makes
    scanning a k-range (or a whole search) cheap.  Pass ``set_data`` when
    scanning many scalar vectors over one point set.
    """

    def __init__(
        self,
        points: Sequence[FieldElement],
        scalars: Sequence[FieldElement],
        set_data: PointSetData | None = None,
    ):
        if set_data is None:
            set_data = PointSetData(points)
        self.points = set_data.points
        self.scalars = tuple(scalars)
        self.n = len(self.points)
        self.L = set_data.L
        self.H = set_data.associated_poly(self.scalars)
        self.eea: EeaResult = eea_sequence(self.L, self.H)
        self.remainder_degrees = self.eea.remainder_degrees()

    def admissible_codimensions(self) -> frozenset:
        """All values of n - k for which the degree-k code is LCD: exactly
        the remainder degrees of g_1, ..., g_{t+1}."""
        return frozenset(self.remainder_degrees)

    def is_lcd(self, k: int) -> bool:
        """Gap rule: LCD iff no row has deg g_i < n - k < deg g_{i-1}."""
        if k < 1:
            raise ValueError("degree k must be positive")
        if k > self.n:
            return True  # full-space code; the dual is zero
        r = self.n - k
        degs = [self.n] + self.remainder_degrees
        gap_verdict = all(
            degs[i - 1] <= r or degs[i] >= r for i in range(1, len(degs))
        )
        member_verdict = r in self.admissible_codimensions()
        if gap_verdict != member_verdict:
            raise InconsistencyError(
                f"gap rule and degree-set rule disagree at k={k}: "
                f"{gap_verdict} vs {member_verdict} (degrees {self.remainder_degrees})"
            )
        return gap_verdict

    def lcd_degrees(self) -> list[int]:
        """All k in 1..n giving an LCD code (k = n is the full space)."""
        return [k for k in range(1, self.n + 1) if self.is_lcd(k)]


def lcd_admissible_set(
    points: Sequence[FieldElement], scalars: Sequence[FieldElement]
) -> frozenset:
    return UnivariateLcdAnalysis(points, scalars).admissible_codimensions()


def is_lcd_univariate(
    points: Sequence[FieldElement],
    scalars: Sequence[FieldElement],
    k: int,
    analysis: UnivariateLcdAnalysis | None = None,
) -> LcdReport:
    """Decide LCD for the degree-k code on a one-dimensional point set."""
    if analysis is None:
        analysis = UnivariateLcdAnalysis(points, scalars)
    spec = CartesianSpec.univariate(points, scalars, k)
    return LcdReport(
        spec=spec,
        is_lcd=analysis.is_lcd(k),
        method="eea",
        eea_degrees=analysis.admissible_codimensions(),
        trivial_range=spec.trivial_range,
    )


# -- brute force (any number of components) --------------------------------------


def is_lcd_bruteforce(spec: CartesianSpec, code: LinearCode | None = None) -> LcdReport:
    """Decide LCD by linear algebra alone.

    Runs both brute-force routes — rank of the Gram matrix G G^T, and an
    explicit basis of the intersection of the code with its dual (the dual
    realized as the nullspace of G) — and insists they agree.
    """
    if code is None:
        code = generator_matrix(spec)
    G = code.generator
    field = G.field
    g_vals = G._val_rows()
    gram_lcd = (
        len(_rref_vals(field, _gram_vals(field, g_vals), G.nrows)) == code.dimension
    )
    parity = _nullspace_vals(field, [row[:] for row in g_vals], G.ncols)
    inter = _intersection_vals(field, g_vals, parity, G.ncols)
    intersection_lcd = not inter
    if gram_lcd != intersection_lcd:
        raise InconsistencyError(
            f"Gram rank says lcd={gram_lcd} but intersection says "
            f"lcd={intersection_lcd} for {spec!r}"
        )
    return LcdReport(
        spec=spec,
        is_lcd=intersection_lcd,
        method="gram" if intersection_lcd else "intersection",
        witness=None
        if intersection_lcd
        else Matrix._from_vals(field, inter, G.ncols),
        trivial_range=spec.trivial_range,
    )


# -- multivariate associated polynomial and product criteria ----------------------


def associated_poly_multivariate(
    aset: CartesianSet, scalars: Sequence[FieldElement]
) -> MPoly:
    """H(X_1, ..., X_m) = sum of v_i^2 * L_{a_i}(X): per-variable degrees
    below the component sizes, value v_i^2 * L_{a_i}(a_i) at each point."""
    if len(scalars) != aset.size:
        raise ValueError("need one scalar per grid point")
    if any(v.val == 0 for v in scalars):
        raise ValueError("scalars must be nonzero")
    H = MPoly.zero(aset.field, aset.nvars)
    for point, v in zip(aset.points, scalars):
        H = H + lagrange_point(aset, point).scale(v * v)
    return H


def is_lcd_product_sufficient(
    components: Sequence[tuple[Sequence[FieldElement], Sequence[FieldElement]]],
    k: int,
) -> str:
    """One-directional product test: if every component code of degree
    t <= min(k, n_i) is LCD, the degree-k code on the product grid (with
    the product scalars) is LCD.  Returns "lcd" or "unknown" — never
    "not-lcd", because the condition is only sufficient.

    The degree range is inclusive of min(k, n_i): a failing product of
    degree k yields a failing component of degree (deg_{X_i} f) + 1, which
    can reach min(k, n_i).  An exclusive bound would wrongly fire for k = 1
    whenever some component's squared scalars sum to zero.
    """
    if k < 1:
        raise ValueError("degree k must be positive")
    for points, scalars in components:
        analysis = UnivariateLcdAnalysis(points, scalars)
        for t in range(1, min(k, len(points)) + 1):
            if not analysis.is_lcd(t):
                return UNKNOWN
    return LCD


def not_lcd_product(
    components: Sequence[
        tuple[Sequence[FieldElement], Sequence[FieldElement], int]
    ],
) -> str:
    """One-directional product test: if every component code of degree t_i
    is not LCD, the degree sum(t_i) code on the product grid is not LCD.

    Returns "not-lcd" when the hypothesis holds, else "unknown".  (The
    hypothesis used is the all-components one that the argument actually
    needs, not the weaker one-component phrasing.)
    """
    if not components:
        raise ValueError("need at least one component")
    for points, scalars, t in components:
        if t < 1:
            raise ValueError("component degrees must be at least 1")
        if UnivariateLcdAnalysis(points, scalars).is_lcd(t):
            return UNKNOWN
    return NOT_LCD


def lcd_necessity_check(
    components: Sequence[tuple[Sequence[FieldElement], Sequence[FieldElement]]],
    k: int,
) -> str:
    """Oracle form of the necessity direction: for k below every component
    size, a product code that brute force declares LCD must have every
    component code of degree k LCD.  A violation is an internal error, not
    a result.  Returns the product verdict, or "inapplicable"."""
    sizes = [len(points) for points, _ in components]
    if k >= min(sizes):
        return INAPPLICABLE
    grid = CartesianSet([list(points) for points, _ in components])
    product = cartesian_scalars([list(scalars) for _, scalars in components])
    spec = CartesianSpec(grid, product, k)
    verdict = is_lcd_bruteforce(spec)
    if verdict.is_lcd:
        for points, scalars in components:
            if not UnivariateLcdAnalysis(points, scalars).is_lcd(k):
                raise InconsistencyError(
                    "product code is LCD but a component of the same degree "
                    f"is not (k={k})"
                )
    return LCD if verdict.is_lcd else NOT_LCD


# -- search ------------------------------------------------------------------------


@dataclass
class SearchRecord:
    report: LcdReport
    n: int
    dim: int
    d: int
    mds: bool

    def to_json(self) -> dict:
        out = self.report.to_json()
        out.update({"dim": self.dim, "d": self.d, "mds": self.mds})
        return out


@dataclass
class SearchTruncation:
    examined: int
    budget: int

    def to_json(self) -> dict:
        return {"truncated": True, "examined": self.examined, "budget": self.budget}


def _scalar_vectors(
    field: Field, n: int, policy: str, seed: int
) -> Iterator[tuple[FieldElement, ...]]:
    one = field.one
    if policy == "ones":
        yield (one,) * n
        return
    nonzero = [e for e in field.elements() if e.val != 0]
    if policy == "exhaustive":
        # Quotient by global scaling: fix the first scalar to 1.
        for tail in itertools.product(nonzero, repeat=n - 1):
            yield (one, *tail)
        return
    if policy.startswith("random:"):
        count = int(policy.split(":", 1)[1])
        rng = random.Random(f"{seed}:{n}:{field.order}")
        for _ in range(count):
            yield (one, *(rng.choice(nonzero) for _ in range(n - 1)))
        return
    raise ValueError(f"unknown scalar policy {policy!r}")


def search_lcd(
    field: Field,
    m: int,
    sizes: Sequence[int],
    k_values: Sequence[int],
    scalar_policy: str = "ones",
    budget: int = 10_000,
    seed: int = 0,
) -> Iterator[SearchRecord | SearchTruncation]:
    """Enumerate candidate codes in deterministic order and report each one.

    Component sets are drawn from the field in lexicographic order of their
    sorted element encodings; scalars follow the policy ("ones",
    "exhaustive" mod global scaling, or "random:N" seeded).  One-dimensional
    candidates are decided by the Euclidean criterion, others by brute
    force.  The stream ends with a truncation marker if the budget runs out
    before the enumeration does.
    """
    if m < 1:
        raise ValueError("need at least one component")
    elements = field.elements()
    examined = 0
    component_choices = [
        [list(combo) for size in sizes for combo in itertools.combinations(elements, size)]
    ] * m
    for grid_combo in itertools.product(*component_choices):
        grid = CartesianSet([list(comp) for comp in grid_combo])
        analyses: dict[tuple, UnivariateLcdAnalysis] = {}
        for scalars in _scalar_vectors(field, grid.size, scalar_policy, seed):
            for k in k_values:
                if examined >= budget:
                    yield SearchTruncation(examined, budget)
                    return
                examined += 1
                spec = CartesianSpec(grid, scalars, k)
                if m == 1:
                    analysis = analyses.get(scalars)
                    if analysis is None:
                        analysis = UnivariateLcdAnalysis(grid.components[0], scalars)
                        analyses[scalars] = analysis
                    report = is_lcd_univariate(
                        grid.components[0], scalars, k, analysis=analysis
                    )
                else:
                    report = is_lcd_bruteforce(spec)
                dim = dimension_formula(spec)
                d, _ = min_distance_formula(spec)
                yield SearchRecord(
                    report=report,
                    n=spec.n,
                    dim=dim,
                    d=d,
                    mds=d == spec.n - dim + 1,
                )
