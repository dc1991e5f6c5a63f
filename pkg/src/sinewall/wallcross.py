r"""The sine-power wall-crossing transform and its combinatorial cross-check.

The closed form: with S = sin(u/2)/(u/2) and c the pairing of the curve
class with c1(X),

    sum_g GW_g u^{2g-2}  =  sum_g uGW_g u^{2g-2} S^{2g-2+c},

so GW_h = sum_{g <= h} uGW_g [u^{2(h-g)}] S^{2g-2+c}.  The transform is
triangular with unit diagonal ([u^0] S^k = 1), hence exactly invertible.

The raw form: `correction_raw_sum` rebuilds, per root genus g0, the full
multiplier series from first principles, as a sum over genus partitions in
which each part contributes either a standalone multiplier mu_{g,1} at a
marked point or a bracket insertion mu_{g,0}(-psi + H), the latter
evaluated by stripping psi insertions (dilaton: each removal contributes
-(2 g0 - 2 + #remaining markings)) and then divisor insertions (each
3H + c1 contributes 3(2 g0 - 2) + c).  `verify_raw_equals_closed` asserts
exact coefficientwise agreement of the two routes; the inner coefficient
identity it rests on is exposed separately as `eq_sum`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from itertools import product
from math import comb, factorial
from typing import Iterable, Mapping

from . import hodge
from .partitions import enumerate_threefold_partitions, multinomial, multiplicities
from .series import USeries, exp, log, pow_int, sinc_half


class MissingGenus(ValueError):
    """Raised when an inverse transform meets a gap below g_max."""


class Kind(Enum):
    GW = "gw"
    UGW = "ugw"
    GV = "gv"


@dataclass(frozen=True)
class GenusTable:
    """Per-class invariants indexed by genus.

    Genera above g_max are unknown, not zero.  ``c`` is the pairing of the
    curve class with c1(X) and ``primitive`` records whether the class is
    primitive; both travel with the table unchanged.
    """

    kind: Kind
    c: int
    primitive: bool
    values: Mapping[int, Fraction]
    g_max: int

    def __post_init__(self) -> None:
        if self.g_max < 0:
            raise ValueError("g_max must be nonnegative")
        clean = {}
        for g, v in self.values.items():
            gi = int(g)
            if gi != g:
                raise ValueError(f"genus {g!r} is not an integer")
            if gi < 0 or gi > self.g_max:
                raise ValueError(f"genus {gi} outside 0..{self.g_max}")
            if isinstance(v, float):
                raise ValueError("float values are not exact; pass Fraction or int")
            clean[gi] = Fraction(v)
        object.__setattr__(self, "values", clean)

    def value(self, g: int) -> Fraction:
        """The genus-g entry, with absent genera read as zero."""
        return self.values.get(g, Fraction(0))

    def dense(self) -> dict[int, Fraction]:
        """All genera 0..g_max, absent ones as zero."""
        return {g: self.value(g) for g in range(self.g_max + 1)}


def sine_factor(g: int, c: int, order: int) -> USeries:
    """The multiplier S^(2g - 2 + c) with S = sin(u/2)/(u/2), truncated."""
    if order <= 0:
        return USeries.zero(order)
    return pow_int(sinc_half(order), 2 * g - 2 + c)


def falling_factorial(x, k: int) -> Fraction:
    """x (x-1) ... (x-k+1); equals 1 when k = 0."""
    x = Fraction(x)
    out = Fraction(1)
    for j in range(k):
        out *= x - j
    return out


def eq_sum(m1, m2, order: int) -> USeries:
    r"""The bracket-reduction double sum

        sum_{a1, a2 >= 0} (m2^{a2} / a2!) (ff(m1 - a2, a1) / a1!) t1^{a1} t2^{a2}

    with t1 = S^2 - 1 and t2 = S^2 log S, truncated at ``order``.  It
    collapses to (1 + t1)^{m1} exp(m2 log S) = S^{2 m1 + m2}; the closed
    form is what `verify_eq_sum` tests against.
    """
    if order <= 0:
        return USeries.zero(order)
    m1 = Fraction(m1)
    m2 = Fraction(m2)
    s = sinc_half(order)
    s2 = s * s
    t1 = s2 - USeries.one(order)
    t2 = s2 * log(s)
    amax = (order - 1) // 2  # t1, t2 have valuation 2
    t1_pows = [USeries.one(order)]
    t2_pows = [USeries.one(order)]
    for _ in range(amax):
        t1_pows.append(t1_pows[-1] * t1)
        t2_pows.append(t2_pows[-1] * t2)
    acc = USeries.zero(order)
    for a1 in range(amax + 1):
        for a2 in range(amax + 1 - a1):
            coef = (m2**a2 * Fraction(1, factorial(a2))
                    * falling_factorial(m1 - a2, a1) * Fraction(1, factorial(a1)))
            if coef:
                acc = acc + (t1_pows[a1] * t2_pows[a2]).scale(coef)
    return acc


@dataclass(frozen=True)
class VertexData:
    """Per-genus insertion coefficients feeding the raw wall-crossing sum.

    mu1[g] is the standalone marked-point multiplier mu_{g,1}; mu0_psi[g]
    and mu0_div[g] are the coefficients of -psi and of 3H + c1 in the
    bracket insertion mu_{g,0}(-psi + H).  `standard` fills them from the
    closed forms; tests inject perturbed copies.
    """

    mu1: Mapping[int, Fraction]
    mu0_psi: Mapping[int, Fraction]
    mu0_div: Mapping[int, Fraction]

    @classmethod
    def standard(cls, g_top: int) -> VertexData:
        mu1, psi, div = {}, {}, {}
        for g in range(1, g_top + 1):
            mv = hodge.mu_g0(g)
            mu1[g] = hodge.mu_g1(g)
            psi[g] = mv.a1
            div[g] = mv.a_c1
        return cls(mu1, psi, div)

    def perturbed(self, field: str, genus: int, delta) -> VertexData:
        """Copy with one coefficient shifted by delta (testing hook)."""
        table = dict(getattr(self, field))
        table[genus] = table.get(genus, Fraction(0)) + Fraction(delta)
        return replace(self, **{field: table})


def reduce_bracket(g0: int, n: int, n_psi: int, n_div: int, c: int) -> int:
    """Multiplier from stripping n_psi (-psi) and n_div (3H + c1) insertions.

    The bracket starts with n ordinary markings plus the n_psi + n_div
    insertion markings.  Each psi removal contributes -(2 g0 - 2 + m)
    where m counts the markings remaining after it; each divisor removal
    then contributes 3 (2 g0 - 2) + c.  The base bracket is normalized
    to 1, so the result is a bare multiplier.
    """
    total = 1
    m = n + n_psi + n_div
    for _ in range(n_psi):
        total *= -(2 * g0 - 2 + m - 1)
        m -= 1
    return total * (3 * (2 * g0 - 2) + c) ** n_div


def correction_raw_sum(g0: int, n: int, c: int, order: int,
                       vertex: VertexData | None = None) -> USeries:
    """The wall-crossing multiplier series over the genus-g0 bracket, raw route.

    The u^{2 delta} coefficient sums over all splittings of the added
    genus delta into a marked list g1 (at most n entries, multiplier
    mu_{g,1} each, orbit count C(n, k1) * multinomial over repeats) and an
    insertion list g2 (each entry expanding mu_{g,0}(-psi + H) into its
    -psi and 3H + c1 parts, weighted 1 / prod(repeats!)).  The delta = 0
    coefficient is 1.  Equals S^{2 g0 - 2 + c}; `verify_raw_equals_closed`
    is the arbiter.
    """
    if g0 < 0 or n < 0:
        raise ValueError("g0 and n must be nonnegative")
    if order <= 0:
        return USeries.zero(order)
    dmax = (order - 1) // 2
    if vertex is None:
        vertex = VertexData.standard(dmax)
    else:
        missing = [g for g in range(1, dmax + 1)
                   if g not in vertex.mu1 or g not in vertex.mu0_psi
                   or g not in vertex.mu0_div]
        if missing:
            raise ValueError(f"vertex data lacks genera {missing} needed at order {order}")
    coeffs = [Fraction(0)] * order
    coeffs[0] = Fraction(1)
    for delta in range(1, dmax + 1):
        total = Fraction(0)
        for p in enumerate_threefold_partitions(g0 + delta, n):
            if p.g0 != g0:
                continue
            weight = Fraction(comb(n, p.k1) * multinomial(p.k1, multiplicities(p.g1)))
            for gi in p.g1:
                weight *= vertex.mu1[gi]
            if not weight:
                continue
            symmetry = 1
            for m in multiplicities(p.g2):
                symmetry *= factorial(m)
            bracket = Fraction(0)
            # expand prod_i mu_{g2i,0}(-psi + H) over the 2^k2 part choices
            for pick in product((0, 1), repeat=p.k2):
                coef = Fraction(1)
                for gi, which in zip(p.g2, pick):
                    coef *= vertex.mu0_psi[gi] if which == 0 else vertex.mu0_div[gi]
                if coef:
                    n_psi = pick.count(0)
                    bracket += coef * reduce_bracket(g0, n, n_psi, p.k2 - n_psi, c)
            total += weight * bracket / symmetry
        coeffs[2 * delta] = total
    return USeries(0, coeffs)


@dataclass(frozen=True)
class GridCell:
    """One verification cell: its parameter key and outcome."""

    key: tuple
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class GridReport:
    """Deterministic, lexicographically ordered verification results."""

    name: str
    cells: tuple[GridCell, ...]

    @property
    def passed(self) -> bool:
        return all(cell.passed for cell in self.cells)

    @property
    def first_failure(self) -> GridCell | None:
        return next((cell for cell in self.cells if not cell.passed), None)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({len(self.cells)} cells)"
        if not self.passed:
            bad = self.first_failure
            line += f"; first failure at {bad.key}: {bad.detail}"
        return line


def _first_mismatch(got: USeries, want: USeries, order: int) -> str:
    for k in range(order + 1):
        a, b = got.coefficient(k), want.coefficient(k)
        if a != b:
            return f"u^{k}: got {a}, want {b}"
    return "series metadata differ"


def verify_raw_equals_closed(g0_max: int = 3, n_max: int = 4,
                             c_range: Iterable[int] = range(-2, 7),
                             order: int = 10,
                             vertex: VertexData | None = None) -> GridReport:
    """Check correction_raw_sum == sine_factor on a (g0, n, c) grid.

    Coefficients are compared for every exponent up to ``order``
    inclusive.  Failures become report cells, never exceptions.
    """
    internal = order + 1
    cs = sorted(set(int(c) for c in c_range))
    cells = []
    for g0 in range(g0_max + 1):
        for n in range(n_max + 1):
            for c in cs:
                raw = correction_raw_sum(g0, n, c, internal, vertex)
                closed = sine_factor(g0, c, internal)
                ok = raw == closed
                detail = "" if ok else _first_mismatch(raw, closed, order)
                cells.append(GridCell((g0, n, c), ok, detail))
    return GridReport("raw-sum vs closed-form multiplier", tuple(cells))


def verify_eq_sum(m1_range: Iterable[int] = range(-6, 1),
                  m2_range: Iterable[int] = range(-6, 13),
                  order: int = 12) -> GridReport:
    """Check eq_sum(m1, m2) == (1 + t1)^{m1} exp(m2 log S) on a grid.

    Coefficients are compared through exponent ``order`` inclusive.
    """
    internal = order + 1
    s = sinc_half(internal)
    ls = log(s)
    s2 = s * s
    cells = []
    for m1 in sorted(set(int(m) for m in m1_range)):
        closed_m1 = pow_int(s2, m1)
        for m2 in sorted(set(int(m) for m in m2_range)):
            closed = closed_m1 * exp(ls.scale(m2))
            got = eq_sum(m1, m2, internal)
            ok = got == closed
            detail = "" if ok else _first_mismatch(got, closed, order)
            cells.append(GridCell((m1, m2), ok, detail))
    return GridReport("bracket-reduction sum vs closed form", tuple(cells))


def gw_from_ugw(t: GenusTable, order: int | None = None) -> GenusTable:
    """Forward transform: GW_h = sum_{g <= h} uGW_g [u^{2(h-g)}] S^{2g-2+c}.

    Absent genera are read as zero.  The result is dense on 0..g_max.
    """
    if t.kind is not Kind.UGW:
        raise ValueError(f"gw_from_ugw expects a uGW table, got {t.kind.value}")
    order = max(order or 0, 2 * t.g_max + 2)
    factors = {g: sine_factor(g, t.c, order) for g in range(t.g_max + 1)}
    out = {}
    for h in range(t.g_max + 1):
        out[h] = sum((t.value(g) * factors[g].coefficient(2 * (h - g))
                      for g in range(h + 1)), Fraction(0))
    return GenusTable(Kind.GW, t.c, t.primitive, out, t.g_max)


def ugw_from_gw(t: GenusTable, order: int | None = None) -> GenusTable:
    """Inverse transform: the unique uGW table mapping to t under gw_from_ugw.

    The transform is triangular with unit diagonal, so inversion is exact.
    Genera below the minimal present genus are taken as exact zeros; a gap
    between that genus and g_max raises MissingGenus.
    """
    if t.kind is not Kind.GW:
        raise ValueError(f"ugw_from_gw expects a GW table, got {t.kind.value}")
    out = {g: Fraction(0) for g in range(t.g_max + 1)}
    if t.values:
        g_min = min(t.values)
        gaps = [g for g in range(g_min, t.g_max + 1) if g not in t.values]
        if gaps:
            raise MissingGenus(f"genera {gaps} absent below g_max={t.g_max}")
        order = max(order or 0, 2 * t.g_max + 2)
        factors = {g: sine_factor(g, t.c, order) for g in range(t.g_max + 1)}
        for h in range(g_min, t.g_max + 1):
            acc = t.values[h]
            for g in range(h):
                if out[g]:
                    acc -= out[g] * factors[g].coefficient(2 * (h - g))
            out[h] = acc
    return GenusTable(Kind.UGW, t.c, t.primitive, out, t.g_max)
