"""Per-prime ramification certificates for monic integer quintics.

For a prime p and a monic integer quintic f, the question is what the
inertia group at p of the splitting field looks like, and whether the
decomposition group is cyclic.  Four routes are used, recorded as the
certificate's ``method``:

``separability``
    f mod p is separable, so p is unramified.
``valuation-one``
    v_p(disc f) = 1 forces f = (x - r)^2 * (separable cofactor) mod p and
    inertia generated by a transposition.
``dedekind-tame``
    p does not divide the index of Z[x]/(f), so the shape of p in the
    field is read off the factorization of f mod p.
``scaled-reduction``
    Roots are grouped by p-adic distance.  A reduction
    ``N^-1 f(alpha + beta X) mod p`` that is separable of degree k shows
    k roots in the unramified closure; a pair of roots of valuation h/2
    (h odd) is a ramified quadratic pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable

from .arith import factorize, valuation
from .ffield import (
    DegreePattern,
    ModPoly,
    WildPrime,
    dedekind_index_test,
    factor_mod_p,
)
from .poly import UniPoly, discriminant, shift_scale

__all__ = [
    "ScaledReduction",
    "ClusterAnalysis",
    "LocalCertificate",
    "InconclusiveReduction",
    "WildPrime",
    "analyze_clusters",
    "apply_plans",
    "certify_prime",
    "certify_wild",
    "quadratic_ramifies",
    "integral_model",
]

INERTIA_CLASSES = ("unramified", "transposition", "other", "undetermined")


class InconclusiveReduction(ValueError):
    """Neither separability nor any scaled reduction settled the prime."""

    def __init__(self, certificate: "LocalCertificate"):
        super().__init__(f"inconclusive at p = {certificate.prime}")
        self.certificate = certificate


@dataclass(frozen=True)
class ScaledReduction:
    """The polynomial ``normalizer**-1 * f(alpha + beta*X)`` reduced mod p.

    With ``window=(i, j)`` only the coefficients of X^i..X^j are kept, which
    isolates the roots x with v(x) = 0 exactly (one Newton segment).
    """

    alpha: Fraction
    beta: Fraction
    normalizer: Fraction
    window: tuple[int, int] | None = None

    def residual(self, f: UniPoly, p: int) -> ModPoly:
        g = shift_scale(f, self.alpha, self.beta, self.normalizer)
        if any(c.denominator % p == 0 for c in g.coeffs):
            raise ValueError(f"scaled polynomial is not {p}-integral")
        r = ModPoly.from_unipoly(g, p)
        if self.window is not None:
            i, j = self.window
            r = ModPoly(r.coeffs[i : j + 1], p)
        return r

    def rescaled(self, d) -> "ScaledReduction":
        """The same plan for d**5 f(X/d) (roots multiplied by d)."""
        d = Fraction(d)
        return replace(self, alpha=self.alpha * d, beta=self.beta * d, normalizer=self.normalizer * d**5)

    def to_json(self) -> dict:
        out = {"alpha": str(self.alpha), "beta": str(self.beta), "normalizer": str(self.normalizer)}
        if self.window is not None:
            out["window"] = list(self.window)
        return out


def _plan(alpha, beta, normalizer, window=None) -> ScaledReduction:
    return ScaledReduction(Fraction(alpha), Fraction(beta), Fraction(normalizer), window)


@dataclass
class ClusterAnalysis:
    """What is known about the 5 roots of f over Q_p.

    ``unramified`` holds the Frobenius pattern of the roots shown to lie in
    the maximal unramified extension; ``pairs`` counts ramified quadratic
    pairs; ``moved`` counts other roots certainly moved by inertia.
    """

    p: int
    degree: int
    unramified: DegreePattern = field(default_factory=lambda: DegreePattern(()))
    pairs: int = 0
    moved: int = 0
    plans: list[ScaledReduction] = field(default_factory=list)

    @property
    def resolved(self) -> int:
        return self.unramified.total + 2 * self.pairs + self.moved

    @property
    def unresolved(self) -> int:
        return self.degree - self.resolved

    def inertia(self) -> str:
        """One of unramified, transposition, at-most-transposition, other, undetermined."""
        if self.moved or self.pairs > 1:
            return "other"
        if self.unresolved == 0:
            return "transposition" if self.pairs else "unramified"
        if self.pairs == 0 and self.unresolved <= 2:
            return "at-most-transposition"
        return "undetermined"


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    hull: list[tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the chord hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def analyze_clusters(f: UniPoly, p: int, seed: int = 0) -> ClusterAnalysis:
    """Newton-polygon analysis around every repeated root of f mod p.

    Simple irreducible factors of f mod p contribute unramified roots.  For
    a repeated linear factor (X - r)^m the Newton polygon of f(r + X) on
    indices 0..m is split into segments; integer slopes h are examined with
    the reduction ``p^-N f(r + p^h X)`` restricted to the segment, and
    slope h/2 with h odd over a segment of length 2 is a ramified pair.
    Anything else is left unresolved.
    """
    n = f.degree
    out = ClusterAnalysis(p, n)
    fbar = ModPoly.from_unipoly(f, p)
    if fbar.degree != n:
        return out
    for g, m in factor_mod_p(fbar, seed):
        if m == 1:
            out.unramified = out.unramified + DegreePattern.of([(g.degree, 1)])
            continue
        if g.degree > 1:
            continue
        r = (-g.coeffs[0]) % p
        shifted = f.compose_linear(r, 1)
        pts = [(i, valuation(shifted[i], p)) for i in range(m + 1) if shifted[i] != 0]
        if pts[0][0] != 0:
            # f(r) = 0 exactly: a rational root, nothing local to say
            continue
        hull = _lower_hull(pts)
        for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
            length = i2 - i1
            slope = Fraction(v1 - v2, length)
            if slope.denominator == 1:
                h = slope.numerator
                plan = _plan(r, p**h, p ** (v1 + h * i1), (i1, i2))
                res = plan.residual(f, p)
                if res.degree == length and res.is_squarefree():
                    out.unramified = out.unramified + DegreePattern.of(
                        (q.degree, 1) for q, _ in factor_mod_p(res, seed)
                    )
                    out.plans.append(plan)
            elif slope.denominator == 2 and length == 2:
                out.pairs += 1
            else:
                out.moved += length
    return out


def apply_plans(f: UniPoly, p: int, plans: Iterable[ScaledReduction], seed: int = 0) -> ClusterAnalysis:
    """Check user-supplied disc reductions (no window).

    Each plan must reduce to a separable polynomial; its degree is the
    number of roots of f in the disc ``alpha + beta * Z_p``.  Discs must be
    pairwise disjoint.
    """
    plans = list(plans)
    out = ClusterAnalysis(p, f.degree)
    for i, a in enumerate(plans):
        for b in plans[:i]:
            gap = a.alpha - b.alpha
            if gap == 0 or valuation(gap, p) >= min(valuation(a.beta, p), valuation(b.beta, p)):
                raise ValueError("reduction discs overlap")
    for plan in plans:
        res = plan.residual(f, p)
        if res.is_zero() or not res.is_squarefree():
            continue
        pattern = DegreePattern.of((q.degree, 1) for q, _ in factor_mod_p(res, seed)) if res.degree > 0 else DegreePattern(())
        out.unramified = out.unramified + pattern
        out.plans.append(plan)
    return out


def quadratic_ramifies(kernel: int, p: int) -> bool:
    """Whether p ramifies in Q(sqrt(kernel)) for squarefree ``kernel``."""
    if p == 2:
        return kernel % 4 != 1
    return kernel % p == 0


@dataclass(frozen=True)
class LocalCertificate:
    prime: int
    v_disc: int
    inertia_class: str
    residual_pattern: DegreePattern | None
    decomposition_cyclic: bool | None
    obstruction_free: bool | None
    method: str
    plans: tuple[ScaledReduction, ...] = ()
    note: str = ""

    def __post_init__(self):
        if self.inertia_class not in INERTIA_CLASSES:
            raise ValueError(self.inertia_class)
        if self.inertia_class == "unramified":
            assert self.decomposition_cyclic is True and self.obstruction_free is True

    @property
    def ok(self) -> bool:
        """Meets the local hypotheses: unramified, or transposition inertia
        with cyclic decomposition group."""
        return self.inertia_class in ("unramified", "transposition") and bool(self.decomposition_cyclic)

    def to_json(self) -> dict:
        return {
            "prime": str(self.prime),
            "v_disc": self.v_disc,
            "inertia_class": self.inertia_class,
            "residual_pattern": None if self.residual_pattern is None else self.residual_pattern.to_json(),
            "decomposition_cyclic": self.decomposition_cyclic,
            "obstruction_free": self.obstruction_free,
            "method": self.method,
            "plans": [pl.to_json() for pl in self.plans],
            "note": self.note,
        }


def _unramified(p, v, method, pattern=None, plans=(), note="") -> LocalCertificate:
    return LocalCertificate(p, v, "unramified", pattern, True, True, method, tuple(plans), note)


def _transposition(p, v, residual: DegreePattern, method, plans=(), note="") -> LocalCertificate:
    cyclic = not residual.has_even_part()
    if not cyclic:
        note = (note + "; " if note else "") + "decomposition group C2 x C2"
    return LocalCertificate(p, v, "transposition", residual, cyclic, cyclic, method, tuple(plans), note)


def _from_clusters(ca: ClusterAnalysis, v: int, kernel: int | None, method: str) -> LocalCertificate:
    p = ca.p
    verdict = ca.inertia()
    plans = tuple(ca.plans)
    if verdict == "at-most-transposition" and kernel is not None:
        verdict = "transposition" if quadratic_ramifies(kernel, p) else "unramified"
        note = "inertia <= <transposition>; settled by the quadratic subfield"
    else:
        note = ""
    if verdict == "unramified":
        return _unramified(p, v, method, ca.unramified, plans, note)
    if verdict == "transposition":
        if p == 2:
            return LocalCertificate(p, v, "other", ca.unramified, None, None, method, plans,
                                    "transposition inertia at 2 is wild")
        return _transposition(p, v, ca.unramified, method, plans, note)
    if verdict == "other":
        return LocalCertificate(p, v, "other", ca.unramified, None, None, method, plans,
                                "inertia moves more than two roots")
    return LocalCertificate(p, v, "undetermined", None, None, None, method, plans,
                            f"{ca.unresolved} roots unresolved")


def _scaled(f, p, v, plans, kernel, seed) -> LocalCertificate:
    if plans:
        try:
            cert = _from_clusters(apply_plans(f, p, plans, seed), v, kernel, "scaled-reduction")
        except ValueError:
            cert = None
        if cert is not None and cert.inertia_class != "undetermined":
            return cert
    return _from_clusters(analyze_clusters(f, p, seed), v, kernel, "scaled-reduction")


def certify_prime(
    f: UniPoly,
    p: int,
    plans: Iterable[ScaledReduction] = (),
    kernel: int | None = None,
    seed: int = 0,
    disc: int | None = None,
) -> LocalCertificate:
    """Local certificate at a prime p > 5.

    ``kernel`` is the squarefree kernel of disc(f); it lets a reduction that
    pins down three unramified roots decide between unramified and
    transposition inertia.
    """
    if p <= 5:
        raise WildPrime(f"p = {p}; use certify_wild")
    d = discriminant(f) if disc is None else disc
    v = valuation(d, p)
    if v == 0:
        return _unramified(p, 0, "separability", None)
    if v == 1:
        facs = factor_mod_p(ModPoly.from_unipoly(f, p), seed)
        residual = DegreePattern.of((g.degree, 1) for g, m in facs if m == 1)
        return _transposition(p, 1, residual, "valuation-one")
    if dedekind_index_test(f, p, seed):
        facs = factor_mod_p(ModPoly.from_unipoly(f, p), seed)
        residual = DegreePattern.of((g.degree, 1) for g, m in facs if m == 1)
        tame = sum((m - 1) * g.degree for g, m in facs)
        if tame == 1:
            return _transposition(p, v, residual, "dedekind-tame")
        return LocalCertificate(p, v, "other", residual, None, None, "dedekind-tame",
                                note=f"field discriminant valuation {tame}")
    return _scaled(f, p, v, tuple(plans), kernel, seed)


def certify_wild(
    f: UniPoly,
    p: int,
    plans: Iterable[ScaledReduction] = (),
    kernel: int | None = None,
    seed: int = 0,
    disc: int | None = None,
) -> LocalCertificate:
    """Local certificate at p in {2, 3, 5}.

    Raises :class:`InconclusiveReduction` (carrying an undetermined
    certificate) when neither separability nor a reduction decides.
    """
    if p not in (2, 3, 5):
        raise ValueError("certify_wild handles p in {2, 3, 5}")
    d = discriminant(f) if disc is None else disc
    v = valuation(d, p)
    fbar = ModPoly.from_unipoly(f, p)
    if fbar.degree == f.degree and fbar.is_squarefree():
        pattern = DegreePattern.of((g.degree, 1) for g, _ in factor_mod_p(fbar, seed))
        return _unramified(p, v, "separability", pattern)
    cert = _scaled(f, p, v, tuple(plans), kernel, seed)
    if cert.inertia_class == "undetermined":
        raise InconclusiveReduction(cert)
    return cert


def integral_model(f: UniPoly) -> tuple[UniPoly, int]:
    """Monic integer ``g = d**n f(X/d)`` with the least such d > 0.

    ``f`` must be monic.  disc(g) = d**(n(n-1)) disc(f).
    """
    if f.lc() != 1:
        raise ValueError("integral_model expects a monic polynomial")
    n = f.degree
    need: dict[int, int] = {}
    for i, c in enumerate(f.coeffs[:-1]):
        if c.denominator == 1:
            continue
        # d**(n - i) must absorb the denominator
        for q, e in factorize(c.denominator).factors.items():
            need[q] = max(need.get(q, 0), -(-e // (n - i)))
    d = 1
    for q, e in need.items():
        d *= q**e
    return f.scale_roots(d), d
