"""Whole-field certificates for specializations f_{w,s0}.

The pipeline checks, for one quintic, the hypotheses that make the
quadratic field Q(sqrt(disc)) carry an unramified SL2(5)-extension:

* Galois group S5, shown by Frobenius cycle types (3,2) and (5) or (4,1)
  at unramified primes together with the exhaustive generation fact;
* every ramified prime has inertia generated by a transposition;
* every decomposition group is cyclic, so the C2 x C2 obstruction is absent;
* the primes with transposition inertia are exactly the primes that
  ramify in the quadratic subfield (a consistency check on the locals).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .arith import Effort, FactoredInteger, IncompleteFactorization, factorize, primes_up_to, valuation
from .family import (
    COROLLARY_F,
    COROLLARY_W,
    WParam,
    build_poly,
    corollary_s,
    exceptional_plans,
    family_in_s,
    _check_u,
)
from .ffield import DegreePattern, ModPoly, degree_pattern, factor_mod_p
from .local import (
    InconclusiveReduction,
    LocalCertificate,
    ScaledReduction,
    certify_prime,
    certify_wild,
    integral_model,
)
from .perm import verify_32_generation
from .poly import PolyInT, UniPoly, discriminant, discriminant_in_t, squarefree_part, sturm_count

__all__ = [
    "BranchPoint",
    "WitnessNotFound",
    "GaloisCertificate",
    "SpecializationCertificate",
    "galois_s5",
    "exceptional_set",
    "intersection_multiplicity",
    "fundamental_discriminant",
    "certify_specialization",
    "certify_corollary",
]


class BranchPoint(ValueError):
    """s0 = 0 or disc f_{w,s0} = 0."""


class WitnessNotFound(LookupError):
    def __init__(self, msg: str, witnesses: list[tuple[int, DegreePattern]]):
        super().__init__(msg)
        self.witnesses = witnesses


@dataclass(frozen=True)
class GaloisCertificate:
    witnesses: tuple[tuple[int, DegreePattern], ...]
    irreducible_witness: int | None
    group: str
    method: str = "cycle-type witnesses + exhaustive (3,2)/(5),(4,1) generation"

    def to_json(self) -> dict:
        return {
            "witnesses": [{"prime": str(p), "pattern": pat.to_json()} for p, pat in self.witnesses],
            "irreducible_witness": None if self.irreducible_witness is None else str(self.irreducible_witness),
            "group": self.group,
            "method": self.method,
        }


def _pattern_key(pat: DegreePattern) -> tuple[int, ...]:
    return pat.degrees()


def galois_s5(f: UniPoly, bound: int = 2000, seed: int = 0, disc: int | None = None) -> GaloisCertificate:
    """Scan primes p < bound with p not dividing disc(f) for cycle types.

    Stops once a (3,2) pattern, a (5) or (4,1) pattern and a (5) pattern
    (irreducibility) have been seen.  A (3,2) with (4,1) alone already
    forces S5, hence irreducibility; that case is accepted as well.
    """
    if f.degree != 5 or f.lc() != 1 or not f.is_integral():
        raise ValueError("galois_s5 expects a monic integer quintic")
    d = int(discriminant(f)) if disc is None else disc
    if d == 0:
        raise WitnessNotFound("f is not separable", [])
    found: dict[tuple[int, ...], tuple[int, DegreePattern]] = {}
    for p in primes_up_to(bound - 1):
        if d % p == 0:
            continue
        pat = degree_pattern(ModPoly.from_unipoly(f, p), seed)
        key = _pattern_key(pat)
        if key in ((3, 2), (5,), (4, 1)) and key not in found:
            found[key] = (p, pat)
        if (3, 2) in found and (5,) in found:
            break
    seen = list(found.values())
    if (3, 2) not in found or not ((5,) in found or (4, 1) in found):
        raise WitnessNotFound(f"no (3,2) and (5)/(4,1) witnesses below {bound}", seen)
    if not verify_32_generation():
        raise RuntimeError("generation fact failed to verify")
    big = found.get((5,), found.get((4, 1)))
    irr = found[(5,)][0] if (5,) in found else None
    return GaloisCertificate((found[(3, 2)], big), irr, "S5")


@lru_cache(maxsize=64)
def _exceptional_cached(F: PolyInT, group_order: int, effort: Effort | None) -> frozenset[int]:
    F = F.clear_denominators()
    delta = discriminant_in_t(F)
    if delta.is_zero():
        raise ValueError("discriminant vanishes identically")
    lc = int(delta.lc())
    bad = set(factorize(group_order).primes()) | set(factorize(lc, effort).primes())
    radical = squarefree_part(delta)
    radical = UniPoly(c / radical.content() for c in radical.coeffs)
    n_roots = radical.degree
    if n_roots >= 1:
        marker = int(radical.lc()) * (int(discriminant(radical)) if n_roots >= 2 else 1)
        fi = factorize(marker, effort)
        if not fi.complete:
            raise IncompleteFactorization(f"cofactor {fi.cofactor} of lc * disc of the branch radical")
        for p in fi.primes():
            if p in bad:
                continue
            dbar = ModPoly.from_unipoly(delta, p)
            distinct = sum(g.degree for g, _ in factor_mod_p(dbar))
            if distinct < n_roots:
                bad.add(p)
    return frozenset(bad)


def exceptional_set(F: PolyInT, group_order: int = 120, effort: Effort | None = None) -> set[int]:
    """Primes where specialization control can fail.

    p is exceptional if p | group_order, p | lc(Delta) or Delta(t) mod p has
    fewer distinct roots (over the algebraic closure) than Delta(t).  The
    last condition can only hold for p dividing lc * disc of the squarefree
    part of Delta, and those primes are checked one by one by factoring
    Delta mod p.  Raises IncompleteFactorization if that marker cannot be
    factored.
    """
    return set(_exceptional_cached(F, group_order, effort))


def intersection_multiplicity(minpoly: UniPoly | None, t0, p: int) -> int:
    """v_p of the homogenized branch-point polynomial at t0 = a/b.

    ``minpoly=None`` stands for the branch point at infinity, whose
    homogenization is Y, giving v_p(b).
    """
    t0 = Fraction(t0)
    a, b = t0.numerator, t0.denominator
    if minpoly is None:
        return valuation(b, p)
    n = minpoly.degree
    val = sum(int(c) * a**i * b ** (n - i) for i, c in enumerate(minpoly.int_coeffs()))
    if val == 0:
        raise ValueError("t0 is a root of the branch polynomial")
    return valuation(val, p)


def fundamental_discriminant(kernel: int) -> int:
    return kernel if kernel % 4 == 1 else 4 * kernel


@dataclass
class SpecializationCertificate:
    w: Fraction
    s0: Fraction
    f: UniPoly
    model: UniPoly
    scale: int
    disc: int
    disc_factorization: FactoredInteger
    kernel: int | None
    fundamental_disc: int | None
    signature: int
    locals: list[LocalCertificate]
    galois: GaloisCertificate | None
    status: str
    reason: str = ""
    seed: int = 0
    sigma: Fraction | None = None
    extra: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    def local(self, p: int) -> LocalCertificate | None:
        return next((c for c in self.locals if c.prime == p), None)

    @property
    def two_ramified(self) -> bool | None:
        return None if self.fundamental_disc is None else self.fundamental_disc % 2 == 0

    def to_json(self) -> dict:
        fd = self.disc_factorization
        return {
            "w": str(self.w),
            "s0": str(self.s0),
            "sigma": None if self.sigma is None else str(self.sigma),
            "f": [str(c) for c in self.f.coeffs],
            "model": [str(c) for c in self.model.coeffs],
            "scale": str(self.scale),
            "disc": str(self.disc),
            "disc_factorization": {
                "sign": fd.sign,
                "factors": {str(p): e for p, e in sorted(fd.factors.items())},
                "cofactor": str(fd.cofactor),
                "complete": fd.complete,
                "probable": [str(p) for p in sorted(fd.probable)],
            },
            "kernel": None if self.kernel is None else str(self.kernel),
            "fundamental_disc": None if self.fundamental_disc is None else str(self.fundamental_disc),
            "two_ramified": self.two_ramified,
            "signature": {"real_roots": self.signature, "complex_pairs": (5 - self.signature) // 2},
            "locals": [c.to_json() for c in self.locals],
            "galois": None if self.galois is None else self.galois.to_json(),
            "status": self.status,
            "reason": self.reason,
            "seed": str(self.seed),
        }

    def tsv_row(self) -> list[str]:
        status = self.status if not self.reason else f"{self.status}({self.reason})"
        return [
            str(self.w),
            str(self.s0),
            "" if self.kernel is None else str(self.kernel),
            "" if self.fundamental_disc is None else str(self.fundamental_disc),
            str(self.signature),
            status,
        ]


TSV_COLUMNS = ("w", "s0", "disc_kernel", "fundamental_disc", "signature", "status")


def _aggregate(locals_: list[LocalCertificate], kernel: int | None) -> tuple[str, str]:
    for c in locals_:
        if c.inertia_class == "other":
            return "failed", f"inertia at {c.prime} is not generated by a transposition"
        if c.inertia_class == "transposition" and c.decomposition_cyclic is False:
            return "failed", f"non-cyclic decomposition group at {c.prime}"
    for c in locals_:
        if c.inertia_class == "undetermined":
            return "uncertified", f"inertia at {c.prime} undetermined"
    if kernel is None:
        return "uncertified", "discriminant not fully factored"
    transp = {c.prime for c in locals_ if c.inertia_class == "transposition"}
    in_quadratic = {p for p in factorize(kernel).primes() if p != 2}
    if kernel % 4 != 1:
        in_quadratic.add(2)
    if transp != in_quadratic:
        return "failed", "transposition primes differ from primes ramified in the quadratic field"
    return "certified", ""


def _merge_plans(*tables: Mapping[int, Iterable[ScaledReduction]]) -> dict[int, list[ScaledReduction]]:
    out: dict[int, list[ScaledReduction]] = {}
    for t in tables:
        for p, plans in t.items():
            bucket = out.setdefault(p, [])
            bucket.extend(pl for pl in plans if pl not in bucket)
    return out


def certify_specialization(
    w,
    s0,
    *,
    effort: Effort | None = None,
    seed: int = 0,
    witness_bound: int = 2000,
    plans: Mapping[int, Iterable[ScaledReduction]] | None = None,
    extra_primes: Iterable[int] = (),
) -> SpecializationCertificate:
    """Certify f_{w,s0}.  ``plans`` are keyed by prime and refer to f itself;
    they are rescaled to the integral model internally.  ``extra_primes``
    get a local certificate even when they do not divide the discriminant
    (the exceptional set is added automatically for the corollary w)."""
    wp = WParam.of(w)
    s0 = Fraction(s0)
    if s0 == 0:
        raise BranchPoint("s0 = 0")
    f = build_poly(wp, s0)
    g, d = integral_model(f)
    disc = int(discriminant(g))
    if disc == 0:
        raise BranchPoint(f"s0 = {s0} is a branch point")
    sig = sturm_count(g)
    fi = factorize(disc, effort)
    kernel = None
    fund = None
    if fi.complete:
        kernel = fi.sign * math.prod(fi.kernel_primes())
        fund = fundamental_discriminant(kernel)
    table = _merge_plans(exceptional_plans(wp, s0), plans or {})
    scaled = {p: [pl.rescaled(d) for pl in pls] for p, pls in table.items()}
    primes = set(fi.primes()) | {2, 3, 5} | set(extra_primes)
    if wp.w == COROLLARY_W:
        primes |= exceptional_set(COROLLARY_F)
    locals_: list[LocalCertificate] = []
    for p in sorted(primes):
        if p <= 5:
            try:
                cert = certify_wild(g, p, scaled.get(p, ()), kernel, seed, disc)
            except InconclusiveReduction as exc:
                cert = exc.certificate
        else:
            cert = certify_prime(g, p, scaled.get(p, ()), kernel, seed, disc)
        locals_.append(cert)
    try:
        galois = galois_s5(g, witness_bound, seed, disc)
    except WitnessNotFound as exc:
        galois = None
        galois_reason = str(exc)
    status, reason = _aggregate(locals_, kernel)
    if not fi.complete and status != "failed":
        status, reason = "uncertified", f"unfactored cofactor {fi.cofactor}"
    if galois is None and status == "certified":
        status, reason = "uncertified", galois_reason
    sigma = s0 / 27 if wp.w == COROLLARY_W else None
    return SpecializationCertificate(
        w=wp.w, s0=s0, f=f, model=g, scale=d, disc=disc, disc_factorization=fi,
        kernel=kernel, fundamental_disc=fund, signature=sig, locals=locals_,
        galois=galois, status=status, reason=reason, seed=seed, sigma=sigma,
    )


def certify_corollary(u: int, **kwargs) -> SpecializationCertificate:
    """The specialization sigma = 86 u^3 at w = -2/3 (family coordinate s = 2322 u^3)."""
    _check_u(u)
    cert = certify_specialization(COROLLARY_W, corollary_s(u), **kwargs)
    cert.extra["u"] = u
    return cert
