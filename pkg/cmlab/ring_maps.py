#!/usr/bin/env python3
"""Ring homomorphisms between presentations and their verification.

A RingMap sends every source variable to a polynomial on the localized
target ring: the target variables plus one z per inverse witness, with
z*w - 1 adjoined. A map may declare kernel generators and a section
(an inverse map); with a section, verify_hom also checks both composites.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, constr, model_validator

from groebner.buchberger import GroebnerBasis
from idealops.presentation import IdealPresentation, extend_ring, ideal_add, localize, specialize
from polycore.field import CoefficientField
from polycore.monomials import MonomialOrder
from polycore.polynomial import Polynomial
from utils.budget import Deadline

from . import matrices as mx
from .matrices import Ring
from .reports import CheckOutcome, VerificationReport, run_check
from .schemes import SchemeSpec, build_ideal, matrix_names

logger = logging.getLogger(__name__)


class RingMapError(Exception):
    """Raised for ill-formed ring maps."""
    def __init__(self, message: str, code: str = "MAP") -> None:
        super().__init__(message)
        self.code = code


class RingMap(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True, extra="forbid")

    name: constr(min_length=1)
    source: IdealPresentation
    target: IdealPresentation
    images: Dict[str, Polynomial]
    inverse_witnesses: Tuple[Tuple[str, Polynomial], ...] = ()
    kernel: Tuple[Polynomial, ...] = ()
    section: Optional[Dict[str, Polynomial]] = None

    @model_validator(mode="after")
    def _well_formed(self) -> "RingMap":
        src = set(self.source.vars)
        if set(self.images) != src:
            missing = sorted(src - set(self.images))
            extra = sorted(set(self.images) - src)
            raise ValueError(f"images must cover exactly the source variables (missing {missing}, extra {extra})")
        for z, w in self.inverse_witnesses:
            if w.is_zero():
                raise ValueError(f"inverse witness for {z} is zero")
            if z in self.target.vars:
                raise ValueError(f"witness variable {z} clashes with a target variable")
            if w.vars != self.target.vars:
                raise ValueError(f"inverse witness for {z} does not live on the target ring")
        loc = self.localized_target()
        for v, img in self.images.items():
            if img.vars != loc.vars or img.field != loc.field:
                raise ValueError(f"image of {v} does not live on the localized target ring")
        for k in self.kernel:
            if k.vars != self.source.vars:
                raise ValueError("kernel generators must live on the source ring")
        if self.section is not None:
            if set(self.section) != set(loc.vars):
                raise ValueError("section must cover exactly the localized target variables")
            for w, img in self.section.items():
                if img.vars != self.source.vars:
                    raise ValueError(f"section image of {w} does not live on the source ring")
        return self

    def localized_target(self) -> IdealPresentation:
        T = self.target
        if not self.inverse_witnesses:
            return T
        names = [z for z, _ in self.inverse_witnesses]
        big = extend_ring(T, names)
        extra = []
        for z, w in self.inverse_witnesses:
            extra.append(Polynomial.variable(z, big.vars, T.field) * w.rebase(big.vars) - 1)
        return ideal_add(big, extra, f"{T.label}[{','.join(names)}]")

    def apply(self, f: Polynomial) -> Polynomial:
        return f.substitute(self.images, self.localized_target().vars)

    def apply_section(self, f: Polynomial) -> Polynomial:
        if self.section is None:
            raise RingMapError(f"{self.name} has no section")
        return f.substitute(self.section, self.source.vars)


def _nonmembers(polys: List[Tuple[str, Polynomial]], G: GroebnerBasis, deadline: Deadline) -> List[str]:
    bad = []
    for what, f in polys:
        r = G.normal_form(f, deadline)
        if not r.is_zero():
            bad.append(f"{what} -> residue {r}")
    return bad


def verify_hom(
    ring_map: RingMap,
    *,
    order: Optional[MonomialOrder] = None,
    budget_s: Optional[float] = None,
    timing: bool = True,
    params: Optional[dict] = None,
) -> VerificationReport:
    """Check that the map is well defined and that declared kernel generators die.

    With a section the isomorphism relations are checked too:
    section(target ideal) lies in source + kernel, section(phi(v)) - v lies in
    source + kernel for every source variable, and phi(section(w)) - w lies in
    the target ideal for every target variable.
    """
    order = order or MonomialOrder.grevlex()
    M = ring_map
    loc = M.localized_target()
    params = dict(params or {})
    params.setdefault("map", M.name)
    params.setdefault("source", M.source.label)
    params.setdefault("target", loc.label)

    def body(deadline: Deadline) -> CheckOutcome:
        G = loc.groebner(order, deadline)
        if G.is_unit():
            return CheckOutcome(False, f"target {loc.label} is the unit ideal", ["target ideal contains 1"])

        def phi(f: Polynomial) -> Polynomial:
            return f.substitute(M.images, loc.vars)

        checks = [(f"source generator {i + 1} ({g})", phi(g)) for i, g in enumerate(M.source.gens)]
        checks += [(f"kernel generator {i + 1} ({k})", phi(k)) for i, k in enumerate(M.kernel)]
        offending = _nonmembers(checks, G, deadline)
        summary = f"{len(M.source.gens)} source generators and {len(M.kernel)} kernel generators checked against {loc.label}"
        if M.section is not None and not offending:
            S = ideal_add(M.source, list(M.kernel)).groebner(order, deadline)
            back = [(f"section of target generator {i + 1} ({h})", M.apply_section(h)) for i, h in enumerate(loc.gens)]
            back += [
                (f"section(phi({v})) - {v}", M.apply_section(M.images[v]) - M.source.var(v))
                for v in M.source.vars
            ]
            offending += _nonmembers(back, S, deadline)
            there = [
                (f"phi(section({w})) - {w}", phi(M.section[w]) - loc.var(w))
                for w in loc.vars
            ]
            offending += _nonmembers(there, G, deadline)
            summary += "; section verified as inverse modulo kernel"
        if offending:
            return CheckOutcome(False, summary, offending)
        return CheckOutcome(True, summary)

    return run_check(f"hom/{M.name}", params, body, budget_s=budget_s, timing=timing)


def identity_map(I: IdealPresentation) -> RingMap:
    images = {v: I.var(v) for v in I.vars}
    return RingMap(name=f"identity/{I.label}", source=I, target=I, images=images, section=dict(images))


def _ident(ring_vars, names, field) -> Dict[str, Polynomial]:
    return {v: Polynomial.variable(v, ring_vars, field) for v in names}


def lemma27_map(n: int, field: CoefficientField, corrupt: bool = False) -> RingMap:
    """R(n)/(x_in, y_ni) ~ R_tilde(n-1)/(t-1).

    x_ij, y_ij (i, j < n) are kept; y_in -> u_i, x_ni -> v_i, x_nn -> t1,
    y_nn -> t2 and x_in, y_ni -> 0. ``corrupt`` sends x_n1 to v_1 + 1.
    """
    if n < 2:
        raise RingMapError("the map needs n >= 2")
    source = build_ideal(SchemeSpec(family="R", n=n), field)
    target = build_ideal(SchemeSpec(family="R_tilde", n=n - 1, extra=("t=1",)), field)
    T = target.vars
    small = matrix_names("x", n - 1) + matrix_names("y", n - 1)
    images = _ident(T, small, field)
    section = _ident(source.vars, small, field)
    zero = Polynomial.zero(T, field)
    kernel = []
    for i in range(1, n):
        images[f"y{i}{n}"] = target.var(f"u{i}")
        images[f"x{n}{i}"] = target.var(f"v{i}")
        images[f"x{i}{n}"] = zero
        images[f"y{n}{i}"] = zero
        section[f"u{i}"] = source.var(f"y{i}{n}")
        section[f"v{i}"] = source.var(f"x{n}{i}")
        kernel += [source.var(f"x{i}{n}"), source.var(f"y{n}{i}")]
    images[f"x{n}{n}"] = target.var("t1")
    images[f"y{n}{n}"] = target.var("t2")
    section["t1"] = source.var(f"x{n}{n}")
    section["t2"] = source.var(f"y{n}{n}")
    name = f"lemma-2.7/n={n}"
    if corrupt:
        images[f"x{n}1"] = target.var("v1") + 1
        name += "/corrupted"
    return RingMap(name=name, source=source, target=target, images=images, kernel=tuple(kernel), section=section)


def lemma28_map(n: int, field: CoefficientField) -> RingMap:
    """R1(n)[1/f0]/(x_ni) ~ R(n-1)[x_nn, y_nn][1/f0] with f0 = det(X_{n-1} - x_nn I)."""
    if n < 2:
        raise RingMapError("the map needs n >= 2")
    r1 = build_ideal(SchemeSpec(family="R1", n=n), field)
    src_ring = Ring(r1.vars, field)
    f0_src = mx.det(src_ring, mx.shift(mx.symbolic(src_ring, "x", n - 1), src_ring.var(f"x{n}{n}")))
    source, z_src = localize(r1, f0_src, label=f"I1({n})[1/f0]")

    base = build_ideal(SchemeSpec(family="R", n=n - 1), field)
    target = extend_ring(base, [f"x{n}{n}", f"y{n}{n}"], label=f"I({n - 1})[x{n}{n},y{n}{n}]")
    tgt_ring = Ring(target.vars, field)
    f0_tgt = mx.det(tgt_ring, mx.shift(mx.symbolic(tgt_ring, "x", n - 1), tgt_ring.var(f"x{n}{n}")))
    z_tgt = target.vars.fresh_aux()
    witnesses = ((z_tgt, f0_tgt),)
    loc_vars = target.vars.extend([z_tgt])

    kept = matrix_names("x", n - 1) + matrix_names("y", n - 1) + [f"x{n}{n}", f"y{n}{n}"]
    images = _ident(loc_vars, kept, field)
    images[z_src] = Polynomial.variable(z_tgt, loc_vars, field)
    zero = Polynomial.zero(loc_vars, field)
    kernel = []
    for i in range(1, n):
        images[f"x{n}{i}"] = zero
        images[f"y{i}{n}"] = zero
        images[f"y{n}{i}"] = zero
        kernel.append(source.var(f"x{n}{i}"))
    section = _ident(source.vars, kept, field)
    section[z_tgt] = source.var(z_src)
    return RingMap(
        name=f"lemma-2.8/n={n}",
        source=source,
        target=target,
        images=images,
        inverse_witnesses=witnesses,
        kernel=tuple(kernel),
        section=section,
    )


def _lambda_coefficient(ring: Ring, X: mx.PolyMatrix, s: Polynomial) -> Polynomial:
    """Coefficient of lam in det(X - (s - lam) I)."""
    lam_name = "lam"
    big = Ring(ring.vars.extend([lam_name]), ring.field)
    Xb = [[a.rebase(big.vars) for a in r] for r in X]
    shifted = mx.shift(Xb, s.rebase(big.vars) - big.var(lam_name))
    d = mx.det(big, shifted).partial_derivative(lam_name)
    images = {v: ring.var(v) for v in ring.vars}
    images[lam_name] = ring.zero()
    return d.substitute(images, ring.vars)


def lemma44_map(n: int, field: CoefficientField) -> RingMap:
    """Localized isomorphism onto R_tilde(n-1)/(t, w)[x_in, vp_n][1/h, 1/(t1 - x_nn)].

    The source is R2(n) with v = (0, ..., 0, 1), localized at h_1 (t1 - t2),
    where h_1 is the coefficient of lam in det(X - (t2 - lam) I). The inverse
    of X_{n-1} - x_nn I is written as adj(X_{n-1} - x_nn I) * z1 with z1 the
    witness of h = det(X_{n-1} - x_nn I). The section sends t2 to y_nn, v_i
    to vp_i, z1 to z(t1 - t2) and z2 to z h_1.
    """
    if n < 2:
        raise RingMapError("the map needs n >= 2")
    r2 = build_ideal(SchemeSpec(family="R2", n=n), field)
    v_values = {f"v{i}": (1 if i == n else 0) for i in range(1, n + 1)}
    r2v = specialize(r2, v_values, label=f"J2({n})|v=e{n}")
    src_ring = Ring(r2v.vars, field)
    h1 = _lambda_coefficient(src_ring, mx.symbolic(src_ring, "x", n), src_ring.var("t2"))
    source, z_src = localize(r2v, h1 * (src_ring.var("t1") - src_ring.var("t2")), label=f"J2({n})|v=e{n}[1/(h1*(t1-t2))]")

    base = build_ideal(SchemeSpec(family="R_tilde", n=n - 1, extra=("t=0", "add_w")), field)
    target = extend_ring(base, [f"x{i}{n}" for i in range(1, n + 1)] + [f"vp{n}"], label=f"{base.label}[x_in,vp{n}]")
    tgt = Ring(target.vars, field)
    Xs = mx.symbolic(tgt, "x", n - 1)
    xnn = tgt.var(f"x{n}{n}")
    h = mx.det(tgt, mx.shift(Xs, xnn))
    z1 = target.vars.fresh_aux()
    z2 = target.vars.extend([z1]).fresh_aux()
    witnesses = ((z1, h), (z2, tgt.var("t1") - xnn))
    loc = Ring(target.vars.extend([z1, z2]), field)

    def up(p: Polynomial) -> Polynomial:
        return p.rebase(loc.vars)

    Xl = [[up(a) for a in r] for r in Xs]
    Yl = mx.symbolic(loc, "y", n - 1)
    t2 = loc.var("t2")
    xcol = [[loc.var(f"x{i}{n}")] for i in range(1, n)]
    ucol = mx.column(loc, "u", n - 1)
    adj = mx.adjugate(loc, mx.shift(Xl, loc.var(f"x{n}{n}")))
    yprime = mx.add(
        mx.scale(mx.mul(mx.mul(mx.shift(Yl, t2), adj), xcol), loc.var(z1)),
        mx.scale(ucol, loc.var(z2)),
    )

    zero = loc.zero()
    images: Dict[str, Polynomial] = {}
    for i in range(1, n):
        for j in range(1, n):
            images[f"x{i}{j}"] = loc.var(f"x{i}{j}")
            images[f"y{i}{j}"] = loc.var(f"y{i}{j}")
        images[f"x{i}{n}"] = loc.var(f"x{i}{n}")
        images[f"x{n}{i}"] = zero
        images[f"y{i}{n}"] = yprime[i - 1][0]
        images[f"y{n}{i}"] = zero
        images[f"u{i}"] = loc.var(f"u{i}")
        images[f"vp{i}"] = loc.var(f"v{i}")
    images[f"x{n}{n}"] = loc.var(f"x{n}{n}")
    images[f"y{n}{n}"] = t2
    images[f"u{n}"] = zero
    images[f"vp{n}"] = loc.var(f"vp{n}")
    images["t1"] = loc.var("t1")
    images["t2"] = loc.var(f"x{n}{n}")
    images["t3"] = t2
    images[z_src] = loc.var(z1) * loc.var(z2)

    # on the source x_nn = t2 and y_nn = t3, and h1 agrees with h
    S = source.vars
    kept = matrix_names("x", n - 1) + matrix_names("y", n - 1) + [f"x{i}{n}" for i in range(1, n + 1)]
    kept += [f"u{i}" for i in range(1, n)] + [f"vp{n}", "t1"]
    section = _ident(S, kept, field)
    for i in range(1, n):
        section[f"v{i}"] = source.var(f"vp{i}")
    section["t2"] = source.var(f"y{n}{n}")
    zs = source.var(z_src)
    section[z1] = zs * (source.var("t1") - source.var("t2"))
    section[z2] = zs * h1.rebase(S)
    return RingMap(
        name=f"lemma-4.4/n={n}",
        source=source,
        target=target,
        images=images,
        inverse_witnesses=witnesses,
        section=section,
    )
