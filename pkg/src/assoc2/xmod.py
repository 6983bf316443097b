"""Crossed modules over associative algebras: the strict case.

A crossed module is a triple (h, p, f): an associative algebra p, a
p-bimodule h, and an equivariant map f : h -> p with f(a).b = a.f(b)
(both sides read through the actions).  Strict two-term algebras (l3 = 0)
and crossed modules determine each other, and the whole graded apparatus
has a strict mirror here: representations (V, W, phi), semidirect
products, a two-term cochain complex with seven cocycle families,
deformations with Nijenhuis pairs, and abelian extensions classified by
the second cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra2 import (
    AssocAlgebra,
    Bimodule,
    TwoTermAlgebra,
    TwoTermComplex,
    _assoc_residuals,
    _bimodule_residuals,
    check_algebra,
    require_algebra,
)
from .exactlin import Matrix, kernel_basis, rank, solve
from .poly import Poly, T
from .report import CheckReport, Violation, report_from
from .tensorops import bil, unit, vadd, vsub, vzero, tensor2, tzip, zeros2


@dataclass
class CrossedModule:
    p_alg: AssocAlgebra
    h_mod: Bimodule
    f_map: Matrix  # h -> p

    @property
    def pdim(self) -> int:
        return self.p_alg.dim

    @property
    def hdim(self) -> int:
        return self.h_mod.dim


def crossed_module_residuals(x: CrossedModule, structure: bool = True):
    """All defining identities on basis tuples.

    With ``structure`` the associativity of p and the bimodule axioms of h
    are included; they are preconditions of the definition but take part in
    deformed-structure checks on an equal footing.
    """
    if structure:
        yield from _assoc_residuals(x.p_alg)
        yield from _bimodule_residuals(x.h_mod)
    np_, nh = x.pdim, x.hdim
    e = [unit(np_, i) for i in range(np_)]
    fb = [unit(nh, a) for a in range(nh)]
    fcol = [x.f_map.col(a) for a in range(nh)]
    for i in range(np_):
        for a in range(nh):
            yield (
                "equiv-l",
                (i, a),
                x.f_map @ x.h_mod.left[i][a],
                x.p_alg.product(e[i], fcol[a]),
            )
            yield (
                "equiv-r",
                (a, i),
                x.f_map @ x.h_mod.right[a][i],
                x.p_alg.product(fcol[a], e[i]),
            )
    for a in range(nh):
        for b in range(nh):
            yield (
                "peiffer",
                (a, b),
                bil(x.h_mod.left, fcol[a], fb[b]),
                bil(x.h_mod.right, fb[a], fcol[b]),
            )


def check_crossed_module(x: CrossedModule) -> CheckReport:
    return report_from(crossed_module_residuals(x))


def require_crossed_module(x: CrossedModule) -> None:
    check_crossed_module(x).require("crossed module axioms fail")


# ---------------------------------------------------------------------------
# correspondence with strict two-term algebras
# ---------------------------------------------------------------------------

def algebra_to_crossed_module(g: TwoTermAlgebra) -> CrossedModule:
    """Strict two-term algebra -> crossed module.  Rejects nonzero l3."""
    require_algebra(g)
    if any(x != 0 for plane in g.l3 for row in plane for cell in row for x in cell):
        raise ValueError("algebra is not strict: l3 != 0")
    p = AssocAlgebra(g.dim0, g.l2_00)
    h = Bimodule(p, g.dim1, g.l2_01, g.l2_10)
    return CrossedModule(p, h, g.complex.diff)


def crossed_module_to_algebra(x: CrossedModule) -> TwoTermAlgebra:
    from .algebra2 import zeros3

    return TwoTermAlgebra(
        TwoTermComplex(x.pdim, x.hdim, x.f_map),
        x.p_alg.mul,
        x.h_mod.left,
        x.h_mod.right,
        zeros3(x.pdim, x.pdim, x.pdim, x.hdim),
    )


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

@dataclass
class XModRepresentation:
    xm: CrossedModule
    v_mod: Bimodule   # over xm.p_alg
    w_mod: Bimodule   # over xm.p_alg
    phi: Matrix       # V -> W
    tr_l: tuple       # h x W -> V, written a |> w
    tr_r: tuple       # W x h -> V, written w <| a

    @property
    def vdim(self) -> int:
        return self.v_mod.dim

    @property
    def wdim(self) -> int:
        return self.w_mod.dim


def xmod_representation_residuals(r: XModRepresentation, structure: bool = True):
    x = r.xm
    np_, nh = x.pdim, x.hdim
    nv, nw = r.vdim, r.wdim
    if structure:
        for cond, where, lhs, rhs in _bimodule_residuals(r.v_mod):
            yield "V-" + cond, where, lhs, rhs
        for cond, where, lhs, rhs in _bimodule_residuals(r.w_mod):
            yield "W-" + cond, where, lhs, rhs
    e = [unit(np_, i) for i in range(np_)]
    ha = [unit(nh, a) for a in range(nh)]
    vv = [unit(nv, s) for s in range(nv)]
    ww = [unit(nw, s) for s in range(nw)]
    fcol = [x.f_map.col(a) for a in range(nh)]
    phicol = [r.phi.col(s) for s in range(nv)]

    for i in range(np_):
        for s in range(nv):
            yield "XR01", (i, s), r.phi @ r.v_mod.left[i][s], bil(r.w_mod.left, e[i], phicol[s])
            yield "XR02", (s, i), r.phi @ r.v_mod.right[s][i], bil(r.w_mod.right, phicol[s], e[i])
    for a in range(nh):
        for s in range(nw):
            yield "XR03", (s, a), r.phi @ r.tr_r[s][a], bil(r.w_mod.right, ww[s], fcol[a])
            yield "XR04", (a, s), r.phi @ r.tr_l[a][s], bil(r.w_mod.left, fcol[a], ww[s])
        for s in range(nv):
            yield "XR05", (a, s), bil(r.v_mod.left, fcol[a], vv[s]), bil(r.tr_l, ha[a], phicol[s])
            yield "XR06", (s, a), bil(r.tr_r, phicol[s], ha[a]), bil(r.v_mod.right, vv[s], fcol[a])
    for i in range(np_):
        for a in range(nh):
            for s in range(nw):
                yield (
                    "XR07",
                    (i, s, a),
                    bil(r.tr_r, r.w_mod.left[i][s], ha[a]),
                    bil(r.v_mod.left, e[i], r.tr_r[s][a]),
                )
                yield (
                    "XR08",
                    (s, i, a),
                    bil(r.tr_r, r.w_mod.right[s][i], ha[a]),
                    bil(r.tr_r, ww[s], x.h_mod.left[i][a]),
                )
                yield (
                    "XR09",
                    (i, a, s),
                    bil(r.tr_l, x.h_mod.left[i][a], ww[s]),
                    bil(r.v_mod.left, e[i], r.tr_l[a][s]),
                )
                yield (
                    "XR10",
                    (s, a, i),
                    bil(r.v_mod.right, r.tr_r[s][a], e[i]),
                    bil(r.tr_r, ww[s], x.h_mod.right[a][i]),
                )
                yield (
                    "XR11",
                    (a, i, s),
                    bil(r.tr_l, x.h_mod.right[a][i], ww[s]),
                    bil(r.tr_l, ha[a], r.w_mod.left[i][s]),
                )
                yield (
                    "XR12",
                    (a, s, i),
                    bil(r.v_mod.right, r.tr_l[a][s], e[i]),
                    bil(r.tr_l, ha[a], r.w_mod.right[s][i]),
                )


def check_xmod_representation(r: XModRepresentation) -> CheckReport:
    require_crossed_module(r.xm)
    return report_from(xmod_representation_residuals(r))


def require_xmod_representation(r: XModRepresentation) -> None:
    check_xmod_representation(r).require("crossed-module representation axioms fail")


def xmod_adjoint(x: CrossedModule) -> XModRepresentation:
    """(V, W, phi) = (h, p, f) with a |> w = a.w and w <| a = w.a."""
    require_crossed_module(x)
    p = x.p_alg
    return XModRepresentation(
        xm=x,
        v_mod=x.h_mod,
        w_mod=p.regular_bimodule(),
        phi=x.f_map,
        tr_l=x.h_mod.right,
        tr_r=x.h_mod.left,
    )


def xmod_trivial_representation(x: CrossedModule, nv: int, nw: int) -> XModRepresentation:
    p = x.p_alg
    return XModRepresentation(
        xm=x,
        v_mod=Bimodule(p, nv, zeros2(p.dim, nv, nv), zeros2(nv, p.dim, nv)),
        w_mod=Bimodule(p, nw, zeros2(p.dim, nw, nw), zeros2(nw, p.dim, nw)),
        phi=Matrix.zero(nw, nv),
        tr_l=zeros2(x.hdim, nw, nv),
        tr_r=zeros2(nw, x.hdim, nv),
    )


# ---------------------------------------------------------------------------
# semidirect product
# ---------------------------------------------------------------------------

def semidirect_product(x: CrossedModule, r: XModRepresentation) -> CrossedModule:
    """(h + V, p + W, f + phi) with the action-twisted products."""
    require_crossed_module(x)
    require_xmod_representation(r)
    np_, nh, nv, nw = x.pdim, x.hdim, r.vdim, r.wdim
    NP, NH = np_ + nw, nh + nv

    def splitp(v):
        return v[:np_], v[np_:]

    def splith(v):
        return v[:nh], v[nh:]

    def pmul(i, j):
        xg, wg = splitp(unit(NP, i))
        yg, wg2 = splitp(unit(NP, j))
        return tuple(x.p_alg.product(xg, yg)) + tuple(
            vadd(bil(r.w_mod.left, xg, wg2), bil(r.w_mod.right, wg, yg))
        )

    def hleft(i, a):
        xg, wg = splitp(unit(NP, i))
        ag, vg = splith(unit(NH, a))
        return tuple(bil(x.h_mod.left, xg, ag)) + tuple(
            vadd(bil(r.v_mod.left, xg, vg), bil(r.tr_r, wg, ag))
        )

    def hright(a, i):
        ag, vg = splith(unit(NH, a))
        xg, wg = splitp(unit(NP, i))
        return tuple(bil(x.h_mod.right, ag, xg)) + tuple(
            vadd(bil(r.v_mod.right, vg, xg), bil(r.tr_l, ag, wg))
        )

    p_alg = AssocAlgebra(NP, tensor2(NP, NP, pmul))
    h_mod = Bimodule(p_alg, NH, tensor2(NP, NH, hleft), tensor2(NH, NP, hright))
    fcols = [tuple(x.f_map.col(a)) + (Fraction(0),) * nw for a in range(nh)]
    fcols += [(Fraction(0),) * np_ + tuple(r.phi.col(s)) for s in range(nv)]
    f_map = Matrix.from_cols(fcols, NP)
    return CrossedModule(p_alg, h_mod, f_map)


# ---------------------------------------------------------------------------
# cochain complex
# ---------------------------------------------------------------------------

@dataclass
class XCochain1:
    n0: Matrix  # p -> W
    n1: Matrix  # h -> V


@dataclass
class XCochain2:
    psi: Matrix   # h -> W
    omega: tuple  # p x p -> W
    mu: tuple     # p x h -> V
    nu: tuple     # h x p -> V

    def __sub__(self, other):
        return XCochain2(
            self.psi - other.psi,
            tzip(lambda a, b: a - b, self.omega, other.omega),
            tzip(lambda a, b: a - b, self.mu, other.mu),
            tzip(lambda a, b: a - b, self.nu, other.nu),
        )

    def __add__(self, other):
        return XCochain2(
            self.psi + other.psi,
            tzip(lambda a, b: a + b, self.omega, other.omega),
            tzip(lambda a, b: a + b, self.mu, other.mu),
            tzip(lambda a, b: a + b, self.nu, other.nu),
        )


def xmod_zero_cochain2(x: CrossedModule, r: XModRepresentation) -> XCochain2:
    return XCochain2(
        Matrix.zero(r.wdim, x.hdim),
        zeros2(x.pdim, x.pdim, r.wdim),
        zeros2(x.pdim, x.hdim, r.vdim),
        zeros2(x.hdim, x.pdim, r.vdim),
    )


def xmod_d1_apply(x: CrossedModule, r: XModRepresentation, c: XCochain1) -> XCochain2:
    """psi = phi N1 - N0 f;  omega = N0(x).y + x.N0(y) - N0(x.y);
    mu = N0(x)<|a + x.N1(a) - N1(x.a);  nu = N1(a).x + a|>N0(x) - N1(a.x)."""
    np_, nh = x.pdim, x.hdim
    e = [unit(np_, i) for i in range(np_)]
    ha = [unit(nh, a) for a in range(nh)]
    n0col = [c.n0.col(i) for i in range(np_)]
    n1col = [c.n1.col(a) for a in range(nh)]

    psi = Matrix.from_cols(
        [vsub(r.phi @ n1col[a], c.n0 @ x.f_map.col(a)) for a in range(nh)], r.wdim
    )
    omega = tensor2(
        np_, np_,
        lambda i, j: vadd(
            bil(r.w_mod.right, n0col[i], e[j]),
            vsub(bil(r.w_mod.left, e[i], n0col[j]), c.n0 @ x.p_alg.mul[i][j]),
        ),
    )
    mu = tensor2(
        np_, nh,
        lambda i, a: vadd(
            bil(r.tr_r, n0col[i], ha[a]),
            vsub(bil(r.v_mod.left, e[i], n1col[a]), c.n1 @ x.h_mod.left[i][a]),
        ),
    )
    nu = tensor2(
        nh, np_,
        lambda a, i: vadd(
            bil(r.v_mod.right, n1col[a], e[i]),
            vsub(bil(r.tr_l, ha[a], n0col[i]), c.n1 @ x.h_mod.right[a][i]),
        ),
    )
    return XCochain2(psi, omega, mu, nu)


def xmod_d2_residual_blocks(x: CrossedModule, r: XModRepresentation, c: XCochain2):
    """The seven cocycle families:

      xcoc1 (x,a):   psi(x.a) + phi(mu(x,a)) - x.psi(a) - omega(x, f(a))
      xcoc2 (a,x):   psi(a.x) + phi(nu(a,x)) - omega(f(a), x) - psi(a).x
      xcoc3 (a,b):   psi(a)<|b + mu(f(a), b) - a|>psi(b) - nu(a, f(b))
      xcoc4 (x,y,z): omega(x, y.z) - omega(x.y, z) + x.omega(y,z)
                     - omega(x,y).z
      xcoc5 (x,y,a): x.mu(y,a) + mu(x, y.a) - omega(x,y)<|a - mu(x.y, a)
      xcoc6 (a,x,y): a|>omega(x,y) + nu(a, x.y) - nu(a,x).y - nu(a.x, y)
      xcoc7 (x,a,y): x.nu(a,y) + mu(x, a.y) - nu(x.a, y) - mu(x,a).y
    """
    np_, nh = x.pdim, x.hdim
    e = [unit(np_, i) for i in range(np_)]
    ha = [unit(nh, a) for a in range(nh)]
    fcol = [x.f_map.col(a) for a in range(nh)]
    psicol = [c.psi.col(a) for a in range(nh)]

    for i in range(np_):
        for a in range(nh):
            res = vadd(
                c.psi @ x.h_mod.left[i][a],
                r.phi @ c.mu[i][a],
                vsub(vzero(r.wdim), bil(r.w_mod.left, e[i], psicol[a])),
                vsub(vzero(r.wdim), bil(c.omega, e[i], fcol[a])),
            )
            yield "xcoc1", (i, a), res
            res = vadd(
                c.psi @ x.h_mod.right[a][i],
                r.phi @ c.nu[a][i],
                vsub(vzero(r.wdim), bil(c.omega, fcol[a], e[i])),
                vsub(vzero(r.wdim), bil(r.w_mod.right, psicol[a], e[i])),
            )
            yield "xcoc2", (a, i), res
    for a in range(nh):
        for b in range(nh):
            res = vadd(
                bil(r.tr_r, psicol[a], ha[b]),
                bil(c.mu, fcol[a], ha[b]),
                vsub(vzero(r.vdim), bil(r.tr_l, ha[a], psicol[b])),
                vsub(vzero(r.vdim), bil(c.nu, ha[a], fcol[b])),
            )
            yield "xcoc3", (a, b), res
    for i in range(np_):
        for j in range(np_):
            xy = x.p_alg.mul[i][j]
            for k in range(np_):
                res = vadd(
                    vsub(bil(c.omega, e[i], x.p_alg.mul[j][k]), bil(c.omega, xy, e[k])),
                    vsub(bil(r.w_mod.left, e[i], c.omega[j][k]), bil(r.w_mod.right, c.omega[i][j], e[k])),
                )
                yield "xcoc4", (i, j, k), res
            for a in range(nh):
                res = vadd(
                    bil(r.v_mod.left, e[i], c.mu[j][a]),
                    vsub(bil(c.mu, e[i], x.h_mod.left[j][a]), bil(r.tr_r, c.omega[i][j], ha[a])),
                    vsub(vzero(r.vdim), bil(c.mu, xy, ha[a])),
                )
                yield "xcoc5", (i, j, a), res
                res = vadd(
                    bil(r.tr_l, ha[a], c.omega[i][j]),
                    vsub(bil(c.nu, ha[a], xy), bil(r.v_mod.right, c.nu[a][i], e[j])),
                    vsub(vzero(r.vdim), bil(c.nu, x.h_mod.right[a][i], e[j])),
                )
                yield "xcoc6", (a, i, j), res
                res = vadd(
                    bil(r.v_mod.left, e[i], c.nu[a][j]),
                    vsub(bil(c.mu, e[i], x.h_mod.right[a][j]), bil(c.nu, x.h_mod.left[i][a], e[j])),
                    vsub(vzero(r.vdim), bil(r.v_mod.right, c.mu[i][a], e[j])),
                )
                yield "xcoc7", (i, a, j), res


def xmod_d2_residual(x: CrossedModule, r: XModRepresentation, c: XCochain2) -> tuple:
    out = []
    for _, _, res in xmod_d2_residual_blocks(x, r, c):
        out.extend(res)
    return tuple(out)


def xmod_cocycle_report(x: CrossedModule, r: XModRepresentation, c: XCochain2) -> CheckReport:
    def residuals():
        for fam, where, res in xmod_d2_residual_blocks(x, r, c):
            yield fam, where, tuple(res), vzero(len(res))

    return report_from(residuals())


def xmod_cochain1_dim(x: CrossedModule, r: XModRepresentation) -> int:
    return r.wdim * x.pdim + r.vdim * x.hdim


def xmod_cochain2_dim(x: CrossedModule, r: XModRepresentation) -> int:
    return (
        r.wdim * x.hdim
        + x.pdim * x.pdim * r.wdim
        + x.pdim * x.hdim * r.vdim
        + x.hdim * x.pdim * r.vdim
    )


def xmod_flatten1(c: XCochain1) -> tuple:
    return tuple(v for row in c.n0.entries for v in row) + tuple(
        v for row in c.n1.entries for v in row
    )


def xmod_unflatten1(x: CrossedModule, r: XModRepresentation, flat) -> XCochain1:
    flat = list(flat)
    nw, np_, nv, nh = r.wdim, x.pdim, r.vdim, x.hdim
    if len(flat) != nw * np_ + nv * nh:
        raise ValueError("flattened one-cochain has wrong length")
    n0 = Matrix(tuple(tuple(flat[i * np_ : (i + 1) * np_]) for i in range(nw)), np_)
    rest = flat[nw * np_ :]
    n1 = Matrix(tuple(tuple(rest[i * nh : (i + 1) * nh]) for i in range(nv)), nh)
    return XCochain1(n0, n1)


def xmod_flatten2(c: XCochain2) -> tuple:
    out = []
    for a in range(c.psi.cols):
        out.extend(c.psi.col(a))
    for row in c.omega:
        for cell in row:
            out.extend(cell)
    for row in c.mu:
        for cell in row:
            out.extend(cell)
    for row in c.nu:
        for cell in row:
            out.extend(cell)
    return tuple(out)


def xmod_unflatten2(x: CrossedModule, r: XModRepresentation, flat) -> XCochain2:
    flat = list(flat)
    pos = 0

    def take(k):
        nonlocal pos
        chunk = flat[pos : pos + k]
        pos += k
        return chunk

    psi = Matrix.from_cols([take(r.wdim) for _ in range(x.hdim)], r.wdim)
    omega = tensor2(x.pdim, x.pdim, lambda i, j: take(r.wdim))
    mu = tensor2(x.pdim, x.hdim, lambda i, a: take(r.vdim))
    nu = tensor2(x.hdim, x.pdim, lambda a, i: take(r.vdim))
    if pos != len(flat):
        raise ValueError("flattened two-cochain has wrong length")
    return XCochain2(psi, omega, mu, nu)


@dataclass
class XModCoboundaryMatrices:
    d1: Matrix
    d2: Matrix


def xmod_assemble_matrices(x: CrossedModule, r: XModRepresentation) -> XModCoboundaryMatrices:
    require_crossed_module(x)
    require_xmod_representation(r)
    dim1 = xmod_cochain1_dim(x, r)
    dim2 = xmod_cochain2_dim(x, r)
    d1_cols = [
        xmod_flatten2(xmod_d1_apply(x, r, xmod_unflatten1(x, r, unit(dim1, k))))
        for k in range(dim1)
    ]
    d1 = Matrix.from_cols(d1_cols, dim2)
    d2_cols = [
        xmod_d2_residual(x, r, xmod_unflatten2(x, r, unit(dim2, k))) for k in range(dim2)
    ]
    rows2 = len(d2_cols[0]) if dim2 else 0
    d2 = Matrix.from_cols(d2_cols, rows2)
    if not (d2 @ d1).is_zero():
        raise ValueError("d2 . d1 != 0 for this crossed-module representation")
    return XModCoboundaryMatrices(d1, d2)


@dataclass
class XModCohomologyResult:
    dim_z2: int
    dim_b2: int
    dim_h2: int
    representatives: list[XCochain2]


def xmod_second_cohomology(x: CrossedModule, r: XModRepresentation) -> XModCohomologyResult:
    mats = xmod_assemble_matrices(x, r)
    ker = kernel_basis(mats.d2)
    dim_z2 = ker.dim
    dim_b2 = rank(mats.d1)
    dim_h2 = dim_z2 - dim_b2
    image_cols = [mats.d1.col(k) for k in range(mats.d1.cols)]
    chosen: list[tuple] = []
    current = list(image_cols)
    current_rank = rank(Matrix(tuple(current), mats.d1.rows)) if current else 0
    for v in ker.basis:
        if len(chosen) == dim_h2:
            break
        cand = Matrix(tuple(current) + (v,), mats.d1.rows)
        if rank(cand) > current_rank:
            chosen.append(v)
            current.append(v)
            current_rank += 1
    return XModCohomologyResult(dim_z2, dim_b2, dim_h2, [xmod_unflatten2(x, r, v) for v in chosen])


def xmod_is_coboundary(x: CrossedModule, r: XModRepresentation, c: XCochain2):
    mats = xmod_assemble_matrices(x, r)
    sol = solve(mats.d1, xmod_flatten2(c))
    if sol is None:
        return None
    pre = xmod_unflatten1(x, r, sol)
    if xmod_flatten2(xmod_d1_apply(x, r, pre)) != xmod_flatten2(c):
        raise AssertionError("primitive failed exact re-application")
    return pre


# ---------------------------------------------------------------------------
# deformations and Nijenhuis pairs
# ---------------------------------------------------------------------------

def xmod_deform(x: CrossedModule, c: XCochain2, param) -> CrossedModule:
    """The deformed crossed module over a scalar (a number or the
    polynomial parameter): f + t.psi, products and actions + t.(omega|mu|nu)."""
    lin = lambda base, pert: tzip(lambda b, p: b + param * p, base, pert)
    p_alg = AssocAlgebra(x.pdim, lin(x.p_alg.mul, c.omega))
    h_mod = Bimodule(p_alg, x.hdim, lin(x.h_mod.left, c.mu), lin(x.h_mod.right, c.nu))
    f_map = Matrix(lin(x.f_map.entries, c.psi.entries), x.hdim)
    return CrossedModule(p_alg, h_mod, f_map)


@dataclass
class XModGeneratesVerdict:
    cocycle_ok: bool
    standalone_ok: bool
    cocycle_violations: list[Violation]
    standalone_violations: list[Violation]

    @property
    def generates(self) -> bool:
        return self.cocycle_ok and self.standalone_ok


def xmod_check_generates(x: CrossedModule, c: XCochain2) -> XModGeneratesVerdict:
    """Coefficient extraction on the deformed structure: linear coefficients
    vanish iff c is a cocycle in the adjoint representation, quadratic ones
    iff (h, p, psi) with omega, mu, nu is itself a crossed module."""
    require_crossed_module(x)
    deformed = xmod_deform(x, c, T)
    coc: list[Violation] = []
    standalone: list[Violation] = []
    for cond, where, lhs, rhs in crossed_module_residuals(deformed):
        for idx, entry in enumerate(vsub(lhs, rhs)):
            poly = entry if isinstance(entry, Poly) else Poly((entry,))
            if poly.coeff(0) != 0:
                raise AssertionError("base crossed-module axioms leaked a constant term")
            if poly.coeff(1) != 0:
                coc.append(Violation(cond, where + (idx,), (poly.coeff(1),), (Fraction(0),)))
            if poly.coeff(2) != 0:
                standalone.append(Violation(cond, where + (idx,), (poly.coeff(2),), (Fraction(0),)))
            if poly.degree > 2:
                raise AssertionError("residual degree exceeds 2")
    return XModGeneratesVerdict(not coc, not standalone, coc, standalone)


def xmod_structure_from_cochain(x: CrossedModule, c: XCochain2) -> CrossedModule:
    p_alg = AssocAlgebra(x.pdim, c.omega)
    h_mod = Bimodule(p_alg, x.hdim, c.mu, c.nu)
    return CrossedModule(p_alg, h_mod, c.psi)


def xmod_nijenhuis_residuals(x: CrossedModule, n0: Matrix, n1: Matrix):
    np_, nh = x.pdim, x.hdim
    e = [unit(np_, i) for i in range(np_)]
    ha = [unit(nh, a) for a in range(nh)]
    n0col = [n0.col(i) for i in range(np_)]
    n1col = [n1.col(a) for a in range(nh)]
    dotp = lambda i, j: vsub(
        vadd(x.p_alg.product(n0col[i], e[j]), x.p_alg.product(e[i], n0col[j])),
        n0 @ x.p_alg.mul[i][j],
    )
    dotl = lambda i, a: vsub(
        vadd(bil(x.h_mod.left, n0col[i], ha[a]), bil(x.h_mod.left, e[i], n1col[a])),
        n1 @ x.h_mod.left[i][a],
    )
    dotr = lambda a, i: vsub(
        vadd(bil(x.h_mod.right, n1col[a], e[i]), bil(x.h_mod.right, ha[a], n0col[i])),
        n1 @ x.h_mod.right[a][i],
    )
    for a in range(nh):
        yield "i", (a,), x.f_map @ n1col[a], n0 @ x.f_map.col(a)
    for i in range(np_):
        for j in range(np_):
            yield "ii", (i, j), n0 @ dotp(i, j), x.p_alg.product(n0col[i], n0col[j])
        for a in range(nh):
            yield "iii", (i, a), n1 @ dotl(i, a), bil(x.h_mod.left, n0col[i], n1col[a])
            yield "iv", (a, i), n1 @ dotr(a, i), bil(x.h_mod.right, n1col[a], n0col[i])


def xmod_check_nijenhuis(x: CrossedModule, n0: Matrix, n1: Matrix) -> CheckReport:
    require_crossed_module(x)
    return report_from(xmod_nijenhuis_residuals(x, n0, n1))


def xmod_nijenhuis_deformation(x: CrossedModule, n0: Matrix, n1: Matrix) -> XCochain2:
    """The exact two-cochain d1(N0, N1) in the adjoint representation."""
    return xmod_d1_apply(x, xmod_adjoint(x), XCochain1(n0, n1))


def xmod_homomorphism_residuals(src: CrossedModule, dst: CrossedModule, f0: Matrix, f1: Matrix):
    np_, nh = src.pdim, src.hdim
    f0col = [f0.col(i) for i in range(np_)]
    f1col = [f1.col(a) for a in range(nh)]
    for a in range(nh):
        yield "hom-f", (a,), dst.f_map @ f1col[a], f0 @ src.f_map.col(a)
    for i in range(np_):
        for j in range(np_):
            yield "hom-alg", (i, j), f0 @ src.p_alg.mul[i][j], dst.p_alg.product(f0col[i], f0col[j])
        for a in range(nh):
            yield "hom-left", (i, a), f1 @ src.h_mod.left[i][a], bil(dst.h_mod.left, f0col[i], f1col[a])
            yield "hom-right", (a, i), f1 @ src.h_mod.right[a][i], bil(dst.h_mod.right, f1col[a], f0col[i])


def xmod_check_trivializing(x: CrossedModule, c: XCochain2, n0: Matrix, n1: Matrix) -> CheckReport:
    """(id + t N0, id + t N1) must be a strict homomorphism from the
    deformed structure to the base, identically in the parameter."""
    deformed = xmod_deform(x, c, T)
    t0 = Matrix(tzip(lambda i, v: i + T * v, Matrix.identity(x.pdim).entries, n0.entries), x.pdim)
    t1 = Matrix(tzip(lambda i, v: i + T * v, Matrix.identity(x.hdim).entries, n1.entries), x.hdim)
    violations: list[Violation] = []
    for cond, where, lhs, rhs in xmod_homomorphism_residuals(deformed, x, t0, t1):
        for idx, entry in enumerate(vsub(lhs, rhs)):
            poly = entry if isinstance(entry, Poly) else Poly((entry,))
            for k in range(poly.degree + 1):
                if poly.coeff(k) != 0:
                    violations.append(Violation(cond, where + (idx, k), (poly.coeff(k),), (Fraction(0),)))
    return CheckReport(violations).sorted()


# ---------------------------------------------------------------------------
# abelian extensions
# ---------------------------------------------------------------------------

@dataclass
class XModExtension:
    total: CrossedModule
    base: CrossedModule
    subw: tuple[int, ...]  # W coordinates inside total.p
    subv: tuple[int, ...]  # V coordinates inside total.h
    p0: Matrix             # total.p -> base.p
    p1: Matrix             # total.h -> base.h
    sigma0: Matrix         # base.p -> total.p
    sigma1: Matrix         # base.h -> total.h

    @property
    def wdim(self) -> int:
        return len(self.subw)

    @property
    def vdim(self) -> int:
        return len(self.subv)

    def inclw(self, v):
        out = [Fraction(0)] * self.total.pdim
        for pos, idx in enumerate(self.subw):
            out[idx] = v[pos]
        return tuple(out)

    def inclv(self, v):
        out = [Fraction(0)] * self.total.hdim
        for pos, idx in enumerate(self.subv):
            out[idx] = v[pos]
        return tuple(out)

    def restrictw(self, v):
        return tuple(v[idx] for idx in self.subw)

    def restrictv(self, v):
        return tuple(v[idx] for idx in self.subv)


def check_xmod_extension(e: XModExtension) -> CheckReport:
    violations: list[Violation] = []

    def flag(cond, where, lhs, rhs):
        if lhs != rhs:
            violations.append(Violation(cond, where, tuple(lhs), tuple(rhs)))

    require_crossed_module(e.total)
    require_crossed_module(e.base)
    nP, nH = e.total.pdim, e.total.hdim
    bP, bH = e.base.pdim, e.base.hdim
    for cond, where, lhs, rhs in xmod_homomorphism_residuals(e.total, e.base, e.p0, e.p1):
        if lhs != rhs:
            violations.append(Violation("proj-" + cond, where, lhs, rhs))
    for s in range(e.wdim):
        flag("exactW", (s,), e.p0 @ e.inclw(unit(e.wdim, s)), vzero(bP))
    for s in range(e.vdim):
        flag("exactV", (s,), e.p1 @ e.inclv(unit(e.vdim, s)), vzero(bH))
    if rank(e.p0) != bP or nP - rank(e.p0) != e.wdim:
        violations.append(Violation("exactW-rank", (), (rank(e.p0),), (bP,)))
    if rank(e.p1) != bH or nH - rank(e.p1) != e.vdim:
        violations.append(Violation("exactV-rank", (), (rank(e.p1),), (bH,)))
    from .tensorops import tflat

    flag("split0", (), tflat((e.p0 @ e.sigma0).entries), tflat(Matrix.identity(bP).entries))
    flag("split1", (), tflat((e.p1 @ e.sigma1).entries), tflat(Matrix.identity(bH).entries))
    # abelian kernel: W.W = 0, W acts trivially on V
    for s in range(e.wdim):
        ws = e.inclw(unit(e.wdim, s))
        for t in range(e.wdim):
            flag("abelian-WW", (s, t), e.total.p_alg.product(ws, e.inclw(unit(e.wdim, t))), vzero(nP))
        for t in range(e.vdim):
            vt = e.inclv(unit(e.vdim, t))
            flag("abelian-WV", (s, t), bil(e.total.h_mod.left, ws, vt), vzero(nH))
            flag("abelian-VW", (t, s), bil(e.total.h_mod.right, vt, ws), vzero(nH))
    return CheckReport(violations).sorted()


def require_xmod_extension(e: XModExtension) -> None:
    check_xmod_extension(e).require("crossed-module extension invariants fail")


def xmod_extract_representation(e: XModExtension) -> XModRepresentation:
    require_xmod_extension(e)
    b = e.base
    nP, nH = b.pdim, b.hdim
    s0 = [e.sigma0.col(i) for i in range(nP)]
    s1 = [e.sigma1.col(a) for a in range(nH)]
    t = e.total
    wv = [e.inclw(unit(e.wdim, s)) for s in range(e.wdim)]
    vv = [e.inclv(unit(e.vdim, s)) for s in range(e.vdim)]

    v_mod = Bimodule(
        b.p_alg,
        e.vdim,
        tensor2(nP, e.vdim, lambda i, s: e.restrictv(bil(t.h_mod.left, s0[i], vv[s]))),
        tensor2(e.vdim, nP, lambda s, i: e.restrictv(bil(t.h_mod.right, vv[s], s0[i]))),
    )
    w_mod = Bimodule(
        b.p_alg,
        e.wdim,
        tensor2(nP, e.wdim, lambda i, s: e.restrictw(t.p_alg.product(s0[i], wv[s]))),
        tensor2(e.wdim, nP, lambda s, i: e.restrictw(t.p_alg.product(wv[s], s0[i]))),
    )
    phi = Matrix.from_cols([e.restrictw(t.f_map @ vv[s]) for s in range(e.vdim)], e.wdim)
    tr_l = tensor2(nH, e.wdim, lambda a, s: e.restrictv(bil(t.h_mod.right, s1[a], wv[s])))
    tr_r = tensor2(e.wdim, nH, lambda s, a: e.restrictv(bil(t.h_mod.left, wv[s], s1[a])))
    return XModRepresentation(b, v_mod, w_mod, phi, tr_l, tr_r)


def xmod_extract_cocycle(e: XModExtension) -> XCochain2:
    require_xmod_extension(e)
    b = e.base
    nP, nH = b.pdim, b.hdim
    t = e.total
    s0 = [e.sigma0.col(i) for i in range(nP)]
    s1 = [e.sigma1.col(a) for a in range(nH)]
    psi = Matrix.from_cols(
        [e.restrictw(vsub(t.f_map @ s1[a], e.sigma0 @ b.f_map.col(a))) for a in range(nH)],
        e.wdim,
    )
    omega = tensor2(
        nP, nP, lambda i, j: e.restrictw(vsub(t.p_alg.product(s0[i], s0[j]), e.sigma0 @ b.p_alg.mul[i][j]))
    )
    mu = tensor2(
        nP, nH, lambda i, a: e.restrictv(vsub(bil(t.h_mod.left, s0[i], s1[a]), e.sigma1 @ b.h_mod.left[i][a]))
    )
    nu = tensor2(
        nH, nP, lambda a, i: e.restrictv(vsub(bil(t.h_mod.right, s1[a], s0[i]), e.sigma1 @ b.h_mod.right[a][i]))
    )
    return XCochain2(psi, omega, mu, nu)


def xmod_build_extension(
    x: CrossedModule, r: XModRepresentation, c: XCochain2
) -> XModExtension:
    """The standard extension on (p + W, h + V) twisted by a cocycle."""
    require_crossed_module(x)
    require_xmod_representation(r)
    if any(v != 0 for v in xmod_d2_residual(x, r, c)):
        xmod_cocycle_report(x, r, c).require("not a two-cocycle")
    np_, nh, nv, nw = x.pdim, x.hdim, r.vdim, r.wdim
    NP, NH = np_ + nw, nh + nv

    def splitp(v):
        return v[:np_], v[np_:]

    def splith(v):
        return v[:nh], v[nh:]

    def pmul(i, j):
        xg, wg = splitp(unit(NP, i))
        yg, wg2 = splitp(unit(NP, j))
        return tuple(x.p_alg.product(xg, yg)) + tuple(
            vadd(
                bil(c.omega, xg, yg),
                bil(r.w_mod.left, xg, wg2),
                bil(r.w_mod.right, wg, yg),
            )
        )

    def hleft(i, a):
        xg, wg = splitp(unit(NP, i))
        ag, vg = splith(unit(NH, a))
        return tuple(bil(x.h_mod.left, xg, ag)) + tuple(
            vadd(bil(c.mu, xg, ag), bil(r.v_mod.left, xg, vg), bil(r.tr_r, wg, ag))
        )

    def hright(a, i):
        ag, vg = splith(unit(NH, a))
        xg, wg = splitp(unit(NP, i))
        return tuple(bil(x.h_mod.right, ag, xg)) + tuple(
            vadd(bil(c.nu, ag, xg), bil(r.v_mod.right, vg, xg), bil(r.tr_l, ag, wg))
        )

    p_alg = AssocAlgebra(NP, tensor2(NP, NP, pmul))
    h_mod = Bimodule(p_alg, NH, tensor2(NP, NH, hleft), tensor2(NH, NP, hright))
    fcols = [
        tuple(x.f_map.col(a)) + tuple(c.psi.col(a)) for a in range(nh)
    ] + [(Fraction(0),) * np_ + tuple(r.phi.col(s)) for s in range(nv)]
    f_map = Matrix.from_cols(fcols, NP)
    total = CrossedModule(p_alg, h_mod, f_map)
    require_crossed_module(total)
    p0 = Matrix(tuple(tuple(Fraction(1 if i == j else 0) for j in range(NP)) for i in range(np_)), NP)
    p1 = Matrix(tuple(tuple(Fraction(1 if i == j else 0) for j in range(NH)) for i in range(nh)), NH)
    sigma0 = Matrix(tuple(tuple(Fraction(1 if i == j else 0) for j in range(np_)) for i in range(NP)), np_)
    sigma1 = Matrix(tuple(tuple(Fraction(1 if i == j else 0) for j in range(nh)) for i in range(NH)), nh)
    return XModExtension(
        total, x, tuple(range(np_, NP)), tuple(range(nh, NH)), p0, p1, sigma0, sigma1
    )


@dataclass
class XModWitness:
    lambda0: Matrix
    lambda1: Matrix
    f0: Matrix
    f1: Matrix


@dataclass
class XModInequivalence:
    reason: str
    rank_d1: int
    rank_augmented: int


def xmod_check_equivalence(e1: XModExtension, e2: XModExtension):
    require_xmod_extension(e1)
    require_xmod_extension(e2)
    if e1.base != e2.base:
        raise ValueError("extensions have different bases")
    r1 = xmod_extract_representation(e1)
    r2 = xmod_extract_representation(e2)
    if r1 != r2:
        raise ValueError("extensions induce different representations and are not comparable")
    c1 = xmod_extract_cocycle(e1)
    c2 = xmod_extract_cocycle(e2)
    delta = xmod_flatten2(c1 - c2)
    mats = xmod_assemble_matrices(e1.base, r1)
    sol = solve(mats.d1, delta)
    if sol is None:
        aug = Matrix(tuple(row + (b,) for row, b in zip(mats.d1.entries, delta)), mats.d1.cols + 1)
        return XModInequivalence("cocycle difference is not a coboundary", rank(mats.d1), rank(aug))
    lam = xmod_unflatten1(e1.base, r1, sol)

    def f0_col(j):
        col = unit(e1.total.pdim, j)
        xb = e1.p0 @ col
        w = e1.restrictw(vsub(col, e1.sigma0 @ xb))
        return vadd(e2.sigma0 @ xb, e2.inclw(vadd(lam.n0 @ xb, w)))

    def f1_col(j):
        col = unit(e1.total.hdim, j)
        ab = e1.p1 @ col
        v = e1.restrictv(vsub(col, e1.sigma1 @ ab))
        return vadd(e2.sigma1 @ ab, e2.inclv(vadd(lam.n1 @ ab, v)))

    f0 = Matrix.from_cols([f0_col(j) for j in range(e1.total.pdim)], e2.total.pdim)
    f1 = Matrix.from_cols([f1_col(j) for j in range(e1.total.hdim)], e2.total.hdim)
    report_from(xmod_homomorphism_residuals(e1.total, e2.total, f0, f1)).require(
        "witness does not induce a homomorphism"
    )
    incl_ok = all(
        f0 @ e1.inclw(unit(e1.wdim, s)) == e2.inclw(unit(e1.wdim, s)) for s in range(e1.wdim)
    ) and all(
        f1 @ e1.inclv(unit(e1.vdim, s)) == e2.inclv(unit(e1.vdim, s)) for s in range(e1.vdim)
    )
    proj_ok = (e2.p0 @ f0 == e1.p0) and (e2.p1 @ f1 == e1.p1)
    if not (incl_ok and proj_ok):
        raise AssertionError("witness does not commute with inclusion/projection")
    return XModWitness(lam.n0, lam.n1, f0, f1)
