"""Hand-verifiable ground-truth structures used across the test suite and
shipped as JSON files for the command line.

Naming scheme: FIX-Z is the zero structure, FIX-U the idempotent one with
unit-like degree-mixing products, FIX-D has only a differential, FIX-L3 only
a homotopy, FIX-M mixes nonzero products with a nonzero homotopy, FIX-W is
FIX-U with the differential turned on, FIX-2D is a transported direct sum
(generated randomly once, then frozen here).  FIX-X and its Peiffer variant
are the crossed-module fixtures.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .algebra2 import AssocAlgebra, Bimodule, TwoTermAlgebra, TwoTermComplex, zero_algebra
from .exactlin import Matrix
from .tensorops import tensor2, tensor3, zeros2
from .xmod import CrossedModule


def _q(x) -> Fraction:
    return Fraction(x)


def _alg_1_1(d, ee, ef, fe, l3):
    """One-dimensional-per-degree algebra from five scalars."""
    return TwoTermAlgebra(
        TwoTermComplex(1, 1, Matrix(((_q(d),),), 1)),
        (((_q(ee),),),),
        (((_q(ef),),),),
        (((_q(fe),),),),
        ((((_q(l3),),),),),
    )


def fix_z() -> TwoTermAlgebra:
    return zero_algebra(1, 1)


def fix_u() -> TwoTermAlgebra:
    return _alg_1_1(0, 1, 1, 1, 0)


def fix_d() -> TwoTermAlgebra:
    return _alg_1_1(1, 0, 0, 0, 0)


def fix_l3() -> TwoTermAlgebra:
    return _alg_1_1(0, 0, 0, 0, 1)


def fix_m() -> TwoTermAlgebra:
    return _alg_1_1(0, 2, 2, 0, 1)


def fix_w() -> TwoTermAlgebra:
    return _alg_1_1(1, 1, 1, 1, 0)


def direct_sum_algebra(g1: TwoTermAlgebra, g2: TwoTermAlgebra) -> TwoTermAlgebra:
    n0, n1 = g1.dim0 + g2.dim0, g1.dim1 + g2.dim1

    def emb0(v, which):
        pad0 = (Fraction(0),) * (g1.dim0 if which else 0)
        pad1 = (Fraction(0),) * (0 if which else g2.dim0)
        return pad0 + tuple(v) + pad1

    def emb1(v, which):
        pad0 = (Fraction(0),) * (g1.dim1 if which else 0)
        pad1 = (Fraction(0),) * (0 if which else g2.dim1)
        return pad0 + tuple(v) + pad1

    def block0(i):
        return (0, i) if i < g1.dim0 else (1, i - g1.dim0)

    def block1(p):
        return (0, p) if p < g1.dim1 else (1, p - g1.dim1)

    gs = (g1, g2)

    def m00(i, j):
        bi, ii = block0(i)
        bj, jj = block0(j)
        if bi != bj:
            return (Fraction(0),) * n0
        return emb0(gs[bi].l2_00[ii][jj], bi)

    def m01(i, p):
        bi, ii = block0(i)
        bp, pp = block1(p)
        if bi != bp:
            return (Fraction(0),) * n1
        return emb1(gs[bi].l2_01[ii][pp], bi)

    def m10(p, i):
        bp, pp = block1(p)
        bi, ii = block0(i)
        if bi != bp:
            return (Fraction(0),) * n1
        return emb1(gs[bp].l2_10[pp][ii], bp)

    def l3f(i, j, k):
        bi, ii = block0(i)
        bj, jj = block0(j)
        bk, kk = block0(k)
        if not (bi == bj == bk):
            return (Fraction(0),) * n1
        return emb1(gs[bi].l3[ii][jj][kk], bi)

    diff_cols = []
    for p in range(n1):
        bp, pp = block1(p)
        diff_cols.append(emb0(gs[bp].complex.diff.col(pp), bp))
    return TwoTermAlgebra(
        TwoTermComplex(n0, n1, Matrix.from_cols(diff_cols, n0)),
        tensor2(n0, n0, m00),
        tensor2(n0, n1, m01),
        tensor2(n1, n0, m10),
        tensor3(n0, n0, n0, l3f),
    )


def fix_2d() -> TwoTermAlgebra:
    """Dims 2/2: direct sum of FIX-M and FIX-U transported along a fixed
    invertible change of basis (randomized once, repaired by transport,
    frozen here)."""
    from .sampling import transport_algebra

    p0 = Matrix(((1, 1), (1, 2)))
    p1 = Matrix(((2, -1), (1, 0)))
    return transport_algebra(direct_sum_algebra(fix_m(), fix_u()), p0, p1)


def algebra_fixtures() -> dict[str, TwoTermAlgebra]:
    return {
        "FIX-Z": fix_z(),
        "FIX-U": fix_u(),
        "FIX-D": fix_d(),
        "FIX-L3": fix_l3(),
        "FIX-M": fix_m(),
        "FIX-W": fix_w(),
        "FIX-2D": fix_2d(),
    }


# ---------------------------------------------------------------------------
# associative algebras and bimodules for the Hochschild tests
# ---------------------------------------------------------------------------

def assoc_point() -> AssocAlgebra:
    """One-dimensional idempotent algebra."""
    return AssocAlgebra(1, (((_q(1),),),))


def assoc_dual_numbers() -> AssocAlgebra:
    """Basis (1, x) with x.x = 0."""
    def mul(i, j):
        out = [Fraction(0), Fraction(0)]
        if i == 0 and j == 0:
            out[0] = Fraction(1)
        elif i + j == 1:
            out[1] = Fraction(1)
        return tuple(out)

    return AssocAlgebra(2, tensor2(2, 2, mul))


def assoc_upper_triangular() -> AssocAlgebra:
    """Upper-triangular 2x2 matrices, basis (E11, E12, E22)."""
    table = {
        (0, 0): 0,
        (0, 1): 1,
        (1, 2): 1,
        (2, 2): 2,
    }

    def mul(i, j):
        out = [Fraction(0)] * 3
        if (i, j) in table:
            out[table[(i, j)]] = Fraction(1)
        return tuple(out)

    return AssocAlgebra(3, tensor2(3, 3, mul))


def bimodule_fixtures() -> dict[str, Bimodule]:
    duals = assoc_dual_numbers()
    # augmentation module: x acts by its constant coefficient
    aug_left = tensor2(2, 1, lambda i, s: ((Fraction(1) if i == 0 else Fraction(0)),))
    aug_right = tensor2(1, 2, lambda s, i: ((Fraction(1) if i == 0 else Fraction(0)),))
    return {
        "point-regular": assoc_point().regular_bimodule(),
        "duals-regular": duals.regular_bimodule(),
        "ut2-regular": assoc_upper_triangular().regular_bimodule(),
        "duals-augmentation": Bimodule(duals, 1, aug_left, aug_right),
    }


# ---------------------------------------------------------------------------
# crossed-module fixtures
# ---------------------------------------------------------------------------

def fix_x() -> CrossedModule:
    p = assoc_point()
    h = Bimodule(p, 1, (((_q(1),),),), (((_q(1),),),))
    return CrossedModule(p, h, Matrix.zero(1, 1))


def fix_x_peiffer() -> CrossedModule:
    x = fix_x()
    return CrossedModule(x.p_alg, x.h_mod, Matrix(((_q(1),),), 1))


def fix_x_zero() -> CrossedModule:
    p = AssocAlgebra(1, zeros2(1, 1, 1))
    h = Bimodule(p, 1, zeros2(1, 1, 1), zeros2(1, 1, 1))
    return CrossedModule(p, h, Matrix.zero(1, 1))


def xmod_fixtures() -> dict[str, CrossedModule]:
    return {
        "FIX-X": fix_x(),
        "FIX-XP": fix_x_peiffer(),
        "FIX-X0": fix_x_zero(),
    }


def fixture_file(name: str):
    """Path-like handle to a shipped fixture JSON file."""
    return resources.files("assoc2").joinpath("fixtures").joinpath(name)
