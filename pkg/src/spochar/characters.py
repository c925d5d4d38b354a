"""Determinantal engine for universal symplectic and orthogonal characters.

Every character here is a determinant with entries drawn from the h-families
of :mod:`spochar.series`.  The universal symplectic/orthogonal functions live
in n paired variables x_i, x_i^{-1} and m plain variables z_j; skew variants
take an inner partition whose declared length fixes the matrix dimension.
Closed bialternant forms (ratios of alternants) are verified multiplicatively:
instead of dividing, `numerator == denominator * candidate` is asserted, so
everything stays inside the polynomial ring.  Half-integer exponents are
handled by the global substitution x_i = t_i^2.

All public functions return polynomials with integer coefficients and raise
if that expectation is ever violated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .partitions import EMPTY, Partition, PartitionTooLong, contains
from .ring import (
    ONE,
    ZERO,
    DimensionCapExceeded,
    LaurentPoly,
    det_of,
    tvar,
    xvar,
    zvar,
)
from .series import HSpec, h_seq, h_seq_y

UNIVERSAL_DIM_CAP = 6  # n + m
SKEW_DIM_CAP = 8  # l + n + m


class DivisionWitnessFailed(ArithmeticError):
    """A closed-form ratio failed its multiplicative witness check."""


class LastPartNonzero(ValueError):
    """The odd-orthogonal closed form needs lambda_{n+1} = 0."""


class ReductionMismatch(ArithmeticError):
    """A reduced determinant disagrees with the universal one."""


@dataclass(frozen=True)
class CharSpec:
    """A character request: family, variable counts, outer/inner shapes."""

    family: str
    n: int
    m: int
    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if self.family not in ("sp", "o"):
            raise ValueError("family must be 'sp' or 'o'")
        if self.n < 0 or self.m < 0:
            raise ValueError("variable counts must be >= 0")


def compute(spec: CharSpec) -> LaurentPoly:
    """Dispatch a CharSpec to the right determinant."""
    skew = spec.inner.length > 0 or spec.inner.declared_len > 0
    if spec.family == "sp":
        if skew:
            return sp_skew(spec.outer, spec.inner, spec.n, spec.m)
        return sp_universal(spec.outer, spec.n, spec.m)
    if skew:
        return o_skew(spec.outer, spec.inner, spec.n, spec.m)
    return o_universal(spec.outer, spec.n, spec.m)


def _h(hs: Sequence[LaurentPoly], k: int) -> LaurentPoly:
    return hs[k] if k >= 0 else ZERO


@lru_cache(maxsize=None)
def _jt_det(
    kind: str,
    alpha: tuple[int, ...],
    beta: tuple[int, ...],
    l: int,
    n: int,
    m: int,
) -> LaurentPoly:
    """Jacobi-Trudi style determinant shared by all h-based characters.

    `alpha` and `beta` are padded to the full dimension l+n+m; `alpha` may be
    an arbitrary integer sequence (the determinant then vanishes or matches a
    straightened character up to sign).  `kind` picks the entry shape:
    symplectic (second term added from column l+2 on), orthogonal (second
    term subtracted from column l+1 on), or symplectic over h'_k = h_k - h_{k-2}.
    The matrix dimension is len(alpha); the h-table always uses all n+m vars.
    """
    dim = len(alpha)
    if dim == 0:
        return ONE
    top = max(max(alpha), 0)
    N = top + 2 * dim
    hs = h_seq(HSpec(n, m, "plain"), N)
    if kind == "sp_hprime":
        hs = [_h(hs, k) - _h(hs, k - 2) for k in range(N + 1)]
        kind = "sp"
    rows = []
    for i in range(1, dim + 1):
        a = alpha[i - 1]
        row = []
        for j in range(1, dim + 1):
            e = _h(hs, a - beta[j - 1] - i + j)
            if kind == "sp":
                if j > l + 1:
                    e = e + _h(hs, a - i - j + 2 * l + 2)
            else:
                if j > l:
                    e = e - _h(hs, a - i - j + 2 * l)
            row.append(e)
        rows.append(row)
    return det_of(rows, cap=SKEW_DIM_CAP + 2)


def _check_universal(lam: Partition, n: int, m: int) -> None:
    if n + m > UNIVERSAL_DIM_CAP:
        raise DimensionCapExceeded(f"n + m = {n + m} > {UNIVERSAL_DIM_CAP}")
    if lam.length > n + m:
        raise PartitionTooLong(f"{lam.parts} needs more than {n + m} rows")


def sp_universal(lam: Partition, n: int, m: int) -> LaurentPoly:
    """Universal symplectic character in (x_1..x_n)^{+-} and z_1..z_m."""
    _check_universal(lam, n, m)
    return _jt_det("sp", lam.padded(n + m), (0,) * (n + m), 0, n, m).require_integer()


def o_universal(lam: Partition, n: int, m: int) -> LaurentPoly:
    """Universal orthogonal character in (x_1..x_n)^{+-} and z_1..z_m."""
    _check_universal(lam, n, m)
    return _jt_det("o", lam.padded(n + m), (0,) * (n + m), 0, n, m).require_integer()


def sp_universal_seq(seq: Sequence[int], n: int, m: int) -> LaurentPoly:
    """Symplectic determinant over an arbitrary integer index sequence."""
    seq = tuple(seq)
    if len(seq) > n + m:
        raise PartitionTooLong(f"{seq} needs more than {n + m} rows")
    alpha = seq + (0,) * (n + m - len(seq))
    return _jt_det("sp", alpha, (0,) * (n + m), 0, n, m)


def o_universal_seq(seq: Sequence[int], n: int, m: int) -> LaurentPoly:
    """Orthogonal determinant over an arbitrary integer index sequence."""
    seq = tuple(seq)
    if len(seq) > n + m:
        raise PartitionTooLong(f"{seq} needs more than {n + m} rows")
    alpha = seq + (0,) * (n + m - len(seq))
    return _jt_det("o", alpha, (0,) * (n + m), 0, n, m)


def _skew_args(outer: Partition, inner: Partition, n: int, m: int):
    l = inner.declared_len
    dim = l + n + m
    if dim > SKEW_DIM_CAP:
        raise DimensionCapExceeded(f"l + n + m = {dim} > {SKEW_DIM_CAP}")
    if outer.length > dim:
        raise PartitionTooLong(f"{outer.parts} needs more than {dim} rows")
    return outer.padded(dim), inner.padded(dim), l


def sp_skew(outer: Partition, inner: Partition, n: int, m: int) -> LaurentPoly:
    """Skew universal symplectic character; zero unless inner fits in outer."""
    alpha, beta, l = _skew_args(outer, inner, n, m)
    return _jt_det("sp", alpha, beta, l, n, m).require_integer()


def o_skew(outer: Partition, inner: Partition, n: int, m: int) -> LaurentPoly:
    """Skew universal orthogonal character; zero unless inner fits in outer."""
    alpha, beta, l = _skew_args(outer, inner, n, m)
    return _jt_det("o", alpha, beta, l, n, m).require_integer()


def universal_det(family: str, lam: Partition, dim: int, n: int, m: int) -> LaurentPoly:
    """Vacuum-side determinant at an explicit dimension dim >= len(lam).

    The value does not depend on dim: every appended row is (0,...,0,1), so
    the determinant is stable under padding.  This extends the universal
    characters to shapes with more rows than n+m variables, which the
    branching sums need for their left factors.
    """
    if family not in ("sp", "o"):
        raise ValueError("family must be 'sp' or 'o'")
    if dim < lam.length:
        raise PartitionTooLong(f"{lam.parts} needs more than {dim} rows")
    return _jt_det(family, lam.padded(dim), (0,) * dim, 0, n, m)


def skew_det(family: str, outer: Partition, inner: Partition, n: int, m: int) -> LaurentPoly:
    """Skew determinant without the public dimension cap.

    The inner shape's declared length fixes the bra padding; the matrix has
    declared + n + m rows.  Branching sums need inner shapes declared as long
    as the outer partition, which can push past the public cap.
    """
    if family not in ("sp", "o"):
        raise ValueError("family must be 'sp' or 'o'")
    l = inner.declared_len
    dim = l + n + m
    if outer.length > dim:
        raise PartitionTooLong(f"{outer.parts} needs more than {dim} rows")
    return _jt_det(family, outer.padded(dim), inner.padded(dim), l, n, m)


def sp_skew_seq(
    alpha_seq: Sequence[int], inner: Partition, n: int, m: int
) -> LaurentPoly:
    """Skew symplectic determinant for an arbitrary outer index sequence."""
    l = inner.declared_len
    dim = l + n + m
    alpha = tuple(alpha_seq)
    if len(alpha) != dim:
        raise ValueError(f"outer sequence must have {dim} entries")
    return _jt_det("sp", alpha, inner.padded(dim), l, n, m)


@lru_cache(maxsize=None)
def _schur(parts: tuple[int, ...], k: int) -> LaurentPoly:
    if k == 0:
        return ONE
    top = max(max(parts), 0) if parts else 0
    hs = h_seq_y(k, top + k)
    rows = []
    for i in range(1, k + 1):
        a = parts[i - 1]
        rows.append([_h(hs, a - i + j) for j in range(1, k + 1)])
    return det_of(rows, cap=SKEW_DIM_CAP + 2)


def schur(lam: Partition, k: int) -> LaurentPoly:
    """Classical Schur polynomial in y_1..y_k."""
    if k > SKEW_DIM_CAP:
        raise DimensionCapExceeded(f"k = {k} > {SKEW_DIM_CAP}")
    if lam.length > k:
        raise PartitionTooLong(f"{lam.parts} needs more than {k} rows")
    return _schur(lam.padded(k), k).require_integer()


# -- closed bialternant forms, verified multiplicatively --------------------


def _xpow_diff(v, e: int) -> LaurentPoly:
    # v^e - v^{-e}; zero when e == 0
    if e == 0:
        return ZERO
    return LaurentPoly.variable(v, e) - LaurentPoly.variable(v, -e)


def _xpow_sum(v, e: int) -> LaurentPoly:
    # v^e + v^{-e}; the constant 2 when e == 0
    return LaurentPoly.variable(v, e) + LaurentPoly.variable(v, -e)


def _witness(
    numerator: LaurentPoly, denominator: LaurentPoly, candidate: LaurentPoly, what: str
) -> None:
    if numerator != denominator * candidate:
        raise DivisionWitnessFailed(what)


def sp_bialternant(lam: Partition, n: int) -> LaurentPoly:
    """Symplectic character as a ratio of alternants, checked without division."""
    if lam.length > n:
        raise PartitionTooLong(f"{lam.parts} needs more than {n} rows")
    candidate = sp_universal(lam, n, 0)
    if n == 0:
        return candidate
    lp = lam.padded(n)
    num = [
        [_xpow_diff(xvar(i), lp[j - 1] + n - j + 1) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    den = [
        [_xpow_diff(xvar(i), n - j + 1) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    _witness(det_of(num), det_of(den), candidate, f"sp bialternant {lp} n={n}")
    return candidate


def sp_odd_bialternant(lam: Partition, n: int) -> LaurentPoly:
    """Odd symplectic character (one distinguished plain variable) as a ratio
    of (n+1)-dimensional alternants, checked without division."""
    if lam.length > n + 1:
        raise PartitionTooLong(f"{lam.parts} needs more than {n + 1} rows")
    candidate = sp_universal(lam, n, 1)
    lp = lam.padded(n + 1)
    z = zvar(1)
    zinv = LaurentPoly.variable(z, -1)
    num: list[list[LaurentPoly]] = []
    den: list[list[LaurentPoly]] = []
    for i in range(1, n + 1):
        xi = xvar(i)
        num.append(
            [
                _xpow_diff(xi, lp[j - 1] + n - j + 2)
                - zinv * _xpow_diff(xi, lp[j - 1] + n - j + 1)
                for j in range(1, n + 2)
            ]
        )
        den.append([_xpow_diff(xi, n - j + 2) for j in range(1, n + 2)])
    num.append(
        [
            LaurentPoly.variable(z, lp[j - 1] + n - j + 2)
            - LaurentPoly.variable(z, lp[j - 1] + n - j)
            for j in range(1, n + 2)
        ]
    )
    den.append([_xpow_diff(z, n - j + 2) for j in range(1, n + 2)])
    _witness(det_of(num), det_of(den), candidate, f"sp odd bialternant {lp} n={n}")
    return candidate


def sp_odd_jt(lam: Partition, n: int) -> LaurentPoly:
    """Odd symplectic character via the determinant engine (alias form)."""
    return sp_universal(lam, n, 1)


def o_even_bialternant(lam: Partition, l: int) -> LaurentPoly:
    """Even orthogonal character over l paired variables as a ratio of
    alternants; the shape of the numerator depends on whether lambda_l = 0."""
    if lam.length > l:
        raise PartitionTooLong(f"{lam.parts} needs more than {l} rows")
    candidate = o_universal(lam, l, 0)
    if l == 0:
        return candidate
    lp = lam.padded(l)
    den = [
        [_xpow_sum(xvar(i), l - j) for j in range(1, l + 1)] for i in range(1, l + 1)
    ]
    num = [
        [_xpow_sum(xvar(i), lp[j - 1] + l - j) for j in range(1, l + 1)]
        for i in range(1, l + 1)
    ]
    # a nonzero last part doubles the ratio (the shape then indexes a pair)
    factor = ONE if lp[l - 1] == 0 else LaurentPoly.constant(2)
    _witness(factor * det_of(num), det_of(den), candidate, f"o even {lp} l={l}")
    return candidate


def o_odd_closed(lam: Partition, n: int, z_value) -> LaurentPoly:
    """Odd orthogonal character with the plain variable z left symbolic or
    specialized to +1/-1; specializations are checked against half-integer
    alternants through the substitution x_i = t_i^2."""
    if lam.length > n:
        raise LastPartNonzero(f"{lam.parts} must leave row {n + 1} empty")
    symbolic = o_universal(lam, n, 1)
    if z_value == "symbolic":
        return symbolic
    if z_value not in (1, -1):
        raise ValueError("z_value must be 'symbolic', 1, or -1")
    candidate = symbolic.substitute({zvar(1): LaurentPoly.constant(z_value)})
    if n > 0:
        lp = lam.padded(n)
        tsub = {xvar(i): LaurentPoly.variable(tvar(i), 2) for i in range(1, n + 1)}
        cand_t = candidate.substitute(tsub)
        make = _xpow_diff if z_value == 1 else _xpow_sum
        num = [
            [make(tvar(i), 2 * lp[j - 1] + 2 * (n - j) + 1) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        den = [
            [make(tvar(i), 2 * (n - j) + 1) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        _witness(det_of(num), det_of(den), cand_t, f"o odd z={z_value} {lp} n={n}")
    return candidate


def o_intermediate_reduce(lam: Partition, n: int, m: int) -> LaurentPoly:
    """The n x n determinant over h'_k = h_k - h_{k-2} that the padded
    universal orthogonal character collapses to; asserts the collapse."""
    if lam.length > n:
        raise PartitionTooLong(f"{lam.parts} needs more than {n} rows")
    target = o_universal(lam, n, m)
    reduced = _jt_det("sp_hprime", lam.padded(n), (0,) * n, 0, n, m)
    if reduced != target:
        raise ReductionMismatch(f"h' reduction failed for {lam.parts} n={n} m={m}")
    return reduced
