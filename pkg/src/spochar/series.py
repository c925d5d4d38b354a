"""Truncated generating-function coefficients feeding the determinant engine.

The h-family attached to variables (x_1..x_n; z_1..z_m) collects the
coefficients of the formal series

    prod_i 1/((1 - x_i w)(1 - x_i^{-1} w)) * prod_j (z-factors)

where the z-factors are 1/(1 - z_j w) (``plain``), the pair
1/((1 - z_j w)(1 - z_j^{-1} w)) (``symmetric``), or absent (``none``).
Coefficients below index zero are zero and h_0 = 1.  The e-family expands
prod_j (1 - z_j^{-1} w), whose coefficients are elementary symmetric
polynomials of the -z_j^{-1}; a Newton-style recurrence ties the plain and
symmetric h-families together through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ring import ONE, ZERO, LaurentPoly, Monomial, xvar, yvar, zvar

Z_MODES = ("plain", "symmetric", "none")


@dataclass(frozen=True)
class HSpec:
    """Which h-family: n paired x-variables, m z-variables, z handling."""

    n: int
    m: int
    z_mode: str = "plain"

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("variable counts must be >= 0")
        if self.z_mode not in Z_MODES:
            raise ValueError(f"z_mode must be one of {Z_MODES}")
        if self.z_mode == "none":
            object.__setattr__(self, "m", 0)


def _geom_factors(spec: HSpec) -> tuple[Monomial, ...]:
    out: list[Monomial] = []
    for i in range(1, spec.n + 1):
        out.append(((xvar(i), 1),))
        out.append(((xvar(i), -1),))
    for j in range(1, spec.m + 1):
        out.append(((zvar(j), 1),))
        if spec.z_mode == "symmetric":
            out.append(((zvar(j), -1),))
    return tuple(out)


@lru_cache(maxsize=None)
def _geom_product(factors: tuple[Monomial, ...], N: int) -> tuple[LaurentPoly, ...]:
    """Coefficients of prod_u 1/(1 - u w) up to w^N."""
    series = [ONE] + [ZERO] * N
    for u in factors:
        up = LaurentPoly.monomial(u)
        # multiplying by 1/(1 - u w): new_k = old_k + u * new_{k-1}
        for k in range(1, N + 1):
            series[k] = series[k] + up * series[k - 1]
    return tuple(series)


def h_seq(spec: HSpec, N: int) -> list[LaurentPoly]:
    """[h_0, h_1, ..., h_N] for the given family."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return list(_geom_product(_geom_factors(spec), N))


def h_seq_vars(monomials: tuple[Monomial, ...], N: int) -> list[LaurentPoly]:
    """h-family of an explicit list of unit monomial factors."""
    return list(_geom_product(monomials, N))


def h_seq_y(k: int, N: int) -> list[LaurentPoly]:
    """Complete homogeneous polynomials in y_1..y_k up to degree N."""
    return h_seq_vars(tuple(((yvar(i), 1),) for i in range(1, k + 1)), N)


@lru_cache(maxsize=None)
def _e_seq(m: int) -> tuple[LaurentPoly, ...]:
    series = [ONE]
    for j in range(1, m + 1):
        zj_inv = LaurentPoly.variable(zvar(j), -1)
        nxt = [ONE] + [ZERO] * j
        for k in range(j + 1):
            nxt[k] = series[k] if k < len(series) else ZERO
            if k > 0:
                nxt[k] = nxt[k] - zj_inv * series[k - 1]
        series = nxt
    return tuple(series)


def e_seq(m: int) -> list[LaurentPoly]:
    """[e_0, ..., e_m]: elementary symmetric polynomials of -z_1^{-1}..-z_m^{-1}."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return list(_e_seq(m))


def check_newton(spec: HSpec, N: int) -> bool:
    """Verify h_k(plain) = sum_{i=0}^{m} e_i * h_{k-i}(symmetric) for k <= N."""
    if spec.m < 1:
        raise ValueError("the recurrence needs at least one z variable")
    hp = h_seq(HSpec(spec.n, spec.m, "plain"), N)
    hs = h_seq(HSpec(spec.n, spec.m, "symmetric"), N)
    es = e_seq(spec.m)
    for k in range(N + 1):
        rhs = ZERO
        for i in range(min(spec.m, k) + 1):
            rhs = rhs + es[i] * hs[k - i]
        if hp[k] != rhs:
            return False
    return True
