"""Truncated bosonic Fock-space engine.

Vectors live in the polynomial ring Q[p_1, p_2, ...][x^{+-}, z]: a vector is a
dict mapping a power-sum index (a partition tuple, parts descending) to a
Laurent-polynomial coefficient.  The Heisenberg generators act by

    a_{-n} p_mu = p_{mu + part n},      a_n p_mu = n * m_n(mu) p_{mu - part n},

and four families of half vertex-operator modes are built from them.  A mode
X_k is the w^{target}-coefficient of

    X(w) = pre(w) * exp(sc * sum_n a_{-n}/n * w^n)
                  * exp(sa * sum_n a_n/n * (w^n + w^{-n}))

where pre(w) is 1 or (1 - w^2) and target is +-k, per the table below.  The
annihilation stage is computed once per basis vector and cached; the mode
action on a basis vector is cached once per (kind, k, basis) triple, so large
verification grids share almost all of the work.

Everything is exact: w-series are dicts over integer powers with Fraction
values, and no truncation is ever applied (each exponential terminates on a
given vector because annihilation removes parts and extraction bounds the
creation weight).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import NamedTuple

from .partitions import Partition, PartitionTooLong, partitions_of
from .ring import ONE, ZERO, LaurentPoly, xvar, zvar

FockVector = dict[tuple[int, ...], LaurentPoly]

WPoly = dict[int, Fraction]


class ZeroModeRequested(ValueError):
    """The Heisenberg index 0 is central and has no action here."""


class StraighteningDiverged(RuntimeError):
    """The straightening rewrite exceeded its iteration allowance."""


class ModeShape(NamedTuple):
    prefactor: bool  # multiply the series by (1 - w^2)
    creation_sign: int
    annihilation_sign: int
    target_sign: int  # mode k extracts the w^{target_sign * k} coefficient


MODE_SHAPES: dict[str, ModeShape] = {
    "Y": ModeShape(False, +1, -1, -1),
    "Ystar": ModeShape(True, -1, +1, +1),
    "W": ModeShape(True, +1, -1, -1),
    "Wstar": ModeShape(False, -1, +1, +1),
}

MODE_KINDS = tuple(MODE_SHAPES)

_STAR_OF = {"sp": "Ystar", "o": "Wstar"}
_PLAIN_OF = {"sp": "Y", "o": "W"}


def vacuum() -> FockVector:
    return {(): ONE}


def vacuum_coefficient(vec: FockVector) -> LaurentPoly:
    return vec.get((), ZERO)


def _insert_part(mu: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = list(mu)
    out.append(n)
    out.sort(reverse=True)
    return tuple(out)


def _remove_part(mu: tuple[int, ...], n: int) -> tuple[int, ...]:
    out = list(mu)
    out.remove(n)
    return tuple(out)


def heisenberg(vec: FockVector, n: int) -> FockVector:
    """Apply a_n (n > 0 annihilates, n < 0 creates part |n|)."""
    if n == 0:
        raise ZeroModeRequested("a_0 acts as zero here; request a nonzero index")
    out: FockVector = {}
    for mu, f in vec.items():
        if n < 0:
            key = _insert_part(mu, -n)
            out[key] = out.get(key, ZERO) + f
        elif n in mu:
            key = _remove_part(mu, n)
            out[key] = out.get(key, ZERO) + f * (n * mu.count(n))
    return {k: v for k, v in out.items() if not v.is_zero()}


@lru_cache(maxsize=None)
def _zfactor(nu: tuple[int, ...]) -> int:
    z = 1
    for n in set(nu):
        m = nu.count(n)
        z *= n**m * factorial(m)
    return z


def _conv(a: WPoly, b: WPoly) -> WPoly:
    out: WPoly = {}
    for p, q in a.items():
        for r, s in b.items():
            key = p + r
            val = out.get(key, 0) + q * s
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


_PREFACTOR: WPoly = {0: Fraction(1), 2: Fraction(-1)}


@lru_cache(maxsize=None)
def _stages_core(sa: int, mu: tuple[int, ...]):
    """The annihilation exponential applied to p_mu, keyed by sign only.

    Returns ((nu, ((power, coeff), ...)), ...): for each surviving basis
    vector nu, the w-Laurent polynomial it carries before creation acts.
    Two mode kinds share each sign, so this layer halves the Taylor work.
    """
    total: dict[tuple[int, ...], WPoly] = {mu: {0: Fraction(1)}}
    t = {mu: {0: Fraction(1)}}
    j = 0
    while t:
        j += 1
        nxt: dict[tuple[int, ...], WPoly] = {}
        for nu, wp in t.items():
            for n in set(nu):
                mn = nu.count(n)
                child = _remove_part(nu, n)
                cwp = nxt.setdefault(child, {})
                for p, q in wp.items():
                    step = Fraction(sa * mn, j) * q
                    for dp in (n, -n):
                        key = p + dp
                        val = cwp.get(key, 0) + step
                        if val:
                            cwp[key] = val
                        elif key in cwp:
                            del cwp[key]
        t = {nu: wp for nu, wp in nxt.items() if wp}
        for nu, wp in t.items():
            acc = total.setdefault(nu, {})
            for p, q in wp.items():
                val = acc.get(p, 0) + q
                if val:
                    acc[p] = val
                elif p in acc:
                    del acc[p]
    return tuple(
        (nu, tuple(sorted(wp.items()))) for nu, wp in total.items() if wp
    )


@lru_cache(maxsize=None)
def _stages(kind: str, mu: tuple[int, ...]):
    """The annihilation exponential and prefactor applied to p_mu."""
    shape = MODE_SHAPES[kind]
    rows = _stages_core(shape.annihilation_sign, mu)
    if not shape.prefactor:
        return rows
    return tuple(
        (nu, tuple(sorted(_conv(dict(wp), _PREFACTOR).items()))) for nu, wp in rows
    )


@lru_cache(maxsize=None)
def _zlcm(c: int) -> int:
    """lcm of the symmetrization factors over all partitions of c."""
    out = 1
    for parts in partitions_of(c):
        z = _zfactor(parts)
        out = out * z // gcd(out, z)
    return out


@lru_cache(maxsize=None)
def _mode_row_scaled(kind: str, k: int, mu: tuple[int, ...]):
    """X_k p_mu as (((nu, int), ...), denominator).

    Integer coefficients over one shared denominator keep the large
    verification loops out of Fraction arithmetic; `_mode_on_basis` restores
    exact rationals on demand.
    """
    shape = MODE_SHAPES[kind]
    target = shape.target_sign * k
    sc = shape.creation_sign
    rows = _stages(kind, mu)
    den = 1
    zl = 1
    for _, wp in rows:
        for p, q in wp:
            if target - p < 0:
                continue
            d = q.denominator
            den = den * d // gcd(den, d)
            z = _zlcm(target - p)
            zl = zl * z // gcd(zl, z)
    acc: dict[tuple[int, ...], int] = {}
    for rho, wp in rows:
        for p, q in wp:
            c = target - p
            if c < 0:
                continue
            qi = q.numerator * (den // q.denominator)
            for parts in partitions_of(c):
                coeff = qi * (zl // _zfactor(parts))
                if sc < 0 and len(parts) % 2:
                    coeff = -coeff
                key = tuple(sorted(rho + parts, reverse=True))
                val = acc.get(key, 0) + coeff
                if val:
                    acc[key] = val
                elif key in acc:
                    del acc[key]
    return tuple(acc.items()), den * zl


@lru_cache(maxsize=None)
def _mode_on_basis(kind: str, k: int, mu: tuple[int, ...]):
    """X_k p_mu as ((nu, Fraction), ...)."""
    entries, den = _mode_row_scaled(kind, k, mu)
    return tuple((nu, Fraction(v, den)) for nu, v in entries)


def apply_mode(kind: str, k: int, vec: FockVector) -> FockVector:
    """Apply the mode X_k of the given kind to a vector, exactly."""
    if kind not in MODE_SHAPES:
        raise ValueError(f"unknown mode kind {kind!r}")
    out: FockVector = {}
    for mu, f in vec.items():
        for nu, q in _mode_on_basis(kind, k, mu):
            cur = out.get(nu, ZERO) + f * q
            if cur.is_zero():
                out.pop(nu, None)
            else:
                out[nu] = cur
    return out


@lru_cache(maxsize=None)
def _ket_cached(kind: str, parts: tuple[int, ...]):
    vec = vacuum()
    for part in reversed(parts):
        vec = apply_mode(kind, -part, vec)
    return tuple(vec.items())


def ket(lam: Partition, family: str) -> FockVector:
    """The highest-weight vector for lam: creation modes applied inside-out.

    The declared length of lam fixes the word length, so trailing zero parts
    contribute index-0 modes (which fix the vacuum but matter mid-word).
    """
    kind = _PLAIN_OF[family]
    return dict(_ket_cached(kind, lam.padded(lam.declared_len)))


@lru_cache(maxsize=None)
def _power_sum_value(n: int, m: int, k: int) -> LaurentPoly:
    # p_k evaluated on x_1..x_n paired with inverses plus z_1..z_m
    acc = ZERO
    for i in range(1, n + 1):
        acc = acc + LaurentPoly.variable(xvar(i), k) + LaurentPoly.variable(xvar(i), -k)
    for j in range(1, m + 1):
        acc = acc + LaurentPoly.variable(zvar(j), k)
    return acc


@lru_cache(maxsize=None)
def _gamma_on_basis(n: int, m: int, rho: tuple[int, ...]):
    """exp(sum_k a_k/k * p_k(vars)) applied to p_rho, as ((nu, poly), ...)."""
    total: dict[tuple[int, ...], LaurentPoly] = {rho: ONE}
    t = {rho: ONE}
    j = 0
    while t:
        j += 1
        nxt: dict[tuple[int, ...], LaurentPoly] = {}
        for nu, f in t.items():
            for part in set(nu):
                mult = nu.count(part)
                child = _remove_part(nu, part)
                term = f * _power_sum_value(n, m, part) * Fraction(mult, j)
                cur = nxt.get(child, ZERO) + term
                if cur.is_zero():
                    nxt.pop(child, None)
                else:
                    nxt[child] = cur
        t = nxt
        for nu, f in t.items():
            cur = total.get(nu, ZERO) + f
            if cur.is_zero():
                total.pop(nu, None)
            else:
                total[nu] = cur
    return tuple(total.items())


def gamma_plus(n: int, m: int, vec: FockVector) -> FockVector:
    """Apply the annihilation half-current evaluated on the character alphabet."""
    out: FockVector = {}
    for rho, f in vec.items():
        for nu, g in _gamma_on_basis(n, m, rho):
            cur = out.get(nu, ZERO) + f * g
            if cur.is_zero():
                out.pop(nu, None)
            else:
                out[nu] = cur
    return out


def matrix_element(
    beta: Partition, n: int, m: int, alpha: Partition, family: str
) -> LaurentPoly:
    """<beta| Gamma_+(x,z) |alpha> with the bra word read off beta's declared
    length; equals the skew character when alpha fits in l+n+m rows."""
    if family not in _STAR_OF:
        raise ValueError(f"unknown family {family!r}")
    l = beta.declared_len
    if alpha.length > l + n + m:
        raise PartitionTooLong(f"{alpha.parts} needs more than {l + n + m} rows")
    vec = ket(alpha.with_declared(l + n + m), family)
    vec = gamma_plus(n, m, vec)
    star = _STAR_OF[family]
    for b in beta.padded(l):
        vec = apply_mode(star, -b, vec)
    return vacuum_coefficient(vec)


def pairing(mu: Partition, lam: Partition, family: str) -> LaurentPoly:
    """<mu|lam> without any current insertion; delta_{mu,lam} when all is well."""
    if family not in _STAR_OF:
        raise ValueError(f"unknown family {family!r}")
    length = max(mu.declared_len, lam.declared_len, mu.length, lam.length)
    vec = ket(lam.with_declared(length), family)
    star = _STAR_OF[family]
    for b in mu.padded(length):
        vec = apply_mode(star, -b, vec)
    return vacuum_coefficient(vec)


# -- straightening -----------------------------------------------------------


def straighten(ns, family: str = "sp", side: str = "ket"):
    """Normalize a mode word to a signed partition.

    ket side: the word X_{n_1} ... X_{n_L}|0> is rewritten (via the quadratic
    exchange rules) until the indices weakly increase; the result is
    (sign, Partition(-n_1, ..., -n_L)) or (0, empty) when the word vanishes.

    bra side: <0| X*_{s_1} ... X*_{s_L} is rewritten until the indices weakly
    decrease and the leading index is nonpositive; the boundary rule depends
    on the family.  Returns (sign, Partition(reversed(-s))).
    """
    word = list(ns)
    if side not in ("ket", "bra"):
        raise ValueError("side must be 'ket' or 'bra'")
    if family not in ("sp", "o"):
        raise ValueError("family must be 'sp' or 'o'")
    sign = 1
    budget = 10000 + 100 * len(word) * len(word)
    while budget > 0:
        budget -= 1
        changed = False
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if side == "ket":
                if a > b:
                    if a == b + 1:
                        return 0, Partition((), declared_len=len(word))
                    word[i], word[i + 1] = b + 1, a - 1
                    sign = -sign
                    changed = True
                    break
            else:
                if a < b:
                    if b == a + 1:
                        return 0, Partition((), declared_len=len(word))
                    word[i], word[i + 1] = b - 1, a + 1
                    sign = -sign
                    changed = True
                    break
        if changed:
            continue
        if side == "ket":
            if word and word[-1] > 0:
                return 0, Partition((), declared_len=len(word))
            parts = tuple(-v for v in word)
            return sign, Partition(parts, declared_len=len(word))
        # bra: sorted weakly decreasing; fix the boundary index
        if word and word[0] > 0:
            if family == "sp":
                if word[0] == 1:
                    return 0, Partition((), declared_len=len(word))
                word[0] = 2 - word[0]
                sign = -sign
            else:
                word[0] = -word[0]
            continue
        parts = tuple(-v for v in reversed(word))
        return sign, Partition(parts, declared_len=len(word))
    raise StraighteningDiverged(f"no normal form after rewriting {list(ns)}")
