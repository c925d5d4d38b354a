"""Identity verification suites.

Each suite runs a bounded grid of exact checks and returns a CheckReport:
how many instances ran, which failed (smallest first), and any notes worth
surfacing (for example which orthogonal Cauchy product variant matched).
Failures carry short textual renderings of both sides.

The final verdict of every comparison is structural equality of canonical
Laurent polynomials.  Random-point evaluation (grid.eval_points > 0) is a
cross-check only: it never replaces the structural comparison, it just also
evaluates both sides at random rational points and flags any disagreement
between the two methods, which would indicate an arithmetic bug rather than
a false identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from . import fock
from .characters import (
    DivisionWitnessFailed,
    ReductionMismatch,
    o_intermediate_reduce,
    o_odd_closed,
    o_skew,
    o_universal,
    o_universal_seq,
    sp_bialternant,
    o_even_bialternant,
    sp_odd_bialternant,
    sp_skew,
    sp_universal,
    sp_universal_seq,
    schur,
    skew_det,
    universal_det,
)
from .partitions import (
    EMPTY,
    Partition,
    enumerate_partitions,
    gt_chains,
    interlaces,
    partitions_of,
    subpartitions,
)
from .ring import ONE, ZERO, LaurentPoly, xvar, yvar, zvar
from .series import HSpec, check_newton


@dataclass(frozen=True)
class Grid:
    """Bounds for a verification run; defaults match the acceptance grids."""

    n_range: tuple[int, int] = (0, 3)
    m_range: tuple[int, int] = (0, 2)
    max_weight: int = 6
    max_len: int = 4
    degree_cap: int = 6
    rng_seed: int = 0
    eval_points: int = 0

    def __post_init__(self):
        for lo, hi in (self.n_range, self.m_range):
            if lo < 0 or hi < lo:
                raise ValueError("ranges must be 0 <= lo <= hi")
        if min(self.max_weight, self.max_len, self.degree_cap) < 0:
            raise ValueError("bounds must be >= 0")

    def to_json(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "m_range": list(self.m_range),
            "max_weight": self.max_weight,
            "max_len": self.max_len,
            "degree_cap": self.degree_cap,
            "rng_seed": self.rng_seed,
            "eval_points": self.eval_points,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Grid":
        kwargs = dict(data)
        for key in ("n_range", "m_range"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)


@dataclass
class CheckReport:
    check_name: str
    instances_run: int
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check_name": self.check_name,
            "instances_run": self.instances_run,
            "passed": self.passed,
            "failures": [
                {"instance": d, "lhs": l, "rhs": r} for d, l, r in self.failures
            ],
            "notes": list(self.notes),
        }


def _short(p: LaurentPoly, limit: int = 160) -> str:
    s = p.text()
    return s if len(s) <= limit else s[: limit - 3] + "..."


_EVAL_CHOICES = tuple(Fraction(v) for v in (-5, -4, -3, -2, -1, 1, 2, 3, 4, 5))


class _Session:
    """Collects instances/failures for one suite and owns the comparer."""

    def __init__(self, name: str, grid: Grid):
        self.name = name
        self.grid = grid
        self.rng = random.Random(grid.rng_seed)
        self.instances = 0
        self._failures: list[tuple[tuple, str, str, str]] = []
        self.notes: list[str] = []

    def check(self, key, desc: str, lhs: LaurentPoly, rhs: LaurentPoly) -> bool:
        self.instances += 1
        structural = lhs == rhs
        if self.grid.eval_points > 0:
            names = sorted(lhs.variables() | rhs.variables())
            for _ in range(self.grid.eval_points):
                point = {v: self.rng.choice(_EVAL_CHOICES) for v in names}
                sampled = lhs.evaluate(point) == rhs.evaluate(point)
                if sampled != structural:
                    self.notes.append(
                        f"evaluation cross-check disagrees with structural "
                        f"comparison at {desc}"
                    )
                    self._failures.append((key, desc, _short(lhs), _short(rhs)))
                    return False
        if not structural:
            self._failures.append((key, desc, _short(lhs), _short(rhs)))
        return structural

    def fail(self, key, desc: str, lhs: str, rhs: str) -> None:
        self.instances += 1
        self._failures.append((key, desc, lhs, rhs))

    def ok(self) -> None:
        self.instances += 1

    def report(self) -> CheckReport:
        self._failures.sort(key=lambda f: (f[0], f[1]))
        return CheckReport(
            self.name,
            self.instances,
            [(d, l, r) for _, d, l, r in self._failures],
            self.notes,
        )


def _lams(max_weight: int, max_len: int):
    return list(enumerate_partitions(max_len, max_weight))


# -- commutation -------------------------------------------------------------

# relation tables: outer kind applied last.  Each entry maps (i, j) to the
# two composed words whose sum must be 0 (or delta_{ij} for the mixed ones).
_RELATIONS = (
    ("sp_plain", "Y", "Y", lambda i, j: ((i, j), (j + 1, i - 1)), False),
    ("sp_star", "Ystar", "Ystar", lambda i, j: ((i, j), (j - 1, i + 1)), False),
    ("sp_mixed", "Y", "Ystar", lambda i, j: ((i, j), (j + 1, i + 1)), True),
    ("o_plain", "W", "W", lambda i, j: ((i, j), (j + 1, i - 1)), False),
    ("o_star", "Wstar", "Wstar", lambda i, j: ((i, j), (j - 1, i + 1)), False),
    ("o_mixed", "W", "Wstar", lambda i, j: ((i, j), (j + 1, i + 1)), True),
)


# Fraction arithmetic is the bottleneck at this scale (tens of millions of
# products per relation family), so compositions use the integer-scaled fock
# rows and accumulate pure ints keyed by interned partition ids.

_PID: dict[tuple[int, ...], int] = {}


def _pid(nu: tuple[int, ...]) -> int:
    pid = _PID.get(nu)
    if pid is None:
        pid = _PID[nu] = len(_PID)
    return pid


@lru_cache(maxsize=None)
def _mode_ids(kind, k, mu):
    entries, den = fock._mode_row_scaled(kind, k, mu)
    return tuple((_pid(nu), v) for nu, v in entries), den


def _compose_on_basis(kind_out, k_out, kind_in, k_in, mu):
    """Apply kind_in then kind_out; returns (id-keyed int dict, denominator)."""
    inner, d_in = fock._mode_row_scaled(kind_in, k_in, mu)
    pieces = []
    lcm = 1
    for nu, qi in inner:
        entries, s = _mode_ids(kind_out, k_out, nu)
        pieces.append((qi, entries, s))
        lcm = lcm * s // gcd(lcm, s)
    out: dict[int, int] = {}
    for qi, entries, s in pieces:
        f = qi * (lcm // s)
        for rid, ri in entries:
            val = out.get(rid, 0) + f * ri
            if val:
                out[rid] = val
            elif rid in out:
                del out[rid]
    return out, d_in * lcm


def check_commutation(grid: Grid) -> CheckReport:
    """Quadratic exchange relations for all four mode families, on every
    power-sum basis vector up to the weight bound."""
    ses = _Session("commutation", grid)
    bound = grid.degree_cap
    basis = [
        mu for w in range(grid.max_weight + 1) for mu in partitions_of(w)
    ]
    pairs = [
        (i, j)
        for i in range(-bound, bound + 1)
        for j in range(-bound, bound + 1)
    ]
    for name, kind_a, kind_b, words, mixed in _RELATIONS:
        # second word swaps the families: X_a X*_b + X*_a' X_b'
        second_out = kind_b if mixed else kind_a
        second_in = kind_a if mixed else kind_b
        for mu in basis:
            # within the pure families the second word of one index pair is
            # the first word of another, so memoize per basis vector
            memo: dict = {}
            mu_id = _pid(mu)
            for i, j in pairs:
                (w1a, w1b), (w2a, w2b) = words(i, j)
                key = (kind_a, w1a, kind_b, w1b)
                r1 = memo.get(key)
                if r1 is None:
                    r1 = memo[key] = _compose_on_basis(kind_a, w1a, kind_b, w1b, mu)
                key = (second_out, w2a, second_in, w2b)
                r2 = memo.get(key)
                if r2 is None:
                    r2 = memo[key] = _compose_on_basis(
                        second_out, w2a, second_in, w2b, mu
                    )
                out1, d1 = r1
                out2, d2 = r2
                den = d1 * d2 // gcd(d1, d2)
                f1, f2 = den // d1, den // d2
                acc = {rid: v * f1 for rid, v in out1.items()}
                for rid, r in out2.items():
                    val = acc.get(rid, 0) + r * f2
                    if val:
                        acc[rid] = val
                    elif rid in acc:
                        del acc[rid]
                if mixed and i == j:
                    val = acc.get(mu_id, 0) - den
                    if val:
                        acc[mu_id] = val
                    elif mu_id in acc:
                        del acc[mu_id]
                ses.instances += 1
                if acc:
                    ses._failures.append(
                        (
                            (sum(mu), name, i, j),
                            f"{name} i={i} j={j} mu={list(mu)}",
                            f"residual on {len(acc)} basis vectors",
                            "0",
                        )
                    )
    return ses.report()


def check_orthonormality(grid: Grid) -> CheckReport:
    """pairing(mu, lam) is 1 when the partitions agree and 0 otherwise."""
    ses = _Session("orthonormality", grid)
    lams = _lams(grid.max_weight, grid.max_len)
    for family in ("sp", "o"):
        for mu in lams:
            for lam in lams:
                got = fock.pairing(mu, lam, family)
                want = ONE if mu == lam else ZERO
                ses.check(
                    (mu.weight + lam.weight, family),
                    f"{family} mu={mu.parts} lam={lam.parts}",
                    got,
                    want,
                )
    return ses.report()


def check_bialternants(grid: Grid) -> CheckReport:
    """Every closed ratio form against its determinant, multiplicatively."""
    ses = _Session("bialternants", grid)
    n_hi = grid.n_range[1]
    cases = []
    for n in range(min(3, n_hi) + 1):
        for lam in _lams(grid.max_weight, n):
            cases.append(("sp", lam, n, lambda l_, n_: sp_bialternant(l_, n_)))
    for n in range(min(2, n_hi) + 1):
        for lam in _lams(grid.max_weight, n + 1):
            cases.append(
                ("sp_odd", lam, n, lambda l_, n_: sp_odd_bialternant(l_, n_))
            )
    for l in range(min(3, n_hi) + 1):
        for lam in _lams(grid.max_weight, l):
            cases.append(("o_even", lam, l, lambda l_, n_: o_even_bialternant(l_, n_)))
    for n in range(min(2, n_hi) + 1):
        for lam in _lams(grid.max_weight, n):
            for zv in (1, -1):
                cases.append(
                    (
                        f"o_odd z={zv}",
                        lam,
                        n,
                        lambda l_, n_, zv=zv: o_odd_closed(l_, n_, zv),
                    )
                )
    for tag, lam, n, fn in cases:
        try:
            fn(lam, n)
            ses.ok()
        except DivisionWitnessFailed as exc:
            ses.fail(
                (lam.weight, tag, n),
                f"{tag} lam={lam.parts} n={n}",
                f"witness failed: {exc}",
                "",
            )
    return ses.report()


# -- branching ---------------------------------------------------------------


def _run_branching(ses, fam, n_vals, m_vals, grid, tag: str) -> None:
    # The sum runs over every subshape of lam, not only those short enough to
    # fit the leftover alphabet: the left factor is the vacuum-side
    # determinant at the subshape's own length (stable under padding, and for
    # plain variables nonzero even past the variable count), and the skew
    # factor pads its inner shape to len(lam) so that the inserted bras can
    # see every length-len(lam) component.  Truncating the sum at the leftover
    # alphabet size drops those components and the identity fails, e.g. for
    # lam=(1,1) over two plain variables split 1|1.
    uni = sp_universal if fam == "sp" else o_universal
    for n in n_vals:
        for m in m_vals:
            for lam in _lams(grid.max_weight, n + m):
                lhs = uni(lam, n, m)
                big = lam.length
                for k in range(n + 1):
                    for s in range(m + 1):
                        rhs = ZERO
                        rename = {xvar(i): xvar(n - k + i) for i in range(1, k + 1)}
                        rename.update(
                            {zvar(j): zvar(m - s + j) for j in range(1, s + 1)}
                        )
                        for eta in subpartitions(lam, big):
                            inner = universal_det(fam, eta, eta.length, n - k, m - s)
                            if inner.is_zero():
                                continue
                            piece = skew_det(fam, lam, eta.with_declared(big), k, s)
                            if piece.is_zero():
                                continue
                            if rename:
                                piece = piece.rename(rename)
                            rhs = rhs + inner * piece
                        ses.check(
                            (lam.weight, tag, n, m, k, s),
                            f"{tag} lam={lam.parts} n={n} m={m} split k={k} s={s}",
                            lhs,
                            rhs,
                        )


def check_branching_sp(grid: Grid) -> CheckReport:
    """Universal symplectic branching over every split of both variable blocks."""
    ses = _Session("branching_sp", grid)
    n_vals = range(grid.n_range[0], grid.n_range[1] + 1)
    m_vals = range(grid.m_range[0], grid.m_range[1] + 1)
    _run_branching(ses, "sp", n_vals, m_vals, grid, "sp")
    return ses.report()


def check_branching_o(grid: Grid) -> CheckReport:
    """Universal orthogonal branching over every split of both variable blocks."""
    ses = _Session("branching_o", grid)
    n_vals = range(grid.n_range[0], grid.n_range[1] + 1)
    m_vals = range(grid.m_range[0], grid.m_range[1] + 1)
    _run_branching(ses, "o", n_vals, m_vals, grid, "o")
    return ses.report()


def check_branching_odd_sp(grid: Grid) -> CheckReport:
    """The single-plain-variable branching pair: the plain variable may ride
    with the skew factor or with the inner character; plus the one-variable
    power collapse, which needs the horizontal-strip condition."""
    ses = _Session("branching_odd_sp", grid)
    for n in range(grid.n_range[0], grid.n_range[1] + 1):
        for lam in _lams(grid.max_weight, n + 1):
            lhs = sp_universal(lam, n, 1)
            big = lam.length
            for k in range(n + 1):
                rename = {xvar(i): xvar(n - k + i) for i in range(1, k + 1)}
                # (a) plain variable with the skew factor
                rhs = ZERO
                for eta in subpartitions(lam, big):
                    inner = universal_det("sp", eta, eta.length, n - k, 0)
                    if inner.is_zero():
                        continue
                    piece = skew_det("sp", lam, eta.with_declared(big), k, 1)
                    if piece.is_zero():
                        continue
                    if rename:
                        piece = piece.rename(rename)
                    rhs = rhs + inner * piece
                ses.check(
                    (lam.weight, "z-right", n, k),
                    f"z-right lam={lam.parts} n={n} k={k}",
                    lhs,
                    rhs,
                )
                # (b) plain variable with the inner character
                rhs = ZERO
                for eta in subpartitions(lam, big):
                    inner = universal_det("sp", eta, eta.length, n - k, 1)
                    if inner.is_zero():
                        continue
                    piece = skew_det("sp", lam, eta.with_declared(big), k, 0)
                    if piece.is_zero():
                        continue
                    if rename:
                        piece = piece.rename(rename)
                    rhs = rhs + inner * piece
                ses.check(
                    (lam.weight, "z-left", n, k),
                    f"z-left lam={lam.parts} n={n} k={k}",
                    lhs,
                    rhs,
                )
            # power collapse: one-variable skew pieces are single powers on
            # horizontal strips and vanish otherwise
            rhs = ZERO
            for mu in subpartitions(lam, big):
                piece = skew_det("sp", lam, mu.with_declared(big), 0, 1)
                strip = interlaces(mu, lam)
                want = (
                    LaurentPoly.variable(zvar(1), lam.weight - mu.weight)
                    if strip
                    else ZERO
                )
                ses.check(
                    (lam.weight, "power-piece", n, mu.parts),
                    f"one-var skew lam={lam.parts} mu={mu.parts} n={n}",
                    piece,
                    want,
                )
                if strip:
                    rhs = rhs + universal_det("sp", mu, mu.length, n, 0) * want
            ses.check(
                (lam.weight, "power-sum", n),
                f"power collapse lam={lam.parts} n={n}",
                lhs,
                rhs,
            )
    return ses.report()


# -- Cauchy ------------------------------------------------------------------


def _geometric_in_y(unit: LaurentPoly, s: int, cap: int) -> LaurentPoly:
    acc = ONE
    upow = ONE
    for d in range(1, cap + 1):
        upow = upow * unit
        acc = acc + upow * LaurentPoly.variable(yvar(s), d)
    return acc


def _pair_product(count: int, strict: bool, cap: int, yrank: int) -> LaurentPoly:
    acc = ONE
    for k in range(1, count + 1):
        start = k + 1 if strict else k
        for l in range(start, count + 1):
            factor = ONE - LaurentPoly.variable(yvar(k)) * LaurentPoly.variable(
                yvar(l)
            )
            acc = acc.mul_truncated(factor, yrank, cap)
    return acc


def _cauchy_rhs(n: int, m: int, ycount: int, strict: bool, cap: int) -> LaurentPoly:
    yrank = yvar(1).rank
    units = []
    for i in range(1, n + 1):
        units.append(LaurentPoly.variable(xvar(i)))
        units.append(LaurentPoly.variable(xvar(i), -1))
    for j in range(1, m + 1):
        units.append(LaurentPoly.variable(zvar(j)))
    acc = _pair_product(ycount, strict, cap, yrank)
    for s in range(1, ycount + 1):
        for unit in units:
            acc = acc.mul_truncated(_geometric_in_y(unit, s, cap), yrank, cap)
    return acc


def _cauchy_lhs(char_fn, n: int, m: int, ycount: int, cap: int) -> LaurentPoly:
    acc = ZERO
    for w in range(cap + 1):
        for parts in partitions_of(w):
            if len(parts) > ycount:
                continue
            lam = Partition(parts)
            acc = acc + char_fn(lam, n, m) * schur(lam, ycount)
    return acc


CAUCHY_FAMILIES = ("sp_universal", "sp_odd", "sp_n0", "o_universal")


def check_cauchy(family: str, grid: Grid) -> CheckReport:
    """Character-weighted Schur sums against truncated product sides.

    Grids are intersected with each family's designed envelope so a full run
    stays affordable; the orthogonal family tries both the strict and the
    non-strict pair-product index range and records which one matches.
    """
    if family not in CAUCHY_FAMILIES:
        raise ValueError(f"unknown cauchy family {family!r}")
    ses = _Session(f"cauchy_{family.removesuffix('_universal')}", grid)
    cap = min(grid.degree_cap, 5)
    n_lo, n_hi = grid.n_range
    m_lo, m_hi = grid.m_range
    if family == "sp_universal":
        pairs = [
            (n, m)
            for n in range(n_lo, min(n_hi, 2) + 1)
            for m in range(m_lo, min(m_hi, 1) + 1)
        ]
    elif family == "sp_odd":
        pairs = [(n, 1) for n in range(n_lo, min(n_hi, 2) + 1)]
    elif family == "sp_n0":
        pairs = [(0, m) for m in range(m_lo, min(m_hi, 2) + 1)]
    else:
        pairs = [
            (n, m)
            for n in range(n_lo, min(n_hi, 2) + 1)
            for m in range(m_lo, min(m_hi, 1) + 1)
        ]
    char_fn = o_universal if family == "o_universal" else sp_universal
    for n, m in pairs:
        ycount = n + m
        lhs = _cauchy_lhs(char_fn, n, m, ycount, cap)
        if family == "o_universal":
            rhs_strict = _cauchy_rhs(n, m, ycount, True, cap)
            rhs_loose = _cauchy_rhs(n, m, ycount, False, cap)
            ses.instances += 1
            if lhs == rhs_loose:
                ses.notes.append(
                    f"n={n} m={m}: non-strict pair product (k<=l) matches"
                )
            elif lhs == rhs_strict:
                ses.notes.append(f"n={n} m={m}: strict pair product (k<l) matches")
            else:
                ses._failures.append(
                    (
                        (n + m, n, m),
                        f"o cauchy n={n} m={m} D={cap}: neither variant",
                        _short(lhs),
                        _short(rhs_loose),
                    )
                )
        else:
            rhs = _cauchy_rhs(n, m, ycount, True, cap)
            ses.check((n + m, n, m), f"{family} n={n} m={m} D={cap}", lhs, rhs)
    return ses.report()


# -- transitions, GT, dual engine ---------------------------------------------


def _is_partition_seq(seq) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:])) and (not seq or seq[-1] >= 0)


def check_transition_odd(grid: Grid) -> CheckReport:
    """Rewrites of the one-plain-variable characters as signed sums of
    paired-variable characters with the plain variable adjoined as a pair."""
    ses = _Session("transition_odd", grid)
    z1 = LaurentPoly.variable(zvar(1))
    for n in range(grid.n_range[0], grid.n_range[1] + 1):
        for lam in _lams(grid.max_weight, n + 1):
            lhs = sp_universal(lam, n, 1)
            lp = lam.padded(n + 1)
            rhs = ZERO
            for eps in product((0, 1), repeat=n + 1):
                seq = tuple(a - e for a, e in zip(lp, eps))
                if _is_partition_seq(seq):
                    term = sp_universal(Partition(seq), n + 1, 0).substitute(
                        {xvar(n + 1): z1}
                    )
                    sign = -1 if sum(eps) % 2 else 1
                    rhs = rhs + term * LaurentPoly.variable(
                        zvar(1), -sum(eps)
                    ) * sign
                else:
                    dropped = sp_universal_seq(seq, n + 1, 0)
                    ses.check(
                        (lam.weight, "sp-drop", n, seq),
                        f"sp dropped term lam={lam.parts} n={n} eps={list(eps)}",
                        dropped,
                        ZERO,
                    )
            ses.check(
                (lam.weight, "sp", n),
                f"sp transition lam={lam.parts} n={n}",
                lhs,
                rhs,
            )
        for lam in _lams(grid.max_weight, n):
            lhs = o_universal(lam, n, 1)
            lp = lam.padded(n)
            rhs = ZERO
            for eps in product((0, 1), repeat=n):
                seq = tuple(a - e for a, e in zip(lp, eps))
                if _is_partition_seq(seq):
                    term = o_universal(Partition(seq), n + 1, 0).substitute(
                        {xvar(n + 1): z1}
                    )
                    sign = -1 if sum(eps) % 2 else 1
                    rhs = rhs + term * LaurentPoly.variable(
                        zvar(1), -sum(eps)
                    ) * sign
                else:
                    dropped = o_universal_seq(seq, n + 1, 0)
                    ses.check(
                        (lam.weight, "o-drop", n, seq),
                        f"o dropped term lam={lam.parts} n={n} eps={list(eps)}",
                        dropped,
                        ZERO,
                    )
            ses.check(
                (lam.weight, "o", n),
                f"o transition lam={lam.parts} n={n}",
                lhs,
                rhs,
            )
    return ses.report()


def check_gt_sum(grid: Grid) -> CheckReport:
    """Chain-weight sums against the determinant with the plain variable
    renamed to the extra paired variable; counts checked at the all-ones point."""
    ses = _Session("gt_sum", grid)
    for n in range(max(1, grid.n_range[0]), grid.n_range[1] + 1):
        for lam in _lams(grid.max_weight, n):
            chains = list(gt_chains(lam, n))
            total = ZERO
            for chain in chains:
                exps = chain.weight_exponents()
                mono = ONE
                for i, e in enumerate(exps, start=1):
                    if e:
                        mono = mono * LaurentPoly.variable(xvar(i), e)
                total = total + mono
            rhs = sp_universal(lam, n, 1).substitute(
                {zvar(1): LaurentPoly.variable(xvar(n + 1))}
            )
            ses.check(
                (lam.weight, "sum", n),
                f"gt sum lam={lam.parts} n={n}",
                total,
                rhs,
            )
            ones = {v: Fraction(1) for v in rhs.variables()}
            dim = rhs.evaluate(ones) if rhs.variables() else rhs.constant_value()
            ses.instances += 1
            if Fraction(len(chains)) != Fraction(dim):
                ses._failures.append(
                    (
                        (lam.weight, "count", n),
                        f"gt count lam={lam.parts} n={n}",
                        str(len(chains)),
                        str(dim),
                    )
                )
    return ses.report()


def check_fock_vs_determinant(grid: Grid) -> CheckReport:
    """Operator matrix elements against skew determinants, both families."""
    ses = _Session("fock_vs_determinant", grid)
    dim_cap = 6
    alphas = _lams(grid.max_weight, dim_cap)
    for family, skew in (("sp", sp_skew), ("o", o_skew)):
        for n in range(grid.n_range[0], grid.n_range[1] + 1):
            for m in range(grid.m_range[0], grid.m_range[1] + 1):
                for alpha in alphas:
                    for beta in subpartitions(alpha, dim_cap):
                        l = beta.length
                        if l + n + m > dim_cap or alpha.length > l + n + m:
                            continue
                        b = beta.with_declared(l)
                        me = fock.matrix_element(b, n, m, alpha, family)
                        det = skew(alpha, b, n, m)
                        ses.check(
                            (alpha.weight, family, n, m, beta.parts),
                            f"{family} alpha={alpha.parts} beta={beta.parts} "
                            f"n={n} m={m}",
                            me,
                            det,
                        )
    return ses.report()


def check_reductions(grid: Grid) -> CheckReport:
    """Specialization bundle: no-paired-variable branchings, the reduced
    orthogonal determinant, the z=+-1 closed-form witnesses, and stability
    under permuting the plain-variable block."""
    ses = _Session("reductions", grid)
    m_vals = range(grid.m_range[0], grid.m_range[1] + 1)
    # (a) branchings with the paired block empty
    _run_branching(ses, "sp", [0], m_vals, grid, "sp n=0")
    _run_branching(ses, "o", [0], m_vals, grid, "o n=0")
    # (b) reduced determinant over h'_k = h_k - h_{k-2}
    for n in range(grid.n_range[0], grid.n_range[1] + 1):
        for m in m_vals:
            for lam in _lams(grid.max_weight, n):
                try:
                    o_intermediate_reduce(lam, n, m)
                    ses.ok()
                except ReductionMismatch as exc:
                    ses.fail(
                        (lam.weight, "reduce", n, m),
                        f"reduce lam={lam.parts} n={n} m={m}",
                        str(exc),
                        "",
                    )
    # (c) closed odd-orthogonal forms at z = +-1
    for n in range(min(2, grid.n_range[1]) + 1):
        for lam in _lams(grid.max_weight, n):
            for zv in (1, -1):
                try:
                    o_odd_closed(lam, n, zv)
                    ses.ok()
                except DivisionWitnessFailed as exc:
                    ses.fail(
                        (lam.weight, "o_odd", n, zv),
                        f"o_odd lam={lam.parts} n={n} z={zv}",
                        str(exc),
                        "",
                    )
    # (d) plain-block permutation stability for zero-padded shapes
    for n in range(grid.n_range[0], grid.n_range[1] + 1):
        for m in m_vals:
            if m < 2:
                continue
            for lam in _lams(grid.max_weight, n + 1):
                base = sp_universal(lam, n, m)
                for j in range(1, m):
                    swapped = base.rename(
                        {zvar(j): zvar(j + 1), zvar(j + 1): zvar(j)}
                    )
                    ses.check(
                        (lam.weight, "z-swap", n, m, j),
                        f"z-swap lam={lam.parts} n={n} m={m} j={j}",
                        base,
                        swapped,
                    )
    return ses.report()


def check_newton_suite(grid: Grid) -> CheckReport:
    """Alternating elementary/complete recurrences tying the two h-families."""
    ses = _Session("newton", grid)
    for n in range(grid.n_range[0], grid.n_range[1] + 1):
        for m in range(max(1, grid.m_range[0]), grid.m_range[1] + 1):
            N = min(8, grid.degree_cap + 2)
            ses.instances += 1
            if not check_newton(HSpec(n, m, "plain"), N):
                ses._failures.append(
                    (
                        (n + m, n, m),
                        f"newton n={n} m={m} N={N}",
                        "recurrence mismatch",
                        "",
                    )
                )
    return ses.report()


SUITES = {
    "commutation": check_commutation,
    "orthonormality": check_orthonormality,
    "bialternants": check_bialternants,
    "branching_sp": check_branching_sp,
    "branching_o": check_branching_o,
    "branching_odd_sp": check_branching_odd_sp,
    "cauchy_sp": lambda grid: check_cauchy("sp_universal", grid),
    "cauchy_sp_odd": lambda grid: check_cauchy("sp_odd", grid),
    "cauchy_sp_n0": lambda grid: check_cauchy("sp_n0", grid),
    "cauchy_o": lambda grid: check_cauchy("o_universal", grid),
    "transition_odd": check_transition_odd,
    "gt_sum": check_gt_sum,
    "fock_vs_determinant": check_fock_vs_determinant,
    "reductions": check_reductions,
    "newton": check_newton_suite,
}

SUITE_NAMES = tuple(SUITES)


def run_suite(name: str, grid: Grid | None = None) -> CheckReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    return SUITES[name](grid or Grid())


def run_all(grid: Grid | None = None) -> list[CheckReport]:
    grid = grid or Grid()
    return [SUITES[name](grid) for name in SUITE_NAMES]
