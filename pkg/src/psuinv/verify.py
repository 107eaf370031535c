"""Named verification suites over (n, r, framing) grids.

Every check produces one record.  A record is "pass", "fail" or "skipped"
(skipped when a precondition such as the enumeration cap or r > n(n-1) rules
the configuration out).  Reports are deterministic for a fixed config: sampled
inputs come from a seeded ``random.Random`` and records are sorted before
emission.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import characters as ch
from . import gauss as gs
from . import invariants as inv
from . import numtheory as nt
from .cyclotomic import CycloNumber, ResidueSeries, is_prime, xi_valuation
from .rootsys import (
    DEFAULT_CAP,
    MAX_RANK,
    AffineWeylElement,
    Weight,
    WeylElement,
    build_root_system,
    check_box_size,
    enumerate_box,
    on_affine_wall,
    reduce_to_dominant,
    weyl_act,
    weyl_group,
)
from .series import TruncSeries, series_p_r

SCHEMA_VERSION = 1
SUITES = ("gauss", "characters", "invariants", "congruence", "divisibility", "numbertheory", "appendix", "symmetry")
ALL_SUITES = SUITES + ("all",)

DEFAULT_INVARIANT_B = (1, -1, 2, -2, 3, -3, 4, -4)
DEFAULT_DIVISIBILITY_B = (1, -1, 2, -2, 3)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    n_values: tuple[int, ...] = ()
    r_values: tuple[int, ...] = ()
    framings: tuple[tuple[int, ...], ...] = ()
    order: int | None = None
    seed: int = 0
    cap: int = DEFAULT_CAP
    b_values: tuple[int, ...] | None = None
    samples: int = 20
    weyl_samples: int = 50

    def __post_init__(self) -> None:
        if self.suite not in ALL_SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(ALL_SUITES)}")
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        object.__setattr__(self, "r_values", tuple(int(r) for r in self.r_values))
        object.__setattr__(self, "framings", tuple(tuple(int(b) for b in f) for f in self.framings))
        for f in self.framings:
            if not f or any(b == 0 for b in f):
                raise ValueError(f"framing lists must be nonempty with nonzero entries, got {list(f)}")
        if self.b_values is not None:
            object.__setattr__(self, "b_values", tuple(int(b) for b in self.b_values))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n_values": list(self.n_values),
            "r_values": list(self.r_values),
            "framings": [list(f) for f in self.framings],
            "order": self.order,
            "seed": self.seed,
            "cap": self.cap,
            "b_values": None if self.b_values is None else list(self.b_values),
            "samples": self.samples,
            "weyl_samples": self.weyl_samples,
        }


@dataclass
class CheckRecord:
    suite: str
    check: str
    params: dict
    status: str
    lhs: object = None
    rhs: object = None
    valuations: dict | None = None
    detail: str | None = None
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def sort_key(self) -> tuple:
        return (self.suite, self.check, json.dumps(_encode(self.params), sort_keys=True))

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "valuations": self.valuations,
            "detail": self.detail,
        }
        if timings:
            out["runtime"] = f"{self.runtime:.6f}"
        return _encode(out)


@dataclass
class VerificationReport:
    config: SuiteConfig
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {"total": len(self.records), "pass": 0, "fail": 0, "skipped": 0}
        for rec in self.records:
            counts[rec.status] += 1
        return counts

    @property
    def ok(self) -> bool:
        return all(rec.passed for rec in self.records)

    def failures(self) -> list[CheckRecord]:
        return [rec for rec in self.records if not rec.passed]

    def to_json(self, timings: bool = False) -> dict:
        return _encode(
            {
                "schema": SCHEMA_VERSION,
                "config": self.config.to_json(),
                "summary": self.summary,
                "ok": self.ok,
                "records": [rec.to_json(timings) for rec in self.records],
            }
        )

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.to_json(timings), indent=2, sort_keys=True) + "\n"


def _encode(obj):
    """JSON-ready copy with every number written as a decimal string."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, float):
        return repr(obj)
    if isinstance(obj, (CycloNumber, ResidueSeries, TruncSeries)):
        return _encode(obj.to_json())
    if isinstance(obj, Weight):
        return _encode(list(obj.coords))
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return str(obj)


class _Recorder:
    def __init__(self) -> None:
        self.records: list[CheckRecord] = []

    def run(self, suite: str, check: str, params: dict, fn: Callable[[], tuple]) -> None:
        """fn returns (ok, lhs, rhs, valuations) or raises _Skip."""
        start = time.perf_counter()
        try:
            ok, lhs, rhs, vals = fn()
            status = "pass" if ok else "fail"
            detail = None
        except _Skip as exc:
            status, lhs, rhs, vals, detail = "skipped", None, None, None, str(exc)
        except (ValueError, ArithmeticError, ZeroDivisionError) as exc:
            status, lhs, rhs, vals, detail = "fail", None, None, None, f"{type(exc).__name__}: {exc}"
        self.records.append(
            CheckRecord(suite, check, params, status, lhs, rhs, vals, detail, time.perf_counter() - start)
        )

    def skip(self, suite: str, check: str, params: dict, reason: str) -> None:
        self.records.append(CheckRecord(suite, check, params, "skipped", detail=reason))

    def fail(self, suite: str, check: str, params: dict, reason: str) -> None:
        self.records.append(CheckRecord(suite, check, params, "fail", detail=reason))


class _Skip(Exception):
    pass


def _grid(cfg: SuiteConfig, rec: _Recorder, suite: str, *, min_r: Callable[[int], int] = lambda n: n + 1):
    """Yield admissible (n, r) pairs, recording invalid ones."""
    for n in cfg.n_values:
        for r in cfg.r_values:
            params = {"n": n, "r": r}
            if not 2 <= n <= MAX_RANK:
                rec.fail(suite, "config", params, f"n must lie in [2, {MAX_RANK}]")
                continue
            if r < 3 or not is_prime(r):
                rec.fail(suite, "config", params, "r must be an odd prime")
                continue
            if r < min_r(n):
                rec.skip(suite, "config", params, f"r must be at least {min_r(n)} for this suite")
                continue
            try:
                check_box_size(build_root_system(n), r, cfg.cap)
            except ValueError as exc:
                rec.skip(suite, "config", params, str(exc))
                continue
            yield n, r


def _b_range(r: int) -> list[int]:
    return [b for b in range(-(r - 1), r) if b != 0]


def _random_root_lattice_weight(rs, rnd: random.Random, spread: int) -> Weight:
    k = [rnd.randint(-spread, spread) for _ in range(rs.rank)]
    return rs.root_weight(k)


def _vals(**kw) -> dict:
    return {k: (None if v == math.inf else v) for k, v in kw.items()}


# suites


def _suite_gauss(cfg: SuiteConfig, rec: _Recorder) -> None:
    S = "gauss"
    for r in sorted(set(cfg.r_values)):
        if r < 3 or not is_prime(r):
            continue

        def gamma_sq(r=r):
            g = gs.quadratic_gauss(r)
            rhs = CycloNumber.from_scalar(r, (-1) ** ((r - 1) // 2) * r)
            return g * g == rhs, g * g, rhs, None

        rec.run(S, "gamma_squared", {"r": r}, gamma_sq)
        for b in range(1, r):

            def twisted(r=r, b=b):
                lhs = gs.twisted_quadratic_gauss(r, b)
                rhs = gs.legendre_symbol(b, r) * gs.quadratic_gauss(r)
                return lhs == rhs, lhs, rhs, None

            rec.run(S, "twisted_gauss", {"r": r, "b": b}, twisted)

    for n, r in _grid(cfg, rec, S):
        rs = build_root_system(n)
        ctx = gs.GaussContext(rs, r, cfg.cap)
        rnd = random.Random(f"{cfg.seed}:gauss:{n}:{r}")
        betas = [_random_root_lattice_weight(rs, rnd, 2 * r) for _ in range(cfg.samples)]
        for b in _b_range(r):
            p = {"n": n, "r": r, "b": b}

            def closed(ctx=ctx, b=b):
                lhs, rhs = gs.root_gauss_brute(ctx, b), gs.root_gauss_closed(ctx, b)
                return lhs == rhs, lhs, rhs, None

            def valuation(ctx=ctx, b=b, n=n, r=r):
                v = xi_valuation(gs.root_gauss_brute(ctx, b))
                expected = (n - 1) * (r - 1) // 2
                return v == expected, v, expected, _vals(G=v)

            def ratio(ctx=ctx, b=b):
                sn = 1 if b > 0 else -1
                lhs = gs.root_gauss_brute(ctx, b)
                rhs = gs.gauss_ratio_closed(ctx, b) * gs.root_gauss_brute(ctx, sn)
                return lhs == rhs, lhs, rhs, None

            def multivar(ctx=ctx, b=b):
                closed_value = gs.multivar_gauss_closed(ctx, b)
                diag = gs.multivar_gauss_diagonal(ctx, b)
                brute = gs.multivar_gauss_brute(ctx, b)
                return brute == closed_value == diag, brute, closed_value, None

            def translation(ctx=ctx, b=b, betas=betas):
                g = gs.root_gauss_brute(ctx, b)
                bad = [beta.coords for beta in betas if gs.root_gauss_translated(ctx, b, beta) != g]
                return not bad, bad, [], None

            def square(ctx=ctx, b=b, betas=betas):
                bad = [beta.coords for beta in betas if not gs.complete_square_check(ctx, b, beta)[0]]
                return not bad, bad, [], None

            rec.run(S, "closed_form", p, closed)
            rec.run(S, "valuation", p, valuation)
            rec.run(S, "sign_ratio", p, ratio)
            rec.run(S, "multivariable", p, multivar)
            rec.run(S, "translation", p, translation)
            rec.run(S, "complete_square", p, square)


def _random_weight(rs, rnd: random.Random, spread: int) -> Weight:
    return Weight(tuple(rnd.randint(-spread, spread) for _ in range(rs.rank)))


def _suite_characters(cfg: SuiteConfig, rec: _Recorder) -> None:
    S = "characters"
    for n, r in _grid(cfg, rec, S):
        rs = build_root_system(n)
        ctx = ch.CharacterContext(rs, r, cfg.cap)
        rnd = random.Random(f"{cfg.seed}:characters:{n}:{r}")
        p = {"n": n, "r": r}
        weights = [_random_weight(rs, rnd, 2 * r) for _ in range(cfg.weyl_samples)]

        def weyl(ctx=ctx, weights=weights):
            bad = [mu.coords for mu in weights if not ch.weyl_denominator_check(ctx, mu)[0]]
            return not bad, bad, [], None

        def unit(ctx=ctx):
            v = ch.unknot_J(ctx, ctx.rs.rho)
            return v == 1, v, 1, None

        coset = [rs.rho + _random_root_lattice_weight(rs, rnd, r) for _ in range(cfg.samples)]

        def signed(ctx=ctx, coset=coset):
            bad = []
            for mu in coset:
                for w in weyl_group(ctx.rs):
                    if ch.extended_J(ctx, weyl_act(ctx.rs, w, mu)) != w.sign * ch.extended_J(ctx, mu):
                        bad.append((mu.coords, w.perm))
                if reduce_to_dominant(ctx.rs, mu) is not None and ch.extended_J(ctx, mu) != ch.unknot_J(ctx, mu):
                    bad.append((mu.coords, "formula"))
            return not bad, bad, [], None

        def boundary(ctx=ctx):
            bad = []
            for mu in enumerate_box(ctx.rs, ctx.r, ctx.cap):
                on_wall = on_affine_wall(ctx.rs, mu, ctx.r)
                if on_wall != ch.unknot_Q(ctx, mu).is_zero():
                    bad.append(mu.coords)
            return not bad, bad, [], None

        rec.run(S, "weyl_denominator", p, weyl)
        rec.run(S, "unknot_rho", p, unit)
        rec.run(S, "signed_extension", p, signed)
        rec.run(S, "boundary_vanishing", p, boundary)


def random_affine_element(rs, rnd: random.Random, spread: int = 2) -> AffineWeylElement:
    perm = list(range(rs.n))
    rnd.shuffle(perm)
    return AffineWeylElement(WeylElement.from_perm(perm), _random_root_lattice_weight(rs, rnd, spread))


def _suite_symmetry(cfg: SuiteConfig, rec: _Recorder) -> None:
    S = "symmetry"
    for n, r in _grid(cfg, rec, S):
        rs = build_root_system(n)
        ctx = ch.CharacterContext(rs, r, cfg.cap)
        rnd = random.Random(f"{cfg.seed}:symmetry:{n}:{r}")
        box = list(enumerate_box(rs, r, cfg.cap))
        for i in range(cfg.samples):
            w = random_affine_element(rs, rnd)
            mu = rnd.choice(box)

            def check(ctx=ctx, mu=mu, w=w):
                ok, payload = ch.affine_symmetry_check(ctx, mu, w)
                return ok, payload["lhs"], payload["rhs"], None

            rec.run(S, "affine_invariance", {"n": n, "r": r, "sample": i, "mu": mu, "w": list(w.finite.perm), "beta": w.translation}, check)


def _suite_invariants(cfg: SuiteConfig, rec: _Recorder, appendix_only: bool = False) -> None:
    S = "appendix" if appendix_only else "invariants"
    b_values = cfg.b_values if cfg.b_values is not None else DEFAULT_INVARIANT_B
    for n, r in _grid(cfg, rec, S):
        rs = build_root_system(n)
        ctx = ch.CharacterContext(rs, r, cfg.cap)
        for b in b_values:
            p = {"n": n, "r": r, "b": b}
            if b == 0 or b % r == 0:
                rec.skip(S, "framing", p, "framing must be nonzero and prime to r")
                continue

            def alcove(ctx=ctx, b=b, n=n):
                lhs = inv.F_unknot_brute(ctx, b)
                rhs = math.factorial(n) * inv.F_alcove(ctx, b)
                return lhs == rhs, lhs, rhs, None

            rec.run(S, "alcove_sum", p, alcove)
            if appendix_only:

                def multivar(ctx=ctx, b=b):
                    g = inv.gauss_context(ctx)
                    lhs, rhs = gs.multivar_gauss_diagonal(g, b), gs.multivar_gauss_closed(g, b)
                    return lhs == rhs, lhs, rhs, None

                rec.run(S, "gauss_diagonalization", p, multivar)
                continue

            def closed(ctx=ctx, b=b):
                lhs, rhs = inv.F_unknot_brute(ctx, b), inv.F_unknot_closed(ctx, b)
                return lhs == rhs, lhs, rhs, None

            def valuation(ctx=ctx, b=b, n=n, r=r):
                v = xi_valuation(inv.F_unknot_brute(ctx, b))
                expected = inv.F_unknot_valuation(n, r)
                return v == expected, v, expected, _vals(F=v)

            rec.run(S, "F_closed_form", p, closed)
            rec.run(S, "F_valuation", p, valuation)
            if r > n * (n - 1) and abs(b) < r:

                def lens(ctx=ctx, b=b):
                    lhs, rhs = inv.tau_r_lens_brute(ctx, b), inv.tau_r_lens_closed(ctx, b)
                    v = xi_valuation(lhs)
                    ok = lhs == rhs and v == 0 and lhs.is_integral()
                    return ok, lhs, rhs, _vals(tau=v)

                rec.run(S, "lens_value", p, lens)
        for f in cfg.framings:
            p = {"n": n, "r": r, "framings": list(f)}
            pres = inv.SurgeryPresentation(f)

            def multiplicative(ctx=ctx, pres=pres):
                if ctx.r <= ctx.n * (ctx.n - 1) or pres.h1_order % ctx.r == 0:
                    raise _Skip("needs r > n(n-1) and r prime to |H_1|")
                if any(abs(b) >= ctx.r for b in pres.framings):
                    raise _Skip("closed lens formula needs |b| < r")
                lhs = inv.tau_r_surgery(ctx, pres)
                rhs = CycloNumber.one(ctx.r)
                for b in pres.framings:
                    rhs = rhs * inv.tau_r_lens_closed(ctx, b)
                return lhs == rhs and lhs.is_integral(), lhs, rhs, _vals(tau=xi_valuation(lhs))

            rec.run(S, "multiplicativity", p, multiplicative)


def _suite_congruence(cfg: SuiteConfig, rec: _Recorder) -> None:
    S = "congruence"
    for n, r in _grid(cfg, rec, S, min_r=lambda n: n * (n - 1) + 1):
        ctx = ch.CharacterContext(build_root_system(n), r, cfg.cap)
        for f in cfg.framings:
            pres = inv.SurgeryPresentation(f)
            p = {"n": n, "r": r, "framings": list(f)}
            if pres.h1_order % r == 0:
                rec.skip(S, "main", p, f"r divides |H_1| = {pres.h1_order}")
                continue

            def main(ctx=ctx, pres=pres):
                ok, report = inv.congruence_check(ctx, pres, cfg.order)
                return ok, report["lhs"], report["rhs"], None

            def constant(ctx=ctx, pres=pres):
                lhs = inv.tau_series_surgery(ctx, pres, 0)[0]
                rhs = inv.series_constant_term(ctx, pres)
                return lhs == rhs, lhs, rhs, None

            rec.run(S, "main", p, main)
            rec.run(S, "constant_term", p, constant)
        for b in (1, -1):
            p = {"n": n, "r": r, "framings": [b]}

            def sphere(ctx=ctx, b=b):
                pres = inv.SurgeryPresentation((b,))
                t = inv.tau_r_surgery(ctx, pres)
                s = inv.tau_series_surgery(ctx, pres, 4)
                return t == 1 and s == TruncSeries.constant(1, 4), t, s, None

            rec.run(S, "sphere", p, sphere)


def _eta_monomials(rank: int, max_degree: int) -> Iterable[inv.EtaMonomial]:
    for a in itertools.product(range(max_degree + 1), repeat=rank):
        if sum(a) <= max_degree:
            yield inv.EtaMonomial(a)


def _suite_divisibility(cfg: SuiteConfig, rec: _Recorder) -> None:
    S = "divisibility"
    b_values = cfg.b_values if cfg.b_values is not None else DEFAULT_DIVISIBILITY_B
    for n, r in _grid(cfg, rec, S):
        ctx = ch.CharacterContext(build_root_system(n), r, cfg.cap)
        rb = (r - 1 - n * (n - 1)) // 2
        for b in b_values:
            if b == 0 or b % r == 0:
                rec.skip(S, "framing", {"n": n, "r": r, "b": b}, "framing must be nonzero and prime to r")
                continue
            for a in _eta_monomials(n - 1, 6):
                p = {"n": n, "r": r, "b": b, "a": list(a.a)}
                order = max(cfg.order or 0, rb, inv.gamma_order_bound(n, a) + 1)

                def order_bound(ctx=ctx, a=a, b=b, order=order):
                    g = inv.gamma_transform(ctx, a, b, order)
                    o = g.x_order()
                    bound = inv.gamma_order_bound(ctx.n, a)
                    return o is None or o >= bound, o, bound, None

                rec.run(S, "gamma_order", p, order_bound)
                if a.degree > 4:
                    continue

                def sao(ctx=ctx, a=a, b=b):
                    ok, payload = inv.binomial_sum_check(ctx, a, b)
                    return ok, payload["valuation"], payload["bound"], _vals(sum=payload["valuation"])

                rec.run(S, "binomial_sum", p, sao)
                if r <= n * (n - 1):
                    rec.skip(S, "g_b", p, "p_r needs r > n(n-1)")
                    continue

                def gb(ctx=ctx, a=a, b=b, order=order):
                    lhs = inv.reduce_p_r(inv.g_b_bruteform(ctx, a, b), ctx.n)
                    rhs = series_p_r(inv.gamma_transform(ctx, a, b, order), ctx.r, ctx.n)
                    return lhs == rhs, lhs, rhs, None

                rec.run(S, "g_b", p, gb)


def random_lemma_case(rnd: random.Random) -> tuple[tuple[int, ...], dict]:
    """Random exponent vector a and a polynomial of total degree < |a|."""
    dim = rnd.randint(1, 3)
    while True:
        a = tuple(rnd.randint(0, 3) for _ in range(dim))
        if sum(a) >= 1:
            break
    poly = {}
    for _ in range(rnd.randint(1, 3)):
        deg = rnd.randint(0, sum(a) - 1)
        exps = [0] * dim
        for _ in range(deg):
            exps[rnd.randrange(dim)] += 1
        key = tuple(exps)
        poly[key] = poly.get(key, Fraction(0)) + rnd.randint(-9, 9)
    return a, poly


def _suite_numbertheory(cfg: SuiteConfig, rec: _Recorder) -> None:
    S = "numbertheory"
    rnd = random.Random(f"{cfg.seed}:numbertheory")
    for r in sorted(set(cfg.r_values)):
        if r < 3 or not is_prime(r):
            rec.fail(S, "config", {"r": r}, "r must be an odd prime")
            continue
        for d in range(11):

            def power(r=r, d=d):
                lhs, rhs = nt.power_sum(r, d), nt.power_sum_bernoulli(r, d)
                return lhs == rhs, lhs, rhs, None

            rec.run(S, "power_sum", {"r": r, "d": d}, power)
        for d in range(13):

            def column(r=r, d=d):
                ok, payload = nt.binom_column_sum_valuation(r, d)
                return ok, payload["valuation"], payload["bound"], _vals(sum=payload["valuation"])

            rec.run(S, "binomial_column", {"r": r, "d": d}, column)
        for n in cfg.n_values:
            if not 2 <= n <= MAX_RANK:
                continue
            m = n - 1
            if r**m > cfg.cap:
                rec.skip(S, "box_polynomial", {"n": n, "r": r}, "box exceeds enumeration cap")
                continue
            for i in range(cfg.samples):
                poly = {}
                for _ in range(rnd.randint(1, 3)):
                    ls = tuple(rnd.randint(0, r) for _ in range(m))
                    poly[ls] = poly.get(ls, 0) + rnd.randint(-9, 9)

                def box(r=r, poly=poly, m=m):
                    ok, payload = nt.box_binomial_sum_check(r, poly, m)
                    return ok, payload["valuation"], payload["bound"], None

                rec.run(S, "box_polynomial", {"n": n, "r": r, "sample": i, "poly": sorted(poly.items())}, box)
    if cfg.r_values:
        for i in range(200):
            a, poly = random_lemma_case(rnd)

            def vanish(a=a, poly=poly):
                ok, payload = nt.binom_vanishing_check(a, poly)
                return ok, payload["value"], 0, None

            rec.run(S, "alternating_vanishing", {"sample": i, "a": list(a), "poly": sorted(poly.items())}, vanish)


_RUNNERS = {
    "gauss": _suite_gauss,
    "characters": _suite_characters,
    "symmetry": _suite_symmetry,
    "invariants": _suite_invariants,
    "appendix": lambda cfg, rec: _suite_invariants(cfg, rec, appendix_only=True),
    "congruence": _suite_congruence,
    "divisibility": _suite_divisibility,
    "numbertheory": _suite_numbertheory,
}


def run_suite(cfg: SuiteConfig) -> VerificationReport:
    rec = _Recorder()
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    for name in names:
        _RUNNERS[name](cfg, rec)
    records = sorted(rec.records, key=CheckRecord.sort_key)
    return VerificationReport(cfg, records)
