"""Named verification pipelines driven by a :class:`RawConfig`.

Every pipeline validates its whole configuration before computing anything,
then returns a :class:`Report`.  Randomized sweeps draw from
``random.Random(seed)`` only, so a fixed seed gives a fixed report.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

import mpmath

from .config import ConfigError, Expr, RawConfig, format_value
from .lseries import DEFAULT_TRUNC, XPoly, XRational, naive_rs, series_of
from .report import Report
from .reps import (
    CentralChar,
    LemmaViolation,
    RepDescriptor,
    UnsupportedCase,
    boxtimes,
    correction_polynomial,
    langlands_sum,
    make_character,
    naive_rs_lfactor,
    sigma_b,
    standard_lfactor,
    supercuspidal,
)
from .residue import (
    FiniteChar,
    FractionalPoint,
    ResidueRing,
    UnsupportedRing,
    constant_c,
    enumerate_characters,
    gauss_sum,
    is_prime,
    k0_index,
    k0_index_bruteforce,
)
from .scalars import CycScalar, to_complex
from .whittaker import GradeCollapseError, cauchy_sum, zeta_torus_sum

__all__ = ["PIPELINES", "run_pipeline", "InternalInvariantError", "is_prime_power"]

ANCHOR_CAUCHY = "Cauchy identity: sum_lam s_lam(alpha) s_lam(gamma) X^|lam| = prod (1 - alpha_i gamma_j X)^-1"
ANCHOR_MAIN = "main theorem: zeta integral of the test vector equals the naive Rankin-Selberg factor"
ANCHOR_C = "constant c = G(omega_tau, psi, varpi^-v(c)) / [GL_m(O) : K_0(q)] is non-zero"
ANCHOR_AUX = "correction lemma: L(s, pi x tau) = P(q^-s) L(s, pi [x] tau) with P(0) = 1"
ANCHOR_COR = "corollary: L(s, pi [x] tau) = 1 forces L(s, pi) = 1 or L(s, tau) = 1"
ANCHOR_GAUSS = "Gauss sum G(omega, psi, y) vanishes unless v(y) = -v(conductor of omega)"
ANCHOR_GAUSS_ABS = "Gauss sum magnitude |G| (p^c - p^(c-1)) = p^(c/2) for primitive omega"
ANCHOR_SHIFT = "unit shift: G(omega, psi, u y) = omega(u)^-1 G(omega, psi, y)"
ANCHOR_INDEX = "index [GL_m(O) : K_0(p^f)]"


class InternalInvariantError(AssertionError):
    """A mathematical invariant that should hold unconditionally failed.

    ``report`` carries the checks completed before the failure.
    """

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


class _Inputs:
    """Typed, validated access to config keys; records the resolved values."""

    COMMON = ("q", "trunc", "seed")

    def __init__(self, raw: RawConfig, allowed: tuple[str, ...], seed=None, trunc=None):
        self.raw = raw
        unknown = sorted(set(raw.values) - set(allowed) - set(self.COMMON))
        if unknown:
            key = unknown[0]
            raise raw.error(key, f"unknown key (allowed: {', '.join(self.COMMON + allowed)})")
        self.resolved: dict[str, object] = {}
        self.q = self.int("q", 3, lo=2)
        if not is_prime_power(self.q):
            raise raw.error("q", f"{self.q} is not a prime power")
        self.trunc = trunc if trunc is not None else self.int("trunc", DEFAULT_TRUNC, lo=0)
        if trunc is not None:
            if trunc < 0:
                raise ConfigError("--trunc must be non-negative", "<command line>")
            self.resolved["trunc"] = trunc
        self.seed = seed if seed is not None else self.int("seed", 0, lo=0)
        if seed is not None:
            if not 0 <= seed < 2**64:
                raise ConfigError("--seed must be an unsigned 64-bit integer", "<command line>")
            self.resolved["seed"] = seed

    def has(self, key):
        return key in self.raw.values

    def _get(self, key, default):
        return self.raw.values.get(key, default)

    def int(self, key, default, lo=None, hi=None) -> int:
        v = self._get(key, default)
        if isinstance(v, Expr):
            try:
                s = v.evaluate(self.q if key != "q" else 1)
            except ZeroDivisionError as exc:
                raise self.raw.error(key, str(exc)) from None
            if not s.is_rational() or s.to_fraction().denominator != 1:
                raise self.raw.error(key, f"expected an integer, got {v.text}")
            v = int(s.to_fraction())
        if not isinstance(v, int) or isinstance(v, bool):
            raise self.raw.error(key, f"expected an integer, got {v!r}")
        if lo is not None and v < lo or hi is not None and v > hi:
            raise self.raw.error(key, f"{v} outside [{lo}, {hi if hi is not None else 'inf'}]")
        self.resolved[key] = v
        return v

    def bool(self, key, default) -> bool:
        v = self._get(key, default)
        if not isinstance(v, bool):
            raise self.raw.error(key, f"expected true/false, got {v!r}")
        self.resolved[key] = v
        return v

    def scalars(self, key) -> list[CycScalar] | None:
        if key not in self.raw.values:
            return None
        v = self.raw.values[key]
        if not isinstance(v, list) or not all(isinstance(x, Expr) for x in v):
            raise self.raw.error(key, "expected a flat list of exact scalars")
        try:
            out = [x.evaluate(self.q) for x in v]
        except ZeroDivisionError as exc:
            raise self.raw.error(key, str(exc)) from None
        self.resolved[key] = format_value(out)
        return out

    def int_lists(self, key, default) -> list[list[int]]:
        v = self._get(key, default)
        ok = isinstance(v, list)
        out = []
        for row in v if ok else []:
            if isinstance(row, list):
                vals = []
                for x in row:
                    if isinstance(x, Expr):
                        s = x.evaluate(1)
                        if s.is_rational() and s.to_fraction().denominator == 1:
                            vals.append(int(s.to_fraction()))
                            continue
                    elif isinstance(x, int) and not isinstance(x, bool):
                        vals.append(x)
                        continue
                    ok = False
                out.append(vals)
            else:
                ok = False
        if not ok:
            raise self.raw.error(key, "expected a list of integer lists")
        self.resolved[key] = out
        return out

    def ints(self, key, default) -> list[int]:
        v = self._get(key, default)
        out = []
        if not isinstance(v, list):
            raise self.raw.error(key, "expected a list of integers")
        for x in v:
            s = x.evaluate(1) if isinstance(x, Expr) else None
            if s is None or not s.is_rational() or s.to_fraction().denominator != 1:
                if isinstance(x, int) and not isinstance(x, bool):
                    out.append(x)
                    continue
                raise self.raw.error(key, "expected a list of integers")
            out.append(int(s.to_fraction()))
        self.resolved[key] = out
        return out

    def echo(self) -> dict:
        return {k: self.resolved[k] for k in sorted(self.resolved)}


def _strs(xs) -> list[str]:
    return [str(x) for x in xs]


def _random_rationals(rng: random.Random, k: int, zero_rate: float = 0.1) -> list[CycScalar]:
    out = []
    for _ in range(k):
        if rng.random() < zero_rate:
            out.append(CycScalar(0))
        else:
            out.append(CycScalar(Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 5))))
    return out


def _nonzero_rationals(rng: random.Random, k: int) -> list[CycScalar]:
    return _random_rationals(rng, k, zero_rate=0.0)


def _complex_str(x: CycScalar, digits: int = 20) -> str:
    z = mpmath.chop(to_complex(x, 30), tol=mpmath.mpf(10) ** -25)
    return f"{mpmath.nstr(z.real, digits)}{'+' if z.imag >= 0 else '-'}{mpmath.nstr(abs(z.imag), digits)}j"


# ---------------------------------------------------------------------------
# cauchy
# ---------------------------------------------------------------------------


def run_cauchy(raw: RawConfig, seed=None, trunc=None) -> Report:
    """Compare the Schur-sum (Cauchy) series with the expansion of the naive factor."""
    inp = _Inputs(raw, ("alpha", "gamma", "random_cases", "max_len", "perturb_degree"), seed, trunc)
    alpha, gamma = inp.scalars("alpha"), inp.scalars("gamma")
    if (alpha is None) != (gamma is None):
        raise raw.error("alpha" if alpha is None else "gamma", "alpha and gamma must be given together")
    if alpha is not None and (not alpha or not gamma):
        raise raw.error("alpha", "parameter lists must be non-empty")
    cases = inp.int("random_cases", 0 if alpha is not None else 20, lo=0)
    max_len = inp.int("max_len", 4, lo=1, hi=8)
    perturb = inp.int("perturb_degree", -1, lo=-1, hi=inp.trunc) if inp.has("perturb_degree") else None
    d = inp.trunc
    report = Report("cauchy", inp.echo(), inp.seed)

    def check(name, a, g, perturb_at=None):
        want = series_of(naive_rs(a, g), d)
        got = cauchy_sum(a, g, d)
        got_c = list(got.coeffs)
        if perturb_at is not None and perturb_at >= 0:
            got_c[perturb_at] = got_c[perturb_at] + 1
        bad = next((k for k, (x, y) in enumerate(zip(got_c, want.coeffs)) if x != y), None)
        report.add(
            name,
            ANCHOR_CAUCHY,
            {"alpha": _strs(a), "gamma": _strs(g), "trunc": d},
            _strs(want.coeffs),
            _strs(got_c),
            bad is None,
            None if bad is None else f"first mismatch at degree {bad}",
        )

    if alpha is not None:
        check("cauchy.explicit", alpha, gamma, perturb)
    rng = random.Random(inp.seed)
    for i in range(cases):
        a = _random_rationals(rng, rng.randint(1, max_len))
        g = _random_rationals(rng, rng.randint(1, max_len))
        check(f"cauchy.random[{i}]", a, g)
    return report


# ---------------------------------------------------------------------------
# theorem_main
# ---------------------------------------------------------------------------


def _primitive_characters(p: int, c: int) -> list[FiniteChar]:
    return [chi for chi in enumerate_characters(ResidueRing(p, c)) if chi.conductor_exp == c]


def run_theorem_main(raw: RawConfig, seed=None, trunc=None) -> Report:
    """Torus-sum zeta integral vs naive factor, plus the constant c for ramified tau."""
    keys = (
        "alpha",
        "gamma",
        "pi_cond_exp",
        "tau_cond_exp",
        "central_cond_exp",
        "central_char",
        "random_cases",
        "max_n",
    )
    inp = _Inputs(raw, keys, seed, trunc)
    q, d = inp.q, inp.trunc
    alpha, gamma = inp.scalars("alpha"), inp.scalars("gamma")
    if (alpha is None) != (gamma is None):
        raise raw.error("alpha" if alpha is None else "gamma", "alpha and gamma must be given together")
    cases = inp.int("random_cases", 0 if alpha is not None else 20, lo=0)
    max_n = inp.int("max_n", 4, lo=2, hi=6)

    explicit = None
    if alpha is not None:
        n, m = len(alpha), len(gamma)
        if not n > m >= 1:
            raise raw.error("gamma", f"need n > m >= 1, got n={n}, m={m}")
        tau_ram = gamma[-1].is_zero()
        tau_c = inp.int("tau_cond_exp", 1 if tau_ram else 0, lo=0)
        if tau_c >= 1 and not tau_ram:
            raise raw.error("gamma", "a ramified tau needs its last Langlands parameter equal to 0")
        if tau_c == 0 and any(g.is_zero() for g in gamma):
            raise raw.error("tau_cond_exp", "zero parameters require a ramified tau (tau_cond_exp >= 1)")
        cen_c = inp.int("central_cond_exp", 0, lo=0)
        if cen_c > tau_c:
            raise raw.error("central_cond_exp", f"v(c) = {cen_c} exceeds v(q) = {tau_c}")
        finite = None
        if cen_c >= 1:
            if not is_prime(q):
                raise raw.error("q", "a ramified central character needs prime q")
            try:
                prim = _primitive_characters(q, cen_c)
            except UnsupportedRing as exc:
                raise raw.error("central_cond_exp", str(exc)) from None
            idx = inp.int("central_char", 0, lo=0, hi=len(prim) - 1)
            finite = prim[idx]
        elif inp.has("central_char"):
            raise raw.error("central_char", "only meaningful with central_cond_exp >= 1")
        pi_c = inp.int("pi_cond_exp", 1 if any(a.is_zero() for a in alpha) else 0, lo=0)
        try:
            pi = RepDescriptor(n, tuple(alpha), pi_c)
            tau = RepDescriptor(m, tuple(gamma), tau_c, CentralChar.from_finite(finite))
        except ValueError as exc:
            raise ConfigError(str(exc), raw.source) from None
        explicit = (pi, tau, tau_c, cen_c, finite)

    report = Report("theorem_main", inp.echo(), inp.seed)

    def series_check(name, pi, tau):
        want = series_of(naive_rs_lfactor(pi, tau), d)
        try:
            got = zeta_torus_sum(pi, tau, d, q)
        except GradeCollapseError as exc:
            report.internal_error = f"{name}: {exc}"
            raise InternalInvariantError(report.internal_error, report) from exc
        gamma_padded = list(tau.params) + [CycScalar(0)] * (pi.degree - tau.degree)
        cauchy = cauchy_sum(pi.params, gamma_padded, d)
        ins = {"alpha": _strs(pi.params), "gamma": _strs(tau.params), "q": q, "trunc": d,
               "tau_ramified": tau.is_ramified}
        bad = got.first_difference(want)
        report.add(name + ".torus_sum", ANCHOR_MAIN, ins, _strs(want.coeffs), _strs(got.coeffs),
                   bad is None, None if bad is None else f"first mismatch at degree {bad}")
        bad = cauchy.first_difference(want)
        report.add(name + ".cauchy_route", ANCHOR_CAUCHY, ins, _strs(want.coeffs), _strs(cauchy.coeffs),
                   bad is None, None if bad is None else f"first mismatch at degree {bad}")

    if explicit:
        pi, tau, tau_c, cen_c, finite = explicit
        series_check("theorem_main.explicit", pi, tau)
        if tau_c >= 1:
            ins = {"m": tau.degree, "p": q, "v_c": cen_c, "v_q": tau_c,
                   "omega": finite.label() if finite else "trivial"}
            if is_prime(q):
                c = constant_c(finite, cen_c, tau_c, tau.degree, q)
                report.add("theorem_main.constant_c", ANCHOR_C, ins, "non-zero",
                           {"exact": str(c), "complex": _complex_str(c)}, not c.is_zero())
            else:
                report.add("theorem_main.constant_c", ANCHOR_C, ins, "non-zero", None, None,
                           "q is not prime; residue-ring computations need q = p")

    rng = random.Random(inp.seed)
    for i in range(cases):
        n = rng.randint(2, max_n)
        m = rng.randint(1, n - 1)
        ramified = i % 2 == 1
        a = _nonzero_rationals(rng, n)
        g = _nonzero_rationals(rng, m)
        if ramified:
            g[-1] = CycScalar(0)
        pi = RepDescriptor(n, tuple(a), 0)
        tau = RepDescriptor(m, tuple(g), 1 if ramified else 0)
        series_check(f"theorem_main.random[{i}]", pi, tau)
    return report


# ---------------------------------------------------------------------------
# lemma_aux
# ---------------------------------------------------------------------------


def lemma_catalog(q: int, max_b: int, max_degree: int, unram_values, ram_level: int) -> list[RepDescriptor]:
    """Essentially square-integrable components used by the correction-lemma sweep."""
    chars = [make_character(u) for u in unram_values]
    if is_prime(q):
        for chi in _primitive_characters(q, ram_level):
            chars.append(make_character(1, chi))
            if len(unram_values) > 1:
                chars.append(make_character(unram_values[1], chi))
    comps = []
    for chi in chars:
        for b in range(1, min(max_b, max_degree) + 1):
            comps.append(sigma_b(chi, b, q))
    for a in range(2, max_degree + 1):
        sc = supercuspidal(a, 2)
        for b in range(1, min(max_b, max_degree // a) + 1):
            comps.append(sigma_b(sc, b, q))
    return comps


def run_lemma_aux(raw: RawConfig, seed=None, trunc=None) -> Report:
    """Sweep pairs from the component catalog through the correction polynomial."""
    keys = ("max_b", "max_degree", "unram_values", "ram_level", "include_sums", "check_specific")
    inp = _Inputs(raw, keys, seed, trunc)
    q = inp.q
    max_b = inp.int("max_b", 3, lo=1, hi=3)
    max_degree = inp.int("max_degree", 4, lo=1, hi=4)
    unram = inp.scalars("unram_values")
    if unram is None:
        unram = [CycScalar(1), CycScalar(2)]
        inp.resolved["unram_values"] = ["1", "2"]
    if not unram or any(u.is_zero() for u in unram):
        raise raw.error("unram_values", "need non-zero values")
    ram_level = inp.int("ram_level", 1, lo=1, hi=2)
    if q == 2 and ram_level < 2:
        raise raw.error("ram_level", "no primitive characters mod 2; use ram_level = 2")
    include_sums = inp.bool("include_sums", True)
    specific = inp.bool("check_specific", True)
    report = Report("lemma_aux", inp.echo(), inp.seed)

    comps = lemma_catalog(q, max_b, max_degree, unram, ram_level)
    reps = list(comps)
    if include_sums:
        for i, a in enumerate(comps):
            for b in comps[i:]:
                if a.degree + b.degree <= max_degree:
                    reps.append(langlands_sum(a, b))

    corollary_bad = []
    n_pairs = 0
    for pi in reps:
        for tau in reps:
            n_pairs += 1
            ins = {"pi": pi.describe(), "tau": tau.describe(), "q": q}
            try:
                box = boxtimes(pi, tau, q)
                naive = naive_rs_lfactor(pi, tau)
                poly = correction_polynomial(pi, tau, q)
            except UnsupportedCase as exc:
                report.add("lemma_aux.pair", ANCHOR_AUX, ins, "polynomial with P(0) = 1", None, None, str(exc))
                continue
            except LemmaViolation as exc:
                report.add("lemma_aux.pair", ANCHOR_AUX, ins, "polynomial with P(0) = 1", str(exc), False)
                continue
            report.add("lemma_aux.pair", ANCHOR_AUX, ins, "polynomial with P(0) = 1", str(poly),
                       poly[0] == 1)
            if box == XRational.one():
                trivial_std = standard_lfactor(pi) == XRational.one() or standard_lfactor(tau) == XRational.one()
                if naive != XRational.one() or not trivial_std:
                    corollary_bad.append(ins)
    report.add("lemma_aux.corollary", ANCHOR_COR, {"pairs": n_pairs}, [], corollary_bad, not corollary_bad)

    if specific:
        u = v = CycScalar(1)
        pi = sigma_b(make_character(u), 2, q)
        tau = sigma_b(make_character(v), 2, q)
        want = XPoly([1, -Fraction(1, q)])
        got = correction_polynomial(pi, tau, q)
        report.add("lemma_aux.sigma2_sigma2", ANCHOR_AUX,
                   {"pi": pi.describe(), "tau": tau.describe(), "q": q}, str(want), str(got), got == want)
    return report


# ---------------------------------------------------------------------------
# gauss_suite
# ---------------------------------------------------------------------------


def gauss_sweep(p: int, c: int):
    """Yield (character, {(u, v): G(chi, u p^-v)}) for primitive chi mod p^c, v <= c+1."""
    units = ResidueRing(p, c).units()
    for chi in _primitive_characters(p, c):
        table = {}
        for v in range(c + 2):
            for u in units:
                table[(u, v)] = gauss_sum(chi, FractionalPoint.unit_times(u, v, p))
        yield chi, table


def run_gauss_suite(raw: RawConfig, seed=None, trunc=None) -> Report:
    keys = ("primes", "max_level", "max_level_p2", "index_cases", "c_degrees")
    inp = _Inputs(raw, keys, seed, trunc)
    primes = inp.ints("primes", [2, 3, 5])
    for p in primes:
        if not is_prime(p):
            raise raw.error("primes", f"{p} is not prime")
    max_level = inp.int("max_level", 2, lo=1, hi=3)
    max_level_p2 = inp.int("max_level_p2", 3, lo=1, hi=3)
    c_degrees = inp.ints("c_degrees", [1, 2, 3])
    if any(m < 1 for m in c_degrees):
        raise raw.error("c_degrees", "degrees must be positive")
    cases = inp.int_lists("index_cases", [[2, 2, 1], [2, 3, 1], [3, 2, 1], [3, 3, 1]])
    for case in cases:
        if len(case) != 3:
            raise raw.error("index_cases", "each case is [m, p, f]")
        m, p, f = case
        if not (1 <= m <= 3 and p in (2, 3) and f == 1):
            raise raw.error("index_cases", f"{case} outside the brute-force domain m <= 3, p in {{2,3}}, f = 1")
    report = Report("gauss_suite", inp.echo(), inp.seed)

    for p in primes:
        top = max_level_p2 if p == 2 else max_level
        for c in range(1, top + 1):
            for chi, table in gauss_sweep(p, c):
                label = chi.label()
                bad = [f"u={u},v={v}" for (u, v), g in table.items() if g.is_zero() != (v != c)]
                report.add(f"gauss.vanishing[p={p},c={c}]", ANCHOR_GAUSS,
                           {"omega": label, "v_range": [0, c + 1], "units": p**c - p ** (c - 1)},
                           [], bad, not bad)

                g = table[(1, c)]
                with mpmath.workdps(30):
                    lhs = abs(to_complex(g, 30)) * (p**c - p ** (c - 1))
                    rhs = mpmath.sqrt(mpmath.mpf(p) ** c)
                    err = abs(lhs - rhs)
                report.add(f"gauss.magnitude[p={p},c={c}]", ANCHOR_GAUSS_ABS, {"omega": label, "tol": "1e-9"},
                           mpmath.nstr(rhs, 20), mpmath.nstr(lhs, 20), err < mpmath.mpf("1e-9"))

                bad = []
                for (u, v), g_uv in table.items():
                    if g_uv != chi.value(u).inverse() * table[(1, v)]:
                        bad.append(f"u={u},v={v}")
                report.add(f"gauss.unit_shift[p={p},c={c}]", ANCHOR_SHIFT, {"omega": label}, [], bad, not bad)

                vals = {}
                for m in c_degrees:
                    cc = constant_c(chi, c, c, m, p)
                    vals[str(m)] = str(cc)
                report.add(f"gauss.constant_c[p={p},c={c}]", ANCHOR_C, {"omega": label, "m": c_degrees},
                           "non-zero", vals, all(v != "0" for v in vals.values()))

    for m, p, f in cases:
        brute = k0_index_bruteforce(m, p, f)
        formula = k0_index(m, p, f)
        report.add(f"index[m={m},p={p},f={f}]", ANCHOR_INDEX, {"m": m, "p": p, "f": f},
                   brute, formula, brute == formula)
    return report


PIPELINES: dict[str, tuple[Callable[..., Report], str]] = {
    "cauchy": (run_cauchy, "Schur-sum series vs expansion of the naive Rankin-Selberg factor"),
    "theorem_main": (run_theorem_main, "torus zeta sum vs naive factor; constant c for ramified tau"),
    "lemma_aux": (run_lemma_aux, "correction polynomial P over the component catalog; corollary"),
    "gauss_suite": (run_gauss_suite, "Gauss-sum vanishing, magnitude, unit shift; K_0 index oracle"),
}


def run_pipeline(name: str, raw: RawConfig, seed=None, trunc=None) -> Report:
    key = name.replace("-", "_")
    if key not in PIPELINES:
        raise ConfigError(f"unknown pipeline {name!r} (known: {', '.join(PIPELINES)})", "<command line>")
    return PIPELINES[key][0](raw, seed=seed, trunc=trunc)
