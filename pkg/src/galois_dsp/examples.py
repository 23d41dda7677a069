"""Replay of the reference worked examples with hard-coded expected values."""

from __future__ import annotations

from .cesaro import Convergent, cesaro, partial_sum_profile, term_stream
from .complex_field import find_polar_context
from .ffdtft import inverse_fdtft, plane_spectrum
from .sequences import TwoSidedPeriodic, exponential, minimal_period, unit_step, window
from .prime_field import PrimeModulus


def _check(name, expected, got) -> dict:
    return {"name": name, "expected": expected, "got": got, "pass": expected == got}


def replay() -> list[dict]:
    checks = []

    seq = exponential(1, 3, 7)
    checks.append(_check("powers of 3 in GF(7): first period", [1, 3, 2, 6, 4, 5], list(window(seq, 0, 6).values)))
    checks.append(_check("powers of 3 in GF(7): period", 6, seq.period))
    checks.append(_check("powers of 1 in GF(5): period", 1, unit_step(5).period))
    blocks = TwoSidedPeriodic(PrimeModulus.of(3), (0, 0, 0, 1, 1, 1, 2, 2, 2))
    checks.append(_check("0 0 0 1 1 1 2 2 2 in GF(3): period", 9, minimal_period(blocks.period_values)))

    profile = partial_sum_profile(term_stream(seq))
    checks.append(_check("partial sums of 3^n in GF(7)", [1, 4, 6, 5, 2, 0], [s[0] for s in profile.period_sums]))
    result = cesaro(seq)
    sigma = result.sigma.value if isinstance(result, Convergent) else "div"
    checks.append(_check("Cesàro sum of 3^n in GF(7)", 3, sigma))

    # closed form 1/(1 - a eps^-theta) at theta = 0 is 1/(1 - 3) = 3 in GF(7)
    from .ffdtft import fdtft_closed_form_exponential

    X0 = fdtft_closed_form_exponential(1, 3, find_polar_context(7))[0]
    checks.append(_check("DTFT of 3^n u[n] at theta = 0, GF(7)", [3, 0], [X0.a, X0.b]))

    for p in (3, 7):
        ctx = find_polar_context(p)
        got = list(inverse_fdtft(plane_spectrum(ctx)).values)
        checks.append(_check(f"inverse of the plane spectrum, p = {p}", [1] + [0] * (ctx.n_theta - 1), got))
    return checks
