"""Command-line interface: every subcommand reads flags/JSON and prints JSON.

JSON-valued flags accept a literal, ``@path`` to read a file, or ``-`` for
stdin. Domain errors exit 1 and usage errors exit 2, both with an error
object ``{"error": {"code": ..., "message": ...}}`` on stdout.

``GALOIS_DSP_SEED`` is reserved and ignored: every search is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cesaro import Convergent, cesaro, partial_sum_profile, term_stream
from .complex_field import GlElement, find_polar_context, gl_modulus, to_polar
from .errors import GaloisDspError
from .ffdtft import Spectrum, fdtft, inverse_fdtft
from .ffft import all_real, cyclic_convolution, ffft, iffft, length_catalogue, plan, pointwise_mul
from .filters import FirFilter, IirFilter, fir_apply_ffft, fir_apply_time, iir_frequency_response
from .prime_field import FpElement, PrimeModulus, modulus_signed, quadratic_residues
from .sequences import FiniteSupport, Window, sequence_from_json


class UsageError(Exception):
    pass


def _load(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None


def _context(p: int):
    return find_polar_context(PrimeModulus.of(p))


def _carrier_json(values, cx) -> dict:
    out = {"output": [v.to_json() for v in values], "all_real": all_real(values, cx)}
    if cx.r * cx.m == 1 and cx.has_cartesian_view:
        out["cartesian"] = [[a.coeffs[0], b.coeffs[0]] for a, b in map(cx.cartesian, values)]
    return out


def cmd_field_info(args) -> dict:
    m = PrimeModulus.of(args.p)
    info = {"p": m.p, "supports_complex": m.supports_complex, "quadratic_residues": quadratic_residues(m)}
    if m.supports_complex:
        ctx = _context(m.p)
        info.update({"N_r": ctx.n_r, "N_theta": ctx.n_theta, "polar_context": ctx.to_json()})
    return info


def cmd_modulus(args) -> dict:
    value = _load(args.value)
    m = PrimeModulus.of(args.p)
    if isinstance(value, int):
        return {"p": m.p, "value": value % m.p, "modulus": modulus_signed(FpElement(value, m)).value}
    x = GlElement(value[0], value[1], m)
    return {"p": m.p, "value": [x.a, x.b], "modulus": gl_modulus(x).value}


def cmd_polar(args) -> dict:
    value = _load(args.value)
    m = PrimeModulus.of(args.p)
    x = GlElement(value, 0, m) if isinstance(value, int) else GlElement(value[0], value[1], m)
    ctx = _context(m.p)
    pf = to_polar(x, ctx)
    return {"p": m.p, "context": ctx.to_json(), "value": [x.a, x.b], "r": pf.r.value, "theta": pf.theta}


def cmd_cesaro(args) -> dict:
    seq = sequence_from_json(_load(args.seq), args.p)
    out = {"p": args.p}
    profile = partial_sum_profile(term_stream(seq))
    result = cesaro(seq)
    if isinstance(result, Convergent):
        out["sigma"] = result.sigma.value
        out["partial_sum_period"] = profile.period
    else:
        out["divergent"] = result.reason.value
    return out


def cmd_fdtft(args) -> dict:
    seq = sequence_from_json(_load(args.seq), args.p)
    return {"p": args.p, "spectrum": fdtft(seq, _context(args.p)).to_json()}


def cmd_ifdtft(args) -> dict:
    ctx = _context(args.p)
    raw = [1] * ctx.n_theta if args.spectrum == "plane" else _load(args.spectrum)
    spec = Spectrum.from_json(raw, ctx)
    if args.complex:
        values = inverse_fdtft(spec, real=False)
        return {"p": args.p, "window": {"start": 0, "values": [[v.a, v.b] for v in values]}}
    return {"p": args.p, "window": inverse_fdtft(spec).to_json()}


def _plan(args):
    return plan(args.p, args.r, args.m, args.N)


def cmd_ffft(args) -> dict:
    pl = _plan(args)
    F = ffft(_load(args.input), pl, relaxed=args.relaxed)
    return {"plan": pl.to_json(), **_carrier_json(F, pl.field)}


def cmd_iffft(args) -> dict:
    pl = _plan(args)
    raw = _load(args.input)
    if isinstance(raw, dict):
        raw = raw["output"]
    if args.cartesian:
        raw = [pl.field.from_cartesian(a, b) for a, b in raw]
    f = iffft(raw, pl)
    return {"plan": pl.to_json(), **_carrier_json(f, pl.field)}


def cmd_conv(args) -> dict:
    pl = _plan(args)
    f, g = _load(args.f), _load(args.g)
    y = cyclic_convolution(f, g, pl)
    holds = ffft(y, pl, relaxed=True) == pointwise_mul(ffft(f, pl, relaxed=True), ffft(g, pl, relaxed=True))
    return {"plan": pl.to_json(), **_carrier_json(y, pl.field), "convolution_theorem": holds}


def _smallest_length(p: int, need: int) -> int:
    for info in length_catalogue(p):
        if info.N >= need:
            return info.N
    raise UsageError(f"no admissible length >= {need} for p = {p}")


def cmd_filter(args) -> dict:
    req = _load(args.request)
    p = args.p
    spec = req["filter"]
    mode = req.get("mode", "time")
    if mode not in ("time", "ffft", "response"):
        raise UsageError(f"unknown filter mode {mode!r}")
    out = {"p": p, "mode": mode}
    if "poles" in spec:
        if mode != "response":
            raise UsageError("IIR filters support mode 'response' only")
        filt = IirFilter.of(spec["poles"], p)
        out["spectrum"] = iir_frequency_response(filt, _context(p)).to_json()
        return out
    fir = FirFilter.of(spec["taps"], p)
    if mode == "response":
        seq = FiniteSupport(fir.modulus, 0, fir.taps)
        out["spectrum"] = fdtft(seq, _context(p)).to_json()
        return out
    x = Window.from_json(req["input"], p)
    if mode == "time":
        out["output"] = fir_apply_time(fir, x).to_json()
    else:
        N = int(req.get("N") or _smallest_length(p, len(fir.taps) + len(x) - 1))
        pl = plan(p, 1, 1, N)
        out["N"] = N
        out["output"] = fir_apply_ffft(fir, x, pl).to_json()
    return out


def cmd_lengths(args) -> dict:
    q = args.p**args.r
    return {
        "p": args.p,
        "r": args.r,
        "m": args.m,
        "q": q,
        "group_order": q ** (2 * args.m) - 1,
        "lengths": [info.to_json() for info in length_catalogue(args.p, args.r, args.m)],
    }


def cmd_examples(args) -> dict:
    from .examples import replay

    checks = replay()
    return {"examples": checks, "all_pass": all(c["pass"] for c in checks)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galois-dsp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, p=True):
        sp = sub.add_parser(name, help=help_)
        if p:
            sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.set_defaults(func=func)
        return sp

    def plan_flags(sp):
        sp.add_argument("--r", type=int, default=1, help="q = p**r")
        sp.add_argument("--m", type=int, default=1, help="kernel lives in GL(q**m)")
        sp.add_argument("--N", type=int, required=True, help="transform length")

    add("field-info", cmd_field_info, "GF(p) facts and the polar context of GL(p)")
    add("modulus", cmd_modulus, "signed modulus of a GF(p) or GL(p) value").add_argument(
        "--value", required=True, help="integer or [re, im]"
    )
    add("polar", cmd_polar, "polar form r * eps**theta").add_argument(
        "--value", required=True, help="[re, im]"
    )
    add("cesaro", cmd_cesaro, "Cesàro sum of a right-sided sequence").add_argument(
        "--seq", required=True, help="sequence JSON"
    )
    add("fdtft", cmd_fdtft, "finite-field DTFT").add_argument("--seq", required=True, help="sequence JSON")
    sp = add("ifdtft", cmd_ifdtft, "inverse finite-field DTFT over one window")
    sp.add_argument("--spectrum", required=True, help='spectrum JSON, bare entry list, or "plane"')
    sp.add_argument("--complex", action="store_true", help="return GL(p) values instead of requiring real")
    sp = add("ffft", cmd_ffft, "complex-kernel finite-field Fourier transform")
    plan_flags(sp)
    sp.add_argument("--input", required=True, help="vector over GF(q)")
    sp.add_argument("--relaxed", action="store_true", help="accept carrier-valued input")
    sp = add("iffft", cmd_iffft, "inverse complex-kernel transform")
    plan_flags(sp)
    sp.add_argument("--input", required=True, help="carrier coefficient arrays or an ffft output object")
    sp.add_argument("--cartesian", action="store_true", help="input entries are [re, im] pairs")
    sp = add("conv", cmd_conv, "cyclic convolution with transform-identity check")
    plan_flags(sp)
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)
    add("filter", cmd_filter, "FIR/IIR filtering").add_argument(
        "--request", required=True, help='{"filter": ..., "input": ..., "mode": "time|ffft|response"}'
    )
    sp = add("lengths", cmd_lengths, "admissible transform lengths")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--m", type=int, default=1)
    add("examples", cmd_examples, "replay the worked examples", p=False)
    return parser


def _emit(obj, stream=None):
    print(json.dumps(obj), file=stream or sys.stdout)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except GaloisDspError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, KeyError, TypeError, ValueError, IndexError) as exc:
        _emit({"error": {"code": "usage", "message": str(exc) or type(exc).__name__}})
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    _emit(result)
    if args.command == "examples" and not result["all_pass"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
