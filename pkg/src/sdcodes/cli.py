"""Command-line interface.

Exit codes: 0 success, 1 parse error, 2 construction conditions failed,
3 verification failed (code not self-dual, or a reproduced code disagrees
with its record).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import textfmt
from .binary import BinaryCode, bits_to_int, format_bits, parse_bits, rank
from .census import DEFAULT_EXHAUSTIVE_CAP, exhaustive_distribution, low_weight_census
from .constructions import ConstructionParams, buildup, check_conditions, neighbour, theorem1_generator
from .enumerators import (
    BEST_KNOWN_DISTANCE,
    FAMILIES,
    CodeType,
    classify_type,
    extremal_bound,
    family_label,
    fit_enumerator,
    parse_family,
    required_cutoff,
)
from .errors import CensusError, ConstructionError, DomainError, ParseError
from .gray import to_binary_code
from .records import RecordStore, published_records, query
from .rings import Ring
from .search import SearchConfig, SearchStats, search

EXIT_OK, EXIT_PARSE, EXIT_CONDITION, EXIT_VERIFY = 0, 1, 2, 3

log = logging.getLogger("sdcodes")


def _emit(mt: textfmt.MatrixText, out: str | None) -> None:
    if out:
        mt.dump(out)
    else:
        sys.stdout.write(mt.dumps())


def _default_wmax(code: BinaryCode) -> int:
    if any(f.n == code.n for f in FAMILIES.values()):
        return required_cutoff(code.n)
    if code.k <= 24:
        return code.n
    return extremal_bound(code.n, CodeType.TYPE_I)


def analyse(code: BinaryCode, wmax: int | None = None, workers: int = 1, exhaustive: bool = False) -> dict:
    """Everything ``verify`` reports, as a dict of display strings and values."""
    info: dict = {"n": code.n, "k": code.k}
    if exhaustive:
        profile = exhaustive_distribution(code, cap=max(DEFAULT_EXHAUSTIVE_CAP, code.k), workers=workers)
    else:
        wmax = _default_wmax(code) if wmax is None else wmax
        profile = low_weight_census(code, wmax, workers)
    info["profile"] = profile
    info["d"] = profile.min_distance()
    info["type"] = classify_type(profile)
    fit = None
    fams = [f for f in FAMILIES.values() if f.n == code.n]
    if fams and profile.cutoff >= min(min(f.terms) for f in fams):
        fit = fit_enumerator(code.n, profile)
    info["fit"] = fit
    return info


def _summary(info: dict) -> str:
    d = info["d"]
    dstr = str(d) if d is not None else f">{info['profile'].cutoff}"
    parts = [f"self-dual [{info['n']},{info['k']},{dstr}]"]
    fit = info["fit"]
    if fit is not None and fit.consistent:
        parts.append(family_label(fit.family))
        if fit.alpha is not None:
            parts.append(f"α={fit.alpha}")
        if fit.beta is not None:
            parts.append(f"β={fit.beta}")
    t = info["type"]
    parts.append("Type " + t.value if t is not CodeType.INDETERMINATE else "Type undetermined")
    return ", ".join(parts)


def _report_lines(info: dict) -> list[str]:
    n, d, prof = info["n"], info["d"], info["profile"]
    lines = [_summary(info), f"census cutoff: {prof.cutoff}", f"profile: {prof}"]
    fit = info["fit"]
    if fit is not None:
        lines.append(f"enumerator: {fit}")
        if fit.ambiguous:
            lines.append("enumerator: family not determined at this cutoff; raise --wmax to disambiguate")
    t = info["type"]
    if t is not CodeType.INDETERMINATE and (t is CodeType.TYPE_I or n % 8 == 0):
        bound = extremal_bound(n, t)
        status = "extremal" if d == bound else "not extremal"
        lines.append(f"extremal bound (Type {t.value}): {bound} ({status})")
    if n in BEST_KNOWN_DISTANCE and d is not None:
        best = BEST_KNOWN_DISTANCE[n]
        lines.append(f"best known distance for n={n}: {best} ({'meets' if d >= best else 'below'})")
    return lines


def _diagnose(code: BinaryCode, raw_rows: list[int]) -> list[str]:
    bad = sum(1 for i, a in enumerate(code.rows) for b in code.rows[i:] if (a & b).bit_count() & 1)
    return [
        "not self-dual",
        f"rows: {len(raw_rows)}, rank: {rank(raw_rows, code.n)}, need rank n/2 = {code.n / 2:g}",
        f"non-orthogonal basis pairs (incl. self): {bad}",
    ]


def cmd_construct(args) -> int:
    ring = Ring.parse(args.ring)
    p = ConstructionParams.from_hex(ring, args.a, args.b, args.c, args.xi, args.lam, args.mu)
    if args.n is not None and args.n != p.n:
        raise ParseError(f"--n {args.n} does not match the length {p.n} of --a")
    report = check_conditions(p)
    if not report:
        print(f"conditions failed: {report}", file=sys.stderr)
        return EXIT_CONDITION
    G = theorem1_generator(p)
    meta = [" ".join(f"{k}={v}" for k, v in p.to_hex().items()), f"conditions: {report}"]
    if args.binary:
        mt = textfmt.MatrixText.from_code(to_binary_code(G), comments=meta)
    else:
        mt = textfmt.MatrixText.from_matrix(G, comments=meta)
    _emit(mt, args.output)
    return EXIT_OK


def _load_code(path: str) -> tuple[textfmt.MatrixText, BinaryCode, list[int]]:
    mt = textfmt.load(path)
    code = mt.binary_code()
    raw = [bits_to_int(r) for r in mt.data] if mt.ring is Ring.F2 else list(code.rows)
    return mt, code, raw


def cmd_verify(args) -> int:
    _, code, raw = _load_code(args.file)
    if not code.is_self_dual() or len(raw) != code.k:
        for line in _diagnose(code, raw):
            print(line)
        return EXIT_VERIFY
    info = analyse(code, args.wmax, args.workers, args.exhaustive)
    for line in _report_lines(info):
        print(line)
    return EXIT_OK


def cmd_census(args) -> int:
    _, code, _ = _load_code(args.file)
    if not code.is_self_dual():
        print("census needs a self-dual code", file=sys.stderr)
        return EXIT_VERIFY
    prof = low_weight_census(code, args.wmax, args.workers)
    for w, c in sorted(prof.counts.items()):
        print(f"{w} {c}")
    return EXIT_OK


def _tail_vector(text: str, full: int, zero_prefix: bool, parse) -> object:
    text = text.strip().strip("()")
    if zero_prefix:
        if len(text) > full:
            raise ParseError(f"vector of length {len(text)} is longer than {full}")
        text = "0" * (full - len(text)) + text
    elif len(text) != full:
        raise ParseError(f"vector has length {len(text)}, expected {full} (use --zero-prefix for a tail)")
    return parse(text)


def _analysed_output(code: BinaryCode, meta: list[str], args) -> textfmt.MatrixText:
    trailer = []
    if not args.no_analysis and code.is_self_dual():
        trailer = _report_lines(analyse(code, None, args.workers))
    return textfmt.MatrixText.from_code(code, comments=meta, trailer=trailer)


def cmd_buildup(args) -> int:
    mt = textfmt.load(args.file)
    G = mt.matrix()
    delta = _tail_vector(args.delta, G.shape[1], args.zero_prefix, mt.ring.parse_vector)
    out = buildup(G, delta)
    code = to_binary_code(out)
    meta = [f"buildup of {Path(args.file).name} delta={mt.ring.format_vector(delta)}"]
    _emit(_analysed_output(code, meta, args), args.output)
    return EXIT_OK


def cmd_neighbour(args) -> int:
    _, code, _ = _load_code(args.file)
    x = _tail_vector(args.x, code.n, args.zero_prefix, parse_bits)
    out = neighbour(code, x)
    meta = [f"neighbour of {Path(args.file).name} x={format_bits(x, code.n)}"]
    _emit(_analysed_output(out, meta, args), args.output)
    return EXIT_OK


def cmd_bound(args) -> int:
    print(extremal_bound(args.n, args.type))
    return EXIT_OK


def cmd_search(args) -> int:
    config = SearchConfig.load(args.config)
    if args.workers is not None:
        config.workers = args.workers
    if args.seed is not None:
        config.seed = args.seed
    stats = SearchStats()
    store = RecordStore(args.out) if args.out else None
    for rec in search(config, stats):
        print(rec.to_line())
        if store:
            store.append(rec)
    print(
        f"# attempts={stats.attempts} emitted={stats.emitted} duplicates={stats.duplicates} "
        f"failed_conditions={stats.failed_conditions} screened_out={stats.screened_out}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_query(args) -> int:
    records = RecordStore(args.file).load() if args.file else published_records()
    family = parse_family(args.family) if args.family else None
    for rec in query(records, length=args.n, family=family, alpha=args.alpha, beta=args.beta, label=args.label):
        print(rec.to_line())
    return EXIT_OK


def cmd_reproduce(args) -> int:
    records = RecordStore(args.file).load() if args.file else published_records()
    if args.label:
        records = [r for r in records if r.label in set(args.label)]
    failed = 0
    for rec in records:
        code = rec.reconstruct()
        if not code.is_self_dual():
            print(f"{rec.label}: FAIL not self-dual")
            failed += 1
            continue
        wmax = args.wmax
        if wmax is None:
            wmax = required_cutoff(code.n) if rec.family else _default_wmax(code)
        info = analyse(code, wmax, args.workers)
        fit = info["fit"]
        problems = []
        if rec.d is not None and info["d"] != rec.d:
            problems.append(f"d={info['d']} expected {rec.d}")
        if rec.family is not None:
            if fit is None or not fit.consistent or rec.family not in fit.candidates:
                problems.append(f"family {fit} expected {rec.family}")
            else:
                if rec.alpha is not None and fit.alpha != rec.alpha:
                    problems.append(f"alpha={fit.alpha} expected {rec.alpha}")
                if rec.beta is not None and fit.beta != rec.beta:
                    problems.append(f"beta={fit.beta} expected {rec.beta}")
        status = "ok" if not problems else "FAIL " + "; ".join(problems)
        failed += bool(problems)
        print(f"{rec.label}: {_summary(info)}: {status}")
    return EXIT_OK if not failed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sdcodes", description="Bordered lambda-circulant self-dual codes.")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the bordered generator matrix")
    p.add_argument("--ring", default="F2", help="F2, F2U, F2UV or F4U")
    p.add_argument("--n", type=int, help="circulant size (checked against --a)")
    p.add_argument("--lambda", dest="lam", default="1", help="lambda, one hex symbol")
    p.add_argument("--mu", default="1", help="mu, one hex symbol")
    p.add_argument("--a", required=True, help="first row of A, hex symbols")
    p.add_argument("--b", required=True, help="first row of B, hex symbols")
    p.add_argument("--c", required=True, help="first row of C, hex symbols")
    p.add_argument("--xi", required=True, help="xi1 xi2 xi3 xi4 as four hex symbols")
    p.add_argument("--binary", action="store_true", help="emit the binary Gray image")
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="self-duality, distance, census, enumerator fit")
    p.add_argument("file")
    p.add_argument("--wmax", type=int, help="census cutoff (default: enough to fit the enumerator)")
    p.add_argument("--exhaustive", action="store_true", help="full distribution over all 2^k codewords")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="print A_w for w <= wmax")
    p.add_argument("file")
    p.add_argument("--wmax", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_census)

    for name, vec, helptext, fn in (
        ("buildup", "--delta", "border vector delta (ring symbols)", cmd_buildup),
        ("neighbour", "--x", "neighbour vector x (bits)", cmd_neighbour),
    ):
        p = sub.add_parser(name, help=f"{name} construction")
        p.add_argument("file")
        p.add_argument(vec, required=True, help=helptext)
        p.add_argument("--zero-prefix", action="store_true", help="pad the given tail with leading zeros")
        p.add_argument("--no-analysis", action="store_true", help="skip the trailing census report")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("-o", "--output")
        p.set_defaults(func=fn)

    p = sub.add_parser("bound", help="extremal distance bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", choices=["I", "II"], required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("search", help="randomised parameter search")
    p.add_argument("--config", required=True, help="key=value config file")
    p.add_argument("--workers", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="append emitted records to this file")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("query", help="look up records (default: bundled published codes)")
    p.add_argument("--file")
    p.add_argument("--n", type=int)
    p.add_argument("--family")
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--label")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("reproduce", help="rebuild records and check their reported parameters")
    p.add_argument("--file", help="record file (default: bundled published codes)")
    p.add_argument("--label", action="append", help="restrict to these labels (repeatable)")
    p.add_argument("--wmax", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ConstructionError as e:
        print(f"conditions failed: {e.report}", file=sys.stderr)
        return EXIT_CONDITION
    except (DomainError, CensusError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
