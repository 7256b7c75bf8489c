"""Command-line front end.

Subcommands: ``build-code``, ``encode``, ``corrupt``, ``decode``,
``lrs-extend`` and ``sweep``.  Randomness comes from a counter-based
generator (Philox) keyed by ``--seed`` and the word or trial index, so
outputs are reproducible and independent of processing order.

Exit codes: 0 on success, 1 on usage errors, 2 when any decode is not
SUCCESS (``decode``) or any miscorrection is observed (``sweep``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import serialize
from .cauchy import CauchyProblem, solve_box
from .decoder import Status, decode
from .errors import AgCauchyError, WeightTooLarge


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def rng_for(seed: int, *counters: int) -> np.random.Generator:
    key = int(seed) & (2**64 - 1)
    for i, c in enumerate(counters):
        key |= (int(c) & (2**32 - 1)) << (64 + 32 * i)
    return np.random.Generator(np.random.Philox(key=key))


def corrupt_word(word, weight: int, field, rng: np.random.Generator):
    n = len(word)
    if weight > n:
        raise WeightTooLarge(f"weight {weight} > n = {n}")
    positions = sorted(int(p) for p in rng.choice(n, size=weight, replace=False))
    deltas = [int(d) for d in rng.integers(1, field.q, size=weight)]
    out = list(word)
    for p, d in zip(positions, deltas):
        out[p] = field.add(out[p], d)
    return out, positions, deltas


def cmd_build_code(args) -> int:
    code = serialize.load_code(args.spec)
    text = json.dumps(code.to_json(), indent=1)
    _emit(args.out, text + "\n")
    return 0


def cmd_encode(args) -> int:
    code = serialize.load_code(args.spec)
    words = [code.encode(m) for m in serialize.read_words(args.input)]
    _emit(args.out, serialize.format_words(words))
    return 0


def cmd_corrupt(args) -> int:
    code = serialize.load_code(args.spec)
    out, plants = [], []
    for i, w in enumerate(serialize.read_words(args.input)):
        bad, pos, deltas = corrupt_word(w, args.weight, code.field, rng_for(args.seed, i))
        out.append(bad)
        plants.append({"index": i, "positions": pos, "deltas": deltas})
    _emit(args.out, serialize.format_words(out))
    if args.plant:
        Path(args.plant).write_text("".join(json.dumps(p) + "\n" for p in plants))
    return 0


def cmd_decode(args) -> int:
    code = serialize.load_code(args.spec)
    lines, all_ok = [], True
    for w in serialize.read_words(args.input):
        res = decode(w, code)
        all_ok &= res.status is Status.SUCCESS
        lines.append(json.dumps(res.to_json()))
    _emit(args.out, "".join(line + "\n" for line in lines))
    return 0 if all_ok else 2


def cmd_lrs_extend(args) -> int:
    basis = serialize.basis_from_json(json.loads(Path(args.basis).read_text()))
    initial = serialize.initial_from_json(json.loads(Path(args.input).read_text()))
    box = tuple(int(b) for b in args.box.split(","))
    series = solve_box(CauchyProblem(basis, initial), box)
    _emit(args.out, json.dumps(series.to_json()) + "\n")
    return 0


def sweep(code, weights, trials: int, seed: int) -> list[dict]:
    F = code.field
    rows = []
    for t in weights:
        counts = {"success": 0, "failure": 0, "miscorrection": 0}
        statuses: dict[str, int] = {}
        for trial in range(trials):
            rng = rng_for(seed, t, trial)
            msg = [int(x) for x in rng.integers(0, F.q, size=code.dimension)]
            c = code.encode(msg)
            w, _, _ = corrupt_word(c, t, F, rng)
            res = decode(w, code)
            statuses[res.status.value] = statuses.get(res.status.value, 0) + 1
            if res.status is not Status.SUCCESS:
                counts["failure"] += 1
            elif res.codeword == c:
                counts["success"] += 1
            else:
                counts["miscorrection"] += 1
        rows.append({"weight": t, "trials": trials, **counts, "statuses": statuses})
    return rows


def cmd_sweep(args) -> int:
    code = serialize.load_code(args.spec)
    weights = [int(x) for x in args.weights.split(",")]
    for t in weights:
        if t > code.n:
            raise WeightTooLarge(f"weight {t} > n = {code.n}")
    rows = sweep(code, weights, args.trials, args.seed)
    _emit(args.out, json.dumps({"n": code.n, "k": code.dimension, "rows": rows}, indent=1) + "\n")
    return 2 if any(r["miscorrection"] for r in rows) else 0


def _emit(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="agcauchy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *, spec=True, inp=True):
        sp = sub.add_parser(name)
        if spec:
            sp.add_argument("--spec", required=True)
        if inp:
            sp.add_argument("--in", dest="input", required=True)
        sp.add_argument("--out", default="-")
        sp.set_defaults(func=func)
        return sp

    add("build-code", cmd_build_code, inp=False)
    add("encode", cmd_encode)
    c = add("corrupt", cmd_corrupt)
    c.add_argument("--weight", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--plant")
    add("decode", cmd_decode)
    x = add("lrs-extend", cmd_lrs_extend, spec=False)
    x.add_argument("--basis", required=True)
    x.add_argument("--box", required=True, help="comma-separated box bounds, e.g. 8,8")
    s = add("sweep", cmd_sweep, inp=False)
    s.add_argument("--weights", default="0,1,2")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # usage errors and --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (AgCauchyError, ValueError, KeyError, OSError) as exc:
        print(f"agcauchy {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
