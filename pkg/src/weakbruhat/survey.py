"""Exhaustive S_n scans: for every permutation, the rank generating
function of its lower interval and four derived predicates (separable,
rank-symmetric, unimodal, cyclotomic product, divisor of [n]!).

Separable permutations go through the block-split recursion;
non-separable ones go through linear extensions of the inversion poset,
which computes the same interval generating function by an entirely
different route.  Scans stream records in lexicographic word order, so
output files are deterministic and a checkpoint (record count plus a
running SHA-256 of the emitted bytes) makes interrupted runs resumable
with byte-identical results.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from functools import lru_cache
from hashlib import sha256
from itertools import islice, permutations
from math import factorial
from multiprocessing import get_context

from .errors import CheckpointError, GuardExceeded, NonzeroRemainder
from .perm import Permutation, identity
from .poset import inversion_poset, le_gf
from .qpoly import IntPoly, is_cyclotomic_product, q_factorial
from .separable import gf_below_recursive, is_separable
from .weak_order import interval, rank_gf

MODES = ("exact-bruteforce", "formula-accelerated")
SURVEY_GUARD = 8
SURVEY_HARD_LIMIT = 9
_CHUNK = 512

CSV_HEADER = "word,separable,gf,symmetric,unimodal,cyclotomic,divides\n"


@dataclass(frozen=True)
class SurveyRecord:
    word: str
    is_separable: bool
    gf_below: IntPoly
    rank_symmetric: bool
    unimodal: bool
    cyclotomic_product: bool
    divides_qfact: bool


@dataclass(frozen=True)
class SurveyReport:
    n: int
    total: int
    count_separable: int
    count_rank_symmetric: int
    count_symmetric_cyclotomic: int
    count_symmetric_nondividing: int
    wall_time: float  # this run only; resumed runs report their own slice


@lru_cache(maxsize=None)
def schroder(k: int) -> int:
    """Large Schroeder numbers 1, 2, 6, 22, 90, 394, 1806, 8558, ...
    by the convolution recurrence; the survey's separable counts are
    checked against these.

    >>> [schroder(k) for k in range(8)]
    [1, 2, 6, 22, 90, 394, 1806, 8558]
    """
    if k < 0:
        raise ValueError(f"schroder index must be nonnegative, got {k}")
    if k == 0:
        return 1
    return schroder(k - 1) + sum(schroder(j) * schroder(k - 1 - j) for j in range(k))


# Per-process memo: many permutations share one generating function,
# and the cyclotomic factoring is the expensive predicate.  Divisibility
# is against [n]!, so n is part of the key.
_pred_cache: dict[tuple, tuple[bool, bool, bool, bool]] = {}


def _predicates(gf: IntPoly, n: int) -> tuple[bool, bool, bool, bool]:
    key = (gf.coeffs, n)
    got = _pred_cache.get(key)
    if got is not None:
        return got
    sym = gf.is_symmetric()
    uni = gf.is_unimodal()
    cyc = is_cyclotomic_product(gf)
    try:
        q_factorial(n).exact_div(gf)
        div = True
    except NonzeroRemainder:
        div = False
    result = (sym, uni, cyc, div)
    _pred_cache[key] = result
    return result


def _gf_below(pi: Permutation, mode: str, force: bool = False) -> IntPoly:
    if mode == "exact-bruteforce":
        return rank_gf(interval(identity(pi.size), pi, force=force))
    if is_separable(pi):
        return gf_below_recursive(pi)
    return le_gf(inversion_poset(pi), force=force)


def _record_tuple(word: tuple[int, ...], mode: str, force: bool = False):
    pi = Permutation(word)
    sep = is_separable(pi)
    gf = _gf_below(pi, mode, force)
    if gf.coeffs[0] != 1 or gf.degree != pi.length or any(c < 0 for c in gf.coeffs):
        raise AssertionError(f"malformed generating function for {pi}: {gf.coeffs}")
    sym, uni, cyc, div = _predicates(gf, pi.size)
    return (str(pi), sep, gf.coeffs, sym, uni, cyc, div)


def _scan_chunk(args):
    mode, words = args
    return [_record_tuple(w, mode) for w in words]


def iter_records(n: int, mode: str = "formula-accelerated", force: bool = False):
    """Single-process record stream in lexicographic word order."""
    _check_scan_args(n, mode, force)
    for word in permutations(range(1, n + 1)):
        t = _record_tuple(word, mode, force)
        yield SurveyRecord(t[0], t[1], IntPoly(t[2]), t[3], t[4], t[5], t[6])


def _check_scan_args(n: int, mode: str, force: bool) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown scan mode {mode!r}; expected one of {MODES}")
    if n < 1:
        raise ValueError(f"scan needs n >= 1, got {n}")
    if n > SURVEY_HARD_LIMIT:
        raise GuardExceeded(f"surveys beyond n = {SURVEY_HARD_LIMIT} are not supported")
    if n > SURVEY_GUARD and not force:
        raise GuardExceeded(
            f"survey guarded at n <= {SURVEY_GUARD} (got {n}); "
            "pass force=True (--force) to override"
        )


def default_workers() -> int:
    """Worker count: BRUHAT_THREADS caps the machine's cpu count."""
    cpus = os.cpu_count() or 1
    env = os.environ.get("BRUHAT_THREADS")
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise ValueError(f"BRUHAT_THREADS must be an integer, got {env!r}") from None
        if cap < 1:
            raise ValueError(f"BRUHAT_THREADS must be positive, got {cap}")
        return min(cpus, cap)
    return cpus


def _warm_caches(n: int) -> None:
    # computed before any fork so workers inherit the memo tables
    is_cyclotomic_product(q_factorial(n))


def _format_row(rec) -> str:
    word, sep, coeffs, sym, uni, cyc, div = rec
    gf = ";".join(str(c) for c in coeffs)
    f = ["true" if b else "false" for b in (sep, sym, uni, cyc, div)]
    return f"{word},{f[0]},{gf},{f[1]},{f[2]},{f[3]},{f[4]}\n"


class _Counts:
    __slots__ = ("separable", "symmetric", "symmetric_cyclotomic", "symmetric_nondividing")

    def __init__(self):
        self.separable = 0
        self.symmetric = 0
        self.symmetric_cyclotomic = 0
        self.symmetric_nondividing = 0

    def add(self, sep: bool, sym: bool, cyc: bool, div: bool) -> None:
        if sep:
            self.separable += 1
        if sym:
            self.symmetric += 1
            if cyc:
                self.symmetric_cyclotomic += 1
            if not div:
                self.symmetric_nondividing += 1


def _aggregate_rows(lines, counts: _Counts) -> None:
    for line in lines:
        parts = line.split(",")
        if len(parts) != 7:
            raise CheckpointError(f"malformed survey row: {line!r}")
        sep, sym, cyc, div = (parts[i] == "true" for i in (1, 3, 5, 6))
        counts.add(sep, sym, cyc, div)


def _atomic_write(path: str, data: bytes) -> None:
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(data)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def _write_checkpoint(path: str, n: int, mode: str, completed: int, nbytes: int, digest: str) -> None:
    meta = {"n": n, "mode": mode, "completed": completed, "bytes": nbytes, "sha256": digest}
    _atomic_write(path, json.dumps(meta).encode())


def _chunked_words(n: int, start: int, size: int):
    stream = islice(permutations(range(1, n + 1)), start, None)
    while True:
        chunk = tuple(islice(stream, size))
        if not chunk:
            return
        yield chunk


def report_json(report: SurveyReport) -> dict:
    return {
        "n": report.n,
        "total": report.total,
        "count_separable": report.count_separable,
        "count_rank_symmetric": report.count_rank_symmetric,
        "count_symmetric_cyclotomic": report.count_symmetric_cyclotomic,
        "count_symmetric_nondividing": report.count_symmetric_nondividing,
        "wall_time": report.wall_time,
    }


def scan(
    n: int,
    mode: str = "formula-accelerated",
    out: str | None = None,
    resume: bool = False,
    workers: int | None = None,
    force: bool = False,
) -> SurveyReport:
    """Survey all of S_n.  With out set, stream a CSV there (plus a
    .ckpt checkpoint while running and a .summary.json at the end);
    resume=True continues an interrupted scan from its checkpoint."""
    _check_scan_args(n, mode, force)
    t0 = time.monotonic()
    total = factorial(n)
    counts = _Counts()
    if workers is None:
        workers = default_workers()

    if out is None:
        for rec in _iter_record_tuples(n, mode, workers, start=0, force=force):
            counts.add(rec[1], rec[3], rec[5], rec[6])
        return _make_report(n, total, counts, t0)

    partial = out + ".partial"
    ckpt = out + ".ckpt"
    hasher = sha256()
    start = 0

    if resume and os.path.exists(ckpt):
        start, prefix = _load_checkpoint(ckpt, out, partial, n, mode)
        hasher.update(prefix)
        _aggregate_rows(prefix.decode().splitlines()[1:], counts)
        if start == total:
            if os.path.exists(partial):
                os.replace(partial, out)
            report = _make_report(n, total, counts, t0)
            _atomic_write(out + ".summary.json", json.dumps(report_json(report)).encode())
            return report
        with open(partial, "r+b") as fh:
            fh.truncate(len(prefix))
        sink = open(partial, "ab")
    else:
        sink = open(partial, "wb")
        header = CSV_HEADER.encode()
        sink.write(header)
        hasher.update(header)
        _write_checkpoint(ckpt, n, mode, 0, len(header), hasher.hexdigest())

    nbytes = sink.tell()
    completed = start
    try:
        pending = _iter_chunk_results(n, mode, workers, start)
        for chunk in pending:
            for rec in chunk:
                row = _format_row(rec).encode()
                sink.write(row)
                hasher.update(row)
                nbytes += len(row)
                counts.add(rec[1], rec[3], rec[5], rec[6])
            completed += len(chunk)
            sink.flush()
            os.fsync(sink.fileno())
            _write_checkpoint(ckpt, n, mode, completed, nbytes, hasher.hexdigest())
    finally:
        sink.close()

    os.replace(partial, out)
    report = _make_report(n, total, counts, t0)
    _atomic_write(out + ".summary.json", json.dumps(report_json(report)).encode())
    return report


def _make_report(n: int, total: int, counts: _Counts, t0: float) -> SurveyReport:
    return SurveyReport(
        n=n,
        total=total,
        count_separable=counts.separable,
        count_rank_symmetric=counts.symmetric,
        count_symmetric_cyclotomic=counts.symmetric_cyclotomic,
        count_symmetric_nondividing=counts.symmetric_nondividing,
        wall_time=time.monotonic() - t0,
    )


def _load_checkpoint(ckpt: str, out: str, partial: str, n: int, mode: str):
    try:
        with open(ckpt, "rb") as fh:
            meta = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CheckpointError(f"unreadable checkpoint {ckpt}: {exc}") from exc
    for key in ("n", "mode", "completed", "bytes", "sha256"):
        if key not in meta:
            raise CheckpointError(f"checkpoint {ckpt} is missing {key!r}")
    if meta["n"] != n or meta["mode"] != mode:
        raise CheckpointError(
            f"checkpoint {ckpt} was written by a different scan "
            f"(n={meta['n']}, mode={meta['mode']})"
        )
    stream = partial if os.path.exists(partial) else out
    if not os.path.exists(stream):
        raise CheckpointError(f"checkpoint {ckpt} has no data file alongside it")
    if stream == out and meta["completed"] != factorial(n):
        raise CheckpointError(f"checkpoint {ckpt} is incomplete but {partial} is gone")
    with open(stream, "rb") as fh:
        data = fh.read()
    if len(data) < meta["bytes"]:
        raise CheckpointError(
            f"{stream} is shorter ({len(data)} bytes) than its checkpoint claims "
            f"({meta['bytes']} bytes)"
        )
    prefix = data[: meta["bytes"]]
    if sha256(prefix).hexdigest() != meta["sha256"]:
        raise CheckpointError(f"{stream} does not match the checkpoint hash in {ckpt}")
    lines = prefix.decode().splitlines()
    if not lines or lines[0] != CSV_HEADER.strip():
        raise CheckpointError(f"{stream} does not start with the survey header")
    if len(lines) - 1 != meta["completed"]:
        raise CheckpointError(
            f"{stream} holds {len(lines) - 1} records but the checkpoint "
            f"claims {meta['completed']}"
        )
    return meta["completed"], prefix


def _iter_chunk_results(n: int, mode: str, workers: int, start: int):
    chunks = _chunked_words(n, start, _CHUNK)
    remaining = factorial(n) - start
    if workers <= 1 or remaining <= 2 * _CHUNK:
        for chunk in chunks:
            yield [_record_tuple(w, mode) for w in chunk]
        return
    _warm_caches(n)
    ctx = get_context("fork")
    with ctx.Pool(processes=workers) as pool:
        yield from pool.imap(_scan_chunk, ((mode, c) for c in chunks))


def _iter_record_tuples(n: int, mode: str, workers: int, start: int, force: bool):
    if force:
        # guards already cleared centrally; stay single-process so the
        # force flag reaches the per-record computations
        for chunk in _chunked_words(n, start, _CHUNK):
            yield from (_record_tuple(w, mode, True) for w in chunk)
        return
    for chunk in _iter_chunk_results(n, mode, workers, start):
        yield from chunk


if __name__ == "__main__":
    import doctest

    doctest.testmod()
