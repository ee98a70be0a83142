"""Exhaustive scans: record stream, aggregation, the two modes, and the
checkpoint/resume contract (interrupted runs finish byte-identical)."""

import json

import pytest

from weakbruhat import survey
from weakbruhat.errors import CheckpointError, GuardExceeded
from weakbruhat.survey import (
    SurveyRecord,
    default_workers,
    iter_records,
    scan,
    schroder,
)


def test_schroder_values():
    assert [schroder(k) for k in range(8)] == [1, 2, 6, 22, 90, 394, 1806, 8558]


def test_iter_records_n4():
    records = list(iter_records(4))
    assert len(records) == 24
    assert [r.word for r in records] == sorted(r.word for r in records)
    assert sum(r.is_separable for r in records) == 22
    by_word = {r.word: r for r in records}
    r = by_word["2413"]
    assert r == SurveyRecord(
        word="2413",
        is_separable=False,
        gf_below=r.gf_below,
        rank_symmetric=False,
        unimodal=True,
        cyclotomic_product=False,
        divides_qfact=False,
    )
    assert r.gf_below.coeffs == (1, 2, 1, 1)
    assert by_word["1234"].gf_below.coeffs == (1,)
    assert by_word["4321"].divides_qfact


@pytest.mark.parametrize("n", range(1, 5))
def test_modes_agree(n):
    fast = list(iter_records(n, mode="formula-accelerated"))
    brute = list(iter_records(n, mode="exact-bruteforce"))
    assert fast == brute


def test_scan_in_memory_counts():
    report = scan(5)
    assert report.n == 5
    assert report.total == 120
    assert report.count_separable == schroder(4) == 90
    assert report.count_rank_symmetric == 94
    assert report.count_symmetric_cyclotomic == 94
    assert report.count_symmetric_nondividing == 2
    assert report.wall_time > 0


def test_scan_n1_all_counts_one():
    report = scan(1)
    assert (report.total, report.count_separable, report.count_rank_symmetric) == (1, 1, 1)


def test_scan_writes_csv_and_summary(tmp_path):
    out = tmp_path / "s4.csv"
    report = scan(4, out=str(out))
    lines = out.read_text().splitlines()
    assert lines[0] == "word,separable,gf,symmetric,unimodal,cyclotomic,divides"
    assert len(lines) == 1 + 24
    assert lines[1] == "1234,true,1,true,true,true,true"
    row_2413 = next(line for line in lines if line.startswith("2413,"))
    assert row_2413 == "2413,false,1;2;1;1,false,true,false,false"
    summary = json.loads((tmp_path / "s4.csv.summary.json").read_text())
    assert summary["count_separable"] == report.count_separable == 22
    ckpt = json.loads((tmp_path / "s4.csv.ckpt").read_text())
    assert ckpt["completed"] == 24
    assert not (tmp_path / "s4.csv.partial").exists()


class _Trip:
    """Raise once a set number of records have been evaluated."""

    def __init__(self, limit, inner):
        self.limit = limit
        self.inner = inner
        self.count = 0

    def __call__(self, word, mode, force=False):
        self.count += 1
        if self.count > self.limit:
            raise KeyboardInterrupt("simulated interrupt")
        return self.inner(word, mode, force)


def test_resume_after_interrupt_is_byte_identical(tmp_path, monkeypatch):
    clean = tmp_path / "clean.csv"
    scan(5, out=str(clean), workers=1)

    out = tmp_path / "s5.csv"
    monkeypatch.setattr(survey, "_CHUNK", 16)
    trip = _Trip(40, survey._record_tuple)
    monkeypatch.setattr(survey, "_record_tuple", trip)
    with pytest.raises(KeyboardInterrupt):
        scan(5, out=str(out), workers=1)
    monkeypatch.setattr(survey, "_record_tuple", trip.inner)

    ckpt = json.loads((tmp_path / "s5.csv.ckpt").read_text())
    assert 0 < ckpt["completed"] < 120
    assert ckpt["completed"] % 16 == 0
    assert (tmp_path / "s5.csv.partial").exists()

    report = scan(5, out=str(out), resume=True, workers=1)
    assert report.total == 120
    assert out.read_bytes() == clean.read_bytes()
    assert not (tmp_path / "s5.csv.partial").exists()


def test_parallel_output_matches_serial(tmp_path, monkeypatch):
    # small chunks so 120 records exceed the serial cutoff of 2 chunks
    monkeypatch.setattr(survey, "_CHUNK", 16)
    serial = tmp_path / "serial.csv"
    pooled = tmp_path / "pooled.csv"
    scan(5, out=str(serial), workers=1)
    report = scan(5, out=str(pooled), workers=2)
    assert report.total == 120
    assert pooled.read_bytes() == serial.read_bytes()


def test_resume_without_checkpoint_runs_fresh(tmp_path):
    out = tmp_path / "s3.csv"
    report = scan(3, out=str(out), resume=True)
    assert report.total == 6
    assert len(out.read_text().splitlines()) == 7


def test_resume_on_completed_run_short_circuits(tmp_path):
    out = tmp_path / "s4.csv"
    scan(4, out=str(out))
    before = out.read_bytes()
    report = scan(4, out=str(out), resume=True)
    assert report.total == 24
    assert out.read_bytes() == before


def test_resume_rejects_tampered_stream(tmp_path, monkeypatch):
    out = tmp_path / "s5.csv"
    monkeypatch.setattr(survey, "_CHUNK", 16)
    trip = _Trip(40, survey._record_tuple)
    monkeypatch.setattr(survey, "_record_tuple", trip)
    with pytest.raises(KeyboardInterrupt):
        scan(5, out=str(out), workers=1)
    monkeypatch.setattr(survey, "_record_tuple", trip.inner)

    partial = tmp_path / "s5.csv.partial"
    data = partial.read_bytes()
    partial.write_bytes(data.replace(b"true", b"trye", 1))  # same length, new hash
    with pytest.raises(CheckpointError, match="hash"):
        scan(5, out=str(out), resume=True, workers=1)


def test_resume_rejects_mismatched_parameters(tmp_path):
    out = tmp_path / "s.csv"
    scan(4, out=str(out))
    with pytest.raises(CheckpointError):
        scan(5, out=str(out), resume=True)


def test_scan_guards():
    with pytest.raises(GuardExceeded, match="force"):
        scan(9)
    with pytest.raises(GuardExceeded, match="not supported"):
        scan(10, force=True)
    with pytest.raises(ValueError, match="mode"):
        scan(3, mode="approximate")
    with pytest.raises(ValueError):
        scan(0)


def test_default_workers_env(monkeypatch):
    monkeypatch.delenv("BRUHAT_THREADS", raising=False)
    base = default_workers()
    assert base >= 1
    monkeypatch.setenv("BRUHAT_THREADS", "1")
    assert default_workers() == 1
    monkeypatch.setenv("BRUHAT_THREADS", str(base + 5))
    assert default_workers() == base
    monkeypatch.setenv("BRUHAT_THREADS", "zero")
    with pytest.raises(ValueError, match="integer"):
        default_workers()
    monkeypatch.setenv("BRUHAT_THREADS", "0")
    with pytest.raises(ValueError, match="positive"):
        default_workers()


def test_predicate_cache_keeps_sizes_apart():
    # [5] divides [5]! but not [4]!; a shared cache entry must not leak
    from weakbruhat.qpoly import IntPoly

    gf = IntPoly((1, 1, 1, 1, 1))
    assert survey._predicates(gf, 4)[3] is False
    assert survey._predicates(gf, 5)[3] is True


def test_record_tuple_rejects_malformed_gf(monkeypatch):
    # the per-record validation is the survey's own safety net
    from weakbruhat.qpoly import IntPoly

    monkeypatch.setattr(survey, "_gf_below", lambda pi, mode, force=False: IntPoly((1, 1, 1)))
    with pytest.raises(AssertionError, match="malformed"):
        survey._record_tuple((2, 1), "formula-accelerated")
