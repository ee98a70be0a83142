"""The verification suites as a library surface: registry, pass/fail
shapes, and the one suite that is expected to report counterexamples."""

import pytest

from weakbruhat.verify import SUITES, run_suite, suite_names


def test_registry_is_complete():
    assert suite_names() == (
        "main-theorem",
        "ff",
        "duality",
        "chains-words",
        "op-lemma",
        "des",
        "formula",
        "explicit-231",
        "bijection",
        "sym-unim",
    )
    assert set(SUITES) == set(suite_names())


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_main_theorem_counts_cumulatively():
    result = run_suite("main-theorem", 5)
    assert result.passed
    labels = {c.label: c.detail for c in result.checks}
    assert "121 separable permutations" in labels["formula product F(below)*F(above) equals the q-factorial"]


@pytest.mark.parametrize("name,n", [("formula", 5), ("explicit-231", 5), ("des", 4)])
def test_passing_suites(name, n):
    result = run_suite(name, n)
    assert result.passed, [c.label for c in result.checks if not c.passed]


def test_op_lemma_counts_small_posets():
    result = run_suite("op-lemma")
    assert result.passed
    # 1 + 3 + 19 posets up to size 3 give 23*23 ordered pairs
    assert any("529 poset pairs" in c.detail for c in result.checks)


def test_sym_unim_reports_honest_counterexamples():
    result = run_suite("sym-unim", 6)
    assert not result.passed
    by_label = {c.label: c for c in result.checks}
    shape = by_label["separable generating functions are symmetric and unimodal"]
    assert shape.passed
    implication = by_label["rank-symmetric implies a cyclotomic product"]
    assert not implication.passed
    assert "245163" in implication.detail
    assert len(implication.detail.split(":")[1].split()) == 7


def test_counterexample_list_is_capped():
    result = run_suite("sym-unim", 7)
    implication = next(c for c in result.checks if not c.passed)
    assert "more" in implication.detail
