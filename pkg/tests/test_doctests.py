"""Every docstring example in the library must execute as written."""

import doctest

import pytest

import weakbruhat
from weakbruhat import (
    bijection,
    cli,
    errors,
    perm,
    poset,
    qpoly,
    separable,
    survey,
    verify,
    weak_order,
)

MODULES = [
    weakbruhat,
    bijection,
    cli,
    errors,
    perm,
    poset,
    qpoly,
    separable,
    survey,
    verify,
    weak_order,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0, f"{result.failed} doctest failures in {module.__name__}"
