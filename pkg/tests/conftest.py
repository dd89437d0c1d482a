"""Shared fixtures: session-scoped builders for the expensive algebras and gradings."""

import os

import pytest

import weyl_gradings.config as config_module
from weyl_gradings.algebras import albert_algebra, cayley_cd_basis, cayley_good_basis, okubo_algebra
from weyl_gradings.gradings import builtin_grading


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings with no WEYL_* overrides."""
    for key in list(os.environ):
        if key.startswith("WEYL_"):
            monkeypatch.delenv(key, raising=False)
    config_module._config_manager = None
    yield
    config_module._config_manager = None


@pytest.fixture(scope="session")
def cayley():
    return cayley_good_basis()


@pytest.fixture(scope="session")
def cayley_cd():
    return cayley_cd_basis()


@pytest.fixture(scope="session")
def okubo():
    return okubo_algebra()


@pytest.fixture(scope="session")
def albert():
    return albert_algebra()


@pytest.fixture(scope="session")
def cartan_cayley():
    return builtin_grading("cartan_cayley")


@pytest.fixture(scope="session")
def cd_cayley():
    return builtin_grading("cd_cayley")


@pytest.fixture(scope="session")
def albert_cartan():
    return builtin_grading("albert_cartan")


@pytest.fixture(scope="session")
def albert_z25():
    return builtin_grading("albert_z25")


@pytest.fixture(scope="session")
def albert_zz23():
    return builtin_grading("albert_zz23")


@pytest.fixture(scope="session")
def albert_z33():
    return builtin_grading("albert_z33")
