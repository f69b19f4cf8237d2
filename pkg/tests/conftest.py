from pathlib import Path

import pytest

from reslat.finite import load_algebra

FIXTURES_DIR = Path(__file__).resolve().parents[1] / "fixtures"

FIXTURE_NAMES = ("l2", "l4", "g3", "bool2", "bool4")


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def fixture_algebras():
    return {name: load_algebra(FIXTURES_DIR / f"{name}.alg") for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def corrupt_algebra():
    return load_algebra(FIXTURES_DIR / "l4-corrupt.alg")
