# conftest.py — общие фикстуры тестов
# -----------------------------------
import numpy as np
import pytest

from matrix import Matrix
from ring import ExtField, IntRing, PrimeField
from verify import Instance


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    # тесты не должны зависеть от .env разработчика
    for key in ("MMV_THREADS", "MMV_TILE", "MMV_KW_CAP", "MMV_EXT_CAP", "MMV_INSTANCE_POOL", "MMV_DB_PATH", "MMV_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def z7():
    return PrimeField(7)


@pytest.fixture
def z101():
    return PrimeField(101)


@pytest.fixture
def gf8():
    return ExtField(2, 3)


@pytest.fixture
def int1024():
    return IntRing(1024)


def mat(ring, rows) -> Matrix:
    return Matrix.from_rows(ring, rows)


def inst(ring, A, B, C=None, promise=None) -> Instance:
    return Instance(mat(ring, A), mat(ring, B), None if C is None else mat(ring, C), promise)


def random_square(rng: np.random.Generator, ring, n: int) -> Matrix:
    if isinstance(ring, IntRing):
        data = rng.integers(-ring.M, ring.M + 1, size=(n, n))
    elif isinstance(ring, ExtField):
        data = rng.integers(0, ring.p, size=(n, n, ring.e))
    else:
        data = rng.integers(0, ring.p, size=(n, n))
    return Matrix(ring, data.astype(np.int64))
