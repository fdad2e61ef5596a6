import pytest

from twofaced.kernels import GaussianRational
from twofaced.ncpoly import Alphabet


def gr(re, im=0):
    """Gaussian rational from Fraction-like parts, e.g. gr(1, 2) = 1 + 2i."""
    return GaussianRational(re, im)


@pytest.fixture
def pair():
    return Alphabet([("x", "L"), ("y", "R")])


@pytest.fixture
def single():
    return Alphabet([("x", None), ("y", None)])


@pytest.fixture
def report(capsys):
    """Print one pass/fail line past pytest's capture, then assert."""

    def emit(name: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] {name}"
        if detail:
            line += f" ({detail})"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return emit
