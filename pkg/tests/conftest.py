"""
Shared pytest fixtures for the perfcone test suite.
"""

import pytest
from hypothesis import strategies as st

from app.cli.golden import GOLDEN_RECORDS
from app.ring import DeltaPoly, YPoly


@pytest.fixture
def golden_records():
    return GOLDEN_RECORDS


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    from app.cli.commands import main

    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@st.composite
def delta_polys(draw, max_degree=4, max_terms=5):
    """Small DeltaPolys with integer coefficients."""
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        i = draw(st.integers(min_value=0, max_value=max_degree))
        j = draw(st.integers(min_value=0, max_value=max_degree - i))
        k = draw(st.integers(min_value=0, max_value=max_degree - i - j))
        terms[(i, j, k)] = draw(st.integers(min_value=-20, max_value=20))
    return DeltaPoly(terms)


@st.composite
def homogeneous_delta_polys(draw, degree, max_terms=6):
    """DeltaPolys whose monomials all have total degree `degree`."""
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        i = draw(st.integers(min_value=0, max_value=degree))
        j = draw(st.integers(min_value=0, max_value=degree - i))
        terms[(i, j, degree - i - j)] = draw(st.integers(min_value=-20, max_value=20))
    return DeltaPoly(terms)


@st.composite
def y_polys(draw, max_degree=3, max_terms=5):
    """Small YPolys, not necessarily canonical (xi-degree up to 3)."""
    terms = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        e = draw(st.integers(min_value=0, max_value=3))
        i = draw(st.integers(min_value=0, max_value=max_degree))
        j = draw(st.integers(min_value=0, max_value=max_degree - i))
        k = draw(st.integers(min_value=0, max_value=max_degree - i - j))
        terms[(e, i, j, k)] = draw(st.integers(min_value=-20, max_value=20))
    return YPoly(terms)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large-genus runs (deselect with -m 'not slow')")
