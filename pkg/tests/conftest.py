"""Shared fixtures and hypothesis strategies for the test suite."""

import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from gag import GammaGroupoid
from gag.fixtures import paper_example

DATA_DIR = Path(__file__).parent / "data"


def load_data(name: str):
    with open(DATA_DIR / name) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def m5() -> GammaGroupoid:
    # Order-5 single-operator model used as the worked fixture throughout.
    return paper_example()


@st.composite
def models(draw, max_n: int = 4, max_m: int = 2, min_n: int = 1) -> GammaGroupoid:
    """Arbitrary labelled model with n <= max_n elements, m <= max_m operators."""
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(1, max_m))
    flat = draw(
        st.lists(st.integers(0, n - 1), min_size=n * n * m, max_size=n * n * m)
    )
    return GammaGroupoid(n, m, tuple(flat))


@st.composite
def subsets_of(draw, n: int):
    from gag import Subset

    mask = draw(st.integers(1, (1 << n) - 1))
    return Subset(n, mask)
