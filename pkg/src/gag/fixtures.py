"""Bundled models used by the docs, the test suite, and the CLI.

`paper_example` is the worked five-element example that the theorem
suite's literature sources build their discussion around; the CLI
accepts `@paper-example` wherever a model path is expected.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .fileformat import parse_model
from .model import GammaGroupoid

PAPER_EXAMPLE_NAME = "paper_example.gag"
PAPER_EXAMPLE_TOKEN = "@paper-example"


def paper_example_text() -> str:
    """Raw text of the bundled five-element example model."""
    return resources.files("gag").joinpath("data").joinpath(PAPER_EXAMPLE_NAME).read_text()


@lru_cache(maxsize=1)
def paper_example() -> GammaGroupoid:
    """The bundled five-element, one-operator example model."""
    return parse_model(paper_example_text())
