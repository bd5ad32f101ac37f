"""Bundled example nets."""

from importlib import resources

from ..formats.dsl import parse_dsl
from ..net import PetriNet


def bakingsoda_text() -> str:
    """DSL source of the bundled baking-soda production net."""
    return (resources.files(__package__) / "bakingsoda.net").read_text(encoding="utf-8")


def bakingsoda_net() -> PetriNet:
    """The bundled 18-place, 7-transition baking-soda production net."""
    return parse_dsl(bakingsoda_text()).build()
