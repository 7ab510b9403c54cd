"""Finite permutation groups, commutator-order profiles and exact character tables."""

from .perm import Permutation
from .group import FiniteGroup, ConjugacyClass, CapExceeded, generate
from .catalog import make_named_group, corpus_group, load_manifest
from .chartab import CharacterTable, character_table
from .verify import CheckReport, run_suite

__all__ = [
    "Permutation", "FiniteGroup", "ConjugacyClass", "CapExceeded", "generate",
    "make_named_group", "corpus_group", "load_manifest",
    "CharacterTable", "character_table", "CheckReport", "run_suite",
]
__version__ = "0.1.0"
