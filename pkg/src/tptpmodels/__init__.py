"""tptpmodels: parse, assemble, evaluate, and verify TPTP interpretations."""

__version__ = "0.1.0"
