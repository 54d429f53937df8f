"""Package that provides the library modules behind the command-line explorer.

These modules build the generalized Suzuki curve X^q0 (X^q + X) = Y^q + Y over GF(2^s),
its Weierstrass semigroup at infinity, the one-point AG codes on it and the quantum
code parameters derived from them.

Modules:
    - agcode: One-point AG codes, generator matrices, duality and distances.
    - config: Constants, budgets and command-line parsing.
    - curve: Curve parameters, rational points, automorphisms and Castle checks.
    - exceptions: Errors rendered as one machine-parseable line.
    - file_utils: Utilities for file operations and artifact rendering.
    - general_utils: Chunking and the thread-pool runner.
    - gf2m: Arithmetic in GF(2^m) and subfield embeddings.
    - quantum: CSS and t-point quantum code parameters.
    - semigroup: Numerical semigroups, Apéry sets and the order bound.

This package is designed to be reusable and modular, allowing its components to be
easily imported and used across different parts of the application.
"""

# src/__init__.py

__all__ = [
    "agcode",
    "config",
    "curve",
    "exceptions",
    "file_utils",
    "general_utils",
    "gf2m",
    "quantum",
    "semigroup",
]
