"""Performance-evaluation toolkit for Bundle Protocol (DTN) implementations.

Keep this module import-light: the refnode CLI is spawned once per test
hook and must not pay for numpy/scipy at startup.
"""

__version__ = "0.1.0"
