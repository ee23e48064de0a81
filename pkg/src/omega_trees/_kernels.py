"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it was built; setting the
environment variable ``OMEGA_TREES_PURE=1`` forces the pure-Python fallback.
"""
import os

BACKEND = "python"

if os.environ.get("OMEGA_TREES_PURE"):
    from ._pykernels import decode, encode, incompatible, is_prefix, kb_leq, pair, unpair
else:
    try:
        from ._ckernels import (  # type: ignore[no-redef]
            decode, encode, incompatible, is_prefix, kb_leq, pair, unpair,
        )
        BACKEND = "cython"
    except ImportError:
        from ._pykernels import decode, encode, incompatible, is_prefix, kb_leq, pair, unpair

__all__ = ["BACKEND", "decode", "encode", "incompatible", "is_prefix", "kb_leq", "pair", "unpair"]
