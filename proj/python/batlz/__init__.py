"""Lempel-Ziv parsing with a bound on the chain length of every position.

Texts are bytes; a sentinel is appended internally. Positions are 1-based.
"""

from ._batlz import (
    ALGORITHMS,
    CompressedFile,
    CorruptionError,
    FormatError,
    IoError,
    chains,
    compress,
    decompress,
    extract,
    generate_corpus,
    parse,
)

__all__ = [
    "ALGORITHMS",
    "CompressedFile",
    "CorruptionError",
    "FormatError",
    "IoError",
    "chains",
    "compress",
    "decompress",
    "extract",
    "generate_corpus",
    "parse",
]
