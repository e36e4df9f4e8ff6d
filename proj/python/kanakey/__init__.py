"""Reduced-keypad kana entry.

Compile a dictionary into a key index, drive input sessions with key
events, and compare keystroke costs against multi-tap entry.
"""

from fractions import Fraction

from ._core import (
    Error,
    Index,
    Session,
    encode,
    kana_to_romaji,
    multitap_cost,
    multitap_expand,
    romaji_to_kana,
    syllabary_counts,
)

__all__ = [
    "Error",
    "Index",
    "Session",
    "encode",
    "kana_to_romaji",
    "kspc",
    "multitap_cost",
    "multitap_expand",
    "romaji_to_kana",
    "syllabary_counts",
]


def kspc(report):
    """Keystrokes per kana of an `Index.evaluate` column, or None."""
    num, den = report["kspc"]
    return None if num is None else Fraction(num, den)
