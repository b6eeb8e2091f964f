"""Decimal digit sequences, signed column sequences, and carry normalization.

A :class:`DigitString` is the canonical big-endian digit form of a
non-negative integer.  A :class:`SignedDigitString` is a positional column
sequence whose entries may be negative or exceed 9; it denotes
``sum(columns[i] * 10**(len-1-i))`` and is what the multiplication methods
produce before carries are resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "DigitString",
    "SignedDigitString",
    "SegmentString",
    "parse",
    "segment",
    "normalize",
    "normalize_stats",
    "value_of",
]

_GROUP_SEPARATORS = " _"


@dataclass(frozen=True)
class DigitString:
    """Canonical base-10 digits of a non-negative integer, most significant first."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.digits:
            raise ValueError("digit string must not be empty")
        if any(not 0 <= d <= 9 for d in self.digits):
            raise ValueError(f"digits must lie in 0..9: {self.digits}")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError(f"leading zero in digit string: {self.digits}")

    @classmethod
    def from_int(cls, value: int) -> DigitString:
        if value < 0:
            raise ValueError(f"digit strings represent non-negative integers, got {value}")
        return cls(tuple(int(ch) for ch in str(value)))

    def __int__(self) -> int:
        value = 0
        for d in self.digits:
            value = value * 10 + d
        return value

    def __str__(self) -> str:
        return "".join(str(d) for d in self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, index: int) -> int:
        return self.digits[index]

    @property
    def is_zero(self) -> bool:
        return self.digits == (0,)


@dataclass(frozen=True)
class SignedDigitString:
    """Column sequence with weight ``10**(len-1-i)`` per column, carries unresolved."""

    columns: tuple[int, ...]

    def value(self) -> int:
        total = 0
        for c in self.columns:
            total = total * 10 + c
        return total

    def __len__(self) -> int:
        return len(self.columns)

    def __iter__(self) -> Iterator[int]:
        return iter(self.columns)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.columns) + ")"


@dataclass(frozen=True)
class SegmentString:
    """Digit string regrouped into fixed-length chunks, radix ``10**length``."""

    length: int
    segments: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"segment length must be positive, got {self.length}")
        bound = 10**self.length
        if any(not 0 <= s < bound for s in self.segments):
            raise ValueError(f"segments must lie in 0..{bound - 1}: {self.segments}")

    def __len__(self) -> int:
        return len(self.segments)

    def value(self) -> int:
        radix = 10**self.length
        total = 0
        for s in self.segments:
            total = total * radix + s
        return total


def parse(text: str) -> DigitString:
    """Parse a decimal numeral, allowing space/underscore grouping; canonicalize."""
    cleaned = text.strip()
    for sep in _GROUP_SEPARATORS:
        cleaned = cleaned.replace(sep, "")
    if not cleaned:
        raise ValueError(f"empty numeral: {text!r}")
    if not cleaned.isascii() or not cleaned.isdigit():
        raise ValueError(f"not a non-negative decimal numeral: {text!r}")
    return DigitString.from_int(int(cleaned))


def segment(ds: DigitString, length: int) -> SegmentString:
    """Regroup ``ds`` into chunks of ``length`` digits, left-padding with zeros."""
    if length < 1:
        raise ValueError(f"segment length must be positive, got {length}")
    digits = ds.digits
    pad = (-len(digits)) % length
    padded = (0,) * pad + digits
    segments = []
    for i in range(0, len(padded), length):
        value = 0
        for d in padded[i : i + length]:
            value = value * 10 + d
        segments.append(value)
    return SegmentString(length=length, segments=tuple(segments))


def value_of(s: SignedDigitString | Iterable[int]) -> int:
    """Exact integer value of a signed column sequence (empty sum is 0)."""
    columns = s.columns if isinstance(s, SignedDigitString) else tuple(s)
    total = 0
    for c in columns:
        total = total * 10 + c
    return total


def normalize_stats(s: SignedDigitString, radix_power: int = 1) -> tuple[DigitString, int]:
    """Resolve carries in ``s`` (columns in radix ``10**radix_power``).

    Columns are processed least significant first; each column keeps its
    floored remainder modulo the radix and passes the floored quotient up, so
    negative columns borrow correctly.  Returns the canonical digit string and
    the number of columns that emitted a non-zero carry.
    """
    if radix_power < 1:
        raise ValueError(f"radix power must be positive, got {radix_power}")
    radix = 10**radix_power
    limbs: list[int] = []
    carry = 0
    carries = 0
    for column in reversed(s.columns):
        carry, limb = divmod(column + carry, radix)
        if carry != 0:
            carries += 1
        limbs.append(limb)
    if carry < 0:
        raise ValueError("signed digit string has negative total value")
    digits: list[int] = []
    if carry > 0:
        digits.extend(int(ch) for ch in str(carry))
    for limb in reversed(limbs):
        if digits:
            digits.extend(int(ch) for ch in str(limb).zfill(radix_power))
        else:
            digits.extend(int(ch) for ch in str(limb))
    # strip to canonical form
    while len(digits) > 1 and digits[0] == 0:
        digits.pop(0)
    if not digits:
        digits = [0]
    return DigitString(tuple(digits)), carries


def normalize(s: SignedDigitString, radix_power: int = 1) -> DigitString:
    """Value-preserving conversion of a signed column sequence to canonical digits."""
    return normalize_stats(s, radix_power)[0]
