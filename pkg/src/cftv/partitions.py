"""Integer partitions: canonical form, enumeration, conjugation."""

from __future__ import annotations

from typing import Iterator, Sequence


class Partition(tuple):
    """Non-increasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` compare equal and hash identically.
    """

    def __new__(cls, parts: Sequence[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def padded(self, m: int) -> tuple[int, ...]:
        """Parts padded with zeros to exactly ``m`` entries."""
        if len(self) > m:
            raise ValueError(f"partition {self.text()} has more than {m} parts")
        return tuple(self) + (0,) * (m - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def text(self) -> str:
        return ",".join(str(p) for p in self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Inverse of :meth:`text`; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    def __repr__(self) -> str:
        return f"Partition(({self.text()}{',' if len(self) == 1 else ''}))"


EMPTY = Partition(())


def _partitions_of(w: int, max_part: int, max_length: int) -> Iterator[tuple[int, ...]]:
    # lex-descending generation
    if w == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(w, max_part), 0, -1):
        for rest in _partitions_of(w - first, first, max_length - 1):
            yield (first,) + rest


def partitions_of_weight(w: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of exactly ``w``, lexicographically descending."""
    if max_length is None:
        max_length = w
    return [Partition(p) for p in _partitions_of(w, w, max_length)]


def enumerate_partitions(max_weight: int, max_length: int) -> list[Partition]:
    """Every partition with weight <= max_weight and length <= max_length.

    Ordered by weight, then lexicographically descending within a weight.
    """
    if max_weight < 0 or max_length < 0:
        raise ValueError("max_weight and max_length must be non-negative")
    out: list[Partition] = []
    for w in range(max_weight + 1):
        out.extend(partitions_of_weight(w, max_length))
    return out


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def shifted_parts(lam: Sequence[int], m: int) -> tuple[int, ...]:
    """f_j = m + lambda_j - j for j = 1..m (strictly decreasing, >= 0)."""
    lam = Partition(lam)
    if m < 1:
        raise ValueError("m must be positive")
    if lam.length > m:
        raise ValueError(f"length of {lam.text() or '()'} exceeds m={m}")
    return tuple(m + p - j for j, p in enumerate(lam.padded(m), start=1))
