"""
Packed codeword representations for the enumeration loops.

GF(2) words are Python ints with bit i holding coordinate i; addition is XOR
and the weight a population count. GF(4) words are a pair of bit planes
(low, high) with element code c = low + 2 high, so a symbol is nonzero iff
its bit is set in low | high. Odd prime fields fall back to numpy vectors.
"""

from typing import Tuple

import numpy as np

from ..gf import FieldSpec


class BinaryPacker:
    def __init__(self, length: int):
        self.length = length
        self._bytes = (length + 7) // 8

    def pack(self, row: np.ndarray) -> int:
        bits = np.packbits(np.asarray(row, dtype=np.uint8), bitorder="little")
        return int.from_bytes(bits.tobytes(), "little")

    def unpack(self, word: int) -> np.ndarray:
        raw = np.frombuffer(word.to_bytes(self._bytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[:self.length].astype(np.int64)

    def scale(self, scalar: int, word: int) -> int:
        return word if scalar else 0

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    @staticmethod
    def weight(word: int) -> int:
        return word.bit_count()


class QuaternaryPacker:
    def __init__(self, length: int):
        self.length = length
        self._bits = BinaryPacker(length)

    def pack(self, row: np.ndarray) -> Tuple[int, int]:
        row = np.asarray(row, dtype=np.int64)
        return self._bits.pack(row & 1), self._bits.pack(row >> 1)

    def unpack(self, word: Tuple[int, int]) -> np.ndarray:
        low, high = word
        return self._bits.unpack(low) | (self._bits.unpack(high) << 1)

    def scale(self, scalar: int, word: Tuple[int, int]) -> Tuple[int, int]:
        low, high = word
        if scalar == 0:
            return 0, 0
        if scalar == 1:
            return low, high
        if scalar == 2:
            # u (a + b u) = b + (a + b) u
            return high, low ^ high
        # (u + 1)(a + b u) = (a + b) + a u
        return low ^ high, low

    @staticmethod
    def add(a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[int, int]:
        return a[0] ^ b[0], a[1] ^ b[1]

    @staticmethod
    def weight(word: Tuple[int, int]) -> int:
        return (word[0] | word[1]).bit_count()


class PrimePacker:
    def __init__(self, field: FieldSpec, length: int):
        self.field = field
        self.length = length

    def pack(self, row: np.ndarray) -> np.ndarray:
        return np.array(row, dtype=np.int64)

    def unpack(self, word: np.ndarray) -> np.ndarray:
        return word

    def scale(self, scalar: int, word: np.ndarray) -> np.ndarray:
        return self.field.mul(scalar, word)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.field.add(a, b)

    @staticmethod
    def weight(word: np.ndarray) -> int:
        return int(np.count_nonzero(word))


def packer_for(field: FieldSpec, length: int):
    if field.order == 2:
        return BinaryPacker(length)
    if field.order == 4:
        return QuaternaryPacker(length)
    return PrimePacker(field, length)
