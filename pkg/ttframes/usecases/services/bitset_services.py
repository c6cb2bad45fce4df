from typing import Iterable, Iterator, List


class BitsetService:
    """Finite sets of small non-negative integers packed into Python ints."""

    @staticmethod
    def from_members(members: Iterable[int]) -> int:
        mask = 0
        for member in members:
            if member < 0:
                raise ValueError(f"bit not greater than or equal to 0, bit == {member}")
            mask |= 1 << member
        return mask

    @staticmethod
    def members(mask: int) -> List[int]:
        return [bit for bit in range(mask.bit_length()) if mask >> bit & 1]

    @staticmethod
    def popcount(mask: int) -> int:
        return bin(mask).count("1")

    @staticmethod
    def full(size: int) -> int:
        return (1 << size) - 1

    @staticmethod
    def is_subset(small: int, large: int) -> bool:
        return small & ~large == 0

    @staticmethod
    def submasks(mask: int) -> Iterator[int]:
        """All subsets of ``mask`` in increasing numeric order."""
        bits = BitsetService.members(mask)
        for selector in range(1 << len(bits)):
            subset = 0
            for position, bit in enumerate(bits):
                if selector >> position & 1:
                    subset |= 1 << bit
            yield subset

    @staticmethod
    def image(mask: int, mapping) -> int:
        """Image of a set of points under an index mapping."""
        result = 0
        for bit in BitsetService.members(mask):
            result |= 1 << mapping[bit]
        return result
