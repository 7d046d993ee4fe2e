from typing import Iterable, Iterator

try:
    popcount = int.bit_count
except AttributeError:  # python < 3.10

    def popcount(x: int) -> int:
        return bin(x).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the 0-based positions of the set bits of `mask`, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(positions: Iterable[int]) -> int:
    mask = 0
    for p in positions:
        mask |= 1 << p
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1
