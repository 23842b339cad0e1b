"""Counter-based per-node randomness.

Every random draw in a simulation is a pure function of
(master_seed, node, iteration, purpose, aux1, aux2).  This makes paired
deviation trials exact: holding the master seed fixed, every honest node's
draws are identical whether or not some other node deviates, and the
object-level engine and the vectorized batch simulator produce
bit-identical streams.

The mixer is a splitmix64 finalizer chain.  `prf` is the scalar reference;
`prf_np` is the numpy twin operating on uint64 arrays and must return
exactly the same values (see tests).
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB

# purpose tags
MOVE = 1        # rps move for a specific neighbor
OPP = 2         # opponent selection (rank protocol)
SELF_RAND = 3   # self randomness r_{i->i}
PAIR_RAND = 4   # pair randomness r_{i->j}
DEV = 5         # deviation-private draws (biased distributions)


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * _M1) & _MASK
    z = ((z ^ (z >> 27)) * _M2) & _MASK
    return z ^ (z >> 31)


def prf(seed: int, node: int, iteration: int, purpose: int, a1: int = 0, a2: int = 0) -> int:
    """64-bit pseudorandom value, a pure function of its arguments."""
    h = _mix((seed + _GAMMA) & _MASK)
    h = _mix(((h ^ node) + _GAMMA) & _MASK)
    h = _mix(((h ^ iteration) + 2 * _GAMMA) & _MASK)
    h = _mix(((h ^ purpose) + 3 * _GAMMA) & _MASK)
    h = _mix(((h ^ a1) + 4 * _GAMMA) & _MASK)
    h = _mix(((h ^ a2) + 5 * _GAMMA) & _MASK)
    return h


def _mix_np(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
    return z ^ (z >> np.uint64(31))


def prf_np(seed, node, iteration, purpose, a1=0, a2=0) -> np.ndarray:
    """Vectorized twin of `prf`; arguments broadcast as uint64 arrays."""
    g = np.uint64(_GAMMA)
    seed = np.asarray(seed, dtype=np.uint64)
    with np.errstate(over="ignore"):
        h = _mix_np(seed + g)
        h = _mix_np((h ^ np.asarray(node, dtype=np.uint64)) + g)
        h = _mix_np((h ^ np.uint64(iteration)) + np.uint64((2 * _GAMMA) & _MASK))
        h = _mix_np((h ^ np.uint64(purpose)) + np.uint64((3 * _GAMMA) & _MASK))
        h = _mix_np((h ^ np.asarray(a1, dtype=np.uint64)) + np.uint64((4 * _GAMMA) & _MASK))
        h = _mix_np((h ^ np.asarray(a2, dtype=np.uint64)) + np.uint64((5 * _GAMMA) & _MASK))
    return h


class NodeRandomness:
    """Draw helpers for one node's stream within one run."""

    __slots__ = ("seed", "node")

    def __init__(self, master_seed: int, node: int):
        self.seed = master_seed & _MASK
        self.node = node

    def rps_move(self, iteration: int, neighbor: int) -> int:
        """Uniform move index in {0: rock, 1: paper, 2: scissors}."""
        return prf(self.seed, self.node, iteration, MOVE, neighbor) % 3

    def choose(self, iteration: int, candidates) -> int:
        """Uniform element of a non-empty ordered candidate sequence."""
        h = prf(self.seed, self.node, iteration, OPP)
        return candidates[h % len(candidates)]

    def bits(self, iteration: int, purpose: int, aux: int, nbits: int) -> int:
        """Uniform nbits-bit integer assembled from 64-bit words."""
        nwords = (nbits + 63) // 64
        v = 0
        for w in range(nwords):
            v = (v << 64) | prf(self.seed, self.node, iteration, purpose, aux, w)
        return v & ((1 << nbits) - 1)

    def uniform01(self, iteration: int, aux: int = 0) -> float:
        """Uniform float in [0, 1) for deviation-private sampling."""
        return (prf(self.seed, self.node, iteration, DEV, aux) >> 11) / float(1 << 53)
