"""Deterministic counter-based randomness.

Every random quantity in the package is a pure function of (seed, stream
path, counter), so runs replay byte-identically regardless of evaluation
order or thread count.  The generator is written out here so that any
language can reproduce the streams; no library generator is involved.

64-bit state mixing (all arithmetic mod 2^64):

    mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
            z ^= z >> 27; z *= 0x94D049BB133111EB;
            z ^= z >> 31; return z

Stream derivation: a stream is named by a path of nonnegative integers and
ascii strings.  Strings are folded big-endian in 64-bit chunks.  Starting
from state = mix(seed), each chunk c updates state = mix(state XOR mix(c +
0x9E3779B97F4A7C15)).

Raw counters: word(i) = mix((base + (i+1) * 0x9E3779B97F4A7C15) mod 2^64).

Floats: float01(i) = (word(i) >> 11) * 2^-53 in [0,1);
        float_pos(i) = ((word(i) >> 11) + 1) * 2^-53 in (0,1].

Gaussians come in pairs from the polar form
    g(2j)   = sqrt(-2 ln float_pos(2j)) * cos(2 pi float01(2j+1))
    g(2j+1) = sqrt(-2 ln float_pos(2j)) * sin(2 pi float01(2j+1)),
complex entries are (g(2m) + i g(2m+1)) / sqrt(2) in row-major order, and a
Haar basis is the modified Gram-Schmidt orthonormalization (columns in
order, positive real normalizers) of a square complex Gaussian matrix.
"""

from __future__ import annotations

import math

import numpy as np

_MASK = (1 << 64) - 1
_WEYL = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB


def _mix(z: int) -> int:
    z &= _MASK
    z ^= z >> 30
    z = (z * _M1) & _MASK
    z ^= z >> 27
    z = (z * _M2) & _MASK
    z ^= z >> 31
    return z


def _chunks(component) -> list[int]:
    if isinstance(component, str):
        raw = component.encode("ascii")
        value = int.from_bytes(raw, "big")
    else:
        value = int(component)
        if value < 0:
            raise ValueError(f"stream path components must be >= 0, got {value}")
    if value == 0:
        return [0]
    out = []
    while value:
        out.append(value & _MASK)
        value >>= 64
    return out


def derive_stream(seed: int, *path) -> int:
    state = _mix(seed & _MASK)
    for component in path:
        for c in _chunks(component):
            state = _mix(state ^ _mix((c + _WEYL) & _MASK))
    return state


class CounterRng:
    """An immutable counter-based stream.

    Instances never hold consumption state: every method addresses explicit
    counters, and independent draws should live on sub-streams created with
    sub().  Conventional counter layouts used by the methods are documented
    per method.
    """

    def __init__(self, seed: int, *path):
        self.seed = seed & _MASK
        self.path = path
        self._base = derive_stream(seed, *path)

    def sub(self, *path) -> "CounterRng":
        return CounterRng(self.seed, *(self.path + path))

    def word(self, i: int) -> int:
        return _mix((self._base + (i + 1) * _WEYL) & _MASK)

    def words(self, start: int, count: int) -> np.ndarray:
        return np.array([self.word(start + i) for i in range(count)], dtype=np.uint64)

    def floats01(self, start: int, count: int) -> np.ndarray:
        """count floats in [0,1) from counters start..start+count-1."""
        w = self.words(start, count)
        return (w >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def floats_pos(self, start: int, count: int) -> np.ndarray:
        """count floats in (0,1], safe as log arguments."""
        w = self.words(start, count)
        return ((w >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53

    def gaussians(self, count: int, start: int = 0) -> np.ndarray:
        """count standard normals, consuming counters start..start+2*ceil(count/2)-1."""
        pairs = (count + 1) // 2
        u = self.floats_pos(start, 2 * pairs)[0::2]
        v = self.floats01(start + 1, 2 * pairs)[0::2]
        r = np.sqrt(-2.0 * np.log(u))
        theta = 2.0 * math.pi * v
        out = np.empty(2 * pairs)
        out[0::2] = r * np.cos(theta)
        out[1::2] = r * np.sin(theta)
        return out[:count]

    def complex_gaussian_matrix(self, rows: int, cols: int) -> np.ndarray:
        """Entries (g + i g')/sqrt(2) drawn row-major from counter 0."""
        g = self.gaussians(2 * rows * cols)
        z = (g[0::2] + 1j * g[1::2]) / math.sqrt(2.0)
        return z.reshape(rows, cols)

    def unit_vector(self, d: int) -> np.ndarray:
        z = self.complex_gaussian_matrix(d, 1)[:, 0]
        return z / np.linalg.norm(z)

    def haar_basis(self, d: int) -> np.ndarray:
        """A (d, d) unitary whose columns are the basis vectors.

        Modified Gram-Schmidt on a complex Gaussian matrix; normalizers are
        positive reals, which fixes the phase ambiguity and makes the result
        unique, hence replayable.
        """
        a = self.complex_gaussian_matrix(d, d)
        q = np.zeros((d, d), dtype=np.complex128)
        for j in range(d):
            v = a[:, j].copy()
            for i in range(j):
                v -= np.vdot(q[:, i], v) * q[:, i]
            nrm = np.linalg.norm(v)
            assert nrm > 1e-12, "gaussian matrix was numerically singular"
            q[:, j] = v / nrm
        return q

    def index(self, i: int, n: int) -> int:
        """A choice in range(n) from counter i."""
        assert n > 0
        return min(int(self.floats01(i, 1)[0] * n), n - 1)
