"""Truncated Fock-space state vectors.

The physical Hilbert space here excludes levels 0, 1 and 2: the level-0
state is dynamically isolated and levels 1-2 are absent from the
spectrum, so every vector lives on the ladder |3>, |4>, |5>, ...  A
``FockVector`` stores complex amplitudes for a contiguous run of levels
starting at 3, together with a tail diagnostic estimating how much
probability the truncation discards.

Vectors are immutable after construction and freely shareable between
workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BASE_LEVEL",
    "FockVector",
    "ZeroVector",
    "basis_vector",
    "normalize",
    "inner_product",
    "probabilities",
    "trailing_mass",
    "tail_mass",
    "to_json",
    "from_json",
]

BASE_LEVEL = 3

# Number of top retained levels summed for the truncation diagnostic.
TAIL_WINDOW = 5


class ZeroVector(ValueError):
    """Raised when an all-zero vector is asked to normalize."""


@dataclass(frozen=True)
class FockVector:
    """Complex amplitudes on levels base_index, base_index+1, ...

    ``tail_bound`` is an upper-bound proxy for the probability mass the
    truncation discarded; builders populate it from the trailing
    retained probabilities.
    """

    amps: np.ndarray
    base_index: int = BASE_LEVEL
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        if self.base_index != BASE_LEVEL:
            raise ValueError(f"base_index must be {BASE_LEVEL}, got {self.base_index}")
        if self.tail_bound < 0.0:
            raise ValueError("tail_bound must be non-negative")
        amps = np.array(self.amps, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("amps must be a non-empty 1-D sequence")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def levels(self) -> np.ndarray:
        """Fock levels carried by this vector."""
        return np.arange(self.base_index, self.base_index + self.amps.size)

    @property
    def offsets(self) -> np.ndarray:
        """Excitation count above the effective vacuum |3>."""
        return np.arange(self.amps.size)

    def __len__(self) -> int:
        return self.amps.size


def basis_vector(level: int, size: int | None = None) -> FockVector:
    """The basis state |level> on a window of ``size`` levels."""
    if level < BASE_LEVEL:
        raise ValueError(f"level must be >= {BASE_LEVEL}")
    if size is None:
        size = level - BASE_LEVEL + 1
    if size < level - BASE_LEVEL + 1:
        raise ValueError("window too small to hold the requested level")
    amps = np.zeros(size, dtype=complex)
    amps[level - BASE_LEVEL] = 1.0
    return FockVector(amps)


def normalize(v: FockVector) -> FockVector:
    """Scale ``v`` to unit 2-norm, direction unchanged."""
    norm = float(np.linalg.norm(v.amps))
    if norm == 0.0:
        raise ZeroVector("cannot normalize a vector with all-zero amplitudes")
    return FockVector(v.amps / norm, tail_bound=v.tail_bound / norm**2)


def inner_product(u: FockVector, v: FockVector) -> complex:
    """<u|v> = sum_n conj(u_n) v_n; the shorter vector is zero-padded."""
    if u.base_index != v.base_index:
        raise ValueError("inner_product requires matching base_index")
    n = min(u.amps.size, v.amps.size)
    return complex(np.vdot(u.amps[:n], v.amps[:n]))


def probabilities(v: FockVector) -> np.ndarray:
    """|amplitude|^2 per retained level."""
    return np.abs(v.amps) ** 2


def trailing_mass(v: FockVector, window: int = TAIL_WINDOW) -> float:
    """Probability carried by the top ``window`` retained levels.

    The base level never counts towards the tail, so short windows on
    barely-truncated states still report ~0 rather than the head mass.
    """
    p = probabilities(v)
    start = max(1, p.size - window)
    return float(p[start:].sum())


def tail_mass(params) -> float:
    """Truncation diagnostic for the state a parameter set would build.

    Builds the squeezed state described by ``params`` and reports the
    probability sitting on its top retained levels; an empirical proxy
    for the discarded mass, stored by the builders into ``tail_bound``.
    """
    from .states import build_state  # deferred: states depends on fock

    return trailing_mass(build_state(params))


def to_json(v: FockVector) -> str:
    """Serialize to JSON: {base_index, amps as [re, im] pairs, tail_bound}."""
    payload = {
        "base_index": v.base_index,
        "amps": [[z.real, z.imag] for z in v.amps],
        "tail_bound": v.tail_bound,
    }
    return json.dumps(payload)


def from_json(text: str) -> FockVector:
    """Inverse of :func:`to_json`."""
    payload = json.loads(text)
    amps = np.array([complex(re, im) for re, im in payload["amps"]], dtype=complex)
    return FockVector(amps, base_index=payload["base_index"], tail_bound=payload["tail_bound"])
