"""Time meshes and mesh-bound sample vectors.

A :class:`GridFunction` is the universal currency between modules: real
samples bound to a strictly increasing mesh, with NaN marking nodes where a
value is deliberately missing (singular endpoints).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, MeshSizeError

__all__ = ["Mesh", "GridFunction", "finite_difference_derivative"]


@dataclass(frozen=True, eq=False)
class Mesh:
    """Strictly increasing finite grid of times >= 0.

    ``grading`` records how the mesh was built: 1.0 for uniform spacing,
    r > 1 for nodes t_end * (j/n)**r clustering at the origin to resolve
    algebraic singularities there.
    """

    nodes: np.ndarray
    grading: float = 1.0

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        if nodes.ndim != 1 or nodes.size < 2:
            raise MeshSizeError("mesh needs at least 2 nodes")
        if nodes[0] < 0.0:
            raise DomainError("mesh times must be >= 0")
        if not np.all(np.diff(nodes) > 0.0):
            raise DomainError("mesh nodes must be strictly increasing")

    @classmethod
    def uniform(cls, t_end: float, n: int, t_start: float = 0.0) -> Mesh:
        return cls(np.linspace(t_start, t_end, n + 1), grading=1.0)

    @classmethod
    def graded(cls, t_end: float, n: int, r: float = 2.0) -> Mesh:
        if r < 1.0:
            raise DomainError(f"grading exponent must be >= 1, got {r:g}")
        j = np.arange(n + 1, dtype=float)
        return cls(t_end * (j / n) ** r, grading=r)

    def __len__(self) -> int:
        return self.nodes.size

    @property
    def t_end(self) -> float:
        return float(self.nodes[-1])

    @property
    def spacings(self) -> np.ndarray:
        return np.diff(self.nodes)


@dataclass(eq=False)
class GridFunction:
    """Real samples on a mesh; NaN flags a missing value."""

    mesh: Mesh
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != self.mesh.nodes.shape:
            raise MeshSizeError(
                f"values length {values.size} != mesh length {len(self.mesh)}"
            )
        self.values = values

    @property
    def times(self) -> np.ndarray:
        return self.mesh.nodes

    @property
    def missing(self) -> np.ndarray:
        return np.isnan(self.values)

    def __len__(self) -> int:
        return self.values.size


def finite_difference_derivative(t: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Three-point derivative on a possibly nonuniform grid.

    Second-order centered stencil at interior nodes, first-order one-sided
    at the two ends.  NaN inputs propagate to every stencil they touch.
    """
    if t.size < 3:
        raise MeshSizeError("derivative needs at least 3 nodes")
    out = np.empty_like(v)
    hm = t[1:-1] - t[:-2]
    hp = t[2:] - t[1:-1]
    out[1:-1] = (
        -hp / (hm * (hm + hp)) * v[:-2]
        + (hp - hm) / (hm * hp) * v[1:-1]
        + hm / (hp * (hm + hp)) * v[2:]
    )
    out[0] = (v[1] - v[0]) / (t[1] - t[0])
    out[-1] = (v[-1] - v[-2]) / (t[-1] - t[-2])
    return out
