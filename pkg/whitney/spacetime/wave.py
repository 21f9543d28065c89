"""Variational integrator for the 1+1 wave equation on a Lorentzian cylinder mesh.

The field is expanded in Whitney 0-forms, so on each triangle the action
integrand <df, df> vol is the quadratic form f_T^T S_T f_T with
S_T[a, b] = <dlambda_a, dlambda_b> |*vol(T)|. Stationarity of the summed action
at the nodes of slice k is a linear system for slice k + 1.
"""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix
from scipy.sparse.linalg import splu, spsolve

from whitney.config import settings
from whitney.errors import MeshError, SolverError
from whitney.geometry.simplex import Simplex, d_lambda_table, volume_form
from whitney.logging_config import get_logger
from whitney.models.mesh import Pipeline, SpacetimeMesh
from whitney.spacetime.mesh import triangle_simplex

logger = get_logger(__name__)


class ElementMatrix(NamedTuple):
    triangle: int
    matrix: np.ndarray


class DiscreteField:
    """Nodal values of a scalar field, indexed by node id."""

    __slots__ = ("values", "nodes_per_slice")

    def __init__(self, values: np.ndarray | Sequence[float], nodes_per_slice: int) -> None:
        array = np.array(values, dtype=float)
        if array.ndim != 1 or array.size % nodes_per_slice:
            raise MeshError(
                f"{array.size} values do not fill whole slices of {nodes_per_slice} nodes"
            )
        self.values = array
        self.nodes_per_slice = nodes_per_slice

    @property
    def num_slices(self) -> int:
        return self.values.size // self.nodes_per_slice

    def slice_values(self, k: int) -> np.ndarray:
        n = self.nodes_per_slice
        return self.values[k * n : (k + 1) * n]

    def as_grid(self) -> np.ndarray:
        """Values reshaped to (slice, spatial position)."""
        return self.values.reshape(self.num_slices, self.nodes_per_slice)

    def __getitem__(self, node: int) -> float:
        return float(self.values[node])

    def __len__(self) -> int:
        return self.values.size


def exact_solution(
    x: float | np.ndarray, t: float | np.ndarray, circumference: float
) -> float | np.ndarray:
    """Right-moving unit-speed wave sin(2 pi (x - t) / L) on the periodic domain."""
    return np.sin(2 * np.pi * (np.asarray(x) - np.asarray(t)) / circumference)


def exact_field(mesh: SpacetimeMesh) -> DiscreteField:
    n, m = mesh.nodes_per_slice, mesh.num_slices
    x = np.tile(np.arange(n) * mesh.dx, m)
    t = np.repeat(np.arange(m) * mesh.dt, n)
    return DiscreteField(exact_solution(x, t, mesh.circumference), n)


def initial_slices(mesh: SpacetimeMesh) -> np.ndarray:
    """The exact solution sampled on slices 0 and 1, shape (2, N)."""
    return exact_field(mesh).as_grid()[:2].copy()


def _stiffness(simplex: Simplex) -> np.ndarray:
    _, star_vol = volume_form(simplex)
    return d_lambda_table(simplex) * abs(star_vol)


def element_matrix(
    index: int, mesh: SpacetimeMesh, pipeline: Pipeline | str = Pipeline.ABSTRACT
) -> ElementMatrix:
    """S[a, b] = <dlambda_a, dlambda_b> |*vol| for one triangle."""
    simplex = triangle_simplex(mesh, index, embedded=Pipeline(pipeline) is Pipeline.EMBEDDED)
    matrix = _stiffness(simplex)
    matrix.setflags(write=False)
    return ElementMatrix(index, matrix)


class ActionFunctional:
    """Discrete action sum_T f_T^T S_T f_T and its assembled Euler-Lagrange operator.

    `operator` is the sparse matrix K with (K f)[node] = dS/df_node.
    """

    def __init__(
        self,
        mesh: SpacetimeMesh,
        pipeline: Pipeline | str = Pipeline.ABSTRACT,
        threads: int | None = None,
    ) -> None:
        self.mesh = mesh
        self.pipeline = Pipeline(pipeline)
        self.threads = settings.get_threads() if threads is None else max(1, threads)
        self._memo: dict[tuple[float, ...], np.ndarray] = {}

        self.elements = self._compute_elements()
        self.triangles = np.array(mesh.triangles, dtype=int).reshape(-1, 3)
        self.stacked = np.stack(self.elements) if self.elements else np.zeros((0, 3, 3))
        self.operator = self._assemble()
        logger.debug(
            f"Assembled {self.pipeline} action: {len(self.elements)} elements, "
            f"{len(self._memo)} distinct"
        )

    def _element(self, index: int) -> np.ndarray:
        if self.pipeline is Pipeline.EMBEDDED:
            return element_matrix(index, self.mesh, self.pipeline).matrix
        key = tuple(self.mesh.triangle_edge_lengths(index)[np.triu_indices(3, 1)])
        cached = self._memo.get(key)
        if cached is None:
            cached = element_matrix(index, self.mesh, self.pipeline).matrix
            self._memo[key] = cached
        return cached

    def _compute_elements(self) -> list[np.ndarray]:
        indices = range(len(self.mesh.triangles))
        if self.threads > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                return list(pool.map(self._element, indices))
        return [self._element(i) for i in indices]

    def _assemble(self) -> csr_matrix:
        size = self.mesh.num_nodes
        rows = np.repeat(self.triangles, 3, axis=1).ravel()
        cols = np.tile(self.triangles, (1, 3)).ravel()
        data = 2.0 * self.stacked.reshape(-1)
        return coo_matrix((data, (rows, cols)), shape=(size, size)).tocsr()

    def action(self, values: np.ndarray) -> float:
        local = np.asarray(values, dtype=float)[self.triangles]
        return float(np.einsum("ti,tij,tj->", local, self.stacked, local))

    def gradient(self, values: np.ndarray) -> np.ndarray:
        """dS/df at every node, boundary nodes included."""
        return self.operator @ np.asarray(values, dtype=float)

    def residual(self, values: np.ndarray, node: int) -> float:
        _, k = self.mesh.position(node)
        if not 1 <= k <= self.mesh.num_slices - 2:
            raise MeshError(
                f"node {node} lies on slice {k}; residuals are defined on slices "
                f"1..{self.mesh.num_slices - 2}"
            )
        row = self.operator.getrow(node)
        return float(row.dot(np.asarray(values, dtype=float))[0])


def action_functional(
    mesh: SpacetimeMesh, pipeline: Pipeline | str = Pipeline.ABSTRACT, threads: int | None = None
) -> ActionFunctional:
    """Functional for `mesh`, memoized on the mesh per pipeline."""
    key = f"action:{Pipeline(pipeline)}"
    functional = mesh.cache.get(key)
    if functional is None:
        functional = ActionFunctional(mesh, pipeline, threads)
        mesh.cache[key] = functional
    return functional


def discrete_action(field: DiscreteField | np.ndarray, mesh: SpacetimeMesh) -> float:
    values = field.values if isinstance(field, DiscreteField) else field
    return action_functional(mesh).action(values)


def el_residual(field: DiscreteField | np.ndarray, node: int, mesh: SpacetimeMesh) -> float:
    """sum over triangles at `node` of sum_b 2 S_T[node, b] f_b."""
    values = field.values if isinstance(field, DiscreteField) else field
    return action_functional(mesh).residual(values, node)


def _initial_values(mesh: SpacetimeMesh, initial: np.ndarray | Sequence[Sequence[float]]) -> np.ndarray:
    start = np.asarray(initial, dtype=float)
    if start.shape != (2, mesh.nodes_per_slice):
        raise MeshError(
            f"initial data must have shape (2, {mesh.nodes_per_slice}), got {start.shape}"
        )
    values = np.zeros(mesh.num_nodes)
    values[mesh.slices[0]] = start[0]
    values[mesh.slices[1]] = start[1]
    return values


def _singular(message: str, slice_index: int, block) -> SolverError:
    condition = float(np.linalg.cond(block.toarray()))
    logger.error(f"{message} (condition estimate {condition:.3e})")
    return SolverError(
        f"{message} (condition estimate {condition:.3e})",
        slice_index=slice_index,
        condition=condition,
    )


def march(
    mesh: SpacetimeMesh,
    initial: np.ndarray | Sequence[Sequence[float]],
    functional: ActionFunctional | None = None,
) -> DiscreteField:
    """Solve slice k + 1 from stationarity at slice k, for k = 1..M-2."""
    functional = functional or action_functional(mesh)
    operator = functional.operator
    values = _initial_values(mesh, initial)

    for k in range(1, mesh.num_slices - 1):
        rows = operator[mesh.slices[k], :]
        known = mesh.slices[k - 1] + mesh.slices[k]
        upcoming = mesh.slices[k + 1]
        block = rows[:, upcoming].tocsc()
        rhs = -(rows[:, known] @ values[known])
        try:
            solution = splu(block).solve(rhs)
        except RuntimeError as e:
            raise _singular(f"slice {k + 1} system is singular", k + 1, block) from e
        if not np.all(np.isfinite(solution)):
            raise _singular(f"slice {k + 1} solution is not finite", k + 1, block)
        values[upcoming] = solution

    logger.info(f"Marched {mesh.num_slices} slices of {mesh.nodes_per_slice} nodes")
    return DiscreteField(values, mesh.nodes_per_slice)


def solve_global(
    mesh: SpacetimeMesh,
    initial: np.ndarray | Sequence[Sequence[float]],
    functional: ActionFunctional | None = None,
) -> DiscreteField:
    """All slices 2..M-1 at once from stationarity on slices 1..M-2."""
    functional = functional or action_functional(mesh)
    operator = functional.operator
    values = _initial_values(mesh, initial)

    equations = [node for layer in mesh.slices[1:-1] for node in layer]
    unknowns = [node for layer in mesh.slices[2:] for node in layer]
    known = mesh.slices[0] + mesh.slices[1]
    rows = operator[equations, :]
    block = rows[:, unknowns].tocsc()
    rhs = -(rows[:, known] @ values[known])
    solution = spsolve(block, rhs)
    if not np.all(np.isfinite(solution)):
        raise _singular("global spacetime system is singular", -1, block)
    values[unknowns] = solution
    return DiscreteField(values, mesh.nodes_per_slice)


def run_wave(
    mesh: SpacetimeMesh, pipeline: Pipeline | str = Pipeline.ABSTRACT, threads: int | None = None
) -> DiscreteField:
    """March the travelling wave from two exact slices."""
    functional = action_functional(mesh, pipeline, threads)
    return march(mesh, initial_slices(mesh), functional)
