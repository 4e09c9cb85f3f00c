import logging
from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Sequence, TextIO, Tuple, Union

import numpy as np
import pandas as pd

from ..config import settings
from ..grid import CellField, Grid, restrict, sample_fine_at_centers
from ..iteration import IterationRow, IterationTrace, direct_solution, iterate
from ..laws import ModelSpec, RunDefaults
from ..reference import Projection, ReferenceConfig, exact_advection_reaction, reference_profile

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ['n', 'beta', 'err', 'tau']


class ReportError(Exception):
    pass


class LengthMismatchError(ReportError):
    pass


class ZeroDirectError(ReportError):
    pass


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    beta: float
    err: float
    tau: float


@dataclass(frozen=True)
class ConvergenceTable:
    model_name: str
    rows: Tuple[ConvergenceRow, ...]
    # L1 error of the direct first-order solution, Err^R
    err_direct: float
    settings: RunDefaults

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([(r.n, r.beta, r.err, r.tau) for r in self.rows], columns=TABLE_COLUMNS)


@dataclass(frozen=True)
class TableRun:
    table: ConvergenceTable
    trace: IterationTrace
    grid: Grid
    direct: CellField
    reference: CellField


def _values(field: Union[CellField, Sequence[float]]) -> np.ndarray:
    return field.values if isinstance(field, CellField) else np.asarray(field, dtype=np.float64)


def l1_error(a: Union[CellField, Sequence[float]], b: Union[CellField, Sequence[float]], dx: float) -> float:
    a, b = _values(a), _values(b)
    if a.shape != b.shape:
        raise LengthMismatchError(f'cannot compare fields of {a.shape[0]} and {b.shape[0]} cells')
    return float(dx * np.sum(np.abs(a - b)))


def gaining(err_k: float, err_direct: float) -> float:
    """Gaining coefficient tau = Err^k / Err^R; tau -> 1 once the iterate is as accurate as the direct scheme."""
    if not err_direct > 0.0:
        raise ZeroDirectError(f'direct error must be positive, got {err_direct}')
    return err_k / err_direct


def build_table(trace: IterationTrace, per_iter_fields: Optional[Sequence[CellField]], reference: CellField,
                direct: CellField, grid: Grid) -> ConvergenceTable:
    fields = trace.snapshots if per_iter_fields is None else tuple(per_iter_fields)
    if len(fields) != len(trace.rows):
        raise LengthMismatchError(f'{len(fields)} iterate fields for {len(trace.rows)} trace rows')
    for field in (reference, direct, *fields):
        field.check_grid(grid)

    err_direct = l1_error(direct, reference, grid.dx)
    rows = []
    for row, field in zip(trace.rows, fields):
        err = l1_error(field, reference, grid.dx)
        rows.append(ConvergenceRow(n=row.n, beta=row.beta, err=err, tau=gaining(err, err_direct)))
    return ConvergenceTable(model_name=trace.model_name, rows=tuple(rows), err_direct=err_direct,
                            settings=trace.settings)


def emit_csv(table: ConvergenceTable, destination: TextIO) -> None:
    table.to_frame().to_csv(destination, index=False, float_format=settings.csv_float_format, lineterminator='\n')


def emit_profiles(grid: Grid, columns: Mapping[str, CellField], destination: TextIO) -> None:
    """
    Plot data: an x column followed by one column per named profile.
    A single profile named q gives the plain "x,q" format.
    """
    data = {'x': grid.centers}
    for name, field in columns.items():
        field.check_grid(grid)
        data[name] = field.values
    pd.DataFrame(data).to_csv(destination, index=False, float_format=settings.csv_float_format,
                              lineterminator='\n')


def emit_profile(grid: Grid, field: CellField, destination: TextIO) -> None:
    emit_profiles(grid, {'q': field}, destination)


def reproduce_table(model: ModelSpec, cfg: Optional[RunDefaults] = None, rc: Optional[ReferenceConfig] = None,
                    on_row: Optional[Callable[[IterationRow], None]] = None) -> TableRun:
    """
    Full convergence study of one model: scaling iteration, direct solve and
    reference solution on the coarse mesh, gathered into a ConvergenceTable.
    A fine-mesh reference is read at the coarse cell centers, like the initial
    data, unless rc.projection asks for cell averages.
    """
    cfg = cfg or model.defaults
    grid = model.grid(cfg.n_cells)
    trace = iterate(model, grid, cfg, on_row=on_row)
    direct = direct_solution(model, grid, cfg).final

    if model.exact_solution is not None:
        reference = exact_advection_reaction(model, grid, cfg.t_final)
    else:
        rc = rc or ReferenceConfig(n_cells=cfg.reference_cells)
        fine_grid, fine = reference_profile(model, rc, cfg.t_final)
        project = restrict if rc.projection is Projection.AVERAGE else sample_fine_at_centers
        reference = project(fine, fine_grid, grid)

    table = build_table(trace, None, reference, direct, grid)
    logger.info("%s: Err^R=%.9g, final tau=%.6f after %d iterations", model.name, table.err_direct,
                table.rows[-1].tau, len(table.rows))
    return TableRun(table=table, trace=trace, grid=grid, direct=direct, reference=reference)
