from pathlib import Path
from typing import TextIO, Tuple, Union

import numpy as np
import pandas as pd

from ..config import settings
from ..grid import CellField, Grid

# golden files keep full double precision
GOLDEN_FLOAT_FORMAT = "%.17g"


def golden_path(model_name: str, n_cells: int) -> Path:
    return Path(settings.golden_dir) / f'{model_name}-{n_cells}.csv'


def save_profile(grid: Grid, field: CellField, destination: Union[str, Path, TextIO]) -> None:
    field.check_grid(grid)
    if isinstance(destination, (str, Path)):
        Path(destination).parent.mkdir(parents=True, exist_ok=True)
    df = pd.DataFrame({'x': grid.centers, 'q': field.values})
    df.to_csv(destination, index=False, float_format=GOLDEN_FLOAT_FORMAT, lineterminator='\n')


def load_profile(source: Union[str, Path, TextIO]) -> Tuple[np.ndarray, CellField]:
    df = pd.read_csv(source, float_precision='round_trip')
    return df['x'].to_numpy(dtype=np.float64), CellField(df['q'].to_numpy(dtype=np.float64))
