"""Load matrices from CSV files for batch decomposition."""

import logging
from typing import List

import pandas as pd

from ..models.matrix import Mat2

logger = logging.getLogger(__name__)

MATRIX_COLUMNS = ['a', 'b', 'c', 'd']


def load_matrices(filepath: str) -> List[Mat2]:
    """
    Load one matrix per row from a CSV with columns a,b,c,d.

    Columns are read as text so entries of any size survive unchanged. Rows
    with a missing or non-integer entry are skipped with a warning.

    Raises:
        ValueError: if a required column is missing
    """
    df = pd.read_csv(filepath, dtype=str, skipinitialspace=True)
    df.columns = [str(col).strip().lower() for col in df.columns]

    missing = [col for col in MATRIX_COLUMNS if col not in df.columns]
    if missing:
        raise ValueError(f"{filepath}: missing column(s) {', '.join(missing)}")

    df = df.dropna(how='all')

    matrices = []
    for row_number, row in df[MATRIX_COLUMNS].iterrows():
        try:
            matrices.append(Mat2(*(int(str(row[col]).strip()) for col in MATRIX_COLUMNS)))
        except ValueError:
            logger.warning("%s: skipping row %s, entries %s are not all integers",
                           filepath, row_number, list(row))
    return matrices
