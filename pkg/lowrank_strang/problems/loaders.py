# problems/loaders.py
# Copyright (C) 2025 - 2028 the LowRankStrang authors and contributors
# <see AUTHORS file>
#
# This module is part of LowRankStrang and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Reads user supplied operators from Matrix Market files.

The file is checked line by line before it is handed to scipy, so malformed input is reported
with the number of the offending line.

"""
import logging
from pathlib import Path
from typing import Union
import numpy as np
import scipy.io
from lowrank_strang.exceptions import NonSquareOperatorError, OperatorParseError
from lowrank_strang.linalg import adjoint, scalar_type
from lowrank_strang.models import OperatorHandle

logger = logging.getLogger(__name__)

FORMATS = ("coordinate", "array")
FIELDS = {"real": 1, "integer": 1, "complex": 2, "pattern": 0}
SYMMETRIES = ("general", "symmetric", "skew-symmetric", "hermitian")


def _number(path, line: int, token: str, kind=float):
    try:
        return kind(token)
    except ValueError as exc:
        raise OperatorParseError(path, line, f"could not parse '{token}' as a number") from exc


def _header(path, lines: list) -> tuple:
    if not lines:
        raise OperatorParseError(path, 1, "the file is empty")
    tokens = lines[0].lower().split()
    if len(tokens) != 5 or tokens[:2] != ["%%matrixmarket", "matrix"]:
        raise OperatorParseError(path, 1, "missing '%%MatrixMarket matrix' banner")
    layout, field, symmetry = tokens[2:]
    if layout not in FORMATS:
        raise OperatorParseError(path, 1, f"unsupported format '{layout}'")
    if field not in FIELDS or (field == "pattern" and layout == "array"):
        raise OperatorParseError(path, 1, f"unsupported field '{field}'")
    if symmetry not in SYMMETRIES:
        raise OperatorParseError(path, 1, f"unsupported symmetry '{symmetry}'")
    return layout, field, symmetry


# pylint: disable=too-many-locals
def _validate(path, lines: list) -> None:
    layout, field, symmetry = _header(path, lines)
    body = [
        (number, line.split())
        for number, line in enumerate(lines[1:], start=2)
        if line.strip() and not line.lstrip().startswith("%")
    ]
    if not body:
        raise OperatorParseError(path, len(lines), "missing size line")

    size_line, sizes = body[0]
    expected_sizes = 3 if layout == "coordinate" else 2
    if len(sizes) != expected_sizes:
        raise OperatorParseError(
            path, size_line, f"expected {expected_sizes} sizes, got {len(sizes)}"
        )
    rows, cols = (_number(path, size_line, token, int) for token in sizes[:2])
    if rows != cols:
        raise NonSquareOperatorError(path, size_line, rows, cols)

    width = FIELDS[field]
    if layout == "coordinate":
        width += 2
        expected = _number(path, size_line, sizes[2], int)
    elif symmetry == "general":
        expected = rows * cols
    elif symmetry == "skew-symmetric":
        expected = rows * (rows - 1) // 2
    else:
        expected = rows * (rows + 1) // 2

    for number, tokens in body[1:]:
        if len(tokens) != width:
            raise OperatorParseError(
                path, number, f"expected {width} fields, got {len(tokens)}"
            )
        if layout == "coordinate":
            for name, token in zip(("row", "column"), tokens[:2]):
                index = _number(path, number, token, int)
                if not 1 <= index <= rows:
                    raise OperatorParseError(
                        path, number, f"{name} index {index} outside 1..{rows}"
                    )
        for token in tokens[2 if layout == "coordinate" else 0 :]:
            _number(path, number, token)

    if len(body) - 1 != expected:
        raise OperatorParseError(
            path, body[-1][0], f"expected {expected} entries, found {len(body) - 1}"
        )


def load_operator(path: Union[str, Path]) -> OperatorHandle:
    """
    Reads a square operator from a Matrix Market coordinate or array file.

    Args:
        path (`str` | `Path`): The file.

    Raises:
        OperatorParseError: If the file is malformed.
        NonSquareOperatorError: If the declared matrix is not square.

    Returns:
        OperatorHandle: A dense handle, flagged symmetric when the entries are.
    """
    path = Path(path)
    _validate(path, path.read_text().splitlines())

    M = scipy.io.mmread(path)
    M = M.toarray() if hasattr(M, "toarray") else np.asarray(M)
    M = M.astype(np.result_type(M.dtype, scalar_type()), copy=False)
    symmetric = bool(np.array_equal(M, adjoint(M)))
    logger.info("Loaded a %dx%d operator from %s", M.shape[0], M.shape[1], path)
    return OperatorHandle(
        M,
        storage=OperatorHandle.Storage.DENSE,
        symmetric=symmetric,
        label=path.name,
    )
