# Copyright (c) gauss-maxima developers. All rights reserved.
import struct

import numpy as np

from gaussmax.data.utils.exceptions import EmptyData, ParseError
from gaussmax.utils.enum_class import GMAX_MAGIC, DatasetFormat

# magic, u64 n, u64 p; the n*p little-endian doubles follow row-major
GMAX_HEADER = struct.Struct('<5sQQ')


def sniff_format(data: bytes) -> DatasetFormat:
    if data[:len(GMAX_MAGIC)] == GMAX_MAGIC:
        return DatasetFormat.BINARY
    return DatasetFormat.CSV


def parse_matrix_csv(data: bytes, what: str = 'matrix') -> np.ndarray:
    """Parse header-free comma separated rows into a 2-D float array.

    Blank lines are skipped. Every row must have the width of the first one.

    Raises:
        EmptyData: no rows at all.
        ParseError: a field is not a number or a row has the wrong width; the
            error carries the 1-based line number.
    """
    try:
        text = data.decode('utf-8-sig')
    except UnicodeDecodeError as e:
        raise ParseError(f'{what} is not UTF-8 text: {e}')

    rows = []
    width = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        fields = stripped.split(',')
        try:
            row = [float(field) for field in fields]
        except ValueError:
            raise ParseError(f'{what} has a non-numeric field in {stripped!r}', line=line_no)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f'{what} row has {len(row)} fields, expected {width}', line=line_no)
        rows.append(row)

    if not rows:
        raise EmptyData(f'{what} has no rows')
    return np.asarray(rows, dtype=np.float64)


def decode_gmax(data: bytes) -> np.ndarray:
    if len(data) == 0:
        raise EmptyData('binary dataset is empty')
    if len(data) < GMAX_HEADER.size:
        raise ParseError(f'binary dataset is {len(data)} bytes, shorter than its header')
    magic, n, p = GMAX_HEADER.unpack_from(data)
    if magic != GMAX_MAGIC:
        raise ParseError(f'bad magic {magic!r}, expected {GMAX_MAGIC!r}')
    if n == 0 or p == 0:
        raise EmptyData(f'binary dataset declares n={n}, p={p}')
    expected = GMAX_HEADER.size + 8 * n * p
    if len(data) != expected:
        raise ParseError(f'binary dataset with n={n}, p={p} needs {expected} bytes, got {len(data)}')
    values = np.frombuffer(data, dtype='<f8', count=n * p, offset=GMAX_HEADER.size)
    return values.reshape(n, p).astype(np.float64)


def encode_gmax(z: np.ndarray) -> bytes:
    z = np.atleast_2d(np.asarray(z, dtype=np.float64))
    n, p = z.shape
    return GMAX_HEADER.pack(GMAX_MAGIC, n, p) + np.ascontiguousarray(z, dtype='<f8').tobytes()
