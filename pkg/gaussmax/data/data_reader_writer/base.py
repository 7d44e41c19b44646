import io
import json
from abc import ABC, abstractmethod

import numpy as np


class DataReader(ABC):
    """Byte source for configs, datasets, covariances and finished runs."""

    def read(self, path: str) -> bytes:
        return self.read_at(path)

    @abstractmethod
    def read_at(self, path: str, offset: int = 0, limit: int = -1) -> bytes:
        """Bytes of ``path`` starting at ``offset``.

        Args:
            path (str): file to read, relative paths are resolved by the reader
            offset (int, optional): bytes to skip. Defaults to 0.
            limit (int, optional): bytes to return, -1 for the rest. Defaults to -1.
        """

    def read_json(self, path: str):
        return json.loads(self.read(path).decode('utf-8'))

    @abstractmethod
    def exists(self, path: str) -> bool:
        ...


class DataWriter(ABC):
    """Byte sink for run directories, bootstrap replicates and sample sidecars."""

    @abstractmethod
    def write(self, path: str, data: bytes) -> None:
        """Replace ``path`` with ``data``."""

    def write_string(self, path: str, data: str) -> None:
        self.write(path, data.encode('utf-8'))

    def write_json(self, path: str, obj) -> None:
        """Write ``obj`` as JSON with sorted keys so equal objects give equal bytes."""
        self.write_string(path, json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + '\n')

    def write_array_csv(self, path: str, values: np.ndarray) -> None:
        """Write a 1-D or 2-D array as header-free CSV with round-trip precision."""
        buf = io.StringIO()
        np.savetxt(buf, np.atleast_1d(values), delimiter=',', fmt='%.17g')
        self.write_string(path, buf.getvalue())
