import os

from gaussmax.data.utils.exceptions import FileNotExisted

from .base import DataReader, DataWriter


def _join(parent_dir: str, path: str) -> str:
    if not os.path.isabs(path) and len(parent_dir) > 0:
        return os.path.join(parent_dir, path)
    return path


class FileBasedDataReader(DataReader):
    def __init__(self, parent_dir: str = ''):
        """Initialized with parent_dir.

        Args:
            parent_dir (str, optional): relative paths are resolved against it. Defaults to ''.
        """
        self._parent_dir = str(parent_dir)

    def read_at(self, path: str, offset: int = 0, limit: int = -1) -> bytes:
        fn_path = _join(self._parent_dir, str(path))
        if not os.path.isfile(fn_path):
            raise FileNotExisted(fn_path)
        with open(fn_path, 'rb') as f:
            f.seek(offset)
            if limit == -1:
                return f.read()
            return f.read(limit)

    def exists(self, path: str) -> bool:
        return os.path.exists(_join(self._parent_dir, str(path)))


class FileBasedDataWriter(DataWriter):
    def __init__(self, parent_dir: str = '') -> None:
        """Initialized with parent_dir, created on first write if missing."""
        self._parent_dir = str(parent_dir)

    @property
    def parent_dir(self) -> str:
        return self._parent_dir

    def write(self, path: str, data: bytes) -> None:
        fn_path = _join(self._parent_dir, str(path))
        dirname = os.path.dirname(fn_path)
        if dirname != '' and not os.path.exists(dirname):
            os.makedirs(dirname, exist_ok=True)

        tmp_path = f'{fn_path}.tmp'
        with open(tmp_path, 'wb') as f:
            f.write(data)
        os.replace(tmp_path, fn_path)
