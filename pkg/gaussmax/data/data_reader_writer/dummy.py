from .base import DataWriter


class DummyDataWriter(DataWriter):
    """Keeps written payloads in memory; used for runs that are not persisted."""

    def __init__(self) -> None:
        self.files: dict[str, bytes] = {}

    def write(self, path: str, data: bytes) -> None:
        self.files[str(path)] = data
