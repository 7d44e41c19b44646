from .base import DataReader, DataWriter
from .dummy import DummyDataWriter
from .filebase import FileBasedDataReader, FileBasedDataWriter

__all__ = [
    "DataReader",
    "DataWriter",
    "FileBasedDataReader",
    "FileBasedDataWriter",
    "DummyDataWriter",
]
