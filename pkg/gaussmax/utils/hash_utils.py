# Copyright (c) gauss-maxima developers. All rights reserved.
import hashlib

U64_MASK = (1 << 64) - 1


def bytes_sha256(data: bytes):
    hasher = hashlib.sha256()
    hasher.update(data)
    return hasher.hexdigest()


def hash64(*parts) -> int:
    """Stable 64-bit hash of the ``|``-joined string forms of ``parts``."""
    key = '|'.join(str(part) for part in parts)
    digest = hashlib.blake2b(key.encode('utf-8'), digest_size=8).digest()
    return int.from_bytes(digest, 'little')


def derive_seed(master_seed: int, experiment_id: str, grid_index, replicate_index) -> int:
    """Seed of one harness task.

    Any single record of a run can be regenerated in isolation from these four
    values; ``grid_index`` and ``replicate_index`` may be ints or short labels.
    """
    return hash64(int(master_seed) & U64_MASK, experiment_id, grid_index, replicate_index)
