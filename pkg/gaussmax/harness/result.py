# Copyright (c) gauss-maxima developers. All rights reserved.
import csv
import io
import json

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from gaussmax.data.data_reader_writer import DataReader, DataWriter, FileBasedDataReader
from gaussmax.data.utils.exceptions import ConfigInvalid, ParseError
from gaussmax.utils.enum_class import RunFile


class GridRecord(BaseModel):
    """One empirical quantity at one grid point, next to the bound it is held against."""
    grid_index: int
    label: str
    quantity: str
    formula_id: str | None = None
    empirical: float
    bound: float | None = None
    standard_error: float = 0.0
    allowance: float = 0.0
    seed: int = Field(ge=0, description='record seed; regenerates every draw of the grid point')
    params: dict[str, float] = Field(default_factory=dict)
    calibration: dict[str, float | bool] | None = Field(
        default=None, description='formula inputs without c, for constant calibration')

    @property
    def margin(self) -> float | None:
        """Slack left once the allowance is spent; negative means a violation."""
        if self.bound is None:
            return None
        return self.bound + self.allowance - self.empirical


class Verdict(BaseModel):
    name: str
    kind: str
    passed: bool
    detail: str = ''
    informational: bool = False
    grid_index: int | None = None
    formula_id: str | None = None
    seed: int | None = None


class RunTiming(BaseModel):
    wall_clock_seconds: float = 0.0
    workers: int = 1
    tasks: int = 0


class RunResult(BaseModel):
    config: dict
    records: list[GridRecord] = Field(default_factory=list)
    verdicts: list[Verdict] = Field(default_factory=list)
    calibrated_constants: dict[str, float | None] = Field(default_factory=dict)
    timing: RunTiming = Field(default_factory=RunTiming)

    @property
    def experiment_id(self) -> str:
        return self.config.get('experiment_id', '')

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts if not v.informational)

    @property
    def violations(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed and not v.informational]

    def to_json(self) -> str:
        """Deterministic document: sorted keys and no wall-clock fields."""
        document = self.model_dump(mode='json', exclude={'timing'})
        document['passed'] = self.passed
        return json.dumps(document, sort_keys=True, indent=2) + '\n'


RECORD_COLUMNS = ('grid_index', 'label', 'quantity', 'formula_id', 'empirical', 'bound', 'standard_error',
                  'allowance', 'margin', 'seed')


def records_to_csv(records: list[GridRecord]) -> str:
    """Per-grid plot data, one row per record."""
    param_names = sorted({name for record in records for name in record.params})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow([*RECORD_COLUMNS, *param_names])
    for record in records:
        row = [getattr(record, column) for column in RECORD_COLUMNS]
        row = ['' if value is None else repr(value) if isinstance(value, float) else value for value in row]
        writer.writerow([*row, *(repr(record.params[name]) if name in record.params else '' for name in param_names)])
    return buf.getvalue()


def persist_result(result: RunResult, writer: DataWriter, overwrite: bool = False,
                   reader: DataReader | None = None) -> None:
    """Write the run directory; refuses to replace an earlier run unless ``overwrite``."""
    if reader is None and hasattr(writer, 'parent_dir'):
        reader = FileBasedDataReader(writer.parent_dir)
    if reader is not None and reader.exists(RunFile.RESULT) and not overwrite:
        raise ConfigInvalid(f"run '{result.experiment_id}' already exists; pass --overwrite to replace it")
    writer.write_json(RunFile.CONFIG, result.config)
    writer.write_string(RunFile.RESULT, result.to_json())
    writer.write_json(RunFile.TIMING, result.timing.model_dump())
    writer.write_string(RunFile.RECORDS, records_to_csv(result.records))
    violations = result.violations
    if violations:
        writer.write_json(RunFile.VIOLATIONS, [v.model_dump(mode='json') for v in violations])
    logger.info(f"run '{result.experiment_id}' written ({len(result.records)} records, {len(violations)} violations)")


def load_result(reader: DataReader) -> RunResult:
    document = reader.read_json(RunFile.RESULT)
    document.pop('passed', None)
    try:
        result = RunResult.model_validate(document)
    except ValidationError as e:
        raise ParseError(f'{RunFile.RESULT} does not describe a run: {e}')
    if reader.exists(RunFile.TIMING):
        result.timing = RunTiming.model_validate(reader.read_json(RunFile.TIMING))
    return result
