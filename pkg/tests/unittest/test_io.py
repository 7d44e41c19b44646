# Copyright (c) gauss-maxima developers. All rights reserved.
import json

import click
import numpy as np
import pytest

from gaussmax.data.data_reader_writer import FileBasedDataReader, FileBasedDataWriter
from gaussmax.data.io import decode_gmax, encode_gmax, parse_matrix_csv, sniff_format
from gaussmax.data.utils.exceptions import EmptyData, FileNotExisted, InvalidInput, ParseError
from gaussmax.utils.cli_parser import arg_parse, parse_inputs
from gaussmax.utils.enum_class import GMAX_MAGIC, DatasetFormat


def test_sniff_format():
    assert sniff_format(encode_gmax(np.ones((2, 2)))) == DatasetFormat.BINARY
    assert sniff_format(b'1,2\n') == DatasetFormat.CSV
    assert sniff_format(b'') == DatasetFormat.CSV


def test_gmax_codec():
    z = np.array([[1.5, -2.0, 0.0], [3.25, 1e-300, -7.0]])
    data = encode_gmax(z)
    assert data.startswith(GMAX_MAGIC)
    assert len(data) == 5 + 16 + 8 * 6
    np.testing.assert_array_equal(decode_gmax(data), z)


def test_gmax_codec_errors():
    data = encode_gmax(np.ones((2, 2)))
    with pytest.raises(ParseError):
        decode_gmax(b'XMAX1' + data[5:])
    with pytest.raises(ParseError):
        decode_gmax(data[:-8])
    with pytest.raises(ParseError):
        decode_gmax(data + b'\x00' * 8)
    with pytest.raises(EmptyData):
        decode_gmax(b'')
    with pytest.raises(EmptyData):
        decode_gmax(encode_gmax(np.zeros((0, 3))))


def test_parse_matrix_csv_skips_blank_lines():
    m = parse_matrix_csv(b'1, 2\n\n3,4\n\n')
    np.testing.assert_array_equal(m, [[1.0, 2.0], [3.0, 4.0]])


def test_parse_matrix_csv_reports_the_line():
    with pytest.raises(ParseError) as excinfo:
        parse_matrix_csv(b'1,2\n\n3,x\n', what='covariance')
    assert excinfo.value.line == 3
    assert str(excinfo.value).startswith('Parse error at line 3')
    with pytest.raises(EmptyData):
        parse_matrix_csv(b'\n \n')
    with pytest.raises(ParseError):
        parse_matrix_csv(b'\xff\xfe')


def test_file_reader_and_writer(tmp_path):
    writer = FileBasedDataWriter(str(tmp_path / 'nested'))
    writer.write_json('doc.json', {'b': 1, 'a': [1.5]})
    text = (tmp_path / 'nested' / 'doc.json').read_text(encoding='utf-8')
    assert text.index('"a"') < text.index('"b"')

    reader = FileBasedDataReader(str(tmp_path / 'nested'))
    assert reader.read_json('doc.json') == {'a': [1.5], 'b': 1}
    assert reader.read_at('doc.json', offset=0, limit=1) == b'{'
    assert reader.exists('doc.json')
    assert not reader.exists('other.json')
    with pytest.raises(FileNotExisted):
        reader.read('other.json')


def test_write_array_csv_keeps_precision(tmp_path):
    writer = FileBasedDataWriter(str(tmp_path))
    values = np.array([0.1, 1 / 3, -2e-17])
    writer.write_array_csv('v.csv', values)
    np.testing.assert_array_equal(parse_matrix_csv((tmp_path / 'v.csv').read_bytes()).ravel(), values)


def test_parse_inputs():
    assert parse_inputs('delta=1e-6, p=100,equal_variance=true') == {
        'delta': 1e-6, 'p': 100.0, 'equal_variance': True}
    assert parse_inputs(None) == {}
    assert parse_inputs('') == {}
    with pytest.raises(InvalidInput):
        parse_inputs('delta')
    with pytest.raises(InvalidInput):
        parse_inputs('=3')


def test_arg_parse():
    ctx = click.Context(click.Command('bound'))
    ctx.args = ['--delta', '0.5', '--equal-variance', '--label', 'x']
    assert arg_parse(ctx) == {'delta': 0.5, 'equal_variance': True, 'label': 'x'}
    ctx.args = ['stray']
    with pytest.raises(InvalidInput):
        arg_parse(ctx)


def test_json_loads_of_written_bytes(tmp_path):
    writer = FileBasedDataWriter(str(tmp_path))
    writer.write_string('s.txt', 'héllo')
    assert (tmp_path / 's.txt').read_bytes() == 'héllo'.encode('utf-8')
    writer.write_json('u.json', {'name': 'héllo'})
    assert json.loads((tmp_path / 'u.json').read_bytes()) == {'name': 'héllo'}
