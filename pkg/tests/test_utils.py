import configparser
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrac_lab.cli.OutputWriter import cell
from qrac_lab.constants import OutputFormat
from qrac_lab.utils.bits import all_strings, bit_matrix, hamming_weights, rows_to_ints, to_string
from qrac_lab.utils.config import retrieve_value_from_config
from qrac_lab.utils.ios import dump_csv, dump_json
from qrac_lab.utils.parallel import ENV_QRAC_LAB_THREADS, sweep, thread_count


def test_config_prefers_explicit_parameter():
    config = configparser.ConfigParser()
    config.read_string("[crac]\nretry_cap = 8\n")
    assert retrieve_value_from_config(config, "crac", "retry_cap", int, "retry cap") == 8
    assert retrieve_value_from_config(config, "crac", "retry_cap", int, "retry cap", 3) == 3
    with pytest.raises(RuntimeError, match="No default ell specified"):
        retrieve_value_from_config(config, "crac", "default_ell", int, "default ell")


def test_thread_count_from_environment(monkeypatch):
    monkeypatch.setenv(ENV_QRAC_LAB_THREADS, "3")
    assert thread_count() == 3
    assert thread_count(2) == 2
    monkeypatch.setenv(ENV_QRAC_LAB_THREADS, "0")
    assert thread_count() == 1


@pytest.mark.parametrize("threads", [1, 4])
def test_sweep_keeps_key_order(threads):
    keys = ["11", "00", "10", "01"]
    result = sweep(lambda x: int(x, 2), keys, threads)
    assert list(result) == keys
    assert list(result.values()) == [3, 0, 2, 1]


def test_bit_tables():
    assert all_strings(2) == ["00", "01", "10", "11"]
    assert to_string(5, 4) == "0101"
    assert to_string(0, 0) == ""
    matrix = bit_matrix(3)
    assert matrix[6].tolist() == [1, 1, 0]
    assert rows_to_ints(matrix).tolist() == list(range(8))


@given(st.integers(min_value=0, max_value=2 ** 40))
@settings(max_examples=200, deadline=None)
def test_hamming_weights_count_set_bits(value):
    assert hamming_weights(np.array([value]))[0] == bin(value).count("1")


def test_cells():
    assert cell(True) == "true"
    assert cell(np.bool_(False)) == "false"
    assert cell(0.1) == "0.1000000"
    assert cell(Fraction(1, 3)) == "0.3333333"
    assert cell(np.float64(2.0)) == "2.0000000"
    assert cell([Fraction(1, 2), 7]) == "0.5000000; 7"
    assert cell(None) == "-"
    assert cell("non") == "non"


def test_csv_uses_crlf():
    assert dump_csv(["x", "i"], [["01", 1], ["a,b", 0]]) == 'x,i\r\n01,1\r\n"a,b",0\r\n'


def test_json_encoding():
    text = dump_json({
        "b": Fraction(1, 2),
        "a": complex(0.5, -1.0),
        "c": np.int64(4),
        "d": np.arange(2),
        "e": OutputFormat.CSV,
        "f": frozenset({"y", "x"})
    })
    assert text.endswith("\n")
    assert list(json.loads(text)) == ["a", "b", "c", "d", "e", "f"]
    assert json.loads(text) == {
        "a": [0.5, -1.0],
        "b": "1/2",
        "c": 4,
        "d": [0, 1],
        "e": "csv",
        "f": ["x", "y"]
    }
