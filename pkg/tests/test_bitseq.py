import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqcomplexity.bitseq import BitParseError, BitSequence, ingest, parse_bits, write_bits


def test_ascii01_file(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("0110")
    assert ingest(path, "ascii01") == BitSequence.from_str("0110")


def test_hex_file(tmp_path):
    path = tmp_path / "s.hex"
    path.write_text("69")
    assert ingest(path, "hex").to_str() == "01101001"


def test_invalid_character_reports_offset(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("01x1")
    with pytest.raises(BitParseError) as info:
        ingest(path, "ascii01")
    assert info.value.offset == 2
    assert "offset 2" in str(info.value)


def test_whitespace_is_ignored_but_counts_toward_offset():
    assert parse_bits(b"01 10\n1\r\n").to_str() == "01101"
    with pytest.raises(BitParseError) as info:
        parse_bits(b"0 1 2")
    assert info.value.offset == 4


@pytest.mark.parametrize("data", [b"", b" \n\t"])
def test_empty_input_is_an_error(data):
    with pytest.raises(BitParseError):
        parse_bits(data)


def test_hex_case_and_bad_digit():
    assert parse_bits(b"aF", "hex").to_str() == "10101111"
    with pytest.raises(BitParseError) as info:
        parse_bits(b"a g", "hex")
    assert info.value.offset == 2


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        ingest(tmp_path / "nope.txt")


def test_bit_access_and_bounds():
    s = BitSequence.from_str("1011001")
    assert [s.bit(i) for i in range(len(s))] == [1, 0, 1, 1, 0, 0, 1]
    assert s[-1] == 1
    with pytest.raises(IndexError):
        s.bit(7)


def test_immutable():
    s = BitSequence.from_str("0101")
    with pytest.raises(ValueError):
        s.unpacked()[0] = 1
    with pytest.raises(ValueError):
        s.packed[0] = 1


def test_prefix_and_padding_equality():
    long = BitSequence.from_str("1111111111")
    assert long.prefix(3) == BitSequence.from_str("111")
    assert long.prefix(0).length == 0


@given(st.lists(st.integers(0, 1), max_size=300))
def test_int_and_string_round_trips(bits):
    s = BitSequence.from_bits(bits)
    assert len(s) == len(bits)
    assert list(s) == bits
    assert BitSequence.from_int(s.to_int(), len(s)) == s
    assert BitSequence.from_str(s.to_str()) == s


@given(st.lists(st.integers(0, 1), min_size=1, max_size=200))
def test_file_formats_round_trip(bits):
    s = BitSequence.from_bits(bits)
    assert parse_bits(write_bits(s, "ascii01").encode()) == s
    # hex pads to a multiple of four bits
    back = parse_bits(write_bits(s, "hex").encode(), "hex")
    assert back.prefix(len(s)) == s
    assert not np.any(back.unpacked()[len(s):])
