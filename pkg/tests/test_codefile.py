import pytest

from subspace_codes.codefile import CodeFileError, CodeFileWarning, emit, parse
from subspace_codes.finite_field import Field
from subspace_codes.multilevel import construct_code
from subspace_codes.puncturing import coordinate_hyperplane, puncture


def test_round_trip_71_is_byte_identical(code71):
    text = emit(code71)
    again = parse(text)
    assert emit(again) == text
    assert again.codewords == code71.codewords
    assert again.fibers == code71.fibers
    assert again.skeleton == code71.skeleton


def test_header_and_codeword_layout(code71):
    lines = emit(code71).splitlines()
    assert lines[:6] == ["# subspace-code v1", "# q=2", "# n=6", "# k=3", "# d=4", "# size=71"]
    assert lines[6] == "# skeleton=111000,100110,010101,001011"
    assert lines[-1].count(";") == 2
    assert all(len(row) == 6 for row in lines[-1].split(";"))


def test_mixed_dimension_round_trip(code71):
    out = puncture(code71, coordinate_hyperplane(Field(2), 6, 6), (1, 0, 0, 0, 0, 1))
    text = emit(out)
    assert "# k=mixed" in text and "# d=3" in text
    assert emit(parse(text)) == text


def test_gf3_round_trip():
    code = construct_code(Field(3), 4, 2, 2)
    text = emit(code)
    assert emit(parse(text)) == text
    assert any("2" in line for line in text.splitlines() if not line.startswith("#"))


def test_duplicates_are_dropped_with_warning():
    text = "# subspace-code v1\n# q=2\n# n=4\n# k=2\n# d=2\n1000;0100\n1000;0100\n0010;0001\n"
    with pytest.warns(CodeFileWarning, match="duplicate"):
        code = parse(text)
    assert len(code) == 2


def test_bad_digit_is_an_error():
    text = "# subspace-code v1\n# q=2\n# n=4\n# k=2\n# d=2\n1000;0200\n"
    with pytest.raises(CodeFileError, match="digit"):
        parse(text)


def test_non_rref_rows_are_canonicalized_with_warning():
    text = "# subspace-code v1\n# q=2\n# n=4\n# k=2\n# d=2\n1100;0100\n"
    with pytest.warns(CodeFileWarning, match="RREF"):
        code = parse(text)
    assert code.codewords[0].rows == ((1, 0, 0, 0), (0, 1, 0, 0))


@pytest.mark.parametrize(
    "text,match",
    [
        ("# q=2\n", "format"),
        ("# subspace-code v1\n# q=2\n# n=4\n# d=2\n1000\n", "missing k"),
        ("# subspace-code v1\n# q=2\n# n=4\n# k=2\n# d=2\n1000\n", "dimension 1"),
        ("# subspace-code v1\n# q=2\n# n=4\n# k=1\n# d=2\n10000\n", "length"),
        ("# subspace-code v1\n# q=2\n# n=4\n# k=1\n# d=2\n# size=2\n1000\n", "size"),
    ],
)
def test_header_mismatches(text, match):
    with pytest.raises(CodeFileError, match=match):
        parse(text)
