import pytest

from cyclocode.exceptions import FormatError
from cyclocode.utils import clean_data, constants, split_tokens


def test_clean_data():
    assert clean_data({
        "p": 5,
        "alpha": None,
        "m": "",
        "d": 0,
        "self_dual": False,
    }) == {
        "p": 5,
        "m": "",
        "d": 0,
        "self_dual": False,
    }


def test_constants():
    @constants
    class Color:
        RED = "red"
        BLUE = "blue"

    assert Color.RED == "red"
    assert "blue" in Color
    assert list(Color) == ["red", "blue"]


def test_split_tokens():
    assert split_tokens("1,0,1") == ["1", "0", "1"]
    assert split_tokens(" u , u+1 ", expected=2) == ["u", "u+1"]


@pytest.mark.parametrize("text, expected", [
    ("1,,0", None),
    ("", None),
    ("1,0,1", 5),
])
def test_split_tokens_errors(text, expected):
    with pytest.raises(FormatError):
        split_tokens(text, expected=expected)
