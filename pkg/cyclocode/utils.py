from collections import namedtuple
from typing import Dict, List, TypeVar

from .exceptions import FormatError

T = TypeVar("T")


def constants(cls: T) -> T:
    """
    Decorator that converts the class to a namedtuple.
    """
    members = tuple(
        (name, value)
        for name, value in cls.__dict__.items()
        if not name.startswith("_")
    )
    klass = namedtuple("{}Type".format(cls.__name__), [record[0] for record in members])
    return klass(*[record[1] for record in members])


def clean_data(value: Dict) -> Dict:
    """
    Remove keys from dictionary with None values.
    """
    return {
        key: value
        for key, value in value.items()
        if value is not None
    }


def split_tokens(text: str, expected: int = None) -> List[str]:
    """
    Split a comma-separated token list such as "1,1,0,u+1,u".

    Examples:
        "1,0,1" => ["1", "0", "1"]
        " u , u+1 " => ["u", "u+1"]
    """
    tokens = [token.strip() for token in text.split(",")]
    if any(token == "" for token in tokens):
        raise FormatError("empty token in {!r}".format(text))

    if expected is not None and len(tokens) != expected:
        raise FormatError(
            "expected {} comma-separated values, got {} in {!r}".format(
                expected, len(tokens), text
            )
        )
    return tokens
