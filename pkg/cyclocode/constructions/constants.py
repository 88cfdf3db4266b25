from ..utils import constants


@constants
class Family:
    # GF(2) codes, (p+q)/4 odd
    BINARY = "binary"

    # GF(4) codes, (p+q)/4 even
    QUATERNARY = "quaternary"


@constants
class Verdict:
    PASS = "PASS"
    FAIL = "FAIL"
