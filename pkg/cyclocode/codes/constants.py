from ..utils import constants


@constants
class CodeKind:
    # generator (I_n | R)
    PURE = "pure"

    # generator (I_{n+1} | B), B = R with a border row/column and corner alpha
    BORDERED = "bordered"


@constants
class DistanceMethod:
    EXHAUSTIVE = "exhaustive"
    INFOSET = "infoset"
    AUTO = "auto"


@constants
class BoundRule:
    """ Which case of the self-dual distance bound applied. """
    BINARY = "binary"
    BINARY_22 = "binary, n = 22 mod 24"
    TERNARY = "ternary"
    QUATERNARY = "quaternary"
    GENERAL = "general"
