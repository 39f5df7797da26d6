from virtmod.arith.factor import (
    Factorization,
    factor,
    is_prime_element,
    is_squarefree,
    prime_split,
)
from virtmod.arith.rings import (
    QQx,
    ZZ,
    Element,
    Fpx,
    IntegerRing,
    PolyRing,
    PolyRingFp,
    PolyRingQ,
    Ring,
    euclidean_divide,
    extended_gcd,
    is_prime_int,
    normalize_unit,
    parse_ring,
    ring_to_json,
)

__all__ = [
    "Element",
    "Factorization",
    "Fpx",
    "IntegerRing",
    "PolyRing",
    "PolyRingFp",
    "PolyRingQ",
    "QQx",
    "Ring",
    "ZZ",
    "euclidean_divide",
    "extended_gcd",
    "factor",
    "is_prime_element",
    "is_prime_int",
    "is_squarefree",
    "normalize_unit",
    "parse_ring",
    "prime_split",
    "ring_to_json",
]
