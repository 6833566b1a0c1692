"""Python front end for the C++ core. Results come back as plain dicts."""

import json

from . import _core
from ._core import SearchExhausted, aut_member, is_cyclic, is_dense, is_divisible, normalize, scalar

__all__ = [
    "SearchExhausted",
    "aut",
    "aut_member",
    "certificate",
    "cross_check",
    "dim",
    "is_cyclic",
    "is_dense",
    "is_divisible",
    "member",
    "normalize",
    "oracle",
    "scalar",
]


def aut(group: str) -> dict:
    return json.loads(_core.aut(group))


def member(group: str, vector: str) -> dict:
    return json.loads(_core.member(group, vector))


def certificate(group: str, element: str) -> dict:
    return json.loads(_core.certificate(group, element))


def oracle(group: str, height: int = 3) -> dict:
    return json.loads(_core.oracle(group, height, False))


def cross_check(group: str, height: int = 3) -> dict:
    return json.loads(_core.oracle(group, height, True))


def dim(group: str):
    return _core.dim(group)
