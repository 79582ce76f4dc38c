"""Exact computations on Rota-Baxter Lie algebra extensions.

Every function mirrors an ``rbx`` subcommand. Documents may be given as
dicts (the JSON file format) or as paths to JSON files; string references
inside a file resolve relative to that file. Each call returns a
``Result`` carrying the CLI exit code and the decoded JSON payload.
"""

import json
import os
from typing import NamedTuple, Optional, Union

from . import _rbx
from ._rbx import (
    DEFAULT_BUDGET,
    EXIT_BUDGET,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_UNDECIDED,
)

Document = Union[dict, str, "os.PathLike[str]"]


class Result(NamedTuple):
    exit_code: int
    payload: dict

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_OK


def _doc(d: Document) -> "_rbx.Doc":
    if isinstance(d, dict):
        return _rbx.Doc(json.dumps(d), False)
    return _rbx.Doc(os.fspath(d), True)


def _opt(d: Optional[Document]):
    return None if d is None else _doc(d)


def _result(r) -> Result:
    code, text = r
    return Result(code, json.loads(text))


def validate(doc: Document) -> Result:
    return _result(_rbx.validate(_doc(doc)))


def cohomology(rep: Document, degree: int = 2) -> Result:
    return _result(_rbx.cohomology(_doc(rep), degree))


def derivations(rep: Document) -> Result:
    return _result(_rbx.derivations(_doc(rep)))


def extend(cocycle: Document) -> Result:
    return _result(_rbx.extend(_doc(cocycle)))


def extract(extension: Document, section: Optional[Document] = None) -> Result:
    return _result(_rbx.extract(_doc(extension), _opt(section)))


def equivalent(a: Document, b: Document) -> Result:
    return _result(_rbx.equivalent(_doc(a), _doc(b)))


def inducible(extension: Document, pair: Document, witness: Optional[Document] = None) -> Result:
    return _result(_rbx.inducible(_doc(extension), _doc(pair), _opt(witness)))


def wells(extension: Document, arg: Document, kind: str = "pair") -> Result:
    """kind is "pair", "alpha" (beta = id) or "beta" (alpha = id)."""
    return _result(_rbx.wells(_doc(extension), _doc(arg), kind))


def exactness(extension: Document, budget: Optional[int] = None) -> Result:
    return _result(_rbx.exactness(_doc(extension), budget))


def semidirect(rep: Document) -> Result:
    return _result(_rbx.semidirect(_doc(rep)))


__all__ = [
    "DEFAULT_BUDGET",
    "EXIT_BUDGET",
    "EXIT_INPUT_ERROR",
    "EXIT_INTERNAL",
    "EXIT_NEGATIVE",
    "EXIT_OK",
    "EXIT_UNDECIDED",
    "Result",
    "cohomology",
    "derivations",
    "equivalent",
    "exactness",
    "extend",
    "extract",
    "inducible",
    "semidirect",
    "validate",
    "wells",
]
