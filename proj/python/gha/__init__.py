"""Python bindings for the gha library.

Structured inputs may be given as a dict, a path to a JSON file, or JSON text.
Lie algebras may also be given by built-in name. Every check returns the
report as a dict with keys schema, command, status, checks and data.
"""

import json
import os

from . import _gha
from ._gha import InputError, StructuralError, builtin_lie_names

__all__ = [
    "InputError",
    "StructuralError",
    "builtin_lie_names",
    "builtin_lie",
    "verify",
    "invariants",
    "chern_weil",
    "rep_verify",
    "spectral",
    "mc_check",
    "gauss_manin",
    "ainfty_check",
]


def _text(x):
    if isinstance(x, dict):
        return json.dumps(x)
    if isinstance(x, os.PathLike):
        x = os.fspath(x)
    if isinstance(x, str):
        if x.lstrip().startswith("{"):
            return x
        try:
            with open(x, encoding="utf-8") as f:
                return f.read()
        except OSError as e:
            raise InputError(f"cannot read {x}: {e.strerror}") from None
    raise TypeError(f"expected dict, path or JSON text, got {type(x).__name__}")


def _lie(x):
    if isinstance(x, str) and x in builtin_lie_names():
        return _gha.builtin_lie(x)
    return _text(x)


def _report(name, out):
    r = json.loads(out)
    r["command"] = [name]
    return r


def builtin_lie(name):
    return json.loads(_gha.builtin_lie(name))


def verify(algebra, trunc=3):
    return _report("verify", _gha.verify(_lie(algebra), trunc))


def invariants(algebra, degree=3):
    return _report("invariants", _gha.invariants(_lie(algebra), degree))


def chern_weil(algebra, connection, polynomial):
    return _report("chern-weil", _gha.chern_weil(_lie(algebra), _text(connection), _text(polynomial)))


def rep_verify(sset, rep, pmax=-1):
    return _report("rep-verify", _gha.rep_verify(_text(sset), _text(rep), pmax))


def spectral(input, pages=4):
    return _report("spectral", _gha.spectral(_text(input), pages))


def mc_check(input, trunc=3):
    return _report("mc-check", _gha.mc_check(_lie(input), trunc))


def gauss_manin(algebra, trunc=3):
    return _report("gauss-manin", _gha.gauss_manin(_lie(algebra), trunc))


def ainfty_check(category, length=3):
    return _report("ainfty-check", _gha.ainfty_check(_text(category), length))
