"""Braid groups, KZ holonomy and formal group laws (Python bindings)."""

from ._core import *  # noqa: F401,F403
from ._core import run as _run


def cli(*args, stdin=""):
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _run([str(a) for a in args], stdin)
