#!/usr/bin/env python3
"""Regenerate the golden table files compared by the test suite.

Run from the repository root after any deliberate change to table
rendering, then review the diff by hand against the reference values
pinned in tests/test_perm.py before committing.
"""

from __future__ import annotations

import io
import pathlib
import sys
from contextlib import redirect_stdout

from subdiv.cli import main

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def render(which: int, n: int) -> str:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["tables", "--which", str(which), "--n", str(n)])
    if code != 0:
        raise SystemExit(f"tables --which {which} exited {code}")
    return buf.getvalue()


def run() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for which in (1, 2, 3):
        path = GOLDEN / f"table{which}.txt"
        path.write_text(render(which, 4), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    sys.exit(run())
