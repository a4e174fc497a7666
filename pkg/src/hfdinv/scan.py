"""Parameter sweeps over (knot, slope) cells with deterministic ordered output."""

from __future__ import annotations

import ast
import csv
import io
import itertools
import json
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, TextIO

from .dinv import Slope
from .exactmath import format_rational
from .knots import from_polynomial, pretzel
from .obstruction import obstruct

CSV_HEADER = [
    "knot", "slope", "delta", "squarefree", "lspace",
    "max4d", "threshold", "conclusion", "error",
]

# family -> (sweep variable, default slope expression)
FAMILIES = {
    "pretzel_integral": ("q", "2*q+3"),
    "pretzel_rational_on_q3": ("p", "(10*p+1)/p"),
    "custom": ("n", None),
}

MAX_DELTA = 10**6


@dataclass(frozen=True)
class ScanConfig:
    family: str
    lo: int
    hi: int
    slope_expr: str | None = None
    pretzel_q: int | None = None
    alexander: str | None = None
    label: str | None = None
    fmt: str = "csv"
    jobs: int = 1
    only_squarefree: bool = False
    only_lspace: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        if self.lo > self.hi:
            raise ValueError(f"empty range {self.lo}..{self.hi}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.fmt not in ("csv", "json", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.family == "custom":
            if self.slope_expr is None:
                raise ValueError("custom family needs a slope expression in n")
            if (self.pretzel_q is None) == (self.alexander is None):
                raise ValueError("custom family needs exactly one of --pretzel / --alexander")
        # parse now so a bad expression is a usage error, not a column of row errors
        SlopeExpr(self.expr, self.variable)

    @property
    def variable(self) -> str:
        return FAMILIES[self.family][0]

    @property
    def expr(self) -> str:
        return self.slope_expr or FAMILIES[self.family][1]


class SlopeExpr:
    """Exact arithmetic expression in one integer variable: ints, + - * /, parens."""

    _BINOPS: dict[type, Callable[[Fraction, Fraction], Fraction]] = {
        ast.Add: lambda a, b: a + b,
        ast.Sub: lambda a, b: a - b,
        ast.Mult: lambda a, b: a * b,
        ast.Div: lambda a, b: a / b,
    }

    def __init__(self, text: str, variable: str):
        self.text = text
        self.variable = variable
        try:
            self.tree = ast.parse(text, mode="eval").body
        except SyntaxError as exc:
            raise ValueError(f"bad slope expression {text!r}: {exc.msg}") from None
        self._check(self.tree)

    def _check(self, node: ast.AST) -> None:
        if isinstance(node, ast.BinOp) and type(node.op) in self._BINOPS:
            self._check(node.left)
            self._check(node.right)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            self._check(node.operand)
        elif isinstance(node, ast.Constant) and type(node.value) is int:
            pass
        elif isinstance(node, ast.Name) and node.id == self.variable:
            pass
        else:
            raise ValueError(
                f"bad slope expression {self.text!r}: only integers, {self.variable!r},"
                " + - * / and parentheses are allowed"
            )

    def __call__(self, value: int) -> Fraction:
        return self._eval(self.tree, value)

    def _eval(self, node: ast.AST, value: int) -> Fraction:
        if isinstance(node, ast.BinOp):
            return self._BINOPS[type(node.op)](
                self._eval(node.left, value), self._eval(node.right, value)
            )
        if isinstance(node, ast.UnaryOp):
            x = self._eval(node.operand, value)
            return -x if isinstance(node.op, ast.USub) else x
        if isinstance(node, ast.Constant):
            return Fraction(node.value)
        return Fraction(value)


def scan_cell(config: ScanConfig, value: int) -> dict:
    """One output row; failures land in the ``error`` field instead of raising."""
    row = dict.fromkeys(CSV_HEADER, "")
    try:
        if config.family == "pretzel_integral":
            K = pretzel(value)
        elif config.family == "pretzel_rational_on_q3":
            K = pretzel(3)
        elif config.pretzel_q is not None:
            K = pretzel(config.pretzel_q)
        else:
            K = from_polynomial(config.label or "custom", config.alexander)
        row["knot"] = K.label
        slope = Slope.from_fraction(SlopeExpr(config.expr, config.variable)(value))
        row["slope"] = slope.text(always_fraction=True)
        if slope.g > MAX_DELTA:
            raise ValueError(f"delta = {slope.g} exceeds the scan limit {MAX_DELTA}")
        v = obstruct(K, slope)
    except (ValueError, ZeroDivisionError) as exc:
        row["error"] = f"{config.variable}={value}: {exc}"
        return row
    row.update(
        delta=str(v.delta),
        squarefree="true" if v.delta_squarefree else "false",
        lspace="true" if v.lspace else "false",
        max4d=format_rational(v.max4d, always_fraction=True),
        threshold=format_rational(v.threshold, always_fraction=True),
        conclusion=v.conclusion.value,
    )
    return row


def _cell(args: tuple[ScanConfig, int]) -> dict:
    return scan_cell(*args)


def ordered_map(fn, items: Iterable, jobs: int, window: int | None = None) -> Iterator:
    """``map`` over a process pool, yielding in input order.

    At most ``window`` tasks are in flight, which bounds the reorder buffer.
    """
    if jobs == 1:
        yield from map(fn, items)
        return
    window = window or 4 * jobs
    it = iter(items)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = deque(pool.submit(fn, x) for x in itertools.islice(it, window))
        while pending:
            fut = pending.popleft()
            for x in itertools.islice(it, 1):
                pending.append(pool.submit(fn, x))
            yield fut.result()


def _keep(config: ScanConfig, row: dict) -> bool:
    if row["error"]:
        return True
    if config.only_squarefree and row["squarefree"] != "true":
        return False
    if config.only_lspace and row["lspace"] != "true":
        return False
    return True


def iter_rows(config: ScanConfig) -> Iterator[dict]:
    cells = ((config, v) for v in range(config.lo, config.hi + 1))
    for row in ordered_map(_cell, cells, config.jobs):
        if _keep(config, row):
            yield row


def run_scan(config: ScanConfig, out: TextIO) -> int:
    """Write the scan to ``out``; returns the number of rows emitted."""
    n = 0
    if config.fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in iter_rows(config):
            writer.writerow([row[k] for k in CSV_HEADER])
            n += 1
    elif config.fmt == "json":
        # one JSON object per line
        for row in iter_rows(config):
            out.write(json.dumps(_json_row(row)) + "\n")
            n += 1
    else:
        widths = [12, 10, 8, 10, 6, 14, 10, 16]
        out.write("  ".join(h.ljust(w) for h, w in zip(CSV_HEADER, widths)).rstrip() + "\n")
        for row in iter_rows(config):
            if row["error"]:
                out.write(f"{row['knot'] or '?':<12}  error: {row['error']}\n")
            else:
                cells = [row[k] for k in CSV_HEADER[:-1]]
                out.write("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip() + "\n")
            n += 1
    return n


def _json_row(row: dict) -> dict:
    out: dict = dict(row)
    if not row["error"]:
        out["delta"] = int(row["delta"])
        out["squarefree"] = row["squarefree"] == "true"
        out["lspace"] = row["lspace"] == "true"
    out["error"] = row["error"] or None
    return out


def scan_to_string(config: ScanConfig) -> str:
    buf = io.StringIO()
    run_scan(config, buf)
    return buf.getvalue()
