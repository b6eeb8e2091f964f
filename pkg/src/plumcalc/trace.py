"""Plain-text rendering of multiplication and division traces.

Multiplication renders one line per column (its terms and total), then the
signed column tuple, then the final product.  Division renders the classic
vertical tableau: quotient line, ``divisor ) dividend`` line, then one value
per line, right-aligned so that every row of step ``n`` ends underneath
dividend digit ``n``.  Negative subtrahends carry a leading minus sign.

Rendering is deterministic: equal traces produce byte-identical text.  With
``ascii_only`` the wedge sign renders as ``><``, the plum product sign as
``*~``, and the multiplication sign as ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cross_mul import MulTrace, Term
from .digit_string import segment
from .plum_div import DivisionTrace

__all__ = ["RenderedTrace", "render_mul", "render_div"]


@dataclass(frozen=True)
class RenderedTrace:
    method: str
    operands: tuple[str, str]
    lines: tuple[str, ...]

    def __str__(self) -> str:
        return "\n".join(self.lines)


def _symbols(ascii_only: bool) -> tuple[str, str, str]:
    if ascii_only:
        return "*~", "><", "x"
    return "♣", "⋈", "×"


def _mul_term_text(term: Term, trace: MulTrace, ascii_only: bool) -> str:
    club, bowtie, times = _symbols(ascii_only)
    if trace.method == "cross":
        # term indices follow the internal orientation: longer operand first
        sa = segment(trace.a, trace.radix_power).segments
        sb = segment(trace.b, trace.radix_power).segments
        if len(sa) < len(sb):
            sa, sb = sb, sa
        return f"{sa[term.i]}{times}{sb[term.j]}={term.value}"
    a_digits = trace.a.digits
    b_digits = trace.b.digits
    if term.kind == "wedge":
        padded = (0,) + a_digits + (0,)
        pair = f"{padded[term.i]}{padded[term.i + 1]}"
        return f"{pair}{bowtie}{b_digits[term.j]}={term.value}"
    x, y = a_digits[term.i], b_digits[term.j]
    if term.kind == "residue":
        return f"{x}{club}{y}={term.value}"
    if term.kind == "carry":
        return f"J({x}{club}{y})={term.value}"
    if term.kind == "product_ones":
        return f"ones({x}{times}{y})={term.value}"
    if term.kind == "product_tens":
        return f"tens({x}{times}{y})={term.value}"
    return f"{x}{times}{y}={term.value}"


def render_mul(trace: MulTrace, ascii_only: bool = False) -> RenderedTrace:
    """One line per column, then the signed column tuple, then the product."""
    _, _, times = _symbols(ascii_only)
    header = f"{trace.a} {times} {trace.b}  [{trace.method}]"
    if trace.radix_power > 1:
        header += f" (segments of {trace.radix_power})"
    lines = [header]
    for k, column in enumerate(trace.columns):
        if column.terms:
            body = ", ".join(_mul_term_text(t, trace, ascii_only) for t in column.terms)
        else:
            body = "0"
        lines.append(f"  col {k}: {body} = {column.total}")
    lines.append(f"  columns: {trace.signed}")
    lines.append(f"  product: {trace.product}")
    return RenderedTrace(trace.method, (str(trace.a), str(trace.b)), tuple(lines))


def render_div(trace: DivisionTrace, ascii_only: bool = False) -> RenderedTrace:
    """Vertical division tableau with one value per line.

    Rows per step, in order: bring-down value, the pp0 subtrahend and the
    value after subtracting it, then the pp1 subtrahend and the new partial
    remainder.  The first displayed step starts directly under the dividend,
    so its bring-down row is omitted, as is its (always zero) pp0 row.
    """
    operands = (str(trace.dividend), str(trace.divisor))
    prefix = f"{trace.divisor} ) "
    margin = len(prefix)

    def at(value: int | str, step_index: int) -> str:
        text = str(value)
        end = margin + step_index  # column of dividend digit step_index (0-based)
        return " " * (end - len(text) + 1) + text

    lines: list[str] = []
    first_nonzero = next(
        (s.index for s in trace.steps if s.quotient_digit not in (None, 0)), None
    )
    if trace.quotient.is_zero or first_nonzero is None:
        lines.append(at("0", len(trace.dividend) - 1))
        lines.append(f"{prefix}{trace.dividend}")
        lines.append(at(str(trace.remainder), len(trace.dividend) - 1))
        return RenderedTrace(trace.method, operands, tuple(lines))

    quotient_row = [" "] * (margin + len(trace.dividend))
    for step in trace.steps:
        if step.quotient_digit is not None and step.index >= first_nonzero:
            quotient_row[margin + step.index - 1] = str(step.quotient_digit)
    lines.append("".join(quotient_row).rstrip())
    lines.append(f"{prefix}{trace.dividend}")

    for step in trace.steps:
        if step.index < first_nonzero:
            continue
        pos = step.index - 1
        if step.index > first_nonzero:
            lines.append(at(step.interim, pos))
            lines.append(at(step.pp0, pos))
            lines.append(at(step.after_pp0, pos))
        if step.pp1 is not None:
            lines.append(at(step.pp1, pos))
            lines.append(at(step.remainder, pos))
    return RenderedTrace(trace.method, operands, tuple(lines))
