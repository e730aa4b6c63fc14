"""Run-length patterns such as ``(01)^{b/2} (23)^{(a-1)/2} 2``.

A pattern is a sequence of items; each item is a digit or a parenthesised
sub-pattern, optionally raised to a repeat count. Counts are a single digit,
a single letter, or a braced arithmetic expression over the parameters.
"""

from __future__ import annotations

import ast
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .core import SubgamesError


class InadmissibleParameters(SubgamesError, ValueError):
    """Parameters violate a family's constraints or give a bad repeat count."""


class PatternSyntaxError(SubgamesError, ValueError):
    pass


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def eval_count(expr: str, params: Mapping[str, int]) -> Fraction:
    """Evaluate ``+ - * /`` arithmetic over named integer parameters exactly."""

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in params:
                raise InadmissibleParameters(f"unknown parameter {node.id!r} in {expr!r}")
            return Fraction(params[node.id])
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](walk(node.left), walk(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -walk(node.operand)
        raise PatternSyntaxError(f"unsupported expression {expr!r}")

    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise PatternSyntaxError(f"bad expression {expr!r}") from exc
    return walk(tree)


@dataclass(frozen=True)
class Block:
    content: Union[str, "SequencePattern"]
    count: str = "1"


@dataclass(frozen=True)
class SequencePattern:
    blocks: tuple[Block, ...]

    def expand(self, params: Mapping[str, int]) -> list[int]:
        return expand_pattern(self, params)

    def __str__(self) -> str:
        parts = []
        for b in self.blocks:
            body = b.content if isinstance(b.content, str) else f"({b.content})"
            if isinstance(b.content, str) and len(b.content) > 1:
                body = f"({b.content})"
            if b.count == "1":
                parts.append(body)
            elif len(b.count) == 1:
                parts.append(f"{body}^{b.count}")
            else:
                parts.append(f"{body}^{{{b.count}}}")
        return " ".join(parts)


def parse_pattern(text: str) -> SequencePattern:
    src = text.replace(" ", "")
    pos = 0

    def parse_seq(closing: bool) -> SequencePattern:
        nonlocal pos
        blocks = []
        while pos < len(src):
            ch = src[pos]
            if ch == ")":
                if not closing:
                    raise PatternSyntaxError(f"unbalanced ')' in {text!r}")
                pos += 1
                return _simplify(blocks)
            if ch == "(":
                pos += 1
                content: Union[str, SequencePattern] = parse_seq(True)
            elif ch.isdigit():
                pos += 1
                content = ch
            else:
                raise PatternSyntaxError(f"unexpected {ch!r} at {pos} in {text!r}")
            count = "1"
            if pos < len(src) and src[pos] == "^":
                pos += 1
                count = parse_exponent()
            blocks.append(Block(content, count))
        if closing:
            raise PatternSyntaxError(f"missing ')' in {text!r}")
        return _simplify(blocks)

    def parse_exponent() -> str:
        nonlocal pos
        if pos >= len(src):
            raise PatternSyntaxError(f"dangling '^' in {text!r}")
        if src[pos] != "{":
            pos += 1
            return src[pos - 1]
        depth = 0
        start = pos + 1
        while pos < len(src):
            if src[pos] == "{":
                depth += 1
            elif src[pos] == "}":
                depth -= 1
                if depth == 0:
                    pos += 1
                    return src[start : pos - 1]
            pos += 1
        raise PatternSyntaxError(f"missing '}}' in {text!r}")

    return parse_seq(False)


def _simplify(blocks: list[Block]) -> SequencePattern:
    # a parenthesised run of bare digits, e.g. (01), becomes one string block
    if blocks and all(isinstance(b.content, str) and b.count == "1" for b in blocks):
        return SequencePattern((Block("".join(b.content for b in blocks)),))
    out = []
    for b in blocks:
        c = b.content
        if isinstance(c, SequencePattern) and len(c.blocks) == 1 and c.blocks[0].count == "1":
            c = c.blocks[0].content
        out.append(Block(c, b.count))
    return SequencePattern(tuple(out))


def _count(expr: str, params: Mapping[str, int]) -> int:
    value = eval_count(expr, params)
    if value.denominator != 1 or value < 0:
        raise InadmissibleParameters(f"repeat count {expr!r} = {value} at {dict(params)}")
    return int(value)


def expand_pattern(pattern: Union[SequencePattern, str], params: Mapping[str, int]) -> list[int]:
    """Concrete digit list for ``pattern`` at ``params``."""
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    out: list[int] = []
    for block in pattern.blocks:
        n = _count(block.count, params)
        if isinstance(block.content, str):
            unit = [int(c) for c in block.content]
        else:
            unit = expand_pattern(block.content, params)
        out.extend(unit * n)
    return out


def pattern_length(pattern: Union[SequencePattern, str], params: Mapping[str, int]) -> int:
    return len(expand_pattern(pattern, params))
