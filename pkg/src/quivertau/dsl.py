"""The line-oriented session DSL.

Grammar (one algebra per file, every name defined before use):

    vertices: v1 v2 ...
    arrow name: src -> tgt
    relation c1*a1*a2 + c2*b1*b2 - ...     # coefficients optional, rationals p/q
    module NAME = P(v) | S(v) | I(v)
    module NAME = string a/b^-1/c          # e_v for the trivial word at v
    module NAME = rep dims {v: d, ...} maps {arrow: [[...], ...], ...}
    module NAME = N1 + N2 + ...            # direct sum, summand list remembered
    # comment

Parsing is position-annotated; serialization of a presentation re-parses to
an identical bound quiver.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .presentations import (AlgebraElement, BoundQuiver, Path, PresentationError,
                            Quiver, trivial_path)
from .representations import Representation, StringWord, string_module, standard_module


class ParseError(PresentationError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_NAME = re.compile(r"[A-Za-z0-9_]+$")


@dataclass
class SessionFile:
    algebra: BoundQuiver
    modules: dict[str, Representation]
    summands: dict[str, list[str]]  # for sum definitions, the summand names
    module_order: list[str] = field(default_factory=list)


def _strip_comment(line: str) -> str:
    out = []
    for ch in line:
        if ch == "#":
            break
        out.append(ch)
    return "".join(out).strip()


def _parse_fraction(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"bad rational {tok!r}")


def _parse_relation_expr(expr: str, amap: dict[str, tuple[str, str]],
                         lineno: int) -> AlgebraElement:
    # split into signed terms at top level
    terms: list[tuple[int, str]] = []
    sign = 1
    cur = ""
    for ch in expr:
        if ch in "+-":
            if cur.strip():
                terms.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
        else:
            cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    if not terms:
        raise ParseError(lineno, "empty relation")
    total = AlgebraElement()
    for sgn, term in terms:
        factors = [f.strip() for f in term.split("*") if f.strip()]
        if not factors:
            raise ParseError(lineno, f"empty term in relation {expr!r}")
        coeff = Fraction(sgn)
        if re.fullmatch(r"-?\d+(/\d+)?", factors[0]):
            coeff *= _parse_fraction(factors[0], lineno)
            factors = factors[1:]
        if not factors:
            raise ParseError(lineno, "term has no arrows")
        segs = []
        for a in factors:
            if a not in amap:
                raise ParseError(lineno, f"unknown arrow {a!r}")
            segs.append(amap[a])
        for (s1, t1), (s2, t2) in zip(segs, segs[1:]):
            if t1 != s2:
                raise ParseError(lineno, f"arrows do not compose in term {term!r}")
        p = Path(segs[0][0], segs[-1][1], tuple(factors))
        total = total + AlgebraElement.from_path(p).scale(coeff)
    return total


def _parse_braced(text: str, lineno: int) -> tuple[str, str]:
    """Return (content inside first {...}, rest after it)."""
    if "{" not in text:
        raise ParseError(lineno, "expected '{'")
    start = text.index("{")
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return text[start + 1:i], text[i + 1:]
    raise ParseError(lineno, "unbalanced '{'")


def _parse_matrix(text: str, lineno: int) -> list[list[Fraction]]:
    text = text.strip()
    if not text.startswith("[") or not text.endswith("]"):
        raise ParseError(lineno, f"bad matrix {text!r}")
    inner = text[1:-1].strip()
    rows: list[list[Fraction]] = []
    depth = 0
    cur = ""
    for ch in inner:
        if ch == "[":
            depth += 1
            if depth == 1:
                cur = ""
                continue
        elif ch == "]":
            depth -= 1
            if depth == 0:
                entries = [e.strip() for e in cur.split(",") if e.strip()]
                rows.append([_parse_fraction(e, lineno) for e in entries])
                continue
        if depth >= 1:
            cur += ch
    return rows


def _parse_string_word(word: str, lineno: int) -> StringWord:
    word = word.strip()
    m = re.fullmatch(r"e_([A-Za-z0-9_]+)", word)
    if m:
        return StringWord((), m.group(1))
    letters = []
    for piece in word.split("/"):
        piece = piece.strip()
        if not piece:
            raise ParseError(lineno, "empty letter in string word")
        if piece.endswith("^-1"):
            letters.append((piece[:-3], False))
        else:
            letters.append((piece, True))
    return StringWord(tuple(letters))


def parse_session(text: str, lmax: int = 30) -> SessionFile:
    vertices: list[str] | None = None
    arrows: list[tuple[str, str, str]] = []
    relation_specs: list[tuple[int, str]] = []
    module_specs: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise ParseError(lineno, "duplicate vertices line (one algebra per file)")
            vertices = line[len("vertices:"):].split()
            if not vertices:
                raise ParseError(lineno, "no vertices given")
            continue
        if line.startswith("arrow "):
            m = re.fullmatch(r"arrow\s+([A-Za-z0-9_]+)\s*:\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)", line)
            if not m:
                raise ParseError(lineno, f"bad arrow declaration {line!r}")
            arrows.append((m.group(1), m.group(2), m.group(3)))
            continue
        if line.startswith("relation"):
            relation_specs.append((lineno, line[len("relation"):].strip()))
            continue
        if line.startswith("module "):
            m = re.fullmatch(r"module\s+([A-Za-z0-9_]+)\s*=\s*(.*)", line)
            if not m:
                raise ParseError(lineno, f"bad module definition {line!r}")
            module_specs.append((lineno, m.group(1), m.group(2).strip()))
            continue
        raise ParseError(lineno, f"unrecognized line {line!r}")
    if vertices is None:
        raise ParseError(0, "missing vertices line")
    try:
        quiver = Quiver(tuple(vertices), tuple(arrows))
    except PresentationError as e:
        raise ParseError(0, str(e))
    amap = quiver.arrow_map()
    relations = [_parse_relation_expr(expr, amap, ln) for ln, expr in relation_specs]
    algebra = BoundQuiver(quiver, relations, lmax=lmax)

    modules: dict[str, Representation] = {}
    summands: dict[str, list[str]] = {}
    order: list[str] = []
    for lineno, name, body in module_specs:
        if name in modules:
            raise ParseError(lineno, f"module {name!r} redefined")
        m = re.fullmatch(r"([PSI])\(([A-Za-z0-9_]+)\)", body)
        if m:
            kind, v = m.group(1), m.group(2)
            if v not in quiver.vertices:
                raise ParseError(lineno, f"unknown vertex {v!r}")
            modules[name] = standard_module(algebra, kind, v)
            order.append(name)
            continue
        if body.startswith("string "):
            word = _parse_string_word(body[len("string "):], lineno)
            try:
                modules[name] = string_module(algebra, word)
            except PresentationError as e:
                raise ParseError(lineno, str(e))
            order.append(name)
            continue
        if body.startswith("rep "):
            rest = body[len("rep"):].strip()
            if not rest.startswith("dims"):
                raise ParseError(lineno, "rep needs dims {...}")
            dims_text, rest = _parse_braced(rest[len("dims"):], lineno)
            pairs = re.findall(r"([A-Za-z0-9_]+)\s*:\s*(\d+)", dims_text)
            if not pairs:
                raise ParseError(lineno, f"no dims entries in {dims_text!r}")
            dims = {k: int(v) for k, v in pairs}
            for v in dims:
                if v not in quiver.vertices:
                    raise ParseError(lineno, f"unknown vertex {v!r} in dims")
            rest = rest.strip()
            maps: dict[str, list[list[Fraction]]] = {}
            if rest.startswith("maps"):
                maps_text, rest = _parse_braced(rest[len("maps"):], lineno)
                for mm in re.finditer(r"([A-Za-z0-9_]+)\s*:\s*(\[\[.*?\]\])", maps_text, re.S):
                    arrow, mat = mm.group(1), mm.group(2)
                    if arrow not in amap:
                        raise ParseError(lineno, f"unknown arrow {arrow!r} in maps")
                    maps[arrow] = _parse_matrix(mat, lineno)
            try:
                modules[name] = Representation(algebra, dims, maps)
            except PresentationError as e:
                raise ParseError(lineno, str(e))
            order.append(name)
            continue
        if "+" in body:
            parts = [p.strip() for p in body.split("+")]
            if not all(_NAME.match(p) for p in parts):
                raise ParseError(lineno, f"bad sum {body!r}")
            missing = [p for p in parts if p not in modules]
            if missing:
                raise ParseError(lineno, f"undefined module name {missing[0]!r}")
            rep = modules[parts[0]]
            for p in parts[1:]:
                rep = rep.direct_sum(modules[p])
            modules[name] = rep
            summands[name] = parts
            order.append(name)
            continue
        if body in modules:
            modules[name] = modules[body]
            summands[name] = [body]
            order.append(name)
            continue
        raise ParseError(lineno, f"unrecognized module body {body!r}")
    return SessionFile(algebra, modules, summands, order)


def parse_presentation(text: str, lmax: int = 30) -> BoundQuiver:
    """Parse just the bound quiver (modules allowed but ignored)."""
    return parse_session(text, lmax=lmax).algebra


def _format_coeff(c: Fraction) -> str:
    return str(c)


def serialize_presentation(algebra: BoundQuiver) -> str:
    lines = ["vertices: " + " ".join(algebra.quiver.vertices)]
    for name, s, t in algebra.quiver.arrows:
        lines.append(f"arrow {name}: {s} -> {t}")
    for g in algebra.relations:
        terms = []
        for i, (p, c) in enumerate(g.items()):
            word = "*".join(p.arrows)
            mag = abs(c)
            body = word if mag == 1 else f"{_format_coeff(mag)}*{word}"
            if i == 0:
                terms.append(body if c > 0 else f"- {body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        lines.append("relation " + " ".join(terms))
    return "\n".join(lines) + "\n"
