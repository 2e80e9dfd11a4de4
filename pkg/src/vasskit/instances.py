"""Instance file parsing and canonical serialization.

The format is UTF-8 and line-based; ``#`` starts a comment and blank lines
are ignored.  The first meaningful line names the kind: ``vass``, ``lps``
or ``slps``.  Simple-scheme files carry one vector per ``seg``/``cyc``
line (``seg 0 1``); general LPS files carry a space-separated list of
``x,y`` pairs instead, which may be empty for ``seg``.  An optional
``path n1 n2 ...`` line fixes cycle exponents and an optional
``query sx sy -> tx ty`` line states a reachability question.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Configuration, Lps, PlaneVector, Slps, Vass, Word
from .errors import ParseError


@dataclass(frozen=True)
class Instance:
    """A parsed instance file."""

    kind: str  # "vass" | "lps" | "slps"
    vass: Optional[Vass] = None
    scheme: Optional[Lps] = None
    exponents: Optional[tuple[int, ...]] = None
    query: Optional[tuple[Configuration, Configuration]] = None


def _int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line)


def _pair_list(tokens: list[str], line: int) -> Word:
    letters = []
    for tok in tokens:
        parts = tok.split(",")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(f"expected an x,y pair, got {tok!r}", line)
        letters.append(PlaneVector(_int(parts[0], line), _int(parts[1], line)))
    return tuple(letters)


def _parse_query(tokens: list[str], line: int) -> tuple[Configuration, Configuration]:
    if len(tokens) != 5 or tokens[2] != "->":
        raise ParseError("query syntax is: query sx sy -> tx ty", line)
    try:
        s = Configuration(_int(tokens[0], line), _int(tokens[1], line))
        t = Configuration(_int(tokens[3], line), _int(tokens[4], line))
    except ValueError as exc:
        raise ParseError(str(exc), line)
    return s, t


def parse_instance(text: str) -> Instance:
    """Parse an instance file; raises ParseError with a line number."""
    lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped.split()))
    if not lines:
        raise ParseError("empty instance file")

    lineno, header = lines[0]
    kind = header[0]
    if kind not in ("vass", "lps", "slps") or len(header) != 1:
        raise ParseError(f"unknown instance kind {' '.join(header)!r}", lineno)
    body = lines[1:]
    if kind == "vass":
        return _parse_vass(body)
    return _parse_scheme(kind, body)


def _parse_vass(body) -> Instance:
    states: list[str] = []
    init: set[str] = set()
    final: set[str] = set()
    edges: list[tuple[str, PlaneVector, str]] = []
    query = None
    for lineno, tokens in body:
        key, rest = tokens[0], tokens[1:]
        if key == "states":
            states.extend(rest)
        elif key == "init":
            init.update(rest)
        elif key == "final":
            final.update(rest)
        elif key == "edge":
            if len(rest) != 4:
                raise ParseError("edge syntax is: edge from to dx dy", lineno)
            edges.append((rest[0], PlaneVector(_int(rest[2], lineno), _int(rest[3], lineno)), rest[1]))
        elif key == "query":
            query = _parse_query(rest, lineno)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    declared = set(states)
    for p, _, q in edges:
        for st in (p, q):
            if st not in declared:
                raise ParseError(f"undeclared state {st!r} in edge")
    for st in init | final:
        if st not in declared:
            raise ParseError(f"undeclared state {st!r}")
    vass = Vass(tuple(states), tuple(edges), frozenset(init), frozenset(final))
    return Instance(kind="vass", vass=vass, query=query)


def _parse_scheme(kind: str, body) -> Instance:
    segments: list[tuple[str, Word, int]] = []  # (seg|cyc, word, lineno)
    exponents = None
    query = None
    for lineno, tokens in body:
        key, rest = tokens[0], tokens[1:]
        if key in ("seg", "cyc"):
            if kind == "slps":
                if len(rest) != 2:
                    raise ParseError(f"{key} in a simple scheme takes exactly one vector: {key} x y", lineno)
                word: Word = (PlaneVector(_int(rest[0], lineno), _int(rest[1], lineno)),)
            else:
                word = _pair_list(rest, lineno)
                if key == "cyc" and not word:
                    raise ParseError("cycles must be nonempty", lineno)
            segments.append((key, word, lineno))
        elif key == "path":
            exponents = tuple(_int(tok, lineno) for tok in rest)
        elif key == "query":
            query = _parse_query(rest, lineno)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)

    alphas: list[Word] = []
    betas: list[Word] = []
    pending_alpha: Word = ()
    have_alpha = False
    for key, word, lineno in segments:
        if key == "seg":
            if have_alpha:
                if kind == "slps":
                    raise ParseError("simple scheme segments must alternate seg/cyc", lineno)
                pending_alpha = pending_alpha + word
            else:
                pending_alpha = word
                have_alpha = True
        else:
            alphas.append(pending_alpha if have_alpha else ())
            if kind == "slps" and not have_alpha:
                raise ParseError("simple scheme must start with a seg line", lineno)
            betas.append(word)
            pending_alpha = ()
            have_alpha = False
    alphas.append(pending_alpha if have_alpha else ())
    if kind == "slps" and not have_alpha:
        raise ParseError("simple scheme must end with a seg line")
    try:
        scheme: Lps = Slps(tuple(alphas), tuple(betas)) if kind == "slps" else Lps(tuple(alphas), tuple(betas))
    except ValueError as exc:
        raise ParseError(str(exc))
    if exponents is not None and len(exponents) != scheme.K:
        raise ParseError(f"path line has {len(exponents)} exponents, scheme has {scheme.K} cycles")
    return Instance(kind=kind, scheme=scheme, exponents=exponents, query=query)


def serialize_instance(instance: Instance) -> str:
    """Canonical text form; parse(serialize(x)) == x and round-trips bytes on goldens."""
    out: list[str] = [instance.kind]
    if instance.kind == "vass":
        v = instance.vass
        out.append("states " + " ".join(v.states))
        out.append("init " + " ".join(sorted(v.initial)))
        out.append("final " + " ".join(sorted(v.accepting)))
        for p, vec, q in v.edges:
            out.append(f"edge {p} {q} {vec.x} {vec.y}")
    else:
        s = instance.scheme
        for i, alpha in enumerate(s.alphas):
            out.append(_scheme_line(instance.kind, "seg", alpha))
            if i < s.K:
                out.append(_scheme_line(instance.kind, "cyc", s.betas[i]))
        if instance.exponents is not None:
            out.append("path " + " ".join(str(n) for n in instance.exponents))
    if instance.query is not None:
        src, tgt = instance.query
        out.append(f"query {src.x} {src.y} -> {tgt.x} {tgt.y}")
    return "\n".join(out) + "\n"


def _scheme_line(kind: str, key: str, word: Word) -> str:
    if kind == "slps":
        (v,) = word
        return f"{key} {v.x} {v.y}"
    return (key + " " + " ".join(f"{v.x},{v.y}" for v in word)).rstrip()


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())
