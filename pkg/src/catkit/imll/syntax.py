"""IMLL formulas, sequents, proof trees and their text syntax."""
import re
from dataclasses import dataclass

from ..errors import ParseError


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class One:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Lolli:
    left: object
    right: object

    def __str__(self):
        return f"({self.left} -o {self.right})"


ONE = One()


def atoms_of(f, acc=None):
    acc = [] if acc is None else acc
    if isinstance(f, Atom):
        if f.name not in acc:
            acc.append(f.name)
    elif isinstance(f, (Tensor, Lolli)):
        atoms_of(f.left, acc)
        atoms_of(f.right, acc)
    return acc


@dataclass(frozen=True)
class Sequent:
    context: tuple
    conclusion: object

    def __str__(self):
        return f"{', '.join(map(str, self.context))} |- {self.conclusion}".lstrip()


RULES = {
    # tag: (number of position arguments, number of sub-proofs)
    "ax": (0, 0), "1r": (0, 0), "1l": (1, 1), "xchg": (1, 1), "tr": (0, 2),
    "tl": (1, 1), "lr": (0, 1), "ll": (1, 2), "cut": (1, 2),
}


@dataclass(frozen=True)
class ProofTree:
    rule: str
    premises: tuple = ()
    pos: int = None
    formula: object = None      # only for ax
    line: int = 0
    col: int = 0

    def __str__(self):
        parts = [self.rule]
        if self.formula is not None:
            parts.append(str(self.formula))
        if self.pos is not None:
            parts.append(str(self.pos))
        parts.extend(str(p) for p in self.premises)
        return "(" + " ".join(parts) + ")"


_TOKEN = re.compile(r"\s+|(?P<tok>\(|\)|\*|-o|1[lr]\b|[a-z][a-zA-Z0-9_]*|\d+)")


def _tokens(text):
    out = []
    i, line, col = 0, 1, 1
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        tok = m.group("tok")
        if tok is not None:
            out.append((tok, line, col))
        chunk = m.group(0)
        nl = chunk.count("\n")
        if nl:
            line += nl
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        i = m.end()
    return out, (line, col)


class _Parser:
    def __init__(self, text):
        self.toks, self.end = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None,) + self.end

    def take(self, expected=None):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input", *self.end)
        if expected is not None and tok[0] != expected:
            raise ParseError(f"expected {expected!r}, found {tok[0]!r}", tok[1], tok[2])
        self.i += 1
        return tok

    def done(self):
        tok = self.peek()
        if tok[0] is not None:
            raise ParseError(f"trailing input {tok[0]!r}", tok[1], tok[2])

    def formula(self):
        tok, line, col = self.take()
        if tok == "1":
            return ONE
        if re.fullmatch(r"[a-z][a-zA-Z0-9_]*", tok):
            return Atom(tok)
        if tok != "(":
            raise ParseError(f"expected a formula, found {tok!r}", line, col)
        left = self.formula()
        op, l2, c2 = self.take()
        if op not in ("*", "-o"):
            raise ParseError(f"expected '*' or '-o', found {op!r}", l2, c2)
        right = self.formula()
        self.take(")")
        return Tensor(left, right) if op == "*" else Lolli(left, right)

    def nat(self):
        tok, line, col = self.take()
        if not tok.isdigit():
            raise ParseError(f"expected a position, found {tok!r}", line, col)
        return int(tok)

    def proof(self):
        _, line, col = self.take("(")
        tag, tl, tc = self.take()
        if tag not in RULES:
            raise ParseError(f"unknown rule {tag!r}", tl, tc)
        npos, nsub = RULES[tag]
        formula = self.formula() if tag == "ax" else None
        pos = self.nat() if npos else None
        subs = tuple(self.proof() if self.peek()[0] == "(" else self._arity(tag) for _ in range(nsub))
        if self.peek()[0] != ")":
            tok = self.peek()
            raise ParseError(f"rule {tag!r} takes {nsub} sub-proof(s)", tok[1], tok[2])
        self.take(")")
        return ProofTree(tag, subs, pos, formula, line, col)

    def _arity(self, tag):
        tok = self.peek()
        raise ParseError(f"rule {tag!r} is missing a sub-proof", tok[1], tok[2])


def parse_formula(text):
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_proof(text):
    p = _Parser(text)
    t = p.proof()
    p.done()
    return t
