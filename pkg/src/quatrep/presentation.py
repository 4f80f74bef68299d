"""Words in two generators and two-generator presentations.

Letters are stored as single characters: ``a`` and ``b`` for the generators,
``A`` and ``B`` for their inverses.  Printing uses caret syntax (``a^-1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd

from .errors import ArgumentError, EmptyWordError, WordSyntaxError

LETTERS = ("a", "b", "A", "B")
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
_TOKEN = re.compile(r"([abAB1])(?:\^(\{?)(-?\d+)(\}?))?")


def _reduce(letters):
    out = []
    for c in letters:
        if out and out[-1] == _INVERSE[c]:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """Freely reduced word in ``a``, ``b`` and their inverses."""

    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for c in letters:
            if c not in _INVERSE:
                raise WordSyntaxError(f"invalid letter {c!r}")
        object.__setattr__(self, "letters", _reduce(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other):
        return word_concat(self, other)

    def inverse(self):
        return word_inverse(self)

    def __str__(self):
        if not self.letters:
            return "1"
        return "".join(c if c.islower() else c.lower() + "^-1" for c in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


IDENTITY = Word()


def word_inverse(w: Word) -> Word:
    return Word(tuple(_INVERSE[c] for c in reversed(w.letters)))


def word_concat(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters)


def parse_word(text: str) -> Word:
    """Parse a word such as ``"ba^-1b^-1a"`` or ``"bABa"``.

    Whitespace is ignored.  ``1`` denotes the identity and integer
    exponents ``x^n`` are expanded.
    """
    s = "".join(text.split())
    letters = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:
            what = "malformed exponent" if s[pos] == "^" else f"unexpected character {s[pos]!r}"
            raise WordSyntaxError(f"{what} at position {pos} in {text!r}")
        base, brace_open, exp, brace_close = m.groups()
        if bool(brace_open) != bool(brace_close):
            raise WordSyntaxError(f"malformed exponent at position {pos} in {text!r}")
        if base != "1":
            n = 1 if exp is None else int(exp)
            letters.extend([base if n >= 0 else _INVERSE[base]] * abs(n))
        pos = m.end()
    return Word(tuple(letters))


@dataclass(frozen=True)
class Presentation:
    """Two-generator, one-relation presentation.

    ``rhs is None`` is the relator form ``lhs = 1``; otherwise the balanced
    form ``lhs = rhs``.
    """

    lhs: Word
    rhs: Word | None = None
    label: str | None = field(default=None, compare=False)

    @property
    def is_balanced(self):
        return self.rhs is not None

    def sides(self):
        """Return ``(w1, w2)`` with the relation read as ``w1 = w2``."""
        return self.lhs, (IDENTITY if self.rhs is None else self.rhs)

    @property
    def relator(self):
        w1, w2 = self.sides()
        return word_concat(w1, word_inverse(w2))

    def __str__(self):
        if self.rhs is None:
            return str(self.lhs)
        return f"{self.lhs}={self.rhs}"

    def to_json(self):
        d = {"relator": str(self.lhs)} if self.rhs is None else {"lhs": str(self.lhs), "rhs": str(self.rhs)}
        if self.label:
            d["label"] = self.label
        return d

    @classmethod
    def from_json(cls, d):
        if "relator" in d:
            return cls(parse_word(d["relator"]), None, d.get("label"))
        return cls(parse_word(d["lhs"]), parse_word(d["rhs"]), d.get("label"))


def Relator(w, label=None):
    return Presentation(w if isinstance(w, Word) else parse_word(w), None, label)


def Balanced(w1, w2, label=None):
    w1 = w1 if isinstance(w1, Word) else parse_word(w1)
    w2 = w2 if isinstance(w2, Word) else parse_word(w2)
    return Presentation(w1, w2, label)


def parse_presentation(text: str, label=None) -> Presentation:
    """Parse ``"w"`` (relator form) or ``"w1 = w2"`` (balanced form).

    Raises
    ------
    WordSyntaxError
        On bad characters or more than one ``=``.
    EmptyWordError
        When no side contains any token.
    """
    parts = text.split("=")
    if len(parts) > 2:
        raise WordSyntaxError(f"more than one '=' in {text!r}")
    if all(not p.strip() for p in parts):
        raise EmptyWordError("presentation has no tokens on either side")
    if len(parts) == 1:
        return Presentation(parse_word(parts[0]), None, label)
    return Presentation(parse_word(parts[0]), parse_word(parts[1]), label)


def two_bridge(p: int, q: int) -> Presentation:
    """Standard presentation ``a v = v b`` of the 2-bridge knot group ``(p, q)``.

    ``v = b^e1 a^e2 b^e3 ...`` has ``p - 1`` letters with
    ``e_i = (-1)^floor(i q / p)``.
    """
    if not isinstance(p, int) or not isinstance(q, int):
        raise ArgumentError("p and q must be integers")
    if p <= 1 or p % 2 == 0:
        raise ArgumentError(f"p must be an odd integer > 1 (knot case), got {p}")
    if not 0 < q < p or gcd(p, q) != 1:
        raise ArgumentError(f"q must satisfy 0 < q < p and gcd(p, q) = 1, got q={q}")
    letters = []
    for i in range(1, p):
        g = "b" if i % 2 == 1 else "a"
        letters.append(g if (i * q // p) % 2 == 0 else _INVERSE[g])
    v = Word(tuple(letters))
    a, b = Word(("a",)), Word(("b",))
    return Presentation(word_concat(a, v), word_concat(v, b), f"2-bridge({p},{q})")
