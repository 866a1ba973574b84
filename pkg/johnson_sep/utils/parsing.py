"""
Parsing
=======

Automorphism recipes and file loaders.

Recipe grammar::

    expr    := call | name
    call    := IDENT '(' [arg (',' arg)*] ')'
    arg     := expr | INT
    name    := id | K<i>_<j> | C<i>_<j>_<k> | R<i>_<j> | L<i>_<j> | I<i> | S<i>_<j>
    calls   := phi(e) | comm(x, y, ...) | compose(x, y, ...) | inv(x) | pow(x, k)

``K`` is the conjugation move, ``C`` the commutator move and ``R/L/I/S`` the
Nielsen moves (right and left transvection, inversion, swap).
"""

import json
import re
from pathlib import Path

from ..errors import AutomorphismError, WordParseError
from ..models.automorphism import AutomorphismFile
from ..models.push import HomologyModelFile, PushDatum
from ..tools.freegroup import (
    Automorphism,
    Endomorphism,
    NielsenKind,
    NielsenMove,
    automorphism_power,
    commutator_move,
    compose_all,
    conjugation_move,
    identity_automorphism,
    nested_commutator,
    nielsen,
    parse_word,
    phi_automorphism,
    verify_automorphism,
)
from ..tools.intlattice import IntMatrix
from ..tools.surface import HomologyModel

_TOKENS = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<punct>[(),]))")
_NAME = re.compile(r"^([KCRLIS])(\d+(?:_\d+)*)$")
_ARITY = {"K": 2, "C": 3, "R": 2, "L": 2, "I": 1, "S": 2}
_NIELSEN = {
    "R": NielsenKind.RIGHT_TRANSVECTION,
    "L": NielsenKind.LEFT_TRANSVECTION,
    "I": NielsenKind.INVERSION,
    "S": NielsenKind.SWAP,
}


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKENS.match(text, pos)
        if not match or match.end() == pos:
            raise WordParseError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        kind = match.lastgroup or ""
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class RecipeParser:
    """Recursive-descent parser from recipe text to an Automorphism of F_rank."""

    def __init__(self, text: str, rank: int):
        self.text = text
        self.rank = rank
        self.tokens = _tokenize(text)
        self.pos = 0

    def parse(self) -> Automorphism:
        if not self.tokens:
            raise WordParseError("empty recipe")
        result = self._expr()
        if self.pos != len(self.tokens):
            raise WordParseError(f"trailing input after position {self.pos} in {self.text!r}")
        return result

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _take(self, kind: str, value: str | None = None) -> str:
        token = self._peek()
        if token is None or token[0] != kind or (value is not None and token[1] != value):
            expected = value or kind
            raise WordParseError(f"expected {expected!r} at token {self.pos} in {self.text!r}")
        self.pos += 1
        return token[1]

    def _expr(self) -> Automorphism:
        ident = self._take("ident")
        token = self._peek()
        if token == ("punct", "("):
            return self._call(ident)
        return self._name(ident)

    def _args(self) -> list[Automorphism | int]:
        self._take("punct", "(")
        args: list[Automorphism | int] = []
        if self._peek() == ("punct", ")"):
            self._take("punct", ")")
            return args
        while True:
            token = self._peek()
            if token is not None and token[0] == "int":
                args.append(int(self._take("int")))
            else:
                args.append(self._expr())
            if self._peek() == ("punct", ","):
                self._take("punct", ",")
                continue
            self._take("punct", ")")
            return args

    def _call(self, ident: str) -> Automorphism:
        args = self._args()
        maps = [a for a in args if isinstance(a, Automorphism)]
        ints = [a for a in args if isinstance(a, int)]

        if ident == "phi":
            if len(args) != 1 or len(ints) != 1:
                raise WordParseError("phi takes one integer exponent")
            return phi_automorphism(self.rank, ints[0])
        if ident == "inv":
            if len(args) != 1 or len(maps) != 1:
                raise WordParseError("inv takes one automorphism")
            return maps[0].inverse
        if ident == "pow":
            if len(args) != 2 or not isinstance(args[0], Automorphism) or not isinstance(args[1], int):
                raise WordParseError("pow takes an automorphism and an integer")
            return automorphism_power(args[0], args[1])
        if ident in ("compose", "comm"):
            if ints or len(maps) < 2:
                raise WordParseError(f"{ident} takes at least two automorphisms")
            return compose_all(maps) if ident == "compose" else nested_commutator(maps)
        raise WordParseError(f"unknown function {ident!r}")

    def _name(self, ident: str) -> Automorphism:
        if ident == "id":
            return identity_automorphism(self.rank)
        match = _NAME.match(ident)
        if not match:
            raise WordParseError(f"unknown generator name {ident!r}")
        letter = match.group(1)
        indices = [int(x) for x in match.group(2).split("_")]
        if len(indices) != _ARITY[letter]:
            raise WordParseError(f"{letter} takes {_ARITY[letter]} indices, got {ident!r}")
        for idx in indices:
            if not 1 <= idx <= self.rank:
                raise WordParseError(f"index {idx} outside 1..{self.rank} in {ident!r}")
        if letter == "K":
            return conjugation_move(self.rank, *indices)
        if letter == "C":
            return commutator_move(self.rank, *indices)
        i, j = (indices + [0])[:2]
        return nielsen(self.rank, NielsenMove(_NIELSEN[letter], i, j))


def parse_recipe(text: str, rank: int) -> Automorphism:
    return RecipeParser(text, rank).parse()


# =============================================================================
# File loaders
# =============================================================================


def automorphism_from_file(data: AutomorphismFile) -> Automorphism:
    fwd = Endomorphism(data.rank, tuple(parse_word(t, data.rank) for t in data.forward))
    bwd = Endomorphism(data.rank, tuple(parse_word(t, data.rank) for t in data.backward))
    f = Automorphism(fwd, bwd, data.name)
    if not verify_automorphism(f):
        raise AutomorphismError(f"forward and backward images in {data.name or 'file'} are not inverse")
    return f


def load_automorphism(path: str | Path) -> Automorphism:
    data = AutomorphismFile.model_validate_json(Path(path).read_text())
    return automorphism_from_file(data)


def load_homology_model(path: str | Path) -> HomologyModel:
    data = HomologyModelFile.model_validate_json(Path(path).read_text())
    return HomologyModel(IntMatrix.from_rows(data.pairing), genus=data.genus)


def load_push_data(path: str | Path) -> list[PushDatum]:
    raw = json.loads(Path(path).read_text())
    if not isinstance(raw, list):
        raise WordParseError("push data file must hold a JSON list")
    return [PushDatum.model_validate(item) for item in raw]
