"""Exact sparse Laurent polynomials over named integer exponent lattices.

A polynomial is a finite integer combination of monomials
``c * v1^e1 * ... * vr^er`` where the exponents ``e_i`` may be negative.
Terms are stored sparsely as a dict from exponent tuples to nonzero
coefficients, so every operation is exact (Python integers never
overflow) and equality testing is reliable.  Values are immutable after
construction; all operations return new polynomials.

The canonical term order is lexicographic on exponent vectors with the
first variable most significant, which makes iteration, ``to_text`` and
hashing deterministic.

Text grammar (whitespace-insensitive)::

    poly   := term (("+"|"-") term)*  |  "0"
    term   := [sign] integer ("*" factor)*  |  [sign] factor ("*" factor)*
    factor := ident ["^" [sign] integer]
    ident  := letter (letter | digit | "_")*

A leading bare integer is the coefficient (default 1); a factor without
``^`` has exponent 1.  Examples: ``"-3*m2^-2 + 9"``, ``"t - t^-1"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParseError, StructuralError, UnknownVariableError

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

ExponentVector = tuple  # alias for readability in signatures


@dataclass(frozen=True)
class Basis:
    """Ordered collection of distinct variable names labelling lattice directions."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise StructuralError("a basis needs at least one variable")
        seen = set()
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise StructuralError(f"invalid variable name {name!r}")
            if name in seen:
                raise StructuralError(f"duplicate variable name {name!r}")
            seen.add(name)

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariableError(
                f"unknown variable {name!r}; basis is ({', '.join(self.names)})"
            ) from None

    def unit(self, name: str) -> tuple[int, ...]:
        """Exponent vector with a single 1 in the named direction."""
        i = self.index(name)
        return tuple(1 if j == i else 0 for j in range(len(self.names)))

    @property
    def origin(self) -> tuple[int, ...]:
        return (0,) * len(self.names)


def _check_exponent(basis: Basis, exp) -> tuple[int, ...]:
    exp = tuple(exp)
    if len(exp) != basis.rank:
        raise StructuralError(
            f"exponent vector {exp} has length {len(exp)}, basis rank is {basis.rank}"
        )
    for e in exp:
        if not isinstance(e, int):
            raise StructuralError(f"exponent entries must be integers, got {e!r}")
    return exp


class LaurentPoly:
    """Immutable exact Laurent polynomial over a :class:`Basis`.

    Supports the ring operations through the usual operators (``+``,
    ``-``, ``*``, ``**`` with nonnegative exponent); integers coerce to
    constants.  Mixing operands over different bases raises
    :class:`StructuralError`.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: Basis, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, ...], int] = {}
        for exp, coeff in items:
            exp = _check_exponent(basis, exp)
            if not isinstance(coeff, int):
                raise StructuralError(f"coefficients must be integers, got {coeff!r}")
            coeff += acc.get(exp, 0)
            if coeff:
                acc[exp] = coeff
            else:
                acc.pop(exp, None)
        self.basis = basis
        self._terms = acc

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, basis: Basis) -> LaurentPoly:
        return cls(basis)

    @classmethod
    def one(cls, basis: Basis) -> LaurentPoly:
        return cls(basis, {basis.origin: 1})

    @classmethod
    def constant(cls, basis: Basis, value: int) -> LaurentPoly:
        return cls(basis, {basis.origin: value})

    @classmethod
    def variable(cls, basis: Basis, name: str) -> LaurentPoly:
        return cls(basis, {basis.unit(name): 1})

    # -- views -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        """Terms as (exponent, coefficient) pairs in canonical order."""
        return tuple(sorted(self._terms.items()))

    def support(self) -> tuple[tuple[int, ...], ...]:
        """Exponent vectors carrying a nonzero coefficient, in canonical order."""
        return tuple(sorted(self._terms))

    def coeff(self, exp) -> int:
        return self._terms.get(_check_exponent(self.basis, exp), 0)

    def coefficients(self) -> tuple[int, ...]:
        """Coefficients in canonical term order."""
        return tuple(c for _, c in self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring structure ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.basis != self.basis:
                raise StructuralError(
                    f"basis mismatch: ({', '.join(self.basis.names)}) vs "
                    f"({', '.join(other.basis.names)})"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.basis, other)
        return None

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = acc.get(exp, 0) + coeff
            if total:
                acc[exp] = total
            else:
                acc.pop(exp, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result.basis = self.basis
        result._terms = acc
        return result

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        result = LaurentPoly.__new__(LaurentPoly)
        result.basis = self.basis
        result._terms = {exp: -c for exp, c in self._terms.items()}
        return result

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[tuple[int, ...], int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                total = acc.get(exp, 0) + ca * cb
                if total:
                    acc[exp] = total
                else:
                    acc.pop(exp, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result.basis = self.basis
        result._terms = acc
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"polynomial power must be a nonnegative integer, got {k!r}")
        result = LaurentPoly.one(self.basis)
        square = self
        while k:
            if k & 1:
                result = result * square
            k >>= 1
            if k:
                square = square * square
        return result

    # -- lattice maps ------------------------------------------------

    def conjugate(self) -> LaurentPoly:
        """Negate every exponent vector (the t -> 1/t involution)."""
        result = LaurentPoly.__new__(LaurentPoly)
        result.basis = self.basis
        result._terms = {tuple(-e for e in exp): c for exp, c in self._terms.items()}
        return result

    def reindex(self, target: Basis, images: Mapping[str, Sequence[int]]) -> LaurentPoly:
        """Push the polynomial along a lattice map into ``target``.

        ``images`` assigns a target exponent vector to every source
        variable; a source term with exponent vector ``e`` lands on
        ``sum_i e_i * images[name_i]``.  Coefficients of colliding terms
        are summed.  The substitution t -> t_m^2 used when a knot's
        polynomial enters a larger lattice is ``reindex(basis,
        {"t": 2 * unit(m)})`` in this form.
        """
        missing = [n for n in self.basis.names if n not in images]
        if missing:
            raise StructuralError(f"reindex images missing variables: {', '.join(missing)}")
        extra = [n for n in images if n not in self.basis.names]
        if extra:
            raise StructuralError(f"reindex images for unknown variables: {', '.join(extra)}")
        columns = [_check_exponent(target, images[name]) for name in self.basis.names]
        acc: dict[tuple[int, ...], int] = {}
        for exp, coeff in self._terms.items():
            new = [0] * target.rank
            for e, col in zip(exp, columns):
                if e:
                    for j, cj in enumerate(col):
                        new[j] += e * cj
            key = tuple(new)
            total = acc.get(key, 0) + coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result.basis = target
        result._terms = acc
        return result

    def eval_ones(self) -> int:
        """Value at the all-ones point: the sum of all coefficients."""
        return sum(self._terms.values())

    # -- equality / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == LaurentPoly.constant(self.basis, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.basis == other.basis and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.basis, tuple(sorted(self._terms.items()))))

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({to_text(self)!r}, basis=({', '.join(self.basis.names)}))"


def monomial(basis: Basis, coeff: int, exp) -> LaurentPoly:
    """Single-term polynomial ``coeff * prod(v_i^exp_i)``; zero if coeff is 0."""
    exp = _check_exponent(basis, exp)
    if not isinstance(coeff, int):
        raise StructuralError(f"coefficients must be integers, got {coeff!r}")
    return LaurentPoly(basis, {exp: coeff} if coeff else {})


# -- canonical text form ----------------------------------------------


def _term_body(basis: Basis, magnitude: int, exp: tuple[int, ...]) -> str:
    factors = [
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(basis.names, exp)
        if e != 0
    ]
    if not factors:
        return str(magnitude)
    if magnitude == 1:
        return "*".join(factors)
    return f"{magnitude}*" + "*".join(factors)


def to_text(poly: LaurentPoly) -> str:
    """Deterministic text form: canonical term order, explicit signs."""
    if poly.is_zero:
        return "0"
    pieces = []
    for exp, coeff in poly.terms():
        body = _term_body(poly.basis, abs(coeff), exp)
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", position=i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, basis: Basis):
        self.tokens = _tokenize(text)
        self.basis = basis
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse_poly(self) -> LaurentPoly:
        acc: dict[tuple[int, ...], int] = {}
        self.read_term(acc, 1)
        while True:
            kind, _, at = self.peek()
            if kind == "end":
                break
            if kind == "+":
                self.advance()
                self.read_term(acc, 1)
            elif kind == "-":
                self.advance()
                self.read_term(acc, -1)
            else:
                raise ParseError("expected '+', '-' or end of input", position=at)
        return LaurentPoly(self.basis, acc)

    def read_sign(self) -> int:
        kind, _, _ = self.peek()
        if kind == "+":
            self.advance()
            return 1
        if kind == "-":
            self.advance()
            return -1
        return 1

    def read_int(self) -> int:
        sign = self.read_sign()
        kind, value, at = self.peek()
        if kind != "int":
            raise ParseError("expected an integer", position=at)
        self.advance()
        return sign * value

    def read_factor(self, exp: list[int]) -> None:
        kind, value, at = self.peek()
        if kind != "ident":
            raise ParseError("expected a variable name", position=at)
        self.advance()
        try:
            idx = self.basis.index(value)
        except UnknownVariableError:
            raise UnknownVariableError(
                f"unknown variable {value!r}; basis is ({', '.join(self.basis.names)})",
                position=at,
            ) from None
        power = 1
        if self.peek()[0] == "^":
            self.advance()
            power = self.read_int()
        exp[idx] += power

    def read_term(self, acc: dict, outer_sign: int) -> None:
        sign = outer_sign * self.read_sign()
        kind, value, at = self.peek()
        exp = [0] * self.basis.rank
        if kind == "int":
            self.advance()
            coeff = value
        elif kind == "ident":
            coeff = 1
            self.read_factor(exp)
        else:
            raise ParseError("expected an integer or a variable name", position=at)
        while self.peek()[0] == "*":
            self.advance()
            self.read_factor(exp)
        key = tuple(exp)
        total = acc.get(key, 0) + sign * coeff
        if total:
            acc[key] = total
        else:
            acc.pop(key, None)


def from_text(text: str, basis: Basis) -> LaurentPoly:
    """Parse the canonical polynomial grammar over the given basis.

    Raises :class:`ParseError` (with position) on malformed input and
    :class:`UnknownVariableError` for identifiers outside the basis.
    ``from_text(to_text(p), p.basis) == p`` for every polynomial.
    """
    return _Parser(text, basis).parse_poly()
