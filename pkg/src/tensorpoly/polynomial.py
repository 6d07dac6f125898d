"""Sparse multivariate polynomials with exact integer coefficients.

A :class:`MultiPoly` maps monomials to nonzero Python ``int`` coefficients.
Monomials are tuples of ``(variable, exponent)`` pairs sorted by variable
name, with zero exponents never stored, so ``()`` is the constant monomial.

Variables are plain strings.  Structured names such as ``"beta:e2"`` or
``"gamma:0"`` are ordinary variables as far as this module is concerned.
"""
from __future__ import annotations

import re
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]

# sorts after every real variable name
_END = (chr(0x10FFFF), 0)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def monomial_key(m: Monomial):
    """Sort key putting lexicographically larger monomials first.

    Variables are ordered by name, so with ``x < y`` the order is
    ``x^2, x*y, x, y^2, y, 1``.
    """
    return tuple((v, -e) for v, e in m) + (_END,)


def _as_poly(other) -> "MultiPoly":
    if isinstance(other, MultiPoly):
        return other
    if isinstance(other, int) and not isinstance(other, bool):
        return MultiPoly.const(other)
    raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")


class MultiPoly:
    """Immutable polynomial over named variables with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, int], Iterable[Tuple[Monomial, int]], None] = None):
        acc: Dict[Monomial, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                if not isinstance(c, int) or isinstance(c, bool):
                    raise TypeError(f"coefficients must be int, got {type(c).__name__}")
                key = tuple(sorted((v, e) for v, e in mono if e))
                for _, e in key:
                    if e < 0:
                        raise ValueError("negative exponent in monomial")
                acc[key] = acc.get(key, 0) + c
        self._terms = {m: c for m, c in acc.items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[Monomial, int]) -> "MultiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "MultiPoly":
        if not name:
            raise ValueError("empty variable name")
        return cls._raw({((name, exp),) if exp else (): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: int = 1) -> "MultiPoly":
        return cls({tuple(exponents.items()): coeff})

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls._raw({(): 1})

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda mc: monomial_key(mc[0]))

    def coeff(self, exponents: Mapping[str, int]) -> int:
        key = tuple(sorted((v, e) for v, e in exponents.items() if e))
        return self._terms.get(key, 0)

    def variables(self) -> Tuple[str, ...]:
        return tuple(sorted({v for m in self._terms for v, _ in m}))

    def degree(self, var: str) -> int:
        return max((dict(m).get(var, 0) for m in self._terms), default=0)

    def exponents_of(self, var: str) -> set:
        return {dict(m).get(var, 0) for m in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def substitute(self, assignments: Mapping[str, Union["MultiPoly", int, str]]) -> "MultiPoly":
        """Replace variables by polynomials; unassigned variables pass through.

        Values may be polynomials, ints, or variable names.
        """
        subs = {}
        for k, v in assignments.items():
            subs[k] = MultiPoly.var(v) if isinstance(v, str) else _as_poly(v)
        if not subs:
            return self
        powers: Dict[Tuple[str, int], MultiPoly] = {}
        out = MultiPoly.zero()
        for mono, c in self._terms.items():
            kept = []
            factor = MultiPoly.const(c)
            for v, e in mono:
                if v in subs:
                    key = (v, e)
                    if key not in powers:
                        powers[key] = subs[v] ** e
                    factor = factor * powers[key]
                else:
                    kept.append((v, e))
            out = out + factor * MultiPoly._raw({tuple(kept): 1})
        return out

    # -- rendering ----------------------------------------------------
    def canonical_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.items()):
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            mag = abs(c)
            if not body:
                term = str(mag)
            elif mag == 1:
                term = body
            else:
                term = f"{mag}*{body}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    __str__ = canonical_text

    def __repr__(self):
        return f"MultiPoly({self.canonical_text()!r})"

    def to_json(self) -> list:
        return [{"coeff": c, "exponents": dict(m)} for m, c in self.items()]

    @classmethod
    def from_json(cls, records: list) -> "MultiPoly":
        return cls((tuple(r["exponents"].items()), int(r["coeff"])) for r in records)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Parse the canonical text format (also accepts unsorted input)."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls.zero()
        if s[0] not in "+-":
            s = "+" + s
        out = cls.zero()
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coeff = 1
            exps: Dict[str, int] = {}
            for factor in body.split("*"):
                if re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z_][\w:.]*)(?:\^(\d+))?", factor)
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                exps[m.group(1)] = exps.get(m.group(1), 0) + int(m.group(2) or 1)
            out = out + cls.monomial(exps, -coeff if sign == "-" else coeff)
        if "".join(re.findall(r"[+-][^+-]+", s)) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        return out


def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def substitute(p: MultiPoly, assignments) -> MultiPoly:
    return p.substitute(assignments)


def canonical_text(p: MultiPoly) -> str:
    return p.canonical_text()


def poly_sum(polys: Iterable[MultiPoly]) -> MultiPoly:
    out: Dict[Monomial, int] = {}
    for p in polys:
        for m, c in p._terms.items():
            out[m] = out.get(m, 0) + c
    return MultiPoly._raw({m: c for m, c in out.items() if c})


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)


X, Y, Z, T = (MultiPoly.var(n) for n in "xyzt")
