"""Hereditarily finite values: exact numbers, symbols, pairs, canonical sets.

Everything this library manipulates is a Value: an exact rational number,
a symbol, an ordered pair of Values, or a finite set of Values.  Values
are immutable, hashable, and totally ordered; a set keeps its elements
sorted and duplicate-free, so structural equality coincides with
canonical-form equality.  Because sets may contain pairs and other sets,
relations can themselves be elements of sets and keys of other relations,
which the auction machinery relies on.

Numbers are a single kind: an integer is a rational with denominator one.
All arithmetic is exact, so prices and valuations never touch floating
point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

NUM, SYM, PAIR, SET = 0, 1, 2, 3

# symbols that could be read back as numbers would break the text encoding
_NUMBER_LOOKALIKE = re.compile(r"-?[0-9]+(/[0-9]+)?\Z")


class Value:
    """A canonical, immutable node of the value universe.

    The total order puts numbers before symbols before pairs before sets;
    numbers compare by magnitude, symbols lexicographically, pairs and
    sets lexicographically by component.  The order is stable across runs
    and is what every deterministic output in the package is sorted by.
    """

    __slots__ = ("kind", "payload", "_key", "_hash")

    def __init__(self, kind: int, payload, key, h: int):
        self.kind = kind
        self.payload = payload
        self._key = key
        # hashes are combined structurally from cached child hashes so
        # deep values never re-hash their numeric leaves
        self._hash = h

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Value)
            and self._hash == other._hash
            and self._key == other._key
        )

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key

    def __hash__(self):
        return self._hash

    @property
    def is_num(self) -> bool:
        return self.kind == NUM

    @property
    def is_sym(self) -> bool:
        return self.kind == SYM

    @property
    def is_pair(self) -> bool:
        return self.kind == PAIR

    @property
    def is_set(self) -> bool:
        return self.kind == SET

    @property
    def first(self) -> "Value":
        if self.kind != PAIR:
            raise TypeError(f"not a pair: {self!r}")
        return self.payload[0]

    @property
    def second(self) -> "Value":
        if self.kind != PAIR:
            raise TypeError(f"not a pair: {self!r}")
        return self.payload[1]

    @property
    def elements(self) -> tuple:
        """Elements of a set, in canonical (strictly increasing) order."""
        if self.kind != SET:
            raise TypeError(f"not a set: {self!r}")
        return self.payload

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        if self.kind != SET:
            raise TypeError(f"not a set: {self!r}")
        return len(self.payload)

    def __repr__(self):
        return _text(self)


def _text(v: Value) -> str:
    if v.kind == NUM:
        f = v.payload
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if v.kind == SYM:
        return f'"{v.payload}"'
    if v.kind == PAIR:
        return f"({_text(v.payload[0])}, {_text(v.payload[1])})"
    return "{" + ", ".join(_text(e) for e in v.payload) + "}"


_INT_CACHE: dict = {}


def num(x) -> Value:
    """Numeric atom from an int or Fraction; always stored reduced."""
    if isinstance(x, bool):
        raise TypeError("booleans are not values")
    if isinstance(x, int):
        cached = _INT_CACHE.get(x)
        if cached is not None:
            return cached
        v = Value(NUM, Fraction(x), (NUM, Fraction(x)), hash((NUM, x)))
        if -64 <= x <= 1024:
            _INT_CACHE[x] = v
        return v
    if not isinstance(x, Fraction):
        raise TypeError(f"not a number: {x!r}")
    if x.denominator == 1:
        return num(x.numerator)
    return Value(NUM, x, (NUM, x), hash((NUM, x)))


def rat(numerator: int, denominator: int) -> Value:
    """Exact rational; rejects a zero denominator."""
    if denominator == 0:
        raise ValueError("rational with zero denominator")
    return num(Fraction(numerator, denominator))


def sym(name: str) -> Value:
    if not isinstance(name, str) or not name:
        raise TypeError("symbol name must be a nonempty string")
    if _NUMBER_LOOKALIKE.match(name):
        raise ValueError(f"symbol {name!r} would be read back as a number")
    if '"' in name or "\\" in name or any(ord(c) < 32 for c in name):
        raise ValueError(f"symbol {name!r} contains quote or control characters")
    return Value(SYM, name, (SYM, name), hash((SYM, name)))


def pair(a, b) -> Value:
    a = canonicalize(a)
    b = canonicalize(b)
    return Value(PAIR, (a, b), (PAIR, a._key, b._key), hash((PAIR, a._hash, b._hash)))


def fset(items: Iterable = ()) -> Value:
    """Finite set: deduplicates and sorts its elements."""
    seen = {}
    for item in items:
        v = canonicalize(item)
        seen[v] = None
    elems = tuple(sorted(seen, key=lambda v: v._key))
    return Value(
        SET,
        elems,
        (SET, tuple(e._key for e in elems)),
        hash((SET, tuple(e._hash for e in elems))),
    )


def canonicalize(obj) -> Value:
    """Canonical Value from a raw tree.

    Accepts Values (returned unchanged, so the function is idempotent),
    ints and Fractions, strings (symbols), 2-tuples (pairs), and
    lists/sets/frozensets (finite sets).
    """
    if isinstance(obj, Value):
        return obj
    if isinstance(obj, bool):
        raise TypeError("booleans are not values")
    if isinstance(obj, (int, Fraction)):
        return num(obj)
    if isinstance(obj, str):
        return sym(obj)
    if isinstance(obj, tuple):
        if len(obj) != 2:
            raise TypeError(f"tuples denote pairs and must have length 2: {obj!r}")
        return pair(obj[0], obj[1])
    if isinstance(obj, (list, set, frozenset)):
        return fset(obj)
    raise TypeError(f"cannot interpret {obj!r} as a value")


V = canonicalize

EMPTY = fset()

# reserved marker returned by partial lookups; see the_elem
UNDEFINED = sym("⊥")


def is_undefined(v: Value) -> bool:
    return v == UNDEFINED


def _require_set(v, what: str = "argument") -> Value:
    if not isinstance(v, Value) or v.kind != SET:
        raise TypeError(f"{what} must be a finite set, got {v!r}")
    return v


def size(s: Value) -> int:
    return len(_require_set(s).elements)


def member(x, s: Value) -> bool:
    _require_set(s)
    return canonicalize(x) in s.payload


def is_subset(a: Value, b: Value) -> bool:
    _require_set(a, "left argument")
    _require_set(b, "right argument")
    members = frozenset(b.payload)
    return all(e in members for e in a.payload)


def union(a: Value, b: Value) -> Value:
    _require_set(a, "left argument")
    _require_set(b, "right argument")
    return fset(a.payload + b.payload)


def intersection(a: Value, b: Value) -> Value:
    _require_set(a, "left argument")
    _require_set(b, "right argument")
    members = frozenset(b.payload)
    return fset(e for e in a.payload if e in members)


def difference(a: Value, b: Value) -> Value:
    _require_set(a, "left argument")
    _require_set(b, "right argument")
    members = frozenset(b.payload)
    return fset(e for e in a.payload if e not in members)


def cartesian_product(a: Value, b: Value) -> Value:
    _require_set(a, "left argument")
    _require_set(b, "right argument")
    return fset(pair(x, y) for x in a.payload for y in b.payload)


def big_union(s: Value) -> Value:
    """Union of a set of sets."""
    _require_set(s)
    out = []
    for block in s.payload:
        _require_set(block, "member of the union")
        out.extend(block.payload)
    return fset(out)


def the_elem(s: Value) -> Value:
    """The sole element of a singleton; UNDEFINED for any other set."""
    _require_set(s)
    if len(s.payload) == 1:
        return s.payload[0]
    return UNDEFINED


def as_fraction(v: Value) -> Fraction:
    if not isinstance(v, Value) or v.kind != NUM:
        raise TypeError(f"not a numeric atom: {v!r}")
    return v.payload


def _require_numeric(s: Value, op: str) -> Value:
    _require_set(s)
    if not s.payload:
        raise ValueError(f"{op} of an empty set")
    for e in s.payload:
        if e.kind != NUM:
            raise ValueError(f"{op} over a non-numeric element: {e!r}")
    return s


def min_of(s: Value) -> Value:
    # canonical order on numeric atoms is numeric order, so the first
    # element of the sorted payload is the minimum
    return _require_numeric(s, "minimum").payload[0]


def max_of(s: Value) -> Value:
    return _require_numeric(s, "maximum").payload[-1]
