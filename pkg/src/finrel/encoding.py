"""Text encoding of values, bijective on canonical forms.

The wire format is JSON: integers as numbers, rationals as "n/d" strings,
symbols as other strings, pairs as ["pair", a, b], sets as ["set", ...].
Sets may arrive in any order; output is always canonical order, compact,
UTF-8, newline-free.  Strings that look like numbers are rejected as
symbols so that parsing stays unambiguous.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import ParseError, ValidationError
from .values import Value, fset, num, pair, sym

_RATIONAL = re.compile(r"-?[0-9]+/[0-9]+\Z")
_INTEGER = re.compile(r"-?[0-9]+\Z")


def value_from_obj(obj) -> Value:
    """Canonical Value from a decoded JSON object."""
    if isinstance(obj, bool):
        raise ValidationError("booleans are not values")
    if isinstance(obj, int):
        return num(obj)
    if isinstance(obj, float):
        raise ValidationError(f"non-integer number {obj!r}; write rationals as \"n/d\"")
    if isinstance(obj, str):
        if _RATIONAL.match(obj):
            numerator, denominator = obj.split("/")
            if int(denominator) == 0:
                raise ValidationError(f"zero denominator in {obj!r}")
            return num(Fraction(int(numerator), int(denominator)))
        if _INTEGER.match(obj):
            raise ValidationError(f"integer {obj!r} must be a JSON number, not a string")
        try:
            return sym(obj)
        except (TypeError, ValueError) as e:
            raise ValidationError(str(e)) from None
    if isinstance(obj, list):
        if not obj:
            raise ValidationError('untagged array; expected ["set", ...] or ["pair", a, b]')
        tag, rest = obj[0], obj[1:]
        if tag == "pair":
            if len(rest) != 2:
                raise ValidationError(f"pair needs exactly 2 components, got {len(rest)}")
            return pair(value_from_obj(rest[0]), value_from_obj(rest[1]))
        if tag == "set":
            return fset(value_from_obj(e) for e in rest)
        raise ValidationError(f"unknown tag {tag!r}; expected \"set\" or \"pair\"")
    raise ValidationError(f"cannot read {obj!r} as a value")


def value_to_obj(v: Value):
    if not isinstance(v, Value):
        raise TypeError(f"not a value: {v!r}")
    if v.is_num:
        f = v.payload
        return f.numerator if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if v.is_sym:
        return v.payload
    if v.is_pair:
        return ["pair", value_to_obj(v.first), value_to_obj(v.second)]
    return ["set"] + [value_to_obj(e) for e in v.payload]


def parse_value(text: str) -> Value:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad value text at position {e.pos}: {e.msg}") from None
    return value_from_obj(obj)


def serialize_value(v: Value) -> str:
    return json.dumps(value_to_obj(v), separators=(",", ":"), ensure_ascii=False)
