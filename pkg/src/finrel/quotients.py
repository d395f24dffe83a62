"""Quotients of relations by equivalence relations, purely set-theoretically.

projector sends each domain point to its image class; quotient relates
classes whose product meets the original relation; compatible is the
well-definedness condition under which the quotient of a right-unique
relation stays right-unique.  kernel builds the equivalence identifying
points with equal images.  None of these require their arguments to be
equivalences or functions; the hypotheses only matter for the laws.
"""

from __future__ import annotations

from .values import Value, fset, pair, union, _require_set
from .relations import (
    _require_relation,
    domain_of,
    range_of,
    relation,
    right_unique,
)


def projector(R: Value) -> Value:
    """The relation { (x, image of x through R) | x in Domain R }."""
    _require_relation(R)
    groups: dict = {}
    for p in R.payload:
        groups.setdefault(p.first, []).append(p.second)
    return fset(pair(x, fset(ys)) for x, ys in groups.items())


def quotient(R: Value, P: Value, Q: Value) -> Value:
    """Relation between P-classes and Q-classes whose product meets R."""
    _require_relation(R)
    pclasses = range_of(projector(P)).payload
    qclasses = range_of(projector(Q)).payload
    out = []
    for pc in pclasses:
        pmembers = frozenset(pc.payload)
        touching = frozenset(p.second for p in R.payload if p.first in pmembers)
        if not touching:
            continue
        for qc in qclasses:
            if any(e in touching for e in qc.payload):
                out.append(pair(pc, qc))
    return fset(out)


def compatible(R: Value, P: Value, Q: Value) -> bool:
    """True iff R maps P-related points into Q-related images.

    The defining inclusion is image(R, image(P, {x})) within
    image(Q, image(R, {x})) for every x; quantifying over
    Domain P union Domain R suffices, since elsewhere the left side
    is empty.
    """
    _require_relation(R)
    _require_relation(P)
    _require_relation(Q)
    r_by_first: dict = {}
    for p in R.payload:
        r_by_first.setdefault(p.first, []).append(p.second)
    p_by_first: dict = {}
    for p in P.payload:
        p_by_first.setdefault(p.first, []).append(p.second)
    q_by_first: dict = {}
    for p in Q.payload:
        q_by_first.setdefault(p.first, []).append(p.second)

    for x in union(domain_of(P), domain_of(R)).payload:
        lhs = {
            y
            for mid in p_by_first.get(x, ())
            for y in r_by_first.get(mid, ())
        }
        rhs = {
            y
            for mid in r_by_first.get(x, ())
            for y in q_by_first.get(mid, ())
        }
        if not lhs <= rhs:
            return False
    return True


def kernel(f: Value) -> Value:
    """Equivalence on Domain f identifying points with equal f-values."""
    _require_relation(f)
    if not right_unique(f):
        raise ValueError("kernel requires a right-unique relation")
    by_value: dict = {}
    for p in f.payload:
        by_value.setdefault(p.second, []).append(p.first)
    out = []
    for xs in by_value.values():
        for a in xs:
            for b in xs:
                out.append(pair(a, b))
    return fset(out)


def is_equivalence(E: Value, carrier: Value) -> bool:
    """True iff E is reflexive on carrier, symmetric, transitive, and
    contained in carrier x carrier."""
    _require_relation(E)
    _require_set(carrier)
    ckeys = frozenset(carrier.payload)
    pairs = {(p.first, p.second) for p in E.payload}
    if not all(a in ckeys and b in ckeys for a, b in pairs):
        return False
    if not all((k, k) in pairs for k in ckeys):
        return False
    if not all((b, a) in pairs for a, b in pairs):
        return False
    by_first: dict = {}
    for a, b in pairs:
        by_first.setdefault(a, []).append(b)
    return all(
        (a, c) in pairs for a, b in pairs for c in by_first.get(b, ())
    )


def identity_on(X: Value) -> Value:
    """The identity relation on an explicit finite carrier."""
    _require_set(X)
    return relation((x, x) for x in X.payload)


def all_equivalences(carrier: Value) -> list[Value]:
    """Every equivalence relation on the carrier, in a deterministic order.

    Generated from the partitions of the carrier: each block contributes
    its full square.
    """
    from .enumeration import all_partitions_list

    _require_set(carrier)
    out = []
    for blocks in all_partitions_list(list(carrier.payload)):
        pairs = []
        for block in blocks:
            for a in block.payload:
                for b in block.payload:
                    pairs.append(pair(a, b))
        out.append(fset(pairs))
    return out


def all_partial_equivalences(universe: Value) -> list[Value]:
    """Every relation that is an equivalence on some subset of universe.

    These are exactly the symmetric transitive relations over the
    universe (reflexivity on their own domain is implied).
    """
    from .enumeration import all_subsets

    out = []
    for carrier in all_subsets(universe).payload:
        out.extend(all_equivalences(carrier))
    return out
