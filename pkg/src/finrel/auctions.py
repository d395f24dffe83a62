"""Auction clearing on top of the relation toolkit.

Two models live here.  The single-good second-price mechanism is built as
a pair of relations over an explicit finite grid of bids, together with
the dominant-strategy check, the generalized payment-form check, and the
reduced-bid/reduced-price quotient construction that extracts the fee
table.  The combinatorial model clears Vickrey auctions over allocations
that pair a partition of the goods with an injection into the bidders,
with payments by the standard exclusion formula.

All amounts are exact rationals; ties are always broken by the canonical
value order (lowest wins).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import CapExceeded, ParseError, ValidationError
from .values import (
    Value,
    as_fraction,
    canonicalize,
    difference,
    fset,
    intersection,
    member,
    min_of,
    max_of,
    num,
    pair,
    sym,
    union,
    _require_set,
)
from .relations import (
    arg_max_set,
    compose,
    converse,
    domain_of,
    eval_rel,
    is_relation,
    paste,
    range_of,
    relation,
    right_unique,
    single_outside,
    single_paste,
)
from .quotients import identity_on, kernel, projector, quotient
from .enumeration import all_partitions_list, all_subsets, injections_alg

CAP_GOODS = 6
CAP_BIDDERS = 6
CAP_GRID = 5
CAP_SINGLE_BIDDERS = 3


@dataclass(frozen=True)
class SingleGoodMechanism:
    """A single-good auction over a finite bid grid.

    alloc maps every bid vector to 1 when the distinguished bidder wins
    the good and 0 otherwise; price maps every bid vector to what that
    bidder pays.  Both are right-unique relations over the full grid of
    bid vectors.
    """

    bidders: Value
    grid: Value
    bidder: Value
    alloc: Value
    price: Value


def _check_single_good_args(bidders: Value, grid: Value, i: Value):
    _require_set(bidders, "bidders")
    _require_set(grid, "grid")
    if len(bidders.payload) < 2:
        raise ValueError("need at least two bidders")
    if len(bidders.payload) > CAP_SINGLE_BIDDERS:
        raise CapExceeded(f"more than {CAP_SINGLE_BIDDERS} bidders in a grid mechanism")
    if not grid.payload:
        raise ValueError("empty bid grid")
    if len(grid.payload) > CAP_GRID:
        raise CapExceeded(f"grid larger than {CAP_GRID}")
    for g in grid.payload:
        if not g.is_num:
            raise ValueError(f"non-numeric grid value: {g!r}")
    if not member(i, bidders):
        raise ValueError(f"bidder {i!r} not among {bidders!r}")


def bid_vectors(bidders: Value, grid: Value) -> list[Value]:
    """Every function from the bidders into the grid, canonically ordered
    coordinate-wise."""
    bs = bidders.payload
    out = [fset()]
    for b in bs:
        out = [paste(vec, relation([(b, g)])) for vec in out for g in grid.payload]
    return out


def _single_good(bidders, grid, i, price_rule) -> SingleGoodMechanism:
    bidders = canonicalize(bidders)
    grid = canonicalize(grid)
    i = canonicalize(i)
    _check_single_good_args(bidders, grid, i)
    alloc_pairs = []
    price_pairs = []
    for b in bid_vectors(bidders, grid):
        winner = arg_max_set(b, bidders).payload[0]  # canonical tie-break
        if winner == i:
            alloc_pairs.append(pair(b, num(1)))
            price_pairs.append(pair(b, price_rule(b)))
        else:
            alloc_pairs.append(pair(b, num(0)))
            price_pairs.append(pair(b, num(0)))
    return SingleGoodMechanism(bidders, grid, i, fset(alloc_pairs), fset(price_pairs))


def second_price_single_good(bidders, grid, i) -> SingleGoodMechanism:
    """Winner pays the highest rival bid."""
    i = canonicalize(i)
    return _single_good(bidders, grid, i, lambda b: max_of(range_of(single_outside(b, i))))


def first_price_single_good(bidders, grid, i) -> SingleGoodMechanism:
    """Winner pays their own bid; the classic non-truthful mutant."""
    i = canonicalize(i)
    return _single_good(bidders, grid, i, lambda b: eval_rel(b, i))


def _utility(valuation: Fraction, alloc: Value, price: Value, b: Value) -> Fraction:
    return valuation * as_fraction(eval_rel(alloc, b)) - as_fraction(eval_rel(price, b))


def dominant_strategy_counterexample(
    i: Value, alloc: Value, price: Value, deviations: Value | None = None
) -> tuple[Value, Value] | None:
    """First (bid vector, valuation) where switching to the true valuation
    would hurt bidder i; None when bidding truthfully always weakly wins.

    Candidate valuations default to every bid value of i that occurs in
    the common domain, which covers all deviations that stay inside it.
    """
    common = intersection(domain_of(alloc), domain_of(price))
    cmembers = frozenset(common.payload)
    if deviations is None:
        vals = []
        for b in common.payload:
            if member(i, domain_of(b)):
                vals.append(eval_rel(b, i))
        deviations = fset(vals)
    for b in common.payload:
        if not member(i, domain_of(b)):
            continue
        for v in deviations.payload:
            truthful = single_paste(b, i, v)
            if truthful not in cmembers:
                continue
            vf = as_fraction(v)
            if _utility(vf, alloc, price, b) > _utility(vf, alloc, price, truthful):
                return b, v
    return None


def dominant_strategy_check(
    i: Value, alloc: Value, price: Value, deviations: Value | None = None
) -> bool:
    """True iff bidding one's true valuation is weakly dominant for i."""
    return dominant_strategy_counterexample(i, alloc, price, deviations) is None


def _table_lookup(table, x: Value) -> Fraction:
    if isinstance(table, Value):
        y = eval_rel(table, x)
    elif isinstance(table, Mapping):
        try:
            y = table[x]
        except KeyError:
            raise ValueError(f"table undefined at {x!r}") from None
    else:
        y = table(x)
    y = canonicalize(y)
    if not y.is_num:
        raise ValueError(f"table has no numeric value at {x!r} (got {y!r})")
    return as_fraction(y)


def vickrey_payment_form_check(i, alloc, price, weight, fee, base_alloc) -> bool:
    """Check that every payment splits as (alloc - base) * weight + fee.

    weight and fee are tables over reduced bids (the vector with bidder
    i's component removed); both must be defined on every reduced bid the
    common domain reaches, otherwise a ValueError is raised.
    """
    i = canonicalize(i)
    base = as_fraction(canonicalize(base_alloc))
    for b in intersection(domain_of(alloc), domain_of(price)).payload:
        reduced = single_outside(b, i)
        w = _table_lookup(weight, reduced)
        t = _table_lookup(fee, reduced)
        lhs = as_fraction(eval_rel(price, b))
        rhs = (as_fraction(eval_rel(alloc, b)) - base) * w + t
        if lhs != rhs:
            return False
    return True


def max_rival_bid(reduced: Value) -> Value:
    """Weight table of the second-price rule: highest bid in a reduced
    bid vector."""
    return max_of(range_of(reduced))


def functional_family(X: Value) -> bool:
    """True iff every member of X is a right-unique relation."""
    _require_set(X)
    return all(is_relation(b) and right_unique(b) for b in X.payload)


def reduced_bid_map(i, alloc: Value) -> Value:
    """Send each bid vector b to (domain of b, (b without i, winner flag)).

    Two bid vectors differing only in bidder i's component with the same
    allocation land on the same triple; the kernel of this map is exactly
    that equivalence.
    """
    i = canonicalize(i)
    if not right_unique(alloc):
        raise ValueError("allocation relation must be right-unique")
    out = []
    for b in domain_of(alloc).payload:
        if not is_relation(b):
            raise ValueError(f"domain member is not a bid vector: {b!r}")
        triple = pair(domain_of(b), pair(single_outside(b, i), eval_rel(alloc, b)))
        out.append(pair(b, triple))
    return fset(out)


def reduced_price_map(price: Value, i, alloc: Value) -> Value:
    """Price as a function of the reduced-bid triple, via the quotient of
    the price relation by the kernel of the reduced-bid map."""
    if not right_unique(price):
        raise ValueError("price relation must be right-unique")
    rb = reduced_bid_map(i, alloc)
    ident = identity_on(range_of(price))
    lifted = quotient(price, kernel(rb), ident)
    return compose(compose(projector(converse(rb)), lifted), converse(projector(ident)))


def reduced_fee_table(price: Value, i, alloc: Value) -> Callable[[Value], Value]:
    """Fee table extracted from the reduced price: the payment at the
    lowest allocation value, as a function of the reduced bid.

    Returns UNDEFINED on reduced bids whose class never reaches the
    lowest allocation (the payment-form check reports those as errors).
    """
    i = canonicalize(i)
    rp = reduced_price_map(price, i, alloc)
    lowest = min_of(range_of(alloc))

    def fee(reduced: Value) -> Value:
        key = pair(union(fset([i]), domain_of(reduced)), pair(reduced, lowest))
        return eval_rel(rp, key)

    return fee


# ---------------------------------------------------------------------------
# combinatorial Vickrey auctions


@dataclass(frozen=True)
class CombinatorialInstance:
    """Goods, bidders, and an exact-rational valuation per (bidder, bundle).

    Unlisted bundles are worth 0; the empty bundle is always worth 0.
    """

    goods: Value
    bidders: Value
    valuations: dict

    def value(self, bidder: Value, bundle: Value) -> Fraction:
        return self.valuations.get((bidder, bundle), Fraction(0))


@dataclass(frozen=True)
class Outcome:
    allocation: Value
    payments: Value
    welfare: Fraction


def make_instance(goods, bidders, triples: Iterable) -> CombinatorialInstance:
    """Validated instance from (bidder, bundle, value) triples."""
    goods = canonicalize(goods)
    bidders = canonicalize(bidders)
    _require_set(goods, "goods")
    _require_set(bidders, "bidders")
    if not goods.payload:
        raise ValidationError("no goods")
    if not bidders.payload:
        raise ValidationError("no bidders")
    for g in goods.payload:
        if not (g.is_num or g.is_sym):
            raise ValidationError(f"good must be an atom: {g!r}")
    for n in bidders.payload:
        if not (n.is_num or n.is_sym):
            raise ValidationError(f"bidder must be an atom: {n!r}")
    table: dict = {}
    for bidder, bundle, value in triples:
        bidder = canonicalize(bidder)
        bundle = canonicalize(bundle)
        value = canonicalize(value)
        if not member(bidder, bidders):
            raise ValidationError(f"unknown bidder {bidder!r}")
        _require_set(bundle, "bundle")
        if not all(member(g, goods) for g in bundle.payload):
            raise ValidationError(f"bundle {bundle!r} is not within the goods")
        if not value.is_num:
            raise ValidationError(f"valuation must be numeric: {value!r}")
        f = as_fraction(value)
        if f < 0:
            raise ValidationError(f"negative valuation {value!r}")
        if not bundle.payload and f != 0:
            raise ValidationError("the empty bundle must be worth 0")
        if (bidder, bundle) in table:
            raise ValidationError(f"duplicate valuation for {bidder!r}, {bundle!r}")
        table[(bidder, bundle)] = f
    return CombinatorialInstance(goods, bidders, table)


def _check_caps(goods: Value, bidders: Value):
    if len(goods.payload) > CAP_GOODS:
        raise CapExceeded(f"more than {CAP_GOODS} goods")
    if len(bidders.payload) > CAP_BIDDERS:
        raise CapExceeded(f"more than {CAP_BIDDERS} bidders")


def possible_allocations(goods: Value, bidders: Value) -> list[Value]:
    """Every allocation: an injection from the blocks of some partition of
    the goods into the bidders.  Deterministic order, no duplicates."""
    _require_set(goods, "goods")
    _require_set(bidders, "bidders")
    if not goods.payload:
        raise ValueError("no goods to allocate")
    _check_caps(goods, bidders)
    out = []
    for blocks in all_partitions_list(list(goods.payload)):
        out.extend(injections_alg(blocks, bidders))
    return out


def _welfare(inst: CombinatorialInstance, alloc: Value) -> Fraction:
    return sum(
        (inst.value(p.second, p.first) for p in alloc.payload), Fraction(0)
    )


def clear_vickrey(inst: CombinatorialInstance) -> Outcome:
    """Welfare-maximizing allocation plus exclusion-formula payments.

    The chosen allocation maximizes total reported value, ties broken by
    canonical order.  Bidder n pays the best total the others could reach
    without n, minus what the others actually get under the chosen
    allocation; bidders assigned nothing pay by the same formula (which
    works out to zero).
    """
    _check_caps(inst.goods, inst.bidders)
    allocations = possible_allocations(inst.goods, inst.bidders)
    scored = [(_welfare(inst, a), a) for a in allocations]
    best = max(w for w, _ in scored)
    chosen = min(a for w, a in scored if w == best)
    payments = []
    for n in inst.bidders.payload:
        own = sum(
            (inst.value(n, p.first) for p in chosen.payload if p.second == n),
            Fraction(0),
        )
        others = best - own
        rest = difference(inst.bidders, fset([n]))
        if rest.payload:
            excluded_best = max(
                _welfare(inst, a) for a in possible_allocations(inst.goods, rest)
            )
        else:
            excluded_best = Fraction(0)
        payments.append(pair(n, num(excluded_best - others)))
    return Outcome(chosen, fset(payments), best)


def random_instance(rng, max_goods: int = 4, max_bidders: int = 3) -> CombinatorialInstance:
    """Seeded random instance with free-disposal valuations.

    Raw bundle values are drawn independently, then closed upward so a
    larger bundle is never worth less; that monotonicity is what makes
    exclusion payments provably non-negative under this allocation space.
    """
    n_goods = rng.randint(1, max_goods)
    n_bidders = rng.randint(1, max_bidders)
    goods = fset(sym(f"g{k}") for k in range(1, n_goods + 1))
    bidders = fset(num(k) for k in range(1, n_bidders + 1))
    bundles = [s for s in all_subsets(goods).payload if s.payload]
    triples = []
    for bidder in bidders.payload:
        raw = {}
        for bundle in bundles:
            raw[bundle] = Fraction(rng.randint(0, 24), rng.choice((1, 1, 2, 4)))
        for bundle in bundles:
            keys = frozenset(bundle.payload)
            closed = max(
                raw[b] for b in bundles if frozenset(b.payload) <= keys
            )
            triples.append((bidder, bundle, num(closed)))
    return make_instance(goods, bidders, triples)


# ---------------------------------------------------------------------------
# instance and outcome files

from .encoding import value_from_obj, value_to_obj  # noqa: E402


def instance_from_obj(obj) -> CombinatorialInstance:
    if not isinstance(obj, dict):
        raise ValidationError("instance file must be a JSON object")
    missing = {"goods", "bidders", "valuations"} - set(obj)
    if missing:
        raise ValidationError(f"instance file is missing {sorted(missing)}")
    goods = value_from_obj(obj["goods"])
    bidders = value_from_obj(obj["bidders"])
    raw = obj["valuations"]
    if not isinstance(raw, list):
        raise ValidationError("valuations must be an array of [bidder, bundle, value]")
    triples = []
    for row in raw:
        if not isinstance(row, list) or len(row) != 3:
            raise ValidationError(f"bad valuation row: {row!r}")
        triples.append(tuple(value_from_obj(e) for e in row))
    return make_instance(goods, bidders, triples)


def parse_instance(text: str) -> CombinatorialInstance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"bad instance file at position {e.pos}: {e.msg}") from None
    return instance_from_obj(obj)


def outcome_to_obj(outcome: Outcome) -> dict:
    return {
        "allocation": value_to_obj(outcome.allocation),
        "payments": value_to_obj(outcome.payments),
        "welfare": value_to_obj(num(outcome.welfare)),
    }


def serialize_outcome(outcome: Outcome) -> str:
    return json.dumps(outcome_to_obj(outcome), separators=(",", ":"), ensure_ascii=False)
