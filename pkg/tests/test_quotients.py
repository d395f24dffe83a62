import pytest

from finrel.values import V
from finrel.relations import (
    compose,
    converse,
    domain_of,
    range_of,
    relation,
    right_unique,
)
from finrel.quotients import (
    all_equivalences,
    all_partial_equivalences,
    compatible,
    identity_on,
    is_equivalence,
    kernel,
    projector,
    quotient,
)


def total_equivalence(carrier):
    return relation((a, b) for a in carrier.elements for b in carrier.elements)


def test_projector_examples():
    assert projector(relation([(1, 1), (1, 2), (2, 2)])) == relation(
        [(V(1), V([1, 2])), (V(2), V([2]))]
    )
    assert projector(relation()) == relation()
    assert projector(identity_on(V([1, 2]))) == relation([(V(1), V([1])), (V(2), V([2]))])


def test_quotient_identity_case():
    ident = identity_on(V([1]))
    assert quotient(ident, ident, ident) == relation([(V([1]), V([1]))])


def test_quotient_empty_relation():
    P = total_equivalence(V([1, 2]))
    Q = identity_on(V([10]))
    assert quotient(relation(), P, Q) == relation()


def test_quotient_collapses_classes():
    # brute force of the defining comprehension: the unique surviving
    # class pair is ({1,2}, {10})
    R = relation([(1, 10), (2, 10)])
    P = total_equivalence(V([1, 2]))
    Q = identity_on(V([10]))
    assert quotient(R, P, Q) == relation([(V([1, 2]), V([10]))])


def test_compatible_examples():
    R = relation([(1, 10), (2, 20)])
    assert compatible(R, identity_on(domain_of(R)), identity_on(range_of(R)))
    # coarse domain classes but fine range classes: inclusion fails at x=1
    assert not compatible(R, total_equivalence(V([1, 2])), identity_on(V([10, 20])))
    assert compatible(relation(), total_equivalence(V([1])), identity_on(V([1])))


def test_kernel_examples():
    assert kernel(relation([(1, 10), (2, 10)])) == total_equivalence(V([1, 2]))
    assert kernel(relation([(1, 10), (2, 20)])) == identity_on(V([1, 2]))
    assert kernel(relation()) == relation()
    with pytest.raises(ValueError):
        kernel(relation([(1, 10), (1, 11)]))


def test_is_equivalence():
    assert is_equivalence(identity_on(V([1, 2])), V([1, 2]))
    assert not is_equivalence(relation([(1, 2)]), V([1, 2]))
    assert not is_equivalence(identity_on(V([1])), V([1, 2]))  # not reflexive at 2


def test_kernel_is_equivalence_on_domain():
    for f in [relation([(1, 5), (2, 5), (3, 6)]), relation([(1, 5)]), relation()]:
        assert is_equivalence(kernel(f), domain_of(f))


def test_quotient_well_definedness_instance():
    # constant function is compatible with the total equivalence
    f = relation([(1, 10), (2, 10)])
    P = total_equivalence(V([1, 2]))
    Q = identity_on(V([10]))
    assert compatible(f, P, Q)
    assert right_unique(quotient(f, P, Q))


def test_incompatible_quotient_can_lose_right_uniqueness():
    f = relation([(1, 10), (2, 20)])
    P = total_equivalence(V([1, 2]))
    Q = identity_on(V([10, 20]))
    assert not compatible(f, P, Q)
    q = quotient(f, P, Q)
    assert q == relation([(V([1, 2]), V([10])), (V([1, 2]), V([20]))])
    assert not right_unique(q)


def test_quotient_factorization_instance():
    r = relation([(1, 10), (2, 10), (3, 11)])
    p = total_equivalence(V([1, 2]))
    q = identity_on(V([10, 11]))
    composed = compose(compose(converse(projector(p)), r), projector(q))
    assert quotient(r, p, q) == composed


def test_equivalence_enumeration_counts():
    # Bell numbers: equivalences on an n-set, partial ones on subsets
    assert len(all_equivalences(V([1, 2, 3]))) == 5
    assert len(all_partial_equivalences(V([1, 2, 3]))) == 15
    for E in all_partial_equivalences(V([1, 2])):
        assert is_equivalence(E, domain_of(E))


def test_projector_classes_partition_carrier():
    from finrel.enumeration import is_partition_of

    for E in all_equivalences(V([1, 2, 3])):
        classes = range_of(projector(E))
        assert is_partition_of(classes, V([1, 2, 3]))
