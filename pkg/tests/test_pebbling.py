from fractions import Fraction

import pytest

from dcpebble import (
    DOMINATION,
    FULL_COVER,
    Certificate,
    Goal,
    PebblingError,
    apply_move,
    clumping_number,
    complete,
    connected_graphs,
    format_configuration,
    pairing_number,
    parse_configuration,
    partition_covered,
    path,
    satisfies,
    star,
    subversion,
    support,
)
from dcpebble.solver import configurations


P4 = path(4)
K2 = complete(2)
STAR5 = star(5)


def test_apply_move_basic():
    c = (5, 0, 0, 0)
    assert apply_move(P4, c, (0, 1)) == (3, 1, 0, 0)
    assert c == (5, 0, 0, 0)  # value semantics
    assert apply_move(K2, (2, 0), (0, 1)) == (0, 1)


def test_apply_move_errors():
    with pytest.raises(PebblingError):
        apply_move(P4, (1, 0, 0, 0), (0, 1))  # insufficient pebbles
    with pytest.raises(PebblingError):
        apply_move(P4, (5, 0, 0, 0), (0, 2))  # not adjacent
    with pytest.raises(PebblingError):
        apply_move(P4, (5, 0, 0), (0, 1))  # size mismatch


def test_satisfies_examples():
    assert satisfies(P4, (0, 1, 0, 1), DOMINATION)
    assert not satisfies(STAR5, (0, 1, 1, 1, 0), DOMINATION)
    assert satisfies(STAR5, (1, 1, 1, 1, 1), FULL_COVER)
    assert not satisfies(STAR5, (2, 1, 1, 1, 0), FULL_COVER)


def test_goal_validation():
    with pytest.raises(ValueError):
        Goal("nonsense")
    with pytest.raises(ValueError):
        Goal("domination", omega=1)
    with pytest.raises(ValueError):
        subversion(-1)


def test_subversion_zero_is_domination():
    # exhaustive over all supports of all connected graphs of order <= 6
    for n in range(1, 7):
        for g in connected_graphs(n):
            for mask in range(1 << g.n):
                c = tuple(1 if mask >> v & 1 else 0 for v in range(g.n))
                assert satisfies(g, c, subversion(0)) == \
                    satisfies(g, c, DOMINATION)


def test_subversion_monotone_in_omega():
    for g in connected_graphs(5):
        for mask in range(1 << g.n):
            c = tuple(1 if mask >> v & 1 else 0 for v in range(g.n))
            prev = satisfies(g, c, subversion(0))
            for om in range(1, g.n + 1):
                cur = satisfies(g, c, subversion(om))
                assert cur or not prev
                prev = cur


def test_pairing_number_values():
    assert pairing_number((5, 0, 0, 0)) == 2
    assert pairing_number((1, 1, 0, 1)) == 0
    assert pairing_number((2, 2)) == 1
    assert pairing_number((4, 3)) == Fraction(5, 2)


def test_pairing_number_partition_identity(diam2_upto5):
    # with exactly n-1 pebbles, the pairing number equals (a+b-1)/2 where
    # a and b count the fringe and remote parts of the cover partition
    for g in diam2_upto5:
        for c in configurations(g.n, g.n - 1):
            part = partition_covered(g, c)
            a, b = len(part.fringe), len(part.remote)
            assert pairing_number(c) == Fraction(a + b - 1, 2)


def test_pairing_number_partition_inequality(diam2_upto5):
    # above n-1 pebbles the identity relaxes to >=
    for g in diam2_upto5[:6]:
        for c in configurations(g.n, g.n + 1):
            part = partition_covered(g, c)
            a, b = len(part.fringe), len(part.remote)
            assert pairing_number(c) >= Fraction(a + b - 1, 2)


def test_clumping_number_values():
    assert clumping_number((5, 0, 0, 0), 3) == 4
    assert clumping_number((9,), 4) == 8
    assert clumping_number((2, 2, 2, 1), 3) == 0  # all counts <= 2^(d-2)
    assert clumping_number((0, 0), 5) == 0


def test_clumping_number_divisibility():
    for d in (3, 4, 5):
        for c in configurations(3, 9):
            assert clumping_number(c, d) % (1 << (d - 2)) == 0


def test_clumping_number_rejects_small_diameter():
    with pytest.raises(ValueError):
        clumping_number((5, 0), 2)


def test_single_move_potential_drops():
    # one move burns one pebble, costs at most 1 of pairing number and at
    # most one clump of clumping number
    g = path(5)
    d = g.diameter
    for c in configurations(5, 6):
        for u in range(5):
            if c[u] >= 2:
                for v in g.adj[u]:
                    c2 = apply_move(g, c, (u, v))
                    assert sum(c2) == sum(c) - 1
                    assert pairing_number(c) - pairing_number(c2) <= 1
                    assert clumping_number(c, d) - clumping_number(c2, d) \
                        <= 1 << (d - 2)


def test_certificate_replay_and_json():
    cert = Certificate((5, 0, 0, 0), ((0, 1), (0, 1), (1, 2)))
    assert cert.replay(P4) == (1, 0, 1, 0)
    again = Certificate.from_json(cert.to_json())
    assert again == cert
    assert again.replay(P4) == (1, 0, 1, 0)


def test_certificate_replay_illegal():
    cert = Certificate((1, 0, 0, 0), ((0, 1),))
    with pytest.raises(PebblingError):
        cert.replay(P4)


def test_certificate_bad_json():
    with pytest.raises(PebblingError):
        Certificate.from_json('{"moves": []}')
    with pytest.raises(PebblingError):
        Certificate.from_json("not json")


def test_configuration_text_forms():
    assert parse_configuration("5,0,0,0") == (5, 0, 0, 0)
    assert parse_configuration(" 1 , 2 ", 2) == (1, 2)
    assert format_configuration((5, 0, 0, 0)) == "5,0,0,0"
    with pytest.raises(PebblingError):
        parse_configuration("1,x")
    with pytest.raises(PebblingError):
        parse_configuration("1,-2")
    with pytest.raises(PebblingError):
        parse_configuration("1,2,3", 2)


def test_support():
    assert support((0, 2, 0, 1)) == {1, 3}


def test_satisfies_invariant_under_automorphism():
    from dcpebble import wheel
    from dcpebble.solver import configurations
    w = wheel(5)  # rotating the rim by one is an automorphism
    rot = [0] + [v % 5 + 1 for v in range(1, 6)]
    for goal in (DOMINATION, subversion(1)):
        for c in configurations(w.n, 3):
            rotated = [0] * w.n
            for v in range(w.n):
                rotated[rot[v]] = c[v]
            assert satisfies(w, c, goal) == satisfies(w, tuple(rotated), goal)
