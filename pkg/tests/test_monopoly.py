import random
from fractions import Fraction

import pytest

from expanderlab.bounds import beta as beta_formula
from expanderlab.dynamics import AlphaThreshold, RThreshold, step
from expanderlab.generators import (gen_complete, gen_cycle,
                                    gen_random_regular)
from expanderlab.graph import Graph, mask_of
from expanderlab.monopoly import (ConstructionError, PreconditionError,
                                  build_target_set, construct_stable_set,
                                  find_expandable_node, verify_stable,
                                  verify_target)
from expanderlab.spectral import normalized_spectrum


def test_verify_stable_examples():
    c5 = gen_cycle(5)
    assert verify_stable(c5, c5.full_mask, RThreshold(2))
    assert not verify_stable(c5, mask_of([0, 1, 2]), RThreshold(2))
    k4 = gen_complete(4)
    assert verify_stable(k4, mask_of([0, 1, 2]), AlphaThreshold(Fraction(1, 2)))
    assert not verify_stable(k4, mask_of([0, 1]), AlphaThreshold(Fraction(1, 2)))


def test_verify_target_examples():
    assert verify_target(gen_complete(7), mask_of([0, 1, 2]), RThreshold(3))
    c8 = gen_cycle(8)
    assert not verify_target(c8, mask_of(range(7)), RThreshold(2))
    assert verify_target(c8, c8.full_mask, RThreshold(2))
    assert not verify_target(c8, 0, RThreshold(1))


def test_find_expandable_node():
    k5 = gen_complete(5)
    assert find_expandable_node(k5, mask_of([0, 1]), 2) == 2
    c6 = gen_cycle(6)
    assert find_expandable_node(c6, mask_of([0, 1]), 2) is None
    assert find_expandable_node(c6, mask_of([0, 2]), 2) == 1


def test_construct_stable_set_on_k10():
    g = gen_complete(10)
    cert = construct_stable_set(g, 2, 1 / 9, seed=0)
    assert cert.size >= 3  # any 3 nodes of K10 have internal degree 2
    assert verify_stable(g, cert.nodes, RThreshold(2))
    assert all(d >= 2 for d in cert.certificate.values())


def test_construct_preconditions():
    with pytest.raises(PreconditionError):
        construct_stable_set(gen_cycle(6), 2, 0.5, seed=0)  # beta = 2 > 1/2
    with pytest.raises(PreconditionError):
        construct_stable_set(Graph(4, [(0, 1), (1, 2), (2, 3)]), 1, 0.1)
    with pytest.raises(PreconditionError):
        build_target_set(gen_cycle(6), 3, 0.1)  # min degree < r


def test_construct_on_random_regular():
    for seed in range(5):
        g = gen_random_regular(200, 16, seed)
        sig = normalized_spectrum(g).sigma
        assert sig < 1
        bet = beta_formula(2, 16, sig)
        cert = construct_stable_set(g, 2, sig, seed=seed)
        assert verify_stable(g, cert.nodes, RThreshold(2))
        assert int(bet * 200) <= cert.size <= 2 * bet * 200 + 1 / bet + 1


def test_stable_set_persists_under_dynamics():
    g = gen_random_regular(120, 16, 2)
    sig = normalized_spectrum(g).sigma
    cert = construct_stable_set(g, 2, sig, seed=1)
    blue = cert.nodes
    for _ in range(30):
        blue = step(g, blue, RThreshold(2))
        assert blue & cert.nodes == cert.nodes  # S stays blue every round


def test_build_target_set():
    g = gen_random_regular(200, 16, 11)
    sig = normalized_spectrum(g).sigma
    cert = build_target_set(g, 2, sig, seed=11)
    assert cert.kind == "target"
    assert cert.certificate.outcome == "all_blue"
    assert verify_target(g, cert.nodes, RThreshold(2))
    assert cert.size <= cert.size_bound


def test_expandable_node_exists_above_beta_n():
    # pigeonhole guarantee: every set of size >= beta*n has an expandable
    # outside node
    g = gen_random_regular(200, 16, 4)
    sig = normalized_spectrum(g).sigma
    bet = beta_formula(2, 16, sig)
    need = -int(-bet * 200 // 1)  # ceil
    rng = random.Random(0)
    for _ in range(100):
        size = rng.randint(need, 180)
        s = mask_of(rng.sample(range(200), size))
        assert find_expandable_node(g, s, 2) is not None
