import math

import pytest

import sdf_forge

S205 = [0, 2, 8, 14, 77, 79, 85, 96, 103, 109, 111, 181]


def test_base_set_verifies():
    assert sdf_forge.check_sdf_mod(205, S205) is None
    assert sdf_forge.paper_base() == S205
    assert sdf_forge.check_sdf_mod(5, [0, 1]) == (1, 0, 1)
    assert sdf_forge.check_sdf(5, [1, 5]) == (5, 1, 2)


def test_squares_and_numbers():
    assert sdf_forge.squares_mod(5) == [1, 4]
    assert len(sdf_forge.squares_mod(205)) == 62
    assert sdf_forge.is_squarefree(205)
    assert not sdf_forge.is_squarefree(12)
    assert sdf_forge.bertrand_prime(100) == 7
    assert 0.7334 < sdf_forge.exponent(205, 12) < 0.7335


def test_iterate_and_recheck():
    cert = sdf_forge.iterate(205, S205, 1)
    assert cert["modulus"] == 42025
    assert cert["size"] == 2460
    assert len(cert["elements"]) == 2460
    assert sdf_forge.recheck(cert) is None
    assert sdf_forge.iterate(5, [0, 2], 2)["size"] == 100


def test_lift_and_bertrand():
    assert sdf_forge.lift(5, [0, 2], 1, [0], 1) == [0, 2, 5, 7, 10, 12, 15, 17, 20, 22]
    b = sdf_forge.bertrand_set(100)
    assert b["elements"] == [7, 14, 21, 28, 35, 42, 49]


def test_search_and_rank():
    r = sdf_forge.exact_mis(205)
    assert r["size"] >= 12 and r["optimal"]
    assert sdf_forge.check_sdf_mod(205, r["elements"]) is None
    csv = sdf_forge.rank_moduli(200, 210, 10**6)
    assert csv.splitlines()[1].startswith("205,12,")


def test_cover_and_fc_bound():
    cover = sdf_forge.greedy_cover(10, [1, 2])
    assert cover["shifts"] == [0, 2, 4, 6, 8]
    assert sdf_forge.cover_size_bound(42025, 2460) == 364
    fc = sdf_forge.fc_bound(40)
    assert fc["n"] == 42025
    assert fc["validated"]
    assert math.log(fc["n"]) / math.log(fc["colors_used"]) > 2.0


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        sdf_forge.check_sdf_mod(5, [0, 0])
    with pytest.raises(ValueError):
        sdf_forge.iterate(12, [0], 1)
    with pytest.raises(sdf_forge.CapacityError):
        sdf_forge.iterate(205, S205, 3)
