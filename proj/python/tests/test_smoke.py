import pytest

import derangements as d


def test_counts_match_enumeration():
    assert [d.h(n) for n in range(1, 6)] == [0, 1, 2, 9, 44]
    assert len(d.derangements(5)) == 44
    assert d.h(30) > 2**64


def test_insertion_bijection_example():
    sigma = d.parse_cycles("(4,1,3,2)", 4)
    image = d.f_map(5, 2, sigma)
    assert d.cycle_string(image) == "(5,4,1,3,2)"
    assert d.g_map(5, image) == (2, sigma)


def test_type_a_round_trip():
    pi = d.parse_cycles("(5,4,1,3,2)", 5)
    sigma = d.parse_cycles("(5,3)(4,1,2)", 5)
    assert d.classify_a(pi, sigma) == "T1"
    a, b = d.psi(pi, sigma)
    assert (d.cycle_string(a), d.cycle_string(b)) == ("(4,1,3,2)", "(6,4,1,2)(5,3)")
    assert d.lambda_inv(5, a, b) == (pi, sigma)


def test_type_b_round_trip():
    pi = [-1, -6, -3, 5, -4, -2]
    sigma = [-1, -2, 6, -5, 3, -4]
    assert d.classify_b(pi, sigma) == "B22/P1"
    image = d.phi(pi, sigma)
    assert image == ([-1, 5, -3, 2, -4], [-1, -2, 6, -5, 3, -7, 4])
    assert d.theta(6, *image) == (pi, sigma)


def test_not_in_image_raises():
    with pytest.raises(d.NotInImage):
        d.lambda_inv(3, [2, 1], [2, 1, 4, 3])


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        d.parse_cycles("(3,1,", 3)


def test_sequence_and_cli():
    assert d.sequence("hB", 4) == [1, 5, 29, 233]
    code, out, _ = d.run(["seq", "--family", "h", "--to", "5"])
    assert code == 0 and out.strip() == "1:0 2:1 3:2 4:9 5:44"
    code, _, err = d.run(["map", "--type", "A", "--n", "3", "--pair", "(3,1,2);(3,1"])
    assert code == 2 and "position" in err
