from fractions import Fraction

import pytest

import powerideal as pil

K23_TEXT = """dim 4
form 1 0 0 0
form 0 1 0 0
form 0 0 1 0
form 1 0 0 -1
form 0 1 0 -1
form 0 0 1 -1
"""


def test_parse_and_hilbert():
    a = pil.parse_arrangement(K23_TEXT)
    assert len(a) == 6 and a.dim == 4
    assert a == pil.k23_arrangement()
    assert pil.hilbert_function(a, -2) == [1, 1, 0, 0, 0]
    assert pil.hilbert_function(a, -2, lines_only=True) == [1, 1, 0, 0, 0]
    assert pil.inverse_system_basis(a, -2, 1) == ["y4"]
    assert pil.ideal_dim(a, -2, 2) == 10
    assert pil.a_monomial_span(a, -2)[1] is False
    assert pil.check_c_equals_cprime(a, -2)


def test_rationals_round_trip():
    a = pil.Arrangement(2, [[Fraction(1, 2), "-3"], [1, 0]])
    assert a.forms[0] == [Fraction(1, 2), Fraction(-3)]
    assert pil.format_arrangement(a) == "dim 2\nform 1/2 -3\nform 1 0\n"
    assert pil.rho_of(a, [0, 1]) == 1


def test_arrangement_queries():
    a = pil.k23_arrangement()
    assert pil.rho_min(a) == 2
    assert pil.rho_of(a, [0, 0, 0, 1]) == 3
    assert len(pil.lines(a)) == 11
    assert pil.large_span(a) == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    assert len(pil.delete_form(a, 0)) == 5
    c, embedding = pil.contract(a, 0)
    assert c.dim == 3 and len(embedding) == 3
    assert pil.degree1_component(a)["from_inverse_system"] == [[0, 0, 0, 1]]


def test_tutte():
    u = pil.uniform_u23()
    assert pil.tutte(u)["polynomial"] == "x^2 + x + y"
    assert pil.tutte_eval(u, 2, 1) == 7
    assert pil.tutte_eval(pil.k23_arrangement(), "1", Fraction(1)) == 12


def test_pencils_and_defect():
    a1 = pil.pencil_arrangement(3, coplanar=True, seed=1)
    a2 = pil.pencil_arrangement(3, coplanar=False, seed=1)
    assert pil.same_matroid(a1, a2)
    assert pil.hilbert_function(a1, -6)[1] == 1
    assert pil.hilbert_function(a2, -6)[1] == 0
    assert pil.exact_sequence_defect(a2, 0, -6)[1] == -1


def test_verify_report():
    report = pil.verify("prop1")
    assert report["verdict"] == "pass"
    assert report["elapsed_ms"] is None
    assert report["results"]["hilbert_function"] == [1, 1, 0, 0, 0]


def test_errors():
    with pytest.raises(pil.ParseError):
        pil.parse_arrangement("dim 2\nform 0 0\n")
    with pytest.raises(ValueError):
        pil.Arrangement(2, [[1, 0, 0]])
    with pytest.raises(ValueError):
        pil.hilbert_function(pil.k23_arrangement(), -9)
    with pytest.raises(IndexError):
        pil.delete_form(pil.uniform_u23(), 7)
    with pytest.raises(TypeError):
        pil.rho_of(pil.uniform_u23(), [1.5, 0])
    with pytest.raises(pil.ConstructionError):
        pil.pencil_arrangement(0, coplanar=False)
