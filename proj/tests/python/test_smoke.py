from fractions import Fraction

import pytest

import qmf

E2 = qmf.QuasiModularForm.E2
E4 = qmf.QuasiModularForm.E4
E6 = qmf.QuasiModularForm.E6


def test_qexpansion_e4():
    assert qmf.qexpansion(E4(), 3) == [1, 240, 2160]


def test_expression_round_trip():
    f = qmf.QuasiModularForm("E2^2*E4^2 + 3*E6^2")
    assert f.weight == 12
    assert f.depth == 2
    assert qmf.QuasiModularForm(str(f)) == f


def test_inhomogeneous_expression_rejected():
    with pytest.raises(ValueError):
        qmf.QuasiModularForm("E2 + E4")


def test_components_of_e2():
    parts = qmf.components(E2())
    assert parts[0] == E2()
    assert parts[1] == qmf.QuasiModularForm("1")


def test_ramanujan():
    assert qmf.derive(E4()) == qmf.QuasiModularForm("(E2*E4 - E6)/3")


def test_completion_round_trip():
    f = qmf.QuasiModularForm("E2^3 + E2*E4")
    F = qmf.completion(f)
    assert F.degree == 3
    assert qmf.recognize(qmf.constant_term(F), 6, 3) == f
    assert qmf.raise_weight(F) == qmf.completion(qmf.derive(f))


def test_recognize_no_match():
    series = qmf.qexpansion(E4(), 20)
    series[5] += Fraction(1, 7)
    with pytest.raises(qmf.NoMatchError):
        qmf.recognize(series, 4, 0)


def test_numerical_checks():
    assert qmf.normalization_self_test() < 1e-8
    res = qmf.check_quasimodular(qmf.QuasiModularForm("E2*E4 - E6"))
    assert max(r["relative"] for r in res) < 1e-8
    res = qmf.check_vv(qmf.w_form())
    assert max(r["relative"] for r in res) < 1e-8


def test_e2_is_not_modular():
    res = qmf.check_scalar(qmf.qexpansion(E2()), 2)
    assert max(r["relative"] for r in res) > 1e-3


def test_vector_valued():
    F = qmf.from_quasimodular(qmf.QuasiModularForm("E2^2"), 2)
    assert qmf.to_quasimodular(F) == qmf.QuasiModularForm("E2^2")
    assert qmf.dim_vv(12, 2) == 4
    S = qmf.GroupElement.S()
    assert qmf.sym_matrix(S, 2) == [[0, 0, 1], [0, -1, 0], [1, 0, 0]]


def test_dimensions():
    assert [qmf.dim_modular(k) for k in (0, 2, 4, 12)] == [1, 0, 1, 2]
    assert qmf.dim_cusp(12) == 1
