from fractions import Fraction

from symplie.linalg import Echelon, kernel, matrix_rank, qnorm, rank, solve_in_span


def test_qnorm_collapses_integral_fractions():
    assert qnorm(Fraction(4, 2)) == 2 and type(qnorm(Fraction(4, 2))) is int
    assert qnorm(Fraction(1, 3)) == Fraction(1, 3)


def test_rank_of_dependent_rows():
    vs = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 1}]
    assert rank(vs) == 2


def test_echelon_add_reports_novelty():
    e = Echelon()
    assert e.add({"x": 1})
    assert not e.add({"x": Fraction(-3, 7)})
    assert e.contains({"x": 5})
    assert not e.contains({"y": 1})


def test_kernel_vectors_annihilate():
    images = [{0: 1, 1: 1}, {0: 1}, {1: 1}, {2: 1}]
    ker = kernel(images)
    assert len(ker) == 1
    combo: dict = {}
    for i, c in ker[0].items():
        for k, v in images[i].items():
            combo[k] = combo.get(k, 0) + c * v
    assert all(v == 0 for v in combo.values())


def test_solve_in_span():
    sol = solve_in_span([{0: 1}, {1: 1}], {0: 3, 1: Fraction(1, 2)})
    assert sol == {0: 3, 1: Fraction(1, 2)}
    assert solve_in_span([{0: 1}], {1: 1}) is None


def test_matrix_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[0, 6, -6], [2, 14, -2], [-34, 46, -10]]) == 3
