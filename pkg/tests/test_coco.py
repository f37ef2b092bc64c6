from fractions import Fraction

from periodic_games import coco_solution, decompose, max_combined_payoff

F = Fraction


def test_decompose_bos(bos):
    split = decompose(bos)
    assert split.cooperative == (
        (F(3, 2), F(0)),
        (F(0), F(3, 2)),
    )
    assert split.competitive == (
        (F(1, 2), F(0)),
        (F(0), F(-1, 2)),
    )


def test_decompose_recombines(bos, prisoners, four_by_four):
    for g in (bos, prisoners, four_by_four):
        split = decompose(g)
        for r in range(g.shape[0]):
            for c in range(g.shape[1]):
                u = g.payoffs[g.profile_index((r, c))]
                assert split.cooperative[r][c] + split.competitive[r][c] == u[0]
                assert split.cooperative[r][c] - split.competitive[r][c] == u[1]


def test_max_combined_bos(bos):
    value, profile, tied = max_combined_payoff(bos)
    assert value == 3
    assert profile == (0, 0)
    assert tied == ((0, 0), (1, 1))


def test_solution_bos(bos):
    s = coco_solution(bos)
    assert s.vsharp == 3
    assert s.vs == 0
    assert s.side_payment == F(-1, 2)
    assert s.final_payoffs == (F(3, 2), F(3, 2))


def test_solution_prisoners(prisoners):
    s = coco_solution(prisoners)
    assert s.vsharp == 8
    assert s.vs == 0
    assert s.profile == (0, 0)
    assert s.side_payment == 0
    assert s.final_payoffs == (F(4), F(4))


def test_solution_four_by_four(four_by_four):
    s = coco_solution(four_by_four)
    assert s.vsharp == 14
    assert s.profile == (1, 1)
    assert s.vs == F(3, 5)
    assert s.final_payoffs == (F(38, 5), F(32, 5))
    assert sum(s.final_payoffs) == s.vsharp


def test_zero_sum_strategies_certify_value(bos, prisoners, four_by_four):
    for g in (bos, prisoners, four_by_four):
        split = decompose(g)
        s = coco_solution(g)
        row, col = s.zero_sum_strategies
        m = split.competitive
        rows, cols = len(m), len(m[0])
        for c in range(cols):
            assert sum(row[r] * m[r][c] for r in range(rows)) >= s.vs
        for r in range(rows):
            assert sum(col[c] * m[r][c] for c in range(cols)) <= s.vs
