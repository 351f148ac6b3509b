import pytest

from weyldet import WeylMatrix, det_f, identity, parse_weyl_expr, verify_elementary_product
from weyldet.explorer import (
    ProbeConfig,
    conjecture_probe,
    random_elementary_word,
    refactor_over_f0,
)
from weyldet.matrix import product_of_word


def test_empty_word():
    word, prod = random_elementary_word(ProbeConfig(word_length=0))
    assert word == [] and prod == identity(1, 2)


def test_deterministic():
    cfg = ProbeConfig(seed=42, word_length=4)
    assert random_elementary_word(cfg, 3) == random_elementary_word(cfg, 3)
    assert conjecture_probe(ProbeConfig(seed=1, trials=30)).to_json() == \
        conjecture_probe(ProbeConfig(seed=1, trials=30)).to_json()


def test_seed_changes_sample():
    a = random_elementary_word(ProbeConfig(seed=1), 0)[0]
    b = random_elementary_word(ProbeConfig(seed=2), 0)[0]
    assert a != b


@pytest.mark.parametrize("n, m", [(2, 1), (3, 1), (2, 2)])
def test_words_verify_and_have_det_one(n, m):
    cfg = ProbeConfig(n=n, m=m, word_length=3, seed=5)
    for trial in range(6):
        word, prod = random_elementary_word(cfg, trial)
        assert verify_elementary_product(word, prod)
        assert det_f(prod).value == 1


def test_zero_trials():
    report = conjecture_probe(ProbeConfig(trials=0))
    assert (report.trials_run, report.hits_in_f0, report.refactor_successes) == (0, 0, 0)
    assert report.unresolved == []


def test_f0_only_words_are_successes():
    # degree bound 0 gives constant coefficients, so every word lies over F(0)
    cfg = ProbeConfig(seed=7, trials=25, coefficient_degree_bound=0)
    report = conjecture_probe(cfg)
    assert report.hits_in_f0 == 25
    assert report.refactor_successes == 25


def test_hits_at_least_f0_only_words():
    cfg = ProbeConfig(n=2, m=1, word_length=5, seed=3, trials=80)
    f0_only = sum(
        all(d.coefficient.in_f0() for d in random_elementary_word(cfg, t)[0])
        for t in range(cfg.trials)
    )
    report = conjecture_probe(cfg)
    assert report.hits_in_f0 >= f0_only
    assert report.hits_in_f0 == report.refactor_successes + len(report.unresolved)


def test_witnesses_multiply_back():
    cfg = ProbeConfig(n=2, m=1, word_length=5, seed=3, trials=60)
    checked = 0
    for t in range(cfg.trials):
        word, prod = random_elementary_word(cfg, t)
        if any(not d.coefficient.in_f0() for d in word) and all(
            all(x.in_f0() for x in row) for row in prod.entries
        ):
            witness = refactor_over_f0(prod)
            if witness is not None:
                assert all(d.coefficient.in_f0() for d in witness)
                assert product_of_word(witness, 1, 2) == prod
                checked += 1
    assert checked > 0


def test_refactor_simple_polynomial_matrix():
    x = parse_weyl_expr("x1", 1)
    A = WeylMatrix(1, [[1 + x * x, x], [x, 1]])
    witness = refactor_over_f0(A)
    assert witness is not None
    assert product_of_word(witness, 1, 2) == A


def test_refactor_cohn_fails_within_budget():
    A = WeylMatrix(2, [[parse_weyl_expr(t, 2) for t in r]
                       for r in [["1 - x1*x2", "-x2^2"], ["x1^2", "1 + x1*x2"]]])
    assert refactor_over_f0(A) is None


def test_config_validation():
    with pytest.raises(ValueError):
        ProbeConfig(n=1)
    with pytest.raises(ValueError):
        ProbeConfig(word_length=-1)
    with pytest.raises(ValueError):
        ProbeConfig(trials=-1)


def test_report_text_and_json():
    report = conjecture_probe(ProbeConfig(seed=3, trials=10))
    assert "trials run:" in str(report)
    assert '"trials_run": 10' in report.to_json()
