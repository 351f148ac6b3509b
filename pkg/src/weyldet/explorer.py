"""Probes for the question GL_n(F(0)) ∩ E_n(A) = E_n(F(0)), with F(0) = Q[x].

Random words of elementary matrices over A_m(Q) are multiplied out.  When a
product has no derivatives left it lies in GL_n(Q[x]), and we try to write
it again as a product of elementary matrices with polynomial entries.  The
refactorization is a bounded greedy heuristic, so a failure is data to look
at, never a counterexample.

Sampling uses :class:`random.Random` (Mersenne Twister) seeded from the
string ``"weyldet-probe/<seed>/<trial>"``; a report is reproducible from its
seed and configuration alone.
"""

import json
import random
from dataclasses import asdict, dataclass, field

from .det import is_invertible
from .matrix import ElementaryDescriptor, is_in_f0, product_of_word
from .parse import format_weyl
from .terms import grlex_key, monomials_up_to
from .weyl import WeylElement

MAX_WORD_LENGTH = 64


@dataclass(frozen=True)
class ProbeConfig:
    n: int = 2
    m: int = 1
    word_length: int = 5
    coefficient_degree_bound: int = 1
    coefficient_height_bound: int = 2
    seed: int = 0
    trials: int = 100
    refactor_budget: int = 200

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("probe matrices need n >= 2")
        if self.m < 1:
            raise ValueError("Weyl index must be positive")
        if not 0 <= self.word_length <= MAX_WORD_LENGTH:
            raise ValueError(f"word_length must lie in [0, {MAX_WORD_LENGTH}]")
        for name in ("coefficient_degree_bound", "coefficient_height_bound", "trials"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")


@dataclass
class ProbeReport:
    trials_run: int = 0
    hits_in_f0: int = 0
    refactor_successes: int = 0
    unresolved: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def __str__(self):
        lines = [
            f"trials run:          {self.trials_run}",
            f"hits in GL_n(F(0)):  {self.hits_in_f0}",
            f"refactor successes:  {self.refactor_successes}",
            f"unresolved:          {len(self.unresolved)}",
        ]
        for item in self.unresolved:
            lines.append(f"  trial {item['trial']}: " + " * ".join(item["word"]))
        return "\n".join(lines)


def _trial_rng(seed, trial):
    return random.Random(f"weyldet-probe/{seed}/{trial}")


def random_weyl_element(rng, m, degree_bound, height_bound):
    """Each monomial of Bernstein degree <= bound is kept with probability 1/2,
    with a nonzero integer coefficient of absolute value <= height_bound."""
    terms = {}
    if height_bound == 0:
        return WeylElement.zero(m)
    for exp in monomials_up_to(2 * m, degree_bound):
        if rng.random() < 0.5:
            c = rng.randint(1, height_bound) * rng.choice((1, -1))
            terms[exp] = c
    return WeylElement(m, terms)


def random_elementary_word(cfg, trial=0):
    """A reproducible random word of elementary descriptors and its product."""
    rng = _trial_rng(cfg.seed, trial)
    word = []
    for _ in range(cfg.word_length):
        i, j = rng.sample(range(1, cfg.n + 1), 2)
        c = random_weyl_element(
            rng, cfg.m, cfg.coefficient_degree_bound, cfg.coefficient_height_bound
        )
        word.append(ElementaryDescriptor(cfg.n, i, j, c))
    return word, product_of_word(word, cfg.m, cfg.n)


def _poly_divmod(f, g):
    """Division of f by g in Q[x1..xm] (graded-lex); returns (q, r)."""
    m = f.m
    lg = g.leading_monomial()
    cg = g.leading_coefficient()
    q = WeylElement.zero(m)
    r = WeylElement.zero(m)
    rest = f
    while rest:
        lm = rest.leading_monomial()
        c = rest.leading_coefficient()
        shift = tuple(a - b for a, b in zip(lm, lg))
        lead = WeylElement(m, {lm: c})
        if any(s < 0 for s in shift):
            r = r + lead
            rest = rest - lead
            continue
        t = WeylElement(m, {shift: c / cg})
        q = q + t
        rest = rest - t * g
    return q, r


def _degree(e):
    return grlex_key(e.leading_monomial())


def refactor_over_f0(A, budget=200):
    """Try to write A in GL_n(Q[x]) as a product of elementary matrices over Q[x].

    Row reduction to the identity by elementary operations: polynomial
    division drives each column to a single constant, the other entries are
    then cleared, and the final constant diagonal is absorbed by 2x2 blocks.
    Returns the witness word, or None when the budget runs out or no
    division makes progress.
    """
    n, m = A.n, A.m
    M = A.rows()
    ops = []

    def row_op(i, j, c):
        # left multiplication by E_{i+1, j+1}(c): row i += c * row j
        if not isinstance(c, WeylElement):
            c = WeylElement.const(c, m)
        if not c:
            return
        M[i] = [M[i][k] + c * M[j][k] if M[j][k] else M[i][k] for k in range(n)]
        ops.append(ElementaryDescriptor(n, i + 1, j + 1, c))

    steps = 0
    for col in range(n):
        while True:
            nz = [r for r in range(col, n) if M[r][col]]
            if not nz:
                return None
            if len(nz) == 1 and M[nz[0]][col].is_constant():
                p = nz[0]
                break
            if steps >= budget:
                return None
            steps += 1
            p = min(nz, key=lambda r: (_degree(M[r][col]), r))
            progress = False
            for r in nz:
                if r == p:
                    continue
                q, _ = _poly_divmod(M[r][col], M[p][col])
                if q:
                    row_op(r, p, -q)
                    progress = True
            if not progress:
                return None
        if p != col:
            row_op(col, p, 1)
            row_op(p, col, -1)
        c = M[col][col].constant_value()
        for r in range(n):
            if r != col and M[r][col]:
                row_op(r, col, -M[r][col].scale(1 / c))

    for k in range(n - 1):
        c = M[k][k].constant_value()
        d = M[k + 1][k + 1].constant_value()
        if c == 1:
            continue
        one = WeylElement.one(m)
        row_op(k + 1, k, one)
        row_op(k, k + 1, one.scale((1 - c) / c))
        row_op(k + 1, k, one.scale(-c))
        row_op(k, k + 1, one.scale(-((1 - c) * d / c) / (c * d)))

    if any(M[i][j] != (1 if i == j else 0) for i in range(n) for j in range(n)):
        return None
    witness = [op.inverse() for op in ops]
    if product_of_word(witness, m, n) != A:
        return None
    return witness


def _word_text(word):
    return [f"E_{d.row},{d.col}({format_weyl(d.coefficient)})" for d in word]


def conjecture_probe(cfg):
    report = ProbeReport()
    for trial in range(cfg.trials):
        word, prod = random_elementary_word(cfg, trial)
        report.trials_run += 1
        if not is_in_f0(prod) or not is_invertible(prod):
            continue
        report.hits_in_f0 += 1
        if all(d.coefficient.in_f0() for d in word):
            witness = word
        else:
            witness = refactor_over_f0(prod, cfg.refactor_budget)
        if witness is not None:
            report.refactor_successes += 1
        else:
            report.unresolved.append({"trial": trial, "word": _word_text(word)})
    report.unresolved.sort(key=lambda item: item["trial"])
    return report
