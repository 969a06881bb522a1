"""Programmatic acceptance checks, shared by ``partdecomp verify`` and the test suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import abacus, block_theory, diagram_algebra
from .cellmod import cell_module, psi_annihilator_check, specht_module
from .decomposition import (
    DecompRequest,
    counterexample_report,
    decomp_charp_theorem,
    product_check_remark,
    stacked_symmetric,
    sym_group_decomp,
)
from .fields import FieldSpec
from .labeled import LabeledMatrix
from .modules import composition_factors
from .oracle import Identifier, decomposition_matrix_oracle
from .partition_core import EMPTY, Partition, count_standard_tableaux, partitions_of, partitions_up_to

P = Partition.of


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.name} ({self.seconds:.1f}s) {self.detail}".rstrip()

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _matrix(rows, cols, nonzero) -> LabeledMatrix:
    return LabeledMatrix.from_mapping(rows, cols, {k: 1 for k in nonzero})


# -- expected data -----------------------------------------------------------

KS4_P3 = _matrix(
    partitions_of(4),
    [P(4), P(3, 1), P(2, 2), P(2, 1, 1)],
    [(P(4), P(4)), (P(3, 1), P(3, 1)), (P(2, 2), P(4)), (P(2, 2), P(2, 2)), (P(2, 1, 1), P(2, 1, 1)), (P(1, 1, 1, 1), P(2, 2))],
)

CASE_III_P3 = _matrix(
    partitions_up_to(3).members,
    [EMPTY, P(1), P(2), P(1, 1), P(3), P(2, 1)],
    [
        (EMPTY, EMPTY), (EMPTY, P(3)),
        (P(1), P(1)), (P(1), P(2)),
        (P(2), P(2)),
        (P(1, 1), P(1, 1)),
        (P(3), P(3)),
        (P(2, 1), P(2, 1)), (P(2, 1), P(3)),
        (P(1, 1, 1), P(2, 1)),
    ],
)


# -- criteria ----------------------------------------------------------------


def crit_abacus(seed: int) -> tuple[bool, str]:
    beta = abacus.beta_sequence(P(5, 4), 10).values
    core = abacus.p_core(P(5, 4), 5)
    bd = abacus.beta_delta(P(2, 1), 7, 6)
    marker = abacus.marked_abacus(P(2, 1), 7, 6, 5).marker
    ok = beta == (14, 12, 7, 6, 5, 4, 3, 2, 1, 0) and core == P(3, 1) and bd == (10, 8, 6, 4, 3, 2, 1, 0) and marker == 0
    return ok, f"beta={beta} core={core} beta_delta={bd} marker={marker}"


def crit_diagrams(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    for n in (2, 3, 4, 5):
        pool = diagram_algebra.all_diagrams(n)
        for _ in range(500):
            x, y, z = (rng.choice(pool) for _ in range(3))
            xy, a = diagram_algebra.multiply(x, y)
            left, b = diagram_algebra.multiply(xy, z)
            yz, c = diagram_algebra.multiply(y, z)
            right, d = diagram_algebra.multiply(x, yz)
            if left != right or a + b != c + d:
                return False, f"associativity fails at n={n}: {x} ; {y} ; {z}"
    delta = diagram_algebra.LaurentPoly.delta()
    for n in (1, 2, 3, 4, 5):
        ident = diagram_algebra.AlgebraElement.basis(diagram_algebra.Diagram.identity(n))
        checks = []
        for i in range(1, n):
            s = diagram_algebra.generator("s", (i, i + 1), n)
            p2 = diagram_algebra.generator("p2", (i, i + 1), n)
            checks.append(diagram_algebra.multiply_elements(s, s) == ident)
            checks.append(diagram_algebra.multiply_elements(p2, p2) == p2)
        for i in range(1, n + 1):
            p1 = diagram_algebra.generator("p1", (i,), n)
            e = diagram_algebra.generator("e", (i,), n)
            checks.append(diagram_algebra.multiply_elements(p1, p1) == p1.scale(delta))
            checks.append(diagram_algebra.multiply_elements(e, e) == e)
        if not all(checks):
            return False, f"generator relation fails at n={n}"
    x = diagram_algebra.parse_diagram("1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", 5)
    y = diagram_algebra.parse_diagram("1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", 5)
    want = diagram_algebra.parse_diagram("1 | 2 3 4 -3 -4 | 5 -2 -5 | -1", 5)
    prod, loops = diagram_algebra.multiply(x, y)
    return prod == want and loops == 1, f"figure product delta^{loops} {prod}"


def _bell_triangle(m: int) -> int:
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _horizontal_strips(mu: Partition, k: int) -> list[Partition]:
    """Partitions obtained from ``mu`` by adding ``k`` nodes, no two in one column."""
    out = {mu}
    for _ in range(k):
        nxt = set()
        for lam in out:
            for r in range(1, len(lam) + 2):
                bigger = lam.add_node(r) if (r == 1 or lam[r - 1] > lam[r]) else None
                if bigger is not None:
                    nxt.add(bigger)
        out = nxt
    return [lam for lam in out if all(lam[i + 1] <= mu[i] for i in range(1, len(lam) + 1))]


def crit_dimensions(seed: int) -> tuple[bool, str]:
    fs = FieldSpec.prime(5, 3)
    sums = {}
    for n in (2, 3):
        sums[n] = sum(cell_module(lam, n, fs).dim ** 2 for lam in partitions_up_to(n))
    ok = sums[2] == _bell_triangle(4) == 15 and sums[3] == _bell_triangle(6) == 203
    for n in range(6):
        for t in range(n + 1):
            lhs = len(diagram_algebra.minimal_elements(n, t))
            rhs = sum(
                count_standard_tableaux(mu) * sum(count_standard_tableaux(lam) for lam in _horizontal_strips(mu, n - t))
                for mu in partitions_of(t)
            )
            if lhs != rhs:
                return False, f"|M({n},{t})| = {lhs} but bimodule count {rhs}"
    return ok, f"sum of squares {sums}"


def crit_kS4(seed: int) -> tuple[bool, str]:
    got = sym_group_decomp(4, 3, seed=seed)
    return got.same_entries(KS4_P3), f"diff={got.diff(KS4_P3)}"


def peel_check(p: int, seed: int) -> tuple[bool, str]:
    fs = FieldSpec.prime(p, 1)
    ident = Identifier(p, fs, "S")
    rng = np.random.default_rng(seed)
    for m in range(p):
        hook = Partition((p - m,) + (1,) * m)
        labels = sorted((ident.identify(f) for f in composition_factors(specht_module(hook, fs), rng)), key=str)
        if m == 0:
            want = [hook]
        elif m < p - 1:
            want = sorted([hook, Partition((p - m + 1,) + (1,) * (m - 1))], key=str)
        else:
            want = [Partition((2,) + (1,) * (p - 2))]
        if labels != want:
            return False, f"S^{hook.pretty()} over F_{p}: got {labels}, want {want}"
    return True, ""


def crit_peel(seed: int) -> tuple[bool, str]:
    for p in (3, 5):
        ok, detail = peel_check(p, seed)
        if not ok:
            return ok, detail
    return True, "p=3,5"


def crit_case_ii(seed: int) -> tuple[bool, str]:
    bad = []
    for n in (2, 3, 4):
        for d in range(5):
            th = decomp_charp_theorem(DecompRequest(n, 5, d))
            orc = decomposition_matrix_oracle(n, FieldSpec.prime(5, d), seed=seed)
            if not th.same_entries(orc):
                bad.append((n, d, th.diff(orc)))
    return not bad, f"mismatches={bad}" if bad else "15 configurations"


def crit_case_iii(seed: int) -> tuple[bool, str]:
    th3 = decomp_charp_theorem(DecompRequest(3, 3, 2))
    or3 = decomposition_matrix_oracle(3, FieldSpec.prime(3, 2), seed=seed)
    if not (th3.same_entries(CASE_III_P3) and or3.same_entries(CASE_III_P3)):
        return False, f"p=3: theorem diff {th3.diff(CASE_III_P3)}, oracle diff {or3.diff(CASE_III_P3)}"
    th5 = decomp_charp_theorem(DecompRequest(5, 5, 4))
    or5 = decomposition_matrix_oracle(5, FieldSpec.prime(5, 4), seed=seed)
    return th5.same_entries(or5), f"p=5 diff={th5.diff(or5)}"


def crit_case_i(seed: int) -> tuple[bool, str]:
    for n in (2, 3):
        orc = decomposition_matrix_oracle(n, FieldSpec.quadratic(3), seed=seed)
        want = stacked_symmetric(n, 3, seed=seed)
        if not orc.same_entries(want):
            return False, f"n={n} diff={orc.diff(want)}"
    return True, "n=2,3 over F_9"


def crit_product(seed: int) -> tuple[bool, str]:
    res = {p: product_check_remark(p) for p in (3, 5)}
    return all(res.values()), str(res)


def crit_counterexample(seed: int) -> tuple[bool, str]:
    rep = counterexample_report(seed)
    return rep.holds, str(rep.entries)


def crit_blocks(seed: int) -> tuple[bool, str]:
    labels = partitions_up_to(5).members
    for p in (3, 5):
        for d in range(p):
            for a in labels:
                for b in labels:
                    if block_theory.same_block_charp(a, b, d, p, 5) != block_theory.same_block_charp_multiset(a, b, d, p, 5):
                        return False, f"block tests disagree on {a},{b} p={p} delta={d}"
        for m in range(6):
            for a in partitions_of(m):
                for b in partitions_of(m):
                    same_gamma = abacus.gamma(a, 5, p) == abacus.gamma(b, 5, p)
                    if same_gamma != (abacus.p_core(a, p) == abacus.p_core(b, p)):
                        return False, f"core test disagrees on {a},{b} p={p}"
    for n in range(7):
        for d in range(-2, 11):
            block_theory.blocks_char0(n, d)
    return True, ""


def crit_psi(seed: int) -> tuple[bool, str]:
    for d in (1, 2):
        fs = FieldSpec.prime(3, d)
        for mu in partitions_up_to(4):
            if not psi_annihilator_check(mu, 4, fs):
                return False, f"mu={mu} delta={d}"
    return True, "all mu of size <= 4"


CRITERIA: dict[int, tuple[str, Callable[[int], tuple[bool, str]]]] = {
    1: ("abacus golden values", crit_abacus),
    2: ("diagram algebra properties", crit_diagrams),
    3: ("dimension identities", crit_dimensions),
    4: ("kS_4 in characteristic 3", crit_kS4),
    5: ("hook Specht modules", crit_peel),
    6: ("n < p theorem vs oracle", crit_case_ii),
    7: ("n = p, delta = p-1", crit_case_iii),
    8: ("delta outside F_p", crit_case_i),
    9: ("product identity", crit_product),
    10: ("no product formula at n=4, p=3", crit_counterexample),
    11: ("block cross-checks", crit_blocks),
    12: ("p_{i,j} annihilator", crit_psi),
}

SUITES = {
    "core": (1, 2, 3, 11, 12),
    "paper": (4, 5, 7, 9, 10),
    "all": tuple(range(1, 13)),
}


def run_criterion(number: int, seed: int = 0) -> CriterionResult:
    name, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        ok, detail = fn(seed)
    except Exception as exc:  # a crash is a failed criterion, reported by name
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, name, bool(ok), detail, time.perf_counter() - start)


def run_suite(suite: str, seed: int = 0) -> list[CriterionResult]:
    return [run_criterion(k, seed) for k in SUITES[suite]]
