"""Named verification suites backing the CLI `verify` subcommand.

Every suite returns a list of CheckResult records; a check that fails
carries a witness payload with the two sides that disagreed.  Randomized
suites draw from a fixed seed so output is identical across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import recursion, symmetric, trees, zeta

__all__ = ["CheckResult", "SuiteReport", "SUITES", "run_suite", "suite_names"]

_SEED = 0x5EED


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    max_k: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "max_k": self.max_k,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _equal(name: str, got, expected) -> CheckResult:
    ok = got == expected
    witness = None if ok else {"got": str(got), "expected": str(expected)}
    return CheckResult(name=name, passed=ok, witness=witness)


def _random_variables(rng: random.Random) -> symmetric.VariableSet:
    n = rng.randint(1, 8)
    return symmetric.VariableSet(
        Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(n)
    )


def _suite_newton_girard(max_k: int) -> list[CheckResult]:
    rng = random.Random(_SEED)
    checks = []
    for trial in range(50):
        vars = _random_variables(rng)
        for k in range(1, min(vars.size, max_k) + 1):
            res = symmetric.newton_girard_check(vars, k)
            if not res.passed:
                checks.append(
                    CheckResult(
                        name=f"newton-girard trial {trial} k={k}",
                        passed=False,
                        witness={"lhs": str(res.lhs), "rhs": str(res.rhs)},
                    )
                )
                break
        else:
            checks.append(CheckResult(name=f"newton-girard trial {trial}", passed=True))
    inv_squares = symmetric.VariableSet.inverse_squares(12)
    res = symmetric.newton_girard_check(inv_squares, 5)
    checks.append(
        CheckResult(
            name="newton-girard inverse squares N=12 k=5",
            passed=res.passed,
            witness=None if res.passed else {"lhs": str(res.lhs), "rhs": str(res.rhs)},
        )
    )
    return checks


def _suite_cycle_index(max_k: int) -> list[CheckResult]:
    rng = random.Random(_SEED + 1)
    checks = []
    for trial in range(50):
        vars = _random_variables(rng)
        for k in range(1, min(vars.size, max_k) + 1):
            got = symmetric.cycle_index_elementary(vars, k)
            expected = symmetric.elementary_symmetric(vars, k)
            if got != expected:
                checks.append(
                    CheckResult(
                        name=f"cycle-index trial {trial} k={k}",
                        passed=False,
                        witness={"got": str(got), "expected": str(expected)},
                    )
                )
                break
        else:
            checks.append(CheckResult(name=f"cycle-index trial {trial}", passed=True))
    inv_squares = symmetric.VariableSet.inverse_squares(4)
    checks.append(
        _equal(
            "cycle-index inverse squares N=4 k=4",
            symmetric.cycle_index_elementary(inv_squares, 4),
            symmetric.elementary_symmetric(inv_squares, 4),
        )
    )
    return checks


def _suite_trees(max_k: int) -> list[CheckResult]:
    checks = []
    for k in range(2, max_k + 1):
        count = sum(1 for _ in trees.enumerate_trees(k))
        checks.append(_equal(f"tree count k={k}", count, trees.catalan(k - 1)))
        checks.append(
            _equal(
                f"polynomial via trees k={k}",
                trees.polynomial_via_trees(k),
                recursion.numerator_polynomial(k),
            )
        )
        checks.append(
            _equal(
                f"numerator via trees k={k}",
                trees.numerator_via_trees(k),
                recursion.zeta_numerator(k),
            )
        )
    return checks


def _suite_coeffs(max_k: int) -> list[CheckResult]:
    checks = []
    for k in range(2, max_k + 1):
        expanded = recursion.expand_basis(recursion.basis_coefficients(k), k)
        checks.append(
            _equal(f"basis expansion k={k}", expanded, recursion.numerator_polynomial(k))
        )
    return checks


def _suite_bernoulli(max_k: int) -> list[CheckResult]:
    checks = []
    for k in range(1, max_k + 1):
        checks.append(
            _equal(
                f"bernoulli k={k}",
                zeta.bernoulli_even(k),
                zeta.bernoulli_classical(2 * k),
            )
        )
    return checks


def _suite_fn(max_k: int) -> list[CheckResult]:
    checks = []
    for n in range(2, 9):
        for k in range(max(1, n - 1), max_k + 1):
            checks.append(
                _equal(
                    f"partial sum n={n} k={k}",
                    zeta.newton_partial_sum(n, k),
                    zeta.newton_partial_closed(n, k),
                )
            )
    for n in range(2, 9):
        sign = 1 if n % 2 else -1
        checks.append(
            _equal(
                f"partial sum closes to zeta(2n) n={n}",
                sign * zeta.newton_partial_sum(n, n),
                zeta.zeta_even_rational(n),
            )
        )
    return checks


def _suite_positivity(max_k: int) -> list[CheckResult]:
    checks = []
    for k in range(1, max_k + 1):
        coeffs = recursion.translated_polynomial(k).coeffs
        bad = [str(c) for c in coeffs if c <= 0]
        checks.append(
            CheckResult(
                name=f"translated positivity k={k}",
                passed=not bad,
                witness=None if not bad else {"nonpositive": bad},
            )
        )
    return checks


def _suite_leading(max_k: int) -> list[CheckResult]:
    checks = []
    for k in range(2, max_k + 1):
        poly = recursion.numerator_polynomial(k)
        checks.append(_equal(f"degree k={k}", poly.degree, k - 2))
        checks.append(
            _equal(
                f"leading coefficient k={k}",
                poly.coeffs[-1],
                recursion.zeta_numerator(k - 1) * 2 ** (k - 2),
            )
        )
    return checks


def _suite_lemma_2ni(max_k: int) -> list[CheckResult]:
    return [
        CheckResult(
            name=f"shifted product identity n={n}",
            passed=recursion.shifted_product_identity(n),
        )
        for n in range(0, max_k + 1)
    ]


@dataclass(frozen=True)
class _Suite:
    run: Callable[[int], list[CheckResult]]
    default_max_k: int
    hard_max_k: int


SUITES: dict[str, _Suite] = {
    "newton-girard": _Suite(_suite_newton_girard, 8, 8),
    "cycle-index": _Suite(_suite_cycle_index, 8, 8),
    "trees": _Suite(_suite_trees, 10, trees.TREE_SUM_MAX),
    "coeffs": _Suite(_suite_coeffs, 12, 14),
    "bernoulli": _Suite(_suite_bernoulli, 20, 64),
    "fn": _Suite(_suite_fn, 10, 12),
    "positivity": _Suite(_suite_positivity, 15, 20),
    "leading": _Suite(_suite_leading, 12, 14),
    "lemma-2ni": _Suite(_suite_lemma_2ni, 6, 12),
}


def suite_names() -> list[str]:
    return ["all"] + list(SUITES)


def run_suite(name: str, max_k: Optional[int] = None) -> list[SuiteReport]:
    """Run one named suite, or every suite when name is "all".

    max_k overrides a suite's default bound; it must stay within the
    documented hard bound.  With "all", max_k applies to each suite capped
    at the suite's own hard bound.
    """
    if name == "all":
        reports = []
        for key in SUITES:
            capped = None if max_k is None else min(max_k, SUITES[key].hard_max_k)
            reports.extend(run_suite(key, capped))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {suite_names()}")
    suite = SUITES[name]
    k = suite.default_max_k if max_k is None else max_k
    if not 1 <= k <= suite.hard_max_k:
        raise ValueError(
            f"suite {name!r} accepts max_k between 1 and {suite.hard_max_k}, got {k}"
        )
    return [SuiteReport(suite=name, max_k=k, checks=tuple(suite.run(k)))]
