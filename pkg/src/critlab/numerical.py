"""The integer inequality behind the exclusion of mixed middle-size obstructions.

For integers ``k, d, r, t'`` with ``d >= 0``, ``3 <= r <= k + d`` and
``1 <= t' <= r - d - 2``, put ``A = k + d - r + t'`` and
``M = r - d - 1 - t'``. For ``a + b = r`` with ``b >= 1`` and
``1 <= t_j <= M``::

    a*A + sum_j max(t_j*(t' + T + d - 1), A + t_j*(t_j - M)) >= k*t'

where ``T = sum_j t_j``. The sweep here checks this by enumeration, together
with the two linear certificates ``D1`` and ``D2`` of which at least one must
be nonnegative.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import combinations_with_replacement


class LemmaDomainError(ValueError):
    pass


@dataclass(frozen=True)
class NumericalLemmaInstance:
    k: int
    d: int
    r: int
    t_prime: int
    a: int
    b: int
    ts: tuple

    def __post_init__(self):
        object.__setattr__(self, "ts", tuple(int(x) for x in self.ts))
        problems = []
        if self.d < 0:
            problems.append("d >= 0")
        if not 3 <= self.r <= self.k + self.d:
            problems.append("3 <= r <= k+d")
        if not 1 <= self.t_prime <= self.r - self.d - 2:
            problems.append("1 <= t' <= r-d-2")
        if self.b < 1 or self.a < 0 or self.a + self.b != self.r:
            problems.append("b >= 1, a >= 0, a+b = r")
        if len(self.ts) != self.b:
            problems.append("len(ts) = b")
        if any(not 1 <= x <= self.M for x in self.ts):
            problems.append("1 <= t_j <= M")
        if problems:
            raise LemmaDomainError("instance outside the lemma's domain: " + ", ".join(problems))

    @property
    def A(self) -> int:
        return self.k + self.d - self.r + self.t_prime

    @property
    def M(self) -> int:
        return self.r - self.d - 1 - self.t_prime

    @property
    def T(self) -> int:
        return sum(self.ts)

    @property
    def n(self) -> int:
        return self.k + self.d - self.r

    @property
    def B(self) -> int:
        return self.b - self.M - self.d - 1

    @property
    def rhs(self) -> int:
        return self.k * self.t_prime

    def first_terms(self) -> list[int]:
        return [x * (self.t_prime + self.T + self.d - 1) for x in self.ts]

    def second_terms(self) -> list[int]:
        return [self.A + x * (x - self.M) for x in self.ts]

    @property
    def D1(self) -> int:
        n, M, d, b, T, tp = self.n, self.M, self.d, self.b, self.T, self.t_prime
        return n * (M + d + 1 - b) + T * (T + d - 1) + tp * (T + d - b)

    @property
    def D2(self) -> int:
        n, M, d, tp = self.n, self.M, self.d, self.t_prime
        return n * (M + d + 1) + d * tp + sum(x * (x - M) for x in self.ts)

    def D1_direct(self) -> int:
        return self.a * self.A + sum(self.first_terms()) - self.rhs

    def D2_direct(self) -> int:
        return self.a * self.A + sum(self.second_terms()) - self.rhs


def numerical_lemma_lhs(inst: NumericalLemmaInstance) -> int:
    return inst.a * inst.A + sum(max(u, v) for u, v in zip(inst.first_terms(), inst.second_terms()))


def iter_instances(k_max: int, d_max: int, k_min: int = 1, d_min: int = 0):
    """Every valid instance in range, with nondecreasing ``t_j``."""
    for k in range(k_min, k_max + 1):
        for d in range(d_min, d_max + 1):
            for r in range(3, k + d + 1):
                for tp in range(1, r - d - 1):
                    M = r - d - 1 - tp
                    for b in range(1, r + 1):
                        for ts in combinations_with_replacement(range(1, M + 1), b):
                            yield NumericalLemmaInstance(k, d, r, tp, r - b, b, ts)


CSV_FIELDS = ["k", "d", "r", "t_prime", "a", "b", "t_vector", "LHS", "kt_prime", "D1", "D2"]


@dataclass
class SweepResult:
    k_max: int
    d_max: int
    instances: int = 0
    counterexamples: list = field(default_factory=list)
    dichotomy_failures: list = field(default_factory=list)
    decomposition_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.counterexamples or self.dichotomy_failures or self.decomposition_failures)

    def summary(self) -> dict:
        return {
            "k_max": self.k_max,
            "d_max": self.d_max,
            "instances": self.instances,
            "counterexamples": self.counterexamples,
            "dichotomy_failures": self.dichotomy_failures,
            "decomposition_failures": self.decomposition_failures,
        }


def _row(inst, lhs):
    return {
        "k": inst.k, "d": inst.d, "r": inst.r, "t_prime": inst.t_prime,
        "a": inst.a, "b": inst.b, "t_vector": " ".join(map(str, inst.ts)),
        "LHS": lhs, "kt_prime": inst.rhs, "D1": inst.D1, "D2": inst.D2,
    }


def numerical_lemma_sweep(k_max: int, d_max: int, csv_out=None) -> SweepResult:
    """Enumerate every instance with ``k <= k_max`` and ``d <= d_max``.

    Records instances where the inequality fails, where both ``D1`` and
    ``D2`` are negative, or where ``LHS - kt'`` falls below
    ``max(D1, D2)``. With ``csv_out`` (a text stream) every instance is
    written as a CSV row.
    """
    result = SweepResult(k_max, d_max)
    writer = None
    if csv_out is not None:
        writer = csv.DictWriter(csv_out, fieldnames=CSV_FIELDS)
        writer.writeheader()
    for inst in iter_instances(k_max, d_max):
        result.instances += 1
        lhs = numerical_lemma_lhs(inst)
        d1, d2 = inst.D1, inst.D2
        row = None
        if lhs < inst.rhs:
            row = _row(inst, lhs)
            result.counterexamples.append(row)
        if max(d1, d2) < 0:
            row = row or _row(inst, lhs)
            result.dichotomy_failures.append(row)
        if lhs - inst.rhs < max(d1, d2):
            row = row or _row(inst, lhs)
            result.decomposition_failures.append(row)
        if writer is not None:
            writer.writerow(row or _row(inst, lhs))
    return result


def sweep_csv(k_max: int, d_max: int) -> tuple[SweepResult, str]:
    buf = io.StringIO()
    res = numerical_lemma_sweep(k_max, d_max, csv_out=buf)
    return res, buf.getvalue()
