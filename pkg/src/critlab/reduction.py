"""Reduction packages: the numeric ledger left over after staged recoloring.

A package summarizes a stable partition ``S_1..S_chi`` of a minimal
counterexample with a template ``(S, c, F)`` over a palette of
``3k - 1 + d`` colors. Class ``i`` carries ``s_cap[i] = |S & S_i|``, the
weight quotient ``p_i[i]`` split as ``q_i[i] + t_i[i]``, the excess
``x_i[i]``, and, for residual classes ``i`` in ``I = I0 | I1``, the residual
weight ``y[i]``, the number of colors ``used_outside[i]`` already used
outside the class, and the residual list ``lists[i]``. Totals ``t``,
``t_prime``, ``p`` and ``s1`` are stored and cross-checked.

Classes are indexed from 0 and the palette is ``range(palette_size)``.
Everything is exact integer arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from typing import Mapping

from .hall import HallInstance, all_violators, largest_violator, solve_sdr, MAX_EXHAUSTIVE

CLAUSES = (
    "palette",
    "class split",
    "excess range",
    "budget inequality",
    "index-set consistency",
    "residual weight",
    "outside-color bound",
    "list size bound",
    "derived totals",
    "class excess lower bound",
    "chromatic regime",
    "large-list witness",
)


class ReductionError(ValueError):
    pass


class PackageSamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ReductionPackage:
    k: int
    palette_size: int
    d: int
    s_cap: tuple
    p_i: tuple
    q_i: tuple
    t_i: tuple
    x_i: tuple
    I0: frozenset
    I1: frozenset
    I2: frozenset
    y: Mapping[int, int]
    used_outside: Mapping[int, int]
    lists: Mapping[int, frozenset]
    t: int
    t_prime: int
    p: int
    s1: int
    J: frozenset | None = None

    def __post_init__(self):
        for name in ("s_cap", "p_i", "q_i", "t_i", "x_i"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for name in ("I0", "I1", "I2"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if self.J is not None:
            object.__setattr__(self, "J", frozenset(self.J))
        object.__setattr__(self, "y", dict(self.y))
        object.__setattr__(self, "used_outside", dict(self.used_outside))
        object.__setattr__(self, "lists", {i: frozenset(v) for i, v in self.lists.items()})

    @property
    def chi(self) -> int:
        return len(self.p_i)

    @property
    def I(self) -> frozenset:
        return self.I0 | self.I1

    @property
    def S_size(self) -> int:
        return sum(self.s_cap)

    @property
    def palette(self) -> range:
        return range(self.palette_size)

    def residual_order(self) -> list[int]:
        return sorted(self.I)

    def residual_instance(self) -> HallInstance:
        return HallInstance(tuple(self.lists[i] for i in self.residual_order()), frozenset(self.palette))

    def mutate(self, **changes) -> "ReductionPackage":
        return replace(self, **changes)

    def to_dict(self) -> dict:
        def imap(m):
            return {str(i): v for i, v in sorted(m.items())}

        return {
            "k": self.k,
            "palette_size": self.palette_size,
            "d": self.d,
            "chi": self.chi,
            "s_cap": list(self.s_cap),
            "p_i": list(self.p_i),
            "q_i": list(self.q_i),
            "t_i": list(self.t_i),
            "x_i": list(self.x_i),
            "I0": sorted(self.I0),
            "I1": sorted(self.I1),
            "I2": sorted(self.I2),
            "y": imap(self.y),
            "used_outside": imap(self.used_outside),
            "lists": {str(i): sorted(v) for i, v in sorted(self.lists.items())},
            "t": self.t,
            "t_prime": self.t_prime,
            "p": self.p,
            "s1": self.s1,
            "J": None if self.J is None else sorted(self.J),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "ReductionPackage":
        def imap(m):
            return {int(i): v for i, v in m.items()}

        J = data.get("J")
        return cls(
            k=data["k"],
            palette_size=data["palette_size"],
            d=data["d"],
            s_cap=data["s_cap"],
            p_i=data["p_i"],
            q_i=data["q_i"],
            t_i=data["t_i"],
            x_i=data["x_i"],
            I0=data["I0"],
            I1=data["I1"],
            I2=data["I2"],
            y=imap(data["y"]),
            used_outside=imap(data["used_outside"]),
            lists={int(i): frozenset(v) for i, v in data["lists"].items()},
            t=data["t"],
            t_prime=data["t_prime"],
            p=data["p"],
            s1=data["s1"],
            J=None if J is None else frozenset(J),
        )


@dataclass
class ValidationReport:
    failures: dict = field(default_factory=dict)

    def fail(self, clause: str, message: str) -> None:
        self.failures.setdefault(clause, []).append(message)

    @property
    def passed(self) -> bool:
        return not self.failures

    def failed_clauses(self) -> list[str]:
        return [c for c in CLAUSES if c in self.failures]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "clauses": {c: ("fail" if c in self.failures else "pass") for c in CLAUSES},
            "messages": {c: self.failures[c] for c in self.failed_clauses()},
        }


def validate_package(pkg: ReductionPackage) -> ValidationReport:
    """Check every ledger clause independently; failures are collected, never raised."""
    rep = ValidationReport()
    k, C, chi = pkg.k, pkg.palette_size, pkg.chi
    classes = range(chi)

    if k < 1 or pkg.d < 0 or C != 3 * k - 1 + pkg.d:
        rep.fail("palette", f"need k >= 1, d >= 0 and |C| = 3k-1+d; got k={k}, d={pkg.d}, |C|={C}")

    lengths = {len(pkg.s_cap), len(pkg.p_i), len(pkg.q_i), len(pkg.t_i), len(pkg.x_i)}
    if len(lengths) != 1:
        rep.fail("class split", f"per-class sequences have different lengths {sorted(lengths)}")
        return rep
    for i in classes:
        p, q, t = pkg.p_i[i], pkg.q_i[i], pkg.t_i[i]
        if p != q + t or not 0 <= q <= p:
            rep.fail("class split", f"class {i}: p={p}, q={q}, t={t}")

    for i in classes:
        if not 0 <= pkg.x_i[i] < k:
            rep.fail("excess range", f"class {i}: x={pkg.x_i[i]} not in [0, {k})")

    if sum(pkg.x_i) >= k * pkg.t_prime:
        rep.fail("budget inequality", f"sum x = {sum(pkg.x_i)} >= k t' = {k * pkg.t_prime}")

    everything = frozenset(classes)
    zero_t = frozenset(i for i in classes if pkg.t_i[i] == 0)
    if pkg.I0 != zero_t:
        rep.fail("index-set consistency", f"I0={sorted(pkg.I0)} but t_i = 0 exactly on {sorted(zero_t)}")
    if not pkg.I2 <= everything - zero_t:
        rep.fail("index-set consistency", f"I2={sorted(pkg.I2)} must avoid I0 and stay in range")
    if pkg.I1 != everything - (pkg.I0 | pkg.I2):
        rep.fail("index-set consistency", f"I1={sorted(pkg.I1)} is not the complement of I0 and I2")

    I = sorted(pkg.I & everything)
    for i in I:
        y = pkg.y.get(i)
        if y is None:
            rep.fail("residual weight", f"class {i}: missing y")
            continue
        if not 0 <= y < k:
            rep.fail("residual weight", f"class {i}: y={y} not in [0, {k})")
        if i in pkg.I0 and pkg.x_i[i] != y:
            rep.fail("residual weight", f"class {i} in I0: x={pkg.x_i[i]} != y={y}")
        if i in pkg.I1 and (pkg.t_i[i] + 1) * y > pkg.x_i[i] + pkg.t_i[i] * k:
            rep.fail("residual weight", f"class {i}: residual part heavier than the lightest of {pkg.t_i[i] + 1}")

    for i in I:
        u = pkg.used_outside.get(i)
        bound = 2 * k - pkg.t_prime - pkg.s_cap[i] - pkg.p_i[i]
        if u is None:
            rep.fail("outside-color bound", f"class {i}: missing used_outside")
        elif not 0 <= u <= bound:
            rep.fail("outside-color bound", f"class {i}: used_outside={u} not in [0, {bound}]")

    for i in I:
        lst = pkg.lists.get(i)
        if lst is None:
            rep.fail("list size bound", f"class {i}: missing residual list")
            continue
        if not lst <= frozenset(pkg.palette):
            rep.fail("list size bound", f"class {i}: list leaves the palette")
        u, y = pkg.used_outside.get(i), pkg.y.get(i)
        if u is not None and y is not None and len(lst) < C - u - y:
            rep.fail("list size bound", f"class {i}: |L|={len(lst)} < |C| - used - y = {C - u - y}")

    s1 = sum(pkg.t_i[i] for i in pkg.I1 if i in everything)
    if pkg.s1 != s1:
        rep.fail("derived totals", f"s1={pkg.s1}, expected {s1}")
    if pkg.t != 2 * k - pkg.S_size:
        rep.fail("derived totals", f"t={pkg.t}, expected 2k-|S|={2 * k - pkg.S_size}")
    if pkg.p != sum(pkg.p_i):
        rep.fail("derived totals", f"p={pkg.p}, expected {sum(pkg.p_i)}")
    if pkg.t_prime != pkg.t - pkg.p:
        rep.fail("derived totals", f"t'={pkg.t_prime}, expected t-p={pkg.t - pkg.p}")

    for i in I:
        lb = excess_floor(pkg, i)
        if pkg.x_i[i] < lb:
            rep.fail("class excess lower bound", f"class {i}: x={pkg.x_i[i]} < {lb}")

    if not 1 <= chi <= C - 2 * k + 2:
        rep.fail("chromatic regime", f"chi={chi} not in [1, |C|-2k+2={C - 2 * k + 2}]")

    if pkg.J is not None:
        for msg in _witness_problems(pkg, pkg.J):
            rep.fail("large-list witness", msg)
    return rep


def excess_floor(pkg: ReductionPackage, i: int) -> int:
    """Lower bound on ``x_i`` for a residual class, from the stored totals."""
    C, k = pkg.palette_size, pkg.k
    return pkg.t_i[i] * (C - 3 * k + pkg.t_prime + pkg.s1 + pkg.s_cap[i] + pkg.q_i[i])


def residual_weight_floor(pkg: ReductionPackage, i: int, r: int) -> int:
    """Least ``y_i`` compatible with ``|L_i| <= r - 1``; see :func:`check_residual_weight_floor`."""
    return pkg.k + pkg.d - r + pkg.t_prime + pkg.s_cap[i] + pkg.p_i[i]


def check_residual_weight_floor(pkg: ReductionPackage) -> list[tuple[int, int]]:
    """Pairs ``(i, r)`` where a list of size at most ``r - 1`` coexists with ``y_i`` below the floor.

    For each residual class the tightest ``r = |L_i| + 1`` is tested. On a
    valid package the list-size and outside-color clauses force the floor,
    so the result is empty.
    """
    bad = []
    for i in pkg.residual_order():
        r = len(pkg.lists[i]) + 1
        if pkg.y[i] < residual_weight_floor(pkg, i, r):
            bad.append((i, r))
    return bad


def _witness_problems(pkg: ReductionPackage, J) -> list[str]:
    J = frozenset(J)
    I = pkg.I
    out = []
    if not J <= I:
        out.append(f"J={sorted(J)} not inside I={sorted(I)}")
    if not pkg.I1 <= J:
        out.append(f"I1={sorted(pkg.I1)} not inside J={sorted(J)}")
    cap = pkg.palette_size - 2 * pkg.k + 1
    if len(J) > cap:
        out.append(f"|J|={len(J)} > |C|-2k+1={cap}")
    short = [i for i in sorted(I - J) if len(pkg.lists.get(i, ())) < len(I)]
    if short:
        out.append(f"classes {short} outside J have lists shorter than |I|={len(I)}")
    return out


def check_no_large_obstruction(pkg: ReductionPackage, J=None) -> bool:
    """True iff no violating residual subfamily has ``k + d + 1`` or more members.

    ``J`` (default: the package's own) must contain ``I1``, have at most
    ``|C| - 2k + 1`` members, and every residual class outside it must have
    a list of at least ``|I|`` colors. The answer comes from
    :func:`largest_violator`: the deficiency core from matching, then a
    pruned search over closed subfamilies.
    """
    J = pkg.J if J is None else frozenset(J)
    if J is None:
        raise ReductionError("large-list witness hypotheses violated: no J supplied")
    problems = _witness_problems(pkg, J)
    if problems:
        raise ReductionError("large-list witness hypotheses violated: " + "; ".join(problems))
    need = pkg.k + pkg.d + 1
    return len(largest_violator(pkg.residual_instance(), at_least=need)) < need


@dataclass
class MiddleRangeReport:
    meets_I1: list = field(default_factory=list)
    inside_I0: list = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.meets_I1 or self.inside_I0)

    def to_dict(self) -> dict:
        return {
            "meets_I1": [sorted(a) for a in self.meets_I1],
            "inside_I0": [sorted(a) for a in self.inside_I0],
        }


def check_middle_range(pkg: ReductionPackage) -> MiddleRangeReport:
    """Every violating residual subfamily with between 3 and ``k + d`` members.

    Works on any package, valid or not, so it can be aimed at hand-broken
    inputs.
    """
    order = pkg.residual_order()
    if len(order) > MAX_EXHAUSTIVE:
        raise ReductionError("enumeration out of range")
    rep = MiddleRangeReport()
    for fam in all_violators(pkg.residual_instance(), 3, pkg.k + pkg.d):
        A = frozenset(order[j] for j in fam)
        if A & pkg.I1:
            rep.meets_I1.append(A)
        else:
            rep.inside_I0.append(A)
    return rep


@dataclass
class ResidualVerdict:
    feasible: bool
    sdr: dict | None = None
    violator: frozenset | None = None
    stepping_stones: dict = field(default_factory=dict)

    def __bool__(self):
        return self.feasible

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "sdr": None if self.sdr is None else {str(i): c for i, c in sorted(self.sdr.items())},
            "violator": None if self.violator is None else sorted(self.violator),
            "stepping_stones": self.stepping_stones,
        }


def residual_hall(pkg: ReductionPackage) -> ResidualVerdict:
    """Hall test of the residual lists, with class indices restored."""
    order = pkg.residual_order()
    res = solve_sdr(pkg.residual_instance())
    if res.feasible:
        return ResidualVerdict(True, sdr={order[j]: c for j, c in res.sdr.items()})
    return ResidualVerdict(False, violator=frozenset(order[j] for j in res.violator))


def check_residual_feasibility(pkg: ReductionPackage) -> ResidualVerdict:
    """Whether the residual lists admit distinct representatives (needs ``d >= 1``).

    On failure the list-size floors ``|L_i| >= d + t' + |S & S_i| + p_i``
    and ``d + t' >= 2`` are re-checked and attached to the verdict.
    """
    if pkg.d < 1:
        raise ReductionError("outside theorem range; use boundary_search")
    verdict = residual_hall(pkg)
    if not verdict:
        floors = {}
        for i in pkg.residual_order():
            need = pkg.d + pkg.t_prime + pkg.s_cap[i] + pkg.p_i[i]
            floors[str(i)] = {"size": len(pkg.lists[i]), "floor": need, "ok": len(pkg.lists[i]) >= need}
        verdict.stepping_stones = {
            "list_floors": floors,
            "d_plus_t_prime_at_least_2": pkg.d + pkg.t_prime >= 2,
            "validation": validate_package(pkg).failed_clauses(),
        }
    return verdict


def _split(rng: random.Random, total: int, parts: int) -> list[int]:
    out = [0] * parts
    for _ in range(total):
        out[rng.randrange(parts)] += 1
    return out


def _sample_list(rng: random.Random, size: int, palette_size: int) -> frozenset:
    if rng.random() < 0.75:
        # crowd lists into a short prefix so that they overlap heavily
        width = min(palette_size, size + rng.randint(0, 2))
    else:
        width = palette_size
    return frozenset(rng.sample(range(width), size))


def _try_package(rng: random.Random, k: int, d: int) -> ReductionPackage | None:
    C = 3 * k - 1 + d
    chi = rng.randint(1, C - 2 * k + 2)
    S_size = rng.randint(0, 2 * k - 1)
    t = 2 * k - S_size
    # small t' keeps lists short and the excess budget k t' tight
    t_prime = rng.randint(1, min(2, t)) if rng.random() < 0.6 else rng.randint(1, t)
    p = t - t_prime
    s_cap = _split(rng, S_size, chi)
    p_i = _split(rng, p, chi)
    if rng.random() < 0.5:
        # t_i in {0, 1} keeps the excess floors of I1 classes small
        q_i = [pi - min(pi, rng.randint(0, 1)) for pi in p_i]
    else:
        q_i = [rng.randint(0, pi) for pi in p_i]
    t_i = [pi - qi for pi, qi in zip(p_i, q_i)]

    I0 = {i for i in range(chi) if t_i[i] == 0}
    I2 = {i for i in range(chi) if i not in I0 and rng.random() < 0.15}
    I1 = set(range(chi)) - I0 - I2

    def floors():
        s1 = sum(t_i[i] for i in I1)
        return s1, {i: t_i[i] * (C - 3 * k + t_prime + s1 + s_cap[i] + q_i[i]) for i in I1}

    # classes whose excess floor cannot fit move to I2
    s1, lb = floors()
    while lb and (max(lb.values()) >= k or sum(lb.values()) > k * t_prime - 1):
        worst = max(sorted(lb), key=lambda i: lb[i])
        I1.discard(worst)
        I2.add(worst)
        s1, lb = floors()

    x_i = [lb.get(i, 0) for i in range(chi)]
    room = k * t_prime - 1 - sum(x_i)
    if room < 0:
        return None
    for i in rng.sample(range(chi), chi):
        add = rng.randint(0, min(k - 1 - x_i[i], room))
        x_i[i] += add
        room -= add

    y = {}
    for i in I0:
        y[i] = x_i[i]
    for i in I1:
        top = min(k - 1, (x_i[i] + t_i[i] * k) // (t_i[i] + 1))
        y[i] = top if rng.random() < 0.5 else rng.randint(0, top)

    used = {}
    for i in I0 | I1:
        top = 2 * k - t_prime - s_cap[i] - p_i[i]
        used[i] = top if rng.random() < 0.6 else rng.randint(0, top)

    if len(I1) > C - 2 * k + 1:
        return None
    J = set(I1)
    for i in sorted(I0):
        if len(J) < C - 2 * k + 1 and rng.random() < 0.5:
            J.add(i)

    n_res = len(I0 | I1)
    lists = {}
    for i in sorted(I0 | I1):
        floor = max(0, C - used[i] - y[i])
        if i not in J:
            floor = max(floor, n_res)
        size = floor if rng.random() < 0.7 else rng.randint(floor, C)
        lists[i] = _sample_list(rng, size, C)

    return ReductionPackage(
        k=k, palette_size=C, d=d,
        s_cap=s_cap, p_i=p_i, q_i=q_i, t_i=t_i, x_i=x_i,
        I0=I0, I1=I1, I2=I2, y=y, used_outside=used, lists=lists,
        t=t, t_prime=t_prime, p=p, s1=s1, J=frozenset(J),
    )


def generate_package(k: int, d: int, seed: int, max_tries: int = 1000) -> ReductionPackage:
    """Sample a package satisfying every ledger clause; deterministic in ``(k, d, seed)``.

    Lists are drawn as short as the clauses allow and crowded into few
    colors, to give violators the best chance to appear.
    """
    if k < 1 or d < 0:
        raise ReductionError(f"need k >= 1 and d >= 0, got k={k}, d={d}")
    rng = random.Random(f"package:{k}:{d}:{seed}")
    for _ in range(max_tries):
        pkg = _try_package(rng, k, d)
        if pkg is None:
            continue
        report = validate_package(pkg)
        if not report.passed:
            raise AssertionError(f"generator produced an invalid package: {report.failures}")
        return pkg
    raise PackageSamplingError(f"no package sampled (k={k}, d={d}, seed={seed}, tries={max_tries})")


def boundary_search_d0(k: int, budget: int, seed: int = 0, keep: int = 5) -> dict:
    """Sample packages with ``|C| = 3k - 1`` and count violating residual families.

    An exploration report only. Each violating package found is re-validated
    before it is recorded.
    """
    sampled = rejected = found = 0
    examples = []
    for j in range(budget):
        try:
            pkg = generate_package(k, 0, seed * 1_000_003 + j)
        except PackageSamplingError:
            rejected += 1
            continue
        sampled += 1
        verdict = residual_hall(pkg)
        if verdict:
            continue
        found += 1
        if len(examples) < keep:
            examples.append({
                "seed": seed * 1_000_003 + j,
                "revalidated": validate_package(pkg).passed,
                "violator": sorted(verdict.violator),
                "violator_lists": {str(i): sorted(pkg.lists[i]) for i in sorted(verdict.violator)},
                "package": pkg.to_dict(),
            })
    return {
        "k": k,
        "d": 0,
        "palette_size": 3 * k - 1,
        "budget": budget,
        "seed": seed,
        "sampled": sampled,
        "rejected": rejected,
        "hall_bad_found": found,
        "examples": examples,
        "note": "no valid samples" if sampled == 0 else "exploration only; existence is not decided",
    }
