"""The inequality registry: every bound as an executable rule.

Rules evaluate a GraphProfile in exact rational arithmetic.  Each rule
carries a stable id, a kind (theorem / proposition / lemma-bound /
conjecture / external-cited), a conjunctive applicability guard over the
profile's structure flags, and a relation between two rational sides.
"Tight" means exact equality (for floor/ceiling forms, equality of the
rounded expression).  Rules never run solvers themselves; they only
read the profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .errors import MissingProfileField, NuLabError
from .graph import MultiGraph


@dataclass(frozen=True)
class ProfileFlags:
    connected: bool
    cubic: bool
    bridgeless: bool
    max_degree: int
    cycle_rank: int
    is_tree: bool
    is_unicyclic: bool
    claw_free: bool
    bipartite: bool
    nearly_bipartite: bool
    has_perfect_matching: bool


@dataclass(frozen=True)
class GraphProfile:
    n: int
    m: int
    nu: dict[int, int]
    flags: ProfileFlags
    r3: Optional[int] = None
    oG: Optional[int] = None
    xk: dict[int, int] = field(default_factory=dict)

    def nu_at(self, k: int) -> int:
        if k not in self.nu:
            raise MissingProfileField(f"nu[{k}]")
        return self.nu[k]

    def r3_value(self) -> int:
        if self.r3 is None:
            raise MissingProfileField("r3")
        return self.r3


@dataclass(frozen=True)
class RuleReport:
    rule_id: str
    kind: str
    applicable: bool
    holds: Optional[bool] = None
    tight: Optional[bool] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    k: Optional[int] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class Rule:
    rule_id: str
    kind: str
    guard: Callable[[GraphProfile], bool]
    body: Callable[[GraphProfile], list[RuleReport]]
    note: Optional[str] = None

    def evaluate(self, profile: GraphProfile) -> list[RuleReport]:
        if not self.guard(profile):
            return [
                RuleReport(self.rule_id, self.kind, applicable=False, note=self.note)
            ]
        return self.body(profile)


def _cmp(op: str, lhs: Fraction, rhs: Fraction) -> tuple[bool, bool]:
    """(holds, tight) for the relation lhs op rhs."""
    if op == "ge":
        return lhs >= rhs, lhs == rhs
    if op == "le":
        return lhs <= rhs, lhs == rhs
    if op == "eq":
        return lhs == rhs, lhs == rhs
    if op == "lt":
        return lhs < rhs, False
    if op == "ne":
        return lhs != rhs, False
    raise ValueError(op)


def _simple(
    rule_id: str,
    kind: str,
    guard: Callable[[GraphProfile], bool],
    op: str,
    lhs_fn: Callable[[GraphProfile], Fraction],
    rhs_fn: Callable[[GraphProfile], Fraction],
    note: Optional[str] = None,
) -> Rule:
    def body(p: GraphProfile) -> list[RuleReport]:
        lhs = Fraction(lhs_fn(p))
        rhs = Fraction(rhs_fn(p))
        holds, tight = _cmp(op, lhs, rhs)
        return [
            RuleReport(rule_id, kind, True, holds, tight, lhs, rhs, note=note)
        ]

    return Rule(rule_id, kind, guard, body, note)


def _per_k(
    rule_id: str,
    kind: str,
    guard: Callable[[GraphProfile], bool],
    form: str,
    note: Optional[str] = None,
) -> Rule:
    """The second-difference rules, one report per evaluable k >= 2.

    form 'floor':    2*nu_k >= nu_{k-1} + nu_{k+1} - 1
    form 'averaged': 2*nu_k >= nu_{k-1} + nu_{k+1}
    """

    def body(p: GraphProfile) -> list[RuleReport]:
        out = []
        ks = sorted(k for k in p.nu if k >= 2 and k - 1 in p.nu and k + 1 in p.nu)
        if not ks:
            raise MissingProfileField(f"nu[k-1..k+1] for {rule_id}")
        for k in ks:
            s = p.nu[k - 1] + p.nu[k + 1]
            lhs = Fraction(2 * p.nu[k])
            if form == "floor":
                rhs = Fraction(s - 1)
                holds = 2 * p.nu[k] >= s - 1
                tight = p.nu[k] == s // 2
            else:
                rhs = Fraction(s)
                holds = 2 * p.nu[k] >= s
                tight = 2 * p.nu[k] == s
            out.append(RuleReport(rule_id, kind, True, holds, tight, lhs, rhs, k, note))
        return out

    return Rule(rule_id, kind, guard, body, note)


def _xk_rule() -> Rule:
    rule_id, kind = "XK", "lemma-bound"

    def guard(p: GraphProfile) -> bool:
        return p.flags.is_unicyclic and any(
            k in p.xk and k - 1 in p.xk for k in range(2, 10)
        )

    def body(p: GraphProfile) -> list[RuleReport]:
        out = []
        for k in sorted(p.xk):
            if k - 1 not in p.xk:
                continue
            lhs = Fraction(p.xk[k])
            rhs = Fraction(math.ceil(Fraction(p.xk[k - 1], 2)))
            holds = lhs <= rhs
            out.append(
                RuleReport(rule_id, kind, True, holds, lhs == rhs, lhs, rhs, k)
            )
        return out

    return Rule(rule_id, kind, guard, body)


def _cubic(p: GraphProfile) -> bool:
    return p.flags.cubic


def _cubic_pm(p: GraphProfile) -> bool:
    return p.flags.cubic and p.flags.has_perfect_matching


def _bridgeless_cubic(p: GraphProfile) -> bool:
    return p.flags.cubic and p.flags.bridgeless and p.flags.connected


def _cf_bridgeless_cubic(p: GraphProfile) -> bool:
    return _bridgeless_cubic(p) and p.flags.claw_free


def _alpha_rule(rule_id: str, kind: str, guard, num: int, den: int, note=None) -> Rule:
    """nu2 >= (num/den) * (n + 2*nu3) / 4."""
    return _simple(
        rule_id,
        kind,
        guard,
        "ge",
        lambda p: Fraction(p.nu_at(2)),
        lambda p: Fraction(num, den) * Fraction(p.n + 2 * p.nu_at(3), 4),
        note,
    )


REGISTRY: tuple[Rule, ...] = (
    _simple(
        "P2.1",
        "proposition",
        lambda p: True,
        "ge",
        lambda p: Fraction(3 * p.nu_at(2)),
        lambda p: Fraction(2 * p.nu_at(3)),
    ),
    _simple(
        "T2.2.1", "theorem", _cubic, "ge",
        lambda p: Fraction(5 * p.nu_at(2)), lambda p: Fraction(4 * p.n),
    ),
    _simple(
        "T2.2.2", "theorem", _cubic, "ge",
        lambda p: Fraction(6 * p.nu_at(3)), lambda p: Fraction(7 * p.n),
    ),
    _simple(
        "T2.2.3", "theorem", _cubic, "ge",
        lambda p: Fraction(p.nu_at(2) + p.nu_at(3)), lambda p: Fraction(2 * p.n),
    ),
    _simple(
        "T2.2.4", "theorem", _cubic, "le",
        lambda p: Fraction(4 * p.nu_at(2)), lambda p: Fraction(p.n + 2 * p.nu_at(3)),
    ),
    _alpha_rule("T16/17", "theorem", _cubic, 16, 17),
    _simple(
        "L5/6", "lemma-bound", _cubic_pm, "ge",
        lambda p: Fraction(6 * p.nu_at(2)), lambda p: Fraction(5 * p.n),
    ),
    _alpha_rule("T20/21", "theorem", _cubic_pm, 20, 21),
    _simple(
        "P2.6.1",
        "proposition",
        lambda p: _bridgeless_cubic(p) and p.r3_value() <= 2,
        "eq",
        lambda p: Fraction(4 * p.nu_at(2)),
        lambda p: Fraction(p.n + 2 * p.nu_at(3)),
    ),
    _simple(
        "P2.6.2",
        "proposition",
        lambda p: _bridgeless_cubic(p) and p.r3_value() % 2 == 1,
        "lt",
        lambda p: Fraction(4 * p.nu_at(2)),
        lambda p: Fraction(p.n + 2 * p.nu_at(3)),
    ),
    _simple(
        "NO-R1", "proposition", _bridgeless_cubic, "ne",
        lambda p: Fraction(p.r3_value()), lambda p: Fraction(1),
    ),
    _alpha_rule("T44/45", "theorem", _bridgeless_cubic, 44, 45),
    _alpha_rule("C52/53", "conjecture", _bridgeless_cubic, 52, 53),
    _simple(
        "S11/12",
        "external-cited",
        lambda p: _bridgeless_cubic(p) and p.n >= 12,
        "ge",
        lambda p: Fraction(12 * p.nu_at(2)),
        lambda p: Fraction(11 * p.n),
        note="external-cited: a violation signals corpus/solver inconsistency",
    ),
    _simple(
        "T-CF5/6",
        "theorem",
        lambda p: p.flags.cubic and p.flags.claw_free,
        "ge",
        lambda p: Fraction(6 * p.nu_at(2)),
        lambda p: Fraction(5 * p.n),
    ),
    _simple(
        "T29/30", "theorem", _cf_bridgeless_cubic, "ge",
        lambda p: Fraction(30 * p.nu_at(2)), lambda p: Fraction(29 * p.n),
        note="no-published-proof",
    ),
    _simple(
        "T43/45", "theorem", _cf_bridgeless_cubic, "ge",
        lambda p: Fraction(45 * p.nu_at(3)), lambda p: Fraction(43 * p.m),
    ),
    _simple(
        "L-n/8",
        "external-cited",
        lambda p: _bridgeless_cubic(p) and p.n >= 16,
        "le",
        lambda p: Fraction(8 * p.r3_value()),
        lambda p: Fraction(p.n),
        note="external-cited: a violation signals corpus/solver inconsistency",
    ),
    _simple(
        "L-n/24",
        "lemma-bound",
        lambda p: _cf_bridgeless_cubic(p) and p.n >= 48,
        "le",
        lambda p: Fraction(24 * p.r3_value()),
        lambda p: Fraction(p.n),
    ),
    _simple(
        "T35/36",
        "theorem",
        lambda p: _cf_bridgeless_cubic(p) and p.n >= 48,
        "ge",
        lambda p: Fraction(36 * p.nu_at(2)),
        lambda p: Fraction(35 * p.n),
    ),
    _alpha_rule(
        "T140/141",
        "theorem",
        lambda p: _cf_bridgeless_cubic(p) and p.n >= 48,
        140,
        141,
    ),
    _alpha_rule("C164/165", "conjecture", _cf_bridgeless_cubic, 164, 165),
    _per_k(
        "T4.3", "theorem",
        lambda p: p.flags.is_tree or p.flags.is_unicyclic,
        "floor",
    ),
    _per_k(
        "T4.6", "theorem",
        lambda p: (p.flags.is_tree or p.flags.is_unicyclic) and p.flags.bipartite,
        "averaged",
    ),
    _per_k("C1.1", "conjecture", lambda p: p.flags.nearly_bipartite, "floor"),
    _per_k("C1.2", "conjecture", lambda p: p.flags.bipartite, "averaged"),
    _simple(
        "CO4.7",
        "theorem",
        lambda p: p.flags.is_tree
        and p.flags.has_perfect_matching
        and p.flags.max_degree == 3,
        "ge",
        lambda p: Fraction(4 * p.nu_at(2)),
        lambda p: Fraction(3 * p.n - 2),
    ),
    _xk_rule(),
)

RULE_IDS: tuple[str, ...] = tuple(r.rule_id for r in REGISTRY)
CONJECTURE_IDS: tuple[str, ...] = tuple(
    r.rule_id for r in REGISTRY if r.kind == "conjecture"
)


def evaluate_all(
    profile: GraphProfile, rule_ids: Optional[Iterable[str]] = None
) -> list[RuleReport]:
    """One or more reports per registered (or selected) rule."""
    wanted = set(rule_ids) if rule_ids is not None else None
    out: list[RuleReport] = []
    for rule in REGISTRY:
        if wanted is not None and rule.rule_id not in wanted:
            continue
        out.extend(rule.evaluate(profile))
    return out


@dataclass(frozen=True)
class HuntHit:
    graph: MultiGraph
    report: RuleReport


def hunt(
    corpus: Iterable[MultiGraph],
    rule_ids: Optional[Iterable[str]] = None,
    budget: Optional[int] = None,
    profiler: Optional[Callable[[MultiGraph], GraphProfile]] = None,
) -> list[HuntHit]:
    """Scan a corpus for conjecture counterexamples.

    Only conjecture-kind rules are hunted; solver errors on individual
    graphs are skipped without aborting the stream.  Returns every
    violating (graph, report) pair; an empty list is the expected
    outcome.
    """
    if profiler is None:
        from .profiling import compute_profile

        profiler = compute_profile
    ids = set(rule_ids) if rule_ids is not None else set(CONJECTURE_IDS)
    bad = ids - set(CONJECTURE_IDS)
    if bad:
        raise ValueError(f"not conjecture rules: {sorted(bad)}")
    hits: list[HuntHit] = []
    for count, g in enumerate(corpus):
        if budget is not None and count >= budget:
            break
        try:
            profile = profiler(g)
        except NuLabError:
            continue
        for rep in evaluate_all(profile, ids):
            if rep.applicable and rep.holds is False:
                hits.append(HuntHit(g, rep))
    return hits
