"""Checkers that quantify the commutator-order statements over concrete groups.

Every per-element predicate used here is invariant under conjugation (the
commutator profile of x^h equals that of x, and O_p, F, Z, Z_p* are normal),
so each suite evaluates one representative per conjugacy class and counts
the whole class in ``instances_checked``.
"""

from __future__ import annotations

import re
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable

from .catalog import GroupSpecEntry, make_named_group
from .chartab import character_table, defect_zero_characters, defect_zero_coprime_to
from .classalg import (
    class_commutator_profile,
    commutator_profile,
    inverse_class_index,
    inverse_times_class_support,
)
from .group import (
    CapExceeded,
    FiniteGroup,
    _Closure,
    center,
    class_normal_closure,
    commutator,
    conjugacy_classes,
    derived_subgroup,
)
from .perm import Permutation, compose, conjugate
from .series import (
    fitting,
    is_central_modulo,
    is_power_of,
    is_solvable,
    o_p,
    p_part,
    prime_divisors,
    simplicity_predicates,
    z_p_star,
)


class MissingCharacteristic(ValueError):
    pass


@dataclass
class CheckReport:
    suite: str
    group_name: str
    group_order: int
    instances_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    witnesses: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        return cls(**d)


def _cyc(g: Permutation) -> list[list[int]]:
    return g.cycles()


def _start(suite: str, G: FiniteGroup) -> tuple[CheckReport, float]:
    return CheckReport(suite, G.name or "", G.order), time.perf_counter()


def _finish(rep: CheckReport, t0: float) -> CheckReport:
    rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return rep


def generates_p_group(G: FiniteGroup, seeds, p: int) -> bool:
    """True iff <seeds> is a p-group; stops once the closure outgrows |G|_p."""
    cap = p_part(G.order, p)
    c = _Closure(G.degree, cap=cap)
    try:
        for s in seeds:
            if not is_power_of(G.element_order(s), p):
                return False
            c.add(s)
    except CapExceeded:
        return False
    return is_power_of(len(c.elements), p)


# -- suites -------------------------------------------------------------------

def check_thm_commutators_p(G: FiniteGroup, p: int, report: CheckReport | None = None) -> CheckReport:
    """[x, g] is a p-element for all g  <=>  x is central modulo O_p(G)."""
    rep, t0 = (report, time.perf_counter()) if report else _start("commutator_p", G)
    Op = o_p(G, p)
    Z = center(G)
    for k, c in enumerate(conjugacy_classes(G)):
        x = c.representative
        orders = sorted(class_commutator_profile(G, k).nonidentity_orders)
        lhs = all(is_power_of(o, p) for o in orders)
        rhs = is_central_modulo(G, x, Op)
        rep.instances_checked += c.size
        if lhs != rhs:
            rep.violations.append({"x": _cyc(x), "p": p, "commutator_orders": orders,
                                   "central_mod_Op": rhs})
        elif lhs and x not in Z:
            rep.witnesses.append({"x": _cyc(x), "p": p, "commutator_orders": orders,
                                  "Op_order": Op.order})
    return rep if report else _finish(rep, t0)


def check_glauberman_baer_suzuki(G: FiniteGroup, p: int, report: CheckReport | None = None) -> CheckReport:
    """For p-elements x: x^G meets C_G(x) only in x iff x in Z_p*(G); and
    <x, x^g> is a p-group for all g iff x in O_p(G)."""
    rep, t0 = (report, time.perf_counter()) if report else _start("zp_star_baer_suzuki", G)
    Zs = z_p_star(G, p)
    Op = o_p(G, p)
    for c in conjugacy_classes(G):
        x = c.representative
        if not is_power_of(G.element_order(x), p):
            continue
        rep.instances_checked += c.size
        commuting = [y for y in c.members if compose(x, y) == compose(y, x)]
        isolated = commuting == [x]
        if isolated != (x in Zs):
            rep.violations.append({"x": _cyc(x), "p": p, "statement": "zp_star",
                                   "class_meets_centralizer": sorted(_cyc(y) for y in commuting),
                                   "in_zp_star": x in Zs})
        bad = next((y for y in sorted(c.members) if not generates_p_group(G, [x, y], p)), None)
        all_p = bad is None
        if all_p != (x in Op):
            rec = {"x": _cyc(x), "p": p, "statement": "baer_suzuki", "in_Op": x in Op}
            if bad is not None:
                rec["conjugate"] = _cyc(bad)
            rep.violations.append(rec)
        elif not all_p and x not in Zs:
            rep.witnesses.append({"x": _cyc(x), "p": p, "conjugate": _cyc(bad),
                                  "in_Op": False, "in_zp_star": False})
    return rep if report else _finish(rep, t0)


def check_almost_simple_witness(G: FiniteGroup, p: int, report: CheckReport | None = None) -> CheckReport:
    """Every nontrivial x has some g with [x, g] a nontrivial p'-element."""
    rep, t0 = (report, time.perf_counter()) if report else _start("almost_simple_witness", G)
    for c in conjugacy_classes(G)[1:]:
        x = c.representative
        rep.instances_checked += c.size
        found = None
        for g in G.elements:
            o = G.element_order(commutator(x, g))
            if o != 1 and o % p:
                found = (g, o)
                break
        if found is None:
            rep.violations.append({"x": _cyc(x), "p": p})
        else:
            rep.witnesses.append({"x": _cyc(x), "p": p, "g": _cyc(found[0]), "commutator_order": found[1]})
    return rep if report else _finish(rep, t0)


def three_class_instances(G: FiniteGroup) -> list[tuple[int, int]]:
    """(K, D) class-index pairs with K^-1 K = 1 u D u D^-1 and D nontrivial."""
    out = []
    for k in range(len(conjugacy_classes(G))):
        rest = inverse_times_class_support(G, k) - {0}
        if not rest:
            continue
        d = min(rest)
        if rest == {d, inverse_class_index(G, d)}:
            out.append((k, d))
    return out


def search_three_class_products(G: FiniteGroup) -> CheckReport:
    rep, t0 = _start("three_class", G)
    classes = conjugacy_classes(G)
    rep.instances_checked = len(classes)
    for k, d in three_class_instances(G):
        H = class_normal_closure(G, k)
        rec = {"K": _cyc(classes[k].representative), "K_size": classes[k].size,
               "D": _cyc(classes[d].representative), "D_real": inverse_class_index(G, d) == d,
               "generated_order": H.order, "solvable": is_solvable(H)}
        (rep.witnesses if rec["solvable"] else rep.violations).append(rec)
    return _finish(rep, t0)


def check_two_prime_conditions(G: FiniteGroup) -> CheckReport:
    """If every nontrivial [x, g] has order divisible by rs then x in F(G),
    and x in Z(G) when x has prime-power order."""
    rep, t0 = _start("two_prime", G)
    primes = prime_divisors(G.order)
    F = fitting(G)
    Z = center(G)
    for k, c in enumerate(conjugacy_classes(G)):
        x = c.representative
        orders = sorted(class_commutator_profile(G, k).nonidentity_orders)
        ox = G.element_order(x)
        prime_power = len(prime_divisors(ox)) <= 1
        for r, s in combinations(primes, 2):
            rep.instances_checked += c.size
            if not all(o % (r * s) == 0 for o in orders):
                continue
            rec = {"x": _cyc(x), "r": r, "s": s, "commutator_orders": orders,
                   "in_fitting": x in F, "in_center": x in Z}
            if x not in F or (prime_power and x not in Z):
                rep.violations.append(rec)
            elif orders:
                rep.witnesses.append(rec)
    return _finish(rep, t0)


def check_equal_order(G: FiniteGroup) -> CheckReport:
    """If all nontrivial [x, g] share one order m then <x^G> is solvable."""
    rep, t0 = _start("equal_order", G)
    for k, c in enumerate(conjugacy_classes(G)):
        orders = sorted(class_commutator_profile(G, k).nonidentity_orders)
        rep.instances_checked += c.size
        if len(orders) > 1:
            continue
        H = class_normal_closure(G, k)
        rec = {"x": _cyc(c.representative), "commutator_orders": orders,
               "normal_closure_order": H.order}
        if not is_solvable(H):
            rep.violations.append(rec)
        elif orders:
            rep.witnesses.append(rec)
    return _finish(rep, t0)


_MATRIX_NAME = re.compile(r"^P?(S|G)L\(2,\d+\)$")


def grow_sylow(G: FiniteGroup, r: int) -> FiniteGroup:
    """A Sylow r-subgroup, grown by adjoining r-elements that normalise the
    current r-subgroup until its order reaches |G|_r."""
    target = p_part(G.order, r)
    relts = [g for g in G.elements if is_power_of(G.element_order(g), r) and not g == G.identity]
    c = _Closure(G.degree, cap=target)
    while len(c.elements) < target:
        gens = list(c.gens)
        y = next((y for y in relts if y not in c.elements
                  and all(conjugate(h, y) in c.elements for h in gens)), None)
        if y is None:
            raise RuntimeError(f"no normalising {r}-element found at order {len(c.elements)}")
        c.add(y)
    if len(c.elements) != target:
        raise RuntimeError("grown subgroup overshot the Sylow order")
    return FiniteGroup(G.degree, c.gens, c.elements)


def check_lemma_suite(G: FiniteGroup, lie_characteristics=None, almost_simple: bool = False) -> CheckReport:
    """Prime-power class sizes give solvable normal closures; small Lie-type
    facts (defect-zero characters, Sylow centralisers); centres of
    quasisimple groups."""
    rep, t0 = _start("lemmas", G)
    if lie_characteristics is None:
        lie_characteristics = []
    if almost_simple and not lie_characteristics and _MATRIX_NAME.match(G.name or ""):
        raise MissingCharacteristic(f"{G.name} is of Lie type but declares no characteristic")
    classes = conjugacy_classes(G)

    for k, c in enumerate(classes):
        if len(prime_divisors(c.size)) > 1:
            continue
        rep.instances_checked += 1
        H = class_normal_closure(G, k)
        if not is_solvable(H):
            rep.violations.append({"lemma": "prime_power_class", "x": _cyc(c.representative),
                                   "class_size": c.size, "normal_closure_order": H.order})

    simple = quasi = False
    if not G.is_trivial:
        simple, quasi = simplicity_predicates(G)
    if lie_characteristics and simple and not G.is_abelian:
        T = character_table(G)
        for r in lie_characteristics:
            for p in prime_divisors(G.order):
                if p == r:
                    continue
                rep.instances_checked += 1
                good = defect_zero_coprime_to(T, p, r)
                rec = {"lemma": "defect_zero", "r": r, "p": p,
                       "defect_zero_degrees": [T.degrees[i] for i in defect_zero_characters(T, p)]}
                if good:
                    rec["degree"] = T.degrees[good[0]]
                    rep.witnesses.append(rec)
                else:
                    rep.violations.append(rec)
    if lie_characteristics and almost_simple:
        for r in lie_characteristics:
            rep.instances_checked += 1
            R = grow_sylow(G, r)
            cent = [g for g in G.elements if all(compose(g, h) == compose(h, g) for h in R.generators)]
            outside = [g for g in cent if g not in R]
            rec = {"lemma": "sylow_centralizer", "r": r, "sylow_order": R.order,
                   "sylow_generators": [_cyc(h) for h in R.generators], "centralizer_order": len(cent)}
            if outside:
                rec["outside"] = _cyc(outside[0])
                rep.violations.append(rec)
            else:
                rep.witnesses.append(rec)
    if quasi:
        Z = center(G)
        rep.instances_checked += 1
        quotient = G.order // Z.order
        bad = [p for p in prime_divisors(Z.order) if quotient % p]
        rec = {"lemma": "quasisimple_center", "center_order": Z.order, "quotient_order": quotient}
        (rep.violations if bad else rep.witnesses).append(rec)
    return _finish(rep, t0)


def explore_p_singular_commutators(G: FiniteGroup, p: int, report: CheckReport | None = None) -> CheckReport:
    """Data only: x whose nontrivial commutators are all p-singular, with the
    solvability of <x^G>.  Never records violations."""
    rep, t0 = (report, time.perf_counter()) if report else _start("explore_p_singular", G)
    Op = o_p(G, p)
    for k, c in enumerate(conjugacy_classes(G)):
        orders = sorted(class_commutator_profile(G, k).nonidentity_orders)
        rep.instances_checked += c.size
        if not all(o % p == 0 for o in orders):
            continue
        x = c.representative
        H = class_normal_closure(G, k)
        rep.witnesses.append({"x": _cyc(x), "p": p, "order": G.element_order(x),
                              "commutator_orders": orders, "normal_closure_order": H.order,
                              "solvable": is_solvable(H), "in_Op": x in Op})
    return rep if report else _finish(rep, t0)


# -- the two worked examples --------------------------------------------------

def _first_of_order(G: FiniteGroup, n: int) -> Permutation | None:
    return next((g for g in G.elements if G.element_order(g) == n), None)


def _expect(bad: list, fact: str, expected, observed, **extra) -> None:
    if expected != observed:
        bad.append({"fact": fact, "expected": expected, "observed": observed, **extra})


def gl23_bundle(G: FiniteGroup) -> tuple[dict, list[dict]]:
    """Observed facts and mismatches against the GL(2,3) bundle."""
    bad: list[dict] = []
    O2 = o_p(G, 2)
    # G/N is abelian iff G' <= N
    facts = {"O2_order": O2.order, "quotient_order": G.order // O2.order,
             "quotient_nonabelian": not derived_subgroup(G).issubset(O2)}
    _expect(bad, "O2_order", 8, facts["O2_order"])
    _expect(bad, "quotient_order", 6, facts["quotient_order"])
    _expect(bad, "quotient_nonabelian", True, facts["quotient_nonabelian"])
    x = _first_of_order(G, 8)
    if x is None:
        bad.append({"fact": "element_of_order_8", "expected": True, "observed": False})
        return facts, bad
    facts["x"] = _cyc(x)
    facts["profile_support"] = sorted(commutator_profile(G, x).support)
    facts["central_mod_O2"] = is_central_modulo(G, x, O2)
    _expect(bad, "profile_support", [1, 4, 6], facts["profile_support"], x=facts["x"])
    _expect(bad, "central_mod_O2", False, facts["central_mod_O2"], x=facts["x"])
    return facts, bad


def c3q8_bundle(G: FiniteGroup) -> tuple[dict, list[dict]]:
    """Observed facts and mismatches against the C3:Q8 bundle."""
    bad: list[dict] = []
    Z = center(G)
    F = fitting(G)
    facts = {"center_order": Z.order, "fitting_order": F.order}
    _expect(bad, "center_order", 2, Z.order)
    _expect(bad, "fitting_order", 12, F.order)
    x = _first_of_order(G, 12)
    if x is None:
        bad.append({"fact": "element_of_order_12", "expected": True, "observed": False})
        return facts, bad
    facts["x"] = _cyc(x)
    # order-12 x inside F of order 12 makes F = <x> cyclic
    facts["fitting_generated_by_x"] = F.order == 12 and x in F
    facts["profile_support"] = sorted(commutator_profile(G, x).support)
    facts["x_central"] = x in Z
    _expect(bad, "fitting_generated_by_x", True, facts["fitting_generated_by_x"], x=facts["x"])
    _expect(bad, "profile_support", [1, 6], facts["profile_support"], x=facts["x"])
    _expect(bad, "x_central", False, facts["x_central"], x=facts["x"])
    return facts, bad


def reproduce_remarks(gl23: FiniteGroup | None = None, c3q8: FiniteGroup | None = None) -> CheckReport:
    """Both worked examples as one report; pass other groups in as negative controls."""
    t0 = time.perf_counter()
    gl23 = gl23 if gl23 is not None else make_named_group("GL(2,3)")
    c3q8 = c3q8 if c3q8 is not None else make_named_group("C3:Q8")
    rep = CheckReport("remarks", f"{gl23.name}; {c3q8.name}", gl23.order + c3q8.order)
    for bundle, G, check in (("GL(2,3)", gl23, gl23_bundle), ("C3:Q8", c3q8, c3q8_bundle)):
        rep.instances_checked += 1
        facts, mismatches = check(G)
        for m in mismatches:
            rep.violations.append({"bundle": bundle, "group": G.name or "", **m})
        if not mismatches:
            rep.witnesses.append({"bundle": bundle, "group": G.name or "", "degree": G.degree,
                                  "generators": [_cyc(g) for g in G.generators], **facts})
    return _finish(rep, t0)


# -- registry -------------------------------------------------------------------

def _per_prime(fn: Callable, suite: str) -> Callable:
    def run(G: FiniteGroup, entry: GroupSpecEntry | None = None) -> CheckReport:
        rep, t0 = _start(suite, G)
        for p in prime_divisors(G.order):
            fn(G, p, rep)
        return _finish(rep, t0)
    return run


def _almost_simple_only(G: FiniteGroup, entry: GroupSpecEntry | None = None) -> CheckReport | None:
    if entry is None or not entry.almost_simple:
        return None
    return _per_prime(check_almost_simple_witness, "almost_simple_witness")(G)


def _lemmas(G: FiniteGroup, entry: GroupSpecEntry | None = None) -> CheckReport:
    if entry is None:
        return check_lemma_suite(G)
    return check_lemma_suite(G, entry.lie_characteristics, entry.almost_simple)


# suite id -> (runner(G, entry) -> CheckReport | None, is_assertion)
SUITES: dict[str, tuple[Callable, bool]] = {
    "commutator_p": (_per_prime(check_thm_commutators_p, "commutator_p"), True),
    "zp_star_baer_suzuki": (_per_prime(check_glauberman_baer_suzuki, "zp_star_baer_suzuki"), True),
    "almost_simple_witness": (_almost_simple_only, True),
    "three_class": (lambda G, entry=None: search_three_class_products(G), True),
    "two_prime": (lambda G, entry=None: check_two_prime_conditions(G), True),
    "equal_order": (lambda G, entry=None: check_equal_order(G), True),
    "lemmas": (_lemmas, True),
    "explore_p_singular": (_per_prime(explore_p_singular_commutators, "explore_p_singular"), False),
}

ASSERTION_SUITES = [s for s, (_, a) in SUITES.items() if a]
EXPLORATION_SUITES = [s for s, (_, a) in SUITES.items() if not a]


def run_suite(suite: str, G: FiniteGroup, entry: GroupSpecEntry | None = None) -> CheckReport | None:
    """Run one registered suite; None when it does not apply to ``G``."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    return SUITES[suite][0](G, entry)


def run_corpus(suites, entries, cap: int | None = None) -> list[CheckReport]:
    reports = []
    for entry in entries:
        G = entry.build(cap) if cap else entry.build()
        for s in suites:
            r = run_suite(s, G, entry)
            if r is not None:
                reports.append(r)
    return reports
