"""Acceptance checks shared by the command line and the test suite.

Each criterion is a function returning a CriterionResult with an exact
pass/fail verdict and a one-line account of what was compared.  Nothing
here uses tolerances: every comparison is big-integer or rational
equality.  The slow flag adds the degree-6 brute-force sweep and the
exhaustive S_5 recount.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .catalog import build_catalog, restriction_matrix
from .corpus import (corpus_graphs, infinite_dihedral, klein_amalgam,
                     modular_graph, oracle_graphs, triangle_graph)
from .gog import euler_characteristic, free_group
from .groups import (all_subgroups, coset_action, dihedral_group,
                     symmetric_group)
from .growth import (build_growth_lp, cyclic_amalgam_mu, euler_tight,
                     family_mu, mu, realize)
from .gog import cyclic_amalgam
from .oracle import (_vertex_homs, _vertex_types, hom_count_enumerate,
                     hom_count_typesum, vertex_hom_count)
from .perm import parse_perm
from .ratlp import enumerate_vertices

# Golden data, frozen after machine verification.  The vertex-class table
# of the Klein amalgam matches its published source in every row except
# the cosets-of-a-transposition class: the printed row there is
# impossible (its left half would need 24 points for a 12-point action)
# and is kept below only so the discrepancy stays machine-checked.
S4_INDEX_COLUMN = (1, 2, 3, 6, 4, 6, 6, 8, 12, 12, 24)
KLEIN_TABLE = (
    #  index  left (U_1)        right (U_2)
    (1,  (1, 0, 0, 0, 0), (1, 0, 0, 0, 0)),
    (2,  (2, 0, 0, 0, 0), (0, 1, 0, 0, 0)),
    (3,  (3, 0, 0, 0, 0), (1, 1, 0, 0, 0)),
    (6,  (6, 0, 0, 0, 0), (0, 3, 0, 0, 0)),
    (4,  (0, 0, 0, 0, 1), (0, 0, 1, 1, 0)),
    (6,  (0, 1, 1, 1, 0), (0, 1, 0, 0, 1)),
    (6,  (0, 1, 1, 1, 0), (2, 0, 0, 0, 1)),
    (8,  (0, 0, 0, 0, 2), (0, 0, 0, 0, 2)),
    (12, (0, 2, 2, 2, 0), (0, 2, 0, 0, 2)),
    (12, (0, 0, 0, 0, 3), (0, 0, 1, 1, 2)),   # corrected, see above
    (24, (0, 0, 0, 0, 6), (0, 0, 0, 0, 6)),
)
MISPRINTED_ROW10 = ((0, 0, 0, 0, 6), (0, 0, 2, 2, 1))
S3_FIX_TABLE = ((6, 1, 1), (3, 0, 2), (2, 1, 0), (2, 1, 0), (2, 1, 0),
                (1, 0, 0))
D10_FIX_TABLE = ((10, 1, 1), (5, 0, 0), (2, 1, 1), (2, 1, 1), (2, 1, 1),
                 (2, 1, 1), (2, 1, 1), (1, 0, 0))

# (numerator, denominator) -> frozen realization plan fields
REALIZE_PLANS = {
    (1, 2): (0, 3, 6, 1, "symmetric"),
    (2, 5): (0, 11, 35, 2, "symmetric"),
    (5, 7): (0, 11, 42, 1, "alternating"),
    (9, 10): (0, 11, 110, 1, "symmetric"),
    (7, 3): (2, 5, 9, 1, "alternating"),
    (3, 1): (3, None, None, None, None),
}


@dataclass(frozen=True)
class CriterionResult:
    name: str
    title: str
    passed: bool
    detail: str


def _result(name, title, checks):
    """Collapse a list of (ok, message) pairs into one CriterionResult."""
    bad = [m for ok, m in checks if not ok]
    if bad:
        return CriterionResult(name, title, False, "; ".join(bad))
    return CriterionResult(name, title, True,
                           "; ".join(m for _, m in checks))


def _fix_count(g, sub, x):
    px = coset_action(g, sub)[x]
    return sum(1 for i, j in enumerate(px.images) if i == j)


def criterion_a1(slow=False) -> CriterionResult:
    """Golden catalog tables for the pinned worked examples."""
    checks = []
    g = klein_amalgam()
    vcat = build_catalog(g.vertex_group("a"))
    ecat = build_catalog(g.edges[0].group)
    checks.append((vcat.degrees == S4_INDEX_COLUMN,
                   f"S_4 index column {vcat.degrees}"))
    ml = restriction_matrix(g.edges[0].embeddings[0], vcat, ecat)
    mr = restriction_matrix(g.edges[0].embeddings[1], vcat, ecat)
    for i, (index, left, right) in enumerate(KLEIN_TABLE):
        got_l = tuple(ml.rows[j][i] for j in range(5))
        got_r = tuple(mr.rows[j][i] for j in range(5))
        checks.append((vcat.degrees[i] == index and got_l == left
                       and got_r == right,
                       f"class {i + 1}: {got_l}/{got_r}"))
    # the misprinted row stays rejected: its left half breaks the
    # degree count 12 and its right half breaks the fixed-point identity
    bad_l, bad_r = MISPRINTED_ROW10
    weight = sum(m * d for m, d in zip(bad_l, ecat.degrees))
    got10 = tuple(mr.rows[j][9] for j in range(5))
    checks.append((weight != 12 and got10 != bad_r,
                   "misprinted transposition row stays impossible"))
    s3 = symmetric_group(3)
    t12, t123 = parse_perm("(1 2)", 3), parse_perm("(1 2 3)", 3)
    rows = tuple(sorted(((len(s), _fix_count(s3, s, t12),
                          _fix_count(s3, s, t123))
                         for s in all_subgroups(s3)), reverse=True))
    checks.append((rows == S3_FIX_TABLE, f"S_3 fixed-point table {rows}"))
    d10 = dihedral_group(5)
    r1, r2 = parse_perm("(2 5)(3 4)", 5), parse_perm("(1 2)(3 5)", 5)
    rows = tuple(sorted(((len(s), _fix_count(d10, s, r1),
                          _fix_count(d10, s, r2))
                         for s in all_subgroups(d10)), reverse=True))
    checks.append((rows == D10_FIX_TABLE, "dihedral fixed-point table ok"))
    return _result("A1", "catalog golden data", checks)


def criterion_a2(slow=False) -> CriterionResult:
    """Growth degree 1/4 of the Klein amalgam, three independent ways."""
    g = klein_amalgam()
    quarter = Fraction(1, 4)
    checks = []
    rep = mu(g)
    checks.append((rep.mu == quarter, f"lp mu = {rep.mu}"))
    checks.append((rep.chi == Fraction(-1, 6), f"chi = {rep.chi}"))
    lp = build_growth_lp(g)
    best = max(v for _, v in enumerate_vertices(lp))
    checks.append((best == quarter, f"vertex-enumeration max = {best}"))
    # the published optimizer: class 4 weight 1/18 and class 11 weight
    # 1/36 on one side, class 7 weight 1/6 on the other
    point = {"a.4": Fraction(1, 18), "a.11": Fraction(1, 36),
             "b.7": Fraction(1, 6)}
    vec = [point.get(nm, Fraction(0)) for nm in lp.var_names]
    feasible = all(sum(c * x for c, x in zip(row, vec)) == rhs
                   for row, rhs in zip(lp.rows, lp.rhs))
    value = sum(c * x for c, x in zip(lp.objective, vec))
    checks.append((feasible and value == quarter,
                   f"published optimizer feasible with objective {value}"))
    return _result("A2", "Klein-amalgam growth degree", checks)


A3_CASES = (
    ("S4 over (1 2)", 4, "(1 2)", False),
    ("S4 over (1 2 3)", 4, "(1 2 3)", False),
    ("S4 over (1 2)(3 4)", 4, "(1 2)(3 4)", False),
    ("D4 over its center", None, None, False),
    ("S5 over (1 2)", 5, "(1 2)", True),
    ("S5 over (1 2)(3 4)", 5, "(1 2)(3 4)", True),
)


def criterion_a3(slow=False) -> CriterionResult:
    """Closed-form cyclic-amalgam values equal the LP optimum."""
    checks = []
    for label, k, cycles, _ in A3_CASES:
        if k is None:
            grp = dihedral_group(4)
            x = parse_perm("(1 3)(2 4)", 4)   # the central involution
        else:
            grp = symmetric_group(k)
            x = parse_perm(cycles, k)
        closed, _cls = cyclic_amalgam_mu(grp, x)
        lp_value = mu(cyclic_amalgam(grp, x)).mu
        checks.append((closed == lp_value, f"{label}: {closed}"))
    return _result("A3", "closed form agrees with LP", checks)


def criterion_a4(slow=False) -> CriterionResult:
    """Family formula, closed form, and Euler sharpness at (3, 4, 1)."""
    checks = []
    quarter = Fraction(1, 4)
    fam = family_mu(3, 4, 1)
    s4 = symmetric_group(4)
    x = parse_perm("(1 2 3)", 4)
    closed, _ = cyclic_amalgam_mu(s4, x)
    checks.append((fam == quarter, f"family formula {fam}"))
    checks.append((closed == quarter, f"closed form {closed}"))
    g = cyclic_amalgam(s4, x)
    rep = mu(g)
    checks.append((euler_tight(s4, x), "tightness criterion holds"))
    checks.append((rep.mu == -rep.chi == quarter,
                   f"mu = -chi = {rep.mu}"))
    return _result("A4", "family-formula spot check", checks)


def criterion_a5(slow=False) -> CriterionResult:
    """Free products and free groups have the classical degrees."""
    checks = []
    m = mu(modular_graph()).mu
    checks.append((m == Fraction(1, 6), f"C2*C3: {m}"))
    m = mu(infinite_dihedral()).mu
    checks.append((m == 0, f"C2*C2: {m}"))
    for r in range(1, 5):
        m = mu(free_group(r)).mu
        checks.append((m == r - 1, f"free rank {r}: {m}"))
    return _result("A5", "free products and free groups", checks)


def criterion_a6(slow=False) -> CriterionResult:
    """mu >= -chi on every corpus graph, tuned and randomized."""
    checks = []
    strict = 0
    for name, g in corpus_graphs():
        rep = mu(g)
        bound = euler_characteristic(g).mu_free
        if rep.mu < bound:
            checks.append((False, f"{name}: mu {rep.mu} < {bound}"))
        elif rep.mu > bound:
            strict += 1
    checks.append((True, f"33 graphs, bound strict on {strict}"))
    return _result("A6", "universal lower bound", checks)


def criterion_o1(slow=False) -> CriterionResult:
    """The per-orbit constant must be the aut count, not the degree."""
    s3 = symmetric_group(3)
    cat = build_catalog(s3)
    types = _vertex_types(cat.degrees, 3)
    corrected = sum(vertex_hom_count(s3, t, 3) for t in types)
    uncorrected = 0
    for t in types:
        denom = 1
        for e, d in zip(t, cat.degrees):
            denom *= factorial(e) * d ** e
        q, r = divmod(factorial(3), denom)
        uncorrected += q if r == 0 else 0
    brute = len(_vertex_homs(s3, 3))
    checks = [
        (corrected == 10, f"corrected sum {corrected}"),
        (brute == 10, f"brute force {brute}"),
        (uncorrected == 6, f"degree-based constants give {uncorrected}"),
    ]
    return _result("O1", "counting-constant witness", checks)


def criterion_o2(slow=False) -> CriterionResult:
    """Type-sum and brute-force homomorphism counts agree."""
    top = 6 if slow else 5
    checks = []
    for name, g in oracle_graphs():
        led = hom_count_typesum(g, top)
        for n in range(1, top + 1):
            e = hom_count_enumerate(g, n)
            if e != led.total(n):
                checks.append(
                    (False, f"{name} n={n}: {led.total(n)} vs {e}"))
    checks.append((True, f"7 graphs agree up to degree {top}"))
    return _result("O2", "oracle equivalence", checks)


def criterion_o3(slow=False) -> CriterionResult:
    """Subgroup counts are sane: s_1 = 1 everywhere, s_2 of the modular
    group is 1, and transitive counts stay divisible."""
    checks = []
    for name, g in corpus_graphs():
        led = hom_count_typesum(g, 1)
        if led.s(1) != 1:
            checks.append((False, f"{name}: s_1 = {led.s(1)}"))
    led = hom_count_typesum(modular_graph(), 5)
    checks.append((led.s(2) == 1, f"modular s_2 = {led.s(2)}"))
    for name, g in oracle_graphs():
        led = hom_count_typesum(g, 5)
        for n in range(1, 6):
            if led.t(n) % factorial(n - 1):
                checks.append((False, f"{name}: (n-1)! does not divide t_{n}"))
    checks.append((True, "divisibility holds through degree 5"))
    return _result("O3", "subgroup-count sanity", checks)


def criterion_r1(slow=False) -> CriterionResult:
    """The realizer hits each requested value with a lawful plan."""
    checks = []
    for (a, b), frozen in sorted(REALIZE_PLANS.items()):
        plan = realize(a, b)
        target = Fraction(a, b)
        ok = plan.predicted_mu == target
        if plan.is_free:
            ok = ok and (plan.integer_part,) == frozen[:1]
            checks.append((ok, f"{a}/{b}: free rank {plan.free_rank}"))
            continue
        ok = ok and (plan.integer_part, plan.p, plan.k, plan.l,
                     plan.variant) == frozen
        ok = ok and plan.k - plan.l * plan.p >= 2
        ok = ok and family_mu(plan.p, plan.k, plan.l, plan.variant) \
            == target - plan.integer_part
        checks.append((ok, f"{a}/{b}: ({plan.p},{plan.k},{plan.l})"
                           f" {plan.variant} + rank {plan.integer_part}"))
    return _result("R1", "realization plans", checks)


def criterion_p6(slow=False) -> CriterionResult:
    """Triangle graph: recomputed growth degree, with the discrepancy
    against the previously reported 3/2 flagged in the report."""
    g = triangle_graph()
    rep = mu(g)
    best = max(v for _, v in enumerate_vertices(build_growth_lp(g)))
    bound = euler_characteristic(g).mu_free
    flagged = any("3/2" in note for note in rep.notes)
    checks = [
        (rep.mu == Fraction(9, 10), f"lp mu = {rep.mu}"),
        (rep.mu == best, f"vertex-enumeration max = {best}"),
        (rep.mu >= bound, f"bound -chi = {bound}"),
        (flagged, "report flags the prior 3/2 claim"),
    ]
    return _result("P6", "triangle recomputation", checks)


def criterion_x1(slow=False) -> CriterionResult:
    """Exhaustive S_5 recount of the double-transposition amalgam."""
    s5 = symmetric_group(5)
    x = parse_perm("(1 2)(3 4)", 5)
    value, cls = cyclic_amalgam_mu(s5, x)
    expected = Fraction(8, 15)
    note = ("matches" if value == Fraction(1, 2) else "does not match") \
        + " the previously reported exception 1/2"
    checks = [(value == expected,
               f"recomputed {value} via class of order {cls.order}; {note}")]
    return _result("X1", "exception-value recount", checks)


CRITERIA = (
    criterion_a1, criterion_a2, criterion_a3, criterion_a4, criterion_a5,
    criterion_a6, criterion_o1, criterion_o2, criterion_o3, criterion_r1,
    criterion_p6,
)
SLOW_CRITERIA = (criterion_x1,)


def run_all(slow: bool = False):
    """Every criterion in order; exceptions become failed results."""
    todo = CRITERIA + (SLOW_CRITERIA if slow else ())
    out = []
    for fn in todo:
        try:
            out.append(fn(slow=slow))
        except Exception as exc:   # a crash is a failure, not an abort
            name = fn.__name__.rsplit("_", 1)[-1].upper()
            out.append(CriterionResult(name, fn.__doc__.splitlines()[0],
                                       False, f"raised {exc!r}"))
    return tuple(out)
