"""
Named structural checks behind ``weyl-gradings verify``.

Each check is a zero-argument function returning ``(passed, detail)`` and is
registered under a suite: ``algebras``, ``gradings`` or ``weyl``. Checks build
whatever they need on demand, so they run against an empty workspace.
"""

import logging
import random
import time
from itertools import product
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from .algebras.albert import albert_algebra, frame, nu_block_failures, okubo_norm_identity
from .algebras.base import jordan_power
from .algebras.cayley import (
    CAYLEY_TABLE,
    GOOD_LABELS,
    OKUBO_LABELS,
    OKUBO_TABLE,
    cayley_cd_basis,
    cayley_cd_correspondence,
    cayley_good_basis,
    derive_okubo_degrees,
    okubo_algebra,
    quadratic_relation_holds,
    symmetric_composition_witness,
    table_mismatches,
)
from .algebras.pauli import pauli_index, pauli_matrix_algebra
from .config import get_settings
from .core.scalars import imaginary_unit, omega, root_of_unity, sqrt2
from .exceptions import WeylGradingsError
from .gradings.base import Grading
from .gradings.builtin import GRADING_NAMES, builtin_grading, declared_universal
from .groups.abelian import AbGroup, AbHom
from .groups.bicharacters import (
    aut_bicharacter_bruteforce,
    aut_bicharacter_matrix_criterion,
    standard_bicharacter,
)
from .morphisms.builtin import z33_isomorphism_obstruction
from .weyl.pipeline import weyl_group, weyl_matrix_theorem_check

logger = logging.getLogger(__name__)

SUITES = ("algebras", "gradings", "weyl")

Outcome = Tuple[bool, str]


class Check(NamedTuple):
    name: str
    suite: str
    run: Callable[[], Outcome]


class CheckRow(NamedTuple):
    """One line of the verify summary."""

    suite: str
    name: str
    passed: bool
    detail: str
    seconds: float


_REGISTRY: Dict[str, Check] = {}


def register(name: str, suite: str) -> Callable[[Callable[[], Outcome]], Callable[[], Outcome]]:
    """Decorator adding a check to the registry."""
    if suite not in SUITES:
        raise ValueError(f"Unknown suite {suite!r}")

    def wrap(func: Callable[[], Outcome]) -> Callable[[], Outcome]:
        _REGISTRY[name] = Check(name, suite, func)
        return func

    return wrap


def registered(suite: str = "all") -> List[Check]:
    """Checks of a suite in registration order."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"Unknown suite {suite!r}; use all, {', '.join(SUITES)}")
    return [c for c in _REGISTRY.values() if suite == "all" or c.suite == suite]


def run_checks(suite: str = "all", stop_on_failure: bool = False) -> List[CheckRow]:
    """
    Run every check of a suite.

    A check that raises a WeylGradingsError fails with the error message as detail.

    Args:
        suite: ``all`` or one of SUITES
        stop_on_failure: Return after the first failing check

    Returns:
        One CheckRow per executed check
    """
    rows = []
    for check in registered(suite):
        started = time.perf_counter()
        try:
            passed, detail = check.run()
        except WeylGradingsError as e:
            passed, detail = False, f"{type(e).__name__}: {str(e)}"
        row = CheckRow(check.suite, check.name, bool(passed), detail, time.perf_counter() - started)
        if row.passed:
            logger.info(f"Check {row.name}: pass ({row.seconds:.2f}s)")
        else:
            logger.warning(f"Check {row.name}: FAIL {row.detail}")
        rows.append(row)
        if stop_on_failure and not row.passed:
            break
    return rows


def first_failure(rows: List[CheckRow]) -> Optional[CheckRow]:
    return next((r for r in rows if not r.passed), None)


def format_rows(rows: List[CheckRow], tsv: bool = False) -> str:
    """Summary table; TSV has a header row and no timings."""
    if tsv:
        lines = ["suite\tcheck\tresult\tdetail"]
        lines += [
            f"{r.suite}\t{r.name}\t{'pass' if r.passed else 'fail'}\t{r.detail}" for r in rows
        ]
        return "\n".join(lines)
    lines = []
    for r in rows:
        line = f"{r.name}: {'pass' if r.passed else 'FAIL'}"
        if r.detail:
            line += f"  ({r.detail})"
        lines.append(line)
    passed = sum(r.passed for r in rows)
    lines.append(f"{passed}/{len(rows)} checks passed")
    return "\n".join(lines)


def _none(witness: object, what: str) -> Outcome:
    if witness is None or witness == []:
        return True, ""
    return False, f"{what}: {witness}"


# ── Algebras ─────────────────────────────────────────────────────────


@register("cyclotomic-constants", "algebras")
def _cyclotomic_constants() -> Outcome:
    failures = []
    if imaginary_unit() ** 2 != -1:
        failures.append("i^2")
    if sqrt2() ** 2 != 2:
        failures.append("sqrt2^2")
    if omega() ** 3 != 1 or omega() == 1:
        failures.append("omega")
    for n in range(2, 25):
        for k in range(1, n):
            if root_of_unity(n, k) * root_of_unity(n, n - k) != 1:
                failures.append(f"zeta_{n}^{k}")
    return _none(failures or None, "failed")


@register("cayley-table-matches-figure-1", "algebras")
def _cayley_table() -> Outcome:
    return _none(table_mismatches(cayley_good_basis(), CAYLEY_TABLE, GOOD_LABELS), "mismatches")


@register("cayley-composition", "algebras")
def _cayley_composition() -> Outcome:
    settings = get_settings().algebras
    C = cayley_good_basis()
    return _none(C.composition_witness(settings.composition_samples, settings.random_seed), "pair")


@register("cayley-quadratic-relation", "algebras")
def _cayley_quadratic() -> Outcome:
    C = cayley_good_basis()
    rng = random.Random(get_settings().algebras.random_seed)
    bad = [k for k in range(100) if not quadratic_relation_holds(C.random_element(rng))]
    return _none(bad or None, "failing samples")


@register("cayley-dickson-correspondence", "algebras")
def _cd_correspondence() -> Outcome:
    iso = cayley_cd_correspondence()
    w = cayley_cd_basis()
    squares = [label for label in ("w1", "w2", "w3") if w.basis(label) * w.basis(label) != w.one()]
    if squares:
        return False, f"generators not squaring to 1: {squares}"
    return _none(iso.multiplicativity_witness(), "not multiplicative at")


@register("okubo-table-matches-figure-2", "algebras")
def _okubo_table() -> Outcome:
    return _none(table_mismatches(okubo_algebra(), OKUBO_TABLE, OKUBO_LABELS), "mismatches")


@register("okubo-norm-associative", "algebras")
def _okubo_norm() -> Outcome:
    O = okubo_algebra()
    triple = symmetric_composition_witness(O)
    if triple is not None:
        return False, f"n(x*y, z) != n(x, y*z) at {triple}"
    return _none(O.composition_witness(), "n(x*y) != n(x)n(y) at")


@register("okubo-norm-identity", "algebras")
def _okubo_norm_identity() -> Outcome:
    C = cayley_good_basis()
    lhs, rhs = okubo_norm_identity(C.basis("e1"))
    return lhs == rhs == 8, f"N = {lhs}, 8n(z, z*z) = {rhs}"


@register("albert-product-rules", "algebras")
def _albert_rules() -> Outcome:
    A = albert_algebra()
    pair = A.commutativity_witness(1)
    if pair is not None:
        return False, f"not commutative at {pair}"
    E = [frame(A, i) for i in (1, 2, 3)]
    for i in range(3):
        for j in range(3):
            expected = E[i] if i == j else A.zero()
            if E[i] * E[j] != expected:
                return False, f"E{i + 1} E{j + 1} is wrong"
    if E[0] + E[1] + E[2] != A.one():
        return False, "E1 + E2 + E3 is not the unit"
    return True, ""


@register("albert-nu-block", "algebras")
def _nu_block() -> Outcome:
    return _none(nu_block_failures(), "failing identities")


@register("pauli-commutation-relations", "algebras")
def _pauli_commutation() -> Outcome:
    for moduli in ((2,), (3,), (2, 2), (4,)):
        D, T, beta = pauli_matrix_algebra(moduli)
        elements = list(T.element_coords())
        X = {t: D.basis(pauli_index(T, t)) for t in elements}
        for u, v in product(elements, repeat=2):
            if X[u] * X[v] != (X[v] * X[u]) * beta.value(u, v, D.conductor):
                return False, f"{moduli}: X_u X_v != beta(u, v) X_v X_u at {u}, {v}"
            if u == v and X[u] * X[T.normalize([-c for c in u])] == D.zero():
                return False, f"{moduli}: X_{u} is not invertible"
    return True, ""


# ── Gradings ─────────────────────────────────────────────────────────


def _matrix_instances() -> List[Grading]:
    return [
        builtin_grading("gamma_M", moduli=(2,), k=2),
        builtin_grading("gamma_M", moduli=(3,), k=1),
        builtin_grading("gamma_M", moduli=(2,), k=3),
    ]


def _all_builtin() -> List[Grading]:
    return [builtin_grading(n) for n in GRADING_NAMES if n != "gamma_M"] + _matrix_instances()


@register("universal-groups-match", "gradings")
def _universal_groups() -> Outcome:
    wrong = []
    for grading in _all_builtin():
        found = grading.universal().group.normal_form()
        if found != declared_universal(grading):
            wrong.append(f"{grading.name}: {found}")
    return _none(wrong or None, "unexpected universal groups")


def _trace_witness(grading: Grading) -> Optional[Tuple[str, str]]:
    A = grading.algebra
    group = grading.group
    zero = group.zero().coords
    for i in range(A.dim):
        for j in range(A.dim):
            if group.add(grading.degrees[i], grading.degrees[j]) == zero:
                continue
            vec = A.basis_product(i, j)
            # octonions carry no trace form; t(x) = n(x, 1)
            if A.trace is not None:
                value = A.trace_vec(vec)
            else:
                value = A.polar_vec(vec, A.unit or {})
            if not value.is_zero:
                return A.labels[i], A.labels[j]
    return None


@register("trace-orthogonality", "gradings")
def _trace_orthogonality() -> Outcome:
    names = (
        "cartan_cayley",
        "cd_cayley",
        "albert_cartan",
        "albert_z25",
        "albert_zz23",
        "albert_z33",
    )
    for name in names:
        witness = _trace_witness(builtin_grading(name))
        if witness is not None:
            return False, f"{name}: T(A_g A_h) != 0 at {witness}"
    return True, ""


@register("z33-homogeneous-cubes-are-scalars", "gradings")
def _z33_cubes() -> Outcome:
    grading = builtin_grading("albert_z33")
    A = grading.algebra
    for x in A.basis_elements():
        c = jordan_power(x, 3).is_multiple_of(A.one())
        if c is None or c.is_zero:
            return False, f"{x} does not cube to a nonzero scalar"
    return True, ""


@register("okubo-degrees-derived", "gradings")
def _okubo_degrees() -> Outcome:
    degrees = derive_okubo_degrees()
    values = set(degrees.values())
    ok = len(values) == 8 and (0, 0) not in values
    return ok, f"{degrees}"


@register("coarsening-keeps-universal-small", "gradings")
def _coarsening() -> Outcome:
    grading = builtin_grading("cartan_cayley")
    target = AbGroup(0, (2, 2))
    alpha = AbHom.from_images(grading.group, target, [[1, 0], [0, 1]])
    coarse = grading.induce(alpha)
    U = coarse.universal().group
    return U.rank <= grading.universal().group.rank, f"universal group of coarsening: {U}"


# ── Weyl groups ──────────────────────────────────────────────────────


def _weyl(name: str, expected: int) -> Outcome:
    report = weyl_group(name)
    detail = f"lower {report.lower_order}, upper {report.upper_order}"
    failed = report.failed_checks()
    if failed:
        detail += f", failed: {', '.join(failed)}"
    return report.passed and report.lower_order == expected, detail


@register("aut-bicharacter-oracles-agree", "weyl")
def _aut_bicharacter() -> Outcome:
    expected = {(2,): 6, (3,): 24, (2, 2): 720, (4,): 48}
    for moduli, order in expected.items():
        T, beta = standard_bicharacter(moduli)
        brute = len(aut_bicharacter_bruteforce(T, beta))
        criterion = aut_bicharacter_matrix_criterion(T, beta).order
        if not brute == criterion == order:
            return False, f"{moduli}: brute force {brute}, criterion {criterion}, expected {order}"
    return True, ""


@register("weyl-cartan-cayley-order-12", "weyl")
def _weyl_cartan_cayley() -> Outcome:
    return _weyl("cartan_cayley", 12)


@register("weyl-cd-cayley-order-168", "weyl")
def _weyl_cd_cayley() -> Outcome:
    return _weyl("cd_cayley", 168)


@register("weyl-matrix-theorem", "weyl")
def _weyl_matrix() -> Outcome:
    for (moduli, k), order in {((2,), 2): 48, ((3,), 1): 24, ((2,), 3): 576}.items():
        report = weyl_matrix_theorem_check(moduli, k)
        if not report.passed or report.lower_order != order:
            return False, f"{moduli}, k={k}: lower {report.lower_order}, {report.failed_checks()}"
    return True, ""


@register("weyl-albert-cartan-order-1152", "weyl")
def _weyl_albert_cartan() -> Outcome:
    return _weyl("albert_cartan", 1152)


@register("weyl-albert-z25-order-64512", "weyl")
def _weyl_albert_z25() -> Outcome:
    return _weyl("albert_z25", 64512)


@register("weyl-albert-zz23-order-2688", "weyl")
def _weyl_albert_zz23() -> Outcome:
    return _weyl("albert_zz23", 2688)


@register("z33-associativity-defects", "weyl")
def _z33_defects() -> Outcome:
    plus, minus = z33_isomorphism_obstruction()
    w = omega()
    return plus == w and minus == w * w, f"Gamma+: {plus}, Gamma-: {minus}"


@register("weyl-albert-z33-order-5616", "weyl")
def _weyl_albert_z33() -> Outcome:
    return _weyl("albert_z33", 5616)

