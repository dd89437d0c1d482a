"""
The Weyl group verification pipeline.

For each builtin grading a lower bound is obtained as the closure of the
support permutations induced by explicit automorphisms, and an upper bound
from the support-preserving automorphisms of the universal group (or a
structured count, or a realizability filter). The report records both orders
and a list of named structure checks.
"""

import logging
import math
import random
import time
from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, model_validator

from ..algebras.albert import albert_nu_basis
from ..algebras.cayley import cayley_cd_basis
from ..algebras.pauli import pauli_index, pauli_matrix_algebra
from ..config import get_settings
from ..core.base import canonical_json
from ..core.parallel import parallel_map
from ..core.scalars import omega
from ..exceptions import ConfigurationError, GroupError, UnknownObjectError
from ..gradings.base import Grading
from ..gradings.builtin import builtin_grading, declared_universal
from ..groups.abelian import AbElem, AbGroup, AbHom, enumerate_automorphisms
from ..groups.bicharacters import aut_bicharacter_bruteforce
from ..morphisms.base import AlgAutomorphism, SupportPerm, graded_automorphism_check
from ..morphisms.builtin import (
    NotRealizable,
    octonion_aut_from_group_aut,
    phi1_cayley,
    phi2_cayley,
    phi_extension_albert,
    phi_extension_zz23,
    psi0_zz23,
    psi_12,
    psi_123,
    psi_23,
    realizable_key,
    realize_z33,
    tau_albert,
    tau_cayley,
    z33_isomorphism_obstruction,
)
from ..morphisms.matrix import division_aut_from_symplectic, monomial_automorphism
from ..morphisms.spin import spin_beta_z25, spin_beta_zz23, spin_standard
from .bounds import structured_z25_count, support_preserving_upper_bound
from .perm import PermGroup, closure, elementary_transvections, perm_from_degree_map
from .roots import phi_root_system, symmetric_subsets

logger = logging.getLogger(__name__)


# ── Report model ─────────────────────────────────────────────────────


class CheckResult(BaseModel):
    """One named structure check."""

    name: str
    passed: bool
    detail: str = ""


class WeylReport(BaseModel):
    """
    Outcome of a Weyl group computation.

    ``metadata`` carries wall-clock data and is left out of ``canonical_json``
    so that reports of identical runs compare equal.
    """

    grading: str
    strategy: str
    lower_order: int = Field(ge=1)
    upper_order: int = Field(ge=1)
    raw_upper_order: Optional[int] = None
    matched: bool
    structure_checks: List[CheckResult] = Field(default_factory=list)
    generators: List[List[int]] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _matched_means_equal(self) -> "WeylReport":
        if self.matched and self.lower_order != self.upper_order:
            raise ValueError(
                f"matched report with lower {self.lower_order} != upper {self.upper_order}"
            )
        return self

    @property
    def passed(self) -> bool:
        return self.matched and all(c.passed for c in self.structure_checks)

    def failed_checks(self) -> List[str]:
        return [c.name for c in self.structure_checks if not c.passed]

    def canonical_json(self) -> str:
        return canonical_json(self.model_dump(exclude={"metadata"}))


def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    if not passed:
        logger.warning(f"Check {name} failed: {detail}")
    return CheckResult(name=name, passed=bool(passed), detail=detail)


class Mode(NamedTuple):
    kind: str
    samples: Optional[int] = None


def parse_mode(text: Optional[str] = None) -> Mode:
    """
    Parse ``full`` or ``sampled:n``.

    Raises:
        ConfigurationError: For anything else

    Examples:
        >>> parse_mode("sampled:200")
        Mode(kind='sampled', samples=200)
    """
    text = text or get_settings().weyl.z33_mode
    if text == "full":
        return Mode("full")
    if text.startswith("sampled:"):
        try:
            n = int(text.split(":", 1)[1])
        except ValueError as e:
            raise ConfigurationError(f"Bad sample count in mode {text!r}: {str(e)}") from e
        if n < 1:
            raise ConfigurationError(f"Sample count must be positive, got {n}")
        return Mode("sampled", n)
    raise ConfigurationError(f"Unknown mode {text!r}; use 'full' or 'sampled:<n>'")


# ── Shared steps ─────────────────────────────────────────────────────


class _Outcome(NamedTuple):
    strategy: str
    lower: PermGroup
    upper_order: int
    raw_upper_order: Optional[int]
    upper: Optional[PermGroup]
    checks: List[CheckResult]
    details: Dict[str, Any]


_Result = Tuple[_Outcome, List[SupportPerm]]


def _project(grading: Grading, automorphisms: Sequence[AlgAutomorphism]) -> List[SupportPerm]:
    return [graded_automorphism_check(grading, phi) for phi in automorphisms]


def _common_checks(
    grading: Grading, outcome: _Outcome, gens: Sequence[SupportPerm]
) -> List[CheckResult]:
    lower = outcome.lower
    checks = [
        _check(
            "lower-divides-upper",
            outcome.upper_order % lower.order == 0,
            f"{lower.order} | {outcome.upper_order}",
        ),
        _check(
            "universal-group-matches-declared",
            grading.universal().group.normal_form() == declared_universal(grading),
            str(grading.universal().group),
        ),
        _check("lower-bound-is-a-group", lower.is_closed(), f"order {lower.order}"),
    ]
    failures = []
    for g in gens:
        try:
            g.induced_universal()
        except GroupError as e:
            failures.append(f"{g}: {str(e)}")
    checks.append(
        _check("generators-extend-to-universal", not failures, "; ".join(failures[:3]))
    )
    if outcome.upper is not None:
        outside = [p for p in lower if p not in outcome.upper]
        checks.append(
            _check("lower-inside-upper", not outside, f"{len(outside)} elements outside")
        )
    return checks


def _upper_bound_outcome(
    strategy: str,
    grading: Grading,
    lower: PermGroup,
    checks: List[CheckResult],
    details: Optional[Dict[str, Any]] = None,
) -> _Outcome:
    upper = support_preserving_upper_bound(grading)
    return _Outcome(strategy, lower, upper.order, upper.order, upper, checks, details or {})


# ── Octonions ────────────────────────────────────────────────────────


def _cartan_cayley(grading: Grading, mode: Mode, jobs: Optional[int]) -> _Result:
    gens = _project(grading, [tau_cayley(), phi1_cayley(), phi2_cayley()])
    lower = closure(grading, gens)
    roots = phi_root_system(grading)
    zero = (0, 0)
    short = set(roots.short)
    support = {d for d in grading.support().degrees if d != zero}
    checks = [
        _check("g2-has-12-roots", len(roots) == 12, str(len(roots))),
        _check("g2-short-roots-are-support", short == support, f"{len(short)} short"),
        _check("g2-closed-under-negation", roots.is_closed_under_negation()),
    ]
    return _upper_bound_outcome("closure+upper-bound", grading, lower, checks), gens


def _cd_cayley(grading: Grading, mode: Mode, jobs: Optional[int]) -> _Result:
    autos = enumerate_automorphisms(grading.group)
    lifts = [octonion_aut_from_group_aut(mu) for mu in autos]
    gens = _project(grading, lifts)
    mismatched = [
        mu.key() for mu, g in zip(autos, gens) if perm_from_degree_map(grading, mu) != g.perm
    ]
    lower = closure(grading, gens)
    checks = [
        _check("every-group-automorphism-lifts", len(lifts) == len(autos), f"{len(lifts)} lifts"),
        _check("lifts-induce-their-group-map", not mismatched, f"{len(mismatched)} mismatches"),
    ]
    return _upper_bound_outcome("closure+upper-bound", grading, lower, checks), gens


# ── Albert algebra ───────────────────────────────────────────────────


def _albert_cartan(grading: Grading, mode: Mode, jobs: Optional[int]) -> _Result:
    gens = _project(grading, [psi_123(), psi_23(), spin_standard(), tau_albert()])
    lower = closure(grading, gens)

    roots = phi_root_system(grading)
    zero = (0, 0, 0, 0)
    support = {d for d in grading.support().degrees if d != zero}
    labels = grading.algebra.labels
    blocks = [
        frozenset(grading.degrees[k] for k, b in enumerate(labels) if b.startswith(f"i{i}("))
        for i in (1, 2, 3)
    ]
    found = symmetric_subsets(roots)

    table = grading.support()
    block1 = {table.position(d) for d in blocks[0]}
    stabilizer = sum(1 for p in lower if {p[s] for s in block1} == block1)

    checks = [
        _check("f4-has-48-roots", len(roots) == 48, str(len(roots))),
        _check("f4-short-roots-are-support", set(roots.short) == support, f"{len(roots.short)}"),
        _check("f4-closed-under-negation", roots.is_closed_under_negation()),
        _check(
            "iota-supports-are-the-symmetric-subsets",
            sorted(found, key=sorted) == sorted(blocks, key=sorted),
            f"{len(found)} subsets",
        ),
        _check("stabilizer-of-iota1-support-has-order-384", stabilizer == 384, str(stabilizer)),
    ]
    return _upper_bound_outcome("closure+upper-bound", grading, lower, checks), gens


def _t_images(grading: Grading, p: SupportPerm) -> List[Tuple[int, ...]]:
    """Images of the nonzero t in T = {0} x Z_2^3 as mu(a + t) - mu(a)."""
    degree_map = p.degree_map()
    a = (1, 0, 0, 0, 0)
    group = grading.group
    out = []
    for t in AbGroup(0, (2, 2, 2)).element_coords():
        if not any(t):
            continue
        x = group.add(a, (0, 0) + t)
        out.append(group.add(degree_map[x], group.scale(-1, degree_map[a])))
    return out


def _albert_z25(grading: Grading, mode: Mode, jobs: Optional[int]) -> _Result:
    C = cayley_cd_basis()
    octonion_group = AbGroup(0, (2, 2, 2))
    autos: List[AlgAutomorphism] = [psi_123(C), psi_12(C)]
    autos += [
        phi_extension_albert(octonion_aut_from_group_aut(mu))
        for mu in elementary_transvections(octonion_group)
    ]
    autos += [spin_beta_z25(g.coords) for g in octonion_group.generators()]
    gens = _project(grading, autos)
    lower = closure(grading, gens)

    moved = [g for g in gens if any(img[:2] != (0, 0) for img in _t_images(grading, g))]
    checks = [_check("generators-stabilize-T", not moved, f"{len(moved)} move T")]
    count = structured_z25_count()
    checks.append(
        _check("structured-count-is-64512", count["order"] == 64512, str(count["order"]))
    )
    if get_settings().weyl.z25_exhaustive:
        return _upper_bound_outcome("closure+upper-bound", grading, lower, checks, count), gens
    outcome = _Outcome("closure+structured-count", lower, count["order"], None, None, checks, count)
    return outcome, gens


def _albert_zz23(grading: Grading, mode: Mode, jobs: Optional[int]) -> _Result:
    octonion_group = AbGroup(0, (2, 2, 2))
    autos: List[AlgAutomorphism] = [psi0_zz23()]
    autos += [spin_beta_zz23(g.coords) for g in octonion_group.generators()]
    autos += [
        phi_extension_zz23(octonion_aut_from_group_aut(mu))
        for mu in elementary_transvections(octonion_group)
    ]
    if any(phi.algebra is not albert_nu_basis() for phi in autos):
        raise GroupError("zz23 generators must act on the nu-basis")
    gens = _project(grading, autos)
    lower = closure(grading, gens)

    group = grading.group
    flip = [d for d, e in gens[0].degree_map().items() if e != group.normalize((-d[0],) + d[1:])]
    shifted = []
    for g, p in zip(octonion_group.generators(), gens[1:4]):
        for d, e in p.degree_map().items():
            t = group.add(d, (0,) + g.coords) if d[0] % 2 else d
            if e != t:
                shifted.append(f"{list(g.coords)}: {d}")
                break
    checks = [
        _check("psi0-negates-z-coordinate", not flip, f"{len(flip)} degrees"),
        _check("beta-shifts-odd-degrees-by-h", not shifted, "; ".join(shifted)),
    ]
    return _upper_bound_outcome("closure+upper-bound", grading, lower, checks), gens


def _albert_z33(grading: Grading, mode: Mode, jobs: Optional[int]) -> _Result:
    group = grading.group
    realized = [realize_z33(grading, mu) for mu in elementary_transvections(group)]
    failed = [r for r in realized if isinstance(r, NotRealizable)]
    if failed:
        raise GroupError(f"Transvection {failed[0].key} is not realizable: {failed[0].reason}")
    gens = _project(grading, [r for r in realized if isinstance(r, AlgAutomorphism)])
    lower = closure(grading, gens)

    defects = z33_isomorphism_obstruction()
    w = omega()
    checks = [
        _check(
            "associativity-defect-separates-gamma-plus-minus",
            defects[0] == w and defects[1] == w * w,
            f"{defects}",
        )
    ]

    autos = enumerate_automorphisms(group)
    det_one = {mu.key() for mu in autos if mu.determinant_mod(3) == 1}
    details: Dict[str, Any] = {"gl_order": len(autos), "sl_order": len(det_one)}

    if mode.kind == "full":
        results = parallel_map(realizable_key, [(grading.name, mu.key()) for mu in autos], jobs)
        accepted = {key for key, ok in results if ok}
        by_key = {mu.key(): mu for mu in autos}
        accepted_perms = PermGroup(
            grading, [perm_from_degree_map(grading, by_key[key]) for key in accepted]
        )
        checks += [
            _check("realizable-iff-det-one", accepted == det_one, f"{len(accepted)} realizable"),
            _check("realizable-set-is-a-group", accepted_perms.is_closed()),
            _check("realizable-set-equals-lower", accepted_perms == lower),
        ]
        details["realizable"] = len(accepted)
        outcome = _Outcome(
            "closure+realizability", lower, len(accepted), len(autos), None, checks, details
        )
        return outcome, gens

    rng = random.Random(get_settings().weyl.sample_seed)
    sample = rng.sample(autos, min(mode.samples or 1, len(autos)))
    results = parallel_map(realizable_key, [(grading.name, mu.key()) for mu in sample], jobs)
    disagreements = [key for key, ok in results if ok != (key in det_one)]
    rate = sum(1 for _, ok in results if ok) / len(results)
    logger.warning(
        f"{grading.name}: realizability sampled on {len(sample)} of {len(autos)} "
        f"automorphisms (pass rate {rate:.3f})"
    )
    checks.append(
        _check(
            "sampled-realizable-iff-det-one",
            not disagreements,
            f"{len(disagreements)} disagreements in {len(sample)} samples",
        )
    )
    details.update({"samples": len(sample), "pass_rate": rate})
    outcome = _Outcome(
        "closure+sampled-realizability", lower, len(det_one), len(autos), None, checks, details
    )
    return outcome, gens


_STRATEGIES: Dict[str, Callable[[Grading, Mode, Optional[int]], _Result]] = {
    "cartan_cayley": _cartan_cayley,
    "cd_cayley": _cd_cayley,
    "albert_cartan": _albert_cartan,
    "albert_z25": _albert_z25,
    "albert_zz23": _albert_zz23,
    "albert_z33": _albert_z33,
    "albert_z33_minus": _albert_z33,
}


def _report(
    grading: Grading, outcome: _Outcome, gens: Sequence[SupportPerm], started: float
) -> WeylReport:
    checks = outcome.checks + _common_checks(grading, outcome, gens)
    report = WeylReport(
        grading=grading.name,
        strategy=outcome.strategy,
        lower_order=outcome.lower.order,
        upper_order=outcome.upper_order,
        raw_upper_order=outcome.raw_upper_order,
        matched=outcome.lower.order == outcome.upper_order,
        structure_checks=checks,
        generators=[list(p) for p in outcome.lower.generators],
        metadata={
            "seconds": round(time.perf_counter() - started, 3),
            "finished": datetime.now(timezone.utc).isoformat(),
            **outcome.details,
        },
    )
    logger.info(
        f"W({grading.name}): lower {report.lower_order}, upper {report.upper_order}, "
        f"matched={report.matched}"
    )
    return report


def weyl_group(
    grading: Union[str, Grading],
    mode: Optional[str] = None,
    jobs: Optional[int] = None,
    **params: Any,
) -> WeylReport:
    """
    Compute and cross-check the Weyl group of a builtin grading.

    Args:
        grading: Builtin grading or its name
        mode: ``full`` or ``sampled:n`` (only the Z_3^3 gradings sample)
        jobs: Worker count for the data-parallel steps
        **params: ``moduli`` and ``k`` when ``grading`` is ``gamma_M``

    Returns:
        WeylReport

    Raises:
        UnknownObjectError: For gradings without a strategy
        BoundExceededError: If an enumeration exceeds its bound
        ConfigurationError: For a malformed mode

    Examples:
        >>> weyl_group("cartan_cayley").lower_order
        12
    """
    if isinstance(grading, str):
        grading = builtin_grading(grading, **params)
    parsed = parse_mode(mode)
    if grading.name.startswith("gamma_M"):
        moduli, k = grading.metadata["pauli_moduli"], int(grading.metadata["k"])
        return weyl_matrix_theorem_check(moduli, k)
    strategy = _STRATEGIES.get(grading.name)
    if strategy is None:
        raise UnknownObjectError(f"No Weyl group strategy for grading {grading.name}")
    started = time.perf_counter()
    logger.info(f"Computing W({grading.name}) in mode {parsed.kind}")
    outcome, gens = strategy(grading, parsed, jobs)
    return _report(grading, outcome, gens, started)


# ── Matrix algebras ──────────────────────────────────────────────────


Law = Callable[[List[int], Tuple[int, ...]], Tuple[int, ...]]


def _full_x(degree: Sequence[int], k: int) -> List[int]:
    x = list(degree[: k - 1])
    return x + [-sum(x)]


def _with_x(x: Sequence[int], t: Sequence[int], k: int) -> Tuple[int, ...]:
    return tuple(x[: k - 1]) + tuple(t)


def weyl_matrix_theorem_check(moduli: Sequence[int], k: int) -> WeylReport:
    """
    W(Gamma_M) = T^{k-1} x| (Aut(T, beta) x Sym(k)) for M_k(D), D graded by T.

    Generators: adjacent transpositions of the matrix units, the scalings
    d = (X_g, 1, ..., 1) for the generators g of T, and the lifts of all of
    Aut(T, beta). Each generator's support permutation is compared with the
    action it must have on U = Z^k_0 x T:

        transposition pi:  (x, t) -> (pi x, t)
        scaling by X_g:    (x, t) -> (x, t + x_1 g)
        psi_0 from mu:     (x, t) -> (x, mu(t))

    Args:
        moduli: Pauli moduli of D (may be empty)
        k: Matrix size over D

    Returns:
        WeylReport comparing the closure with the formula and the refined upper bound
    """
    started = time.perf_counter()
    moduli = tuple(int(m) for m in moduli)
    grading = builtin_grading("gamma_M", moduli=moduli, k=k)
    D, T, beta = pauli_matrix_algebra(moduli)
    isometries = aut_bicharacter_bruteforce(T, beta)
    identity = list(range(k))

    families: Dict[str, List[Tuple[AlgAutomorphism, Law]]] = {
        "transpositions": [],
        "scalings": [],
        "isometries": [],
    }
    for i in range(k - 1):
        perm = list(identity)
        perm[i], perm[i + 1] = perm[i + 1], perm[i]

        def swap(x: List[int], t: Tuple[int, ...], perm: List[int] = perm) -> Tuple[int, ...]:
            y = [0] * k
            for j, target in enumerate(perm):
                y[target] = x[j]
            return _with_x(y, t, k)

        families["transpositions"].append(
            (monomial_automorphism(moduli, k, perm, name=f"swap{i + 1}{i + 2}"), swap)
        )
    if k >= 2:
        for g in T.generators():
            d_list = [D.basis(pauli_index(T, g.coords))] + [None] * (k - 1)

            def shift(x: List[int], t: Tuple[int, ...], g: AbElem = g) -> Tuple[int, ...]:
                return _with_x(x, T.add(t, T.scale(x[0], g.coords)), k)

            scaling = monomial_automorphism(moduli, k, identity, d_list, name=f"d{list(g.coords)}")
            families["scalings"].append((scaling, shift))
    for mu in isometries:
        psi0 = division_aut_from_symplectic(moduli, mu)

        def act(x: List[int], t: Tuple[int, ...], mu: AbHom = mu) -> Tuple[int, ...]:
            return _with_x(x, mu.apply(t), k)

        families["isometries"].append(
            (monomial_automorphism(moduli, k, identity, psi0=psi0, name=psi0.name), act)
        )

    gens: List[SupportPerm] = []
    checks: List[CheckResult] = []
    for family, members in families.items():
        bad = []
        for phi, law in members:
            p = graded_automorphism_check(grading, phi)
            gens.append(p)
            for d, image in p.degree_map().items():
                expected = grading.group.normalize(law(_full_x(d, k), d[k - 1 :]))
                if image != expected:
                    bad.append(phi.name)
                    break
        checks.append(
            _check(f"action-law-{family}", not bad, f"{len(members)} generators, failing: {bad}")
        )

    lower = closure(grading, gens)
    formula = (T.order or 1) ** (k - 1) * len(isometries) * math.factorial(k)
    refined = support_preserving_upper_bound(grading, refine=True)
    raw = support_preserving_upper_bound(grading)
    checks += [
        _check("order-matches-formula", lower.order == formula, f"{lower.order} vs {formula}"),
        _check("lower-equals-refined-upper", lower == refined, f"refined {refined.order}"),
    ]
    outcome = _Outcome(
        "matrix-theorem",
        lower,
        refined.order,
        raw.order,
        refined,
        checks,
        {"formula": formula, "isometries": len(isometries)},
    )
    return _report(grading, outcome, gens, started)
