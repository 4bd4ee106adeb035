"""
Verification reports for the antidiagonal theorem and its supporting statements.

Every report carries named integer values and a verdict; failures also carry
witness vectors written in the diagram, tree or monomial text formats.
"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional

from app.data.models import Verdict, VerificationReport
from app.errors import AmbientTooLargeError, DifferentialMismatchError
from app.services.diagrams import (
    LabeledTree,
    diagram_from_key,
    enumerate_labeled_trees,
    enumerate_line_diagrams,
    serialize,
    tree_from_key,
    trees_on,
)
from app.services.dmaps import (
    bracket_trees,
    delta,
    index_sign,
    nabla,
    phi,
    phi_choices,
    phi_prime,
    phi_representative,
    psi,
    psi_prime,
    psi_representative,
    tree_degree,
    tree_vector,
)
from app.services.liealg import (
    DEFAULT_AMBIENT_CAP,
    Generator,
    SubstitutionKind,
    SubstitutionRule,
    build_component,
    differential,
    free_lie_slice,
    generators_of,
    lie_bracket,
    m_spanning_set,
    m_subspace,
    monomial_from_key,
    monomial_vector,
    repeated_pair_generators,
    substitute,
    x_in_spanning_set,
)
from app.services.qlinalg import SparseVector, Subspace, span, vector_sum
from app.services.relations import (
    graph_vector,
    quotient_space,
    relators_4t,
    relators_ihx,
    relators_sep,
    relators_stu2,
    tree_ihx_relators,
)
from app.services.relations.relators import _valid_resolution, templates
from app.services.spectral.antidiagonal import (
    e1_antidiagonal_dim,
    e2_antidiagonal_dim,
    image_d_subspace,
    stu2_tree_subspace,
)

logger = logging.getLogger(__name__)

AIKN = "AIkn_mod_IHX_STU2_SEP"
WITNESS_LIMIT = 5


def format_vector(v: SparseVector) -> str:
    if v.is_zero():
        return "0"
    return " + ".join(f"{value}*{key}" for key, value in v.items())


class _Checks:
    """Collects named values and witnesses while a report is assembled."""

    def __init__(self, statement: str, n: int):
        self.statement = statement
        self.n = n
        self.values: Dict[str, int] = {}
        self.witnesses: List[str] = []
        self.failed = False
        self.capped = False

    def value(self, name: str, value: int) -> None:
        self.values[name] = value

    def require(self, condition: bool, name: str, witness: Optional[str] = None) -> None:
        if not condition:
            self.failed = True
            logger.warning(f"{self.statement} n={self.n}: {name} failed")
            if witness is not None and len(self.witnesses) < WITNESS_LIMIT:
                self.witnesses.append(f"{name}: {witness}")

    def require_equal(self, left: Subspace, right: Subspace, name: str) -> None:
        """Equality of two spans; a failure names a basis row of one that the other misses."""
        if left == right:
            return
        self.require(False, name, _difference_witness(left, right))

    def count_failures(self, name: str, vectors: Iterable[SparseVector], subspace: Subspace) -> None:
        failures = 0
        for vector in vectors:
            if subspace.reduce(vector).is_zero():
                continue
            failures += 1
            self.require(False, name, format_vector(vector))
        self.value(f"{name}_failures", failures)

    def report(self) -> VerificationReport:
        if self.failed:
            verdict = Verdict.FAIL
        elif self.capped:
            verdict = Verdict.OUT_OF_CAP
        else:
            verdict = Verdict.PASS
        logger.info(f"{self.statement} n={self.n}: {verdict.value}")
        return VerificationReport(
            statement=self.statement, n=self.n, values=self.values, verdict=verdict, witnesses=self.witnesses
        )


def _difference_witness(left: Subspace, right: Subspace) -> str:
    for row in left.rows:
        if not right.reduce(row).is_zero():
            return f"only in first span: {format_vector(row)}"
    for row in right.rows:
        if not left.reduce(row).is_zero():
            return f"only in second span: {format_vector(row)}"
    return "spans differ"


def _out_of_cap(statement: str, n: int, cap: int) -> VerificationReport:
    logger.info(f"{statement} n={n} exceeds the degree cap {cap}")
    return VerificationReport(statement=statement, n=n, values={"degree_cap": cap}, verdict=Verdict.OUT_OF_CAP)


def _quotient_witnesses(model: str, n: int, k: Optional[int] = None) -> str:
    """Basis keys that survive in the quotient."""
    space = quotient_space(model, n, k)
    pivots = space.relators.pivots
    return ", ".join([key for key in space.ambient if key not in pivots][:WITNESS_LIMIT])


def verify_main(n: int, degree_cap: int = 4) -> VerificationReport:
    statement = "main"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)
    dims = {
        "e2_antidiagonal": e2_antidiagonal_dim(n),
        "chords_mod_4T_SEP": quotient_space("chords_mod_4T_SEP", n).dim,
        "feynman_mod_STU_SEP": quotient_space("feynman_mod_STU_SEP", n).dim,
        "AI1n_mod_IHX_STU2_SEP": quotient_space(AIKN, n, 1).dim,
    }
    for name, value in dims.items():
        checks.value(name, value)
    agree = len(set(dims.values())) == 1
    checks.require(agree, "dimensions agree", None if agree else _quotient_witnesses("chords_mod_4T_SEP", n))
    return checks.report()


def verify_chain(n: int, degree_cap: int = 4) -> VerificationReport:
    """A^I_{k,n} against A^I_n for every k; k = n - 1 is reported, never asserted."""
    statement = "chain"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)
    reference = quotient_space("chords_mod_4T_SEP", n).dim
    checks.value("A_n", reference)
    for k in range(1, n + 1):
        dim = quotient_space(AIKN, n, k).dim
        if k == n - 1:
            checks.value(f"A_{k}_{n}:reported-only", dim)
            continue
        checks.value(f"A_{k}_{n}", dim)
        agree = dim == reference
        checks.require(agree, f"A_{k}_{n} equals A_n", None if agree else _quotient_witnesses(AIKN, n, k))
    return checks.report()


def verify_stu2(n: int, degree_cap: int = 4) -> VerificationReport:
    """STU² equals 4T on chords; distinct-vertex breakings suffice for k < n."""
    statement = "stu2"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)
    for k in range(1, n + 1):
        full = span(r.vector for r in relators_stu2(n, k))
        checks.value(f"stu2_rank_k{k}", full.rank)
        without_loops = span(r.vector for r in relators_stu2(n, k, include_loops=False))
        checks.value(f"stu2_rank_without_loops_k{k}:reported-only", without_loops.rank)
        if k == n:
            four_term = span(r.vector for r in relators_4t(n))
            checks.value("4T_rank", four_term.rank)
            checks.require_equal(full, four_term, "STU2 span equals 4T span")
        else:
            distinct = span(r.vector for r in relators_stu2(n, k, distinct_only=True))
            checks.value(f"stu2_distinct_rank_k{k}", distinct.rank)
            checks.require_equal(distinct, full, f"distinct-vertex STU2 spans all STU2 at k={k}")
    return checks.report()


def verify_proposition(n: int, degree_cap: int = 4) -> VerificationReport:
    """The image of d is the span of the STU² relators among labeled trees."""
    statement = "image_d"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)
    base = quotient_space("barAI1n_mod_IHX", n).relators.rank
    image, relations = image_d_subspace(n), stu2_tree_subspace(n)
    checks.value("e1_antidiagonal", e1_antidiagonal_dim(n))
    checks.value("image_d_rank", image.rank - base)
    checks.value("stu2_rank", relations.rank - base)
    checks.require_equal(image, relations, "image of d equals STU2 span")
    return checks.report()


def _tree_basis(n: int) -> List[LabeledTree]:
    labels = range(1, n + 2)
    return [
        LabeledTree(size=n, term=term)
        for size in range(2, n + 2)
        for subset in itertools.combinations(labels, size)
        for term in trees_on(subset)
    ]


def _labels_of(key: str) -> tuple:
    return tuple(tree_from_key(key).labels())


@lru_cache(maxsize=None)
def _tree_ihx_span(n: int, labels: tuple) -> Subspace:
    return span(r.vector for r in tree_ihx_relators(n, labels))


def _in_tree_ihx(v: SparseVector, n: int) -> bool:
    """Membership modulo IHX, label set by label set."""
    groups: Dict[tuple, SparseVector] = {}
    for key, value in v.items():
        labels = _labels_of(key)
        groups[labels] = groups.get(labels, SparseVector()) + SparseVector.basis(key, value)
    return all(
        _tree_ihx_span(n, labels).reduce(part).is_zero()
        for labels, part in groups.items()
    )


def verify_lie(n: int, degree_cap: int = 3, ambient_cap: int = DEFAULT_AMBIENT_CAP) -> VerificationReport:
    statement = "lie"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)

    subsets = [frozenset(s) for size in range(8) for s in itertools.combinations(range(1, 8), size)]
    sign_failures = 0
    for alpha, beta in itertools.product(subsets, repeat=2):
        common = alpha & beta
        if len(common) > 1:
            continue
        lhs = (index_sign(alpha, beta) + index_sign(beta, alpha)) % 2
        if lhs != (len(alpha - common) * len(beta - common)) % 2:
            sign_failures += 1
            checks.require(False, "index sign symmetry", f"alpha={sorted(alpha)} beta={sorted(beta)}")
    checks.value("index_sign_failures", sign_failures)

    trees = _tree_basis(n)
    vectors = {t: tree_vector(t) for t in trees}
    degree = {t: tree_degree(t) for t in trees}
    antisymmetry = jacobi = 0
    for t1, t2 in itertools.product(trees, repeat=2):
        forward = bracket_trees(vectors[t1], vectors[t2])
        backward = bracket_trees(vectors[t2], vectors[t1]) * ((-1) ** (degree[t1] * degree[t2]))
        if not (forward + backward).is_zero():
            antisymmetry += 1
            checks.require(False, "tree bracket antisymmetry", format_vector(forward + backward))
    for t1, t2, t3 in itertools.product(trees, repeat=3):
        v1, v2, v3 = vectors[t1], vectors[t2], vectors[t3]
        twist = (-1) ** (degree[t1] * degree[t2])
        identity = (
            bracket_trees(v1, bracket_trees(v2, v3))
            - bracket_trees(bracket_trees(v1, v2), v3)
            - bracket_trees(v2, bracket_trees(v1, v3)) * twist
        )
        if not identity.is_zero() and not _in_tree_ihx(identity, n):
            jacobi += 1
            checks.require(False, "tree bracket Jacobi", format_vector(identity))
    checks.value("tree_basis_size", len(trees))
    checks.value("antisymmetry_failures", antisymmetry)
    checks.value("jacobi_failures", jacobi)

    try:
        _lie_component_checks(checks, n, ambient_cap)
    except AmbientTooLargeError as e:
        logger.warning(f"lie checks for n={n} stopped: {e}")
        checks.value("ambient_monomials", e.count)
        checks.capped = True
    return checks.report()


def _lie_component_checks(checks: _Checks, n: int, ambient_cap: int) -> None:
    if n >= 2:
        killed = 0
        for d in range(1, min(3, n) + 1):
            for row in build_component(n, d, ambient_cap).relators.rows:
                image = delta(row, n - 1)
                if not image.is_zero() and not _in_tree_ihx(image, n - 1):
                    killed += 1
                    checks.require(False, "delta kills relators", format_vector(row))
        checks.value("delta_relator_failures", killed)

    for d in range(max(1, n - 1), 4):
        component = build_component(n, d, ambient_cap)
        spanned = m_subspace(component, m_spanning_set(d, n))
        checks.value(f"M_{d}_{n}_dim", spanned.rank - component.relators.rank)
        checks.require_equal(spanned, m_subspace(component, x_in_spanning_set(d, n)), f"x_1j and x_in describe M_{d}_{n}")

    if n >= 2:
        component = build_component(n, n, ambient_cap)
        checks.require_equal(
            m_subspace(component, repeated_pair_generators(n)),
            m_subspace(component, m_spanning_set(n, n)),
            f"repeated-pair brackets span M_{n}_{n}",
        )

    component = build_component(n + 1, n, ambient_cap)
    spanned = m_subspace(component, m_spanning_set(n, n + 1))
    ambient_dim = spanned.rank - component.relators.rank
    checks.value(f"M_{n}_{n + 1}_ambient_dim", ambient_dim)
    agree = ambient_dim == e1_antidiagonal_dim(n)
    checks.require(
        agree,
        f"ambient and tree models of M_{n}_{n + 1} agree",
        None if agree else _difference_witness(spanned, component.relators),
    )


def verify_maps(n: int, degree_cap: int = 4) -> VerificationReport:
    statement = "maps"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)

    for k in range(2, n + 1):
        source, target = quotient_space(AIKN, n, k), quotient_space(AIKN, n, k - 1)
        images = []
        inverse_failures = 0
        for key in source.ambient:
            basis = SparseVector.basis(key)
            image = psi_representative(basis)
            images.append(image)
            back = phi_representative(image) - basis
            if not source.is_zero(back):
                inverse_failures += 1
                checks.require(False, f"phi psi is the identity at k={k}", key)
        checks.value(f"phi_psi_failures_k{k}", inverse_failures)
        reached = target.relators.extend(images)
        hit = reached.rank - target.relators.rank
        checks.value(f"psi_image_rank_k{k}", hit)
        onto = hit == target.dim
        missed = None if onto else next(key for key in target.ambient if SparseVector.basis(key) not in reached)
        checks.require(onto, f"psi onto A_{k - 1}_{n}", missed)
        if n <= 3:
            relators = relators_ihx(n, k) + relators_stu2(n, k) + relators_sep(n, k)
            checks.count_failures(f"psi_kills_relators_k{k}", (psi(r.vector) for r in relators), target.relators)

    for k in range(1, n):
        target = quotient_space(AIKN, n, k + 1)
        disagreements = 0
        for d in enumerate_line_diagrams(n, k):
            choices = [target.normal_form(choice) for choice in phi_choices(d)]
            if any(choice != choices[0] for choice in choices[1:]):
                disagreements += 1
                checks.require(False, f"phi independent of the vertex at k={k}", serialize(d))
        checks.value(f"phi_choice_failures_k{k}", disagreements)
        if n <= 3 and k != n - 2:
            source_relators = relators_ihx(n, k) + relators_stu2(n, k) + relators_sep(n, k)
            checks.count_failures(
                f"phi_kills_relators_k{k}", (phi(r.vector) for r in source_relators), target.relators
            )

    if n >= 3:
        chords = quotient_space(AIKN, n, n)
        bottom = quotient_space(AIKN, n, n - 2)
        failures = 0
        for key in chords.ambient:
            basis = SparseVector.basis(key)
            if not chords.is_zero(phi_prime(psi_prime(basis)) - basis):
                failures += 1
                checks.require(False, "phi' psi' is the identity", key)
        checks.value("phi_prime_psi_prime_failures", failures)
        if n <= 3:
            four_term = relators_4t(n) + relators_sep(n, n)
            checks.count_failures("psi_prime_kills_4T_SEP", (psi_prime(r.vector) for r in four_term), bottom.relators)

    trees = quotient_space("barAI1n_mod_IHX", n)
    tree_failures = 0
    for t in enumerate_labeled_trees(n):
        v = tree_vector(t)
        if not trees.is_zero(delta(nabla(v), n) - v):
            tree_failures += 1
            checks.require(False, "delta nabla is the identity", format_vector(v))
    checks.value("delta_nabla_failures", tree_failures)

    letters = [Generator(1, j) for j in range(2, n + 2)]
    lie_slice = free_lie_slice(letters)
    slice_failures = 0
    for key in lie_slice.ambient:
        v = monomial_vector(monomial_from_key(key))
        if not lie_slice.is_zero(nabla(delta(v, n)) - v):
            slice_failures += 1
            checks.require(False, "nabla delta is the identity", format_vector(v))
    checks.value("nabla_delta_failures", slice_failures)
    return checks.report()


def _repeated_index(c1, c2) -> int:
    (k,) = {g.j for g in generators_of(c1)} & {g.j for g in generators_of(c2)}
    return k


def verify_differential(n: int, degree_cap: int = 4, ambient_cap: int = DEFAULT_AMBIENT_CAP) -> VerificationReport:
    """Full and reduced differentials agree, d squares to zero, and the two-factor formula holds under Delta."""
    statement = "differential"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)
    degrees = sorted(set(range(1, 4)) | {n})
    checked = squares = 0
    for d in degrees:
        for c in m_spanning_set(d, n):
            v = monomial_vector(c)
            try:
                reduced = differential(v, n, verify=True, cap=ambient_cap)
            except DifferentialMismatchError as e:
                checks.require(False, f"full and reduced differential agree in degree {d}", format_vector(e.full - e.reduced))
                continue
            except AmbientTooLargeError as e:
                logger.warning(f"differential check skipped: {e}")
                checks.capped = True
                continue
            checked += 1
            twice = differential(reduced, n + 1)
            if not twice.is_zero():
                squares += 1
                checks.require(False, "d squares to zero", format_vector(twice))
    checks.value("monomials_checked", checked)
    checks.value("d_squared_failures", squares)

    if n >= 2:
        relators = quotient_space("barAI1n_mod_IHX", n).relators
        formula_failures = 0
        for c1, c2 in repeated_pair_generators(n):
            k = _repeated_index(c1, c2)
            sign = (-1) ** k
            formula = (
                -lie_bracket(substitute(c1, SubstitutionRule(SubstitutionKind.SHIFT1)), substitute(c2, SubstitutionRule(SubstitutionKind.SHIFT2)))
                - lie_bracket(substitute(c1, SubstitutionRule(SubstitutionKind.SHIFT2)), substitute(c2, SubstitutionRule(SubstitutionKind.SHIFT1)))
                + lie_bracket(substitute(c1, SubstitutionRule(SubstitutionKind.BRACE, k)), substitute(c2, SubstitutionRule(SubstitutionKind.ANGLE, k))) * sign
                + lie_bracket(substitute(c1, SubstitutionRule(SubstitutionKind.ANGLE, k)), substitute(c2, SubstitutionRule(SubstitutionKind.BRACE, k))) * sign
            )
            computed = differential(monomial_vector((c1, c2)), n)
            difference = delta(computed, n) - delta(formula, n)
            if not relators.reduce(difference).is_zero():
                formula_failures += 1
                checks.require(False, "two-factor differential formula", format_vector(computed - formula))
        checks.value("formula_failures", formula_failures)
    return checks.report()


def verify_appendix(n: int, degree_cap: int = 3, instance_limit: int = 5000) -> VerificationReport:
    """
    Grafting identities behind the well-definedness of Psi:
    (1) a graft distributed over a run of up to three legs maps STU² relators
        into the STU² span one component lower;
    (2) a graft summed over every leg of one tree vanishes modulo IHX.
    """
    statement = "appendix"
    if n > degree_cap:
        return _out_of_cap(statement, n, degree_cap)
    checks = _Checks(statement, n)
    part_one = part_two = 0
    for k in range(2, n + 1):
        stu2_below = span(r.vector for r in relators_stu2(n, k - 1))
        ihx_below = span(r.vector for r in relators_ihx(n, k - 1))
        vectors = list(_distributed_grafts(n, k, instance_limit))
        part_one += len(vectors)
        checks.count_failures(f"stu2_graft_k{k}", vectors, stu2_below)
        sums = list(_tree_graft_sums(n, k))
        part_two += len(sums)
        checks.count_failures(f"ihx_graft_k{k}", sums, ihx_below)
    checks.value("stu2_instances", part_one)
    checks.value("ihx_instances", part_two)

    if n >= 3:
        bottom = quotient_space(AIKN, n, n - 2)
        initial = [r for r in relators_4t(n) if _moves_first_chord(r.vector)]
        checks.value("initial_4T_relators", len(initial))
        checks.count_failures("psi_prime_kills_initial_4T", (psi_prime(r.vector) for r in initial), bottom.relators)
    return checks.report()


def _moves_first_chord(v: SparseVector) -> bool:
    """4T relators in which the chord at the leftmost leg changes between terms."""
    firsts = {diagram_from_key(key).components[0] for key in v.keys()}
    return len(firsts) > 1


def _runs(positions: List[int], size: int):
    for start in range(len(positions) - size + 1):
        run = positions[start:start + size]
        if run[-1] - run[0] == size - 1:
            yield run


def _distributed_grafts(n: int, k: int, limit: int):
    produced = 0
    for _, _, template, joined, joined_leg in templates(n, k):
        owner = {p: index for index, group in enumerate(template.components()) for p in group}
        for identifier, leg_edge in template.breakings():
            if identifier == joined and leg_edge == joined_leg:
                continue
            if _valid_resolution(template, identifier, leg_edge) is None:
                continue
            sites = {joined_leg, leg_edge}
            free = sorted(p for p, edge in template.legs.items() if edge not in sites)
            for moving in free:
                others = [p for p in free if owner[p] != owner[moving]]
                for size in (1, 2, 3):
                    for run in _runs(others, size):
                        yield _grafted_relator(template, [(joined, joined_leg), (identifier, leg_edge)], moving, run)
                        produced += 1
                        if produced >= limit:
                            return


def _grafted_relator(template, breakings, moving: int, run: List[int]) -> SparseVector:
    moving_edge = template.legs[moving]
    run_edges = [template.legs[p] for p in run]
    total = SparseVector()
    for outer, (identifier, leg_edge) in zip((1, -1), breakings):
        for inner, resolved in zip((1, -1), template.break_at(identifier, leg_edge)):
            where = {edge: p for p, edge in resolved.legs.items()}
            for edge in run_edges:
                total = total + graph_vector(resolved.graft(where[moving_edge], where[edge]), outer * inner)
    return total


def _tree_graft_sums(n: int, k: int):
    for d in enumerate_line_diagrams(n, k):
        graph = d.graph()
        groups = d.component_legs()
        for moving in range(d.legs):
            for group in groups:
                if moving in group:
                    continue
                yield vector_sum(graph_vector(graph.graft(moving, target)) for target in group)


STATEMENTS = {
    "main": verify_main,
    "chain": verify_chain,
    "maps": verify_maps,
    "differential": verify_differential,
    "lie": verify_lie,
    "appendix": verify_appendix,
    "stu2": verify_stu2,
    "image_d": verify_proposition,
}
