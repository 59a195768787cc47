"""Verification harness: run the identity checks for one q and report.

Each check recomputes both sides of one bookkeeping identity from
independent code paths and compares exactly.  Results are assembled in
a fixed declared order into a report whose JSON rendering is canonical:
two runs with the same flags produce identical bytes, except for the
elapsed fields, which the stable mode omits.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from functools import cached_property

from . import __version__
from .brauer import (
    brauer_matrix,
    brauer_character_sym,
    conj_brauer,
    decomposition_map,
    expand_in_brauer_basis,
    p_regular_classes,
    regular_character,
)
from .classfun import (
    AdditiveCharacter,
    gelfand_graev,
    induce,
    induced_from_borel_trivial,
    inner_product,
    permutation_character_P1,
    steinberg,
    trivial_character,
)
from .curve import (
    canonical_brauer,
    canonical_model,
    count_points,
    curve_spec,
    elementary_generators,
    form_invariant_under,
    genus,
    smoothness_check,
)
from .dl import dl_character, lefschetz_C
from .errors import (
    DrinfeldError,
    GenusMismatch,
    NonIntegralSolution,
    UnknownCheckName,
    UnsupportedQ,
)
from .fields import build_field_tower
from .group import GroupTable, conjugacy_classes, subgroup_U

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9, 11)
SLOW_Q = (13,)


def _exact(value):
    """JSON-ready exact serialization of one cyclotomic value."""
    n = value.as_integer()
    if n is not None:
        return n
    r = value.as_rational()
    if r is not None:
        return str(r)
    return value.payload()


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | skipped
    details: dict
    elapsed_ms: float


@dataclass
class Report:
    q: int
    p: int
    checks: list
    overall: str
    version: str


class Context:
    """Shared immutable tables for one q, built once and reused by checks."""

    def __init__(self, q: int):
        self.q = q
        self.tower = build_field_tower(q)
        self.table = GroupTable(self.tower)

    @cached_property
    def trivial(self):
        return trivial_character(self.table)

    @cached_property
    def perm(self):
        return permutation_character_P1(self.table)

    @cached_property
    def st(self):
        return steinberg(self.table)

    @cached_property
    def ind_borel(self):
        return induced_from_borel_trivial(self.table)

    @cached_property
    def ind_unipotent(self):
        u = subgroup_U(self.table)
        return induce(self.table, u, {j: 1 for j in u.members})

    @cached_property
    def gg(self):
        return gelfand_graev(self.table, 1), gelfand_graev(self.table, 2)

    @cached_property
    def gg_other_representatives(self):
        """The same inductions from twists scaled by a nonzero square."""
        tower = self.tower
        u = subgroup_U(self.table)
        square = tower.mul(tower.g1, tower.g1)
        base = (1, 1 if tower.q % 2 == 0 else tower.g1)
        out = []
        for label, twist in enumerate(base, start=1):
            psi = AdditiveCharacter(label, tower, tower.mul(square, twist))
            vals = {j: psi(self.table.elements[j][1]) for j in u.members}
            out.append(induce(self.table, u, vals))
        return tuple(out)

    @cached_property
    def dl_list(self):
        return tuple(dl_character(self.table, j) for j in range(1, self.q + 1))

    @cached_property
    def canonical(self):
        return canonical_brauer(self.table)

    @cached_property
    def sym_sum(self):
        total = brauer_character_sym(self.table, 0)
        for i in range(1, self.q - 1):
            total = total + brauer_character_sym(self.table, i)
        return total

    @cached_property
    def ordinary_characters(self):
        named = [
            ("trivial", self.trivial),
            ("p1_permutation", self.perm),
            ("steinberg", self.st),
            ("borel_induction", self.ind_borel),
            ("unipotent_induction", self.ind_unipotent),
            ("gelfand_graev_1", self.gg[0]),
            ("gelfand_graev_2", self.gg[1]),
        ]
        named.extend((f"dl_{j}", r) for j, r in enumerate(self.dl_list, start=1))
        return named

    @cached_property
    def identity_regular_position(self):
        return next(
            k for k, c in enumerate(p_regular_classes(self.table))
            if c.element_order == 1
        )

    @cached_property
    def split_regular_class_indices(self):
        """Classes containing a diagonal matrix with distinct entries."""
        out = []
        for k, cls in enumerate(conjugacy_classes(self.table)):
            for i in cls.members:
                a, b, c, d = self.table.elements[i]
                if b == 0 and c == 0 and a != d:
                    out.append(k)
                    break
        return tuple(out)


def check_structure(ctx: Context):
    q = ctx.q
    details = {}
    ok = True

    n_regular = len(p_regular_classes(ctx.table))
    details["p_regular_classes"] = {"computed": n_regular, "expected": q}
    ok = ok and n_regular == q

    _, _, det = brauer_matrix(ctx.table)
    nonsingular = not det.is_zero()
    details["brauer_matrix_nonsingular"] = nonsingular
    ok = ok and nonsingular

    solves = {}
    for name, chi in ctx.ordinary_characters:
        try:
            decomposition_map(chi)
            solves[name] = "integral"
        except NonIntegralSolution:
            solves[name] = "non-integral"
            ok = False
    details["decomposition_solves"] = solves

    independent = ctx.gg == ctx.gg_other_representatives
    details["gelfand_graev_representative_independent"] = independent
    ok = ok and independent

    st_norm = inner_product(ctx.st, ctx.st)
    perm_norm = inner_product(ctx.perm, ctx.perm)
    details["steinberg_self_pairing"] = {"computed": _exact(st_norm), "expected": 1}
    details["p1_self_pairing"] = {"computed": _exact(perm_norm), "expected": 2}
    ok = ok and st_norm == 1 and perm_norm == 2
    return ok, details


def check_curve_geometry(ctx: Context):
    q = ctx.q
    details = {}
    ok = True

    smooth = smoothness_check(q, ctx.tower)
    details["smooth"] = smooth
    ok = ok and smooth

    base = count_points(q, 1, ctx.tower)
    quadratic = count_points(q, 2, ctx.tower)
    details["points_base_field"] = {"computed": base, "expected": q + 1}
    details["points_quadratic_field"] = {"computed": quadratic, "expected": q**3 + 1}
    ok = ok and base == q + 1 and quadratic == q**3 + 1

    expected_genus = q * (q - 1) // 2
    try:
        g = genus(q, ctx.tower)
        details["genus"] = {"computed": g, "expected": expected_genus}
        ok = ok and g == expected_genus
    except GenusMismatch as exc:
        details["genus"] = {
            "degree_route": exc.by_degree,
            "count_route": str(exc.by_count),
        }
        ok = False

    dimension = canonical_model(q).dimension
    details["canonical_dimension"] = {"computed": dimension, "expected": expected_genus}
    ok = ok and dimension == expected_genus

    spec = curve_spec(ctx.tower)
    invariant = all(
        form_invariant_under(spec, g) for g in elementary_generators(ctx.tower)
    )
    details["form_invariant_under_generators"] = invariant
    ok = ok and invariant
    return ok, details


def check_dl_orthogonality(ctx: Context):
    q = ctx.q
    details = {}
    ok = True

    identity_class = next(
        k for k, c in enumerate(conjugacy_classes(ctx.table)) if c.element_order == 1
    )
    dims = [_exact(r.values[identity_class]) for r in ctx.dl_list]
    details["values_at_identity"] = {"computed": dims, "expected": 1 - q}
    ok = ok and all(d == 1 - q for d in dims)

    gram = []
    expected_gram = []
    for j in range(1, q + 1):
        row = []
        expected_row = []
        for jp in range(1, q + 1):
            row.append(_exact(inner_product(ctx.dl_list[j - 1], ctx.dl_list[jp - 1])))
            expected_row.append(int(j == jp) + int(j == q + 1 - jp))
        gram.append(row)
        expected_gram.append(expected_row)
    details["gram_matrix"] = {"computed": gram, "expected": expected_gram}
    ok = ok and gram == expected_gram

    with_trivial = [_exact(inner_product(r, ctx.trivial)) for r in ctx.dl_list]
    details["pairing_with_trivial"] = {"computed": with_trivial, "expected": 0}
    ok = ok and all(v == 0 for v in with_trivial)

    split_values = [
        _exact(r.values[k])
        for r in ctx.dl_list
        for k in ctx.split_regular_class_indices
    ]
    details["split_regular_values"] = {"computed": split_values, "expected": 0}
    ok = ok and all(v == 0 for v in split_values)
    return ok, details


def check_canonical_decomposition(ctx: Context):
    q = ctx.q
    expected = (1,) * (q - 1) + (0,)
    vector = expand_in_brauer_basis(ctx.canonical)
    details = {
        "coordinates": {"computed": list(vector.coeffs), "expected": list(expected)}
    }
    return vector.coeffs == expected, details


def check_lefschetz_identity(ctx: Context):
    details = {}
    ok = True
    names, lhs, rhs = [], [], []
    for cls in p_regular_classes(ctx.table):
        total = ctx.dl_list[0].field.coerce(2)
        for r in ctx.dl_list:
            total = total + r.value_at(cls.rep_index)
        names.append(f"order_{cls.element_order}_size_{cls.size}")
        lhs.append(lefschetz_C(ctx.table, cls.rep_index))
        rhs.append(_exact(total))
    details["classes"] = names
    details["lefschetz_numbers"] = lhs
    details["two_plus_dl_sum"] = rhs
    ok = lhs == rhs
    return ok, details


def check_dl_decomposition_pattern(ctx: Context):
    q = ctx.q
    computed = sorted(tuple(decomposition_map(r).coeffs) for r in ctx.dl_list)
    expected = []
    for i in range(1, q + 1):
        vec = [0] * q
        if i - 2 >= 0:
            vec[i - 2] -= 1
        if q - i - 1 >= 0:
            vec[q - i - 1] -= 1
        expected.append(tuple(vec))
    expected = sorted(expected)
    details = {
        "multiset": {
            "computed": [list(v) for v in computed],
            "expected": [list(v) for v in expected],
        }
    }
    return computed == expected, details


def check_dl_vs_induction(ctx: Context):
    lhs = ctx.dl_list[0]
    for r in ctx.dl_list[1:]:
        lhs = lhs + r
    rhs = -(
        ctx.gg[0] + ctx.gg[1] - ctx.ind_unipotent - ctx.ind_borel
        + 2 * ctx.trivial
    )
    details = {
        "dl_sum": [_exact(v) for v in lhs.values],
        "minus_induction_side": [_exact(v) for v in rhs.values],
    }
    return lhs == rhs, details


def check_gelfand_graev_decomposition(ctx: Context):
    q = ctx.q
    expected = (1,) + (2,) * (q - 2) + (1,)
    details = {}
    ok = True
    for label, chi in zip((1, 2), ctx.gg):
        try:
            vector = decomposition_map(chi)
            details[f"gamma_{label}"] = {
                "computed": list(vector.coeffs),
                "expected": list(expected),
            }
            ok = ok and vector.coeffs == expected
        except NonIntegralSolution as exc:
            details[f"gamma_{label}"] = {"non_integral": exc.coefficients}
            ok = False
    return ok, details


def check_regular_decomposition(ctx: Context):
    q = ctx.q
    d_regular = decomposition_map(regular_character(ctx.table))
    d_gamma = decomposition_map(ctx.gg[0])
    expected = tuple(q * x for x in d_gamma.coeffs)
    details = {
        "regular": {"computed": list(d_regular.coeffs), "expected": list(expected)},
        "gamma_1": list(d_gamma.coeffs),
    }
    return d_regular.coeffs == expected, details


def check_canonical_self_duality(ctx: Context):
    lhs = ctx.canonical + conj_brauer(ctx.canonical)
    rhs = ctx.sym_sum + ctx.sym_sum
    details = {
        "canonical_plus_conjugate": [_exact(v) for v in lhs.values],
        "twice_symmetric_sum": [_exact(v) for v in rhs.values],
    }
    return lhs == rhs, details


CHECKS = (
    ("structure", check_structure),
    ("curve-geometry", check_curve_geometry),
    ("dl-orthogonality", check_dl_orthogonality),
    ("canonical-decomposition", check_canonical_decomposition),
    ("lefschetz-identity", check_lefschetz_identity),
    ("dl-decomposition-pattern", check_dl_decomposition_pattern),
    ("dl-vs-induction", check_dl_vs_induction),
    ("gelfand-graev-decomposition", check_gelfand_graev_decomposition),
    ("regular-decomposition", check_regular_decomposition),
    ("canonical-self-duality", check_canonical_self_duality),
)

CHECK_NAMES = tuple(name for name, _ in CHECKS)


def run_all(q: int, selection=None, allow_slow: bool = False) -> Report:
    """Run the selected checks (default all) for one q, in declared order."""
    supported = SUPPORTED_Q + (SLOW_Q if allow_slow else ())
    if q not in supported:
        raise UnsupportedQ(q, list(supported))
    if selection is None:
        selected = set(CHECK_NAMES)
    else:
        selected = set(selection)
        assert selected, "selection must be nonempty"
        for name in sorted(selected):
            if name not in CHECK_NAMES:
                raise UnknownCheckName(name, list(CHECK_NAMES))
    ctx = Context(q)
    results = []
    for name, fn in CHECKS:
        if name not in selected:
            results.append(CheckResult(name, "skipped", {}, 0.0))
            continue
        start = time.perf_counter()
        try:
            ok, details = fn(ctx)
        except DrinfeldError as exc:
            ok = False
            details = {"error": type(exc).__name__, "message": str(exc)}
        elapsed = (time.perf_counter() - start) * 1000.0
        results.append(
            CheckResult(name, "pass" if ok else "fail", details, round(elapsed, 3))
        )
    overall = "pass" if all(r.status != "fail" for r in results) else "fail"
    return Report(
        q=q, p=ctx.tower.p, checks=results, overall=overall, version=__version__
    )


def report_to_dict(report: Report, stable: bool = False) -> dict:
    checks = []
    for c in report.checks:
        entry = {"name": c.name, "status": c.status, "details": c.details}
        if not stable:
            entry["elapsed_ms"] = c.elapsed_ms
        checks.append(entry)
    return {
        "q": report.q,
        "p": report.p,
        "checks": checks,
        "overall": report.overall,
        "version": report.version,
    }


def render_json(report: Report, stable: bool = False) -> str:
    return json.dumps(report_to_dict(report, stable), sort_keys=True, indent=2) + "\n"


def render_text(report: Report, stable: bool = False) -> str:
    lines = [f"q = {report.q} (p = {report.p}), version {report.version}"]
    for c in report.checks:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped": "skip"}[c.status]
        suffix = "" if stable or c.status == "skipped" else f"  ({c.elapsed_ms:.0f} ms)"
        lines.append(f"{mark}  {c.name}{suffix}")
        if c.status == "fail":
            lines.append(f"      {json.dumps(c.details, sort_keys=True)}")
    lines.append(f"overall: {report.overall}")
    return "\n".join(lines) + "\n"


def emit(report: Report, format: str = "text", destination=None,
         stable: bool = False) -> int:
    """Write the report; exit status 0 for pass, 1 for any failing check."""
    assert format in ("json", "text")
    rendered = (render_json if format == "json" else render_text)(report, stable)
    if destination is None:
        print(rendered, end="")
    else:
        with open(destination, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    return 0 if report.overall == "pass" else 1
