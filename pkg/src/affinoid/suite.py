"""Named check batteries over groupoid instances, emitting report records.

Each check has a stable dotted id so reports can be diffed across runs.
A record carries the seed and whether the check is an exact polynomial
identity or a seeded sampling procedure; exact checks ignore the sample
count.  Suite "core" runs the axioms plus the per-fixture verdicts;
suite "paper" adds the structural batteries (2-vector space laws,
bracket functoriality, induced differentials, Poisson clauses, the
cochain isomorphism, and the bundle-map identities).  The mode flag
only gates the redundant oracle cross-checks: sampling-based decision
procedures run in either mode and label their records "sampled".
"""

from __future__ import annotations

from .catalog import CatalogEntry, Fixture
from .fields import (
    DifferentialForm,
    MultiVectorField,
    TensorField,
    form_to_tensor,
    mv_to_tensor,
    pullback,
    schouten_bracket,
)
from .forms import (
    AffineForm,
    affine_form_family,
    cochain_iso_check,
    form_compose,
    form_identity,
    form_inverse,
    im_form_extract,
    im_form_rebuild,
    is_affine_form,
    is_multiplicative_form,
    parallelogram_isotropy,
    phi,
)
from .groupoid import (
    AlgebroidSection,
    PolyGroupoid,
    StructureError,
    algebroid_schouten,
    coisotropy_oracle,
    restrict_project,
    translate_left_mv,
    translate_right_mv,
    translate_section,
    validate_axioms,
)
from .multivector import (
    AffineMV,
    KDifferential,
    affine_mv_oracle,
    decomposition_iso_check,
    is_affine_mv,
    is_multiplicative_mv,
    lie2_functoriality_check,
    multiplicative_mv_oracle,
    mv_compose,
    mv_inverse,
    mv_source_target,
    poisson_checks,
)
from .poly import Poly, polymap_compose
from .sampling import RationalSampler
from .serialize import InputError, check_record
from .tensors import (
    Affine11,
    AffineTensor,
    eqe_check,
    fleft_check,
    group_cases_check,
    hor1_check,
    is_affine_tensor,
    is_multiplicative_tensor,
    monoidal_interchange_check,
    t11_matrix_of,
    t11_translate,
    tensor_chain_image,
    tensor_compose,
    tensor_inverse,
)

DEFAULT_SAMPLES = 25
SUITES = ("core", "paper")
PREDICATES = ("affine-mv", "mult-mv", "affine-form", "mult-form",
              "affine-tensor", "mult-tensor")


# -- witnesses ----------------------------------------------------------------

def _coeff_witness(coeffs: dict, label: str) -> dict | None:
    """First nonzero coefficient of a polynomial-valued coefficient dict."""
    for key, c in sorted(coeffs.items()):
        for e, v in sorted(c.terms.items()):
            return {label: [list(k) if isinstance(k, tuple) else k
                            for k in (key if isinstance(key, tuple) else (key,))],
                    "monomial": list(e), "value": str(v)}
    return None


def _mv_witness(G: PolyGroupoid, Pi: MultiVectorField, want: str,
                seed: int, samples: int) -> dict | None:
    which = "parallelograms" if want == "affine" else "triangles"
    res = coisotropy_oracle(G, Pi, which, seed=seed, samples=samples)
    if not res.passed:
        return res.witness
    if want == "mult" and is_affine_mv(G, Pi):
        return _coeff_witness(restrict_project(G, Pi).coeffs, "section_index")
    return None


def _form_witness(G: PolyGroupoid, Theta: DifferentialForm, want: str,
                  seed: int, samples: int) -> dict | None:
    theta = pullback(G.unit, Theta)
    if want == "mult":
        try:
            if is_affine_form(G, Theta):
                return _coeff_witness(theta.coeffs, "base_index")
        except StructureError:
            pass
    defect = (pullback(G.mult, Theta) - pullback(G.pair_first, Theta)
              - pullback(G.pair_second, Theta))
    if want == "affine":
        defect = defect + pullback(
            polymap_compose(G.src, G.pair_first), theta)
    rng = RationalSampler(seed)
    dimP = G.comp_param.domain_dim
    for i in range(samples):
        pt = rng.point(dimP)
        for idx, c in sorted(defect.coeffs.items()):
            v = c.eval_at(pt)
            if v:
                return {"sample_index": i,
                        "parameter_point": [str(x) for x in pt],
                        "cov_index": list(idx), "value": str(v)}
    return None


def _tensor_witness(G: PolyGroupoid, F: TensorField, want: str,
                    seed: int, samples: int) -> dict | None:
    from .tensors import _affine_identity_at
    if want == "mult" and is_affine_tensor(G, F, seed=seed, samples=samples):
        return _coeff_witness(restrict_project(G, F).coeffs, "section_index")
    rng = RationalSampler(seed)
    dG = G.dim_G
    dimP = G.comp_param.domain_dim
    if F.p == 0 and F.q == 0:
        f = F.coeffs.get(((), ()), Poly.zero(dG))
        corner = polymap_compose(G.unit, polymap_compose(G.src, G.pair_first))
        defect = (f.subs(list(G.mult.components))
                  - f.subs(list(G.pair_first.components))
                  - f.subs(list(G.pair_second.components))
                  + f.subs(list(corner.components)))
        for i in range(samples):
            pt = rng.point(dimP)
            v = defect.eval_at(pt)
            if v:
                return {"sample_index": i,
                        "parameter_point": [str(x) for x in pt],
                        "value": str(v)}
        return None
    for i in range(samples):
        prm = rng.point(dimP)
        pair = [c.eval_at(prm) for c in G.comp_param.components]
        if not _affine_identity_at(G, F, pair[:dG], pair[dG:]):
            return {"sample_index": i,
                    "parameter_point": [str(x) for x in prm]}
    return None


# -- single-predicate checks (CLI) ---------------------------------------------

_FIELD_KINDS = {"mv": MultiVectorField, "form": DifferentialForm,
                "tensor": TensorField}


def predicate_records(G: PolyGroupoid, field, predicate: str, instance: str,
                      seed: int = 0, mode: str = "sampled",
                      samples: int = DEFAULT_SAMPLES) -> list[dict]:
    """Run one predicate on one field; the verdict record fails with a
    witness when the field violates the property, and sampled mode adds
    the oracle cross-check where one exists."""
    if predicate not in PREDICATES:
        raise InputError(f"unknown predicate {predicate!r}; choose one of "
                         + ", ".join(PREDICATES))
    want, kind = predicate.split("-")
    expected = _FIELD_KINDS[kind]
    if not isinstance(field, expected):
        raise InputError(f"{instance}: predicate {predicate} needs a "
                         f"{kind} field, got {type(field).__name__}")
    recs = []
    if kind == "mv":
        passed = (is_affine_mv(G, field) if want == "affine"
                  else is_multiplicative_mv(G, field))
        witness = None if passed else _mv_witness(G, field, want, seed, samples)
        recs.append(check_record(f"predicate.{predicate}", instance, "exact",
                                 seed, passed, witness))
        if mode == "sampled":
            oracle = (affine_mv_oracle if want == "affine"
                      else multiplicative_mv_oracle)
            res = oracle(G, field, seed=seed, samples=samples)
            agree = res.passed == passed
            recs.append(check_record(f"predicate.{predicate}.oracle_agree",
                                     instance, "sampled", seed, agree,
                                     None if agree else res.witness))
    elif kind == "form":
        try:
            passed = (is_affine_form(G, field) if want == "affine"
                      else is_multiplicative_form(G, field))
            witness = None if passed else _form_witness(G, field, want,
                                                        seed, samples)
        except StructureError as exc:
            passed, witness = False, {"inconsistency": str(exc)}
        recs.append(check_record(f"predicate.{predicate}", instance, "exact",
                                 seed, passed, witness))
        if want == "affine":
            agree = parallelogram_isotropy(G, field) == passed
            recs.append(check_record(
                f"predicate.{predicate}.parallelogram_agree", instance,
                "exact", seed, agree))
    else:
        passed = (is_affine_tensor(G, field, seed=seed, samples=samples)
                  if want == "affine"
                  else is_multiplicative_tensor(G, field, seed=seed,
                                                samples=samples))
        witness = None if passed else _tensor_witness(G, field, want,
                                                      seed, samples)
        recs.append(check_record(f"predicate.{predicate}", instance,
                                 "sampled", seed, passed, witness))
    return recs


# -- per-fixture records --------------------------------------------------------

def fixture_records(entry: CatalogEntry, fx: Fixture, seed: int = 0,
                    mode: str = "sampled",
                    samples: int = DEFAULT_SAMPLES) -> list[dict]:
    G = entry.groupoid
    inst = f"{entry.id}:{fx.name}"
    recs = []
    if fx.kind == "mv":
        aff = is_affine_mv(G, fx.field)
        mult = is_multiplicative_mv(G, fx.field)
        recs.append(check_record("mv.affine.expected", inst, "exact", seed,
                                 aff == fx.affine))
        recs.append(check_record("mv.mult.expected", inst, "exact", seed,
                                 mult == fx.multiplicative))
        if mode == "sampled":
            o = affine_mv_oracle(G, fx.field, seed=seed, samples=samples)
            recs.append(check_record("mv.affine.fast_oracle_agree", inst,
                                     "sampled", seed, o.passed == aff,
                                     None if o.passed == aff else o.witness))
            o = multiplicative_mv_oracle(G, fx.field, seed=seed,
                                         samples=samples)
            recs.append(check_record("mv.mult.fast_oracle_agree", inst,
                                     "sampled", seed, o.passed == mult,
                                     None if o.passed == mult else o.witness))
        if fx.affine:
            P = AffineMV(G, fx.field)
            parts = (is_multiplicative_mv(G, P.Pi_r)
                     and is_multiplicative_mv(G, P.Pi_l))
            recs.append(check_record("mv.decompose.parts_multiplicative",
                                     inst, "exact", seed, parts))
            recon = (P.Pi == P.Pi_r + translate_right_mv(G, P.pi)
                     and P.Pi == P.Pi_l + translate_left_mv(G, P.pi))
            recs.append(check_record("mv.decompose.reconstruct", inst,
                                     "exact", seed, recon))
    elif fx.kind == "form":
        aff = is_affine_form(G, fx.field)
        mult = is_multiplicative_form(G, fx.field)
        recs.append(check_record("form.affine.expected", inst, "exact", seed,
                                 aff == fx.affine))
        recs.append(check_record("form.mult.expected", inst, "exact", seed,
                                 mult == fx.multiplicative))
        recs.append(check_record("form.affine.parallelogram_agree", inst,
                                 "exact", seed,
                                 parallelogram_isotropy(G, fx.field) == aff))
        if fx.affine:
            T = AffineForm(G, fx.field)
            parts = (is_multiplicative_form(G, T.Theta_r)
                     and is_multiplicative_form(G, T.Theta_l))
            recs.append(check_record("form.decompose.parts_multiplicative",
                                     inst, "exact", seed, parts))
            recon = (T.Theta == T.Theta_r + pullback(G.tgt, T.theta)
                     and T.Theta == T.Theta_l + pullback(G.src, T.theta))
            recs.append(check_record("form.decompose.reconstruct", inst,
                                     "exact", seed, recon))
    else:
        aff = is_affine_tensor(G, fx.field, seed=seed, samples=samples)
        mult = aff and restrict_project(G, fx.field).is_zero
        recs.append(check_record("tensor.affine.expected", inst, "sampled",
                                 seed, aff == fx.affine))
        recs.append(check_record("tensor.mult.expected", inst, "sampled",
                                 seed, mult == fx.multiplicative))
        if fx.affine:
            T = AffineTensor(G, fx.field, seed=seed, samples=samples)
            parts = all(
                is_affine_tensor(G, part, seed=seed, samples=samples)
                and restrict_project(G, part).is_zero
                for part in (T.F_r, T.F_l))
            recs.append(check_record("tensor.decompose.parts_multiplicative",
                                     inst, "sampled", seed, parts))
            recon = (T.F == T.F_r + translate_section(G, T.f, "right")
                     and T.F == T.F_l + translate_section(G, T.f, "left"))
            recs.append(check_record("tensor.decompose.reconstruct", inst,
                                     "sampled", seed, recon))
    return recs


# -- structural batteries --------------------------------------------------------

def _battery_sections(G: PolyGroupoid) -> tuple[AlgebroidSection,
                                                AlgebroidSection]:
    """A constant frame section and a second section with a curved
    coefficient whenever the base has coordinates."""
    a = AlgebroidSection.frame(G, 0)
    i2 = 1 % G.rank
    if G.dim_M:
        b = AlgebroidSection(G, 1, 0,
                             {((i2,), ()): Poly.variable(G.dim_M, 0)})
    else:
        b = AlgebroidSection.frame(G, i2)
    return a, b


def _mv_battery_pairs(G: PolyGroupoid) -> list[tuple]:
    """(right section, left section) pairs feeding the composition laws,
    in wedge degrees 1 and (when the frame allows) 2."""
    a, b = _battery_sections(G)
    pairs = [(a, b)]
    if G.rank >= 2:
        a2 = a.wedge_section(AlgebroidSection.frame(G, 1))
        b2 = b.wedge_section(AlgebroidSection.frame(G, 0))
        if not b2.is_zero:
            pairs.append((a2, b2))
    return pairs


def _mv_vspace_ok(G: PolyGroupoid) -> bool:
    for a, b in _mv_battery_pairs(G):
        P = AffineMV(G, translate_right_mv(G, a))
        P2 = AffineMV(G, translate_right_mv(G, b))
        Q = AffineMV(G, translate_left_mv(G, a))
        Q2 = AffineMV(G, translate_left_mv(G, b))
        C = mv_compose(P, Q)
        if C.Pi != P.Pi + Q.Pi:
            return False
        if C.Pi_r != Q.Pi_r or C.Pi_l != P.Pi_l:
            return False
        if mv_compose(P, AffineMV(G, P.Pi_r)).Pi != P.Pi:
            return False
        if mv_compose(AffineMV(G, P.Pi_l), P).Pi != P.Pi:
            return False
        V = mv_inverse(P)
        left_unit = mv_compose(P, V)
        if left_unit.Pi != P.Pi_l or not left_unit.pi.is_zero:
            return False
        if mv_compose(V, P).Pi != P.Pi_r:
            return False
        R = AffineMV(G, Q2.Pi - translate_right_mv(G, b) + Q.Pi)
        if mv_compose(mv_compose(P, Q2), R).Pi != \
                mv_compose(P, mv_compose(Q2, R)).Pi:
            return False
        if mv_compose(P + P2, Q + Q2).Pi != \
                (mv_compose(P, Q) + mv_compose(P2, Q2)).Pi:
            return False
        if mv_compose(P.scale(3), Q.scale(3)).Pi != mv_compose(P, Q).Pi.scale(3):
            return False
        if mv_inverse(P + P2).Pi != (mv_inverse(P) + mv_inverse(P2)).Pi:
            return False
        sr, sl = mv_source_target(P + P2)
        if sr != P.Pi_r + P2.Pi_r or sl != P.Pi_l + P2.Pi_l:
            return False
    return True


def _form_battery(G: PolyGroupoid) -> list[tuple]:
    """(target-pullback form, source-pullback form, chain form) triples;
    base one-forms when the base has coordinates, zero-forms on groups."""
    dM = G.dim_M
    if dM:
        th_a = DifferentialForm(dM, 1, {(0,): Poly.one(dM)})
        th_b = DifferentialForm(dM, 1, {(dM - 1,): Poly.variable(dM, 0)})
        th_c = DifferentialForm(dM, 1, {(0,): Poly.const(dM, 2)})
        return [(th_a, th_b, th_c)]
    mk = lambda v: DifferentialForm(0, 0, {(): Poly.const(0, v)})
    return [(mk(5), mk(7), mk(2))]


def _form_vspace_ok(G: PolyGroupoid) -> bool:
    for th_a, th_b, th_c in _form_battery(G):
        T = AffineForm(G, pullback(G.tgt, th_a))
        T2 = AffineForm(G, pullback(G.tgt, th_b))
        U = AffineForm(G, pullback(G.src, th_a))
        U2 = AffineForm(G, pullback(G.src, th_b))
        C = form_compose(T, U)
        if C.Theta != T.Theta + U.Theta:
            return False
        if C.Theta_r != U.Theta_r or C.Theta_l != T.Theta_l:
            return False
        W = AffineForm(G, pullback(G.tgt, th_a) + pullback(G.src, th_b))
        if form_compose(W, AffineForm(G, W.Theta_r)).Theta != W.Theta:
            return False
        if form_compose(AffineForm(G, W.Theta_l), W).Theta != W.Theta:
            return False
        V = form_inverse(W)
        left_unit = form_compose(W, V)
        if left_unit.Theta != W.Theta_l or not left_unit.theta.is_zero:
            return False
        if form_compose(V, W).Theta != W.Theta_r:
            return False
        R = AffineForm(G, U2.Theta - pullback(G.tgt, th_b)
                       + pullback(G.src, th_c))
        if form_compose(form_compose(T, U2), R).Theta != \
                form_compose(T, form_compose(U2, R)).Theta:
            return False
        if form_compose(T + T2, U + U2).Theta != \
                (form_compose(T, U) + form_compose(T2, U2)).Theta:
            return False
        if form_compose(T.scale(3), U.scale(3)).Theta != \
                form_compose(T, U).Theta.scale(3):
            return False
        if form_inverse(T + T2).Theta != \
                (form_inverse(T) + form_inverse(T2)).Theta:
            return False
        Lam, lam = phi(T + T2)
        La, la = phi(T)
        Lb, lb = phi(T2)
        if Lam != La + Lb or lam != la + lb:
            return False
        if form_identity(G, th_a).Theta + form_identity(G, th_b).Theta != \
                form_identity(G, th_a + th_b).Theta:
            return False
    return True


def _tensor_vspace_ok(G: PolyGroupoid, seed: int, samples: int) -> bool:
    a, b = _battery_sections(G)
    right = lambda s: translate_section(G, s, "right")
    left = lambda s: translate_section(G, s, "left")
    mk = lambda F: AffineTensor(G, F, seed=seed, samples=samples)
    P, P2 = mk(right(a)), mk(right(b))
    Q, Q2 = mk(left(a)), mk(left(b))
    C = tensor_compose(P, Q)
    if C.F != P.F + Q.F or C.F_r != Q.F_r or C.F_l != P.F_l:
        return False
    if tensor_compose(P, mk(P.F_r)).F != P.F:
        return False
    if tensor_compose(mk(P.F_l), P).F != P.F:
        return False
    V = tensor_inverse(P)
    left_unit = tensor_compose(P, V)
    if left_unit.F != P.F_l or not left_unit.f.is_zero:
        return False
    if tensor_compose(V, P).F != P.F_r:
        return False
    R = mk(Q2.F - right(b) + left(a))
    if tensor_compose(tensor_compose(P, Q2), R).F != \
            tensor_compose(P, tensor_compose(Q2, R)).F:
        return False
    if tensor_compose(P + P2, Q + Q2).F != \
            (tensor_compose(P, Q) + tensor_compose(P2, Q2)).F:
        return False
    if tensor_compose(P.scale(3), Q.scale(3)).F != \
            tensor_compose(P, Q).F.scale(3):
        return False
    if tensor_inverse(P + P2).F != (tensor_inverse(P) + tensor_inverse(P2)).F:
        return False
    return True


def _functoriality_ok(G: PolyGroupoid) -> bool:
    pairs = _mv_battery_pairs(G)
    quadruples = []
    for a, b in pairs:
        ra = AffineMV(G, translate_right_mv(G, a))
        rb = AffineMV(G, translate_right_mv(G, b))
        la = AffineMV(G, translate_left_mv(G, a))
        lb = AffineMV(G, translate_left_mv(G, b))
        quadruples.append((ra, lb, rb, la))
        quadruples.append((rb, la, ra, lb))
        quadruples.append((ra + rb, la, ra, lb))
    return all(lie2_functoriality_check(*q) for q in quadruples)


def _schouten_closure_ok(G: PolyGroupoid) -> bool:
    a, b = _battery_sections(G)
    A = translate_right_mv(G, a) + translate_left_mv(G, b)
    B = translate_right_mv(G, b) - translate_left_mv(G, a)
    br = schouten_bracket(A, B)
    if not is_affine_mv(G, br):
        return False
    P, Q = AffineMV(G, A), AffineMV(G, B)
    return is_multiplicative_mv(G, schouten_bracket(P.Pi_r, Q.Pi_r))


def _component_identity_ok(G: PolyGroupoid) -> bool:
    a, b = _battery_sections(G)
    P = AffineMV(G, translate_right_mv(G, a) + translate_left_mv(G, b))
    Q = AffineMV(G, translate_left_mv(G, a) - translate_right_mv(G, b))
    checks = [decomposition_iso_check(P, Q), decomposition_iso_check(Q, P),
              decomposition_iso_check(P, P)]
    if G.rank >= 2:
        w = a.wedge_section(AlgebroidSection.frame(G, 1))
        P2 = AffineMV(G, translate_right_mv(G, w))
        checks.append(decomposition_iso_check(P2, Q))
        checks.append(decomposition_iso_check(P2, P2))
    return all(checks)


def _kdiff_kernel_ok(G: PolyGroupoid) -> bool:
    a, b = _battery_sections(G)
    pis = [a, b]
    if G.rank >= 2:
        w = a.wedge_section(AlgebroidSection.frame(G, 1))
        if not w.is_zero:
            pis.append(w)
    for pi in pis:
        dL = KDifferential(G.algebroid, pi.p, translate_left_mv(G, pi))
        if not all(s.is_zero for s in dL.delta0_coordinates):
            return False
        if not all(s.is_zero for s in dL.delta1_frame):
            return False
        dR = KDifferential(G.algebroid, pi.p, translate_right_mv(G, pi))
        for j, s in enumerate(dR.delta0_coordinates):
            f = AlgebroidSection.from_function(
                G, Poly.variable(G.dim_M, j))
            if s != algebroid_schouten(G, pi, f):
                return False
        for i, s in enumerate(dR.delta1_frame):
            if s != algebroid_schouten(G, pi, AlgebroidSection.frame(G, i)):
                return False
    return True


def _poisson_ok(entry: CatalogEntry) -> bool:
    G = entry.groupoid
    rep = poisson_checks(AffineMV(G, entry.fixture("mv.poisson").field))
    ok = rep["clause1_right_ok"] and rep["clause1_left_ok"]
    ok = ok and rep["clause2_ok"] in (True, None)
    ok = ok and rep["inverse_is_poisson"] in (True, None)
    a, _ = _battery_sections(G)
    if G.rank >= 2:
        w = a.wedge_section(AlgebroidSection.frame(G, 1))
        if algebroid_schouten(G, w, w).is_zero:
            rep2 = poisson_checks(AffineMV(G, translate_right_mv(G, w)))
            ok = ok and rep2["is_poisson"] and rep2["clause2_ok"] is True
            ok = ok and rep2["inverse_is_poisson"] is True
    return ok


def _im_equations_ok(entry: CatalogEntry) -> bool:
    G = entry.groupoid
    for fx in entry.fixtures:
        if fx.kind != "form" or not fx.affine or fx.field.degree < 1:
            continue
        T = AffineForm(G, fx.field)
        try:
            im_form_extract(T)
        except StructureError:
            return False
        if im_form_rebuild(T) != fx.field:
            return False
    return True


def _t11_pool(entry: CatalogEntry, seed: int, samples: int) -> list[Affine11]:
    G = entry.groupoid
    pool = []
    for fx in entry.fixtures:
        if (fx.kind == "tensor" and fx.affine
                and isinstance(fx.field, TensorField)
                and fx.field.p == 1 and fx.field.q == 1):
            pool.append(Affine11(G, t11_matrix_of(G, fx.field),
                                 seed=seed, samples=samples))
    return pool


def _hor1_ok(entry: CatalogEntry, seed: int, samples: int) -> bool:
    pool = _t11_pool(entry, seed, samples)[:4]
    return all(hor1_check(N, Np) for N in pool for Np in pool)


def _interchange_ok(entry: CatalogEntry, seed: int, samples: int) -> bool:
    G = entry.groupoid
    if G.dim_M and G.rank:
        dM, rank, dG = G.dim_M, G.rank, G.dim_G
        zero = Poly.zero(dM)
        n_a = [[zero] * dM for _ in range(rank)]
        n_a[0][0] = Poly.one(dM)
        n_b = [[zero] * dM for _ in range(rank)]
        n_b[rank - 1][dM - 1] = Poly.variable(dM, 0)
        eye = [[Poly.one(dG) if i == j else Poly.zero(dG)
                for j in range(dG)] for i in range(dG)]
        plus = lambda A, B: [[x + y for x, y in zip(ra, rb)]
                             for ra, rb in zip(A, B)]
        mk = lambda m: Affine11(G, m, seed=seed, samples=samples)
        N1 = mk(plus(eye, t11_translate(G, n_a, "right")))
        N3 = mk(plus(eye, t11_translate(G, n_a, "left")))
        N2 = mk(plus(eye, t11_translate(G, n_b, "right")))
        N4 = mk(plus(eye, t11_translate(G, n_b, "left")))
        return monoidal_interchange_check(N1, N2, N3, N4)
    pool = [N for N in _t11_pool(entry, seed, samples)
            if N.is_multiplicative()]
    if len(pool) < 2:
        return True
    N, Np = pool[0], pool[1]
    return monoidal_interchange_check(N, Np, N, Np)


def _chain_image_ok(G: PolyGroupoid, seed: int, samples: int) -> bool:
    a, b = _battery_sections(G)
    for sec in (a, b):
        im = tensor_chain_image(G, sec)
        if not im.f.is_zero or im.F_r != im.F:
            return False
    return True


def _degree_cases_ok(entry: CatalogEntry, seed: int, samples: int) -> bool:
    """Pure contravariant and pure covariant tensors agree with the
    dedicated multivector and form predicates on every fixture."""
    G = entry.groupoid
    for fx in entry.fixtures:
        if fx.kind == "mv":
            F = mv_to_tensor(fx.field)
        elif fx.kind == "form":
            F = form_to_tensor(fx.field)
        else:
            continue
        aff = is_affine_tensor(G, F, seed=seed, samples=samples)
        if aff != fx.affine:
            return False
        if (aff and restrict_project(G, F).is_zero) != fx.multiplicative:
            return False
    return True


def _fleft_ok(G: PolyGroupoid) -> bool:
    u, _ = _battery_sections(G)
    dM = G.dim_M
    beta = DifferentialForm(dM, 1, {(0,): Poly.one(dM)})
    curved = DifferentialForm(dM, 1, {(dM - 1,): Poly.variable(dM, 0)})
    return fleft_check(G, u, beta) and fleft_check(G, u, curved)


def _pair11_swap_law(G: PolyGroupoid, mat) -> bool:
    n = G.dim_M
    for r in range(2 * n):
        for c in range(2 * n):
            if (r < n) != (c < n) and not mat[r][c].is_zero:
                return False
    swap = [Poly.variable(2 * n, n + (k % n)) for k in range(2 * n)]
    for i in range(n):
        for j in range(n):
            if mat[n + i][n + j] != mat[i][j].subs(swap):
                return False
    return True


def _pair11_normal_ok(entry: CatalogEntry, seed: int, samples: int) -> bool:
    G = entry.groupoid
    for fx in entry.fixtures:
        if (fx.kind != "tensor" or not isinstance(fx.field, TensorField)
                or fx.field.p != 1 or fx.field.q != 1):
            continue
        mat = t11_matrix_of(G, fx.field)
        if fx.multiplicative != _pair11_swap_law(G, mat):
            return False
        if fx.affine:
            N = Affine11(G, mat, seed=seed, samples=samples)
            if not _pair11_swap_law(G, [list(r) for r in N.N_r]):
                return False
            if not _pair11_swap_law(G, [list(r) for r in N.N_l]):
                return False
    return True


def _compose_2v2f_ok(entry: CatalogEntry, seed: int, samples: int) -> bool:
    G = entry.groupoid
    mvs = [fx.field for fx in entry.fixtures
           if fx.kind == "mv" and fx.affine and fx.field.degree == 2]
    fms = [fx.field for fx in entry.fixtures
           if fx.kind == "form" and fx.affine and fx.field.degree == 2]
    for Th in fms[:2]:
        T = AffineForm(G, Th)
        for Pi in mvs[:2]:
            if not eqe_check(AffineMV(G, Pi), T):
                return False
    return True


def _has_2v2f(entry: CatalogEntry) -> bool:
    has_mv = any(fx.kind == "mv" and fx.affine and fx.field.degree == 2
                 for fx in entry.fixtures)
    has_fm = any(fx.kind == "form" and fx.affine and fx.field.degree == 2
                 for fx in entry.fixtures)
    return has_mv and has_fm


def entry_records(entry: CatalogEntry, seed: int = 0, mode: str = "sampled",
                  samples: int = DEFAULT_SAMPLES) -> list[dict]:
    """The structural battery for one catalog entry."""
    G = entry.groupoid
    eid = entry.id
    recs = [
        check_record("mv.vspace.laws", eid, "exact", seed, _mv_vspace_ok(G)),
        check_record("form.vspace.laws", eid, "exact", seed,
                     _form_vspace_ok(G)),
        check_record("tensor.vspace.laws", eid, "sampled", seed,
                     _tensor_vspace_ok(G, seed, samples)),
        check_record("mv.lie2.functoriality", eid, "exact", seed,
                     _functoriality_ok(G)),
        check_record("mv.schouten.closure", eid, "exact", seed,
                     _schouten_closure_ok(G)),
        check_record("mv.schouten.component", eid, "exact", seed,
                     _component_identity_ok(G)),
        check_record("mv.kdiff.kernel", eid, "exact", seed,
                     _kdiff_kernel_ok(G)),
        check_record("form.cochain.iso", eid, "exact", seed,
                     cochain_iso_check(G)),
        check_record("form.im.equations", eid, "exact", seed,
                     _im_equations_ok(entry)),
        check_record("tensor.hor1.identities", eid, "sampled", seed,
                     _hor1_ok(entry, seed, samples)),
        check_record("tensor.monoidal.interchange", eid, "sampled", seed,
                     _interchange_ok(entry, seed, samples)),
        check_record("tensor.chain.image_multiplicative", eid, "sampled",
                     seed, _chain_image_ok(G, seed, samples)),
        check_record("tensor.degree_special_cases", eid, "sampled", seed,
                     _degree_cases_ok(entry, seed, samples)),
    ]
    if any(fx.name == "mv.poisson" for fx in entry.fixtures):
        recs.append(check_record("mv.poisson.clauses", eid, "exact", seed,
                                 _poisson_ok(entry)))
    if G.dim_M == 0:
        recs.append(check_record("form.group.two_forms_vanish", eid, "exact",
                                 seed, not affine_form_family(G, 2, 2)))
    if G.dim_M >= 1:
        recs.append(check_record("tensor.decomposable.translations", eid,
                                 "exact", seed, _fleft_ok(G)))
    if eid in ("pair1", "pair2"):
        recs.append(check_record("tensor.pair11.normal_forms", eid,
                                 "sampled", seed,
                                 _pair11_normal_ok(entry, seed, samples)))
    if eid in ("heisenberg", "pairgroup1"):
        recs.append(check_record(
            "tensor.cases.battery", eid, "sampled", seed,
            group_cases_check(G, seed=seed, samples=samples)["pass"]))
    if _has_2v2f(entry):
        recs.append(check_record("tensor.compose_2v2f", eid, "sampled", seed,
                                 _compose_2v2f_ok(entry, seed, samples)))
    return recs


def run_suite(entry: CatalogEntry, suite: str = "paper", seed: int = 0,
              mode: str = "sampled",
              samples: int = DEFAULT_SAMPLES) -> list[dict]:
    """All records for one entry: axioms and fixture verdicts, plus the
    structural battery when the full suite is requested."""
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose one of "
                         + ", ".join(SUITES))
    if mode not in ("exact", "sampled"):
        raise InputError(f"unknown mode {mode!r}; choose exact or sampled")
    recs = [check_record("groupoid.axioms", entry.id, "exact", seed,
                         validate_axioms(entry.groupoid).ok)]
    for fx in entry.fixtures:
        recs.extend(fixture_records(entry, fx, seed, mode, samples))
    if suite == "paper":
        recs.extend(entry_records(entry, seed, mode, samples))
    return recs
