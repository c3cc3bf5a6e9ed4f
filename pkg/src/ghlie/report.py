"""One-algebra analysis: multiplier-route dimensions, printed-form comparison,
oracle concordance and capability, assembled into a DimReport."""

from __future__ import annotations

from . import hopf
from .closed_forms import closed_form_eval
from .liealg import LieAlgebra, center, derived_subalgebra
from .multiplier import DimReport, psi2_image, square_dim


def intrinsic_context(a: LieAlgebra) -> tuple[int, int, int]:
    """(d, rank, t) read off the algebra: d = dim L/Z, t = dim Z - dim L²."""
    r = derived_subalgebra(a).dim
    z = center(a).dim
    return a.dim - z, r, z - r


def analyze(
    a: LieAlgebra,
    d: int | None = None,
    defect: int | None = None,
    t: int | None = None,
    variant: str | None = None,
    with_oracle: bool = False,
    include_suspect: bool = True,
    check_ker_beta: bool | None = None,
    provenance: str = "",
) -> DimReport:
    """Compute all reported dimensions of a class <= 2 algebra.

    d/defect/t/variant may be pinned by the caller (sweep provenance);
    otherwise they are read off the algebra itself.  Raises ClassTwoRequired
    beyond class 2.
    """
    data = psi2_image(a)
    der = derived_subalgebra(a)
    r = der.dim
    n = a.dim - r
    m_l = n * (n - 1) // 2 - r + (r * n - data.rank)
    dims = {
        "m_L": m_l,
        "wedge": m_l + r,
        "tensor": m_l + r + square_dim(n),
        "j2": m_l + square_dim(n),
        "psi2_rank": data.rank,
    }

    d_int, _, t_int = intrinsic_context(a)
    if d is None:
        d = d_int
    if t is None:
        t = t_int
    if defect is None:
        defect = d * (d - 1) // 2 - r if d >= 2 else 0

    report = DimReport(
        d=d, rank=r, defect=defect, t=t, variant=variant or "generic",
        provenance=provenance, dims=dims,
    )

    # Defect-3 branch detection from the Heisenberg-part Jacobi-cycle rank
    # (an abelian summand contributes exactly rank·t extra dimensions).
    psi2_core = data.rank - r * t
    if defect == 3:
        full = d * (d - 1) * (d - 2) // 6
        if variant is None:
            if psi2_core == full:
                variant = "generic"
            elif psi2_core == full - 1:
                variant = "deficient"
        if variant is None:
            report.unexpected_mismatches.append({
                "key": "psi2_rank",
                "theorem": "Prop 2.2(ii)",
                "computed": psi2_core,
                "printed": f"{full} or {full - 1}",
            })
            variant = "generic"
        report.variant = variant
    else:
        variant = variant or "generic"

    predicted = {}
    if d >= 3 and defect in (1, 2, 3):
        predicted = closed_form_eval(d, t, defect, variant)
    if not include_suspect:
        predicted = {k: p for k, p in predicted.items() if not p.suspect}
    report.predicted = predicted

    if t > 0 and d >= 3 and defect in (1, 2):
        # Prop 2.2(i) still pins the Heisenberg-part rank under a summand.
        full = d * (d - 1) * (d - 2) // 6
        if psi2_core != full:
            report.unexpected_mismatches.append({
                "key": "psi2_rank",
                "theorem": "Prop 2.2(i)",
                "printed": full,
                "computed": psi2_core,
            })

    for key, value in dims.items():
        p = predicted.get(key)
        if p is None:
            report.flags[key] = "no_prediction"
            continue
        if value == p.value:
            report.flags[key] = "match"
        else:
            record = {
                "key": key, "theorem": p.theorem,
                "printed": p.value, "computed": value,
            }
            if p.suspect:
                record["reason"] = p.reason
                report.flags[key] = "expected_mismatch"
                report.expected_mismatches.append(record)
            else:
                report.flags[key] = "mismatch"
                report.unexpected_mismatches.append(record)

    pres = hopf.presentation_from_class2(a)
    ec = hopf.exterior_center(pres)
    report.capable = ec.dim == 0
    if defect in (1, 2) and d >= 3 and not report.capable:
        report.unexpected_mismatches.append({
            "key": "capable",
            "theorem": "Thm 2.4" if t == 0 else "Cor 2.5",
            "printed": True,
            "computed": False,
        })

    if with_oracle:
        oracle_m = hopf.hopf_multiplier_dim(pres)
        oracle_wedge = hopf.exterior_square_oracle(pres)
        report.oracle = {
            "m_L": oracle_m,
            "wedge": oracle_wedge,
            "exterior_center_dim": ec.dim,
        }
        for key, ours, theirs in (
            ("m_L", dims["m_L"], oracle_m),
            ("wedge", dims["wedge"], oracle_wedge),
        ):
            if ours != theirs:
                report.unexpected_mismatches.append({
                    "key": key,
                    "theorem": "Hopf oracle",
                    "printed": theirs,
                    "computed": ours,
                })
        if check_ker_beta is None:
            check_ker_beta = pres.hall.d <= 6
        if check_ker_beta:
            kb = hopf.ker_beta(pres)
            agree = kb == data.image
            report.oracle["ker_beta_matches"] = agree
            if not agree:
                report.unexpected_mismatches.append({
                    "key": "ker_beta",
                    "theorem": "Thm 1.3",
                    "printed": kb.dim,
                    "computed": data.image.dim,
                })
    return report
