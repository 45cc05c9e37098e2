"""Structural report of one algebra, as a plain dict and as stable JSON."""

from __future__ import annotations

import json

from .algebra import Algebra, ann_ideal
from .audit import audit_algebra, k_lemma_check, map_spaces
from .checks import FAIL
from .inner import der_c, der_cz
from .lattice import classical_centers, derived_ideal, gamma2, lie_center
from .series import lie_nilpotency_class, lower_lie_series, upper_lie_series
from .subspace import Subspace

SCHEMA = 1


def _basis_text(S: Subspace, F) -> list[list[str]]:
    return [[F.fmt(v) for v in row] for row in S.basis]


def build_report(A: Algebra, seed: int = 0, samples: int = 64, audit: bool = True) -> dict:
    """Everything the library computes about ``A``; deterministic in ``(A, seed, samples)``."""
    F = A.field
    zl = lie_center(A)
    g2 = gamma2(A)
    cc = classical_centers(A)
    lower, upper = lower_lie_series(A), upper_lie_series(A)
    cls = lie_nilpotency_class(A)
    spaces = map_spaces(A)
    dc = der_c(A, samples, seed)
    cz = der_cz(A, samples, seed, dc)
    p = cls.p_generators
    rec = {
        "schema": SCHEMA,
        "algebra": {"dim": A.n, "field": F.name, "basis": list(A.labels)},
        "seed": seed,
        "samples": samples,
        "ann_dim": ann_ideal(A).dim,
        "z_lie_dim": zl.dim,
        "z_lie_basis": _basis_text(zl, F),
        "z_left_dim": cc.Z_left.dim,
        "z_left_is_subalgebra": cc.is_subalgebra,
        "z_right_dim": cc.Z_right.dim,
        "z_dim": cc.Z.dim,
        "gamma2_dim": g2.dim,
        "gamma2_basis": _basis_text(g2, F),
        "derived_dim": derived_ideal(A).dim,
        "lower_series_dims": list(lower.dims),
        "upper_series_dims": list(upper.dims),
        "nilpotent": cls.nilpotent,
        "class": cls.class_c,
        "stem": cls.stem,
        "filiform": cls.filiform,
        "p": p,
        "p_algebra": cls.p_algebra,
        "p_algebra_method": cls.method,
        "p_gamma2_bound": p * g2.dim,
        "der_abs_dim": spaces["der_abs"].dim,
        "der_lie_dim": spaces["der_lie"].dim,
        "der_z_dim": spaces["der_z"].dim,
        "centroid_dim": spaces["centroid"].dim,
        "id_lie_dim": spaces["id_lie"].dim,
        "id_star_dim": spaces["id_star"].dim,
        "der_c_dim": dc.space.dim,
        "der_c_certainty": dc.certainty,
        "der_c_stabilized_at": dc.stabilized_at,
        "der_cz_dim": cz.space.dim,
        "der_cz_certainty": cz.certainty,
    }
    if audit:
        checks = audit_algebra(A, samples, seed, spaces=spaces, dc=dc)
        rec["audit"] = [c.as_dict() for c in checks]
        rec["audit_ok"] = all(c.status != FAIL for c in checks)
    else:
        rec["k_lemma"] = k_lemma_check(A).as_dict()
    return rec


def to_json(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


_ORDER = [
    ("ann_dim", "dim g^ann"), ("z_lie_dim", "dim Z_Lie"), ("z_left_dim", "dim Z^l"),
    ("z_right_dim", "dim Z^r"), ("z_dim", "dim Z"), ("gamma2_dim", "dim gamma_2"),
    ("derived_dim", "dim [g,g]"), ("lower_series_dims", "lower series dims"),
    ("upper_series_dims", "upper series dims"), ("nilpotent", "Lie-nilpotent"), ("class", "class"),
    ("stem", "Lie-stem"), ("filiform", "Lie-filiform"), ("p", "p = dim g/Z_Lie"),
    ("p_algebra", "algebra generators of g/Z_Lie"), ("p_gamma2_bound", "p * dim gamma_2"),
    ("der_abs_dim", "dim Der"), ("der_lie_dim", "dim Der^Lie"), ("der_z_dim", "dim Der_z^Lie"),
    ("centroid_dim", "dim centroid"), ("id_lie_dim", "dim ID^Lie"), ("id_star_dim", "dim ID_*^Lie"),
    ("der_c_dim", "dim Der_c"), ("der_cz_dim", "dim Der_cz"),
]


def to_text(rec: dict) -> str:
    a = rec["algebra"]
    lines = [f"algebra: dim {a['dim']} over {a['field']} ({', '.join(a['basis'])})"]
    width = max(len(label) for _, label in _ORDER)
    for key, label in _ORDER:
        val = rec[key]
        if isinstance(val, list):
            val = ", ".join(map(str, val))
        elif val is None:
            val = "-"
        elif isinstance(val, bool):
            val = "yes" if val else "no"
        if key == "der_c_dim":
            val = f"{val} ({rec['der_c_certainty']}, stable after {rec['der_c_stabilized_at']} samples)"
        if key == "p_algebra":
            val = f"{val} ({rec['p_algebra_method']})"
        lines.append(f"  {label:<{width}}  {val}")
    if "audit" in rec:
        lines.append("audit:")
        for c in rec["audit"]:
            cert = "" if c["certainty"] == "exact" else f" [{c['certainty']}]"
            detail = f": {c['detail']}" if c["detail"] else ""
            lines.append(f"  {c['status'].upper():5} {c['name']}{cert}{detail}")
    return "\n".join(lines) + "\n"
