"""Batch verification campaigns and generator export.

A campaign sweeps (n, p) cells over a chosen set of checks and emits a
JSON array of ``{"check", "params", "status", "detail"}`` records, sorted
by key so identical configurations produce byte-identical reports.  Exit
status is nonzero iff some cell fails; cells skipped for a stated reason
(p divides n on the sl side, a scale guard, a characteristic-zero cell of
a characteristic-p statement) do not fail the run.

The ``export`` subcommand serializes any catalog generator, either as a
polynomial or lifted to the enveloping algebra.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import enveloping as env
from . import invariants as inv
from . import oracle
from .exactalg import Poly, is_prime, poly_to_obj
from .liealg import (
    NotSemiInvariant,
    adjoint_apply,
    lie_basis,
    weight_of,
    weight_of_pattern,
)

CHECK_NAMES = (
    "invariance",
    "relations",
    "weights",
    "center",
    "semicenter",
    "jacobian",
    "separating",
    "oracle-dims",
    "reduction",
)

DEFAULT_N = (2, 3, 4)
DEFAULT_P = (0, 2, 3)
U_SIDE_CAP = 4


@dataclass(frozen=True)
class CampaignConfig:
    n_values: tuple[int, ...] = DEFAULT_N
    p_values: tuple[int, ...] = DEFAULT_P
    algebra: str = "both"
    checks: tuple[str, ...] = CHECK_NAMES
    degree_cap: int = 4
    scale_guard: int | None = None

    def __post_init__(self):
        for p in self.p_values:
            if p != 0 and not is_prime(p):
                raise ValueError(f"field characteristic {p} is neither 0 nor prime")
        for c in self.checks:
            if c not in CHECK_NAMES:
                raise ValueError(f"unknown check {c!r}; choose from {CHECK_NAMES}")
        if self.algebra not in ("g", "b", "both"):
            raise ValueError("algebra must be g, b or both")


def _cell(check: str, params: dict, ok: bool | None, detail: str = "") -> dict:
    status = "skipped" if ok is None else ("pass" if ok else "fail")
    return {"check": check, "params": params, "status": status, "detail": detail}


def _skip(check: str, params: dict, reason: str) -> dict:
    return _cell(check, params, None, reason)


def _sl_blocked(cfg: CampaignConfig, n: int, p: int) -> bool:
    return p != 0 and n % p == 0


def _wants(cfg: CampaignConfig, tag: str) -> bool:
    return cfg.algebra in (tag, "both")


# -- individual checks ----------------------------------------------------


def _check_invariance(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    cells = []
    basis = lie_basis("g", n)
    if _wants(cfg, "g"):
        for k in range(1, inv.mid_index(n) + 1):
            c = inv.corner_minor(n, k, p)
            m = inv.augmented_minor(n, k, p)
            for idx, lab in enumerate(basis.labels):
                if lab[1] >= lab[2]:
                    continue
                x = basis.elem_of(idx, p)
                ok = adjoint_apply(x, c).is_zero() and adjoint_apply(x, m).is_zero()
                cells.append(
                    _cell(
                        "invariance",
                        {"n": n, "p": p, "k": k, "x": f"e({lab[1]},{lab[2]})",
                         "target": "corner+augmented"},
                        ok,
                    )
                )
            if p == 0:
                continue
            for l in range(p):
                ckl = inv.center_product(n, k, l, p)
                for idx, lab in enumerate(basis.labels):
                    x = basis.elem_of(idx, p)
                    name = f"e({lab[1]},{lab[2]})"
                    ok = adjoint_apply(x, ckl).is_zero()
                    cells.append(
                        _cell(
                            "invariance",
                            {"n": n, "p": p, "k": k, "l": l, "x": name,
                             "target": "center-product"},
                            ok,
                        )
                    )
    if _wants(cfg, "b"):
        params = {"n": n, "p": p, "algebra": "b"}
        if p == 0:
            cells.append(_skip("invariance", params, "sl products need p > 0"))
        elif _sl_blocked(cfg, n, p):
            cells.append(_skip("invariance", params, "p-divides-n"))
        else:
            bb = lie_basis("b", n)
            for k in range(1, inv.mid_index(n) + 1):
                for l in range(p):
                    cb = inv.center_product_sl(n, k, l, p)
                    for idx in range(len(bb)):
                        x = bb.elem_of(idx, p)
                        ok = adjoint_apply(x, cb).is_zero()
                        cells.append(
                            _cell(
                                "invariance",
                                {"n": n, "p": p, "algebra": "b", "k": k, "l": l,
                                 "x": str(bb.labels[idx])},
                                ok,
                            )
                        )
    return cells


def _check_relations(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    if p == 0:
        return [_skip("relations", {"n": n, "p": p},
                      "product relations need p > 0")]
    cells = []
    for k in range(1, inv.mid_index(n) + 1):
        for i in range(p):
            for j in range(p):
                res = inv.product_relation(n, k, i, j, p)
                cells.append(
                    _cell("relations",
                          {"n": n, "p": p, "ring": "S", "k": k, "i": i, "j": j},
                          res.ok)
                )
                params = {"n": n, "p": p, "ring": "U", "k": k, "i": i, "j": j}
                if n > U_SIDE_CAP:
                    cells.append(_skip("relations", params,
                                       "enveloping side capped at n=4"))
                else:
                    res_u = env.product_relation_u(n, k, i, j, p)
                    cells.append(_cell("relations", params, res_u.ok))
    return cells


def _check_weights(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    cells = []
    for k in range(1, inv.mid_index(n) + 1):
        want = weight_of_pattern(n, k, p)
        for name, f in (
            ("corner", inv.corner_minor(n, k, p)),
            ("augmented", inv.augmented_minor(n, k, p)),
        ):
            try:
                ok = weight_of(f, n, "g") == want
                detail = "" if ok else "weight differs from the corner pattern"
            except NotSemiInvariant as e:
                ok, detail = False, str(e)
            cells.append(
                _cell("weights", {"n": n, "p": p, "k": k, "target": name}, ok, detail)
            )
    for k in range(1, inv.mid_index(n) + 1):
        for k2 in range(1, inv.mid_index(n) + 1):
            f = inv.corner_minor(n, k, p)
            g = inv.augmented_minor(n, k2, p)
            ok = weight_of(f * g, n, "g") == weight_of(f, n, "g") + weight_of(g, n, "g")
            cells.append(
                _cell("weights",
                      {"n": n, "p": p, "product": [k, k2]}, ok)
            )
    for d in range(min(cfg.degree_cap, 3) + 1):
        params = {"n": n, "p": p, "weight-decomposition-degree": d}
        try:
            split = sum(
                s.dim for _, s in oracle.semiinvariant_space(
                    n, p, d, guard=cfg.scale_guard)
            )
            dense = oracle.invariant_space(
                n, p, "g", "n", d, split=False, guard=cfg.scale_guard
            ).dim
            cells.append(_cell("weights", params, split == dense,
                               "" if split == dense else f"{split} != {dense}"))
        except oracle.TooLarge as e:
            cells.append(_skip("weights", params, str(e)))
    return cells


def _check_center(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    cells = []
    basis = lie_basis("g", n)
    if _wants(cfg, "g"):
        cells.append(
            _cell("center", {"n": n, "p": p, "target": "trace"},
                  env.is_central(env.trace_u(basis, p)))
        )
        if p > 0:
            for k in range(1, inv.mid_index(n) + 1):
                for l in range(p):
                    u = env.center_product_u(basis, k, l, p)
                    cells.append(
                        _cell("center", {"n": n, "p": p, "k": k, "l": l},
                              env.is_central(u))
                    )
            gens = env.p_center_generators(basis, p)
            ok = all(env.is_central(g) for g in gens)
            cells.append(
                _cell("center", {"n": n, "p": p, "target": "p-center-family",
                                 "count": len(gens)}, ok)
            )
        else:
            for d in range(min(cfg.degree_cap, 3) + 1):
                params = {"n": n, "p": p, "filtration-degree": d}
                if n > 3:
                    cells.append(_skip("center", params,
                                       "char-0 enveloping kernel capped at n=3"))
                    continue
                try:
                    dim = len(oracle.center_space_U(n, 0, d, guard=cfg.scale_guard))
                except oracle.TooLarge as e:
                    cells.append(_skip("center", params, str(e)))
                    continue
                cells.append(_cell("center", params, dim == d + 1,
                                   "" if dim == d + 1 else f"dim {dim}"))
    if _wants(cfg, "b"):
        params = {"n": n, "p": p, "algebra": "b"}
        if p == 0:
            cells.append(_skip("center", params, "sl products need p > 0"))
        elif _sl_blocked(cfg, n, p):
            cells.append(_skip("center", params, "p-divides-n"))
        else:
            bb = lie_basis("b", n)
            for k in range(1, inv.mid_index(n) + 1):
                for l in range(p):
                    u = env.center_product_sl_u(bb, k, l, p)
                    cells.append(
                        _cell("center", {"n": n, "p": p, "algebra": "b",
                                         "k": k, "l": l}, env.is_central(u))
                    )
            gens = env.p_center_generators(bb, p)
            ok = all(env.is_central(g) for g in gens)
            cells.append(
                _cell("center", {"n": n, "p": p, "algebra": "b",
                                 "target": "p-center-family", "count": len(gens)},
                      ok)
            )
    return cells


def _check_semicenter(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    cells = []
    basis = lie_basis("g", n)
    half = inv.half_index(n)
    elems = {"trace": env.trace_u(basis, p)}
    for k in range(1, half + 1):
        elems[f"corner-{k}"] = env.corner_minor_u(basis, k, p)
    for k in range(1, inv.mid_index(n) + 1):
        elems[f"augmented-{k}"] = env.augmented_minor_u(basis, k, p)
    if _wants(cfg, "g"):
        for k in range(1, half + 1):
            want = weight_of_pattern(n, k, p)
            try:
                ok = env.semicentral_weight(elems[f"corner-{k}"]) == want
            except env.NotSemiCentral:
                ok = False
            cells.append(_cell("semicenter",
                               {"n": n, "p": p, "k": k, "target": "corner"}, ok))
        for k in range(1, inv.mid_index(n) + 1):
            want = weight_of_pattern(n, k, p)
            try:
                ok = env.semicentral_weight(elems[f"augmented-{k}"]) == want
            except env.NotSemiCentral:
                ok = False
            cells.append(_cell("semicenter",
                               {"n": n, "p": p, "k": k, "target": "augmented"}, ok))
        names = sorted(elems)
        for a in names:
            for b in names:
                if a < b:
                    ok = elems[a] * elems[b] == elems[b] * elems[a]
                    cells.append(
                        _cell("semicenter",
                              {"n": n, "p": p, "commute": [a, b]}, ok)
                    )
    if _wants(cfg, "b"):
        params = {"n": n, "p": p, "algebra": "b"}
        if _sl_blocked(cfg, n, p):
            cells.append(_skip("semicenter", params, "p-divides-n"))
        else:
            bb = lie_basis("b", n)
            for k in range(1, inv.mid_index(n) + 1):
                mb = env.augmented_minor_sl_u(bb, k, p)
                cb = env.corner_minor_u(bb, k, p)
                ok = cb * mb == mb * cb
                cells.append(
                    _cell("semicenter",
                          {"n": n, "p": p, "algebra": "b", "k": k,
                           "target": "corner-augmented-commute"}, ok)
                )
                try:
                    env.semicentral_weight(mb)
                    ok2 = True
                except env.NotSemiCentral:
                    ok2 = False
                cells.append(
                    _cell("semicenter",
                          {"n": n, "p": p, "algebra": "b", "k": k,
                           "target": "augmented-semicentral"}, ok2)
                )
    return cells


def _check_jacobian(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    if p == 0:
        return [_skip("jacobian", {"n": n, "p": p},
                      "relation presentations need p > 0")]
    cells = []
    for which, builder in (
        ("center", oracle.center_jacobian_spec),
        ("semicenter", oracle.semicenter_jacobian_spec),
    ):
        rep = oracle.jacobian_check(builder(n, p))
        cells.append(
            _cell("jacobian", {"n": n, "p": p, "which": which, "variant": 0},
                  rep.ok, rep.detail)
        )
        for k in range(1, inv.mid_index(n) + 1):
            rep = oracle.jacobian_check(builder(n, p, variant=k))
            cells.append(
                _cell("jacobian", {"n": n, "p": p, "which": which, "variant": k},
                      rep.ok, rep.detail)
            )
    return cells


def _check_separating(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    return [
        _cell("separating", {"n": n, "p": p, "fact": f.name, **f.params},
              f.ok, f.detail)
        for f in oracle.separating_report(n, p)
    ]


def _center_module_shifts(n: int, p: int) -> list[int]:
    """Degrees of the free-module basis of the invariant ring over p-powers."""
    shifts = [0]
    for k in range(1, inv.mid_index(n) + 1):
        shifts = [
            s + w for s in shifts for w in [0] + [k * p + l for l in range(1, p)]
        ]
    return sorted(a + s for a in range(p) for s in shifts)


def _check_oracle_dims(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    cells = []
    cap = cfg.degree_cap
    if p == 0:
        if _wants(cfg, "g"):
            for d in range(cap + 1):
                params = {"n": n, "p": p, "which": "center", "degree": d}
                try:
                    dim = oracle.invariant_space(
                        n, 0, "g", "g", d, guard=cfg.scale_guard).dim
                    cells.append(_cell("oracle-dims", params, dim == 1,
                                       "" if dim == 1 else f"dim {dim}"))
                except oracle.TooLarge as e:
                    cells.append(_skip("oracle-dims", params, str(e)))
            degrees = [1] + list(range(1, inv.half_index(n) + 1)) + [
                k + 1 for k in range(1, inv.mid_index(n) + 1)
            ]
            want = oracle.free_module_graded_dims(degrees, cap)
            for d in range(cap + 1):
                params = {"n": n, "p": p, "which": "semicenter", "degree": d}
                try:
                    got = sum(
                        s.dim for _, s in oracle.semiinvariant_space(
                            n, 0, d, guard=cfg.scale_guard)
                    )
                    cells.append(_cell("oracle-dims", params, got == want[d],
                                       "" if got == want[d]
                                       else f"kernel {got} vs count {want[d]}"))
                except oracle.TooLarge as e:
                    cells.append(_skip("oracle-dims", params, str(e)))
        if _wants(cfg, "b"):
            for d in range(cap + 1):
                params = {"n": n, "p": p, "which": "center", "algebra": "b",
                          "degree": d}
                try:
                    dim = oracle.invariant_space(
                        n, 0, "b", "b", d, guard=cfg.scale_guard).dim
                    want_d = 1 if d == 0 else 0
                    cells.append(_cell("oracle-dims", params, dim == want_d,
                                       "" if dim == want_d else f"dim {dim}"))
                except oracle.TooLarge as e:
                    cells.append(_skip("oracle-dims", params, str(e)))
            degrees_b = list(range(1, inv.half_index(n) + 1)) + [
                k + 1 for k in range(1, inv.mid_index(n) + 1)
            ]
            want_b = oracle.free_module_graded_dims(degrees_b, cap)
            for d in range(cap + 1):
                params = {"n": n, "p": p, "which": "semicenter", "algebra": "b",
                          "degree": d}
                try:
                    got = sum(
                        s.dim for _, s in oracle.semiinvariant_space(
                            n, 0, d, ring="b", guard=cfg.scale_guard)
                    )
                    cells.append(_cell("oracle-dims", params, got == want_b[d],
                                       "" if got == want_b[d]
                                       else f"kernel {got} vs count {want_b[d]}"))
                except oracle.TooLarge as e:
                    cells.append(_skip("oracle-dims", params, str(e)))
        return cells
    # positive characteristic: kernel dims against the counting oracle
    nvars = n * (n + 1) // 2
    want = oracle.free_module_graded_dims(
        [p] * nvars, cap, _center_module_shifts(n, p)
    )
    for d in range(cap + 1):
        params = {"n": n, "p": p, "which": "center", "degree": d}
        try:
            dim = oracle.invariant_space(
                n, p, "g", "g", d, guard=cfg.scale_guard).dim
            cells.append(_cell("oracle-dims", params, dim == want[d],
                               "" if dim == want[d]
                               else f"kernel {dim} vs count {want[d]}"))
        except oracle.TooLarge as e:
            cells.append(_skip("oracle-dims", params, str(e)))
    for k in range(1, inv.mid_index(n) + 1):
        for l in range(p):
            d = k * p + l
            params = {"n": n, "p": p, "which": "generator-in-kernel",
                      "k": k, "l": l}
            if d > cap:
                cells.append(_skip("oracle-dims", params,
                                   f"degree {d} above the cap"))
                continue
            try:
                space = oracle.invariant_space(
                    n, p, "g", "g", d, guard=cfg.scale_guard)
                ok = oracle.space_contains(space, inv.center_product(n, k, l, p))
                cells.append(_cell("oracle-dims", params, ok))
            except oracle.TooLarge as e:
                cells.append(_skip("oracle-dims", params, str(e)))
    return cells


def _check_reduction(cfg: CampaignConfig, n: int, p: int) -> list[dict]:
    if p == 0:
        return [_skip("reduction", {"n": n, "p": p},
                      "reduction targets positive characteristic")]
    cells = []
    pairs: list[tuple[dict, Poly, Poly]] = []
    pairs.append(({"target": "trace"}, inv.trace_poly(n, 0), inv.trace_poly(n, p)))
    for k in range(1, inv.half_index(n) + 1):
        pairs.append(({"target": "corner", "k": k},
                      inv.corner_minor(n, k, 0), inv.corner_minor(n, k, p)))
    for k in range(1, inv.mid_index(n) + 1):
        pairs.append(({"target": "flank", "k": k},
                      inv.flank_diagonal(n, k, 0).as_poly(),
                      inv.flank_diagonal(n, k, p).as_poly()))
        pairs.append(({"target": "mix", "k": k},
                      inv.minor_mix(n, k, 0), inv.minor_mix(n, k, p)))
        pairs.append(({"target": "augmented", "k": k},
                      inv.augmented_minor(n, k, 0), inv.augmented_minor(n, k, p)))
        for l in range(p):
            rational = (inv.corner_minor(n, k, 0) ** (p - l)
                        * inv.augmented_minor(n, k, 0) ** l)
            pairs.append(({"target": "center-product", "k": k, "l": l},
                          rational, inv.center_product(n, k, l, p)))
        for i in range(1, k + 1):
            for j in range(k + 1, n - k + 1):
                pairs.append(({"target": "row-minor", "k": k, "i": i, "j": j},
                              inv.row_replaced_minor(n, k, i, j, 0),
                              inv.row_replaced_minor(n, k, i, j, p)))
            for j in range(k, n - k + 1):
                pairs.append(({"target": "col-minor", "k": k, "i": i, "j": j},
                              inv.col_replaced_minor(n, k, i, j, 0),
                              inv.col_replaced_minor(n, k, i, j, p)))
    if _wants(cfg, "b") and not _sl_blocked(cfg, n, p):
        for k in range(1, inv.mid_index(n) + 1):
            pairs.append(({"target": "augmented-sl", "k": k, "algebra": "b"},
                          inv.augmented_minor_sl(n, k, 0),
                          inv.augmented_minor_sl(n, k, p)))
            for l in range(p):
                rational = (inv.corner_minor(n, k, 0) ** (p - l)
                            * inv.augmented_minor_sl(n, k, 0) ** l)
                pairs.append(({"target": "center-product-sl", "k": k, "l": l,
                               "algebra": "b"},
                              rational, inv.center_product_sl(n, k, l, p)))
    elif _wants(cfg, "b") and _sl_blocked(cfg, n, p):
        cells.append(_skip("reduction", {"n": n, "p": p, "algebra": "b"},
                           "p-divides-n"))
    for extra, rational, modular in pairs:
        params = {"n": n, "p": p, **extra}
        try:
            ok = oracle.reduce_mod_p(rational, p) == modular
            cells.append(_cell("reduction", params, ok))
        except oracle.NotPIntegral as e:
            cells.append(_cell("reduction", params, False, str(e)))
    return cells


_CHECK_FUNCS = {
    "invariance": _check_invariance,
    "relations": _check_relations,
    "weights": _check_weights,
    "center": _check_center,
    "semicenter": _check_semicenter,
    "jacobian": _check_jacobian,
    "separating": _check_separating,
    "oracle-dims": _check_oracle_dims,
    "reduction": _check_reduction,
}


def run_campaign(cfg: CampaignConfig) -> list[dict]:
    """Execute every (check, n, p) cell; deterministic cell order."""
    cells: list[dict] = []
    for check in cfg.checks:
        fn = _CHECK_FUNCS[check]
        for n in sorted(cfg.n_values):
            for p in sorted(cfg.p_values):
                cells.extend(fn(cfg, n, p))
    cells.sort(key=lambda c: (c["check"], json.dumps(c["params"], sort_keys=True)))
    return cells


def report_json(cells: list[dict]) -> str:
    return json.dumps(cells, sort_keys=True, indent=2) + "\n"


def report_text(cells: list[dict]) -> str:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for c in cells:
        counts[c["status"]] += 1
    lines = [
        f"cells: {len(cells)}  pass: {counts['pass']}  "
        f"fail: {counts['fail']}  skipped: {counts['skipped']}"
    ]
    for c in cells:
        if c["status"] == "fail":
            lines.append(f"FAIL {c['check']} {json.dumps(c['params'], sort_keys=True)}"
                         f" {c['detail']}")
    for c in cells:
        if c["status"] == "skipped":
            lines.append(f"skip {c['check']} {json.dumps(c['params'], sort_keys=True)}"
                         f" ({c['detail']})")
    return "\n".join(lines) + "\n"


# -- generator export ------------------------------------------------------


def export_generator(gid: inv.GeneratorId, n: int, char: int, ring: str) -> str:
    """Canonical JSON for one generator, in the polynomial or enveloping ring."""
    if ring == "S":
        obj = poly_to_obj(inv.build_generator(gid, n, char))
    elif ring == "U":
        obj = env.env_to_obj(env.lift_generator(gid, n, char))
    else:
        raise ValueError("ring must be S or U")
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- command line -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelcenter",
        description="Verify center and semi-center identities of Borel "
                    "subalgebras over exact fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    camp = sub.add_parser("campaign", help="run a verification campaign")
    camp.add_argument("--n", type=int, action="append",
                      help="matrix size (repeatable; default 2 3 4)")
    camp.add_argument("--p", type=int, action="append",
                      help="field characteristic, 0 or prime (repeatable; "
                           "default 0 2 3)")
    camp.add_argument("--algebra", choices=("g", "b", "both"), default="both")
    camp.add_argument("--check", action="append", choices=CHECK_NAMES,
                      help="check to run (repeatable; default all)")
    camp.add_argument("--degree-cap", type=int, default=4)
    camp.add_argument("--scale-guard", type=int, default=None)
    camp.add_argument("--out", type=str, default=None,
                      help="write the report here instead of stdout")
    camp.add_argument("--format", choices=("json", "text"), default="json")

    exp = sub.add_parser("export", help="serialize one catalog generator")
    exp.add_argument("--kind", required=True, choices=inv.GENERATOR_KINDS)
    exp.add_argument("--n", type=int, required=True)
    exp.add_argument("--p", type=int, default=0,
                     help="field characteristic (default 0)")
    exp.add_argument("--k", type=int, default=0)
    exp.add_argument("--l", type=int, default=0)
    exp.add_argument("--i", type=int, default=0)
    exp.add_argument("--j", type=int, default=0)
    exp.add_argument("--ring", choices=("S", "U"), default="S")
    exp.add_argument("--out", type=str, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "campaign":
        try:
            cfg = CampaignConfig(
                n_values=tuple(args.n) if args.n else DEFAULT_N,
                p_values=tuple(args.p) if args.p else DEFAULT_P,
                algebra=args.algebra,
                checks=tuple(args.check) if args.check else CHECK_NAMES,
                degree_cap=args.degree_cap,
                scale_guard=args.scale_guard,
            )
        except ValueError as e:
            print(f"error: campaign config: {e}", file=sys.stderr)
            return 2
        cells = run_campaign(cfg)
        text = report_json(cells) if args.format == "json" else report_text(cells)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 1 if any(c["status"] == "fail" for c in cells) else 0
    # export
    try:
        gid = inv.GeneratorId(args.kind, k=args.k, l=args.l, i=args.i, j=args.j)
        text = export_generator(gid, args.n, args.p, args.ring)
    except ValueError as e:
        print(f"error: export: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
