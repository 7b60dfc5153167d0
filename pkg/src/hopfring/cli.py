"""Batch driver: build, verify, tabulate, export.

Every subcommand emits a single JSON document (or text/CSV rendering) and
exits 0 exactly when every executed check passed.  Identical configuration
and seed give byte-identical JSON; timing fields are opt-in because they
would break that contract.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .algebra import AlgebraSpec, build_algebra
from .cyclo import RAT
from .green import (
    algebra_for_family,
    class_algebra_radical,
    closed_form_fusion,
    fusion_table,
    identity_suite_H1,
    quiver_check_H0,
    verify_presentation,
)
from .hopf import tensor_iso_check, verify_hopf_axioms
from .labels import basis_labels, parse_label
from .structure import (
    blocks_isomorphic_H0,
    center_and_blocks,
    integrals_and_symmetry,
    loewy_length,
    radical_report,
)

SCHEMA_VERSION = 1

VERIFY_TARGETS = (
    "thm3.8", "thm4.9", "thm5.9",
    "prop3.6", "prop3.7", "prop3.9",
    "prop4.1", "prop4.6", "prop4.7", "prop4.8", "prop4.10",
    "cor3.4", "cor3.5", "cor4.4",
    "lemma5.1", "lemma5.3", "cor5.4", "prop5.5", "lemma5.6", "prop5.7", "cor5.8",
    "quiver4", "blocks", "tensor-iso",
)

_TARGET_FAMILY = {
    "thm3.8": "tensor_taft", "prop3.6": "tensor_taft", "prop3.7": "tensor_taft",
    "prop3.9": "tensor_taft", "cor3.4": "tensor_taft", "cor3.5": "tensor_taft",
    "tensor-iso": "tensor_taft",
    "thm4.9": "hpq0", "prop4.1": "hpq0", "prop4.6": "hpq0", "prop4.7": "hpq0",
    "prop4.8": "hpq0", "prop4.10": "hpq0", "cor4.4": "hpq0", "quiver4": "hpq0",
    "thm5.9": "hpq1", "lemma5.1": "hpq1", "lemma5.3": "hpq1", "cor5.4": "hpq1",
    "prop5.5": "hpq1", "lemma5.6": "hpq1", "prop5.7": "hpq1", "cor5.8": "hpq1",
}


class CliError(Exception):
    pass


def _family_key(family, p):
    if family == "tensor-taft":
        return "tensor_taft"
    if family == "taft":
        return "taft"
    if family == "taft-opp":
        return "taft_opp"
    if family == "hpq":
        if p is None:
            raise CliError("family hpq needs --p")
        pr = RAT(p)
        if pr == 0:
            return "hpq0"
        if pr == 1:
            return "hpq1"
        return ("hpq", p)
    raise CliError("unknown family %r" % (family,))


def _build(family_key, n):
    if isinstance(family_key, tuple):
        return build_algebra(AlgebraSpec("hpq", n, RAT(family_key[1])))
    if family_key in ("tensor_taft", "taft", "taft_opp"):
        return build_algebra(AlgebraSpec(family_key, n))
    return algebra_for_family(family_key, n)


def _strip_timing(obj):
    if isinstance(obj, dict):
        return {
            k: _strip_timing(v) for k, v in obj.items() if k != "elapsed_s"
        }
    if isinstance(obj, list):
        return [_strip_timing(v) for v in obj]
    return obj


def _emit(doc, args):
    if not args.timings:
        doc = _strip_timing(doc)
    if args.format == "json":
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    elif args.format == "csv":
        text = doc.get("csv", "") if isinstance(doc, dict) else str(doc)
    else:
        text = _render_text(doc) + "\n"
    out = args.output
    if out:
        base_dir = os.environ.get("HOPFRING_OUT_DIR")
        if base_dir and not os.path.isabs(out):
            out = os.path.join(base_dir, out)
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_text(doc, indent=0):
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)):
                lines.append("%s%s:" % (pad, k))
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append("%s%s: %s" % (pad, k, v))
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(_render_text(v, indent) for v in doc)
    return "%s%s" % (pad, doc)


def _wrap(args, command, reports):
    status = "pass"
    for rep in reports:
        if isinstance(rep, dict) and rep.get("status") == "fail":
            status = "fail"
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": {
            "family": getattr(args, "family", None),
            "n": getattr(args, "n", None),
            "p": getattr(args, "p", None),
            "seed": args.seed,
        },
        "status": status,
        "reports": reports,
    }


def _pmap(fn, items, jobs):
    if jobs <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _expected_blocks(family_key, n):
    if family_key == "tensor_taft":
        return 1
    if family_key == "hpq0":
        return n
    if family_key == "hpq1":
        return n * (n + 1) // 2
    return None


def _fusion_subset_check(family, n, predicate, seed=0):
    """Crosscheck closed form vs matrix oracle on a subset of label pairs."""
    from .repn import decompose, module_catalog, tensor_module
    from .green import _catalog_module, _decomp_to_dict

    H = algebra_for_family(family, n)
    cat = module_catalog(H, seed=seed)
    labels = basis_labels(family, n)
    checked = 0
    for a in labels:
        for b in labels:
            if not predicate(a, b):
                continue
            closed = closed_form_fusion(family, n, a, b)
            m = tensor_module(_catalog_module(cat, a), _catalog_module(cat, b))
            computed = _decomp_to_dict(decompose(m, H))
            if closed != computed:
                return {
                    "family": family,
                    "n": n,
                    "status": "fail",
                    "first_mismatch": [str(a), str(b)],
                }
            checked += 1
    return {"family": family, "n": n, "status": "pass", "pairs_checked": checked}


def _loewy_for(H):
    if H.spec.family == "hpq" and not H.p.is_zero():
        # max Loewy length over the projective covers (H is their direct sum)
        from .repn import module_catalog, radical_filtration

        cat = module_catalog(H)
        pairs = [(lab, cat.simples[lab]) for lab in cat.labels]
        return max(len(radical_filtration(cat.pims[lab], pairs)) for lab in cat.labels)
    return loewy_length(H)


def _run_target(target, n, family_key, seed):
    if target == "thm3.8":
        return verify_presentation("tensor_taft", n, seed=seed)
    if target == "thm4.9":
        return verify_presentation("hpq0", n, seed=seed)
    if target == "thm5.9" or target == "cor5.8":
        rep = verify_presentation("hpq1", n, seed=seed)
        rep["target"] = target
        return rep
    if target == "prop3.6":
        return _fusion_subset_check(
            "tensor_taft", n, lambda a, b: a.kind == "S" or b.kind == "S", seed
        )
    if target == "prop3.7":
        return _fusion_subset_check(
            "tensor_taft", n, lambda a, b: a.kind == "P" and b.kind == "P", seed
        )
    if target == "prop4.7":
        return _fusion_subset_check(
            "hpq0", n, lambda a, b: a.kind == "S" or b.kind == "S", seed
        )
    if target == "prop4.8":
        return _fusion_subset_check(
            "hpq0", n, lambda a, b: a.kind == "P" and b.kind == "P", seed
        )
    if target == "lemma5.1":
        table = fusion_table("hpq1", n, "crosscheck", seed=seed)
        return {
            "family": "hpq1",
            "n": n,
            "status": "pass",
            "entries": len(table.entries),
            "case_coverage": dict(sorted(table.coverage.items())),
        }
    if target == "prop3.9":
        return class_algebra_radical("tensor_taft", n)
    if target == "prop4.10":
        return class_algebra_radical("hpq0", n)
    if target == "prop4.1":
        rep0 = integrals_and_symmetry(_build("hpq0", n))
        repT = integrals_and_symmetry(_build("tensor_taft", n))
        ok = rep0["symmetric_certified"] and not repT["unimodular"]
        return {
            "target": target,
            "n": n,
            "status": "pass" if ok else "fail",
            "deformed_p0": rep0,
            "undeformed": repT,
        }
    if target == "prop4.6":
        return blocks_isomorphic_H0(_build("hpq0", n))
    if target in ("cor3.4", "cor4.4"):
        fam = "tensor_taft" if target == "cor3.4" else "hpq0"
        H = _build(fam, n)
        rep = radical_report(H, check_quotient=(H.dim <= 300))
        ok = (
            rep["loewy_length"] == 2 * n - 1
            and rep.get("equals_ideal_generated_by_a_d", False)
        )
        rep["expected_loewy"] = 2 * n - 1
        rep["status"] = "pass" if ok else "fail"
        return rep
    if target == "cor3.5":
        from .repn import hom_dim, module_catalog

        H = _build("tensor_taft", n)
        cat = module_catalog(H)
        ok = all(cat.pims[lab].dim == n * n for lab in cat.labels)
        tops_ok = all(
            [hom_dim(cat.pims[lab], cat.simples[l2]).dim for l2 in cat.labels]
            == [1 if l2 == lab else 0 for l2 in cat.labels]
            for lab in cat.labels
        )
        return {
            "target": target,
            "n": n,
            "status": "pass" if (ok and tops_ok) else "fail",
            "cover_dim": n * n,
            "tops_simple": tops_ok,
        }
    if target in ("lemma5.3", "cor5.4", "prop5.5", "lemma5.6", "prop5.7"):
        rep = identity_suite_H1(n)
        wanted = {
            "lemma5.3": ("tensor_power_",),
            "cor5.4": (
                "x_order", "x_translates_", "y_times_", "simple_from_powers",
            ),
            "prop5.5": ("generated_by_x_y",),
            "lemma5.6": ("simple_polynomials", "cover_polynomials"),
            "prop5.7": ("vanishing_product",),
        }[target]
        items = {
            k: v for k, v in rep["items"].items()
            if any(k.startswith(w) for w in wanted)
        }
        ok = all(v["holds"] for v in items.values())
        return {
            "target": target,
            "n": n,
            "status": "pass" if ok else "fail",
            "items": items,
        }
    if target == "quiver4":
        return quiver_check_H0(n)
    if target == "blocks":
        H = _build(family_key, n)
        rep = center_and_blocks(H)
        expected = _expected_blocks(family_key, n)
        rep["expected_block_count"] = expected
        rep["status"] = (
            "pass" if expected is None or rep["block_count"] == expected else "fail"
        )
        return rep
    if target == "tensor-iso":
        return tensor_iso_check(n)
    raise CliError("unknown verify target %r" % (target,))


def cmd_verify(args):
    target = args.target
    if target not in VERIFY_TARGETS:
        raise CliError(
            "unknown target %r; valid targets: %s" % (target, ", ".join(VERIFY_TARGETS))
        )
    default_family = _TARGET_FAMILY.get(target)
    family_key = default_family
    if args.family:
        family_key = _family_key(args.family, args.p)
        if default_family and family_key != default_family and target != "blocks":
            raise CliError(
                "target %s is specific to family %s" % (target, default_family)
            )
    if family_key is None:
        raise CliError("target %s needs --family" % (target,))
    report = _run_target(target, args.n, family_key, args.seed)
    report.setdefault("target", target)
    return _wrap(args, "verify", [report])


def cmd_algebra_verify(args):
    family_key = _family_key(args.family, args.p)
    H = _build(family_key, args.n)
    sample = None if H.dim <= 100 else max(500, args.sample or 0)
    reports = []

    def axioms(_):
        rep = verify_hopf_axioms(H, sample=sample, seed=args.seed)
        return dict(rep.to_json(), check="hopf_axioms")

    def radical(_):
        rep = radical_report(H, check_quotient=(H.dim <= 300))
        rep["check"] = "radical"
        rep["status"] = "pass" if rep.get("quotient_semisimple", True) else "fail"
        return rep

    def loewy(_):
        value = _loewy_for(H)
        basic = H.spec.family == "tensor_taft" or (
            H.spec.family == "hpq" and H.p.is_zero()
        )
        ok = value == 2 * args.n - 1 if basic else value >= 1
        return {"check": "loewy_length", "value": value, "status": "pass" if ok else "fail"}

    def integrals(_):
        rep = integrals_and_symmetry(H)
        rep["check"] = "integrals"
        ok = rep["left_integral_dim"] == 1 and rep["right_integral_dim"] == 1
        rep["status"] = "pass" if ok else "fail"
        return rep

    def blocks(_):
        rep = center_and_blocks(H)
        rep["check"] = "blocks"
        expected = _expected_blocks(family_key, args.n)
        rep["expected_block_count"] = expected
        rep["status"] = (
            "pass" if expected is None or rep["block_count"] == expected else "fail"
        )
        return rep

    tasks = [axioms, radical, loewy, integrals, blocks]
    reports = _pmap(lambda fn: fn(None), tasks, args.jobs)
    return _wrap(args, "algebra verify", reports)


def cmd_modules_list(args):
    from .repn import module_catalog

    family_key = _family_key(args.family, args.p)
    H = _build(family_key, args.n)
    cat = module_catalog(H, seed=args.seed)
    simples = [
        {"label": str(lab), "dim": cat.simples[lab].dim} for lab in cat.labels
    ]
    pims = [
        {
            "label": str(cat.proj_label(lab)),
            "covers": str(lab),
            "dim": cat.pims[lab].dim,
        }
        for lab in cat.labels
    ]
    rep = {"simples": simples, "projective_covers": pims, "status": "pass"}
    return _wrap(args, "modules list", [rep])


def cmd_fuse(args):
    family_key = _family_key(args.family, args.p)
    if family_key not in ("tensor_taft", "hpq0", "hpq1"):
        raise CliError("fusion applies to tensor-taft and hpq with p in {0, 1}")
    a = parse_label(args.a, family_key, args.n)
    b = parse_label(args.b, family_key, args.n)
    reports = []
    closed = None
    if args.mode in ("closed", "both"):
        closed = closed_form_fusion(family_key, args.n, a, b)
        reports.append(
            {
                "mode": "closed_form",
                "result": _ring_str(closed),
                "status": "pass",
            }
        )
    if args.mode in ("computed", "both"):
        from .repn import decompose, module_catalog, tensor_module
        from .green import _catalog_module, _decomp_to_dict

        H = _build(family_key, args.n)
        cat = module_catalog(H, seed=args.seed)
        computed = _decomp_to_dict(
            decompose(tensor_module(_catalog_module(cat, a), _catalog_module(cat, b)), H)
        )
        status = "pass"
        if closed is not None and computed != closed:
            status = "fail"
        reports.append(
            {"mode": "computed", "result": _ring_str(computed), "status": status}
        )
    return _wrap(args, "fuse", reports)


def _ring_str(d):
    if not d:
        return "0"
    return " + ".join(
        ("%d*%s" % (m, l)) if m != 1 else str(l) for l, m in sorted(d.items())
    )


def cmd_table(args):
    family_key = _family_key(args.family, args.p)
    if family_key not in ("tensor_taft", "hpq0", "hpq1"):
        raise CliError("fusion tables apply to tensor-taft and hpq with p in {0, 1}")
    table = fusion_table(family_key, args.n, args.mode, seed=args.seed)
    doc = table.to_json()
    doc["status"] = "pass"
    if args.format == "csv":
        return {"schema_version": SCHEMA_VERSION, "status": "pass", "csv": table.to_csv()}
    return _wrap(args, "table", [doc])


def cmd_export(args):
    family_key = _family_key(args.family, args.p)
    if args.what == "structure":
        H = _build(family_key, args.n)
        doc = H.structure_constants_json()
    elif args.what == "modules":
        from .repn import module_catalog

        H = _build(family_key, args.n)
        cat = module_catalog(H, seed=args.seed)
        doc = {
            "simples": {str(l): cat.simples[l].to_json() for l in cat.labels},
            "projective_covers": {
                str(cat.proj_label(l)): cat.pims[l].to_json() for l in cat.labels
            },
        }
    elif args.what == "table":
        table = fusion_table(family_key, args.n, "closed_form", seed=args.seed)
        doc = table.to_json()
    else:
        raise CliError("unknown export kind %r" % (args.what,))
    doc = {"schema_version": SCHEMA_VERSION, "export": args.what, "data": doc, "status": "pass"}
    return doc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfring",
        description="Exact verification suite for Taft-type Hopf algebras and their projective class rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family_required=True):
        p.add_argument("--family", choices=["tensor-taft", "hpq", "taft", "taft-opp"],
                       required=family_required)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--p", default=None, help="parameter for family hpq (rational)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--output", default=None)
        p.add_argument("--format", choices=["json", "csv", "text"], default="json")
        p.add_argument("--timings", action="store_true")

    p_alg = sub.add_parser("algebra", help="algebra-level verification bundle")
    alg_sub = p_alg.add_subparsers(dest="subcommand", required=True)
    p_alg_verify = alg_sub.add_parser("verify")
    common(p_alg_verify)
    p_alg_verify.add_argument("--sample", type=int, default=None)

    p_mod = sub.add_parser("modules", help="module catalogs")
    mod_sub = p_mod.add_subparsers(dest="subcommand", required=True)
    p_mod_list = mod_sub.add_parser("list")
    common(p_mod_list)

    p_fuse = sub.add_parser("fuse", help="one fusion product")
    p_fuse.add_argument("a")
    p_fuse.add_argument("b")
    common(p_fuse)
    p_fuse.add_argument("--mode", choices=["closed", "computed", "both"], default="both")

    p_table = sub.add_parser("table", help="full fusion table")
    common(p_table)
    p_table.add_argument(
        "--mode", choices=["closed_form", "computed", "crosscheck"], default="crosscheck"
    )

    p_verify = sub.add_parser("verify", help="named verification target")
    p_verify.add_argument("target")
    common(p_verify, family_required=False)

    p_export = sub.add_parser("export", help="emit structure constants, modules or tables")
    common(p_export)
    p_export.add_argument(
        "--what", choices=["structure", "modules", "table"], required=True
    )
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.n < 3:
            raise CliError("the order n must be at least 3")
        if args.command == "algebra":
            doc = cmd_algebra_verify(args)
        elif args.command == "modules":
            doc = cmd_modules_list(args)
        elif args.command == "fuse":
            doc = cmd_fuse(args)
        elif args.command == "table":
            doc = cmd_table(args)
        elif args.command == "verify":
            doc = cmd_verify(args)
        elif args.command == "export":
            doc = cmd_export(args)
        else:
            raise CliError("unknown command %r" % (args.command,))
    except CliError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except Exception as exc:  # verification machinery raised: report loudly
        failure = {
            "schema_version": SCHEMA_VERSION,
            "status": "fail",
            "error": "%s: %s" % (type(exc).__name__, exc),
        }
        _emit(failure, args)
        return 1
    _emit(doc, args)
    return 0 if doc.get("status") == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
