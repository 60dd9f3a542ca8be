"""Command-line entry point.

qdouble <command> --group <path> [--cocycle <path>] [--subgroup a,b,...]
        [--nu <index>] [--twist <index>] [--section minimal]
        [--format json|text]

Exit codes: 0 = success (including a NOT MODULAR verdict), 1 = the
mathematics said no (failed cocycle check, inadmissible subgroup, failed
verification), 2 = bad input.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .cleft import (
    build_algebra,
    gamma_trivial_subgroup,
    group_like_structure,
    verify_quasi_hopf,
)
from .cochains import Cochain, is_normalized_cocycle
from .currents import (
    independence_check,
    modularity_verdict,
    simple_currents,
    verify_extension_isomorphism,
)
from .double import build_double, c_omega_center, h2_order
from .groups import character_homomorphisms
from .io import (
    InputError,
    load_cleft_file,
    load_cocycle_file,
    load_group_file,
    parse_subgroup,
    to_json_text,
)
from .quotient import build_quotient, enumerate_nu, is_admissible, verify_quotient


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qdouble", description=__doc__)
    p.add_argument("command", choices=[
        "check-cocycle", "double", "group-likes", "admissible", "quotient",
        "verify", "simple-currents", "modularity", "independence",
    ])
    p.add_argument("--group", help="group file (JSON multiplication table)")
    p.add_argument("--cocycle", help="3-cocycle file (sparse JSON); default trivial")
    p.add_argument("--cleft", help="cleft-object bundle file (verify / group-likes)")
    p.add_argument("--subgroup", help="comma-separated element indices of A")
    p.add_argument("--nu", type=int, default=0, help="index into enumerate_nu")
    p.add_argument("--twist", type=int, default=None,
                   help="index of a twist homomorphism f: A -> invariant characters")
    p.add_argument("--section", default="minimal", choices=["minimal"],
                   help="coset section policy")
    p.add_argument("--format", default="text", choices=["text", "json"])
    return p


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(to_json_text(doc))
        return
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, (dict, list)):
            sys.stdout.write(f"{key}: {to_json_text(val).strip()}\n")
        else:
            sys.stdout.write(f"{key}: {val}\n")


def _require(args, name: str):
    val = getattr(args, name)
    if val is None:
        raise InputError(f"--{name} is required for this command")
    return val


def _load_omega(args, G) -> Cochain:
    if args.cocycle is None:
        return Cochain(G, 3, 1, np.zeros((G.order,) * 3, dtype=int))
    omega = load_cocycle_file(args.cocycle, group=G)
    if omega.degree != 3:
        raise InputError("the ambient cocycle must have degree 3")
    return omega


def _context(args):
    G = load_group_file(_require(args, "group"))
    omega = _load_omega(args, G)
    rep = is_normalized_cocycle(omega)
    if not rep:
        raise InputError(f"input cocycle is not a normalized 3-cocycle: {rep.violation}")
    return build_double(G, omega)


def _cmd_check_cocycle(args):
    c = load_cocycle_file(_require(args, "cocycle"))
    rep = is_normalized_cocycle(c)
    doc = {
        "ok": rep.ok,
        "normalized": rep.normalized,
        "closed": rep.closed,
        "violation": list(rep.violation) if rep.violation else None,
        "degree": c.degree,
        "modulus": c.modulus,
    }
    return (0 if rep.ok else 1), doc


def _cmd_double(args):
    ctx = _context(args)
    G = ctx.G
    doc = {
        "dimension": ctx.dim,
        "center": list(G.center_members),
        "gamma_trivial": list(gamma_trivial_subgroup(ctx.c_omega).members),
        "c_omega_center": list(c_omega_center(ctx).members),
        "h2_order": h2_order(G),
        "axioms_ok": ctx.report.ok,
        "modulus": ctx.c_omega.modulus,
    }
    return 0, doc


def _cmd_group_likes(args):
    if args.cleft is not None:
        c = load_cleft_file(args.cleft)
        H = build_algebra(c.omega_cochain(), c)
        data = group_like_structure(c, H)
    else:
        ctx = _context(args)
        data = group_like_structure(ctx.c_omega, ctx.H)
    doc = {
        "modulus": data.cleft.modulus,
        "f_gamma": list(data.f_gamma.members),
        "z_c": list(data.z_c.members),
        "num_characters": len(data.characters),
        "num_invariant_characters": len(data.invariant_characters),
        "num_group_likes": len(data.group_likes),
        "num_central_group_likes": len(data.central_group_likes),
        "sections": {str(x): [int(v) for v in t] for x, t in sorted(data.sections.items())},
    }
    return 0, doc


def _admissibility(args):
    ctx = _context(args)
    A = parse_subgroup(ctx.G, _require(args, "subgroup"))
    data = group_like_structure(ctx.c_omega, ctx.H)
    cert = is_admissible(ctx.c_omega, ctx.omega, A, data)
    return ctx, A, data, cert


def _cert_doc(cert) -> dict:
    return {
        "admissible": True,
        "modulus": cert.modulus,
        "subgroup": list(cert.A.members),
        "t": {str(a): [int(v) for v in vec] for a, vec in sorted(cert.t.items())},
        "tau": {
            str(g): {str(a): int(e) for a, e in sorted(row.items())}
            for g, row in sorted(cert.tau.items())
        },
        "nu": {str(a): list(chi.values) for a, chi in sorted(cert.nu.items())},
    }


def _failure_exit(cert) -> int:
    # precondition-style failures are input errors; the cohomological
    # obstruction is a mathematical no
    return 2 if cert.kind in ("NotCentral", "ActsNontrivially") else 1


def _cmd_admissible(args):
    _, _, _, cert = _admissibility(args)
    if not cert:
        return _failure_exit(cert), {
            "admissible": False, "reason": cert.kind, "witness": cert.witness,
        }
    return 0, _cert_doc(cert)


def _cmd_quotient(args):
    ctx, A, data, cert = _admissibility(args)
    if not cert:
        return _failure_exit(cert), {
            "admissible": False, "reason": cert.kind, "witness": cert.witness,
        }
    nus = enumerate_nu(ctx.c_omega, A, data)
    if not 0 <= args.nu < len(nus):
        raise InputError(f"--nu must be in [0, {len(nus)})")
    f = None
    if args.twist is not None:
        homs = character_homomorphisms(A, data.invariant_characters)
        if not 0 <= args.twist < len(homs):
            raise InputError(f"--twist must be in [0, {len(homs)})")
        f = homs[args.twist]
    qb = build_quotient(ctx.c_omega, ctx.omega, A, cert, f=f, nu=nus[args.nu])
    rep = verify_quotient(qb, ctx.c_omega, qb.cbar)
    doc = {
        "dimension": qb.algebra.dim,
        "quotient_group_order": qb.cbar.F.order,
        "nu_index": args.nu,
        "nu_count": len(nus),
        "axioms_ok": qb.report.ok,
        "morphism_ok": rep.ok,
        "failures": [str(x) for x in rep.failures],
    }
    return (0 if rep.ok else 1), doc


def _cmd_verify(args):
    if args.cleft is not None:
        c = load_cleft_file(args.cleft)
        H = build_algebra(c.omega_cochain(), c)
        report = verify_quasi_hopf(H)
    else:
        ctx = _context(args)
        report = ctx.report
    doc = report.to_dict()
    return (0 if report.ok else 1), doc


def _cmd_simple_currents(args):
    ctx = _context(args)
    sc = simple_currents(ctx)
    checked = verify_extension_isomorphism(sc)
    doc = {
        "count": len(sc.currents),
        "z_c": list(sc.data.z_c.members),
        "num_characters": len(sc.data.characters),
        "extension_pairs_checked": checked,
        "currents": [
            {"z": u.z, "chi": list(u.chi.values)} for u in sc.currents
        ],
    }
    return 0, doc


def _cmd_modularity(args):
    ctx, A, data, cert = _admissibility(args)
    if not cert:
        return _failure_exit(cert), {
            "admissible": False, "reason": cert.kind, "witness": cert.witness,
        }
    sc = simple_currents(ctx, data)
    nus = enumerate_nu(ctx.c_omega, A, data)
    if not 0 <= args.nu < len(nus):
        raise InputError(f"--nu must be in [0, {len(nus)})")
    report = modularity_verdict(ctx, A, nu=nus[args.nu], cert=cert, sc=sc)
    doc = {
        "verdict": report.verdict(),
        "modular": report.modular,
        "pairing_modulus": report.pairing.modulus,
        "pairing": report.pairing.values.tolist(),
        "subgroup": list(A.members),
        "quotient_dimension": report.quotient.algebra.dim,
        "braiding_checked": report.braiding_checked,
        "nu_index": args.nu,
    }
    return 0, doc


def _cmd_independence(args):
    ctx, A, data, cert = _admissibility(args)
    if not cert:
        return _failure_exit(cert), {
            "admissible": False, "reason": cert.kind, "witness": cert.witness,
        }
    sc = simple_currents(ctx, data)
    rep = independence_check(ctx, A, sc)
    doc = {
        "hypothesis_met": rep.hypothesis_met,
        "tables_identical": rep.identical,
        "twist_covariance_ok": rep.twist_covariance_ok,
        "num_nu": len(rep.tables),
        "tables": [t.values.tolist() for t in rep.tables],
        "modulus": rep.tables[0].modulus if rep.tables else None,
    }
    return (0 if rep else 1), doc


_HANDLERS = {
    "check-cocycle": _cmd_check_cocycle,
    "double": _cmd_double,
    "group-likes": _cmd_group_likes,
    "admissible": _cmd_admissible,
    "quotient": _cmd_quotient,
    "verify": _cmd_verify,
    "simple-currents": _cmd_simple_currents,
    "modularity": _cmd_modularity,
    "independence": _cmd_independence,
}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        code, doc = _HANDLERS[args.command](args)
    except InputError as e:
        sys.stderr.write(f"input error: {e}\n")
        return 2
    _emit(doc, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
