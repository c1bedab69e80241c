"""Command-line interface: build algebras, run the verification suites,
and emit JSON reports.

Exit codes: 0 all checks pass, 1 a mathematical check failed (the report
carries the witness), 2 input or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import based as BD
from . import rep as R
from . import strat as S
from . import tilting as TL
from .algebra import Algebra, AlgebraError, QuiverPresentation, build_algebra
from .examples import EXAMPLE_NAMES, get_example
from .exactla import field_from_name
from .report import Report


class InputError(ValueError):
    pass


def _load_algebra_arg(path_or_name, field, degree_bound=None):
    """An algebra argument is 'examples:NAME', a presentation file, a
    family file, or a structure-constants file (as dumped by ringel)."""
    if path_or_name.startswith("examples:"):
        return get_example(path_or_name.split(":", 1)[1], field)
    with open(path_or_name) as fh:
        data = json.load(fh)
    if "family" in data:
        if degree_bound is not None:
            data["family"]["degree_bound"] = degree_bound
        alg, spec = _expand_family(data, field)
        return alg, spec
    if "mult" in data:
        return Algebra.from_json(data), None
    if degree_bound is not None:
        data["degree_bound"] = degree_bound
    pres = QuiverPresentation.from_json(data)
    return build_algebra(pres), None


def _expand_family(data, field):
    """Window realization of a parametric quiver family.

    The file carries {"family": ..., "window": [lo, hi]}: either a
    built-in name ({"name": "semiinf"}) or index-shifted arrow/relation
    templates (see algebra.expand_family).  A chain stratification on the
    window is attached, with the order direction taken from the family.
    """
    from .algebra import expand_family

    fam = data["family"]
    window = data.get("window")
    if "name" in fam:
        name = fam["name"]
        params = [str(p) for p in fam.get("params", [])]
        if window is not None and not params:
            params = [str(w) for w in window if w is not None]
            if fam.get("truncation") in (None, "naive", "lower") and len(params) == 2 and params[0] == "0":
                params = params[1:]
        tag = ":".join([name] + params)
        return get_example(tag, field)
    alg = expand_family(data)
    lo, hi = int(window[0]), int(window[1])
    labels = [str(i) for i in range(lo, hi + 1)]
    covers = [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)]
    if fam.get("order", "natural") == "reversed":
        covers = [(b, a) for a, b in covers]
    spec = S.StratSpec(
        S.Poset(labels, covers), {v: v for v in labels}, {v: "+" for v in labels}
    )
    return alg, spec


def _load_spec_arg(path, algebra, default=None):
    if path is None:
        if default is None:
            raise InputError("a stratification file is required")
        return default
    with open(path) as fh:
        return S.StratSpec.from_json(json.load(fh))


def _parse_signs(text, spec):
    """Parse '1=+,2=-' into a sign dict against the spec's poset."""
    if text is None:
        return dict(spec.signs)
    out = dict(spec.signs)
    for part in text.split(","):
        name, _, sign = part.partition("=")
        if sign not in ("+", "-"):
            raise InputError(f"bad sign assignment {part!r}")
        if name not in set(spec.poset.elements):
            raise InputError(f"unknown weight {name!r}")
        out[name] = sign
    return out


def _emit(report, args):
    report.elapsed_s = round(time.time() - args._t0, 3)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report.ok else 1


def cmd_build(args):
    field = field_from_name(args.field)
    algebra, spec = _load_algebra_arg(args.algebra, field, args.degree_bound)
    rep = Report(command="build")
    rep.data["dim"] = algebra.dim
    rep.data["graded_dims"] = {f"{i},{j}": d for (i, j), d in sorted(algebra.graded_dims().items())}
    rep.data["vertices"] = list(algebra.vertices)
    rep.data["basis"] = [b.name for b in algebra.basis]
    rep.add("associative", bool(algebra.verify()))
    return _emit(rep, args)


def cmd_verify(args):
    field = field_from_name(args.field)
    algebra, spec0 = _load_algebra_arg(args.algebra, field, args.degree_bound)
    spec = _load_spec_arg(args.strat, algebra, default=spec0)
    signs = _parse_signs(args.eps, spec)
    rep = S.check_stratified(algebra, spec, signs, with_witnesses=args.witnesses)
    rep.data["simple_strata"] = S.check_simple_strata(algebra, spec).ok
    if rep.ok:
        rep.data["fully_stratified"] = S.check_fully_stratified(algebra, spec).ok
        rep.extend(S.bgg_reciprocity(algebra, spec, signs))
        rep.extend(S.ext_orthogonality(algebra, spec, signs, nmax=args.nmax))
    return _emit(rep, args)


def cmd_tilting(args):
    field = field_from_name(args.field)
    algebra, spec0 = _load_algebra_arg(args.algebra, field, args.degree_bound)
    spec = _load_spec_arg(args.strat, algebra, default=spec0)
    signs = _parse_signs(args.eps, spec)
    rep = Report(command="tilting")
    tset = TL.tilting_set(algebra, spec, signs)
    for b, T in sorted(tset.modules.items()):
        rep.add(
            f"tilting[{b}]",
            True,
            dims={v: d for v, d in T.dims.items() if d},
            standard_sections=tset.std_certs[b].sections,
            costandard_sections=tset.costd_certs[b].sections,
        )
    rigid, detail = TL.tilting_rigidity(algebra, spec)
    rep.data["tilting_rigid"] = rigid
    rep.data["tilting_rigid_by_label"] = detail
    return _emit(rep, args)


def cmd_ringel(args):
    field = field_from_name(args.field)
    algebra, spec0 = _load_algebra_arg(args.algebra, field, args.degree_bound)
    spec = _load_spec_arg(args.strat, algebra, default=spec0)
    signs = _parse_signs(args.eps, spec)
    rd = TL.ringel_dual(algebra, spec, signs)
    rep = TL.verify_ringel(rd)
    if args.dump_dual:
        with open(args.dump_dual, "w") as fh:
            json.dump(rd.dual_algebra.to_json(), fh, indent=2)
        strat_path = args.dump_dual + ".strat.json"
        with open(strat_path, "w") as fh:
            json.dump(rd.dual_spec.to_json(), fh, indent=2)
        rep.data["dual_written_to"] = args.dump_dual
        rep.data["dual_strat_written_to"] = strat_path
    return _emit(rep, args)


def cmd_cellular(args):
    field = field_from_name(args.field)
    algebra, spec0 = _load_algebra_arg(args.algebra, field, args.degree_bound)
    spec = _load_spec_arg(args.strat, algebra, default=spec0)
    signs = _parse_signs(args.eps, spec)
    try:
        structure, rd = BD.extract_cellular(algebra, spec, signs, flavor=args.flavor)
    except BD.NotTiltingRigid as e:
        rep = Report(command="cellular")
        rep.add("tilting_rigid", False, error=str(e))
        return _emit(rep, args)
    rep = BD.verify_based(rd.dual_algebra, structure)
    rep.extend(BD.cell_verify(rd.dual_algebra, structure))
    rep.data["flavor"] = structure.flavor
    if args.dump_structure:
        with open(args.dump_structure, "w") as fh:
            json.dump(structure.to_json(), fh, indent=2)
    return _emit(rep, args)


def cmd_triangular(args):
    field = field_from_name(args.field)
    algebra, spec0 = _load_algebra_arg(args.algebra, field, args.degree_bound)
    with open(args.data) as fh:
        td = BD.TriangularData.from_json(algebra, json.load(fh))
    rep = BD.check_triangular(algebra, td) if td.kind == "triangular" else BD.check_cartan(algebra, td)
    if rep.ok and args.emit_based:
        structure = BD.based_from_cartan(algebra, td)
        sub = BD.verify_based(algebra, structure)
        rep.extend(sub)
        rep.data["flavor"] = structure.flavor
    return _emit(rep, args)


def cmd_tower(args):
    field = field_from_name(args.field)
    windows = [int(w) for w in args.window.split(",")]
    family = args.family

    def family_fn(w):
        return get_example(f"{family}:{w}" if ":" not in family else family.replace("N", str(w)), field)

    labels = tuple(args.labels.split(",")) if args.labels else ("0",)
    rep = TL.truncation_tower(family_fn, windows, tilt_labels=labels)
    return _emit(rep, args)


def cmd_examples(args):
    field = field_from_name(args.field)
    rep = Report(command="examples")
    if args.name is None:
        rep.data["available"] = EXAMPLE_NAMES
        return _emit(rep, args)
    try:
        algebra, spec = get_example(args.name, field)
    except KeyError as e:
        raise InputError(str(e))
    base = args.prefix or args.name.replace(":", "_")
    alg_path = f"{base}.algebra.json"
    spec_path = f"{base}.strat.json"
    pres = algebra.presentation
    if pres is None:
        with open(alg_path, "w") as fh:
            json.dump(algebra.to_json(), fh, indent=2)
    else:
        with open(alg_path, "w") as fh:
            json.dump(pres.to_json(), fh, indent=2)
    with open(spec_path, "w") as fh:
        json.dump(spec.to_json(), fh, indent=2)
    rep.data["algebra_file"] = alg_path
    rep.data["strat_file"] = spec_path
    rep.add("written", True)
    return _emit(rep, args)


def make_parser():
    p = argparse.ArgumentParser(
        prog="qstrat",
        description="Exact verification engine for stratified quiver algebras.",
    )
    p.add_argument("--field", default="Q", help="Q or Fp:<prime>")
    p.add_argument("--degree-bound", type=int, default=None, help="override the presentation degree bound")
    p.add_argument("--seed", type=int, default=0, help="deterministic seed")
    p.add_argument("--out", default=None, help="write the JSON report here")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("build", help="build an algebra and report dimensions")
    sp.add_argument("algebra", help="algebra JSON file or examples:NAME")
    sp.set_defaults(fn=cmd_build)

    sp = sub.add_parser("verify", help="verify the stratified axioms")
    sp.add_argument("algebra")
    sp.add_argument("--strat", default=None, help="stratification JSON file")
    sp.add_argument("--eps", default=None, help="sign overrides, e.g. 1=+,2=-")
    sp.add_argument("--nmax", type=int, default=3)
    sp.add_argument(
        "--witnesses", action="store_true", help="embed full flag certificates in the report"
    )
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("tilting", help="construct the tilting modules")
    sp.add_argument("algebra")
    sp.add_argument("--strat", default=None)
    sp.add_argument("--eps", default=None)
    sp.set_defaults(fn=cmd_tilting)

    sp = sub.add_parser("ringel", help="Ringel dual with full verification")
    sp.add_argument("algebra")
    sp.add_argument("--strat", default=None)
    sp.add_argument("--eps", default=None)
    sp.add_argument("--dump-dual", default=None, help="write the dual algebra JSON here")
    sp.set_defaults(fn=cmd_ringel)

    sp = sub.add_parser("cellular", help="extract a cellular structure on the Ringel dual")
    sp.add_argument("algebra")
    sp.add_argument("--strat", default=None)
    sp.add_argument("--eps", default=None)
    sp.add_argument("--flavor", default="auto", choices=["auto", "eQH", "eS", "BS", "FQH"])
    sp.add_argument("--dump-structure", default=None)
    sp.set_defaults(fn=cmd_cellular)

    sp = sub.add_parser("triangular", help="check Cartan/triangular decomposition data")
    sp.add_argument("algebra")
    sp.add_argument("data", help="triangular data JSON file")
    sp.add_argument("--emit-based", action="store_true")
    sp.set_defaults(fn=cmd_triangular)

    sp = sub.add_parser("tower", help="truncation-tower stabilization report")
    sp.add_argument("family", help="family name, e.g. semiinf or qsl2")
    sp.add_argument("--window", required=True, help="comma list of windows, e.g. 2,3,4")
    sp.add_argument("--labels", default="0", help="labels whose tilting multiplicities to track")
    sp.set_defaults(fn=cmd_tower)

    sp = sub.add_parser("examples", help="write a built-in example to files")
    sp.add_argument("name", nargs="?", default=None)
    sp.add_argument("--prefix", default=None)
    sp.set_defaults(fn=cmd_examples)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    args._t0 = time.time()
    R.set_default_seed(args.seed)
    try:
        return args.fn(args)
    except (InputError, AlgebraError, FileNotFoundError, json.JSONDecodeError, KeyError) as e:
        print(json.dumps({"error": str(e), "ok": False}, indent=2), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
