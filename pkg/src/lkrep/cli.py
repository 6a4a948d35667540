"""Command-line entry point.

Subcommands:
  rep dump            exact or numeric matrix of a braid word as JSON
  rep check-relations verify the braid relations as exact identities
  spectra gen         generator spectrum (closed form and eigensolver)
  spectra word        spectrum of an arbitrary word at numeric (q, t)
  form solve          invariant Hermitian form at (q, t)
  form scan           definiteness scan over (theta_t, ratio) grid
  dims eval           Weyl dimension of a labeled diagram
  dims enumerate      all labelings below a dimension bound
  density run         conjugacy-class trace experiment from a JSON config
  verify all          run the acceptance suite

Exit codes: 0 success, 1 mathematical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import acceptance, density, forms, lie_dims, spectra
from .braids import parse_braid
from .reps import lk_gen, rep_of_word, rep_of_word_numeric, PairBasis


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"not a complex number: {text!r} (use forms like 1, -0.5, 0.9+0.1j)"
        ) from None


def _parse_labels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"labels must be comma-separated integers: {text!r}")


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lkrep",
        description="Lawrence-Krammer / Burau braid representation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("rep", help="representation matrices")
    rep_sub = rep.add_subparsers(dest="rep_command", required=True)
    dump = rep_sub.add_parser(
        "dump",
        help="matrix of a braid word as JSON",
        epilog='example: lkrep rep dump --kind lk --n 3 --word "1 -2"',
    )
    dump.add_argument("--kind", choices=("lk", "burau", "perm"), required=True)
    dump.add_argument("--n", type=int, required=True, help="strand count")
    dump.add_argument("--word", default="", help="braid word, e.g. '1 -2 1'")
    dump.add_argument("--q", type=_parse_complex, help="numeric q (with --t: numeric mode)")
    dump.add_argument("--t", type=_parse_complex, help="numeric t")
    dump.add_argument("--out", help="write JSON here instead of stdout")

    rel = rep_sub.add_parser(
        "check-relations",
        help="verify Yang-Baxter and commutativity as exact identities",
        epilog="example: lkrep rep check-relations --n 4",
    )
    rel.add_argument("--n", type=int, required=True)
    rel.add_argument("--kind", choices=("lk", "burau", "both"), default="both")

    spec = sub.add_parser("spectra", help="eigenvalue multisets")
    spec_sub = spec.add_subparsers(dest="spectra_command", required=True)
    gen = spec_sub.add_parser(
        "gen",
        help="generator spectrum: closed form vs eigensolver",
        epilog="example: lkrep spectra gen --n 4 --q 0.998+0.0632j --t -- -0.995-0.0998j",
    )
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--q", type=_parse_complex, required=True)
    gen.add_argument("--t", type=_parse_complex, required=True)
    word_p = spec_sub.add_parser(
        "word",
        help="spectrum of a braid word at numeric (q, t)",
        epilog='example: lkrep spectra word --kind lk --n 4 --word "1 2 3" --q 1 --t -1',
    )
    word_p.add_argument("--kind", choices=("lk", "burau"), default="lk")
    word_p.add_argument("--n", type=int, required=True)
    word_p.add_argument("--word", required=True)
    word_p.add_argument("--q", type=_parse_complex, required=True)
    word_p.add_argument("--t", type=_parse_complex, default=complex(1.0))
    word_p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    form = sub.add_parser("form", help="invariant Hermitian form")
    form_sub = form.add_subparsers(dest="form_command", required=True)
    solve = form_sub.add_parser(
        "solve",
        help="solve for the invariant form at (q, t)",
        epilog="example: lkrep form solve --n 3 --q 0.999998+0.002j --t -- -0.995-0.0998j",
    )
    solve.add_argument("--n", type=int, required=True)
    solve.add_argument("--q", type=_parse_complex, required=True)
    solve.add_argument("--t", type=_parse_complex, required=True)
    scan = form_sub.add_parser(
        "scan",
        help="definiteness scan over a (theta_t, ratio) grid, CSV output",
        epilog="example: lkrep form scan --n 3 --theta-t 0.1,0.2 --ratio 0.02,0.05 --out scan.csv",
    )
    scan.add_argument("--n", type=int, required=True)
    scan.add_argument("--theta-t", type=_parse_floats, required=True)
    scan.add_argument("--ratio", type=_parse_floats, required=True)
    scan.add_argument("--out", help="CSV path (default stdout)")

    dims = sub.add_parser("dims", help="Weyl dimensions of labeled diagrams")
    dims_sub = dims.add_subparsers(dest="dims_command", required=True)
    ev = dims_sub.add_parser(
        "eval",
        help="dimension of one labeling",
        epilog="example: lkrep dims eval --diagram E6 --labels 1,0,0,0,0,0",
    )
    ev.add_argument("--diagram", required=True, help="A<r>, D<r>, or E6")
    ev.add_argument("--labels", type=_parse_labels, required=True)
    enum = dims_sub.add_parser(
        "enumerate",
        help="all labelings with dimension below a bound, CSV output",
        epilog="example: lkrep dims enumerate --diagram D5 --bound 21 --asymmetric",
    )
    enum.add_argument("--diagram", required=True)
    enum.add_argument("--bound", type=int, required=True)
    enum.add_argument("--asymmetric", action="store_true", help="asymmetric labelings only")
    enum.add_argument("--out", help="CSV path (default stdout)")

    dens = sub.add_parser("density", help="conjugacy-class trace experiments")
    dens_sub = dens.add_subparsers(dest="density_command", required=True)
    run = dens_sub.add_parser(
        "run",
        help="run an experiment from a JSON config",
        epilog="example: lkrep density run --config experiment.json",
    )
    run.add_argument("--config", required=True, help="JSON config path")

    verify = sub.add_parser("verify", help="acceptance suite")
    verify_sub = verify.add_subparsers(dest="verify_command", required=True)
    vall = verify_sub.add_parser(
        "all",
        help="run every acceptance criterion",
        epilog="example: lkrep verify all --n-max 5",
    )
    vall.add_argument(
        "--n-max",
        type=int,
        default=6,
        help="trim strand-count loops of the structural criteria (smoke mode)",
    )
    return parser


def _cmd_rep_dump(args) -> int:
    word = parse_braid(args.word, args.n)
    if (args.q is None) != (args.t is None) and args.kind != "burau":
        print("error: --q and --t must be given together", file=sys.stderr)
        return 2
    if args.q is not None:
        if args.kind == "burau":
            arr = rep_of_word_numeric("burau", word, args.q, 1.0)
            from .reps import RepMatrix

            mat = RepMatrix(arr, "standard")
        else:
            arr = rep_of_word_numeric(args.kind, word, args.q, args.t if args.t is not None else 1.0)
            from .reps import RepMatrix

            mat = RepMatrix(arr, PairBasis(args.n) if args.kind == "lk" else "standard")
    else:
        mat = rep_of_word(args.kind, word)
    payload = mat.to_json_dict(args.kind, args.n)
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _cmd_check_relations(args) -> int:
    n = args.n
    if n < 3:
        print(f"n={n}: no relations to check")
        return 0
    kinds = ("lk", "burau") if args.kind == "both" else (args.kind,)
    failures = 0
    for kind in kinds:
        for i in range(1, n - 1):
            lhs = rep_of_word(kind, parse_braid(f"{i} {i+1} {i}", n))
            rhs = rep_of_word(kind, parse_braid(f"{i+1} {i} {i+1}", n))
            ok = lhs == rhs
            failures += not ok
            print(f"{kind}: sigma_{i} sigma_{i+1} sigma_{i} = sigma_{i+1} sigma_{i} sigma_{i+1}: "
                  f"{'exact' if ok else 'FAILED'}")
        for i in range(1, n):
            for j in range(i + 2, n):
                lhs = rep_of_word(kind, parse_braid(f"{i} {j}", n))
                rhs = rep_of_word(kind, parse_braid(f"{j} {i}", n))
                ok = lhs == rhs
                failures += not ok
                print(f"{kind}: [sigma_{i}, sigma_{j}] = 1: {'exact' if ok else 'FAILED'}")
    if failures:
        print(f"{failures} relation(s) FAILED", file=sys.stderr)
        return 1
    return 0


def _cmd_spectra_gen(args) -> int:
    closed = spectra.lk_generator_spectrum(args.n, args.q, args.t)
    computed = spectra.eigen_multiset(lk_gen(args.n, 1).evaluate(args.q, args.t).entries)
    print(f"closed form: {closed}")
    print(f"eigensolver: {computed}")
    if not closed.equals(computed):
        print("MISMATCH between closed form and eigensolver", file=sys.stderr)
        return 1
    return 0


def _cmd_spectra_word(args) -> int:
    word = parse_braid(args.word, args.n)
    arr = rep_of_word_numeric(args.kind, word, args.q, args.t)
    ms = spectra.eigen_multiset(arr)
    if args.json:
        print(json.dumps([
            {"re": z.real, "im": z.imag, "multiplicity": m} for z, m in ms.values
        ]))
    else:
        print(ms)
    return 0


def _cmd_form_solve(args) -> int:
    try:
        form = forms.invariant_form(args.n, args.q, args.t)
    except (forms.FormNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    definite, min_eig = forms.is_definite(form)
    print(json.dumps({
        "n": form.n,
        "q": [form.q.real, form.q.imag],
        "t": [form.t.real, form.t.imag],
        "residual": form.residual,
        "nullspace_dim": form.nullspace_dim,
        "definite": definite,
        "min_eig": min_eig,
    }, indent=2))
    return 0


def _cmd_form_scan(args) -> int:
    rows = forms.definiteness_scan(args.n, args.theta_t, args.ratio)
    if args.out:
        forms.write_scan_csv(rows, args.out)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        print(",".join(forms.SCAN_CSV_COLUMNS))
        for row in rows:
            print(",".join(str(row[c]) for c in forms.SCAN_CSV_COLUMNS))
    return 0


def _cmd_dims_eval(args) -> int:
    diagram, rank = lie_dims.parse_diagram(args.diagram)
    labeling = lie_dims.DynkinLabeling(diagram, rank, args.labels)
    dim = lie_dims.weyl_dimension(labeling)
    asym = lie_dims.is_asymmetric(labeling)
    print(f"{args.diagram} {','.join(map(str, args.labels))}: dimension {dim}, "
          f"{'asymmetric' if asym else 'symmetric'}")
    return 0


def _cmd_dims_enumerate(args) -> int:
    diagram, rank = lie_dims.parse_diagram(args.diagram)
    rows = lie_dims.enumerate_irreps_below(diagram, rank, args.bound, args.asymmetric)
    lines = ["diagram,labels,dimension,asymmetric"]
    for labeling, dim in rows:
        lines.append(
            f"{args.diagram},{' '.join(map(str, labeling.labels))},{dim},"
            f"{int(lie_dims.is_asymmetric(labeling))}"
        )
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {len(rows)} labelings to {args.out}")
    else:
        print(text)
    return 0


def _cmd_density_run(args) -> int:
    try:
        cfg = density.ExperimentConfig.from_json_file(args.config)
        report = density.run_experiment(cfg)
    except (ValueError, forms.FormNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(report, indent=2))
    return 0


def _cmd_verify_all(args) -> int:
    ok = acceptance.run_all(n_max=args.n_max)
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "rep":
            if args.rep_command == "dump":
                return _cmd_rep_dump(args)
            return _cmd_check_relations(args)
        if args.command == "spectra":
            if args.spectra_command == "gen":
                return _cmd_spectra_gen(args)
            return _cmd_spectra_word(args)
        if args.command == "form":
            if args.form_command == "solve":
                return _cmd_form_solve(args)
            return _cmd_form_scan(args)
        if args.command == "dims":
            if args.dims_command == "eval":
                return _cmd_dims_eval(args)
            return _cmd_dims_enumerate(args)
        if args.command == "density":
            return _cmd_density_run(args)
        if args.command == "verify":
            return _cmd_verify_all(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
