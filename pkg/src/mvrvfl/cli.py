"""Command-line front end: ``mvrvfl <command> [options]``.

Options can also come from a flat ``key = value`` file given with
``--config``; keys are option names with dashes or underscores.
Precedence is command line, then config file, then built-in default.
"""

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .data import (
    DatasetError,
    _parse_block,
    _read_rows,
    load_two_view,
    one_hot,
    read_feature_csv,
    read_label_csv,
    read_views,
)
from .evaluation.search import SELECTION_RULES, GridSpec, grid_search
from .features.bank import FAMILIES, build_feature_bank, write_family_csv, write_skip_report
from .features.dwt import LOWPASS
from .features.pssm import PssmFormatError
from .features.sequence import SequenceError, read_fasta
from .models.bounds import bound_report
from .models.mvrvfl import (
    RULES,
    MvHyper,
    enhanced_views,
    predict_combined,
    predict_rule,
    relative_kkt_residual,
    train_mvrvfl,
)
from .models.random_map import ACTIVATIONS
from .models.serialize import ModelFormatError, load, save
from .mrmr import DEFAULT_BINS, mrmr_rank, select_fraction
from .reports import (
    comparison_summary,
    evaluation_rows,
    write_csv,
    write_json,
    write_metrics,
    write_predictions,
    write_ranking,
    write_roc,
)

log = logging.getLogger("mvrvfl")

def _opt(parser, *flags, default=None, required=False, **kw):
    """Add an option whose default (or requiredness) is applied after config merging."""
    action = parser.add_argument(*flags, default=argparse.SUPPRESS, **kw)
    action.needed = required
    action.deferred_default = default
    if required:
        action.help = ((action.help + "; ") if action.help else "") + "required"
    return action


def _bool(text):
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"not a boolean: {text!r}")


def _float_list(text):
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _int_list(text):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _families(text):
    out = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [f for f in out if f not in FAMILIES]
    if bad or not out:
        raise argparse.ArgumentTypeError(f"unknown feature family {bad}; choose from {','.join(FAMILIES)}")
    return out


def _seed(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _common(parser):
    g = parser.add_argument_group("global options")
    _opt(g, "--seed", type=_seed, default=0, help="base random seed (default 0)")
    _opt(g, "--config", default=None, help="flat key = value option file")
    _opt(g, "--activation", choices=sorted(ACTIVATIONS), default="sigmoid")
    _opt(g, "--wavelet", choices=sorted(LOWPASS), default="haar")
    _opt(g, "--mi-bins", type=int, default=DEFAULT_BINS, help="histogram bins for mutual information")
    _opt(g, "-v", "--verbose", action="store_const", const=True, default=False)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    _common(common)
    p = argparse.ArgumentParser(prog="mvrvfl", description="Two-view RVFL toolkit.", parents=[common])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("extract", parents=[common], help="protein feature extraction")
    _opt(s, "--fasta", required=True)
    _opt(s, "--pssm-dir", default=None)
    _opt(s, "--features", type=_families, default=FAMILIES, help="comma-separated families")
    _opt(s, "--standardize-psepssm", type=_bool, default=False)
    _opt(s, "--out", required=True, help="output directory")

    s = sub.add_parser("select", parents=[common], help="mRMR feature ranking")
    _opt(s, "--features", required=True, help="feature CSV (optional id column)")
    _opt(s, "--labels", required=True)
    _opt(s, "--label-column", default="label")
    _opt(s, "--fraction", type=float, default=1.0)
    _opt(s, "--out", required=True, help="ranking CSV")
    _opt(s, "--selected-out", default=None, help="write the kept columns in rank order")

    s = sub.add_parser("train", parents=[common], help="fit a two-view model")
    _opt(s, "--view-a", required=True)
    _opt(s, "--view-b", required=True)
    _opt(s, "--labels", required=True)
    _opt(s, "--label-column", default="label")
    for name in ("c1", "c2", "theta", "rho"):
        _opt(s, f"--{name}", type=float, default=1.0)
    _opt(s, "--h-l", type=int, default=100)
    _opt(s, "--grid", type=_bool, nargs="?", const=True, default=False, help="run k-fold grid search")
    grid = GridSpec()
    for name in ("c1", "c2", "theta", "rho"):
        _opt(s, f"--{name}-grid", type=_float_list, default=getattr(grid, f"{name}_grid"))
    _opt(s, "--h-l-grid", type=_int_list, default=grid.h_l_grid)
    _opt(s, "--folds", type=int, default=5)
    _opt(s, "--selection", choices=SELECTION_RULES, default="combined")
    _opt(s, "--model-out", required=True)
    _opt(s, "--report-out", default=None, help="default: <model-out>.report.json")

    s = sub.add_parser("predict", parents=[common], help="apply a saved model")
    _opt(s, "--model", required=True)
    _opt(s, "--view-a", required=True)
    _opt(s, "--view-b", required=True)
    _opt(s, "--rule", choices=RULES, default="combined")
    _opt(s, "--out", required=True)

    s = sub.add_parser("evaluate", parents=[common], help="metrics of a saved model on labeled views")
    _opt(s, "--model", required=True)
    _opt(s, "--view-a", required=True)
    _opt(s, "--view-b", required=True)
    _opt(s, "--labels", required=True)
    _opt(s, "--label-column", default="label")
    _opt(s, "--rule", choices=RULES, default="combined")
    _opt(s, "--out", required=True, help="metrics CSV")
    _opt(s, "--roc-out", default=None, help="ROC points CSV")

    s = sub.add_parser("stats", parents=[common], help="compare models across datasets")
    _opt(s, "--table", required=True, help="accuracy CSV: rows datasets, columns models")
    _opt(s, "--q-alpha", type=float, default=None, help="Nemenyi q_alpha (default: alpha=0.05 table)")
    _opt(s, "--tie-tol", type=float, default=1e-12)
    _opt(s, "--out", required=True, help="JSON summary")
    return p


def read_config(path):
    values = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DatasetError(f"{path}:{lineno}: expected key = value")
        key, value = (t.strip() for t in line.split("=", 1))
        values[key.replace("-", "_")] = value
    return values


def _actions(parser, command):
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    return {a.dest: a for a in sub.choices[command]._actions if a.dest != "help"}


def resolve(parser, argv):
    """Parse ``argv`` and fill unset options from the config file, then defaults."""
    args = parser.parse_args(argv)
    ns = vars(args)
    actions = _actions(parser, args.command)
    try:
        config = read_config(ns["config"]) if ns.get("config") else {}
    except (OSError, DatasetError) as exc:
        parser.error(f"cannot read config: {exc}")
    unknown = sorted(set(config) - set(actions) - {"config"})
    if unknown:
        parser.error(f"unknown config keys: {', '.join(unknown)}")
    for dest, action in actions.items():
        if dest in ns or dest == "command":
            continue
        if dest in config:
            text = config[dest]
            conv = _bool if action.const is True else (action.type or str)
            try:
                value = conv(text)
            except (ValueError, argparse.ArgumentTypeError) as exc:
                parser.error(f"config key {dest}: {exc}")
            if action.choices is not None and value not in action.choices:
                parser.error(f"config key {dest}: {value!r} not in {sorted(action.choices)}")
            ns[dest] = value
        elif getattr(action, "needed", False):
            parser.error(f"the following arguments are required: {'/'.join(action.option_strings)}")
        else:
            ns[dest] = getattr(action, "deferred_default", None)
    return args


# --------------------------------------------------------------------------
# commands


def cmd_extract(args):
    sequences = read_fasta(args.fasta)
    if not sequences:
        raise DatasetError(f"{args.fasta}: no sequences")
    bank = build_feature_bank(sequences, args.pssm_dir, args.features, args.wavelet, args.standardize_psepssm)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for f in args.features:
        write_family_csv(bank, f, out / f"{f}.csv")
    write_skip_report(bank, out / "skipped.csv")
    empty = [f for f in args.features if not bank.ids[f]]
    if empty:
        log.error("no protein could be featurized for: %s", ", ".join(empty))
        return 1
    return 0


def cmd_select(args):
    X, names, ids = read_feature_csv(args.features)
    y = read_label_csv(args.labels, args.label_column)
    if y.shape[0] != X.shape[0]:
        raise DatasetError(f"{X.shape[0]} feature rows but {y.shape[0]} labels")
    ranking = mrmr_rank(X, y, args.mi_bins)
    write_ranking(args.out, ranking, names)
    if args.selected_out:
        keep = select_fraction(ranking, args.fraction)
        ids = ids or tuple(str(i) for i in range(X.shape[0]))
        rows = ([pid, *X[i, keep]] for i, pid in enumerate(ids))
        write_csv(args.selected_out, ["id", *(names[j] for j in keep)], rows)
    return 0


def _cv_table(rows):
    return [
        {
            "cell": r.cell,
            **r.hyper.as_dict(),
            "mean_accuracy": None if r.failed else r.mean_accuracy,
            "fold_accuracies": r.fold_accuracies,
            "error": r.error,
        }
        for r in rows
    ]


def cmd_train(args):
    ds = load_two_view(args.view_a, args.view_b, args.labels, label_column=args.label_column)
    cv = []
    if args.grid:
        grid = GridSpec(args.c1_grid, args.c2_grid, args.theta_grid, args.rho_grid, args.h_l_grid)
        hyper, rows = grid_search(ds, grid, args.folds, args.seed, args.selection, args.activation)
        cv = _cv_table(rows)
    else:
        hyper = MvHyper(args.c1, args.c2, args.theta, args.rho, args.h_l)
    model = train_mvrvfl(ds, hyper=hyper, activation=args.activation, seed=args.seed)
    save(model, args.model_out)
    Z1, Z2 = enhanced_views(model, ds.view_a, ds.view_b)
    pred, _ = predict_combined(model, ds.view_a, ds.view_b)
    report = {
        "hyperparameters": hyper.as_dict(),
        "activation": args.activation,
        "seed": args.seed,
        "n_samples": ds.n_samples,
        "condition_estimate": model.condition,
        "kkt_residual": relative_kkt_residual(Z1, Z2, one_hot(ds.labels), model.beta1, model.beta2, hyper),
        "training_accuracy": float(np.mean(pred == ds.labels)),
        "bounds": bound_report(model, ds).as_dict(),
        "cv_table": cv,
    }
    write_json(args.report_out or f"{args.model_out}.report.json", report)
    return 0


def cmd_predict(args):
    model = load(args.model)
    Xa, Xb, ids = read_views(args.view_a, args.view_b)
    labels, scores = predict_rule(model, Xa, Xb, args.rule)
    write_predictions(args.out, ids, labels, scores)
    return 0


def cmd_evaluate(args):
    model = load(args.model)
    Xa, Xb, _ = read_views(args.view_a, args.view_b)
    y = read_label_csv(args.labels, args.label_column)
    if y.shape[0] != Xa.shape[0]:
        raise DatasetError(f"{Xa.shape[0]} rows in the views but {y.shape[0]} labels")
    labels, _ = predict_rule(model, Xa, Xb, args.rule)
    _, combined = predict_combined(model, Xa, Xb)
    margin = combined[:, 1] - combined[:, 0]
    write_metrics(args.out, evaluation_rows(y, labels, margin))
    if args.roc_out:
        write_roc(args.roc_out, margin, y)
    return 0


def read_accuracy_table(path):
    """Accuracy CSV; a leading non-numeric column holds dataset names."""
    header, body = _read_rows(path)
    first = [r[0].strip() for r in body]
    skip = 0
    try:
        [float(c) for c in first]
    except ValueError:
        skip = 1
    cols = list(range(skip, len(header)))
    if not cols or not body:
        raise DatasetError(f"{path}: need at least one model column and one dataset row")
    return _parse_block(path, header, body, cols), [header[j] for j in cols]


def cmd_stats(args):
    A, names = read_accuracy_table(args.table)
    doc = comparison_summary(A, names, args.q_alpha, args.tie_tol)
    write_json(args.out, doc)
    if doc["friedman"]["flag"]:
        log.warning("%s", doc["friedman"]["flag"])
    return 0


COMMANDS = {
    "extract": cmd_extract,
    "select": cmd_select,
    "train": cmd_train,
    "predict": cmd_predict,
    "evaluate": cmd_evaluate,
    "stats": cmd_stats,
}


def main(argv=None):
    parser = build_parser()
    args = resolve(parser, argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except (DatasetError, SequenceError, PssmFormatError, ModelFormatError,
            FileNotFoundError, np.linalg.LinAlgError, ValueError, RuntimeError) as exc:
        print(f"mvrvfl {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
