"""Command-line front end.

Every subcommand reads JSON (from --input or stdin) and writes JSON or DOT
to stdout.  Exit status: 0 success, 1 domain error (a JSON error object is
printed), 2 usage error.
"""

import argparse
import json
import sys

from . import io
from .cluster import (
    check_linear_independence,
    cluster_monomials,
    explore,
    is_finite_type,
    ntheta_matrix,
    specialize_graph,
)
from .errors import ClusterFoldError
from .folding import fold_cartan, fold_exchange, fold_roots, unfold_cartan, unfold_exchange
from .groups import orbits, trivial_action
from .laurent import LaurentPoly
from .mutation import (
    check_commutation,
    mutate,
    orbit_mutate,
    random_orbit_sequences,
)
from .equivariant import build_q_gamma, check_double_commutes
from .weyl import build_bik, classify_flag_case, positive_roots


class UsageError(Exception):
    pass


def _read(path, stdin):
    if path is None or path == "-":
        text = stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc


def _split(s):
    if s is None:
        return []
    return [x for x in (p.strip() for p in s.split(",")) if x]


def _action(args, labels, stdin):
    if args.action is None:
        return trivial_action(labels)
    return io.action_from_json(_read(args.action, stdin), labels)


def _is_cartan(data, args):
    return getattr(args, "cartan_input", False) or "symmetrizer" in data


def _emit(args, payload, dot=None):
    if args.format == "dot":
        if dot is None:
            raise UsageError("this subcommand has no DOT output")
        return dot
    return io.dumps(payload)


# subcommand handlers: each returns the text to print


def cmd_fold(args, stdin):
    data = _read(args.input, stdin)
    if _is_cartan(data, args):
        C = io.cartan_from_json(data)
        out = fold_cartan(C, _action(args, C.labels, stdin))
        return _emit(args, out.to_json())
    B = io.matrix_from_json(data)
    out = fold_exchange(B, _action(args, B.row_labels, stdin))
    return _emit(args, out.to_json(), io.matrix_to_dot(out))


def cmd_unfold(args, stdin):
    data = _read(args.input, stdin)
    if _is_cartan(data, args):
        C, action = unfold_cartan(io.cartan_from_json(data))
        return _emit(args, {"cartan": C.to_json(), "action": io.action_to_json(action)})
    B, action = unfold_exchange(io.matrix_from_json(data))
    return _emit(args, {"matrix": B.to_json(), "action": io.action_to_json(action)},
                 io.matrix_to_dot(B))


def cmd_mutate(args, stdin):
    B = io.matrix_from_json(_read(args.input, stdin))
    if not args.k:
        raise UsageError("give at least one -k label")
    for k in args.k:
        B = mutate(B, k)
    return _emit(args, B.to_json(), io.matrix_to_dot(B))


def _parse_orbit(text):
    text = text.strip()
    if text.startswith("["):
        return json.loads(text)
    if "," in text and not text.startswith("{"):
        return _split(text)
    return text


def cmd_orbit_mutate(args, stdin):
    B = io.matrix_from_json(_read(args.input, stdin))
    action = _action(args, B.row_labels, stdin)
    if not args.orbit:
        raise UsageError("give --orbit")
    for o in args.orbit:
        B = orbit_mutate(B, action, _parse_orbit(o))
    return _emit(args, B.to_json(), io.matrix_to_dot(B))


def cmd_check_commutation(args, stdin):
    B = io.matrix_from_json(_read(args.input, stdin))
    action = _action(args, B.row_labels, stdin)
    if args.sequence is not None:
        seqs = [json.loads(args.sequence)]
    else:
        seqs = random_orbit_sequences(B, action, args.random, args.max_length, args.seed)
    part = orbits(action)

    def names(seq):
        return [o if isinstance(o, str) else part.label(part.orbit_of(next(iter(o)))) for o in seq]

    results = []
    lost = 0
    for seq in seqs:
        try:
            res = check_commutation(B, action, seq)
        except ClusterFoldError as exc:
            if exc.code != "AdmissibilityLost":
                raise
            lost += 1
            results.append({"sequence": names(seq),
                            "admissibility_lost_at": exc.info.get("step")})
            continue
        entry = {"sequence": names(seq),
                 "holds": res.holds}
        if res.mismatch:
            entry["mismatch"] = list(res.mismatch)
        results.append(entry)
    holds = all(r.get("holds", True) for r in results)
    return _emit(args, {"holds": holds, "checked": len(results) - lost,
                        "admissibility_lost": lost, "results": results})


def cmd_explore(args, stdin):
    B = io.matrix_from_json(_read(args.input, stdin))
    g = explore(B, max_seeds=args.max_seeds, max_var_degree=args.max_degree, jobs=args.jobs)
    return _emit(args, g.to_json(), g.to_dot())


def cmd_finite_type(args, stdin):
    B = io.matrix_from_json(_read(args.input, stdin))
    t = is_finite_type(B)
    if t is None:
        return _emit(args, {"finite": False, "type": None})
    return _emit(args, {"finite": True, "type": t.name, "relabeling": dict(t.relabeling)})


def cmd_bik(args, stdin):
    C = io.cartan_from_json(_read(args.cartan or args.input, stdin))
    word = _split(args.word) if "," in (args.word or "") else list(args.word or "")
    B = build_bik(C, word, _split(args.K))
    return _emit(args, B.to_json(), io.matrix_to_dot(B))


def cmd_classify_flag(args, stdin):
    C = io.cartan_from_json(_read(args.cartan or args.input, stdin))
    action = _action(args, C.labels, stdin)
    res = classify_flag_case(C, action, _split(args.J))
    return _emit(args, res.to_json(), io.matrix_to_dot(res.bik))


def cmd_qgamma(args, stdin):
    Q = io.quiver_from_json(_read(args.input, stdin))
    action = _action(args, Q.vertices, stdin)
    tables = [_read(p, stdin) for p in (args.table or [])]
    QG = build_q_gamma(Q, action, tables)
    payload = QG.to_json()
    if args.check_double:
        payload = {"quiver": payload, "double_commutes": check_double_commutes(Q, action, tables)}
    return _emit(args, payload, io.quiver_to_dot(QG))


def cmd_roots(args, stdin):
    C = io.cartan_from_json(_read(args.cartan or args.input, stdin))
    if args.action:
        basis, roots = fold_roots(C, _action(args, C.labels, stdin))
    else:
        basis, roots = list(C.labels), list(positive_roots(C).positive_roots)
    return _emit(args, {"basis": basis, "roots": [list(r) for r in roots]})


def cmd_ntheta(args, stdin):
    Q = io.quiver_from_json(_read(args.input, stdin))
    B = ntheta_matrix(Q, args.slices)
    return _emit(args, B.to_json(), io.matrix_to_dot(B))


def cmd_specialize(args, stdin):
    data = _read(args.input, stdin)
    if isinstance(data, dict) and "entries" in data or isinstance(data, dict) and "arrows" in data:
        B = io.matrix_from_json(data)
        labels = _split(args.set) or list(B.frozen_rows)
        g = explore(B, max_seeds=args.max_seeds, max_var_degree=args.max_degree, jobs=args.jobs)
        polys = sorted(specialize_graph(g, labels))
        return _emit(args, {"truncated": g.truncated, "variables": [p.to_json() for p in polys]})
    polys = [io.poly_from_json(p) for p in (data if isinstance(data, list) else [data])]
    names = _split(args.set)
    out = []
    for p in polys:
        idx = [p.names.index(n) for n in names if n in p.names]
        out.append(p.drop_variables(idx).to_json())
    return _emit(args, out if isinstance(data, list) else out[0])


def cmd_independence(args, stdin):
    data = _read(args.input, stdin)
    if isinstance(data, list):
        polys = [io.poly_from_json(p) for p in data]
    else:
        B = io.matrix_from_json(data)
        g = explore(B, max_seeds=args.max_seeds, jobs=args.jobs)
        polys = cluster_monomials(g, args.max_degree if args.max_degree is not None else 2)
    if not polys:
        raise UsageError("need at least one polynomial")
    return _emit(args, {"independent": check_linear_independence(polys), "count": len(polys)})


COMMANDS = {
    "fold": cmd_fold,
    "unfold": cmd_unfold,
    "mutate": cmd_mutate,
    "orbit-mutate": cmd_orbit_mutate,
    "check-commutation": cmd_check_commutation,
    "explore": cmd_explore,
    "finite-type": cmd_finite_type,
    "bik": cmd_bik,
    "classify-flag": cmd_classify_flag,
    "qgamma": cmd_qgamma,
    "roots": cmd_roots,
    "ntheta": cmd_ntheta,
    "specialize": cmd_specialize,
    "independence": cmd_independence,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", help="input JSON file (default: stdin)")
    common.add_argument("--action", "-a", help="group action JSON file")
    common.add_argument("--format", choices=["json", "dot"], default="json")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--max-seeds", type=int, default=10000)
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="clusterfold", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    helps = {
        "fold": "fold an exchange or Cartan matrix along an action",
        "unfold": "unfold to symmetric data with a cyclic action",
        "mutate": "matrix mutation at one or more columns",
        "orbit-mutate": "mutate at every member of an orbit",
        "check-commutation": "check that folding commutes with orbit mutation",
        "explore": "explore the exchange graph",
        "finite-type": "decide finite type and name the Dynkin type",
        "bik": "build the reduced-word exchange matrix",
        "classify-flag": "cluster type of a flag-variety case",
        "qgamma": "build the equivariant quiver",
        "roots": "positive roots, folded when an action is given",
        "ntheta": "slice-quiver exchange matrix",
        "specialize": "set variables to 1",
        "independence": "exact linear independence check",
    }
    subs = {name: sub.add_parser(name, parents=[common], help=helps[name]) for name in COMMANDS}
    for name in ("fold", "unfold"):
        subs[name].add_argument("--cartan", dest="cartan_input", action="store_true",
                                help="treat the input as a Cartan matrix")
    subs["mutate"].add_argument("-k", action="append", help="column label (repeatable)")
    subs["orbit-mutate"].add_argument("--orbit", action="append",
                                      help="orbit name or comma-separated labels (repeatable)")
    cc = subs["check-commutation"]
    cc.add_argument("--sequence", help="JSON list of orbits")
    cc.add_argument("--random", type=int, default=200, help="number of random sequences")
    cc.add_argument("--max-length", type=int, default=8)
    for name in ("bik", "classify-flag", "roots"):
        subs[name].add_argument("--cartan", help="Cartan JSON file")
    subs["bik"].add_argument("--word", required=True, help="letters, comma-separated if multi-char")
    subs["bik"].add_argument("--K", default="", help="comma-separated labels")
    subs["classify-flag"].add_argument("--J", required=True, help="comma-separated labels")
    subs["qgamma"].add_argument("--table", action="append", help="extra character table JSON")
    subs["qgamma"].add_argument("--check-double", action="store_true")
    subs["ntheta"].add_argument("--slices", type=int, default=1)
    subs["specialize"].add_argument("--set", help="comma-separated variable names or row labels")
    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("missing subcommand")
        text = COMMANDS[args.command](args, stdin)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        stderr.write(f"usage error: malformed input ({type(exc).__name__}: {exc})\n")
        return 2
    except ClusterFoldError as exc:
        stdout.write(io.dumps({"error": exc.code, "detail": exc.detail}))
        stderr.write(f"{exc.code}: {exc.detail}\n")
        return 1
    stdout.write(text)
    return 0


def main():
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
