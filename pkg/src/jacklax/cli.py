"""Command-line frontend.

    jacklax jack show 1,2
    jacklax psi show 1,2^2 "(2,1)"
    jacklax lr compute --mu 1^2 --nu 2 --hatted --format latex
    jacklax verify main-theorem --max-size 6 --mode symbolic
    jacklax counts --kernel --to 6
    jacklax cache warm --degree 5

Exit code 0 iff every requested check passes (conjecture suites never gate).
"""

import argparse
import json
import os
import sys

from .arith import render_scalar
from .errors import JackLaxError
from .partitions import (count_by_corners, count_lattice_q, count_partitions,
                         format_partition, parse_partition, series_P)
from .report import RunConfig
from .verify import SUITES


def _parse_box(text):
    t = text.strip().strip("()")
    a, b = t.split(",")
    return (int(a), int(b))


def _mono_str(mu, var="V"):
    out = []
    for part in sorted(set(mu), reverse=True):
        m = mu.count(part)
        out.append("%s%d" % (var, part) + ("^%d" % m if m > 1 else ""))
    return "*".join(out) if out else "1"


def _coeff_wrap(c):
    s = render_scalar(c)
    if " " in s or "/" in s:
        return "(%s)" % s
    return s


def format_fock(vec):
    if not vec:
        return "0"
    parts = []
    for mu in sorted(vec, key=lambda m: (len(m), m)):
        c = _coeff_wrap(vec[mu])
        mono = _mono_str(mu)
        parts.append(mono if c == "1" and mu else
                     (c if not mu else c + "*" + mono))
    return " + ".join(parts)


def _workspace(args):
    cfg = _config(args)
    return cfg.workspaces()[0]


def _config(args):
    points = None
    if getattr(args, "spec_points", None):
        points = RunConfig.parse_points(args.spec_points)
    return RunConfig(
        mode=getattr(args, "mode", "symbolic") or "symbolic",
        points=points,
        cache_dir=getattr(args, "cache_dir", None) or os.environ.get("JACKLAX_CACHE_DIR"),
        jobs=getattr(args, "jobs", 1) or 1,
        fmt=getattr(args, "format", "text") or "text",
        include_conjectures=getattr(args, "include_conjectures", False),
    )


def cmd_jack(args):
    ws = _workspace(args)
    lam = parse_partition(args.partition)
    if args.what == "show":
        vec = ws.jack_hat(lam) if args.hatted else ws.jack(lam)
        name = "jhat" if args.hatted else "j"
        print("%s_{%s} = %s" % (name, format_partition(lam), format_fock(vec)))
    elif args.what == "norm":
        print("|j_{%s}|^2 = %s" % (format_partition(lam),
                                   render_scalar(ws.norm_sq(lam))))
    elif args.what == "varpi":
        print("varpi_{%s} = %s" % (format_partition(lam),
                                   render_scalar(ws.varpi(lam))))
    return 0


def cmd_psi(args):
    ws = _workspace(args)
    lam = parse_partition(args.partition)
    s = _parse_box(args.box)
    psi = ws.psi_hat(lam, s) if args.hatted else ws.psi(lam, s)
    name = "psihat" if args.hatted else "psi"
    print("%s_{%s}^{(%d,%d)}:" % (name, format_partition(lam), s[0], s[1]))
    byw = {}
    for (m, mu), c in psi.items():
        byw.setdefault(m, {})[mu] = c
    for m in sorted(byw):
        print("  w^%d * ( %s )" % (m, format_fock(byw[m])))
    return 0


def cmd_lr(args):
    ws = _workspace(args)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    from .lr import jack_lr
    table = jack_lr(ws, mu, nu, hatted=args.hatted)
    items = sorted(table.items())
    cname = "chat" if args.hatted else "c"
    if args.format == "json":
        blob = {
            "mu": format_partition(mu),
            "nu": format_partition(nu),
            "hatted": bool(args.hatted),
            "entries": {format_partition(g): render_scalar(c) for g, c in items},
        }
        print(json.dumps(blob, sort_keys=True, indent=1))
    elif args.format == "latex":
        for g, c in items:
            print(r"%s_{%s,%s}^{%s} &= %s \\" % (cname, format_partition(mu),
                                                 format_partition(nu),
                                                 format_partition(g),
                                                 render_scalar(c)))
    else:
        for g, c in items:
            print("%s_{%s,%s}^{%s} = %s" % (cname, format_partition(mu),
                                            format_partition(nu),
                                            format_partition(g),
                                            render_scalar(c)))
    return 0


def cmd_counts(args):
    if args.kernel:
        from .traces import kernel_dim_series
        ser = kernel_dim_series(args.to)
        terms = []
        for n in range(args.to + 1):
            c = ser.coeff(n)
            if c:
                terms.append(("%s" % c if c != 1 else "") + "x^%d" % n)
        print(" + ".join(terms) if terms else "0")
        return 0
    if args.partitions is not None:
        print(count_partitions(args.partitions))
        return 0
    if args.corners is not None:
        n, r = args.corners
        print(count_by_corners(n, r))
        return 0
    if args.lattice is not None:
        print(count_lattice_q(args.lattice))
        return 0
    if args.dim_h is not None:
        from .fock import dim_hn
        print(dim_hn(args.dim_h))
        return 0
    P = series_P(args.to)
    print(" + ".join("%sx^%d" % ("" if P.coeff(n) == 1 else P.coeff(n), n)
                     for n in range(args.to + 1)))
    return 0


def cmd_cache(args):
    cfg = _config(args)
    if not cfg.cache_dir:
        print("no cache directory configured (use --cache-dir or JACKLAX_CACHE_DIR)",
              file=sys.stderr)
        return 2
    wss = cfg.workspaces()
    if args.action == "warm":
        for ws in wss:
            ws.warm(args.degree)
        print("warmed to degree %d (%d workspace(s))" % (args.degree, len(wss)))
    elif args.action == "stat":
        for name, entries in wss[0].cache_stat().items():
            print("%s: %d entries" % (name, entries))
    elif args.action == "clear":
        print("removed %d cache file(s)" % wss[0].cache_clear())
    return 0


def cmd_verify(args):
    cfg = _config(args)
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    if "conjectures" in suites and args.suite == "all" and not cfg.include_conjectures:
        suites.remove("conjectures")
    reports = []
    gate = True
    for name in suites:
        fn = SUITES[name]
        kwargs = {}
        if name == "main-theorem":
            kwargs["max_size"] = args.max_size or (6 if cfg.mode == "symbolic" else 8)
        elif name in ("spectral",):
            kwargs["max_degree"] = args.max_degree or 7
        elif name in ("traces", "shc", "conjectures"):
            kwargs["max_degree"] = args.max_degree or 6
        elif name in ("cokernel", "kernel"):
            kwargs["to"] = args.to or 7
        elif name == "tau":
            kwargs["max_size"] = args.max_size or 8
        elif name == "pieri":
            kwargs["max_total"] = args.max_size or 7
        rep = fn(cfg, **kwargs)
        reports.append(rep)
        if name != "conjectures" and not rep.all_pass():
            gate = False
    payload = [r.as_dict() for r in reports]
    if cfg.fmt == "json":
        text = json.dumps(payload if len(payload) > 1 else payload[0],
                          sort_keys=True, indent=1)
        print(text)
    else:
        for r in reports:
            print(r.text())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload if len(payload) > 1 else payload[0], fh,
                      sort_keys=True, indent=1)
    return 0 if gate else 1


def cmd_shc(args):
    args.suite = "shc"
    return cmd_verify(args)


def build_parser():
    ap = argparse.ArgumentParser(prog="jacklax",
                                 description="Exact Jack/Lax computations and verification")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec-points",
                        help="semicolon-separated e1,e2 rational pairs")
    common.add_argument("--cache-dir")
    common.add_argument("--jobs", type=int, default=1)

    def add_mode(parser, default):
        parser.add_argument("--mode", choices=["symbolic", "specialized"],
                            default=default)

    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jack", parents=[common], help="Jack function data")
    p.add_argument("what", choices=["show", "norm", "varpi"])
    p.add_argument("partition")
    p.add_argument("--hatted", action="store_true")
    add_mode(p, "symbolic")
    p.set_defaults(fn=cmd_jack)

    p = sub.add_parser("psi", parents=[common], help="Lax eigenfunctions")
    p.add_argument("what", choices=["show"])
    p.add_argument("partition")
    p.add_argument("box", help="addable box, e.g. (2,1)")
    p.add_argument("--hatted", action="store_true")
    add_mode(p, "symbolic")
    p.set_defaults(fn=cmd_psi)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson tables")
    p.add_argument("what", choices=["compute"])
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--hatted", action="store_true")
    p.add_argument("--format", choices=["text", "json", "latex"], default="text")
    add_mode(p, "symbolic")
    p.set_defaults(fn=cmd_lr)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-size", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--to", type=int)
    p.add_argument("--include-conjectures", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="also write the JSON report to this file")
    add_mode(p, "specialized")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("shc", parents=[common], help="shortcut for verify shc")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.add_argument("--max-size", type=int)
    p.add_argument("--to", type=int)
    p.add_argument("--include-conjectures", action="store_true")
    add_mode(p, "specialized")
    p.set_defaults(fn=cmd_shc)

    p = sub.add_parser("counts", parents=[common], help="counting functions")
    p.add_argument("--kernel", action="store_true")
    p.add_argument("--to", type=int, default=8)
    p.add_argument("--partitions", type=int)
    p.add_argument("--corners", type=int, nargs=2, metavar=("N", "R"))
    p.add_argument("--lattice", type=int)
    p.add_argument("--dim-h", type=int)
    add_mode(p, "symbolic")
    p.set_defaults(fn=cmd_counts)

    p = sub.add_parser("cache", parents=[common], help="disk cache operations")
    p.add_argument("action", choices=["warm", "clear", "stat"])
    p.add_argument("--degree", type=int, default=5)
    add_mode(p, "symbolic")
    p.set_defaults(fn=cmd_cache)
    return ap


def run(argv=None):
    """Entry point alias: exit 0 iff all requested checks pass."""
    return main(argv)


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except JackLaxError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
