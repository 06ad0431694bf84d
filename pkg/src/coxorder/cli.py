"""
cox: command line front end.

    cox --system A3 join 1.2 2.1
    cox --system B2 closure --kind cone --set "#1,#2"
    cox --system A2 parabolic --j 1 hasse
    cox --system A2,B2,G2,A3 check unipodal AB-equal

Exit codes: 0 ok, 1 a proved statement failed, 2 a resource cap was hit,
3 bad input, 4 an open statement got a counterexample.
"""

import argparse
import json
import logging
import os
import re
import sys

from coxorder import harness
from coxorder.closures import closure
from coxorder.coxeter import named, parse_matrix_file
from coxorder.errors import CoxError, ParseError, TruncationLimit, TheoremViolation
from coxorder.galois import R, RPRIME, dagger, star, stable_pairs
from coxorder.parabolic import (ParabolicSet, enumerate_biclosed_in_lambda, hasse_dot,
    pjoin, pmeet, type_map, in_L)
from coxorder.roots import render, sort_roots
from coxorder.scalars import Scalar
from coxorder.weak import join, meet

OK, THEOREM_FAIL, LIMIT, BAD_INPUT, FINDING = 0, 1, 2, 3, 4


# ----------------------------------------------------------------------
# parsing helpers


def load_system(spec):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as f:
            return parse_matrix_file(f.read(), name=os.path.basename(spec))
    return named(spec)


class Session:
    "a system plus the depth cap used for root literals"

    def __init__(self, W, depth):
        self.W = W
        self.depth = None if W.is_finite() else depth
        self._pos = None

    @property
    def positive(self):
        if self._pos is None:
            self._pos = sort_roots(self.W.positive_roots(self.depth))
        return self._pos

    def root(self, tok):
        tok = tok.strip()
        neg = tok.startswith("-")
        if neg:
            tok = tok[1:].strip()
        if tok.startswith("#"):
            try:
                k = int(tok[1:])
            except ValueError:
                raise ParseError("bad root literal %r" % tok)
            if not 1 <= k <= len(self.positive):
                raise ParseError("#%d out of range 1..%d" % (k, len(self.positive)))
            r = self.positive[k - 1]
        elif tok.startswith("[") and tok.endswith("]"):
            if not hasattr(self.W, "make_root"):
                raise ParseError("coordinate literals need a geometric system")
            parts = [p for p in tok[1:-1].split(",")]
            if len(parts) != self.W.rank:
                raise ParseError("expected %d coordinates" % self.W.rank)
            r = self.W.make_root([Scalar.parse(p) for p in parts])
        else:
            raise ParseError("bad root literal %r" % tok)
        return -r if neg else r

    def roots(self, text):
        text = text.strip()
        if text.startswith("{") and text.endswith("}"):
            text = text[1:-1]
        if not text.strip():
            return frozenset()
        toks = re.findall(r"-?\s*#\d+|-?\s*\[[^\]]*\]|[^,\s]+", text)
        return frozenset(self.root(t) for t in toks)

    def name(self, r):
        "#k for a listed positive root, -#k for its negative, coordinates otherwise"
        a = abs(r)
        try:
            k = self.positive.index(a) + 1
        except ValueError:
            return str(r)
        return ("#%d" if r.positive else "-#%d") % k

    def element(self, text):
        return self.W.parse_element(text)


def _emit(args, text, obj):
    if args.format == "json":
        print(json.dumps(obj, ensure_ascii=False))
    else:
        print(text)


def _set_text(S, roots):
    return "{%s}" % ", ".join(S.name(r) for r in sort_roots(roots))


# ----------------------------------------------------------------------
# commands


def cmd_define(args, S):
    W = S.W
    info = {"name": W.name, "rank": W.rank, "finite": W.is_finite(),
        "matrix": [["inf" if v == float("inf") else v for v in row] for row in W.matrix]}
    if hasattr(W, "is_crystallographic"):
        info["crystallographic"] = W.is_crystallographic()
    if W.is_finite():
        info["order"] = len(W.elements())
        info["positive_roots"] = len(W.positive_roots())
    else:
        info["depth"] = S.depth
        info["positive_roots_to_depth"] = len(S.positive)
    lines = ["%s: %s" % (k, v) for (k, v) in info.items()]
    _emit(args, "\n".join(lines), info)
    return OK


def cmd_roots(args, S):
    rows = [("#%d" % (i + 1), str(r), r.depth) for (i, r) in enumerate(S.positive)]
    _emit(args, "\n".join("%s %s depth %s" % row for row in rows),
        [{"id": a, "root": b, "depth": c} for (a, b, c) in rows])
    return OK


def cmd_closure(args, S):
    W = S.W
    gamma = S.roots(args.set)
    cap = args.ambient_depth if args.ambient_depth is not None else S.depth
    amb = W.roots(None if W.is_finite() else cap)
    res = closure(W, args.kind, gamma, amb)
    if res.infinite:
        a, b = res.witness
        txt = "INFINITE plane(%s,%s)" % (S.name(a), S.name(b))
        _emit(args, txt, {"infinite": True, "plane": [S.name(a), S.name(b)]})
        return OK
    _emit(args, _set_text(S, res.roots), {"infinite": False,
        "roots": [S.name(r) for r in sort_roots(res.roots)]})
    return OK


def cmd_join(args, S):
    X = [S.element(x) for x in args.elements]
    y = join(X, depth=args.depth if not S.W.is_finite() else None)
    _emit(args, str(y), {"join": str(y)})
    return OK


def cmd_meet(args, S):
    X = [S.element(x) for x in args.elements]
    y = meet(X)
    _emit(args, str(y), {"meet": str(y)})
    return OK


def _eset(E):
    return "{%s}" % ", ".join(str(x) for x in sorted(E))


def cmd_galois(args, S):
    W = S.W
    flavor = R if args.flavor == "R" else RPRIME
    if args.action == "pairs":
        ps = stable_pairs(W, flavor)
        lines = ["%s | %s" % (_eset(p.group), _eset(p.lattice)) for p in ps]
        _emit(args, "\n".join(lines), [{"group": [str(x) for x in sorted(p.group)],
            "lattice": [str(x) for x in sorted(p.lattice)]} for p in ps])
        return OK
    X = [S.element(x) for x in args.elements]
    f = dagger if args.action == "dagger" else star
    out = f(W, X, flavor)
    _emit(args, _eset(out), [str(x) for x in sorted(out)])
    return OK


def cmd_parabolic(args, S):
    W = S.W
    J = [int(j) - 1 for j in args.j.split(",") if j.strip()] if args.j else []
    for j in J:
        if not 0 <= j < W.rank:
            raise ParseError("J index %d out of range" % (j + 1))
    P = ParabolicSet(W, J, None if W.is_finite() else S.depth)
    if args.action == "hasse":
        print(hasse_dot(P), end="")
        return OK
    if args.action == "list":
        L = enumerate_biclosed_in_lambda(P, args.max_length)
        _emit(args, "\n".join(_set_text(S, g) for g in L),
            [[S.name(r) for r in sort_roots(g)] for g in L])
        return OK
    sets = [S.roots(t) for t in args.sets]
    if not sets:
        raise ParseError("give at least one set")
    if args.action == "type":
        out = [type_map(P, g) for g in sets]
        _emit(args, "\n".join(_set_text(S, g) for g in out),
            [[S.name(r) for r in sort_roots(g)] for g in out])
        return OK
    for g in sets:
        if not in_L(P, g):
            raise ParseError("%s is not a finite biclosed subset of Lambda" % _set_text(S, g))
    res = pjoin(P, sets) if args.action == "join" else pmeet(P, sets)
    if not res and not isinstance(res, frozenset):
        _emit(args, str(res), {"result": str(res)})
        return OK
    _emit(args, _set_text(S, res), [S.name(r) for r in sort_roots(res)])
    return OK


def cmd_order(args, S):
    W = S.W
    if args.action == "reflection":
        orders = harness.enumerate_reflection_orders(W)
        lines = ["%d orders" % len(orders)] + [" < ".join(S.name(r) for r in o.roots) for o in orders]
        _emit(args, "\n".join(lines), [[S.name(r) for r in o.roots] for o in orders])
        return OK
    if args.action == "admissible":
        if len(args.args) != 1:
            raise ParseError("order admissible takes one element")
        orders = harness.admissible_orders_of(S.element(args.args[0]))
        lines = ["%d orders" % len(orders)] + [" < ".join(S.name(r) for r in o.roots) for o in orders]
        _emit(args, "\n".join(lines), [[S.name(r) for r in o.roots] for o in orders])
        return OK
    if len(args.args) != 1:
        raise ParseError("order tau takes one root set")
    T = harness.tau_bruhat(W, S.roots(args.args[0]), args.max_length)
    _emit(args, _eset(T), [str(x) for x in sorted(T)])
    return OK


def _parse_bounds(items):
    out = {}
    for it in items or []:
        if "=" not in it:
            raise ParseError("bound must look like key=value, got %r" % it)
        k, v = it.split("=", 1)
        if k not in harness.DEFAULT_BOUNDS:
            raise ParseError("unknown bound %r" % k)
        try:
            out[k] = int(v)
        except ValueError:
            raise ParseError("bound %s needs an integer" % k)
    return out


def cmd_check(args, S_list):
    ids = list(harness.CHECKS) if args.ids == ["all"] else args.ids
    for c in ids:
        if c not in harness.CHECKS:
            raise harness.UnknownCheck("unknown check %r; known: %s" % (c, ", ".join(harness.CHECKS)))
    bounds = _parse_bounds(args.bound)
    if args.depth is not None:
        bounds.setdefault("depth", args.depth)
    reports = []
    out = open(args.out, "w", encoding="utf-8") if args.out else None
    try:
        for S in S_list:
            for c in ids:
                for rep in harness.check(c, S.W, bounds):
                    reports.append(rep)
                    line = rep.to_json()
                    if args.format == "text":
                        print("%-18s %-8s %-22s %s" % (rep.check, rep.system, rep.instance, rep.status))
                    else:
                        print(line)
                    sys.stdout.flush()
                    if out:
                        out.write(line + "\n")
    finally:
        if out:
            out.close()
    found = [r for r in reports if r.status == harness.FAIL]
    if found:
        with open(args.witness, "w", encoding="utf-8") as f:
            for r in found:
                f.write(r.to_json() + "\n")
    return harness.exit_code(reports)


# ----------------------------------------------------------------------


def _global(p, top):
    "global flags, accepted before or after the subcommand"
    kw = {} if top else {"default": argparse.SUPPRESS}
    p.add_argument("--system", help="matrix file or a name like A3, B2, I2(7), I2(inf)",
        **({"default": "A2"} if top else kw))
    p.add_argument("--depth", type=int, help="root depth cap for infinite systems",
        **({"default": None} if top else kw))
    p.add_argument("--format", choices=("text", "json"),
        help="default: json for check, text otherwise",
        **({"default": None} if top else kw))
    p.add_argument("-v", "--verbose", action="store_true",
        **({"default": False} if top else kw))


def build_parser():
    p = argparse.ArgumentParser(prog="cox", description="weak order and 2-closure for Coxeter groups")
    _global(p, True)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        q = sub.add_parser(name, **kw)
        _global(q, False)
        return q

    add("define", help="describe the system")
    add("roots", help="list positive roots (up to the depth cap)")

    q = add("closure", help="2-, cone or sum closure of a root set")
    q.add_argument("--kind", choices=("two", "cone", "zsum"), default="two")
    q.add_argument("--set", required=True, help='e.g. "#1,#4" or "[1, r2]"')
    q.add_argument("--ambient-depth", type=int)

    q = add("join", help="weak order join")
    q.add_argument("elements", nargs="+")
    q = add("meet", help="weak order meet")
    q.add_argument("elements", nargs="+")

    q = add("galois", help="Galois connection from z(Phi_x) = Phi_x")
    q.add_argument("action", choices=("pairs", "dagger", "star"))
    q.add_argument("elements", nargs="*")
    q.add_argument("--flavor", choices=("R", "Rprime"), default="R")

    q = add("parabolic", help="parabolic weak order on Lambda_J")
    q.add_argument("action", choices=("list", "hasse", "join", "meet", "type"))
    q.add_argument("sets", nargs="*", help='root sets like "{#1,-#2}"')
    q.add_argument("--j", default="", help="comma separated 1-based indices")
    q.add_argument("--max-length", type=int, default=4)

    q = add("order", help="reflection orders, admissible orders, Bruhat-path tau")
    q.add_argument("action", choices=("reflection", "admissible", "tau"))
    q.add_argument("args", nargs="*")
    q.add_argument("--max-length", type=int)

    q = add("check", help="run verification probes, JSON lines out")
    q.add_argument("ids", nargs="+", help="check ids or 'all'")
    q.add_argument("--bound", action="append", help="key=value, e.g. max_lambda=18")
    q.add_argument("--out", help="also write the reports here")
    q.add_argument("--witness", default="cox-witnesses.jsonl",
        help="where counterexample reports are kept")
    return p


COMMANDS = {"define": cmd_define, "roots": cmd_roots, "closure": cmd_closure,
    "join": cmd_join, "meet": cmd_meet, "galois": cmd_galois,
    "parabolic": cmd_parabolic, "order": cmd_order}


def main(argv=None):
    p = build_parser()
    args = p.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s")
    depth = args.depth if args.depth is not None else 6
    if args.format is None:
        args.format = "json" if args.command == "check" else "text"
    try:
        if args.command == "check":
            specs = [s for s in re.split(r",(?![^()]*\))", args.system) if s] if not os.path.exists(args.system) \
                else [args.system]
            return cmd_check(args, [Session(load_system(s), depth) for s in specs])
        S = Session(load_system(args.system), depth)
        return COMMANDS[args.command](args, S)
    except TruncationLimit as e:
        print("limit: %s (cap %s)" % (e, e.cap), file=sys.stderr)
        return LIMIT
    except TheoremViolation as e:
        print("internal check failed: %s" % e, file=sys.stderr)
        return THEOREM_FAIL
    except CoxError as e:
        print("error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
