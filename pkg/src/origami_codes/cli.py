"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 computation refused
(disconnected surface, degree bound), 3 invariant breach (two independent
computations disagree).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO

from .closed_system import closed_system
from .codes import (
    code,
    code_left,
    code_left_matrix,
    code_right,
    cut,
    cylinders,
    is_scc_at,
    literal_degenerate_code,
)
from .errors import (
    BoundExceeded,
    DisconnectedSurface,
    HypothesisError,
    InvariantBreach,
    NotNeighbors,
    OrigamiError,
    ParseError,
)
from .farey import INF, ZERO, CFrac, Mat2, Slope, slopes_up_to
from .oracle import trace_oracle
from .orbit import orbit_bfs_oracle, s_plus
from .surface import Surface, dehn_twist_matrices
from .veech import DEFAULT_MAX_N, group_G_X, group_S_X, veech_contains, veech_contains_positive

EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_BREACH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


# -- catalog ------------------------------------------------------------------


def read_catalog(path: Path) -> Dict[str, dict]:
    entries: Dict[str, dict] = {}
    if not path.exists():
        return entries
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            name = rec["name"]
            Surface.from_json(rec["surface"])
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad catalog record on line {lineno}: {exc}", line) from None
        if name in entries:
            raise ParseError(f"duplicate catalog name {name!r} on line {lineno}", line)
        entries[name] = rec
    return entries


def _invariants(X: Surface) -> dict:
    out = {"stratum": list(X.stratum())}
    if X.is_connected():
        out["genus"] = X.genus()
        out["veech_index"] = len(s_plus(X))
    return out


# -- helpers ----------------------------------------------------------------------


def _surface(args) -> Surface:
    text = args.surface
    if text is None:
        raise UsageError("this command needs --surface")
    if text.startswith("@"):
        if args.catalog is None:
            raise UsageError("--surface @name needs --catalog")
        entries = read_catalog(Path(args.catalog))
        name = text[1:]
        if name not in entries:
            raise UsageError(f"no surface named {name!r} in {args.catalog}")
        return Surface.from_json(entries[name]["surface"])
    return Surface.parse(text)


def _bounded(X: Surface, args) -> None:
    if args.max_n is not None and X.degree > args.max_n:
        raise BoundExceeded(f"degree {X.degree} exceeds --max-n {args.max_n}")


def _slope_or_cfrac(text: str) -> Slope:
    if text.strip().startswith("["):
        return CFrac.parse(text).value()
    return Slope.parse(text)


def _emit(args, payload, lines: Sequence[str], out: TextIO) -> None:
    if args.json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for line in lines:
            out.write(line + "\n")


# -- commands -------------------------------------------------------------------


def cmd_info(args, out):
    X = _surface(args)
    data = X.cone_data()
    H, V = dehn_twist_matrices(X)
    payload = {
        "surface": X.to_json(),
        "connected": X.is_connected(),
        **data.to_json(),
        "twists": [str(H), str(V)],
    }
    lines = [
        f"surface: {X}  (n={X.degree})",
        f"connected: {X.is_connected()}",
        f"commutator: {data.theta}",
        "stratum: H(" + ",".join(map(str, data.stratum)) + ")",
        "genus: " + ", ".join(map(str, data.genera)),
        f"twists: H={H}  V={V}",
    ]
    if X.is_connected():
        ok = [veech_contains_positive(X, H) is not None, veech_contains_positive(X, V) is not None]
        if not all(ok):
            raise InvariantBreach(f"twist matrices {H}, {V} not in the Veech group")
        payload["twists_in_veech"] = True
        lines.append("twists in Veech group: yes")
    _emit(args, payload, lines, out)


def cmd_cut(args, out):
    r = _slope_or_cfrac(args.slope)
    w = cut(r)
    _emit(args, {"slope": str(r), "cut": w}, [w], out)


def cmd_code(args, out):
    X = _surface(args)
    r = _slope_or_cfrac(args.slope)
    c, cl, cr = code(X, r), code_left(X, r), code_right(X, r)
    cyl = cylinders(X, r)
    payload = {
        "slope": str(r),
        "code": str(c),
        "code_left": str(cl),
        "code_right": str(cr),
        "cylinders": cyl.to_json()["cylinders"],
    }
    lines = [
        f"Code({r})   = {c}",
        f"Code^L({r}) = {cl}",
        f"Code^R({r}) = {cr}",
        "cylinders: " + ", ".join(f"{list(cy)} area {a}" for cy, a in cyl.cylinders),
    ]
    if args.audit_degenerate and r in (ZERO, INF):
        lit = literal_degenerate_code(X, r)
        payload["audit"] = {"adopted": str(c), "literal": str(lit)}
        lines.append(f"audit: adopted Code({r}) = {c}, literal definition gives {lit}")
    _emit(args, payload, lines, out)


def cmd_matrix_code(args, out):
    X = _surface(args)
    A = Mat2.parse(args.matrix)
    if not A.is_positive():
        raise UsageError(f"{A} is not in SL2+(Z)")
    P = code_left_matrix(X, A)
    r1, r2 = A.column_slopes()
    payload = {"matrix": str(A), "slopes": [str(r1), str(r2)], "pair": [str(P.first), str(P.second)]}
    _emit(args, payload, [f"Code^L({A}) = ({P.first}, {P.second})  slopes {r1}, {r2}"], out)


def cmd_closed_system(args, out):
    X = _surface(args)
    _bounded(X, args)
    S = closed_system(X)
    payload = {"size": len(S), **S.to_json()}
    lines = [str(d) for d in S] + [f"{len(S)} ring diagrams"]
    _emit(args, payload, lines, out)


def cmd_veech(args, out):
    X = _surface(args)
    X.require_connected()
    B = Mat2.parse(args.matrix)
    if not B.is_sl2():
        raise UsageError(f"{B} does not have determinant 1")
    verdict = veech_contains(X, B)
    witness = None
    if B.is_positive():
        w = veech_contains_positive(X, B)
        if (w is not None) != verdict:
            raise InvariantBreach(f"code test and orbit action disagree on {B}")
        witness = None if w is None else str(w)
    payload = {"matrix": str(B), "in_veech": verdict, "witness": witness}
    line = f"{B}: " + ("in Veech group" if verdict else "not in Veech group")
    if witness is not None:
        line += f", witness {witness}"
    _emit(args, payload, [line], out)


def cmd_orbit(args, out):
    X = _surface(args)
    _bounded(X, args)
    states = s_plus(X)
    other = orbit_bfs_oracle(X)
    if {st.surface_class for st in states} != other:
        raise InvariantBreach(f"S+ has {len(states)} classes, the orbit {len(other)}")
    rows = []
    for st in states:
        Y = st.surface()
        rows.append(
            {
                "sigma": str(Y.sigma),
                "tau": str(Y.tau),
                "matrix": str(st.representative_matrix),
                "stratum": list(Y.stratum()),
            }
        )
    lines = [f"{r['sigma']};{r['tau']}  {r['matrix']}  H({','.join(map(str, r['stratum']))})" for r in rows]
    lines.append(f"index: {len(states)}")
    _emit(args, {"index": len(states), "states": rows}, lines, out)


def cmd_scc(args, out):
    X = _surface(args)
    r = _slope_or_cfrac(args.slope)
    ans = is_scc_at(X, r, args.k)
    _emit(args, {"slope": str(r), "k": args.k, "scc": ans}, [str(ans).lower()], out)


def cmd_groups(args, out):
    X = _surface(args)
    max_n = DEFAULT_MAX_N if args.max_n is None else args.max_n
    S = group_S_X(X, max_n=max_n)
    G = group_G_X(X, max_n=max_n)
    payload = {"S_X": len(S), "G_X": len(G), "quotient": len(G) // len(S)}
    _emit(args, payload, [f"|S_X| = {len(S)}", f"|G_X| = {len(G)}", f"|G_X/S_X| = {len(G) // len(S)}"], out)


def cmd_oracle(args, out):
    X = _surface(args)
    _bounded(X, args)
    mismatches: List[str] = []
    slopes = slopes_up_to(args.height)
    for r in slopes:
        got = (code(X, r), code_left(X, r), code_right(X, r))
        if got != trace_oracle(X, r):
            mismatches.append(f"codes differ at slope {r}")
    index = None
    if X.is_connected():
        a = {st.surface_class for st in s_plus(X)}
        b = orbit_bfs_oracle(X)
        index = len(a)
        if a != b:
            mismatches.append(f"S+ has {len(a)} classes, the orbit {len(b)}")
    payload = {"slopes_checked": len(slopes), "index": index, "mismatches": mismatches}
    lines = [f"checked {len(slopes)} slopes" + ("" if index is None else f", orbit of size {index}")]
    lines += mismatches or ["all oracles agree"]
    _emit(args, payload, lines, out)
    if mismatches:
        return EXIT_BREACH
    return EXIT_OK


def cmd_catalog(args, out):
    if args.catalog is None:
        raise UsageError("catalog commands need --catalog")
    path = Path(args.catalog)
    entries = read_catalog(path)
    if args.action == "add":
        if not args.name:
            raise UsageError("catalog add needs a name")
        if args.name in entries:
            raise UsageError(f"{args.name!r} is already in the catalog")
        X = _surface(args)
        rec = {"name": args.name, "surface": X.to_json(), "cached": _invariants(X)}
        with path.open("a") as fh:
            fh.write(json.dumps(rec) + "\n")
        _emit(args, rec, [f"added {args.name}: {X}"], out)
        return EXIT_OK
    if args.action == "list":
        names = sorted(entries)
        _emit(args, names, names, out)
        return EXIT_OK
    if not args.name or args.name not in entries:
        raise UsageError(f"no surface named {args.name!r}")
    rec = entries[args.name]
    X = Surface.from_json(rec["surface"])
    if args.verify and rec.get("cached") is not None:
        fresh = _invariants(X)
        for key, val in rec["cached"].items():
            if fresh.get(key) != val:
                raise InvariantBreach(f"cached {key}={val} but recomputed {fresh.get(key)}")
    lines = [f"{rec['name']}: {X}"] + [f"  {k}: {v}" for k, v in (rec.get("cached") or {}).items()]
    _emit(args, rec, lines, out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--surface", default=d(None), help='"sigma;tau" in cycle notation, or @name')
    p.add_argument("--json", action="store_true", default=d(False), help="JSON output")
    p.add_argument("--catalog", default=d(None), help="line-delimited JSON catalog file")
    p.add_argument("--max-n", type=int, default=d(None), help="refuse surfaces above this degree")
    p.add_argument(
        "--audit-degenerate",
        action="store_true",
        default=d(False),
        help="show both conventions for the codes of 0/1 and 1/0",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="origami-codes", description="Codes and Veech groups of square-tiled surfaces.")
    _add_globals(parser, suppress=False)
    common = _Parser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "stratum, genus, cone points, twist matrices")
    add("cut", cmd_cut, "cutting sequence of a slope").add_argument("slope")
    add("code", cmd_code, "code, left and right codes, cylinders").add_argument("slope")
    add("matrix-code", cmd_matrix_code, "left-code pair of a matrix in SL2+(Z)").add_argument("matrix")
    add("closed-system", cmd_closed_system, "ring diagrams of the closed system")
    add("veech", cmd_veech, "Veech-group membership of a matrix").add_argument("matrix")
    add("orbit", cmd_orbit, "SL2(Z)-orbit and Veech index")
    p = add("scc", cmd_scc, "is the slope a simple closed curve at square k")
    p.add_argument("slope")
    p.add_argument("k", type=int)
    add("groups", cmd_groups, "sizes of the witness groups S_X and G_X")
    add("oracle", cmd_oracle, "compare algebraic results with the independent oracles").add_argument(
        "--height", type=int, default=12, help="check slopes with p+q up to this"
    )
    p = add("catalog", cmd_catalog, "manage a surface catalog")
    p.add_argument("action", choices=["add", "list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--verify", action="store_true", help="recompute cached invariants")
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        code_ = args.func(args, out)
        return EXIT_OK if code_ is None else code_
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"parse error: {exc.annotated()}\n")
        return EXIT_USAGE
    except (DisconnectedSurface, BoundExceeded) as exc:
        err.write(f"refused: {exc}\n")
        return EXIT_REFUSED
    except InvariantBreach as exc:
        err.write(f"invariant breach: {exc}\n")
        return EXIT_BREACH
    except (HypothesisError, NotNeighbors, OrigamiError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
