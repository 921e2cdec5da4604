"""Command line interface.

Examples::

    nonnesting stats 3532521414
    nonnesting check 1221 nonnesting
    nonnesting map psi 228183175437954696
    nonnesting map lk ENEENENENENEEENNNN
    nonnesting poly eulerian 4
    nonnesting verify main --n 1-6
    nonnesting render --sigma 2531674 --path EENNEEENEENNNN --out fig.svg

Words are digit strings when every entry is at most 9 and comma-separated
otherwise.  Paths are ``E``/``N`` strings.  ``verify`` exits with status 1 if
any check fails; ``check`` exits with status 1 when the predicate is false.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections as bij
from . import generalizations as gen
from .core import (
    CapExceeded,
    Multipermutation,
    Permutation,
    dy,
    enumerate_dyck,
    enumerate_nonnesting,
    enumerate_perms,
    format_word,
    is_nonnesting,
    mat,
    parse_path,
    parse_word,
    pattern_occurs,
    peak_stats,
    pi_from,
    s_of,
    statistics,
)
from .polynomials import distribution, eulerian, narayana, narayana_closed
from .render import render_svg
from .verify import IDENTITIES, check_identity


def parse_range(text: str) -> list[int]:
    """``"4"``, ``"1-6"``, ``"1..6"`` or ``"2,4,5"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        sep = "-" if "-" in part else ".." if ".." in part else None
        if sep:
            lo, hi = part.split(sep)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _parse_set(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    return frozenset(int(x) for x in text.replace("{", "").replace("}", "").split(",") if x.strip())


def _word(text: str) -> Multipermutation:
    return Multipermutation(parse_word(text))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_stats(args) -> int:
    w = _word(args.word)
    st = statistics(w)
    payload = {
        "word": format_word(w),
        "des": st.des,
        "plat": st.plat,
        "wdes": st.wdes,
        "descent_set": sorted(st.descent_set),
    }
    lines = [
        f"des={st.des} plat={st.plat} wdes={st.wdes}",
        f"descent_set={sorted(st.descent_set)}",
    ]
    if w and w.k == 2:
        payload["nonnesting"] = is_nonnesting(w)
        payload["arcs"] = [list(a) for a in mat(w).arcs]
        lines.append(f"arcs={list(mat(w).arcs)}")
        if payload["nonnesting"]:
            sigma, path = s_of(w), dy(w)
            pk = peak_stats(path)
            payload.update(sigma=format_word(sigma), path=str(path), hpea=pk.hpea, lpea=pk.lpea)
            lines.append(f"sigma={format_word(sigma)} path={path} hpea={pk.hpea} lpea={pk.lpea}")
        else:
            lines.append("not nonnesting")
    _emit(args, payload, "\n".join(lines))
    return 0


PREDICATES = ("nonnesting", "A", "B", "canon", "pattern")


def cmd_check(args) -> int:
    w = _word(args.word)
    if args.predicate == "nonnesting":
        result = is_nonnesting(w)
    elif args.predicate == "A":
        result = gen.is_in_A(w)
    elif args.predicate == "B":
        result = gen.is_in_B(w)
    elif args.predicate == "canon":
        result = gen.is_canon(w)
    else:
        if not args.pattern:
            raise ValueError("--pattern is required for the pattern predicate")
        result = pattern_occurs(w, parse_word(args.pattern))
    _emit(args, {"word": format_word(w), "predicate": args.predicate, "result": result},
          "true" if result else "false")
    return 0 if result else 1


PATH_MAPS = {
    "rho": bij.rho,
    "rho_inv": bij.rho_inv,
    "lk": bij.lk,
    "lk_rho": bij.lk_rho,
}

WORD_MAPS = {
    "lkc": bij.lkc,
    "f_sigma": bij.f_sigma,
    "g": bij.g_step,
    "g_S": bij.g_S,
    "phi": bij.phi_sigma,
    "Phi": bij.Phi_sigma,
    "psi": bij.Psi,
    "Phi_bar": bij.Phi_bar_sigma,
    "psi_bar": bij.Psi_bar,
    "reverse": bij.reverse_word,
}

MAPS = sorted(list(PATH_MAPS) + list(WORD_MAPS) + ["f_k", "phi_inv", "pi"])


def cmd_map(args) -> int:
    name = args.bijection
    if name in PATH_MAPS:
        d = parse_path(args.arg)
        result = PATH_MAPS[name](d)
        _emit(args, {"map": name, "input": str(d), "output": str(result)}, str(result))
        return 0
    if name == "pi":
        if not args.sigma:
            raise ValueError("--sigma is required for pi")
        result = pi_from(Permutation(parse_word(args.sigma)), parse_path(args.arg))
    else:
        w = _word(args.arg)
        if name == "f_k":
            if args.value is None:
                raise ValueError("--value is required for f_k")
            result = bij.f_k_flip(w, args.value)
        elif name == "phi_inv":
            if not args.sigma:
                raise ValueError("--sigma is required for phi_inv")
            result = bij.phi_sigma_inv(w, Permutation(parse_word(args.sigma)))
        else:
            result = WORD_MAPS[name](w)
    st = statistics(result)
    _emit(
        args,
        {"map": name, "input": args.arg, "output": format_word(result),
         "des": st.des, "plat": st.plat, "wdes": st.wdes},
        format_word(result),
    )
    return 0


FAMILIES = (
    "eulerian", "narayana", "narayana_closed", "nonnesting", "class",
    "a", "a_closed", "b", "canon", "canon_class",
)


def _poly(args):
    fam, n, k = args.family, args.n, args.k
    if fam == "eulerian":
        return eulerian(n)
    if fam == "narayana":
        return narayana(n)
    if fam == "narayana_closed":
        return narayana_closed(n)
    if fam == "nonnesting":
        return distribution(enumerate_nonnesting(n, args.cap))
    if fam in ("class", "canon_class"):
        if args.sigma:
            sigma = Permutation(parse_word(args.sigma))
        else:
            sigma = bij.lambda_of(_parse_set(args.set), n)
        if fam == "class":
            return distribution(pi_from(sigma, d) for d in enumerate_dyck(sigma.n, args.cap))
        return gen.c_k_class_poly(sigma, k or 3, args.cap)
    if fam == "a":
        return gen.a_poly(n, k or 3, args.cap)
    if fam == "a_closed":
        return gen.a_closed(n, k or 3)
    if fam == "b":
        return gen.b_poly(n, k or 3, args.cap)
    if fam == "canon":
        return gen.c_k_poly(n, k or 3, args.cap)
    raise ValueError(f"unknown family {fam}")


def cmd_poly(args) -> int:
    if args.n is None:
        args.n = args.n_pos
    if args.n is None and not args.sigma:
        raise ValueError("n is required")
    if args.n is None:
        args.n = len(parse_word(args.sigma))
    p = _poly(args)
    _emit(args, {"family": args.family, "n": args.n, **p.to_json()}, str(p))
    return 0


def cmd_verify(args) -> int:
    if args.identity not in IDENTITIES:
        raise ValueError(f"unknown identity {args.identity!r}; known: {', '.join(IDENTITIES)}")
    ns = parse_range(args.n) if args.n else [4]
    ks = parse_range(args.k) if args.k else [None]
    failed = False
    for n in ns:
        for k in ks:
            params = {"cap": args.cap}
            if k is not None:
                params["k"] = k
            if args.sigma:
                params["sigma"] = args.sigma
            report = check_identity(args.identity, n, **params)
            failed |= not report.passed
            if args.json:
                print(json.dumps(report.to_json(), sort_keys=True))
            else:
                print(report.line())
                if report.detail and args.identity in ("main", "eq7", "eq13", "thm51", "eq34", "b_asymmetry"):
                    print(f"  {report.detail}")
    return 1 if failed else 0


def cmd_render(args) -> int:
    sigma = Permutation(parse_word(args.sigma))
    path = parse_path(args.path) if args.path else None
    second = parse_path(args.second) if args.second else None
    if args.lk and path is not None:
        second = bij.lk(path)
    svg = render_svg(sigma, path, second)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


ENUMERABLE = ("dyck", "perms", "nonnesting", "multiperms", "A", "B", "canon")


def cmd_enumerate(args) -> int:
    n, k = args.n_pos, args.k or 2
    kinds = {
        "dyck": lambda: enumerate_dyck(n, args.cap),
        "perms": lambda: enumerate_perms(n, args.cap),
        "nonnesting": lambda: enumerate_nonnesting(n, args.cap),
        "multiperms": lambda: gen.enumerate_multiperms(n, k, args.cap),
        "A": lambda: gen.enumerate_A(n, k, args.cap),
        "B": lambda: gen.enumerate_B(n, k, args.cap),
        "canon": lambda: gen.enumerate_canon(n, k, args.cap),
    }
    for obj in kinds[args.kind]():
        print(obj if isinstance(obj, str) else format_word(obj))
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonnesting", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k_as_int=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--cap", type=int, default=None, help="enumeration cap")
        return p

    p = common(sub.add_parser("stats", help="descent statistics of a word"))
    p.add_argument("word")
    p.set_defaults(func=cmd_stats)

    p = common(sub.add_parser("check", help="membership predicates"))
    p.add_argument("word")
    p.add_argument("predicate", choices=PREDICATES)
    p.add_argument("--pattern", help="pattern word for the pattern predicate")
    p.set_defaults(func=cmd_check)

    p = common(sub.add_parser("map", help="apply a bijection"))
    p.add_argument("bijection", choices=MAPS)
    p.add_argument("arg", help="word or path")
    p.add_argument("--sigma", help="target permutation (phi_inv) or labels (pi)")
    p.add_argument("--value", type=int, help="k for f_k")
    p.set_defaults(func=cmd_map)

    p = common(sub.add_parser("poly", help="named polynomials"))
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n_pos", nargs="?", type=int, metavar="n")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sigma")
    p.add_argument("--set", help="descent set such as 2,5,6 (uses the layered permutation)")
    p.set_defaults(func=cmd_poly)

    p = common(sub.add_parser("verify", help="check a named identity"))
    p.add_argument("identity", choices=sorted(IDENTITIES))
    p.add_argument("--n", help="n or a range like 1-6")
    p.add_argument("--k", help="k or a range like 3-4")
    p.add_argument("--sigma")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("render", help="SVG of a decorated grid"))
    p.add_argument("--sigma", required=True)
    p.add_argument("--path")
    p.add_argument("--second", help="second path, drawn reflected above the diagonal")
    p.add_argument("--lk", action="store_true", help="use LK(path) as the second path")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = common(sub.add_parser("enumerate", help="list objects one per line"))
    p.add_argument("kind", choices=ENUMERABLE)
    p.add_argument("n_pos", type=int, metavar="n")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
