"""Command line front end.

    python -m shiftedtab coeff --family d --lam 5,3 --mu 3,1 --out 6,4,2
    python -m shiftedtab insert --algo mixed --word "2 4 2 4 6 1 5 3"
    python -m shiftedtab verify-suite --max-size 5

Exit codes: 0 success, 1 domain or parse error, 2 verification failure.
Defaults can be set in a JSON file named by SHIFTEDTAB_CONFIG.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, fields, replace
from itertools import permutations, product
from typing import Callable, Sequence

from . import bijections as bij
from . import coefficients as co
from . import giambelli as gi
from .core import (Partition, ShapeError, Tableau, TableauError, code, fmt_word,
                   parse_letter, parse_partition, partitions, sub_partitions, tableau)
from .insertion import INSERTIONS, INVERSES, InsertionError, mixed_insert, shifted_insert, sk_insert
from .ssidt import epsilon_minus_of_word, shifted_to_epsilon_plus
from .symfunc import basis, expand_in_basis
from .words import (is_lrs_word, is_shifted_yamanouchi, is_yamanouchi, rewrite_closure,
                    shifted_plactic_equiv, wread)

SCHEMA_VERSION = 1
CONFIG_ENV = "SHIFTEDTAB_CONFIG"


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    num_vars: int | None = None
    max_size: int = 6
    alphabet: int = 3
    format: str = "text"
    seed: int = 0
    time_budget: float | None = None

    def __post_init__(self):
        if self.max_size < 0 or self.alphabet < 1:
            raise ParseError("bounds must be positive")
        if self.format not in ("text", "json"):
            raise ParseError(f"unknown format {self.format!r}")


def load_config(env: dict | None = None) -> RunConfig:
    path = (env if env is not None else os.environ).get(CONFIG_ENV)
    if not path:
        return RunConfig()
    with open(path) as fh:
        data = json.load(fh)
    known = {f.name for f in fields(RunConfig)}
    return RunConfig(**{k: v for k, v in data.items() if k in known})


# ------------------------------------------------------------- parsing

def parse_word(s: str) -> tuple[int, ...]:
    out = []
    for pos, tok in enumerate(s.split(), start=1):
        try:
            x = parse_letter(tok)
        except ValueError:
            raise ParseError(f"bad letter {tok!r} at position {pos}") from None
        if x < 2:
            raise ParseError(f"letters start at 1 (position {pos})")
        out.append(x)
    return tuple(out)


def parse_rows(s: str, kind: str, inner: Partition = ()) -> Tableau:
    """Rows separated by '/', letters by spaces: "1 1 2'/2 3"."""
    rows = [r for r in s.split("/")]
    return tableau(kind, [parse_word(r) for r in rows], inner)


# ------------------------------------------------------ property checks

def _words(alphabet: int, max_len: int):
    for n in range(max_len + 1):
        for w in product(range(1, alphabet + 1), repeat=n):
            yield tuple(code(x) for x in w)


def check_insertion_roundtrip(max_len: int, alphabet: int = 3) -> tuple[int, list]:
    count, bad = 0, []
    for w in _words(alphabet, max_len):
        for name, ins in INSERTIONS.items():
            count += 1
            if INVERSES[name](ins(w)) != w:
                bad.append((name, fmt_word(w)))
    return count, bad


def check_haiman_duality(max_len: int) -> tuple[int, list]:
    """(P_mix(w), Q_mix(w)) = (Q_shift(w^-1), P_shift(w^-1)) on permutations."""
    count, bad = 0, []
    for n in range(1, max_len + 1):
        for p in permutations(range(1, n + 1)):
            inv = [0] * n
            for i, x in enumerate(p, start=1):
                inv[x - 1] = i
            w, winv = tuple(code(x) for x in p), tuple(code(x) for x in inv)
            count += 1
            P, Q = mixed_insert(w)
            Ps, Qs = shifted_insert(winv)
            if (P, Q) != (Qs, Ps):
                bad.append(fmt_word(w))
    return count, bad


def _fibres(max_len: int, alphabet: int):
    for n in range(max_len + 1):
        classes: dict[Tableau, set] = {}
        for w in product(range(1, alphabet + 1), repeat=n):
            w = tuple(code(x) for x in w)
            classes.setdefault(mixed_insert(w).insertion, set()).add(w)
        yield from classes.values()


def check_plactic_fibres(max_len: int, alphabet: int = 4) -> tuple[int, list]:
    """Every P_mix fibre is one rewrite class."""
    count, bad = 0, []
    for fibre in _fibres(max_len, alphabet):
        count += 1
        w = min(fibre)
        closure = rewrite_closure(w)
        if closure != fibre:
            extra = sorted(closure ^ fibre)[0]
            bad.append((fmt_word(w), fmt_word(extra)))
    return count, bad


def check_sk_shape(max_len: int, alphabet: int = 4) -> tuple[int, list]:
    count, bad = 0, []
    for w in _words(alphabet, max_len):
        count += 1
        if sk_insert(w).insertion.shape.outer != mixed_insert(w).insertion.shape.outer:
            bad.append(fmt_word(w))
    return count, bad


def check_identities(max_size: int) -> tuple[int, list]:
    count, bad = 0, []
    for n in range(1, max_size + 1):
        for alpha in partitions(n):
            for beta in sub_partitions(alpha):
                count += 1
                diff = gi.disagreements(alpha, beta)
                if diff:
                    bad.append((alpha, beta, diff))
    return count, bad


def _family_check(family: str) -> Callable[[int], tuple[int, list]]:
    def run(max_size: int) -> tuple[int, list]:
        count, bad = 0, []
        for s in range(max_size + 1):
            n, b = co.check_family(family, s)
            count, bad = count + n, bad + b
        return count, bad
    return run


def _summed(fn: Callable[[int], tuple], start: int = 1) -> Callable[[int], tuple[int, list]]:
    def run(max_size: int) -> tuple[int, list]:
        count, bad = 0, []
        for s in range(start, max_size + 1):
            r = fn(s)
            count, bad = count + r[0], bad + r[1]
        return count, bad
    return run


def _zeta_transport(size: int) -> tuple[int, list]:
    count, _, transport = bij.check_zeta(size)
    return count, transport


# name -> (check, cap on the size bound passed to it)
PROPERTIES: dict[str, tuple[Callable[[int], tuple[int, list]], int]] = {
    "insertion-roundtrip": (check_insertion_roundtrip, 6),
    "haiman-duality": (check_haiman_duality, 6),
    "plactic-fibres": (check_plactic_fibres, 5),
    "sk-mixed-shape": (check_sk_shape, 5),
    **{f"coefficients-{f}": (_family_check(f), 8) for f in co.RULES},
    "d-rules": (_summed(co.check_d_rules), 8),
    "identities": (check_identities, 8),
    "bijection-chi": (_summed(bij.check_chi), 7),
    "bijection-chi-prime": (_summed(lambda s: bij.check_chi(s, prime=True)), 7),
    "bijection-theta": (_summed(bij.check_theta), 7),
    "bijection-zeta": (_summed(bij.check_zeta), 8),
    "zeta-transport": (_summed(_zeta_transport), 8),
    "bijection-kappa": (_summed(bij.check_kappa), 7),
}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [_jsonable(v) for v in x]
    return x


def verify_suite(max_size: int, names: Sequence[str] | None = None,
                 time_budget: float | None = None) -> dict:
    """Run the property checks with every size bound capped at max_size.
    Once the time budget is spent the remaining checks are skipped and the
    report is flagged partial."""
    start = time.monotonic()
    report = {"version": SCHEMA_VERSION, "max_size": max_size, "partial": False, "properties": []}
    for name in names or PROPERTIES:
        fn, cap = PROPERTIES[name]
        if time_budget is not None and time.monotonic() - start > time_budget:
            report["partial"] = True
            report["properties"].append({"name": name, "skipped": True})
            continue
        count, bad = fn(min(max_size, cap))
        entry = {"name": name, "checked": count, "ok": not bad, "failures": len(bad)}
        if bad:
            entry["counterexample"] = _jsonable(bad[0])
        report["properties"].append(entry)
    report["ok"] = all(p.get("ok", True) for p in report["properties"])
    return report


# ----------------------------------------------------------- commands

def _tab_json(T: Tableau) -> dict:
    return T.to_json()


def cmd_insert(a, cfg) -> tuple[object, int]:
    if a.inverse:
        data = json.loads(a.json)
        pair = (Tableau.from_json(data["insertion"]), Tableau.from_json(data["recording"]))
        w = INVERSES[a.algo](pair)
        return {"algo": a.algo, "word": fmt_word(w)}, 0
    w = parse_word(a.word)
    P, Q = INSERTIONS[a.algo](w)
    return {"algo": a.algo, "word": fmt_word(w), "insertion": _tab_json(P),
            "recording": _tab_json(Q)}, 0


def cmd_word(a, cfg):
    w = parse_word(a.word)
    sy, table = is_shifted_yamanouchi(w)
    out = {"word": fmt_word(w), "yamanouchi": is_yamanouchi(w), "shifted_yamanouchi": sy,
           "seq": {str(r): list(v) for r, v in sorted(table.items())},
           "lrs": is_lrs_word(w)[0], "wread": fmt_word(wread(w))}
    if a.equiv:
        out["plactic_equivalent"] = shifted_plactic_equiv(w, parse_word(a.equiv))
    return out, 0


def cmd_ssidt(a, cfg):
    if a.mode == "minus":
        S = epsilon_minus_of_word(parse_word(a.word))
        return {"mode": "minus", "tableau": _tab_json(S)}, 0
    T = parse_rows(a.rows, "shifted")
    S = shifted_to_epsilon_plus(T)
    return {"mode": "plus", "tableau": _tab_json(S)}, 0


def cmd_coeff(a, cfg):
    left, right, out = parse_partition(a.left), parse_partition(a.right), parse_partition(a.out)
    if a.all_rules:
        vals = co.all_rules(a.family, left, right, out)
        code_ = 0 if len(set(vals.values())) == 1 else 2
        return {"family": a.family, "left": list(left), "right": list(right), "out": list(out),
                "values": vals}, code_
    value = co.coefficient(a.family, left, right, out, a.rule)
    return {"family": a.family, "left": list(left), "right": list(right), "out": list(out),
            "value": value}, 0


def cmd_expand(a, cfg):
    outer, inner = parse_partition(a.index), parse_partition(a.inner)
    n = sum(outer) - sum(inner)
    m = cfg.num_vars or max(n, 1)
    if a.kind == "q":
        f = basis("q", outer[0] if outer else 0, m)
    else:
        f = basis(a.kind, (outer, inner) if inner else outer, m)
    exp = expand_in_basis(f, a.basis)
    return {"kind": a.kind, "index": list(outer), "inner": list(inner), "basis": a.basis,
            "num_vars": m,
            "expansion": [[list(k), v] for k, v in sorted(exp.items(), reverse=True)]}, 0


def cmd_identity(a, cfg):
    lam, mu = parse_partition(a.lam), parse_partition(a.mu)
    alpha, beta = parse_partition(a.alpha), parse_partition(a.beta)
    if a.which == "verify":
        vals = gi.all_formulas(alpha, beta, cfg.num_vars)
        ref = vals["enumeration"]
        agree = {k: v == ref for k, v in vals.items()}
        return {"alpha": list(alpha), "beta": list(beta), "agree": agree}, 0 if all(agree.values()) else 2
    if a.which == "shat-in-pp":
        s = gi.s_hat_as_PP(lam, mu, {"s1": "S1", "s1plus": "S1plus", "s1minus": "S1minus",
                                     "s2": "S2"}[a.variant])
    elif a.which == "matchings":
        s = gi.s_hat_perfect_matchings(lam, mu)
    elif a.which == "pp-in-shat":
        s = gi.pp_as_s_hat(lam, mu)
    elif a.which == "skew-qq":
        s = gi.skew_s_hat_as_QQ(alpha, beta, "eq2" if a.variant == "eq2" else "eq1")
    else:
        s = gi.skew_s_hat_matchings(alpha, beta)
    return {"which": a.which, "sum": s.to_json(), "text": str(s)}, 0


def cmd_bijection(a, cfg):
    size = a.size if a.size is not None else cfg.max_size
    fn, cap = PROPERTIES[f"bijection-{a.name}"]
    count, bad = fn(min(size, cap))
    out = {"name": a.name, "max_size": min(size, cap), "checked": count, "failures": len(bad)}
    if bad:
        out["counterexample"] = _jsonable(bad[0])
    return out, 0 if not bad else 2


def cmd_verify(a, cfg):
    size = a.max_size if a.max_size is not None else cfg.max_size
    budget = a.time_budget if a.time_budget is not None else cfg.time_budget
    report = verify_suite(size, a.only or None, budget)
    return report, 0 if report["ok"] else 2


def _text(obj) -> str:
    if isinstance(obj, dict) and "properties" in obj:
        lines = []
        for p in obj["properties"]:
            if p.get("skipped"):
                lines.append(f"SKIP {p['name']}")
                continue
            tag = "PASS" if p["ok"] else "FAIL"
            line = f"{tag} {p['name']} ({p['checked']} checked)"
            if not p["ok"]:
                line += f": {p['failures']} failures, first {p['counterexample']}"
            lines.append(line)
        if obj.get("partial"):
            lines.append("partial report: time budget exhausted")
        return "\n".join(lines)
    if isinstance(obj, dict) and "text" in obj:
        return obj["text"]
    if isinstance(obj, dict) and "value" in obj:
        return str(obj["value"])
    if isinstance(obj, dict) and "insertion" in obj:
        P = Tableau.from_json(obj["insertion"])
        Q = Tableau.from_json(obj["recording"])
        return f"P:\n{P}\nQ:\n{Q}"
    if isinstance(obj, dict) and "tableau" in obj:
        return str(Tableau.from_json(obj["tableau"]))
    return json.dumps(obj, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shiftedtab", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("text", "json"))
    p.add_argument("--num-vars", type=int)
    p.add_argument("--seed", type=int)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("insert")
    s.add_argument("--algo", choices=sorted(INSERTIONS), default="mixed")
    s.add_argument("--word", default="")
    s.add_argument("--inverse", action="store_true")
    s.add_argument("--json", help="an insertion pair as printed with --format json")

    s = sub.add_parser("word")
    s.add_argument("--word", required=True)
    s.add_argument("--equiv", help="second word for the shifted plactic test")

    s = sub.add_parser("ssidt")
    s.add_argument("mode", choices=("minus", "plus"))
    s.add_argument("--word", default="")
    s.add_argument("--rows", default="", help="shifted tableau rows, e.g. \"1 1 2'/2 3\"")

    s = sub.add_parser("coeff")
    s.add_argument("--family", choices=sorted(co.RULES), required=True)
    s.add_argument("--left", "--lam", "--alpha", dest="left", default="")
    s.add_argument("--right", "--mu", "--beta", dest="right", default="")
    s.add_argument("--out", "--nu", "--gamma", dest="out", default="")
    s.add_argument("--rule")
    s.add_argument("--all-rules", action="store_true")

    s = sub.add_parser("expand")
    s.add_argument("--kind", choices=("s", "S_hat", "P", "Q", "q"), required=True)
    s.add_argument("--index", required=True)
    s.add_argument("--inner", default="")
    s.add_argument("--basis", choices=("s", "P"), default="s")

    s = sub.add_parser("identity")
    s.add_argument("which", choices=("shat-in-pp", "matchings", "pp-in-shat", "skew-qq",
                                     "skew-matchings", "verify"))
    s.add_argument("--lam", default="")
    s.add_argument("--mu", default="")
    s.add_argument("--alpha", default="")
    s.add_argument("--beta", default="")
    s.add_argument("--variant", default="s1")

    s = sub.add_parser("bijection")
    s.add_argument("name", choices=("chi", "chi-prime", "theta", "zeta", "kappa"))
    s.add_argument("--size", type=int)

    s = sub.add_parser("verify-suite")
    s.add_argument("--max-size", type=int)
    s.add_argument("--time-budget", type=float)
    s.add_argument("--only", action="append", choices=sorted(PROPERTIES))
    return p


COMMANDS = {"insert": cmd_insert, "word": cmd_word, "ssidt": cmd_ssidt, "coeff": cmd_coeff,
            "expand": cmd_expand, "identity": cmd_identity, "bijection": cmd_bijection,
            "verify-suite": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config()
        overrides = {k: v for k, v in (("format", args.format), ("num_vars", args.num_vars),
                                       ("seed", args.seed)) if v is not None}
        cfg = replace(cfg, **overrides)
        random.seed(cfg.seed)
        result, status = COMMANDS[args.verb](args, cfg)
    except (ParseError, ShapeError, TableauError, InsertionError, gi.FormulaError,
            KeyError, ValueError) as e:
        print(f"error ({type(e).__name__}): {e}", file=sys.stderr)
        return 1
    if cfg.format == "json":
        print(json.dumps(result, sort_keys=True))
    else:
        print(_text(result))
    return status


if __name__ == "__main__":
    sys.exit(main())
