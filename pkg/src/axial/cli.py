"""Command-line front end: interval builds, lattice audits, noncrossing
partition queries, Hurwitz orbits, presentations, normal forms, and a
golden-table selftest.

Output is deterministic for fixed flags; rationals are always rendered as
"p/q" strings; report output (--out) writes figures next to the delimited
tables.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction as Q
from importlib import resources
from pathlib import Path

from . import cache as cache_mod
from . import garside as gar
from . import midnc
from .coxeter import CoxeterElement, WindowExhausted
from .cryst import (
    build_cryst_interval,
    check_translation_chain,
    verify_lattice,
    w_interval_bowtie,
)
from .linalg import rat_str
from .poset import interval_json
from .rootdata import (
    EuclideanType,
    build_root_system,
    extended_diagram,
    horizontal_decomposition,
    root_system_json,
)
from .winterval import build_w_interval, coarse_table, interval_rows

EXIT_OK, EXIT_FAIL = 0, 1


def _add_type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True,
                   help="euclidean type: letter plus rank (E8) or letter with --rank")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--bigon", default=None, metavar="p,q",
                   help="bigon class for type A (e.g. 2,1)")
    p.add_argument("--window", type=int, default=2,
                   help="window multiplier (periods of axis materialized; default 2)")


def _add_common_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", type=Path, default=None,
                   help="directory for report artifacts (figures + delimited tables)")
    p.add_argument("--cache-dir", type=Path, default=None)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="reserved for build parallelism (pipelines are sequential)")
    p.add_argument("--seed", type=int, default=0)


def parse_type(args) -> EuclideanType:
    t = args.type.strip()
    letter, rank = (t[0], args.rank) if len(t) == 1 else (t[0], int(t[1:]))
    if rank is None:
        raise SystemExit("missing rank: use --type E8 or --type E --rank 8")
    if args.bigon is not None:
        p, q = (int(x) for x in args.bigon.split(","))
        return EuclideanType(letter, rank, (p, q))
    return EuclideanType(letter, rank)


def build_cox(args) -> CoxeterElement:
    rs = build_root_system(parse_type(args))
    return CoxeterElement(rs, window_mult=args.window)


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _golden(name: str) -> dict:
    ref = resources.files("axial") / "data" / "golden" / name
    return json.loads(ref.read_text())


# -- subcommands -----------------------------------------------------------


def cmd_roots(args) -> int:
    rs = build_root_system(parse_type(args))
    diagram = extended_diagram(rs)
    comps = horizontal_decomposition(rs, diagram)
    payload = root_system_json(rs, diagram)
    payload["horizontal_components"] = [name for name, _ in comps]
    text = (f"type {rs.type}: {len(rs.roots)} root lines, ambient dim {rs.ambient_dim}\n"
            f"horizontal components: {', '.join(n for n, _ in comps) or '(none)'}")
    _emit(args, text, payload)
    return EXIT_OK


def _coarse_with_cache(args, cox: CoxeterElement):
    params = dict(kind="coarse", type=str(cox.rs.type), order=list(cox.order),
                  window=cox.window_mult)
    if args.cache_dir is not None:
        key = cache_mod.cache_key(**params)
        hit = cache_mod.load(args.cache_dir, key)
        if hit is not None:
            from .winterval import CoarseTable

            return CoarseTable(rank=hit["rank"], bottom=tuple(hit["bottom"]),
                               middle=tuple(hit["middle"]), top=tuple(hit["top"]))
    table = coarse_table(cox)
    if args.cache_dir is not None:
        cache_mod.store(args.cache_dir, key, table.json())
    return table


def cmd_interval(args) -> int:
    from . import report

    cox = build_cox(args)
    if args.coarse:
        table = _coarse_with_cache(args, cox)
        _emit(args, report.coarse_grid_text(table), table.json())
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            stem = f"coarse_{args.type}"
            with open(args.out / f"{stem}.csv", "w", newline="") as fh:
                report.write_delimited(table.csv_rows(), fh)
            report.render_coarse_grid(table, args.out / f"{stem}.png")
        return EXIT_OK
    data = build_cryst_interval(cox)
    iv = data.subinterval(args.group)
    if args.group == "W":
        rows = interval_rows(cox, iv)
        payload = interval_json(iv, row_of=lambda k: rows[k])
    else:
        payload = interval_json(iv)
    counts = iv.rank_counts()
    text = (f"[1,w]^{args.group} for {cox.rs.type}: {len(iv)} elements\n"
            + "\n".join(f"  weight {rat_str(w)}: {c}" for w, c in sorted(counts.items())))
    _emit(args, text, payload)
    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        stem = f"interval_{args.type}_{args.group}"
        with open(args.out / f"{stem}.json", "w") as fh:
            json.dump(payload, fh, sort_keys=True)
        count_rows = [["weight", "elements"]] + [
            [rat_str(w), str(c)] for w, c in sorted(counts.items())]
        with open(args.out / f"{stem}.csv", "w", newline="") as fh:
            report.write_delimited(count_rows, fh)
        try:
            report.render_hasse(iv, args.out / f"{stem}.png")
        except ValueError as exc:
            print(f"figure skipped: {exc}", file=sys.stderr)
    return EXIT_OK


def cmd_lattice_check(args) -> int:
    cox = build_cox(args)
    data = build_cryst_interval(cox)
    rep = verify_lattice(data)
    wb = w_interval_bowtie(cox)
    payload = rep.json()
    payload.update({
        "type": str(cox.rs.type),
        "bare_w_bowtie": wb is not None,
        "sizes": {"W": len(data.w_interval), "F": len(data.factor.interval),
                  "D": len(data.d_keys), "C": len(data.c_interval)},
    })
    text = (f"{cox.rs.type}: C lattice={rep.lattice} atom_audit={rep.atom_audit} "
            f"failures={len(rep.atom_failures)} bare-W bowtie="
            f"{'yes' if wb else 'none'}")
    _emit(args, text, payload)
    return EXIT_OK if rep.lattice and not rep.atom_failures else EXIT_FAIL


def cmd_ncb(args) -> int:
    n = args.n
    if args.count:
        value = len(midnc.ncb_enumerate(n)) if args.enumerate else midnc.ncb_count(n)
        _emit(args, str(value), {"n": n, "count": value})
        return EXIT_OK
    parts = midnc.ncb_enumerate(n)
    text = "\n".join(str([list(b) for b in p]) for p in parts)
    _emit(args, text, {"n": n, "partitions": [[list(b) for b in p] for p in parts]})
    return EXIT_OK


def cmd_mid(args) -> int:
    n = args.n
    iv = midnc.build_special_interval(n)
    counts = iv.rank_counts()
    expected = midnc.ncb_count(n)
    ok = len(iv) == expected
    payload = {"n": n, "size": len(iv), "binomial": expected,
               "rank_counts": {rat_str(w): c for w, c in sorted(counts.items())},
               "matches_binomial": ok}
    text = (f"Mid(B_{n}) interval: {len(iv)} elements (C(2n,n) = {expected}); "
            + " ".join(f"{rat_str(w)}:{c}" for w, c in sorted(counts.items())))
    _emit(args, text, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_hurwitz(args) -> int:
    if args.spherical:
        t = args.type.strip()
        letter, rank = t[0], args.rank if len(t) == 1 else int(t[1:])
        if letter != "B" or rank is None:
            raise SystemExit("spherical orbits are implemented for type B (e.g. --type B3)")
        refl = gar.b_reflections(rank)
        w = gar.b_coxeter_element(rank)
        facts = gar.minimal_factorizations(w, refl.values(), rank)
        orbit = gar.hurwitz_orbit(next(iter(sorted(facts))))
        transitive = orbit == facts
        payload = {"group": f"Cox(B{rank})", "factorizations": len(facts),
                   "orbit": len(orbit), "transitive": transitive}
    else:
        cox = build_cox(args)
        iv = build_w_interval(cox)
        chains = gar.w_chain_factorizations(cox, iv)
        canon = gar.period_canonicalizer(cox)
        keyf = lambda r: r.key()
        allc = {tuple(keyf(r) for r in canon(f)) for f in chains}
        orbit = gar.hurwitz_orbit(canon(chains[0]), canon=canon, key=keyf)
        transitive = orbit == allc
        payload = {"group": f"Cox({cox.rs.type})", "window_chains": len(chains),
                   "classes_mod_period": len(allc), "orbit": len(orbit),
                   "transitive": transitive}
    text = " ".join(f"{k}={v}" for k, v in payload.items())
    _emit(args, text, payload)
    return EXIT_OK if transitive else EXIT_FAIL


def cmd_presentation(args) -> int:
    cox = build_cox(args)
    if args.group == "C":
        data = build_cryst_interval(cox)
        pres = gar.combined_presentation(data)
    else:
        iv = build_w_interval(cox)
        pres = gar.w_dual_presentation(cox, iv)
    _emit(args, pres.text(), pres.json())
    return EXIT_OK


def cmd_nf(args) -> int:
    iv = midnc.build_special_interval(args.n)
    gd = gar.GarsideData(iv)
    simples = list(iv.keys)
    word = []
    for tok in args.word.split(","):
        tok = tok.strip()
        exp = -1 if tok.startswith("-") else 1
        idx = int(tok.lstrip("-"))
        if not 0 <= idx < len(simples):
            raise SystemExit(f"simple index out of range 0..{len(simples) - 1}")
        word.append((simples[idx], exp))
    nf = gar.garside_nf(word, gd)
    name = lambda k: f"u{iv.index[k]}"
    payload = {"n": args.n, "power": nf.power,
               "simples": [iv.index[k] for k in nf.simples]}
    _emit(args, nf.display(name), payload)
    return EXIT_OK


def _selftest_cases(full: bool):
    yield ("G2 coarse grid", "coarse_g2.json",
           lambda: coarse_table(CoxeterElement(build_root_system(EuclideanType("G", 2)))).json())
    if full:
        yield ("E8 coarse grid", "coarse_e8.json",
               lambda: coarse_table(CoxeterElement(build_root_system(EuclideanType("E", 8)))).json())

    def horizontal_all():
        out = {}
        types = [EuclideanType("G", 2), EuclideanType("C", 2), EuclideanType("A", 2, (2, 1)),
                 EuclideanType("B", 3), EuclideanType("C", 3), EuclideanType("A", 3, (2, 2)),
                 EuclideanType("A", 3, (3, 1)), EuclideanType("D", 4), EuclideanType("F", 4),
                 EuclideanType("B", 4), EuclideanType("C", 4), EuclideanType("A", 4, (3, 2)),
                 EuclideanType("A", 4, (4, 1))]
        if full:
            types += [EuclideanType("E", 6), EuclideanType("E", 7), EuclideanType("E", 8)]
        for t in types:
            rs = build_root_system(t)
            out[str(t)] = [name for name, _ in horizontal_decomposition(rs)]
        return out

    def horizontal_expected():
        table = _golden("horizontal.json")["components"]
        if not full:
            table = {k: v for k, v in table.items() if not k.startswith("E")}
        return table

    yield ("horizontal decompositions", horizontal_expected, horizontal_all)

    def ncb_counts():
        return {str(n): len(midnc.ncb_enumerate(n)) for n in range(1, 7)}

    yield ("noncrossing partition counts", "ncb_counts.json", ncb_counts)

    def g2_relations():
        rs = build_root_system(EuclideanType("G", 2))
        cox = CoxeterElement(rs)
        pres = gar.w_dual_presentation(cox, build_w_interval(cox))
        text = pres.text()
        want = _golden("g2_relations.json")["relations"]
        return {"present": [s for s in want if s in text]}

    def g2_expected():
        return {"present": _golden("g2_relations.json")["relations"]}

    yield ("G2 dual relations", g2_expected, g2_relations)


def cmd_selftest(args) -> int:
    failures = 0
    for name, expected, actual in _selftest_cases(args.full):
        want = _golden(expected) if isinstance(expected, str) else expected()
        if isinstance(expected, str):
            want = {k: v for k, v in want.items() if k != "description"}
        got = actual()
        ok = got == want
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        if not ok:
            failures += 1
            print(f"      expected {want}")
            print(f"      got      {got}")
    print(f"selftest: {failures} failure(s)")
    return EXIT_OK if failures == 0 else EXIT_FAIL


# -- argument wiring -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="axial", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, *, typed=True, common=True):
        p = sub.add_parser(name)
        if typed:
            _add_type_args(p)
        if common:
            _add_common_args(p)
        p.set_defaults(fn=fn)
        return p

    add("roots", cmd_roots)

    p = add("interval", cmd_interval)
    p.add_argument("--group", choices=("W", "H", "D", "F", "C"), default="W")
    p.add_argument("--coarse", action="store_true",
                   help="print the three-row coarse census instead of the full poset")

    add("lattice-check", cmd_lattice_check)

    p = add("ncb", cmd_ncb, typed=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--enumerate", action="store_true",
                   help="count by brute-force enumeration instead of the closed form")

    p = add("mid", cmd_mid, typed=False)
    p.add_argument("--n", type=int, required=True)

    p = add("hurwitz", cmd_hurwitz)
    p.add_argument("--spherical", action="store_true",
                   help="use the finite type-B group instead of the euclidean one")

    p = add("presentation", cmd_presentation)
    p.add_argument("--group", choices=("W", "C"), default="W")

    p = add("nf", cmd_nf, typed=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True,
                   help="comma-separated simple indices, '-' prefix for inverses")

    p = add("selftest", cmd_selftest, typed=False)
    tier = p.add_mutually_exclusive_group()
    tier.add_argument("--quick", action="store_true", default=True)
    tier.add_argument("--full", action="store_true", default=False)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    random.seed(getattr(args, "seed", 0))
    try:
        return args.fn(args)
    except WindowExhausted as exc:
        print(f"window exhausted: {exc}\n"
              f"hint: rerun with a larger --window multiplier", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
