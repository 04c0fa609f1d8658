"""Batch front end.

    itype check FILE            shape checks + pair-map axioms
    itype build FILE            materialize and dump the letter table
    itype normalize FILE WORD   canonical form + exponent vector
    itype equal FILE W1 W2      decide equality in the semigroup
    itype phi FILE              permutation calculus: phi, kernel, cosets
    itype bieberbach FILE       affine action: generators, freeness, tiling
    itype orbits FILE           orbit census on degree-3 words
    itype enumerate --n K       census of all valid pair maps on K letters

Input files are auto-detected: a ``rel`` directive introduces a
presentation, an ``rtable`` directive a raw pair-map table.  Words on
the command line are space-separated generator names, e.g. ``"x y y"``.
Exit codes: 0 all checks passed, 1 a check failed (witness printed),
2 malformed input or bound violation.
"""

from __future__ import annotations

import argparse
import sys

from .bieberbach import (
    check_action_consistency,
    classify_isometry_2d,
    export_affine_group,
    affine_generators,
    freeness_check,
    fundamental_domain_check,
    resolve_convention,
)
from .core import (
    AxiomError,
    CheckResult,
    ConsistencyError,
    DegreeBoundError,
    InputError,
    Perm,
    format_expvec,
    format_word,
)
from .istructure import build_itable, dump_itable, normalize_word, v_inverse
from .presentation import (
    Presentation,
    check_cyclic,
    parse_presentation,
    parse_word,
    star_report,
)
from .structuremaps import (
    PhiMap,
    cocycle_exhaustive,
    coset_decomposition,
    kernel_exponents,
    phi_of,
)
from .ybr import (
    PairMap,
    build_r,
    check_involutive,
    check_nondegenerate,
    check_yb,
    classify_orbits3,
    enumerate_solutions,
    parse_rtable,
)


class Reporter:
    def __init__(self, fmt: str):
        self.machine = fmt == "machine"

    def field(self, key: str, value) -> None:
        print(f"{key}={value}" if self.machine else f"{key}: {value}")

    def check(self, key: str, res: CheckResult) -> None:
        self.field(key, "pass" if res.ok else "fail")
        if not res.ok:
            self.field(f"{key}.witness", res.witness)

    def raw(self, line: str) -> None:
        print(line)


def load_input(path: str):
    """Returns (presentation or None, pair map, names)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    directives = [
        line.split("#", 1)[0].split()[0]
        for line in text.splitlines()
        if line.split("#", 1)[0].strip()
    ]
    if "rtable" in directives:
        r = parse_rtable(text)
        return None, r, r.names
    p = parse_presentation(text)
    return p, None, p.gen_names


def _pairmap(p: Presentation | None, r: PairMap | None) -> PairMap:
    return r if r is not None else build_r(p)


def cmd_check(args, rep: Reporter) -> int:
    p, r, names = load_input(args.file)
    if p is not None:
        rep.field("kind", "presentation")
        rep.field("n", p.n)
        try:
            r = build_r(p)
        except InputError as exc:
            sr = star_report(p)
            rep.check("star1", sr.star1)
            rep.check("star2", sr.star2)
            rep.check("star3", sr.star3)
            rep.check("pair-map", CheckResult.failed(str(exc)))
            return 1
        sr = star_report(p, r)
        rep.check("star1", sr.star1)
        rep.check("star2", sr.star2)
        rep.check("star3", sr.star3)
    else:
        rep.field("kind", "rtable")
        rep.field("n", r.n)
    inv, yb, nd = check_involutive(r), check_yb(r), check_nondegenerate(r)
    rep.check("involutive", inv)
    rep.check("yang-baxter", yb)
    rep.check("nondegenerate", nd)
    rep.check("cyclic", check_cyclic(r, names))
    ok = inv.ok and yb.ok and nd.ok
    rep.field("verdict", "valid" if ok else "invalid")
    return 0 if ok else 1


def cmd_build(args, rep: Reporter) -> int:
    p, r, _ = load_input(args.file)
    t = build_itable(_pairmap(p, r), args.degree, _sigma(args))
    sys.stdout.write(dump_itable(t))
    return 0


def cmd_normalize(args, rep: Reporter) -> int:
    p, r, names = load_input(args.file)
    t = build_itable(_pairmap(p, r), args.degree)
    w = parse_word(args.word, names)
    nf = normalize_word(t, w)
    rep.field("word", format_word(w, names))
    rep.field("exps", format_expvec(nf.exps))
    rep.field("canonical", format_word(nf.word, names))
    return 0


def cmd_equal(args, rep: Reporter) -> int:
    p, r, names = load_input(args.file)
    t = build_itable(_pairmap(p, r), args.degree)
    w1 = parse_word(args.word1, names)
    w2 = parse_word(args.word2, names)
    a1, a2 = v_inverse(t, w1), v_inverse(t, w2)
    rep.field("equal", "true" if a1 == a2 else "false")
    if a1 != a2:
        rep.field("left.exps", format_expvec(a1))
        rep.field("right.exps", format_expvec(a2))
        return 1
    return 0


def cmd_phi(args, rep: Reporter) -> int:
    p, r, names = load_input(args.file)
    t = build_itable(_pairmap(p, r), args.degree)
    pm = PhiMap(t)
    names = names or tuple(f"x{i}" for i in range(1, t.n + 1))
    for i in range(1, t.n + 1):
        u = tuple(1 if j == i else 0 for j in range(1, t.n + 1))
        rep.field(f"phi {names[i - 1]}", ",".join(str(k) for k in phi_of(pm, u).images))
    kd = kernel_exponents(pm)
    rep.field("kernel t", "(" + ",".join(str(k) for k in kd.t) + ")")
    rep.field("G order", kd.group_order)
    cosets = coset_decomposition(pm, min(t.D, 6))
    rep.field("cosets", " ".join(format_expvec(a) for a in cosets.reps))
    cc = cocycle_exhaustive(pm, min(5, t.D - 1))
    rep.check("cocycle", cc)
    rep.check("coset-factorization", cosets.factorization)
    rep.check("coset-product-rule", cosets.product_rule)
    rep.check("coset-commuting", cosets.commuting)
    return 0 if cc.ok and cosets.ok else 1


def cmd_bieberbach(args, rep: Reporter) -> int:
    p, r, names = load_input(args.file)
    t = build_itable(_pairmap(p, r), args.degree)
    pm = PhiMap(t)
    convention = resolve_convention(pm)
    gens = affine_generators(pm, convention)
    rep.field("convention", convention)
    cons = check_action_consistency(pm, t.D - 1, convention)
    free = freeness_check(pm, args.length)
    tile = fundamental_domain_check(pm, args.radius, max(args.length, 2 * args.radius * t.n))
    sys.stdout.write(export_affine_group(gens, names, free.relations))
    rep.check("consistency", cons)
    rep.check("freeness", CheckResult(free.ok, free.witness))
    rep.field("relations", len(free.relations))
    rep.field("tiling", tile.status)
    if tile.status != "pass":
        rep.field("tiling.witness", tile.witness)
    rep.field("orbit", f"{tile.covered} box points covered, {tile.orbit_size} elements")
    if t.n == 2:
        names2 = names or ("x1", "x2")
        for name, g in zip(names2, gens):
            rep.field(f"class {name}", _describe_2d(g))
        from .bieberbach import compose

        rep.field(
            f"class {names2[0]} {names2[0]}",
            _describe_2d(compose(gens[0], gens[0])),
        )
    ok = cons.ok and free.ok and tile.status != "fail"
    rep.field("verdict", "valid" if ok else "invalid")
    return 0 if ok else 1


def _describe_2d(g) -> str:
    c = classify_isometry_2d(g)
    if c.kind == "identity":
        return "identity"
    if c.kind == "translation":
        return f"translation ({c.translation[0]},{c.translation[1]})"
    return (
        f"glide-reflection axis a1-a2={c.axis_offset} "
        f"glide=({c.glide_vector[0]},{c.glide_vector[1]})"
    )


def cmd_orbits(args, rep: Reporter) -> int:
    p, r, names = load_input(args.file)
    r = _pairmap(p, r)
    report = classify_orbits3(r)
    for o in report.orbits:
        members = ", ".join(format_word(w, names) for w in o.elements)
        rep.field(f"orbit {o.kind} size {o.size}", members)
    rep.field(
        "counts",
        f"A={report.count('A')} B={report.count('B')} C={report.count('C')}",
    )
    rep.field("identity", report.identity)
    rep.check("star-census", report.star_census)
    if p is not None:
        sr = star_report(p)
        if sr.all_star_ok() and not report.star_census.ok:
            return 1
    return 0


def cmd_enumerate(args, rep: Reporter) -> int:
    census = enumerate_solutions(args.n)
    rep.field("n", census.n)
    rep.field("solutions", census.raw_count)
    rep.field("classes", census.class_count)
    if args.list:
        for k, sol in enumerate(census.class_reps, start=1):
            entries = "; ".join(
                f"{a} {b} -> {c} {d}" for (a, b), (c, d) in sol.pairs()
            )
            rep.field(f"class {k}", entries)
    return 0


def _sigma(args) -> Perm | None:
    if not getattr(args, "sigma", None):
        return None
    try:
        return Perm(tuple(int(tok) for tok in args.sigma.split(",")))
    except ValueError as exc:
        raise InputError(f"bad --sigma value {args.sigma!r}: {exc}") from None


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="itype", description=__doc__.split("\n")[0])
    ap.add_argument("--format", choices=("plain", "machine"), default="plain")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn):
        sp = sub.add_parser(name)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("check", cmd_check)
    sp.add_argument("file")

    sp = add("build", cmd_build)
    sp.add_argument("file")
    sp.add_argument("--degree", type=int, default=8)
    sp.add_argument("--sigma", default="")

    sp = add("normalize", cmd_normalize)
    sp.add_argument("file")
    sp.add_argument("word")
    sp.add_argument("--degree", type=int, default=8)

    sp = add("equal", cmd_equal)
    sp.add_argument("file")
    sp.add_argument("word1")
    sp.add_argument("word2")
    sp.add_argument("--degree", type=int, default=8)

    sp = add("phi", cmd_phi)
    sp.add_argument("file")
    sp.add_argument("--degree", type=int, default=8)

    sp = add("bieberbach", cmd_bieberbach)
    sp.add_argument("file")
    sp.add_argument("--degree", type=int, default=8)
    sp.add_argument("--radius", type=int, default=2)
    sp.add_argument("--length", type=int, default=6)

    sp = add("orbits", cmd_orbits)
    sp.add_argument("file")

    sp = add("enumerate", cmd_enumerate)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--list", action="store_true")
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    rep = Reporter(args.format)
    try:
        return args.fn(args, rep)
    except (InputError, DegreeBoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AxiomError, ConsistencyError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
