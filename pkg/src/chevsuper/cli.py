import argparse
import csv
import io
import json
import os
import random
import re
import sys
from fractions import Fraction

from .errors import (IntegralityViolation, InvalidFamily, NotAChevalleyBasis,
                     NotARoot)
from .exactlin import RatLattice
from .grassmann import GrassmannAlgebra
from .heisenberg import (heisenberg_build, heisenberg_group_commutators,
                         heisenberg_verify)
from .liesuper import (admissible_lattice_check, build_chevalley_basis,
                       coroot_lattice, defining_weights, jacobi_check,
                       kostant_monomial_action, random_pbw_monomial,
                       stabilizer_cartan, structure_constants,
                       verify_cartan_candidate)
from .rootdata import form
from .scalars import QQ, parse_field
from .supergroup import (ChevalleyGroup, EvenRoot, GammaRoot, GeneratorWord,
                         OddRoot, Torus, check_commutator_formulas, eval_word,
                         insert_cancelling_pair, normal_form, random_word,
                         reconstruct, uniqueness_probe)

FAMILIES = ["A(1,0)", "A(2,1)", "A(0,2)", "B(0,1)", "B(1,1)", "B(2,1)",
            "C(2)", "C(3)", "D(2,1)"]
SUITES = ["jacobi", "integrality", "commutators", "normalform", "kostant"]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--field",
                        default=os.environ.get("CHEVSUPER_FIELD", "rational"),
                        help="rational or mod:<p> with p > 3 prime")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(
        prog="chevsuper", parents=[common],
        description="integral bases and supergroup elements for sl(m|n) and osp(M|2n)")
    sub = p.add_subparsers(dest="command", required=True)

    roots = sub.add_parser("roots", parents=[common], help="root system data")
    roots.add_argument("family")

    basis = sub.add_parser("basis", parents=[common],
                           help="Cartan elements and root vectors")
    basis.add_argument("family")

    consts = sub.add_parser("constants", parents=[common],
                            help="structure constant table")
    consts.add_argument("family")

    verify = sub.add_parser("verify", parents=[common],
                            help="run verification suites")
    verify.add_argument("family")
    verify.add_argument("--suite", choices=SUITES + ["all"], default="all")
    verify.add_argument("--words", type=int, default=50,
                        help="random words / monomials per randomized suite")

    nf = sub.add_parser("normalform", parents=[common],
                        help="canonical factorization of a word")
    nf.add_argument("family")
    nf.add_argument("--word", required=True,
                    help="space-separated xe:<root>:<t> xo:<root>:<odd> "
                         "xg:<root>:<odd>:<even> h:<root>:<t> tokens")

    heis = sub.add_parser("heisenberg", parents=[common],
                          help="odd Heisenberg representation")
    heis.add_argument("--n", type=int, default=1)
    heis.add_argument("--a", type=int, default=1)

    lat = sub.add_parser("lattice", parents=[common],
                         help="stabilizer and coroot lattices")
    lat.add_argument("family")
    return p


def _field(parser, args):
    try:
        return parse_field(args.field)
    except ValueError as e:
        parser.error(str(e))


def _basis(parser, name):
    try:
        return build_chevalley_basis(name)
    except (InvalidFamily, NotAChevalleyBasis) as e:
        parser.error(str(e))


def _fr(x):
    f = Fraction(x)
    return int(f) if f.denominator == 1 else str(f)


# -- suites ---------------------------------------------------------------

def _suite_jacobi(cb, rng, field, words):
    try:
        n = jacobi_check(cb)
        return [{"id": "jacobi-exhaustive", "status": "pass",
                 "detail": "%d ordered triples" % n}]
    except Exception as e:
        return [{"id": "jacobi-exhaustive", "status": "fail", "detail": str(e)}]


def _suite_integrality(cb, rng, field, words):
    cases = []
    try:
        for entry in cb.verify():
            cases.append({"id": "basis-" + entry["check"], "status": "pass",
                          "detail": ", ".join("%s=%s" % (k, v)
                                              for k, v in sorted(entry.items())
                                              if k not in ("check", "status"))})
    except Exception as e:
        cases.append({"id": "basis-conditions", "status": "fail", "detail": str(e)})
    if str(cb.family) == "B(0,1)":
        rep = verify_obstruction_osp12()
        cases.extend(rep["cases"])
    return cases


def _suite_commutators(cb, rng, field, words):
    try:
        rep = check_commutator_formulas(cb, field)
    except Exception as e:
        return [{"id": "commutator-formulas", "status": "fail", "detail": str(e)}]
    cases = []
    for item in (1, 2, 3, 4):
        rows = [r for r in rep if r["item"] == item]
        cases.append({"id": "commutator-item-%d" % item, "status": "pass",
                      "detail": "%d pairs" % len(rows)})
    return cases


def _suite_normalform(cb, rng, field, words):
    cases = []
    bad = None
    probes = 0
    try:
        for k in range(words):
            alg = GrassmannAlgebra(12, field)
            g = ChevalleyGroup(cb, alg)
            w, used = random_word(cb, rng, alg)
            m = eval_word(g, w)
            nf = normal_form(g, w)
            if reconstruct(g, nf) != m:
                bad = "reconstruction differs at word %d" % k
                break
            if not m.degenerate().is_block_diagonal():
                bad = "degeneration not block diagonal at word %d" % k
                break
            if k % 4 == 0:
                w2, _ = insert_cancelling_pair(w, rng, cb, alg, used)
                if not uniqueness_probe(g, w, w2)["identical"]:
                    bad = "normal forms differ at probe %d" % k
                    break
                probes += 1
    except Exception as e:
        bad = str(e)
    if bad is None:
        cases.append({"id": "factorization-roundtrip", "status": "pass",
                      "detail": "%d words, %d probes" % (words, probes)})
        cases.append({"id": "degeneration-block-diagonal", "status": "pass",
                      "detail": "%d words" % words})
    else:
        cases.append({"id": "factorization-roundtrip", "status": "fail",
                      "detail": bad})
    return cases


def _suite_kostant(cb, rng, field, words):
    cases = []
    dim = cb.p + cb.q
    std = [[1 if v == u else 0 for v in range(dim)] for u in range(dim)]
    try:
        for k in range(words):
            factors = random_pbw_monomial(cb, rng)
            vec = [rng.randint(-4, 4) for _ in range(dim)]
            kostant_monomial_action(cb, factors, vec)
        cases.append({"id": "monomial-integrality", "status": "pass",
                      "detail": "%d monomials" % words})
    except Exception as e:
        cases.append({"id": "monomial-integrality", "status": "fail",
                      "detail": str(e)})
    try:
        ok = admissible_lattice_check(cb, std)
        cases.append({"id": "standard-lattice-admissible",
                      "status": "pass" if ok else "fail",
                      "detail": "stable" if ok else "not stable"})
    except Exception as e:
        cases.append({"id": "standard-lattice-admissible", "status": "fail",
                      "detail": str(e)})
    return cases


_SUITE_FUNCS = {"jacobi": _suite_jacobi, "integrality": _suite_integrality,
                "commutators": _suite_commutators,
                "normalform": _suite_normalform, "kostant": _suite_kostant}


def verify_obstruction_osp12():
    """The rank-one orthosymplectic algebra admits no smaller or larger
    Cartan choice: halving trips integrality, doubling loses the coroot
    span, the standard five-element basis passes."""
    cb = build_chevalley_basis("B(0,1)")
    h = cb.coroot_matrix("2d1")
    cases = []
    try:
        verify_cartan_candidate(cb, [h.scale(Fraction(1, 2))])
        cases.append({"id": "osp12-half-cartan", "status": "fail",
                      "detail": "no integrality violation raised"})
    except IntegralityViolation as e:
        ok = e.witness == Fraction(1, 2)
        cases.append({"id": "osp12-half-cartan",
                      "status": "pass" if ok else "fail",
                      "detail": "witness %s" % e.witness})
    try:
        verify_cartan_candidate(cb, [h.scale(2)])
        cases.append({"id": "osp12-doubled-cartan", "status": "fail",
                      "detail": "span failure not detected"})
    except NotAChevalleyBasis as e:
        cases.append({"id": "osp12-doubled-cartan", "status": "pass",
                      "detail": str(e)})
    try:
        verify_cartan_candidate(cb, [h])
        same = cb.coroot_matrix("d1") == cb.coroot_matrix("2d1")
        cases.append({"id": "osp12-standard-cartan",
                      "status": "pass" if same else "fail",
                      "detail": "H_d1 = H_2d1" if same else "coroots differ"})
    except Exception as e:
        cases.append({"id": "osp12-standard-cartan", "status": "fail",
                      "detail": str(e)})
    return {"family": "B(0,1)", "cases": cases}


# -- commands -------------------------------------------------------------

def cmd_roots(parser, args):
    cb = _basis(parser, args.family)
    rs = cb.system
    rows = []
    for r in rs.sorted_roots():
        rows.append({"root": str(r), "coords": list(r.coords),
                     "parity": rs.parity(r), "positive": r.is_positive(),
                     "isotropic": rs.is_isotropic(r)})
    simple = rs.simple_system()
    gram = [[_fr(form(a, b)) for b in simple] for a in simple]
    out = {"family": str(cb.family), "n_eps": rs.n_eps, "n_delta": rs.n_delta,
           "roots": rows, "simple": [str(s) for s in simple],
           "coroots": {str(r): [_fr(c) for c in rs.coroot(r)]
                       for r in rs.sorted_roots()},
           "simple_gram": gram}
    flat = [{"root": row["root"], "coords": " ".join(map(str, row["coords"])),
             "parity": row["parity"], "positive": row["positive"],
             "isotropic": row["isotropic"]} for row in rows]
    return out, flat, 0


def cmd_basis(parser, args):
    cb = _basis(parser, args.family)
    out = {"family": str(cb.family), "p": cb.p, "q": cb.q,
           "cartan": [[[_fr(v) for v in row] for row in h.dense()]
                      for h in cb.cartan],
           "root_vectors": {str(r): [[_fr(v) for v in row]
                                     for row in cb.vector(r).dense()]
                            for r in cb.roots()}}
    return out, None, 0


def cmd_constants(parser, args):
    cb = _basis(parser, args.family)
    table = structure_constants(cb)
    out = {"family": str(cb.family), "constants": table.rows}
    return out, table.rows, 0


def cmd_verify(parser, args):
    field = _field(parser, args)
    cb = _basis(parser, args.family)
    names = SUITES if args.suite == "all" else [args.suite]
    cases = []
    for name in names:
        rng = random.Random(args.seed)
        cases.extend(_SUITE_FUNCS[name](cb, rng, field, args.words))
    failed = any(c["status"] != "pass" for c in cases)
    out = {"suite": args.suite, "family": str(cb.family),
           "field": getattr(field, "name", "rational"), "seed": args.seed,
           "cases": cases}
    flat = [{"id": c["id"], "status": c["status"], "detail": c["detail"]}
            for c in cases]
    return out, flat, 1 if failed else 0


_TH_RE = re.compile(r"th(\d+)")


def cmd_normalform(parser, args):
    field = _field(parser, args)
    cb = _basis(parser, args.family)
    indices = [int(m) for m in _TH_RE.findall(args.word)]
    alg = GrassmannAlgebra(max(indices + [4]), field)
    g = ChevalleyGroup(cb, alg)
    try:
        word = parse_word(cb, alg, args.word)
        nf = normal_form(g, word)
    except (ValueError, TypeError) as e:
        parser.error(str(e))
    out = {"family": str(cb.family),
           "g0": [[e.text() for e in row] for row in nf.g0.rows],
           "neg": [{"root": str(r), "coeff": c.text()} for r, c in nf.neg],
           "pos": [{"root": str(r), "coeff": c.text()} for r, c in nf.pos]}
    return out, None, 0


def cmd_heisenberg(parser, args):
    if args.n < 1:
        parser.error("need n >= 1")
    field = _field(parser, args)
    data = heisenberg_build(args.n, args.a)
    checks = heisenberg_verify(data)
    coms = heisenberg_group_commutators(data, GrassmannAlgebra(2, field))
    out = {"n": data.n, "a": data.a, "p": data.p, "q": data.q,
           "operators": {name: [[_fr(v) for v in row] for row in m.dense()]
                         for name, m in data.operators()},
           "checks": checks, "group_commutators": coms}
    return out, coms, 0


def cmd_lattice(parser, args):
    cb = _basis(parser, args.family)
    dim = cb.p + cb.q
    std = [[1 if v == u else 0 for v in range(dim)] for u in range(dim)]
    defining = stabilizer_cartan(cb, defining_weights(cb))
    roots_lat = stabilizer_cartan(cb, [r.coords for r in cb.roots()])
    crt = coroot_lattice(cb)
    out = {"family": str(cb.family),
           "standard_lattice_admissible": admissible_lattice_check(cb, std),
           "coroot_lattice": [[_fr(v) for v in b] for b in crt.basis()],
           "defining_stabilizer": [[_fr(v) for v in b] for b in defining.basis()],
           "root_stabilizer": [[_fr(v) for v in b] for b in roots_lat.basis()],
           "chain": {"coroots_in_defining": defining.contains_lattice(crt),
                     "defining_in_roots": roots_lat.contains_lattice(defining)}}
    return out, None, 0


def parse_word(cb, alg, text):
    factors = []
    for tok in text.split():
        parts = tok.split(":")
        kind = parts[0]
        if kind == "xe" and len(parts) == 3:
            factors.append(EvenRoot(cb.system.root(parts[1]), alg.parse(parts[2])))
        elif kind == "xo" and len(parts) == 3:
            factors.append(OddRoot(cb.system.root(parts[1]), alg.parse(parts[2])))
        elif kind == "xg" and len(parts) == 4:
            factors.append(GammaRoot(cb.system.root(parts[1]),
                                     alg.parse(parts[2]), alg.parse(parts[3])))
        elif kind == "h" and len(parts) == 3:
            factors.append(Torus(cb.system.root(parts[1]), alg.parse(parts[2])))
        else:
            raise ValueError("bad word token %r" % tok)
    return GeneratorWord(factors)


_COMMANDS = {"roots": cmd_roots, "basis": cmd_basis, "constants": cmd_constants,
             "verify": cmd_verify, "normalform": cmd_normalform,
             "heisenberg": cmd_heisenberg, "lattice": cmd_lattice}


def _emit(parser, args, out, flat):
    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True, default=str))
    elif args.format == "csv":
        if not flat:
            parser.error("csv output needs a flat table; use --format json")
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(flat[0].keys()))
        writer.writeheader()
        for row in flat:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        _emit_text(out)


def _emit_text(out, indent=0):
    pad = "  " * indent
    if isinstance(out, dict):
        for k in sorted(out):
            v = out[k]
            if isinstance(v, (dict, list)):
                print("%s%s:" % (pad, k))
                _emit_text(v, indent + 1)
            else:
                print("%s%s: %s" % (pad, k, v))
    elif isinstance(out, list):
        for v in out:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent)
            else:
                print("%s- %s" % (pad, v))
    else:
        print("%s%s" % (pad, out))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out, flat, code = _COMMANDS[args.command](parser, args)
    _emit(parser, args, out, flat)
    return code


if __name__ == "__main__":
    sys.exit(main())
