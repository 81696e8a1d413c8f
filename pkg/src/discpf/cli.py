"""Command-line front end.

Exit codes: 0 success, 1 domain failure (validation or verification), 2 I/O or
parse failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import constructions, selftest
from .errors import DiscpfError, FormatError, NotAGroup, NotMonic
from .ring_core import discriminant, dumps_ring, gram_matrix, load_ring, make_unital
from .stickelberger import Certificate, discriminant_pfaffian, stickelberger_check, verify_certificate

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_validate(args) -> int:
    ring = load_ring(args.path)
    if args.json:
        print(json.dumps({"valid": True, "rank": ring.rank, "unital": ring.unital}))
    else:
        print(f"valid ring of rank {ring.rank}" + (" (unital framing)" if ring.unital else ""))
    return EXIT_OK


def cmd_disc(args) -> int:
    d = discriminant(load_ring(args.path))
    if args.json:
        print(json.dumps({"disc": str(d), "disc_mod_4": d % 4}))
    else:
        print(f"disc = {d}, disc mod 4 = {d % 4}")
    return EXIT_OK


def cmd_gram(args) -> int:
    B = gram_matrix(load_ring(args.path))
    if args.json:
        print(json.dumps([[str(x) for x in row] for row in B.rows]))
    else:
        print(B)
    return EXIT_OK


def cmd_dpf(args) -> int:
    ring, _ = make_unital(load_ring(args.path))
    v = discriminant_pfaffian(gram_matrix(ring))
    if args.json:
        print(json.dumps({"dpf": str(v), "dpf_sq_mod_4": v * v % 4}))
    else:
        print(f"dpf = {v}, dpf^2 mod 4 = {v * v % 4}")
    return EXIT_OK


def cmd_certificate(args) -> int:
    ring = load_ring(args.path)
    cert = stickelberger_check(ring, name=os.path.basename(args.path))
    _emit(cert.dumps(), args.out)
    if args.out is not None:
        print(f"disc = {cert.disc_value}, disc mod 4 = {cert.residue}, certificate written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.cert) as fh:
        cert = Certificate.loads(fh.read())
    result = verify_certificate(cert, load_ring(args.path))
    if args.json:
        print(json.dumps({"verified": result.ok, "reason": result.reason}))
    elif result:
        print("certificate verified")
    else:
        print(f"verification failed: {result.reason}")
    return EXIT_OK if result else EXIT_DOMAIN


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "sqrt":
        ring = constructions.sqrt_ring(args.d)
    elif kind == "quadratic":
        ring = constructions.quadratic_ring(args.b, args.c)
    elif kind == "monogenic":
        try:
            coeffs = [int(x) for x in args.coeffs.split(",")]
        except ValueError:
            raise FormatError(f"--coeffs must be comma-separated integers, got {args.coeffs!r}")
        ring = constructions.monogenic_ring(coeffs)
    elif kind == "matrix":
        ring = constructions.matrix_ring(args.m)
    elif kind == "hurwitz":
        ring = constructions.hurwitz_quaternions()
    elif kind == "group":
        if args.cayley:
            with open(args.cayley) as fh:
                table = json.load(fh)
        elif args.name in constructions.NAMED_GROUPS:
            table = constructions.NAMED_GROUPS[args.name]()
        else:
            raise NotAGroup(f"unknown group {args.name!r}; known: {', '.join(constructions.NAMED_GROUPS)}")
        ring = constructions.group_ring(table)
    elif kind == "product":
        ring = constructions.direct_product(load_ring(args.left), load_ring(args.right))
    else:
        ring = constructions.random_ring(args.seed, args.max_rank)
    _emit(dumps_ring(ring), args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = selftest.run(args.seed, args.count)
    if args.json:
        print(json.dumps([{"suite": r.name, "passed": r.passed, "total": r.total} for r in results]))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'}  {r.name.ljust(width)}  {r.passed}/{r.total}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="discpf",
        description="Discriminants, discriminant pfaffians and mod-4 certificates for rings of finite rank.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def ring_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("path", help="ring JSON file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    ring_cmd("validate", cmd_validate, "check associativity and the identity")
    ring_cmd("disc", cmd_disc, "print the discriminant and its residue mod 4")
    ring_cmd("gram", cmd_gram, "print the Gram matrix of the trace pairing")
    ring_cmd("dpf", cmd_dpf, "print the discriminant pfaffian of a unital framing")
    sp = ring_cmd("certificate", cmd_certificate, "emit a mod-4 certificate")
    sp.add_argument("--out", help="write the certificate here instead of stdout")

    sp = sub.add_parser("verify", help="replay a certificate against its ring")
    sp.add_argument("cert")
    sp.add_argument("path")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="write an example ring file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    for name in ("sqrt", "quadratic", "monogenic", "matrix", "hurwitz", "group", "product", "random"):
        g = gsub.add_parser(name)
        g.add_argument("--out", help="output path (default: stdout)")
        g.set_defaults(func=cmd_gen)
        if name == "sqrt":
            g.add_argument("--d", type=int, required=True)
        elif name == "quadratic":
            g.add_argument("--b", type=int, required=True)
            g.add_argument("--c", type=int, required=True)
        elif name == "monogenic":
            g.add_argument("--coeffs", required=True, help="c0,c1,...,1 (constant term first)")
        elif name == "matrix":
            g.add_argument("--m", type=int, required=True)
        elif name == "group":
            g.add_argument("--name", default="C2", help=f"one of {', '.join(constructions.NAMED_GROUPS)}")
            g.add_argument("--cayley", help="JSON file with a Cayley table of indices")
        elif name == "product":
            g.add_argument("left")
            g.add_argument("right")
        elif name == "random":
            g.add_argument("--seed", type=int, default=selftest.DEFAULT_SEED)
            g.add_argument("--max-rank", type=int, default=12)

    sp = sub.add_parser("selftest", help="run the randomized oracle and congruence battery")
    sp.add_argument("--seed", type=int, default=selftest.DEFAULT_SEED)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DiscpfError, NotMonic, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
