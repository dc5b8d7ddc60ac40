"""Command-line entry point."""
from __future__ import annotations

import argparse
import os
import sys

from .dot import SPACES, hasse_dot, space_dot
from .errors import OrderError
from .finite import dhat_members, is_dominated, phi_psi_transport, irr_poset, prec_compact_set
from .generated import Window
from .iso import poset_iso
from .poset import enumerate_closed, read_poset, supremum
from .report import build_report
from .suites import DEFAULT_WINDOW, SUITES, run_suite


def parse_window(text: str | None, space: str = "H") -> Window:
    """``M,N,L`` in general; ``M,N`` for S and dhatS; ``N,L`` for T."""
    if text is None:
        return DEFAULT_WINDOW
    try:
        nums = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad window {text!r}") from None
    if space in ("S", "dhatS") and len(nums) == 2:
        return Window(nums[0], nums[1])
    if space == "T" and len(nums) == 2:
        return Window(1, nums[0], nums[1])
    if len(nums) == 2:
        return Window(nums[0], nums[1])
    if len(nums) != 3:
        raise argparse.ArgumentTypeError(f"window needs 2 or 3 numbers, got {text!r}")
    return Window(*nums)


def cmd_gamma(args) -> int:
    P = read_poset(args.file)
    lattice = enumerate_closed(P)
    irreducible = set(dhat_members(P))
    print(f"{len(lattice)} closed sets; {len(irreducible)} irreducible (principal)")
    for c in lattice:
        print(f"  {P.format_set(c)}{'  *irreducible' if c in irreducible else ''}")
    print(f"distributive: {'yes' if lattice.is_distributive() else 'no'}")
    return 0


def cmd_irr(args) -> int:
    P = read_poset(args.file)
    members = dhat_members(P)
    print(f"{len(members)} irreducible closed sets")
    for a in members:
        top = supremum(P, a.bits)
        print(f"  {P.format_set(a)} = down({P.labels[top]})")
    D, _ = irr_poset(P)
    print(f"compact elements: {', '.join(sorted(prec_compact_set(P)))}")
    print(f"order sobrification size: {len(D)}")
    return 0


def cmd_dominated(args) -> int:
    P = read_poset(args.file)
    result = is_dominated(P)
    print(f"dominated: {'yes' if result else 'no'}")
    if not result:
        print(f"  witness: {P.format_set(result.failing)}: {result.detail}")
    return 0


def cmd_iso(args) -> int:
    P, Q = read_poset(args.file1), read_poset(args.file2)
    w = poset_iso(P, Q)
    gw = poset_iso(enumerate_closed(P).as_poset(), enumerate_closed(Q).as_poset())
    print(f"closed-set lattices isomorphic: {'yes' if gw else 'no'}")
    if w is None:
        print("posets isomorphic: no")
        return 1
    print("posets isomorphic: yes")
    for a in P.labels:
        print(f"  {a} -> {w.forward[a]}")
    DP, DQ = irr_poset(P)[0], irr_poset(Q)[0]
    phi_psi_transport(P, Q, poset_iso(DP, DQ))
    print("phi/psi transport: verified")
    return 0


def cmd_verify(args) -> int:
    window = parse_window(args.window)
    report = run_suite(args.suite, window, args.seed)
    print(report.to_text(), end="")
    return 0 if report.passed else 1


def cmd_report(args) -> int:
    text, ok = build_report(parse_window(args.window), seed=args.seed)
    print(text, end="")
    return 0 if ok else 1


def cmd_dot(args) -> int:
    target = args.target
    if target in SPACES:
        text = space_dot(target, parse_window(args.window, target))
    else:
        if not os.path.exists(target):
            raise OrderError(f"{target!r} is neither a space ({', '.join(SPACES)}) nor a file")
        text = hasse_dot(read_poset(target), os.path.basename(target))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sobrify", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_text in [
        ("gamma", cmd_gamma, "list the closed sets of a poset file"),
        ("irr", cmd_irr, "list the irreducible closed sets of a poset file"),
        ("dominated", cmd_dominated, "check domination of a poset file"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.set_defaults(func=fn)
    p = sub.add_parser("iso", help="decide isomorphism of two poset files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_iso)
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--window")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("report", help="print the counterexample report")
    p.add_argument("--window")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_report)
    p = sub.add_parser("dot", help="emit a Hasse diagram in DOT syntax")
    p.add_argument("target", help=f"one of {', '.join(SPACES)} or a poset file")
    p.add_argument("--window")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (OrderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
