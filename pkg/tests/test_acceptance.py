"""Acceptance criteria, one test each, with their time budgets.

Every test appends a PASS/FAIL line to the log printed at the end of the
pytest run; ``python tests/test_acceptance.py`` prints the same lines.
"""
import io
import re
import time
from contextlib import redirect_stdout

import numpy as np

from sobrify.cli import main
from sobrify.dot import space_dot
from sobrify.generated import Window, h_lt, h_points, s_le, s_points, t_le, t_points
from sobrify.oracles import h_strict_oracle, s_strict_oracle, t_strict_oracle
from sobrify.report import CONCLUSION
from sobrify.sobrification import (
    dominated_witness_S,
    non_idempotence_witness_S,
    not_dominated_witness_H,
    verify_h_sobh,
)
from sobrify.suites import finite_core_certificates, lkey_certificate, symbolic_certificates

WINDOW = Window(4, 4, 3)


def _record(log, number, title, budget, run):
    start = time.perf_counter()
    ok, detail = run()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < budget
    log.append(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} "
               f"({elapsed:.1f}s, budget {budget}s){'' if ok else ' - ' + detail}")
    assert ok, detail
    return elapsed


def _failures(certs):
    bad = [f"{c.claim}: {f.name} {f.detail}" for c in certs for f in c.failures()]
    return not bad, "; ".join(bad)


def _axioms(points, le, strict_oracle):
    leq = np.array([[le(a, b) for b in points] for a in points])
    n = len(points)
    eye = np.eye(n, dtype=bool)
    reflexive = bool(leq.diagonal().all())
    antisymmetric = not (leq & leq.T & ~eye).any()
    composed = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    transitive = not (composed & ~leq).any()
    decomposed = np.array_equal(leq & ~eye, strict_oracle(points))
    return reflexive and antisymmetric and transitive and decomposed


def test_criterion_1_order_axioms(acceptance_log):
    def run():
        h = h_points(WINDOW)
        h_ok = _axioms(h, lambda a, b: a == b or h_lt(a, b), h_strict_oracle)
        s_ok = _axioms(s_points(WINDOW), s_le, s_strict_oracle)
        t_ok = _axioms(t_points(WINDOW), t_le, t_strict_oracle)
        return h_ok and s_ok and t_ok and len(h) == 425, f"H {h_ok}, S {s_ok}, T {t_ok}"

    _record(acceptance_log, 1, "order axioms and relation decomposition on window 4,4,3", 30, run)


def test_criterion_2_finite_sobrification(acceptance_log):
    _record(acceptance_log, 2, "200 random posets: irreducible = principal, eta iso, compact = eta(P), dominated",
            30, lambda: _failures(finite_core_certificates(seed=0, posets=200, pairs=0)[:1]))


def test_criterion_3_faithfulness(acceptance_log):
    _record(acceptance_log, 3, "100 random pairs: closed-set lattices iso iff posets iso, transport verified",
            60, lambda: _failures(finite_core_certificates(seed=1, posets=0, pairs=100)[1:]))


def test_criterion_4_certificates_and_report(acceptance_log):
    def run():
        certs = [
            not_dominated_witness_H(8),
            dominated_witness_S(8),
            non_idempotence_witness_S(8),
            verify_h_sobh(8, 2, WINDOW),
        ]
        ok, detail = _failures(certs)
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(["report"])
        concluded = buf.getvalue().rstrip().endswith(CONCLUSION)
        return ok and code == 0 and concluded, detail or f"report exit {code}, concluded {concluded}"

    _record(acceptance_log, 4, "four counterexample certificates pass and the report concludes", 60, run)


def test_criterion_5_symbolic_coherence(acceptance_log):
    _record(acceptance_log, 5, "symbolic membership, inclusion and traces match bounded oracles on window 4,4,3",
            60, lambda: _failures(symbolic_certificates(WINDOW)[:1]))


def test_criterion_6_level_counting(acceptance_log):
    def run():
        cert = lkey_certificate(WINDOW, pool_size=24, ks=(1, 2, 6))
        ok, detail = _failures([cert])
        return ok and "26 closed sets" in cert.checks[0].bound, detail

    _record(acceptance_log, 6, "t_geq_k down-closed and chain-closed, l_image = t_geq_k(C,1)", 30, run)


def _dot_graph(text):
    nodes = set(re.findall(r'^\s*"([^"]+)";$', text, re.M))
    edges = re.findall(r'^\s*"([^"]+)" -> "([^"]+)";$', text, re.M)
    return nodes, edges


def _s_expected(M, N):
    # components 0..M, each a chain 1 < ... < N < inf; point (m,n) is covered by
    # (m',inf) from another component exactly when n = min(N, m'), m' >= 1
    nodes = (M + 1) * (N + 1)
    edges = (M + 1) * N + M * M
    return nodes, edges


def test_criterion_7_dot_counts(acceptance_log):
    def run():
        bad = []
        for M, N in [(3, 3), (2, 4), (4, 2), (1, 1)]:
            nodes, edges = _s_expected(M, N)
            got = _dot_graph(space_dot("S", Window(M, N)))
            if (len(got[0]), len(got[1])) != (nodes, edges):
                bad.append(f"S {M},{N}: {len(got[0])}/{len(got[1])} vs {nodes}/{edges}")
            got = _dot_graph(space_dot("dhatS", Window(M, N)))
            if (len(got[0]), len(got[1])) != (nodes + 1, edges + M + 1):
                bad.append(f"dhatS {M},{N}")
        for N, L in [(3, 2), (2, 3), (4, 1)]:
            nodes = sum(N ** i for i in range(L + 1))
            got = _dot_graph(space_dot("T", Window(1, N, L)))
            sinks = got[0] - {a for a, _ in got[1]}
            if (len(got[0]), len(got[1])) != (nodes, nodes - 1) or sinks != {"[]"}:
                bad.append(f"T {N},{L}")
        return not bad, "; ".join(bad)

    _record(acceptance_log, 7, "DOT node and edge counts for S, dhatS, T match closed-form counts", 10, run)


if __name__ == "__main__":
    log: list[str] = []
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn(log)
            except AssertionError:
                pass
    print("\n".join(log))
