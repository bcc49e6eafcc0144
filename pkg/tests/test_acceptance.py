"""
Acceptance suite: ten criteria, exact equality throughout. Each test prints
one PASS/FAIL line (visible with ``pytest -s`` or when run as a script).
"""

import random
import time

from ogsbn import (
    OgsExponents, SignedPermutation, bfs, compose, descent_laws_check, descents, elementary_factorize,
    eval_word, from_ogs, generator, greedy_reduce, identity, is_elementary, is_in_sdot, length, length_sdot,
    normal_form, t_to_tau, tau_to_t, to_ogs, uv_factorize,
)
from ogsbn.metrics import NormalForm
from ogsbn.ogs import all_exponent_vectors, exchange_report, exchange_tau, tau_power
from ogsbn.sn import all_sdot, all_sn_exponent_vectors, exchange_t_report, to_sn_ogs

_TABLES = {}


def table(n):
    if n not in _TABLES:
        _TABLES[n] = bfs(n)
    return _TABLES[n]


def tau(n, *factors):
    return OgsExponents.from_factors(n, factors)


def report(number, title, failures, cases, started):
    ok = not failures
    status = "PASS" if ok else "FAIL"
    print(f"\n[{status}] criterion {number}: {title} ({cases} cases, {time.perf_counter() - started:.2f}s)")
    for f in failures[:5]:
        print(f"    counterexample: {f}")
    assert ok, failures[:5]


def test_criterion_01_canonical_form_bijection():
    t0 = time.perf_counter()
    failures, cases = [], 0
    for n in range(1, 6):
        seen = set()
        for e in all_exponent_vectors(n):
            cases += 1
            w = from_ogs(e)
            if w.window in seen or to_ogs(w) != e:
                failures.append(str(e))
            seen.add(w.window)
        expected = 2 ** n
        for k in range(1, n + 1):
            expected *= k
        if len(seen) != expected:
            failures.append(f"rank {n}: {len(seen)} elements, expected {expected}")
    report(1, "exponent vectors enumerate B_1..B_5 exactly once", failures, cases, t0)


def test_criterion_02_exchange_laws_rank6():
    t0 = time.perf_counter()
    n = 6
    failures, cases = [], 0
    for q in range(2, n + 1):
        for p in range(1, q):
            for r_q in range(-q, q):
                for r_p in range(-p, p):
                    if not (r_q and r_p):
                        continue
                    cases += 1
                    semantic = to_ogs(compose(tau_power(q, r_q, n), tau_power(p, r_p, n)))
                    res = exchange_report(q, r_q, p, r_p, n)
                    if exchange_tau(q, r_q, p, r_p, n) != semantic or not res.agrees:
                        failures.append((q, r_q, p, r_p, res.case, str(res.formula), str(semantic)))
    report(2, "tau exchange table equals composition for every rank 6 tuple", failures, cases, t0)


def test_criterion_03_sn_exchange_laws_rank7():
    t0 = time.perf_counter()
    n = 7
    failures, cases = [], 0
    for q in range(3, n + 1):
        for p in range(2, q):
            for i_q in range(1, q):
                for i_p in range(1, p):
                    cases += 1
                    t_q = eval_word(list(range(1, q)) * i_q, n)
                    t_p = eval_word(list(range(1, p)) * i_p, n)
                    semantic = to_sn_ogs(compose(t_q, t_p))
                    res = exchange_t_report(q, i_q, p, i_p, n)
                    if res.formula != semantic or res.semantic != semantic:
                        failures.append((q, i_q, p, i_p, res.case, str(res.formula), str(semantic)))
    report(3, "t exchange table equals unsigned composition for every rank 7 tuple", failures, cases, t0)


def test_criterion_04_worked_examples():
    t0 = time.perf_counter()
    checks = []

    checks.append(("canonical form of [-2,-1,-4,-3]",
                   to_ogs(SignedPermutation((-2, -1, -4, -3))).exps, (-1, 1, -1, -3)))

    nf_word = NormalForm.from_y((1, 3, 0, 4, 7, 3)).word.evaluate()
    nf = normal_form(nf_word)
    checks.append(("normal form y-vector", nf.y, (1, 3, 0, 4, 7, 3)))
    checks.append(("normal form length", (nf.length, len(greedy_reduce(nf_word))), (18, 18)))

    big = tau(13, (9, -8), (10, 1), (11, -3), (13, 10))
    checks.append(("rank 13 window", from_ogs(big).window, (1, 5, 7, 8, 9, 10, 11, 12, 13, 4, 6, 2, 3)))
    checks.append(("rank 13 membership", is_in_sdot(big), True))

    elem = tau(10, (6, -5), (8, 2), (9, 2), (10, 1))
    checks.append(("elementary window", from_ogs(elem).window, (1, 4, 5, 7, 8, 10, 2, 3, 6, 9)))
    checks.append(("elementary descents", sorted(descents(from_ogs(elem))), [6]))
    checks.append(("elementary test", is_elementary(elem), True))
    checks.append(("t form", str(tau_to_t(elem)), "t6^1*t8^2*t9^2*t10^1"))

    fac = elementary_factorize(tau(12, (5, -3), (7, 2), (8, -4), (9, 4), (11, -3), (12, 4)))
    checks.append(("elementary factorization", (fac.z, [str(f) for f in fac.factors]),
                   (3, ["tau5^-3*tau7^2*tau8^1", "tau8^-5*tau9^4*tau11^1", "tau11^-4*tau12^4"])))

    uv = uv_factorize(tau(9, (3, 2), (4, 3), (5, -2), (7, 4), (8, 2), (9, 4)))
    checks.append(("uv factorization, rank 9", ([str(u) for u in uv.us], uv.ps),
                   (["e", "tau2^-2*tau3^2", "tau4^-1*tau5^-2*tau7^3", "tau7^-6*tau8^2*tau9^4"], (2, 4, 7))))
    uv5 = uv_factorize(tau(5, (2, 1), (3, 1), (4, 3), (5, 2)))
    checks.append(("uv factorization, rank 5", ([str(u) for u in uv5.us], uv5.ps),
                   (["e", "tau1^-1*tau2^1", "tau2^-2*tau3^1*tau4^1", "tau4^-2*tau5^2"], (1, 2, 4))))

    checks.append(("length 13", length(tau(5, (2, 1), (3, 1), (4, 3), (5, 2))), 13))

    d1 = descents(from_ogs(tau(5, (3, -2), (4, -1), (5, 3))))
    checks.append(("descents {3,4}", sorted(d1), [3, 4]))
    d2 = descents(compose(tau_power(8, -8, 10), from_ogs(tau(10, (8, -8), (9, 4), (10, 4)))))
    checks.append(("descents {0..7}", sorted(d2), list(range(8))))
    d3 = descents(compose(from_ogs(tau(5, (3, -1), (4, -2), (5, 3))), tau_power(5, -5, 5)))
    checks.append(("descents {0,1,2}", sorted(d3), [0, 1, 2]))

    failures = [(name, got, want) for name, got, want in checks if got != want]
    report(4, "worked examples reproduced exactly", failures, len(checks), t0)


def test_criterion_05_three_way_length():
    t0 = time.perf_counter()
    failures, cases = [], 0
    for n in (4, 5):
        t = table(n)
        for e in all_exponent_vectors(n):
            cases += 1
            w = from_ogs(e)
            got = (length(e), normal_form(w).length, len(greedy_reduce(w)), t.length(w))
            if len(set(got)) != 1:
                failures.append((str(e), got))
    for k in range(1, 6):
        cases += 1
        got = (length(tau(k, (k, -k))), table(k).length(tau_power(k, -k, k)))
        if got != (k * k, k * k):
            failures.append((f"tau{k}^-{k}", got))
    report(5, "formula, normal form, greedy and BFS lengths agree on B_4 and B_5", failures, cases, t0)


def test_criterion_06_sdot_length():
    t0 = time.perf_counter()
    t = table(5)
    elements = list(all_sdot(5))
    failures = [(str(e), length_sdot(e), t.length(from_ogs(e)))
                for e in elements if length_sdot(e) != t.length(from_ogs(e))]
    if len(elements) != 120:
        failures.append(f"{len(elements)} elements, expected 120")
    report(6, "sum k*i_k equals BFS length on the parabolic S_5", failures, len(elements), t0)


def test_criterion_07_sdot_membership():
    t0 = time.perf_counter()
    failures, cases = [], 0
    for n in range(1, 6):
        for e in all_exponent_vectors(n):
            cases += 1
            if is_in_sdot(e) != all(x > 0 for x in from_ogs(e).window):
                failures.append(str(e))
    images = set()
    for e in all_sdot(5):
        cases += 1
        s = tau_to_t(e)
        images.add(s)
        if t_to_tau(s) != e:
            failures.append(f"roundtrip {e}")
    if images != set(all_sn_exponent_vectors(5)):
        failures.append("tau to t is not onto")
    report(7, "membership test matches positive windows; tau/t round trip on S_5", failures, cases, t0)


def test_criterion_08_elementary_factorization():
    t0 = time.perf_counter()
    failures, cases = [], 0
    for e in all_sdot(6):
        cases += 1
        f = elementary_factorize(e)
        acc = identity(6)
        for x in f.factors:
            acc = compose(acc, from_ogs(x))
        negatives = sum(1 for _, x in e.nonzero() if x < 0)
        if f.z != negatives or not all(is_elementary(x) for x in f.factors) or acc != from_ogs(e):
            failures.append(str(e))
    report(8, "elementary factorization on all 720 elements of the parabolic S_6", failures, cases, t0)


def _uv_ok(e):
    f = uv_factorize(e)
    return (to_ogs(f.permutation()) == e
            and all(a < b for a, b in zip(f.ps, f.ps[1:]))
            and all(is_in_sdot(u) for u in f.us)
            and f.window_ok())


def test_criterion_09_uv_factorization():
    t0 = time.perf_counter()
    failures, cases = [], 0
    for e in all_exponent_vectors(4):
        cases += 1
        if not _uv_ok(e):
            failures.append(str(e))
    rng = random.Random(2024)
    for _ in range(10_000):
        cases += 1
        e = OgsExponents(tuple(rng.randrange(-k, k) for k in range(1, 9)))
        if not _uv_ok(e):
            failures.append(str(e))
    report(9, "u·v factorization on B_4 and 10^4 random elements of B_8", failures, cases, t0)


def test_criterion_10_descents():
    t0 = time.perf_counter()
    failures, cases = [], 0
    for u in all_sdot(5):
        cases += 1
        if set(descents(from_ogs(u))) != {k for k, x in u.nonzero() if x < 0} or not descent_laws_check("sdot", u):
            failures.append(f"sdot {u}")
    for k in range(1, 6):
        cases += 1
        if sorted(descents(tau_power(k, -k, k))) != list(range(k)):
            failures.append(f"tau{k}^-{k}")
    for n in range(1, 6):
        for u in all_sdot(n):
            support = u.support()
            for a in range(1, n + 1):
                if not support or support[0] >= a:
                    cases += 1
                    if not descent_laws_check("v_then_u", a, u):
                        failures.append(f"v_then_u a={a} {u}")
                if not support or support[-1] <= a:
                    cases += 1
                    if not descent_laws_check("u_then_v", u, a):
                        failures.append(f"u_then_v p={a} {u}")
    t = table(4)
    for e in all_exponent_vectors(4):
        cases += 1
        w = from_ogs(e)
        left = {i for i in range(4) if t.length(compose(generator(i, 4), w)) < t.length(w)}
        if set(descents(w)) != left:
            failures.append(f"left descents {w}")
    report(10, "descent characterizations", failures, cases, t0)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
