"""Independent reference computations shared by the test modules.

Nothing here imports ``qbraess``. Values come from the piecewise textbook
formulas evaluated in 30-digit arithmetic, or from brute-force enumeration.
"""
import itertools
from fractions import Fraction

from mpmath import mp, mpf, sqrt

mp.dps = 30

ALPHA = mpf(2) ** mpf("-0.25")


def ref_pure(alpha):
    alpha = mpf(alpha)
    return 2 * alpha * sqrt(1 - alpha**2)


def ref_werner(p):
    return (3 * mpf(p) - 1) / 2


def ref_distilled_edge(n_half, load):
    """Pure edge with source alpha = 2^-1/4, 2N copies, ``load`` swaps."""
    if load <= n_half:
        a = 1 / sqrt(2)
    else:
        a = (1 / sqrt(2)) ** (mpf(n_half) / load)
    return 2 * a * sqrt(1 - a * a)


def ref_paths(n_half, p, x, y, z):
    c_ac = ref_distilled_edge(n_half, x + y)
    c_db = ref_distilled_edge(n_half, x + z)
    cw = ref_werner(p)
    return {"ACDB": c_ac * c_db, "ACB": c_ac * cw, "ADB": cw * c_db}


def ref_average(n_half, p, x, y, z):
    c = ref_paths(n_half, p, x, y, z)
    return (x * c["ACDB"] + y * c["ACB"] + z * c["ADB"]) / (2 * n_half)


def ref_is_nash(n_half, p, alloc, with_cd=True):
    """Brute-force: try every single-swap move, recomputing all loads."""
    names = ("ACDB", "ACB", "ADB")
    counts = dict(zip(names, alloc))
    allowed = names if with_cd else names[1:]
    for src in allowed:
        if counts[src] == 0:
            continue
        cur = ref_paths(n_half, p, *alloc)[src]
        for dst in allowed:
            if dst == src:
                continue
            moved = dict(counts)
            moved[src] -= 1
            moved[dst] += 1
            new = ref_paths(n_half, p, moved["ACDB"], moved["ACB"], moved["ADB"])[dst]
            if new > cur + mpf("1e-12"):
                return False
    return True


def ref_tensor_spectrum(alpha_sq, n):
    """Every n-fold product of single-copy weights, exact when given Fractions."""
    single = (alpha_sq, 1 - alpha_sq)
    out = []
    for combo in itertools.product(single, repeat=n):
        v = 1
        for w in combo:
            v *= w
        out.append(v)
    return sorted(out, reverse=True)


def ref_majorized(source, target):
    size = max(len(source), len(target))
    s = sorted(source, reverse=True) + [0] * (size - len(source))
    t = sorted(target, reverse=True) + [0] * (size - len(target))
    acc_s = acc_t = 0
    for a, b in zip(s, t):
        acc_s += a
        acc_t += b
        if acc_t < acc_s - 1e-10:
            return False
    return True


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
