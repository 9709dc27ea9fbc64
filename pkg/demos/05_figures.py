"""
Sweeps behind the figures
=========================

The y = z sweep, the per-path concurrence surface and the paradox region over
p, all for N = 20. Plots are written next to this script when matplotlib is
available; otherwise the numbers are printed.
"""

import io
import os
import csv
from contextlib import redirect_stdout
from pathlib import Path

import numpy as np

from qbraess.cli import main
from qbraess.game import candidate_paradox_interval, paradox_interval, paradox_region


def table(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        main(list(argv))
    return list(csv.DictReader(io.StringIO(buf.getvalue())))


sweep = table("sweep-x", "--n", "20", "--p", "0.9")
x = np.array([int(r["x"]) for r in sweep])
c_mod = np.array([float(r["c_avg_modified"]) for r in sweep])
print("peak average", c_mod.max(), "at x =", x[c_mod.argmax()], "; at x = 40:", c_mod[-1])

surface = table("surface", "--n", "20", "--p", "0.9")
print("min ACDB - ADB:", min(float(r["d_acdb_adb"]) for r in surface))
print("min ACDB - ACB:", min(float(r["d_acdb_acb"]) for r in surface))

ps = [round(0.335 + 0.005 * k, 3) for k in range(134)]
scan = paradox_region(20, 2**-0.25, ps)
print("paradox for p in", paradox_interval(scan), "closed form", candidate_paradox_interval(20))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    raise SystemExit(0)

here = Path(os.environ.get("QBRAESS_FIG_DIR", Path(__file__).parent))
fig, ax = plt.subplots()
ax.plot(x, c_mod, "o-", label="with CD edge, y = z")
ax.axhline(float(sweep[0]["c_avg_original_eq"]), color="C1", label="original equilibrium")
ax.set_xlabel("swaps via ACDB")
ax.set_ylabel("average concurrence")
ax.legend()
fig.savefig(here / "sweep_x.png", dpi=120)

fig, ax = plt.subplots()
ax.plot(ps, [r.gap for _, r in scan])
ax.axhline(0, color="k", lw=0.5)
ax.set_xlabel("Werner p")
ax.set_ylabel("original - modified equilibrium average")
fig.savefig(here / "paradox_region.png", dpi=120)
print("wrote", here / "sweep_x.png", here / "paradox_region.png")
