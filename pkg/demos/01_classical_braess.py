"""
The classical Braess network
============================

Six cars drive from A to D. Two routes of equal cost exist; adding a cheap
B-C shortcut makes everyone slower once each driver chooses selfishly.
"""

from qbraess.traffic import PATHS, path_time, traffic_nash

# Without the shortcut the cars split evenly.
alloc, avg = traffic_nash(6, with_link5=False)
print("without link 5:", dict(zip(PATHS, alloc)), "average time", avg)

# With it, two cars take each route and every car pays 92.
alloc, avg = traffic_nash(6, with_link5=True)
print("with link 5:   ", dict(zip(PATHS, alloc)), "average time", avg)
for path in PATHS:
    print(f"  {path:5s} {path_time(alloc, path)}")

# The shortcut is tempting for a lone driver even at the old equilibrium.
print("one car on ABCD next to (3, 3):", path_time((3, 2, 1), "ABCD"), "vs 83")
