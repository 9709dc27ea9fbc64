"""
Braess paradox in the swapping network
======================================

Alice and Bob build 2N pairs through Charlie (C) or Dave (D). Adding Bell
pairs between C and D lures every swap onto the new path A-C-D-B, and the
average concurrence drops.
"""

from qbraess import NetworkConfig, detect_braess, find_nash, social_optimum
from qbraess.game import best_response_step

config = NetworkConfig(n_half=3, p=0.9)

orig = find_nash(config.without_cd())
print("original network:", tuple(orig.allocation), f"avg {orig.avg_concurrence:.4f}")

# Follow the best-response dynamics one move at a time after adding CD.
alloc = orig.allocation
while True:
    nxt = best_response_step(config, alloc)
    if nxt == alloc:
        break
    print("  ", tuple(alloc), "->", tuple(nxt))
    alloc = nxt

mod = find_nash(config)
print("with CD edge:   ", tuple(mod.allocation), f"avg {mod.avg_concurrence:.4f}")
print("social optimum: ", *social_optimum(config))

report = detect_braess(NetworkConfig(20, 0.9))
print("N=20 paradox:", report.paradox, f"gap {report.gap:.6f}")

# At p = 1 the Werner links are perfect and nobody wants the new edge.
print("p=1 paradox: ", detect_braess(NetworkConfig(3, 1.0)).paradox)
