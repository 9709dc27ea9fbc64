"""
Concurrence of swapped pairs
============================

Swapping a pure link with a Werner link gives a pair whose outcome-averaged
concurrence is the product of the two. We check that by simulating the Bell
measurement on explicit density matrices.
"""

import numpy as np

from qbraess import (
    Bell,
    PureSchmidtState,
    WernerState,
    bell_swap_average_concurrence,
    concurrence_pure,
    concurrence_werner,
)
from qbraess.oracle import bell_swap_outcomes

alpha = 2**-0.25
pure, werner = PureSchmidtState(alpha), WernerState(0.9)
print("C_pure   =", concurrence_pure(alpha))
print("C_werner =", concurrence_werner(0.9))
print("product  =", concurrence_pure(alpha) * concurrence_werner(0.9))
print("oracle   =", bell_swap_average_concurrence(pure, werner))

# The four Bell outcomes, each with its probability.
for o in bell_swap_outcomes(pure, werner):
    print(f"  p={o.probability:.4f}  diag={np.round(o.post_state.diagonal().real, 4)}")

# A Bell link passes concurrence through unchanged.
print("pure x Bell:", bell_swap_average_concurrence(pure, Bell))

# Grid of deviations between the simulation and the closed form.
alphas = np.linspace(1 / np.sqrt(2), 0.99, 6)
ps = np.linspace(0.4, 1.0, 6)
dev = np.array([
    [abs(bell_swap_average_concurrence(PureSchmidtState(a), WernerState(p))
         - concurrence_pure(a) * concurrence_werner(p)) for p in ps]
    for a in alphas
])
print("max deviation over grid:", dev.max())
