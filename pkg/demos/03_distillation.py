"""
Deterministic distillation
==========================

2N copies of the pure link can be concentrated into fewer, better copies.
With alpha = 2^(-1/4), N of them are already Bell pairs. Nielsen's
majorization test confirms each transform is achievable by LOCC.
"""

from qbraess import distilled_alpha, distilled_concurrence, majorization_feasible, tensor_spectrum

alpha = 2**-0.25
N = 3
src = tensor_spectrum(alpha**2, 2 * N)
print(" m  alpha'     C'        feasible")
for m in range(N, 2 * N + 1):
    a = distilled_alpha(alpha, 2 * N, m)
    tgt = tensor_spectrum(a * a, m)
    print(f"{m:2d}  {a:.6f}  {distilled_concurrence(alpha, 2 * N, m):.6f}  {majorization_feasible(src, tgt)}")

# N + 1 Bell pairs would need more entanglement than 2N copies hold.
print("2N copies -> N + 1 Bell pairs:", majorization_feasible(src, tensor_spectrum(0.5, N + 1)))
