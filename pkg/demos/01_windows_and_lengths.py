"""Affine permutations: windows, matrices, length, and Bruhat order.

Run:  python3 demos/01_windows_and_lengths.py
"""

from affcells import (
    AffinePermutation,
    bruhat_leq,
    identity,
    simple_reflection,
    translation,
    window_from_matrix,
)

n = 3
print(f"Working in the affine symmetric group of period {n}.\n")

s0, s1, s2 = (simple_reflection(n, i) for i in range(3))
print("The simple generators, in window notation:")
for name, s in (("s0", s0), ("s1", s1), ("s2", s2)):
    print(f"  {name}: window {s.window}")

w = s0 * s1 * s2 * s0
print(f"\nA product s0 s1 s2 s0 has window {w.window}.")
print(f"Its affine permutation matrix:\n{w.to_matrix()!r}")
print(f"Reading the matrix back gives {window_from_matrix(w.to_matrix()).window}.")

print(f"\nLength by the closed formula:   {w.length()}")
print(f"Length by counting inversions:  {w.length_oracle()}")

tau = translation(n, (1, 0, -1))
print(f"\nThe translation diag(t, 1, t^-1) has window {tau.window} and "
      f"length {tau.length()}.")

print("\nBruhat order samples:")
print(f"  e <= w:        {bruhat_leq(identity(n), w)}")
print(f"  s0 <= w:       {bruhat_leq(s0, w)}")
print(f"  tau <= w:      {bruhat_leq(tau, w)}")
print(f"  w <= tau:      {bruhat_leq(w, tau)}")
