"""
Counting Hilbert functions
==========================

With embedding dimension at most r and regularity at most m only finitely
many Hilbert functions occur.  Each one is already realized by a
Borel-fixed ideal generated in degree <= m+1, which makes the list small
enough to print.
"""

import time

from hilbreg import brute_force_hf_oracle, enumerate_hilbert_functions

for r, m in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]:
    t0 = time.perf_counter()
    census = enumerate_hilbert_functions(r, m)
    print(f"r={r} m={m}: {len(census):4d} functions  ({time.perf_counter() - t0:.2f}s)")

for sig in sorted(enumerate_hilbert_functions(2, 1), key=lambda s: s.key):
    print("  h =", sig.values(6), " p =", [str(c) for c in sig.poly])

# brute force over every monomial ideal agrees on the small cases
print("oracle agrees:", enumerate_hilbert_functions(2, 2) == brute_force_hf_oracle(2, 2))
