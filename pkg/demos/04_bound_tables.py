"""The two bound sequences: witness sizes f(k) and progressing moves g(k).

f grows by f(k+1) = r f(k)^2 + r f(k) + 1 and is dominated by the closed
form g(k) = (2r+1)^(2^(k-1)-1). Both are exact integers here, however large;
g(12) at r=1 is 3^2047, a 977-digit number.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from splittergame import bound_table, progressing_move_bound

for radius in (1, 2):
    print(f"radius {radius}:")
    print(f"  {'k':>2} {'f(k)':>20} {'g(k)':>24}")
    for k, f, g in bound_table(radius, 7):
        f_text = str(f) if len(str(f)) <= 20 else f"~10^{len(str(f)) - 1}"
        g_text = str(g) if len(str(g)) <= 24 else f"~10^{len(str(g)) - 1}"
        print(f"  {k:>2} {f_text:>20} {g_text:>24}")
    print()

huge = progressing_move_bound(12, 1)
assert huge == 3**2047
print(f"g(12) at r=1 has {len(str(huge))} digits; first 40: {str(huge)[:40]}...")
