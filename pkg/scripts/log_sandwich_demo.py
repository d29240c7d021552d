"""Watch the two-sided log bounds close as the cell count doubles.

Usage: python scripts/log_sandwich_demo.py [x]
"""

import math
import sys

from rfcalc.direct_eval import log_limit_bounds
from rfcalc.elementary import log_construct


def main() -> None:
    x = float(sys.argv[1]) if len(sys.argv) > 1 else 2.0
    print(f"n(x^(1/n)-1)/x^(1/n)  <=  log {x:g}  <=  n(x^(1/n)-1)")
    print(f"{'n':>9}  {'lower':<22}{'upper':<22}{'gap':<12}")
    for j in range(0, 31, 3):
        pair = log_limit_bounds(x, 2 ** j)
        print(f"2^{j:<7d}  {pair.lower:<22.17f}{pair.upper:<22.17f}{pair.gap:.3e}")
    approx = log_construct(x, 1e-13)
    print(f"\ncertified: {approx.value!r} +- {approx.bound:.3e}")
    print(f"platform : {math.log(x)!r}")


if __name__ == "__main__":
    main()
