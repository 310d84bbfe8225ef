"""How the normalized decoding radius moves with the fold parameters.

For a fixed rate R, the folded decoder's normalized radius
(s/(s+1)) (1 - h R / (h - s + 1)) climbs toward 1 - R as s and h grow
with h comfortably larger than s.  The table below shows the approach
for a few (s, h) choices.
"""

from fractions import Fraction

from subrank import normalized_radius


def main():
    print(f"{'R':>6} {'singleton 1-R':>14} "
          + " ".join(f"s={s},h={h}".rjust(12) for s, h in PAIRS))
    for num in range(1, 10):
        R = Fraction(num, 10)
        cells = " ".join(f"{float(normalized_radius(s, h, R)):12.4f}"
                         for s, h in PAIRS)
        print(f"{float(R):6.1f} {float(1 - R):14.4f} {cells}")
    print("\nwith s ~ 2/eps and h ~ 4/eps^2 the radius clears 1 - R - eps:")
    for eps in (Fraction(1, 10), Fraction(1, 20)):
        s = int(2 / eps)
        h = int(4 / eps ** 2)
        worst = min(normalized_radius(s, h, Fraction(n, 10)) - (1 - Fraction(n, 10))
                    for n in range(1, 10))
        print(f"  eps={eps}: s={s}, h={h}, worst margin over 1-R is "
              f"{float(worst):+.4f} (needs > {float(-eps):.4f})")


PAIRS = [(1, 2), (2, 8), (4, 32), (8, 128)]


if __name__ == "__main__":
    main()
