"""List decoding a folded Gabidulin code under rank errors.

A Gabidulin codeword over GF(2^8) is folded into a 2 x 4 matrix.  A
random rank-1 additive error corrupts it; the interpolation decoder
recovers the message.
"""

import random

from subrank import (FoldedParams, fg_encode, fg_list_decode, fg_max_errors,
                     field_create, rank_distance, rank_error_channel)


def main():
    field = field_create(2, 1, 8)
    params = FoldedParams.default(field, n=8, k=2, h=4, s=2)
    print(f"folded code: g={params.g} rows of h={params.h} symbols, "
          f"k={params.k}, s={params.s}, rate {params.rate}")
    t_max = fg_max_errors(params)
    print(f"guaranteed list decoding up to rank t_max = {t_max}")

    rng = random.Random(77)
    msg = (rng.randrange(field.size), rng.randrange(field.size))
    X = fg_encode(params, msg)
    print(f"\nmessage {msg}")
    for row in X.entries:
        print(f"  codeword row {row}")

    Y = rank_error_channel(X, t_max, rng)
    print(f"\nafter a rank-{rank_distance(X, Y)} error:")
    for row in Y.entries:
        print(f"  received row {row}")

    out = fg_list_decode(params, Y)
    print(f"\nlist dimension {out.dimension}; candidates:")
    for candidate in out.enumerate():
        mark = "  <-- sent" if candidate == msg else ""
        print(f"  {candidate}{mark}")
    assert out.contains(msg)


if __name__ == "__main__":
    main()
