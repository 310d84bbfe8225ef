"""Walk through one subspace-code transmission end to end.

A message of k symbols from GF(2^6) is encoded as a 4-dimensional
subspace of GF(2)^16.  The channel drops one dimension and injects two
alien ones; the list decoder still pins down the message.
"""

import random

from subrank import (SubspaceCodeParams, encode, field_create,
                     guarantee_holds, list_decode, operator_channel,
                     radius_info)


def main():
    field = field_create(2, 1, 6)
    params = SubspaceCodeParams.default(field, n=4, k=2, s=2)
    info = radius_info(params, rho=1)
    print(f"code: n={params.n}, k={params.k}, s={params.s}, "
          f"ambient GF(2)^{params.ambient_dim}")
    print(f"symbol rate {info.symbol_rate}, packet rate {info.packet_rate}")
    print(f"with rho=1 erasures the decoder tolerates t <= {info.t_max} errors")

    rng = random.Random(2026)
    msg = (field.from_coords([1, 0, 1, 1, 0, 0]),
           field.from_coords([0, 1, 0, 0, 1, 0]))
    V = encode(params, msg)
    print(f"\nsent subspace of dimension {V.dim}")

    rho, t = 1, 2
    assert guarantee_holds(params, rho, t)
    U = operator_channel(V, rho, t, rng)
    print(f"received subspace of dimension {U.dim} "
          f"(rho={rho} erasures, t={t} errors)")

    out = list_decode(params, U)
    print(f"\ndecoder list is an affine space of dimension {out.dimension}")
    for candidate in out.enumerate():
        mark = "  <-- sent" if candidate == msg else ""
        print(f"  candidate {candidate}{mark}")
    assert out.contains(msg)
    print("\nthe transmitted message is in the list, as guaranteed")


if __name__ == "__main__":
    main()
