#!/usr/bin/env python3
"""Print h(B), h(A)^-1, the Koszul verdict and the oracle check for every named family instance."""

import argparse
import json

from layered_hilbert import FieldSpec, b_graded_dims, hilbert_B, inv_hilbert_A, numerically_koszul
from layered_hilbert.generators import named_families


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="q", help="'q' or 'p:PRIME'")
    ap.add_argument("--json", action="store_true", help="one JSON object per line")
    args = ap.parse_args()
    field = FieldSpec.parse(args.field)
    for spec in named_families():
        g = spec.build()
        hb = hilbert_B(g, field)
        ia = inv_hilbert_A(g, field)
        rep = numerically_koszul(g, field)
        oracle_ok = b_graded_dims(g, field=field) == list(hb.coeffs)
        if args.json:
            print(json.dumps({"family": str(spec), "hilbert_B": list(hb.coeffs), "inv_hilbert_A": list(ia.coeffs),
                              "koszul": rep.verdict, "oracle_ok": oracle_ok}))
        else:
            print(f"{str(spec):32s} h(B) = {hb!s:34s} h(A)^-1 = {ia!s:34s} "
                  f"koszul={rep.verdict!s:5s} oracle={'ok' if oracle_ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
