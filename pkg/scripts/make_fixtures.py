#!/usr/bin/env python3
"""Regenerate the bundled JSON fixtures (canonical algebras and families).

Usage: python scripts/make_fixtures.py [fixtures-dir]

Writes, for dimensions up to 8:
  canonical/<name>_n<k>.algebra.json          every canonical algebra
  canonical/nu_n<k>_alpha_<a>.algebra.json    scalar family samples
  families/pplus_to_lambda2_n<k>.family.json
  families/n3plus_to_lambda2_n<k>.family.json
  families/fix_<name>_n<k>.family.json        diagonal fixed-point families
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

from levelone import CanonicalForm, Tag, construct
from levelone.families import (
    FIXED_POINT_WEIGHTS,
    n3plus_to_lambda2,
    pplus_to_lambda2,
    scaling_family,
)
from levelone.jsonio import algebra_to_dict, family_to_dict, save_path

MAX_DIM = 8
NU_ALPHAS = [
    (Fraction(0), "0"),
    (Fraction(1), "1"),
    (Fraction(1, 2), "1_2"),
    (Fraction(2, 3), "2_3"),
    (Fraction(-3), "m3"),
]


def main(root: str) -> None:
    base = Path(root)
    can = base / "canonical"
    fam = base / "families"
    can.mkdir(parents=True, exist_ok=True)
    fam.mkdir(parents=True, exist_ok=True)

    for n in range(1, MAX_DIM + 1):
        save_path(
            str(can / f"abelian_n{n}.algebra.json"),
            algebra_to_dict(construct(CanonicalForm(Tag.ABELIAN, n))),
        )
    for n in range(2, MAX_DIM + 1):
        for tag in (Tag.P_MINUS, Tag.P_PLUS, Tag.LAMBDA2):
            save_path(
                str(can / f"{tag.value}_n{n}.algebra.json"),
                algebra_to_dict(construct(CanonicalForm(tag, n))),
            )
        for alpha, label in NU_ALPHAS:
            save_path(
                str(can / f"nu_n{n}_alpha_{label}.algebra.json"),
                algebra_to_dict(construct(CanonicalForm(Tag.NU, n, alpha))),
            )
    for n in range(3, MAX_DIM + 1):
        for tag in (Tag.N3_MINUS, Tag.N3_PLUS):
            save_path(
                str(can / f"{tag.value}_n{n}.algebra.json"),
                algebra_to_dict(construct(CanonicalForm(tag, n))),
            )

    for n in range(2, MAX_DIM + 1):
        save_path(
            str(fam / f"pplus_to_lambda2_n{n}.family.json"),
            family_to_dict(pplus_to_lambda2(n)),
        )
    for n in range(3, MAX_DIM + 1):
        save_path(
            str(fam / f"n3plus_to_lambda2_n{n}.family.json"),
            family_to_dict(n3plus_to_lambda2(n)),
        )
    for name, weights_of in FIXED_POINT_WEIGHTS.items():
        start = 3 if name == "n3minus" else 2
        for n in range(start, MAX_DIM + 1):
            save_path(
                str(fam / f"fix_{name}_n{n}.family.json"),
                family_to_dict(scaling_family(weights_of(n))),
            )
    print(f"fixtures written under {base}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
