"""Regenerate golden files from the independent oracles.

Run from the repository root: ``python3 tests/make_golden.py``.
"""

from __future__ import annotations

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from oracles import singvec_oracle, two_tower_series, type_a_character, type_a_prefactor  # noqa: E402

ROOT = pathlib.Path(__file__).resolve().parent.parent
CHAR_CASES = [((0,), (0,), 10), ((1,), (1,), 6), ((0, 0), (0, 0), 5), ((0,), (2,), 4), ((1, 0), (0, 1), 8)]


def main():
    tables = []
    for lam, mu, order in CHAR_CASES:
        label = f"A{len(lam)}"
        tables.append({"algebra": label, "lambda": list(lam), "mu": list(mu), "order": order,
                       "coefficients": type_a_character(lam, mu, order)})
    prefactors = []
    for lam, mu in [((0,), (0,)), ((1,), (1,)), ((1, 0), (0, 1))]:
        prefactors.append({"algebra": f"A{len(lam)}", "lambda": list(lam), "mu": list(mu),
                           "triple": [str(x) for x in type_a_prefactor(lam, mu)]})
    golden = {"char_tables": tables, "a2_two_towers_order8": two_tower_series(8), "prefactors": prefactors}
    (ROOT / "tests" / "golden" / "char_tables.json").write_text(json.dumps(golden, indent=2) + "\n")

    singvec = {"max_degree": 2, "oracle": "sympy dense elimination, explicit mode formula",
               "report": singvec_oracle(-2, 2, 2)}
    (ROOT / "src" / "walg" / "data" / "singvec_gamma_m2.json").write_text(
        json.dumps(singvec, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
