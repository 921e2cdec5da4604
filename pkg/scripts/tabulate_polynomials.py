"""Tabulate the polynomial families and write them as JSON.

Each row records the enumerated polynomial, the closed/product form it should
equal, and whether they agree.
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from nonnesting import generalizations as gen
from nonnesting.core import enumerate_nonnesting
from nonnesting.polynomials import distribution, eulerian, narayana


@dataclass
class Config:
    n_max: int = 5
    k_values: list[int] = field(default_factory=lambda: [3, 4])
    a_n_max: int = 4
    out: str | None = None


def run(cfg: Config) -> dict:
    rows = []
    for n in range(1, cfg.n_max + 1):
        t0 = time.perf_counter()
        c = distribution(enumerate_nonnesting(n))
        rows.append(
            {
                "family": "C",
                "n": n,
                "poly": c.to_json()["terms"],
                "matches_product": c == eulerian(n) * narayana(n),
                "seconds": round(time.perf_counter() - t0, 3),
            }
        )
    for k in cfg.k_values:
        for n in range(1, cfg.a_n_max + 1):
            t0 = time.perf_counter()
            a = gen.a_poly(n, k)
            rows.append(
                {
                    "family": "A",
                    "n": n,
                    "k": k,
                    "poly": a.to_json()["terms"],
                    "matches_closed_form": a == gen.a_closed(n, k),
                    "seconds": round(time.perf_counter() - t0, 3),
                }
            )
    return {"config": asdict(cfg), "rows": rows}


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--k", type=int, nargs="+", default=[3, 4])
    p.add_argument("--a-n-max", type=int, default=Config.a_n_max)
    p.add_argument("--out")
    a = p.parse_args()
    result = run(Config(a.n_max, a.k, a.a_n_max, a.out))
    text = json.dumps(result, indent=1)
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text + "\n")
    for row in result["rows"]:
        ok = row.get("matches_product", row.get("matches_closed_form"))
        print(f"{row['family']} n={row['n']} k={row.get('k', 2)} ok={ok} {row['seconds']}s")


if __name__ == "__main__":
    main()
