"""Render the decorated-grid figures to SVG files."""

from __future__ import annotations

import argparse
import os
from dataclasses import dataclass

from nonnesting import bijections as bij
from nonnesting.core import dy, parse_word, path_from_peaks, s_of
from nonnesting.render import render_svg


@dataclass
class Config:
    out_dir: str = "figures"


def run(cfg: Config) -> list[str]:
    os.makedirs(cfg.out_dir, exist_ok=True)
    figures = {}

    d = path_from_peaks([(1, 0), (3, 1), (4, 2), (5, 3), (6, 4), (9, 5)], 9)
    figures["lk.svg"] = render_svg(tuple(range(1, 10)), d, bij.lk(d))

    w = parse_word("25253163741674")
    figures["grid.svg"] = render_svg(s_of(w), dy(w))

    pi = parse_word("228183175437954696")
    figures["word.svg"] = render_svg(s_of(pi), dy(pi))
    f = bij.f_sigma(pi)
    figures["f_sigma.svg"] = render_svg(s_of(f), dy(f))

    written = []
    for name, svg in figures.items():
        path = os.path.join(cfg.out_dir, name)
        with open(path, "w") as fh:
            fh.write(svg)
        written.append(path)
    return written


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", default=Config.out_dir)
    for path in run(Config(p.parse_args().out_dir)):
        print(path)


if __name__ == "__main__":
    main()
