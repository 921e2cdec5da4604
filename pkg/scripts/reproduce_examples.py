"""Print the worked examples: small C_n polynomials and the bijection chain on one word."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from nonnesting import bijections as bij
from nonnesting.core import des, enumerate_nonnesting, format_word, parse_word, s_of, statistics
from nonnesting.polynomials import distribution, eulerian, narayana


@dataclass
class Config:
    n_max: int = 4
    word: str = "228183175437954696"


def run(cfg: Config) -> None:
    for n in range(1, cfg.n_max + 1):
        c = distribution(enumerate_nonnesting(n))
        print(f"C_{n}(t,u) = {c}")
        print(f"    A_{n} = {eulerian(n)}    N_{n} = {narayana(n)}")
        print(f"    C_{n}(t,1) = {c.substitute(u=(0, 0))}")

    w = parse_word(cfg.word)
    st = statistics(w)
    print(f"\nword {format_word(w)}: sigma={format_word(s_of(w))} des={st.des} plat={st.plat} wdes={st.wdes}")
    step = bij.f_sigma(w)
    print(f"  f_sigma   {format_word(step)}  des={des(step)}")
    while s_of(step).des:
        step = bij.g_step(step)
        print(f"  g         {format_word(step)}  des={des(step)}")
    for name, f in (
        ("Phi_sigma", bij.Phi_sigma),
        ("Psi", bij.Psi),
        ("Phi_bar", bij.Phi_bar_sigma),
        ("Psi_bar", bij.Psi_bar),
    ):
        v = f(w)
        st = statistics(v)
        print(f"  {name:<9} {format_word(v)}  des={st.des} wdes={st.wdes}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--word", default=Config.word)
    a = p.parse_args()
    run(Config(n_max=a.n_max, word=a.word))


if __name__ == "__main__":
    main()
