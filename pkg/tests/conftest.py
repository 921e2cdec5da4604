import itertools

from hypothesis import strategies as st

from nonnesting.core import Permutation, enumerate_dyck, pi_from


@st.composite
def dyck_paths(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    steps, h, e = [], 0, 0
    while len(steps) < 2 * n:
        options = []
        if e < n:
            options.append("E")
        if h > 0:
            options.append("N")
        s = draw(st.sampled_from(options))
        steps.append(s)
        e += s == "E"
        h += 1 if s == "E" else -1
    return "".join(steps)


@st.composite
def perms(draw, n):
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def nonnesting_words(draw, min_n=1, max_n=7):
    path = draw(dyck_paths(min_n=min_n, max_n=max_n))
    sigma = draw(perms(len(path) // 2))
    return pi_from(sigma, path)


def all_words(n, k):
    """Every word with k copies of 1..n, by brute force over permutations of the multiset."""
    base = [v for v in range(1, n + 1) for _ in range(k)]
    return sorted(set(itertools.permutations(base)))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
