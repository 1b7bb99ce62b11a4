import hypothesis
from hypothesis import strategies as st

from towergroups.words import Word

hypothesis.settings.register_profile(
    "ci", deadline=None, derandomize=True, max_examples=60)
hypothesis.settings.load_profile("ci")


@st.composite
def words(draw, n=None, max_syllables=8):
    """Random group words: bounded syllable count, nonzero exponents."""
    if n is None:
        n = draw(st.integers(min_value=3, max_value=8))
    count = draw(st.integers(min_value=0, max_value=max_syllables))
    syllables = []
    prev = 0
    for _ in range(count):
        gen = draw(st.integers(min_value=1, max_value=n).filter(lambda g: g != prev))
        exp = draw(st.integers(min_value=-6, max_value=6).filter(lambda e: e != 0))
        syllables.append((gen, exp))
        prev = gen
    return Word(n, tuple(syllables))


@st.composite
def permutations(draw, degree):
    images = draw(st.permutations(list(range(1, degree + 1))))
    from towergroups.perm import Permutation
    return Permutation(tuple(images))
