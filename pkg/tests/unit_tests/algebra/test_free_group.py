import pytest
from hypothesis import given
from hypothesis import strategies as st

from swatchlink.algebra.free_group import (
    FreeWord,
    GroupRingElement,
    Presentation,
    abelianize,
    fox_derivative,
    free_reduce,
)
from swatchlink.algebra.laurent import MultiLaurent
from swatchlink.exceptions import InvalidPresentationError, UnmappedGeneratorError

GENERATORS = ("x", "y", "z")
MAPPING = {"x": "t1", "y": "t2", "z": "t1"}
VARIABLES = ("t1", "t2")

words = st.lists(
    st.tuples(st.sampled_from(GENERATORS), st.integers(-3, 3)), max_size=8
).map(lambda syllables: FreeWord(tuple(syllables)))


class TestFreeWord:
    def test_free_reduction(self):
        assert free_reduce([("x", 2), ("x", -2), ("y", 1), ("y", 0)]) == (("y", 1),)
        word = FreeWord.from_letters(("x", 1), ("y", 1), ("y", -1), ("x", 1))
        assert word.syllables == (("x", 2),)
        assert str(word) == "x^2"

    def test_inverse(self):
        word = FreeWord.from_letters(("x", 1), ("y", -2))
        assert (word * word.inverse()).syllables == ()
        assert str(FreeWord()) == "1"

    def test_length_and_exponent_sum(self):
        word = FreeWord.from_letters(("x", 2), ("y", -1), ("x", -3))
        assert len(word) == 6
        assert word.exponent_sum("x") == -1
        assert word.generators == ("x", "y")


class TestPresentation:
    def test_undeclared_generator(self):
        with pytest.raises(InvalidPresentationError):
            Presentation(("x",), (FreeWord.generator("y"),))

    def test_components_per_generator(self):
        with pytest.raises(InvalidPresentationError):
            Presentation(("x", "y"), (), generator_components=(0,))

    def test_str(self):
        relator = FreeWord.from_letters(("x", 1), ("y", 1), ("x", -1), ("y", -1))
        assert str(Presentation(("x", "y"), (relator,))) == "<x, y | xyx^-1y^-1>"


class TestFoxCalculus:
    def test_derivative_of_commutator(self):
        x, y = FreeWord.generator("x"), FreeWord.generator("y")
        relator = x * y * x.inverse() * y.inverse()
        assert fox_derivative(relator, "x") == GroupRingElement.word(
            FreeWord()
        ) - GroupRingElement.word(x * y * x.inverse())

    def test_derivative_of_negative_power(self):
        word = FreeWord.generator("x", -2)
        assert fox_derivative(word, "x") == -(
            GroupRingElement.word(FreeWord.generator("x", -1))
            + GroupRingElement.word(FreeWord.generator("x", -2))
        )
        assert fox_derivative(word, "y") == GroupRingElement()

    def test_abelianize(self):
        element = GroupRingElement.word(FreeWord.from_letters(("x", 1), ("z", 1)), 3)
        assert abelianize(element, MAPPING, VARIABLES) == MultiLaurent(
            VARIABLES, {(2, 0): 3}
        )
        with pytest.raises(UnmappedGeneratorError):
            abelianize(element, {"x": "t1"}, VARIABLES)

    @given(words)
    def test_fundamental_formula(self, word):
        one = MultiLaurent.one(VARIABLES)
        total = MultiLaurent.zero(VARIABLES)
        for generator in GENERATORS:
            t = MultiLaurent.variable(MAPPING[generator], VARIABLES)
            total = total + abelianize(
                fox_derivative(word, generator), MAPPING, VARIABLES
            ) * (t - one)
        image = abelianize(GroupRingElement.word(word), MAPPING, VARIABLES)
        assert total == image - one
