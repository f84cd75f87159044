"""
Free group words, group presentations, integral group ring elements and
Fox derivatives.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from swatchlink.exceptions import InvalidPresentationError, UnmappedGeneratorError

from .laurent import MultiLaurent

Syllable = Tuple[str, int]


def free_reduce(syllables: Iterable[Syllable]) -> Tuple[Syllable, ...]:
    """Merge adjacent powers of the same generator and drop zero powers"""
    stack = []
    for generator, exponent in syllables:
        if exponent == 0:
            continue
        if stack and stack[-1][0] == generator:
            merged = stack[-1][1] + exponent
            stack.pop()
            if merged:
                stack.append((generator, merged))
        else:
            stack.append((generator, exponent))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word, stored as (generator, exponent) syllables"""

    syllables: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "syllables", free_reduce(self.syllables))

    @classmethod
    def from_letters(cls, *letters: Syllable) -> "FreeWord":
        return cls(tuple(letters))

    @classmethod
    def generator(cls, name: str, exponent: int = 1) -> "FreeWord":
        return cls(((name, exponent),))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.syllables + other.syllables)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __len__(self):
        return sum(abs(e) for _, e in self.syllables)

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(dict.fromkeys(g for g, _ in self.syllables))

    def exponent_sum(self, generator: str) -> int:
        return sum(e for g, e in self.syllables if g == generator)

    def __str__(self):
        if not self.syllables:
            return "1"
        return "".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)


@dataclass(frozen=True)
class Presentation:
    """
    A finite group presentation. `generator_components` tags every
    generator with the link component whose meridian it is.
    """

    generators: Tuple[str, ...]
    relators: Tuple[FreeWord, ...]
    generator_components: Tuple[int, ...] = ()
    component_count: int = 0

    def __post_init__(self):
        known = set(self.generators)
        for relator in self.relators:
            unknown = set(relator.generators) - known
            if unknown:
                raise InvalidPresentationError(
                    f"relator {relator} uses undeclared generators {sorted(unknown)}"
                )
        if self.generator_components and len(self.generator_components) != len(
            self.generators
        ):
            raise InvalidPresentationError("every generator needs a component")

    def __str__(self):
        gens = ", ".join(self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"<{gens} | {rels}>"


@dataclass(frozen=True)
class GroupRingElement:
    """A finite Z-linear combination of free group words"""

    terms: Mapping[FreeWord, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {w: c for w, c in dict(self.terms).items() if c}
        )

    @classmethod
    def word(cls, word: FreeWord, coeff: int = 1) -> "GroupRingElement":
        return cls({word: coeff})

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        terms: Dict[FreeWord, int] = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms.get(word, 0) + coeff
        return GroupRingElement(terms)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        terms: Dict[FreeWord, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 * w2
                terms[word] = terms.get(word, 0) + c1 * c2
        return GroupRingElement(terms)

    def left_multiply(self, word: FreeWord) -> "GroupRingElement":
        return GroupRingElement.word(word) * self

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{w}" for w, c in self.terms.items())


def _power_derivative(generator: str, exponent: int) -> GroupRingElement:
    """d(x^e)/dx in the free group ring"""
    terms: Dict[FreeWord, int] = {}
    if exponent > 0:
        for k in range(exponent):
            word = FreeWord.generator(generator, k)
            terms[word] = terms.get(word, 0) + 1
    else:
        for k in range(1, -exponent + 1):
            word = FreeWord.generator(generator, -k)
            terms[word] = terms.get(word, 0) - 1
    return GroupRingElement(terms)


def fox_derivative(word: FreeWord, generator: str) -> GroupRingElement:
    """
    Fox derivative of `word` with respect to `generator`, built with the
    product rule d(uv) = du + u dv.
    """
    result = GroupRingElement()
    prefix = FreeWord()
    for name, exponent in word.syllables:
        if name == generator:
            result = result + _power_derivative(name, exponent).left_multiply(prefix)
        prefix = prefix * FreeWord.generator(name, exponent)
    return result


def abelianize(
    element: GroupRingElement,
    mapping: Mapping[str, str],
    variables: Sequence[str],
) -> MultiLaurent:
    """
    Push a group ring element to the Laurent ring by sending every generator
    to the variable named in `mapping`.
    """
    variables = tuple(variables)
    index = {name: i for i, name in enumerate(variables)}
    terms: Dict[Tuple[int, ...], int] = {}
    for word, coeff in element.terms.items():
        exponents = [0] * len(variables)
        for name, exponent in word.syllables:
            if name not in mapping:
                raise UnmappedGeneratorError(f"generator {name} has no variable")
            exponents[index[mapping[name]]] += exponent
        key = tuple(exponents)
        terms[key] = terms.get(key, 0) + coeff
    return MultiLaurent(variables, terms)
