"""Trait vocabulary and the overlapping zodiac-to-trait assignment table.

Traits are compared by TraitId (their position in the lexicon), never by
string. Sign ordinals follow the tropical calendar starting at Aries = 0.
"""

import json
from dataclasses import dataclass
from enum import IntEnum
from pathlib import Path
from typing import Dict, List, Tuple

import numpy as np

from zodiac_lab.errors import LexiconError

TRAIT_POOL_SIZE = 100
TRAITS_PER_SIGN = 10

TraitId = int


class ZodiacSign(IntEnum):
    ARIES = 0
    TAURUS = 1
    GEMINI = 2
    CANCER = 3
    LEO = 4
    VIRGO = 5
    LIBRA = 6
    SCORPIO = 7
    SAGITTARIUS = 8
    CAPRICORN = 9
    AQUARIUS = 10
    PISCES = 11

    @property
    def display_name(self) -> str:
        return self.name.capitalize()

    @classmethod
    def from_name(cls, name: str) -> "ZodiacSign":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            raise ValueError(f"Unknown zodiac sign: {name!r}") from None


N_SIGNS = len(ZodiacSign)

DEFAULT_DESCRIPTORS = (
    "Confident", "Reserved", "Ambitious", "Reflective", "Bold", "Practical",
    "Empathetic", "Independent", "Disciplined", "Dreamy", "Quiet", "Curious",
    "Impulsive", "Energetic", "Analytical", "DetailOriented", "Emotional", "Social",
    "Loyal", "Adventurous", "Affectionate", "Anxious", "Artistic", "Assertive",
    "Balanced", "Calm", "Candid", "Careful", "Charming", "Cheerful",
    "Compassionate", "Competitive", "Cooperative", "Courageous", "Creative", "Critical",
    "Cautious", "Decisive", "Dependable", "Diplomatic", "Determined", "Easygoing",
    "Eccentric", "Enthusiastic", "Generous", "Gentle", "Honest", "Humble",
    "Humorous", "Idealistic", "Imaginative", "Innovative", "Intense", "Intuitive",
    "Jealous", "Kind", "Logical", "Meticulous", "Moody", "Mysterious",
    "Nurturing", "Optimistic", "Organized", "Outgoing", "Passionate", "Patient",
    "Perceptive", "Persistent", "Playful", "Possessive", "Protective", "Rebellious",
    "Resourceful", "Restless", "Romantic", "Secretive", "Sensitive", "Sensual",
    "Sentimental", "Skeptical", "Spontaneous", "Stubborn", "Talkative", "Tenacious",
    "Thoughtful", "Tolerant", "Versatile", "Warm", "Witty", "Stable",
    "Responsible", "Friendly", "Philosophical", "Proud", "Dramatic", "Sincere",
    "Modest", "Serious", "Shy", "Forgiving",
)

# Every trait appears in 1-3 signs; total pairwise overlap is 68 over 66 sign pairs.
DEFAULT_ASSIGNMENTS: Dict[ZodiacSign, Tuple[str, ...]] = {
    ZodiacSign.ARIES: ("Confident", "Impulsive", "Energetic", "Bold", "Competitive",
                       "Courageous", "Ambitious", "Restless", "Independent", "Passionate"),
    ZodiacSign.TAURUS: ("Practical", "Loyal", "Patient", "Stubborn", "Dependable",
                        "Sensual", "Stable", "Determined", "Calm", "Generous"),
    ZodiacSign.GEMINI: ("Curious", "Social", "Talkative", "Witty", "Versatile",
                        "Restless", "Playful", "Spontaneous", "Friendly", "Charming"),
    ZodiacSign.CANCER: ("Emotional", "Nurturing", "Protective", "Sensitive", "Loyal",
                        "Intuitive", "Romantic", "Moody", "Empathetic", "Reserved"),
    ZodiacSign.LEO: ("Confident", "Bold", "Generous", "Dramatic", "Proud",
                     "Warm", "Passionate", "Social", "Charming", "Ambitious"),
    ZodiacSign.VIRGO: ("Analytical", "DetailOriented", "Practical", "Meticulous", "Organized",
                       "Critical", "Humble", "Reserved", "Dependable", "Patient"),
    ZodiacSign.LIBRA: ("Diplomatic", "Charming", "Social", "Empathetic", "Romantic",
                       "Cooperative", "Idealistic", "Friendly", "Generous", "Easygoing"),
    ZodiacSign.SCORPIO: ("Intense", "Passionate", "Mysterious", "Secretive", "Loyal",
                         "Determined", "Emotional", "Jealous", "Intuitive", "Bold"),
    ZodiacSign.SAGITTARIUS: ("Adventurous", "Optimistic", "Independent", "Curious", "Philosophical",
                             "Confident", "Honest", "Restless", "Humorous", "Spontaneous"),
    ZodiacSign.CAPRICORN: ("Ambitious", "Disciplined", "Practical", "Responsible", "Patient",
                           "Reserved", "Determined", "Cautious", "Persistent", "Organized"),
    ZodiacSign.AQUARIUS: ("Independent", "Innovative", "Eccentric", "Rebellious", "Analytical",
                          "Idealistic", "Curious", "Friendly", "Spontaneous", "Reflective"),
    ZodiacSign.PISCES: ("Dreamy", "Imaginative", "Empathetic", "Compassionate", "Intuitive",
                        "Artistic", "Sensitive", "Emotional", "Gentle", "Romantic"),
}


@dataclass(frozen=True)
class TraitLexicon:
    descriptors: Tuple[str, ...]

    def __post_init__(self):
        if len(self.descriptors) != TRAIT_POOL_SIZE:
            raise LexiconError(
                f"Lexicon must hold {TRAIT_POOL_SIZE} descriptors, got {len(self.descriptors)}"
            )
        folded = [d.casefold() for d in self.descriptors]
        if any(not d.strip() for d in self.descriptors) or len(set(folded)) != len(folded):
            raise LexiconError("Lexicon descriptors must be non-empty and unique (case-folded)")

    def __len__(self) -> int:
        return len(self.descriptors)

    def __contains__(self, descriptor: str) -> bool:
        return descriptor.casefold() in (d.casefold() for d in self.descriptors)

    def name(self, trait: TraitId) -> str:
        return self.descriptors[trait]


@dataclass(frozen=True)
class AssignmentTable:
    """Per-sign trait sets, indexed by sign ordinal, each sorted ascending."""

    sets: Tuple[Tuple[TraitId, ...], ...]

    def __post_init__(self):
        if len(self.sets) != N_SIGNS:
            raise LexiconError(f"Assignment table needs {N_SIGNS} signs, got {len(self.sets)}")
        for sign, traits in zip(ZodiacSign, self.sets):
            if len(set(traits)) != TRAITS_PER_SIGN or len(traits) != TRAITS_PER_SIGN:
                raise LexiconError(f"{sign.display_name} must map to {TRAITS_PER_SIGN} distinct traits")
            if list(traits) != sorted(traits):
                raise LexiconError(f"{sign.display_name} traits must be in ascending TraitId order")
            if not all(0 <= t < TRAIT_POOL_SIZE for t in traits):
                raise LexiconError(f"{sign.display_name} has a TraitId outside [0, {TRAIT_POOL_SIZE})")

    def traits(self, sign: ZodiacSign) -> Tuple[TraitId, ...]:
        return self.sets[int(sign)]


def build_default_lexicon() -> TraitLexicon:
    """Return the canonical 100-descriptor lexicon."""
    return TraitLexicon(descriptors=DEFAULT_DESCRIPTORS)


def trait_id(lexicon: TraitLexicon, descriptor: str) -> TraitId:
    """Case-folded lookup of a descriptor's TraitId.

    Raises:
        LexiconError: If the descriptor is not in the lexicon
    """
    wanted = descriptor.casefold()
    for index, candidate in enumerate(lexicon.descriptors):
        if candidate.casefold() == wanted:
            return index
    raise LexiconError(f"Descriptor {descriptor!r} is missing from the lexicon")


def build_default_assignments(lexicon: TraitLexicon) -> AssignmentTable:
    """Resolve the stereotype trait sets against ``lexicon``.

    Raises:
        LexiconError: If any stereotype descriptor is absent from the lexicon
    """
    sets = tuple(
        tuple(sorted(trait_id(lexicon, name) for name in DEFAULT_ASSIGNMENTS[sign]))
        for sign in ZodiacSign
    )
    return AssignmentTable(sets=sets)


def overlap_matrix(table: AssignmentTable) -> np.ndarray:
    """12x12 matrix of shared-trait counts between sign pairs."""
    membership = np.zeros((N_SIGNS, TRAIT_POOL_SIZE), dtype=np.int64)
    for sign in ZodiacSign:
        membership[int(sign), list(table.traits(sign))] = 1
    return membership @ membership.T


def trait_multiplicity(table: AssignmentTable) -> np.ndarray:
    """Number of signs each trait is assigned to (length 100)."""
    counts = np.zeros(TRAIT_POOL_SIZE, dtype=np.int64)
    for traits in table.sets:
        counts[list(traits)] += 1
    return counts


def lexicon_to_dict(lexicon: TraitLexicon, table: AssignmentTable) -> dict:
    return {
        "descriptors": list(lexicon.descriptors),
        "assignments": {sign.display_name: list(table.traits(sign)) for sign in ZodiacSign},
    }


def write_lexicon_json(path: str, lexicon: TraitLexicon, table: AssignmentTable) -> None:
    text = json.dumps(lexicon_to_dict(lexicon, table), indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")


def read_lexicon_json(path: str) -> Tuple[TraitLexicon, AssignmentTable]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    lexicon = TraitLexicon(descriptors=tuple(data["descriptors"]))
    assignments: Dict[str, List[int]] = data["assignments"]
    table = AssignmentTable(
        sets=tuple(tuple(assignments[sign.display_name]) for sign in ZodiacSign)
    )
    return lexicon, table
