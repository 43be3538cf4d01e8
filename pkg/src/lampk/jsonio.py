"""JSON wire formats.

Words carry string integer keys ({"entries": {"0": 1}}); chains are arrays
of {"word", "coeff"} sorted in word order with the zero chain as []; traces
are {"num", "den"}; group data round-trips without the derived
abelian_order field.  Every emitter here must re-parse to the same value.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LampkError
from .grouprep import GroupRepData
from .shiftwords import Word
from .zchain import ZChain


def group_to_json(group: GroupRepData) -> dict:
    return {"name": group.name, "order": group.order, "dims": list(group.dims)}


def group_from_json(data: dict) -> GroupRepData:
    try:
        return GroupRepData(
            name=str(data["name"]), order=int(data["order"]), dims=tuple(data["dims"])
        )
    except (KeyError, TypeError) as exc:
        raise LampkError(f"malformed group JSON: {exc}") from exc


def word_to_json(word: Word) -> dict:
    return {"entries": {str(pos): idx for pos, idx in word.entries}}


def word_from_json(data: dict) -> Word:
    # Accept both the wrapped shape and a bare entries mapping.
    entries = data.get("entries", data) if isinstance(data, dict) else data
    try:
        return Word((int(pos), int(idx)) for pos, idx in entries.items())
    except (AttributeError, ValueError, TypeError) as exc:
        raise LampkError(f"malformed word JSON: {exc}") from exc


def chain_to_json(chain: ZChain) -> list:
    return [
        {"word": word_to_json(word), "coeff": coeff} for word, coeff in chain.terms()
    ]


def chain_from_json(data: list) -> ZChain:
    if not isinstance(data, list):
        raise LampkError("chain JSON must be an array of {word, coeff} objects")
    chain = ZChain()
    for item in data:
        try:
            chain += ZChain.of(word_from_json(item["word"]), int(item["coeff"]))
        except (KeyError, TypeError) as exc:
            raise LampkError(f"malformed chain JSON: {exc}") from exc
    return chain


def fraction_to_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}


def fraction_from_json(data: dict) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))
