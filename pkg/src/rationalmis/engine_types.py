"""Wire-level types shared by the round executor and the protocol machines."""

from __future__ import annotations

from dataclasses import dataclass, field

# Output values.  Undecided is the absence of an output, not a value.
ZERO = 0
ONE = 1
BOT = 2

OUTPUT_NAMES = {ZERO: "0", ONE: "1", BOT: "bot"}

# rps move symbols
ROCK, PAPER, SCISSORS = 0, 1, 2
MOVE_NAMES = {ROCK: "r", PAPER: "p", SCISSORS: "s"}

BROADCAST = None


@dataclass(slots=True)
class RpsMove:
    symbol: int  # 0/1/2; anything else is treated as an invalid move


@dataclass(slots=True)
class OpponentChoice:
    target: int


@dataclass(slots=True)
class SelfRand:
    bits: int
    nbits: int


@dataclass(slots=True)
class PairRand:
    iteration: int
    issuer: int
    recipient: int
    bits: int
    sig: bytes


@dataclass(slots=True)
class ForwardedPairRand:
    iteration: int
    opponent: int
    bits: int
    sig: bytes


@dataclass(slots=True)
class Garbage:
    data: bytes


@dataclass(slots=True)
class Message:
    sender: int
    target: int | None  # BROADCAST (None) or a unicast recipient
    payload: object
    round_sent: int = -1  # stamped by the engine at queue time


@dataclass(slots=True)
class Action:
    messages: list = field(default_factory=list)
    output: int | None = None


@dataclass(slots=True)
class Observation:
    """What one undecided node sees at the start of a round.

    `neighbor_outputs` maps every neighbor to its output committed in a
    strictly earlier round, or None while undecided.  The mapping is a
    read-only view shared across nodes within the round.
    """

    round: int
    inbox: list
    neighbor_outputs: dict


def payload_key(payload) -> tuple:
    """Canonical comparable form of a payload, for traces and tests."""
    if isinstance(payload, RpsMove):
        return ("move", payload.symbol)
    if isinstance(payload, OpponentChoice):
        return ("opp", payload.target)
    if isinstance(payload, SelfRand):
        return ("selfrand", payload.bits, payload.nbits)
    if isinstance(payload, PairRand):
        return ("pairrand", payload.iteration, payload.issuer, payload.recipient, payload.bits, payload.sig.hex())
    if isinstance(payload, ForwardedPairRand):
        return ("fwd", payload.iteration, payload.opponent, payload.bits, payload.sig.hex())
    if isinstance(payload, Garbage):
        return ("garbage", payload.data.hex())
    return ("unknown", repr(payload))


def action_key(action: Action) -> tuple:
    """Canonical comparable form of an action, for trace equality tests."""
    msgs = tuple(
        (m.target if m.target is not None else "bcast", payload_key(m.payload))
        for m in action.messages
    )
    return (msgs, action.output)
