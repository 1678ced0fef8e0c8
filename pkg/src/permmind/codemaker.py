"""Codemaker oracles and the adversarial lower-bound machinery.

`StaticCodemaker` answers for a fixed secret.  `AdversaryCodemaker` commits
to nothing: it keeps the set of secrets consistent with everything answered
so far, always answers with the smallest black count any remaining secret
would produce, and discards the rest.  Played against, it forces the
codebreaker to spend at least n queries when k == n and at least k queries
when k > n; `verify_lower_bound_play` runs such a game and checks the answer
floors the argument rests on (answer at query m is at most m when k == n, and
below n before query k when k > n).

The two adaption procedures are the constructive heart of that argument:
given the query history and a current notional secret, they build another
secret that keeps every earlier black count but strictly lowers the latest
one, proving the adversary could have answered lower all along.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass

from . import _kernel
from .core import (
    GameConfig,
    InconsistentOracleError,
    CapacityError,
    black,
    validate_code,
)
from .solver import CodemakerOracle, solve

DEFAULT_STATE_LIMIT = 10**6


class LemmaViolationError(RuntimeError):
    """An adversary answer broke a floor the lower-bound argument relies on."""


def state_limit(override: int | None = None) -> int:
    """Capacity guard for full enumerations; PERMMIND_MAX_STATES overrides."""
    if override is not None:
        return override
    env = os.environ.get("PERMMIND_MAX_STATES")
    if env:
        return int(env)
    return DEFAULT_STATE_LIMIT


def injective_code_count(config: GameConfig) -> int:
    return math.perm(config.k, config.n)


def all_injective_codes(config: GameConfig):
    """All codes for the board, in lexicographic order."""
    return itertools.permutations(range(1, config.k + 1), config.n)


def random_injective_code(config: GameConfig, rng) -> tuple:
    """Uniformly random code, via a partial Fisher-Yates shuffle of 1..k."""
    pool = list(range(1, config.k + 1))
    for i in range(config.n):
        j = rng.randrange(i, config.k)
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(pool[: config.n])


def _check_capacity(config: GameConfig, max_states: int | None, what: str) -> int:
    count = injective_code_count(config)
    limit = state_limit(max_states)
    if count > limit:
        raise CapacityError(
            f"{what} would enumerate {count} codes, limit is {limit} "
            "(raise PERMMIND_MAX_STATES to override)"
        )
    return count


class StaticCodemaker(CodemakerOracle):
    """Honest oracle for a fixed secret."""

    def __init__(self, secret, config: GameConfig | None = None, transcript=None):
        secret = tuple(secret)
        if config is None:
            config = GameConfig(len(secret), max(len(secret), max(secret)))
        validate_code(secret, config)
        super().__init__(config, transcript)
        self.secret = secret

    def _respond(self, guess: tuple) -> int:
        return black(guess, self.secret)


class AdversaryCodemaker(CodemakerOracle):
    """Oracle that answers with the smallest black count still consistent.

    Keeps the feasible set explicitly, so nothing it says is ever a lie about
    every remaining secret, and the game cannot end until the set is a
    singleton (only then can an answer reach n).  `trace` records
    (query_index, answer) pairs for the floor checks.
    """

    def __init__(self, config: GameConfig, transcript=None, max_states: int | None = None):
        _check_capacity(config, max_states, "adversary play")
        super().__init__(config, transcript)
        self.feasible: list[tuple] = list(all_injective_codes(config))
        self.trace: list[tuple[int, int]] = []

    @property
    def feasible_count(self) -> int:
        return len(self.feasible)

    def _respond(self, guess: tuple) -> int:
        count, survivors = _kernel.min_black_filter(self.feasible, guess)
        if not survivors:
            raise InconsistentOracleError("adversary feasible set emptied")
        self.feasible = survivors
        self.trace.append((self.transcript.query_count + 1, count))
        return count


@dataclass(frozen=True)
class AdaptionInstance:
    """Query history plus the secret currently pretended.

    `queries` holds x^1..x^m in order (the last one is the current query);
    `current_secret` is y^m.  Both adaption procedures consume this.
    """

    config: GameConfig
    queries: tuple
    current_secret: tuple

    def __post_init__(self):
        if not self.queries:
            raise ValueError("need at least one query")
        for q in self.queries:
            validate_code(q, self.config)
        validate_code(self.current_secret, self.config)

    @property
    def m(self) -> int:
        return len(self.queries)

    @property
    def current_query(self) -> tuple:
        return self.queries[-1]

    def agreement_colors(self) -> set:
        """Colors sitting on the same position in the current query and secret."""
        return {
            c for c, x in zip(self.current_secret, self.current_query) if c == x
        }

    def allowed_colors_at(self, position: int) -> set:
        """Colors never tried at `position` (1-based) by any recorded query."""
        tried = {q[position - 1] for q in self.queries}
        return set(range(1, self.config.k + 1)) - tried


def _close_cycle(instance: AdaptionInstance, positions, colors, start_idx) -> tuple:
    z = list(instance.current_secret)
    for pos, color in zip(positions[start_idx:], colors[start_idx:]):
        z[pos - 1] = color
    return tuple(z)


def adapt_secret_same_colors(instance: AdaptionInstance) -> tuple:
    """Replacement secret for k == n that keeps all earlier black counts and
    strictly lowers the current one.

    Needs at least m+1 colors agreeing between the current query and secret.
    Walks a chain of agreeing positions, rewriting each to a color never
    tried there, until a chosen color closes a cycle; the rewritten stretch
    is that cycle, so the result is again a permutation.  All choices resolve
    to the smallest qualifying position or color.
    """
    config = instance.config
    if config.k != config.n:
        raise ValueError("this variant needs exactly as many colors as holes")
    y = instance.current_secret
    x = instance.current_query
    agreeing = instance.agreement_colors()
    if len(agreeing) < instance.m + 1:
        raise ValueError(
            f"need at least {instance.m + 1} agreeing colors, have {len(agreeing)}"
        )
    positions = [min(i for i in range(1, config.n + 1) if y[i - 1] == x[i - 1])]
    seen = set()
    options = instance.allowed_colors_at(positions[0]) & agreeing
    if not options:
        raise ValueError(f"no replacement color available at position {positions[0]}")
    colors = [min(options)]
    while colors[-1] not in seen:
        seen.add(y[positions[-1] - 1])
        nxt = y.index(colors[-1]) + 1
        positions.append(nxt)
        options = instance.allowed_colors_at(nxt) & agreeing
        if not options:
            raise ValueError(f"no replacement color available at position {nxt}")
        colors.append(min(options))
        if len(positions) > config.n:
            raise RuntimeError("replacement chain failed to close")
    closing = colors[-1]
    start_idx = next(
        idx for idx, pos in enumerate(positions[:-1]) if y[pos - 1] == closing
    )
    return _close_cycle(instance, positions, colors, start_idx)


def adapt_secret_spare_colors(instance: AdaptionInstance) -> tuple:
    """Replacement secret for k > n that keeps all earlier black counts and
    strictly lowers the current one.

    Meant for the all-black situation where the current query equals the
    current secret; more loosely it only needs the first position (or, as an
    extension, the smallest position) where the two agree.  The chain may now
    also end by picking a color the secret does not use at all, in which case
    the whole chain from its start is rewritten rather than just a cycle.
    Requires fewer queries than colors so that an untried color exists at
    every position.
    """
    config = instance.config
    if config.k <= config.n:
        raise ValueError("this variant needs spare colors (k > n)")
    y = instance.current_secret
    x = instance.current_query
    agreeing_positions = [
        i for i in range(1, config.n + 1) if y[i - 1] == x[i - 1]
    ]
    if not agreeing_positions:
        raise ValueError("current query and secret agree nowhere")
    unused = set(range(1, config.k + 1)) - set(y)
    positions = [agreeing_positions[0]]
    seen = set()
    options = instance.allowed_colors_at(positions[0])
    if not options:
        raise ValueError(f"every color was already tried at position {positions[0]}")
    colors = [min(options)]
    while colors[-1] not in seen and colors[-1] not in unused:
        seen.add(y[positions[-1] - 1])
        nxt = y.index(colors[-1]) + 1
        positions.append(nxt)
        options = instance.allowed_colors_at(nxt)
        if not options:
            raise ValueError(f"every color was already tried at position {nxt}")
        colors.append(min(options))
        if len(positions) > config.n:
            raise RuntimeError("replacement chain failed to close")
    closing = colors[-1]
    if closing in unused:
        start_idx = 0
    else:
        start_idx = next(
            idx for idx, pos in enumerate(positions[:-1]) if y[pos - 1] == closing
        )
    return _close_cycle(instance, positions, colors, start_idx)


def verify_lower_bound_play(
    config: GameConfig,
    solver=solve,
    max_states: int | None = None,
) -> tuple[int, list[tuple[int, int]]]:
    """Play the solver against the adversary and audit the answer floors.

    Returns (queries_used, trace) where trace lists (query_index, answer).
    Raises LemmaViolationError if an answer exceeds its floor: when k == n
    the m-th answer must stay at most m; when k > n every answer before the
    k-th must stay below n.
    """
    oracle = AdversaryCodemaker(config, max_states=max_states)
    secret, transcript = solver(oracle, config)
    if oracle.feasible != [secret]:
        raise InconsistentOracleError(
            "game ended before the feasible set was a verified singleton"
        )
    n, k = config.n, config.k
    floor = n if k == n else k
    if transcript.query_count < floor:
        raise LemmaViolationError(
            f"game ended after {transcript.query_count} queries, "
            f"below the {floor}-query floor"
        )
    for m, answer in oracle.trace:
        if k == n:
            if answer > m:
                raise LemmaViolationError(
                    f"query {m} was answered {answer}, above the floor {m}"
                )
        elif m < k and answer >= n:
            raise LemmaViolationError(
                f"query {m} was answered {answer}, which should be impossible before query {k}"
            )
    return transcript.query_count, list(oracle.trace)
