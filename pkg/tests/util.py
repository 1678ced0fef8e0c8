"""Shared test helpers: independent reference implementations and
constrained random instance generators."""

from __future__ import annotations

from permmind import (
    GameConfig,
    AdaptionInstance,
    apply_found_component,
    bound_enforced,
    ceil_log2,
    endgame,
    find_first,
    find_first_uniform,
    find_next,
    find_next_many_colors,
    initial_phase,
    query_bound,
    select_active_index,
)


def brute_white(w, x) -> int:
    """Right color, wrong place, counted pair by pair.  For codes without
    repeated colors every shared color pairs up exactly once, so this is the
    usual best-alignment white count."""
    return sum(
        1
        for i in range(len(w))
        for j in range(len(x))
        if i != j and w[i] == x[j]
    )


def solve_with_budget_audit(oracle, config: GameConfig):
    """Mirror of the solver's main flow that additionally asserts the
    per-phase query budgets, not just the total."""
    n, k = config.n, config.k
    state = initial_phase(oracle, config)
    assert state.transcript.query_count <= k - 1
    if state.solved_secret is not None:
        return state.solved_secret, state.transcript

    def audited(fn, budget, *args):
        before = state.transcript.query_count
        result = fn(state, *args)
        spent = state.transcript.query_count - before
        assert spent <= budget, f"{fn.__name__} spent {spent} > {budget}"
        return result

    if k == n and state.open_count() > 2:
        if all(c == 1 for c in state.v):
            j = 1
            m = audited(find_first_uniform, n // 2 + 1)
        else:
            j, _ = select_active_index(state)
            m = audited(find_first, 2 * ceil_log2(n), j)
        apply_found_component(state, j, m)
    while state.open_count() > 2:
        j, _ = select_active_index(state)
        if k == n:
            m = audited(find_next, 1 + ceil_log2(n), j)
        else:
            m = audited(find_next_many_colors, ceil_log2(n), j)
        apply_found_component(state, j, m)
    before = state.transcript.query_count
    secret = endgame(state)
    assert state.transcript.query_count - before <= 2
    if bound_enforced(config):
        assert state.transcript.query_count <= query_bound(config)
    return secret, state.transcript


def _random_injective(rng, n: int, k: int) -> tuple:
    return tuple(rng.sample(range(1, k + 1), n))


def _shuffled_derangement(rng, values):
    """Random permutation of `values` that fixes none of them in place.
    Expects len(values) != 1."""
    values = list(values)
    if not values:
        return []
    while True:
        out = values[:]
        rng.shuffle(out)
        if all(a != b for a, b in zip(out, values)):
            return out


def make_same_colors_instance(rng, n: int | None = None, m: int | None = None) -> AdaptionInstance:
    """Random instance for the equal-colors adaption.

    Premises built in: k == n; the current query agrees with the current
    secret on at least m+1 colors; and no earlier query agrees with the
    secret on any of those agreement positions.  The last premise is what
    makes "earlier counts are preserved" provable at all: the rewrite only
    touches agreement positions, and a rewrite can only lower an earlier
    count if that earlier query matched the secret right there.
    """
    if n is None:
        n = rng.randint(3, 8)
    if m is None:
        m = rng.randint(1, max(1, n - 2))
    config = GameConfig(n, n)
    secret = _random_injective(rng, n, n)
    agree_size = rng.choice([a for a in range(m + 1, n + 1) if a != n - 1])
    agree_positions = sorted(rng.sample(range(n), agree_size))
    rest = [i for i in range(n) if i not in agree_positions]
    current = list(secret)
    for pos, color in zip(rest, _shuffled_derangement(rng, [secret[i] for i in rest])):
        current[pos] = color
    priors = []
    for _ in range(m - 1):
        while True:
            q = _random_injective(rng, n, n)
            if all(q[i] != secret[i] for i in agree_positions):
                priors.append(q)
                break
    return AdaptionInstance(config, tuple(priors) + (tuple(current),), secret)


def make_spare_colors_instance(rng, n: int | None = None, m: int | None = None) -> AdaptionInstance:
    """Random instance for the spare-colors adaption.

    Premises built in: k > n; the current query IS the current secret (the
    all-black situation the procedure exists for); and no earlier query
    agrees with the secret anywhere, since here the rewrite may touch any
    position at all.
    """
    if n is None:
        n = rng.randint(2, 8)
    k = n + rng.randint(1, 4)
    if m is None:
        m = rng.randint(1, min(k - 1, n + 1))
    config = GameConfig(n, k)
    secret = _random_injective(rng, n, k)
    priors = []
    for _ in range(m - 1):
        while True:
            q = _random_injective(rng, n, k)
            if all(a != b for a, b in zip(q, secret)):
                priors.append(q)
                break
    return AdaptionInstance(config, tuple(priors) + (secret,), secret)
