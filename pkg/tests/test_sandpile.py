import itertools
import random

import pytest

from chipfire import (
    Divisor,
    FiringScript,
    SandpileConfig,
    apply_laplacian,
    finiteness_via_duality,
    is_critical,
    is_reduced,
    k_plus,
    lowest_index_policy,
    random_policy,
    round_robin_policy,
    run,
    star_transform,
)
from chipfire.catalog import cycle_graph


def all_configs(g, total):
    """Every nonnegative chip vector with the given total."""
    n = g.n
    if n == 1:
        yield SandpileConfig((total,))
        return
    for cuts in itertools.combinations_with_replacement(range(total + 1), n - 1):
        parts = []
        prev = 0
        for c in cuts:
            parts.append(c - prev)
            prev = c
        parts.append(total - prev)
        yield SandpileConfig(tuple(parts))


# -- configurations and the star ------------------------------------------------


def test_config_rejects_debt():
    with pytest.raises(ValueError):
        SandpileConfig((1, -1))


def test_config_divisor_round_trip():
    c = SandpileConfig((2, 0, 1))
    assert SandpileConfig.from_divisor(c.as_divisor()) == c
    assert c.total() == 3


def test_k_plus(b3, pentagon):
    assert k_plus(b3) == Divisor((2, 2))
    assert k_plus(pentagon) == Divisor((2, 1, 2, 1, 1))


def test_star_examples(b3):
    assert star_transform(b3, k_plus(b3)) == Divisor((0, 0))
    assert star_transform(b3, Divisor((1, 0))) == Divisor((1, 2))


def test_star_is_involution(catalog_tiny):
    rng = random.Random(103)
    for g in catalog_tiny[:20]:
        d = Divisor([rng.randint(-2, 4) for _ in range(g.n)])
        assert star_transform(g, star_transform(g, d)) == d


# -- running the game ------------------------------------------------------------


def test_run_banana_repeats(b2):
    out = run(b2, SandpileConfig((2, 0)))
    assert out.outcome == "infinite"
    assert out.evidence == "repeat"
    assert out.terminal is None


def test_run_banana_stuck(b2):
    out = run(b2, SandpileConfig((1, 1)))
    assert out.outcome == "terminated"
    assert out.evidence == "stuck"
    assert out.terminal == SandpileConfig((1, 1))
    assert out.move_count == 0


def test_run_cap_evidence(b2):
    out = run(b2, SandpileConfig((2, 0)), cap=1)
    assert out.outcome == "infinite"
    assert out.evidence == "cap"


def test_run_conserves_chips_through_fired(catalog_tiny):
    rng = random.Random(107)
    for g in catalog_tiny[:20]:
        total = rng.randrange(2 * g.m + 1)
        config = next(all_configs(g, total))
        out = run(g, config)
        if out.outcome != "terminated":
            continue
        assert sum(out.fired) == out.move_count
        replayed = config.as_divisor() - apply_laplacian(g, FiringScript(out.fired))
        assert out.terminal.as_divisor() == replayed


def _split(rng, total, n):
    cuts = sorted(rng.randrange(total + 1) for _ in range(n - 1))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(total - prev)
    return parts


def test_abelian_runs(catalog_tiny):
    rng = random.Random(109)
    policies = [lowest_index_policy, round_robin_policy()] + [
        random_policy(seed) for seed in range(4)
    ]
    for g in catalog_tiny[:10]:
        for total in (g.m - 1, g.m, 2 * g.m - g.n):
            if total < 0:
                continue
            config = SandpileConfig(tuple(_split(rng, total, g.n)))
            baseline = run(g, config)
            if baseline.outcome != "terminated":
                continue
            for policy in policies:
                again = run(g, config, policy=policy)
                assert again.outcome == "terminated"
                assert again.terminal == baseline.terminal
                assert again.move_count == baseline.move_count
                assert again.fired == baseline.fired


# -- duality ----------------------------------------------------------------------


def test_duality_examples(b2):
    assert not finiteness_via_duality(b2, SandpileConfig((2, 0)))
    assert finiteness_via_duality(b2, SandpileConfig((1, 1)))


def test_duality_matches_simulation_exhaustively(b2, c3):
    for g in (b2, c3):
        for total in range(2 * g.m + 1):
            for config in all_configs(g, total):
                sim = run(g, config)
                assert finiteness_via_duality(g, config) == (
                    sim.outcome == "terminated"
                )


def test_total_thresholds(b2, c3):
    # high totals always spin, low totals always halt, the band holds both
    for g in (b2, c3):
        m, n = g.m, g.n
        for total in range(2 * m + 1):
            outcomes = {
                run(g, config).outcome for config in all_configs(g, total)
            }
            if total > 2 * m - n:
                assert outcomes == {"infinite"}
            elif total < m:
                assert outcomes == {"terminated"}
            else:
                assert outcomes == {"terminated", "infinite"}


# -- critical configurations -------------------------------------------------------


def test_is_critical_examples(c3):
    assert is_critical(c3, Divisor((0, 1, 1)))
    assert is_critical(c3, Divisor((0, 0, 1)))
    assert not is_critical(c3, Divisor((0, 0, 0)))
    assert not is_critical(c3, Divisor((0, 2, 0)))  # over the stability bound


def test_critical_ignores_base_coefficient(c3):
    assert is_critical(c3, Divisor((7, 1, 1)))
    assert is_critical(c3, Divisor((-3, 1, 1)))


def test_star_swaps_critical_and_reduced(catalog_tiny):
    # off the base both families live in the degree box; the reflection
    # matches them up exactly, so the counts also agree
    for g in catalog_tiny[:20]:
        base = g.vertices[0]
        boxes = [range(g.degree(v)) for v in range(1, g.n)]
        criticals = 0
        for combo in itertools.product(*boxes):
            d = Divisor((0,) + combo)
            crit = is_critical(g, d, base)
            criticals += crit
            assert crit == is_reduced(g, star_transform(g, d), base)
        assert criticals == g.spanning_tree_count()


def test_critical_count_on_cycle():
    g = cycle_graph(4)
    boxes = itertools.product(range(2), range(2), range(2))
    found = [c for c in boxes if is_critical(g, Divisor((0,) + c))]
    assert len(found) == 4
