"""Per vehicle path admission under delay and bandwidth bounds.

Attachment runs in two passes over the whole fleet each round: first every
vehicle re-books the paths it already holds, then remaining slots are filled
nearest first. Incumbents therefore never lose a slot to a newcomer, which
is what keeps handover counts low.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .config import SimConfig
from .radio import LinkStats, alpha_trans

# (vehicle, map, attached_count) -> stats for that link
StatsProvider = Callable[[int, int, int], LinkStats]


@dataclass(frozen=True)
class PathAssignment:
    vehicle: int
    paths: tuple[int, ...]
    stats: tuple[LinkStats, ...]


def admits(stats: LinkStats, config: SimConfig) -> bool:
    return stats.total_delay < config.delay_threshold and stats.bandwidth >= config.bandwidth_min


def count_handovers(prev: Iterable[int], new: Iterable[int]) -> int:
    """Paths held now that were not held before."""
    return len(set(new) - set(prev))


def retain_paths(
    vehicle: int,
    prev_paths: Sequence[int],
    candidates: Sequence[tuple[float, int]],
    provider: StatsProvider,
    attach_counts: dict[int, int],
    config: SimConfig,
) -> list[LinkStats]:
    """Re-book still-qualifying previous paths, nearest first."""
    live = {m: d for d, m in candidates}
    held: list[LinkStats] = []
    order = sorted((live[m], m) for m in set(prev_paths) if m in live)
    for d, m in order:
        if len(held) >= config.max_paths:
            break
        if alpha_trans(d, config) * d >= config.delay_threshold:
            continue
        stats = provider(vehicle, m, attach_counts.get(m, 0) + 1)
        if admits(stats, config):
            attach_counts[m] = attach_counts.get(m, 0) + 1
            held.append(stats)
    return held


def grow_paths(
    vehicle: int,
    held: Sequence[LinkStats],
    candidates: Sequence[tuple[float, int]],
    provider: StatsProvider,
    attach_counts: dict[int, int],
    config: SimConfig,
) -> PathAssignment:
    """Rank every open candidate path by delay, then fill remaining slots.

    The delay of a path does not depend on how many vehicles share the MAP,
    so the ranking probes at share one; bandwidth is re-checked against the
    live attachment count at admission time.
    """
    chosen = list(held)
    taken = {s.map_ident for s in chosen}
    ranked = sorted(
        (provider(vehicle, m, 1).total_delay, d, m)
        for d, m in candidates
        if m not in taken
    )
    for delay, d, m in ranked:
        if len(chosen) >= config.max_paths:
            break
        # ranked ascending, so the first miss ends the scan
        if delay >= config.delay_threshold:
            break
        stats = provider(vehicle, m, attach_counts.get(m, 0) + 1)
        if admits(stats, config):
            attach_counts[m] = attach_counts.get(m, 0) + 1
            chosen.append(stats)
    chosen.sort(key=lambda s: (s.distance, s.map_ident))
    return PathAssignment(vehicle, tuple(s.map_ident for s in chosen), tuple(chosen))


def select_paths(
    vehicle: int,
    candidates: Sequence[tuple[float, int]],
    provider: StatsProvider,
    prev_paths: Sequence[int],
    attach_counts: dict[int, int],
    config: SimConfig,
) -> PathAssignment:
    """Single vehicle convenience: retention pass then growth pass."""
    held = retain_paths(vehicle, prev_paths, candidates, provider, attach_counts, config)
    return grow_paths(vehicle, held, candidates, provider, attach_counts, config)


def baseline_paths(
    strategy: str,
    vehicle: int,
    ordinal: int,
    round_index: int,
    candidates: Sequence[tuple[float, int]],
    provider: StatsProvider,
    attach_counts: dict[int, int],
    rng,
    config: SimConfig,
) -> PathAssignment:
    """Single path comparison policies.

    independent-random and distance-based attach unconditionally to their
    pick; sequence-based rotates through the roster but still has to pass
    the admission rule, dropping the round when it fails.
    """
    if not candidates:
        return PathAssignment(vehicle, (), ())
    roster = sorted(m for _, m in candidates)
    if strategy == "independent-random":
        pick = roster[int(rng.integers(0, len(roster)))]
    elif strategy == "distance-based":
        pick = min(candidates)[1]
    elif strategy == "sequence-based":
        pick = roster[(ordinal + round_index) % len(roster)]
    else:
        raise ValueError(f"unknown baseline strategy: {strategy}")
    stats = provider(vehicle, pick, attach_counts.get(pick, 0) + 1)
    if strategy == "sequence-based" and not admits(stats, config):
        return PathAssignment(vehicle, (), ())
    attach_counts[pick] = attach_counts.get(pick, 0) + 1
    return PathAssignment(vehicle, (pick,), (stats,))
