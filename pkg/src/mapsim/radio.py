"""Link level model: received power, SINR, shared bandwidth and delay."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .config import SimConfig


@dataclass(frozen=True)
class LinkStats:
    """Everything the admission rule and the metrics need about one link."""

    vehicle: int
    map_ident: int
    distance: float
    sinr: float
    bandwidth: float
    trans_delay: float
    sinr_delay: float
    total_delay: float


def received_power(tx_power: float, distance: float, path_loss_exp: float) -> float:
    # distances under one metre saturate instead of diverging
    return tx_power * max(distance, 1.0) ** (-path_loss_exp)


def compute_sinr(
    tx_power: float,
    distance: float,
    interferer_distances: Iterable[float],
    config: SimConfig,
) -> float:
    """Signal over noise plus co-channel interference, as a linear ratio."""
    signal = received_power(tx_power, distance, config.path_loss_exp)
    interference = sum(
        received_power(config.tx_power, d, config.path_loss_exp)
        for d in interferer_distances
    )
    return signal / (config.noise_power + interference)


def link_bandwidth(sinr: float, attached_count: int, config: SimConfig) -> float:
    """Capacity share seen by one of attached_count vehicles on the link."""
    if attached_count < 1:
        raise ValueError("attached_count must be at least 1")
    return (config.b_cap / attached_count) * math.log2(1.0 + sinr)


def alpha_trans(distance: float, config: SimConfig) -> float:
    return config.a0 * (1.0 + distance / config.d_c)


def alpha_sinr(sinr: float, config: SimConfig) -> float:
    return config.b0 * max(1.0, config.sinr_threshold / sinr)


def path_delay(distance: float, sinr: float, config: SimConfig) -> float:
    """Transmission term plus a quality term that blows up at poor SINR."""
    if sinr <= 0:
        raise ValueError("sinr must be positive")
    return alpha_trans(distance, config) * distance + alpha_sinr(sinr, config) / sinr


def make_link_stats(
    vehicle: int,
    map_ident: int,
    distance: float,
    config: SimConfig,
    attached_count: int = 1,
    interferer_distances: Iterable[float] = (),
) -> LinkStats:
    sinr = compute_sinr(config.tx_power, distance, interferer_distances, config)
    trans = alpha_trans(distance, config) * distance
    sdel = alpha_sinr(sinr, config) / sinr
    return LinkStats(
        vehicle=vehicle,
        map_ident=map_ident,
        distance=distance,
        sinr=sinr,
        bandwidth=link_bandwidth(sinr, attached_count, config),
        trans_delay=trans,
        sinr_delay=sdel,
        total_delay=trans + sdel,
    )
