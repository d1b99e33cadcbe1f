"""Seeded sampling of pairs and the chunked, worker-independent sweep driver."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from app.api.schemas import SampleConfig, VerificationReport

logger = logging.getLogger(__name__)

# Geometric means of the sampled pairs are drawn log-uniformly from this range.
SCALE_RANGE = (1e-3, 1e3)


@dataclass(frozen=True)
class PairChunk:
    index: int
    a: np.ndarray
    b: np.ndarray
    y: np.ndarray


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    """Generator of chunk ``index``; depends only on (seed, index)."""

    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def log_uniform(rng: np.random.Generator, low: float, high: float, size: int) -> np.ndarray:
    return np.exp(rng.uniform(np.log(low), np.log(high), size))


def sample_chunk(cfg: SampleConfig, index: int, size: int) -> PairChunk:
    """Pairs a = G e^y, b = G e^-y with |y| log-uniform on [x_min, x_max] and a random side."""

    rng = chunk_rng(cfg.seed, index)
    y = log_uniform(rng, cfg.x_min, cfg.x_max, size)
    y = np.where(rng.random(size) < 0.5, -y, y)
    scale = log_uniform(rng, SCALE_RANGE[0], SCALE_RANGE[1], size)
    return PairChunk(index=index, a=scale * np.exp(y), b=scale * np.exp(-y), y=y)


def chunk_sizes(cfg: SampleConfig) -> List[int]:
    full, rest = divmod(cfg.n_samples, cfg.chunk_size)
    return [cfg.chunk_size] * full + ([rest] if rest else [])


def run_chunked(cfg: SampleConfig, evaluate: Callable[[PairChunk], VerificationReport]) -> VerificationReport:
    """Evaluate every chunk, possibly in parallel, and merge in chunk order."""

    sizes = chunk_sizes(cfg)
    if not sizes:
        return VerificationReport()

    def work(index: int) -> VerificationReport:
        return evaluate(sample_chunk(cfg, index, sizes[index]))

    if cfg.workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(work, range(len(sizes))))
    else:
        parts = [work(index) for index in range(len(sizes))]
    report = parts[0]
    for part in parts[1:]:
        report = report.merge(part)
    logger.debug("sweep merged chunks=%s workers=%s checked=%s", len(parts), cfg.workers, report.checked)
    return report
