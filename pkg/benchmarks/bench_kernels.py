"""Compare the compiled and pure-Python kernels.

Usage: python3 benchmarks/bench_kernels.py [--games N]

Each kernel is timed on both backends with identical inputs, then a full
self-play game is timed with each backend swapped into ``flowsynth.kernels``.
"""
import argparse
import time
import timeit

import numpy as np

from flowsynth import _pykernels, kernels
from flowsynth import network as nn
from flowsynth.encoding import EncodingConfig
from flowsynth.search import SearchConfig
from flowsynth.simulator import EconomicConfig, Flowsheet, UnitKind
from flowsynth.trainer import sample_case1_feed, self_play_game

try:
    from flowsynth import _ckernels
except ImportError:
    _ckernels = None

NAMES = ("react_extent", "encode_matrix", "feasible_mask", "select_branch", "mlp_forward")


def kernel_cases():
    enc = EncodingConfig(10)
    f = (Flowsheet.from_feeds([(.3, .2, .4, .1), (0, .5, .5, 0)])
         .place(UnitKind.D1, 0).place(UnitKind.R, 1).place(UnitKind.D2, 3))
    params = nn.init_params(nn.NetworkConfig(enc.state_len, enc.n_action, 2, 32), 0)
    s = np.zeros(enc.state_len)
    s[:200] = np.random.default_rng(0).uniform(size=200)
    rng = np.random.default_rng(1)
    n = 40
    visits = rng.integers(0, 5, n).astype(float)
    sums = visits * rng.uniform(-1, 1, n)
    priors = rng.dirichlet(np.ones(n))
    out = np.zeros((enc.n_matrix, enc.row_len))
    mask = np.zeros(enc.n_action, np.uint8)
    return {
        "react_extent": lambda k: k.react_extent(0.5, 0.4, 1.3),
        "encode_matrix": lambda k: k.encode_matrix(f.flows, f.dest, f.outs, f.n_streams, out),
        "feasible_mask": lambda k: k.feasible_mask(f.dest, f.n_streams, enc.n_matrix, mask),
        "select_branch": lambda k: k.select_branch(visits, sums, priors, -0.9),
        "mlp_forward": lambda k: k.mlp_forward(
            s, [params["W0"], params["W1"]], [params["b0"], params["b1"]],
            params["Wp"], params["bp"], params["Wv"], params["bv"]),
    }


def per_call(fn, number=2000):
    return min(timeit.repeat(fn, number=number, repeat=5)) / number


def time_games(impl, n_games):
    for name in NAMES:
        setattr(kernels, name, getattr(impl, name))
    enc = EncodingConfig(10)
    econ = EconomicConfig.preset(1)
    params = nn.init_params(nn.NetworkConfig(enc.state_len, enc.n_action, 2, 32), 0)
    rng = np.random.default_rng(0)
    t0 = time.perf_counter()
    for _ in range(n_games):
        self_play_game(params, sample_case1_feed(rng), econ, enc, SearchConfig(K=20), rng)
    return (time.perf_counter() - t0) / n_games


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--games", type=int, default=20)
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e .` first")
    cases = kernel_cases()
    print(f"{'kernel':<16}{'python us':>12}{'cython us':>12}{'speedup':>10}")
    for name in NAMES:
        tp = per_call(lambda: cases[name](_pykernels))
        tc = per_call(lambda: cases[name](_ckernels))
        print(f"{name:<16}{tp * 1e6:>12.2f}{tc * 1e6:>12.2f}{tp / tc:>10.1f}")
    saved = {name: getattr(kernels, name) for name in NAMES}
    try:
        gp = time_games(_pykernels, args.games)
        gc = time_games(_ckernels, args.games)
    finally:
        for name, fn in saved.items():
            setattr(kernels, name, fn)
    print(f"{'self-play game':<16}{gp * 1e3:>10.1f}ms{gc * 1e3:>10.1f}ms{gp / gc:>10.1f}")


if __name__ == "__main__":
    main()
