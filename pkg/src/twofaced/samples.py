"""The shipped sample corpus: builders, file locations and regeneration."""

from __future__ import annotations

from pathlib import Path

from .distribution import BiCircularSpec, CumulantTable, bi_circular_cumulants, bi_haar, haar_unitary
from .fileformat import cumulants_to_json, distribution_to_json, dump_json
from .kernels import ONE, ZERO, GaussianRational
from .ncpoly import Alphabet
from .products import corollary_4_10_cumulants, theorem_2_7_cumulants
from .distribution import MomentTable

SAMPLE_DIR = Path(__file__).with_name("samples")
SAMPLE_DEGREE = 8

COVARIANCE_A = BiCircularSpec(2, 1, 3)
COVARIANCE_B = BiCircularSpec(1, GaussianRational(0, 1), 2)


def _pair() -> Alphabet:
    return Alphabet([("x", "L"), ("y", "R")])


def _single() -> Alphabet:
    return Alphabet([("x", None), ("y", None)])


def _bicircular(spec):
    return lambda: cumulants_to_json(bi_circular_cumulants(spec, SAMPLE_DEGREE))


def _bihaar():
    # stored by its (far sparser) bi-free cumulants
    kappa = CumulantTable.from_moments("bifree", bi_haar(SAMPLE_DEGREE), SAMPLE_DEGREE)
    return cumulants_to_json(kappa, star_symmetric=True)


def _cross_pairs():
    return cumulants_to_json(theorem_2_7_cumulants(SAMPLE_DEGREE))


def _eta_block():
    return cumulants_to_json(corollary_4_10_cumulants(SAMPLE_DEGREE))


def _sparse(kind, alphabet, entries, **flags):
    a = alphabet
    table = CumulantTable(kind, a, SAMPLE_DEGREE, {a.parse(k): v for k, v in entries.items()},
                          sparse=True)
    return cumulants_to_json(table, **flags)


def _not_r_diagonal():
    # a left/left cumulant with no star alternation
    return _sparse("bifree", _pair(), {"x x": ONE, "x x*": ONE})


def _not_eta_diagonal():
    return _sparse("biboolean", _pair(), {"x x": ONE, "x x*": ONE})


def _circular_single():
    # cumulants constant on cyclic classes and supported on alternating cycles
    half = GaussianRational(1) / 2
    return _sparse("free", _single(), {
        "x x*": ONE, "x* x": ONE, "y y*": ONE, "y* y": ONE,
        "x y*": half, "y* x": half, "y x*": half, "x* y": half,
    }, tracial=True)


def _semicircular_single():
    return _sparse("free", _single(), {"x x": ONE, "y y": ONE, "x x*": ONE, "x* x": ONE},
                   tracial=True)


def _haar_x():
    return distribution_to_json(haar_unitary(SAMPLE_DEGREE, "x"))


def _zero_x():
    mu = MomentTable(Alphabet([("x", None)]), SAMPLE_DEGREE,
                     source=lambda w: ONE if not w else ZERO, tracial=True, star_symmetric=True)
    return distribution_to_json(mu)


SAMPLES = {
    "bicircular_a.json": (_bicircular(COVARIANCE_A), "bi-circular pair, covariance [[2, 1], [1, 3]]"),
    "bicircular_b.json": (_bicircular(COVARIANCE_B), "bi-circular pair, covariance [[1, i], [-i, 2]]"),
    "bihaar.json": (_bihaar, "commuting Haar unitary pair"),
    "cross_pairs.json": (_cross_pairs, "R-diagonal pair whose squares are not bi-free"),
    "eta_block.json": (_eta_block, "eta-diagonal pair whose squares are not bi-Boolean independent"),
    "not_r_diagonal.json": (_not_r_diagonal, "non-example for the R-diagonal check"),
    "not_eta_diagonal.json": (_not_eta_diagonal, "non-example for the eta-diagonal check"),
    "circular_single.json": (_circular_single, "tracial pair with R-diagonal left/right reduction"),
    "semicircular_single.json": (_semicircular_single, "non-example for the chain condition"),
    "haar_x.json": (_haar_x, "single Haar unitary"),
    "zero_x.json": (_zero_x, "single variable with all moments zero"),
}


def sample_path(name: str) -> Path:
    if not name.endswith(".json"):
        name += ".json"
    return SAMPLE_DIR / name


def render(name: str) -> str:
    build, _ = SAMPLES[name]
    return dump_json(build())


def write_samples(directory=None) -> list[Path]:
    out_dir = Path(directory) if directory else SAMPLE_DIR
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name in SAMPLES:
        path = out_dir / name
        path.write_text(render(name), encoding="utf-8")
        written.append(path)
    return written


__all__ = ["SAMPLE_DIR", "SAMPLES", "sample_path", "render", "write_samples",
           "COVARIANCE_A", "COVARIANCE_B"]
