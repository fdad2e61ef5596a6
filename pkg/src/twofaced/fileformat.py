"""JSON files for distributions and determining sequences.

Scalars are ``[re_num, re_den, im_num, im_den]`` integer lists (plain
integers are accepted too); words are space-separated letters with a ``*``
suffix for adjoints.  A distribution file gives either ``moments`` or a
``cumulants`` block ``{"kind": ..., "entries": {...}}``; missing words count
as zero when ``flags.sparse`` is set.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .diagonal import DeterminingSequences, all_chis
from .distribution import CumulantTable, MomentTable, cumulants_to_moments
from .errors import FormatError, TwoFacedError
from .kernels import GaussianRational, scalar
from .ncpoly import Alphabet, word_str
from .partitions import ChiMap

FORMAT_VERSION = 1
KINDS = ("bifree", "biboolean", "free", "boolean")


def encode_scalar(value) -> list[int]:
    return list(scalar(value).to_parts())


def decode_scalar(raw: Any, where: str) -> GaussianRational:
    if isinstance(raw, bool):
        raise FormatError(f"{where}: expected a scalar, got a boolean")
    if isinstance(raw, int):
        return GaussianRational(raw)
    if not isinstance(raw, list) or len(raw) != 4:
        raise FormatError(f"{where}: expected [re_num, re_den, im_num, im_den]")
    for i, part in enumerate(raw):
        if isinstance(part, bool) or not isinstance(part, int):
            raise FormatError(f"{where}[{i}]: expected an integer, got {part!r}")
    if raw[1] == 0:
        raise FormatError(f"{where}[1]: zero denominator")
    if raw[3] == 0:
        raise FormatError(f"{where}[3]: zero denominator")
    return GaussianRational.from_parts(*raw)


def _read_json(path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FormatError(f"{path}: no such file") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror or exc}") from None
    return parse_json(text, str(path))


def parse_json(text: str, name: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{name}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _require(obj: dict, key: str, typ, where: str):
    if key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, typ) or isinstance(val, bool) and typ is not bool:
        raise FormatError(f"{where}.{key}: expected {getattr(typ, '__name__', typ)}")
    return val


def _alphabet(raw, where: str) -> Alphabet:
    if not isinstance(raw, list) or not raw:
        raise FormatError(f"{where}: expected a non-empty list")
    decl = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict) or "symbol" not in item:
            raise FormatError(f"{where}[{i}]: expected {{symbol, side}}")
        decl.append((item["symbol"], item.get("side")))
    try:
        return Alphabet(decl)
    except TwoFacedError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _entries(alphabet: Alphabet, raw, where: str) -> dict:
    if not isinstance(raw, dict):
        raise FormatError(f"{where}: expected an object keyed by words")
    out = {}
    for key, val in raw.items():
        spot = f"{where}[{key!r}]"
        try:
            w = alphabet.parse(key)
        except TwoFacedError as exc:
            raise FormatError(f"{spot}: {exc}") from None
        if w in out:
            raise FormatError(f"{spot}: duplicate word")
        out[w] = decode_scalar(val, spot)
    return out


def distribution_from_json(data: Any, name: str = "<input>") -> MomentTable:
    if not isinstance(data, dict):
        raise FormatError(f"{name}: expected a JSON object")
    alphabet = _alphabet(data.get("alphabet"), f"{name}: alphabet")
    degree = _require(data, "degree", int, name)
    if degree < 0:
        raise FormatError(f"{name}.degree: must be nonnegative")
    flags = data.get("flags", {}) or {}
    if not isinstance(flags, dict):
        raise FormatError(f"{name}.flags: expected an object")
    unknown = set(flags) - {"tracial", "star_symmetric", "sparse"}
    if unknown:
        raise FormatError(f"{name}.flags: unknown flag {sorted(unknown)[0]!r}")
    tracial = bool(flags.get("tracial", False))
    star_symmetric = bool(flags.get("star_symmetric", False))
    sparse = bool(flags.get("sparse", False))
    has_m, has_c = "moments" in data, "cumulants" in data
    if has_m == has_c:
        raise FormatError(f"{name}: give exactly one of 'moments' or 'cumulants'")
    try:
        if has_m:
            moments = _entries(alphabet, data["moments"], f"{name}.moments")
            return MomentTable(alphabet, degree, moments, tracial=tracial,
                               star_symmetric=star_symmetric, sparse=sparse)
        block = data["cumulants"]
        if not isinstance(block, dict):
            raise FormatError(f"{name}.cumulants: expected an object")
        kind = block.get("kind")
        if kind not in KINDS:
            raise FormatError(f"{name}.cumulants.kind: expected one of {', '.join(KINDS)}")
        entries = _entries(alphabet, block.get("entries", {}), f"{name}.cumulants.entries")
        table = CumulantTable(kind, alphabet, degree, entries, sparse=sparse)
        mu = cumulants_to_moments(table, degree, tracial=tracial, star_symmetric=star_symmetric)
        if tracial or star_symmetric:
            mu.validate_flags()
        return mu
    except FormatError:
        raise
    except TwoFacedError as exc:
        raise FormatError(f"{name}: {exc}") from None


def load_distribution(path) -> MomentTable:
    return distribution_from_json(_read_json(path), str(path))


def distribution_to_json(mu: MomentTable, degree: int | None = None, sparse: bool = True) -> dict:
    """Moments in deterministic word order; zeros dropped when ``sparse``."""
    deg = mu.degree if degree is None else min(degree, mu.degree)
    moments = {}
    for w in mu.words(deg):
        if not w:
            continue
        val = mu(w)
        if val or not sparse:
            moments[word_str(w)] = encode_scalar(val)
    return {
        "format": FORMAT_VERSION,
        "alphabet": [{"symbol": s, "side": side} for s, side in mu.alphabet.symbols],
        "degree": deg,
        "flags": {"tracial": bool(mu.tracial), "star_symmetric": bool(mu.star_symmetric),
                  "sparse": sparse},
        "moments": moments,
    }


def cumulants_to_json(table: CumulantTable, degree: int | None = None, *,
                      tracial: bool = False, star_symmetric: bool = False) -> dict:
    """A distribution file given by its nonzero cumulants."""
    deg = table.degree if degree is None else min(degree, table.degree)
    entries = {word_str(w): encode_scalar(v) for w, v in table.nonzero_items(deg) if w}
    return {
        "format": FORMAT_VERSION,
        "alphabet": [{"symbol": s, "side": side} for s, side in table.alphabet.symbols],
        "degree": deg,
        "flags": {"tracial": tracial, "star_symmetric": star_symmetric, "sparse": True},
        "cumulants": {"kind": table.kind, "entries": entries},
    }


_SCALAR_RUN = re.compile(r"\[\s*(-?\d+),\s*(-?\d+),\s*(-?\d+),\s*(-?\d+)\s*\]")


def dump_json(data: Any) -> str:
    """Indented JSON with each encoded scalar kept on one line."""
    text = json.dumps(data, indent=1, ensure_ascii=False)
    return _SCALAR_RUN.sub(r"[\1, \2, \3, \4]", text) + "\n"


def save_distribution(mu: MomentTable, path, degree: int | None = None, sparse: bool = True) -> None:
    Path(path).write_text(dump_json(distribution_to_json(mu, degree, sparse)), encoding="utf-8")


# ---------------------------------------------------------------------------
# determining sequences: {"degree": N, "alpha": {"LR": scalar, ...}, "beta": {...}}

def sequences_from_json(data: Any, name: str = "<input>") -> DeterminingSequences:
    if not isinstance(data, dict):
        raise FormatError(f"{name}: expected a JSON object")
    degree = _require(data, "degree", int, name)
    seq = DeterminingSequences(degree=degree)
    for which in ("alpha", "beta"):
        raw = _require(data, which, dict, name)
        target = getattr(seq, which)
        for key, val in raw.items():
            spot = f"{name}.{which}[{key!r}]"
            try:
                chi = ChiMap(key)
            except ValueError as exc:
                raise FormatError(f"{spot}: {exc}") from None
            if chi.n % 2 or chi.n > degree or chi.n == 0:
                raise FormatError(f"{spot}: colourings must have even length in 2..{degree}")
            target[str(chi)] = decode_scalar(val, spot)
        for n in range(2, degree + 1, 2):
            for chi in all_chis(n):
                if str(chi) not in target:
                    raise FormatError(f"{name}.{which}: missing colouring {chi}")
    return seq


def load_sequences(path) -> DeterminingSequences:
    return sequences_from_json(_read_json(path), str(path))


def sequences_to_json(seq: DeterminingSequences) -> dict:
    out = {"format": FORMAT_VERSION, "degree": seq.degree}
    for which in ("alpha", "beta"):
        table = getattr(seq, which)
        out[which] = {str(chi): encode_scalar(table[str(chi)])
                      for n in range(2, seq.degree + 1, 2) for chi in all_chis(n)}
    return out


def save_sequences(seq: DeterminingSequences, path) -> None:
    Path(path).write_text(dump_json(sequences_to_json(seq)), encoding="utf-8")


__all__ = [
    "FORMAT_VERSION", "encode_scalar", "decode_scalar", "parse_json",
    "distribution_from_json", "load_distribution", "distribution_to_json",
    "cumulants_to_json", "dump_json", "save_distribution", "sequences_from_json", "load_sequences",
    "sequences_to_json", "save_sequences",
]
