"""JSON and text forms of monomials, codes and distributions."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .codewords import CodeSpec, WeightDistribution
from .enumeration import SpectrumEntry
from .errors import InputError
from .monomial import Monomial, MonomialSet, lambda_size

__all__ = [
    "monomial_to_json",
    "monomial_from_json",
    "set_to_json",
    "set_from_json",
    "code_to_json",
    "code_from_json",
    "load_code",
    "wd_to_json",
    "wd_from_json",
    "spectrum_to_json",
    "spectrum_from_json",
    "order_to_json",
    "dumps",
]


def monomial_to_json(f: Monomial) -> list[int]:
    return list(f.indices)


def monomial_from_json(m: int, obj) -> Monomial:
    if isinstance(obj, str):
        return Monomial.parse(m, obj)
    return Monomial.from_indices(m, obj)


def set_to_json(s: MonomialSet) -> dict:
    return {"m": s.m, "monomials": [monomial_to_json(f) for f in s]}


def set_from_json(obj: dict) -> MonomialSet:
    try:
        m = int(obj["m"])
        items = obj["monomials"]
    except (KeyError, TypeError) as e:
        raise InputError(f"monomial set JSON needs 'm' and 'monomials': {e}") from None
    fs = [monomial_from_json(m, x) for x in items]
    if len(set(fs)) != len(fs):
        raise InputError("duplicate monomials")
    return MonomialSet(m, fs)


def code_to_json(code: CodeSpec) -> dict:
    d = set_to_json(code.info_set)
    d.update(n=code.n, k=code.k, r=code.r)
    return d


def code_from_json(obj: dict) -> CodeSpec:
    code = CodeSpec(set_from_json(obj))
    for key in ("n", "k", "r"):
        if key in obj and obj[key] != getattr(code, key):
            raise InputError(f"field {key!r}={obj[key]} disagrees with the monomial list ({getattr(code, key)})")
    return code


def load_code(source: str) -> CodeSpec:
    """Inline JSON text, or a path to a UTF-8 JSON file."""
    text = source.strip()
    if not text.startswith("{"):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read code file {source!r}: {e}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid code JSON: {e}") from None
    return code_from_json(obj)


def wd_to_json(wd: WeightDistribution) -> dict:
    return {
        "n": wd.n,
        "k": wd.k,
        "complete": wd.complete,
        "counts": {str(w): str(c) for w, c in wd.counts.items()},
    }


def wd_from_json(obj: dict) -> WeightDistribution:
    try:
        counts = {int(w): int(c) for w, c in obj["counts"].items()}
        return WeightDistribution(int(obj["n"]), int(obj["k"]), counts, bool(obj.get("complete", True)))
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"bad distribution JSON: {e}") from None


def spectrum_to_json(entries: list[SpectrumEntry]) -> list[dict]:
    return [{"weight": e.weight, "count": str(e.count), "exact": e.exact, "mu": e.mu} for e in entries]


def spectrum_from_json(obj: list[dict]) -> list[SpectrumEntry]:
    return [SpectrumEntry(int(d["weight"]), int(d["count"]), bool(d["exact"]), int(d["mu"])) for d in obj]


def order_to_json(order: list[Monomial]) -> list[dict]:
    return [{"indices": list(f.indices), "level": lambda_size(f)} for f in order]


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)?\s*\]")


def dumps(obj) -> str:
    """Indented JSON with integer lists kept on one line."""
    text = json.dumps(obj, indent=2, sort_keys=False)
    return _INT_LIST.sub(lambda mt: "[" + ", ".join(re.findall(r"-?\d+", mt.group(0))) + "]", text)
