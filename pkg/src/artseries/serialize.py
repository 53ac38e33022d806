"""JSON encodings for series, symmetric series and pseudointegers.

Exponents are written as exact ``"p/q"`` strings and coefficients as the two
float parts, which ``json`` round-trips bit for bit.  Nested coefficients
(series in an inner variable) are stored under ``"series"`` instead of
``"re"``/``"im"``.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .profinite import Pseudointeger
from .series import Orientation, Series
from .symmetric import SymSeries


def fraction_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"exponent must be an exact fraction string, got {text!r}")
    return Fraction(text)


def _coeff_to_json(c) -> dict:
    if isinstance(c, Series):
        return {"series": series_to_json(c)}
    c = complex(c)
    return {"re": c.real, "im": c.imag}


def _coeff_from_json(obj: dict):
    if "series" in obj:
        return series_from_json(obj["series"])
    return complex(float(obj["re"]), float(obj["im"]))


def series_to_json(f: Series) -> dict:
    out = {
        "orientation": f.orientation.value,
        "window": fraction_str(f.bound),
        "terms": [{"exp": fraction_str(a), **_coeff_to_json(c)} for a, c in f.terms],
    }
    if f.var != "x" or f.inner:
        out["var"] = f.var
        out["inner"] = list(f.inner)
    return out


def series_from_json(obj: dict) -> Series:
    terms = {}
    for item in obj["terms"]:
        a = parse_fraction(item["exp"])
        if a in terms:
            raise ValueError(f"duplicate exponent {a} in series JSON")
        terms[a] = _coeff_from_json(item)
    return Series(
        Orientation.coerce(obj["orientation"]),
        terms,
        parse_fraction(obj["window"]),
        obj.get("var", "x"),
        tuple(obj.get("inner", ())),
    )


def sym_to_json(f: SymSeries) -> dict:
    return {
        "nvars": f.nvars,
        "cutoff": fraction_str(f.cutoff),
        "coeffs": [
            {"partition": [fraction_str(p) for p in beta], "re": c.real, "im": c.imag}
            for beta, c in f.coeffs
        ],
    }


def sym_from_json(obj: dict) -> SymSeries:
    coeffs = {}
    for item in obj["coeffs"]:
        beta = tuple(parse_fraction(p) for p in item["partition"])
        coeffs[beta] = complex(float(item["re"]), float(item["im"]))
    return SymSeries.build(int(obj["nvars"]), coeffs, parse_fraction(obj["cutoff"]))


def pseudointeger_to_json(a: Pseudointeger) -> dict:
    return {"bound": a.bound, "residues": list(a.residues)}


def pseudointeger_from_json(obj: dict) -> Pseudointeger:
    return Pseudointeger(int(obj["bound"]), tuple(int(k) for k in obj["residues"]))


def to_json(value) -> dict:
    """Tagged-free encoding of any value the evaluator can produce."""
    if isinstance(value, Series):
        return series_to_json(value)
    if isinstance(value, SymSeries):
        return sym_to_json(value)
    if isinstance(value, Pseudointeger):
        return pseudointeger_to_json(value)
    if isinstance(value, bool) or value is None:
        return {"value": value}
    if isinstance(value, int):
        return {"value": value}
    if isinstance(value, Fraction):
        return {"value": fraction_str(value)}
    c = complex(value)
    return {"re": c.real, "im": c.imag}


def from_json(obj: dict):
    """Inverse of :func:`to_json`, dispatching on the keys present."""
    if "orientation" in obj:
        return series_from_json(obj)
    if "nvars" in obj:
        return sym_from_json(obj)
    if "residues" in obj:
        return pseudointeger_from_json(obj)
    if "value" in obj:
        v = obj["value"]
        return parse_fraction(v) if isinstance(v, str) else v
    return complex(float(obj["re"]), float(obj["im"]))


def dumps(value) -> str:
    return json.dumps(to_json(value), sort_keys=True)


def loads(text: str):
    return from_json(json.loads(text))


def load_path(path):
    with open(path, encoding="utf-8") as fh:
        return from_json(json.load(fh))
