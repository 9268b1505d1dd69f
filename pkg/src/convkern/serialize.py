"""JSON schemas for polynomials, impulses, spectra, sequences and dilations.

All emitters order their output canonically (graded-lex term order, fixed key
order), so serialized bytes are reproducible across runs.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence

from .apolar import DInvariantSpace
from .filters import ExpPolySeq, Impulse
from .mpoly import LaurentPoly
from .spectrum import Spectrum, Zero
from .subdivision import Dilation


class FormatError(ValueError):
    """Malformed or inconsistent JSON payload."""


def complex_to_json(c: complex) -> Dict[str, float]:
    return {"re": float(c.real), "im": float(c.imag)}


def complex_from_json(obj: Any) -> complex:
    if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
        raise FormatError(f"expected {{re, im}}, got {obj!r}")
    return complex(float(obj.get("re", 0.0)), float(obj.get("im", 0.0)))


def poly_to_json(f: LaurentPoly) -> List[Dict[str, Any]]:
    return [{"exp": list(exp), "re": float(c.real), "im": float(c.imag)}
            for exp, c in f.sorted_terms()]


def poly_from_json(obj: Any, dim: int | None = None) -> LaurentPoly:
    if not isinstance(obj, list):
        raise FormatError("polynomial must be a JSON array of terms")
    terms = {}
    for entry in obj:
        if not isinstance(entry, dict) or "exp" not in entry:
            raise FormatError(f"bad polynomial term {entry!r}")
        exp = tuple(int(e) for e in entry["exp"])
        if dim is None:
            dim = len(exp)
        elif len(exp) != dim:
            raise FormatError("inconsistent exponent dimensions")
        c = complex(float(entry.get("re", 0.0)), float(entry.get("im", 0.0)))
        terms[exp] = terms.get(exp, 0) + c
    if dim is None:
        raise FormatError("cannot infer dimension of an empty polynomial")
    return LaurentPoly(dim, terms)


def impulse_to_json(h: Impulse) -> Dict[str, Any]:
    return {"dim": h.dim,
            "taps": [{"index": list(idx), "re": float(c.real), "im": float(c.imag)}
                     for idx, c in h.sorted_taps()]}


def impulse_from_json(obj: Any) -> Impulse:
    if not isinstance(obj, dict) or "dim" not in obj or "taps" not in obj:
        raise FormatError("impulse must be {dim, taps}")
    dim = int(obj["dim"])
    taps = {}
    for entry in obj["taps"]:
        if not isinstance(entry, dict) or "index" not in entry:
            raise FormatError(f"bad tap {entry!r}")
        idx = tuple(int(i) for i in entry["index"])
        if len(idx) != dim:
            raise FormatError("tap index has wrong dimension")
        taps[idx] = complex(float(entry.get("re", 0.0)), float(entry.get("im", 0.0)))
    return Impulse(dim, taps)


def filters_to_json(H: Sequence[Impulse]) -> Dict[str, Any]:
    return {"filters": [impulse_to_json(h) for h in H]}


def filters_from_json(obj: Any) -> List[Impulse]:
    if not isinstance(obj, dict) or "filters" not in obj:
        raise FormatError("filter file must be {filters: [...]}")
    out = [impulse_from_json(entry) for entry in obj["filters"]]
    if not out:
        raise FormatError("empty filter list")
    if len({h.dim for h in out}) != 1:
        raise FormatError("filters have mixed dimensions")
    return out


def spectrum_to_json(spec: Spectrum) -> Dict[str, Any]:
    dim = spec.zeros[0].dim if spec.zeros else 0
    return {"dim": dim,
            "zeros": [{"theta": [complex_to_json(t) for t in z.theta],
                       "Q_basis": [poly_to_json(p) for p in z.mult.basis]}
                      for z in spec.zeros]}


def spectrum_from_json(obj: Any) -> Spectrum:
    if not isinstance(obj, dict) or "zeros" not in obj:
        raise FormatError("spectrum must be {dim, zeros}")
    dim = int(obj.get("dim", 0))
    zeros = []
    for entry in obj["zeros"]:
        theta = tuple(complex_from_json(t) for t in entry["theta"])
        if dim and len(theta) != dim:
            raise FormatError("theta has wrong dimension")
        basis = tuple(poly_from_json(p, dim or len(theta)) for p in entry["Q_basis"])
        try:
            zeros.append(Zero(theta, DInvariantSpace(basis)))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    # duplicate theta and similar violations are mathematical preconditions,
    # not format errors, so the Spectrum constructor's ValueError propagates
    return Spectrum(tuple(zeros))


def expseq_to_json(seq: ExpPolySeq) -> Dict[str, Any]:
    return {"terms": [{"theta": [complex_to_json(t) for t in theta],
                       "p": poly_to_json(p)}
                      for theta, p in seq.terms]}


def expseq_from_json(obj: Any) -> ExpPolySeq:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise FormatError("sequence must be {terms}")
    terms = []
    for entry in obj["terms"]:
        theta = tuple(complex_from_json(t) for t in entry["theta"])
        p = poly_from_json(entry["p"], len(theta))
        terms.append((theta, p))
    try:
        return ExpPolySeq(tuple(terms))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def dilation_to_json(Xi: Dilation) -> Dict[str, Any]:
    return {"Xi": [list(row) for row in Xi.Xi]}


def dilation_from_json(obj: Any) -> Dilation:
    if not isinstance(obj, dict) or "Xi" not in obj:
        raise FormatError("dilation must be {Xi}")
    try:
        return Dilation(tuple(tuple(int(v) for v in row) for row in obj["Xi"]))
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc


def candidates_from_json(obj: Any) -> List:
    if not isinstance(obj, dict) or "candidates" not in obj:
        raise FormatError("candidates must be {candidates}")
    out = []
    for entry in obj["candidates"]:
        theta = tuple(complex_from_json(t) for t in entry["theta"])
        out.append((theta, int(entry.get("order", 0))))
    return out


def dumps(obj: Any) -> str:
    """Deterministic JSON text: fixed key order as constructed, shortest
    round-trip float representation (Python's default)."""
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"
