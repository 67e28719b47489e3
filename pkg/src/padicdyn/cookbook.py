"""Small-height parameter tuples realizing each case, found by exhaustive search.

The search walks rationals n/m in order of height max(|n|, m) and keeps, per
case key, the first tuple (a, b, c, d) encountered.  The shipped table in
``data/cookbook.json`` is exactly what ``search()`` returns; a test checks
that regeneration reproduces it.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from importlib import resources
from typing import Dict, Iterator, List

from .classifier import CaseTag, classify, critical_data, variant_key
from .map32 import InvalidParams, MapParams
from .padic import format_rational

VARIANT_KEYS = ("Phi1", "Phi2", "Phi3", "Phi4", "Phi5", "SPhi1", "SPhi2/C.a", "SPhi2/C.b",
                "SPhi3", "Psi1", "Psi2", "Psi3", "Unclassified")


def rationals_of_height(h: int, p: int) -> List[Fraction]:
    """Rationals of height exactly h with a denominator that is a power of p.

    Restricting denominators to powers of p keeps the search small while
    still reaching every norm p^e with |e| bounded by log_p h.
    """
    out = set()
    dens = [1]
    while dens[-1] * p <= h:
        dens.append(dens[-1] * p)
    for m in dens:
        for n in range(-h, h + 1):
            q = Fraction(n, m)
            if max(abs(q.numerator), q.denominator) == h:
                out.add(q)
    return sorted(out, key=lambda q: (abs(q), q < 0))


def candidate_values(p: int, max_height: int) -> Iterator[Fraction]:
    for h in range(1, max_height + 1):
        yield from rationals_of_height(h, p)


def _nondegenerate(data) -> bool:
    return not any(r.is_zero for r in (data.alpha, data.beta, data.delta, data.cap_a, data.cap_b))


def search(p: int = 3, max_height: int = 12, nondegenerate: bool = True) -> Dict[str, dict]:
    """First tuple per case key; ``nondegenerate`` skips tuples with a zero norm."""
    found: Dict[str, dict] = {}
    values = list(candidate_values(p, max_height))
    for h in range(1, max_height + 1):
        pool = [v for v in values if max(abs(v.numerator), v.denominator) <= h]
        for tup in itertools.product(pool, repeat=4):
            if max(max(abs(v.numerator), v.denominator) for v in tup) != h:
                continue
            try:
                params = MapParams.of(p, *tup)
            except InvalidParams:
                continue
            data = critical_data(params)
            if nondegenerate and not _nondegenerate(data):
                continue
            key = variant_key(classify(data), data)
            if key not in found:
                found[key] = {"p": p, **{k: format_rational(v) for k, v in zip("abcd", tup)}}
        if len(found) == len(VARIANT_KEYS):
            break
    return {k: found[k] for k in VARIANT_KEYS if k in found}


def load(path=None) -> Dict[str, dict]:
    if path is None:
        text = resources.files("padicdyn").joinpath("data/cookbook.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def params_for(key: str) -> MapParams:
    e = load()[key]
    return MapParams.of(e["p"], e["a"], e["b"], e["c"], e["d"])


def dump(table: Dict[str, dict]) -> str:
    return json.dumps(table, indent=2, sort_keys=True) + "\n"
