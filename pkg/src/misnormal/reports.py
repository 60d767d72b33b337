"""Report records and their JSON form.

Vertex sets are written as sorted integer lists; when the host graph is a
product the same sets are repeated as coordinate tuples under
``witness_coords``.  Timings are only emitted when asked for, so that two runs
with the same inputs produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .graph import ProductGraph, VertexSet

NORMAL, NOT_NORMAL, INCONCLUSIVE = "normal", "not_normal", "inconclusive"
PRIMITIVE, IMPRIMITIVE = "primitive", "imprimitive"
VERIFIED, HYPOTHESIS_NOT_MET, VIOLATED = "verified", "hypothesis_not_met", "violated"


def _coords(P: ProductGraph | None, s: VertexSet | None):
    if P is None or s is None:
        return None
    return [list(P.coords(v)) for v in s]


def _vlist(s: VertexSet | None):
    return None if s is None else s.to_list()


@dataclass
class NormalityReport:
    factors: list[str]
    alpha_product: int
    eq1_value: int
    verdict: str
    num_sets: int
    complete: bool
    classified: list[str]
    witness: VertexSet | None = None
    product: ProductGraph | None = field(default=None, repr=False)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def tag_counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for t in self.classified:
            out[t] = out.get(t, 0) + 1
        return dict(sorted(out.items()))

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        d = {
            "kind": "normality",
            "factors": self.factors,
            "verdict": self.verdict,
            "alpha_product": self.alpha_product,
            "eq1_value": self.eq1_value,
            "num_sets": self.num_sets,
            "complete": self.complete,
            "tag_counts": self.tag_counts,
            "classified": self.classified,
            "witnesses": {} if self.witness is None else {"mixed": _vlist(self.witness)},
        }
        if self.witness is not None:
            d["witness_coords"] = {"mixed": _coords(self.product, self.witness)}
        if timings:
            d["timings"] = self.timings
        return d


@dataclass
class PrimitivityReport:
    graph: str
    verdict: str
    alpha: int
    n: int
    method: str
    witness: VertexSet | None = None
    witness_closed_neighborhood: VertexSet | None = None
    max_imprimitive: VertexSet | None = None
    num_witnesses: int = 0
    scanned: int = 0
    notes: list[str] = field(default_factory=list)
    product: ProductGraph | None = field(default=None, repr=False)
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        w = {}
        if self.witness is not None:
            w = {
                "imprimitive": _vlist(self.witness),
                "closed_neighborhood": _vlist(self.witness_closed_neighborhood),
                "max_imprimitive": _vlist(self.max_imprimitive),
            }
        d = {
            "kind": "primitivity",
            "graph": self.graph,
            "verdict": self.verdict,
            "alpha": self.alpha,
            "n": self.n,
            "method": self.method,
            "num_witnesses": self.num_witnesses,
            "scanned": self.scanned,
            "witness": _vlist(self.witness),
            "witnesses": w,
            "notes": self.notes,
        }
        if self.witness is not None:
            a, na = len(self.witness), len(self.witness_closed_neighborhood)
            d["witness_data"] = {"size": a, "closed_size": na, "identity": f"{a}*{self.n} = {self.alpha}*{na}"}
            if self.product is not None:
                d["witness_coords"] = {k: _coords(self.product, VertexSet(self.n, sum(1 << v for v in vs))) for k, vs in w.items()}
        if timings:
            d["timings"] = self.timings
        return d


@dataclass
class Hypothesis:
    name: str
    holds: bool | None
    evidence: str = ""


@dataclass
class TheoremReport:
    statement: str
    hypotheses: list[Hypothesis]
    conclusion: bool | None
    status: str
    witnesses: dict[str, VertexSet] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    products: dict[str, ProductGraph] = field(default_factory=dict, repr=False)
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self, timings: bool = False) -> dict[str, Any]:
        d = {
            "kind": "theorem",
            "statement": self.statement,
            "hypotheses": [{"name": h.name, "holds": h.holds, "evidence": h.evidence} for h in self.hypotheses],
            "conclusion": self.conclusion,
            "verdict": self.status,
            "witnesses": {k: _vlist(v) for k, v in self.witnesses.items()},
            "notes": self.notes,
        }
        coords = {k: _coords(self.products[k], v) for k, v in self.witnesses.items() if k in self.products}
        if coords:
            d["witness_coords"] = coords
        if timings:
            d["timings"] = self.timings
        return d


def dumps(obj: Any, timings: bool = False) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict(timings=timings)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
