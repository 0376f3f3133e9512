"""Census rows and classifier-versus-oracle verification."""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from functools import lru_cache

from htgaut.aut import are_isomorphic, automorphisms, s_arc_regularity
from htgaut.aut.perm import PermGroup
from htgaut.classify import ClassificationResult, classify, normal_form_triples
from htgaut.graph import girth
from htgaut.htg import ColoredHtg, HtgParams, build_htg
from htgaut.named import ExceptionalId, exceptional_candidates

CSV_VERSION = "htg-census v1"
VERIFY_GUARD = 200


@dataclass(frozen=True)
class CensusRow:
    m: int
    n: int
    ell: int
    ell_normal: int
    order: int
    girth: int
    category: str
    c1: bool
    c2: bool
    c3: bool
    c4: bool
    aut_order: int
    stabilizer: int
    named_iso: str | None
    verified: bool | None = None

    @classmethod
    def from_result(cls, p_raw: HtgParams, r: ClassificationResult, verified: bool | None = None) -> CensusRow:
        p = r.params
        return cls(
            p_raw.m, p_raw.n, p_raw.ell, p.ell, p.order, r.girth, r.label,
            *r.flags.as_tuple(), r.predicted_aut_order, r.predicted_stabilizer,
            r.exceptional.name if r.exceptional else None, verified,
        )  # fmt: skip


COLUMNS = [f.name for f in fields(CensusRow)]


def census_rows(max_order: int) -> list[CensusRow]:
    return [CensusRow.from_result(p, classify(p)) for p in normal_form_triples(max_order)]


def _csv_cell(v: object) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    return str(v)


def write_census(rows: list[CensusRow], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        buf.write(f"# {CSV_VERSION}: {','.join(COLUMNS)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([_csv_cell(getattr(row, c)) for c in COLUMNS])
        return buf.getvalue()
    if fmt == "jsonl":
        return "".join(json.dumps(asdict(r)) + "\n" for r in rows)
    raise ValueError(f"unsupported census format {fmt!r}")


def read_census_csv(text: str) -> list[dict[str, str]]:
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def is_color_permuting(htg: ColoredHtg, perm) -> bool:
    """True if ``perm`` maps every colour class onto a single colour class."""
    image_color = {}
    for (u, v), c in htg.colors.items():
        d = htg.color(perm[u], perm[v])
        if image_color.setdefault(c, d) is not d:
            return False
    return True


@dataclass
class Verification:
    params: HtgParams
    predicted: ClassificationResult
    aut_order: int
    stabilizer: int
    vertex_transitive: bool
    arc_transitive_up_to: int
    arc_regular_at: int | None
    normal_cayley: bool
    girth: int
    named_iso: str | None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def oracle_category(self) -> str:
        if self.named_iso is not None:
            return "Exceptional"
        return {6: "TwoArcRegular", 3: "OneArcRegular", 2: "StabilizerTwo", 1: "RegularAut"}.get(
            self.stabilizer, f"stabilizer-{self.stabilizer}"
        )


def oracle_group(htg: ColoredHtg) -> PermGroup:
    return automorphisms(htg.graph)


@lru_cache(maxsize=None)
def _named_aut_order(exc: ExceptionalId) -> int:
    return automorphisms(exc.graph()).order()


def oracle_named_isomorph(htg: ColoredHtg, aut_order: int) -> str | None:
    """Name of the exceptional graph isomorphic to ``htg``, found by search.

    Candidates with a different automorphism group order are skipped, since
    isomorphic graphs have equal group orders.
    """
    for exc in exceptional_candidates(htg.graph.order):
        if _named_aut_order(exc) == aut_order and are_isomorphic(htg.graph, exc.graph()):
            return exc.name
    return None


def verify_triple(p: HtgParams) -> Verification:
    """Build the graph, run the automorphism engine, compare with the classifier."""
    pred = classify(p)
    htg = build_htg(pred.params)
    g = htg.graph
    group = oracle_group(htg)
    order = group.order()
    orb = len(group.orbit(0))
    report = s_arc_regularity(g, group)
    normal = all(is_color_permuting(htg, gen) for gen in group.generators)
    named_iso = oracle_named_isomorph(htg, order)
    v = Verification(
        pred.params, pred, order, order // orb, orb == g.order,
        report.s_transitive_up_to, report.regular_at, normal, int(girth(g)), named_iso,
    )  # fmt: skip
    checks = [
        ("aut_order", pred.predicted_aut_order, order),
        ("stabilizer", pred.predicted_stabilizer, v.stabilizer),
        ("vertex_transitive", True, v.vertex_transitive),
        ("arc_transitive_up_to", pred.arc_transitive_up_to, v.arc_transitive_up_to),
        ("arc_regular_at", pred.arc_regular_at, v.arc_regular_at),
        ("normal_cayley", pred.is_normal_cayley, normal),
        ("girth", pred.girth, v.girth),
        ("category", pred.category.value, v.oracle_category),
        ("named_iso", pred.exceptional.name if pred.exceptional else None, named_iso),
    ]
    for name, want, got in checks:
        if want != got:
            v.mismatches.append(f"{name}: classifier {want}, oracle {got}")
    return v


def run_verify(
    max_order: int, jobs: int | None = None, force: bool = False, min_order: int = 1
) -> list[Verification]:
    if max_order > VERIFY_GUARD and not force:
        raise ValueError(f"max_order {max_order} exceeds runtime guard {VERIFY_GUARD} (use force)")
    triples = list(normal_form_triples(max_order, min_order))
    jobs = jobs or os.cpu_count() or 1
    if jobs == 1:
        return [verify_triple(p) for p in triples]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(verify_triple, triples, chunksize=8))


def summarize(results: list[Verification]) -> Counter:
    return Counter(r.predicted.label if not r.predicted.exceptional else "Exceptional" for r in results)
