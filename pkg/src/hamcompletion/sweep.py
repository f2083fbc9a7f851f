"""Formula / oracle / construction comparison tables."""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable

from .caterpillar import CaterpillarSpec, build_graph, classify
from .closed_form import lambda_closed_form
from .construct import construct
from .errors import BudgetExceeded, UnsupportedClass
from .generate import SplitMix64, random_spec
from .oracle import DEFAULT_BUDGET, min_cycle_augmentation

FAMILIES = ("regular1", "regular2", "regularK", "atleast3", "zero2", "deserted", "random")
CSV_HEADER = "spec;class;formula;oracle;construction;agree"


@dataclass(frozen=True)
class SweepRow:
    spec: CaterpillarSpec
    label: str
    formula_value: int | None
    oracle_value: int | None
    construction_size: int | None
    oracle_note: str = "SKIPPED"
    # shown in place of a missing formula / construction value
    missing_note: str = "Unsupported"

    @property
    def agree(self) -> bool:
        values = {v for v in (self.formula_value, self.oracle_value, self.construction_size) if v is not None}
        return len(values) <= 1

    def to_csv(self) -> str:
        def show(v, missing):
            return missing if v is None else str(v)

        return ";".join(
            [
                str(self.spec),
                self.label,
                show(self.formula_value, self.missing_note),
                show(self.oracle_value, self.oracle_note),
                show(self.construction_size, self.missing_note),
                "true" if self.agree else "false",
            ]
        )


def family_spec(family: str, size: int, k: int = 3) -> CaterpillarSpec:
    """The ``size``-th member of a named family."""
    if family == "regular1":
        return CaterpillarSpec([1] * size)
    if family == "regular2":
        return CaterpillarSpec([2] * size)
    if family == "regularK":
        return CaterpillarSpec([k] * size)
    if family == "atleast3":
        return CaterpillarSpec([3 + i % 3 for i in range(size)])
    if family == "zero2":
        return CaterpillarSpec([2 if i % 3 == 0 else 0 for i in range(size)] + [2])
    if family == "deserted":
        return CaterpillarSpec([2] + [0, 1] * size + [0, 2])
    raise ValueError(f"unknown family {family!r}")


def sweep_row(
    spec: CaterpillarSpec,
    use_oracle: bool = True,
    max_oracle_vertices: int = 12,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SweepRow:
    label = str(classify(spec))
    if spec.vertex_count < 3:
        return SweepRow(spec, label, None, None, None, missing_note="TooSmallForCycle")
    res = lambda_closed_form(spec)
    formula = res.value if res is not None else None
    try:
        built = len(construct(spec).added_edges)
    except UnsupportedClass:
        built = None
    oracle, note = None, "SKIPPED"
    if use_oracle and spec.vertex_count <= max_oracle_vertices:
        g, _ = build_graph(spec)
        try:
            oracle = min_cycle_augmentation(g, budget, workers=workers).minimum
        except BudgetExceeded:
            note = "BUDGET"
    return SweepRow(spec, label, formula, oracle, built, note)


def family_specs(
    family: str,
    lo: int,
    hi: int,
    k: int = 3,
    seed: int = 1,
    count: int = 20,
    n_range: tuple[int, int] = (1, 6),
    l_range: tuple[int, int] = (0, 3),
) -> list[CaterpillarSpec]:
    if family == "random":
        rng = SplitMix64(seed)
        return [random_spec(rng, n_range, l_range, "any") for _ in range(count)]
    return [family_spec(family, size, k) for size in range(lo, hi + 1)]


def to_csv(rows: Iterable[SweepRow]) -> str:
    out = io.StringIO()
    out.write(CSV_HEADER + "\n")
    for row in rows:
        out.write(row.to_csv() + "\n")
    return out.getvalue()
