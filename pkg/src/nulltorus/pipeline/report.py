import json
from pathlib import Path
from typing import Sequence

import polars as pl

from nulltorus.manifold import FourManifold, derive_betti
from nulltorus.pinwheel import PinwheelDescription, seam_euler_numbers
from nulltorus.utils import convert_for_json

from .construction import ConstructionReport, ReductionLedger
from .family import FamilyTable

#########
# types #
#########

FAMILY_SCHEMA = {
    "n": pl.Int64,
    "e": pl.Int64,
    "sign": pl.Int64,
    "b1": pl.Int64,
    "H1": pl.String,
    "SW": pl.String,
    "distinct": pl.Boolean,
}
MANIFOLD_SCHEMA = {
    "step": pl.Int64,
    "name": pl.String,
    "e": pl.Int64,
    "sign": pl.Int64,
    "b1": pl.Int64,
    "H1": pl.String,
    "b+": pl.Int64,
    "K.omega": pl.String,
}
SEAM_SCHEMA = {
    "out": pl.String,
    "in": pl.String,
    "out_euler": pl.Int64,
    "in_euler": pl.Int64,
    "sum": pl.Int64,
}
LEDGER_SCHEMA = {
    "step": pl.Int64,
    "torus": pl.String,
    "configuration": pl.String,
    "before": pl.String,
    "after": pl.String,
    "manifold": pl.String,
}

##########
# public #
##########


def format_h1(b1: int, torsion: Sequence[int]) -> str:
    """H1 written as a sum of cyclic groups, "0" when trivial."""
    parts = []
    if b1 == 1:
        parts.append("Z")
    elif b1 > 1:
        parts.append(f"Z^{b1}")
    parts.extend(f"Z/{order}" for order in sorted(torsion))
    return " + ".join(parts) or "0"


def family_frame(table: FamilyTable) -> pl.DataFrame:
    """
    One row per member of the family. `distinct` says whether that row's
    SW differs from every other row's, up to negating all classes.
    """
    sws = [row.sw for row in table.rows]
    return pl.DataFrame(
        {
            "n": [row.n for row in table.rows],
            "e": [row.manifold.euler for row in table.rows],
            "sign": [row.manifold.signature for row in table.rows],
            "b1": [row.manifold.b1 for row in table.rows],
            "H1": [
                format_h1(row.manifold.b1, row.manifold.h1_torsion)
                for row in table.rows
            ],
            "SW": [str(sw) for sw in sws],
            "distinct": [
                all(
                    sw != other and sw != other.negate_classes()
                    for j, other in enumerate(sws)
                    if j != i
                )
                for i, sw in enumerate(sws)
            ],
        },
        schema=FAMILY_SCHEMA,
    )


def manifolds_frame(manifolds: Sequence[FourManifold]) -> pl.DataFrame:
    return pl.DataFrame(
        {
            "step": list(range(len(manifolds))),
            "name": [m.name for m in manifolds],
            "e": [m.euler for m in manifolds],
            "sign": [m.signature for m in manifolds],
            "b1": [m.b1 for m in manifolds],
            "H1": [format_h1(m.b1, m.h1_torsion) for m in manifolds],
            "b+": [
                derive_betti(m).b_plus if m.closed else None
                for m in manifolds
            ],
            "K.omega": [
                m.symplectic.k_dot_omega_sign if m.symplectic else None
                for m in manifolds
            ],
        },
        schema=MANIFOLD_SCHEMA,
    )


def ledger_frame(ledger: ReductionLedger) -> pl.DataFrame:
    return pl.DataFrame(
        {
            "step": [step.index for step in ledger.steps],
            "torus": [step.torus for step in ledger.steps],
            "configuration": [step.configuration for step in ledger.steps],
            "before": [step.before for step in ledger.steps],
            "after": [step.after or "done" for step in ledger.steps],
            "manifold": [step.manifold.name for step in ledger.steps],
        },
        schema=LEDGER_SCHEMA,
    )


def seams_frame(description: PinwheelDescription) -> pl.DataFrame:
    components = description.components
    seams = seam_euler_numbers(description)
    return pl.DataFrame(
        {
            "out": [c.name for c in components],
            "in": [
                components[(i + 1) % len(components)].name
                for i in range(len(components))
            ],
            "out_euler": [out for out, _ in seams],
            "in_euler": [inn for _, inn in seams],
            "sum": [out + inn for out, inn in seams],
        },
        schema=SEAM_SCHEMA,
    )


def format_text(frame: pl.DataFrame) -> str:
    """Aligned text table, every row and column shown."""
    with pl.Config(
        tbl_formatting="ASCII_MARKDOWN",
        tbl_hide_column_data_types=True,
        tbl_hide_dataframe_shape=True,
        tbl_rows=-1,
        tbl_cols=-1,
        tbl_width_chars=1000,
        fmt_str_lengths=1000,
    ):
        return str(frame)


def to_json(data: object) -> str:
    return json.dumps(convert_for_json(data), indent=2)


def write_report(
    frame: pl.DataFrame, directory: Path | str, stem: str
) -> list[Path]:
    """Write `stem`.tsv and `stem`.txt in `directory`."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    tsv = directory / f"{stem}.tsv"
    text = directory / f"{stem}.txt"
    frame.write_csv(tsv, separator="\t")
    text.write_text(format_text(frame) + "\n")
    return [tsv, text]


def construction_summary(report: ConstructionReport) -> dict[str, object]:
    """Stage invariants and torus configurations, ready for JSON."""
    return {
        "stages": manifolds_frame([s.manifold for s in report.stages]),
        "chain": manifolds_frame(report.chain),
        "bing_pairs": [
            {"name": c.name, "kind": c.kind, "tori": list(c.tori)}
            for c in report.bing_pairs
        ],
        "lagrangian_pairs": [
            {"name": c.name, "kind": c.kind, "tori": list(c.tori)}
            for c in report.lagrangian_pairs
        ],
        "x_notes": list(report.x.notes),
    }
