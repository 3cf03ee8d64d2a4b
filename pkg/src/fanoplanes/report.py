"""Report construction and rendering (Markdown, CSV, JSON).

Every CLI command builds one :class:`Report` -- a list of tables plus
scalar facts and free-form notes -- and the three renderers serialize it.
CSV and JSON carry plain ASCII tokens (``gammaP`` for the primed type);
Markdown swaps in the Greek display names.  Output is deterministic:
the provenance block holds the tool version and a content hash of the
bundled data files, never a timestamp.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources

from . import __version__
from .classification import (
    GREEK,
    NONEXISTENT_TYPES,
    PROFILE_TO_TYPE,
    TYPE_NAMES,
    TYPE_PAIR_ORDER,
    TYPE_PROFILES,
    all_line_signatures,
    catalog_types,
    census_by_type,
    group_lines_by_signature,
    special_observations,
)
from .configs import LabelingCensus, census_summary
from .core import is_ordinary, triple_str
from .enumeration import Catalog
from .fragments import (
    classify_fragment,
    defective_fragment,
    ordinary_fragment,
    type_fragment_correspondence,
)

#: Classical presentation order of the 35 lines: the nine ordinary lines
#: first, then the defective ones, in the traditional row blocks.
TABLE5_ROW_ORDER: tuple[str, ...] = (
    "123", "145", "257", "347", "156", "235", "246", "167", "134",
    "124", "236", "247", "346", "357", "456",
    "136", "147", "345", "567",
    "126", "157", "245", "467",
    "135", "237", "256",
    "127", "367",
    "146", "234",
    "137", "267",
    "356", "457", "125",
)

#: Known disagreements between the computed results and the classical
#: tabulations of this classification; emitted with the tables so golden
#: consumers see them next to the numbers.
DISCREPANCY_NOTES: tuple[str, ...] = (
    "set B holds 5 planes devoid of ordinary lines (B2 B3 B6 B8 B15); a "
    "commonly quoted figure of four disagrees with the tabulated census.",
    "line 237 lies in B11, the unique delta1P plane, so its signature has "
    "delta1P=1 and delta2P=0; the classical line table instead places that "
    "count under delta2P, which breaks the column identity (each type column "
    "sums to 7 times the type's census count) and makes the defective lines "
    "fall into 11 kinds rather than the quoted 10.",
)


@dataclass
class Table:
    id: str
    title: str
    columns: list[str]
    rows: list[list]


@dataclass
class Report:
    command: str
    tables: list[Table]
    facts: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def data_sha256() -> str:
    """Hash of the bundled data files (order-independent, content only)."""
    digest = hashlib.sha256()
    root = resources.files("fanoplanes.data")
    for name in sorted(p.name for p in root.iterdir() if p.name.endswith(".txt")):
        digest.update(name.encode())
        digest.update(root.joinpath(name).read_bytes())
    return digest.hexdigest()


def provenance() -> dict:
    return {"tool": "fanoplanes", "version": __version__, "data_sha256": data_sha256()}


# --- report builders ---------------------------------------------------


def enumerate_report(catalog: Catalog) -> Report:
    types = catalog_types(catalog)
    rows = []
    for tag, p in catalog.items():
        cells = [triple_str(t) + ("*" if is_ordinary(t) else "") for t in p]
        rows.append([tag, types[tag], *cells])
    table = Table(
        id="planes",
        title="the 30 labeled Fano planes (* marks an ordinary line)",
        columns=["plane", "type"] + [f"line{i}" for i in range(1, 8)],
        rows=rows,
    )
    return Report(command="enumerate", tables=[table])


def _table1() -> Table:
    rows = []
    for name in TYPE_PAIR_ORDER:
        n0, n1, n2, n3 = TYPE_PROFILES[name]
        exists = "false" if name in NONEXISTENT_TYPES else "true"
        rows.append([name, n0, n1, n2, n3, exists])
    return Table(
        id="table1",
        title="plane types by number of points of each order",
        columns=["type", "order0", "order1", "order2", "order3", "exists"],
        rows=rows,
    )


def _plane_type_table(catalog: Catalog, side: str) -> Table:
    types = catalog_types(catalog)
    rows = [[tag, types[tag]] for tag in catalog.tags if tag.startswith(side)]
    return Table(
        id="table2" if side == "A" else "table3",
        title=f"types of the planes in set {side}",
        columns=["plane", "type"],
        rows=rows,
    )


def _table4(catalog: Catalog, side: str | None = None) -> Table:
    sides = [side] if side else ["A", "B", "total"]
    rows = []
    for s in sides:
        counts = census_by_type(catalog, s)
        rows.append([s, *(counts[name] for name in TYPE_NAMES)])
    return Table(
        id="table4",
        title="census of plane types",
        columns=["side", *TYPE_NAMES],
        rows=rows,
    )


def _table5(catalog: Catalog) -> Table:
    sigs = all_line_signatures(catalog)
    rows = []
    for token in TABLE5_ROW_ORDER:
        t = tuple(int(ch) for ch in token)
        ordinary = "true" if is_ordinary(t) else "false"
        rows.append([token, ordinary, *sigs[t]])
    return Table(
        id="table5",
        title="line types (type counts over the six planes through each line)",
        columns=["line", "ordinary", *TYPE_NAMES],
        rows=rows,
    )


def _kinds_table(catalog: Catalog) -> Table:
    ordinary_groups, defective_groups = group_lines_by_signature(catalog)
    rows = []
    for cls, groups in (("ordinary", ordinary_groups), ("defective", defective_groups)):
        for g in groups:
            rows.append([cls, len(g), " ".join(triple_str(t) for t in g)])
    return Table(
        id="kinds",
        title="lines grouped by identical signature",
        columns=["class", "size", "lines"],
        rows=rows,
    )


def tables_report(catalog: Catalog, side: str | None = None) -> Report:
    obs = special_observations(catalog)
    facts = {
        "beta_defective_lines": " ".join(triple_str(t) for t in obs["beta_defective_lines"]),
        "planes_without_ordinary_lines_A": len(obs["planes_without_ordinary_lines"]["A"]),
        "planes_without_ordinary_lines_B": len(obs["planes_without_ordinary_lines"]["B"]),
        "ordinary_line_kinds": obs["ordinary_kind_count"],
        "defective_line_kinds": obs["defective_kind_count"],
    }
    return Report(
        command="tables",
        tables=[
            _table1(),
            _plane_type_table(catalog, "A"),
            _plane_type_table(catalog, "B"),
            _table4(catalog, side),
            _table5(catalog),
            _kinds_table(catalog),
        ],
        facts=facts,
        notes=list(DISCREPANCY_NOTES),
    )


def fragments_report(catalog: Catalog) -> Report:
    correspondence = type_fragment_correspondence(catalog)
    corr_rows = [[name, correspondence[name]]
                 for name in TYPE_NAMES if name in correspondence]
    types = catalog_types(catalog)
    plane_rows = []
    for tag, p in catalog.items():
        frag = defective_fragment(p)
        plane_rows.append([
            tag,
            types[tag],
            classify_fragment(frag),
            " ".join(triple_str(t) for t in frag.lines),
            classify_fragment(ordinary_fragment(p)),
        ])
    return Report(
        command="fragments",
        tables=[
            Table(
                id="correspondence",
                title="plane type to defective-fragment kind",
                columns=["type", "fragment"],
                rows=corr_rows,
            ),
            Table(
                id="plane_fragments",
                title="per-plane sub-geometries",
                columns=["plane", "type", "defective_fragment", "defective_lines", "ordinary_fragment"],
                rows=plane_rows,
            ),
        ],
    )


def generic_report(census: LabelingCensus) -> Report:
    summary = census_summary(census)
    facts = {
        "configuration": summary["configuration"],
        "points": summary["points"],
        "blocks": summary["blocks"],
        "labelings": summary["labelings"],
        "automorphisms": summary["automorphisms"],
        "labelings_times_automorphisms": summary["labelings_times_automorphisms"],
        "point_factorial": summary["point_factorial"],
    }
    ordinary_rows = [[k, v] for k, v in summary["ordinary_count_histogram"].items()]
    is_fano = summary["points"] == 7 and summary["blocks"] == 7
    profile_rows = []
    for profile, count in summary["profile_histogram"].items():
        name = PROFILE_TO_TYPE.get(profile, "") if is_fano else ""
        profile_rows.append([*profile, name, count])
    fragment_rows = [[k, v] for k, v in summary["fragment_histogram"].items()]
    return Report(
        command="generic",
        tables=[
            Table(
                id="ordinary_histogram",
                title="labelings by number of ordinary lines",
                columns=["ordinary_lines", "labelings"],
                rows=ordinary_rows,
            ),
            Table(
                id="profile_histogram",
                title="labelings by order profile",
                columns=["order0", "order1", "order2", "order3", "type", "labelings"],
                rows=profile_rows,
            ),
            Table(
                id="fragment_histogram",
                title="labelings by defective-fragment kind",
                columns=["fragment", "labelings"],
                rows=fragment_rows,
            ),
        ],
        facts=facts,
    )


# --- renderers ----------------------------------------------------------


def _md_cell(column: str, value) -> str:
    if isinstance(value, str) and value in GREEK:
        name = GREEK[value]
        return f"({name})" if value in NONEXISTENT_TYPES else name
    if column in NONEXISTENT_TYPES and value == 0:
        return "-"
    return str(value)


def render_md(report: Report) -> str:
    prov = provenance()
    out = [f"# fanoplanes {report.command}", ""]
    if report.facts:
        for key, value in report.facts.items():
            out.append(f"- {key}: {value}")
        out.append("")
    for table in report.tables:
        out.append(f"## {table.title}")
        out.append("")
        headers = [
            f"({GREEK[c]})" if c in NONEXISTENT_TYPES else GREEK.get(c, c)
            for c in table.columns
        ]
        out.append("| " + " | ".join(headers) + " |")
        out.append("|" + "|".join(" --- " for _ in headers) + "|")
        for row in table.rows:
            rendered = []
            for column, value in zip(table.columns, row):
                if table.id == "table1" and row[0] in NONEXISTENT_TYPES and isinstance(value, int):
                    rendered.append(f"({value})")
                else:
                    rendered.append(_md_cell(column, value))
            out.append("| " + " | ".join(rendered) + " |")
        out.append("")
    for note in report.notes:
        out.append(f"> note: {note}")
    if report.notes:
        out.append("")
    out.append(f"_{prov['tool']} {prov['version']}, data sha256 {prov['data_sha256']}_")
    return "\n".join(out) + "\n"


def render_csv(report: Report) -> str:
    prov = provenance()
    out = [f"# fanoplanes {report.command} {prov['version']} data-sha256={prov['data_sha256']}"]
    if report.facts:
        out.append("# facts")
        out.append("fact,value")
        for key, value in report.facts.items():
            out.append(f"{key},{value}")
    for table in report.tables:
        out.append(f"# {table.id}: {table.title}")
        out.append(",".join(table.columns))
        for row in table.rows:
            out.append(",".join(str(v) for v in row))
    for note in report.notes:
        out.append(f"# note: {note}")
    return "\n".join(out) + "\n"


def render_json(report: Report) -> str:
    payload = {
        "command": report.command,
        "provenance": provenance(),
        "facts": report.facts,
        "tables": [
            {"id": t.id, "title": t.title, "columns": t.columns, "rows": t.rows}
            for t in report.tables
        ],
        "notes": report.notes,
    }
    return json.dumps(payload, indent=2) + "\n"


RENDERERS = {"md": render_md, "csv": render_csv, "json": render_json}


def render(report: Report, fmt: str) -> str:
    try:
        return RENDERERS[fmt](report)
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; expected md, csv or json") from None
