"""JSON persistence and validation of the group database.

One group per UTF-8 JSON file.  Loading validates everything the theory
demands (factor shapes, value at v=1, partition well-formedness, link
consistency) before any query is answered.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .clifford import CliffordLink, descend_hyperplanes
from .cyclo import CycInt, RootOfUnity
from .engine import Hyperplane, HyperplaneTable
from .groupblocks import CharacterTable, Partition
from .lattice import primitive_part
from .schur import (
    CharLabel,
    GroupDatum,
    SchurFactorX,
    normalize_x_to_v,
    sign_canonical,
    validate,
)

__all__ = ["StoreError", "load", "load_group", "default_db_dir", "verify_db"]

_DATA_DIR = Path(__file__).parent / "data"


class StoreError(ValueError):
    """Parse or validation failure; .report lists every violation."""

    def __init__(self, path, report):
        self.path = str(path)
        self.report = list(report)
        super().__init__(
            f"{path}: " + "; ".join(self.report[:4])
            + ("; ..." if len(self.report) > 4 else "")
        )


def default_db_dir() -> Path:
    env = os.environ.get("HECKE_DB")
    return Path(env) if env else _DATA_DIR


def _cycint(doc) -> CycInt:
    if isinstance(doc, int):
        return CycInt.rational(doc)
    return CycInt(doc["conductor"], doc["coeffs"])


def _root(doc) -> RootOfUnity:
    return RootOfUnity.of(int(doc[0]), int(doc[1]))


def _parse_factor(doc) -> SchurFactorX:
    return SchurFactorX(
        cyc_index=int(doc["cyc"]),
        exps_numerator=tuple(int(c) for c in doc["num"]),
        exps_denominator=int(doc.get("den", 1)),
        twist=_root(doc["twist"]) if "twist" in doc else RootOfUnity.one(),
    )


def _parse_link(doc) -> CliffordLink:
    spec = []
    for entry in doc["parameter_spec"]:
        kind, payload = entry
        if kind == "slot":
            spec.append(("slot", int(payload)))
        elif kind == "root":
            spec.append(("root", _root(payload)))
        else:
            raise ValueError(f"bad parameter_spec entry {entry!r}")
    return CliffordLink(
        parent=doc["parent"],
        child=doc["child"],
        cyclic_order=int(doc["cyclic_order"]),
        parameter_spec=tuple(spec),
        parent_characters=tuple(CharLabel.parse(c) for c in doc["parent_characters"]),
        child_characters=tuple(CharLabel.parse(c) for c in doc["child_characters"]),
        induction=tuple(
            (CharLabel.parse(child), tuple(CharLabel.parse(p) for p in parents))
            for child, parents in doc["induction"]
        ),
    )


def load(path) -> GroupDatum:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise StoreError(path, [f"cannot parse: {exc}"]) from exc
    report: list[str] = []
    try:
        g = GroupDatum(
            name=doc["name"],
            field_conductor=int(doc["field_conductor"]),
            mu_order=int(doc["mu_order"]),
            group_order=int(doc["group_order"]),
            orbits=tuple((o[0], int(o[1])) for o in doc["orbits"]),
            characters=tuple(CharLabel.parse(c) for c in doc["characters"]),
        )
    except (KeyError, ValueError) as exc:
        raise StoreError(path, [f"bad header: {exc}"]) from exc
    size = len(g.characters)

    if "hyperplane_tables" in doc:
        tables = []
        seen_baseline = False
        for tdoc in doc["hyperplane_tables"]:
            try:
                blocks = Partition.of(tdoc["blocks"], size)
            except ValueError as exc:
                report.append(str(exc))
                continue
            normal = tdoc.get("normal")
            if normal is None:
                if seen_baseline:
                    report.append("duplicate no-hyperplane baseline table")
                seen_baseline = True
                hp = None
            else:
                normal = tuple(int(c) for c in normal)
                prim, content = primitive_part(normal)
                if content != 1 or sign_canonical(normal) != normal:
                    report.append(
                        f"normal {normal} not primitive sign-canonical"
                    )
                if any(
                    sum(normal[i] for i in rng) for rng in g.orbit_ranges()
                ):
                    report.append(f"normal {normal} has nonzero orbit sums")
                hp = Hyperplane(normal)
            tables.append(
                HyperplaneTable(hp, blocks, frozenset(tdoc.get("primes", [])))
            )
        if tables and not seen_baseline:
            report.append("hyperplane tables lack the no-hyperplane baseline")
        g.hyperplane_tables = tuple(tables)

    if "character_table" in doc:
        tdoc = doc["character_table"]
        conductor = int(tdoc["conductor"])
        values = tuple(
            tuple(_cycint(v).lift(conductor) for v in row)
            for row in tdoc["values"]
        )
        table = CharacterTable(
            conductor=conductor,
            class_sizes=tuple(int(s) for s in tdoc["class_sizes"]),
            values=values,
            class_order_labels=tuple(tdoc["class_orders"])
            if "class_orders" in tdoc else None,
        )
        if len(values) != size:
            report.append("character table row count mismatch")
        else:
            if table.group_order != g.group_order:
                report.append("class sizes do not sum to the group order")
            if any(v != CycInt.rational(1) for v in values[0]):
                report.append("first table row is not the trivial character")
            for i, c in enumerate(g.characters):
                if values[i][0] != CycInt.rational(c.degree):
                    report.append(
                        f"table degree mismatch for {c.render()}"
                    )
        g.character_table = table

    if "schur_x" in doc:
        elements = {}
        for name, sdoc in doc["schur_x"].items():
            label = CharLabel.parse(name)
            if label not in g.characters:
                report.append(f"schur entry for unknown character {name}")
                continue
            try:
                element = normalize_x_to_v(
                    g,
                    label,
                    _cycint(sdoc["coeff"]),
                    tuple(int(c) for c in sdoc["lead"]),
                    [_parse_factor(f) for f in sdoc["factors"]],
                    lead_den=int(sdoc.get("lead_den", 1)),
                )
            except ValueError as exc:
                report.append(f"{name}: {exc}")
                continue
            bad = validate(g, element)
            report.extend(f"{name}: {msg}" for msg in bad)
            elements[label] = element
        g.schur_elements = elements

    links = []
    for ldoc in doc.get("clifford_links", []):
        try:
            link = _parse_link(ldoc)
        except ValueError as exc:
            report.append(f"clifford link: {exc}")
            continue
        if link.child != g.name:
            report.append(f"link child {link.child} is not {g.name}")
        elif link.child_characters != g.characters:
            report.append("link child characters disagree with the datum")
        links.append(link)
    g.clifford_links = tuple(links)

    if report:
        raise StoreError(path, report)
    return g


def load_group(name: str, db_dir=None) -> GroupDatum:
    base = Path(db_dir) if db_dir else default_db_dir()
    path = base / f"{name.lower()}.json"
    if not path.exists():
        raise FileNotFoundError(f"no database file for {name} in {base}")
    return load(path)


def _cross_check_links(groups: dict[str, GroupDatum]) -> list[str]:
    report = []
    for g in groups.values():
        for link in g.clifford_links:
            parent = groups.get(link.parent)
            if parent is None:
                continue
            if link.parent_characters != parent.characters:
                report.append(
                    f"{link.parent}->{link.child}: parent characters disagree"
                )
                continue
            if len(link.parameter_spec) != parent.slot_count:
                report.append(
                    f"{link.parent}->{link.child}: parameter_spec arity"
                )
                continue
            if not link.induction:
                continue  # partial link: nothing further to check
            if parent.hyperplane_tables is None or g.hyperplane_tables is None:
                continue
            moved = descend_hyperplanes(
                link, parent.hyperplane_tables, g.slot_count
            )
            stored = {t.normal: t.blocks for t in g.hyperplane_tables}
            for t in moved:
                if t.normal not in stored:
                    continue  # hyperplane absent from the child's printed list
                if stored[t.normal] != t.blocks:
                    where = "baseline" if t.normal is None else str(t.normal)
                    report.append(
                        f"{link.parent}->{link.child}: transported blocks "
                        f"disagree with the stored table at {where}"
                    )
    return report


def verify_db(paths=None) -> tuple[bool, list[str]]:
    """Validate a set of database files plus their cross-file links."""
    if not paths:
        base = default_db_dir()
        paths = sorted(base.glob("*.json"))
    report: list[str] = []
    groups: dict[str, GroupDatum] = {}
    for path in paths:
        try:
            g = load(path)
        except (StoreError, FileNotFoundError) as exc:
            if isinstance(exc, StoreError):
                report.extend(f"{exc.path}: {msg}" for msg in exc.report)
            else:
                report.append(str(exc))
            continue
        groups[g.name] = g
    report.extend(_cross_check_links(groups))
    return not report, report
