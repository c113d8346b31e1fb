"""Command-line interface.

Subcommands: `decompose` (one weight), `table` (ranges of weights),
`euler` (Euler characteristics of local systems), `verify` (the series and
closed-formula verification suite).  Output formats: text, csv, latex and
jsonl (one structured record per line; round-trips through `parse_record`).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 request in
the explicitly unsupported region (k = 2 vector-valued).
"""

from __future__ import annotations

import csv
import json
import sys

import click

from .euler import euler_characteristic
from .packets import (
    PART_LABELS,
    RESTRICTION_TARGETS,
    UnsupportedWeightError,
    decompose,
    dim_s3j,
    euler_eis,
    euler_endo,
    restrict_level,
    scalar_total,
    tsushima_dim,
)
from .repring import PARTITIONS, IsoDecomp, format_partition
from .series import verify_tables

EXIT_VERIFY_FAILURE = 1
EXIT_UNSUPPORTED = 3

CONJECTURAL_NOTE = "conjectural: k=3 Eisenstein convention"

GROUPS = ("gamma2",) + RESTRICTION_TARGETS


def format_decomp(d):
    """Human-readable signed sum, e.g. 's[6] + 2*s[4,2] - s[2^3]'."""
    pieces = []
    for mult, p in zip(d.mult, PARTITIONS[d.n]):
        if mult:
            name = "s" + format_partition(p)
            term = name if abs(mult) == 1 else f"{abs(mult)}*{name}"
            pieces.append(("- " if mult < 0 else "+ ") + term)
    if not pieces:
        return "0"
    head = pieces[0].replace("+ ", "", 1).replace("- ", "-", 1)
    return " ".join([head] + pieces[1:])


def plain_partition(p):
    return "[" + ",".join(str(v) for v in p) + "]"


def _record(k, j, group, part, value, conjectural):
    """Build an output record; `value` is an IsoDecomp or a plain dimension."""
    if isinstance(value, IsoDecomp):
        mult = {
            plain_partition(p): m for p, m in zip(PARTITIONS[value.n], value.mult)
        }
        dim = value.dimension()
    else:
        mult = {}
        dim = value
    return {
        "k": k,
        "j": j,
        "group": group,
        "part": part,
        "multiplicities": mult,
        "dimension": dim,
        "conjectural": conjectural,
    }


def parse_record(line):
    """Inverse of the jsonl writer."""
    return json.loads(line)


def _decomp_value(record, n=6):
    order = [plain_partition(p) for p in PARTITIONS[n]]
    if list(record["multiplicities"]) == order:
        return IsoDecomp(n, tuple(record["multiplicities"].values()))
    return None


def _emit_csv(records, header_parts):
    # partition labels contain commas, so fields must be properly quoted
    writer = csv.writer(sys.stdout, lineterminator="\n")
    cols = ["k", "j", "group", "part"] + header_parts + ["dimension", "conjectural"]
    writer.writerow(cols)
    for r in records:
        row = [r["k"], r["j"], r["group"], r["part"]]
        row += [r["multiplicities"].get(p, 0) for p in header_parts]
        row += [r["dimension"], str(r["conjectural"]).lower()]
        writer.writerow(row)


def _emit_latex(records, header_parts):
    headers = ["k", "j"] + [f"$s{h}$" for h in header_parts] + ["$d$"]
    click.echo(r"\begin{array}{" + "c|" * (len(headers) - 1) + "c}")
    click.echo(" & ".join(headers) + r" \\")
    click.echo(r"\hline")
    for r in records:
        row = [str(r["k"]), str(r["j"])]
        row += [str(r["multiplicities"].get(p, 0)) for p in header_parts]
        row.append(str(r["dimension"]))
        click.echo(" & ".join(row) + r" \\")
    click.echo(r"\end{array}")


def _emit(records, fmt):
    header_parts = sorted(
        {p for r in records for p in r["multiplicities"]},
        key=lambda p: _partition_sort_key(p),
    )
    if fmt == "jsonl":
        for r in records:
            click.echo(json.dumps(r))
    elif fmt == "text":
        for r in records:
            prefix = f"k={r['k']} j={r['j']} {r['group']} {r['part']}: "
            if len(records) == 1:
                prefix = ""
            body = "0"
            if r["multiplicities"]:
                n = 6 if len(r["multiplicities"]) == 11 else 3
                body = format_decomp(_decomp_value(r, n))
            suffix = f" [{CONJECTURAL_NOTE}]" if r["conjectural"] else ""
            click.echo(f"{prefix}{body}  (dim {r['dimension']}){suffix}")
    elif fmt == "csv":
        _emit_csv(records, header_parts)
    elif fmt == "latex":
        _emit_latex(records, header_parts)


def _partition_sort_key(label):
    values = tuple(int(v) for v in label.strip("[]").split(","))
    n = sum(values)
    return PARTITIONS[n].index(values) if values in PARTITIONS[n] else 99


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values:
        raise click.UsageError(f"empty range {text!r}")
    return values


def _one_part(k, j, group, part):
    try:
        dec = decompose(k, j)
    except UnsupportedWeightError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_UNSUPPORTED)
    value = dec[part]
    if group != "gamma2":
        value = restrict_level(value, group)
    return _record(k, j, group, part, value, dec.conjectural)


format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "latex", "jsonl"]),
    default="text",
    show_default=True,
)
group_option = click.option(
    "--group", type=click.Choice(GROUPS), default="gamma2", show_default=True
)


@click.group()
def main():
    """Isotypical decompositions of degree-2 level-2 Siegel modular forms."""


@main.command("decompose")
@click.option("--k", type=int, required=True)
@click.option("--j", type=int, default=0, show_default=True)
@click.option("--part", type=click.Choice(PART_LABELS), default="M", show_default=True)
@group_option
@format_option
def cmd_decompose(k, j, part, group, fmt):
    """Decomposition of one space M_{k,j} or one of its packet parts."""
    if j % 2 != 0 or j < 0:
        raise click.UsageError("--j must be even and non-negative")
    _emit([_one_part(k, j, group, part)], fmt)


@main.command("table")
@click.option("--k", "k_range", required=True, help="weight k or range a..b")
@click.option("--j", "j_range", default="0", show_default=True, help="weight j or range a..b")
@click.option("--part", default="M", show_default=True, help="comma-separated packet parts")
@group_option
@format_option
def cmd_table(k_range, j_range, part, group, fmt):
    """One row per weight pair over ranges of k and j."""
    parts = [p.strip() for p in part.split(",")]
    for p in parts:
        if p not in PART_LABELS:
            raise click.UsageError(f"unknown part {p!r}")
    records = []
    for k in _parse_range(k_range):
        for j in _parse_range(j_range):
            if j % 2 != 0 or j < 0:
                raise click.UsageError("--j values must be even and non-negative")
            for p in parts:
                records.append(_one_part(k, j, group, p))
    _emit(records, fmt)


@main.command("euler")
@click.option("--l", "l", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option(
    "--piece",
    type=click.Choice(["full", "eis", "endo"]),
    default="full",
    show_default=True,
)
@format_option
def cmd_euler(l, m, piece, fmt):
    """(Virtual) Euler characteristic of the local system of weight (l, m)."""
    if not l >= m >= 0:
        raise click.UsageError("need l >= m >= 0")
    conjectural = False
    try:
        if piece == "full":
            value = euler_characteristic(l, m)
        elif piece == "eis":
            value, conjectural = euler_eis(l, m)
        else:
            value = euler_endo(l, m)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit([_record(l, m, "gamma2", f"euler-{piece}", value, conjectural)], fmt)


@main.command("verify")
@click.option("--max-weight", type=int, default=60, show_default=True)
def cmd_verify(max_weight):
    """Verify generating series, closed dimension formulas and the
    vector-valued dimension grid; exit 1 on any mismatch."""
    failures = []

    report = verify_tables(max_weight)
    for r in report.failures:
        w, want, got = r.first_mismatch
        failures.append(f"series {r.label}, t^{w}: expected {want} got {got}")

    # closed dimension formulas for total and cusp scalar spaces
    closed = 0
    for k in range(0, max_weight + 1):
        dim = scalar_total(k).dimension()
        if k % 2 == 0:
            kk = k // 2
            want = (2 * kk + 1) * (4 * kk**2 + 4 * kk + 12) // 12
            if dim != want:
                failures.append(f"dim M_{k}: expected {want} got {dim}")
            if kk >= 2:
                want_s = (kk - 2) * (2 * kk**2 + 7 * kk - 24) // 3
                got_s = decompose(k)["S"].dimension()
                if got_s != want_s:
                    failures.append(f"dim S_{k}: expected {want_s} got {got_s}")
        elif k >= 5:
            kk = (k - 1) // 2
            want = (2 * kk**3 - 9 * kk**2 + 19 * kk - 15) // 3
            if dim != want:
                failures.append(f"dim S_{k}: expected {want} got {dim}")
        closed += 1

    # vector-valued grid against the closed cubic formulas
    grid = 0
    for k in range(3, 13):
        jmax = 30 if k == 3 else 20
        for j in range(2, jmax + 1, 2):
            dec = decompose(k, j)
            got = dec["M" if k % 2 == 0 else "S"].dimension()
            want = dim_s3j(j) if k == 3 else tsushima_dim(k, j)
            if got != want:
                failures.append(f"dim at (k,j)=({k},{j}): expected {want} got {got}")
            grid += 1

    if failures:
        for f in failures:
            click.echo(f"FAIL: {f}")
        sys.exit(EXIT_VERIFY_FAILURE)
    click.echo(
        f"PASS: {len(report.results)} series to order {max_weight}, "
        f"{closed} scalar weights against closed formulas, "
        f"{grid} vector-valued weights against the dimension grid"
    )


if __name__ == "__main__":
    main()
