"""Renderer tests"""

import csv
import io
import json

from edgecalc.edge_kernel.fredholm import fredholm_table
from edgecalc.renderers import csv_renderer, json_renderer
from edgecalc.utils.validation import report_errors


def test_json_renderer(sample_report):
    """Test JSON renderer"""
    text = json_renderer.render(sample_report)

    assert text.endswith("\n")
    data = json.loads(text)
    assert data["command"] == "symbols"
    assert data["config"]["seed"] == 7
    assert [record["name"] for record in data["records"]] == [
        "a.check",
        "b.check",
        "c.check",
        "d.check",
    ]
    assert report_errors(data) == []


def test_json_renderer_nonfinite_values(sample_report):
    """Infinite values render as null"""
    data = json.loads(json_renderer.render(sample_report))
    warning = next(record for record in data["records"] if record["name"] == "c.check")
    assert warning["value"] is None
    assert warning["tolerance"] is None


def test_json_renderer_sorted_keys(sample_report):
    """Keys are sorted so equal reports render to equal bytes"""
    text = json_renderer.render(sample_report)
    assert text == json_renderer.render(sample_report)
    data = json.loads(text)
    assert list(data) == sorted(data)


def test_csv_renderer(sample_report):
    """Test CSV renderer"""
    text = csv_renderer.render(sample_report)
    rows = list(csv.DictReader(io.StringIO(text)))

    assert text.splitlines()[0] == "command,check,status,value,tolerance,detail"
    assert len(rows) == 4
    assert rows[0]["check"] == "a.check"
    assert rows[0]["status"] == "fail"
    assert rows[1]["value"] == "1e-13"
    assert rows[3]["value"] == ""
    assert rows[2]["detail"] == "reported, not asserted"


def test_fredholm_table_renderer():
    """Plot-ready table with one row per γ"""
    table = fredholm_table(-1.0, 2.0, 0.5, 10)
    rows = list(csv.DictReader(io.StringIO(csv_renderer.render_fredholm_table(table))))

    assert [row["gamma"] for row in rows] == ["-1.0", "-0.5", "0.0", "0.5", "1.0", "1.5", "2.0"]
    assert rows[0]["dim_ker"] == "4"
    assert rows[0]["kernel_sectors"] == "0 1"
    assert rows[1]["fredholm_ok"] == "false"
    assert rows[4]["index"] == "0"
    assert rows[6]["cokernel_sectors"] == "0"
