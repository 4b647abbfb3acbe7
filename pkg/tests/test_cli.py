"""Campaign runner, report format, export command."""

from __future__ import annotations

import json

import pytest

from borelcenter.cli import (
    CampaignConfig,
    export_generator,
    main,
    report_json,
    report_text,
    run_campaign,
)
from borelcenter.invariants import GeneratorId


def test_config_validation():
    with pytest.raises(ValueError):
        CampaignConfig(p_values=(4,))
    with pytest.raises(ValueError):
        CampaignConfig(checks=("no-such-check",))
    with pytest.raises(ValueError):
        CampaignConfig(algebra="x")


def test_invariance_campaign_cell_shape():
    cfg = CampaignConfig(n_values=(3,), p_values=(2,), checks=("invariance",))
    cells = run_campaign(cfg)
    assert cells and all(c["status"] == "pass" for c in cells)
    klx = [
        c for c in cells
        if c["params"].get("target") == "center-product"
        and "algebra" not in c["params"]
    ]
    # one cell per (k, l, basis element): k=1, l in {0,1}, six basis elements
    assert len(klx) == 1 * 2 * 6


def test_sl_cells_skipped_when_p_divides_n():
    cfg = CampaignConfig(n_values=(4,), p_values=(2,), algebra="b",
                         checks=("center",))
    cells = run_campaign(cfg)
    skipped = [c for c in cells if c["status"] == "skipped"]
    assert skipped and all("p-divides-n" in c["detail"] for c in skipped)
    assert not any(c["status"] == "fail" for c in cells)


def test_char0_center_dims_campaign():
    cfg = CampaignConfig(n_values=(2,), p_values=(0,), checks=("oracle-dims",),
                         algebra="g")
    cells = run_campaign(cfg)
    center = [c for c in cells if c["params"].get("which") == "center"]
    assert len(center) == 5
    assert all(c["status"] == "pass" for c in center)


def test_report_json_deterministic():
    cfg = CampaignConfig(n_values=(3,), p_values=(0, 2), checks=("weights",))
    one = report_json(run_campaign(cfg))
    two = report_json(run_campaign(cfg))
    assert one == two
    cells = json.loads(one)
    assert all(set(c) == {"check", "params", "status", "detail"} for c in cells)


def test_report_text_summary():
    cfg = CampaignConfig(n_values=(2,), p_values=(2,), checks=("separating",))
    text = report_text(run_campaign(cfg))
    assert text.startswith("cells:")
    assert "fail: 0" in text


def test_main_campaign_exit_code(tmp_path):
    out = tmp_path / "report.json"
    code = main([
        "campaign", "--n", "3", "--p", "2", "--check", "relations",
        "--out", str(out),
    ])
    assert code == 0
    cells = json.loads(out.read_text())
    assert cells and all(c["status"] in ("pass", "skipped") for c in cells)


def test_main_rejects_bad_characteristic(capsys):
    code = main(["campaign", "--n", "3", "--p", "6", "--check", "relations"])
    assert code == 2
    assert "config" in capsys.readouterr().err


def test_export_polynomial(tmp_path):
    text = export_generator(GeneratorId("trace"), 3, 0, "S")
    obj = json.loads(text)
    assert obj["terms"][0] == {"coeff": "1", "vars": [[1, 1, 1]]}
    out = tmp_path / "gen.json"
    code = main(["export", "--kind", "corner-minor", "--n", "4", "--k", "2",
                 "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["char"] == 0


def test_export_enveloping():
    text = export_generator(GeneratorId("center-product", k=1, l=1), 3, 2, "U")
    obj = json.loads(text)
    assert obj["algebra"] == "g" and obj["char"] == 2
    assert all(len(t["word"]) <= 3 for t in obj["terms"])


def test_export_deterministic():
    a = export_generator(GeneratorId("augmented-minor", k=1), 4, 0, "S")
    b = export_generator(GeneratorId("augmented-minor", k=1), 4, 0, "S")
    assert a == b


def test_export_invalid_indices():
    code = main(["export", "--kind", "corner-minor", "--n", "3", "--k", "5"])
    assert code == 2
