import csv
import io
import json
import zlib

import pytest

from marnet.cli import main
from marnet.records import (
    ASYMMETRY_SCHEMA,
    GROWTH_SCHEMA,
    MAR_VS_ER_SCHEMA,
    RECORD_COLUMNS,
    RECORD_SCHEMA,
    ExperimentRecord,
    read_schema_line,
    records_to_csv,
)

# Schema registry freeze: changing any column set without bumping the
# version string must fail here.
FROZEN_SCHEMAS = {
    RECORD_SCHEMA: (
        "graph_id", "generator", "seed", "n", "m", "adjacency_entropy",
        "degree_entropy", "block_entropy", "bdm", "nbdm", "p_r", "p_a",
        "deficiency",
    ),
    ASYMMETRY_SCHEMA: ("family", "n", "seed", "u", "v", "delta_bdm"),
    GROWTH_SCHEMA: ("n", "bdm_complete", "bdm_er", "bdm_mar"),
    MAR_VS_ER_SCHEMA: (
        "graph_id", "family", "n", "m", "bdm", "nbdm",
        "adjacency_entropy", "degree_sequence",
    ),
}


def parse_csv(text: str):
    schema = read_schema_line(text)
    rows = list(csv.DictReader(io.StringIO(text.split("\n", 1)[1])))
    return schema, rows


def write_std_table(tmp_path):
    from marnet.ctm import default_table, save_table

    path = tmp_path / "std.ctm"
    save_table(default_table(), path)
    return str(path)


class TestRecords:
    def test_schema_registry_frozen(self):
        from marnet import experiments

        assert FROZEN_SCHEMAS[RECORD_SCHEMA] == RECORD_COLUMNS
        assert FROZEN_SCHEMAS[ASYMMETRY_SCHEMA] == experiments.ASYMMETRY_COLUMNS
        assert FROZEN_SCHEMAS[GROWTH_SCHEMA] == experiments.GROWTH_COLUMNS
        assert FROZEN_SCHEMAS[MAR_VS_ER_SCHEMA] == experiments.MAR_VS_ER_COLUMNS

    def test_round_values_and_none(self):
        rec = ExperimentRecord(
            "g", "empty", None, 4, 0, 0.0, 0.0, 0.0, 1.5, 0.25, 0.0, 0.0, None
        )
        text = records_to_csv([rec])
        schema, rows = parse_csv(text)
        assert schema == RECORD_SCHEMA
        assert rows[0]["deficiency"] == ""
        assert rows[0]["seed"] == ""
        assert rows[0]["bdm"] == "1.5"

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            ExperimentRecord(
                "g", "x", 0, 4, 0, float("nan"), 0, 0, 0, 0, 0, 0, None
            )


class TestCliMeasure:
    def test_complete_graph_row(self, tmp_path, capsys):
        table = write_std_table(tmp_path)
        assert main(["measure", "--table", table, "--gen", "complete:16"]) == 0
        schema, rows = parse_csv(capsys.readouterr().out)
        assert schema == RECORD_SCHEMA
        assert rows[0]["generator"] == "complete"
        assert float(rows[0]["degree_entropy"]) == 0.0
        assert rows[0]["n"] == "16" and rows[0]["m"] == "120"

    def test_seeded_determinism(self, tmp_path, capsys):
        table = write_std_table(tmp_path)
        main(["measure", "--table", table, "--gen", "er:16:0.5:7"])
        first = capsys.readouterr().out
        main(["measure", "--table", table, "--gen", "er:16:0.5:7"])
        assert capsys.readouterr().out == first

    def test_json_format_mirrors_csv(self, tmp_path, capsys):
        table = write_std_table(tmp_path)
        main(["measure", "--table", table, "--gen", "cycle:8",
              "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == RECORD_SCHEMA
        assert payload["rows"][0]["m"] == 8

    def test_graph_file_input(self, tmp_path, capsys):
        from marnet.graphs import save_graph, star_graph

        table = write_std_table(tmp_path)
        path = tmp_path / "g.edg"
        save_graph(star_graph(9), path)
        assert main(["measure", "--table", table, str(path)]) == 0
        _, rows = parse_csv(capsys.readouterr().out)
        assert rows[0]["m"] == "8"


class TestCliExitCodes:
    def test_missing_table_is_3(self, tmp_path, capsys):
        code = main(["measure", "--table", str(tmp_path / "nope.ctm"),
                     "--gen", "complete:8"])
        assert code == 3

    def test_malformed_graph_is_4(self, tmp_path, capsys):
        table = write_std_table(tmp_path)
        bad = tmp_path / "bad.edg"
        bad.write_text("3\n0 5\n")
        assert main(["measure", "--table", table, str(bad)]) == 4

    def test_malformed_table_is_4(self, tmp_path, capsys):
        bad = tmp_path / "bad.ctm"
        bad.write_text("CTMTABLE v1 d=1 space=x steps=1 total=1\n0 1.0\nCRC32 00000000\n")
        assert main(["measure", "--table", str(bad), "--gen", "complete:8"]) == 4

    def test_usage_error_is_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["experiment", "unknown-name"])
        assert exc.value.code == 2

    def test_bad_gen_spec_is_4(self, tmp_path, capsys):
        table = write_std_table(tmp_path)
        assert main(["measure", "--table", table, "--gen", "wat:9"]) == 4


class TestCliCtmBuild:
    def test_build_small_table(self, tmp_path, capsys):
        out = tmp_path / "t11.ctm"
        code = main(["ctm", "build", "--states", "1", "--steps", "10",
                     "--d", "1", "--out", str(out)])
        assert code == 0
        from marnet.ctm import load_table

        table = load_table(out)
        assert len(table.entries) == 2
        assert "halting fraction 128/256" in capsys.readouterr().out

    def test_missing_out_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["ctm", "build", "--states", "1", "--steps", "10", "--d", "1"])
        assert exc.value.code == 2


class TestCliExperiments:
    def test_asymmetry_dataset(self, tmp_path):
        table = write_std_table(tmp_path)
        out = tmp_path / "asym.csv"
        code = main(["experiment", "asymmetry", "--table", table,
                     "--seeds", "2", "--out", str(out)])
        assert code == 0
        schema, rows = parse_csv(out.read_text())
        assert schema == ASYMMETRY_SCHEMA
        families = {r["family"] for r in rows}
        assert families == {"complete", "er"}
        by_n = {r["n"] for r in rows}
        assert by_n == {"8", "16", "32"}

    def test_growth_curve(self, tmp_path):
        table = write_std_table(tmp_path)
        out = tmp_path / "growth.csv"
        assert main(["experiment", "growth-curve", "--table", table,
                     "--out", str(out)]) == 0
        schema, rows = parse_csv(out.read_text())
        assert schema == GROWTH_SCHEMA
        ns = [int(r["n"]) for r in rows]
        assert ns == sorted(ns)
        # simple graphs grow far slower than random ones
        first, last = rows[0], rows[-1]
        growth_k = float(last["bdm_complete"]) - float(first["bdm_complete"])
        growth_er = float(last["bdm_er"]) - float(first["bdm_er"])
        assert growth_er > growth_k

    def test_mar_vs_er(self, tmp_path):
        table = write_std_table(tmp_path)
        out = tmp_path / "mve.csv"
        assert main(["experiment", "mar-vs-er", "--table", table,
                     "--n", "8", "--ensemble", "3", "--out", str(out)]) == 0
        schema, rows = parse_csv(out.read_text())
        assert schema == MAR_VS_ER_SCHEMA
        mar = [float(r["nbdm"]) for r in rows if r["family"] == "mar"]
        er = [float(r["nbdm"]) for r in rows if r["family"] == "er"]
        assert sum(mar) / len(mar) >= sum(er) / len(er)
        assert all(len(r["degree_sequence"].split()) == 8 for r in rows)


class TestCliSignatureAndMar:
    def test_signature_csv(self, tmp_path, capsys):
        table = write_std_table(tmp_path)
        assert main(["signature", "--table", table, "--gen", "complete:5",
                     "--kind", "edges"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert lines[0] == "# schema=marnet.signature.v1"
        assert len(lines) == 2 + 10

    def test_mar_trajectory(self, tmp_path):
        table = write_std_table(tmp_path)
        out = tmp_path / "traj.json"
        assert main(["mar", "--table", table, "--n", "8",
                     "--target-edges", "10", "--out", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["stop_reason"] == "target-size"
        assert payload["config"]["table_id"]


class TestRadoMeasurement:
    def test_rado_row_below_matched_er_mean(self, std_table):
        import statistics

        from marnet.bdm import bdm
        from marnet.graphs import erdos_renyi_gnm, rado_graph

        g = rado_graph(16)
        er_mean = statistics.mean(
            bdm(erdos_renyi_gnm(16, g.edge_count, seed), 2, std_table).raw
            for seed in range(10)
        )
        assert bdm(g, 2, std_table).raw < er_mean


class TestDefaultTableArtifact:
    def test_artifact_crc_is_internally_consistent(self):
        import importlib.resources

        ref = importlib.resources.files("marnet") / "data" / "ctm32_d2.ctm"
        text = ref.read_text()
        lines = text.strip().split("\n")
        body = "\n".join(lines[:-1]) + "\n"
        stated = int(lines[-1].split()[1], 16)
        assert zlib.crc32(body.encode()) == stated

    def test_default_table_loads(self, std_table):
        assert std_table.d == 2
        assert len(std_table.entries) == 16
        assert std_table.space == "tm(3,2)"
