import numpy as np
import pytest

from render import PlotSpec, SchemaError, load_phase_table, load_success_table, render

SUCCESS_HEADER = "n,d,mu,r,k,trials,skipped,method,success_rate,mean_N,master_seed"
PHASE_HEADER = "n,d,mu,k,alpha,T,t,vd_verdict,cn_verdict"


def success_csv(tmp_path, rows):
    path = tmp_path / "rates.csv"
    path.write_text("\n".join([SUCCESS_HEADER] + rows) + "\n", encoding="utf-8")
    return str(path)


def phase_csv(tmp_path, rows):
    path = tmp_path / "phase.csv"
    path.write_text("\n".join([PHASE_HEADER] + rows) + "\n", encoding="utf-8")
    return str(path)


def figure4_style_rows():
    rows = []
    for mu, vd_rates, cn_rates in (
        (1.0, (0.0, 0.1, 0.9, 1.0), (0.0, 0.05, 1.0, 1.0)),
        (5.0, (0.0, 0.0, 0.4, 1.0), (0.0, 0.2, 0.9, 1.0)),
        (20.0, (0.0, 0.0, 0.0, 0.9), (0.15, 0.05, 0.02, 1.0)),
    ):
        for k, vd, cn in zip((2, 5, 12, 40), vd_rates, cn_rates):
            r = (mu / (1e4 * np.pi)) ** 0.5
            rows.append(f"10000.0,2,{mu},{r},{k},200,0,VD,{vd},10000.0,1")
            rows.append(f"10000.0,2,{mu},{r},{k},200,0,CN,{cn},10000.0,1")
    return rows


class TestSuccessCurves:
    def test_single_cell_rate_one(self, tmp_path):
        path = success_csv(tmp_path, ["100.0,2,3.0,0.05,4,10,0,CN,1.0,100.0,7"])
        table = load_success_table(path)
        assert table == {3.0: {"CN": [(4.0, 1.0)]}}
        out = str(tmp_path / "one.png")
        assert render(PlotSpec(path, "success-curves", out)) == out
        assert open(out, "rb").read(8) == b"\x89PNG\r\n\x1a\n"

    def test_figure4_style_three_panels(self, tmp_path):
        path = success_csv(tmp_path, figure4_style_rows())
        table = load_success_table(path)
        assert sorted(table) == [1.0, 5.0, 20.0]
        for mu, methods in table.items():
            for (k, cn_rate), (_, vd_rate) in zip(methods["CN"], methods["VD"]):
                assert cn_rate >= vd_rate - 0.05
        out = str(tmp_path / "curves.png")
        render(PlotSpec(path, "success-curves", out))
        assert open(out, "rb").read(8) == b"\x89PNG\r\n\x1a\n"

    def test_rendering_is_deterministic(self, tmp_path):
        path = success_csv(tmp_path, figure4_style_rows())
        first = str(tmp_path / "a.png")
        second = str(tmp_path / "b.png")
        render(PlotSpec(path, "success-curves", first))
        render(PlotSpec(path, "success-curves", second))
        assert open(first, "rb").read() == open(second, "rb").read()

    def test_missing_columns_reported_by_name(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("n,d,mu,r\n1,2,3,4\n", encoding="utf-8")
        with pytest.raises(SchemaError) as excinfo:
            load_success_table(str(path))
        assert "k" in str(excinfo.value)
        assert "success_rate" in str(excinfo.value)


class TestPhaseDiagram:
    def test_all_unknown_is_single_color(self, tmp_path):
        rows = [f"1e9,2,{mu},{k},1.0,5.0,0.0,UNKNOWN,UNKNOWN"
                for mu in (1.0, 10.0) for k in (2.0, 20.0)]
        path = phase_csv(tmp_path, rows)
        _mus, _ks, grids = load_phase_table(path)
        assert np.all(grids["VD"] == "UNKNOWN")
        assert np.all(grids["CN"] == "UNKNOWN")
        out = str(tmp_path / "flat.png")
        render(PlotSpec(path, "phase-diagram", out))
        assert open(out, "rb").read(8) == b"\x89PNG\r\n\x1a\n"

    def test_grid_layout_and_render(self, tmp_path):
        rows = []
        for mu in (1.0, 10.0, 100.0):
            for k in (2.0, 8.0, 64.0):
                vd = "SUCCESS" if k > mu else "FAIL"
                cn = "SUCCESS" if mu >= 10.0 else "UNKNOWN"
                rows.append(f"1e9,2,{mu},{k},1.0,5.0,0.0,{vd},{cn}")
        path = phase_csv(tmp_path, rows)
        mus, ks, grids = load_phase_table(path)
        assert mus == [1.0, 10.0, 100.0]
        assert ks == [2.0, 8.0, 64.0]
        assert grids["VD"][0, 0] == "SUCCESS"   # k=2, mu=1
        assert grids["VD"][0, 2] == "FAIL"      # k=2, mu=100
        assert grids["CN"][2, 1] == "SUCCESS"
        out = str(tmp_path / "phase.png")
        render(PlotSpec(path, "phase-diagram", out))
        assert open(out, "rb").read(8) == b"\x89PNG\r\n\x1a\n"

    def test_deterministic(self, tmp_path):
        rows = [f"1e9,2,{mu},{k},1.0,5.0,0.0,SUCCESS,UNKNOWN"
                for mu in (1.0, 31.6, 1000.0) for k in (2.0, 45.0, 1000.0)]
        path = phase_csv(tmp_path, rows)
        first = str(tmp_path / "a.png")
        second = str(tmp_path / "b.png")
        render(PlotSpec(path, "phase-diagram", first))
        render(PlotSpec(path, "phase-diagram", second))
        assert open(first, "rb").read() == open(second, "rb").read()

    def test_missing_columns(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("n,d,mu,k\n1,2,3,4\n", encoding="utf-8")
        with pytest.raises(SchemaError) as excinfo:
            load_phase_table(str(path))
        assert "vd_verdict" in str(excinfo.value)


class TestCli:
    def test_end_to_end(self, tmp_path):
        from render import main

        path = success_csv(tmp_path, figure4_style_rows())
        out = str(tmp_path / "cli.png")
        assert main(["--kind", "success-curves", "--input", path,
                     "--output", out]) == 0
        assert open(out, "rb").read(8) == b"\x89PNG\r\n\x1a\n"

    def test_renders_real_harness_output(self, tmp_path):
        # consume the generator package purely through its CLI and CSV files
        import subprocess
        import sys as _sys

        rates = str(tmp_path / "rates.csv")
        phase = str(tmp_path / "phase.csv")
        runs = [
            ["experiment", "--n", "300", "--d", "2", "--mu", "2,6",
             "--k", "2,4", "--trials", "5", "--seed", "3", "-o", rates],
            ["phase-diagram", "--n", "1e9", "--d", "2", "--mu-min", "0.1",
             "--mu-max", "1e4", "--mu-points", "8", "--k-min", "2",
             "--k-max", "1e5", "--k-points", "8", "-o", phase],
        ]
        for args in runs:
            proc = subprocess.run([_sys.executable, "-m", "rggclique"] + args,
                                  capture_output=True, text=True)
            assert proc.returncode == 0, proc.stderr

        from render import main

        for kind, source in (("success-curves", rates), ("phase-diagram", phase)):
            first = str(tmp_path / f"{kind}-a.png")
            second = str(tmp_path / f"{kind}-b.png")
            assert main(["--kind", kind, "--input", source, "--output", first]) == 0
            assert main(["--kind", kind, "--input", source, "--output", second]) == 0
            assert open(first, "rb").read() == open(second, "rb").read()

    def test_schema_error_exit_code(self, tmp_path, capsys):
        from render import main

        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n", encoding="utf-8")
        out = str(tmp_path / "x.png")
        assert main(["--kind", "phase-diagram", "--input", str(bad),
                     "--output", out]) == 1
        assert "[schema-error]" in capsys.readouterr().err
