import pytest

from screenant_plots import (
    FIGURES,
    FigureSpec,
    SchemaMismatchError,
    read_summary,
    render,
)

HEADER = (
    "param,value,se_screenant_mean,se_screenant_std,se_screenant_ci95,"
    "se_oracle_mean,se_oracle_std,se_oracle_ci95,"
    "se_edgeant_mean,se_edgeant_std,se_edgeant_ci95,relative_gain,trials"
)

SWEEP_VALUES = {
    "alpha": [round(0.1 * i, 1) for i in range(1, 11)],
    "elements": [16, 25, 36, 49, 64, 81, 100],
    "power": [15, 19, 23, 27, 31],
    "distance": [1, 2, 3, 4, 5],
    "frequency": [28e9, 100e9, 300e9],
    "beta": [round(0.1 * i, 1) for i in range(1, 11)],
    "ratio": [0.0, 0.2, 0.4, 0.6, 0.8, 1.0],
    "frequency_blk": [28e9, 100e9, 300e9],
}


def write_csv(path, param, values, trials=100, base=20.0, std=0.5):
    lines = [HEADER]
    n = trials
    ci = 1.96 * std / n**0.5
    for i, v in enumerate(values):
        mean = base + 0.3 * i
        lines.append(
            f"{param},{v},{mean},{std},{ci},{mean + 1},{std},{ci},"
            f"{mean - 5},{std},{ci},{(mean / (mean - 5)) - 1},{n}"
        )
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture()
def alpha_csv(tmp_path):
    return write_csv(tmp_path / "summary.csv", "alpha", SWEEP_VALUES["alpha"])


class TestReadSummary:
    def test_reads_rows(self, alpha_csv):
        rows = read_summary(alpha_csv)
        assert len(rows) == 10
        assert rows[0]["param"] == "alpha"

    def test_missing_column_named(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("param,value\nalpha,0.5\n")
        with pytest.raises(SchemaMismatchError, match="se_screenant_mean"):
            read_summary(bad)

    def test_empty_file(self, tmp_path):
        empty = tmp_path / "empty.csv"
        empty.write_text(HEADER + "\n")
        with pytest.raises(SchemaMismatchError, match="no data rows"):
            read_summary(empty)


class TestRender:
    def test_two_series_all_points(self, alpha_csv, tmp_path):
        result = render(FigureSpec("transparency", alpha_csv, tmp_path / "fig"))
        assert result.n_points == 10
        assert result.n_series == 2
        assert result.svg_path.exists() and result.png_path.exists()
        assert result.svg_path.stat().st_size > 0

    def test_oracle_overlay_adds_series(self, alpha_csv, tmp_path):
        result = render(FigureSpec("transparency", alpha_csv, tmp_path / "fig", with_oracle=True))
        assert result.n_series == 3

    def test_zero_width_ci_bands(self, tmp_path):
        csv = write_csv(tmp_path / "one.csv", "alpha", [0.5, 1.0], trials=1, std=0.0)
        result = render(FigureSpec("transparency", csv, tmp_path / "fig"))
        assert result.n_points == 2

    def test_byte_stable_svg(self, alpha_csv, tmp_path):
        a = render(FigureSpec("transparency", alpha_csv, tmp_path / "a"))
        b = render(FigureSpec("transparency", alpha_csv, tmp_path / "b"))
        assert a.svg_path.read_bytes() == b.svg_path.read_bytes()

    def test_wrong_sweep_rejected(self, alpha_csv, tmp_path):
        with pytest.raises(SchemaMismatchError, match="expects 'beta'"):
            render(FigureSpec("blockage", alpha_csv, tmp_path / "fig"))

    def test_unknown_figure_rejected(self, alpha_csv, tmp_path):
        with pytest.raises(ValueError, match="unknown figure id"):
            FigureSpec("spectrogram", alpha_csv, tmp_path / "fig")

    def test_shared_axes_cover_both_files(self, tmp_path):
        import matplotlib.pyplot as plt

        f1 = write_csv(tmp_path / "f1.csv", "frequency", SWEEP_VALUES["frequency"], base=20.0)
        f2 = write_csv(tmp_path / "f2.csv", "frequency_blk", SWEEP_VALUES["frequency_blk"], base=8.0)
        r1 = render(FigureSpec("frequency", f1, tmp_path / "g1", share_csv=f2))
        assert r1.svg_path.exists()
        # the widened figure must accommodate the second file's lower means:
        # re-render without sharing and confirm the limits differ
        r_alone = render(FigureSpec("frequency", f1, tmp_path / "g2"))
        assert r1.svg_path.read_bytes() != r_alone.svg_path.read_bytes()
        plt.close("all")


class TestCli:
    def test_cli_renders(self, alpha_csv, tmp_path, capsys):
        from screenant_plots.cli import main

        rc = main([
            "--figure", "transparency", "--csv", str(alpha_csv),
            "--out", str(tmp_path / "fig.svg"),
        ])
        assert rc == 0
        assert (tmp_path / "fig.svg").exists() and (tmp_path / "fig.png").exists()
        assert "10 points" in capsys.readouterr().out

    def test_cli_schema_error_exit_2(self, tmp_path, capsys):
        from screenant_plots.cli import main

        bad = tmp_path / "bad.csv"
        bad.write_text("param,value\nalpha,0.5\n")
        rc = main(["--figure", "transparency", "--csv", str(bad), "--out", str(tmp_path / "f")])
        assert rc == 2
        assert "schema-mismatch" in capsys.readouterr().err


def test_criterion_9_plot_pipeline(tmp_path):
    """Acceptance: all eight sweep CSVs render, SVGs are byte-stable across
    reruns, and every CSV row appears as a plotted point."""
    failures = []
    for figure, (param, _, _) in FIGURES.items():
        csv = write_csv(tmp_path / f"{figure}.csv", param, SWEEP_VALUES[param])
        r1 = render(FigureSpec(figure, csv, tmp_path / f"{figure}_1"))
        r2 = render(FigureSpec(figure, csv, tmp_path / f"{figure}_2"))
        if r1.n_points != len(SWEEP_VALUES[param]):
            failures.append(f"{figure}: point count {r1.n_points}")
        if r1.svg_path.read_bytes() != r2.svg_path.read_bytes():
            failures.append(f"{figure}: SVG not byte-stable")
    line = f"[{'PASS' if not failures else 'FAIL'}] criterion 9: plot pipeline — " + (
        "all 8 figures render, byte-stable, full point counts" if not failures else str(failures)
    )
    print(line)
    assert not failures, line
