import io
import math

import numpy as np
import pytest

from sewlink.config import load_config
from sewlink.csvio import content_hash, format_cell, provenance_comments, read_csv, write_csv
from sewlink.errors import ValidationError
from sewlink.fdtd.snapshots import read_snapshot, write_snapshot


class TestCsv:
    def test_round_trip_preserves_floats_exactly(self, tmp_path):
        rows = [
            [1.3351285799119215e-06, -999996.6303135987, 1.0],
            [math.pi, 1e-308, -0.0],
            [float("nan"), float("inf"), 42.0],
        ]
        path = tmp_path / "t.csv"
        write_csv(path, ["a", "b", "c"], rows, comments=["hello"])
        header, back = read_csv(path)
        assert header == ["a", "b", "c"]
        for orig, rt in zip(rows, back):
            for o, r in zip(orig, rt):
                if math.isnan(o):
                    assert math.isnan(r)
                else:
                    assert o == r

    def test_bools_become_01(self):
        assert format_cell(True) == "1"
        assert format_cell(False) == "0"

    def test_stream_output(self):
        buf = io.StringIO()
        write_csv(buf, ["x"], [[1.5]], comments=["c1"])
        text = buf.getvalue()
        assert text == "# c1\nx\n1.5\n"
        header, rows = read_csv(io.StringIO(text))
        assert header == ["x"] and rows == [[1.5]]

    def test_repeated_write_byte_identical(self, tmp_path):
        rows = [[math.sqrt(2.0), 1.0 / 3.0]]
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        comments = provenance_comments("0.1.0", "scenario body")
        write_csv(p1, ["u", "v"], rows, comments)
        write_csv(p2, ["u", "v"], rows, comments)
        assert p1.read_bytes() == p2.read_bytes()

    def test_content_hash_stable(self):
        assert content_hash("abc") == content_hash("abc")
        assert content_hash("abc") != content_hash("abd")

    def test_missing_header_rejected(self):
        with pytest.raises(ValueError):
            read_csv(io.StringIO("# only a comment\n"))


class TestSnapshots:
    def test_round_trip_bit_exact(self, tmp_path):
        rng = np.random.default_rng(7)
        arr = rng.standard_normal((17, 9))
        path = tmp_path / "field.f64"
        write_snapshot(path, arr, dx=0.005, field="hz", step=1234)
        back, meta = read_snapshot(path)
        assert np.array_equal(back, arr)
        assert meta["nx"] == 17 and meta["ny"] == 9
        assert meta["dx"] == 0.005
        assert meta["field"] == "hz"
        assert meta["step"] == 1234
        assert meta["order"] == "C"

    def test_header_is_one_json_line(self, tmp_path):
        import json

        arr = np.zeros((4, 3))
        path = tmp_path / "z.f64"
        write_snapshot(path, arr, dx=1.0, field="ex", step=0)
        with open(path, "rb") as fh:
            meta = json.loads(fh.readline())
            payload = fh.read()
        assert len(payload) == 4 * 3 * 8
        assert meta["field"] == "ex"

    def test_rejects_non_2d(self, tmp_path):
        with pytest.raises(ValueError):
            write_snapshot(tmp_path / "x.f64", np.zeros(5), dx=1.0, field="ex", step=0)


class TestConfig:
    def test_typed_getters(self, tmp_path):
        p = tmp_path / "c.ini"
        p.write_text(
            "[main]\n"
            "number = 2.5\n"
            "count = 7\n"
            "flag = true\n"
            "name = hello   # trailing comment\n"
            "items = 1.0, 2.5, -3\n"
        )
        cfg = load_config(p)
        assert cfg.get_float("main", "number") == 2.5
        assert cfg.get_int("main", "count") == 7
        assert cfg.get_bool("main", "flag") is True
        assert cfg.get_str("main", "name") == "hello"
        assert cfg.get_float_list("main", "items") == [1.0, 2.5, -3.0]
        assert cfg.get_float("main", "missing", default=9.0) == 9.0

    def test_error_names_offending_field(self, tmp_path):
        p = tmp_path / "c.ini"
        p.write_text("[main]\nvalue = not_a_number\n")
        cfg = load_config(p)
        with pytest.raises(ValidationError) as exc:
            cfg.get_float("main", "value")
        assert exc.value.field == "main.value"
        with pytest.raises(ValidationError) as exc:
            cfg.get_float("main", "absent")
        assert exc.value.field == "main.absent"
        with pytest.raises(ValidationError) as exc:
            cfg.get_float("other", "x")
        assert exc.value.field == "other"

    def test_missing_file(self):
        with pytest.raises(ValidationError) as exc:
            load_config("definitely_not_here.ini")
        assert exc.value.field == "config"
        assert exc.value.reason == "not found"
