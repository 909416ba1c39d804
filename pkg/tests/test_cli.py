"""End-to-end command-line behaviour, including the exit-code contract."""

import subprocess
import sys

from fusioncat.fsymbols import build_h3_table

EXPECTED_ENTRIES = 1431


def run_cli(*args, env=None):
    import os
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([sys.executable, "-m", "fusioncat", *args],
                          capture_output=True, text=True, env=full_env)


def test_count():
    proc = run_cli("count", "--builtin", "h3")
    assert proc.returncode == 0
    assert "unknowns=1431" in proc.stdout
    assert "nontrivial[vacuous]=41391" in proc.stdout
    assert "nontrivial[unit]=36022" in proc.stdout


def test_count_z3():
    proc = run_cli("count", "--builtin", "z3")
    assert proc.returncode == 0
    assert "unknowns=27" in proc.stdout


def test_verify_builtin_symbolic():
    proc = run_cli("verify", "--builtin", "h3", "--params", "symbolic")
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "failures=0" in proc.stdout


def test_verify_concrete_params():
    proc = run_cli("verify", "--builtin", "h3", "--params", "+1,-1")
    assert proc.returncode == 0
    assert "failures=0" in proc.stdout


def test_export_then_verify_round_trip(tmp_path):
    path = tmp_path / "h3.fsym"
    proc = run_cli("export", "--builtin", "h3", "--out", str(path))
    assert proc.returncode == 0
    text = path.read_text()
    assert text.splitlines()[0] == "h3fsym v1"
    assert text == build_h3_table().serialize()
    proc = run_cli("verify", "--dataset", str(path))
    assert proc.returncode == 0


def test_verify_flipped_sign_fails(tmp_path):
    lines = build_h3_table().serialize().splitlines()
    target = next(i for i, line in enumerate(lines)
                  if line.startswith("F r r r r ar r = "))
    head, _, expr = lines[target].partition(" = ")
    lines[target] = f"{head} = -({expr})"
    path = tmp_path / "mutated.fsym"
    path.write_text("\n".join(lines) + "\n")
    proc = run_cli("verify", "--dataset", str(path))
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "broken.fsym"
    path.write_text("h3fsym v1\nF r r r r 1 1 = (1/0)\n")
    proc = run_cli("verify", "--dataset", str(path))
    assert proc.returncode == 2
    assert "zero denominator" in proc.stderr


def test_missing_file_exit_code(tmp_path):
    proc = run_cli("verify", "--dataset", str(tmp_path / "nope.fsym"))
    assert proc.returncode == 2


def _read_ppm(path):
    data = path.read_bytes()
    assert data.startswith(b"P6\n")
    header, _, rest = data.partition(b"255\n")
    dims = header.split(b"\n")[1].split()
    width, height = int(dims[0]), int(dims[1])
    assert len(rest) == 3 * width * height
    return width, height, rest


def test_render_layout_and_determinism(tmp_path):
    out1 = tmp_path / "a.ppm"
    out2 = tmp_path / "b.ppm"
    for out in (out1, out2):
        proc = run_cli("render", "--builtin", "h3", "--params", "+1,+1",
                       "--out", str(out))
        assert proc.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    width, height, body = _read_ppm(out1)
    assert (width, height) == (38, 38)
    # first entry in key order is F[1;111] = +1: a black pixel
    assert body[0:3] == bytes((0, 0, 0))
    # trailing padding cells are grey
    assert body[-3:] == bytes((128, 128, 128))
    # the data set contains -1 entries at (+1,+1): white pixels exist
    pixels = {body[i:i + 3] for i in range(0, 3 * EXPECTED_ENTRIES, 3)}
    assert bytes((255, 255, 255)) in pixels


def test_render_pixel_mapping(tmp_path):
    out = tmp_path / "map.ppm"
    run_cli("render", "--builtin", "h3", "--params", "+1,+1", "--out", str(out))
    _, _, body = _read_ppm(out)
    table = build_h3_table().substitute_params(1, 1)
    keys = sorted(table.entries, key=lambda k: k.sort_key)
    ring = table.ring
    # the all-rho diagonal entry -B ~ -0.5352 must map to (0, 196, 0)
    idx = keys.index(ring.key("r", "r", "r", "r", "r", "r"))
    assert body[3 * idx: 3 * idx + 3] == bytes((0, 196, 0))
    # and an exact -1 entry maps to white
    idx = keys.index(ring.key("1", "r", "ar", "asr", "asr", "r"))
    value = table.entries[keys[idx]].as_field()
    if value == -1:
        assert body[3 * idx: 3 * idx + 3] == bytes((255, 255, 255))


def test_render_seeded_order_differs_but_is_deterministic(tmp_path):
    sortd = tmp_path / "sorted.ppm"
    seeded1 = tmp_path / "s1.ppm"
    seeded2 = tmp_path / "s2.ppm"
    run_cli("render", "--builtin", "h3", "--out", str(sortd))
    run_cli("render", "--builtin", "h3", "--order", "seeded:7", "--out", str(seeded1))
    run_cli("render", "--builtin", "h3", "--order", "seeded:7", "--out", str(seeded2))
    assert seeded1.read_bytes() == seeded2.read_bytes()
    assert seeded1.read_bytes() != sortd.read_bytes()


def test_render_rejects_out_of_range_values(tmp_path):
    lines = build_h3_table().serialize().splitlines()
    target = next(i for i, line in enumerate(lines)
                  if line.startswith("F 1 1 1 1 1 1 = "))
    lines[target] = "F 1 1 1 1 1 1 = 2"
    path = tmp_path / "corrupt.fsym"
    path.write_text("\n".join(lines) + "\n")
    proc = run_cli("render", "--dataset", str(path), "--params", "+1,+1",
                   "--out", str(tmp_path / "x.ppm"))
    assert proc.returncode == 2
    assert "outside" in proc.stderr


def test_skein_report():
    proc = run_cli("skein")
    assert proc.returncode == 0
    assert "c1=(7/18+1/18*r13)" in proc.stdout
    assert "match=yes" in proc.stdout


def test_skein_precision_env():
    proc = run_cli("skein", env={"FUSIONCAT_PRECISION_BITS": "64"})
    assert proc.returncode == 0
    proc = run_cli("skein", env={"FUSIONCAT_PRECISION_BITS": "bogus"})
    assert proc.returncode == 2


def test_solve_fibonacci(tmp_path):
    out = tmp_path / "fib.fsym"
    proc = run_cli("solve", "--builtin", "fib", "--out", str(out))
    assert proc.returncode == 0
    assert "solutions=2" in proc.stdout
    written = sorted(tmp_path.glob("fib.fsym*"))
    assert len(written) == 2
    proc = run_cli("verify", "--dataset", str(written[0]))
    assert proc.returncode == 0


def test_solve_h3_reports_seed_agreement():
    proc = run_cli("solve", "--builtin", "h3")
    assert proc.returncode == 0
    assert "resolved fraction" in proc.stdout
    assert "exact=173" in proc.stdout
