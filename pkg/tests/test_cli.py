import pytest

from sdcodes import textfmt
from sdcodes.cli import main

C78 = ["--n", "19", "--a", "0100101010100001000", "--b", "1111101101011010000", "--c", "0010101111111101101", "--xi", "0101"]
C54 = ["--n", "13", "--a", "0100111100101", "--b", "1111101111010", "--c", "1011001111110", "--xi", "1010"]
C62 = ["--n", "15", "--a", "000000100100101", "--b", "000011101110111", "--c", "100000000000000", "--xi", "0110"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c78_file(tmp_path, capsys):
    path = tmp_path / "c78.txt"
    assert run(capsys, "construct", *C78, "--binary", "-o", str(path))[0] == 0
    return path


def test_construct_length78(capsys):
    code, out, _ = run(capsys, "construct", *C78, "--binary")
    assert code == 0
    mt = textfmt.loads(out)
    assert (mt.k, mt.n) == (39, 78)


def test_construct_condition_failure(capsys):
    code, _, err = run(capsys, "construct", "--a", "000", "--b", "000", "--c", "100", "--xi", "0000")
    assert code == 2
    assert "identity_sum=false" in err


def test_construct_parse_failure(capsys):
    code, _, err = run(capsys, "construct", "--a", "0x0", "--b", "000", "--c", "100", "--xi", "0000")
    assert code == 1 and "parse error" in err
    code, _, _ = run(capsys, "construct", "--n", "5", "--a", "000", "--b", "000", "--c", "100", "--xi", "0000")
    assert code == 1


def test_construct_f2uv_length56(capsys):
    code, out, _ = run(
        capsys, "construct", "--ring", "F2UV", "--lambda", "1", "--mu", "9",
        "--a", "B03", "--b", "39D", "--c", "344", "--xi", "7EBA", "--binary",
    )
    assert code == 0
    mt = textfmt.loads(out)
    assert (mt.k, mt.n) == (28, 56)


def test_construct_ring_output(capsys):
    code, out, _ = run(
        capsys, "construct", "--ring", "F2UV", "--mu", "9", "--a", "B03", "--b", "39D", "--c", "344", "--xi", "7EBA"
    )
    assert code == 0
    mt = textfmt.loads(out)
    assert mt.ring.value == "F2UV" and (mt.k, mt.n) == (7, 14)


def test_verify_length78(capsys, c78_file):
    code, out, _ = run(capsys, "verify", str(c78_file))
    assert code == 0
    assert out.splitlines()[0] == "self-dual [78,39,14], W_{78,1}, α=-76, β=0, Type I"
    assert "best known distance for n=78: 14 (meets)" in out


def test_verify_identity_file(capsys, tmp_path):
    path = tmp_path / "id.txt"
    path.write_text("code n=4 k=4 field=F2\n1000\n0100\n0010\n0001\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 3
    assert "not self-dual" in out and "rank: 4" in out


def test_verify_length92_third(capsys, tmp_path):
    path = tmp_path / "c92.txt"
    args = ["--ring", "F2U", "--n", "11"]
    from sdcodes.records import fixture

    p = fixture("C92_3").params.to_hex()
    args += ["--a", p["a"], "--b", p["b"], "--c", p["c"], "--xi", p["xi"], "--lambda", p["lambda"], "--mu", p["mu"]]
    assert run(capsys, "construct", *args, "-o", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "α=1038, β=0" in out.splitlines()[0]
    assert "raise --wmax" in out


def test_verify_exhaustive(capsys, tmp_path):
    path = tmp_path / "c54.txt"
    run(capsys, "construct", *C54, "--binary", "-o", str(path))
    code, out, _ = run(capsys, "verify", str(path), "--exhaustive")
    assert code == 0
    assert "census cutoff: 54" in out


def test_census(capsys, c78_file):
    code, out, _ = run(capsys, "census", str(c78_file), "--wmax", "16")
    assert code == 0
    assert out.split("\n")[:3] == ["0 1", "14 3097", "16 64068"]


def test_buildup_to_length56(capsys, tmp_path):
    path = tmp_path / "c54.txt"
    run(capsys, "construct", *C54, "-o", str(path))
    from sdcodes.records import fixture

    tail = fixture("C56_3").delta[27:]
    code, out, _ = run(capsys, "buildup", str(path), "--delta", tail, "--zero-prefix")
    assert code == 0
    assert "self-dual [56,28,10], W_{56,2}, α=-50, Type I" in out
    mt = textfmt.loads(out)
    assert (mt.k, mt.n) == (28, 56)


def test_buildup_bad_delta(capsys, tmp_path):
    path = tmp_path / "c54.txt"
    run(capsys, "construct", *C54, "-o", str(path))
    assert run(capsys, "buildup", str(path), "--delta", "11")[0] == 1
    assert run(capsys, "buildup", str(path), "--delta", "11", "--zero-prefix")[0] == 3


def test_neighbour_length62(capsys, tmp_path):
    path = tmp_path / "c62.txt"
    run(capsys, "construct", *C62, "--binary", "-o", str(path))
    code, out, _ = run(capsys, "neighbour", str(path), "--x", "1111001101001110100110000100110", "--zero-prefix")
    assert code == 0
    assert "self-dual [62,31,12], W_{62,2}, α=2, Type I" in out


def test_bound(capsys):
    assert run(capsys, "bound", "--n", "94", "--type", "I")[1].strip() == "18"
    assert run(capsys, "bound", "--n", "30", "--type", "II")[0] == 3


def test_search_deterministic(capsys, tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("ring=F2\nn=5\nseed=7\nmax_attempts=120\nd_min=4\n")
    out_file = tmp_path / "found.txt"
    code, out1, err = run(capsys, "search", "--config", str(cfg), "--out", str(out_file))
    assert code == 0 and out1 and "attempts=120" in err
    _, out2, _ = run(capsys, "search", "--config", str(cfg), "--workers", "2")
    assert out1 == out2
    assert out_file.read_text() == out1


def test_search_bad_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("ring=F2\nwidth=5\n")
    assert run(capsys, "search", "--config", str(cfg))[0] == 1


def test_query_and_reproduce(capsys):
    code, out, _ = run(capsys, "query", "--n", "94", "--family", "W_{94,1}", "--alpha", "3588", "--beta", "-69")
    assert code == 0 and out.startswith("label=C94_1 ")
    code, out, _ = run(capsys, "reproduce", "--label", "C56_2", "--label", "C62_1")
    assert code == 0
    assert out.count(": ok") == 2


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "nope.txt"))[0] == 1


def test_round_trip_construct_verify(capsys, tmp_path):
    from sdcodes.records import published_records

    for rec in [r for r in published_records() if r.kind == "theorem1" and r.params.ring.value == "F2UV"][:3]:
        p = rec.params.to_hex()
        path = tmp_path / f"{rec.label}.txt"
        args = ["--ring", p["ring"], "--lambda", p["lambda"], "--mu", p["mu"], "--a", p["a"], "--b", p["b"],
                "--c", p["c"], "--xi", p["xi"], "-o", str(path)]
        assert run(capsys, "construct", *args)[0] == 0
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0 and out.startswith("self-dual [56,28,10]")
