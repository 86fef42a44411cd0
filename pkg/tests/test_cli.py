import pytest

from recolorkit.cli import build_parser, replay_path_text, run
from recolorkit.families import build_family, parse_family
from recolorkit.graph import check_proper, format_coloring, format_graph, parse_graph
from recolorkit.patterns import is_isomorphic


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def graph_file(tmp_path, spec):
    return write(tmp_path, spec.replace(":", "_").replace(",", "_") + ".g",
                 format_graph(build_family(parse_family(spec))))


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "p.g"
    assert run(["gen", "petersen", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("c petersen")
    assert is_isomorphic(parse_graph(text), build_family(parse_family("petersen")))


def test_gen_bad_spec(capsys):
    assert run(["gen", "nosuchfamily:3"]) == 2


def test_analyze(tmp_path, capsys):
    assert run(["analyze", graph_file(tmp_path, "join(c5,k1)")]) == 0
    out = capsys.readouterr().out
    assert out.startswith("component 1,2,3,4,5,6")


def test_decide(tmp_path, capsys):
    assert run(["decide", graph_file(tmp_path, "petersen")]) == 0
    assert capsys.readouterr().out.startswith("recolorable")
    assert run(["decide", graph_file(tmp_path, "c6")]) == 5
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "frozen 3" and lines[1] == "1 2 3 1 2 3"
    assert "c the stuck coloring is frozen on the whole graph" in lines


def test_not_in_class(tmp_path, capsys):
    assert run(["decide", graph_file(tmp_path, "c4")]) == 3


def test_bad_graph_file(tmp_path, capsys):
    assert run(["decide", write(tmp_path, "bad.g", "hello\n")]) == 2
    assert run(["decide", str(tmp_path / "missing.g")]) == 2


def test_path_and_replay(tmp_path, capsys):
    g = graph_file(tmp_path, "petersen")
    a = write(tmp_path, "a.col", format_coloring((1, 2, 1, 2, 3, 2, 3, 3, 1, 1), 4))
    b = write(tmp_path, "b.col", format_coloring((2, 1, 2, 1, 4, 1, 4, 4, 2, 2), 4))
    graph = parse_graph(open(g).read())
    assert check_proper(graph, [1, 2, 1, 2, 3, 2, 3, 3, 1, 1], 4)
    out = tmp_path / "p.path"
    assert run(["path", g, a, b, "--ell", "4", "-o", str(out)]) == 0
    assert "c length" in capsys.readouterr().err
    ok, detail = replay_path_text(graph, out.read_text(), (1, 2, 1, 2, 3, 2, 3, 3, 1, 1))
    assert ok and detail.endswith("2 1 2 1 4 1 4 4 2 2")
    assert run(["verify", g, "--replay", str(out), "--start", a, "--target", b]) == 0
    assert "CHECK replay pass" in capsys.readouterr().out
    assert run(["verify", g, "--replay", str(out), "--start", b]) == 1


def test_path_exit_codes(tmp_path, capsys):
    g = graph_file(tmp_path, "c6")
    frozen = write(tmp_path, "f.col", format_coloring((1, 2, 3, 1, 2, 3), 3))
    two = write(tmp_path, "t.col", format_coloring((1, 2, 1, 2, 1, 2), 3))
    assert run(["path", g, frozen, two, "--ell", "3"]) == 5
    assert run(["path", g, frozen, two, "--ell", "3", "--force-oracle"]) == 5
    assert run(["path", g, two, two, "--ell", "2"]) == 5
    assert run(["path", g, frozen, two, "--ell", "4"]) == 0
    assert run(["path", g, frozen, two, "--ell", "3", "--budget", "0"]) == 2


def test_size_limit_exit(tmp_path, capsys):
    g = graph_file(tmp_path, "c6")
    a = write(tmp_path, "a.col", format_coloring((1, 2, 1, 2, 1, 2), 3))
    b = write(tmp_path, "b.col", format_coloring((2, 1, 2, 1, 2, 3), 3))
    assert run(["path", g, a, b, "--ell", "3", "--force-oracle", "--budget", "5"]) == 4


def test_frozen_command(tmp_path, capsys):
    assert run(["frozen", graph_file(tmp_path, "c6")]) == 0
    assert capsys.readouterr().out.split() == ["3", "1", "2", "3", "1", "2", "3"]
    assert run(["frozen", graph_file(tmp_path, "c5")]) == 0
    assert capsys.readouterr().out.strip() == "none"


@pytest.mark.parametrize("spec,code", [("petersen", 0), ("h3:2", 0), ("c6", 0), ("f2", 0)])
def test_verify(tmp_path, capsys, spec, code):
    assert run(["verify", graph_file(tmp_path, spec), "--trials", "5", "--seed", "0x2a"]) == code
    out = capsys.readouterr().out
    assert "CHECK decision pass" in out and "fail" not in out


def test_verify_deterministic(tmp_path, capsys):
    g = graph_file(tmp_path, "h5:1,1")
    run(["verify", g, "--trials", "4", "--seed", "7"])
    first = capsys.readouterr().out
    run(["verify", g, "--trials", "4", "--seed", "7"])
    assert capsys.readouterr().out == first


def test_seed_range():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["verify", "x", "--seed", str(2 ** 64)])


def test_help_lists_families():
    assert "h4star" in build_parser().format_help()
