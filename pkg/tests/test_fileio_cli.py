import pytest

from anglecover.cli import main
from anglecover.core import Angle, AngleAssignment
from anglecover.fileio import (
    FormatError,
    parse_cover,
    parse_instance,
    serialize_cover,
    serialize_instance,
)
from anglecover.instances import get_instance, instance_names
from anglecover.transform import TopologicalGraph
from conftest import rotation_graph


def test_instance_round_trip_is_identity():
    for name in instance_names():
        text = serialize_instance(get_instance(name).graph)
        assert serialize_instance(parse_instance(text)) == text


def test_parse_defaults_rotation():
    g = parse_instance("e 0 0 1\ne 1 1 2\ne 2 0 0\n")
    assert g.rotation[0] == (0, 2, 2)
    assert g.rotation[1] == (0, 1)


def test_parse_comments_and_blank_lines():
    g = parse_instance("# a triangle\n\ne 0 0 1 # first\ne 1 1 2\ne 2 2 0\n")
    assert len(g.edges) == 3


def test_parse_topological_round_trip():
    text = (
        "e 0 0 1\ne 1 2 3\n"
        "rot 0: 0\nrot 1: 0\nrot 2: 1\nrot 3: 1\n"
        "x 0 0 1 0\nseq 0: 0\nseq 1: 0\n"
    )
    tg = parse_instance(text)
    assert isinstance(tg, TopologicalGraph)
    assert serialize_instance(parse_instance(serialize_instance(tg))) == \
        serialize_instance(tg)


def test_parse_rejects_garbage():
    for bad in ("q 1 2\n", "e 0 0\n", "e 0 0 1\ne 0 1 2\n", "angle 0 0 2\n"):
        with pytest.raises(FormatError):
            parse_instance(bad)


def test_parse_rejects_inconsistent_crossing():
    with pytest.raises(FormatError):
        parse_instance("e 0 0 1\ne 1 2 3\nx 0 0 1 0\nseq 0: 0\n")


def test_cover_round_trip():
    asg = AngleAssignment.build({2: [Angle(2, 1, 2)], 0: [Angle(0, 0, 2)]})
    text = serialize_cover(asg)
    assert text == "angle 0 0 2\nangle 2 1 2\n"
    assert serialize_cover(parse_cover(text)) == text


def test_parse_cover_rejects_garbage():
    with pytest.raises(FormatError):
        parse_cover("angle 0 0\n")


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def inst_file(tmp_path, name):
    return write(
        tmp_path, f"{name}.inst", serialize_instance(get_instance(name).graph)
    )


def test_cli_solve_exit_codes(tmp_path, capsys):
    assert main(["solve", "--verify", inst_file(tmp_path, "fig1")]) == 0
    cover = capsys.readouterr().out
    assert cover.startswith("angle ")
    assert main(["solve", inst_file(tmp_path, "fig2a")]) == 1
    assert main(["solve", "--algo", "oracle", inst_file(tmp_path, "fig3")]) == 1


def test_cli_solve_budget_indeterminate(tmp_path):
    f = inst_file(tmp_path, "fig2a")
    assert main(["solve", "--algo", "oracle", "--budget", "1", f]) == 3


def test_cli_check(tmp_path, capsys):
    f = inst_file(tmp_path, "fig1")
    assert main(["solve", f]) == 0
    cover = write(tmp_path, "c.cover", capsys.readouterr().out)
    assert main(["check", f, cover]) == 0
    bad = write(tmp_path, "bad.cover", "angle 0 0 2\n")
    assert main(["check", f, bad]) == 1


def test_cli_density(tmp_path, capsys):
    tri = write(
        tmp_path,
        "tri.inst",
        serialize_instance(rotation_graph([(0, 1), (1, 2), (2, 0)])),
    )
    assert main(["density", tri]) == 0
    import itertools

    k6 = write(
        tmp_path,
        "k6.inst",
        serialize_instance(
            rotation_graph(list(itertools.combinations(range(6), 2)))
        ),
    )
    assert main(["density", k6]) == 1
    assert "witness:" in capsys.readouterr().out


def test_cli_allocate(tmp_path, capsys):
    sq = write(
        tmp_path,
        "sq.inst",
        serialize_instance(rotation_graph([(0, 1), (1, 2), (2, 3), (3, 0)])),
    )
    assert main(["allocate", "--verify", sq]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# size 2\n")


def test_cli_decompose(tmp_path, capsys):
    text = (
        "e 0 0 1\ne 1 1 2\ne 2 2 3\ne 3 3 0\n"
        "rot 0: 3 0\nrot 1: 0 1\nrot 2: 1 2\nrot 3: 2 3\n"
    )
    f = write(tmp_path, "sq.inst", text)
    assert main(["decompose", "--verify", f]) == 0
    out = capsys.readouterr().out
    assert "# layer 1" in out and "# layer 2" in out


def test_cli_reduce_and_resolve(tmp_path, capsys):
    tri = write(
        tmp_path,
        "tri.inst",
        serialize_instance(rotation_graph([(0, 1), (1, 2), (2, 0)])),
    )
    assert main(["reduce", "3col", tri]) == 0
    reduced = write(tmp_path, "red.inst", capsys.readouterr().out)
    assert main(["solve", reduced]) == 0


def test_cli_gen_pipes_into_solve(tmp_path, capsys):
    assert main(["gen", "laman", "--steps", "5", "--seed", "3"]) == 0
    f = write(tmp_path, "g.inst", capsys.readouterr().out)
    assert main(["solve", f]) in (0, 1)


def test_cli_instance_unknown_name():
    assert main(["instance", "nope"]) == 2


def test_cli_io_error():
    assert main(["solve", "/does/not/exist.inst"]) == 2


def test_cli_rejects_topological_input_to_solve(tmp_path):
    text = (
        "e 0 0 1\ne 1 2 3\n"
        "rot 0: 0\nrot 1: 0\nrot 2: 1\nrot 3: 1\n"
        "x 0 0 1 0\nseq 0: 0\nseq 1: 0\n"
    )
    f = write(tmp_path, "t.inst", text)
    assert main(["solve", f]) == 2
    assert main(["planarize", f]) == 0
