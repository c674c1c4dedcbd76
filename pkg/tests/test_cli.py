import io
import json
import os

import pytest

from choosecheck import families
from choosecheck.cli import main
from choosecheck.document import ParseError, dump_document, parse_document
from choosecheck.fixtures import pentagon_gadget


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(G_or_text, name="g.json"):
        p = tmp_path / name
        p.write_text(G_or_text if isinstance(G_or_text, str) else dump_document(G_or_text, name=name[:-5]))
        return str(p)
    return _write


def frac(d):
    return d["num"], d["den"]


def test_analyze_octahedron(write):
    code, out, _ = run("analyze", write(families.octahedron()))
    assert code == 0
    rep = json.loads(out)
    g = rep["graph"]
    assert (g["vertices"], g["edges"], g["faces"]) == (6, 12, 8)
    assert frac(rep["discharge"]["final_sum"]) == (-12, 1)
    assert frac(rep["discharge"]["initial_sum"]) == (-12, 1)


def test_analyze_hypothesis_gadget(write):
    G = pentagon_gadget()
    code, out, _ = run("analyze", write(G), "--hypothesis", "5")
    assert code == 0
    (h,) = json.loads(out)["hypotheses"]
    assert h["i"] == 5 and h["holds"] is False
    assert sorted(h["witnesses"][0]["cycle"]) == [f"c{k}" for k in range(5)]


def test_analyze_max_cycle_len_is_bounded(write):
    with pytest.raises(SystemExit):
        run("analyze", write(families.cycle(4)), "--max-cycle-len", "9")
    code, out, _ = run("analyze", write(families.cycle(7)), "--max-cycle-len", "7")
    assert json.loads(out)["cycles"]["by_length"]["7"] == 1


def test_asymmetric_rotation_exits_3(write):
    code, _, err = run("analyze", write('{"version": 1, "rotation": {"a": ["b"], "b": []}}'))
    assert code == 3
    assert "a" in err and "b" in err and "embedding" in err


def test_nonplanar_rotation_exits_3(write):
    rot = {str(v): [str(w) for w in range(5) if w != v] for v in range(5)}
    code, _, _ = run("analyze", write(json.dumps({"version": 1, "rotation": rot})))
    assert code == 3


def test_syntax_error_reports_line(write):
    code, _, err = run("analyze", write('{\n  "version": 1,\n  "rotation": {\n    "a": ["b"\n  }\n}\n'))
    assert code == 2
    assert "line 5" in err


@pytest.mark.parametrize("text, needle", [
    ('{"version": 2, "rotation": {"a": []}}', "version"),
    ('{"version": 1, "rotation": {"a": [1]}}', 'rotation["a"]'),
    ('{"version": 1, "rotation": {"a": ["z"]}}', "unknown vertex"),
    ('{"version": 1, "rotation": {"a": []}, "extra": 0}', "extra"),
    ('{"version": 1}', "rotation"),
    ('[1, 2]', "object"),
])
def test_schema_errors_exit_2(write, text, needle):
    code, _, err = run("analyze", write(text))
    assert code == 2
    assert needle in err


def test_parse_error_points_at_offending_entry():
    text = '{\n  "version": 1,\n  "rotation": {\n    "a": ["b"],\n    "b": ["a", 7]\n  }\n}'
    with pytest.raises(ParseError) as exc:
        parse_document(text)
    assert exc.value.line == 5
    assert exc.value.field == 'rotation["b"]'


def test_missing_file_exits_2(tmp_path):
    code, _, err = run("analyze", str(tmp_path / "nope.json"))
    assert code == 2 and "nope.json" in err


def test_generate_cycle():
    code, out, _ = run("generate", "cycle", "5")
    assert code == 0
    assert parse_document(out).graph.face_degrees() == [5, 5]


def test_generate_wheel():
    G = parse_document(run("generate", "wheel", "5")[1]).graph
    assert G.vertex_degree(0) == 4
    assert G.face_degrees() == [3, 3, 3, 3, 4]


def test_generate_prism():
    G = parse_document(run("generate", "prism", "3")[1]).graph
    assert (G.n, len(G.edges), len(G.faces)) == (6, 9, 5)


def test_generate_needs_size_and_valid_size():
    assert run("generate", "cycle")[0] == 2
    assert run("generate", "cycle", "2")[0] == 2


def test_generate_is_seeded():
    a = run("generate", "stacked_triangulation", "12", "--seed", "4")[1]
    b = run("generate", "stacked_triangulation", "12", "--seed", "4")[1]
    c = run("generate", "stacked_triangulation", "12", "--seed", "5")[1]
    assert a == b != c


def test_choosable_c4(write):
    code, out, _ = run("choosable", write(families.cycle(4)), "2")
    rep = json.loads(out)
    assert code == 0 and rep["choosable"] is True
    assert rep["smoke_check"]["passed"] is True


def test_choosable_c3(write):
    code, out, _ = run("choosable", write(families.cycle(3)), "2")
    rep = json.loads(out)
    assert code == 0 and rep["choosable"] is False
    assert len(rep["bad_assignment"]) == 3
    assert all(len(L) == 2 for L in rep["bad_assignment"].values())


def test_choosable_with_given_lists(write):
    doc = json.loads(dump_document(families.cycle(3)))
    doc["lists"] = {"0": [1, 2], "1": [1, 3], "2": [2, 3]}
    code, out, _ = run("choosable", write(json.dumps(doc)), "2", "--samples", "0")
    given = json.loads(out)["given_lists"]
    assert given["colorable"] is True
    assert len(set(given["coloring"].values())) == 3


def test_choosable_cap_exits_4(write):
    code, _, err = run("choosable", write(families.stacked_triangulation(14, 0)), "3")
    assert code == 4 and "cap" in err


def test_choosable_budget_exits_4(write):
    code, _, _ = run("choosable", write(families.octahedron()), "3", "--budget", "5")
    assert code == 4


def test_discharge_octahedron(write):
    code, out, _ = run("discharge", write(families.octahedron()))
    rep = json.loads(out)
    assert code == 0
    assert frac(rep["summary"]["final_sum"]) == (-12, 1)
    faces = [e for e in rep["final"] if e["element"].startswith("f:")]
    assert len(faces) == 8
    total = sum(e["charge"]["num"] / e["charge"]["den"] for e in rep["final"])
    assert total == -12


def test_text_format(write):
    code, out, _ = run("discharge", write(families.octahedron()), "--format", "text")
    assert code == 0
    assert "-3/2 (~-1.5" in out
    assert "approximations of exact rationals" in out


def test_gadgets_command_on_subset(monkeypatch):
    from choosecheck import gadgets
    small = [gadgets.cycle_gadget(4), gadgets.wheel_gadget("adjacent")]
    monkeypatch.setattr(gadgets, "standard_gadgets", lambda: small)
    code, out, _ = run("gadgets")
    rep = json.loads(out)
    assert code == 0 and rep["all_claims_agree"] is True
    assert [g["name"] for g in rep["gadgets"]] == ["cycle4_two_lists", "w5_adjacent"]


def test_output_is_byte_stable(write):
    path = write(pentagon_gadget())
    assert run("analyze", path)[1] == run("analyze", path)[1]


EXAMPLES = os.path.join(os.path.dirname(__file__), "..", "docs", "examples")


@pytest.mark.parametrize("argv, expected", [
    (["generate", "octahedron"], "octahedron.graph.json"),
    (["generate", "cycle", "3"], "c3.graph.json"),
    (["analyze", "octahedron.graph.json"], "analyze.octahedron.json"),
    (["analyze", "hyp5_gadget.graph.json", "--hypothesis", "5"], "analyze.hyp5_gadget.json"),
    (["discharge", "octahedron.graph.json"], "discharge.octahedron.json"),
    (["discharge", "octahedron.graph.json", "--format", "text"], "discharge.octahedron.txt"),
    (["choosable", "c3.graph.json", "2"], "choosable.c3.json"),
    (["choosable", "c4.graph.json", "2"], "choosable.c4.json"),
])
def test_committed_examples_are_current(argv, expected):
    argv = [os.path.join(EXAMPLES, a) if a.endswith(".graph.json") else a for a in argv]
    code, out, _ = run(*argv)
    assert code == 0
    with open(os.path.join(EXAMPLES, expected), encoding="utf-8") as fh:
        assert out == fh.read()
