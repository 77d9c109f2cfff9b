import json
import pathlib

import pytest

import qaoadepth

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def wheel6():
    return qaoadepth.read_dimacs_graph((DATA / "w6.dimacs").read_text())


def test_w6_depth():
    g = wheel6()
    problem = qaoadepth.maxcut_problem(g["n"], g["edges"])
    result = qaoadepth.analyze(problem)
    assert result["depth"]["structural_depth"] == 7
    assert len(result["coloring"]["classes"]) == 5
    assert result["equivalence"]["equivalent"]


def test_general_needs_width():
    problem = json.loads((DATA / "general.json").read_text())
    with pytest.raises(qaoadepth.QaoaDepthError) as info:
        qaoadepth.analyze(problem)
    assert qaoadepth.exit_code(info.value) == 3
    result = qaoadepth.analyze(problem, gate_width=3)
    assert len(result["coloring"]["classes"]) == 7


def test_verify_and_dualize():
    problem = qaoadepth.knapsack_problem([3, 4, 5], [1, 2, 3], 4)
    assert qaoadepth.verify(problem)["passed"]
    pubo = qaoadepth.dualize(problem)
    assert sum(v["slack"] for v in pubo["variables"]) == 3


def test_color_triangle():
    result = qaoadepth.color([["a", "b"], ["b", "c"], ["a", "c"]])
    assert len(result["classes"]) == 3
