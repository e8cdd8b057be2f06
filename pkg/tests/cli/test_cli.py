import io
import json
from concurrent.futures import ThreadPoolExecutor

from bnchain import load_document
from bnchain.cli import run


def call(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, io.StringIO(stdin), out, err)
    return status, out.getvalue(), err.getvalue()


def test_params():
    status, out, err = call(["params", "--p", "11,1,6"])
    assert status == 0, err
    doc = json.loads(out)
    assert doc["format_version"] == 1
    assert doc["kind"] == "params_report"
    assert doc["rho"] == -1
    assert doc["dual"] == {"g": 11, "r": 5, "d": 14}
    assert doc["ranges"]["e"] == 1

    assert call(["params", "--g", "11", "--r", "1", "--d", "6"])[1] == out

    status, out, err = call(["params", "--p", "11,5,14"])
    assert json.loads(out)["normalized"] == {"g": 11, "r": 1, "d": 6}
    assert json.loads(out)["dualized"] is True


def test_usage_errors():
    status, out, err = call(["params"])
    assert status == 2
    assert out == ""
    assert "params" in err

    status, out, err = call(["params", "--p", "11,1"])
    assert status == 2
    assert "g,r,d" in err

    status, out, err = call(["draw"])
    assert status == 2

    status, out, err = call(["params", "--p", "1,1,1"])
    assert status == 2


def test_fill_construct():
    argv = ["fill-construct", "--mode", "separation", "--alpha", "5", "--beta", "6"]
    status, out, err = call(argv + ["--e", "7"])
    assert status == 0, err
    f = load_document(out)
    assert (f.alpha, f.beta, f.g) == (5, 6, 23)
    # deterministic
    assert call(argv + ["--e", "7"])[1] == out

    status, out, err = call(argv + ["--e", "15"])
    assert status == 1
    doc = json.loads(out)
    assert doc["kind"] == "error"
    assert doc["error"] == "OutOfRangeError"
    assert "(alpha+2)(alpha-1)/2" in err

    status, out, err = call(argv)
    assert status == 2

    argv = ["fill-construct", "--mode", "staircase", "--alpha", "4", "--beta", "8"]
    status, out, err = call(argv + ["--g", "21"])
    assert status == 0, err
    assert load_document(out).distinct_indices() == list(range(1, 22))


def test_fill_validate(golden):
    status, out, err = call(["fill-validate"], golden("torsion_bundle.json"))
    assert status == 0, err
    assert json.loads(out)["valid"] is True

    status, out, err = call(["fill-validate"], golden("separation_5x6_e7.json"))
    assert status == 0, err
    status, out, err = call(
        ["fill-validate", "--chain", ""], golden("separation_5x6_e7.json")
    )
    assert status == 1
    doc = json.loads(out)
    assert doc["valid"] is False
    assert {v["kind"] for v in doc["violations"]} == {"generic-repeat"}

    # a weighted filling, reduced and printed as a grid
    argv = ["fill-validate", "--chain", "5:3,6:3", "--reduce", "--render", "ascii"]
    status, out, err = call(argv, golden("weighted_strip.json"))
    assert status == 0, err
    assert out == golden("torsion_bundle.txt")

    status, out, err = call(
        ["fill-validate", "--chain", "5:3"], golden("weighted_strip.json")
    )
    assert status == 1

    status, out, err = call(["fill-validate"], "{")
    assert status == 2
    assert "Invalid JSON" in err


def test_fill_enumerate():
    argv = ["fill-enumerate", "--alpha", "2", "--beta", "2", "--g", "3"]
    status, out, err = call(argv + ["--chain", "2:2"])
    assert status == 0, err
    doc = json.loads(out)
    assert doc["count"] == 1
    cells = doc["fillings"][0]["cells"]
    assert [cell["index"] for cell in cells] == [1, 2, 2, 3]

    argv = ["fill-enumerate", "--alpha", "6", "--beta", "6", "--g", "36"]
    status, out, err = call(argv)
    assert status == 1
    assert json.loads(out)["error"] == "BudgetExceededError"


def test_fill_transpose(golden):
    status, out, err = call(["fill-transpose"], golden("torsion_bundle.json"))
    assert status == 0, err
    bundle = load_document(out)
    assert bundle.params.triple == (10, 3, 11)
    assert bundle.filling.rows() == ((3, 4, 5, 6), (5, 8, 9, 10))


def test_series_round_trip(golden):
    status, series, err = call(["series-from-filling"], golden("torsion_bundle.json"))
    assert status == 0, err
    doc = json.loads(series)
    assert doc["kind"] == "limit_series"
    assert doc["u"][0] == [0, 1]

    status, out, err = call(["series-to-filling"], series)
    assert status == 0, err
    assert load_document(out) == load_document(golden("torsion_bundle.json")).filling

    status, out, err = call(
        ["series-from-filling", "--dual"], golden("torsion_bundle.json")
    )
    assert status == 0, err
    assert json.loads(out)["params"] == {"g": 10, "r": 3, "d": 11}

    # a plain filling needs the parameters on the command line
    status, out, err = call(["series-from-filling"], golden("separation_5x6_e7.json"))
    assert status == 2
    status, out, err = call(
        ["series-from-filling", "--p", "23,4,21"], golden("separation_5x6_e7.json")
    )
    assert status == 0, err


def test_certify():
    status, out, err = call(["certify-petri", "--p", "21,3,16"])
    assert status == 0, err
    doc = json.loads(out)
    assert doc["kind"] == "component_witness"
    assert len(doc["certificate"]["products"]) == 21

    status, out, err = call(["certify-maxrank", "--r", "2"])
    assert status == 0, err
    doc = json.loads(out)
    assert doc["kind"] == "maxrank_certificate"
    assert doc["scope"] == "exact_square"
    assert len(doc["steps"]) == 6

    status, out, err = call(["certify-maxrank", "--p", "14,3,12"])
    assert status == 0, err
    doc = json.loads(out)
    assert (doc["r"], doc["scope"]) == (3, "embedded_square")

    status, out, err = call(["certify-maxrank"])
    assert status == 2


def test_parameter_flags(golden):
    by_triple = call(["certify-petri", "--p", "21,3,16"])
    by_flags = call(["certify-petri", "--g", "21", "--r", "3", "--d", "16"])
    assert by_flags[0] == 0, by_flags[2]
    assert by_flags[1] == by_triple[1]

    argv = ["series-from-filling", "--g", "23", "--r", "4", "--d", "21"]
    status, out, err = call(argv, golden("separation_5x6_e7.json"))
    assert status == 0, err
    assert json.loads(out)["params"] == {"g": 23, "r": 4, "d": 21}

    status, out, err = call(["certify-maxrank", "--g", "14", "--r", "3", "--d", "12"])
    assert status == 0, err
    assert json.loads(out)["scope"] == "embedded_square"
    # --r on its own is the square case
    status, out, err = call(["certify-maxrank", "--r", "3"])
    assert json.loads(out)["scope"] == "exact_square"
    # an incomplete set of flags is not parameters
    status, out, err = call(["certify-petri", "--g", "21", "--r", "3"])
    assert status == 2


def test_loci():
    status, out, err = call(["loci-distinct", "--p1", "11,1,6", "--p2", "11,2,9"])
    assert status == 0, err
    doc = json.loads(out)
    assert doc["verdict"] == "distinct"
    assert (doc["A1"], doc["bound2"]) == (6, 5)

    status, out, err = call(["loci-inclusions", "--alpha-max", "4"])
    assert status == 0, err
    doc = json.loads(out)
    assert len(doc["candidates"]) == 5
    assert doc["candidates"][0]["status"] == "known_inclusion"

    status, out, err = call(
        ["loci-inclusions", "--alpha-max", "4", "--render", "ascii"]
    )
    assert status == 0, err
    assert "status: known_inclusion" in out


def test_outfile(tmp_path):
    path = tmp_path / "square.json"
    status, out, err = call(["certify-maxrank", "--r", "1", "--out", str(path)])
    assert status == 0, err
    assert out == ""
    assert json.loads(path.read_text())["g"] == 3

    status, out, err = call(["fill-validate", "--in", str(tmp_path / "missing.json")])
    assert status == 2


def test_verbose_logging():
    status, out, err = call(["certify-maxrank", "--r", "1", "-v"])
    assert status == 0
    assert "Max rank certificate" in err


def test_concurrent_runs_keep_their_streams():
    argv = [
        ["draw"],
        ["params", "--p", "11,1"],
        ["params", "--p", "11,1,6"],
        ["certify-maxrank", "--r", "2"],
    ] * 4
    expected = [call(args) for args in argv]
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(call, argv))
    assert results == expected
    assert all(err for status, out, err in expected[:2])


if __name__ == "__main__":
    test_params()
    test_usage_errors()
    test_fill_construct()
    test_fill_enumerate()
    test_certify()
    test_loci()
    test_concurrent_runs_keep_their_streams()
