import json

from pytest import raises

from bnchain import (
    BnParams,
    ChainSpec,
    Filling,
    FillingBundle,
    WeightedFilling,
    decode,
    load_document,
)
from bnchain.errors import MalformedInputError


def test_load_goldens(document):
    bundle = document("torsion_bundle")
    assert isinstance(bundle, FillingBundle)
    assert bundle.chain == ChainSpec(10, {5: 3})
    assert bundle.params == BnParams(10, 1, 7)
    assert bundle.filling.rows() == ((3, 5), (4, 8), (5, 9), (6, 10))

    names = ["separation_5x6_e7", "separation_5x6_e12", "separation_5x5_e11"]
    for name in names + ["corner_r4"]:
        f = document(name)
        assert isinstance(f, Filling)
        assert f.alpha == 5

    w = document("weighted_strip")
    assert isinstance(w, WeightedFilling)
    assert w.entries[(2, 2)] == ((6, 1), (7, -1), (8, 1))


def test_decode_nested():
    chain = decode({"kind": "chain", "g": 4, "special": [{"component": 2, "order": 2}]})
    assert chain == ChainSpec(4, {2: 2})
    with raises(MalformedInputError):
        decode({"kind": "chain", "g": 4, "special": []}, "filling")
    with raises(MalformedInputError):
        decode([1, 2])
    # pairs are not component records
    with raises(MalformedInputError):
        decode({"kind": "chain", "g": 4, "special": [[2, 2]]})


def test_documents_without_kind():
    def load(**fields):
        return load_document(json.dumps(dict({"format_version": 1}, **fields)))

    chain = load(g=10, special=[{"component": 5, "order": 3}])
    assert chain == ChainSpec(10, {5: 3})

    cells = [
        {"row": 1, "col": 1, "index": 1},
        {"row": 1, "col": 2, "index": 2},
        {"row": 2, "col": 1, "index": 2},
        {"row": 2, "col": 2, "index": 3},
    ]
    f = load(alpha=2, beta=2, g=3, cells=cells)
    assert f == Filling([[1, 2], [2, 3]], 3)
    # the order of the cells does not matter
    assert load(alpha=2, beta=2, g=3, cells=cells[::-1]) == f

    cells = [
        {"row": 1, "col": 1, "index": 1, "weight": 1},
        {"row": 1, "col": 1, "index": 2, "weight": -1},
        {"row": 1, "col": 1, "index": 3, "weight": 1},
    ]
    w = load(alpha=2, beta=1, g=3, cells=cells)
    assert isinstance(w, WeightedFilling)
    assert w.entries == {(1, 1): ((1, 1), (2, -1), (3, 1))}

    # a known field set is needed to tell the kind
    with raises(MalformedInputError) as err:
        load(g=3)
    assert "None" in str(err.value)


def test_load_document_fails():
    def doc(**fields):
        return json.dumps(dict({"format_version": 1}, **fields))

    one = [{"row": 1, "col": 1, "index": 1}]
    good = doc(kind="filling", alpha=1, beta=1, g=1, cells=one)
    assert load_document(good) == Filling([[1]], 1)
    assert load_document(good, "filling") == Filling([[1]], 1)

    with raises(MalformedInputError):
        load_document("{")
    with raises(MalformedInputError):
        load_document("[]")
    with raises(MalformedInputError) as err:
        load_document(json.dumps({"format_version": 2, "kind": "filling"}))
    assert "format_version" in str(err.value)
    with raises(MalformedInputError):
        load_document(json.dumps({"kind": "filling", "g": 1, "cells": one}))
    with raises(MalformedInputError) as err:
        load_document(doc(kind="picture"))
    assert "picture" in str(err.value)
    with raises(MalformedInputError) as err:
        load_document(doc(kind="filling", alpha=1, beta=1, g=1))
    assert "cells" in str(err.value)
    # a box is missing
    with raises(MalformedInputError) as err:
        load_document(doc(kind="filling", alpha=2, beta=1, g=1, cells=one))
    assert "(1, 2)" in str(err.value)
    # a box is outside the rectangle, or listed twice
    outside = [{"row": 2, "col": 1, "index": 1}]
    with raises(MalformedInputError):
        load_document(doc(kind="filling", alpha=1, beta=1, g=1, cells=outside))
    with raises(MalformedInputError):
        load_document(doc(kind="filling", alpha=1, beta=1, g=1, cells=one + one))
    with raises(MalformedInputError):
        load_document(doc(kind="filling", alpha=1, beta=1, g=1, cells=[1]))
    # indices are ints
    half = [{"row": 1, "col": 1, "index": 1.5}]
    with raises(MalformedInputError):
        load_document(doc(kind="filling", alpha=1, beta=1, g=1, cells=half))
    with raises(MalformedInputError):
        load_document(good, "limit_series")
    bad_chain = [{"component": 5, "order": 2}]
    with raises(MalformedInputError):
        load_document(doc(kind="chain", g=4, special=bad_chain))
    twice = [{"component": 2, "order": 2}, {"component": 2, "order": 3}]
    with raises(MalformedInputError):
        load_document(doc(kind="chain", g=4, special=twice))
    entry = {"row": 1, "col": 1, "index": 1, "weight": 2}
    with raises(MalformedInputError):
        load_document(doc(kind="weighted_filling", alpha=1, beta=1, g=1, cells=[entry]))
    entry = {"row": 1, "col": 1, "index": 1.5, "weight": 1}
    with raises(MalformedInputError):
        load_document(doc(kind="weighted_filling", alpha=1, beta=1, g=2, cells=[entry]))


def test_load_series_bundles():
    series = {
        "kind": "limit_series",
        "params": {"g": 3, "r": 1, "d": 2},
        "chain": {"g": 3, "special": [{"component": 2, "order": 2}]},
        "u": [[0, 1], [0, 2], [0, 2]],
        "v": [[2, 0], [2, 0], [1, 0]],
        "bundles": [
            {"kind": "special", "a": 0, "b": 2},
            {"kind": "special", "a": 0, "b": 2},
            {"kind": "special", "a": 2, "b": 0},
        ],
    }
    table = decode(series)
    assert table.bundle(3).a == 2

    series["bundles"][0] = {"kind": "special", "a": 0, "b": 3}
    with raises(MalformedInputError):
        decode(series)
    series["bundles"][0] = {"kind": "other"}
    with raises(MalformedInputError):
        decode(series)


if __name__ == "__main__":
    test_decode_nested()
    test_documents_without_kind()
    test_load_document_fails()
    test_load_series_bundles()
