"""Reading the versioned JSON documents back into objects.

Every top-level document has a ``format_version`` field. The ``kind``
field is optional: without it the document is recognised by its fields
(``cells`` for fillings, ``cells`` with a ``weight`` per entry for
weighted fillings, ``special`` for chains, ``u``/``v`` for limit series
and ``filling`` plus ``chain`` for filling bundles).
"""

import json
from dataclasses import dataclass

from ..core import BnParams
from ..errors import MalformedInputError
from ..series import LimitSeriesTable, LineBundleDescriptor
from ..tableau import ChainSpec, Filling, WeightedFilling
from ..utils import check_int


FORMAT_VERSION = 1


@dataclass(frozen=True)
class FillingBundle:
    """A filling together with the chain it is meant for, and optionally
    the parameters of the series it describes.
    """

    filling: Filling
    chain: ChainSpec
    params: BnParams = None


def _params(doc):
    return BnParams(doc["g"], doc["r"], doc["d"])


def _decode_filling(doc):
    alpha = check_int(doc["alpha"], "alpha", 1)
    beta = check_int(doc["beta"], "beta", 1)
    rows = [[None] * alpha for _ in range(beta)]
    for cell in doc["cells"]:
        row, col = check_int(cell["row"], "row"), check_int(cell["col"], "col")
        if not (1 <= row <= beta and 1 <= col <= alpha):
            raise MalformedInputError(
                f"Box ({row}, {col}) is outside the {alpha}x{beta} rectangle."
            )
        if rows[row - 1][col - 1] is not None:
            raise MalformedInputError(f"Box ({row}, {col}) is listed twice.")
        rows[row - 1][col - 1] = check_int(cell["index"], "index")
    missing = [
        (r + 1, c + 1)
        for r in range(beta)
        for c in range(alpha)
        if rows[r][c] is None
    ]
    if missing:
        raise MalformedInputError(f"The cells do not cover the boxes {missing}.")
    return Filling(rows, doc["g"])


def _decode_weighted_filling(doc):
    entries = {}
    for cell in doc["cells"]:
        key = (check_int(cell["row"], "row"), check_int(cell["col"], "col"))
        entries.setdefault(key, []).append((cell["index"], cell["weight"]))
    return WeightedFilling(doc["alpha"], doc["beta"], doc["g"], entries)


def _decode_chain(doc):
    special = {}
    for item in doc["special"]:
        component = check_int(item["component"], "component")
        if component in special:
            raise MalformedInputError(f"Component {component} is listed twice.")
        special[component] = check_int(item["order"], "order")
    return ChainSpec(doc["g"], special)


def _decode_bundle(doc, degree):
    if doc["kind"] == "special":
        bundle = LineBundleDescriptor.special(doc["a"], doc["b"])
        if bundle.degree != degree:
            raise MalformedInputError(f"Bundle {bundle} does not have degree {degree}.")
        return bundle
    elif doc["kind"] == "generic":
        return LineBundleDescriptor.generic(degree)
    raise MalformedInputError(f"Unknown bundle kind {doc['kind']!r}.")


def _decode_series(doc):
    p = _params(doc["params"])
    chain = decode(doc["chain"], "chain")
    bundles = [_decode_bundle(item, p.d) for item in doc["bundles"]]
    return LimitSeriesTable(p, chain, doc["u"], doc["v"], bundles)


def _decode_bundle_doc(doc):
    f = decode(doc["filling"], "filling")
    chain = decode(doc["chain"], "chain")
    params = _params(doc["params"]) if doc.get("params") else None
    return FillingBundle(f, chain, params)


DECODERS = {
    "filling": _decode_filling,
    "weighted_filling": _decode_weighted_filling,
    "chain": _decode_chain,
    "limit_series": _decode_series,
    "filling_bundle": _decode_bundle_doc,
}


def _infer_kind(doc):
    cells = doc.get("cells")
    if isinstance(cells, list):
        if any(isinstance(cell, dict) and "weight" in cell for cell in cells):
            return "weighted_filling"
        return "filling"
    if "special" in doc:
        return "chain"
    if "u" in doc and "v" in doc:
        return "limit_series"
    if "filling" in doc and "chain" in doc:
        return "filling_bundle"
    return None


def decode(doc, expected=None):
    """Turn a (nested) document dict into an object.

    Parameters:
        doc (dict): The document.
        expected (str, optional): The kind the document must have.
    """
    if not isinstance(doc, dict):
        raise MalformedInputError(f"Expected a JSON object, got {type(doc).__name__}.")
    kind = doc.get("kind")
    if kind is None:
        kind = expected or _infer_kind(doc)
    if expected is not None and kind != expected:
        raise MalformedInputError(f"Expected a {expected} document, got {kind!r}.")
    if kind not in DECODERS:
        raise MalformedInputError(
            f"Cannot read documents of kind {kind!r}; "
            f"expected one of {sorted(DECODERS)}."
        )
    try:
        return DECODERS[kind](doc)
    except MalformedInputError:
        raise
    except KeyError as err:
        raise MalformedInputError(f"The {kind} document misses the field {err}.")
    except (TypeError, ValueError) as err:
        raise MalformedInputError(f"Invalid {kind} document: {err}")


def load_document(text, expected=None):
    """Parse a versioned JSON document into an object.

    Parameters:
        text (str): The JSON text.
        expected (str, optional): The kind the document must have.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise MalformedInputError(f"Invalid JSON: {err}")
    if not isinstance(doc, dict):
        raise MalformedInputError(f"Expected a JSON object, got {type(doc).__name__}.")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise MalformedInputError(
            f"Unsupported format_version {version!r}, expected {FORMAT_VERSION}."
        )
    return decode(doc, expected)
