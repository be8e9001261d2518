"""Dataset files: a small JSON schema for universes, IFSs, and weights.

Layout::

    {
      "universe": ["x1", "x2"],
      "sets": {"A": [[0.30, 0.20], [0.40, 0.30]], "B": [[0.15, 0.25], [0.25, 0.35]]},
      "weights": [0.5, 0.5]          // optional
    }

Every set must have one [mu, nu] pair per universe element and every pair
must validate as an IFV; weights, when present, must validate as a weight
vector of matching length.  Parsing errors carry the JSON line/column;
validation errors name the offending set, pair, or rule.  Serialization uses
repr-exact floats, so load -> save -> load round-trips to identical objects.

A few named datasets used by the repro scenarios are built in:
tableI_case1 .. tableI_case5 (pairwise comparison cases, with 0.5/0.5
weights) and tableIII (the three-pattern classification problem with its
test sample, with uniform 1/3 weights).
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import IFS, IFV, IfsimError, WeightVector


class DatasetParseError(IfsimError, ValueError):
    """The file is not syntactically valid (bad JSON or wrong field types)."""


class DatasetValidationError(IfsimError, ValueError):
    """The file parsed but violates a dataset rule; names the offender."""


def _parse_pairs(name: str, raw_pairs, n: int) -> tuple[IFV, ...]:
    if not isinstance(raw_pairs, list):
        raise DatasetParseError(f"set {name!r}: expected a list of [mu, nu] pairs")
    if len(raw_pairs) != n:
        raise DatasetValidationError(
            f"set {name!r}: {len(raw_pairs)} pairs for a universe of {n} elements"
        )
    values = []
    for i, pair in enumerate(raw_pairs):
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)):
            raise DatasetParseError(f"set {name!r}, pair {i + 1}: expected [mu, nu] numbers")
        try:
            values.append(IFV(pair[0], pair[1]))
        except IfsimError as exc:
            raise DatasetValidationError(f"set {name!r}, pair {i + 1} {pair!r}: {exc}") from exc
    return tuple(values)


def parse_dataset(text: str) -> tuple[dict[str, IFS], WeightVector | None]:
    """Parse dataset JSON text into validated objects, order preserved."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise DatasetParseError("top level must be an object")
    universe = doc.get("universe")
    if not (isinstance(universe, list) and universe and all(isinstance(x, str) for x in universe)):
        raise DatasetParseError("field 'universe': expected a non-empty list of strings")
    if len(set(universe)) != len(universe):
        raise DatasetValidationError("universe labels must be unique")
    sets = doc.get("sets")
    if not (isinstance(sets, dict) and sets):
        raise DatasetParseError("field 'sets': expected a non-empty object of named sets")
    unknown = set(doc) - {"universe", "sets", "weights"}
    if unknown:
        raise DatasetParseError(f"unknown field(s): {', '.join(sorted(unknown))}")
    universe_t = tuple(universe)
    out: dict[str, IFS] = {}
    for name, raw_pairs in sets.items():
        values = _parse_pairs(name, raw_pairs, len(universe_t))
        try:
            out[name] = IFS(universe_t, values)
        except IfsimError as exc:
            raise DatasetValidationError(f"set {name!r}: {exc}") from exc
    weights = None
    if "weights" in doc and doc["weights"] is not None:
        raw_w = doc["weights"]
        if not (isinstance(raw_w, list)
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in raw_w)):
            raise DatasetParseError("field 'weights': expected a list of numbers")
        if len(raw_w) != len(universe_t):
            raise DatasetValidationError(
                f"weights: {len(raw_w)} entries for a universe of {len(universe_t)} elements"
            )
        try:
            weights = WeightVector(tuple(raw_w))
        except IfsimError as exc:
            raise DatasetValidationError(f"weights {raw_w!r}: {exc}") from exc
    return out, weights


def load_dataset(path: str | Path) -> tuple[dict[str, IFS], WeightVector | None]:
    """Load and validate a dataset file."""
    return parse_dataset(Path(path).read_text(encoding="utf-8"))


def dumps_dataset(sets: dict[str, IFS], weights: WeightVector | None = None) -> str:
    """Serialize to the dataset JSON format (repr-exact floats, round-trips)."""
    if not sets:
        raise DatasetValidationError("cannot serialize an empty dataset")
    universes = {ifs.universe for ifs in sets.values()}
    if len(universes) != 1:
        raise DatasetValidationError("all sets must share one universe")
    universe = next(iter(universes))
    doc: dict = {
        "universe": list(universe),
        "sets": {name: [[v.mu, v.nu] for v in ifs.values] for name, ifs in sets.items()},
    }
    if weights is not None:
        doc["weights"] = list(weights.weights)
    return json.dumps(doc, indent=2) + "\n"


def save_dataset(path: str | Path, sets: dict[str, IFS], weights: WeightVector | None = None) -> None:
    Path(path).write_text(dumps_dataset(sets, weights), encoding="utf-8")


# ---------------------------------------------------------------------------
# built-in datasets used by the repro scenarios
# ---------------------------------------------------------------------------

_TABLE_I = {
    1: ([(0.30, 0.20), (0.40, 0.30)], [(0.15, 0.25), (0.25, 0.35)]),
    2: ([(0.30, 0.20), (0.40, 0.30)], [(0.16, 0.26), (0.26, 0.36)]),
    3: ([(0.50, 0.40), (0.40, 0.30)], [(0.15, 0.25), (0.25, 0.35)]),
    4: ([(0.50, 0.40), (0.40, 0.30)], [(0.16, 0.26), (0.26, 0.36)]),
    5: ([(0.30, 0.20), (0.40, 0.30)], [(0.45, 0.15), (0.55, 0.25)]),
}

_TABLE_III = {
    "P1": [(0.15, 0.25), (0.25, 0.35), (0.35, 0.45)],
    "P2": [(0.05, 0.15), (0.15, 0.25), (0.25, 0.35)],
    "P3": [(0.16, 0.26), (0.26, 0.36), (0.36, 0.46)],
    "S1": [(0.30, 0.20), (0.40, 0.30), (0.50, 0.40)],
}

BUILTIN_DATASET_NAMES = tuple(f"tableI_case{i}" for i in _TABLE_I) + ("tableIII",)


def builtin_dataset(name: str) -> tuple[dict[str, IFS], WeightVector | None]:
    """Return one of the built-in datasets by name."""
    if name.startswith("tableI_case"):
        try:
            a_pairs, b_pairs = _TABLE_I[int(name.removeprefix("tableI_case"))]
        except (KeyError, ValueError):
            raise DatasetValidationError(f"unknown built-in dataset {name!r}") from None
        universe = ("x1", "x2")
        return (
            {"A": IFS.from_pairs(a_pairs, universe), "B": IFS.from_pairs(b_pairs, universe)},
            WeightVector((0.5, 0.5)),
        )
    if name == "tableIII":
        universe = ("x1", "x2", "x3")
        sets = {k: IFS.from_pairs(v, universe) for k, v in _TABLE_III.items()}
        return sets, WeightVector((1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0))
    raise DatasetValidationError(f"unknown built-in dataset {name!r}")


def resolve_dataset(spec: str | Path) -> tuple[dict[str, IFS], WeightVector | None]:
    """Resolve a --data argument: an existing file path wins, then a
    built-in dataset name."""
    p = Path(spec)
    if p.exists():
        return load_dataset(p)
    if str(spec) in BUILTIN_DATASET_NAMES:
        return builtin_dataset(str(spec))
    raise DatasetParseError(
        f"{spec!r} is neither an existing file nor a built-in dataset "
        f"(built-ins: {', '.join(BUILTIN_DATASET_NAMES)})"
    )
