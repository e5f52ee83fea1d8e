"""Instance files, solve reports and the bundled fixtures.

Instance files are JSON objects with a mandatory ``schema_version`` (currently
1), an ``oracle`` descriptor tagged by ``type`` and optional ``preferences``
(worst-to-best outcome labels per player) and ``options``. The schemas ship in
``lexsafe/schemas``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Optional, Union

import jsonschema

from .backends import (ExplicitGameForm, JordanMap, MbScheme, MonotonePropertyForm,
                       PositionalStructure, VetoScheme)
from .core import OutcomeSet, Player, Preference
from .engine import LexsafeNe, certify_ne
from .errors import InvalidInstance
from .oracle import GameOracle
from .validation import check_preference

SCHEMA_VERSION = 1


def _load_schema(name: str) -> dict:
    return json.loads(resources.files("lexsafe").joinpath("schemas", name).read_text(encoding="utf-8"))


INSTANCE_SCHEMA = _load_schema("instance.schema.json")
REPORT_SCHEMA = _load_schema("report.schema.json")


def _validate(data, schema, what: str) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        raise InvalidInstance(f"{what} invalid at {where}: {err.message}")


@dataclass
class Instance:
    oracle: GameOracle
    data: dict
    preferences: Dict[Player, Preference] = field(default_factory=dict)
    dichotomy: bool = False
    limit_expansion: Optional[int] = None

    def preference(self, player: Player) -> Preference:
        if player not in self.preferences:
            raise InvalidInstance(f"instance has no preference for {player.value}")
        return self.preferences[player]


def build_oracle(spec: dict) -> GameOracle:
    """Construct the backend described by an ``oracle`` descriptor."""
    kind = spec.get("type")
    sub = INSTANCE_SCHEMA["$defs"].get(kind)
    if sub is None:
        raise InvalidInstance(f"unknown oracle type {kind!r}")
    _validate(spec, {**sub, "$defs": INSTANCE_SCHEMA["$defs"]}, f"{kind} oracle")
    if kind == "explicit":
        return ExplicitGameForm.from_labels(spec["matrix"], spec.get("labels"))
    if kind == "positional":
        return PositionalStructure([tuple(v) for v in spec["vertices"]], [tuple(a) for a in spec["arcs"]],
                                   spec["initial"], spec.get("mode", "msdggs"))
    if kind == "jordan":
        return JordanMap(spec["areas"], [tuple(a) for a in spec["adjacency"]], spec["sides"])
    if kind == "bargaining":
        return MbScheme(spec["m"], spec["n"])
    if kind == "veto":
        return VetoScheme(spec["mu_a"], spec["mu_b"], spec["resistance"], spec.get("labels"))
    labels = spec["labels"]
    index = {lab: i for i, lab in enumerate(labels)}
    unknown = {g for gen in spec["generators"] for g in gen} - set(index)
    if unknown:
        raise InvalidInstance(f"generators mention unknown outcomes {sorted(unknown)}")
    gens = [OutcomeSet.of(len(labels), [index[g] for g in gen]) for gen in spec["generators"]]
    return MonotonePropertyForm(labels, gens)


def parse_instance(data: Any) -> Instance:
    if not isinstance(data, dict):
        raise InvalidInstance("instance must be a JSON object")
    if "schema_version" not in data:
        raise InvalidInstance("instance lacks the mandatory schema_version field")
    if data["schema_version"] != SCHEMA_VERSION:
        raise InvalidInstance(f"unsupported schema_version {data['schema_version']!r}; expected {SCHEMA_VERSION}")
    _validate(data, INSTANCE_SCHEMA, "instance")
    oracle = build_oracle(data["oracle"])
    prefs = {}
    for name, order in data.get("preferences", {}).items():
        player = Player(name)
        try:
            prefs[player] = check_preference(order, oracle)
        except InvalidInstance as exc:
            raise type(exc)(f"{name} preference: {exc}") from None
    options = data.get("options", {})
    return Instance(oracle, data, prefs, options.get("dichotomy", False), options.get("limit_expansion"))


def fixture_names():
    folder = resources.files("lexsafe").joinpath("fixtures")
    return sorted(p.name[:-5] for p in folder.iterdir() if p.name.endswith(".json"))


def read_json(source: Union[str, Path]) -> Any:
    """Read JSON from a path, or from a bundled fixture given by name."""
    path = Path(source)
    try:
        if path.is_file():
            text = path.read_text(encoding="utf-8")
        elif str(source) in fixture_names():
            text = resources.files("lexsafe").joinpath("fixtures", f"{source}.json").read_text(encoding="utf-8")
        else:
            raise InvalidInstance(f"no such file or fixture: {source}")
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstance(f"{source}: not valid JSON ({exc})") from None
    except OSError as exc:
        raise InvalidInstance(f"{source}: {exc}") from None


def load_instance(source: Union[str, Path]) -> Instance:
    return parse_instance(read_json(source))


def load_fixture(name: str) -> Instance:
    if name not in fixture_names():
        raise InvalidInstance(f"unknown fixture {name!r}")
    return load_instance(name)


def dumps(data) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def labels_of(oracle: GameOracle, s: OutcomeSet):
    return [oracle.labels[i] for i in s]


def ne_to_json(oracle: GameOracle, ne: LexsafeNe, certified: bool) -> dict:
    return {
        "x_strategy": oracle.payload_to_json(Player.ALICE, ne.x_strategy.payload),
        "y_strategy": oracle.payload_to_json(Player.BOB, ne.y_strategy.payload),
        "support_own": labels_of(oracle, ne.support_own),
        "support_other": labels_of(oracle, ne.support_other),
        "ne_outcome": oracle.labels[ne.ne_outcome],
        "certified": certified,
        "queries": {"lexmax": ne.lexmax_queries, "complement": ne.complement_queries,
                    "total": ne.queries_used},
    }


def build_report(instance: Instance, equilibria: Dict[Player, LexsafeNe]) -> dict:
    oracle = instance.oracle
    pa, pb = instance.preference(Player.ALICE), instance.preference(Player.BOB)
    body = {who.value: ne_to_json(oracle, ne, certify_ne(ne, pa, pb)) for who, ne in equilibria.items()}
    return {
        "schema_version": SCHEMA_VERSION,
        "backend": oracle.backend,
        "labels": list(oracle.labels),
        "equilibria": body,
        "certified": all(entry["certified"] for entry in body.values()),
    }


def validate_report(data: Any) -> None:
    if not isinstance(data, dict) or data.get("schema_version") != SCHEMA_VERSION:
        raise InvalidInstance(f"report must carry schema_version {SCHEMA_VERSION}")
    _validate(data, REPORT_SCHEMA, "report")


def explicit_instance(form: ExplicitGameForm, preferences: Optional[dict] = None) -> dict:
    """An instance file describing ``form`` as an explicit matrix."""
    data = {
        "schema_version": SCHEMA_VERSION,
        "oracle": {"type": "explicit", "labels": list(form.labels), "matrix": form.to_labels()},
    }
    if preferences:
        data["preferences"] = preferences
    return data
