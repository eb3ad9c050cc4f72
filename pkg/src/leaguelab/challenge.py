"""Coach-command protocol for server-parameter overrides.

Wire grammar for the override command:

    Cmd  := '(' 'change_player_param' Pair+ ')'
    Pair := '(' name number ')'

with arbitrary whitespace between tokens.  Parameter names match
`[a-z][a-z0-9_]*`; numbers are decimals with optional sign, fraction and
exponent.  `emit_change_command` produces the canonical single-space form,
and parse(emit(x)) == x for every valid override list.

The built-in registry holds the eight agreed weather/pitch parameters; a
registry file ({"params": [{"name", "min"?, "max"?}, ...]}) can extend or
override it, since the full changeable set is agreed per season.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateParamError, EmptyCommandError, InvalidValueError, ParseError

COMMAND_NAME = "change_player_param"

MODE_PARAM = "server::global_challenge_mode"

# Parameters suited to simulating weather / pitch conditions.
WEATHER_PARAMS = (
    "ball_accel_max",
    "ball_decay",
    "ball_rand",
    "ball_speed_max",
    "catch_probability",
    "inertia_moment",
    "kick_rand",
    "player_rand",
)

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_NUMBER_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")


@dataclass(frozen=True)
class ParamOverride:
    """One server-parameter assignment."""

    name: str
    value: float

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise InvalidValueError(f"invalid parameter name {self.name!r}")
        if not math.isfinite(self.value):
            raise InvalidValueError(f"parameter value must be finite, got {self.value!r}")


@dataclass(frozen=True)
class ParamSpec:
    """A known parameter, optionally range-bounded."""

    name: str
    min: float | None = None
    max: float | None = None


class ParamRegistry:
    """Known parameter names with optional numeric ranges."""

    def __init__(self, specs: Iterable[ParamSpec]):
        self._specs: dict[str, ParamSpec] = {}
        for spec in specs:
            if spec.name in self._specs:
                raise DuplicateParamError(f"registry lists {spec.name!r} twice")
            self._specs[spec.name] = spec

    @classmethod
    def default(cls) -> "ParamRegistry":
        return cls(ParamSpec(name) for name in WEATHER_PARAMS)

    @classmethod
    def from_json(cls, text: str, include_defaults: bool = True) -> "ParamRegistry":
        """Load {"params": [{"name", "min"?, "max"?}]}, merged over defaults."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"registry is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict) or not isinstance(doc.get("params"), list):
            raise ParseError('registry must be an object with a "params" list')
        specs: dict[str, ParamSpec] = {}
        if include_defaults:
            specs = {name: ParamSpec(name) for name in WEATHER_PARAMS}
        for i, entry in enumerate(doc["params"]):
            if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
                raise ParseError(f'$.params[{i}] must be an object with a "name"')
            name = entry["name"]
            if not _NAME_RE.match(name):
                raise ParseError(f"$.params[{i}].name {name!r} is not a valid parameter name")
            bounds = {}
            for field in ("min", "max"):
                if field in entry:
                    value = entry[field]
                    if isinstance(value, bool) or not isinstance(value, (int, float)):
                        raise ParseError(f"$.params[{i}].{field} must be a number")
                    bounds[field] = float(value)
            specs[name] = ParamSpec(name=name, **bounds)
        return cls(specs.values())

    def __contains__(self, name: str) -> bool:
        return name in self._specs

    def __len__(self) -> int:
        return len(self._specs)

    def get(self, name: str) -> ParamSpec | None:
        return self._specs.get(name)

    def names(self) -> list[str]:
        return sorted(self._specs)


class _Tokenizer:
    """Splits command text into '(' / ')' / atom tokens with positions."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def next(self) -> tuple[str, str, int]:
        """Returns (kind, token, 1-based position); kind 'eof' at the end."""
        text = self.text
        while self.pos < len(text) and text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(text):
            return ("eof", "", self.pos + 1)
        start = self.pos
        c = text[start]
        if c == "(":
            self.pos += 1
            return ("open", "(", start + 1)
        if c == ")":
            self.pos += 1
            return ("close", ")", start + 1)
        while self.pos < len(text) and not text[self.pos].isspace() and text[self.pos] not in "()":
            self.pos += 1
        return ("atom", text[start : self.pos], start + 1)


def _expect(tok: _Tokenizer, kind: str, what: str) -> tuple[str, int]:
    got_kind, token, pos = tok.next()
    if got_kind != kind:
        shown = token if token else "end of input"
        raise ParseError(f"expected {what}, got {shown!r}", position=pos)
    return token, pos


def parse_change_command(text: str) -> list[ParamOverride]:
    """Parse a change command into overrides, preserving order."""
    tok = _Tokenizer(text)
    _expect(tok, "open", "'('")
    command, pos = _expect(tok, "atom", f"'{COMMAND_NAME}'")
    if command != COMMAND_NAME:
        raise ParseError(f"unknown command {command!r}", position=pos)
    overrides: list[ParamOverride] = []
    seen: set[str] = set()
    while True:
        kind, token, pos = tok.next()
        if kind == "close":
            break
        if kind != "open":
            shown = token if token else "end of input"
            raise ParseError(f"expected '(' or ')', got {shown!r}", position=pos)
        name, pos = _expect(tok, "atom", "parameter name")
        if not _NAME_RE.match(name):
            raise ParseError(f"invalid parameter name {name!r}", position=pos)
        value_text, pos = _expect(tok, "atom", "numeric value")
        if not _NUMBER_RE.match(value_text):
            raise ParseError(f"invalid number {value_text!r}", position=pos)
        _expect(tok, "close", "')'")
        if name in seen:
            raise DuplicateParamError(f"parameter {name!r} assigned twice")
        seen.add(name)
        overrides.append(ParamOverride(name=name, value=float(value_text)))
    kind, token, pos = tok.next()
    if kind != "eof":
        raise ParseError(f"unexpected trailing input {token!r}", position=pos)
    if not overrides:
        raise EmptyCommandError("command carries no parameter assignments")
    return overrides


def _check_overrides(overrides: Sequence[ParamOverride]):
    if not overrides:
        raise EmptyCommandError("override list is empty")
    seen: set[str] = set()
    for o in overrides:
        if o.name in seen:
            raise DuplicateParamError(f"parameter {o.name!r} assigned twice")
        seen.add(o.name)


def format_value(value: float) -> str:
    """Shortest decimal that round-trips to the same float."""
    return repr(float(value))


def emit_change_command(overrides: Sequence[ParamOverride]) -> str:
    """Canonical wire form: single spaces, order preserved."""
    _check_overrides(overrides)
    body = " ".join(f"({o.name} {format_value(o.value)})" for o in overrides)
    return f"({COMMAND_NAME} {body})"


@dataclass(frozen=True)
class Finding:
    """One validation finding; severity is 'error' or 'warning'."""

    name: str
    severity: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def ok(self) -> bool:
        return not self.findings

    @property
    def errors(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "error"]

    @property
    def warnings(self) -> list[Finding]:
        return [f for f in self.findings if f.severity == "warning"]


def validate(
    overrides: Sequence[ParamOverride], registry: ParamRegistry, strict: bool = False
) -> ValidationReport:
    """Check overrides against a registry; findings are data, not errors."""
    findings: list[Finding] = []
    for o in overrides:
        spec = registry.get(o.name)
        if spec is None:
            severity = "error" if strict else "warning"
            findings.append(Finding(o.name, severity, f"unknown parameter {o.name!r}"))
            continue
        if spec.min is not None and o.value < spec.min:
            findings.append(
                Finding(o.name, "warning", f"{o.name} = {format_value(o.value)} below minimum {spec.min}")
            )
        if spec.max is not None and o.value > spec.max:
            findings.append(
                Finding(o.name, "warning", f"{o.name} = {format_value(o.value)} above maximum {spec.max}")
            )
    return ValidationReport(findings=tuple(findings))


def emit_server_conf(mode: bool, overrides: Sequence[ParamOverride] = ()) -> str:
    """server.conf snippet: the mode flag, then one line per override."""
    if overrides:
        _check_overrides(overrides)
    lines = [f"{MODE_PARAM} = {'true' if mode else 'false'}"]
    lines.extend(f"server::{o.name} = {format_value(o.value)}" for o in overrides)
    return "\n".join(lines) + "\n"
