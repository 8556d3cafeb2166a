"""
Problem files: JSON documents describing a shell configuration, an optional infinite
family continuing it, the channel or space dimension and the analysis options.

.. code-block:: json

    {
        "shells": {"radii": [1, 1.5], "strengths": [-2, 2]},
        "family": {"kind": "harmonic", "amplitude": 1},
        "channel": {"l": 0},
        "options": {"tolerance": 1e-12, "oracle": true}
    }
"""

from __future__ import annotations

import json
from typing import Any, List, NamedTuple, Optional, Tuple

import numpy

from deltashell import log
from .channel import DEFAULT_LMAX, ChannelSpec
from .errors import DomainError, ProblemFileError, ShellConfigError
from .shell_config import ShellConfig, normalize_config
from .tail_model import (
    SAMPLED_ASSERTIONS,
    FiniteTail,
    HarmonicTail,
    PeriodicTail,
    SampledTail,
    TailModel,
)

SWEEP_PARAMETERS = ("strength", "radius")


class SweepAxis(NamedTuple):
    """One swept parameter: the strength or radius of the shell with a zero based index."""

    parameter: str
    index: int
    values: Tuple[float, ...]

    @property
    def label(self) -> str:
        return f"{self.parameter}:{self.index}"


class ProblemOptions(NamedTuple):
    tolerance: Optional[float] = None
    oracle: bool = False
    strict: bool = False
    weights: Optional[Tuple[float, ...]] = None
    omega_plus: Tuple[int, ...] = ()
    epsilon: Optional[float] = None
    length: Optional[float] = None
    mesh: Optional[float] = None
    lmax: int = DEFAULT_LMAX
    sweep: Tuple[SweepAxis, ...] = ()

    def to_dict(self) -> dict:
        data = self._asdict()
        data["weights"] = None if self.weights is None else list(self.weights)
        data["omega_plus"] = list(self.omega_plus)
        data["sweep"] = [
            {"parameter": axis.label, "values": list(axis.values)} for axis in self.sweep
        ]
        return data


class ProblemFile:
    """A parsed problem. Only ``config`` is always present."""

    def __init__(
        self,
        config: ShellConfig,
        tail: Optional[TailModel] = None,
        channel: Optional[ChannelSpec] = None,
        space: Optional[int] = None,
        options: Optional[ProblemOptions] = None,
        source: Optional[str] = None,
    ):
        self.config = config
        self.tail = FiniteTail() if tail is None else tail
        self.channel = channel
        self.space = space
        self.options = ProblemOptions() if options is None else options
        self.source = source

    def require_channel(self) -> ChannelSpec:
        if self.channel is None:
            raise ProblemFileError("This analysis needs a channel", "channel")
        return self.channel

    def require_space(self) -> int:
        if self.space is None:
            raise ProblemFileError("This analysis needs a space dimension", "space")
        return self.space

    def require_finite(self):
        if not self.tail.is_finite:
            raise ProblemFileError(
                f"This analysis needs a finite family, not {self.tail.kind}", "family"
            )

    def with_options(self, **overrides) -> ProblemFile:
        """A copy with the options given as keyword arguments replaced, ``None`` ignored."""
        overrides = {key: value for key, value in overrides.items() if value is not None}
        return ProblemFile(
            self.config,
            self.tail,
            self.channel,
            self.space,
            self.options._replace(**overrides),
            self.source,
        )

    def to_dict(self) -> dict:
        data = {
            "shells": {
                "radii": self.config.radii.tolist(),
                "strengths": self.config.strengths.tolist(),
            },
            "family": self.tail.to_dict(),
            "options": self.options.to_dict(),
        }
        if self.channel is not None:
            if self.channel.n is None:
                data["channel"] = {"l": self.channel.l}
            else:
                data["channel"] = {"n": self.channel.n, "ell": self.channel.ell}
        if self.space is not None:
            data["space"] = {"n": self.space}
        return data


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ProblemFileError(f"Expected a number, got {value!r}", field)
    return float(value)


def _integer(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemFileError(f"Expected an integer, got {value!r}", field)
    return value


def _number_list(value: Any, field: str) -> List[float]:
    if not isinstance(value, list):
        raise ProblemFileError(f"Expected a list of numbers, got {value!r}", field)
    return [_number(item, f"{field}[{index}]") for index, item in enumerate(value)]


def _section(data: dict, key: str, field: str = None) -> Optional[dict]:
    value = data.get(key)
    if value is not None and not isinstance(value, dict):
        raise ProblemFileError(f"Expected an object, got {value!r}", field or key)
    return value


def _parse_shells(data: dict) -> ShellConfig:
    shells = _section(data, "shells")
    if shells is None:
        return ShellConfig()
    radii = _number_list(shells.get("radii", []), "shells.radii")
    strengths = _number_list(shells.get("strengths", []), "shells.strengths")
    if len(radii) != len(strengths):
        raise ProblemFileError(
            f"{len(radii)} radii were given for {len(strengths)} strengths",
            "shells.strengths",
        )
    try:
        return normalize_config(zip(radii, strengths))
    except ShellConfigError as e:
        raise ProblemFileError(str(e), "shells.radii") from e


def _parse_family(data: dict) -> TailModel:
    family = _section(data, "family")
    if family is None:
        return FiniteTail()
    kind = family.get("kind", "finite")
    try:
        if kind == "finite":
            return FiniteTail()
        if kind == "periodic":
            return PeriodicTail(
                _number_list(family.get("spacings"), "family.spacings"),
                _number_list(family.get("strengths"), "family.strengths"),
            )
        if kind == "harmonic":
            return HarmonicTail(
                _number(family.get("amplitude", 0.0), "family.amplitude"),
                _number(family.get("coefficient", 0.0), "family.coefficient"),
                _number(family.get("exponent", 0.0), "family.exponent"),
            )
        if kind == "sampled":
            assertions = _section(family, "assertions", "family.assertions") or {}
            for name, flag in assertions.items():
                if name not in SAMPLED_ASSERTIONS:
                    raise ProblemFileError(
                        f"Unknown assertion, expected one of {', '.join(SAMPLED_ASSERTIONS)}",
                        f"family.assertions.{name}",
                    )
                if flag is not None and not isinstance(flag, bool):
                    raise ProblemFileError(
                        f"Expected true, false or null, got {flag!r}",
                        f"family.assertions.{name}",
                    )
            return SampledTail.from_sequences(
                _number_list(family.get("spacings"), "family.spacings"),
                _number_list(family.get("strengths"), "family.strengths"),
                **assertions,
            )
    except ShellConfigError as e:
        raise ProblemFileError(str(e), "family") from e
    raise ProblemFileError(
        f"Unknown family kind {kind!r}, expected finite, periodic, harmonic or sampled",
        "family.kind",
    )


def _parse_channel(data: dict) -> Optional[ChannelSpec]:
    channel = _section(data, "channel")
    if channel is None:
        return None
    try:
        if "l" in channel:
            if "n" in channel or "ell" in channel:
                raise ProblemFileError("Give either l or the pair n, ell", "channel")
            return ChannelSpec(l=_number(channel["l"], "channel.l"))
        if "n" in channel and "ell" in channel:
            return ChannelSpec(
                n=_integer(channel["n"], "channel.n"),
                ell=_integer(channel["ell"], "channel.ell"),
            )
    except DomainError as e:
        raise ProblemFileError(str(e), "channel") from e
    raise ProblemFileError("A channel needs l or both n and ell", "channel")


def _parse_space(data: dict) -> Optional[int]:
    space = _section(data, "space")
    if space is None:
        return None
    n = _integer(space.get("n"), "space.n")
    if n < 2:
        raise ProblemFileError(f"Space dimension {n} is below 2", "space.n")
    return n


def _parse_sweep(value: Any) -> Tuple[SweepAxis, ...]:
    if value is None:
        return ()
    if not isinstance(value, list) or not 1 <= len(value) <= 2:
        raise ProblemFileError("A sweep is a list of one or two axes", "options.sweep")
    axes = []
    for position, axis in enumerate(value):
        field = f"options.sweep[{position}]"
        if not isinstance(axis, dict):
            raise ProblemFileError(f"Expected an object, got {axis!r}", field)
        parameter, _, index = str(axis.get("parameter", "")).partition(":")
        if parameter not in SWEEP_PARAMETERS or not index.isdigit():
            raise ProblemFileError(
                "Expected a parameter of the form strength:k or radius:k",
                f"{field}.parameter",
            )
        if "values" in axis:
            values = _number_list(axis["values"], f"{field}.values")
        else:
            values = numpy.linspace(
                _number(axis.get("start"), f"{field}.start"),
                _number(axis.get("stop"), f"{field}.stop"),
                _integer(axis.get("num"), f"{field}.num"),
            ).tolist()
        if not values:
            raise ProblemFileError("A sweep axis needs at least one value", field)
        axes.append(SweepAxis(parameter, int(index), tuple(values)))
    return tuple(axes)


def _parse_options(data: dict) -> ProblemOptions:
    options = _section(data, "options") or {}
    known = set(ProblemOptions._fields)
    for key in options:
        if key not in known:
            raise ProblemFileError("Unknown option", f"options.{key}")

    def optional_number(key):
        value = options.get(key)
        return None if value is None else _number(value, f"options.{key}")

    def flag(key):
        value = options.get(key, False)
        if not isinstance(value, bool):
            raise ProblemFileError(f"Expected true or false, got {value!r}", f"options.{key}")
        return value

    weights = options.get("weights")
    return ProblemOptions(
        tolerance=optional_number("tolerance"),
        oracle=flag("oracle"),
        strict=flag("strict"),
        weights=None if weights is None else tuple(_number_list(weights, "options.weights")),
        omega_plus=tuple(
            _integer(k, f"options.omega_plus[{i}]")
            for i, k in enumerate(options.get("omega_plus", []))
        ),
        epsilon=optional_number("epsilon"),
        length=optional_number("length"),
        mesh=optional_number("mesh"),
        lmax=_integer(options.get("lmax", DEFAULT_LMAX), "options.lmax"),
        sweep=_parse_sweep(options.get("sweep")),
    )


def parse_problem(data: Any, source: Optional[str] = None) -> ProblemFile:
    """
    Build a :class:`ProblemFile` from decoded JSON.

    :raises ProblemFileError: naming the offending field
    """
    if not isinstance(data, dict):
        raise ProblemFileError("A problem file holds a JSON object")
    for key in data:
        if key not in ("shells", "family", "channel", "space", "options"):
            raise ProblemFileError("Unknown section", key)
    channel = _parse_channel(data)
    space = _parse_space(data)
    if channel is not None and space is not None:
        raise ProblemFileError("Give either a channel or a space, not both", "space")
    config = _parse_shells(data)
    options = _parse_options(data)
    if config.size:
        for i, k in enumerate(options.omega_plus):
            if not 0 <= k < config.size:
                raise ProblemFileError(
                    f"Shell index {k} is outside 0..{config.size - 1}; "
                    "indices are 0-based in radius order",
                    f"options.omega_plus[{i}]",
                )
    return ProblemFile(
        config,
        _parse_family(data),
        channel,
        space,
        options,
        source,
    )


def load_problem(path: str) -> ProblemFile:
    """
    Read and parse a problem file.

    :raises ProblemFileError: with the line and column of malformed JSON
    """
    try:
        with open(path) as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        log.error(f"Malformed problem file {path}: {e.msg}")
        raise ProblemFileError(e.msg, line=e.lineno, column=e.colno) from e
    except OSError as e:
        raise ProblemFileError(f"Could not read {path}: {e.strerror}") from e
    return parse_problem(data, path)
