"""The seven Smarandache families and the angle functions each one takes."""

from __future__ import annotations

import enum

from .errors import ConfigError


class SmarandacheKind(enum.Enum):
    GAMMA_W = "gamma-w"
    XI_N = "xi-n"
    W_N = "w-n"
    GAMMA_ZETA_N = "gamma-zeta-n"
    XI_N_W = "xi-n-w"
    GAMMA_XI_W = "gamma-xi-w"
    GAMMA_XI_N_W = "gamma-xi-n-w"

    @property
    def angle_names(self) -> tuple[str, ...]:
        return _ANGLES[self]

    @property
    def arity(self) -> int:
        return len(_ANGLES[self])


_ANGLES = {
    SmarandacheKind.GAMMA_W: ("psi",),
    SmarandacheKind.XI_N: ("psi",),
    SmarandacheKind.W_N: ("psi",),
    SmarandacheKind.GAMMA_ZETA_N: ("phi1", "phi2"),
    SmarandacheKind.XI_N_W: ("phi3",),
    SmarandacheKind.GAMMA_XI_W: ("omega1", "omega2"),
    SmarandacheKind.GAMMA_XI_N_W: ("omega1", "omega2"),
}

KIND_NAMES = tuple(k.value for k in SmarandacheKind)


def parse_kind(name) -> SmarandacheKind:
    if isinstance(name, SmarandacheKind):
        return name
    try:
        return SmarandacheKind(name)
    except ValueError:
        raise ConfigError(f"unknown kind {name!r} (expected one of {', '.join(KIND_NAMES)})") from None


class FormulaMode(enum.Enum):
    LITERAL = "literal"
    CORRECTED = "corrected"


def parse_mode(name) -> FormulaMode:
    if isinstance(name, FormulaMode):
        return name
    try:
        return FormulaMode(name)
    except ValueError:
        raise ConfigError(f"unknown formula mode {name!r} (expected literal or corrected)") from None
