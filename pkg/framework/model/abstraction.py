from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
MASK64 = 0xFFFFFFFFFFFFFFFF

INT_TAG = b"\x01"
BOOL_TAG = b"\x02"
ENABLED_MARK = b"\xff"


class Abstraction(str, Enum):
    COARSE = "coarse"
    FINE = "fine"


@dataclass(frozen=True, order=True)
class AbstractState:
    digest: int
    # what was hashed; only filled in when asked for
    abstracted: Optional[Tuple] = field(default=None, compare=False, hash=False)

    @property
    def label(self):
        return f"{self.digest:016x}"

    def __repr__(self):
        return f"AbstractState({self.label})"


def fnv1a_64(data):
    digest = FNV_OFFSET
    for byte in data:
        digest ^= byte
        digest = (digest * FNV_PRIME) & MASK64
    return digest


def abstracted_tuple(state, spec, mode):
    """
    Fine keeps every variable and the enabled set. Coarse drops implicit
    variables and the enabled set.
    """
    mode = Abstraction(mode)
    values = state.as_dict()
    kept = tuple(
        (decl.name, decl.type, values[decl.name])
        for decl in spec.variables
        if mode is Abstraction.FINE or not decl.implicit
    )
    enabled = tuple(sorted(state.enabled)) if mode is Abstraction.FINE else None
    return kept, enabled


def serialize(kept, enabled):
    out = bytearray()
    for name, type_name, value in kept:
        out += name.encode("utf-8") + b"\x00"
        if type_name == "bool":
            out += BOOL_TAG + int(value).to_bytes(8, "little", signed=True)
        else:
            out += INT_TAG + value.to_bytes(8, "little", signed=True)
    if enabled is not None:
        out += ENABLED_MARK
        for name in enabled:
            out += name.encode("utf-8") + b"\x00"
    return bytes(out)


def abstract_state(state, spec, mode, keep_tuple=False):
    """GetState: hash a concrete state into a model state."""
    kept, enabled = abstracted_tuple(state, spec, mode)
    digest = fnv1a_64(serialize(kept, enabled))
    return AbstractState(digest, (kept, enabled) if keep_tuple else None)
