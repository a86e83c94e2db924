"""JSON-ready encoding of the domain types and the CLI envelopes.

``to_dict`` produces plain dicts/lists/ints/bools/strings; ``from_dict``
rebuilds the object and reports bad input as :class:`ValidationError` with a
dotted path to the offending field (``$.automorphism.diffeo.det_h1_sign``).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum

from .bundles import JetRelabeling, Quadruple, RealBundle, RealDivisor
from .det_signs import AutomorphismData
from .errors import RealOrientError, ValidationError
from .moduli import ClassExpression, ModuliSetup
from .pin_spin import PinCycleData
from .surface_topology import RealCurveType, RealDiffeoData

VERSION = "1"

# field name -> type (or [type] for a list of that type) for nested fields
NESTED = {
    RealDiffeoData: {"curve": RealCurveType},
    RealBundle: {"curve": RealCurveType},
    AutomorphismData: {"diffeo": RealDiffeoData, "pin_cycles": [PinCycleData]},
}

TYPES = {
    cls.__name__: cls
    for cls in (
        RealCurveType,
        RealDiffeoData,
        RealBundle,
        RealDivisor,
        Quadruple,
        JetRelabeling,
        PinCycleData,
        AutomorphismData,
        ModuliSetup,
        ClassExpression,
    )
}


def to_dict(obj):
    if isinstance(obj, ClassExpression):
        return {"coefficients": obj.coefficients}
    if isinstance(obj, Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_dict(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, (list, tuple)):
        return [to_dict(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_dict(v) for k, v in obj.items()}
    return obj


def _freeze(value):
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def from_dict(cls, data, path="$"):
    if isinstance(cls, str):
        try:
            cls = TYPES[cls]
        except KeyError:
            raise ValidationError(f"unknown type {cls!r}", path) from None
    if not isinstance(data, dict):
        raise ValidationError(f"expected an object for {cls.__name__}", path)
    if cls is ClassExpression:
        coeffs = data.get("coefficients")
        if not isinstance(coeffs, dict) or set(data) != {"coefficients"}:
            raise ValidationError("expected {'coefficients': {...}}", path)
        return _build(ClassExpression.from_coefficients, (coeffs,), {}, f"{path}.coefficients")
    fields = {f.name: f for f in dataclasses.fields(cls)}
    unknown = set(data) - set(fields)
    if unknown:
        raise ValidationError(f"unknown field(s) {sorted(unknown)}", f"{path}.{sorted(unknown)[0]}")
    kwargs = {}
    nested = NESTED.get(cls, {})
    for name, f in fields.items():
        where = f"{path}.{name}"
        if name not in data:
            if f.default is dataclasses.MISSING and f.default_factory is dataclasses.MISSING:
                raise ValidationError(f"missing field {name!r}", where)
            continue
        value = data[name]
        kind = nested.get(name)
        if isinstance(kind, list):
            if not isinstance(value, list):
                raise ValidationError("expected a list", where)
            value = tuple(from_dict(kind[0], v, f"{where}[{i}]") for i, v in enumerate(value))
        elif kind is not None:
            value = from_dict(kind, value, where)
        else:
            value = _freeze(value)
        kwargs[name] = value
    return _build(cls, (), kwargs, path)


def _build(factory, args, kwargs, path):
    try:
        return factory(*args, **kwargs)
    except RealOrientError as exc:
        where = f"{path}.{exc.field}" if exc.field else path
        raise ValidationError(exc.message, where) from None
    except TypeError as exc:
        raise ValidationError(str(exc), path) from None


@dataclass(frozen=True)
class Request:
    command: str
    payload: dict
    version: str = VERSION

    def to_dict(self):
        return {"command": self.command, "version": self.version, "payload": self.payload}

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ValidationError("request must be a JSON object", "$")
        if "payload" not in data:
            # a bare payload
            return cls(data.get("command", ""), data)
        if set(data) - {"command", "version", "payload"}:
            raise ValidationError("unexpected keys in request envelope", "$")
        if not isinstance(data["payload"], dict):
            raise ValidationError("payload must be an object", "$.payload")
        version = data.get("version", VERSION)
        if version != VERSION:
            raise ValidationError(f"unsupported version {version!r}", "$.version")
        return cls(data.get("command", ""), data["payload"], version)


@dataclass(frozen=True)
class Response:
    command: str
    result: dict = None
    error: dict = None
    version: str = VERSION

    def to_dict(self):
        out = {"command": self.command, "version": self.version}
        if self.error is not None:
            out["error"] = self.error
        else:
            out["result"] = self.result
        return out

    @classmethod
    def from_dict(cls, data):
        return cls(data["command"], data.get("result"), data.get("error"), data.get("version", VERSION))

    @classmethod
    def failure(cls, command, exc):
        return cls(
            command,
            error={"code": exc.code, "message": exc.message, "offending_field": exc.field},
        )


__all__ = ["NESTED", "Request", "Response", "TYPES", "VERSION", "from_dict", "to_dict"]
