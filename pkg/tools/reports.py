"""
Report Models for MONOCLE
Extraction traces, witness reports, and the flat key-value rendering used
by the command line
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .errors import ensure
from .graph_core import SubgraphWitness, verify_witness


def _plain(value: Any) -> Any:
    """Turn sets, numpy scalars and fractions into JSON-friendly values"""
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, Fraction):
        return str(value)
    return value


class TraceStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    step: str
    detail: Dict[str, Any] = Field(default_factory=dict)


class Trace(list):
    """Ordered list of named proof steps"""

    def add(self, step: str, /, **detail: Any) -> "Trace":
        self.append(TraceStep(step=step, detail={key: _plain(value) for key, value in detail.items()}))
        return self

    def steps(self) -> List[str]:
        return [entry.step for entry in self]


class ExtractionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    method: str
    parameters: Dict[str, Any]
    witness: SubgraphWitness
    guarantee: int
    trace: List[TraceStep]


class WitnessReport(BaseModel):
    """What the command line prints for an extraction; verified is recomputed before emission"""

    method: str
    parameters: Dict[str, Any]
    witness: SubgraphWitness
    guarantee: int
    verified: bool
    trace: List[TraceStep]
    wall_time: float


def _flatten(prefix: str, value: Any) -> Iterable[Tuple[str, str]]:
    if isinstance(value, BaseModel):
        value = value.model_dump()
    if isinstance(value, dict):
        for key, item in value.items():
            yield from _flatten(f"{prefix}.{key}" if prefix else str(key), item)
    elif isinstance(value, (list, tuple)) and any(isinstance(v, (dict, list, tuple, BaseModel)) for v in value):
        for i, item in enumerate(value):
            yield from _flatten(f"{prefix}.{i}", item)
    elif isinstance(value, (list, tuple)):
        yield prefix, " ".join(str(v) for v in value)
    elif isinstance(value, bool):
        yield prefix, "true" if value else "false"
    elif value is None:
        yield prefix, "unknown"
    else:
        yield prefix, str(_plain(value))


def render_key_value(report: Any) -> str:
    """Flat `key value` lines in field order"""
    return "\n".join(f"{key} {value}".rstrip() for key, value in _flatten("", report)) + "\n"


def render_json(report: BaseModel) -> str:
    return report.model_dump_json(indent=2) + "\n"


def seal_extraction(
    F: Any,
    method: str,
    parameters: Dict[str, Any],
    vertices: Iterable[int],
    colour: int,
    k: int,
    guarantee: int,
    trace: Trace,
) -> ExtractionReport:
    """Build the report after re-checking order and k-connectivity of the witness"""
    witness = SubgraphWitness(vertices=vertices, colours=(colour,), k=k)
    ensure(witness.order >= guarantee, f"{method}: witness order {witness.order} below guarantee {guarantee}", trace)
    ensure(verify_witness(F, witness), f"{method}: witness is not {k}-connected in colour {colour}", trace)
    logging.info(f"{method}: colour {colour} witness on {witness.order} vertices (guarantee {guarantee})")
    return ExtractionReport(
        method=method, parameters=_plain(parameters), witness=witness, guarantee=guarantee, trace=list(trace)
    )


class OracleReport(BaseModel):
    parameters: Dict[str, Any]
    M: int
    witness: Optional[SubgraphWitness] = None
    wall_time: float


class SearchReport(BaseModel):
    parameters: Dict[str, Any]
    objective: str
    exact: bool
    value: int
    archive: List[Dict[str, int]]
    wall_time: float
