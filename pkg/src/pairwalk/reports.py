"""Machine-readable reports for the command line.

Every command emits a Report; `--json` prints it as JSON that validates
against REPORT_SCHEMA. Exact values are always rendered as exact strings
next to any float rendering.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from .certify import PeriodicityCertificate, TransferCertificate
from .composite import CompositeVerdict
from .dynamics import SweepResult
from .exactnum import PhaseFactor


REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "pairwalk report",
    "type": "object",
    "required": ["command", "inputs", "result", "warnings", "wall_time_s"],
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "result": {
            "type": "object",
            "required": ["kind"],
            "properties": {
                "kind": {
                    "enum": [
                        "spectrum",
                        "certificate",
                        "periodicity",
                        "verdict",
                        "sweep",
                        "examples",
                    ]
                }
            },
        },
        "warnings": {"type": "array", "items": {"type": "string"}},
        "wall_time_s": {"type": "number", "minimum": 0},
    },
}

def phase_payload(phase: PhaseFactor | None, approx: complex | None = None):
    if phase is None and approx is None:
        return None
    if phase is None:
        return {"exact": None, "float_re": approx.real, "float_im": approx.imag}
    v = phase.complex_value
    return {"exact": phase.exact_str(), "float_re": v.real, "float_im": v.imag}


def certificate_payload(cert: TransferCertificate) -> dict:
    return {
        "kind": "certificate",
        "transfer_kind": cert.kind,
        "source": cert.source,
        "states": [str(cert.s1), str(cert.s2)],
        "exists": cert.exists,
        "delta": cert.delta,
        "g": cert.g,
        "tau0": str(cert.tau0) if cert.tau0 else None,
        "theta0": str(cert.theta0) if cert.theta0 is not None else None,
        "phase": phase_payload(cert.phase),
        "failure": str(cert.failure) if cert.failure else None,
        "sign_flipped": cert.sign_flipped,
        "plus": [str(e) for e in cert.cospectral.plus] if cert.cospectral else [],
        "minus": [str(e) for e in cert.cospectral.minus] if cert.cospectral else [],
    }


def periodicity_payload(cert: PeriodicityCertificate) -> dict:
    return {
        "kind": "periodicity",
        "source": cert.source,
        "state": str(cert.state),
        "periodic": cert.periodic,
        "always": cert.always,
        "minimal_period": "all t" if cert.always else (
            str(cert.minimal_period) if cert.minimal_period else None
        ),
        "delta": cert.delta,
        "g": cert.g,
        "support": [str(e) for e in cert.support],
        "failure": str(cert.failure) if cert.failure else None,
    }


def verdict_payload(v: CompositeVerdict, fidelity: float | None = None) -> dict:
    out = {
        "kind": "verdict",
        "construction": v.construction,
        "holds": v.holds,
        "outcome": v.outcome,
        "sufficient_only": v.sufficient_only,
        "tau": str(v.tau) if v.tau else None,
        "t": str(v.t) if v.t else None,
        "q": str(v.q) if v.q is not None else None,
        "p": v.p,
        "conditions": [
            {"id": c.cid, "passed": c.passed, "detail": c.detail}
            for c in v.per_condition
        ],
        "source_state": str(v.source_state) if v.source_state else None,
        "target_state": str(v.target_state) if v.target_state else None,
        "phase": phase_payload(v.phase, v.phase_approx),
        "notes": list(v.notes),
    }
    if fidelity is not None:
        out["measured_fidelity"] = fidelity
    return out


def sweep_payload(res: SweepResult, csv_path: str | None = None) -> dict:
    fmax = int(np.argmax(res.fidelities))
    return {
        "kind": "sweep",
        "points": len(res.times),
        "t_min": float(res.times[0]),
        "t_max": float(res.times[-1]),
        "max_fidelity": float(res.fidelities[fmax]),
        "argmax_t": float(res.times[fmax]),
        "peaks": [
            {"t": float(res.times[i]), "fidelity": float(res.fidelities[i])}
            for i in res.peaks
        ],
        "csv": csv_path,
    }


def spectrum_payload(source: str, eigenvalues, multiplicities, exactness: str) -> dict:
    return {
        "kind": "spectrum",
        "source": source,
        "exactness": exactness,
        "eigenvalues": [
            {
                "value": str(ev),
                "approx": ev.value,
                "multiplicity": multiplicities[ev],
            }
            for ev in eigenvalues
        ],
    }


@dataclass
class Report:
    command: str
    inputs: dict
    result: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    wall_time_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "warnings": self.warnings,
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str)


class Stopwatch:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        return False
