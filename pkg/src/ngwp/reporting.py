"""Result containers shared across the package.

Three small dataclasses are the whole currency of the library:

  QuadResult          value + error estimate + evaluation count from quadrature
  SeriesResult        value + truncation index + last-term magnitude from a series
  VerificationReport  one identity checked: both sides, errors, verdict, runtime

They live here (not in the modules that produce them) so the transform module
and the identity module can both emit reports without importing each other.
"""

from dataclasses import dataclass, field


@dataclass
class QuadResult:
    value: complex
    err_est: float
    n_evals: int

    def __complex__(self):
        return complex(self.value)


@dataclass
class SeriesResult:
    value: complex
    n_terms: int
    last_term_mag: float

    def __complex__(self):
        return complex(self.value)


@dataclass
class VerificationReport:
    identity_id: str
    params: dict
    lhs: complex
    rhs: complex
    abs_err: float
    rel_err: float
    tol: float
    passed: bool
    runtime_ms: float
    # Free-form resolved-constant / convention notes; aggregated by the CLI
    # into the report document, not part of the flat per-identity JSON record.
    annotations: dict = field(default_factory=dict)

    def to_json_dict(self):
        """Flat, diff-friendly record. Key order is fixed here and preserved
        by json.dumps, which is what makes report bodies reproducible."""
        return {
            "identity": self.identity_id,
            "params": _jsonable_params(self.params),
            "lhs": {"re": float(self.lhs.real), "im": float(self.lhs.imag)},
            "rhs": {"re": float(self.rhs.real), "im": float(self.rhs.imag)},
            "abs_err": float(self.abs_err),
            "rel_err": float(self.rel_err),
            "tol": float(self.tol),
            "passed": bool(self.passed),
            "runtime_ms": float(self.runtime_ms),
        }


def make_report(identity_id, params, lhs, rhs, tol, runtime_ms, annotations=None):
    """Build a VerificationReport with the canonical pass rule.

    passed  <=>  abs_err <= tol * (1 + max(|lhs|, |rhs|))

    rel_err is abs_err / max(|lhs|, |rhs|) when that scale is nonzero,
    otherwise equal to abs_err (both sides vanished: report the absolute gap).
    """
    lhs = complex(lhs)
    rhs = complex(rhs)
    abs_err = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    rel_err = abs_err / scale if scale > 0.0 else abs_err
    passed = abs_err <= tol * (1.0 + scale)
    return VerificationReport(
        identity_id=identity_id,
        params=dict(params),
        lhs=lhs,
        rhs=rhs,
        abs_err=abs_err,
        rel_err=rel_err,
        tol=tol,
        passed=passed,
        runtime_ms=runtime_ms,
        annotations=dict(annotations or {}),
    )


def _jsonable_params(params):
    """Coerce parameter values to JSON-safe primitives, deterministically.

    Complex parameters become {"re":..., "im":...}; everything else passes
    through as float/int/str. Keys are sorted so two runs serialize params
    identically regardless of construction order.
    """
    out = {}
    for key in sorted(params):
        val = params[key]
        if isinstance(val, complex):
            out[key] = {"re": float(val.real), "im": float(val.imag)}
        elif isinstance(val, bool):
            out[key] = val
        elif isinstance(val, (int, float)):
            out[key] = val
        else:
            out[key] = str(val)
    return out
