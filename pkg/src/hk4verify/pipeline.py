"""Candidate ingestion, the contradiction pipeline, and report emission.

Candidate file format
---------------------
UTF-8 text, LF or CRLF line endings.  Comment lines start with ``#`` (the
leading comment block is kept as free-text provenance), the first
non-comment line must be the header ``b2,b3``, and every following line
holds two comma-separated nonnegative integers.  Structurally malformed
input (bad header, non-integer fields) is an error; rows that parse but are
inadmissible (odd b3, negative forced b4, duplicates) are retained with an
error annotation rather than silently dropped.

The contradiction pipeline
--------------------------
For a hypothetical numerically trivial automorphism of prime order p on a
compact hyperkahler 4-fold X with Betti candidate (b2, b3), the fixed locus
would consist of m points, k K3 surfaces and t tori with m = k = 0 forced by
the orbifold Salamon balance.  Exactly one of two contradictions then fires:

* ``LefschetzMismatch``: chi_top(X) != 0, but the fixed-point formula says
  chi_top(X) equals the Euler characteristic of a disjoint union of tori,
  which is 0.
* ``Table1Exclusion``: chi_top(X) = 0, so the resolved quotient W would be a
  hyperkahler 4-fold with c4(W) = 0 carrying a line bundle with chi = 0; but
  chi = 0 has no rational solution at c4 = 0 (the discriminant 7/4 is not a
  rational square).

Every (candidate, prime, t) triple must yield a certificate; a triple that
refuses both branches aborts the run, because it would mean the verified
chain of identities is broken.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from ._version import __version__
from .exact import format_rational, rational_sqrt_exact
from .quotient import (
    FixedLocusProfile,
    is_prime,
    lefschetz_euler_fixed,
    mk_elimination_equation,
    orbifold_salamon_defect,
    solve_mk,
    transport_betti,
)
from .riemann_roch import CandidateRecord, admits_zero_chi, delta, filter_candidates
from .topology import (
    InadmissiblePairError,
    betti_from_pair,
    chern_from_betti,
    euler_characteristic,
    salamon_defect,
)

DEFAULT_PRIMES: tuple[int, ...] = (2, 3, 5, 7, 11, 13)
DEFAULT_T_MAX = 20


class CandidateFormatError(ValueError):
    """Structurally malformed candidate file."""


class VerificationError(Exception):
    """An internal consistency check failed; this indicates a bug in the
    pipeline or its inputs, never an accepted 'no contradiction' outcome."""


@dataclass(frozen=True)
class CandidateRow:
    """One data row; ``error`` carries the inadmissibility reason, if any."""

    line: int
    b2: int
    b3: int
    error: str | None = None


@dataclass(frozen=True)
class CandidateFile:
    path: str
    rows: tuple[CandidateRow, ...]
    provenance: str
    digest: str

    def valid_rows(self) -> list[CandidateRow]:
        return [r for r in self.rows if r.error is None]

    def valid_pairs(self) -> list[tuple[int, int]]:
        return [(r.b2, r.b3) for r in self.valid_rows()]

    def invalid_rows(self) -> list[CandidateRow]:
        return [r for r in self.rows if r.error is not None]


class Branch(Enum):
    LEFSCHETZ_MISMATCH = "LefschetzMismatch"
    TABLE1_EXCLUSION = "Table1Exclusion"


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable record of which contradiction refutes one
    (candidate, prime, t) triple, with all intermediate exact values."""

    candidate: tuple[int, int]
    prime: int
    t: int
    branch: Branch
    details: dict[str, object]
    hypotheses: tuple[str, ...]

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.candidate[0], self.candidate[1], self.prime, self.t)


# Cited facts the certificates rely on but do not recompute.  Stated here
# once so reports separate computed values from assumed theorems.
_HYPOTHESES_COMMON = (
    "numerically_trivial: g acts as the identity on rational cohomology, "
    "hence b_j(X/<g>) = b_j(X) for all j",
    "pullback_injective: pullback to the partial resolution is injective on "
    "rational cohomology, so exceptional fibers contribute additively to "
    "Betti numbers",
    "orbifold_salamon: b4 + b3 - 10*b2 = 46 + s holds on the partial "
    "resolution, with s = -m*(p-1) contributed by the m index-p quotient "
    "points",
    "lefschetz_fixed_point: chi_top(X) equals chi_top of the fixed locus for "
    "a numerically trivial automorphism",
)
_HYPOTHESES_EXCLUSION = _HYPOTHESES_COMMON + (
    "resolution_smooth_hyperkahler: with m = k = 0 the partial resolution W "
    "is a smooth compact hyperkahler 4-fold",
    "vanishing_chi_line_bundle: W carries a line bundle L with "
    "chi(W, L) = 0, induced by the O-cohomologically trivial action",
)


# ---------------------------------------------------------------------------
# Candidate ingestion

_INT_RE = re.compile(r"\A[+-]?[0-9]+\Z")

#: Pairs accepted by the rational-square filter; the default prove fixture.
TABLE1_FIXTURE = """\
# Betti pairs (b2, b3) of compact hyperkahler 4-folds that pass the
# rational-square filter on the Riemann-Roch discriminant.
# Built-in fixture used when no candidate file is supplied.
b2,b3
23,0
7,8
6,4
5,0
"""


def parse_candidates(
    text: str, path: str = "<memory>", digest: str | None = None
) -> CandidateFile:
    """Parse candidate text; see the module docstring for the grammar."""
    if digest is None:
        digest = "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()
    provenance: list[str] = []
    rows: list[CandidateRow] = []
    seen: dict[tuple[int, int], int] = {}
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not header_seen:
                provenance.append(line.lstrip("#").strip())
            continue
        tokens = [tok.strip() for tok in line.split(",")]
        if not header_seen:
            if tokens != ["b2", "b3"]:
                raise CandidateFormatError(
                    f"{path}:{lineno}: expected header 'b2,b3', got {line!r}"
                )
            header_seen = True
            continue
        if len(tokens) != 2:
            raise CandidateFormatError(
                f"{path}:{lineno}: expected two comma-separated fields, got {line!r}"
            )
        if not all(_INT_RE.match(tok) for tok in tokens):
            raise CandidateFormatError(
                f"{path}:{lineno}: non-integer field in {line!r}"
            )
        b2, b3 = int(tokens[0]), int(tokens[1])
        error: str | None = None
        if (b2, b3) in seen:
            error = f"duplicate of line {seen[(b2, b3)]}"
        else:
            seen[(b2, b3)] = lineno
            try:
                betti_from_pair(b2, b3)
            except InadmissiblePairError as exc:
                error = str(exc)
        rows.append(CandidateRow(line=lineno, b2=b2, b3=b3, error=error))
    if not header_seen:
        raise CandidateFormatError(f"{path}: missing 'b2,b3' header line")
    return CandidateFile(
        path=path, rows=tuple(rows), provenance="\n".join(provenance), digest=digest
    )


def load_candidates(path: str | Path) -> CandidateFile:
    """Read and parse a candidate file; the digest covers the raw bytes."""
    raw = Path(path).read_bytes()
    digest = "sha256:" + hashlib.sha256(raw).hexdigest()
    return parse_candidates(raw.decode("utf-8-sig"), path=str(path), digest=digest)


def builtin_candidates() -> CandidateFile:
    return parse_candidates(TABLE1_FIXTURE, path="<builtin:table1>")


# ---------------------------------------------------------------------------
# The contradiction pipeline

def prove(
    candidates: CandidateFile,
    primes: Sequence[int] = DEFAULT_PRIMES,
    t_max: int = DEFAULT_T_MAX,
) -> list[Certificate]:
    """Replay the contradiction for every (valid candidate, prime, t) triple.

    Returns one certificate per triple, in sweep order (candidates in file
    order, then primes, then t).  Raises VerificationError if any triple
    fails to produce a contradiction or an internal identity breaks.
    """
    if t_max < 0:
        raise ValueError(f"t_max must be nonnegative, got {t_max}")
    primes = tuple(primes)
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"not a prime: {p}")
    certificates: list[Certificate] = []
    for row in candidates.valid_rows():
        certificates.extend(_prove_candidate(row.b2, row.b3, primes, t_max))
    expected = len(candidates.valid_pairs()) * len(primes) * (t_max + 1)
    if len(certificates) != expected:
        raise VerificationError(
            f"expected {expected} certificates, produced {len(certificates)}"
        )
    for cert in certificates:
        verify_certificate(cert)
    return certificates


def _prove_candidate(
    b2: int, b3: int, primes: tuple[int, ...], t_max: int
) -> list[Certificate]:
    bX = betti_from_pair(b2, b3)
    chi_X = euler_characteristic(bX)
    chern = chern_from_betti(b2, b3)
    if chi_X != chern.c4:
        raise VerificationError(
            f"chi_top(X) = {chi_X} disagrees with c4 = {chern.c4} for ({b2}, {b3})"
        )
    out: list[Certificate] = []
    for p in primes:
        m, k = solve_mk(p)
        equation = mk_elimination_equation(p)
        for t in range(t_max + 1):
            profile = FixedLocusProfile(p=p, m=m, k=k, t=t)
            chi_fixed = lefschetz_euler_fixed(profile)
            if chi_fixed != 0:
                raise VerificationError(
                    f"fixed locus of {t} tori must have chi_top 0, got {chi_fixed}"
                )
            details: dict[str, object] = {
                "chi_top_X": chi_X,
                "chi_top_fixed_locus": chi_fixed,
                "m": m,
                "k": k,
                "mk_elimination": equation,
            }
            if chi_X != chi_fixed:
                out.append(
                    Certificate(
                        candidate=(b2, b3),
                        prime=p,
                        t=t,
                        branch=Branch.LEFSCHETZ_MISMATCH,
                        details=details,
                        hypotheses=_HYPOTHESES_COMMON,
                    )
                )
                continue
            # chi_top(X) = 0: pass through the quotient to the resolution W.
            bY = bX  # numerical triviality copies the Betti table
            bW = transport_betti(bY, profile)
            if salamon_defect(bW) != 0:
                raise VerificationError(
                    f"transported Salamon defect nonzero for ({b2}, {b3}), "
                    f"p={p}, t={t}: {salamon_defect(bW)}"
                )
            if orbifold_salamon_defect(bW, profile) != 0:
                raise VerificationError(
                    f"orbifold Salamon defect nonzero for ({b2}, {b3}), p={p}, t={t}"
                )
            chi_W = euler_characteristic(bW)
            if chi_W != 0:
                raise VerificationError(
                    f"chi_top(W) = {chi_W} should vanish for ({b2}, {b3}), p={p}, t={t}"
                )
            c4_W = chi_W  # c4 equals chi_top on the hyperkahler resolution
            d = delta(c4_W)
            roots = admits_zero_chi(c4_W)
            if roots:
                raise VerificationError(
                    f"no contradiction: chi = 0 admits rational roots {sorted(roots)} "
                    f"at c4 = {c4_W} for ({b2}, {b3}), p={p}, t={t}"
                )
            details.update(
                {
                    "betti_W": bW.b,
                    "salamon_defect_W": 0,
                    "c4_W": c4_W,
                    "delta": d,
                    "delta_sqrt": rational_sqrt_exact(d),
                    "lambda_roots": tuple(sorted(roots)),
                }
            )
            out.append(
                Certificate(
                    candidate=(b2, b3),
                    prime=p,
                    t=t,
                    branch=Branch.TABLE1_EXCLUSION,
                    details=details,
                    hypotheses=_HYPOTHESES_EXCLUSION,
                )
            )
    return out


def verify_certificate(cert: Certificate) -> None:
    """Re-check the branch invariants of a certificate from its details."""
    chi_X = cert.details["chi_top_X"]
    if cert.branch is Branch.LEFSCHETZ_MISMATCH:
        if chi_X == 0:
            raise VerificationError(f"LefschetzMismatch with chi_top(X) = 0: {cert}")
    elif cert.branch is Branch.TABLE1_EXCLUSION:
        c4_W = cert.details["c4_W"]
        if chi_X != 0 or c4_W != 0:
            raise VerificationError(
                f"Table1Exclusion requires chi_top(X) = c4(W) = 0: {cert}"
            )
        if admits_zero_chi(c4_W):
            raise VerificationError(
                f"Table1Exclusion but chi = 0 is rationally solvable at c4 = {c4_W}"
            )
    else:  # pragma: no cover - enum is closed
        raise VerificationError(f"unknown branch {cert.branch}")


# ---------------------------------------------------------------------------
# Reports

def _json_value(value: object) -> object:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return [_json_value(v) for v in value]
    if value is None or isinstance(value, (int, str)):
        return value
    raise TypeError(f"unexpected report value {value!r}")


def _branch_counts(certs: Iterable[Certificate]) -> dict[str, int]:
    counts = {branch.value: 0 for branch in Branch}
    for cert in certs:
        counts[cert.branch.value] += 1
    return counts


_CSV_COLUMNS = [
    "b2",
    "b3",
    "prime",
    "t",
    "branch",
    "chi_top_X",
    "c4_W",
    "delta",
    "lambda_roots",
    "m",
    "k",
    "version",
    "input_digest",
]


def _flat_row(cert: Certificate) -> dict[str, object]:
    details = cert.details
    exclusion = cert.branch is Branch.TABLE1_EXCLUSION
    roots = details.get("lambda_roots", ())
    return {
        "b2": cert.candidate[0],
        "b3": cert.candidate[1],
        "prime": cert.prime,
        "t": cert.t,
        "branch": cert.branch.value,
        "chi_top_X": details["chi_top_X"],
        "c4_W": details["c4_W"] if exclusion else "",
        "delta": format_rational(details["delta"]) if exclusion else "",
        "lambda_roots": ";".join(format_rational(r) for r in roots),
        "m": details["m"],
        "k": details["k"],
    }


def emit_report(
    certs: Sequence[Certificate], fmt: str = "json", *, input_digest: str = ""
) -> bytes:
    """Serialize certificates deterministically.

    Certificates are sorted by (b2, b3, prime, t); rationals are rendered as
    `p/q` strings; the tool version and the input-file digest are embedded.
    Identical inputs produce byte-identical output.
    """
    fmt = {"md": "markdown"}.get(fmt, fmt)
    ordered = sorted(certs, key=Certificate.sort_key)
    counts = _branch_counts(ordered)
    if fmt == "json":
        payload = {
            "version": __version__,
            "input_digest": input_digest,
            "branch_counts": counts,
            "certificates": [
                {
                    "candidate": list(cert.candidate),
                    "prime": cert.prime,
                    "t": cert.t,
                    "branch": cert.branch.value,
                    "details": {
                        key: _json_value(val) for key, val in cert.details.items()
                    },
                    "hypotheses": list(cert.hypotheses),
                }
                for cert in ordered
            ],
        }
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for cert in ordered:
            row = _flat_row(cert)
            row["version"] = __version__
            row["input_digest"] = input_digest
            writer.writerow(row)
        return buf.getvalue().encode("utf-8")
    if fmt == "markdown":
        lines = [
            "# Contradiction certificates",
            "",
            f"- version: {__version__}",
            f"- input digest: {input_digest}",
            f"- certificates: {len(ordered)} ("
            + ", ".join(f"{name}: {count}" for name, count in sorted(counts.items()))
            + ")",
            "",
            "| b2 | b3 | prime | t | branch | chi_top_X | c4_W | delta "
            "| lambda_roots | m | k |",
            "|---:|---:|------:|--:|--------|----------:|-----:|------:"
            "|--------------|--:|--:|",
        ]
        for cert in ordered:
            row = _flat_row(cert)
            roots = row["lambda_roots"]
            if cert.branch is Branch.TABLE1_EXCLUSION and not roots:
                roots = "none"
            lines.append(
                f"| {row['b2']} | {row['b3']} | {row['prime']} | {row['t']} "
                f"| {row['branch']} | {row['chi_top_X']} | {row['c4_W']} "
                f"| {row['delta']} | {roots} | {row['m']} | {row['k']} |"
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unsupported report format: {fmt!r}")


def table1(candidates: CandidateFile, fmt: str = "markdown") -> str:
    """Render the accepted candidates as a table (columns No., c2sq, c4,
    b2, b3) sorted by decreasing b2 then decreasing b3."""
    fmt = {"md": "markdown"}.get(fmt, fmt)
    records = [r for r in filter_candidates(candidates.valid_pairs()) if r.accepted]
    records.sort(key=lambda r: (-r.b2, -r.b3))
    rows = [
        (no, r.chern.c2sq, r.chern.c4, r.b2, r.b3)
        for no, r in enumerate(records, start=1)
    ]
    if fmt == "markdown":
        lines = [
            "| No. | c2sq | c4 | b2 | b3 |",
            "|----:|-----:|---:|---:|---:|",
        ]
        lines += [f"| {n} | {c2sq} | {c4} | {b2} | {b3} |" for n, c2sq, c4, b2, b3 in rows]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        lines = ["no,c2sq,c4,b2,b3"]
        lines += [f"{n},{c2sq},{c4},{b2},{b3}" for n, c2sq, c4, b2, b3 in rows]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [
            {"no": n, "c2sq": c2sq, "c4": c4, "b2": b2, "b3": b3}
            for n, c2sq, c4, b2, b3 in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unsupported table format: {fmt!r}")


def emit_filter_report(candidates: CandidateFile) -> bytes:
    """Full per-candidate filter outcomes, valid and flagged rows alike."""
    records = filter_candidates(candidates.valid_pairs())
    payload = {
        "version": __version__,
        "input_digest": candidates.digest,
        "note": (
            "accepted flags below are computed for the supplied candidate "
            "list by this tool; they are not an externally attested table"
        ),
        "records": [_record_json(r) for r in records],
        "invalid_rows": [
            {"line": r.line, "b2": r.b2, "b3": r.b3, "error": r.error}
            for r in candidates.invalid_rows()
        ],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _record_json(record: CandidateRecord) -> dict[str, object]:
    return {
        "b2": record.b2,
        "b3": record.b3,
        "c2sq": record.chern.c2sq,
        "c4": record.chern.c4,
        "delta": format_rational(record.delta),
        "delta_sqrt": (
            None if record.delta_sqrt is None else format_rational(record.delta_sqrt)
        ),
        "lambda_roots": [format_rational(r) for r in sorted(record.lambda_roots)],
        "accepted": record.accepted,
    }
