"""JSON and CSV encodings of every result type.

JSON documents carry ``"schema": "ctxfer/1"`` and a ``"kind"`` tag; complex
numbers are ``{"re": .., "im": ..}``.  Python floats survive a JSON round
trip exactly, so ``load(dump(x))`` reproduces every number bit for bit.
CSV tables print 12 significant digits and split complex columns into
``*_re`` / ``*_im``.
"""

import csv
import io
import json

import numpy as np

from .contextuality import ContextualityReport, ScanResult
from .interferometer import BeamSplitter, InterferometerConfig, Network
from .measurement import CountRecord, MarkerDistribution, ProbeResult
from .weak import WeakReport

SCHEMA = "ctxfer/1"


def cplx(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def uncplx(d):
    if d is None:
        return None
    return complex(d["re"], d["im"])


def _vector(v):
    return [cplx(x) for x in v]


def _unvector(items):
    return np.array([uncplx(x) for x in items], dtype=complex)


def _doc(kind, **payload):
    return {"schema": SCHEMA, "kind": kind, **payload}


def dump_config(config):
    return config.reflectivities()


def dump_network(table, closure=None):
    doc = _doc(
        "network",
        config=dump_config(table.config),
        paths={k: _vector(v) for k, v in table.vectors.items()},
        outputs={k: _vector(v) for k, v in table.outputs.items()},
        splitters=[
            {"name": s.name, "inputs": list(s.inputs), "outputs": list(s.outputs),
             "reflectivity": s.reflectivity}
            for s in table.splitters
        ],
    )
    if closure is not None:
        doc["closure_residual"] = closure
    return doc


def dump_probabilities(probs, config=None):
    doc = _doc("probabilities", probabilities=dict(probs))
    if config is not None:
        doc["config"] = dump_config(config)
    return doc


def dump_weak_report(report, config=None):
    rows = []
    for (i, o), kd in report.kd.items():
        w = report.weak[(i, o)]
        rows.append({"path": i, "outcome": o, "defined": w is not None,
                     "weak": None if w is None else cplx(w), "kd": cplx(kd)})
    doc = _doc(
        "weak_report",
        outcome_probabilities=dict(report.outcome_probabilities),
        rows=rows,
        residuals={o: [cplx(r) for r in rs] for o, rs in report.residuals.items()},
    )
    if config is not None:
        doc["config"] = dump_config(config)
    return doc


def dump_contextuality(report):
    return _doc(
        "contextuality",
        margin=report.margin,
        p_f=report.p_f,
        p_d1=report.p_d1,
        p_d2=report.p_d2,
        decomposition_terms=list(report.decomposition_terms),
        identity_residual=report.identity_residual,
        violated=report.violated,
        undefined_outcomes=list(report.undefined_outcomes),
    )


def dump_scan(scan):
    return _doc(
        "scan",
        r1_grid=scan.r1_grid.tolist(),
        r2_grid=scan.r2_grid.tolist(),
        pf_closed=scan.pf_closed.tolist(),
        pf_propagated=scan.pf_propagated.tolist(),
        argmax=list(scan.argmax),
        max_value=scan.max_value,
    )


def dump_counts(record):
    return _doc("counts", context=list(record.context), shots=record.shots,
                counts=dict(record.counts), seed=record.seed)


def dump_marker(dist):
    return _doc("marker", path=dist.path, flipped=dict(dist.flipped), unflipped=dict(dist.unflipped))


def dump_probe(result):
    return _doc("probe", path=result.path, outcome=result.outcome, epsilon=result.epsilon,
                estimate=cplx(result.estimate), mode=result.mode, shots=result.shots, seed=result.seed)


_DUMPERS = (
    (Network, dump_network),
    (WeakReport, dump_weak_report),
    (ContextualityReport, dump_contextuality),
    (ScanResult, dump_scan),
    (CountRecord, dump_counts),
    (MarkerDistribution, dump_marker),
    (ProbeResult, dump_probe),
    (InterferometerConfig, lambda c: _doc("config", **dump_config(c))),
)


def dump(obj):
    """Encode any result object as a JSON-ready dict."""
    for cls, fn in _DUMPERS:
        if isinstance(obj, cls):
            return fn(obj)
    if isinstance(obj, dict):
        return dump_probabilities(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def load(doc):
    """Inverse of :func:`dump`."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    kind = doc["kind"]
    if kind == "config":
        return InterferometerConfig(**{k: doc[k] for k in ("r1", "r2", "rf", "rs1", "rs2")})
    if kind == "network":
        return Network(
            config=InterferometerConfig(**doc["config"]),
            vectors={k: _unvector(v) for k, v in doc["paths"].items()},
            splitters=tuple(
                BeamSplitter(s["name"], tuple(s["inputs"]), tuple(s["outputs"]), s["reflectivity"])
                for s in doc["splitters"]
            ),
            outputs={k: _unvector(v) for k, v in doc["outputs"].items()},
        )
    if kind == "probabilities":
        return dict(doc["probabilities"])
    if kind == "weak_report":
        weak = {}
        kd = {}
        for row in doc["rows"]:
            key = (row["path"], row["outcome"])
            weak[key] = uncplx(row["weak"])
            kd[key] = uncplx(row["kd"])
        return WeakReport(
            outcome_probabilities=dict(doc["outcome_probabilities"]),
            weak=weak,
            kd=kd,
            residuals={o: [uncplx(r) for r in rs] for o, rs in doc["residuals"].items()},
        )
    if kind == "contextuality":
        return ContextualityReport(
            margin=doc["margin"], p_f=doc["p_f"], p_d1=doc["p_d1"], p_d2=doc["p_d2"],
            decomposition_terms=tuple(doc["decomposition_terms"]),
            identity_residual=doc["identity_residual"], violated=doc["violated"],
            undefined_outcomes=tuple(doc["undefined_outcomes"]),
        )
    if kind == "scan":
        return ScanResult(
            np.asarray(doc["r1_grid"]), np.asarray(doc["r2_grid"]),
            np.asarray(doc["pf_closed"]), np.asarray(doc["pf_propagated"]),
            tuple(doc["argmax"]), doc["max_value"],
        )
    if kind == "counts":
        return CountRecord(tuple(doc["context"]), doc["shots"], dict(doc["counts"]), doc["seed"])
    if kind == "marker":
        return MarkerDistribution(doc["path"], dict(doc["flipped"]), dict(doc["unflipped"]))
    if kind == "probe":
        return ProbeResult(doc["path"], doc["outcome"], doc["epsilon"], uncplx(doc["estimate"]),
                           doc["mode"], doc["shots"], doc["seed"])
    raise ValueError(f"unknown document kind {kind!r}")


def to_json(obj, indent=2):
    doc = obj if isinstance(obj, dict) and "schema" in obj else dump(obj)
    return json.dumps(doc, indent=indent)


def fmt(x):
    if x is None:
        return "undefined"
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.12g}"
    return str(x)


def csv_table(header, rows):
    """Render rows to CSV text with 12-significant-digit floats."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])
    return buf.getvalue()


def _split(z):
    if z is None:
        return [None, None]
    z = complex(z)
    return [z.real, z.imag]


def weak_report_csv(report):
    rows = []
    for (i, o), kd in report.kd.items():
        rows.append([i, o, *_split(report.weak[(i, o)]), *_split(kd)])
    return csv_table(["path", "outcome", "weak_re", "weak_im", "kd_re", "kd_im"], rows)


def kd_csv(report):
    rows = [[i, o, *_split(kd)] for (i, o), kd in report.kd.items()]
    return csv_table(["path", "outcome", "value_re", "value_im"], rows)


def probabilities_csv(probs):
    return csv_table(["path", "probability"], [[k, v] for k, v in probs.items()])


def network_csv(table):
    labelled = list(table.vectors.items()) + [(f"{k}_out", v) for k, v in table.outputs.items()]
    rows = [[k, *[c for z in v for c in _split(z)]] for k, v in labelled]
    header = ["path"] + [f"e{k}_{part}" for k in (1, 2, 3) for part in ("re", "im")]
    return csv_table(header, rows)


def contextuality_csv(report):
    t = report.decomposition_terms
    return csv_table(
        ["margin", "p_f", "p_d1", "p_d2", "term_o1", "term_o2", "term_o3", "identity_residual", "violated"],
        [[report.margin, report.p_f, report.p_d1, report.p_d2, *t, report.identity_residual, report.violated]],
    )


def counts_csv(records):
    rows = [[",".join(r.context), p, n, r.shots, r.seed] for r in records for p, n in r.counts.items()]
    return csv_table(["context", "path", "count", "shots", "seed"], rows)


def probe_csv(results, extrapolated=None):
    rows = [[r.path, r.outcome, r.epsilon, *_split(r.estimate)] for r in results]
    if extrapolated is not None:
        rows.append([results[0].path, results[0].outcome, 0.0, *_split(extrapolated)])
    return csv_table(["path", "outcome", "epsilon", "value_re", "value_im"], rows)
