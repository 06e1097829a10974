"""Batteries of checks run from a JSON config, collected into one report bundle.

A config is ``{"battery": [item, ...]}``. Each item has a ``kind``:

``sweep``
    ``kmax``, ``dmax``: exhaustive numerical-lemma sweep.
``packages``
    ``k``, ``d``, ``samples``, ``seed``: sampled reduction packages, each
    validated and, for ``d >= 1``, checked for residual feasibility and
    middle-size and large violators.
``boundary``
    ``k``, ``samples``, ``seed``: exploration at ``d = 0``; never fails.
``recolor``
    ``samples``, ``seed``: random exact decompositions completed by distinct
    piece colors.
``extract``
    ``graph`` (a corpus spec or ``{"path": ...}``), ``k``, ``m``.

Any exception or failed check marks the item failed; the exit status is
nonzero if any item failed. Output is deterministic for a fixed config.
"""

from __future__ import annotations

import json
import random
from pathlib import Path
from typing import Mapping

from .corpus import CorpusSpec, generate_corpus
from .decomposition import HallFailure, random_instance, recolor_with_certificate
from .io import load_graph
from .numerical import numerical_lemma_sweep
from .pipeline import extract_subgraph, verify_certificate
from .reduction import (
    boundary_search_d0,
    check_middle_range,
    check_no_large_obstruction,
    check_residual_feasibility,
    generate_package,
    validate_package,
)
from .templates import respects


def _sweep(item):
    res = numerical_lemma_sweep(int(item["kmax"]), int(item["dmax"]))
    return res.ok, res.summary()


def _packages(item):
    k, d = int(item["k"]), int(item["d"])
    samples, seed = int(item.get("samples", 100)), int(item.get("seed", 0))
    counts = {"sampled": 0, "invalid": 0, "infeasible": 0, "middle_range": 0, "large": 0}
    for j in range(samples):
        pkg = generate_package(k, d, seed * 1_000_003 + j)
        counts["sampled"] += 1
        if not validate_package(pkg).passed:
            counts["invalid"] += 1
        if not check_middle_range(pkg).empty:
            counts["middle_range"] += 1
        if pkg.J is not None and not check_no_large_obstruction(pkg):
            counts["large"] += 1
        if d >= 1 and not check_residual_feasibility(pkg):
            counts["infeasible"] += 1
    bad = counts["invalid"] + counts["infeasible"]
    if d >= 1:
        bad += counts["middle_range"] + counts["large"]
    return bad == 0, counts


def _boundary(item):
    rep = boundary_search_d0(int(item["k"]), int(item.get("samples", 1000)), int(item.get("seed", 0)))
    return True, rep


def _recolor(item):
    rng = random.Random(f"recolor:{item.get('seed', 0)}")
    counts = {"instances": 0, "respecting": 0, "hall_failures": 0, "floor_violations": 0}
    for _ in range(int(item.get("samples", 100))):
        g, t, d = random_instance(rng)
        counts["instances"] += 1
        try:
            rc = recolor_with_certificate(g, t, d)
        except HallFailure:
            counts["hall_failures"] += 1
            continue
        if respects(g, t, rc.coloring):
            counts["respecting"] += 1
        if any(len(x) < rc.list_floor for x in rc.lists):
            counts["floor_violations"] += 1
    ok = counts["respecting"] == counts["instances"] and not counts["floor_violations"]
    return ok, counts


def _extract(item):
    spec = item["graph"]
    if "path" in spec:
        g = load_graph(spec["path"])
    else:
        g = generate_corpus(CorpusSpec.from_dict(spec))
    cert = extract_subgraph(g, int(item["k"]), int(item["m"]))
    problems = verify_certificate(g, cert)
    return not problems, {"certificate": cert.to_dict(), "problems": problems}


RUNNERS = {
    "sweep": _sweep,
    "packages": _packages,
    "boundary": _boundary,
    "recolor": _recolor,
    "extract": _extract,
}


def run_report(config) -> tuple[dict, int]:
    """Run a battery; ``config`` is a mapping or a path to a JSON file.

    Returns the bundle and the exit status.
    """
    if not isinstance(config, Mapping):
        config = json.loads(Path(config).read_text())
    items = []
    for index, item in enumerate(config.get("battery", [])):
        kind = item.get("kind")
        entry = {"index": index, "kind": kind, "input": item}
        runner = RUNNERS.get(kind)
        if runner is None:
            entry.update(ok=False, error=f"unknown kind {kind!r}")
        else:
            try:
                ok, result = runner(item)
                entry.update(ok=ok, result=result)
            except Exception as exc:  # recorded in the bundle, not raised
                entry.update(ok=False, error=f"{type(exc).__name__}: {exc}")
        items.append(entry)
    failed = sum(not e["ok"] for e in items)
    bundle = {
        "items": items,
        "summary": {"total": len(items), "passed": len(items) - failed, "failed": failed},
    }
    return bundle, 1 if failed else 0
