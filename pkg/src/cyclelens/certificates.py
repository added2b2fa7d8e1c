"""Self-checking certificates for the three kinds of claims the tool makes.

A certificate is a JSON object::

    {kind, tool_version, input, input_hash, claims, witness, digest}

``input_hash`` is the SHA-256 of the canonical encoding of ``input``, and
``digest`` covers everything except itself.  :func:`verify` recomputes both
and then replays the computation from ``input`` alone, so edited claims,
witnesses or inputs are all caught.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import __version__
from .construct import refined_upper_bound, within_refined_bound
from .cycles import cycle_edges, enumerate_cycles, has_repeated_length, is_two_connected
from .ears import analyze
from .errors import InvalidInput, InvariantBreach
from .graph import Graph
from .props import check_propositions
from .search import exact_f, uniquely_pancyclic_search

KINDS = ("distinct-spectrum", "proposition-suite", "search-optimal")


def _canon(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


def sha256(obj) -> str:
    return hashlib.sha256(_canon(obj)).hexdigest()


def _seal(kind: str, inp: dict, claims: dict, witness: dict) -> dict:
    cert = {
        "kind": kind,
        "tool_version": __version__,
        "input": inp,
        "input_hash": sha256(inp),
        "claims": claims,
        "witness": witness,
    }
    cert["digest"] = sha256(cert)
    return cert


# -- distinct spectrum ----------------------------------------------------------


def _spectrum_claims(g: Graph, cap=None) -> tuple[dict, dict]:
    rep = has_repeated_length(g, cap)
    if rep.repeated:
        raise InvalidInput(f"graph has two cycles of length {len(rep.witnesses[0])}")
    claims = {
        "distinct": True,
        "spectrum": list(rep.spectrum.lengths),
        "cycle_count": len(rep.spectrum.lengths),
        "two_connected": is_two_connected(g),
    }
    witness = {"cycles": {str(k): list(c) for k, c in rep.by_length.items()}}
    return claims, witness


def spectrum_certificate(g: Graph, cap=None, extra_witness: dict | None = None) -> dict:
    """Certify that ``g`` has no repeated cycle length.

    Raises InvalidInput if it does.  ``extra_witness`` is stored verbatim
    (for example the chord pair behind every length of a construction).
    """
    claims, witness = _spectrum_claims(g, cap)
    require_within_bound(g)
    if extra_witness:
        witness.update(extra_witness)
    return _seal("distinct-spectrum", g.to_dict(), claims, witness)


# -- proposition suite ------------------------------------------------------------


def _suite_claims(g: Graph, edge) -> dict:
    fam = analyze(g, edge)
    out = {}
    for c in check_propositions(fam):
        out[c.name] = "skipped" if c.skipped else ("pass" if c.passed else "fail")
    return out


def suite_certificate(g: Graph, edge) -> dict:
    u, v = edge
    inp = {"graph": g.to_dict(), "edge": [u, v]}
    return _seal("proposition-suite", inp, _suite_claims(g, (u, v)), {})


# -- search -------------------------------------------------------------------------


def search_certificate(n: int, two_connected: bool = False, budget: int | None = None, target: str = "f") -> dict:
    inp = {"target": target, "n": n, "two_connected": two_connected, "budget": budget}
    claims, witness = _search_claims(inp)
    return _seal("search-optimal", inp, claims, witness)


def _search_claims(inp: dict) -> tuple[dict, dict]:
    if inp["target"] == "f":
        r = exact_f(inp["n"], inp["two_connected"], inp["budget"])
        claims = {
            "best_edge_count": r.best_edge_count,
            "f": r.f,
            "proven_optimal": r.proven_optimal,
        }
        return claims, {"graph": r.witness.to_dict() if r.witness else None}
    if inp["target"] == "upc":
        r = uniquely_pancyclic_search(inp["n"], inp["budget"])
        claims = {"count": len(r.graphs), "complete": r.complete}
        return claims, {"graphs": [g.to_dict() for g in r.graphs]}
    raise InvalidInput(f"unknown search target {inp['target']!r}")


# -- verification ----------------------------------------------------------------------


@dataclass
class Verdict:
    ok: bool
    problems: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "problems": self.problems}


def _check_cycle(g: Graph, cyc, length: int) -> str | None:
    if len(cyc) != length or len(set(cyc)) != length:
        return f"witness for length {length} is not a cycle of that length"
    if not all(isinstance(x, int) and 0 <= x < g.n for x in cyc):
        return f"witness for length {length} names unknown vertices"
    if not cycle_edges(tuple(cyc)) <= g.edge_set:
        return f"witness for length {length} uses a non-edge"
    return None


def _verify_witness(cert: dict) -> list[str]:
    kind = cert["kind"]
    w = cert.get("witness") or {}
    probs = []
    if kind == "distinct-spectrum":
        g = Graph.from_dict(cert["input"])
        cycles = w.get("cycles", {})
        if sorted(int(k) for k in cycles) != sorted(cert["claims"].get("spectrum", [])):
            probs.append("witness cycles do not match the claimed spectrum")
        for k, cyc in cycles.items():
            p = _check_cycle(g, cyc, int(k))
            if p:
                probs.append(p)
    elif kind == "search-optimal" and cert["input"]["target"] == "f" and w.get("graph"):
        g = Graph.from_dict(w["graph"])
        if g.n != cert["input"]["n"] or g.m != cert["claims"].get("best_edge_count"):
            probs.append("witness size disagrees with the claim")
        if enumerate_cycles(g).distinct is False:
            probs.append("witness has a repeated cycle length")
        if cert["input"]["two_connected"] and not is_two_connected(g):
            probs.append("witness is not 2-connected")
    return probs


def _replay(cert: dict) -> tuple[dict, dict | None]:
    kind, inp = cert["kind"], cert["input"]
    if kind == "distinct-spectrum":
        g = Graph.from_dict(inp)
        rep = has_repeated_length(g)
        claims = {
            "distinct": not rep.repeated,
            "spectrum": list(rep.spectrum.lengths),
            "cycle_count": len(rep.spectrum.lengths),
            "two_connected": is_two_connected(g),
        }
        return claims, None
    if kind == "proposition-suite":
        return _suite_claims(Graph.from_dict(inp["graph"]), tuple(inp["edge"])), {}
    claims, witness = _search_claims(inp)
    return claims, witness


def verify(cert: dict, replay: bool = True) -> Verdict:
    """Check hashes, witnesses and (with ``replay``) every claim."""
    probs = []
    if not isinstance(cert, dict):
        return Verdict(False, ["certificate is not a JSON object"])
    missing = {"kind", "input", "input_hash", "claims", "witness", "digest"} - set(cert)
    if missing:
        return Verdict(False, [f"missing fields: {sorted(missing)}"])
    if cert["kind"] not in KINDS:
        return Verdict(False, [f"unknown kind {cert['kind']!r}"])
    if sha256(cert["input"]) != cert["input_hash"]:
        probs.append("input hash mismatch")
    body = {k: x for k, x in cert.items() if k != "digest"}
    if sha256(body) != cert["digest"]:
        probs.append("digest mismatch")
    try:
        probs += _verify_witness(cert)
        if replay:
            claims, witness = _replay(cert)
            if claims != cert["claims"]:
                probs.append("replayed claims differ")
            if cert["kind"] == "search-optimal" and "graphs" in witness and witness != cert["witness"]:
                probs.append("replayed graph list differs")
    except (InvalidInput, KeyError, TypeError, ValueError) as exc:
        probs.append(f"unreadable certificate: {exc}")
    return Verdict(not probs, probs)


def require_within_bound(g: Graph) -> None:
    """Refuse to certify a repeat-free graph above the explicit edge bound."""
    if not within_refined_bound(g):
        raise InvariantBreach(
            f"repeat-free graph with n={g.n} has {g.m} edges, above {refined_upper_bound(g.n):.2f}"
        )
